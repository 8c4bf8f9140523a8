use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::classes::{enumerate_class_up_to, ClassSpec};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partition_counts, Partition};

use super::report::{CheckParams, CheckReport, ParamValue};
use super::stats::{dd_diagonal_levels, hooks_equal_in_parts};

pub const CONGRUENCES: &[&str] = &[
    "congP",
    "congP-parts",
    "sc-cong-even",
    "sc-cong-odd",
    "bt-star-cong",
    "z-cong",
    "dd-cong",
];

pub const DEFAULT_N_MAX: usize = 60;

/// Brute-force statistic and closed-form count for `n = 0..=n_max`, and the
/// modulus the statistic should vanish under (`0` means identically zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceTable {
    pub brute: Vec<u128>,
    pub closed: Vec<u128>,
    pub modulus: u128,
}

fn counts(levels: &[Vec<Partition>]) -> Vec<u128> {
    levels.iter().map(|l| l.len() as u128).collect()
}

/// `Σ_{j ≥ 1} c(n - j·step)`.
fn tail_sum(c: &[u128], n: usize, step: usize) -> u128 {
    (1..=n / step).map(|j| c[n - j * step]).sum()
}

fn hooks_equal_totals(levels: &[Vec<Partition>], t: usize) -> Vec<u128> {
    levels
        .iter()
        .map(|l| l.iter().map(|p| hooks_equal_in_parts(p.parts(), t) as u128).sum())
        .collect()
}

/// Streams all partitions of each `n ≤ n_max`, returning the total number of
/// hooks of length `t` and the total number of parts equal to `t`.
fn all_partition_totals(t: usize, n_max: usize) -> (Vec<u128>, Vec<u128>) {
    let mut hooks = vec![0u128; n_max + 1];
    let mut parts_t = vec![0u128; n_max + 1];
    for n in 0..=n_max {
        let mut it = enumerate_partitions(n);
        while let Some(parts) = it.advance() {
            hooks[n] += hooks_equal_in_parts(parts, t) as u128;
            parts_t[n] += parts.iter().filter(|&&p| p == t).count() as u128;
        }
    }
    (hooks, parts_t)
}

fn need_parity(id: &str, t: usize, even: bool) -> Result<()> {
    if t.is_multiple_of(2) != even {
        let kind = if even { "even" } else { "odd" };
        return Err(Error::InvalidParams(format!("{id} needs {kind} t (got {t})")));
    }
    Ok(())
}

pub fn congruence_table(id: &str, params: &CheckParams) -> Result<CongruenceTable> {
    let n_max = params.n_max.unwrap_or(DEFAULT_N_MAX);
    let table = |brute: Vec<u128>, closed: Vec<u128>, modulus: usize| CongruenceTable {
        brute,
        closed,
        modulus: modulus as u128,
    };
    match id {
        "congP" => {
            let t = params.need_t(1)?;
            let p: Vec<u128> = partition_counts(n_max)
                .iter()
                .map(|c| c.to_u128().expect("partition count fits in u128"))
                .collect();
            let closed = (0..=n_max).map(|n| t as u128 * tail_sum(&p, n, t)).collect();
            Ok(table(all_partition_totals(t, n_max).0, closed, t))
        }
        "congP-parts" => {
            let t = params.need_t(1)?;
            let (hooks, parts_t) = all_partition_totals(t, n_max);
            let closed = parts_t.iter().map(|c| t as u128 * c).collect();
            Ok(table(hooks, closed, t))
        }
        "sc-cong-even" | "sc-cong-odd" => {
            let even = id == "sc-cong-even";
            let t = params.need_t(if even { 2 } else { 3 })?;
            need_parity(id, t, even)?;
            let spec = if even { ClassSpec::SelfConjugate } else { ClassSpec::BGt(t) };
            let factor = if even { t } else { t - 1 };
            let levels = enumerate_class_up_to(spec, n_max);
            let c = counts(&levels);
            let closed = (0..=n_max).map(|n| factor as u128 * tail_sum(&c, n, 2 * t)).collect();
            Ok(table(hooks_equal_totals(&levels, t), closed, factor))
        }
        "bt-star-cong" => {
            let t = params.need_t(2)?;
            let (spec, factor) = if t % 2 == 0 {
                (ClassSpec::SelfConjugate, t)
            } else {
                (ClassSpec::BGt(t), t - 1)
            };
            let levels = enumerate_class_up_to(spec, n_max);
            let brute = levels
                .iter()
                .map(|l| l.iter().map(|p| p.hooks(t).total() as u128).sum())
                .collect();
            let c = counts(&levels);
            let closed = (0..=n_max)
                .map(|n| {
                    let inner: u128 = (1..=n / (2 * t))
                        .map(|k| k as u128 * tail_sum(&c, n, 2 * t * k))
                        .sum();
                    factor as u128 * inner
                })
                .collect();
            Ok(table(brute, closed, factor))
        }
        "z-cong" | "dd-cong" => {
            let t = params.need_t(2)?;
            let z = if id == "dd-cong" { 1 } else { params.need_bg_z(t)? };
            let levels = if id == "dd-cong" {
                dd_diagonal_levels(t, n_max)
            } else {
                enumerate_class_up_to(ClassSpec::BGzt { z, t }, n_max)
            };
            let factor = 2 * ((t - z) / 2);
            let c = counts(&levels);
            let closed = (0..=n_max).map(|n| factor as u128 * tail_sum(&c, n, 2 * t)).collect();
            Ok(table(hooks_equal_totals(&levels, t), closed, factor))
        }
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Checks, for every `n ≤ n_max`, that the brute-force statistic equals the
/// closed form and vanishes modulo the stated modulus.
pub fn run_congruence(id: &str, params: &CheckParams) -> Result<CheckReport> {
    if !CONGRUENCES.contains(&id) {
        return Err(Error::UnknownCheck(id.to_string()));
    }
    let table = congruence_table(id, params)?;
    let n_max = table.brute.len() - 1;
    let mut rp = Vec::new();
    if let Some(t) = params.t {
        rp.push(("t".to_string(), ParamValue::Int(t as i64)));
    }
    if id == "z-cong" {
        if let Some(z) = params.z {
            rp.push(("z".to_string(), ParamValue::Int(z)));
        }
    }
    rp.push(("n_max".to_string(), ParamValue::Int(n_max as i64)));
    let mut report = CheckReport::new(id, rp, n_max);
    if table.modulus == 0 {
        report.notes.push("degenerate case: the statistic is identically zero".into());
    } else {
        report.notes.push(format!("modulus {}", table.modulus));
    }
    for n in 0..=n_max {
        let (b, c) = (table.brute[n], table.closed[n]);
        if b != c {
            report.fail(n, b, c);
            break;
        }
        let ok = if table.modulus == 0 { b == 0 } else { b % table.modulus == 0 };
        if !ok {
            report.fail(n, b, format!("0 mod {}", table.modulus));
            break;
        }
    }
    Ok(report)
}
