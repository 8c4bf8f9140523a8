use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::classes::{enumerate_class, enumerate_class_up_to, in_bg_zt, is_z_asymmetric, ClassSpec};
use crate::error::{Error, Result};
use crate::littlewood::{decompose, is_t_core};
use crate::partition::{enumerate_partitions, FrobeniusCoords, HookMultiset, Partition};

use super::report::{CheckReport, ParamValue};

/// Counts hooks of length `t` over `P_z(n)` for the weight `n` at which the
/// congruence for the whole of `P_z` is supposed to fail, and checks that a
/// single hook-shaped partition carries exactly one such hook and lies
/// outside `BG_{z,t}`.
///
/// When `t - z` is odd, `n = t` and the witness is `(m + z; m)` with
/// `t = 2m + z + 1`. When `z > 0` and `t - z` is even, `n = 2t - z + 1` and
/// the witness is `(t; t - z)`.
pub fn remark_counterexample(z: i64, t: usize) -> Result<CheckReport> {
    if t < 2 || z < 0 || z as usize >= t {
        return Err(Error::InvalidParams(format!("need t ≥ 2 and 0 ≤ z ≤ t-1 (z={z}, t={t})")));
    }
    let zu = z as usize;
    let (n, witness) = if (t - zu) % 2 == 1 {
        let m = (t - zu - 1) / 2;
        (t, FrobeniusCoords::new(vec![m + zu], vec![m])?.to_partition())
    } else if zu > 0 {
        (2 * t - zu + 1, FrobeniusCoords::new(vec![t], vec![t - zu])?.to_partition())
    } else {
        return Err(Error::InvalidParams(format!(
            "z = 0 with even t has no counterexample (t={t})"
        )));
    };
    let params = vec![
        ("z".to_string(), ParamValue::Int(z)),
        ("t".to_string(), ParamValue::Int(t as i64)),
    ];
    let mut report = CheckReport::new("remark-counterexample", params, n);
    let mut total = 0;
    let mut carriers: Vec<(Partition, usize)> = Vec::new();
    for p in enumerate_class(ClassSpec::ZAsymmetric(z), n) {
        let c = p.count_hooks_equal(t);
        if c > 0 {
            total += c;
            carriers.push((p, c));
        }
    }
    let listed: Vec<String> = carriers.iter().map(|(p, c)| format!("({p})×{c}")).collect();
    report.notes.push(format!("hooks of length {t} over P_{z}({n}): {total}"));
    report.notes.push(format!("carriers: {}", listed.join(" ")));
    report.notes.push(format!("predicted witness: ({witness})"));
    let modulus = 2 * ((t - zu) / 2);
    if modulus > 0 && total % modulus != 0 {
        report.notes.push(format!("{total} is not divisible by {modulus}: the congruence fails on P_{z}"));
    }
    if in_bg_zt(&witness, zu, t) {
        report.notes.push("witness unexpectedly lies in BG_{z,t}".into());
        report.fail(n, format!("({witness}) in BG"), "not in BG");
    }
    let unique = total == 1 && carriers.len() == 1 && carriers[0].0 == witness;
    if !unique {
        report.fail(n, total, 1);
    }
    Ok(report)
}

/// `H(ν^(0)) ∪ … ∪ H(ν^(t-1))`, scaled by `t`.
fn scaled_quotient_hooks(quotient: &[Partition], t: usize) -> HookMultiset {
    quotient
        .iter()
        .fold(HookMultiset::default(), |acc, nu| acc.union(&nu.hooks(1)))
        .scaled(t)
}

/// Exhaustively checks the Littlewood decomposition laws on every partition
/// of weight `≤ n_max` (core is a `t`-core, weight law, `H_t` law, inverse)
/// and the `BG_{z,t}` laws on every member of `BG_{z,t}` in range.
pub fn littlewood_property_scan(n_max: usize, t_range: core::ops::RangeInclusive<usize>) -> Result<CheckReport> {
    let (t_lo, t_hi) = (*t_range.start(), *t_range.end());
    if t_lo < 1 {
        return Err(Error::InvalidModulus);
    }
    let params = vec![
        ("n_max".to_string(), ParamValue::Int(n_max as i64)),
        ("t_range".to_string(), ParamValue::Text(format!("{t_lo}..{t_hi}"))),
    ];
    let mut report = CheckReport::new("littlewood-scan", params, n_max);
    let mut checked = 0usize;
    'outer: for n in 0..=n_max {
        for p in enumerate_partitions(n) {
            for t in t_range.clone() {
                let d = decompose(&p, t);
                let law = if !is_t_core(d.core(), t) {
                    Some("P1")
                } else if d.core().weight() + t * d.quotient_weight() != n {
                    Some("P2")
                } else if p.hooks(t) != scaled_quotient_hooks(d.quotient(), t) {
                    Some("P3")
                } else if d.recompose() != p {
                    Some("inverse")
                } else {
                    None
                };
                checked += 1;
                if let Some(law) = law {
                    report.fail(n, format!("({p}) t={t}"), law);
                    break 'outer;
                }
            }
        }
    }
    let mut bg_checked = 0usize;
    'bg: for t in t_range.clone().filter(|&t| t >= 2) {
        for z in 0..t {
            let levels = enumerate_class_up_to(ClassSpec::BGzt { z, t }, n_max);
            for (n, p) in levels.iter().enumerate().flat_map(|(n, l)| l.iter().map(move |p| (n, p))) {
                let d = decompose(p, t);
                let nu = d.quotient();
                let free: usize = (z..=(t + z).saturating_sub(2) / 2).map(|r| nu[r].weight()).sum();
                let law = if !is_z_asymmetric(d.core(), z as i64) || !is_t_core(d.core(), t) {
                    Some("BG1")
                } else if (z..t).any(|r| nu[r] != nu[t + z - r - 1].conjugate()) {
                    Some("BG2")
                } else if nu[..z].iter().any(|x| !x.is_empty())
                    || ((t + z - 1) % 2 == 0 && !nu[(t + z - 1) / 2].is_empty())
                {
                    Some("BG2'")
                } else if d.core().weight() + 2 * t * free != n {
                    Some("BG3")
                } else if p.hooks(t) != scaled_quotient_hooks(nu, t) {
                    Some("BG4")
                } else {
                    None
                };
                bg_checked += 1;
                if let Some(law) = law {
                    report.fail(n, format!("({p}) z={z} t={t}"), law);
                    break 'bg;
                }
            }
        }
    }
    report.notes.push(format!("{checked} (partition, t) pairs and {bg_checked} BG members checked"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_examples() {
        let r = remark_counterexample(0, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        // t - z odd: the witness is (2; 1) = (3,1) at weight t.
        let r = remark_counterexample(1, 4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.notes.iter().any(|s| s.contains("carriers: (3,1)×1")), "{r:?}");
        let r = remark_counterexample(1, 2).unwrap();
        assert_eq!(r.max_order_checked, 2);
        assert!(r.passed(), "{r:?}");
        assert!(remark_counterexample(0, 4).is_err());
        assert!(remark_counterexample(5, 5).is_err());
    }

    #[test]
    fn uniqueness_fails_for_doubled_distinct_odd_t() {
        // P_1(6) holds (4,1,1) with one 3-hook and (3,3) with two.
        // In general P_1(2t) carries t hooks of length t for odd t.
        let r = remark_counterexample(1, 3).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witness.as_ref().unwrap().lhs, "3");
        for t in [5, 7, 9] {
            let r = remark_counterexample(1, t).unwrap();
            assert_eq!(r.witness.unwrap().lhs, t.to_string());
        }
        for (z, t) in [(2, 4), (3, 7), (2, 8), (7, 9)] {
            assert!(remark_counterexample(z, t).unwrap().passed());
        }
    }

    #[test]
    fn small_littlewood_scan() {
        let r = littlewood_property_scan(14, 1..=5).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
