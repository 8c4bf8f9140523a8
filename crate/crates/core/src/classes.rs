//! Partition classes: self-conjugate, `z`-asymmetric, `BG_t` and `BG_{z,t}`.
//!
//! A partition is `z`-asymmetric (`z ≥ 0`) when its Frobenius coordinates
//! read `(b_1 + z, …, b_d + z ; b_1, …, b_d)`; negative `z` is the
//! conjugate family. `BG_{z,t}` (`t ≥ 2`, `0 ≤ z < t`) keeps the members of
//! `P_z` whose legs satisfy `t ∤ b_j + k` for `1 ≤ k ≤ z` and whose diagonal
//! hooks `2b_j + z + 1` are not odd multiples of `t`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::littlewood::{decompose, is_t_core, kappa, CoreVector, Decomposition};
use crate::partition::{enumerate_partitions, FrobeniusCoords, Partition};
use crate::word::BoundaryWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    All,
    SelfConjugate,
    ZAsymmetric(i64),
    BGt(usize),
    BGzt { z: usize, t: usize },
}

impl ClassSpec {
    pub fn bg_zt(z: usize, t: usize) -> Result<Self> {
        if t < 2 || z >= t {
            return Err(Error::InvalidClass(format!(
                "bgzt needs t ≥ 2 and 0 ≤ z ≤ t-1 (got z={z}, t={t})"
            )));
        }
        Ok(ClassSpec::BGzt { z, t })
    }

    pub fn bg_t(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidClass(format!("bgt needs t ≥ 2 (got {t})")));
        }
        Ok(ClassSpec::BGt(t))
    }

    pub fn contains(&self, p: &Partition) -> bool {
        match *self {
            ClassSpec::All => true,
            ClassSpec::SelfConjugate => is_self_conjugate(p),
            ClassSpec::ZAsymmetric(z) => is_z_asymmetric(p, z),
            ClassSpec::BGt(t) => in_bg_t(p, t),
            ClassSpec::BGzt { z, t } => in_bg_zt(p, z, t),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::All => f.write_str("all"),
            ClassSpec::SelfConjugate => f.write_str("sc"),
            ClassSpec::ZAsymmetric(z) => write!(f, "pz:{z}"),
            ClassSpec::BGt(t) => write!(f, "bgt:{t}"),
            ClassSpec::BGzt { z, t } => write!(f, "bgzt:{z},{t}"),
        }
    }
}

/// Parses `all`, `sc`, `pz:<z>`, `bgt:<t>`, `bgzt:<z>,<t>`.
impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidClass(s.to_string());
        let s = s.trim();
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        let int = |a: &str| a.trim().parse::<i64>().map_err(|_| bad());
        let nat = |a: &str| a.trim().parse::<usize>().map_err(|_| bad());
        match (kind.to_ascii_lowercase().as_str(), arg) {
            ("all", None) => Ok(ClassSpec::All),
            ("sc", None) => Ok(ClassSpec::SelfConjugate),
            ("pz", Some(a)) => Ok(ClassSpec::ZAsymmetric(int(a)?)),
            ("bgt", Some(a)) => ClassSpec::bg_t(nat(a)?),
            ("bgzt", Some(a)) => {
                let (z, t) = a.split_once(',').ok_or_else(bad)?;
                ClassSpec::bg_zt(nat(z)?, nat(t)?)
            }
            _ => Err(bad()),
        }
    }
}

pub fn is_self_conjugate(p: &Partition) -> bool {
    *p == p.conjugate()
}

pub fn is_z_asymmetric(p: &Partition, z: i64) -> bool {
    if z < 0 {
        return is_z_asymmetric(&p.conjugate(), -z);
    }
    let f = p.frobenius();
    f.arms()
        .iter()
        .zip(f.legs())
        .all(|(&a, &b)| a as i64 == b as i64 + z)
}

/// Word characterization of `P_z`: for `z ≥ 0`, `c_0 = … = c_{z-1} = 1` and
/// `c_i = 1 - c_{z-i-1}` for `i ≥ z`; for `z < 0` the mirrored conditions.
pub fn is_z_asymmetric_word(w: &BoundaryWord, z: i64) -> bool {
    let z_i = z.unsigned_abs() as isize;
    let reach = w.end().max(-w.offset()) + z_i + 1;
    if z >= 0 {
        (0..z_i).all(|i| w.letter(i)) && (z_i..=reach).all(|i| w.letter(i) != w.letter(z_i - i - 1))
    } else {
        (1..=z_i).all(|i| !w.letter(-i))
            && (-reach..=-z_i - 1).all(|i| w.letter(i) != w.letter(-z_i - i - 1))
    }
}

/// Self-conjugate with no diagonal hook divisible by `t`.
pub fn in_bg_t(p: &Partition, t: usize) -> bool {
    assert!(t >= 1, "modulus must be positive");
    is_self_conjugate(p) && p.diagonal_hooks().iter().all(|h| h % t != 0)
}

/// Membership in `BG_{z,t}` from the Frobenius divisibility conditions.
pub fn in_bg_zt(p: &Partition, z: usize, t: usize) -> bool {
    assert!(t >= 1, "modulus must be positive");
    if !is_z_asymmetric(p, z as i64) {
        return false;
    }
    p.frobenius().legs().iter().all(|&b| {
        let first = (1..=z).all(|k| (b + k) % t != 0);
        let h = 2 * b + z + 1;
        let second = !(h.is_multiple_of(t) && (h / t) % 2 == 1);
        first && second
    })
}

/// Membership in `C_{z;t}`: `n_r + n_{z-r-1} = 0` for `r < z` and
/// `n_r + n_{t+z-r-1} = 0` for `z ≤ r < t`.
pub fn in_c_zt(v: &CoreVector, z: usize) -> bool {
    let n = v.entries();
    let t = n.len();
    (0..z).all(|r| n[r] + n[z - r - 1] == 0) && (z..t).all(|r| n[r] + n[t + z - r - 1] == 0)
}

/// Membership in `BG_{z,t}` read from the Littlewood decomposition: core
/// vector in `C_{z;t}`, `ν^(0..z)` empty, and `ν^((t+z-1)/2)` empty when that
/// index is an integer. Rejects partitions outside `P_z`.
pub fn in_bg_zt_via_quotient(p: &Partition, z: usize, t: usize) -> Result<bool> {
    if !is_z_asymmetric(p, z as i64) {
        return Err(Error::NotZAsymmetric { z: z as i64 });
    }
    let d = decompose(p, t);
    let v = kappa(d.core(), t)?;
    let nu = d.quotient();
    let middle_empty = (t + z - 1) % 2 == 1 || nu[(t + z - 1) / 2].is_empty();
    Ok(in_c_zt(&v, z) && nu[..z].iter().all(Partition::is_empty) && middle_empty)
}

/// Outcome of checking the structure of `Φ_t(λ)` for `λ ∈ P_z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbionCheck {
    pub holds: bool,
    /// Indices `r < z` with `n_r < 0`, for which no structure is asserted.
    pub not_applicable: Vec<usize>,
    /// The witnesses `μ^(r)` found for `r < z`, `n_r ≥ 0`.
    pub mu: Vec<(usize, Partition)>,
}

/// Checks that `κ_t(core) ∈ C_{z;t}`, that `ν^(r) = (ν^(t+z-r-1))'` for
/// `z ≤ r < t`, and that for `r < z` with `n_r ≥ 0` some `μ` satisfies
/// `ν^(r) = μ + (1^{n_r + d_{n_r}(μ)})` and
/// `ν^(z-r-1) = μ' + (1^{d_{n_r}(μ)})`.
pub fn albion_structure_check(p: &Partition, z: usize, t: usize) -> Result<AlbionCheck> {
    if t < 2 || z >= t {
        return Err(Error::InvalidParams(format!("need t ≥ 2, 0 ≤ z < t (z={z}, t={t})")));
    }
    if !is_z_asymmetric(p, z as i64) {
        return Err(Error::NotZAsymmetric { z: z as i64 });
    }
    let d = decompose(p, t);
    let v = kappa(d.core(), t)?;
    let nu = d.quotient();
    let mut holds = in_c_zt(&v, z);
    holds &= (z..t).all(|r| nu[r] == nu[t + z - r - 1].conjugate());
    let mut not_applicable = Vec::new();
    let mut mu = Vec::new();
    for r in 0..z {
        let n_r = v.entries()[r];
        if n_r < 0 {
            not_applicable.push(r);
            continue;
        }
        match find_mu(&nu[r], &nu[z - r - 1], n_r as usize) {
            Some(m) => mu.push((r, m)),
            None => holds = false,
        }
    }
    Ok(AlbionCheck {
        holds,
        not_applicable,
        mu,
    })
}

/// Peels a unit column of length `L` off `upper`, and accepts the remainder
/// `μ` when `L = c + d_c(μ)` and `lower = μ' + (1^{d_c(μ)})`.
fn find_mu(upper: &Partition, lower: &Partition, c: usize) -> Option<Partition> {
    (c..=upper.len()).find_map(|len| {
        let peeled: Vec<usize> = (0..upper.len())
            .map(|i| if i < len { upper.part(i) - 1 } else { upper.part(i) })
            .collect();
        let mut trimmed = peeled.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        let mu = Partition::new(trimmed).ok()?;
        let e = mu.shifted_durfee(c);
        let column = |k: usize| Partition::new(vec![1; k]).expect("unit column");
        let ok = len == c + e
            && mu.componentwise_add(&column(len)) == *upper
            && mu.conjugate().componentwise_add(&column(e)) == *lower;
        ok.then_some(mu)
    })
}

/// Members of `P_z` of weight `n`, generated from strictly decreasing legs:
/// diagonal hooks `2b + |z| + 1` are distinct and sum to `n`.
fn z_asymmetric_of_weight(z: i64, n: usize) -> Vec<Partition> {
    let shift = z.unsigned_abs() as usize;
    let mut out = Vec::new();
    let mut legs = Vec::new();
    fn rec(rem: usize, max_leg: Option<usize>, shift: usize, z: i64, legs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            let arms: Vec<usize> = legs.iter().map(|&b| b + shift).collect();
            let f = if z >= 0 {
                FrobeniusCoords::new(arms, legs.clone())
            } else {
                FrobeniusCoords::new(legs.clone(), arms)
            };
            out.push(f.expect("strictly decreasing rows").to_partition());
            return;
        }
        let top = match max_leg {
            Some(0) => return,
            Some(m) => m - 1,
            None => rem,
        };
        for b in (0..=top).rev() {
            let h = 2 * b + shift + 1;
            if h <= rem {
                legs.push(b);
                rec(rem - h, Some(b), shift, z, legs, out);
                legs.pop();
            }
        }
    }
    rec(n, None, shift, z, &mut legs, &mut out);
    out
}

fn sort_rev_lex(v: &mut [Partition]) {
    v.sort_by(|a, b| b.cmp(a));
}

/// All `P_z` `t`-cores of weight at most `n_max`.
pub fn z_asymmetric_t_cores(z: i64, t: usize, n_max: usize) -> Vec<Partition> {
    (0..=n_max)
        .flat_map(|n| z_asymmetric_of_weight(z, n))
        .filter(|p| is_t_core(p, t))
        .collect()
}

/// Members of `BG_{z,t}` of weight `n`, assembled from a `P_z` `t`-core and
/// `⌊(t-z)/2⌋` free quotient components `ν^(z), …`, their conjugate
/// partners, and empty components elsewhere.
fn bg_zt_of_weight(z: usize, t: usize, n: usize, cores: &[Partition]) -> Vec<Partition> {
    let free = (t - z) / 2;
    let mut out = Vec::new();
    for core in cores.iter().filter(|c| c.weight() <= n) {
        let rest = n - core.weight();
        if !rest.is_multiple_of(2 * t) {
            continue;
        }
        for comps in tuples_of_weight(free, rest / (2 * t)) {
            let mut quotient = vec![Partition::empty(); t];
            for (i, nu) in comps.into_iter().enumerate() {
                let r = z + i;
                quotient[t + z - r - 1] = nu.conjugate();
                quotient[r] = nu;
            }
            let d = Decomposition::new(core.clone(), quotient).expect("core is a t-core");
            out.push(d.recompose());
        }
    }
    out
}

/// Ordered `k`-tuples of partitions with total weight `w`.
fn tuples_of_weight(k: usize, w: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if w == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=w {
        let heads: Vec<Partition> = enumerate_partitions(first).collect();
        for tail in tuples_of_weight(k - 1, w - first) {
            for h in &heads {
                let mut v = Vec::with_capacity(k);
                v.push(h.clone());
                v.extend(tail.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

/// Class members of weight `n`, each once, in reverse-lexicographic order.
pub fn enumerate_class(spec: ClassSpec, n: usize) -> Vec<Partition> {
    enumerate_class_up_to(spec, n).pop().unwrap_or_default()
}

/// `enumerate_class(spec, n)` for every `n ≤ n_max`, sharing setup work.
pub fn enumerate_class_up_to(spec: ClassSpec, n_max: usize) -> Vec<Vec<Partition>> {
    let mut levels: Vec<Vec<Partition>> = match spec {
        ClassSpec::All => (0..=n_max).map(|n| enumerate_partitions(n).collect()).collect(),
        ClassSpec::SelfConjugate => (0..=n_max).map(|n| z_asymmetric_of_weight(0, n)).collect(),
        ClassSpec::ZAsymmetric(z) => (0..=n_max).map(|n| z_asymmetric_of_weight(z, n)).collect(),
        ClassSpec::BGt(t) => (0..=n_max)
            .map(|n| {
                z_asymmetric_of_weight(0, n)
                    .into_iter()
                    .filter(|p| in_bg_t(p, t))
                    .collect()
            })
            .collect(),
        ClassSpec::BGzt { z, t } => {
            let cores = z_asymmetric_t_cores(z as i64, t, n_max);
            (0..=n_max).map(|n| bg_zt_of_weight(z, t, n, &cores)).collect()
        }
    };
    for level in &mut levels {
        sort_rev_lex(level);
    }
    levels
}

/// Filter oracle: all partitions of `n` satisfying the class predicate.
pub fn enumerate_class_by_filter(spec: ClassSpec, n: usize) -> Vec<Partition> {
    enumerate_partitions(n).filter(|p| spec.contains(p)).collect()
}
