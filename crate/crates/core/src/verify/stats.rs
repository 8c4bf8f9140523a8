use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::classes::{enumerate_class_up_to, ClassSpec};
use crate::error::Result;
use crate::partition::{enumerate_partitions, Partition};
use crate::series::{Coefficient, Ring, TruncatedSeries};

use super::weights::{HookWeight, Marks};

/// Members grouped by weight and `H_t` multiset, with their multiplicity.
#[derive(Default)]
struct Tally {
    groups: BTreeMap<(usize, Vec<(usize, usize)>), u64>,
}

impl Tally {
    fn add(&mut self, p: &Partition, t: usize, with_hooks: bool) {
        let hooks = if with_hooks { p.hooks(t).iter().collect() } else { Vec::new() };
        *self.groups.entry((p.weight(), hooks)).or_insert(0) += 1;
    }

    fn series(&self, t: usize, order: usize, marks: &Marks) -> Result<TruncatedSeries> {
        let ring = marks.ring();
        let mut coeffs = alloc::vec![Coefficient::zero(ring); order + 1];
        for ((n, hooks), &count) in &self.groups {
            let w = marks.evaluate(t, hooks)?;
            let w = w.scale(&BigRational::from_integer(count.into()));
            coeffs[*n] = coeffs[*n].add(&w)?;
        }
        TruncatedSeries::from_coefficients(ring, order, &coeffs)
    }
}

/// `Σ_λ q^{|λ|}·marks(λ)` over the class members of weight at most `order`.
pub fn class_statistic_series(spec: ClassSpec, t: usize, order: usize, marks: &Marks) -> Result<TruncatedSeries> {
    let with_hooks = marks.needs_hooks();
    let mut tally = Tally::default();
    if spec == ClassSpec::All {
        for n in 0..=order {
            let mut it = enumerate_partitions(n);
            while let Some(parts) = it.advance() {
                tally.add(&Partition::from_sorted(parts.to_vec()), t, with_hooks);
            }
        }
    } else {
        for p in enumerate_class_up_to(spec, order).iter().flatten() {
            tally.add(p, t, with_hooks);
        }
    }
    tally.series(t, order, marks)
}

/// Same as [`class_statistic_series`] over an explicit member list.
pub fn statistic_series_over<'a, I>(members: I, t: usize, order: usize, marks: &Marks) -> Result<TruncatedSeries>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let mut tally = Tally::default();
    for p in members.into_iter().filter(|p| p.weight() <= order) {
        tally.add(p, t, marks.needs_hooks());
    }
    tally.series(t, order, marks)
}

/// The pair `f_t(q) = Σ q^{|λ|} ∏_{h∈H(λ)} ρ1(th)²` and
/// `g_t(q) = Σ q^{|λ|} ∏_{h∈H(λ)} ρ1(th)² Σ_{h∈H(λ)} ρ2(th)`, summed over all
/// partitions of weight at most `n_enum` and returned at `order`. A missing
/// `ρ1` is the constant `1`; a missing `ρ2` leaves `g_t = 0`.
pub fn ft_gt(
    rho1: Option<&HookWeight>,
    rho2: Option<&HookWeight>,
    t: usize,
    n_enum: usize,
    order: usize,
    ring: Ring,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let n_enum = n_enum.min(order);
    let mut groups: BTreeMap<(usize, Vec<(usize, usize)>), u64> = BTreeMap::new();
    for n in 0..=n_enum {
        let mut it = enumerate_partitions(n);
        while let Some(parts) = it.advance() {
            let hooks = Partition::from_sorted(parts.to_vec()).hooks(1).iter().collect();
            *groups.entry((n, hooks)).or_insert(0) += 1;
        }
    }
    let mut f = alloc::vec![Coefficient::zero(ring); order + 1];
    let mut g = f.clone();
    for ((n, hooks), &count) in &groups {
        let count = BigRational::from_integer(count.into());
        let mut prod = Coefficient::one(ring);
        if let Some(w) = rho1 {
            for &(h, m) in hooks {
                prod = prod.mul(&w.eval(t * h, ring)?.pow(2 * m as u32))?;
            }
        }
        let prod = prod.scale(&count);
        f[*n] = f[*n].add(&prod)?;
        if let Some(w) = rho2 {
            let mut s = Coefficient::zero(ring);
            for &(h, m) in hooks {
                s = s.add(&w.eval(t * h, ring)?.scale(&BigRational::from_integer(m.into())))?;
            }
            g[*n] = g[*n].add(&prod.mul(&s)?)?;
        }
    }
    Ok((
        TruncatedSeries::from_coefficients(ring, order, &f)?,
        TruncatedSeries::from_coefficients(ring, order, &g)?,
    ))
}

/// Members of `BG_{1,t}` by weight, read as doubled-distinct partitions
/// with no diagonal hook divisible by `t`.
pub(crate) fn dd_diagonal_levels(t: usize, n_max: usize) -> Vec<Vec<Partition>> {
    enumerate_class_up_to(ClassSpec::ZAsymmetric(1), n_max)
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .filter(|p| p.diagonal_hooks().iter().all(|h| h % t != 0))
                .collect()
        })
        .collect()
}

/// Number of hooks of length exactly `t`, read from the boundary word: one
/// per pair `c_i = 1`, `c_{i+t} = 0`.
pub fn hooks_equal_in_parts(parts: &[usize], t: usize) -> usize {
    let len = parts.len();
    let width = parts.first().copied().unwrap_or(0);
    let span = len + width;
    if span <= 128 {
        // Bit k is window position k; zeros sit at λ_j - j + len.
        let mut zeros: u128 = 0;
        for (j, &p) in parts.iter().enumerate() {
            zeros |= 1u128 << (p + len - j - 1);
        }
        let all = if span == 128 { u128::MAX } else { (1u128 << span) - 1 };
        let ones = all & !zeros;
        if t >= 128 {
            return 0;
        }
        (ones & (zeros >> t)).count_ones() as usize
    } else {
        Partition::from_sorted(parts.to_vec()).count_hooks_equal(t)
    }
}
