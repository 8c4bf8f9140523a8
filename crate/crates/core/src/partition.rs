//! Integer partitions and their hook statistics.
//!
//! A [`Partition`] is stored as its non-increasing list of positive parts.
//! Trailing zeros are never stored, so derived equality and hashing are
//! canonical.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts`: every part positive, order non-increasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index, value: 0 });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing { index: index + 1 });
        }
        Ok(Self { parts })
    }

    /// Builds a partition from signed input, rejecting zero or negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &value) in parts.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositivePart { index, value });
            }
            out.push(value as usize);
        }
        Self::new(out)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Trusted constructor for internal producers that already maintain the
    /// invariant; trailing zeros are stripped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: conjugate_parts(&self.parts),
        }
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        durfee_of(&self.parts)
    }

    /// Durfee size of the partition left after removing the first `c` parts.
    pub fn shifted_durfee(&self, c: usize) -> usize {
        durfee_of(self.parts.get(c..).unwrap_or(&[]))
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = self.durfee();
        FrobeniusCoords {
            arms: (0..d).map(|i| self.parts[i] - i - 1).collect(),
            legs: (0..d).map(|i| conj.parts[i] - i - 1).collect(),
        }
    }

    /// Multiset of the hook lengths divisible by `t` (`t = 1` gives all hooks).
    pub fn hooks(&self, t: usize) -> HookMultiset {
        assert!(t >= 1, "hook modulus must be positive");
        let conj = conjugate_parts(&self.parts);
        let mut counts = BTreeMap::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                let h = row + col - i - j - 1;
                if h % t == 0 {
                    *counts.entry(h).or_insert(0) += 1;
                }
            }
        }
        HookMultiset { counts }
    }

    /// Number of boxes whose hook length is exactly `t`.
    pub fn count_hooks_equal(&self, t: usize) -> usize {
        let conj = conjugate_parts(&self.parts);
        let mut n = 0;
        for (i, &row) in self.parts.iter().enumerate() {
            // Hooks strictly decrease along a row, so at most one box matches.
            if conj[..row]
                .iter()
                .enumerate()
                .any(|(j, &col)| row + col == t + i + j + 1)
            {
                n += 1;
            }
        }
        n
    }

    /// Hook lengths `h_(1,1), …, h_(d,d)` along the main diagonal.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let conj = conjugate_parts(&self.parts);
        (0..self.durfee())
            .map(|i| self.parts[i] + conj[i] - 2 * i - 1)
            .collect()
    }

    /// Part-by-part sum, padding the shorter operand with zeros.
    pub fn componentwise_add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (0..n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }
}

pub(crate) fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    let mut conj = vec![0; width];
    for &p in parts {
        for c in conj.iter_mut().take(p) {
            *c += 1;
        }
    }
    conj
}

fn durfee_of(parts: &[usize]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p > i)
        .count()
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

/// Comma-separated parts; the empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_signed(&parts)
    }
}

/// Frobenius coordinates `(a_1 > … > a_d ≥ 0 ; b_1 > … > b_d ≥ 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius("arm and leg rows differ in length"));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius("rows must be strictly decreasing"));
        }
        Ok(Self { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// `d + Σ (a_k + b_k)`.
    pub fn weight(&self) -> usize {
        self.rank() + self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>()
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.rank();
        let mut parts: Vec<usize> = (0..d).map(|i| self.arms[i] + i + 1).collect();
        // Rows below the Durfee square: column j (1-based) has length b_j + j.
        let depth = self.legs.first().map_or(0, |&b| b + 1);
        for row in d + 1..=depth {
            let len = (0..d).filter(|&j| self.legs[j] + j + 1 >= row).count();
            parts.push(len);
        }
        Partition::from_sorted(parts)
    }
}

/// Multiset of hook lengths, keyed by value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HookMultiset {
    counts: BTreeMap<usize, usize>,
}

impl HookMultiset {
    pub fn from_values<I: IntoIterator<Item = usize>>(values: I) -> Self {
        let mut counts = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn count(&self, h: usize) -> usize {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(value, multiplicity)` pairs in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&h, &m)| (h, m))
    }

    /// Every element, repeated by multiplicity, in increasing order.
    pub fn values(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(h, m)| core::iter::repeat_n(h, m))
            .collect()
    }

    /// `{k·h}` for each element `h`.
    pub fn scaled(&self, k: usize) -> HookMultiset {
        HookMultiset {
            counts: self.counts.iter().map(|(&h, &m)| (h * k, m)).collect(),
        }
    }

    pub fn union(&self, other: &HookMultiset) -> HookMultiset {
        let mut counts = self.counts.clone();
        for (&h, &m) in &other.counts {
            *counts.entry(h).or_insert(0) += m;
        }
        HookMultiset { counts }
    }

    /// Sub-multiset of values divisible by `t`.
    pub fn divisible_by(&self, t: usize) -> HookMultiset {
        HookMultiset {
            counts: self
                .counts
                .iter()
                .filter(|(&h, _)| h % t == 0)
                .map(|(&h, &m)| (h, m))
                .collect(),
        }
    }

    pub fn all_even(&self) -> bool {
        self.counts.values().all(|m| m % 2 == 0)
    }
}

/// Reverse-lexicographic enumeration of the partitions of `n`.
///
/// [`PartitionIter::advance`] exposes the current parts without allocating;
/// the [`Iterator`] impl clones them into owned [`Partition`]s.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        let parts = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            parts,
            started: false,
            done: false,
        }
    }

    /// Moves to the next partition and returns its parts.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        // Rightmost part larger than 1; everything after it is a 1.
        let Some(k) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let ones = self.parts.len() - k - 1;
        let x = self.parts[k] - 1;
        self.parts.truncate(k);
        self.parts.push(x);
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(x);
            self.parts.push(take);
            rest -= take;
        }
        Some(&self.parts)
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().map(|p| Partition {
            parts: p.to_vec(),
        })
    }
}

/// Every partition of `n` exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> PartitionIter {
    PartitionIter::new(n)
}

/// `p(0), …, p(n)` by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(1u8));
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let mut term = p[m - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("partition counts are nonnegative"))
        .collect()
}

/// `|P(n)|`.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("non-empty table")
}

/// Convenience for small `n` where the count fits a machine word.
pub fn partition_count_u64(n: usize) -> Option<u64> {
    partition_count(n).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_errors() {
        let l = p(&[4, 3, 3, 2]);
        assert_eq!(l.weight(), 12);
        assert_eq!(l.len(), 4);
        assert_eq!(Partition::new(vec![]).unwrap().weight(), 0);
        assert_eq!(
            Partition::new(vec![2, 3]),
            Err(Error::NotNonIncreasing { index: 1 })
        );
        assert!(matches!(
            Partition::from_signed(&[3, -1]),
            Err(Error::NonPositivePart { index: 1, value: -1 })
        ));
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let l: Partition = "5,5,2,2".parse().unwrap();
        assert_eq!(l, p(&[5, 5, 2, 2]));
        assert_eq!(l.to_string(), "5,5,2,2");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 3, 2]).conjugate(), p(&[4, 4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6, 4, 4, 1, 1]).conjugate(), p(&[5, 3, 3, 3, 1, 1]));
    }

    #[test]
    fn durfee_sizes() {
        assert_eq!(p(&[4, 3, 3, 2]).durfee(), 3);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(p(&[5, 5, 2, 2]).durfee(), 2);
        assert_eq!(p(&[4, 3, 3, 2]).shifted_durfee(0), 3);
        assert_eq!(p(&[4, 3, 3, 2]).shifted_durfee(1), 2);
        assert_eq!(p(&[4, 3, 3, 2]).shifted_durfee(4), 0);
        assert_eq!(p(&[4, 3, 3, 2]).shifted_durfee(9), 0);
    }

    #[test]
    fn frobenius_rows() {
        let f = p(&[4, 3, 3, 2]).frobenius();
        assert_eq!(f.arms(), &[3, 1, 0]);
        assert_eq!(f.legs(), &[3, 2, 0]);
        assert_eq!(f.to_partition(), p(&[4, 3, 3, 2]));
        assert_eq!(Partition::empty().frobenius().rank(), 0);
        assert_eq!(FrobeniusCoords::default().to_partition(), Partition::empty());
        for tp in 0..6 {
            let hook = FrobeniusCoords::new(vec![tp], vec![tp]).unwrap().to_partition();
            assert_eq!(hook.weight(), 2 * tp + 1);
            assert_eq!(hook.len(), tp + 1);
            assert_eq!(hook.part(0), tp + 1);
        }
        assert!(FrobeniusCoords::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![1], vec![2, 0]).is_err());
    }

    #[test]
    fn hook_multisets() {
        let l = p(&[4, 3, 3, 2]);
        assert_eq!(
            l.hooks(1),
            HookMultiset::from_values([2, 1, 4, 3, 1, 5, 4, 2, 7, 6, 4, 1])
        );
        assert_eq!(l.hooks(3), HookMultiset::from_values([3, 6]));
        assert!(Partition::empty().hooks(4).is_empty());
        assert_eq!(l.count_hooks_equal(3), 1);
        assert_eq!(l.count_hooks_equal(1), 3);
        assert_eq!(l.count_hooks_equal(8), 0);
    }

    #[test]
    fn diagonal_and_addition() {
        assert_eq!(p(&[4, 3, 3, 2]).diagonal_hooks(), vec![7, 4, 1]);
        assert!(Partition::empty().diagonal_hooks().is_empty());
        assert_eq!(p(&[2, 1]).diagonal_hooks(), vec![3]);
        assert_eq!(p(&[1]).componentwise_add(&p(&[1])), p(&[2]));
        assert_eq!(p(&[3, 1]).componentwise_add(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[2]).componentwise_add(&p(&[1, 1])), p(&[3, 1]));
    }

    /// Independent oracle: partitions of `n` with parts at most `max`.
    fn brute(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in brute(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn enumeration_order_and_counts() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = enumerate_partitions(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        for n in 0..=18 {
            let got: Vec<Vec<usize>> = enumerate_partitions(n).map(|p| p.parts().to_vec()).collect();
            assert_eq!(got, brute(n, n), "n = {n}");
        }
        assert_eq!(enumerate_partitions(10).count(), 42);
    }

    #[test]
    fn counts_match_enumeration() {
        let counts = partition_counts(40);
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(c.to_usize().unwrap(), enumerate_partitions(n).count(), "n = {n}");
        }
        assert_eq!(partition_count(0), BigUint::from(1u8));
        assert_eq!(partition_count(4), BigUint::from(5u8));
        assert_eq!(partition_count(10), BigUint::from(42u8));
        // p(200) = 3972999029388.
        assert_eq!(partition_count_u64(200), Some(3_972_999_029_388));
        assert_eq!(
            partition_count(400).to_string(),
            "6727090051741041926"
        );
    }
}
