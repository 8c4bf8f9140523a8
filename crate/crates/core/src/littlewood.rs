//! Littlewood decomposition: `λ ↦ (t-core, t-quotient)`.
//!
//! The `k`-th quotient component is read off the sub-word of letters at
//! positions `≡ k (mod t)`. Sorting every sub-word into `…000|111…` form
//! gives the word of the core; the position of the first `1` in the sorted
//! `k`-th sub-word is the `k`-th entry of the core vector.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::word::BoundaryWord;

/// A `t`-core together with an ordered `t`-tuple of quotient partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    core: Partition,
    quotient: Vec<Partition>,
}

impl Decomposition {
    /// Validates that `core` is a `t`-core where `t = quotient.len()`.
    pub fn new(core: Partition, quotient: Vec<Partition>) -> Result<Self> {
        let t = quotient.len();
        if t == 0 {
            return Err(Error::InvalidModulus);
        }
        if !is_t_core(&core, t) {
            return Err(Error::NotACore { t });
        }
        Ok(Self { core, quotient })
    }

    pub fn modulus(&self) -> usize {
        self.quotient.len()
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn quotient(&self) -> &[Partition] {
        &self.quotient
    }

    pub fn quotient_weight(&self) -> usize {
        self.quotient.iter().map(Partition::weight).sum()
    }

    pub fn recompose(&self) -> Partition {
        let t = self.modulus();
        let charges = kappa(&self.core, t).expect("validated core").entries;
        let words: Vec<BoundaryWord> = self.quotient.iter().map(BoundaryWord::encode).collect();
        // Sub-word k is the word of ν^(k) shifted so its sorted form has its
        // first 1 at sub-index n_k.
        let mut lo = isize::MAX;
        let mut hi = isize::MIN;
        for (k, (w, &n)) in words.iter().zip(&charges).enumerate() {
            let start = n + w.offset() - 1;
            let end = n + w.end();
            lo = lo.min(start * t as isize + k as isize);
            hi = hi.max(end * t as isize + k as isize);
        }
        let letters = (lo..=hi)
            .map(|pos| {
                let k = pos.rem_euclid(t as isize) as usize;
                let i = pos.div_euclid(t as isize);
                words[k].letter(i - charges[k])
            })
            .collect();
        BoundaryWord::new(letters, lo)
            .expect("interleaving balanced sub-words preserves balance")
            .decode()
    }
}

/// Zero-sum integer vector indexing a `t`-core.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreVector {
    entries: Vec<isize>,
}

impl CoreVector {
    pub fn new(entries: Vec<isize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidModulus);
        }
        let sum: isize = entries.iter().sum();
        if sum != 0 {
            return Err(Error::NonZeroSum { sum: sum as i64 });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[isize] {
        &self.entries
    }

    pub fn modulus(&self) -> usize {
        self.entries.len()
    }

    /// Weight of the corresponding core, `Σ (t·n_i²/2 + i·n_i)`.
    pub fn core_weight(&self) -> usize {
        let t = self.modulus() as isize;
        let twice: isize = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &n)| t * n * n + 2 * i as isize * n)
            .sum();
        (twice / 2) as usize
    }
}

/// Splits the word of `p` into its `t` sub-words, returning each as a letter
/// run together with its first sub-index.
fn sub_words(word: &BoundaryWord, t: usize) -> Vec<(isize, Vec<bool>)> {
    let t_i = t as isize;
    let (lo, hi) = (word.offset(), word.end() - 1);
    (0..t)
        .map(|k| {
            let k_i = k as isize;
            let first = -(-(lo - k_i)).div_euclid(t_i);
            let last = (hi - k_i).div_euclid(t_i);
            let letters = (first..=last).map(|i| word.letter(t_i * i + k_i)).collect();
            (first, letters)
        })
        .collect()
}

fn charge(first: isize, letters: &[bool]) -> isize {
    first + letters.iter().filter(|&&c| !c).count() as isize
}

pub fn decompose(p: &Partition, t: usize) -> Decomposition {
    assert!(t >= 1, "modulus must be positive");
    let word = BoundaryWord::encode(p);
    let subs = sub_words(&word, t);
    let quotient = subs
        .iter()
        .map(|(_, letters)| BoundaryWord::recentered(letters.clone()).decode())
        .collect();
    let charges: Vec<isize> = subs.iter().map(|(first, l)| charge(*first, l)).collect();
    Decomposition {
        core: core_from_charges(&charges),
        quotient,
    }
}

/// Inverse of [`decompose`]; rejects a core with a hook divisible by `t`.
pub fn recompose(core: &Partition, quotient: &[Partition]) -> Result<Partition> {
    Decomposition::new(core.clone(), quotient.to_vec()).map(|d| d.recompose())
}

pub fn is_t_core(p: &Partition, t: usize) -> bool {
    p.hooks(t).is_empty()
}

/// Core vector: `n_i = min{k : c_{i+kt} = 1}` on the word of `core`.
pub fn kappa(core: &Partition, t: usize) -> Result<CoreVector> {
    if t == 0 {
        return Err(Error::InvalidModulus);
    }
    if !is_t_core(core, t) {
        return Err(Error::NotACore { t });
    }
    let word = BoundaryWord::encode(core);
    let entries = sub_words(&word, t)
        .iter()
        .map(|(first, l)| charge(*first, l))
        .collect();
    Ok(CoreVector { entries })
}

pub fn kappa_inverse(v: &CoreVector) -> Partition {
    core_from_charges(&v.entries)
}

fn core_from_charges(charges: &[isize]) -> Partition {
    let t = charges.len() as isize;
    let lo = charges
        .iter()
        .enumerate()
        .map(|(k, &n)| (n - 1) * t + k as isize)
        .min()
        .unwrap_or(0);
    let hi = charges
        .iter()
        .enumerate()
        .map(|(k, &n)| n * t + k as isize)
        .max()
        .unwrap_or(0);
    let letters = (lo..=hi)
        .map(|pos| pos.div_euclid(t) >= charges[pos.rem_euclid(t) as usize])
        .collect();
    BoundaryWord::new(letters, lo)
        .expect("zero-sum charges give a balanced word")
        .decode()
}

/// Removes length-`t` rim hooks from the diagram until none is left.
///
/// Each step removes the rim hook whose hand lies in the topmost possible
/// row. Works directly on the Ferrers diagram, independently of words.
pub fn strip_rim_hooks(p: &Partition, t: usize) -> Partition {
    assert!(t >= 1, "modulus must be positive");
    let mut parts = p.parts().to_vec();
    loop {
        let conj = crate::partition::conjugate_parts(&parts);
        let found = parts.iter().enumerate().find_map(|(i, &row)| {
            (0..row)
                .find(|&j| row - j - 1 + conj[j] - i - 1 + 1 == t)
                .map(|j| (i, j))
        });
        let Some((i, j)) = found else {
            return Partition::from_sorted(parts);
        };
        let foot = conj[j] - 1;
        for r in i..foot {
            parts[r] = parts[r + 1] - 1;
        }
        parts[foot] = j;
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }
}

/// All `t`-cores of weight at most `n_max`, ordered by weight then
/// reverse-lexicographically. Generated from core vectors.
pub fn enumerate_t_cores(t: usize, n_max: usize) -> Vec<Partition> {
    assert!(t >= 1, "modulus must be positive");
    let search = CoreSearch {
        t: t as isize,
        budget: 2 * n_max as isize,
        bound: (n_max / t + t * t).sqrt() as isize + 2 * t as isize,
    };
    let mut out = Vec::new();
    search.descend(0, 0, 0, &mut vec![0; t], &mut out);
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
    out
}

/// Depth-first search over zero-sum vectors, pruned on twice the weight
/// `Σ (t·n_i² + 2i·n_i)`.
struct CoreSearch {
    t: isize,
    budget: isize,
    bound: isize,
}

impl CoreSearch {
    fn term(&self, i: usize, n: isize) -> isize {
        self.t * n * n + 2 * i as isize * n
    }

    /// `t·x² + 2i·x ≥ -i²/t` for every integer `x`.
    fn floor_term(&self, i: usize) -> isize {
        -((i * i).div_ceil(self.t as usize) as isize)
    }

    fn descend(&self, idx: usize, partial: isize, sum: isize, entries: &mut Vec<isize>, out: &mut Vec<Partition>) {
        let last = self.t as usize - 1;
        if idx == last {
            let n = -sum;
            if partial + self.term(idx, n) <= self.budget {
                entries[idx] = n;
                out.push(core_from_charges(entries));
            }
            return;
        }
        let rest: isize = (idx + 1..=last).map(|i| self.floor_term(i)).sum();
        for n in -self.bound..=self.bound {
            let term = self.term(idx, n);
            if partial + term + rest > self.budget {
                continue;
            }
            entries[idx] = n;
            self.descend(idx + 1, partial + term, sum + n, entries, out);
        }
    }
}

/// Filter oracle for [`enumerate_t_cores`].
pub fn t_cores_by_filter(t: usize, n_max: usize) -> Vec<Partition> {
    (0..=n_max)
        .flat_map(enumerate_partitions)
        .filter(|p| is_t_core(p, t))
        .collect()
}
