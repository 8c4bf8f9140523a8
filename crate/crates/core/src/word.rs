//! Two-sided 0/1 boundary words.
//!
//! Walking the border of a Ferrers diagram from south-west to north-east,
//! a vertical step is written `0` and a horizontal step `1`. The word is
//! indexed by `ℤ` and its median sits between indices `-1` and `0`, placed so
//! that the number of `1`s left of it equals the number of `0`s right of it.
//!
//! Only the finite window from the leftmost `1` to the rightmost `0` is
//! stored. For a balanced word the median always falls exactly after the
//! first `#zeros(window)` letters, so the offset is `-#zeros`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{FrobeniusCoords, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BoundaryWord {
    /// `true` for the letter `1`.
    window: Vec<bool>,
    offset: isize,
}

impl BoundaryWord {
    /// Builds a word from letters placed at `offset, offset + 1, …`, with
    /// `0`s implied to the left and `1`s to the right. Padding letters are
    /// trimmed; the result must be balanced around index 0.
    pub fn new(letters: Vec<bool>, offset: isize) -> Result<Self> {
        let (window, offset) = trim(letters, offset);
        let zeros = window.iter().filter(|&&c| !c).count() as isize;
        if offset != -zeros {
            return Err(Error::UnbalancedWord);
        }
        Ok(Self { window, offset })
    }

    /// The word of the same border path with its median re-placed at the
    /// balance point. Absolute positions of `letters` are irrelevant.
    pub fn recentered(letters: Vec<bool>) -> Self {
        let (window, _) = trim(letters, 0);
        let zeros = window.iter().filter(|&&c| !c).count() as isize;
        Self {
            window,
            offset: -zeros,
        }
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    /// Index of the first window letter.
    pub fn offset(&self) -> isize {
        self.offset
    }

    /// One past the index of the last window letter.
    pub fn end(&self) -> isize {
        self.offset + self.window.len() as isize
    }

    /// Letter `c_i`; `true` is `1`.
    pub fn letter(&self, i: isize) -> bool {
        if i < self.offset {
            false
        } else if i >= self.end() {
            true
        } else {
            self.window[(i - self.offset) as usize]
        }
    }

    pub fn encode(p: &Partition) -> Self {
        let len = p.len() as isize;
        let width = p.part(0) as isize;
        // c_i = 0 exactly when i = λ_j - j for some j ≥ 1.
        let mut window = alloc::vec![true; (len + width) as usize];
        for (j, &part) in p.parts().iter().enumerate() {
            let i = part as isize - (j as isize + 1);
            window[(i + len) as usize] = false;
        }
        Self {
            window,
            offset: -len,
        }
    }

    pub fn decode(&self) -> Partition {
        let mut parts = Vec::new();
        let mut ones = 0;
        for &c in &self.window {
            if c {
                ones += 1;
            } else {
                parts.push(ones);
            }
        }
        parts.reverse();
        Partition::from_sorted(parts)
    }

    /// Word of the conjugate partition: `c'_i = 1 - c_{-i-1}`.
    pub fn conjugate(&self) -> Self {
        Self {
            window: self.window.iter().rev().map(|&c| !c).collect(),
            offset: -self.end(),
        }
    }

    /// One `(i, j)` per box: `i < j`, `c_i = 1`, `c_j = 0`, hook length `j - i`.
    pub fn hook_index_pairs(&self) -> Vec<(isize, isize)> {
        let mut pairs = Vec::new();
        for (a, &ca) in self.window.iter().enumerate() {
            if !ca {
                continue;
            }
            for (b, &cb) in self.window.iter().enumerate().skip(a + 1) {
                if !cb {
                    pairs.push((self.offset + a as isize, self.offset + b as isize));
                }
            }
        }
        pairs
    }

    /// Arms are the nonnegative `0` positions; legs come from negative `1`
    /// positions `i` as `-i - 1`.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for (k, &c) in self.window.iter().enumerate() {
            let i = self.offset + k as isize;
            if i >= 0 && !c {
                arms.push(i as usize);
            } else if i < 0 && c {
                legs.push((-i - 1) as usize);
            }
        }
        arms.reverse();
        FrobeniusCoords::new(arms, legs).expect("balanced word yields valid Frobenius rows")
    }

    /// Number of `1`s at negative indices, i.e. the Durfee size.
    pub fn negative_ones(&self) -> usize {
        (self.offset..0.min(self.end()))
            .filter(|&i| self.letter(i))
            .count()
    }

    /// Textual form `…01100|111001…` with one padding letter on each side.
    pub fn render(&self) -> String {
        let lo = self.offset.min(0) - 1;
        let hi = self.end().max(0) + 1;
        let mut s = String::from("…");
        for i in lo..hi {
            if i == 0 {
                s.push('|');
            }
            s.push(if self.letter(i) { '1' } else { '0' });
        }
        s.push('…');
        s
    }
}

fn trim(mut letters: Vec<bool>, mut offset: isize) -> (Vec<bool>, isize) {
    let lead = letters.iter().take_while(|&&c| !c).count();
    letters.drain(..lead);
    offset += lead as isize;
    while letters.last() == Some(&true) {
        letters.pop();
    }
    if letters.is_empty() {
        offset = 0;
    }
    (letters, offset)
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundaryWord({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn five_five_two_two_word() {
        let w = BoundaryWord::encode(&p(&[5, 5, 2, 2]));
        assert_eq!(w.render(), "…01100|111001…");
        assert_eq!(w.decode(), p(&[5, 5, 2, 2]));
    }

    #[test]
    fn empty_and_small_words() {
        let e = BoundaryWord::encode(&Partition::empty());
        assert!(e.window().is_empty());
        assert_eq!(e.render(), "…0|1…");
        assert_eq!(e.decode(), Partition::empty());

        let one = BoundaryWord::encode(&p(&[1]));
        assert!(one.letter(-1));
        assert!(!one.letter(0));
        assert!(!one.letter(-2));
        assert!(one.letter(1));

        let two = BoundaryWord::new(bits("0011011"), -3).unwrap();
        assert_eq!(two.decode(), p(&[2]));
        assert_eq!(two, BoundaryWord::encode(&p(&[2])));
    }

    #[test]
    fn rejects_unbalanced() {
        assert_eq!(
            BoundaryWord::new(bits("10"), 0),
            Err(Error::UnbalancedWord)
        );
        assert!(BoundaryWord::new(bits("10"), -1).is_ok());
    }

    #[test]
    fn conjugation_on_words() {
        let w = BoundaryWord::encode(&p(&[5, 5, 2, 2]));
        assert_eq!(w.conjugate().decode(), p(&[4, 4, 2, 2, 2]));
        let e = BoundaryWord::encode(&Partition::empty());
        assert_eq!(e.conjugate(), e);
        let s = BoundaryWord::encode(&p(&[2, 1]));
        assert_eq!(s.conjugate(), s);
    }

    #[test]
    fn hook_pairs() {
        let pairs = BoundaryWord::encode(&p(&[4, 3, 3, 2])).hook_index_pairs();
        assert_eq!(pairs.len(), 12);
        let mut diffs: Vec<isize> = pairs.iter().map(|(i, j)| j - i).collect();
        diffs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(diffs, vec![7, 6, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1]);
        assert!(BoundaryWord::encode(&Partition::empty()).hook_index_pairs().is_empty());
        assert_eq!(BoundaryWord::encode(&p(&[1])).hook_index_pairs(), vec![(-1, 0)]);
    }

    #[test]
    fn frobenius_from_words() {
        let f = BoundaryWord::encode(&p(&[4, 3, 3, 2])).frobenius();
        assert_eq!(f.arms(), &[3, 1, 0]);
        assert_eq!(f.legs(), &[3, 2, 0]);
        assert_eq!(BoundaryWord::default().frobenius().rank(), 0);
        let f2 = BoundaryWord::encode(&p(&[2])).frobenius();
        assert_eq!((f2.arms(), f2.legs()), (&[1][..], &[0][..]));
    }

    #[test]
    fn exhaustive_laws() {
        for n in 0..=20 {
            for lam in enumerate_partitions(n) {
                let w = BoundaryWord::encode(&lam);
                assert_eq!(w.decode(), lam);
                assert_eq!(BoundaryWord::new(w.window().to_vec(), w.offset()).unwrap(), w);
                assert_eq!(BoundaryWord::encode(&lam.conjugate()), w.conjugate());
                assert_eq!(w.negative_ones(), lam.durfee());
                assert_eq!(w.frobenius(), lam.frobenius());
                let mut diffs: Vec<usize> =
                    w.hook_index_pairs().iter().map(|(i, j)| (j - i) as usize).collect();
                diffs.sort_unstable();
                assert_eq!(diffs, lam.hooks(1).values());
            }
        }
    }
}
