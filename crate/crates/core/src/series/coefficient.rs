use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of a series: `ℚ`, or `ℚ[v]` truncated above `v^cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Rational,
    Poly { cap: usize },
}

impl Ring {
    /// Number of stored rationals per coefficient.
    pub fn width(self) -> usize {
        match self {
            Ring::Rational => 1,
            Ring::Poly { cap } => cap + 1,
        }
    }
}

/// An exact coefficient. Rational coefficients store one term; polynomial
/// ones store the `v^0..=v^cap` terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient {
    ring: Ring,
    terms: Vec<BigRational>,
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Coefficient {
    pub fn zero(ring: Ring) -> Self {
        Self {
            ring,
            terms: vec![BigRational::zero(); ring.width()],
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::rational(ring, BigRational::one())
    }

    pub fn rational(ring: Ring, value: BigRational) -> Self {
        let mut c = Self::zero(ring);
        c.terms[0] = value;
        c
    }

    pub fn integer(ring: Ring, value: i64) -> Self {
        Self::rational(ring, BigRational::from_integer(value.into()))
    }

    pub fn fraction(ring: Ring, num: i64, den: i64) -> Self {
        Self::rational(ring, ratio(num, den))
    }

    /// `v^k` in `ℚ[v]` with the given cap; zero when `k > cap`.
    pub fn v_power(cap: usize, k: usize) -> Self {
        let mut c = Self::zero(Ring::Poly { cap });
        if k <= cap {
            c.terms[k] = BigRational::one();
        }
        c
    }

    /// Polynomial from its low-order terms; terms beyond `cap` are dropped.
    pub fn poly(cap: usize, terms: &[BigRational]) -> Self {
        let mut c = Self::zero(Ring::Poly { cap });
        for (slot, t) in c.terms.iter_mut().zip(terms) {
            *slot = t.clone();
        }
        c
    }

    /// Polynomial with integer coefficients, lowest degree first.
    pub fn poly_from_ints(cap: usize, terms: &[i64]) -> Self {
        let terms: Vec<BigRational> = terms.iter().map(|&x| ratio(x, 1)).collect();
        Self::poly(cap, &terms)
    }

    pub(crate) fn from_slice(ring: Ring, terms: &[BigRational]) -> Self {
        debug_assert_eq!(terms.len(), ring.width());
        Self {
            ring,
            terms: terms.to_vec(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Terms `v^0, v^1, …`; a single entry for `ℚ`.
    pub fn terms(&self) -> &[BigRational] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Zero::is_zero)
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.terms[0]
    }

    /// The value as a rational when no positive power of `v` appears.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.terms[1..].iter().all(Zero::is_zero).then(|| &self.terms[0])
    }

    /// Moves into `ring`. `ℚ → ℚ[v]` embeds; changing the cap truncates or
    /// pads; `ℚ[v] → ℚ` requires a constant polynomial.
    pub fn promote(&self, ring: Ring) -> Result<Self> {
        if ring == Ring::Rational {
            return match self.as_rational() {
                Some(r) => Ok(Self::rational(ring, r.clone())),
                None => Err(Error::RingMismatch),
            };
        }
        let mut c = Self::zero(ring);
        for (slot, t) in c.terms.iter_mut().zip(&self.terms) {
            *slot = t.clone();
        }
        Ok(c)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = self.terms.iter().zip(&other.terms).map(|(a, b)| a + b).collect();
        Ok(Self { ring: self.ring, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = self.terms.iter().zip(&other.terms).map(|(a, b)| a - b).collect();
        Ok(Self { ring: self.ring, terms })
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring,
            terms: self.terms.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = vec![BigRational::zero(); self.terms.len()];
        mul_add_into(&mut terms, &self.terms, &other.terms);
        Ok(Self { ring: self.ring, terms })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            ring: self.ring,
            terms: self.terms.iter().map(|a| a * r).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let terms = inverse_terms(&self.terms).ok_or(Error::NotInvertible)?;
        Ok(Self { ring: self.ring, terms })
    }
}

/// `dst += a * b`, truncated to `dst.len()` terms.
pub(crate) fn mul_add_into(dst: &mut [BigRational], a: &[BigRational], b: &[BigRational]) {
    let w = dst.len();
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b[..w - i].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            dst[i + j] += x * y;
        }
    }
}

/// `dst -= a * b`, truncated to `dst.len()` terms.
pub(crate) fn mul_sub_into(dst: &mut [BigRational], a: &[BigRational], b: &[BigRational]) {
    let w = dst.len();
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b[..w - i].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            dst[i + j] -= x * y;
        }
    }
}

pub(crate) fn inverse_terms(a: &[BigRational]) -> Option<Vec<BigRational>> {
    if a[0].is_zero() {
        return None;
    }
    let b0 = a[0].recip();
    let mut b: Vec<BigRational> = Vec::with_capacity(a.len());
    b.push(b0.clone());
    for i in 1..a.len() {
        let mut s = BigRational::zero();
        for j in 1..=i {
            if !a[j].is_zero() {
                s += &a[j] * &b[i - j];
            }
        }
        b.push(-(s * &b0));
    }
    Some(b)
}

fn write_rational(out: &mut String, r: &BigRational) {
    if r.is_integer() {
        let _ = write!(out, "{}", r.numer());
    } else {
        let _ = write!(out, "{}/{}", r.numer(), r.denom());
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.terms.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !mag.is_one() {
                write_rational(&mut out, &mag);
                if k > 0 {
                    out.push('·');
                }
            }
            match k {
                0 => {}
                1 => out.push('v'),
                _ => {
                    let _ = write!(out, "v^{k}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}
