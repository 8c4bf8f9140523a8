//! Truncated power series in `q` over `ℚ` or `ℚ[v]`.
//!
//! Coefficients are stored flat: the term `v^d q^n` lives at index
//! `n * width + d`. Every operation truncates at `q^order`, and polynomial
//! coefficients at `v^cap`.

mod coefficient;

pub use coefficient::{Coefficient, Ring};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use coefficient::{inverse_terms, mul_add_into, mul_sub_into, ratio};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    ring: Ring,
    order: usize,
    data: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(ring: Ring, order: usize) -> Self {
        Self {
            ring,
            order,
            data: vec![BigRational::zero(); (order + 1) * ring.width()],
        }
    }

    pub fn one(ring: Ring, order: usize) -> Self {
        Self::constant(&Coefficient::one(ring), order)
    }

    pub fn constant(c: &Coefficient, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c·q^k`; zero when `k > order`.
    pub fn monomial(c: &Coefficient, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.ring(), order);
        if k <= order {
            s.slot_mut(k).clone_from_slice(c.terms());
        }
        s
    }

    /// Series from coefficients `q^0, q^1, …`, all in `ring`. Missing
    /// coefficients are zero and extra ones are dropped.
    pub fn from_coefficients(ring: Ring, order: usize, coeffs: &[Coefficient]) -> Result<Self> {
        let mut s = Self::zero(ring, order);
        for (n, c) in coeffs.iter().enumerate().take(order + 1) {
            if c.ring() != ring {
                return Err(Error::RingMismatch);
            }
            s.slot_mut(n).clone_from_slice(c.terms());
        }
        Ok(s)
    }

    /// Rational series with integer coefficients.
    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(Ring::Rational, order);
        for (n, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.data[n] = ratio(c, 1);
        }
        s
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn width(&self) -> usize {
        self.ring.width()
    }

    fn slot(&self, n: usize) -> &[BigRational] {
        let w = self.width();
        &self.data[n * w..(n + 1) * w]
    }

    fn slot_mut(&mut self, n: usize) -> &mut [BigRational] {
        let w = self.width();
        &mut self.data[n * w..(n + 1) * w]
    }

    /// Coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> Result<Coefficient> {
        if n > self.order {
            return Err(Error::IndexOutOfRange { n, order: self.order });
        }
        Ok(Coefficient::from_slice(self.ring, self.slot(n)))
    }

    pub fn coefficients(&self) -> Vec<Coefficient> {
        (0..=self.order)
            .map(|n| Coefficient::from_slice(self.ring, self.slot(n)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Smallest `n` at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>> {
        self.check(other)?;
        Ok((0..=self.order).find(|&n| self.slot(n) != other.slot(n)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { data, ..*self })
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| -a).collect();
        Self { data, ..*self }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.ring, self.order);
        let w = self.width();
        for i in 0..=self.order {
            let a = self.slot(i);
            if a.iter().all(Zero::is_zero) {
                continue;
            }
            for j in 0..=self.order - i {
                let b = other.slot(j);
                if b.iter().all(Zero::is_zero) {
                    continue;
                }
                let n = i + j;
                mul_add_into(&mut out.data[n * w..(n + 1) * w], a, b);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Coefficient) -> Result<Self> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(self.ring, self.order);
        for n in 0..=self.order {
            mul_add_into(out.slot_mut(n), self.slot(n), c.terms());
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let data = self.data.iter().map(|a| a * r).collect();
        Self { data, ..*self }
    }

    /// Multiplies in place by `1 - c·q^k`.
    pub fn mul_one_minus(&mut self, c: &Coefficient, k: usize) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if k == 0 {
            let factor = Coefficient::one(self.ring).sub(c)?;
            *self = self.scale(&factor)?;
            return Ok(());
        }
        let w = self.width();
        for n in (k..=self.order).rev() {
            let (lo, hi) = self.data.split_at_mut(n * w);
            mul_sub_into(&mut hi[..w], &lo[(n - k) * w..(n - k + 1) * w], c.terms());
        }
        Ok(())
    }

    /// `(c·q^a; q^m)_∞ = ∏_{j ≥ 0} (1 - c·q^{a + jm})`, keeping the factors
    /// with `a + jm ≤ order`.
    pub fn pochhammer_inf(c: &Coefficient, a: usize, m: usize, order: usize) -> Result<Self> {
        if a < 1 || m < 1 {
            return Err(Error::PochhammerStart);
        }
        let mut s = Self::one(c.ring(), order);
        for e in (a..=order).step_by(m) {
            s.mul_one_minus(c, e)?;
        }
        Ok(s)
    }

    /// `(c·q^a; q^m)_count`, the first `count` factors.
    pub fn pochhammer(c: &Coefficient, a: usize, m: usize, count: usize, order: usize) -> Result<Self> {
        let mut s = Self::one(c.ring(), order);
        for j in 0..count {
            let e = a + j * m;
            if e > order {
                break;
            }
            s.mul_one_minus(c, e)?;
        }
        Ok(s)
    }

    pub fn inverse(&self) -> Result<Self> {
        let b0 = inverse_terms(self.slot(0)).ok_or(Error::NotInvertible)?;
        let mut out = Self::zero(self.ring, self.order);
        out.slot_mut(0).clone_from_slice(&b0);
        let w = self.width();
        for n in 1..=self.order {
            let mut acc = vec![BigRational::zero(); w];
            for k in 1..=n {
                let a = self.slot(k);
                if a.iter().all(Zero::is_zero) {
                    continue;
                }
                mul_add_into(&mut acc, a, out.slot(n - k));
            }
            let mut b = vec![BigRational::zero(); w];
            mul_sub_into(&mut b, &acc, &b0);
            out.slot_mut(n).clone_from_slice(&b);
        }
        Ok(out)
    }

    /// `q → q^k`.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        self.substitute_scaled(k, &Coefficient::one(self.ring))
    }

    /// `q → c·q^k`: the coefficient of `q^n` moves to `q^{kn}` times `c^n`.
    pub fn substitute_scaled(&self, k: usize, c: &Coefficient) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams(String::from("substitution power must be at least 1")));
        }
        if c.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(self.ring, self.order);
        let mut power = Coefficient::one(self.ring);
        for n in 0..=self.order / k {
            mul_add_into(out.slot_mut(k * n), self.slot(n), power.terms());
            power = power.mul(c)?;
        }
        Ok(out)
    }

    /// Moves every coefficient into `ring` (see [`Coefficient::promote`]).
    pub fn promote(&self, ring: Ring) -> Result<Self> {
        let coeffs = self
            .coefficients()
            .iter()
            .map(|c| c.promote(ring))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coefficients(ring, self.order, &coeffs)
    }

    /// Drops `v`-degrees above `cap`.
    pub fn truncate_degree(&self, cap: usize) -> Result<Self> {
        match self.ring {
            Ring::Poly { cap: old } if cap <= old => self.promote(Ring::Poly { cap }),
            _ => Err(Error::RingMismatch),
        }
    }

    /// Keeps `q^0..=q^order`.
    pub fn truncate_order(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let data = self.data[..(order + 1) * self.width()].to_vec();
        Self { data, order, ..*self }
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.slot(0).iter().enumerate().all(|(d, x)| if d == 0 { x.is_one() } else { x.is_zero() }) {
            return Err(Error::ConstantTermNotOne);
        }
        // n·l_n = n·s_n - Σ_{k<n} k·l_k·s_{n-k}
        let w = self.width();
        let mut out = Self::zero(self.ring, self.order);
        for n in 1..=self.order {
            let nn = ratio(n as i64, 1);
            let mut acc: Vec<BigRational> = self.slot(n).iter().map(|x| x * &nn).collect();
            for k in 1..n {
                let kl: Vec<BigRational> = out.slot(k).iter().map(|x| x * ratio(k as i64, 1)).collect();
                mul_sub_into(&mut acc, &kl, self.slot(n - k));
            }
            let inv = ratio(1, n as i64);
            for (d, x) in acc.into_iter().enumerate() {
                out.data[n * w + d] = x * &inv;
            }
        }
        Ok(out)
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.slot(0).iter().all(Zero::is_zero) {
            return Err(Error::ConstantTermNotZero);
        }
        // n·e_n = Σ_{k=1..n} k·f_k·e_{n-k}
        let w = self.width();
        let mut out = Self::one(self.ring, self.order);
        let kf: Vec<Vec<BigRational>> = (0..=self.order)
            .map(|k| self.slot(k).iter().map(|x| x * ratio(k as i64, 1)).collect())
            .collect();
        for n in 1..=self.order {
            let mut acc = vec![BigRational::zero(); w];
            for k in 1..=n {
                mul_add_into(&mut acc, &kf[k], out.slot(n - k));
            }
            let inv = ratio(1, n as i64);
            for (d, x) in acc.into_iter().enumerate() {
                out.data[n * w + d] = x * &inv;
            }
        }
        Ok(out)
    }

    /// `exp(w·log s)` for `s` with constant term 1. A rational exponent is
    /// promoted into the series ring.
    pub fn pow(&self, w: &Coefficient) -> Result<Self> {
        let w = match (w.ring(), self.ring) {
            (a, b) if a == b => w.clone(),
            (Ring::Rational, ring) => w.promote(ring)?,
            _ => return Err(Error::RingMismatch),
        };
        self.log()?.scale(&w)?.exp()
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow_int(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring, self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (n, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let text = alloc::format!("{c}");
            let compound = c.as_rational().is_none() && text.contains([' ']);
            match (n, compound) {
                (0, _) => out.push_str(&text),
                (_, true) => {
                    let _ = write!(out, "({text})·");
                }
                (_, false) => {
                    let _ = write!(out, "{text}·");
                }
            }
            match n {
                0 => {}
                1 => out.push('q'),
                _ => {
                    let _ = write!(out, "q^{n}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} + O(q^{})", self.order + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use alloc::string::ToString;

    const Q: Ring = Ring::Rational;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| {
                let r = c.as_rational().unwrap();
                assert!(r.is_integer());
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect()
    }

    fn euler(order: usize) -> TruncatedSeries {
        TruncatedSeries::pochhammer_inf(&Coefficient::one(Q), 1, 1, order).unwrap()
    }

    #[test]
    fn geometric_and_zero() {
        let one_minus_q = TruncatedSeries::from_integers(20, &[1, -1]);
        let geo = TruncatedSeries::from_integers(20, &[1; 21]);
        assert_eq!(one_minus_q.mul(&geo).unwrap(), TruncatedSeries::one(Q, 20));
        assert_eq!(one_minus_q.inverse().unwrap(), geo);
        assert_eq!(geo.add(&TruncatedSeries::zero(Q, 20)).unwrap(), geo);
        assert_eq!(TruncatedSeries::one(Q, 5).inverse().unwrap(), TruncatedSeries::one(Q, 5));
    }

    #[test]
    fn partition_numbers() {
        let p = euler(30).inverse().unwrap();
        assert_eq!(p.mul(&euler(30)).unwrap(), TruncatedSeries::one(Q, 30));
        let counts: Vec<i64> = (0..=30).map(|n| enumerate_partitions(n).count() as i64).collect();
        assert_eq!(ints(&p), counts);
        assert_eq!(p.coeff(10).unwrap(), Coefficient::integer(Q, 42));
    }

    #[test]
    fn pentagonal_pattern() {
        for order in [0, 1, 7, 33, 60] {
            // Oracle: naive integer polynomial product of (1 - q^j).
            let mut naive = vec![0i64; order + 1];
            naive[0] = 1;
            for j in 1..=order {
                for n in (j..=order).rev() {
                    naive[n] -= naive[n - j];
                }
            }
            let mut expected = vec![0i64; order + 1];
            for k in -10i64..=10 {
                let e = (k * (3 * k - 1) / 2) as usize;
                if e <= order {
                    expected[e] = if k % 2 == 0 { 1 } else { -1 };
                }
            }
            assert_eq!(naive, expected);
            assert_eq!(ints(&euler(order)), expected);
        }
    }

    #[test]
    fn self_conjugate_product() {
        let sc = TruncatedSeries::pochhammer_inf(&Coefficient::integer(Q, -1), 1, 2, 20).unwrap();
        assert_eq!(sc.coeff(3).unwrap(), Coefficient::integer(Q, 1));
        assert_eq!(sc.coeff(4).unwrap(), Coefficient::integer(Q, 1));
        assert_eq!(&ints(&sc)[..11], &[1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn polynomial_pochhammer() {
        let c = Coefficient::poly_from_ints(4, &[1, 0, -1]);
        let s = TruncatedSeries::pochhammer_inf(&c, 2, 2, 6).unwrap();
        assert!(s.coeff(1).unwrap().is_zero());
        assert_eq!(s.coeff(2).unwrap(), Coefficient::poly_from_ints(4, &[-1, 0, 1]));
        // q^4: -c from the second factor, q^6: -c + c² from pairs (2,4) and (6).
        assert_eq!(s.coeff(4).unwrap(), Coefficient::poly_from_ints(4, &[-1, 0, 1]));
        assert_eq!(s.coeff(6).unwrap(), Coefficient::poly_from_ints(4, &[0, 0, -1, 0, 1]));
        assert_eq!(
            TruncatedSeries::pochhammer_inf(&c, 0, 2, 6),
            Err(Error::PochhammerStart)
        );
    }

    #[test]
    fn finite_pochhammer() {
        let one = Coefficient::one(Q);
        let s = TruncatedSeries::pochhammer(&one, 2, 2, 2, 10).unwrap();
        assert_eq!(ints(&s), vec![1, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0]);
        assert_eq!(TruncatedSeries::pochhammer(&one, 1, 1, 0, 4).unwrap(), TruncatedSeries::one(Q, 4));
    }

    #[test]
    fn substitution() {
        let s = TruncatedSeries::from_integers(10, &[1, 1]);
        assert_eq!(s.substitute_power(3).unwrap(), TruncatedSeries::from_integers(10, &[1, 0, 0, 1]));
        assert_eq!(s.substitute_power(1).unwrap(), s);
        assert!(s.substitute_power(0).is_err());
        let p = euler(4).promote(Ring::Poly { cap: 3 }).unwrap();
        let sub = p.substitute_scaled(2, &Coefficient::v_power(3, 1)).unwrap();
        assert_eq!(sub.coeff(2).unwrap(), Coefficient::poly_from_ints(3, &[0, -1]));
        assert_eq!(sub.coeff(4).unwrap(), Coefficient::poly_from_ints(3, &[0, 0, -1]));
        assert!(sub.coeff(3).unwrap().is_zero());
    }

    #[test]
    fn log_and_exp() {
        let one = TruncatedSeries::one(Q, 12);
        assert!(one.log().unwrap().is_zero());
        assert_eq!(TruncatedSeries::zero(Q, 12).exp().unwrap(), one);
        let e = euler(30);
        assert_eq!(e.log().unwrap().exp().unwrap(), e);
        let log = TruncatedSeries::from_integers(12, &[1, -1]).log().unwrap();
        for n in 1..=12 {
            assert_eq!(log.coeff(n).unwrap(), Coefficient::fraction(Q, -1, n as i64));
        }
        assert_eq!(TruncatedSeries::from_integers(3, &[2]).log(), Err(Error::ConstantTermNotOne));
        assert_eq!(TruncatedSeries::from_integers(3, &[1]).exp(), Err(Error::ConstantTermNotZero));
    }

    #[test]
    fn powers() {
        let e = euler(30);
        assert_eq!(e.pow(&Coefficient::one(Q)).unwrap(), e);
        let half = e.pow(&Coefficient::fraction(Q, 1, 2)).unwrap();
        assert_eq!(half.mul(&half).unwrap(), e);
        assert_eq!(e.pow(&Coefficient::integer(Q, 3)).unwrap(), e.pow_int(3));
        assert_eq!(e.pow(&Coefficient::integer(Q, -2)).unwrap(), e.pow_int(2).inverse().unwrap());

        let cap = 3;
        let ev = euler(15).promote(Ring::Poly { cap }).unwrap();
        let u_minus_1 = Coefficient::poly_from_ints(cap, &[-1, 1]);
        let no = ev.pow(&u_minus_1).unwrap();
        assert_eq!(no.coeff(1).unwrap(), Coefficient::poly_from_ints(cap, &[1, -1]));
        let w1 = Coefficient::poly_from_ints(cap, &[0, 2]);
        let w2 = Coefficient::poly(cap, &[ratio(1, 3), ratio(-1, 2)]);
        let lhs = ev.pow(&w1).unwrap().mul(&ev.pow(&w2).unwrap()).unwrap();
        assert_eq!(lhs, ev.pow(&w1.add(&w2).unwrap()).unwrap());
        assert_eq!(e.pow(&w1), Err(Error::RingMismatch));
    }

    #[test]
    fn cap_soundness() {
        let build = |cap: usize| {
            let c = Coefficient::poly_from_ints(cap, &[1, 0, -1]);
            let s = TruncatedSeries::pochhammer_inf(&c, 2, 2, 20).unwrap();
            let t = euler(20).promote(Ring::Poly { cap }).unwrap();
            s.mul(&t.inverse().unwrap()).unwrap().pow(&Coefficient::poly_from_ints(cap, &[0, 1])).unwrap()
        };
        assert_eq!(build(6).truncate_degree(2).unwrap(), build(2));
        assert_eq!(build(6).truncate_degree(4).unwrap(), build(4));
    }

    #[test]
    fn errors() {
        let a = TruncatedSeries::one(Q, 4);
        let b = TruncatedSeries::one(Q, 5);
        let c = TruncatedSeries::one(Ring::Poly { cap: 2 }, 4);
        assert_eq!(a.add(&b), Err(Error::OrderMismatch { left: 4, right: 5 }));
        assert_eq!(a.mul(&c), Err(Error::RingMismatch));
        assert_eq!(TruncatedSeries::zero(Q, 4).inverse(), Err(Error::NotInvertible));
        assert_eq!(a.coeff(5), Err(Error::IndexOutOfRange { n: 5, order: 4 }));
        assert_eq!(a.coeff(0).unwrap(), Coefficient::one(Q));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_integers(3, &[1, -1, 0, 2]);
        assert_eq!(s.to_string(), "1 + -1·q + 2·q^3 + O(q^4)");
        let c = Coefficient::poly_from_ints(2, &[1, -1]);
        let p = TruncatedSeries::monomial(&c, 2, 3);
        assert_eq!(p.to_string(), "(1 - v)·q^2 + O(q^4)");
        assert_eq!(TruncatedSeries::zero(Q, 1).to_string(), "0 + O(q^2)");
    }
}
