use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{Coefficient, Ring};

/// A function `ρ` on hook lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HookWeight {
    Constant(BigRational),
    /// `1` at the given hook length, `0` elsewhere.
    Indicator(usize),
    /// `h ↦ h^β`.
    Power(u32),
    /// `table[h - 1]`; undefined past the end.
    Table(Vec<BigRational>),
    /// `h ↦ 1 - v/h²`, polynomial rings only.
    NekrasovOkounkov,
}

impl HookWeight {
    pub fn constant(value: i64) -> Self {
        HookWeight::Constant(BigRational::from_integer(value.into()))
    }

    pub fn eval(&self, h: usize, ring: Ring) -> Result<Coefficient> {
        match self {
            HookWeight::Constant(r) => Ok(Coefficient::rational(ring, r.clone())),
            HookWeight::Indicator(at) => Ok(Coefficient::integer(ring, i64::from(h == *at))),
            HookWeight::Power(beta) => {
                let value = num_traits::pow(BigInt::from(h), *beta as usize);
                Ok(Coefficient::rational(ring, BigRational::from_integer(value)))
            }
            HookWeight::Table(values) => h
                .checked_sub(1)
                .and_then(|i| values.get(i))
                .map(|r| Coefficient::rational(ring, r.clone()))
                .ok_or(Error::WeightUndefined { h }),
            HookWeight::NekrasovOkounkov => match ring {
                Ring::Rational => Err(Error::RingMismatch),
                Ring::Poly { cap } => {
                    let h2 = BigRational::from_integer(BigInt::from(h * h));
                    Ok(Coefficient::poly(cap, &[BigRational::one(), -h2.recip()]))
                }
            },
        }
    }
}

impl fmt::Display for HookWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HookWeight::Constant(r) => write!(f, "const:{r}"),
            HookWeight::Indicator(h) => write!(f, "ind:{h}"),
            HookWeight::Power(b) => write!(f, "pow:{b}"),
            HookWeight::Table(values) => {
                let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "table:{}", parts.join(","))
            }
            HookWeight::NekrasovOkounkov => f.write_str("no"),
        }
    }
}

/// Parses `const:<r>`, `ind:<h>`, `pow:<β>`, `table:<r>,<r>,…` and `no`.
impl FromStr for HookWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("hook weight `{s}`"));
        let rational = |x: &str| x.trim().parse::<BigRational>().map_err(|_| bad());
        let s = s.trim();
        if s == "no" {
            return Ok(HookWeight::NekrasovOkounkov);
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "const" => Ok(HookWeight::Constant(rational(arg)?)),
            "ind" => arg.trim().parse().map(HookWeight::Indicator).map_err(|_| bad()),
            "pow" => arg.trim().parse().map(HookWeight::Power).map_err(|_| bad()),
            "table" => arg
                .split(',')
                .map(rational)
                .collect::<Result<Vec<_>>>()
                .map(HookWeight::Table),
            _ => Err(bad()),
        }
    }
}

/// Which hook count the auxiliary variable `v` records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MarkVariable {
    /// `v^{n_t(λ)}`, hooks of length exactly `t`.
    HookCountEqual,
    /// `v^{|H_t(λ)|}`.
    HookCountDivisible,
}

/// How a multiplicative weight runs over `H_t(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductMode {
    Full,
    /// Each hook value taken with half its multiplicity, i.e. the square
    /// root of the full product.
    Halved,
}

/// Marking of a class generating function: each member `λ` contributes
/// `q^{|λ|}` times the selected factors, all evaluated over `H_t(λ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Marks {
    pub variable: Option<MarkVariable>,
    pub product: Option<(HookWeight, ProductMode)>,
    pub sum: Option<HookWeight>,
    /// `v`-degree cap; `None` works over `ℚ`.
    pub degree_cap: Option<usize>,
}

impl Marks {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn ring(&self) -> Ring {
        match self.degree_cap {
            Some(cap) => Ring::Poly { cap },
            None => Ring::Rational,
        }
    }

    pub(crate) fn needs_hooks(&self) -> bool {
        self.variable.is_some() || self.product.is_some() || self.sum.is_some()
    }

    /// Weight of one member whose `H_t` multiset is `hooks`.
    pub fn evaluate(&self, t: usize, hooks: &[(usize, usize)]) -> Result<Coefficient> {
        let ring = self.ring();
        let mut c = Coefficient::one(ring);
        if let Some(var) = self.variable {
            let Ring::Poly { cap } = ring else {
                return Err(Error::RingMismatch);
            };
            let e = match var {
                MarkVariable::HookCountEqual => hooks.iter().find(|(h, _)| *h == t).map_or(0, |(_, m)| *m),
                MarkVariable::HookCountDivisible => hooks.iter().map(|(_, m)| m).sum(),
            };
            c = Coefficient::v_power(cap, e);
        }
        if let Some((w, mode)) = &self.product {
            for &(h, m) in hooks {
                let k = match mode {
                    ProductMode::Full => m,
                    ProductMode::Halved if m % 2 == 1 => return Err(Error::OddMultiplicity { h }),
                    ProductMode::Halved => m / 2,
                };
                c = c.mul(&w.eval(h, ring)?.pow(k as u32))?;
            }
        }
        if let Some(w) = &self.sum {
            let mut s = Coefficient::zero(ring);
            for &(h, m) in hooks {
                s = s.add(&w.eval(h, ring)?.scale(&BigRational::from_integer(m.into())))?;
            }
            c = c.mul(&s)?;
        }
        Ok(c)
    }
}
