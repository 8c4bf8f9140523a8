use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

use super::weights::HookWeight;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// First coefficient (or scan index) where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity_id: String,
    pub params: Vec<(String, ParamValue)>,
    pub verdict: Verdict,
    pub max_order_checked: usize,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub(crate) fn new(id: &str, params: Vec<(String, ParamValue)>, max_order_checked: usize) -> Self {
        Self {
            identity_id: id.to_string(),
            params,
            verdict: Verdict::Pass,
            max_order_checked,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub(crate) fn fail(&mut self, n: usize, lhs: impl ToString, rhs: impl ToString) {
        if self.witness.is_none() {
            self.witness = Some(Witness {
                n,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.verdict = Verdict::Fail;
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| alloc::format!("{k}={v}")).collect();
        write!(
            f,
            "{} [{}] {} (order {})",
            self.identity_id,
            params.join(" "),
            self.verdict.as_str(),
            self.max_order_checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, ": first mismatch at n={}: lhs {} vs rhs {}", w.n, w.lhs, w.rhs)?;
        }
        Ok(())
    }
}

/// Parameters for one catalog check. Unset fields take per-check defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub t: Option<usize>,
    pub z: Option<i64>,
    pub beta: Option<u32>,
    pub order: Option<usize>,
    pub degree_cap: Option<usize>,
    pub n_max: Option<usize>,
    pub rho1: Option<HookWeight>,
    pub rho2: Option<HookWeight>,
}

impl CheckParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    pub fn z(mut self, z: i64) -> Self {
        self.z = Some(z);
        self
    }

    pub fn beta(mut self, beta: u32) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = Some(cap);
        self
    }

    pub fn n_max(mut self, n_max: usize) -> Self {
        self.n_max = Some(n_max);
        self
    }

    pub fn rho1(mut self, w: HookWeight) -> Self {
        self.rho1 = Some(w);
        self
    }

    pub fn rho2(mut self, w: HookWeight) -> Self {
        self.rho2 = Some(w);
        self
    }

    pub(crate) fn need_t(&self, min: usize) -> Result<usize> {
        match self.t {
            Some(t) if t >= min => Ok(t),
            Some(t) => Err(Error::InvalidParams(alloc::format!("t must be at least {min} (got {t})"))),
            None => Err(Error::InvalidParams("missing t".into())),
        }
    }

    /// `z` with `0 ≤ z ≤ t - 1`.
    pub(crate) fn need_bg_z(&self, t: usize) -> Result<usize> {
        match self.z {
            Some(z) if z >= 0 && (z as usize) < t => Ok(z as usize),
            Some(z) => Err(Error::InvalidParams(alloc::format!("need 0 ≤ z ≤ t-1 (z={z}, t={t})"))),
            None => Err(Error::InvalidParams("missing z".into())),
        }
    }
}
