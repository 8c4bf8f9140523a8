//! Generating-function identities, hook-count congruences and exhaustive
//! scans, each producing a [`CheckReport`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

mod congruences;
mod identities;
mod report;
mod scans;
mod stats;
mod weights;

pub use congruences::{congruence_table, run_congruence, CongruenceTable, CONGRUENCES, DEFAULT_N_MAX};
pub use identities::{
    default_degree_cap, default_order, lhs_series, pz_sum_form, rhs_formula, run_identity, IDENTITIES,
};
pub use report::{CheckParams, CheckReport, ParamValue, Verdict, Witness};
pub use scans::{littlewood_property_scan, remark_counterexample};
pub use stats::{class_statistic_series, ft_gt, hooks_equal_in_parts, statistic_series_over};
pub use weights::{HookWeight, MarkVariable, Marks, ProductMode};

pub const SCANS: &[&str] = &["remark-counterexample", "littlewood-scan"];

/// Every id accepted by [`run_check`].
pub fn check_ids() -> impl Iterator<Item = &'static str> {
    IDENTITIES.iter().chain(CONGRUENCES).chain(SCANS).copied()
}

/// Runs any identity, congruence or scan by id.
pub fn run_check(id: &str, params: &CheckParams) -> Result<CheckReport> {
    if IDENTITIES.contains(&id) {
        run_identity(id, params)
    } else if CONGRUENCES.contains(&id) {
        run_congruence(id, params)
    } else if id == "remark-counterexample" {
        let t = params.need_t(2)?;
        remark_counterexample(params.z.unwrap_or(0), t)
    } else if id == "littlewood-scan" {
        let t_hi = params.t.unwrap_or(7);
        littlewood_property_scan(params.n_max.unwrap_or(30), 2..=t_hi.max(2))
    } else {
        Err(Error::UnknownCheck(id.to_string()))
    }
}

/// The acceptance catalog as `(id, params)` jobs. `quick` shrinks orders to
/// 25, scan bounds to 40 and the modulus ranges. A `random_table` adds one
/// run of each weighted identity with that table as `ρ`, `ρ1` and `ρ2`.
pub fn catalog(quick: bool, random_table: Option<HookWeight>) -> Vec<(String, CheckParams)> {
    let mut jobs: Vec<(String, CheckParams)> = Vec::new();
    let mut push = |id: &str, p: CheckParams| jobs.push((id.to_string(), p));
    let (t_cong, t_gf, t_add, t_no) = if quick { (5, 5, 4, 3) } else { (10, 7, 6, 5) };
    let order = |id: &str| if quick { default_order(id).min(25) } else { default_order(id) };
    let n_max = if quick { 40 } else { DEFAULT_N_MAX };

    for t in 2..=t_cong {
        let cp = || CheckParams::new().t(t).n_max(n_max);
        push("congP", cp());
        push("congP-parts", cp());
        push(if t % 2 == 0 { "sc-cong-even" } else { "sc-cong-odd" }, cp());
        push("bt-star-cong", cp());
        push("dd-cong", cp());
        for z in 0..t as i64 {
            push("z-cong", cp().z(z));
        }
    }

    for z in -(t_gf as i64)..=t_gf as i64 {
        push("pz-gf", CheckParams::new().z(z).order(order("pz-gf")));
    }
    for t in 2..=t_gf {
        let ip = |id: &str| CheckParams::new().t(t).order(order(id));
        push(if t % 2 == 0 { "sc-gf-y-even" } else { "sc-gf-y-odd" }, ip("sc-gf-y-even"));
        if t % 2 == 1 {
            push("bgt-gf", ip("bgt-gf"));
        }
        push("dd-gf-y", ip("dd-gf-y"));
        for z in 0..t as i64 {
            push("pz-core-gf", ip("pz-core-gf").z(z));
            push("z-gf-y", ip("z-gf-y").z(z));
        }
    }

    let mut weighted = |rho: Option<&HookWeight>| {
        let with = |p: CheckParams| match rho {
            Some(w) => p.rho1(w.clone()).rho2(w.clone()),
            None => p,
        };
        for t in 2..=t_add {
            let ip = |id: &str| with(CheckParams::new().t(t).order(order(id)));
            push("han-ji-addition", ip("han-ji-addition"));
            let parity = if t % 2 == 0 { "even" } else { "odd" };
            push(&alloc::format!("sc-addition-{parity}"), ip("sc-addition-even"));
            push(&alloc::format!("sc-mult-{parity}"), ip("sc-mult-even"));
            for z in 0..t as i64 {
                push("z-addition-mult", ip("z-addition-mult").z(z));
            }
            if rho.is_none() {
                push("gt-closed-form", ip("gt-closed-form"));
                for beta in 0..=2 {
                    push("sc-powersum", ip("sc-powersum").beta(beta));
                }
            }
        }
    };
    weighted(None);
    if let Some(table) = &random_table {
        weighted(Some(table));
    }

    push("NO", CheckParams::new().order(order("NO")));
    for t in 2..=t_no {
        for z in 0..t as i64 {
            push("z-NO", CheckParams::new().t(t).z(z).order(order("z-NO")));
        }
    }

    for t in 2..=9usize {
        for z in 0..t as i64 {
            if z == 0 && t % 2 == 0 {
                continue;
            }
            push("remark-counterexample", CheckParams::new().t(t).z(z));
        }
    }
    let (scan_n, scan_t) = if quick { (20, 5) } else { (30, 7) };
    push("littlewood-scan", CheckParams::new().t(scan_t).n_max(scan_n));
    jobs
}
