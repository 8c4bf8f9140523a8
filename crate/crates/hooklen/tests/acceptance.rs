//! Acceptance criteria 1 to 8, one line each. Every comparison is exact.
//!
//! Set `HOOKLEN_SEED` to replay the random hook-weight table.

use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use hooklen::runner::run_jobs;
use hooklen::{random_table, RANDOM_TABLE_LEN};
use hooklen_core::classes::{albion_structure_check, enumerate_class, in_bg_zt, in_bg_zt_via_quotient, ClassSpec};
use hooklen_core::littlewood::strip_rim_hooks;
use hooklen_core::partition::enumerate_partitions;
use hooklen_core::verify::{congruence_table, littlewood_property_scan, CheckParams, HookWeight};
use hooklen_core::{decompose, BoundaryWord, HookMultiset, Partition};

const GF_ORDER: usize = 40;
const GF_Y_CAP: usize = 4;
const ADD_ORDER: usize = 40;
const X_CAP: usize = 4;
const NO_ORDER: usize = 15;
const Z_NO_ORDER: usize = 20;
const U_CAP: usize = 3;
const CONG_N_MAX: usize = 60;
const BIJECTION_N_MAX: usize = 30;
const CHARACTERIZATION_N_MAX: usize = 30;
const REMARK_T_MAX: usize = 9;

/// Failures of one criterion (empty means pass) and a summary line.
struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl From<Vec<String>> for Outcome {
    fn from(failures: Vec<String>) -> Self {
        Outcome { failures, summary: String::new() }
    }
}

type Criterion = Box<dyn Fn() -> Outcome>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn goldens() -> Outcome {
    let mut bad = Vec::new();
    let lambda = p("4,3,3,2");
    let h = HookMultiset::from_values([2, 1, 4, 3, 1, 5, 4, 2, 7, 6, 4, 1]);
    if lambda.hooks(1) != h {
        bad.push(format!("H(4,3,3,2) = {:?}", lambda.hooks(1).values()));
    }
    if lambda.hooks(3) != HookMultiset::from_values([3, 6]) {
        bad.push(format!("H_3(4,3,3,2) = {:?}", lambda.hooks(3).values()));
    }
    let f = lambda.frobenius();
    if f.arms() != [3, 1, 0] || f.legs() != [3, 2, 0] {
        bad.push(format!("Frobenius rows {:?} / {:?}", f.arms(), f.legs()));
    }
    let mu = p("5,5,2,2");
    let w = BoundaryWord::encode(&mu);
    let letters = |r: std::ops::Range<isize>| r.map(|i| if w.letter(i) { '1' } else { '0' }).collect::<String>();
    let (left, right) = (letters(-7..0), letters(0..8));
    if left != "0001100" || right != "11100111" {
        bad.push(format!("s(5,5,2,2) = …{left}|{right}…"));
    }
    let d = decompose(&mu, 3);
    if *d.core() != p("2") || d.quotient() != [p("2"), p("1"), p("1")] {
        bad.push(format!("Φ_3(5,5,2,2) = ({}; {:?})", d.core(), d.quotient()));
    }
    bad.into()
}

fn bijections() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=BIJECTION_N_MAX {
        for lambda in enumerate_partitions(n) {
            let w = BoundaryWord::encode(&lambda);
            if w.decode() != lambda {
                bad.push(format!("word roundtrip ({lambda})"));
            }
            for t in 2..=7 {
                if decompose(&lambda, t).core() != &strip_rim_hooks(&lambda, t) {
                    bad.push(format!("rim-hook core ({lambda}) t={t}"));
                }
            }
            if bad.len() > 5 {
                return bad.into();
            }
        }
    }
    // P1 to P3 and the inverse map.
    let scan = littlewood_property_scan(BIJECTION_N_MAX, 2..=7).unwrap();
    if !scan.passed() {
        bad.push(scan.to_string());
    }
    Outcome {
        failures: bad,
        summary: scan.notes.join("; "),
    }
}

fn characterizations() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for t in 2..=7 {
        for z in 0..t {
            for n in 0..=CHARACTERIZATION_N_MAX {
                for lambda in enumerate_class(ClassSpec::ZAsymmetric(z as i64), n) {
                    checked += 1;
                    if in_bg_zt(&lambda, z, t) != in_bg_zt_via_quotient(&lambda, z, t).unwrap() {
                        bad.push(format!("membership ({lambda}) z={z} t={t}"));
                    }
                    let albion = albion_structure_check(&lambda, z, t).unwrap();
                    if !albion.holds {
                        bad.push(format!("structure ({lambda}) z={z} t={t}"));
                    }
                    if bad.len() > 5 {
                        return bad.into();
                    }
                }
            }
        }
    }
    Outcome {
        failures: bad,
        summary: format!("{checked} (partition, z, t) triples"),
    }
}

fn jobs_outcome(jobs: Vec<(String, CheckParams)>) -> Outcome {
    let count = jobs.len();
    let mut bad = Vec::new();
    for (r, (id, params)) in run_jobs(&jobs, None).into_iter().zip(&jobs) {
        match r {
            Ok(r) if r.report.passed() => {}
            Ok(r) => {
                bad.push(r.report.to_string());
                bad.extend(r.report.notes.iter().map(|n| format!("    {n}")));
            }
            Err(e) => bad.push(format!("{id} {params:?}: {e}")),
        }
    }
    Outcome {
        failures: bad,
        summary: format!("{count} checks"),
    }
}

fn congruences() -> Outcome {
    let mut bad = Vec::new();
    let a3 = congruence_table("congP", &CheckParams::new().t(3).n_max(3)).unwrap();
    if a3.brute[3] != 3 || !a3.brute[3].is_multiple_of(3) {
        bad.push(format!("a_3(3) = {}", a3.brute[3]));
    }
    let a2 = congruence_table("sc-cong-even", &CheckParams::new().t(2).n_max(4)).unwrap();
    if a2.brute[4] != 2 || a2.closed[4] != 2 {
        bad.push(format!("a*_2(4) = {} vs {}", a2.brute[4], a2.closed[4]));
    }
    let mut jobs = Vec::new();
    for t in 2..=10usize {
        let cp = || CheckParams::new().t(t).n_max(CONG_N_MAX);
        for id in ["congP", "congP-parts", "bt-star-cong", "dd-cong"] {
            jobs.push((id.to_string(), cp()));
        }
        let sc = if t % 2 == 0 { "sc-cong-even" } else { "sc-cong-odd" };
        jobs.push((sc.to_string(), cp()));
        for z in 0..t as i64 {
            jobs.push(("z-cong".to_string(), cp().z(z)));
        }
    }
    let mut out = jobs_outcome(jobs);
    bad.append(&mut out.failures);
    out.failures = bad;
    out
}

fn generating_functions() -> Outcome {
    let mut jobs = Vec::new();
    let mut push = |id: &str, p: CheckParams| jobs.push((id.to_string(), p.order(GF_ORDER)));
    for z in -7..=7 {
        push("pz-gf", CheckParams::new().z(z));
    }
    for t in 2..=7usize {
        let sc = if t % 2 == 0 { "sc-gf-y-even" } else { "sc-gf-y-odd" };
        push(sc, CheckParams::new().t(t).degree_cap(GF_Y_CAP));
        push("dd-gf-y", CheckParams::new().t(t).degree_cap(GF_Y_CAP));
        // The BG_t product holds for odd t; for even t, BG_t = SC.
        if t % 2 == 1 {
            push("bgt-gf", CheckParams::new().t(t));
        }
        for z in 0..t as i64 {
            push("pz-core-gf", CheckParams::new().t(t).z(z));
            push("z-gf-y", CheckParams::new().t(t).z(z).degree_cap(GF_Y_CAP));
        }
    }
    jobs_outcome(jobs)
}

fn addition_multiplication(table: &HookWeight) -> Outcome {
    let mut jobs = Vec::new();
    let weights = [None, Some(HookWeight::Power(2)), Some(table.clone())];
    for t in 2..=6usize {
        let parity = if t % 2 == 0 { "even" } else { "odd" };
        for w in &weights {
            let base = || {
                let p = CheckParams::new().t(t).order(ADD_ORDER);
                match w {
                    Some(w) => p.rho1(w.clone()).rho2(w.clone()),
                    None => p,
                }
            };
            jobs.push(("han-ji-addition".to_string(), base()));
            jobs.push((format!("sc-addition-{parity}"), base()));
            jobs.push((format!("sc-mult-{parity}"), base()));
            for z in 0..t as i64 {
                jobs.push(("z-addition-mult".to_string(), base().z(z).degree_cap(X_CAP)));
            }
        }
        jobs.push(("gt-closed-form".to_string(), CheckParams::new().t(t).order(ADD_ORDER)));
        for beta in 0..=2 {
            jobs.push(("sc-powersum".to_string(), CheckParams::new().t(t).beta(beta).order(ADD_ORDER)));
        }
    }
    jobs_outcome(jobs)
}

fn nekrasov_okounkov() -> Outcome {
    let mut jobs = vec![("NO".to_string(), CheckParams::new().order(NO_ORDER).degree_cap(U_CAP))];
    for t in 2..=5usize {
        for z in 0..t as i64 {
            jobs.push(("z-NO".to_string(), CheckParams::new().t(t).z(z).order(Z_NO_ORDER).degree_cap(U_CAP)));
        }
    }
    jobs_outcome(jobs)
}

fn counterexamples() -> Outcome {
    let mut jobs = Vec::new();
    for t in 2..=REMARK_T_MAX {
        for z in 0..t as i64 {
            let odd_gap = (t as i64 - z) % 2 == 1;
            if odd_gap || z > 0 {
                jobs.push(("remark-counterexample".to_string(), CheckParams::new().t(t).z(z)));
            }
        }
    }
    jobs_outcome(jobs)
}

fn main() -> ExitCode {
    let seed = std::env::var("HOOKLEN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).unwrap().as_nanos() as u64);
    println!("random hook-weight table seed {seed} (HOOKLEN_SEED)");
    let table = random_table(seed, RANDOM_TABLE_LEN);

    let criteria: Vec<(&str, Criterion)> = vec![
        ("goldens: hooks, Frobenius rows, boundary word, decomposition", Box::new(goldens)),
        ("bijections and Littlewood laws, n <= 30, t in 2..=7", Box::new(bijections)),
        ("BG_{z,t} characterizations and structure, n <= 30, t in 2..=7", Box::new(characterizations)),
        ("congruence scans, n <= 60, t in 2..=10", Box::new(congruences)),
        ("generating functions at N = 40, t in 2..=7", Box::new(generating_functions)),
        ("addition and multiplication theorems at N = 40, t in 2..=6", Box::new(move || addition_multiplication(&table))),
        ("Nekrasov-Okounkov at N = 15 and N = 20, u-degree 3", Box::new(nekrasov_okounkov)),
        ("hook-count counterexamples, t <= 9", Box::new(counterexamples)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} {name} ({:.1}s)", i + 1, start.elapsed().as_secs_f64());
        if !out.summary.is_empty() {
            println!("    {}", out.summary);
        }
        for line in &out.failures {
            println!("    {line}");
        }
        if !out.failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
