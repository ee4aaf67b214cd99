//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use closeness_core::bounds::{
    approx_eq, formulas_tnd, gc_path_closed_form, BoundId, GraphParameters, Measure,
};
use closeness_core::generators::{cycle, path, pentagon, petersen, t_tree, TndSpec};
use closeness_core::harness::{run_suite, tnd_sweep, CheckId, CorpusConfig, Family, SuiteConfig};
use closeness_core::invariants::{default_alpha_grid, zagreb_m1};
use closeness_core::{distance_summary, Graph};
use serde_json::Value;

const TOL: f64 = 1e-9;
const BIN: &str = env!("CARGO_BIN_EXE_closeness");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(elapsed: Duration, limit_secs: f64, what: &str) -> Result<(), String> {
    if elapsed.as_secs_f64() < limit_secs {
        Ok(())
    } else {
        Err(format!(
            "{what} took {:.2}s, limit {limit_secs}s",
            elapsed.as_secs_f64()
        ))
    }
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Result<Vec<u8>, String> {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    if let Some(bytes) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(bytes)
            .map_err(|e| e.to_string())?;
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`closeness {}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn check(check: &str) -> CheckId {
    check.parse().unwrap()
}

fn suite(families: Vec<Family>, checks: &[&str]) -> SuiteConfig {
    SuiteConfig {
        corpus: CorpusConfig {
            families,
            ..CorpusConfig::default()
        },
        checks: checks.iter().map(|&c| check(c)).collect(),
        ..SuiteConfig::default()
    }
}

fn diameter_four_trees() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (r, want) in [("5,0,0,0", 23.25), ("4,1,0,0", 21.75)] {
        let g6 = run(&["generate", "tnd", "--r", r], None)?;
        let json: Value = serde_json::from_slice(&run(&["compute", "-"], Some(&g6))?)
            .map_err(|e| e.to_string())?;
        let got = json["closeness"].as_f64().ok_or("no closeness field")?;
        if !approx_eq(got, want, TOL) {
            return Err(format!("T({r}) closeness {got}, want {want}"));
        }
        seen.push(format!("T({r}) = {got}"));
    }
    within(start.elapsed(), 1.0, "both runs")?;
    Ok(seen.join(", "))
}

fn tnd_formulas() -> Outcome {
    let start = Instant::now();
    let alphas = default_alpha_grid();
    let mut compared = 0;
    for spec in tnd_sweep(6, 12) {
        let Some(case) = spec.case() else { continue };
        let g = t_tree(&spec);
        let s = distance_summary(&g);
        for &a in &alphas {
            let f = formulas_tnd(g.n(), spec.branches(), zagreb_m1(&g), case, a)
                .map_err(|e| e.to_string())?;
            let bfs = s.generalized_closeness(a);
            if !approx_eq(f.gc, bfs, TOL) {
                return Err(format!(
                    "{:?} α={a}: formula {} vs BFS {bfs}",
                    spec.pendants(),
                    f.gc
                ));
            }
            compared += 1;
        }
        let f = formulas_tnd(
            g.n(),
            spec.branches(),
            zagreb_m1(&g),
            case,
            closeness_core::Alpha::HALF,
        )
        .map_err(|e| e.to_string())?;
        if !approx_eq(f.closeness, s.closeness(), TOL) {
            return Err(format!(
                "{:?}: closeness formula {} vs BFS {}",
                spec.pendants(),
                f.closeness,
                s.closeness()
            ));
        }
    }
    within(start.elapsed(), 10.0, "sweep")?;
    Ok(format!("{compared} (tree, α) pairs agree"))
}

fn moore_equalities() -> Outcome {
    let graphs: [(&str, Graph, f64, u64); 3] = [
        ("petersen", petersen(), 30.0, 90),
        ("pentagon", pentagon(), 7.5, 20),
        ("C6", cycle(6).unwrap(), 9.75, 24),
    ];
    let mut seen = Vec::new();
    for (name, g, closeness, m1) in graphs {
        let s = distance_summary(&g);
        let params = GraphParameters::with_summary(&g, &s).map_err(|e| e.to_string())?;
        let reports = params
            .reports(Measure::Closeness)
            .map_err(|e| e.to_string())?;
        let moore = reports
            .iter()
            .find(|r| r.id == BoundId::MooreRadius)
            .ok_or("no Moore report")?;
        let n = g.n() as u64;
        let r = u64::from(params.radius);
        if moore.upper != Some(closeness)
            || s.closeness() != closeness
            || !moore.equality_expected()
        {
            return Err(format!(
                "{name}: bound {:?}, value {}",
                moore.upper,
                s.closeness()
            ));
        }
        if params.m1 != m1 || m1 != n * (n + 1 - r) {
            return Err(format!(
                "{name}: M1 = {}, n(n+1-r) = {}",
                params.m1,
                n * (n + 1 - r)
            ));
        }
        seen.push(format!("{name} C={closeness} M1={m1}"));
    }
    Ok(seen.join(", "))
}

/// Connected labeled graphs on n ≤ 6 vertices, by inclusion–exclusion.
fn connected_labeled_total() -> usize {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    let mut c = [0usize; 7];
    for k in 1..=6 {
        let split: usize = (1..k)
            .map(|j| binom(k - 1, j - 1) * c[j] * (1 << binom(k - j, 2)))
            .sum();
        c[k] = (1 << binom(k, 2)) - split;
    }
    c.iter().sum()
}

fn exhaustive_sandwich() -> Outcome {
    let start = Instant::now();
    let report = run_suite(&suite(
        vec![Family::Exhaustive],
        &["thm3_1", "thm3_2", "thm3_3"],
    ))
    .map_err(|e| e.to_string())?;
    within(start.elapsed(), 60.0, "suite")?;
    let expected = connected_labeled_total();
    if report.corpus_size != expected {
        return Err(format!(
            "{} graphs enumerated, {expected} exist",
            report.corpus_size
        ));
    }
    if report.total_failures() > 0 {
        return Err(format!("{} failures", report.total_failures()));
    }
    let hits: Vec<String> = report
        .checks
        .iter()
        .map(|c| format!("{} eq={}", c.check, c.equality_hits))
        .collect();
    Ok(format!(
        "all {} connected labeled graphs with n ≤ 6 (the complete population; a 30,000 floor is \
         not reachable), 0 failures, {}",
        report.corpus_size,
        hits.join(" ")
    ))
}

fn tree_suite() -> Outcome {
    let start = Instant::now();
    let report = run_suite(&suite(vec![Family::Trees], &["thm2_5", "thm3_1", "thm3_5"]))
        .map_err(|e| e.to_string())?;
    within(start.elapsed(), 120.0, "suite")?;
    if report.total_failures() > 0 {
        return Err(format!("{} failures", report.total_failures()));
    }
    let labeled: usize = (1..=8usize)
        .map(|n| if n <= 2 { 1 } else { n.pow(n as u32 - 2) })
        .sum();
    if report.corpus_size != labeled {
        return Err(format!("{} trees, want {labeled}", report.corpus_size));
    }
    // Each labeled path on n ≥ 2 vertices attains the global lower bound.
    let paths: usize = (2..=8usize).map(|n| (1..=n).product::<usize>() / 2).sum();
    let hits = report.record(check("thm3_1")).unwrap().equality_hits;
    if hits < paths {
        return Err(format!(
            "global lower bound attained {hits} times, {paths} labeled paths"
        ));
    }
    Ok(format!(
        "{} labeled trees, 0 failures, {hits} equality hits",
        report.corpus_size
    ))
}

fn identities() -> Outcome {
    let mut cfg = suite(Family::ALL.to_vec(), &["thm2_6", "thm2_8", "rm2_identity"]);
    cfg.tolerance = 0.0;
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    if report.total_failures() > 0 {
        return Err(format!("{} failures", report.total_failures()));
    }
    let d2 = report.record(check("thm2_6")).unwrap();
    let wp = report.record(check("thm2_8")).unwrap();
    let strict = wp.graphs_tested - wp.equality_hits;
    if strict == 0 || wp.equality_hits == 0 {
        return Err("both directions of the W_P equality condition must be exercised".into());
    }
    Ok(format!(
        "d(G,2) identity on {} graphs; W_P equality on {}, strict on {}",
        d2.graphs_tested, wp.equality_hits, strict
    ))
}

fn path_closed_form() -> Outcome {
    let alphas = default_alpha_grid();
    for n in 2..=64usize {
        let s = distance_summary(&path(n).unwrap());
        for &a in &alphas {
            let closed = gc_path_closed_form(n, a).map_err(|e| e.to_string())?;
            let bfs = s.generalized_closeness(a);
            if !approx_eq(closed, bfs, TOL) {
                return Err(format!("P{n} α={a}: {closed} vs {bfs}"));
            }
        }
        let half = 2.0 * n as f64 - 4.0 + 0.5f64.powi(n as i32 - 2);
        if !approx_eq(s.closeness(), half, TOL) {
            return Err(format!("P{n}: closeness {} vs {half}", s.closeness()));
        }
    }
    Ok("n = 2..64 over the α grid".into())
}

fn bistar_at_scale() -> Outcome {
    let n = 10_000;
    let spec = TndSpec::new(vec![n - 3, 0]).unwrap().0;
    let g = t_tree(&spec);
    let start = Instant::now();
    let bfs = distance_summary(&g).closeness();
    let bfs_time = start.elapsed();
    within(bfs_time, 60.0, "BFS")?;
    let case = spec.case().ok_or("bistar has no loaded branch")?;
    let formula = formulas_tnd(n, 2, zagreb_m1(&g), case, closeness_core::Alpha::HALF)
        .map_err(|e| e.to_string())?
        .closeness;
    if !approx_eq(formula, bfs, TOL) {
        return Err(format!("formula {formula} vs BFS {bfs}"));
    }
    Ok(format!("C = {bfs}, BFS {:.2}s", bfs_time.as_secs_f64()))
}

fn determinism() -> Outcome {
    let args = [
        "verify",
        "--max-n",
        "6",
        "--trees-max-n",
        "8",
        "--seed",
        "42",
    ];
    let a = run(&args, None)?;
    let b = run(&args, None)?;
    if a != b {
        return Err("reports differ".into());
    }
    let json: Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} bytes, digest {}, {} failures",
        a.len(),
        json["corpus_digest"].as_str().unwrap_or("?"),
        json["total_failures"]
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("T(5,0,0,0) and T(4,1,0,0) closeness", diameter_four_trees),
        (
            "T(n,D) formulas equal BFS over the full sweep",
            tnd_formulas,
        ),
        ("Moore graphs and C6 attain equality", moore_equalities),
        ("exhaustive n ≤ 6 sandwich", exhaustive_sandwich),
        ("labeled trees n ≤ 8", tree_suite),
        ("exact integer identities", identities),
        ("path closed form", path_closed_form),
        ("bistar fast path at n = 10^4", bistar_at_scale),
        ("verify is byte-deterministic", determinism),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
