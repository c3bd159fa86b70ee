//! Acceptance gate. Each criterion runs in turn and prints one line:
//! `ACCEPT <n> <name> PASS|FAIL <elapsed> (limit <t>) <detail>`.
//! Exits nonzero if any criterion fails or exceeds its time limit.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use ffarc::campaign::{bound_corpus, par_map, sample_intervals, sample_lemma1, sample_split_merge, sample_unfold, Kind};
use ffarc::cli::main_with_args;
use ffarc::gen::trial_seed;
use ffarc::probe::{probe, ProbeMode, ProbeParams};
use ffarc_core::properties::expected_sequence;
use ffarc_core::{
    auto_cut, build_construction, check_lemma1, ff_color, ff_split_merge, load_profile, max_clique,
    unfold, ArcInstance, Geometry, Lemma1Options,
};

const TRIALS: usize = 10_000;
const SEED: u64 = 20_240_601;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).min(8)
}

/// `Err` carries the reason a criterion failed.
type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = main_with_args(std::iter::once("ffarc").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.split_whitespace().find_map(|tok| tok.strip_prefix(key)?.strip_prefix('='))
}

fn construction_golden() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for w in 3..=12 {
        let out = dir.path().join(format!("w{w}"));
        let out_s = out.to_str().unwrap();
        let (code, _) = run_cli(&["construct", "--w", &w.to_string(), "--out", out_s]);
        ensure(code == 0, || format!("w={w}: construct exited {code}"))?;

        let c = build_construction(w).map_err(|e| e.to_string())?;
        let instance = out.join("instance.txt");
        let order = out.join("order.txt");
        let (code, text) = run_cli(&[
            "run",
            "--instance",
            instance.to_str().unwrap(),
            "--order",
            order.to_str().unwrap(),
            "--special",
            &c.special.to_string(),
            "--cut",
            &c.cut_point.to_string(),
        ]);
        ensure(code == 0, || format!("w={w}: run exited {code}\n{text}"))?;

        let expected: Vec<String> = expected_sequence(w).iter().map(|c| c.to_string()).collect();
        let colors_line = format!("colors {}", expected.join(" "));
        ensure(text.lines().any(|l| l == colors_line), || format!("w={w}: expected `{colors_line}`\n{text}"))?;
        let used = field(&text, "used");
        ensure(used == Some(&(w + 1).to_string()), || format!("w={w}: used={used:?}"))?;
        let omega = field(&text, "omega");
        ensure(omega == Some(&w.to_string()), || format!("w={w}: omega={omega:?}"))?;
        let split = text.lines().find(|l| l.starts_with("split ")).unwrap_or("");
        ensure(
            field(split, "L") == Some(&(w - 1).to_string()) && field(split, "R") == Some(&w.to_string()),
            || format!("w={w}: split line `{split}`"),
        )?;

        // witness: c_1, a_2..a_w, pairwise overlapping, size w
        let mut names: Vec<&str> = c.clique_witness.iter().map(|&id| c.labels[id].as_str()).collect();
        names.sort_unstable();
        let mut want: Vec<String> = std::iter::once("c_1".to_string()).chain((2..=w).map(|k| format!("a_{k}"))).collect();
        want.sort_unstable();
        ensure(names == want, || format!("w={w}: witness labels {names:?}"))?;
        for &a in &c.clique_witness {
            for &b in &c.clique_witness {
                ensure(c.instance.overlaps(a, b), || format!("w={w}: witness {a},{b} disjoint"))?;
            }
        }
        let d = ff_split_merge(&c.instance, &c.order, c.special, c.cut_point)
            .map_err(|e| e.to_string())?
            .split
            .ok_or("no split diagnostics")?;
        ensure(d.left == (w - 1) as u32 && d.right == w as u32, || format!("w={w}: L={} R={}", d.left, d.right))?;
    }
    Ok("w = 3..12 exact".into())
}

fn lemma1_dominance() -> Outcome {
    let reports = par_map(TRIALS, jobs(), |i| {
        let t = sample_lemma1(trial_seed(SEED, i as u64));
        let r = check_lemma1(&t.unfolded, &t.order, t.pause_index, Lemma1Options::default());
        (t, r)
    });
    let mut violating = Vec::new();
    let mut total = 0;
    for (t, r) in reports {
        ensure(t.unfolded.len() <= 14, || format!("seed {}: n={}", t.seed, t.unfolded.len()))?;
        let r = r.map_err(|e| format!("seed {}: {e}", t.seed))?;
        ensure(r.omega <= 5, || format!("seed {}: omega={}", t.seed, r.omega))?;
        ensure(r.delta == 8 * r.omega as u32 + 1, || format!("seed {}: delta={}", t.seed, r.delta))?;
        if !r.passes() {
            total += r.violations.len();
            violating.push((t.seed, r.violations[0].to_string()));
        }
    }
    match violating.first() {
        None => Ok(format!("{TRIALS} trials, 0 violations")),
        Some((seed, first)) => Err(format!(
            "{} of {TRIALS} trials violate ({total} violations); first: seed {seed} {first}",
            violating.len()
        )),
    }
}

fn split_merge_equivalence() -> Outcome {
    let results = par_map(TRIALS, jobs(), |i| {
        let t = sample_split_merge(trial_seed(SEED, i as u64));
        let plain = ff_color(&t.arcs, &t.order).map_err(|e| e.to_string())?;
        let merged = ff_split_merge(&t.arcs, &t.order, t.special, t.cut_point).map_err(|e| e.to_string())?;
        if load_profile(&t.arcs).min_load == 0 {
            return Err(format!("seed {}: min_load 0", t.seed));
        }
        if plain.colors.colors() == merged.colors.colors() {
            Ok(())
        } else {
            Err(format!("seed {}: {:?} vs {:?}", t.seed, plain.colors.colors(), merged.colors.colors()))
        }
    });
    results.into_iter().collect::<Result<Vec<()>, _>>()?;
    Ok(format!("{TRIALS} trials identical"))
}

fn bound_safety() -> Outcome {
    let corpus = bound_corpus();
    ensure(corpus.len() == 20, || format!("corpus has {} instances", corpus.len()))?;
    let mut rows = 0;
    for (i, g) in corpus.into_iter().enumerate() {
        let n = g.element_count();
        ensure(n <= 7, || format!("corpus[{i}] has {n} elements"))?;
        let kind = if g.is_circular() { Kind::Arc } else { Kind::Interval };
        let params = ProbeParams {
            kind,
            n,
            size: g.domain_size(),
            seed: i as u64,
            mode: ProbeMode::Exhaustive,
            jobs: jobs(),
            instance: Some(g),
        };
        let report = probe(&params).map_err(|e| format!("corpus[{i}]: {e}"))?;
        ensure(report.rows.len() == (1..=n).product::<usize>(), || format!("corpus[{i}]: {} rows", report.rows.len()))?;
        ensure(report.failures() == 0, || format!("corpus[{i}]: {} FAIL rows", report.failures()))?;
        rows += report.rows.len();
    }
    for kind in [Kind::Arc, Kind::Interval] {
        let params = ProbeParams {
            kind,
            n: 12,
            size: 36,
            seed: SEED,
            mode: ProbeMode::Trials(TRIALS),
            jobs: jobs(),
            instance: None,
        };
        let report = probe(&params).map_err(|e| e.to_string())?;
        ensure(report.failures() == 0, || format!("{kind:?} trials: {} FAIL rows", report.failures()))?;
        rows += report.rows.len();
    }
    Ok(format!("{rows} verdict rows, 0 FAIL"))
}

fn helly() -> Outcome {
    let results = par_map(TRIALS, jobs(), |i| {
        let g = sample_intervals(trial_seed(SEED, i as u64));
        let omega = max_clique(&g).map_err(|e| e.to_string())?.omega;
        let load = load_profile(&g).max_load;
        if omega == load {
            Ok(())
        } else {
            Err(format!("trial {i}: omega={omega} max_load={load}"))
        }
    });
    results.into_iter().collect::<Result<Vec<()>, _>>()?;
    let triple = ArcInstance::from_spans(12, &[(0, 8), (4, 0), (8, 4)]).map_err(|e| e.to_string())?;
    let omega = max_clique(&triple).map_err(|e| e.to_string())?.omega;
    let load = load_profile(&triple).max_load;
    ensure(omega == 3 && load == 2, || format!("triple: omega={omega} max_load={load}"))?;
    Ok(format!("{TRIALS} interval instances; triple omega=3 max_load=2"))
}

fn unfold_accounting() -> Outcome {
    let results = par_map(TRIALS, jobs(), |i| {
        let g = sample_unfold(trial_seed(SEED, i as u64));
        let lp = load_profile(&g);
        let (u, map) = unfold(&g, auto_cut(&g)).map_err(|e| e.to_string())?;
        let check = u.len() == g.len() + lp.min_load
            && map.k() == lp.min_load
            && load_profile(&u).max_load == lp.max_load
            && map.split_pairs.iter().all(|p| !u.overlaps(p.left, p.right));
        if check {
            Ok(())
        } else {
            Err(format!("trial {i}: m={} K={} intervals={}", g.len(), lp.min_load, u.len()))
        }
    });
    results.into_iter().collect::<Result<Vec<()>, _>>()?;
    Ok(format!("{TRIALS} arc instances"))
}

fn probe_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let exe = std::env::current_exe().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for jobs in ["1", "8"] {
        let path = dir.path().join(format!("jobs{jobs}.csv"));
        let status = Command::new(&exe)
            .arg(AS_CLI)
            .args(["probe", "--seed", "77", "--trials", "2000", "--n", "12", "--size", "36"])
            .args(["--jobs", jobs, "--csv"])
            .arg(&path)
            .env_remove("FFARC_SEED")
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("--jobs {jobs}: {status}"))?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(files[0] == files[1], || "CSV differs between --jobs 1 and --jobs 8".into())?;
    Ok(format!("{} bytes identical", files[0].len()))
}

type Criterion = (usize, &'static str, Duration, fn() -> Outcome);

/// First argument that makes this binary behave as the `ffarc` CLI, so the
/// determinism check runs two separate processes.
const AS_CLI: &str = "--as-ffarc-cli";

fn main() {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    if args.get(1).is_some_and(|a| a == AS_CLI) {
        let cli_args = std::iter::once("ffarc".into()).chain(args.into_iter().skip(2));
        std::process::exit(main_with_args(cli_args, &mut std::io::stdout().lock()));
    }
    let criteria: [Criterion; 7] = [
        (1, "construction-golden", Duration::from_secs(1), construction_golden),
        (2, "lemma1-dominance", Duration::from_secs(30), lemma1_dominance),
        (3, "split-merge-equivalence", Duration::from_secs(30), split_merge_equivalence),
        (4, "bound-safety", Duration::from_secs(120), bound_safety),
        (5, "interval-helly", Duration::from_secs(10), helly),
        (6, "unfold-accounting", Duration::from_secs(10), unfold_accounting),
        (7, "probe-determinism", Duration::from_secs(60), probe_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "ACCEPT {n} {name} {} {:.2}s (limit {}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
