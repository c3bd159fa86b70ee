//! Command-line interface. [`execute`] does the work and writes to any sink
//! so commands can be driven in-process; the binary maps its result onto the
//! exit-code contract (0 pass, 1 check failed, 2 usage or parse error).

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ffarc_core::{
    auto_cut, build_construction, check_bounds, check_lemma1, expand_order, ff_color,
    ff_split_merge, load_profile, max_clique_with_limit, unfold, ElementId, Geometry, Instance,
    IntervalInstance, Lemma1Options, PresentationOrder,
};
use thiserror::Error;

use crate::campaign::{par_map, sample_lemma1, Kind};
use crate::format::{
    parse_document, parse_order, render_colors, render_instance, render_labeled, render_mapping,
    render_order, Document, ParseError,
};
use crate::gen::{random_order, rng_for, trial_seed};
use crate::probe::{probe, ProbeError, ProbeMode, ProbeParams};

#[derive(Debug, Parser)]
#[command(name = "ffarc", version, about = "First-Fit coloring experiments on interval and circular-arc graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color an instance with First-Fit and check the color bounds.
    Run(RunArgs),
    /// Sweep random trials or all orders and emit CSV.
    Probe(ProbeArgs),
    /// Compare a paused run against the plain run.
    Lemma1(Lemma1Args),
    /// Write the forcing construction for a given clique size.
    Construct(ConstructArgs),
    /// Report maximum clique and point loads.
    Analyze(AnalyzeArgs),
    /// Cut a circular-arc instance into an interval instance.
    Unfold(UnfoldArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// `given`, `seed:<n>`, an explicit `order ...` line, or a file holding one.
    #[arg(long, default_value = "given")]
    pub order: String,
    /// Color this arc through the left/right/merge steps and report them.
    #[arg(long)]
    pub special: Option<ElementId>,
    /// Cut point for `--special` (`auto` = minimum-load point).
    #[arg(long, default_value = "auto")]
    pub cut: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Arc,
    Interval,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Arc => Kind::Arc,
            KindArg::Interval => Kind::Interval,
        }
    }
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, value_enum, default_value = "arc")]
    pub kind: KindArg,
    /// Elements per generated instance.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Circle (or line) size of generated instances.
    #[arg(long = "size", default_value_t = 36)]
    pub size: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Sweep every order of one instance instead of random trials.
    #[arg(long)]
    pub exhaustive: bool,
    /// Fixed instance for `--exhaustive`.
    #[arg(long)]
    pub instance: Option<PathBuf>,
    #[arg(long, env = "FFARC_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Lemma1Args {
    /// Interval instance, or arc instance to unfold. Without it a seeded
    /// random campaign runs.
    #[arg(long)]
    pub instance: Option<PathBuf>,
    #[arg(long, default_value = "given")]
    pub order: String,
    /// Steps completed before the pinned pair (interval instances).
    #[arg(long)]
    pub pause: Option<usize>,
    /// Arc whose pieces are pinned (arc instances; default: first split arc).
    #[arg(long)]
    pub special: Option<ElementId>,
    #[arg(long, default_value = "auto")]
    pub cut: String,
    /// Pinned color (default 8ω+1).
    #[arg(long)]
    pub delta: Option<u32>,
    /// Require the pinned pair to be the unique leftmost/rightmost intervals.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, env = "FFARC_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub w: usize,
    /// Directory receiving instance.txt, order.txt and expected.txt.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub instance: PathBuf,
}

#[derive(Debug, Args)]
pub struct UnfoldArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, default_value = "auto")]
    pub cut: String,
    /// Also expand this order over the arcs.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("order: {0}")]
    Order(ParseError),
    #[error(transparent)]
    Core(#[from] ffarc_core::Error),
    #[error(transparent)]
    Probe(#[from] ProbeError),
    #[error("{0}")]
    Usage(String),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load(path: &Path) -> Result<Document, CliError> {
    parse_document(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn resolve_order(arg: &str, doc: &Document) -> Result<PresentationOrder, CliError> {
    let n = doc.instance.element_count();
    let arg = arg.trim();
    if arg == "given" {
        return Ok(doc.order.clone().unwrap_or_else(|| PresentationOrder::identity(n)));
    }
    if let Some(seed) = arg.strip_prefix("seed:") {
        let seed: u64 = seed.parse().map_err(|_| CliError::Usage(format!("bad order seed {seed:?}")))?;
        return Ok(random_order(&mut rng_for(seed), n));
    }
    if arg.starts_with("order") || arg.starts_with(|c: char| c.is_ascii_digit()) {
        return parse_order(arg, n).map_err(CliError::Order);
    }
    let path = Path::new(arg);
    parse_order(&read(path)?, n).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn resolve_cut(arg: &str, g: &ffarc_core::ArcInstance) -> Result<usize, CliError> {
    if arg == "auto" {
        return Ok(auto_cut(g));
    }
    arg.parse().map_err(|_| CliError::Usage(format!("--cut expects a position or `auto`, got {arg:?}")))
}

fn arcs_of<'a>(doc: &'a Document, what: &str) -> Result<&'a ffarc_core::ArcInstance, CliError> {
    match &doc.instance {
        Instance::Arcs(g) => Ok(g),
        Instance::Intervals(_) => Err(CliError::Usage(format!("{what} needs a circular-arc instance"))),
    }
}

/// Runs one command. `Ok(true)` means every check passed.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Run(a) => cmd_run(a, out),
        Command::Probe(a) => cmd_probe(a, out),
        Command::Lemma1(a) => cmd_lemma1(a, out),
        Command::Construct(a) => cmd_construct(a, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Unfold(a) => cmd_unfold(a, out),
    }
}

fn cmd_run(a: RunArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let doc = load(&a.instance)?;
    let order = resolve_order(&a.order, &doc)?;
    let g = &doc.instance;
    let run = ff_color(g, &order)?;
    run.colors.verify_proper(g, &order)?;
    let verdicts = check_bounds(g, &order)?;
    let omega = verdicts.first().map_or(0, |v| v.omega);
    let k = load_profile(g).min_load;
    writeln!(out, "{}", render_order(&order))?;
    writeln!(out, "{}", render_colors(&run.colors))?;
    writeln!(out, "used={} omega={} K={}", run.colors_used(), omega, k)?;
    if let Some(special) = a.special {
        let arcs = arcs_of(&doc, "--special")?;
        let cut = resolve_cut(&a.cut, arcs)?;
        let sm = ff_split_merge(arcs, &order, special, cut)?;
        let d = sm.split.expect("special is in the order");
        writeln!(out, "split special={} cut={} L={} R={} merged={}", d.special, d.cut_point, d.left, d.right, d.merged)?;
        if sm.colors != run.colors {
            writeln!(out, "MISMATCH split/merge differs from plain First-Fit")?;
            return Ok(false);
        }
    }
    for v in &verdicts {
        writeln!(out, "{v}")?;
    }
    Ok(verdicts.iter().all(|v| v.satisfied))
}

fn cmd_probe(a: ProbeArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let instance = match &a.instance {
        Some(p) => Some(load(p)?.instance),
        None => None,
    };
    let params = ProbeParams {
        kind: a.kind.into(),
        n: a.n,
        size: a.size,
        seed: a.seed,
        mode: if a.exhaustive { ProbeMode::Exhaustive } else { ProbeMode::Trials(a.trials) },
        jobs: a.jobs,
        instance,
    };
    let report = probe(&params)?;
    let csv = report.to_csv();
    match &a.csv {
        Some(path) => write_file(path, &csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    eprintln!(
        "probe seed={} rows={} max_used={} fails={}",
        a.seed,
        report.rows.len(),
        report.max_colors_used(),
        report.failures()
    );
    Ok(report.failures() == 0)
}

fn lemma1_target(a: &Lemma1Args, doc: &Document) -> Result<(IntervalInstance, PresentationOrder, usize), CliError> {
    let order = resolve_order(&a.order, doc)?;
    match &doc.instance {
        Instance::Intervals(g) => {
            let pause = a.pause.ok_or_else(|| CliError::Usage("--pause is required for interval instances".into()))?;
            Ok((g.clone(), order, pause))
        }
        Instance::Arcs(g) => {
            let cut = resolve_cut(&a.cut, g)?;
            let (unfolded, mapping) = unfold(g, cut)?;
            let pair = match a.special {
                Some(s) => *mapping
                    .split_of(s)
                    .ok_or_else(|| CliError::Usage(format!("arc {s} does not cross cut {cut}")))?,
                None => *mapping
                    .split_pairs
                    .first()
                    .ok_or_else(|| CliError::Usage(format!("no arc crosses cut {cut}")))?,
            };
            let expanded = expand_order(&order, &mapping)?;
            let pause = expanded.position_of(pair.left).expect("left piece is present");
            Ok((unfolded, expanded, pause))
        }
    }
}

fn cmd_lemma1(a: Lemma1Args, out: &mut dyn Write) -> Result<bool, CliError> {
    let opts = Lemma1Options { delta: a.delta, strict_extremal: a.strict };
    if let Some(path) = &a.instance {
        let doc = load(path)?;
        let (g, order, pause) = lemma1_target(&a, &doc)?;
        let r = check_lemma1(&g, &order, pause, opts)?;
        writeln!(
            out,
            "LEMMA1 pause={} delta={} omega={} compared={} {}",
            r.pause_index,
            r.delta,
            r.omega,
            r.compared(),
            if r.passes() { "PASS" } else { "FAIL" }
        )?;
        writeln!(out, "{}", render_order(&r.order))?;
        writeln!(out, "paused {}", render_colors(&r.paused))?;
        writeln!(out, "nonpaused {}", render_colors(&r.nonpaused))?;
        for v in &r.violations {
            writeln!(out, "{v}")?;
        }
        return Ok(r.passes());
    }

    let reports = par_map(a.trials, a.jobs, |i| {
        let t = sample_lemma1(trial_seed(a.seed, i as u64));
        check_lemma1(&t.unfolded, &t.order, t.pause_index, opts).map(|r| (t, r))
    });
    let mut violating = 0;
    let mut total = 0;
    let mut skipped = 0;
    let mut details = String::new();
    for res in reports {
        let (t, r) = match res {
            Ok(x) => x,
            // strict mode: trials whose pinned pair is not extremal are out of scope
            Err(ffarc_core::Error::NotExtremal { .. }) if a.strict => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if r.passes() {
            continue;
        }
        violating += 1;
        total += r.violations.len();
        if violating <= 5 {
            writeln!(details, "TRIAL seed={} pause={} delta={}", t.seed, r.pause_index, r.delta).unwrap();
            details.push_str(&render_instance(&Instance::Intervals(t.unfolded.clone())));
            writeln!(details, "{}", render_order(&r.order)).unwrap();
            for v in &r.violations {
                writeln!(details, "{v}").unwrap();
            }
        }
    }
    writeln!(
        out,
        "LEMMA1 seed={} trials={} skipped={} violating_trials={} violations={} {}",
        a.seed,
        a.trials,
        skipped,
        violating,
        total,
        if violating == 0 { "PASS" } else { "FAIL" }
    )?;
    out.write_all(details.as_bytes())?;
    Ok(violating == 0)
}

fn cmd_construct(a: ConstructArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let c = build_construction(a.w)?;
    let instance = Instance::Arcs(c.instance.clone());
    let mut text = format!("# forcing construction, w = {}; delta = arc {}, cut at {}\n", c.w, c.special, c.cut_point);
    text.push_str(&render_labeled(&instance, &c.labels));
    let order = format!("{}\n", render_order(&c.order));
    let expected = format!("{}\n", render_colors(&c.expected));
    match &a.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
            write_file(&dir.join("instance.txt"), &text)?;
            write_file(&dir.join("order.txt"), &order)?;
            write_file(&dir.join("expected.txt"), &expected)?;
            writeln!(out, "construct w={} arcs={} special={} cut={} -> {}", c.w, c.instance.len(), c.special, c.cut_point, dir.display())?;
        }
        None => {
            out.write_all(text.as_bytes())?;
            out.write_all(order.as_bytes())?;
            out.write_all(expected.as_bytes())?;
        }
    }
    Ok(true)
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let doc = load(&a.instance)?;
    let g = &doc.instance;
    let lp = load_profile(g);
    let clique = max_clique_with_limit(g, ffarc_core::analysis::MAX_CLIQUE_LIMIT)?;
    writeln!(
        out,
        "n={} omega={} max_load={} min_load={} argmin={} argmax={}",
        g.element_count(),
        clique.omega,
        lp.max_load,
        lp.min_load,
        lp.argmin_point,
        lp.argmax_point
    )?;
    let witness: Vec<String> = clique.witness.iter().map(|x| x.to_string()).collect();
    writeln!(out, "witness {}", witness.join(" "))?;
    let loads: Vec<String> = lp.loads.iter().map(|x| x.to_string()).collect();
    writeln!(out, "loads {}", loads.join(" "))?;
    Ok(true)
}

fn cmd_unfold(a: UnfoldArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let doc = load(&a.instance)?;
    let arcs = arcs_of(&doc, "unfold")?;
    let cut = resolve_cut(&a.cut, arcs)?;
    let (g, mapping) = unfold(arcs, cut)?;
    out.write_all(render_instance(&Instance::Intervals(g)).as_bytes())?;
    out.write_all(render_mapping(&mapping).as_bytes())?;
    if let Some(arg) = &a.order {
        let order = resolve_order(arg, &doc)?;
        writeln!(out, "{}", render_order(&expand_order(&order, &mapping)?))?;
    }
    Ok(true)
}

/// Parses `args`, executes, prints errors, and returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
