//! `loccoh`: local cohomology multiplicities, Ext multiplicities, Bott's
//! algorithm and the verification suites from the command line.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on a usage error.

mod render;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use loccoh_core::bott::bott;
use loccoh_core::characters::{
    dim_schur, enumerate_weight_set, filtration_check, ideal_character, jxp_character, space_character, witness_weight,
    Multiset, SimpleLabel,
};
use loccoh_core::extmult::{ext_jxp, ext_witness, ExtRoute};
use loccoh_core::loccoh::{character_of, hpq, hpq_from_ext, lcd, lcd_closed, parse_label, top_module_support};
use loccoh_core::{DominantWeight, Partition, Space};

use render::{tuple, Format, Rendered};
use verify::Limits;

#[derive(Parser)]
#[command(
    name = "loccoh",
    version,
    about = "Local cohomology with determinantal, symmetric and Pfaffian support"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The coefficients of H_p(q) on the intersection homology modules D_s.
    ///
    /// General matrices support only the closed formula.
    Hpq {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        p: usize,
        /// `closed` evaluates the closed formula; `enum` and `bott` assemble
        /// H_p(q) from Ext multiplicities computed by that route.
        #[arg(long, value_enum, default_value_t = Route::Closed)]
        route: Route,
    },
    /// Local cohomological dimension and the modules carrying it.
    Lcd {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        p: usize,
    },
    /// Witness multiplicities in Ext(J_p, S), or the graded character of Ext(J_{x,p}, S).
    Ext(ExtArgs),
    /// Bott's algorithm for S_beta R (x) S_alpha Q on the Grassmannian of k-dimensional quotients.
    Bott(BottArgs),
    /// Weight sets of simple modules, or truncated characters of S, its ideals and subquotients.
    Character(CharacterArgs),
    /// Checks the filtration of S by the ideals I_r against the characters of J_{x,p}.
    FiltrationCheck {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        p: usize,
        /// Total-size truncation.
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Runs a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceKind {
    General,
    Skew,
    Symm,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long, value_enum)]
    space: SpaceKind,
    /// Size of the square matrices (columns, for general matrices).
    #[arg(long)]
    n: usize,
    /// Rows of general matrices; defaults to n.
    #[arg(long)]
    m: Option<usize>,
}

impl SpaceArgs {
    fn space(&self) -> Result<Space, CliError> {
        match (self.space, self.m) {
            (SpaceKind::General, m) => Ok(Space::general(m.unwrap_or(self.n), self.n)?),
            (_, Some(_)) => Err(CliError::Usage("--m applies only to --space general".into())),
            (SpaceKind::Skew, None) => Ok(Space::skew(self.n)?),
            (SpaceKind::Symm, None) => Ok(Space::symm(self.n)?),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Closed,
    Enum,
    Bott,
}

impl From<Route> for ExtRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Closed => ExtRoute::Closed,
            Route::Enum => ExtRoute::Enum,
            Route::Bott => ExtRoute::Bott,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["s", "label", "x"])))]
struct ExtArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    p: usize,
    /// Index s of the label B_s or C_s^j.
    #[arg(long)]
    s: Option<usize>,
    /// Flavor j of C_s^j (symm only, not needed for s = n).
    #[arg(long, requires = "s")]
    j: Option<u8>,
    /// A label such as B_2, C_2^1 or D_1 (the character of D_1).
    #[arg(long)]
    label: Option<String>,
    #[arg(long, value_enum, default_value_t = Route::Closed)]
    route: Route,
    /// The partition x of J_{x,p}, comma separated; prints the graded Ext character.
    #[arg(long, value_parser = parse_partition)]
    x: Option<Partition>,
    /// Degree cap on the dual symmetric algebra, for --x.
    #[arg(long, default_value_t = 14, requires = "x")]
    bound: u64,
}

#[derive(Args)]
struct BottArgs {
    #[arg(long)]
    n: usize,
    /// Rank of the quotient bundle; must equal the length of --alpha.
    #[arg(long)]
    k: usize,
    /// Dominant weight on Q, comma separated (may be empty).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
    alpha: IntList,
    /// Dominant weight on R, comma separated (may be empty).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
    beta: IntList,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["s", "label", "ring", "ideal", "jxp"])))]
struct CharacterArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Index s of B_s or C_s^j; lists the weight set.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, requires = "s")]
    j: Option<u8>,
    /// A label such as B_2, C_2^1 or D_1; lists the weight set.
    #[arg(long)]
    label: Option<String>,
    /// The coordinate ring S.
    #[arg(long)]
    ring: bool,
    /// The ideal I_z, with z comma separated.
    #[arg(long, value_parser = parse_partition)]
    ideal: Option<Partition>,
    /// The subquotient J_{x,p}, with x comma separated; needs --p.
    #[arg(long, value_parser = parse_partition, requires = "p")]
    jxp: Option<Partition>,
    #[arg(long)]
    p: Option<usize>,
    /// Entry bound |lambda_i| <= bound for weight sets; total-size bound otherwise.
    #[arg(long, default_value_t = 10)]
    bound: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run.
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(verify::suite_names()))]
    suite: String,
    /// Overrides the largest matrix size of every sweep.
    #[arg(long)]
    max_n: Option<usize>,
    /// Overrides the size truncation of the filtration check.
    #[arg(long)]
    bound: Option<u64>,
    /// Includes wall-clock times; the report is then no longer reproducible byte for byte.
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Clone)]
struct IntList(Vec<i64>);

fn parse_ints(text: &str) -> Result<IntList, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    let IntList(v) = parse_ints(text)?;
    Partition::from_signed(&v).map_err(|e| e.to_string())
}

enum CliError {
    Usage(String),
    Failed(Rendered),
    Io(io::Error),
}

impl From<loccoh_core::Error> for CliError {
    fn from(e: loccoh_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let format = cli.format;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = dispatch(cli.command).and_then(|r| Ok(r.write(format, &mut out)?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(report)) => {
            let _ = report.write(format, &mut out);
            let _ = out.flush();
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Caps the global thread pool at `LOCCOH_THREADS` when set.
fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("LOCCOH_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("LOCCOH_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn dispatch(command: Command) -> Result<Rendered, CliError> {
    match command {
        Command::Hpq { space, p, route } => run_hpq(space.space()?, p, route),
        Command::Lcd { space, p } => run_lcd(space.space()?, p),
        Command::Ext(args) => run_ext(args),
        Command::Bott(args) => run_bott(args),
        Command::Character(args) => run_character(args),
        Command::FiltrationCheck { space, p, bound } => run_filtration(space.space()?, p, bound),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_hpq(space: Space, p: usize, route: Route) -> Result<Rendered, CliError> {
    let h = match route {
        Route::Closed => hpq(&space, p)?,
        r => hpq_from_ext(&space, p, r.into())?,
    };
    let mut r = Rendered::new(h.to_json(), &["label", "character", "poly"]);
    for (s, f) in h.terms() {
        let character = character_of(&space, s)
            .map(|c| c.to_string())
            .unwrap_or_else(|_| "-".into());
        r.row([format!("D_{s}"), character, f.to_string()]);
    }
    Ok(r)
}

fn run_lcd(space: Space, p: usize) -> Result<Rendered, CliError> {
    let value = lcd(&space, p)?;
    let closed = lcd_closed(&space, p)?;
    let top = top_module_support(&space, p)?;
    let names: Vec<String> = top.modules.iter().map(|s| format!("D_{s}")).collect();
    let json = json!({
        "space": space,
        "p": p,
        "lcd": value,
        "closed_form": closed,
        "top_modules": names,
        "tie": top.is_tie(),
    });
    let mut r = Rendered::new(json, &["space", "p", "lcd", "closed_form", "top_modules"]);
    r.row([
        space.to_string(),
        p.to_string(),
        value.to_string(),
        closed.to_string(),
        names.join(" "),
    ]);
    Ok(r)
}

fn label_from(space: &Space, s: Option<usize>, j: Option<u8>, text: Option<&str>) -> Result<SimpleLabel, CliError> {
    match (s, text) {
        (Some(s), _) => {
            let j = j.or((s == space.n() && matches!(space, Space::Symm { .. })).then_some(1));
            Ok(SimpleLabel::new(*space, s, j)?)
        }
        (None, Some(t)) => Ok(parse_label(space, t)?),
        (None, None) => Err(CliError::Usage("a label is required (--s or --label)".into())),
    }
}

fn run_ext(args: ExtArgs) -> Result<Rendered, CliError> {
    let space = args.space.space()?;
    if let Some(x) = &args.x {
        let ext = ext_jxp(&space, x, args.p, args.bound)?;
        let json = json!({ "space": space, "x": x, "p": args.p, "bound": args.bound, "ext": ext.to_json() });
        let mut r = Rendered::new(json, &["degree", "weight", "multiplicity"]);
        for (d, weights) in ext.degrees() {
            for (w, c) in weights {
                r.row([d.to_string(), tuple(w.entries()), c.to_string()]);
            }
        }
        return Ok(r);
    }
    let label = label_from(&space, args.s, args.j, args.label.as_deref())?;
    let route: ExtRoute = args.route.into();
    let poly = ext_witness(route, &label, args.p)?;
    let json = json!({
        "space": space,
        "label": label.to_string(),
        "p": args.p,
        "route": route,
        "witness": witness_weight(&label),
        "poly": poly.to_json(),
    });
    let mut r = Rendered::new(json, &["label", "p", "route", "poly"]);
    r.row([
        label.to_string(),
        args.p.to_string(),
        route.name().to_string(),
        poly.to_string(),
    ]);
    Ok(r)
}

fn run_bott(args: BottArgs) -> Result<Rendered, CliError> {
    let IntList(alpha) = args.alpha;
    let IntList(beta) = args.beta;
    if alpha.len() != args.k {
        return Err(CliError::Usage(format!(
            "--alpha has {} entries but --k is {}",
            alpha.len(),
            args.k
        )));
    }
    let alpha = DominantWeight::new(alpha)?;
    let beta = DominantWeight::new(beta)?;
    let result = bott(&alpha, &beta, args.n)?;
    let json = serde_json::to_value(&result).expect("serializable");
    let mut r = Rendered::new(json, &["result", "degree", "weight"]);
    match &result {
        loccoh_core::bott::BottResult::Zero => r.row(["zero", "-", "-"]),
        loccoh_core::bott::BottResult::Cohomology { degree, weight } => {
            r.row(["cohomology".to_string(), degree.to_string(), tuple(weight.entries())])
        }
    }
    Ok(r)
}

fn multiset_rendered(json: serde_json::Value, set: &Multiset) -> Rendered {
    let mut r = Rendered::new(json, &["partition", "size", "multiplicity"]);
    for (lambda, c) in set {
        r.row([tuple(lambda.parts()), lambda.size().to_string(), c.to_string()]);
    }
    r
}

fn partitions_json(set: &Multiset) -> serde_json::Value {
    json!(set
        .iter()
        .map(|(l, c)| json!({ "partition": l, "multiplicity": c }))
        .collect::<Vec<_>>())
}

fn run_character(args: CharacterArgs) -> Result<Rendered, CliError> {
    let space = args.space.space()?;
    let bound = args.bound;
    if args.ring {
        let set = space_character(&space, bound)?;
        let json = json!({ "space": space, "of": "ring", "bound": bound, "partitions": partitions_json(&set) });
        return Ok(multiset_rendered(json, &set));
    }
    if let Some(z) = &args.ideal {
        let set = ideal_character(&space, z, bound)?;
        let json =
            json!({ "space": space, "of": "ideal", "z": z, "bound": bound, "partitions": partitions_json(&set) });
        return Ok(multiset_rendered(json, &set));
    }
    if let (Some(x), Some(p)) = (&args.jxp, args.p) {
        let set = jxp_character(&space, x, p, bound)?;
        let json =
            json!({ "space": space, "of": "jxp", "x": x, "p": p, "bound": bound, "partitions": partitions_json(&set) });
        return Ok(multiset_rendered(json, &set));
    }
    let label = label_from(&space, args.s, args.j, args.label.as_deref())?;
    let entry_bound = i64::try_from(bound).map_err(|_| CliError::Usage("--bound is too large".into()))?;
    let weights = enumerate_weight_set(&label, entry_bound);
    let json = json!({
        "space": space,
        "label": label.to_string(),
        "witness": witness_weight(&label),
        "entry_bound": bound,
        "weights": weights,
    });
    let mut r = Rendered::new(json, &["weight", "dim"]);
    for w in &weights {
        r.row([tuple(w.entries()), dim_schur(w).to_string()]);
    }
    Ok(r)
}

fn run_filtration(space: Space, p: usize, bound: u64) -> Result<Rendered, CliError> {
    let report = filtration_check(&space, p, bound)?;
    let json = serde_json::to_value(&report).expect("serializable");
    let mut r = Rendered::new(json, &["space", "p", "bound", "steps", "passed"]);
    r.row([
        space.to_string(),
        p.to_string(),
        bound.to_string(),
        report.steps.to_string(),
        report.passed.to_string(),
    ]);
    if report.passed {
        Ok(r)
    } else {
        Err(CliError::Failed(r))
    }
}

fn run_verify(args: VerifyArgs) -> Result<Rendered, CliError> {
    let limits = Limits {
        max_n: args.max_n,
        bound: args.bound,
    };
    let report = verify::run(&args.suite, &limits, args.timings)
        .ok_or_else(|| CliError::Usage(format!("unknown suite {:?}", args.suite)))?;
    let json = serde_json::to_value(&report).expect("serializable");
    let mut r = Rendered::new(json, &["check", "range", "cases", "status"]);
    for c in &report.checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        r.row([
            c.name.to_string(),
            c.range.clone(),
            c.cases.to_string(),
            status.to_string(),
        ]);
    }
    if report.passed {
        Ok(r)
    } else {
        Err(CliError::Failed(r))
    }
}
