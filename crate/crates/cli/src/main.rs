use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use burau_atlas::algebra::{factor_mod_p, parse_poly, IntPoly, RingDescriptor, RingElem};
use burau_atlas::localgeom::{classify_monovalent_black, classify_monovalent_white, classify_trivalent, Vec2, VertexClass};
use burau_atlas::search::tables::{realized, unrealized, TableRow};
use burau_atlas::search::{candidate_search, classify_candidates, kappa_filter, n79_check, Characteristics, SearchOptions};
use burau_atlas::universal::{enumerate_universal, six_significant_check, EnumerationTask, Mode, UniversalError, DEFAULT_CAP};
use burau_atlas::verify::{self, Suite};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// `println!` that ignores a closed stdout, e.g. when piped into `head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const EXIT_FAILED: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_ALGEBRA: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "burau-atlas", version, about = "Burau skeletons of trigonal curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the skeleton of the universal subgroup for one specialization.
    Enumerate(EnumerateArgs),
    /// Scan for exceptional specializations and classify them.
    Search(SearchArgs),
    /// Run the identity and oracle suites.
    Verify(VerifyArgs),
    /// Classify one vertex.
    Classify(ClassifyArgs),
    /// Resultant check ruling out orders 7 and 9.
    N79(N79Args),
}

#[derive(Args)]
struct RingArgs {
    /// Prime characteristic.
    #[arg(long, conflicts_with = "modulus", required_unless_present = "modulus")]
    p: Option<u64>,
    /// Composite modulus `m` for `(Z/m)[t]/(f)`; no irreducibility check.
    #[arg(long)]
    modulus: Option<u64>,
    /// Monic polynomial `f` in `t`; `ξ` is the class of `t`.
    #[arg(long = "min-poly")]
    min_poly: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Extended)]
    mode: ModeArg,
    /// Seed vector `a,b` with entries polynomials in `t`; defaults to `0,1`.
    #[arg(long = "v")]
    v: Option<String>,
    /// Class cap; overrides `BURAU_ATLAS_CAP`.
    #[arg(long)]
    cap: Option<usize>,
    /// Write the skeleton as a DOT digraph.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long = "n-min", default_value_t = 11)]
    n_min: u64,
    #[arg(long = "n-max", default_value_t = 26)]
    n_max: u64,
    /// Scan characteristic zero only.
    #[arg(long)]
    char0: bool,
    /// Fail unless the verdicts match the built-in tables.
    #[arg(long = "expect-tables")]
    expect_tables: bool,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Trivalent vertex with parameters `m n r s`.
    #[arg(long, num_args = 4, value_names = ["M", "N", "R", "S"], allow_negative_numbers = true)]
    trivalent: Option<Vec<i64>>,
    /// Monovalent black vertex with twist `r`.
    #[arg(long, allow_negative_numbers = true)]
    black: Option<i64>,
    /// Monovalent white vertex with twist `r`.
    #[arg(long, allow_negative_numbers = true)]
    white: Option<i64>,
}

#[derive(Args)]
struct N79Args {
    #[arg(long, value_enum, default_value_t = TargetArg::Both)]
    target: TargetArg,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Extended,
    Braid,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Burau,
    Freegroup,
    Localgeom,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "14")]
    T14,
    #[value(name = "18")]
    T18,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl fmt::Display) -> Self {
        Self { code, message: message.to_string() }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Search(a) => cmd_search(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Classify(a) => cmd_classify(a),
        Command::N79(a) => cmd_n79(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse(text: &str) -> Result<IntPoly, Failure> {
    parse_poly(text).map_err(|e| Failure::new(EXIT_USAGE, format!("cannot parse {text:?}: {e}")))
}

/// Builds `ξ`, refusing reducible minimal polynomials over a prime field.
fn xi_from(args: &RingArgs) -> Result<RingElem, Failure> {
    let f = parse(&args.min_poly)?;
    let (m, prime) = match (args.p, args.modulus) {
        (Some(p), _) => (p, true),
        (None, Some(m)) => (m, false),
        (None, None) => return Err(Failure::new(EXIT_USAGE, "one of --p or --modulus is required")),
    };
    let ring = RingDescriptor::new(m, &f).map_err(|e| Failure::new(EXIT_ALGEBRA, e))?;
    if prime && !ring.is_field() {
        let factors = factor_mod_p(&f, m).map_err(|e| Failure::new(EXIT_ALGEBRA, e))?;
        if factors.len() == 1 && factors[0].1 == 1 {
            return Err(Failure::new(EXIT_ALGEBRA, format!("{m} is not prime")));
        }
        let listed: Vec<String> = factors
            .iter()
            .map(|(g, e)| if *e == 1 { format!("({g})") } else { format!("({g})^{e}") })
            .collect();
        return Err(Failure::new(
            EXIT_ALGEBRA,
            format!("{} is reducible over F_{m}: {}", args.min_poly, listed.join(" ")),
        ));
    }
    let xi = RingElem::generator(&ring);
    if xi.inverse().is_none() {
        return Err(Failure::new(EXIT_ALGEBRA, "t is not a unit in this ring"));
    }
    Ok(xi)
}

fn parse_vec(text: &str, xi: &RingElem) -> Result<Vec2, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::new(EXIT_USAGE, format!("expected `a,b`, got {text:?}")));
    }
    let entry = |s: &str| -> Result<RingElem, Failure> {
        RingElem::from_poly(xi.ring(), &parse(s)?).map_err(|e| Failure::new(EXIT_ALGEBRA, e))
    };
    Ok([entry(parts[0])?, entry(parts[1])?])
}

fn cap_from(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("BURAU_ATLAS_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::new(EXIT_USAGE, format!("BURAU_ATLAS_CAP={s:?} is not a count"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn universal_failure(e: UniversalError) -> Failure {
    match e {
        UniversalError::CapExceeded { .. } => Failure::new(EXIT_CAP, e),
        _ => Failure::new(EXIT_ALGEBRA, e),
    }
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_enumerate(a: EnumerateArgs) -> Outcome {
    let xi = xi_from(&a.ring)?;
    let mode = match a.mode {
        ModeArg::Extended => Mode::Extended,
        ModeArg::Braid => Mode::Braid,
    };
    let mut task = EnumerationTask::new(xi.clone(), mode).with_cap(cap_from(a.cap)?);
    if let Some(v) = &a.v {
        task = task.with_v(parse_vec(v, &xi)?);
    }
    let e = enumerate_universal(&task).map_err(universal_failure)?;
    if let Some(path) = &a.dot {
        std::fs::write(path, e.skeleton.to_dot())
            .map_err(|err| Failure::new(EXIT_FAILED, format!("{}: {err}", path.display())))?;
    }
    let mut out = serde_json::to_value(&e.signature).expect("json");
    let obj = out.as_object_mut().expect("object");
    obj.insert("partition".into(), json!(e.signature.partition()));
    obj.insert("mode".into(), json!(mode));
    obj.insert("six_significant".into(), json!(six_significant_check(&e.skeleton)));
    print_json(&out);
    Ok(())
}

fn table_keys(rows: &[TableRow]) -> BTreeSet<(u64, u64, String)> {
    rows.iter().flat_map(|r| r.triples().map(|(p, n, f)| (p, n, f.to_string())).collect::<Vec<_>>()).collect()
}

fn cmd_search(a: SearchArgs) -> Outcome {
    if a.n_min < 3 || a.n_min > a.n_max {
        return Err(Failure::new(EXIT_USAGE, "need 3 <= --n-min <= --n-max"));
    }
    let chars = if a.char0 { Characteristics::Zero } else { Characteristics::Positive };
    let opts = SearchOptions { n_min: a.n_min, n_max: a.n_max, chars, ..Default::default() };
    let rep = candidate_search(&opts);
    for w in &rep.warnings {
        eprintln!("warning: N={} d={} {}/{}: {}", w.cell.n, w.cell.d, w.cell.tu.name(), w.cell.tv.name(), w.message);
    }
    if a.char0 {
        if a.json {
            let zeros: Vec<Value> =
                rep.char0_zeros.iter().map(|c| json!({"n": c.n, "d": c.d, "tu": c.tu, "tv": c.tv})).collect();
            print_json(&json!({"characteristic": 0, "candidates": zeros}));
        } else {
            for c in &rep.char0_zeros {
                out!("N={} d={} {}/{}: resultant vanishes", c.n, c.d, c.tu.name(), c.tv.name());
            }
            out!("{} candidates", rep.char0_zeros.len());
        }
        return if a.expect_tables && !rep.char0_zeros.is_empty() {
            Err(Failure::new(EXIT_FAILED, "characteristic-zero resultants vanish"))
        } else {
            Ok(())
        };
    }

    let raw = rep.candidates.len();
    let outcome = kappa_filter(rep.candidates);
    let mut kept: Vec<_> = outcome.kept.into_iter().map(|(c, _)| c).collect();
    classify_candidates(&mut kept, cap_from(a.cap)?).map_err(universal_failure)?;
    let genus0 = kept.iter().filter(|c| c.verdict.is_genus0()).count();
    let positive = kept.iter().filter(|c| c.verdict.is_positive()).count();
    let summary = format!("{raw} candidates, {} kept, {genus0} genus-0, {positive} positive-genus", kept.len());

    if a.json {
        let rows: Vec<Value> = kept
            .iter()
            .map(|c| {
                let witnesses: Vec<Value> =
                    c.witnesses.iter().map(|w| json!({"d": w.d, "tu": w.tu, "tv": w.tv})).collect();
                json!({
                    "p": c.p,
                    "n": c.n,
                    "min_poly": c.min_poly.to_string(),
                    "witnesses": witnesses,
                    "verdict": c.verdict,
                })
            })
            .collect();
        print_json(&json!({
            "raw": raw,
            "kept": rows,
            "genus0": genus0,
            "positive_genus": positive,
        }));
    } else {
        for c in &kept {
            let verdict = match &c.verdict {
                v if v.is_genus0() || v.is_positive() => {
                    let sig = match v {
                        burau_atlas::Verdict::Genus0 { signature } | burau_atlas::Verdict::GenusPositive { signature } => {
                            signature
                        }
                        _ => unreachable!(),
                    };
                    format!("{} genus {}", sig.table_form(), sig.genus)
                }
                burau_atlas::Verdict::BeyondCap { cap } => format!("beyond cap {cap}"),
                _ => "unset".into(),
            };
            out!("p={} N={} {}: {verdict}", c.p, c.n, c.min_poly);
        }
        out!("{summary}");
    }

    if a.expect_tables {
        let key = |c: &burau_atlas::CandidateTriple| (c.p, c.n, c.min_poly.to_string());
        let in_range = |rows: Vec<TableRow>| {
            table_keys(&rows.into_iter().filter(|r| (a.n_min..=a.n_max).contains(&r.n)).collect::<Vec<_>>())
        };
        let t1 = in_range(realized());
        let t2 = in_range(unrealized());
        let g0: BTreeSet<_> = kept.iter().filter(|c| c.verdict.is_genus0()).map(key).collect();
        let gp: BTreeSet<_> = kept.iter().filter(|c| c.verdict.is_positive()).map(key).collect();
        if g0 != t1 || !t2.is_subset(&gp) {
            return Err(Failure::new(
                EXIT_FAILED,
                format!("tables mismatch: expected {} genus-0 and {} positive-genus", t1.len(), t2.len()),
            ));
        }
        out!("tables match: {} genus-0, {} positive-genus", t1.len(), t2.len());
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let suites: &[Suite] = match a.suite {
        SuiteArg::All => &[Suite::Burau, Suite::FreeGroup, Suite::LocalGeom],
        SuiteArg::Burau => &[Suite::Burau],
        SuiteArg::Freegroup => &[Suite::FreeGroup],
        SuiteArg::Localgeom => &[Suite::LocalGeom],
    };
    let checks = verify::run(suites);
    let failed = checks.iter().filter(|c| !c.passed).count();
    if a.json {
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| json!({"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        print_json(&json!({"checks": rows, "passed": failed == 0}));
    } else {
        for c in &checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            out!("{tag} {:?}/{}: {}", c.suite, c.name, c.detail);
        }
        out!("{} checks, {failed} failed", checks.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::new(EXIT_FAILED, format!("{failed} checks failed")))
    }
}

fn class_json(c: &VertexClass) -> Value {
    let generator = c.generator.as_ref().map(|g| {
        json!({
            "coords": [g[0].to_string(), g[1].to_string()],
            "text": vec_text(g),
        })
    });
    json!({"kind": c.kind.name(), "dim": c.dim, "generator": generator})
}

/// `a e1 + b e2` with unit coefficients dropped.
fn vec_text(v: &Vec2) -> String {
    let term = |c: &RingElem, e: &str| -> Option<String> {
        if c.is_zero() {
            None
        } else if c.is_one() {
            Some(e.to_string())
        } else {
            let s = c.to_string();
            Some(if s.contains(['+', '-']) { format!("({s}){e}") } else { format!("{s}{e}") })
        }
    };
    let parts: Vec<String> = [term(&v[0], "e1"), term(&v[1], "e2")].into_iter().flatten().collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn cmd_classify(a: ClassifyArgs) -> Outcome {
    let xi = xi_from(&a.ring)?;
    let given = [a.trivalent.is_some(), a.black.is_some(), a.white.is_some()].iter().filter(|&&b| b).count();
    if given != 1 {
        return Err(Failure::new(EXIT_USAGE, "give exactly one of --trivalent, --black, --white"));
    }
    let class = if let Some(t) = &a.trivalent {
        if t[0] < 1 || t[1] < 1 {
            return Err(Failure::new(EXIT_USAGE, "trivalent m and n must be positive"));
        }
        let one = RingElem::one(xi.ring());
        if xi == one || xi == one.neg() {
            return Err(Failure::new(EXIT_ALGEBRA, "trivalent classification needs ξ ≠ ±1"));
        }
        classify_trivalent(t[0] as u64, t[1] as u64, t[2], t[3], &xi)
    } else if let Some(r) = a.black {
        classify_monovalent_black(r, &xi)
    } else {
        classify_monovalent_white(a.white.expect("checked"), &xi)
    }
    .map_err(|e| Failure::new(EXIT_ALGEBRA, e))?;
    print_json(&class_json(&class));
    Ok(())
}

fn cmd_n79(a: N79Args) -> Outcome {
    let targets: &[u64] = match a.target {
        TargetArg::T14 => &[14],
        TargetArg::T18 => &[18],
        TargetArg::Both => &[14, 18],
    };
    let reports: Vec<_> = targets.iter().map(|&t| n79_check(t)).collect();
    if a.json {
        let rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                let residues: Vec<Value> =
                    r.residues.iter().map(|x| json!({"n": x.n, "residue": x.residue, "nonzero": x.nonzero})).collect();
                json!({"target": r.target, "residues": residues, "all_nonzero": r.all_nonzero})
            })
            .collect();
        print_json(&json!({"reports": rows}));
    } else {
        for r in &reports {
            out!("modulo Phi_{}:", r.target);
            for x in &r.residues {
                out!("  n={:>2}  {}  {}", x.n, if x.nonzero { "nonzero" } else { "ZERO" }, x.residue);
            }
            out!("  {}", if r.all_nonzero { "all nonzero" } else { "some residue vanishes" });
        }
    }
    if reports.iter().all(|r| r.all_nonzero) {
        Ok(())
    } else {
        Err(Failure::new(EXIT_FAILED, "a residue vanishes"))
    }
}
