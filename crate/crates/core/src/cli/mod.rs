//! Batch command-line front end.
//!
//! Every report is printed as a JSON object `{manifest, report}`. Sweeps
//! default to CSV on stdout (one row per candidate); `--summary` writes the
//! JSON summary next to it. Exit status is 0 on success, 1 on domain errors
//! (a JSON error object on stderr) and 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::{factor_int, is_squarefree_int, Effort, DEFAULT_SEED};
use crate::disc::{conjecture_disc_identity, discriminant_report, lemma_disc_identity};
use crate::error::{Error, Result};
use crate::families::{
    count_lf, count_mh, count_nh, decic_disc_poly, decic_prime_scan, jones_sweep,
    local_obstruction_scan, sextic_disc_poly, sextic_sweep, CountReport, CountRow, DecicScanRow,
    JonesRow, LfMode, LfRange, SexticRow, SweepOptions,
};
use crate::galois::quintic_galois;
use crate::modp::{factor_mod_p_seeded, reduce_mod, IrreducibilityCertificate};
use crate::monogenic::{
    dedekind_index_detail, ideal_square_membership, ideal_square_witnesses, is_monogenic,
    power_compositional_check, sufficient_reciprocal_monogenic,
};
use crate::poly::{half_to_reciprocal, reciprocal_to_half, IntPoly};

pub const SEED_ENV: &str = "RECIPMONO_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "recipmono",
    version,
    about = "Monogeneity, discriminants and Galois data for reciprocal integer polynomials"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format. Sweeps default to csv, everything else to json.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Resumable state file for sweeps.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
    /// With csv output, also write the JSON summary to this file.
    #[arg(long, global = true)]
    summary: Option<PathBuf>,
    /// Record wall time in the manifest. Output is then no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Integer argument, kept exact and echoed as a decimal string.
#[derive(Debug, Clone)]
struct Int(BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

fn parse_int(s: &str) -> std::result::Result<Int, String> {
    s.trim()
        .parse::<BigInt>()
        .map(Int)
        .map_err(|_| format!("not an integer: {s:?}"))
}

/// A polynomial in human syntax, a JSON coefficient array, or a path to a file
/// holding either.
fn parse_poly_arg(s: &str) -> std::result::Result<IntPoly, String> {
    let path = Path::new(s);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    } else {
        s.to_string()
    };
    text.parse::<IntPoly>().map_err(|e| e.to_string())
}

/// `lo..hi` (inclusive) or a single integer.
#[derive(Debug, Clone, Copy, Serialize)]
struct Span {
    lo: i64,
    hi: i64,
}

fn parse_span(s: &str) -> std::result::Result<Span, String> {
    let s = s.trim();
    let bad = || format!("expected lo..hi or an integer, got {s:?}");
    let span = match s.find("..") {
        Some(i) => {
            let hi = s[i + 2..].trim_start_matches('=');
            Span {
                lo: s[..i].trim().parse().map_err(|_| bad())?,
                hi: hi.trim().parse().map_err(|_| bad())?,
            }
        }
        None => {
            let v = s.parse().map_err(|_| bad())?;
            Span { lo: v, hi: v }
        }
    };
    if span.lo > span.hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(span)
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Factor an integer.
    Factor {
        #[arg(value_parser = parse_int, allow_hyphen_values = true)]
        n: Int,
    },
    /// Decide whether an integer is squarefree.
    Squarefree {
        #[arg(value_parser = parse_int, allow_hyphen_values = true)]
        n: Int,
    },
    /// Discriminant and its factorization.
    Disc {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Check Δ(f) = ±f(1)f(-1)Δ(g)^2 for a monic reciprocal f.
    CheckLemma {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Check the closed-form discriminant of a perturbed Φ_q or Φ_2q.
    CheckConjecture {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        /// A single value or an inclusive range lo..hi.
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        t: Span,
    },
    /// Reciprocal polynomial of degree 2n to its degree-n companion.
    F2g {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Degree-n companion back to the reciprocal polynomial of degree 2n.
    G2f {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
        /// Defaults to the degree of the input.
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Sufficient test for monogenicity of f(x^k).
    PowerComp {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(short)]
        k: usize,
    },
    /// Full monogenicity decision.
    Monogenic {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Dedekind index test at one prime.
    IndexTest {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(short)]
        p: u64,
    },
    /// Membership of f in <p, h>^2; searches all h when --h is absent.
    IdealSquare {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(short)]
        p: u64,
        #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
        h: Option<IntPoly>,
    },
    /// Sufficient test for a monic reciprocal polynomial.
    Sufficient {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Galois group evidence for a quintic.
    Galois5 {
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Factor a polynomial modulo a prime.
    FactorMod {
        p: u64,
        #[arg(value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// Sweeps over the explicit families.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Counting functions over finite ranges.
    #[command(subcommand)]
    Count(CountCommand),
    /// Local densities ρ(r^2) and the partial product over primes r <= B.
    Density {
        /// Defaults to the discriminant polynomial of --family.
        #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: Option<IntPoly>,
        #[arg(long, value_enum, default_value_t = NamedPoly::Decic)]
        family: NamedPoly,
        #[arg(long = "B")]
        bound: u64,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyCommand {
    /// Φ_N(x) + 4rq^2 t x^(φ(N)/2) over a range of t.
    Jones {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        b: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        t: Span,
    },
    /// Primes p <= pmax with h(p) squarefree, with verdicts for f_p and g_p.
    Thm13 {
        #[arg(long)]
        pmax: u64,
        /// Emit every prime, not only those with h(p) squarefree.
        #[arg(long)]
        all: bool,
    },
    /// The sextic family over a range of a.
    Sextic {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true, default_value = "-20..20")]
        a: Span,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CountCommand {
    /// Sextic parameters with H(a) squarefree (lemma) or a proven monogenic sextic (full).
    Lf {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Lemma)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = RangeArg::Symmetric)]
        range: RangeArg,
    },
    /// 1 <= a <= X with F(a) squarefree; F defaults to H.
    Mh {
        #[arg(long = "X")]
        x: u64,
        #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: Option<IntPoly>,
    },
    /// Primes p <= X with F(p) squarefree; F defaults to H.
    Nh {
        #[arg(long = "X")]
        x: u64,
        #[arg(long, value_parser = parse_poly_arg, allow_hyphen_values = true)]
        poly: Option<IntPoly>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModeArg {
    Lemma,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RangeArg {
    /// |a| <= N
    Symmetric,
    /// 1 <= a <= N
    Positive,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum NamedPoly {
    /// h(y) of the degree-10 family
    Decic,
    /// H(x) of the sextic family
    Sextic,
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Factor { .. } => "factor".into(),
            Command::Squarefree { .. } => "squarefree".into(),
            Command::Disc { .. } => "disc".into(),
            Command::CheckLemma { .. } => "check-lemma".into(),
            Command::CheckConjecture { .. } => "check-conjecture".into(),
            Command::F2g { .. } => "f2g".into(),
            Command::G2f { .. } => "g2f".into(),
            Command::PowerComp { .. } => "power-comp".into(),
            Command::Monogenic { .. } => "monogenic".into(),
            Command::IndexTest { .. } => "index-test".into(),
            Command::IdealSquare { .. } => "ideal-square".into(),
            Command::Sufficient { .. } => "sufficient".into(),
            Command::Galois5 { .. } => "galois5".into(),
            Command::FactorMod { .. } => "factor-mod".into(),
            Command::Family(f) => match f {
                FamilyCommand::Jones { .. } => "family jones".into(),
                FamilyCommand::Thm13 { .. } => "family thm13".into(),
                FamilyCommand::Sextic { .. } => "family sextic".into(),
            },
            Command::Count(c) => match c {
                CountCommand::Lf { .. } => "count lf".into(),
                CountCommand::Mh { .. } => "count mh".into(),
                CountCommand::Nh { .. } => "count nh".into(),
            },
            Command::Density { .. } => "density".into(),
        }
    }

    /// Command parameters without the subcommand wrapper.
    fn params(&self) -> Value {
        let depth = match self {
            Command::Family(_) | Command::Count(_) => 2,
            _ => 1,
        };
        let mut v = serde_json::to_value(self).expect("serializable");
        for _ in 0..depth {
            v = match v {
                Value::Object(m) => m.into_iter().next().map(|(_, x)| x).unwrap_or(Value::Null),
                other => other,
            };
        }
        if v.is_null() {
            v = json!({});
        }
        v
    }
}

#[derive(Debug, Serialize)]
struct Manifest {
    subcommand: String,
    params: Value,
    /// SHA-256 of each polynomial input in canonical coefficient-array form.
    input_digests: BTreeMap<String, String>,
    version: &'static str,
    seed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

fn digest(p: &IntPoly) -> String {
    hex::encode(Sha256::digest(p.to_json().as_bytes()))
}

/// Report produced by a subcommand before formatting.
enum Output {
    Json(Value),
    Table {
        header: Vec<&'static str>,
        records: Vec<Vec<String>>,
        rows: Value,
        summary: Value,
    },
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn table<R: Serialize>(header: &[&'static str], rows: &[R], record: impl Fn(&R) -> Vec<String>, summary: Value) -> Output {
    Output::Table {
        header: header.to_vec(),
        records: rows.iter().map(record).collect(),
        rows: to_value(&rows),
        summary,
    }
}

fn effort_from_env() -> std::result::Result<Effort, String> {
    match std::env::var(SEED_ENV) {
        Ok(s) => {
            let t = s.trim();
            let seed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
                Some(h) => u64::from_str_radix(h, 16),
                None => t.parse(),
            }
            .map_err(|_| format!("{SEED_ENV} must be a 64-bit integer, got {s:?}"))?;
            Ok(Effort::default().with_seed(seed))
        }
        Err(_) => Ok(Effort::default().with_seed(DEFAULT_SEED)),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::NonMonicDivisor => "non_monic_divisor",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::NotReciprocal => "not_reciprocal",
        Error::OddDegree(_) => "odd_degree",
        Error::DegreeMismatch { .. } => "degree_mismatch",
        Error::ZeroConstantTerm => "zero_constant_term",
        Error::NotMonic => "not_monic",
        Error::NotPrime(_) => "not_prime",
        Error::NotOddPrime(_) => "not_odd_prime",
        Error::PrimeDividesLeading(_) => "prime_divides_leading",
        Error::PrimeTooLarge(_) => "prime_too_large",
        Error::NotIrreducibleModP(_) => "not_irreducible_mod_p",
        Error::NotQuintic(_) => "not_quintic",
        Error::Inseparable => "inseparable",
        Error::Reducible(_) => "reducible",
        Error::InvalidParams(_) => "invalid_params",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
    }
}

/// Runs the command line and exits with its status.
pub fn run() -> ! {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code)
}

/// Parses `args` (including the program name), runs the subcommand and
/// writes to `out` and `err`. Returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let effort = match effort_from_env() {
        Ok(e) => e,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let is_sweep = matches!(cli.command, Command::Family(_) | Command::Count(_));
    let format = cli.global.format.unwrap_or(if is_sweep {
        Format::Csv
    } else {
        Format::Json
    });
    if format == Format::Csv && !is_sweep && !matches!(cli.command, Command::Density { .. }) {
        let _ = writeln!(err, "error: csv output is only available for family, count and density");
        return 2;
    }

    let started = Instant::now();
    let mut digests = BTreeMap::new();
    let result = dispatch(&cli, &effort, &mut digests);
    let manifest = Manifest {
        subcommand: cli.command.name(),
        params: cli.command.params(),
        input_digests: digests,
        version: env!("CARGO_PKG_VERSION"),
        seed: effort.seed.to_string(),
        wall_time_ms: cli.global.timing.then(|| started.elapsed().as_millis()),
    };
    match result {
        Ok(output) => match emit(output, format, &manifest, cli.global.summary.as_deref(), out) {
            Ok(()) => 0,
            Err(e) => report_error(&e, &manifest, err),
        },
        Err(e) => report_error(&e, &manifest, err),
    }
}

fn report_error(e: &Error, manifest: &Manifest, err: &mut dyn Write) -> i32 {
    let v = json!({
        "error": {"kind": error_kind(e), "message": e.to_string()},
        "manifest": manifest,
    });
    let _ = writeln!(err, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
    1
}

fn emit(
    output: Output,
    format: Format,
    manifest: &Manifest,
    summary_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    let envelope = |report: Value| json!({"manifest": manifest, "report": report});
    match (output, format) {
        (Output::Json(v), _) => {
            writeln!(out, "{}", serde_json::to_string_pretty(&envelope(v)).expect("serializable"))?;
        }
        (Output::Table { summary, rows, .. }, Format::Json) => {
            let mut s = summary;
            s["rows"] = rows;
            writeln!(out, "{}", serde_json::to_string_pretty(&envelope(s)).expect("serializable"))?;
        }
        (Output::Table { header, records, summary, .. }, Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(&header).map_err(csv_err)?;
            for r in &records {
                w.write_record(r).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(&bytes)?;
            if let Some(path) = summary_path {
                let text = serde_json::to_string_pretty(&envelope(summary)).expect("serializable");
                std::fs::write(path, text + "\n")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn sweep_options(g: &Global) -> SweepOptions {
    SweepOptions {
        jobs: g.jobs,
        checkpoint: g.checkpoint.clone(),
        keep_rows: true,
    }
}

fn count_output(rep: CountReport) -> Output {
    let summary = to_value(&rep);
    table(&CountRow::HEADER, &rep.rows, CountRow::record, summary)
}

fn dispatch(cli: &Cli, effort: &Effort, digests: &mut BTreeMap<String, String>) -> Result<Output> {
    let mut note = |name: &str, p: &IntPoly| {
        digests.insert(name.to_string(), digest(p));
    };
    let opts = sweep_options(&cli.global);
    let out = match &cli.command {
        Command::Factor { n } => Output::Json(to_value(&json!({
            "n": n,
            "factorization": factor_int(&n.0, effort),
        }))),
        Command::Squarefree { n } => Output::Json(json!({
            "n": n,
            "squarefree": is_squarefree_int(&n.0, effort),
        })),
        Command::Disc { poly } => {
            note("poly", poly);
            Output::Json(to_value(&discriminant_report(poly, effort)?))
        }
        Command::CheckLemma { poly } => {
            note("poly", poly);
            Output::Json(to_value(&lemma_disc_identity(poly)?))
        }
        Command::CheckConjecture { q, a, r, t } => {
            let mut checks = Vec::new();
            for tv in t.lo..=t.hi {
                let c = conjecture_disc_identity(*q, *a, *r, tv)?;
                checks.push(json!({"t": tv, "holds": c.holds, "holds_up_to_sign": c.holds_up_to_sign, "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string()}));
            }
            if t.lo == t.hi {
                Output::Json(checks.pop().expect("one check"))
            } else {
                let all = checks.iter().all(|c| c["holds"] == true);
                Output::Json(json!({"all_hold": all, "checks": checks}))
            }
        }
        Command::F2g { poly } => {
            note("poly", poly);
            let g = reciprocal_to_half(poly)?;
            Output::Json(json!({"f": poly, "g": g}))
        }
        Command::G2f { poly, n } => {
            note("poly", poly);
            let n = match n {
                Some(n) => *n,
                None => poly.degree().ok_or(Error::ZeroPolynomial)?,
            };
            let f = half_to_reciprocal(poly, n)?;
            Output::Json(json!({"g": poly, "n": n, "f": f}))
        }
        Command::PowerComp { poly, k } => {
            note("poly", poly);
            Output::Json(to_value(&power_compositional_check(poly, *k, effort)?))
        }
        Command::Monogenic { poly } => {
            note("poly", poly);
            let rep = is_monogenic(poly, effort)?;
            if !rep.is_separable() {
                return Err(Error::Inseparable);
            }
            if let IrreducibilityCertificate::Reducible { evidence } = &rep.irreducibility {
                return Err(Error::Reducible(
                    serde_json::to_string(evidence).expect("serializable"),
                ));
            }
            Output::Json(to_value(&rep))
        }
        Command::IndexTest { poly, p } => {
            note("poly", poly);
            let test = dedekind_index_detail(poly, *p)?;
            let witnesses = ideal_square_witnesses(poly, *p)?;
            Output::Json(json!({"test": test, "ideal_square_witnesses": witnesses}))
        }
        Command::IdealSquare { poly, p, h } => {
            note("poly", poly);
            match h {
                Some(h) => {
                    note("h", h);
                    Output::Json(to_value(&ideal_square_membership(poly, *p, h)?))
                }
                None => {
                    let ws = ideal_square_witnesses(poly, *p)?;
                    Output::Json(json!({"member": !ws.is_empty(), "witnesses": ws}))
                }
            }
        }
        Command::Sufficient { poly } => {
            note("poly", poly);
            Output::Json(to_value(&sufficient_reciprocal_monogenic(poly, effort)?))
        }
        Command::Galois5 { poly } => {
            note("poly", poly);
            Output::Json(to_value(&quintic_galois(poly, effort)?))
        }
        Command::FactorMod { p, poly } => {
            note("poly", poly);
            let fac = factor_mod_p_seeded(&reduce_mod(poly, *p)?, effort.seed)?;
            let factors: Vec<Value> = fac
                .factors
                .iter()
                .map(|(g, e)| json!({"factor": g, "multiplicity": e}))
                .collect();
            Output::Json(json!({"p": fac.p, "unit": fac.unit, "factors": factors}))
        }
        Command::Family(FamilyCommand::Jones { q, a, b, r, t }) => {
            let rows = jones_sweep(*q, *a, *b, *r, (t.lo, t.hi), effort, &opts)?;
            let monogenic: Vec<i64> = rows
                .iter()
                .filter(|row| row.verdict == crate::monogenic::Verdict::Monogenic)
                .map(|row| row.t)
                .collect();
            let identity_holds = rows
                .iter()
                .all(|row| row.identity.as_ref().is_none_or(|c| c.holds));
            let summary = json!({
                "q": q, "a": a, "b": b, "r": r, "t_range": [t.lo, t.hi],
                "rows": rows.len(),
                "monogenic_t": monogenic,
                "identity_holds": identity_holds,
                "scope": "finite range",
            });
            table(&JonesRow::HEADER, &rows, JonesRow::record, summary)
        }
        Command::Family(FamilyCommand::Thm13 { pmax, all }) => {
            if *pmax < 2 {
                return Err(Error::InvalidParams("pmax must be at least 2".into()));
            }
            let rows = decic_prime_scan(*pmax, effort, &opts)?;
            let listed: Vec<&DecicScanRow> = rows.iter().filter(|r| r.listed).collect();
            let listed_primes: Vec<u64> = listed.iter().map(|r| r.p).collect();
            let all_monogenic = listed.iter().all(|r| {
                r.f_verdict == crate::monogenic::Verdict::Monogenic
                    && r.g_verdict == crate::monogenic::Verdict::Monogenic
            });
            let summary = json!({
                "pmax": pmax,
                "listed_primes": listed_primes,
                "listed_all_monogenic": all_monogenic,
                "primes_scanned": rows.len(),
                "scope": "finite range",
            });
            let shown: Vec<DecicScanRow> = if *all {
                rows
            } else {
                rows.into_iter().filter(|r| r.listed).collect()
            };
            table(&DecicScanRow::HEADER, &shown, DecicScanRow::record, summary)
        }
        Command::Family(FamilyCommand::Sextic { a }) => {
            let rows = sextic_sweep(a.lo, a.hi, effort, &opts)?;
            let squarefree: Vec<&SexticRow> =
                rows.iter().filter(|r| r.h_squarefree.is_squarefree()).collect();
            let summary = json!({
                "a_range": [a.lo, a.hi],
                "h_squarefree": squarefree.iter().map(|r| r.a).collect::<Vec<_>>(),
                "squarefree_all_monogenic": squarefree
                    .iter()
                    .all(|r| r.f_verdict == crate::monogenic::Verdict::Monogenic),
                "disc_matches_h": rows.iter().all(|r| r.disc_matches_h),
                "scope": "finite range",
            });
            table(&SexticRow::HEADER, &rows, SexticRow::record, summary)
        }
        Command::Count(CountCommand::Lf { n, mode, range }) => {
            let mode = match mode {
                ModeArg::Lemma => LfMode::Lemma,
                ModeArg::Full => LfMode::Full,
            };
            let range = match range {
                RangeArg::Symmetric => LfRange::Symmetric,
                RangeArg::Positive => LfRange::Positive,
            };
            count_output(count_lf(*n, mode, range, effort, &opts)?)
        }
        Command::Count(CountCommand::Mh { x, poly }) => {
            let f = poly.clone().unwrap_or_else(sextic_disc_poly);
            note("poly", &f);
            count_output(count_mh(*x, &f, effort, &opts)?)
        }
        Command::Count(CountCommand::Nh { x, poly }) => {
            let f = poly.clone().unwrap_or_else(sextic_disc_poly);
            note("poly", &f);
            count_output(count_nh(*x, &f, effort, &opts)?)
        }
        Command::Density { poly, family, bound } => {
            let f = poly.clone().unwrap_or_else(|| match family {
                NamedPoly::Decic => decic_disc_poly(),
                NamedPoly::Sextic => sextic_disc_poly(),
            });
            note("poly", &f);
            let rep = local_obstruction_scan(&f, *bound)?;
            let records = rep
                .rho_values
                .iter()
                .map(|e| {
                    vec![
                        e.r.to_string(),
                        e.rho.to_string(),
                        e.units.to_string(),
                        e.obstruction.to_string(),
                        e.witness.map(|w| w.to_string()).unwrap_or_default(),
                    ]
                })
                .collect();
            let summary = to_value(&rep);
            match cli.global.format {
                Some(Format::Csv) => Output::Table {
                    header: vec!["r", "rho", "units", "obstruction", "witness"],
                    records,
                    rows: Value::Null,
                    summary,
                },
                _ => Output::Json(summary),
            }
        }
    };
    Ok(out)
}
