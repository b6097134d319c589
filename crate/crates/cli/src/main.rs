//! `brauer-verify`: runs the verification checks and the individual
//! computations behind them.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure, 2 on a
//! usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use m11_brauer::brauer::{brauer_char2_closed, brauer_finite_field, brauer_upper_bound, format_group, BrauerResult};
use m11_brauer::checks::{
    check_names, coordinate_change_report, find_check, j_check_report, registry, run_check, seeded_rng,
    torsion_table_report, CheckRecord, RunConfig, Status,
};
use m11_brauer::cohomology::cohomology;
use m11_brauer::descriptor::{parse_group, parse_group_json, parse_module, parse_module_json, to_pretty};
use m11_brauer::field::Field;
use m11_brauer::Error;

#[derive(Parser)]
#[command(name = "brauer-verify", version, about = "Reproducible checks for Brauer group computations on the level-3 moduli stack")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Seed for every randomized check.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Number of random trials per randomized check (default 100; 20 curves for torsion-table).
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Omit the timestamp so that identical runs produce identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check, or `all`.
    Verify {
        /// Check name, or `all`. Use `verify list` to see the names.
        name: String,
    },
    /// Compute H^i(G, M) for a group and module descriptor.
    Cohomology {
        /// Group shorthand (gl2:p, cyclic:n, semidirect:m:n:r) or inline JSON.
        #[arg(long, conflicts_with = "group_file", required_unless_present = "group_file")]
        group: Option<String>,
        /// File holding a JSON group descriptor.
        #[arg(long)]
        group_file: Option<PathBuf>,
        /// Module shorthand (paper-M, trivial:n) or inline JSON.
        #[arg(long, conflicts_with = "module_file", required_unless_present = "module_file")]
        module: Option<String>,
        /// File holding a JSON module descriptor.
        #[arg(long)]
        module_file: Option<PathBuf>,
        /// Cohomological degree, 0 to 2.
        #[arg(long)]
        degree: usize,
    },
    /// Compute a Brauer group: closed-char2, finite:q with q a power of 2, or bound:p.
    Brauer {
        spec: String,
    },
    /// Hesse-curve and Weierstrass checks.
    Hesse {
        #[arg(value_enum)]
        check: HesseCheck,
        /// Field for torsion-table, as p:k.
        #[arg(long, default_value = "2:2")]
        field: String,
        /// Prime for coord-change (default 7, 13, 31, 43) and j-check (default 13).
        #[arg(long)]
        prime: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum HesseCheck {
    TorsionTable,
    CoordChange,
    JCheck,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Descriptor(_)
            | Error::DegreeOutOfRange(_)
            | Error::InvalidParameter(_)
            | Error::UnsupportedField { .. }
            | Error::CharacteristicThree
            | Error::InvalidGroup(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

/// A finished report: pass flag, JSON payload and text rendering.
struct Report {
    pass: bool,
    payload: Map<String, Value>,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match emit(&cli, report) {
            Ok(pass) => ExitCode::from(if pass { 0 } else { 1 }),
            Err(f) => {
                eprintln!("error: {}", f.message);
                ExitCode::from(f.code)
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn command_line(cli: &Cli) -> String {
    match &cli.command {
        Command::Verify { name } => format!("verify {name}"),
        Command::Cohomology { degree, .. } => format!("cohomology --degree {degree}"),
        Command::Brauer { spec } => format!("brauer {spec}"),
        Command::Hesse { check, .. } => format!("hesse {}", check.to_possible_value().unwrap().get_name()),
    }
}

fn emit(cli: &Cli, report: Report) -> Result<bool, Failure> {
    let c = &cli.common;
    let out = match c.format {
        Format::Json => {
            let mut v = Map::new();
            v.insert("schema".into(), json!("1"));
            v.insert("command".into(), json!(command_line(cli)));
            v.insert("seed".into(), json!(c.seed));
            v.insert("trials".into(), json!(c.trials));
            if !c.deterministic {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
                v.insert("timestamp".into(), json!(secs));
            }
            v.insert("status".into(), json!(if report.pass { "pass" } else { "fail" }));
            v.extend(report.payload);
            to_pretty(&Value::Object(v))
        }
        Format::Text => {
            let trials = c.trials.map_or_else(|| "default".to_string(), |t| t.to_string());
            format!("# {} (seed {}, trials {})\n{}", command_line(cli), c.seed, trials, report.text)
        }
    };
    match &c.output {
        Some(path) => std::fs::write(path, out).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{out}"),
    }
    Ok(report.pass)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let c = &cli.common;
    match &cli.command {
        Command::Verify { name } => verify(name, c),
        Command::Cohomology { group, group_file, module, module_file, degree } => {
            cmd_cohomology(group.as_deref(), group_file.as_ref(), module.as_deref(), module_file.as_ref(), *degree)
        }
        Command::Brauer { spec } => cmd_brauer(spec),
        Command::Hesse { check, field, prime } => cmd_hesse(*check, field, *prime, c),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn verify(name: &str, c: &Common) -> Result<Report, Failure> {
    let config = RunConfig { seed: c.seed, trials: c.trials.unwrap_or(100) };
    if name == "list" {
        let text: String = registry().iter().map(|k| format!("{:<28} {}\n", k.name, k.anchor)).collect();
        let names = json!(check_names());
        return Ok(Report { pass: true, payload: Map::from_iter([("available".to_string(), names)]), text });
    }
    let records: Vec<CheckRecord> = if name == "all" {
        registry().iter().map(|k| run_check(k, &config)).collect()
    } else {
        let check = find_check(name).ok_or_else(|| {
            Failure::usage(format!("unknown check `{name}`; available: all, {}", check_names().join(", ")))
        })?;
        vec![run_check(&check, &config)]
    };
    let passed = records.iter().filter(|r| r.status == Status::Pass).count();
    let mut text = String::new();
    for r in &records {
        let crit = r.criterion.map_or_else(|| "  ".to_string(), |n| format!("{n:>2}"));
        text.push_str(&format!("{} {crit} {:<28} {}\n", status_word(r.status), r.name, r.summary));
    }
    text.push_str(&format!("{passed}/{} checks passed\n", records.len()));
    let pass = passed == records.len();
    let mut payload = Map::new();
    payload.insert("trials".into(), json!(config.trials));
    payload.insert("checks".into(), serde_json::to_value(&records).expect("serializable"));
    Ok(Report { pass, payload, text })
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn cmd_cohomology(
    group: Option<&str>,
    group_file: Option<&PathBuf>,
    module: Option<&str>,
    module_file: Option<&PathBuf>,
    degree: usize,
) -> Result<Report, Failure> {
    let g = match (group, group_file) {
        (Some(s), _) => parse_group(s)?,
        (None, Some(p)) => parse_group_json(&read_file(p)?, &p.display().to_string())?,
        (None, None) => return Err(Failure::usage("one of --group or --group-file is required")),
    };
    let g = Arc::new(g);
    let m = match (module, module_file) {
        (Some(s), _) => parse_module(s, &g)?,
        (None, Some(p)) => parse_module_json(&read_file(p)?, &p.display().to_string(), &g)?,
        (None, None) => return Err(Failure::usage("one of --module or --module-file is required")),
    };
    let h = cohomology(&m, degree)?;
    let factors = h.invariant_factors();
    let shown = format_group(&factors);
    let mut text = format!(
        "H^{degree}({}, M) = {shown}\ninvariant factors {factors:?}\n|Z| = {}, |B| = {}\n",
        g.name(),
        h.cocycle_order(),
        h.coboundary_order()
    );
    for (i, r) in h.representatives().iter().enumerate() {
        text.push_str(&format!("representative {i}: {:?}\n", r.values()));
    }
    let mut payload = Map::new();
    payload.insert("group".into(), json!(g.name()));
    payload.insert("order".into(), json!(g.order()));
    payload.insert("moduli".into(), json!(m.moduli()));
    if let Value::Object(o) = h.to_json() {
        payload.extend(o);
    }
    Ok(Report { pass: true, payload, text })
}

fn cmd_brauer(spec: &str) -> Result<Report, Failure> {
    let bad = || Failure::usage(format!("malformed field spec `{spec}`; expected closed-char2, finite:q (q = 2^k) or bound:p"));
    let result: BrauerResult = if spec == "closed-char2" {
        brauer_char2_closed()?
    } else if let Some(q) = spec.strip_prefix("finite:") {
        let q: u64 = q.parse().map_err(|_| bad())?;
        if q < 2 || !q.is_power_of_two() {
            return Err(bad());
        }
        brauer_finite_field(q.trailing_zeros())?
    } else if let Some(p) = spec.strip_prefix("bound:") {
        brauer_upper_bound(p.parse().map_err(|_| bad())?)?
    } else {
        return Err(bad());
    };
    let relation = if result.bound { "is a subgroup of" } else { "=" };
    let mut text = format!("Br over {} {relation} {}\n", result.field, result.group);
    for e in &result.evidence {
        text.push_str(&format!("  [{}] {} = {} ({})\n", e.source.label(), e.fact, e.value, e.reference));
    }
    let payload = match serde_json::to_value(&result).expect("serializable") {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    Ok(Report { pass: true, payload, text })
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    let bad = || Failure::usage(format!("malformed field `{s}`; expected p:k"));
    let (p, k) = s.split_once(':').ok_or_else(bad)?;
    Ok(Field::new(p.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?)?)
}

fn cmd_hesse(check: HesseCheck, field: &str, prime: Option<u64>, c: &Common) -> Result<Report, Failure> {
    let name = check.to_possible_value().unwrap().get_name().to_string();
    let mut rng = seeded_rng(c.seed, &name);
    let (pass, summary, details) = match check {
        HesseCheck::TorsionTable => torsion_table_report(parse_field(field)?, c.trials.unwrap_or(20), &mut rng)?,
        HesseCheck::CoordChange => {
            let primes = prime.map_or_else(|| vec![7, 13, 31, 43], |p| vec![p]);
            coordinate_change_report(&primes, c.trials.unwrap_or(100), &mut rng)?
        }
        HesseCheck::JCheck => j_check_report(prime.unwrap_or(13), c.trials.unwrap_or(100), &mut rng)?,
    };
    let text = format!("{} {name}: {summary}\n", if pass { "PASS" } else { "FAIL" });
    let mut payload = Map::new();
    payload.insert("check".into(), json!(name));
    payload.insert("summary".into(), json!(summary));
    payload.insert("details".into(), details);
    Ok(Report { pass, payload, text })
}
