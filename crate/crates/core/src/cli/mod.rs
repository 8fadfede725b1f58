//! Command-line front end.
//!
//! ```text
//! rlie [--json] [--max-elements N] [--max-lattice N] [--max-env-dim N] <COMMAND>
//!   validate FILE
//!   analyze FILE
//!   env FILE
//!   pir FILE [--method structural|brute|both]
//!   audit --p P --dim D (--exhaustive | --sample N [--seed S])
//!   catalog list
//!   catalog emit KIND [--p P]
//! ```
//!
//! Exit codes: 0 success (a "no" verdict included), 1 bad input or failed validation,
//! 2 a size guard was hit, 3 internal assertion or decider disagreement.
//! JSON reports carry no timings so that identical runs give identical bytes.

mod document;
mod format;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, CatalogKind};
use crate::criterion::{self, AuditMode, PirVerdict};
use crate::error::{Error, Result};
use crate::gfp::Subspace;
use crate::rla::{CyclicTest, RestrictedLieAlgebra};
use crate::uenv::EnvAlgebra;
use crate::Limits;

pub use document::{emit, parse, AlgebraDocument, BracketEntry, SCHEMA_VERSION};
use format::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rlie",
    version,
    about = "Restricted Lie algebras and principal ideal rings"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    max_elements: Option<u64>,
    #[arg(long, global = true)]
    max_lattice: Option<usize>,
    #[arg(long, global = true)]
    max_env_dim: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the restricted Lie algebra axioms.
    Validate { file: String },
    /// Series, center, dimension subalgebras, Fitting decomposition and cyclicity.
    Analyze { file: String },
    /// The restricted enveloping algebra: integrals and augmentation powers.
    Env { file: String },
    /// Decide whether u(L) is a principal ideal ring.
    Pir {
        file: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Compare both deciders over a family of algebras.
    Audit(AuditArgs),
    /// Named algebra families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    dim: usize,
    #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
    exhaustive: bool,
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "sample")]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List the kind syntax.
    List,
    /// Print the document of a catalog algebra, e.g. `torus:2` or `mixed:1,1`.
    Emit {
        kind: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Structural,
    Brute,
    Both,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            code: EXIT_OK,
            json,
            text,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_cap() => EXIT_CAP,
        Error::Assertion(_) => EXIT_ASSERT,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Validation(_) => "validation",
        Error::Parse(_) | Error::Malformed(_) | Error::Field(_) => "input",
        e if e.is_cap() => "cap",
        Error::Assertion(_) => "assertion",
        _ => "error",
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let defaults = Limits::default();
    let limits = Limits {
        max_elements: cli.max_elements.unwrap_or(defaults.max_elements),
        max_lattice: cli.max_lattice.unwrap_or(defaults.max_lattice),
        max_env_dim: cli.max_env_dim.unwrap_or(defaults.max_env_dim),
    };
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Analyze { file } => load(file).and_then(|l| analyze(&l, &limits)),
        Command::Env { file } => load(file).and_then(|l| env(&l, &limits)),
        Command::Pir { file, method } => load(file).and_then(|l| pir(&l, *method, &limits)),
        Command::Audit(a) => audit(a, &limits),
        Command::Catalog(CatalogCommand::List) => Ok(catalog_list()),
        Command::Catalog(CatalogCommand::Emit { kind, p }) => catalog_emit(kind, *p),
    };
    match result {
        Ok(r) => Outcome {
            code: r.code,
            stdout: if cli.json {
                serde_json::to_string_pretty(&r.json).expect("reports serialize") + "\n"
            } else {
                r.text + "\n"
            },
            stderr: String::new(),
        },
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let v =
                    json!({"error": error_kind(&e), "message": e.to_string(), "exit_code": code});
                Outcome {
                    code,
                    stdout: serde_json::to_string_pretty(&v).expect("reports serialize") + "\n",
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        }
    }
}

fn read(file: &str) -> Result<String> {
    std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))
}

fn load(file: &str) -> Result<RestrictedLieAlgebra> {
    parse(&read(file)?)
}

fn header(l: &RestrictedLieAlgebra) -> String {
    format!("L over F_{} with basis {}", l.p(), l.names().join(", "))
}

fn validate(file: &str) -> Result<Report> {
    let l = AlgebraDocument::from_json(&read(file)?)?.to_unchecked()?;
    let report = l.validate();
    let violations: Vec<String> = if report.is_ok() {
        Vec::new()
    } else {
        report.to_string().split("; ").map(String::from).collect()
    };
    let json = json!({
        "command": "validate",
        "schema_version": SCHEMA_VERSION,
        "p": l.p(),
        "dim": l.dim(),
        "valid": report.is_ok(),
        "violations": violations,
    });
    let text = if report.is_ok() {
        format!("{}\nvalid restricted Lie algebra", header(&l))
    } else {
        format!("{}\ninvalid: {}", header(&l), violations.join("\n  "))
    };
    Ok(Report {
        code: if report.is_ok() { EXIT_OK } else { EXIT_INPUT },
        json,
        text,
    })
}

/// `None` when a check ran out of budget.
fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(e),
    }
}

fn analyze(l: &RestrictedLieAlgebra, limits: &Limits) -> Result<Report> {
    let mut text = vec![header(l)];
    let abelian = l.is_abelian();
    text.push(format!("abelian: {}", yes_no(abelian)));
    let center = l.center();
    text.push(format!("center: {}", lie_basis_text(l, &center)));
    let derived = l.derived();
    text.push(format!("derived algebra: {}", lie_basis_text(l, &derived)));

    let mut gamma = Vec::new();
    for i in 1.. {
        let g = l.gamma(i);
        let stable = gamma.last().is_some_and(|prev: &Subspace| prev == &g);
        if stable {
            break;
        }
        text.push(format!("gamma_{i}: {}", lie_basis_text(l, &g)));
        let zero = g.is_zero();
        gamma.push(g);
        if zero {
            break;
        }
    }

    let mut dn = Vec::new();
    let top = (l.p() as usize * l.dim()).max(2);
    for n in 1..=top {
        match l.dn(n, limits.max_elements) {
            Ok(d) => {
                text.push(format!("D_{n}: {}", lie_basis_text(l, &d)));
                let zero = d.is_zero();
                dn.push(json!({"n": n, "subspace": subspace(&d)}));
                if zero {
                    break;
                }
            }
            Err(e) if e.is_cap() => {
                text.push(format!("D_{n}: budget exceeded"));
                dn.push(json!({"n": n, "subspace": "budget exceeded"}));
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let fitting = if abelian {
        let (t, n) = l.fitting()?;
        text.push(format!(
            "Fitting: T = {}, N = {}",
            lie_basis_text(l, &t),
            lie_basis_text(l, &n)
        ));
        json!({"torus": subspace(&t), "nil": subspace(&n)})
    } else {
        Value::Null
    };
    let torus = l.is_torus();
    text.push(format!("torus: {}", yes_no(torus)));
    let cyclic = capped(l.is_cyclic(limits.max_elements))?;
    let nilcyclic = capped(l.is_nilcyclic(limits.max_elements))?;
    let p_nil = capped(l.is_p_nilpotent(limits.max_elements))?;
    for (name, c) in [("cyclic", &cyclic), ("nilcyclic", &nilcyclic)] {
        text.push(match c {
            Some(CyclicTest {
                generator: Some(g), ..
            }) => format!("{name}: yes, generator {}", lie_text(l, g)),
            Some(_) => format!("{name}: no"),
            None => format!("{name}: budget exceeded"),
        });
    }
    text.push(format!(
        "p-nilpotent: {}",
        p_nil.map(yes_no).unwrap_or("budget exceeded")
    ));
    let cyc = |c: &Option<CyclicTest>| match c {
        Some(c) => json!({"cyclic": c.cyclic, "generator": c.generator.as_ref().map(coords)}),
        None => json!("budget exceeded"),
    };
    let (cyclic, nilcyclic) = (cyc(&cyclic), cyc(&nilcyclic));
    let p_nil = p_nil.map_or(json!("budget exceeded"), |b| json!(b));
    let json = json!({
        "command": "analyze",
        "p": l.p(),
        "dim": l.dim(),
        "abelian": abelian,
        "center": subspace(&center),
        "derived": subspace(&derived),
        "lower_central_series": gamma.iter().map(subspace).collect::<Vec<_>>(),
        "dimension_subalgebras": dn,
        "fitting": fitting,
        "torus": torus,
        "cyclic": cyclic,
        "nilcyclic": nilcyclic,
        "p_nilpotent": p_nil,
    });
    Ok(Report::ok(json, text.join("\n")))
}

fn env(l: &RestrictedLieAlgebra, limits: &Limits) -> Result<Report> {
    let a = EnvAlgebra::build(l, limits.max_env_dim)?;
    let mut text = vec![header(l), format!("dim u(L) = {}", a.dim())];
    let integrals = a.integrals()?;
    let left = &integrals.left.basis()[0];
    let right = &integrals.right.basis()[0];
    let eps = left.get(0);
    text.push(format!("left integral: {}", env_text(&a, left)));
    text.push(format!("right integral: {}", env_text(&a, right)));
    text.push(format!(
        "epsilon(left integral) = {eps} (semisimple: {})",
        yes_no(eps != 0)
    ));
    let series = a.omega_series();
    let mut table = Vec::new();
    for (k, s) in series.iter().enumerate() {
        let meet = a.intersect_with_lie(s)?;
        text.push(format!(
            "omega^{}: dim {}, L meet omega^{} = {}",
            k + 1,
            s.dim(),
            k + 1,
            lie_basis_text(l, &meet)
        ));
        table.push(json!({"n": k + 1, "dim": s.dim(), "lie_part": subspace(&meet)}));
    }
    let radical = if a.is_commutative() {
        let r = a.commutative_radical()?;
        text.push(format!("nilradical: dim {}", r.dim()));
        json!(subspace(&r))
    } else {
        Value::Null
    };
    let json = json!({
        "command": "env",
        "p": l.p(),
        "dim_lie": l.dim(),
        "dim_env": a.dim(),
        "monomials": (0..a.dim()).map(|i| a.monomial_name(i)).collect::<Vec<_>>(),
        "left_integral": coords(left),
        "right_integral": coords(right),
        "epsilon_of_integral": eps,
        "semisimple": eps != 0,
        "omega_powers": table,
        "commutative": a.is_commutative(),
        "nilradical": radical,
    });
    Ok(Report::ok(json, text.join("\n")))
}

fn pir(l: &RestrictedLieAlgebra, method: MethodArg, limits: &Limits) -> Result<Report> {
    let mut text = vec![header(l)];
    let mut verdicts: Vec<PirVerdict> = Vec::new();
    let mut env = None;
    if method != MethodArg::Brute {
        verdicts.push(criterion::structural_decision(l, limits)?);
    }
    if method != MethodArg::Structural {
        env = Some(EnvAlgebra::build(l, limits.max_env_dim)?);
        verdicts.push(criterion::brute_decision(l, limits)?);
    }
    for v in &verdicts {
        text.push(verdict_text(l, env.as_ref(), v));
    }
    let agreement = match verdicts.as_slice() {
        [s, b] => {
            let agree = s.is_pir == b.is_pir;
            text.push(format!("agreement: {}", yes_no(agree)));
            Some(agree)
        }
        _ => None,
    };
    let json = json!({
        "command": "pir",
        "p": l.p(),
        "dim": l.dim(),
        "verdicts": verdicts.iter().map(|v| verdict_json(l, v)).collect::<Vec<_>>(),
        "agreement": agreement,
    });
    Ok(Report {
        code: if agreement == Some(false) {
            EXIT_ASSERT
        } else {
            EXIT_OK
        },
        json,
        text: text.join("\n"),
    })
}

fn audit(args: &AuditArgs, limits: &Limits) -> Result<Report> {
    let mode = match args.sample {
        Some(size) => AuditMode::Sampled {
            size,
            seed: args.seed,
        },
        None => AuditMode::Exhaustive,
    };
    let r = criterion::audit(args.p, args.dim, mode, limits)?;
    let mode_json = match mode {
        AuditMode::Exhaustive => json!({"kind": "exhaustive"}),
        AuditMode::Sampled { size, seed } => json!({"kind": "sampled", "size": size, "seed": seed}),
    };
    let json = json!({
        "command": "audit",
        "p": r.p,
        "dim": r.dim,
        "mode": mode_json,
        "count": r.count,
        "agreements": r.agreements,
        "inconclusive": r.inconclusive,
        "pir_count": r.pir_count,
        "side_mismatches": r.side_mismatches,
        "disagreements": r.disagreements.iter().map(|d| json!({
            "structural": d.structural,
            "brute": d.brute,
            "document": AlgebraDocument::from_algebra(&d.algebra),
        })).collect::<Vec<_>>(),
    });
    let mut text = vec![format!(
        "audit p = {}, dim = {}: {} algebras, {} agreements ({} principal ideal rings), {} inconclusive, {} disagreements, {} right/left mismatches ({:.2?})",
        r.p,
        r.dim,
        r.count,
        r.agreements,
        r.pir_count,
        r.inconclusive,
        r.disagreements.len(),
        r.side_mismatches,
        r.elapsed
    )];
    for d in &r.disagreements {
        text.push(format!(
            "disagreement (structural {}, brute {}):\n{}",
            yes_no(d.structural),
            yes_no(d.brute),
            emit(&d.algebra)
        ));
    }
    Ok(Report {
        code: if r.passed() { EXIT_OK } else { EXIT_ASSERT },
        json,
        text: text.join("\n"),
    })
}

fn catalog_list() -> Report {
    let kinds = [
        ("torus:D", "abelian, e_i^[p] = e_i"),
        ("nilcyclic:D", "abelian, e_i^[p] = e_(i+1), last maps to 0"),
        ("strongly_abelian:D", "abelian, zero p-map"),
        ("nonabelian2", "[x, y] = y, x^[p] = x, y^[p] = 0"),
        ("heisenberg", "[x, y] = z central, zero p-map"),
        ("mixed:A,B", "torus:A plus nilcyclic:B"),
    ];
    let text = kinds
        .iter()
        .map(|(k, d)| format!("{k:<20} {d}"))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "command": "catalog list",
        "kinds": kinds.iter().map(|(k, d)| json!({"syntax": k, "description": d})).collect::<Vec<_>>(),
        "standard": catalog::standard_kinds(3).iter().map(|k| k.to_string()).collect::<Vec<_>>(),
    });
    Report::ok(json, text)
}

fn catalog_emit(kind: &str, p: u32) -> Result<Report> {
    let l = catalog::make(kind.parse::<CatalogKind>()?, p)?;
    let doc = AlgebraDocument::from_algebra(&l);
    Ok(Report::ok(
        serde_json::to_value(&doc).expect("documents serialize"),
        doc.to_json(),
    ))
}
