//! `rrs`: validate models, run the statement suite, build quasi-directoids,
//! take θ-quotients, enumerate and search.
//!
//! Machine-readable JSON goes to stdout, human-readable text to stderr.
//! Exit status: 0 success, 1 a failed verdict or counterexample, 2 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rrs_core::directoid::{build_quasi_directoids, induced_system};
use rrs_core::props::{self, SuiteOutput, TOOL_NAME, TOOL_VERSION};
use rrs_core::quotient::{is_pocrim, quotient, theta_equational};
use rrs_core::relation::{dagger, polarity_violation, star, DEFAULT_POLARITY_CAP};
use rrs_core::search::{self, ArrowChoice, ModelClass, SearchSpec};
use rrs_core::{BinRel, Error, Model, PropertyReport, QuasiDirectoid, SubsetMask};

#[derive(Parser)]
#[command(name = "rrs", version, about = "Finite-model workbench for residuated relational systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model against the axioms of a class.
    Validate {
        model: PathBuf,
        /// Defaults to residuated-quasi-directoid when the model has a join, else rrs.
        #[arg(long)]
        class: Option<ModelClass>,
        #[command(flatten)]
        zero: ZeroArg,
    },
    /// Run every statement checker on a model.
    Props {
        model: PathBuf,
        /// Report a single statement id only.
        #[arg(long)]
        statement: Option<String>,
        #[command(flatten)]
        zero: ZeroArg,
    },
    /// All quasi-directoids built from a pre-ordered residuated system.
    Directoids { model: PathBuf },
    /// The relational system induced by a model's join.
    Induce { model: PathBuf },
    /// The θ-quotient and its pocrim verdict.
    Quotient {
        model: PathBuf,
        /// Which built quasi-directoid to use when the model has no join.
        #[arg(long, default_value_t = 0)]
        directoid: usize,
    },
    /// Every model of a class at one size, one JSON object per line.
    Enumerate {
        #[arg(long)]
        class: ModelClass,
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Least model of a class (up to a size) where a property fails.
    Search {
        #[arg(long)]
        class: ModelClass,
        /// Statement id, or identity / inequality such as "(x|y)|x = x|y".
        #[arg(long)]
        negate: String,
        #[arg(long)]
        max_size: usize,
        /// Search only at exactly --max-size.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Polarity and star/dagger utilities on a bare relation.
    Galois {
        relation: PathBuf,
        /// Comma-separated subset X; prints X*.
        #[arg(long, value_delimiter = ',')]
        star: Option<Vec<usize>>,
        /// Comma-separated subset Y; prints Y†.
        #[arg(long, value_delimiter = ',')]
        dagger: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_POLARITY_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
struct ZeroArg {
    /// Designate the constant 0 when the file has none.
    #[arg(long)]
    zero: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    /// Emit labeled models instead of one per isomorphism class.
    #[arg(long)]
    labeled: bool,
    /// Take only the least arrow when residuation leaves a choice.
    #[arg(long)]
    least_arrow: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Size cap (overrides RRS_SIZE_CAP and the class default).
    #[arg(long)]
    cap: Option<usize>,
}

impl SearchArgs {
    fn spec(&self, size: usize, class: ModelClass) -> SearchSpec {
        let mut spec = SearchSpec::new(size, class);
        spec.up_to_iso = !self.labeled;
        spec.jobs = self.jobs;
        spec.cap = self.cap;
        if self.least_arrow {
            spec.arrows = ArrowChoice::Least;
        }
        spec
    }
}

/// Failure modes mapped to exit codes.
enum Failure {
    Input(String),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn load_model(path: &Path, zero: Option<usize>) -> Result<Model, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let m = Model::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(match zero {
        Some(z) => m.with_zero(z)?,
        None => m,
    })
}

#[derive(Serialize)]
struct Verdict<'a> {
    tool: &'static str,
    version: &'static str,
    class: ModelClass,
    holds: bool,
    statements: &'a PropertyReport,
}

fn validate(path: &Path, class: Option<ModelClass>, zero: Option<usize>) -> Outcome {
    let m = load_model(path, zero)?;
    let class =
        class.unwrap_or(if m.join_table().is_some() { ModelClass::ResiduatedQuasiDirectoid } else { ModelClass::Rrs });
    let report = class.validate(&m);
    let holds = report.all_hold();
    emit(&Verdict { tool: TOOL_NAME, version: TOOL_VERSION, class, holds, statements: &report });
    eprint!("{report}");
    eprintln!("{}: {}", class, if holds { "member" } else { "not a member" });
    if holds {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn run_props(path: &Path, statement: Option<String>, zero: Option<usize>) -> Outcome {
    let m = load_model(path, zero)?;
    let mut out = SuiteOutput::new(&m);
    if let Some(id) = statement {
        let mut only = props::report_for(&id, &m)?;
        only.retain(|s| s == id);
        out.statements = only;
    }
    emit(&out);
    eprint!("{}", out.statements);
    Ok(())
}

#[derive(Serialize)]
struct Directoids {
    tool: &'static str,
    version: &'static str,
    count: usize,
    directoids: Vec<Model>,
}

fn directoids(path: &Path) -> Outcome {
    let m = load_model(path, None)?;
    let qs = build_quasi_directoids(&m)?;
    eprintln!("{} quasi-directoid(s)", qs.len());
    let directoids: Vec<Model> = qs.into_iter().map(QuasiDirectoid::into_model).collect();
    emit(&Directoids { tool: TOOL_NAME, version: TOOL_VERSION, count: directoids.len(), directoids });
    Ok(())
}

fn induce(path: &Path) -> Outcome {
    let m = load_model(path, None)?;
    let q = QuasiDirectoid::new(m)?;
    match induced_system(&q) {
        Ok(s) => {
            emit(&s);
            Ok(())
        }
        Err(e @ (Error::Precondition(_) | Error::Postcondition(_))) => {
            eprintln!("{e}");
            Err(Failure::Verdict)
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct QuotientOut<'a> {
    tool: &'static str,
    version: &'static str,
    quotient: &'a rrs_core::Quotient,
    pocrim: bool,
    statements: &'a PropertyReport,
}

fn run_quotient(path: &Path, index: usize) -> Outcome {
    let m = load_model(path, None)?;
    let q = if m.join_table().is_some() {
        QuasiDirectoid::new(m)?
    } else {
        let mut qs = build_quasi_directoids(&m)?;
        if index >= qs.len() {
            return Err(Failure::Input(format!("only {} quasi-directoid(s) available", qs.len())));
        }
        qs.swap_remove(index)
    };
    let p = theta_equational(&q)?;
    let quo = match quotient(&q, &p) {
        Ok(quo) => quo,
        Err(e @ Error::NotJoinCongruence(_)) => {
            eprintln!("{e}");
            return Err(Failure::Verdict);
        }
        Err(e) => return Err(e.into()),
    };
    let report = is_pocrim(&quo.model);
    let pocrim = report.all_hold();
    emit(&QuotientOut { tool: TOOL_NAME, version: TOOL_VERSION, quotient: &quo, pocrim, statements: &report });
    eprintln!("{} classes {:?}; pocrim: {pocrim}", p.num_classes(), quo.classes);
    if pocrim {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

#[derive(Serialize)]
struct Summary {
    class: ModelClass,
    size: usize,
    count: usize,
    elapsed_ms: u128,
}

fn run_enumerate(class: ModelClass, size: usize, args: &SearchArgs) -> Outcome {
    let spec = args.spec(size, class);
    let start = Instant::now();
    let models = search::enumerate(&spec)?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for m in &models {
        use std::io::Write;
        serde_json::to_writer(&mut out, m).expect("serializable");
        writeln!(out).map_err(|e| Failure::Input(e.to_string()))?;
    }
    drop(out);
    let summary = Summary { class, size, count: models.len(), elapsed_ms: start.elapsed().as_millis() };
    emit(&summary);
    eprintln!("{} {class} model(s) of size {size}", models.len());
    Ok(())
}

#[derive(Serialize)]
struct SearchOut<'a> {
    tool: &'static str,
    version: &'static str,
    class: ModelClass,
    property: &'a str,
    max_size: usize,
    counterexample: Option<search::Counterexample>,
}

fn run_search(class: ModelClass, negate: &str, max_size: usize, exact: bool, args: &SearchArgs) -> Outcome {
    let spec = args.spec(max_size, class).with_property(negate);
    let found = if exact { search::counterexample_at_size(&spec)? } else { search::counterexample_search(&spec)? };
    match &found {
        Some(c) => eprintln!("counterexample of size {} with witness {:?}", c.size, c.witness),
        None => eprintln!("no counterexample up to size {max_size}"),
    }
    let failed = found.is_some();
    emit(&SearchOut {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        class,
        property: negate,
        max_size,
        counterexample: found,
    });
    if failed {
        Err(Failure::Verdict)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct GaloisOut {
    tool: &'static str,
    version: &'static str,
    size: usize,
    polarity: Option<bool>,
    violation: Option<(SubsetMask, SubsetMask)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    star: Option<SubsetMask>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dagger: Option<SubsetMask>,
}

fn galois(path: &Path, xs: Option<Vec<usize>>, ys: Option<Vec<usize>>, cap: usize) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let r: BinRel = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let n = r.size();
    let (polarity, violation) = match polarity_violation(&r, cap) {
        Ok(v) => (Some(v.is_none()), v),
        Err(Error::SizeTooLarge { .. }) => (None, None),
        Err(e) => return Err(e.into()),
    };
    let star = xs.map(|xs| SubsetMask::from_indices(n, &xs).map(|s| star(&r, &s))).transpose()?;
    let dagger = ys.map(|ys| SubsetMask::from_indices(n, &ys).map(|s| dagger(&r, &s))).transpose()?;
    match polarity {
        Some(true) => eprintln!("polarity pair: holds"),
        Some(false) => eprintln!("polarity pair: FAILS at {violation:?}"),
        None => eprintln!("polarity check skipped: size {n} above cap {cap}"),
    }
    emit(&GaloisOut { tool: TOOL_NAME, version: TOOL_VERSION, size: n, polarity, violation, star, dagger });
    if polarity == Some(false) {
        Err(Failure::Verdict)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { model, class, zero } => validate(&model, class, zero.zero),
        Command::Props { model, statement, zero } => run_props(&model, statement, zero.zero),
        Command::Directoids { model } => directoids(&model),
        Command::Induce { model } => induce(&model),
        Command::Quotient { model, directoid } => run_quotient(&model, directoid),
        Command::Enumerate { class, size, search } => run_enumerate(class, size, &search),
        Command::Search { class, negate, max_size, exact, search } => {
            run_search(class, &negate, max_size, exact, &search)
        }
        Command::Galois { relation, star, dagger, cap } => galois(&relation, star, dagger, cap),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
