//! Command-line front end: read a matroid or code file, run one command,
//! render the result.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::betti::{betti_tables, graded_betti_table, support_shift_holds, GradedBettiTable};
use crate::codes::{CodeError, LinearCode, ENUMERATION_BUDGET};
use crate::matrix::FieldMatrix;
use crate::matroid::{Matroid, MatroidError};
use crate::parse::ParseError;
use crate::poly::UniPoly;
use crate::subset::GroundSubset;
use crate::weight::{
    enumerator_from_gwp, enumerator_from_tutte, gwp_complement_form, gwp_direct,
    gwp_elongation_shift, gwp_from_betti, gwp_naive, higher_weights_by_nullity,
    higher_weights_from_betti, higher_weights_from_gwp, tutte, tutte_from_enumerator, WeightError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Matroid bases file (text or JSON).
    Bases,
    /// Generator matrix of a linear code.
    Gen,
    /// Parity-check matrix of a linear code.
    Pcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Rank,
    Circuits,
    Dual,
    Elongate,
    Betti,
    Gwp,
    Enumerator,
    Tutte,
    Weights,
    Distribution,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Generalized weight polynomials, Betti tables and Tutte polynomials of
/// matroids and linear codes.
#[derive(Debug, Clone, Parser)]
#[command(name = "matroid-gwp", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "bases")]
    pub kind: InputKind,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Elongation level for `elongate`, `betti` and `gwp`.
    #[arg(long)]
    pub level: Option<usize>,
    /// Extension exponent m for `distribution`.
    #[arg(long)]
    pub ext: Option<u32>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Use the literal 3^n definition for `gwp`.
    #[arg(long)]
    pub naive: bool,
    /// Comma-separated labels for `rank`, e.g. `1,2,5`.
    #[arg(long)]
    pub subset: Option<String>,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>, kind: InputKind) -> Self {
        RunConfig {
            command,
            input: input.into(),
            kind,
            format: Format::Text,
            level: None,
            ext: None,
            threads: None,
            naive: false,
            subset: None,
        }
    }
}

/// Failures that stop a command before any check runs (exit status 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Rendered output plus whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    pub passed: bool,
}

impl Report {
    fn ok(output: String) -> Self {
        Report {
            output,
            passed: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Runs `config` and returns the exit status with everything to print.
/// Status 2 output is a diagnostic for stderr.
pub fn run(config: &RunConfig) -> (i32, String) {
    let result = match config.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(config)),
            Err(e) => Err(CliError::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => execute(config),
    };
    match result {
        Ok(report) => (report.exit_code(), report.output),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

struct Input {
    matroid: Matroid,
    code: Option<LinearCode>,
}

fn load(config: &RunConfig) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(&config.input).map_err(|source| CliError::Io {
        path: config.input.clone(),
        source,
    })?;
    let parse_err = |source| CliError::Parse {
        path: config.input.clone(),
        source,
    };
    match config.kind {
        InputKind::Bases => Ok(Input {
            matroid: Matroid::parse(&text).map_err(parse_err)?,
            code: None,
        }),
        InputKind::Gen | InputKind::Pcheck => {
            let matrix = FieldMatrix::parse(&text).map_err(parse_err)?;
            let code = if config.kind == InputKind::Gen {
                LinearCode::from_generator(matrix)?
            } else {
                LinearCode::from_parity_check(matrix)?
            };
            Ok(Input {
                matroid: code.parity_matroid()?,
                code: Some(code),
            })
        }
    }
}

fn execute(config: &RunConfig) -> Result<Report, CliError> {
    let input = load(config)?;
    let m = &input.matroid;
    let json = config.format == Format::Json;
    let out = match config.command {
        Command::Rank => rank(m, config.subset.as_deref(), json)?,
        Command::Circuits => circuits(m, json),
        Command::Dual => render_matroid(&m.dual(), json),
        Command::Elongate => {
            let level = config
                .level
                .ok_or_else(|| CliError::Usage("`elongate` needs --level".into()))?;
            render_matroid(&m.elongate(level)?, json)
        }
        Command::Betti => betti(m, config.level, json),
        Command::Gwp => gwp(m, config.level, config.naive, json)?,
        Command::Enumerator => {
            let w = enumerator_from_gwp(&gwp_direct(m));
            if json {
                json_line(json!({ "terms": w.to_json_terms() }))
            } else {
                format!("W(X,Y,Z) = {}\n", w.render())
            }
        }
        Command::Tutte => {
            let t = tutte(m);
            if json {
                json_line(json!({ "terms": t.to_json_terms() }))
            } else {
                format!("t(X,Y) = {}\n", t.render())
            }
        }
        Command::Weights => {
            let d = higher_weights_from_gwp(&gwp_direct(m))?;
            if json {
                json_line(json!({ "weights": d.as_slice() }))
            } else {
                d.as_slice()
                    .iter()
                    .enumerate()
                    .map(|(i, w)| format!("d_{} = {w}\n", i + 1))
                    .collect()
            }
        }
        Command::Distribution => {
            let code = input.code.as_ref().ok_or_else(|| {
                CliError::Usage(
                    "`distribution` needs a matrix input (--kind gen or --kind pcheck)".into(),
                )
            })?;
            let d = code.brute_force_distribution(config.ext.unwrap_or(1))?;
            if json {
                format!("{}\n", d.to_json())
            } else {
                d.render()
            }
        }
        Command::Verify => return Ok(verify(m, input.code.as_ref(), json)),
    };
    Ok(Report::ok(out))
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn render_matroid(m: &Matroid, json: bool) -> String {
    if json {
        format!("{}\n", m.to_json())
    } else {
        m.to_text()
    }
}

fn rank(m: &Matroid, subset: Option<&str>, json: bool) -> Result<String, CliError> {
    let n = m.ground_size();
    let s = match subset {
        None => m.ground_set(),
        Some(list) => {
            let labels = list
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("`{t}` is not an element label")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            GroundSubset::from_labels(n, labels)
                .map_err(|e| CliError::Usage(format!("element {e} is outside {{1,...,{n}}}")))?
        }
    };
    let p = m.profile(s)?;
    Ok(if json {
        json_line(json!({
            "n": n,
            "subset": s.labels().collect::<Vec<_>>(),
            "rank": p.rank,
            "nullity": p.nullity,
            "bases": m.bases().len(),
        }))
    } else {
        format!(
            "n={n}\nsubset={s}\nrank={}\nnullity={}\nbases={}\n",
            p.rank,
            p.nullity,
            m.bases().len()
        )
    })
}

fn circuits(m: &Matroid, json: bool) -> String {
    if json {
        let list: Vec<Vec<usize>> = m.circuits().iter().map(|c| c.labels().collect()).collect();
        json_line(json!({ "circuits": list }))
    } else {
        m.circuits().iter().map(|c| format!("{c}\n")).collect()
    }
}

fn betti(m: &Matroid, level: Option<usize>, json: bool) -> String {
    let tables = match level {
        Some(l) => vec![graded_betti_table(m, l as i64)],
        None => betti_tables(m),
    };
    if json {
        let values: Vec<_> = tables.iter().map(GradedBettiTable::to_json_value).collect();
        json_line(json!(values))
    } else {
        tables.iter().map(GradedBettiTable::render).collect()
    }
}

fn gwp(m: &Matroid, level: Option<usize>, naive: bool, json: bool) -> Result<String, CliError> {
    let elongated;
    let target = match level {
        Some(l) => {
            elongated = m.elongate(l)?;
            &elongated
        }
        None => m,
    };
    let polys = if naive {
        gwp_naive(target)?
    } else {
        gwp_direct(target)
    };
    Ok(render_gwp(&polys, json))
}

fn render_gwp(polys: &[UniPoly], json: bool) -> String {
    if json {
        let list: Vec<_> = polys
            .iter()
            .enumerate()
            .map(|(j, p)| json!({ "j": j, "coefficients": p.to_json_map() }))
            .collect();
        json_line(json!({ "gwp": list }))
    } else {
        polys
            .iter()
            .enumerate()
            .map(|(j, p)| format!("P_{j}(Z) = {p}\n"))
            .collect()
    }
}

struct Check {
    name: &'static str,
    status: Status,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

fn verify(m: &Matroid, code: Option<&LinearCode>, json: bool) -> Report {
    let n = m.ground_size();
    let k = m.rank();
    let direct = gwp_direct(m);
    let tables = betti_tables(m);
    let mut checks = Vec::new();
    let mut push = |name, status| checks.push(Check { name, status });

    let from_betti = gwp_from_betti(&tables);
    push(
        "three-route GWP agreement",
        Status::from(gwp_complement_form(m) == direct && from_betti.as_ref() == Ok(&direct)),
    );

    let w = enumerator_from_gwp(&direct);
    let t = tutte(m);
    let round_trip = tutte_from_enumerator(&w, n, k).as_ref() == Ok(&t)
        && enumerator_from_tutte(&t, n, k).as_ref() == Ok(&w);
    push("Tutte/enumerator round-trip", Status::from(round_trip));

    push(
        "Betti support shift",
        Status::from(support_shift_holds(&tables, n)),
    );

    let shift_ok = (0..n - k).all(|l| {
        let (lo, hi) = match (m.elongate(l), m.elongate(l + 1)) {
            (Ok(lo), Ok(hi)) => (gwp_direct(&lo), gwp_direct(&hi)),
            _ => return false,
        };
        lo.iter()
            .zip(&hi)
            .all(|(a, b)| gwp_elongation_shift(a) == *b)
    });
    push("elongation coefficient shift", Status::from(shift_ok));

    let by_nullity = higher_weights_by_nullity(m);
    let hierarchy_ok = higher_weights_from_gwp(&direct).as_ref() == Ok(&by_nullity)
        && higher_weights_from_betti(&tables).as_ref() == Ok(&by_nullity);
    push("higher-weight triple agreement", Status::from(hierarchy_ok));

    if let Some(code) = code {
        for (name, ext) in [
            ("brute-force distribution m=1", 1u32),
            ("brute-force distribution m=2", 2),
        ] {
            let status = match code.brute_force_distribution(ext) {
                Ok(d) => {
                    let q = (code.field().order() as i128).pow(ext);
                    Status::from(
                        direct
                            .iter()
                            .zip(&d.counts)
                            .all(|(p, &c)| p.eval(q) == c as i128),
                    )
                }
                Err(CodeError::EnumerationBudgetExceeded { .. }) => Status::Skip,
                Err(_) => Status::Fail,
            };
            push(name, status);
        }
    }

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    let output = if json {
        let list: Vec<_> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "status": c.status.label() }))
            .collect();
        json_line(json!({ "checks": list, "passed": passed }))
    } else {
        let mut out = String::new();
        for c in &checks {
            let _ = writeln!(out, "{} {}", c.status.label(), c.name);
        }
        if checks.iter().any(|c| c.status == Status::Skip) {
            let _ = writeln!(out, "(skipped checks exceed {ENUMERATION_BUDGET} words)");
        }
        let _ = writeln!(
            out,
            "{}",
            if passed {
                "all checks passed"
            } else {
                "some checks failed"
            }
        );
        out
    };
    Report { output, passed }
}
