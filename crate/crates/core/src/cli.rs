//! Command-line interface. Exit codes: 0 success, 1 verification failure or
//! table mismatch, 2 malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::LieSuperalgebra;
use crate::cohomology::multiplier_sdim;
use crate::error::Error;
use crate::extensions::{is_maximal_stem, stem_denominator, stem_deformation, ExtensionSpec};
use crate::families::{model_filiform_multiplier, multiplier_formula, FamilyId};
use crate::freepres::{hopf_multiplier, Denominator};
use crate::io::{load_algebra, load_extension, save_algebra, save_extension};
use crate::linalg::SparseVec;
use crate::subspace::GradedSubspace;
use crate::superdim::SuperDim;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "superlie", about = "Multipliers, covers and stem extensions of Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check super skew-symmetry, super Jacobi and parity of the brackets.
    Validate { file: PathBuf },
    /// Center, derived algebra, lower central series and superdimensions as JSON.
    Invariants { file: PathBuf },
    /// Emit a family member as an algebra document, or its cover as an extension document.
    Family {
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long)]
        cover: bool,
    },
    /// Superdimension of the multiplier.
    Multiplier {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::H2)]
        method: Method,
        #[arg(long)]
        class_bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = DenominatorArg::Rf)]
        denominator: DenominatorArg,
    },
    /// Check that an extension is a stem extension.
    VerifyStem {
        file: PathBuf,
        #[arg(long)]
        maximal: bool,
    },
    /// Replace an extension by its stem deformation.
    StemDeform { file: PathBuf },
    /// Computed multipliers against the closed forms.
    Table {
        kind: Kind,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Formula::Reference)]
        formula: Formula,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    HeisenbergEven,
    HeisenbergOdd,
    ModelFiliform,
    Abelian,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    H2,
    Hopf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DenominatorArg {
    Rf,
    Rr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Reference,
    Derived,
}

/// Outcome of a command: output already written, exit code to return.
type Outcome = std::result::Result<i32, Failure>;

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConflictingMirror(..)
            | Error::NotAnIdeal
            | Error::CoboundaryNotCocycle(_)
            | Error::Precondition(_)
            | Error::Unsatisfiable(_)
            | Error::NotGenerating
            | Error::ClassTooLarge(_)
            | Error::ClassBoundTooSmall { .. } => EXIT_FAILED,
            _ => EXIT_MALFORMED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_MALFORMED,
        message: e.to_string(),
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Validate { file } => validate(&file, out, err),
        Command::Invariants { file } => invariants(&file, out, err),
        Command::Family {
            kind,
            p,
            q,
            n,
            m,
            s,
            t,
            cover,
        } => {
            let id = match kind {
                Kind::HeisenbergEven => FamilyId::HeisenbergEven { p, q },
                Kind::HeisenbergOdd => FamilyId::HeisenbergOdd { n },
                Kind::ModelFiliform => FamilyId::ModelFiliform { n, m },
                Kind::Abelian => FamilyId::Abelian { s, t },
            };
            let text = if cover {
                save_extension(&id.cover()?)
            } else {
                save_algebra(&id.build()?)
            };
            out.write_all(text.as_bytes()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Multiplier {
            file,
            method,
            class_bound,
            denominator,
        } => {
            let alg = Arc::new(read_valid_algebra(&file, out, err)?);
            let sdim = match method {
                Method::H2 => multiplier_sdim(&alg)?,
                Method::Hopf => {
                    let which = match denominator {
                        DenominatorArg::Rf => Denominator::RF,
                        DenominatorArg::Rr => Denominator::RR,
                    };
                    hopf_multiplier(alg, class_bound, which)?
                }
            };
            writeln!(out, "{sdim}").map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::VerifyStem { file, maximal } => verify_stem(&file, maximal, out, err),
        Command::StemDeform { file } => {
            let e = read_extension(&file, err)?;
            let x = stem_denominator(&e, None)?;
            let d = stem_deformation(&e, &x)?;
            out.write_all(save_extension(&d).as_bytes()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Table {
            kind,
            max,
            format,
            formula,
        } => table(kind, max, format, formula, out),
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_MALFORMED,
        message: format!("{}: {e}", path.display()),
    })
}

fn notice_if_rewritten(canonical: bool, err: &mut dyn Write) {
    if !canonical {
        let _ = writeln!(err, "notice: input is not in canonical form; it was canonicalized");
    }
}

fn read_algebra(path: &Path, err: &mut dyn Write) -> std::result::Result<LieSuperalgebra, Failure> {
    let (alg, canonical) = load_algebra(&read_text(path)?).map_err(|e| named_conflict(e, path))?;
    notice_if_rewritten(canonical, err);
    Ok(alg)
}

/// Names the offending pair when the document gives inconsistent mirrors.
fn named_conflict(e: Error, path: &Path) -> Failure {
    if let Error::ConflictingMirror(i, j) = e {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(doc) = crate::io::AlgebraDocument::parse(&text) {
                let name = |k: usize| doc.basis.get(k).map(|b| b.name.clone()).unwrap_or(k.to_string());
                return Failure {
                    code: EXIT_FAILED,
                    message: format!("skew-symmetry violated at pair ({}, {})", name(i), name(j)),
                };
            }
        }
    }
    e.into()
}

fn read_valid_algebra(
    path: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<LieSuperalgebra, Failure> {
    let alg = read_algebra(path, err)?;
    let report = alg.validate();
    if !report.is_ok() {
        let _ = write!(out, "{report}");
        return Err(Failure {
            code: EXIT_FAILED,
            message: "not a Lie superalgebra".into(),
        });
    }
    Ok(alg)
}

fn read_extension(path: &Path, err: &mut dyn Write) -> std::result::Result<ExtensionSpec, Failure> {
    let (e, canonical) = load_extension(&read_text(path)?)?;
    notice_if_rewritten(canonical, err);
    for (label, alg) in [("total", &e.total), ("base", &e.base)] {
        let report = alg.validate();
        if !report.is_ok() {
            return Err(Failure {
                code: EXIT_FAILED,
                message: format!("{label} algebra: {}", report.to_string().trim_end()),
            });
        }
    }
    Ok(e)
}

fn validate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let alg = read_algebra(path, err)?;
    let report = alg.validate();
    write!(out, "{report}").map_err(io_failure)?;
    Ok(if report.is_ok() { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct SubspaceReport {
    sdim: SuperDim,
    basis: Vec<Vec<(usize, String)>>,
}

impl SubspaceReport {
    fn new(s: &GradedSubspace) -> Self {
        SubspaceReport {
            sdim: s.sdim(),
            basis: s.basis().map(sparse_strings).collect(),
        }
    }
}

fn sparse_strings(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, c)| (i, c.to_string())).collect()
}

#[derive(Serialize)]
struct InvariantsReport {
    sdim: SuperDim,
    center: SubspaceReport,
    derived: SubspaceReport,
    lower_central_series: Vec<SuperDim>,
    nilpotency_class: Option<usize>,
}

fn invariants(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let alg = read_valid_algebra(path, out, err)?;
    let report = InvariantsReport {
        sdim: alg.sdim(),
        center: SubspaceReport::new(&alg.center()),
        derived: SubspaceReport::new(&alg.derived()),
        lower_central_series: alg.lower_central_series().iter().map(|g| g.sdim()).collect(),
        nilpotency_class: alg.nilpotency_class(),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    writeln!(out, "{text}").map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn verify_stem(path: &Path, maximal: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let e = read_extension(path, err)?;
    let report = e.verify();
    write!(out, "extension: {report}").map_err(io_failure)?;
    let central = e.is_central();
    let stem = e.is_stem();
    writeln!(out, "central: {central}").map_err(io_failure)?;
    writeln!(out, "stem: {stem}").map_err(io_failure)?;
    let mut ok = report.is_ok() && stem;
    if maximal {
        let is_max = is_maximal_stem(&e)?;
        writeln!(out, "maximal: {is_max}").map_err(io_failure)?;
        ok &= is_max;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

/// One line of a multiplier table.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub parameters: String,
    pub computed_even: usize,
    pub computed_odd: usize,
    pub formula_even: usize,
    pub formula_odd: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Family instances covered by `table <kind> --max N`.
pub fn table_instances(kind: Kind, max: usize) -> Vec<FamilyId> {
    let mut ids = Vec::new();
    match kind {
        Kind::HeisenbergOdd => ids.extend((1..=max).map(|n| FamilyId::HeisenbergOdd { n })),
        Kind::HeisenbergEven => {
            for total in 1..=max {
                for p in 0..=total {
                    ids.push(FamilyId::HeisenbergEven { p, q: total - p });
                }
            }
        }
        Kind::ModelFiliform => {
            for n in 1..=max {
                for m in 0..=max {
                    let id = FamilyId::ModelFiliform { n, m };
                    if id.is_model() {
                        ids.push(id);
                    }
                }
            }
        }
        Kind::Abelian => {
            for s in 0..=max {
                for t in 0..=max {
                    if s + t >= 1 {
                        ids.push(FamilyId::Abelian { s, t });
                    }
                }
            }
        }
    }
    ids
}

/// Closed form for one instance under the chosen formula set.
pub fn closed_form(id: FamilyId, formula: Formula) -> crate::Result<SuperDim> {
    match (id, formula) {
        (FamilyId::ModelFiliform { n, m }, Formula::Derived) => model_filiform_multiplier(n, m),
        _ => multiplier_formula(id),
    }
}

/// Rows are computed in parallel and returned in parameter order.
pub fn table_rows(kind: Kind, max: usize, formula: Formula) -> crate::Result<Vec<TableRow>> {
    table_instances(kind, max)
        .par_iter()
        .map(|&id| {
            let computed = multiplier_sdim(&id.build()?)?;
            let expected = closed_form(id, formula)?;
            Ok(TableRow {
                parameters: id.parameters(),
                computed_even: computed.even,
                computed_odd: computed.odd,
                formula_even: expected.even,
                formula_odd: expected.odd,
                matches: computed == expected,
            })
        })
        .collect()
}

fn table(kind: Kind, max: usize, format: Format, formula: Formula, out: &mut dyn Write) -> Outcome {
    let rows = table_rows(kind, max, formula)?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row).map_err(|e| Failure {
                    code: EXIT_MALFORMED,
                    message: e.to_string(),
                })?;
            }
            let bytes = w.into_inner().map_err(|e| Failure {
                code: EXIT_MALFORMED,
                message: e.to_string(),
            })?;
            out.write_all(&bytes).map_err(io_failure)?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            writeln!(out, "{text}").map_err(io_failure)?;
        }
    }
    Ok(if rows.iter().all(|r| r.matches) { EXIT_OK } else { EXIT_FAILED })
}
