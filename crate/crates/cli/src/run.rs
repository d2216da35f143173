//! Command dispatch and exit-code mapping.
//!
//! Exit codes: 0 pass/regular, 1 fail/not-regular, 2 usage or parse
//! error, 3 domain error (sign change, degenerate point, non-regular
//! input to `build`).

use crate::args::{Cli, Command, ExampleArg};
use crate::parse::{parse_box, parse_fueter_term, parse_paraquaternion, TextError};
use pqk_core::format::{map_from_json, map_to_json, report_to_json, structure_from_json, structure_to_json, FormatError};
use pqk_core::{
    build_structure, builtin_example, fueter_sum, regularity, verify_structure, BuiltinExample,
    FueterError, GeomError, NormKind, PolyMap, Regularity, Side, VerifyOptions,
};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid {what} `{input}`: {source}")]
    Text {
        what: &'static str,
        input: String,
        source: TextError,
    },
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid document `{path}`: {source}")]
    Document {
        path: PathBuf,
        source: FormatError,
    },
    #[error("invalid generator terms: {0}")]
    Generator(#[from] FueterError),
    #[error("map is not {side}-regular; nonzero residual in component(s): {components}")]
    NotRegular { side: Side, components: String },
    #[error(transparent)]
    Geometry(GeomError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Text { .. }
            | CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Document { .. }
            | CliError::Generator(_) => 2,
            CliError::NotRegular { .. } | CliError::Geometry(_) => 3,
        }
    }
}

impl From<GeomError> for CliError {
    fn from(err: GeomError) -> Self {
        match err {
            GeomError::NotRegular { side, residual } => CliError::NotRegular {
                side,
                components: failing_components(&residual),
            },
            other => CliError::Geometry(other),
        }
    }
}

/// Names of the regularity equations whose residual components are
/// nonzero, in the component order `re, i1, i2, i3`.
fn failing_components(residual: &PolyMap) -> String {
    let names = ["re", "i1", "i2", "i3"];
    let failing: Vec<&str> = (0..4)
        .filter(|&k| !residual.component(k).is_zero())
        .map(|k| names[k])
        .collect();
    failing.join(", ")
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

fn load_map(path: &Path) -> Result<PolyMap, CliError> {
    map_from_json(&read_file(path)?).map_err(|source| CliError::Document {
        path: path.to_owned(),
        source,
    })
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn text_error<'a>(what: &'static str, input: &'a str) -> impl FnOnce(TextError) -> CliError + 'a {
    move |source| CliError::Text {
        what,
        input: input.to_owned(),
        source,
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Mul { x, y } => {
            let a = parse_paraquaternion(x).map_err(text_error("element", x))?;
            let b = parse_paraquaternion(y).map_err(text_error("element", y))?;
            emit(cli, &format!("{}\n", &a * &b))?;
            Ok(0)
        }

        Command::Classify { x } => {
            let a = parse_paraquaternion(x).map_err(text_error("element", x))?;
            let class = a.classify();
            let norm = a.norm();
            let kind = match norm.kind {
                NormKind::Real => "real",
                NormKind::Imaginary => "imaginary",
                NormKind::Zero => "zero",
            };
            let text = format!(
                "element: {a}\n\
                 invertible: {}\n\
                 zero_divisor: {}\n\
                 nilpotent: {}\n\
                 idempotent: {}\n\
                 normsq: {}\n\
                 norm: {} ({kind})\n",
                class.invertible,
                class.zero_divisor,
                class.nilpotent,
                class.idempotent,
                pqk_core::format_scalar(&a.normsq()),
                norm.magnitude,
            );
            emit(cli, &text)?;
            Ok(0)
        }

        Command::Check { side, file } => {
            let map = load_map(file)?;
            match regularity(&map, side.side()) {
                Regularity::Regular => {
                    emit(cli, "Regular\n")?;
                    Ok(0)
                }
                Regularity::Residual(residual) => {
                    emit(cli, &map_to_json(&residual))?;
                    Ok(1)
                }
            }
        }

        Command::Fueter { side, terms } => {
            let parsed = terms
                .iter()
                .map(|t| parse_fueter_term(t, side.side()).map_err(text_error("term", t)))
                .collect::<Result<Vec<_>, _>>()?;
            let map = fueter_sum(&parsed)?;
            emit(cli, &map_to_json(&map))?;
            Ok(0)
        }

        Command::Build {
            example,
            file,
            chirality,
            box_spec,
        } => {
            let map = match (example, file) {
                (Some(which), None) => builtin_example(match which {
                    ExampleArg::A => BuiltinExample::A,
                    ExampleArg::B => BuiltinExample::B,
                }),
                (None, Some(path)) => load_map(path)?,
                _ => {
                    return Err(CliError::Usage(
                        "exactly one of --example or --file is required".into(),
                    ))
                }
            };
            let domain = parse_box(box_spec).map_err(text_error("box", box_spec))?;
            let structure = build_structure(&map, chirality.chirality(), domain)?;
            emit(cli, &structure_to_json(&structure))?;
            Ok(0)
        }

        Command::Verify {
            file,
            samples,
            tol,
            weyl_step,
        } => {
            if !(*weyl_step > 0.0 && weyl_step.is_finite()) {
                return Err(CliError::Usage(format!(
                    "--weyl-step must be a positive finite number, got {weyl_step}"
                )));
            }
            let structure =
                structure_from_json(&read_file(file)?).map_err(|source| CliError::Document {
                    path: file.clone(),
                    source,
                })?;
            let options = VerifyOptions {
                samples: *samples,
                tol: *tol,
                seed: cli.seed,
                weyl_step: *weyl_step,
                ..VerifyOptions::default()
            };
            let report = verify_structure(&structure, &options)?;
            emit(cli, &report_to_json(&report))?;
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}
