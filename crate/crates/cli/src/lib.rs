//! File formats, commands and JSON reports for the `nova` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a check or precondition
//! fails, 2 on malformed input.

pub mod commands;
pub mod format;

use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use nova_core::algebra::{Algebra, BilinearForm, MapRole, StructureMap};
use nova_core::bialgebra::Coproduct;
use nova_core::kernel::{Poly, Scalar, Tensor2};
use nova_core::report::Report;
use nova_core::yangbaxter::RMatrix;
use nova_core::NovaError;

pub use format::{fixture_file, DefKind, DefinitionFile, Entry};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or unreadable input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A precondition of the requested construction does not hold; exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<NovaError> for CliError {
    fn from(e: NovaError) -> Self {
        match e {
            NovaError::PreconditionFailed(_) | NovaError::NotFactorizable => {
                CliError::Failed(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Typed objects collected from one or more definition files. Later files
/// replace earlier objects of the same role.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub basis: Option<Vec<String>>,
    pub algebra: Option<Algebra>,
    pub coproduct: Option<Coproduct>,
    pub r: Option<RMatrix>,
    pub r_poly: Option<Tensor2<Poly>>,
    pub partial: Option<StructureMap>,
    pub theta: Option<StructureMap>,
    pub rota_baxter: Option<StructureMap>,
    pub maps: Vec<(String, StructureMap)>,
    pub form: Option<BilinearForm>,
    pub q: Option<Scalar>,
    pub weight: Option<Scalar>,
}

impl Inputs {
    pub fn from_files(files: &[DefinitionFile]) -> Result<Self, CliError> {
        let mut out = Inputs::default();
        for file in files {
            for part in file.flatten() {
                out.add(part)?;
            }
            if let Some(q) = &file.q {
                out.q = Some(Scalar::parse(q).map_err(|e| CliError::Input(e.to_string()))?);
            }
        }
        Ok(out)
    }

    fn add(&mut self, f: &DefinitionFile) -> Result<(), CliError> {
        match &self.basis {
            Some(b) if b.len() != f.dim => {
                return Err(CliError::Input(format!(
                    "{}: dimension mismatch: expected {}, found {}",
                    f.name,
                    b.len(),
                    f.dim
                )))
            }
            Some(_) => {}
            None => self.basis = Some(f.basis.clone()),
        }
        if let Some(q) = &f.q {
            self.q = Some(Scalar::parse(q).map_err(|e| CliError::Input(e.to_string()))?);
        }
        match f.kind {
            DefKind::Algebra => self.algebra = Some(f.to_algebra()?),
            DefKind::Coproduct => self.coproduct = Some(f.to_coproduct()?),
            DefKind::Rmatrix => {
                let t = f.to_poly_rmatrix()?;
                let constant: Option<Vec<Scalar>> = t
                    .matrix()
                    .entries()
                    .iter()
                    .map(|p| p.as_constant())
                    .collect();
                self.r = constant
                    .map(|v| RMatrix(Tensor2::from_fn(f.dim, |i, j| v[i * f.dim + j].clone())));
                self.r_poly = Some(t);
            }
            DefKind::Map => {
                let m = f.to_map()?;
                match &m.role {
                    MapRole::Derivation => self.partial = Some(m),
                    MapRole::AdmissibleTheta => self.theta = Some(m),
                    MapRole::RotaBaxter { weight } => {
                        self.weight = Some(weight.clone());
                        self.rota_baxter = Some(m);
                    }
                    _ => self.maps.push((f.name.clone(), m)),
                }
            }
            DefKind::Form => self.form = Some(f.to_form()?),
            DefKind::Bundle => unreachable!("bundles are flattened"),
        }
        Ok(())
    }

    pub fn basis(&self) -> Result<&[String], CliError> {
        self.basis
            .as_deref()
            .ok_or_else(|| CliError::Input("no input files".into()))
    }

    fn need<'a, T>(v: &'a Option<T>, what: &str) -> Result<&'a T, CliError> {
        v.as_ref()
            .ok_or_else(|| CliError::Input(format!("missing input: {what}")))
    }

    pub fn algebra(&self) -> Result<&Algebra, CliError> {
        Self::need(&self.algebra, "algebra")
    }

    pub fn coproduct(&self) -> Result<&Coproduct, CliError> {
        Self::need(&self.coproduct, "coproduct")
    }

    pub fn r(&self) -> Result<&RMatrix, CliError> {
        if self.r.is_none() && self.r_poly.is_some() {
            return Err(CliError::Input(
                "r-matrix has symbolic entries; use `parametric`".into(),
            ));
        }
        Self::need(&self.r, "rmatrix")
    }

    pub fn form(&self) -> Result<&BilinearForm, CliError> {
        Self::need(&self.form, "form")
    }

    pub fn partial(&self) -> Result<&StructureMap, CliError> {
        Self::need(&self.partial, "derivation map")
    }

    pub fn theta(&self) -> Result<&StructureMap, CliError> {
        Self::need(&self.theta, "admissible-theta map")
    }
}

/// Reads a definition file, or a shipped fixture when `spec` names one and no such path exists.
pub fn load(spec: &str) -> Result<DefinitionFile, CliError> {
    let path = Path::new(spec);
    if !path.exists() {
        if let Some(f) = nova_core::fixtures::by_name(spec) {
            return Ok(fixture_file(&f));
        }
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    DefinitionFile::parse(&text, spec)
}

pub fn load_all(specs: &[String]) -> Result<Inputs, CliError> {
    let files = specs
        .iter()
        .map(|s| load(s))
        .collect::<Result<Vec<_>, _>>()?;
    Inputs::from_files(&files)
}

/// Result of one command: checks, constructed objects and an optional verdict.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub command: String,
    pub report: Report,
    pub objects: Vec<DefinitionFile>,
    pub verdict: Option<String>,
    /// Free-form lines printed before the checks.
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn new(command: impl Into<String>) -> Self {
        Outcome {
            command: command.into(),
            ..Outcome::default()
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.report.pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonReport::from(self)).expect("reports serialize")
    }

    /// Human-readable summary for stdout.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(&self.report.to_string());
        if let Some(v) = &self.verdict {
            s.push_str(&format!("verdict: {v}\n"));
        }
        s
    }
}

#[derive(Serialize)]
struct JsonWitness<'a> {
    at: &'a [String],
    discrepancy: &'a str,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    pass: bool,
    witness: Option<JsonWitness<'a>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    checks: Vec<JsonCheck<'a>>,
    objects: &'a [DefinitionFile],
    verdict: Option<&'a str>,
}

impl<'a> From<&'a Outcome> for JsonReport<'a> {
    fn from(o: &'a Outcome) -> Self {
        JsonReport {
            command: &o.command,
            checks: o
                .report
                .checks
                .iter()
                .map(|c| JsonCheck {
                    name: &c.name,
                    pass: c.pass,
                    witness: c.witness.as_ref().map(|w| JsonWitness {
                        at: &w.at,
                        discrepancy: &w.discrepancy,
                    }),
                })
                .collect(),
            objects: &o.objects,
            verdict: o.verdict.as_deref(),
        }
    }
}
