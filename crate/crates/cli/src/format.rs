//! JSON definition files. Rationals are strings in the kernel grammar; tensor
//! entries are sparse and omitted entries are zero.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use nova_core::algebra::{Algebra, AlgebraKind, BilinearForm, FormFlavor, MapRole, StructureMap};
use nova_core::bialgebra::{CoalgebraKind, Coproduct};
use nova_core::fixtures::Fixture;
use nova_core::kernel::{Coeff, Matrix, Poly, Scalar, Tensor2, Tensor3};
use nova_core::yangbaxter::RMatrix;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DefKind {
    Algebra,
    Coproduct,
    Rmatrix,
    Map,
    Form,
    Bundle,
}

/// One sparse record. Which fields are used depends on the file kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub kind: DefKind,
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    /// Member files of a bundle, all on the bundle's basis.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<DefinitionFile>,
}

fn bad(at: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{at}: {msg}"))
}

fn rational(at: &str, s: &str) -> Result<Scalar, CliError> {
    Scalar::parse(s).map_err(|e| bad(at, e))
}

impl DefinitionFile {
    fn empty(kind: DefKind, name: &str, basis: &[String]) -> Self {
        DefinitionFile {
            kind,
            name: name.to_string(),
            dim: basis.len(),
            basis: basis.to_vec(),
            entries: Vec::new(),
            class: None,
            weight: None,
            q: None,
            parts: Vec::new(),
        }
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let f: DefinitionFile = serde_json::from_str(text).map_err(|e| bad(origin, e))?;
        f.validate(origin)?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("definition files serialize")
    }

    fn index(&self, at: &str, label: &Option<String>, field: &str) -> Result<usize, CliError> {
        let l = label
            .as_deref()
            .ok_or_else(|| bad(at, format!("missing `{field}`")))?;
        self.basis
            .iter()
            .position(|b| b == l)
            .ok_or_else(|| bad(at, format!("unknown label {l:?}")))
    }

    fn result<'a>(
        &self,
        at: &str,
        e: &'a Entry,
        width: usize,
    ) -> Result<&'a [Vec<String>], CliError> {
        let r = e
            .result
            .as_deref()
            .ok_or_else(|| bad(at, "missing `result`"))?;
        for (k, row) in r.iter().enumerate() {
            if row.len() != width + 1 {
                return Err(bad(
                    &format!("{at}.result[{k}]"),
                    format!("expected {} fields", width + 1),
                ));
            }
        }
        Ok(r)
    }

    fn label_index(&self, at: &str, l: &str) -> Result<usize, CliError> {
        self.basis
            .iter()
            .position(|b| b == l)
            .ok_or_else(|| bad(at, format!("unknown label {l:?}")))
    }

    /// Labels unique, `dim` consistent, every entry well formed.
    pub fn validate(&self, origin: &str) -> Result<(), CliError> {
        if self.dim != self.basis.len() {
            return Err(bad(
                origin,
                format!(
                    "dim is {} but basis has {} labels",
                    self.dim,
                    self.basis.len()
                ),
            ));
        }
        let mut seen = HashSet::new();
        for l in &self.basis {
            if l.is_empty() || !seen.insert(l) {
                return Err(bad(
                    origin,
                    format!("basis label {l:?} is empty or repeated"),
                ));
            }
        }
        if let Some(v) = &self.weight {
            rational(&format!("{origin}.weight"), v)?;
        }
        if let Some(v) = &self.q {
            rational(&format!("{origin}.q"), v)?;
        }
        match self.kind {
            DefKind::Algebra => drop(self.algebra_structure(origin)?),
            DefKind::Coproduct => drop(self.coproduct_structure(origin)?),
            DefKind::Rmatrix => drop(self.poly_pairs(origin)?),
            DefKind::Map => drop(self.map_matrix(origin)?),
            DefKind::Form => drop(self.form_gram(origin)?),
            DefKind::Bundle => {
                if !self.entries.is_empty() {
                    return Err(bad(origin, "a bundle has parts, not entries"));
                }
                for (k, p) in self.parts.iter().enumerate() {
                    let at = format!("{origin}.parts[{k}]");
                    if p.kind == DefKind::Bundle {
                        return Err(bad(&at, "bundles do not nest"));
                    }
                    if p.basis != self.basis {
                        return Err(bad(&at, "basis differs from the bundle basis"));
                    }
                    p.validate(&at)?;
                }
            }
        }
        Ok(())
    }

    fn algebra_structure(&self, origin: &str) -> Result<Tensor3<Scalar>, CliError> {
        let mut c = Tensor3::zeros(self.dim);
        for (n, e) in self.entries.iter().enumerate() {
            let at = format!("{origin}.entries[{n}]");
            let (i, j) = (
                self.index(&at, &e.left, "left")?,
                self.index(&at, &e.right, "right")?,
            );
            for row in self.result(&at, e, 1)? {
                let k = self.label_index(&at, &row[0])?;
                *c.entry_mut(i, j, k) += &rational(&at, &row[1])?;
            }
        }
        Ok(c)
    }

    fn coproduct_structure(&self, origin: &str) -> Result<Tensor3<Scalar>, CliError> {
        let mut d = Tensor3::zeros(self.dim);
        for (n, e) in self.entries.iter().enumerate() {
            let at = format!("{origin}.entries[{n}]");
            let i = self.index(&at, &e.of, "of")?;
            for row in self.result(&at, e, 2)? {
                let (j, k) = (
                    self.label_index(&at, &row[0])?,
                    self.label_index(&at, &row[1])?,
                );
                *d.entry_mut(i, j, k) += &rational(&at, &row[2])?;
            }
        }
        Ok(d)
    }

    fn pairs<T>(
        &self,
        origin: &str,
        parse: impl Fn(&str, &str) -> Result<T, CliError>,
    ) -> Result<Vec<(usize, usize, T)>, CliError> {
        self.entries
            .iter()
            .enumerate()
            .map(|(n, e)| {
                let at = format!("{origin}.entries[{n}]");
                let (i, j) = (
                    self.index(&at, &e.left, "left")?,
                    self.index(&at, &e.right, "right")?,
                );
                let v = e
                    .value
                    .as_deref()
                    .ok_or_else(|| bad(&at, "missing `value`"))?;
                Ok((i, j, parse(&at, v)?))
            })
            .collect()
    }

    fn poly_pairs(&self, origin: &str) -> Result<Vec<(usize, usize, Poly)>, CliError> {
        self.pairs(origin, |at, v| Poly::parse(v).map_err(|e| bad(at, e)))
    }

    fn map_matrix(&self, origin: &str) -> Result<Matrix, CliError> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (n, e) in self.entries.iter().enumerate() {
            let at = format!("{origin}.entries[{n}]");
            let j = self.index(&at, &e.of, "of")?;
            for row in self.result(&at, e, 1)? {
                let i = self.label_index(&at, &row[0])?;
                *m.entry_mut(i, j) += &rational(&at, &row[1])?;
            }
        }
        Ok(m)
    }

    fn form_gram(&self, origin: &str) -> Result<Matrix, CliError> {
        let mut g = Matrix::zeros(self.dim, self.dim);
        for (i, j, v) in self.pairs(origin, rational)? {
            *g.entry_mut(i, j) += &v;
        }
        Ok(g)
    }

    fn expect(&self, kind: DefKind) -> Result<(), CliError> {
        if self.kind != kind {
            return Err(bad(
                &self.name,
                format!("expected a {kind:?} file, found {:?}", self.kind),
            ));
        }
        Ok(())
    }

    pub fn to_algebra(&self) -> Result<Algebra, CliError> {
        self.expect(DefKind::Algebra)?;
        let kind = match &self.class {
            Some(c) => c.parse::<AlgebraKind>().map_err(|e| bad(&self.name, e))?,
            None => AlgebraKind::Unchecked,
        };
        Algebra::from_structure(
            self.basis.clone(),
            self.algebra_structure(&self.name)?,
            kind,
        )
        .map_err(CliError::from)
    }

    pub fn to_coproduct(&self) -> Result<Coproduct, CliError> {
        self.expect(DefKind::Coproduct)?;
        let kind = match &self.class {
            Some(c) => c.parse::<CoalgebraKind>().map_err(|e| bad(&self.name, e))?,
            None => CoalgebraKind::Unchecked,
        };
        Ok(Coproduct::from_structure(
            self.coproduct_structure(&self.name)?,
            kind,
        ))
    }

    /// Polynomial coefficients; constant when no parameter appears.
    pub fn to_poly_rmatrix(&self) -> Result<Tensor2<Poly>, CliError> {
        self.expect(DefKind::Rmatrix)?;
        let mut t: Tensor2<Poly> = Tensor2::zeros(self.dim);
        for (i, j, v) in self.poly_pairs(&self.name)? {
            *t.entry_mut(i, j) = t.get(i, j).add_ref(&v);
        }
        Ok(t)
    }

    pub fn to_map(&self) -> Result<StructureMap, CliError> {
        self.expect(DefKind::Map)?;
        let role = match self.class.as_deref().unwrap_or("generic") {
            "derivation" => MapRole::Derivation,
            "admissible-theta" => MapRole::AdmissibleTheta,
            "rota-baxter" => {
                let w = self
                    .weight
                    .as_deref()
                    .ok_or_else(|| bad(&self.name, "rota-baxter map needs `weight`"))?;
                MapRole::RotaBaxter {
                    weight: rational(&self.name, w)?,
                }
            }
            "homomorphism" => MapRole::Homomorphism,
            "generic" => MapRole::Generic,
            other => return Err(bad(&self.name, format!("unknown map class {other:?}"))),
        };
        Ok(StructureMap::new(self.map_matrix(&self.name)?, role))
    }

    pub fn to_form(&self) -> Result<BilinearForm, CliError> {
        self.expect(DefKind::Form)?;
        let flavor = match &self.class {
            Some(c) => c.parse::<FormFlavor>().map_err(|e| bad(&self.name, e))?,
            None => FormFlavor::Plain,
        };
        Ok(BilinearForm::new(self.form_gram(&self.name)?, flavor))
    }

    pub fn from_algebra(name: &str, a: &Algebra) -> Self {
        let mut f = DefinitionFile::empty(DefKind::Algebra, name, a.basis());
        f.class = Some(a.kind().to_string());
        let l = a.basis();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let v = a.basis_product(i, j);
                let result: Vec<Vec<String>> = nonzero(v)
                    .map(|(k, c)| vec![l[k].clone(), c.to_string()])
                    .collect();
                if !result.is_empty() {
                    f.entries.push(Entry {
                        left: Some(l[i].clone()),
                        right: Some(l[j].clone()),
                        result: Some(result),
                        ..Entry::default()
                    });
                }
            }
        }
        f
    }

    pub fn from_coproduct(name: &str, basis: &[String], d: &Coproduct) -> Self {
        let mut f = DefinitionFile::empty(DefKind::Coproduct, name, basis);
        f.class = Some(d.kind().to_string());
        for i in 0..d.dim() {
            let result: Vec<Vec<String>> = d
                .of(i)
                .nonzero()
                .map(|(j, k, c)| vec![basis[j].clone(), basis[k].clone(), c.to_string()])
                .collect();
            if !result.is_empty() {
                f.entries.push(Entry {
                    of: Some(basis[i].clone()),
                    result: Some(result),
                    ..Entry::default()
                });
            }
        }
        f
    }

    pub fn from_tensor2<T: Coeff + std::fmt::Display>(
        kind: DefKind,
        name: &str,
        basis: &[String],
        t: &Tensor2<T>,
    ) -> Self {
        let mut f = DefinitionFile::empty(kind, name, basis);
        for (i, j, c) in t.nonzero() {
            f.entries.push(Entry {
                left: Some(basis[i].clone()),
                right: Some(basis[j].clone()),
                value: Some(c.to_string()),
                ..Entry::default()
            });
        }
        f
    }

    pub fn from_rmatrix(name: &str, basis: &[String], r: &RMatrix) -> Self {
        DefinitionFile::from_tensor2(DefKind::Rmatrix, name, basis, r.tensor())
    }

    pub fn from_map(name: &str, basis: &[String], m: &StructureMap) -> Self {
        let mut f = DefinitionFile::empty(DefKind::Map, name, basis);
        f.class = Some(m.role.to_string());
        if let MapRole::RotaBaxter { weight } = &m.role {
            f.weight = Some(weight.to_string());
        }
        for j in 0..basis.len() {
            let col = m.matrix.column(j);
            let result: Vec<Vec<String>> = nonzero(&col)
                .map(|(i, c)| vec![basis[i].clone(), c.to_string()])
                .collect();
            if !result.is_empty() {
                f.entries.push(Entry {
                    of: Some(basis[j].clone()),
                    result: Some(result),
                    ..Entry::default()
                });
            }
        }
        f
    }

    pub fn from_form(name: &str, basis: &[String], b: &BilinearForm) -> Self {
        let mut f = DefinitionFile::from_tensor2(
            DefKind::Form,
            name,
            basis,
            &Tensor2::from_matrix(b.gram.clone()),
        );
        f.class = Some(b.flavor.to_string());
        f
    }

    pub fn bundle(name: &str, basis: &[String], parts: Vec<DefinitionFile>) -> Self {
        let mut f = DefinitionFile::empty(DefKind::Bundle, name, basis);
        f.parts = parts;
        f
    }

    /// The file itself, or the parts of a bundle.
    pub fn flatten(&self) -> Vec<&DefinitionFile> {
        match self.kind {
            DefKind::Bundle => self.parts.iter().collect(),
            _ => vec![self],
        }
    }
}

fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// Every shipped fixture as one bundle.
pub fn fixture_file(f: &Fixture) -> DefinitionFile {
    let l = f.algebra.basis();
    let mut parts = vec![DefinitionFile::from_algebra("algebra", &f.algebra)];
    if let Some(d) = &f.coproduct {
        parts.push(DefinitionFile::from_coproduct("coproduct", l, d));
    }
    if let Some(r) = &f.r {
        parts.push(DefinitionFile::from_rmatrix("r", l, r));
    }
    if let Some(m) = &f.partial {
        parts.push(DefinitionFile::from_map("partial", l, m));
    }
    if let Some(m) = &f.theta {
        parts.push(DefinitionFile::from_map("theta", l, m));
    }
    if let Some(b) = &f.form {
        parts.push(DefinitionFile::from_form("form", l, b));
    }
    DefinitionFile::bundle(f.name, l, parts)
}
