//! Finite-dimensional algebras by structure constants, their identities,
//! representations, structure maps and bilinear forms.

mod form;
mod maps;
mod rep;

use std::fmt;
use std::str::FromStr;

pub use form::{check_bilinear_form, BilinearForm, FormFlavor, FormReport};
pub use maps::{
    check_homomorphism, check_structure_map, descendent_algebra, MapRole, StructureMap,
};
pub use rep::{adjoint_rep, check_representation, coadjoint_rep, Representation};

use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar, Tensor3};
use crate::par;
use crate::report::{fmt_vector, labels_at, vec_is_zero, vec_sub, Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    LeftNovikov,
    RightNovikov,
    CommAssoc,
    Lie,
    PreLie,
    Unchecked,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::LeftNovikov => "left-novikov",
            AlgebraKind::RightNovikov => "right-novikov",
            AlgebraKind::CommAssoc => "comm-assoc",
            AlgebraKind::Lie => "lie",
            AlgebraKind::PreLie => "pre-lie",
            AlgebraKind::Unchecked => "unchecked",
        }
    }

    pub fn identity(self) -> Option<Identity> {
        match self {
            AlgebraKind::LeftNovikov => Some(Identity::LeftNovikov),
            AlgebraKind::RightNovikov => Some(Identity::RightNovikov),
            AlgebraKind::CommAssoc => Some(Identity::CommAssoc),
            AlgebraKind::Lie => Some(Identity::Lie),
            AlgebraKind::PreLie => Some(Identity::PreLie),
            AlgebraKind::Unchecked => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraKind {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "left-novikov" | "novikov" => AlgebraKind::LeftNovikov,
            "right-novikov" => AlgebraKind::RightNovikov,
            "comm-assoc" => AlgebraKind::CommAssoc,
            "lie" => AlgebraKind::Lie,
            "pre-lie" => AlgebraKind::PreLie,
            "unchecked" => AlgebraKind::Unchecked,
            other => return Err(NovaError::Parse(format!("unknown algebra class {other:?}"))),
        })
    }
}

/// Identities that [`check_identity`] can verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    LeftNovikov,
    RightNovikov,
    PreLie,
    CommAssoc,
    Lie,
    Commutative,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::LeftNovikov => "left-novikov",
            Identity::RightNovikov => "right-novikov",
            Identity::PreLie => "pre-lie",
            Identity::CommAssoc => "comm-assoc",
            Identity::Lie => "lie",
            Identity::Commutative => "commutative",
        }
    }
}

impl FromStr for Identity {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "left-novikov" | "novikov" => Identity::LeftNovikov,
            "right-novikov" => Identity::RightNovikov,
            "pre-lie" => Identity::PreLie,
            "comm-assoc" => Identity::CommAssoc,
            "lie" => Identity::Lie,
            "commutative" => Identity::Commutative,
            other => return Err(NovaError::Parse(format!("unknown identity {other:?}"))),
        })
    }
}

/// `(left, right, [(label, coeff)])`: one product written out by label.
pub type ProductRow<'a> = (&'a str, &'a str, &'a [(&'a str, Scalar)]);

/// Algebra on the basis `e_0 .. e_{n-1}` with `e_i ⋄ e_j = Σ_k c[i][j][k] e_k`.
///
/// The declared kind is a tag. It is not verified on construction; run
/// [`check_identity`] for that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    basis: Vec<String>,
    c: Tensor3<Scalar>,
    kind: AlgebraKind,
}

impl Algebra {
    /// Zero product on the given basis. Labels must be unique.
    pub fn new(basis: Vec<String>, kind: AlgebraKind) -> Result<Self, NovaError> {
        check_labels(&basis)?;
        let n = basis.len();
        Ok(Algebra {
            basis,
            c: Tensor3::zeros(n),
            kind,
        })
    }

    pub fn from_structure(
        basis: Vec<String>,
        c: Tensor3<Scalar>,
        kind: AlgebraKind,
    ) -> Result<Self, NovaError> {
        check_labels(&basis)?;
        if c.dim() != basis.len() {
            return Err(NovaError::DimensionMismatch {
                expected: basis.len(),
                found: c.dim(),
            });
        }
        Ok(Algebra { basis, c, kind })
    }

    /// Builds from products given by label.
    pub fn from_table(
        basis: &[&str],
        kind: AlgebraKind,
        table: &[ProductRow],
    ) -> Result<Self, NovaError> {
        let mut a = Algebra::new(basis.iter().map(|s| s.to_string()).collect(), kind)?;
        for (l, r, terms) in table {
            let (i, j) = (a.index_of(l)?, a.index_of(r)?);
            for (k, v) in terms.iter() {
                let k = a.index_of(k)?;
                *a.c.entry_mut(i, j, k) += v;
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: AlgebraKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self, NovaError> {
        check_labels(&basis)?;
        if basis.len() != self.dim() {
            return Err(NovaError::DimensionMismatch {
                expected: self.dim(),
                found: basis.len(),
            });
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn structure(&self) -> &Tensor3<Scalar> {
        &self.c
    }

    pub fn index_of(&self, label: &str) -> Result<usize, NovaError> {
        self.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| NovaError::UnknownLabel(label.to_string()))
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (k, x) in v.iter().enumerate() {
            self.c.set(i, j, k, x.clone());
        }
    }

    /// Coefficients of `e_i ⋄ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.c.fiber(i, j)
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.c.fiber(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// `x ⋄ e_k`.
    fn product_vec_basis(&self, x: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (m, a) in x.iter().enumerate() {
            if !a.is_zero() {
                for (t, c) in self.c.fiber(m, k).iter().enumerate() {
                    if !c.is_zero() {
                        out[t] += a * c;
                    }
                }
            }
        }
        out
    }

    /// `e_i ⋄ x`.
    fn product_basis_vec(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (m, a) in x.iter().enumerate() {
            if !a.is_zero() {
                for (t, c) in self.c.fiber(i, m).iter().enumerate() {
                    if !c.is_zero() {
                        out[t] += a * c;
                    }
                }
            }
        }
        out
    }

    /// Left multiplication `L(e_i)`: column `j` is `e_i ⋄ e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.c.get(i, j, k).clone())
    }

    /// Right multiplication `R(e_i)`: column `j` is `e_j ⋄ e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.c.get(j, i, k).clone())
    }

    pub fn left_mult_vec(&self, x: &[Scalar]) -> Matrix {
        combine(self.dim(), x, |i| self.left_mult(i))
    }

    pub fn right_mult_vec(&self, x: &[Scalar]) -> Matrix {
        combine(self.dim(), x, |i| self.right_mult(i))
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim(), i)
    }

    /// The opposite algebra `x ∘ y = y ⋄ x`.
    pub fn opposite(&self, kind: AlgebraKind) -> Algebra {
        let n = self.dim();
        let c = Tensor3::from_fn(n, |i, j, k| self.c.get(j, i, k).clone());
        Algebra {
            basis: self.basis.clone(),
            c,
            kind,
        }
    }

    /// Same algebra written in the basis `e'_i = e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Algebra {
        let n = self.dim();
        let c = Tensor3::from_fn(n, |i, j, k| self.c.get(perm[i], perm[j], perm[k]).clone());
        Algebra {
            basis: perm.iter().map(|&p| self.basis[p].clone()).collect(),
            c,
            kind: self.kind,
        }
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub(crate) fn combine(n: usize, x: &[Scalar], f: impl Fn(usize) -> Matrix) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (i, a) in x.iter().enumerate() {
        if !a.is_zero() {
            out = out.add(&f(i).scale(a));
        }
    }
    out
}

pub(crate) fn check_labels(basis: &[String]) -> Result<(), NovaError> {
    for (i, b) in basis.iter().enumerate() {
        if b.is_empty() {
            return Err(NovaError::Invalid("empty basis label".into()));
        }
        if basis[..i].contains(b) {
            return Err(NovaError::Invalid(format!("duplicate basis label {b:?}")));
        }
    }
    Ok(())
}

/// Scans all basis tuples of the given arity in lexicographic order and
/// reports the first one where `diff` is nonzero.
pub(crate) fn scan<F>(name: &str, labels: &[String], arity: u32, diff: F) -> Check
where
    F: Fn(&[usize]) -> Vec<Scalar> + Sync + Send,
{
    scan_with(name, labels, labels, arity, diff)
}

/// Like [`scan`], with tuples drawn from `at` and differences written in `values`.
pub(crate) fn scan_with<F>(
    name: &str,
    at: &[String],
    values: &[String],
    arity: u32,
    diff: F,
) -> Check
where
    F: Fn(&[usize]) -> Vec<Scalar> + Sync + Send,
{
    let n = at.len();
    let total = n.pow(arity);
    let witness = par::find_map_first(total, |mut pos| {
        let mut idx = vec![0; arity as usize];
        for slot in idx.iter_mut().rev() {
            *slot = pos % n;
            pos /= n;
        }
        let d = diff(&idx);
        (!vec_is_zero(&d)).then(|| Witness {
            at: labels_at(at, &idx),
            discrepancy: fmt_vector(values, &d),
        })
    });
    Check::from_witness(name, witness)
}

/// Brute-force check of `kind` over all basis tuples. Each defining identity is
/// reported separately with its lexicographically first failing tuple.
pub fn check_identity(a: &Algebra, kind: Identity) -> Report {
    let labels = a.basis();
    let pre_lie = || {
        scan("pre-lie", labels, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = vec_sub(
                &a.product_vec_basis(a.basis_product(i, j), k),
                &a.product_basis_vec(i, a.basis_product(j, k)),
            );
            let rhs = vec_sub(
                &a.product_vec_basis(a.basis_product(j, i), k),
                &a.product_basis_vec(j, a.basis_product(i, k)),
            );
            vec_sub(&lhs, &rhs)
        })
    };
    let commutative = || {
        scan("commutative", labels, 2, |t| {
            vec_sub(a.basis_product(t[0], t[1]), a.basis_product(t[1], t[0]))
        })
    };
    let mut report = Report::new();
    match kind {
        Identity::PreLie => report.push(pre_lie()),
        Identity::LeftNovikov => {
            report.push(pre_lie());
            report.push(scan("right-commutative", labels, 3, |t| {
                vec_sub(
                    &a.product_vec_basis(a.basis_product(t[0], t[1]), t[2]),
                    &a.product_vec_basis(a.basis_product(t[0], t[2]), t[1]),
                )
            }));
        }
        Identity::RightNovikov => {
            report.push(scan("left-commutative", labels, 3, |t| {
                vec_sub(
                    &a.product_basis_vec(t[0], a.basis_product(t[1], t[2])),
                    &a.product_basis_vec(t[1], a.basis_product(t[0], t[2])),
                )
            }));
            report.push(scan("right-pre-lie", labels, 3, |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let lhs = vec_sub(
                    &a.product_vec_basis(a.basis_product(i, j), k),
                    &a.product_basis_vec(i, a.basis_product(j, k)),
                );
                let rhs = vec_sub(
                    &a.product_vec_basis(a.basis_product(i, k), j),
                    &a.product_basis_vec(i, a.basis_product(k, j)),
                );
                vec_sub(&lhs, &rhs)
            }));
        }
        Identity::Commutative => report.push(commutative()),
        Identity::CommAssoc => {
            report.push(commutative());
            report.push(scan("associative", labels, 3, |t| {
                vec_sub(
                    &a.product_vec_basis(a.basis_product(t[0], t[1]), t[2]),
                    &a.product_basis_vec(t[0], a.basis_product(t[1], t[2])),
                )
            }));
        }
        Identity::Lie => {
            report.push(scan("antisymmetric", labels, 2, |t| {
                let (i, j) = (t[0], t[1]);
                a.basis_product(i, j)
                    .iter()
                    .zip(a.basis_product(j, i))
                    .map(|(x, y)| x + y)
                    .collect()
            }));
            report.push(scan("jacobi", labels, 3, |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let x = a.product_basis_vec(i, a.basis_product(j, k));
                let y = a.product_basis_vec(j, a.basis_product(k, i));
                let z = a.product_basis_vec(k, a.basis_product(i, j));
                x.iter()
                    .zip(&y)
                    .zip(&z)
                    .map(|((p, q), r)| p + q + r)
                    .collect()
            }));
        }
    }
    report.prefixed(kind.as_str())
}

/// Checks the identity of the algebra's declared kind. `Unchecked` passes trivially.
pub fn check_declared(a: &Algebra) -> Report {
    match a.kind().identity() {
        Some(id) => check_identity(a, id),
        None => Report::new(),
    }
}
