//! Coproducts, coalgebra axioms, dual products and bialgebra compatibility.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    check_identity, check_structure_map, Algebra, AlgebraKind, Identity, StructureMap,
};
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar, Tensor2, Tensor3};
use crate::par;
use crate::report::{fmt_tensor2, fmt_tensor3, labels_at, Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoalgebraKind {
    Novikov,
    RightNovikov,
    Lie,
    CoassocCocomm,
    Unchecked,
}

impl CoalgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoalgebraKind::Novikov => "novikov",
            CoalgebraKind::RightNovikov => "right-novikov",
            CoalgebraKind::Lie => "lie",
            CoalgebraKind::CoassocCocomm => "coassoc-cocomm",
            CoalgebraKind::Unchecked => "unchecked",
        }
    }

    /// Kind of the algebra on the dual space.
    pub fn dual_kind(self) -> AlgebraKind {
        match self {
            CoalgebraKind::Novikov => AlgebraKind::LeftNovikov,
            CoalgebraKind::RightNovikov => AlgebraKind::RightNovikov,
            CoalgebraKind::Lie => AlgebraKind::Lie,
            CoalgebraKind::CoassocCocomm => AlgebraKind::CommAssoc,
            CoalgebraKind::Unchecked => AlgebraKind::Unchecked,
        }
    }
}

impl fmt::Display for CoalgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoalgebraKind {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "novikov" | "left-novikov" => CoalgebraKind::Novikov,
            "right-novikov" => CoalgebraKind::RightNovikov,
            "lie" => CoalgebraKind::Lie,
            "coassoc-cocomm" => CoalgebraKind::CoassocCocomm,
            "unchecked" => CoalgebraKind::Unchecked,
            other => {
                return Err(NovaError::Parse(format!(
                    "unknown coproduct class {other:?}"
                )))
            }
        })
    }
}

/// `(element, [(left, right, coeff)])`: one coproduct image written out by label.
pub type CoproductRow<'a> = (&'a str, &'a [(&'a str, &'a str, Scalar)]);

/// Coproduct `δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct {
    d: Tensor3<Scalar>,
    kind: CoalgebraKind,
}

impl Coproduct {
    pub fn zero(n: usize, kind: CoalgebraKind) -> Self {
        Coproduct {
            d: Tensor3::zeros(n),
            kind,
        }
    }

    pub fn from_structure(d: Tensor3<Scalar>, kind: CoalgebraKind) -> Self {
        Coproduct { d, kind }
    }

    /// Builds from the images of the basis vectors.
    pub fn from_images(images: &[Tensor2<Scalar>], kind: CoalgebraKind) -> Self {
        let n = images.len();
        Coproduct {
            d: Tensor3::from_fn(n, |i, j, k| images[i].get(j, k).clone()),
            kind,
        }
    }

    pub fn from_table(
        basis: &[String],
        kind: CoalgebraKind,
        table: &[CoproductRow],
    ) -> Result<Self, NovaError> {
        let idx = |l: &str| {
            basis
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| NovaError::UnknownLabel(l.into()))
        };
        let mut d = Tensor3::zeros(basis.len());
        for (of, terms) in table {
            let i = idx(of)?;
            for (l, r, v) in terms.iter() {
                *d.entry_mut(i, idx(l)?, idx(r)?) += v;
            }
        }
        Ok(Coproduct { d, kind })
    }

    pub fn dim(&self) -> usize {
        self.d.dim()
    }

    pub fn kind(&self) -> CoalgebraKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: CoalgebraKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn structure(&self) -> &Tensor3<Scalar> {
        &self.d
    }

    /// `δ(e_i)`.
    pub fn of(&self, i: usize) -> Tensor2<Scalar> {
        let n = self.dim();
        Tensor2::from_fn(n, |j, k| self.d.get(i, j, k).clone())
    }

    /// `δ(x)`.
    pub fn apply(&self, x: &[Scalar]) -> Tensor2<Scalar> {
        let n = self.dim();
        let mut out = Tensor2::zeros(n);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&self.of(i).scale(a));
            }
        }
        out
    }

    /// Same coproduct written in the basis `e'_i = e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Coproduct {
        let n = self.dim();
        Coproduct {
            d: Tensor3::from_fn(n, |i, j, k| self.d.get(perm[i], perm[j], perm[k]).clone()),
            kind: self.kind,
        }
    }
}

/// Labels for the dual basis: `e3 -> f3`, anything else gets a trailing `*`.
pub fn dual_labels(basis: &[String]) -> Vec<String> {
    let mut out: Vec<String> = basis
        .iter()
        .map(|b| match b.strip_prefix('e') {
            Some(rest) if !rest.is_empty() => format!("f{rest}"),
            _ => format!("{b}*"),
        })
        .collect();
    for i in 0..out.len() {
        while basis.contains(&out[i]) || out[..i].contains(&out[i]) {
            out[i].push('*');
        }
    }
    out
}

/// Product on `A*` dual to `δ`: `f_j ⋄ f_k = Σ_i d[i][j][k] f_i`.
pub fn dual_product(basis: &[String], d: &Coproduct) -> Algebra {
    let n = d.dim();
    let c = Tensor3::from_fn(n, |j, k, i| d.d.get(i, j, k).clone());
    Algebra::from_structure(dual_labels(basis), c, d.kind.dual_kind())
        .expect("dual labels are unique")
}

/// Coproduct on `A*` dual to the product of `A`.
pub fn dual_coproduct(a: &Algebra, kind: CoalgebraKind) -> Coproduct {
    let n = a.dim();
    let c = a.structure();
    Coproduct {
        d: Tensor3::from_fn(n, |k, i, j| c.get(i, j, k).clone()),
        kind,
    }
}

/// `(δ ⊗ id) δ (e_s)`.
fn delta_left(d: &Tensor3<Scalar>, s: usize) -> Tensor3<Scalar> {
    let n = d.dim();
    let mut t = Tensor3::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let a = d.get(s, j, k);
            if a.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let b = d.get(j, p, q);
                    if !b.is_zero() {
                        *t.entry_mut(p, q, k) += a * b;
                    }
                }
            }
        }
    }
    t
}

/// `(id ⊗ δ) δ (e_s)`.
fn delta_right(d: &Tensor3<Scalar>, s: usize) -> Tensor3<Scalar> {
    let n = d.dim();
    let mut t = Tensor3::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let a = d.get(s, j, k);
            if a.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let b = d.get(k, p, q);
                    if !b.is_zero() {
                        *t.entry_mut(j, p, q) += a * b;
                    }
                }
            }
        }
    }
    t
}

/// `(id ⊗ δ) τ δ (e_s)`.
fn delta_right_flipped(d: &Tensor3<Scalar>, s: usize) -> Tensor3<Scalar> {
    let n = d.dim();
    let mut t = Tensor3::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let a = d.get(s, j, k);
            if a.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let b = d.get(j, p, q);
                    if !b.is_zero() {
                        *t.entry_mut(k, p, q) += a * b;
                    }
                }
            }
        }
    }
    t
}

pub(crate) fn scan_t3(
    name: &str,
    labels: &[String],
    f: impl Fn(usize) -> Tensor3<Scalar> + Sync + Send,
) -> Check {
    let witness = par::find_map_first(labels.len(), |s| {
        let t = f(s);
        (!t.is_zero()).then(|| Witness {
            at: vec![labels[s].clone()],
            discrepancy: fmt_tensor3(labels, &t),
        })
    });
    Check::from_witness(name, witness)
}

pub(crate) fn scan_t2(
    name: &str,
    labels: &[String],
    f: impl Fn(usize) -> Tensor2<Scalar> + Sync + Send,
) -> Check {
    let witness = par::find_map_first(labels.len(), |s| {
        let t = f(s);
        (!t.is_zero()).then(|| Witness {
            at: vec![labels[s].clone()],
            discrepancy: fmt_tensor2(labels, &t),
        })
    });
    Check::from_witness(name, witness)
}

pub(crate) fn scan_pairs_t2(
    name: &str,
    labels: &[String],
    f: impl Fn(usize, usize) -> Tensor2<Scalar> + Sync + Send,
) -> Check {
    let n = labels.len();
    let witness = par::find_map_first(n * n, |at| {
        let (i, j) = (at / n, at % n);
        let t = f(i, j);
        (!t.is_zero()).then(|| Witness {
            at: labels_at(labels, &[i, j]),
            discrepancy: fmt_tensor2(labels, &t),
        })
    });
    Check::from_witness(name, witness)
}

/// Coalgebra axioms of `kind`, checked on every basis vector.
pub fn check_coalgebra(basis: &[String], delta: &Coproduct, kind: CoalgebraKind) -> Report {
    let d = &delta.d;
    let mut report = Report::new();
    match kind {
        CoalgebraKind::Novikov => {
            report.push(scan_t3(
                "(τ⊗id)(id⊗δ)τδ = (δ⊗id)δ",
                basis,
                |s| delta_right_flipped(d, s).swap12().sub(&delta_left(d, s)),
            ));
            report.push(scan_t3(
                "(id⊗δ)δ - (τ⊗id)(id⊗δ)δ = (δ⊗id)δ - (τ⊗id)(δ⊗id)δ",
                basis,
                |s| {
                    let r = delta_right(d, s);
                    let l = delta_left(d, s);
                    r.sub(&r.swap12()).sub(&l.sub(&l.swap12()))
                },
            ));
        }
        CoalgebraKind::RightNovikov => {
            report.push(scan_t3("(id⊗Δ)Δ = (τ⊗id)(id⊗Δ)Δ", basis, |s| {
                let r = delta_right(d, s);
                r.sub(&r.swap12())
            }));
            report.push(scan_t3(
                "(Δ⊗id)Δ - (id⊗τ)(Δ⊗id)Δ = (id⊗Δ)Δ - (id⊗τ)(id⊗Δ)Δ",
                basis,
                |s| {
                    let r = delta_right(d, s);
                    let l = delta_left(d, s);
                    l.sub(&l.swap23()).sub(&r.sub(&r.swap23()))
                },
            ));
        }
        CoalgebraKind::Lie => {
            report.push(scan_t2("τΔ = -Δ", basis, |s| {
                let t = delta.of(s);
                t.add(&t.flip())
            }));
            report.push(scan_t3(
                "(id⊗Δ)Δ - (τ⊗id)(id⊗Δ)Δ = (Δ⊗id)Δ",
                basis,
                |s| {
                    let r = delta_right(d, s);
                    r.sub(&r.swap12()).sub(&delta_left(d, s))
                },
            ));
        }
        CoalgebraKind::CoassocCocomm => {
            report.push(scan_t3("(Δ⊗id)Δ = (id⊗Δ)Δ", basis, |s| {
                delta_left(d, s).sub(&delta_right(d, s))
            }));
            report.push(scan_t2("τΔ = Δ", basis, |s| {
                let t = delta.of(s);
                t.sub(&t.flip())
            }));
        }
        CoalgebraKind::Unchecked => {}
    }
    report.prefixed(&format!("{kind} coalgebra"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BialgebraFlavor {
    Novikov,
    Infinitesimal,
    Lie,
    DiffInfinitesimal,
}

impl BialgebraFlavor {
    pub fn as_str(self) -> &'static str {
        match self {
            BialgebraFlavor::Novikov => "novikov",
            BialgebraFlavor::Infinitesimal => "infinitesimal",
            BialgebraFlavor::Lie => "lie",
            BialgebraFlavor::DiffInfinitesimal => "diff-infinitesimal",
        }
    }

    fn parts(self) -> (Identity, CoalgebraKind) {
        match self {
            BialgebraFlavor::Novikov => (Identity::LeftNovikov, CoalgebraKind::Novikov),
            BialgebraFlavor::Infinitesimal | BialgebraFlavor::DiffInfinitesimal => {
                (Identity::CommAssoc, CoalgebraKind::CoassocCocomm)
            }
            BialgebraFlavor::Lie => (Identity::Lie, CoalgebraKind::Lie),
        }
    }
}

impl fmt::Display for BialgebraFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BialgebraFlavor {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "novikov" => BialgebraFlavor::Novikov,
            "infinitesimal" => BialgebraFlavor::Infinitesimal,
            "lie" => BialgebraFlavor::Lie,
            "diff-infinitesimal" => BialgebraFlavor::DiffInfinitesimal,
            other => {
                return Err(NovaError::Parse(format!(
                    "unknown bialgebra flavor {other:?}"
                )))
            }
        })
    }
}

/// The pair `(∂, θ)` of a differential infinitesimal bialgebra.
#[derive(Clone, Copy, Debug)]
pub struct DiffMaps<'a> {
    pub partial: &'a StructureMap,
    pub theta: &'a StructureMap,
}

struct Ops {
    l: Vec<Matrix>,
    r: Vec<Matrix>,
    d: Vec<Matrix>,
}

impl Ops {
    fn new(a: &Algebra, delta: &Coproduct) -> Self {
        let n = a.dim();
        Ops {
            l: (0..n).map(|i| a.left_mult(i)).collect(),
            r: (0..n).map(|i| a.right_mult(i)).collect(),
            d: (0..n).map(|i| delta.of(i).into_matrix()).collect(),
        }
    }

    fn delta_of(&self, v: &[Scalar]) -> Matrix {
        let n = self.l.len();
        let mut out = Matrix::zeros(n, n);
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&self.d[i].scale(a));
            }
        }
        out
    }
}

fn t2(m: Matrix) -> Tensor2<Scalar> {
    Tensor2::from_matrix(m)
}

/// Full check of a bialgebra of the given flavor: the algebra identity, the
/// coalgebra axioms and every compatibility condition.
pub fn check_bialgebra(
    a: &Algebra,
    delta: &Coproduct,
    flavor: BialgebraFlavor,
    maps: Option<DiffMaps<'_>>,
) -> Result<Report, NovaError> {
    if delta.dim() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: delta.dim(),
        });
    }
    if flavor == BialgebraFlavor::DiffInfinitesimal && maps.is_none() {
        return Err(NovaError::MissingCompanion(
            "differential bialgebra needs ∂ and θ".into(),
        ));
    }
    let (identity, co_kind) = flavor.parts();
    let labels = a.basis();
    let ops = Ops::new(a, delta);
    let mut report = check_identity(a, identity);
    report.extend(check_coalgebra(labels, delta, co_kind));
    let mut compat = Report::new();
    match flavor {
        BialgebraFlavor::Novikov => {
            let lr = |i: usize| ops.l[i].add(&ops.r[i]);
            let sym = |i: usize| ops.d[i].add(&ops.d[i].transpose());
            compat.push(scan_pairs_t2(
                "δ(a1⋄a2) = (r(a2)⊗id)δ(a1) + (id⊗(l+r)(a1))(δ(a2) + τδ(a2))",
                labels,
                |s, t| {
                    let lhs = ops.delta_of(a.basis_product(s, t));
                    let rhs = ops.r[t].mul(&ops.d[s]).add(&sym(t).mul(&lr(s).transpose()));
                    t2(lhs.sub(&rhs))
                },
            ));
            compat.push(scan_pairs_t2(
                "((l+r)(a1)⊗id)δ(a2) - (id⊗(l+r)(a1))τδ(a2) is symmetric in a1, a2",
                labels,
                |s, t| {
                    let side = |x: usize, y: usize| {
                        lr(x)
                            .mul(&ops.d[y])
                            .sub(&ops.d[y].transpose().mul(&lr(x).transpose()))
                    };
                    t2(side(s, t).sub(&side(t, s)))
                },
            ));
            compat.push(scan_pairs_t2(
                "(id⊗r(a1) - r(a1)⊗id)(δ(a2) + τδ(a2)) is symmetric in a1, a2",
                labels,
                |s, t| {
                    let side = |x: usize, y: usize| {
                        sym(y)
                            .mul(&ops.r[x].transpose())
                            .sub(&ops.r[x].mul(&sym(y)))
                    };
                    t2(side(s, t).sub(&side(t, s)))
                },
            ));
        }
        BialgebraFlavor::Infinitesimal | BialgebraFlavor::DiffInfinitesimal => {
            compat.push(scan_pairs_t2(
                "Δ(a1a2) = (id⊗u(a1))Δ(a2) + (u(a2)⊗id)Δ(a1)",
                labels,
                |s, t| {
                    let lhs = ops.delta_of(a.basis_product(s, t));
                    let rhs = ops.d[t]
                        .mul(&ops.l[s].transpose())
                        .add(&ops.l[t].mul(&ops.d[s]));
                    t2(lhs.sub(&rhs))
                },
            ));
        }
        BialgebraFlavor::Lie => {
            compat.push(scan_pairs_t2(
                "Δ([g1,g2]) = (ad g1⊗id + id⊗ad g1)Δ(g2) - (ad g2⊗id + id⊗ad g2)Δ(g1)",
                labels,
                |s, t| {
                    let lhs = ops.delta_of(a.basis_product(s, t));
                    let act = |x: usize, y: usize| {
                        ops.l[x]
                            .mul(&ops.d[y])
                            .add(&ops.d[y].mul(&ops.l[x].transpose()))
                    };
                    t2(lhs.sub(&act(s, t).sub(&act(t, s))))
                },
            ));
        }
    }
    report.extend(compat.prefixed(&format!("{flavor} compatibility")));
    if let Some(DiffMaps { partial, theta }) = maps {
        report.extend(check_structure_map(a, partial, None)?.prefixed("∂"));
        report.extend(check_structure_map(a, theta, Some(partial))?.prefixed("θ"));
        let th = &theta.matrix;
        let pa = &partial.matrix;
        report.push(scan_t2(
            "θ coderivation: Δθ = (id⊗θ + θ⊗id)Δ",
            labels,
            |s| {
                let lhs = ops.delta_of(&th.column(s));
                let rhs = ops.d[s].mul(&th.transpose()).add(&th.mul(&ops.d[s]));
                t2(lhs.sub(&rhs))
            },
        ));
        report.push(scan_t2(
            "admissible codifferential: (∂⊗id - id⊗θ)Δ = Δ∂",
            labels,
            |s| {
                let lhs = pa.mul(&ops.d[s]).sub(&ops.d[s].mul(&th.transpose()));
                t2(lhs.sub(&ops.delta_of(&pa.column(s))))
            },
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn nb2_is_a_novikov_bialgebra() {
        let f = fixtures::nb2();
        let r = check_bialgebra(
            &f.algebra,
            f.coproduct.as_ref().unwrap(),
            BialgebraFlavor::Novikov,
            None,
        )
        .unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn diagonal_coproduct_breaks_compatibility() {
        let f = fixtures::n2();
        let d = Coproduct::from_table(
            f.algebra.basis(),
            CoalgebraKind::Novikov,
            &[("e1", &[("e1", "e1", Scalar::one())])],
        )
        .unwrap();
        assert!(check_coalgebra(f.algebra.basis(), &d, CoalgebraKind::Novikov).pass());
        let r = check_bialgebra(&f.algebra, &d, BialgebraFlavor::Novikov, None).unwrap();
        let fail = r.first_failure().unwrap();
        assert!(
            fail.name.starts_with("novikov compatibility: δ(a1⋄a2)"),
            "{r}"
        );
        assert_eq!(fail.witness.as_ref().unwrap().at, vec!["e1", "e1"]);
    }

    #[test]
    fn dual_of_nb2_coproduct() {
        let f = fixtures::nb2();
        let dual = dual_product(f.algebra.basis(), f.coproduct.as_ref().unwrap());
        assert_eq!(dual.basis(), &["f1".to_string(), "f2".to_string()]);
        // f2 ⋄ f2 = f1
        assert_eq!(dual.basis_product(1, 1), &[Scalar::one(), Scalar::zero()]);
        assert!(check_identity(&dual, Identity::LeftNovikov).pass());
    }

    #[test]
    fn ca2_and_da3_are_differential_bialgebras() {
        for f in [fixtures::ca2(), fixtures::da3()] {
            let maps = DiffMaps {
                partial: f.partial.as_ref().unwrap(),
                theta: f.theta.as_ref().unwrap(),
            };
            let r = check_bialgebra(
                &f.algebra,
                f.coproduct.as_ref().unwrap(),
                BialgebraFlavor::DiffInfinitesimal,
                Some(maps),
            )
            .unwrap();
            assert!(r.pass(), "{}: {r}", f.name);
        }
    }

    #[test]
    fn diff_flavor_requires_maps() {
        let f = fixtures::ca2();
        assert!(matches!(
            check_bialgebra(
                &f.algebra,
                f.coproduct.as_ref().unwrap(),
                BialgebraFlavor::DiffInfinitesimal,
                None
            ),
            Err(NovaError::MissingCompanion(_))
        ));
    }

    #[test]
    fn dual_labels_avoid_collisions() {
        let b: Vec<String> = ["e1", "f1", "x"].iter().map(|s| s.to_string()).collect();
        assert_eq!(dual_labels(&b), vec!["f1*", "f1**", "x*"]);
    }
}
