//! Yang-Baxter type equations, invariance, the maps induced by a 2-tensor,
//! coboundary coproducts, classification and solution search.

mod classify;
mod search;

use std::fmt;
use std::str::FromStr;

pub use classify::{
    check_admissible_aybe, classify_differential, classify_lie, classify_r,
    syminva_matrix_condition, Classification, DiffClassification, HomCheck, Verdict,
};
pub use search::{grid_search_r, parametric_residual, MAX_GRID, MAX_SUPPORT};

use crate::algebra::{Algebra, AlgebraKind};
use crate::bialgebra::{dual_labels, CoalgebraKind, Coproduct};
use crate::error::NovaError;
use crate::kernel::{Coeff, Matrix, Scalar, Tensor2, Tensor3};
use crate::par;
use crate::report::{fmt_tensor2, Check, Witness};

/// A 2-tensor `r = Σ R[i][j] e_i ⊗ e_j` in `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RMatrix(pub Tensor2<Scalar>);

impl RMatrix {
    pub fn zero(n: usize) -> Self {
        RMatrix(Tensor2::zeros(n))
    }

    pub fn from_terms(basis: &[String], terms: &[(&str, &str, Scalar)]) -> Result<Self, NovaError> {
        let idx = |l: &str| {
            basis
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| NovaError::UnknownLabel(l.into()))
        };
        let mut t = Tensor2::zeros(basis.len());
        for (l, r, v) in terms {
            *t.entry_mut(idx(l)?, idx(r)?) += v;
        }
        Ok(RMatrix(t))
    }

    pub fn from_matrix(m: Matrix) -> Self {
        RMatrix(Tensor2::from_matrix(m))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn tensor(&self) -> &Tensor2<Scalar> {
        &self.0
    }

    pub fn coeffs(&self) -> &Matrix {
        self.0.matrix()
    }

    pub fn flip(&self) -> RMatrix {
        RMatrix(self.0.flip())
    }

    pub fn is_skew(&self) -> bool {
        self.0.add(&self.0.flip()).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0 == self.0.flip()
    }

    /// `r + τ(r)`, twice the symmetric part.
    pub fn sym_sum(&self) -> Tensor2<Scalar> {
        self.0.add(&self.0.flip())
    }

    pub fn permuted(&self, perm: &[usize]) -> RMatrix {
        let n = self.dim();
        RMatrix(Tensor2::from_fn(n, |i, j| {
            self.0.get(perm[i], perm[j]).clone()
        }))
    }
}

/// Which Yang-Baxter type equation a residual refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YbeFlavor {
    /// Novikov Yang-Baxter equation.
    Nybe,
    /// Associative Yang-Baxter equation.
    Aybe,
    /// Classical Yang-Baxter equation.
    Cybe,
}

impl YbeFlavor {
    pub fn as_str(self) -> &'static str {
        match self {
            YbeFlavor::Nybe => "nybe",
            YbeFlavor::Aybe => "aybe",
            YbeFlavor::Cybe => "cybe",
        }
    }

    pub fn for_kind(kind: AlgebraKind) -> Option<YbeFlavor> {
        match kind {
            AlgebraKind::LeftNovikov => Some(YbeFlavor::Nybe),
            AlgebraKind::CommAssoc => Some(YbeFlavor::Aybe),
            AlgebraKind::Lie => Some(YbeFlavor::Cybe),
            _ => None,
        }
    }
}

impl fmt::Display for YbeFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for YbeFlavor {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "nybe" => YbeFlavor::Nybe,
            "aybe" => YbeFlavor::Aybe,
            "cybe" => YbeFlavor::Cybe,
            other => return Err(NovaError::Parse(format!("unknown equation {other:?}"))),
        })
    }
}

fn add_product<T: Coeff>(
    out: &mut Tensor3<T>,
    w: &T,
    fiber: &[Scalar],
    slot: impl Fn(usize) -> (usize, usize, usize),
) {
    for (k, c) in fiber.iter().enumerate() {
        if !c.is_zero() {
            let (i, j, l) = slot(k);
            out.entry_mut(i, j, l).add_scaled(w, c);
        }
    }
}

/// Residual of the chosen equation for `r` with coefficients in any ring.
///
/// Writing `r = Σ x ⊗ y` with a second copy `Σ x' ⊗ y'`:
/// * NYBE: `x⊗x'⊗yy' + x⊗yx'⊗y' + x'⊗xy'⊗y + xx'⊗y'⊗y`
/// * AYBE: `xx'⊗y'⊗y + x⊗x'⊗yy' - x⊗yx'⊗y'`
/// * CYBE: `[x,x']⊗y⊗y' + x⊗x'⊗[y,y'] + x⊗[y,x']⊗y'`
pub fn ybe_residual<T: Coeff>(a: &Algebra, r: &Tensor2<T>, flavor: YbeFlavor) -> Tensor3<T> {
    let n = a.dim();
    let nz: Vec<(usize, usize, &T)> = r.nonzero().collect();
    let mut out = Tensor3::zeros(n);
    for &(p, q, x) in &nz {
        for &(s, t, y) in &nz {
            let w = x.mul_ref(y);
            match flavor {
                YbeFlavor::Nybe => {
                    add_product(&mut out, &w, a.basis_product(q, t), |k| (p, s, k));
                    add_product(&mut out, &w, a.basis_product(q, s), |k| (p, k, t));
                    add_product(&mut out, &w, a.basis_product(p, t), |k| (s, k, q));
                    add_product(&mut out, &w, a.basis_product(p, s), |k| (k, t, q));
                }
                YbeFlavor::Aybe => {
                    add_product(&mut out, &w, a.basis_product(p, s), |k| (k, t, q));
                    add_product(&mut out, &w, a.basis_product(q, t), |k| (p, s, k));
                    add_product(&mut out, &w.neg_ref(), a.basis_product(q, s), |k| (p, k, t));
                }
                YbeFlavor::Cybe => {
                    add_product(&mut out, &w, a.basis_product(p, s), |k| (k, q, t));
                    add_product(&mut out, &w, a.basis_product(q, t), |k| (p, s, k));
                    add_product(&mut out, &w, a.basis_product(q, s), |k| (p, k, t));
                }
            }
        }
    }
    out
}

/// The operator family a 2-tensor must be annihilated by to be invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvarianceKind {
    /// `(l(a)⊗id + id⊗(l+r)(a)) t = 0` on a Novikov algebra.
    Novikov,
    /// `(id⊗u(a) - u(a)⊗id) t = 0` on a commutative associative algebra.
    Associative,
    /// `(id⊗ad(g) + ad(g)⊗id) t = 0` on a Lie algebra.
    Lie,
}

impl InvarianceKind {
    pub fn for_kind(kind: AlgebraKind) -> Option<InvarianceKind> {
        match kind {
            AlgebraKind::LeftNovikov => Some(InvarianceKind::Novikov),
            AlgebraKind::CommAssoc => Some(InvarianceKind::Associative),
            AlgebraKind::Lie => Some(InvarianceKind::Lie),
            _ => None,
        }
    }
}

/// The operator of `kind` at `e_s` applied to `t`.
pub fn invariance_operator(
    a: &Algebra,
    kind: InvarianceKind,
    s: usize,
    t: &Tensor2<Scalar>,
) -> Tensor2<Scalar> {
    let l = a.left_mult(s);
    match kind {
        InvarianceKind::Novikov => t
            .apply_left(&l)
            .add(&t.apply_right(&l.add(&a.right_mult(s)))),
        InvarianceKind::Associative => t.apply_right(&l).sub(&t.apply_left(&l)),
        InvarianceKind::Lie => t.apply_right(&l).add(&t.apply_left(&l)),
    }
}

/// Invariance of `t` under every basis element, with the first failing one as witness.
pub fn check_invariance(a: &Algebra, t: &Tensor2<Scalar>, kind: InvarianceKind) -> Check {
    let labels = a.basis();
    let witness = par::find_map_first(a.dim(), |s| {
        let d = invariance_operator(a, kind, s, t);
        (!d.is_zero()).then(|| Witness {
            at: vec![labels[s].clone()],
            discrepancy: fmt_tensor2(labels, &d),
        })
    });
    Check::from_witness("invariant", witness)
}

/// The maps `A* -> A` attached to `r`, as matrices on dual coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMaps {
    /// `⟨r♯(ξ), η⟩ = ⟨ξ ⊗ η, r⟩`.
    pub sharp: Matrix,
    /// `⟨ξ, r♮(η)⟩ = -⟨ξ ⊗ η, r⟩`.
    pub natural: Matrix,
    /// `r♯ - r♮`, which equals the map of `r + τ(r)`.
    pub iso: Matrix,
}

pub fn r_maps(r: &RMatrix) -> RMaps {
    let m = r.coeffs();
    RMaps {
        sharp: m.transpose(),
        natural: m.neg(),
        iso: m.add(&m.transpose()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoboundaryFlavor {
    /// `δ_r(a) = -(l(a)⊗id + id⊗(l+r)(a)) r`.
    Novikov,
    /// `Δ_r(a) = (id⊗u(a) - u(a)⊗id) r`.
    Infinitesimal,
    /// `Δ_r(g) = (id⊗ad(g) + ad(g)⊗id) r`.
    Lie,
}

impl CoboundaryFlavor {
    pub fn for_kind(kind: AlgebraKind) -> Option<CoboundaryFlavor> {
        match kind {
            AlgebraKind::LeftNovikov => Some(CoboundaryFlavor::Novikov),
            AlgebraKind::CommAssoc => Some(CoboundaryFlavor::Infinitesimal),
            AlgebraKind::Lie => Some(CoboundaryFlavor::Lie),
            _ => None,
        }
    }

    fn required_kind(self) -> AlgebraKind {
        match self {
            CoboundaryFlavor::Novikov => AlgebraKind::LeftNovikov,
            CoboundaryFlavor::Infinitesimal => AlgebraKind::CommAssoc,
            CoboundaryFlavor::Lie => AlgebraKind::Lie,
        }
    }
}

pub(crate) fn require_kind(a: &Algebra, kind: AlgebraKind) -> Result<(), NovaError> {
    if a.kind() != kind {
        return Err(NovaError::KindMismatch {
            expected: kind.to_string(),
            found: a.kind().to_string(),
        });
    }
    Ok(())
}

pub fn coboundary_coproduct(
    a: &Algebra,
    r: &RMatrix,
    flavor: CoboundaryFlavor,
) -> Result<Coproduct, NovaError> {
    require_kind(a, flavor.required_kind())?;
    if r.dim() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    let images: Vec<Tensor2<Scalar>> = (0..a.dim())
        .map(|s| match flavor {
            CoboundaryFlavor::Novikov => {
                invariance_operator(a, InvarianceKind::Novikov, s, r.tensor()).neg()
            }
            CoboundaryFlavor::Infinitesimal => {
                invariance_operator(a, InvarianceKind::Associative, s, r.tensor())
            }
            CoboundaryFlavor::Lie => invariance_operator(a, InvarianceKind::Lie, s, r.tensor()),
        })
        .collect();
    let kind = match flavor {
        CoboundaryFlavor::Novikov => CoalgebraKind::Novikov,
        CoboundaryFlavor::Infinitesimal => CoalgebraKind::CoassocCocomm,
        CoboundaryFlavor::Lie => CoalgebraKind::Lie,
    };
    Ok(Coproduct::from_images(&images, kind))
}

/// `ξ ⋄_r η = (l* + r*)(r♯ξ)(η) - r*(r♮η)(ξ)` on `A*`, with `ψ* = -ψᵀ`.
pub fn a_star_product_from_r(a: &Algebra, r: &RMatrix) -> Result<Algebra, NovaError> {
    require_kind(a, AlgebraKind::LeftNovikov)?;
    let n = a.dim();
    let maps = r_maps(r);
    let mut out = Algebra::new(dual_labels(a.basis()), AlgebraKind::LeftNovikov)?;
    for j in 0..n {
        let x = maps.sharp.column(j);
        let lr = a
            .left_mult_vec(&x)
            .add(&a.right_mult_vec(&x))
            .transpose()
            .neg();
        for k in 0..n {
            let y = maps.natural.column(k);
            let rt = a.right_mult_vec(&y).transpose();
            let v: Vec<Scalar> = lr
                .column(k)
                .iter()
                .zip(rt.column(j))
                .map(|(p, q)| p + &q)
                .collect();
            out.set_product(j, k, &v);
        }
    }
    Ok(out)
}
