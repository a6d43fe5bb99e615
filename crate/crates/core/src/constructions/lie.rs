use super::{require, require_kind};
use crate::algebra::{check_bilinear_form, Algebra, AlgebraKind, BilinearForm, FormFlavor};
use crate::bialgebra::{check_bialgebra, BialgebraFlavor, CoalgebraKind, Coproduct};
use crate::error::NovaError;
use crate::kernel::{dual_basis_wrt_form, Matrix, Scalar, Tensor2, Tensor3};
use crate::report::{Check, Report};
use crate::yangbaxter::{
    check_invariance, classify_r, coboundary_coproduct, r_maps, ybe_residual, Classification,
    CoboundaryFlavor, InvarianceKind, RMatrix, Verdict, YbeFlavor,
};

fn require_quadratic(b: &Algebra, omega: &BilinearForm) -> Result<Matrix, NovaError> {
    require_kind(b, AlgebraKind::RightNovikov)?;
    let f = dual_basis_wrt_form(&omega.gram)?;
    let fr = check_bilinear_form(
        b,
        &BilinearForm::new(omega.gram.clone(), FormFlavor::RightNovikovInvariant),
    )?;
    if !fr.symmetric {
        return Err(NovaError::PreconditionFailed("ω is not symmetric".into()));
    }
    if !fr.invariant {
        return Err(NovaError::PreconditionFailed(format!(
            "ω is not invariant: {}",
            fr.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(f)
}

/// `Δ_ω(e_s) = Σ_{p,q} ω(e_s, f_p ∘ f_q) e_p ⊗ e_q` with `{f_j}` dual to `{e_i}` under `ω`.
pub fn delta_omega(b: &Algebra, omega: &BilinearForm) -> Result<Coproduct, NovaError> {
    let f = require_quadratic(b, omega)?;
    let n = b.dim();
    let fs: Vec<Vec<Scalar>> = (0..n).map(|j| f.column(j)).collect();
    let images: Vec<Tensor2<Scalar>> = (0..n)
        .map(|s| Tensor2::from_fn(n, |p, q| omega.eval(&b.unit(s), &b.product(&fs[p], &fs[q]))))
        .collect();
    Ok(Coproduct::from_images(&images, CoalgebraKind::RightNovikov))
}

/// Labels `a⊗b` on the product basis, row-major in `(i, j)`.
pub fn product_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// `[a1⊗b1, a2⊗b2] = (a1⋄a2)⊗(b1∘b2) - (a2⋄a1)⊗(b2∘b1)` on `A ⊗ B`, without checking the inputs.
pub fn lie_bracket_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra, NovaError> {
    let (n, m) = (a.dim(), b.dim());
    let (ca, cb) = (a.structure(), b.structure());
    let t = Tensor3::from_fn(n * m, |x, y, z| {
        let (i, j) = (x / m, x % m);
        let (k, l) = (y / m, y % m);
        let (p, q) = (z / m, z % m);
        &(ca.get(i, k, p) * cb.get(j, l, q)) - &(ca.get(k, i, p) * cb.get(l, j, q))
    });
    Algebra::from_structure(product_labels(a.basis(), b.basis()), t, AlgebraKind::Lie)
}

/// `Δ̃(a⊗b) = (id - τ) Σ (a₍₁₎⊗b₍₁₎) ⊗ (a₍₂₎⊗b₍₂₎)`, without checking the inputs.
pub fn lie_coproduct(delta_a: &Coproduct, delta_b: &Coproduct) -> Coproduct {
    let (n, m) = (delta_a.dim(), delta_b.dim());
    let (da, db) = (delta_a.structure(), delta_b.structure());
    let t = Tensor3::from_fn(n * m, |x, y, z| {
        let (i, j) = (x / m, x % m);
        let (p, q) = (y / m, y % m);
        let (r, s) = (z / m, z % m);
        &(da.get(i, p, r) * db.get(j, q, s)) - &(da.get(i, r, p) * db.get(j, s, q))
    });
    Coproduct::from_structure(t, CoalgebraKind::Lie)
}

/// Lie bialgebra on `A ⊗ B` with index `i * dim B + j` for `e_i ⊗ x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBundle {
    pub algebra: Algebra,
    pub coproduct: Coproduct,
    pub left_dim: usize,
    pub right_dim: usize,
    /// Lie bialgebra check of the result.
    pub report: Report,
}

/// Lie bialgebra induced by a Novikov bialgebra `(A, ⋄, δ)` and a quadratic right
/// Novikov algebra `(B, ∘, ω)`. Both inputs are checked first.
pub fn induce_lie_bialgebra(
    a: &Algebra,
    delta: &Coproduct,
    b: &Algebra,
    omega: &BilinearForm,
) -> Result<LieBundle, NovaError> {
    require_kind(a, AlgebraKind::LeftNovikov)?;
    require(
        &check_bialgebra(a, delta, BialgebraFlavor::Novikov, None)?,
        "not a Novikov bialgebra",
    )?;
    let delta_b = delta_omega(b, omega)?;
    let algebra = lie_bracket_algebra(a, b)?;
    let coproduct = lie_coproduct(delta, &delta_b);
    let report = check_bialgebra(&algebra, &coproduct, BialgebraFlavor::Lie, None)?;
    Ok(LieBundle {
        algebra,
        coproduct,
        left_dim: a.dim(),
        right_dim: b.dim(),
        report,
    })
}

/// `r̂ = Σ_{i,j} (x_i ⊗ e_j) ⊗ (y_i ⊗ f_j)` for `r = Σ x_i ⊗ y_i`.
pub fn lift_r_hat(r: &RMatrix, b: &Algebra, omega: &BilinearForm) -> Result<RMatrix, NovaError> {
    if omega.gram.rows() != b.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: b.dim(),
            found: omega.gram.rows(),
        });
    }
    let f = dual_basis_wrt_form(&omega.gram)?;
    let (n, m) = (r.dim(), b.dim());
    let rc = r.coeffs();
    Ok(RMatrix(Tensor2::from_fn(n * m, |x, y| {
        let (a, j) = (x / m, x % m);
        let (c, q) = (y / m, y % m);
        rc.get(a, c) * f.get(q, j)
    })))
}

/// Everything known about `r̂` next to the classification of `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCheck {
    pub base: Classification,
    pub lie: Algebra,
    pub r_hat: RMatrix,
    pub cybe_zero: bool,
    pub skew: bool,
    /// `τ(r̂) = r̂`; reported, not required.
    pub tau_symmetric: bool,
    pub sym_invariant: bool,
    /// `r̂♯ - r̂♮`, computed from `r̂`.
    pub iso_hat: Matrix,
    /// `iso_hat` equals `I ⊗ κ♯` with `κ♯` the dual basis matrix of `ω`.
    pub iso_hat_is_kron: bool,
    pub iso_hat_invertible: bool,
    /// `Δ̃_r̂`.
    pub coboundary: Coproduct,
}

impl LiftCheck {
    /// The verdict of `r` carries over to `r̂`.
    pub fn preserved(&self) -> bool {
        match self.base.verdict {
            Verdict::None => true,
            Verdict::Triangular => self.cybe_zero && self.skew,
            Verdict::QuasiTriangular => self.cybe_zero && self.sym_invariant,
            Verdict::Factorizable => {
                self.cybe_zero
                    && self.sym_invariant
                    && self.iso_hat_invertible
                    && self.iso_hat_is_kron
            }
        }
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::flag(
            format!("r is {}", self.base.verdict),
            self.base.verdict != Verdict::None,
        ));
        r.push(Check::flag("C(r̂) = 0", self.cybe_zero));
        r.push(Check::flag("r̂ + τ(r̂) ad-invariant", self.sym_invariant));
        r.push(Check::flag("Î = I ⊗ κ♯", self.iso_hat_is_kron));
        r.push(Check::flag("verdict preserved", self.preserved()));
        r
    }
}

/// Classifies `r` on `A`, lifts it to `A ⊗ B` and checks the lifted tensor directly.
pub fn check_lift(
    a: &Algebra,
    r: &RMatrix,
    b: &Algebra,
    omega: &BilinearForm,
) -> Result<LiftCheck, NovaError> {
    let base = classify_r(a, r)?;
    let f = require_quadratic(b, omega)?;
    let lie = lie_bracket_algebra(a, b)?;
    let r_hat = lift_r_hat(r, b, omega)?;
    let cybe_zero = ybe_residual(&lie, r_hat.tensor(), YbeFlavor::Cybe).is_zero();
    let sym_invariant = check_invariance(&lie, &r_hat.sym_sum(), InvarianceKind::Lie).pass;
    let iso_hat = r_maps(&r_hat).iso;
    let iso_hat_is_kron = iso_hat == r_maps(r).iso.kron(&f);
    let iso_hat_invertible = iso_hat.is_invertible();
    let coboundary = coboundary_coproduct(&lie, &r_hat, CoboundaryFlavor::Lie)?;
    Ok(LiftCheck {
        base,
        skew: r_hat.is_skew(),
        tau_symmetric: r_hat.is_symmetric(),
        lie,
        r_hat,
        cybe_zero,
        sym_invariant,
        iso_hat,
        iso_hat_is_kron,
        iso_hat_invertible,
        coboundary,
    })
}
