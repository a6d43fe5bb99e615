use std::fmt;

use super::{
    a_star_product_from_r, check_invariance, r_maps, require_kind, ybe_residual, InvarianceKind,
    RMatrix, YbeFlavor,
};
use crate::algebra::{check_declared, check_homomorphism, Algebra, AlgebraKind, StructureMap};
use crate::error::NovaError;
use crate::kernel::{Matrix, Tensor2};
use crate::report::{fmt_tensor2, fmt_tensor3, Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    None,
    Triangular,
    QuasiTriangular,
    Factorizable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::None => "none",
            Verdict::Triangular => "triangular",
            Verdict::QuasiTriangular => "quasi-triangular",
            Verdict::Factorizable => "factorizable",
        }
    }

    fn decide(
        is_solution: bool,
        is_skew: bool,
        sym_invariant: bool,
        iso_invertible: bool,
    ) -> Verdict {
        match (is_solution, is_skew, sym_invariant, iso_invertible) {
            (false, ..) => Verdict::None,
            (true, true, ..) => Verdict::Triangular,
            (true, false, true, true) => Verdict::Factorizable,
            (true, false, true, false) => Verdict::QuasiTriangular,
            (true, false, false, _) => Verdict::None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether `r♯` and `r♮` are homomorphisms `(A*, ⋄_r) -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCheck {
    pub sharp: bool,
    pub natural: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Residual of the relevant Yang-Baxter equation vanishes.
    pub is_solution: bool,
    pub is_skew: bool,
    /// `r + τ(r)` is invariant.
    pub sym_invariant: bool,
    /// `r♯ - r♮` is invertible.
    pub iso_invertible: bool,
    pub verdict: Verdict,
    /// Novikov case only.
    pub hom_check: Option<HomCheck>,
    /// The algebra satisfies the identity of its declared kind.
    pub algebra_ok: bool,
    pub residual_witness: Option<String>,
}

impl Classification {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::flag("algebra identity", self.algebra_ok));
        r.push(Check::flag(format!("verdict {}", self.verdict), true));
        r
    }

    /// Flags as named boolean lines, for display.
    pub fn flags(&self) -> Vec<(String, bool)> {
        let mut v = vec![
            ("solution".to_string(), self.is_solution),
            ("skew".to_string(), self.is_skew),
            ("r + τ(r) invariant".to_string(), self.sym_invariant),
            ("r♯ - r♮ invertible".to_string(), self.iso_invertible),
        ];
        if let Some(h) = &self.hom_check {
            v.push(("r♯ homomorphism".to_string(), h.sharp));
            v.push(("r♮ homomorphism".to_string(), h.natural));
        }
        v
    }
}

fn classify_with(
    a: &Algebra,
    r: &RMatrix,
    flavor: YbeFlavor,
    inv: InvarianceKind,
) -> Classification {
    let residual = ybe_residual(a, r.tensor(), flavor);
    let is_solution = residual.is_zero();
    let is_skew = r.is_skew();
    let sym_invariant = check_invariance(a, &r.sym_sum(), inv).pass;
    let iso_invertible = r_maps(r).iso.is_invertible();
    Classification {
        is_solution,
        is_skew,
        sym_invariant,
        iso_invertible,
        verdict: Verdict::decide(is_solution, is_skew, sym_invariant, iso_invertible),
        hom_check: None,
        algebra_ok: check_declared(a).pass(),
        residual_witness: (!is_solution).then(|| fmt_tensor3(a.basis(), &residual)),
    }
}

/// Classifies `r` on a Novikov algebra and reports whether `r♯`, `r♮` are homomorphisms.
pub fn classify_r(a: &Algebra, r: &RMatrix) -> Result<Classification, NovaError> {
    require_kind(a, AlgebraKind::LeftNovikov)?;
    if r.dim() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    let mut c = classify_with(a, r, YbeFlavor::Nybe, InvarianceKind::Novikov);
    let dual = a_star_product_from_r(a, r)?;
    let maps = r_maps(r);
    c.hom_check = Some(HomCheck {
        sharp: check_homomorphism(&dual, a, &maps.sharp)?.pass(),
        natural: check_homomorphism(&dual, a, &maps.natural)?.pass(),
    });
    Ok(c)
}

/// Classifies `r` on a Lie algebra against the classical Yang-Baxter equation.
pub fn classify_lie(g: &Algebra, r: &RMatrix) -> Result<Classification, NovaError> {
    require_kind(g, AlgebraKind::Lie)?;
    if r.dim() != g.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: g.dim(),
            found: r.dim(),
        });
    }
    Ok(classify_with(g, r, YbeFlavor::Cybe, InvarianceKind::Lie))
}

/// `I · l*(a) = l(a) · I + r(a) · I` for every basis element, with `I = r♯ - r♮`
/// and `l*(a) = -l(a)ᵀ`. Equivalent to invariance of `r + τ(r)`.
pub fn syminva_matrix_condition(a: &Algebra, r: &RMatrix) -> bool {
    let iso = r_maps(r).iso;
    (0..a.dim()).all(|s| {
        let l = a.left_mult(s);
        let lhs = iso.mul(&l.transpose().neg());
        let rhs = l.add(&a.right_mult(s)).mul(&iso);
        lhs == rhs
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffClassification {
    pub base: Classification,
    /// `(∂⊗id - id⊗θ) r = 0` and `(id⊗∂ - θ⊗id) r = 0`.
    pub admissible: bool,
    /// `I θᵀ = ∂ I`.
    pub iso_intertwines: bool,
    pub verdict: Verdict,
}

/// Admissible AYBE: `A_r = 0` plus both side conditions, as three checks.
pub fn check_admissible_aybe(
    a: &Algebra,
    partial: &StructureMap,
    theta: &StructureMap,
    r: &RMatrix,
) -> Result<Report, NovaError> {
    require_kind(a, AlgebraKind::CommAssoc)?;
    let labels = a.basis();
    let residual = ybe_residual(a, r.tensor(), YbeFlavor::Aybe);
    let mut report = Report::new();
    report.push(Check::from_witness(
        "A_r = 0",
        (!residual.is_zero()).then(|| Witness {
            at: vec![],
            discrepancy: fmt_tensor3(labels, &residual),
        }),
    ));
    let t = r.tensor();
    let side = |x: Tensor2| {
        (!x.is_zero()).then(|| Witness {
            at: vec![],
            discrepancy: fmt_tensor2(labels, &x),
        })
    };
    report.push(Check::from_witness(
        "(∂⊗id - id⊗θ) r = 0",
        side(
            t.apply_left(&partial.matrix)
                .sub(&t.apply_right(&theta.matrix)),
        ),
    ));
    report.push(Check::from_witness(
        "(id⊗∂ - θ⊗id) r = 0",
        side(
            t.apply_right(&partial.matrix)
                .sub(&t.apply_left(&theta.matrix)),
        ),
    ));
    Ok(report.prefixed("admissible aybe"))
}

/// Classification on an admissible differential commutative algebra. Factorizable
/// additionally requires `I θᵀ = ∂ I`.
pub fn classify_differential(
    a: &Algebra,
    partial: &StructureMap,
    theta: &StructureMap,
    r: &RMatrix,
) -> Result<DiffClassification, NovaError> {
    let aybe = check_admissible_aybe(a, partial, theta, r)?;
    let base = classify_with(a, r, YbeFlavor::Aybe, InvarianceKind::Associative);
    let admissible = aybe.checks[1].pass && aybe.checks[2].pass;
    let iso: Matrix = r_maps(r).iso;
    let iso_intertwines = iso.mul(&theta.matrix.transpose()) == partial.matrix.mul(&iso);
    let verdict = match Verdict::decide(
        base.is_solution && admissible,
        base.is_skew,
        base.sym_invariant,
        base.iso_invertible,
    ) {
        Verdict::Factorizable if !iso_intertwines => Verdict::QuasiTriangular,
        v => v,
    };
    Ok(DiffClassification {
        base,
        admissible,
        iso_intertwines,
        verdict,
    })
}
