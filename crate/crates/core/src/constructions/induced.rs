use std::fmt;

use super::{require, require_kind, DiffBundle};
use crate::algebra::{check_structure_map, Algebra, AlgebraKind, MapRole, StructureMap};
use crate::bialgebra::{check_bialgebra, BialgebraFlavor, CoalgebraKind, Coproduct};
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar, Tensor2, Tensor3};
use crate::report::{Check, Report};

/// The sufficient condition under which the induced structure is known to be a
/// Novikov bialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// `q = -1/2`.
    HalfWeight,
    /// `θ` is a derivation.
    ThetaDerivation,
    /// `(id⊗θ)Δ = -(id⊗∂)Δ` and `a1 θ(a2) = -a1 ∂(a2)`.
    SideConditions,
}

impl Gate {
    pub fn as_str(self) -> &'static str {
        match self {
            Gate::HalfWeight => "q = -1/2",
            Gate::ThetaDerivation => "θ is a derivation",
            Gate::SideConditions => "(id⊗θ)Δ = -(id⊗∂)Δ and a1θ(a2) = -a1∂(a2)",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedNovikov {
    pub algebra: Algebra,
    pub coproduct: Coproduct,
    /// `None` when no gate fired and only the full check below vouches for the result.
    pub gate: Option<Gate>,
    /// Full Novikov bialgebra check of the result.
    pub report: Report,
}

fn side_conditions(b: &DiffBundle) -> bool {
    let (pa, th) = (&b.partial.matrix, &b.theta.matrix);
    let sum = th.add(pa);
    let n = b.algebra.dim();
    let co = (0..n).all(|s| b.coproduct.of(s).apply_right(&sum).is_zero());
    // a1 (θ + ∂)(a2) = 0 for all a1, a2
    let pr = (0..n).all(|i| b.algebra.left_mult(i).mul(&sum).is_zero());
    co && pr
}

/// `a1 ⋄_q a2 = a1 (∂ + qθ)(a2)` and `δ_q = (id ⊗ (θ + q∂)) Δ`.
pub fn induce_novikov_bialgebra(b: &DiffBundle, q: &Scalar) -> Result<InducedNovikov, NovaError> {
    require_kind(&b.algebra, AlgebraKind::CommAssoc)?;
    require(&b.check()?, "not a differential infinitesimal bialgebra")?;
    let a = &b.algebra;
    let n = a.dim();
    let (pa, th) = (&b.partial.matrix, &b.theta.matrix);
    let m = pa.add(&th.scale(q));
    let mut algebra = Algebra::from_structure(
        a.basis().to_vec(),
        Tensor3::zeros(n),
        AlgebraKind::LeftNovikov,
    )?;
    for i in 0..n {
        let l = a.left_mult(i);
        for j in 0..n {
            algebra.set_product(i, j, &l.apply(&m.column(j)));
        }
    }
    let co_map: Matrix = th.add(&pa.scale(q));
    let images: Vec<Tensor2<Scalar>> = (0..n)
        .map(|s| b.coproduct.of(s).apply_right(&co_map))
        .collect();
    let coproduct = Coproduct::from_images(&images, CoalgebraKind::Novikov);

    let half = Scalar::ratio(-1, 2);
    let theta_as_derivation = StructureMap::new(th.clone(), MapRole::Derivation);
    let gate = if *q == half {
        Some(Gate::HalfWeight)
    } else if check_structure_map(a, &theta_as_derivation, None)?.pass() {
        Some(Gate::ThetaDerivation)
    } else if side_conditions(b) {
        Some(Gate::SideConditions)
    } else {
        None
    };
    let mut report = check_bialgebra(&algebra, &coproduct, BialgebraFlavor::Novikov, None)?;
    report.push(Check::flag(
        match gate {
            Some(g) => format!("guaranteed by {g}"),
            None => "no gate; verified a posteriori".to_string(),
        },
        true,
    ));
    Ok(InducedNovikov {
        algebra,
        coproduct,
        gate,
        report,
    })
}
