//! Constructions that produce new structures from old ones: doubles, Rota-Baxter
//! operators from factorizable r-matrices and back, induced Novikov bialgebras,
//! and Lie bialgebras on tensor products.
//!
//! Every builder returns plain data; callers re-verify with the checkers.

mod double;
mod induced;
mod lie;
mod rota_baxter;


pub use double::{
    check_manin_triple, differential_double, novikov_double, DiffDouble, DoubleBundle,
};
pub use induced::{induce_novikov_bialgebra, Gate, InducedNovikov};
pub use lie::{
    check_lift, delta_omega, induce_lie_bialgebra, lie_bracket_algebra, lie_coproduct, lift_r_hat,
    product_labels, LieBundle, LiftCheck,
};
pub use rota_baxter::{
    check_descendent_iso, check_quadratic_rb, factorize_element, r_from_quadratic_rb,
    rb_from_factorizable, QuadraticRB,
};

use crate::algebra::{Algebra, AlgebraKind, StructureMap};
use crate::bialgebra::{check_bialgebra, BialgebraFlavor, Coproduct, DiffMaps};
use crate::error::NovaError;
use crate::report::Report;

/// A commutative associative algebra with coproduct, derivation `∂` and admissible `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffBundle {
    pub algebra: Algebra,
    pub coproduct: Coproduct,
    pub partial: StructureMap,
    pub theta: StructureMap,
}

impl DiffBundle {
    pub fn check(&self) -> Result<Report, NovaError> {
        check_bialgebra(
            &self.algebra,
            &self.coproduct,
            BialgebraFlavor::DiffInfinitesimal,
            Some(DiffMaps {
                partial: &self.partial,
                theta: &self.theta,
            }),
        )
    }
}

fn require(report: &Report, what: &str) -> Result<(), NovaError> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(NovaError::PreconditionFailed(format!("{what}: {c}"))),
    }
}

fn require_kind(a: &Algebra, kind: AlgebraKind) -> Result<(), NovaError> {
    crate::yangbaxter::require_kind(a, kind)
}
