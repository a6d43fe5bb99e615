use std::fmt;

use super::{scan, scan_with, Algebra};
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar, Tensor3};
use crate::report::{vec_sub, Check, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapRole {
    /// `∂(ab) = ∂(a)b + a∂(b)`.
    Derivation,
    /// `θ(ab) = θ(a)b - a∂(b)` for a companion derivation `∂`.
    AdmissibleTheta,
    /// `P(a)P(b) = P(P(a)b + aP(b) + λab)`.
    RotaBaxter {
        weight: Scalar,
    },
    Homomorphism,
    Generic,
}

impl MapRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            MapRole::Derivation => "derivation",
            MapRole::AdmissibleTheta => "admissible-theta",
            MapRole::RotaBaxter { .. } => "rota-baxter",
            MapRole::Homomorphism => "homomorphism",
            MapRole::Generic => "generic",
        }
    }
}

impl fmt::Display for MapRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Linear map on an algebra, as a matrix acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMap {
    pub matrix: Matrix,
    pub role: MapRole,
}

impl StructureMap {
    pub fn new(matrix: Matrix, role: MapRole) -> Self {
        StructureMap { matrix, role }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x)
    }

    fn image(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn derivation_check(a: &Algebra, d: &StructureMap, name: &str) -> Check {
    scan(name, a.basis(), 2, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = d.apply(a.basis_product(i, j));
        let rhs = add(
            &a.product(&d.image(i), &a.unit(j)),
            &a.product(&a.unit(i), &d.image(j)),
        );
        vec_sub(&lhs, &rhs)
    })
}

/// Checks the defining identity of `m.role` over all basis pairs.
/// An admissible θ needs its derivation passed as `companion`.
pub fn check_structure_map(
    a: &Algebra,
    m: &StructureMap,
    companion: Option<&StructureMap>,
) -> Result<Report, NovaError> {
    if m.matrix.rows() != a.dim() || m.matrix.cols() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: m.matrix.rows(),
        });
    }
    let check = match &m.role {
        MapRole::Derivation => derivation_check(a, m, "derivation"),
        MapRole::AdmissibleTheta => {
            let d = companion
                .ok_or_else(|| NovaError::MissingCompanion("admissible θ needs ∂".into()))?;
            scan("admissible", a.basis(), 2, |t| {
                let (i, j) = (t[0], t[1]);
                let lhs = m.apply(a.basis_product(i, j));
                let rhs = vec_sub(
                    &a.product(&m.image(i), &a.unit(j)),
                    &a.product(&a.unit(i), &d.image(j)),
                );
                vec_sub(&lhs, &rhs)
            })
        }
        MapRole::RotaBaxter { weight } => scan("rota-baxter", a.basis(), 2, |t| {
            let (i, j) = (t[0], t[1]);
            let (pi, pj) = (m.image(i), m.image(j));
            let lhs = a.product(&pi, &pj);
            let inner: Vec<Scalar> = add(
                &add(&a.product(&pi, &a.unit(j)), &a.product(&a.unit(i), &pj)),
                &scaled(a.basis_product(i, j), weight),
            );
            vec_sub(&lhs, &m.apply(&inner))
        }),
        MapRole::Homomorphism => return check_homomorphism(a, a, &m.matrix),
        MapRole::Generic => Check::flag("generic", true),
    };
    Ok(Report::single(check))
}

fn scaled(v: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * s).collect()
}

/// `φ(a1 a2) = φ(a1) φ(a2)` for `φ: src -> tgt`.
pub fn check_homomorphism(src: &Algebra, tgt: &Algebra, phi: &Matrix) -> Result<Report, NovaError> {
    if phi.cols() != src.dim() || phi.rows() != tgt.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: src.dim(),
            found: phi.cols(),
        });
    }
    Ok(Report::single(scan_with(
        "homomorphism",
        src.basis(),
        tgt.basis(),
        2,
        |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = phi.apply(src.basis_product(i, j));
            vec_sub(&lhs, &tgt.product(&phi.column(i), &phi.column(j)))
        },
    )))
}

/// `a ⋄_P b = P(a)b + aP(b) + λab`.
pub fn descendent_algebra(a: &Algebra, p: &StructureMap) -> Result<Algebra, NovaError> {
    let MapRole::RotaBaxter { weight } = &p.role else {
        return Err(NovaError::KindMismatch {
            expected: "rota-baxter map".into(),
            found: p.role.to_string(),
        });
    };
    if let Some(c) = check_structure_map(a, p, None)?.first_failure() {
        return Err(NovaError::PreconditionFailed(c.to_string()));
    }
    let n = a.dim();
    let c = Tensor3::from_fn(n, |_, _, _| Scalar::zero());
    let mut out = Algebra::from_structure(a.basis().to_vec(), c, a.kind())?;
    for i in 0..n {
        for j in 0..n {
            let v = add(
                &add(
                    &a.product(&p.image(i), &a.unit(j)),
                    &a.product(&a.unit(i), &p.image(j)),
                ),
                &scaled(a.basis_product(i, j), weight),
            );
            out.set_product(i, j, &v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ca2_maps() {
        let f = fixtures::ca2();
        let d = f.partial.unwrap();
        let t = f.theta.unwrap();
        assert!(check_structure_map(&f.algebra, &d, None).unwrap().pass());
        assert!(check_structure_map(&f.algebra, &t, Some(&d))
            .unwrap()
            .pass());
        assert_eq!(
            check_structure_map(&f.algebra, &t, None),
            Err(NovaError::MissingCompanion("admissible θ needs ∂".into()))
        );
    }

    #[test]
    fn da3_theta_is_minus_partial() {
        let f = fixtures::da3();
        let d = f.partial.unwrap();
        assert!(check_structure_map(&f.algebra, &d, None).unwrap().pass());
        assert!(check_structure_map(&f.algebra, &f.theta.unwrap(), Some(&d))
            .unwrap()
            .pass());
    }

    #[test]
    fn identity_map_is_not_a_derivation() {
        let a = fixtures::n2().algebra;
        let m = StructureMap::new(Matrix::identity(2), MapRole::Derivation);
        let r = check_structure_map(&a, &m, None).unwrap();
        assert_eq!(
            r.first_failure().unwrap().witness.as_ref().unwrap().at,
            vec!["e1", "e1"]
        );
    }

    #[test]
    fn rota_baxter_sample() {
        // -λ id is a Rota-Baxter operator of weight λ on any algebra.
        let a = fixtures::nf4().algebra;
        let lambda = Scalar::from_int(3);
        let p = StructureMap::new(
            Matrix::identity(4).scale(&-&lambda),
            MapRole::RotaBaxter { weight: lambda },
        );
        assert!(check_structure_map(&a, &p, None).unwrap().pass());
        let desc = descendent_algebra(&a, &p).unwrap();
        // a ⋄_P b = -3ab - 3ab + 3ab = -3ab
        assert_eq!(
            desc.basis_product(0, 0),
            &[
                Scalar::zero(),
                Scalar::from_int(-3),
                Scalar::zero(),
                Scalar::zero()
            ]
        );
        let id = StructureMap::new(
            Matrix::identity(4),
            MapRole::RotaBaxter {
                weight: Scalar::one(),
            },
        );
        assert!(matches!(
            descendent_algebra(&a, &id),
            Err(NovaError::PreconditionFailed(_))
        ));
    }
}
