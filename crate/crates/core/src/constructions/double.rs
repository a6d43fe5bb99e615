use super::{require, require_kind, DiffBundle};
use crate::algebra::{
    check_bilinear_form, Algebra, AlgebraKind, BilinearForm, FormFlavor, MapRole, StructureMap,
};
use crate::bialgebra::{check_bialgebra, dual_labels, BialgebraFlavor, Coproduct};
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar, Tensor2, Tensor3};
use crate::report::{Check, Report};
use crate::yangbaxter::RMatrix;

/// `A ⊕ A*` with its product, the canonical `r̃ = Σ e_i ⊗ f_i` and the pairing form.
/// Indices `0..half` are `A`, `half..2*half` are `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleBundle {
    pub algebra: Algebra,
    pub r: RMatrix,
    pub half: usize,
    pub form: BilinearForm,
}

fn double_labels(a: &Algebra) -> Vec<String> {
    let mut labels = a.basis().to_vec();
    labels.extend(dual_labels(a.basis()));
    labels
}

fn canonical_r(n: usize) -> RMatrix {
    RMatrix(Tensor2::from_fn(2 * n, |i, j| {
        if j == i + n {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }))
}

fn pairing_form(n: usize, flavor: FormFlavor) -> BilinearForm {
    let gram = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i + n == j || j + n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    BilinearForm::new(gram, flavor)
}

/// Novikov double of a Novikov bialgebra:
///
/// `(a1, ξ1) * (a2, ξ2) = (a1⋄a2 + (l*+r*)(ξ1)a2 - r*(ξ2)a1, ξ1⋄ξ2 + (l*+r*)(a1)ξ2 - r*(a2)ξ1)`
///
/// with coadjoint actions `ψ* = -ψᵀ` in both directions.
pub fn novikov_double(a: &Algebra, delta: &Coproduct) -> Result<DoubleBundle, NovaError> {
    require_kind(a, AlgebraKind::LeftNovikov)?;
    require(
        &check_bialgebra(a, delta, BialgebraFlavor::Novikov, None)?,
        "not a Novikov bialgebra",
    )?;
    let n = a.dim();
    let c = a.structure();
    let d = delta.structure();
    let zero = Scalar::zero;
    // c[i][j][k]: coefficient of e_k in e_i ⋄ e_j; d[i][j][k]: of e_j ⊗ e_k in δ(e_i).
    let t = Tensor3::from_fn(2 * n, |x, y, z| {
        let (xa, ya, za) = (x < n, y < n, z < n);
        let (i, j, k) = (x % n, y % n, z % n);
        match (xa, ya, za) {
            (true, true, true) => c.get(i, j, k).clone(),
            (true, true, false) => zero(),
            // e_i * f_j = Σ_k d[i][k][j] e_k - Σ_k (c[i][k][j] + c[k][i][j]) f_k
            (true, false, true) => d.get(i, k, j).clone(),
            (true, false, false) => -(c.get(i, k, j) + c.get(k, i, j)),
            // f_i * e_j = -Σ_k (d[j][i][k] + d[j][k][i]) e_k + Σ_k c[k][j][i] f_k
            (false, true, true) => -(d.get(j, i, k) + d.get(j, k, i)),
            (false, true, false) => c.get(k, j, i).clone(),
            (false, false, true) => zero(),
            (false, false, false) => d.get(k, i, j).clone(),
        }
    });
    let algebra = Algebra::from_structure(double_labels(a), t, AlgebraKind::LeftNovikov)?;
    Ok(DoubleBundle {
        algebra,
        r: canonical_r(n),
        half: n,
        form: pairing_form(n, FormFlavor::NovikovInvariant),
    })
}

fn closure_check(a: &Algebra, name: &str, range: std::ops::Range<usize>) -> Check {
    let labels = a.basis();
    for i in range.clone() {
        for j in range.clone() {
            let v = a.basis_product(i, j);
            if let Some(k) = (0..a.dim()).find(|k| !range.contains(k) && !v[*k].is_zero()) {
                return Check::from_witness(
                    name,
                    Some(crate::report::Witness {
                        at: vec![labels[i].clone(), labels[j].clone()],
                        discrepancy: format!("{} on {}", v[k], labels[k]),
                    }),
                );
            }
        }
    }
    Check::from_witness(name, None)
}

/// Both halves are subalgebras and the pairing form is symmetric, nondegenerate and invariant.
pub fn check_manin_triple(d: &DoubleBundle) -> Result<Report, NovaError> {
    let n = d.half;
    let mut report = Report::new();
    report.push(closure_check(&d.algebra, "A is a subalgebra", 0..n));
    report.push(closure_check(&d.algebra, "A* is a subalgebra", n..2 * n));
    report.extend(check_bilinear_form(&d.algebra, &d.form)?.to_report());
    Ok(report.prefixed("manin triple"))
}

/// Differential double with its structure maps `∂ ⊕ θᵀ` and `θ ⊕ ∂ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffDouble {
    pub bundle: DiffBundle,
    pub r: RMatrix,
    pub half: usize,
}

/// `(a1, ξ1) ⊙ (a2, ξ2) = (a1a2 + u*(ξ1)a2 + u*(ξ2)a1, ξ1∘ξ2 + u*(a1)ξ2 + u*(a2)ξ1)`
/// where every dual action is a plain transpose. The coproduct is `Δ_r̃`.
pub fn differential_double(b: &DiffBundle) -> Result<DiffDouble, NovaError> {
    require_kind(&b.algebra, AlgebraKind::CommAssoc)?;
    require(&b.check()?, "not a differential infinitesimal bialgebra")?;
    let a = &b.algebra;
    let n = a.dim();
    let c = a.structure();
    let d = b.coproduct.structure();
    let t = Tensor3::from_fn(2 * n, |x, y, z| {
        let (i, j, k) = (x % n, y % n, z % n);
        match (x < n, y < n, z < n) {
            (true, true, true) => c.get(i, j, k).clone(),
            // e_i ⊙ f_j = Σ_k d[i][j][k] e_k + Σ_k c[i][k][j] f_k
            (true, false, true) => d.get(i, j, k).clone(),
            (true, false, false) => c.get(i, k, j).clone(),
            (false, true, true) => d.get(j, i, k).clone(),
            (false, true, false) => c.get(j, k, i).clone(),
            (false, false, false) => d.get(k, i, j).clone(),
            _ => Scalar::zero(),
        }
    });
    let algebra = Algebra::from_structure(double_labels(a), t, AlgebraKind::CommAssoc)?;
    let (pa, th) = (&b.partial.matrix, &b.theta.matrix);
    let partial = StructureMap::new(pa.direct_sum(&th.transpose()), MapRole::Derivation);
    let theta = StructureMap::new(th.direct_sum(&pa.transpose()), MapRole::AdmissibleTheta);
    let r = canonical_r(n);
    let coproduct = crate::yangbaxter::coboundary_coproduct(
        &algebra,
        &r,
        crate::yangbaxter::CoboundaryFlavor::Infinitesimal,
    )?;
    Ok(DiffDouble {
        bundle: DiffBundle {
            algebra,
            coproduct,
            partial,
            theta,
        },
        r,
        half: n,
    })
}
