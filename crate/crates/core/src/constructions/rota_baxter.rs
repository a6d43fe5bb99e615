use super::require_kind;
use crate::algebra::{
    check_bilinear_form, check_homomorphism, check_structure_map, descendent_algebra, Algebra,
    AlgebraKind, BilinearForm, FormFlavor, MapRole, StructureMap,
};
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar};
use crate::report::{labels_at, Check, Report, Witness};
use crate::yangbaxter::{a_star_product_from_r, classify_r, r_maps, RMatrix, Verdict};

/// A Novikov algebra with a Rota-Baxter operator `P` of weight `λ` and a form `𝔅`
/// satisfying `𝔅(P a1, a2) + 𝔅(a1, P a2) + λ 𝔅(a1, a2) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRB {
    pub algebra: Algebra,
    pub p: StructureMap,
    pub form: BilinearForm,
}

impl QuadraticRB {
    pub fn weight(&self) -> Result<&Scalar, NovaError> {
        match &self.p.role {
            MapRole::RotaBaxter { weight } => Ok(weight),
            other => Err(NovaError::KindMismatch {
                expected: "rota-baxter map".into(),
                found: other.to_string(),
            }),
        }
    }

    /// The same data with `P` replaced by `-λ id - P`.
    pub fn twin(&self) -> Result<QuadraticRB, NovaError> {
        let w = self.weight()?.clone();
        let n = self.algebra.dim();
        let m = Matrix::identity(n).scale(&-w.clone()).sub(&self.p.matrix);
        Ok(QuadraticRB {
            algebra: self.algebra.clone(),
            p: StructureMap::new(m, MapRole::RotaBaxter { weight: w }),
            form: self.form.clone(),
        })
    }
}

fn factorizable_iso_inverse(a: &Algebra, r: &RMatrix) -> Result<Matrix, NovaError> {
    if classify_r(a, r)?.verdict != Verdict::Factorizable {
        return Err(NovaError::NotFactorizable);
    }
    r_maps(r)
        .iso
        .inverse()
        .map_err(|_| NovaError::NotFactorizable)
}

/// `x = x₊ + x₋` with `x₊ = r♯(I⁻¹x)` and `x₋ = -r♮(I⁻¹x)`.
pub fn factorize_element(
    a: &Algebra,
    r: &RMatrix,
    x: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>), NovaError> {
    if x.len() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    let inv = factorizable_iso_inverse(a, r)?;
    let maps = r_maps(r);
    let xi = inv.apply(x);
    Ok((
        maps.sharp.apply(&xi),
        maps.natural.apply(&xi).iter().map(|v| -v).collect(),
    ))
}

/// `P = λ r♮ I⁻¹` and `𝔅(a1, a2) = ⟨I⁻¹ a1, a2⟩`.
pub fn rb_from_factorizable(
    a: &Algebra,
    r: &RMatrix,
    weight: &Scalar,
) -> Result<QuadraticRB, NovaError> {
    if weight.is_zero() {
        return Err(NovaError::ZeroWeight);
    }
    let inv = factorizable_iso_inverse(a, r)?;
    let p = r_maps(r).natural.mul(&inv).scale(weight);
    Ok(QuadraticRB {
        algebra: a.clone(),
        p: StructureMap::new(
            p,
            MapRole::RotaBaxter {
                weight: weight.clone(),
            },
        ),
        form: BilinearForm::new(inv.transpose(), FormFlavor::NovikovInvariant),
    })
}

/// `r♯ = (1/λ)(P + λ id) I_𝔅` with `I_𝔅` the inverse of the Gram matrix; `r` has coefficients `r♯ᵀ`.
pub fn r_from_quadratic_rb(q: &QuadraticRB) -> Result<RMatrix, NovaError> {
    let w = q.weight()?;
    if w.is_zero() {
        return Err(NovaError::ZeroWeight);
    }
    let n = q.algebra.dim();
    let gram_inv = q.form.gram.inverse().map_err(|_| NovaError::Degenerate)?;
    let shifted = q.p.matrix.add(&Matrix::identity(n).scale(w));
    let sharp = shifted.mul(&gram_inv.transpose()).scale(&w.recip()?);
    Ok(RMatrix::from_matrix(sharp.transpose()))
}

/// Rota-Baxter identity, the form conditions and the compatibility between them.
pub fn check_quadratic_rb(q: &QuadraticRB) -> Result<Report, NovaError> {
    require_kind(&q.algebra, AlgebraKind::LeftNovikov)?;
    let w = q.weight()?;
    let a = &q.algebra;
    let n = a.dim();
    let mut report = check_structure_map(a, &q.p, None)?;
    report.extend(check_bilinear_form(a, &q.form)?.to_report());
    let b = |x: &[Scalar], y: &[Scalar]| q.form.eval(x, y);
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (a.unit(i), a.unit(j));
            let v = b(&q.p.apply(&ei), &ej) + b(&ei, &q.p.apply(&ej)) + w * &b(&ei, &ej);
            if !v.is_zero() {
                witness = Some(Witness {
                    at: labels_at(a.basis(), &[i, j]),
                    discrepancy: v.to_string(),
                });
                break 'outer;
            }
        }
    }
    report.push(Check::from_witness(
        "𝔅(P a1, a2) + 𝔅(a1, P a2) + λ𝔅(a1, a2) = 0",
        witness,
    ));
    Ok(report.prefixed("quadratic rota-baxter"))
}

/// `(1/λ) I` is an isomorphism from `(A*, ⋄_r)` onto the descendent algebra `(A, ⋄_P)`.
pub fn check_descendent_iso(
    a: &Algebra,
    r: &RMatrix,
    q: &QuadraticRB,
) -> Result<Report, NovaError> {
    let w = q.weight()?;
    if w.is_zero() {
        return Err(NovaError::ZeroWeight);
    }
    let iso = r_maps(r).iso.scale(&w.recip()?);
    let src = a_star_product_from_r(a, r)?;
    let tgt = descendent_algebra(a, &q.p)?;
    let mut report = Report::single(Check::flag("invertible", iso.is_invertible()));
    report.extend(check_homomorphism(&src, &tgt, &iso)?);
    Ok(report.prefixed("(1/λ)I"))
}
