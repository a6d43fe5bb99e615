use super::{ybe_residual, RMatrix, YbeFlavor};
use crate::algebra::Algebra;
use crate::error::NovaError;
use crate::kernel::{Poly, Scalar, Tensor2, Tensor3, MAX_VARS};
use crate::par;

pub const MAX_SUPPORT: usize = 9;
pub const MAX_GRID: u128 = 10_000_000;

/// All `r` supported on `support` with coefficients from `coeffs` that solve the
/// chosen equation. Assignments are enumerated with the first support entry most
/// significant and coefficients in the order given; hits keep that order.
pub fn grid_search_r(
    a: &Algebra,
    support: &[(usize, usize)],
    coeffs: &[Scalar],
    flavor: YbeFlavor,
) -> Result<Vec<RMatrix>, NovaError> {
    if support.len() > MAX_SUPPORT {
        return Err(NovaError::SupportTooLarge {
            found: support.len(),
            limit: MAX_SUPPORT,
        });
    }
    let n = a.dim();
    for (i, &(p, q)) in support.iter().enumerate() {
        if p >= n || q >= n {
            return Err(NovaError::Invalid(format!(
                "support entry ({p}, {q}) outside dimension {n}"
            )));
        }
        if support[..i].contains(&(p, q)) {
            return Err(NovaError::Invalid(format!(
                "support entry ({p}, {q}) repeated"
            )));
        }
    }
    let base = coeffs.len() as u128;
    let count = base.checked_pow(support.len() as u32).unwrap_or(u128::MAX);
    if count > MAX_GRID {
        return Err(NovaError::BudgetExceeded {
            count,
            limit: MAX_GRID,
        });
    }
    let base = coeffs.len();
    Ok(par::filter_map(count as usize, |mut at| {
        let mut t = Tensor2::zeros(n);
        for &(p, q) in support.iter().rev() {
            t.set(p, q, coeffs[at % base].clone());
            at /= base;
        }
        ybe_residual(a, &t, flavor).is_zero().then_some(RMatrix(t))
    }))
}

/// Residual for a 2-tensor with polynomial coefficients, at most eight parameters.
pub fn parametric_residual(
    a: &Algebra,
    r: &Tensor2<Poly>,
    flavor: YbeFlavor,
) -> Result<Tensor3<Poly>, NovaError> {
    let mut vars: Vec<&String> = r.nonzero().flat_map(|(_, _, p)| p.vars()).collect();
    vars.sort();
    vars.dedup();
    if vars.len() > MAX_VARS {
        return Err(NovaError::TooManyParameters {
            found: vars.len(),
            limit: MAX_VARS,
        });
    }
    if r.dim() != a.dim() {
        return Err(NovaError::DimensionMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    Ok(ybe_residual(a, r, flavor))
}
