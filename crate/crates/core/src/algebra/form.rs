use std::fmt;
use std::str::FromStr;

use super::Algebra;
use crate::error::NovaError;
use crate::kernel::{Matrix, Scalar};
use crate::par;
use crate::report::{labels_at, Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormFlavor {
    /// `B(a1⋄a2, a3) + B(a2, a1⋄a3 + a3⋄a1) = 0`.
    NovikovInvariant,
    /// `ω(b1∘b2, b3) + ω(b1, b2∘b3 + b3∘b2) = 0`.
    RightNovikovInvariant,
    /// `B(a1a2, a3) = B(a1, a2a3)`.
    AssociativeInvariant,
    Plain,
}

impl FormFlavor {
    pub fn as_str(self) -> &'static str {
        match self {
            FormFlavor::NovikovInvariant => "novikov-invariant",
            FormFlavor::RightNovikovInvariant => "right-novikov-invariant",
            FormFlavor::AssociativeInvariant => "associative-invariant",
            FormFlavor::Plain => "plain",
        }
    }
}

impl fmt::Display for FormFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormFlavor {
    type Err = NovaError;
    fn from_str(s: &str) -> Result<Self, NovaError> {
        Ok(match s {
            "novikov-invariant" => FormFlavor::NovikovInvariant,
            "right-novikov-invariant" => FormFlavor::RightNovikovInvariant,
            "associative-invariant" => FormFlavor::AssociativeInvariant,
            "plain" => FormFlavor::Plain,
            other => return Err(NovaError::Parse(format!("unknown form class {other:?}"))),
        })
    }
}

/// Bilinear form given by its Gram matrix `G[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
    pub flavor: FormFlavor,
}

impl BilinearForm {
    pub fn new(gram: Matrix, flavor: FormFlavor) -> Self {
        BilinearForm { gram, flavor }
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub invariant: bool,
    pub witness: Option<Witness>,
}

impl FormReport {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::flag("form: symmetric", self.symmetric));
        r.push(Check::flag("form: nondegenerate", self.nondegenerate));
        r.push(Check {
            name: "form: invariant".into(),
            pass: self.invariant,
            witness: self.witness.clone(),
        });
        r
    }
}

pub fn check_bilinear_form(a: &Algebra, form: &BilinearForm) -> Result<FormReport, NovaError> {
    let n = a.dim();
    if form.gram.rows() != n || form.gram.cols() != n {
        return Err(NovaError::DimensionMismatch {
            expected: n,
            found: form.gram.rows(),
        });
    }
    let symmetric = form.gram == form.gram.transpose();
    let nondegenerate = form.gram.rank() == n;
    let e = |i: usize| a.unit(i);
    let b = |x: &[Scalar], y: &[Scalar]| form.eval(x, y);
    let sum = |p: &[Scalar], q: &[Scalar]| -> Vec<Scalar> {
        p.iter().zip(q).map(|(x, y)| x + y).collect()
    };
    let defect = |i: usize, j: usize, k: usize| match form.flavor {
        FormFlavor::NovikovInvariant => {
            b(a.basis_product(i, j), &e(k))
                + b(&e(j), &sum(a.basis_product(i, k), a.basis_product(k, i)))
        }
        FormFlavor::RightNovikovInvariant => {
            b(a.basis_product(i, j), &e(k))
                + b(&e(i), &sum(a.basis_product(j, k), a.basis_product(k, j)))
        }
        FormFlavor::AssociativeInvariant => {
            b(a.basis_product(i, j), &e(k)) - b(&e(i), a.basis_product(j, k))
        }
        FormFlavor::Plain => Scalar::zero(),
    };
    let witness = par::find_map_first(n * n * n, |at| {
        let (i, j, k) = (at / (n * n), (at / n) % n, at % n);
        let d = defect(i, j, k);
        (!d.is_zero()).then(|| Witness {
            at: labels_at(a.basis(), &[i, j, k]),
            discrepancy: d.to_string(),
        })
    });
    Ok(FormReport {
        symmetric,
        nondegenerate,
        invariant: witness.is_none(),
        witness,
    })
}
