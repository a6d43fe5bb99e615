use super::{combine, Algebra};
use crate::kernel::{Matrix, Scalar};
use crate::par;
use crate::report::{labels_at, Check, Report, Witness};

/// Pair of linear maps `l, r : A -> gl(V)`, stored by their values on the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub l: Vec<Matrix>,
    pub r: Vec<Matrix>,
    pub space_dim: usize,
}

impl Representation {
    pub fn new(l: Vec<Matrix>, r: Vec<Matrix>) -> Self {
        let space_dim = l.first().or(r.first()).map_or(0, Matrix::rows);
        Representation { l, r, space_dim }
    }

    pub fn l_at(&self, x: &[Scalar]) -> Matrix {
        combine(self.space_dim, x, |i| self.l[i].clone())
    }

    pub fn r_at(&self, x: &[Scalar]) -> Matrix {
        combine(self.space_dim, x, |i| self.r[i].clone())
    }

    /// `(l* + r*, -r*)` on the dual space, with `ψ*(a) = -ψ(a)ᵀ`.
    pub fn dual(&self) -> Representation {
        let l = self
            .l
            .iter()
            .zip(&self.r)
            .map(|(l, r)| l.add(r).transpose().neg())
            .collect();
        let r = self.r.iter().map(Matrix::transpose).collect();
        Representation {
            l,
            r,
            space_dim: self.space_dim,
        }
    }
}

/// Left and right multiplications.
pub fn adjoint_rep(a: &Algebra) -> Representation {
    let n = a.dim();
    Representation {
        l: (0..n).map(|i| a.left_mult(i)).collect(),
        r: (0..n).map(|i| a.right_mult(i)).collect(),
        space_dim: n,
    }
}

/// Dual of the adjoint representation on `A*`.
pub fn coadjoint_rep(a: &Algebra) -> Representation {
    adjoint_rep(a).dual()
}

fn commutator(x: &Matrix, y: &Matrix) -> Matrix {
    x.mul(y).sub(&y.mul(x))
}

fn pair_check(name: &str, a: &Algebra, f: impl Fn(usize, usize) -> Matrix + Sync + Send) -> Check {
    let n = a.dim();
    let labels = a.basis();
    let witness = par::find_map_first(n * n, |at| {
        let (i, j) = (at / n, at % n);
        let d = f(i, j);
        (!d.is_zero()).then(|| Witness {
            at: labels_at(labels, &[i, j]),
            discrepancy: fmt_matrix(&d),
        })
    });
    Check::from_witness(name, witness)
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    format!("difference matrix [{}]", rows.join(", "))
}

/// The four defining conditions of a representation of a left Novikov algebra,
/// each checked over all basis pairs.
pub fn check_representation(a: &Algebra, rep: &Representation) -> Report {
    let prod = |i: usize, j: usize| a.basis_product(i, j).to_vec();
    let mut report = Report::new();
    report.push(pair_check("l([a1,a2]) = [l(a1),l(a2)]", a, |i, j| {
        let br: Vec<Scalar> = prod(i, j)
            .iter()
            .zip(prod(j, i))
            .map(|(x, y)| x - &y)
            .collect();
        rep.l_at(&br).sub(&commutator(&rep.l[i], &rep.l[j]))
    }));
    report.push(pair_check("l(a1 a2) = r(a2) l(a1)", a, |i, j| {
        rep.l_at(&prod(i, j)).sub(&rep.r[j].mul(&rep.l[i]))
    }));
    report.push(pair_check(
        "l(a1) r(a2) - r(a2) l(a1) = r(a1 a2) - r(a2) r(a1)",
        a,
        |i, j| {
            let lhs = commutator(&rep.l[i], &rep.r[j]);
            let rhs = rep.r_at(&prod(i, j)).sub(&rep.r[j].mul(&rep.r[i]));
            lhs.sub(&rhs)
        },
    ));
    report.push(pair_check("r(a1) r(a2) = r(a2) r(a1)", a, |i, j| {
        commutator(&rep.r[i], &rep.r[j])
    }));
    report.prefixed("representation")
}
