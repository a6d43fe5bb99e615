//! Small worked examples shipped with the library. Values are transcribed as
//! published; they are data, not verified facts. Run the checkers to test them.

use crate::algebra::{Algebra, AlgebraKind, BilinearForm, FormFlavor, MapRole, StructureMap};
use crate::bialgebra::{CoalgebraKind, Coproduct, CoproductRow};
use crate::kernel::{Matrix, Scalar};
use crate::yangbaxter::RMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: Algebra,
    pub coproduct: Option<Coproduct>,
    pub r: Option<RMatrix>,
    pub partial: Option<StructureMap>,
    pub theta: Option<StructureMap>,
    pub form: Option<BilinearForm>,
}

impl Fixture {
    fn bare(name: &'static str, description: &'static str, algebra: Algebra) -> Self {
        Fixture {
            name,
            description,
            algebra,
            coproduct: None,
            r: None,
            partial: None,
            theta: None,
            form: None,
        }
    }
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

type Terms<'a> = &'a [(&'a str, Scalar)];

fn algebra(basis: &[&str], kind: AlgebraKind, table: &[(&str, &str, Terms)]) -> Algebra {
    Algebra::from_table(basis, kind, table).expect("fixture algebra")
}

fn coproduct(a: &Algebra, kind: CoalgebraKind, table: &[CoproductRow]) -> Coproduct {
    Coproduct::from_table(a.basis(), kind, table).expect("fixture coproduct")
}

fn rmatrix(a: &Algebra, terms: &[(&str, &str, Scalar)]) -> RMatrix {
    RMatrix::from_terms(a.basis(), terms).expect("fixture r-matrix")
}

fn map(a: &Algebra, role: MapRole, table: &[(&str, Terms)]) -> StructureMap {
    let n = a.dim();
    let mut m = Matrix::zeros(n, n);
    for (of, terms) in table {
        let j = a.index_of(of).expect("fixture label");
        for (to, v) in terms.iter() {
            let i = a.index_of(to).expect("fixture label");
            *m.entry_mut(i, j) += v;
        }
    }
    StructureMap::new(m, role)
}

/// `e1 ⋄ e1 = e2`.
pub fn n2() -> Fixture {
    let a = algebra(
        &["e1", "e2"],
        AlgebraKind::LeftNovikov,
        &[("e1", "e1", &[("e2", s(1))])],
    );
    Fixture::bare("FIX-N2", "2-dimensional Novikov algebra e1⋄e1 = e2", a)
}

/// `FIX-N2` with `δ(e1) = e2 ⊗ e2`.
pub fn nb2() -> Fixture {
    let mut f = n2();
    f.name = "FIX-NB2";
    f.description = "Novikov bialgebra on FIX-N2 with δ(e1) = e2⊗e2";
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::Novikov,
        &[("e1", &[("e2", "e2", s(1))])],
    ));
    f
}

/// Published double of `FIX-NB2` on `e1, e2, f1, f2`.
pub fn dd4() -> Fixture {
    let a = algebra(
        &["e1", "e2", "f1", "f2"],
        AlgebraKind::LeftNovikov,
        &[
            ("e1", "e1", &[("e2", s(1))]),
            ("f2", "f2", &[("f1", s(1))]),
            ("e1", "f2", &[("f1", s(-2)), ("e2", s(1))]),
            ("f2", "e1", &[("e2", s(-2)), ("f1", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-DD4",
        "double of FIX-NB2 with its canonical r-matrix",
        a,
    );
    f.r = Some(rmatrix(
        &f.algebra,
        &[("e1", "f1", s(1)), ("e2", "f2", s(1))],
    ));
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::Novikov,
        &[
            ("e1", &[("e2", "e2", s(1))]),
            ("f2", &[("f1", "f1", s(-1))]),
        ],
    ));
    f
}

/// Commutative associative algebra with unit-like `e1`, derivation, admissible θ and coproduct.
pub fn ca2() -> Fixture {
    let a = algebra(
        &["e1", "e2"],
        AlgebraKind::CommAssoc,
        &[
            ("e1", "e1", &[("e1", s(1))]),
            ("e1", "e2", &[("e2", s(1))]),
            ("e2", "e1", &[("e2", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-CA2",
        "differential infinitesimal bialgebra in dimension 2",
        a,
    );
    f.partial = Some(map(
        &f.algebra,
        MapRole::Derivation,
        &[("e2", &[("e2", s(1))])],
    ));
    f.theta = Some(map(
        &f.algebra,
        MapRole::AdmissibleTheta,
        &[("e1", &[("e1", s(1))])],
    ));
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::CoassocCocomm,
        &[("e2", &[("e2", "e2", s(1))])],
    ));
    f
}

/// Nilpotent commutative algebra with `θ = -∂` and a skew solution of AYBE.
pub fn da3() -> Fixture {
    let a = algebra(
        &["e1", "e2", "e3"],
        AlgebraKind::CommAssoc,
        &[
            ("e1", "e1", &[("e2", s(1))]),
            ("e1", "e2", &[("e3", s(1))]),
            ("e2", "e1", &[("e3", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-DA3",
        "admissible differential algebra with θ = -∂ and r = e2⊗e3 - e3⊗e2",
        a,
    );
    f.partial = Some(map(
        &f.algebra,
        MapRole::Derivation,
        &[("e1", &[("e2", s(1))]), ("e2", &[("e3", s(2))])],
    ));
    f.theta = Some(map(
        &f.algebra,
        MapRole::AdmissibleTheta,
        &[("e1", &[("e2", s(-1))]), ("e2", &[("e3", s(-2))])],
    ));
    f.r = Some(rmatrix(
        &f.algebra,
        &[("e2", "e3", s(1)), ("e3", "e2", s(-1))],
    ));
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::CoassocCocomm,
        &[("e1", &[("e3", "e3", s(-2))])],
    ));
    f
}

/// Right Novikov algebra with an invariant symmetric form.
pub fn rn2() -> Fixture {
    let a = algebra(
        &["x1", "x2"],
        AlgebraKind::RightNovikov,
        &[
            ("x1", "x2", &[("x1", s(-2))]),
            ("x2", "x1", &[("x1", s(1))]),
            ("x2", "x2", &[("x2", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-RN2",
        "right Novikov algebra with invariant form ω(x1,x2) = 1",
        a,
    );
    f.form = Some(rn2_form());
    f
}

pub fn rn2_form() -> BilinearForm {
    let gram = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]).expect("2x2");
    BilinearForm::new(gram, FormFlavor::RightNovikovInvariant)
}

/// Published `-e1⋄e2 = e2 = e2⋄e1` with `r = e1⊗e2 - e2⊗e1`.
pub fn nt2() -> Fixture {
    let a = algebra(
        &["e1", "e2"],
        AlgebraKind::LeftNovikov,
        &[
            ("e1", "e2", &[("e2", s(-1))]),
            ("e2", "e1", &[("e2", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-NT2",
        "2-dimensional table -e1⋄e2 = e2 = e2⋄e1 with skew r",
        a,
    );
    f.r = Some(rmatrix(
        &f.algebra,
        &[("e1", "e2", s(1)), ("e2", "e1", s(-1))],
    ));
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::Novikov,
        &[
            ("e1", &[("e2", "e1", s(-1))]),
            ("e2", &[("e2", "e2", s(-1))]),
        ],
    ));
    f
}

/// Four-dimensional Novikov algebra with a factorizable r-matrix.
pub fn nf4() -> Fixture {
    let a = algebra(
        &["e1", "e2", "e3", "e4"],
        AlgebraKind::LeftNovikov,
        &[
            ("e1", "e1", &[("e2", s(1))]),
            ("e1", "e4", &[("e2", s(1)), ("e3", s(-2))]),
            ("e4", "e1", &[("e2", s(-2)), ("e3", s(1))]),
            ("e4", "e4", &[("e3", s(1))]),
        ],
    );
    let mut f = Fixture::bare(
        "FIX-NF4",
        "4-dimensional Novikov algebra with factorizable r = e1⊗e3 + e2⊗e4",
        a,
    );
    f.r = Some(rmatrix(
        &f.algebra,
        &[("e1", "e3", s(1)), ("e2", "e4", s(1))],
    ));
    f.coproduct = Some(coproduct(
        &f.algebra,
        CoalgebraKind::Novikov,
        &[
            ("e1", &[("e2", "e2", s(1))]),
            ("e4", &[("e3", "e3", s(-1))]),
        ],
    ));
    f
}

pub fn all() -> Vec<Fixture> {
    vec![n2(), nb2(), dd4(), ca2(), da3(), rn2(), nt2(), nf4()]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all()
        .into_iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
}
