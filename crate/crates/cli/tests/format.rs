use proptest::prelude::*;

use nova_cli::{DefinitionFile, Inputs};
use nova_core::algebra::{Algebra, AlgebraKind, BilinearForm, FormFlavor, MapRole, StructureMap};
use nova_core::bialgebra::{CoalgebraKind, Coproduct};
use nova_core::kernel::{Matrix, Scalar, Tensor2, Tensor3};
use nova_core::yangbaxter::RMatrix;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("b{i}")).collect()
}

fn reparse(f: &DefinitionFile) -> DefinitionFile {
    DefinitionFile::parse(&f.to_json(), "roundtrip").expect("serialized files parse")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_round_trip(n in 1usize..=3, vals in prop::collection::vec(scalar(), 27)) {
        let a = Algebra::from_structure(labels(n), Tensor3::from_fn(n, |i, j, k| vals[(i * 3 + j) * 3 + k].clone()), AlgebraKind::LeftNovikov).unwrap();
        let f = DefinitionFile::from_algebra("a", &a);
        prop_assert_eq!(&reparse(&f), &f);
        prop_assert_eq!(reparse(&f).to_algebra().unwrap(), a);
    }

    #[test]
    fn coproduct_round_trip(n in 1usize..=3, vals in prop::collection::vec(scalar(), 27)) {
        let d = Coproduct::from_structure(Tensor3::from_fn(n, |i, j, k| vals[(i * 3 + j) * 3 + k].clone()), CoalgebraKind::Novikov);
        let f = DefinitionFile::from_coproduct("d", &labels(n), &d);
        prop_assert_eq!(reparse(&f).to_coproduct().unwrap(), d);
    }

    #[test]
    fn rmatrix_map_form_round_trip(n in 1usize..=4, vals in prop::collection::vec(scalar(), 16), w in scalar()) {
        let l = labels(n);
        let m = Matrix::from_fn(n, n, |i, j| vals[i * 4 + j].clone());
        let r = RMatrix(Tensor2::from_matrix(m.clone()));
        let inputs = Inputs::from_files(&[reparse(&DefinitionFile::from_rmatrix("r", &l, &r))]).unwrap();
        prop_assert_eq!(inputs.r.unwrap(), r);
        let p = StructureMap::new(m.clone(), MapRole::RotaBaxter { weight: w });
        prop_assert_eq!(reparse(&DefinitionFile::from_map("p", &l, &p)).to_map().unwrap(), p);
        let b = BilinearForm::new(m, FormFlavor::NovikovInvariant);
        prop_assert_eq!(reparse(&DefinitionFile::from_form("b", &l, &b)).to_form().unwrap(), b);
    }
}

#[test]
fn fixtures_round_trip_as_bundles() {
    for fx in nova_core::fixtures::all() {
        let f = nova_cli::fixture_file(&fx);
        assert_eq!(reparse(&f), f);
        let inputs = Inputs::from_files(&[f]).unwrap();
        assert_eq!(inputs.algebra.as_ref(), Some(&fx.algebra));
        assert_eq!(inputs.coproduct, fx.coproduct);
        assert_eq!(inputs.r, fx.r);
        assert_eq!(inputs.partial, fx.partial);
        assert_eq!(inputs.theta, fx.theta);
        assert_eq!(inputs.form, fx.form);
    }
}
