use qtorus::cohomology::{
    cohomology_dims, homology_boundary_check, invariant_functions_dim, Action, DeRhamForm,
    FormChain,
};
use qtorus::cyclic::BurgheleaTuple;
use qtorus::sample;
use qtorus::scalar::{NumericBinding, ScalarField};
use qtorus::torus::{FourierPoly, TorusPoissonData};

fn random_form(rng: &mut sample::SeededRng, d: &TorusPoissonData) -> DeRhamForm {
    let mut f = DeRhamForm::zero();
    for slot in 0..4 {
        f.parts[slot] = sample::fourier(rng, &d.field, 2, 2, d.trunc).unwrap();
    }
    f
}

#[test]
fn dims_match_for_several_cutoffs() {
    let d = TorusPoissonData::exact(2);
    for k in [1, 2, 4] {
        let r = cohomology_dims(k, &d, Action::Rotation).unwrap();
        assert_eq!(r.dims, [1, 3, 3, 1]);
        assert_eq!(r.periodic, [4, 4]);
        assert!(r.warnings.is_empty());
    }
}

#[test]
fn identity_action_fixture() {
    let d = TorusPoissonData::exact(2);
    let a = cohomology_dims(1, &d, Action::Identity).unwrap();
    let b = cohomology_dims(3, &d, Action::Identity).unwrap();
    assert_eq!(a.dims, b.dims);
    assert_eq!(a.periodic, [a.dims[0] + a.dims[2], a.dims[1] + a.dims[3]]);
}

#[test]
fn numeric_backend_agrees_away_from_resonance() {
    let b = NumericBinding {
        theta: 1.0,
        alpha: 2f64.sqrt() - 1.0,
        beta: 3f64.sqrt() - 1.0,
    };
    let d = TorusPoissonData::new(ScalarField::Numeric(b), 2);
    let r = cohomology_dims(2, &d, Action::Rotation).unwrap();
    assert_eq!(r.dims, [1, 3, 3, 1]);
    let b = NumericBinding {
        theta: 1.0,
        alpha: 0.5,
        beta: 0.25,
    };
    let d = TorusPoissonData::new(ScalarField::Numeric(b), 2);
    let r = cohomology_dims(4, &d, Action::Rotation).unwrap();
    assert!(!r.warnings.is_empty());
}

#[test]
fn invariant_functions_match_degree_zero() {
    let d = TorusPoissonData::exact(2);
    for k in [1, 2, 4] {
        assert_eq!(invariant_functions_dim(k, &d).unwrap(), 1);
    }
}

#[test]
fn exterior_derivative_and_action() {
    let d = TorusPoissonData::exact(2);
    let one = DeRhamForm::in_slot(0, FourierPoly::one(2));
    assert!(one.d(&d).unwrap().is_zero());
    assert_eq!(one.gamma_action(&d).unwrap(), one);
    let e = DeRhamForm::in_slot(0, FourierPoly::exp((1, 0)));
    let de = e.d(&d).unwrap();
    assert_eq!(de.parts[1], FourierPoly::exp((1, 0)).derivative(1, &d).unwrap());
    assert!(de.parts[2].is_zero());
    let mut rng = sample::rng(2);
    for _ in 0..10 {
        let f = random_form(&mut rng, &d);
        assert!(f.d(&d).unwrap().d(&d).unwrap().is_zero());
        assert_eq!(
            f.d(&d).unwrap().gamma_action(&d).unwrap(),
            f.gamma_action(&d).unwrap().d(&d).unwrap()
        );
    }
}

#[test]
fn boundary_of_form_chains() {
    let d = TorusPoissonData::exact(2);
    let f = DeRhamForm::in_slot(1, FourierPoly::exp((1, 1)));
    let mut c = FormChain::default();
    c.add_at(BurgheleaTuple::new(vec![1, -1]).unwrap(), &f).unwrap();
    let b = c.boundary(&d).unwrap();
    let target = BurgheleaTuple::new(vec![0]).unwrap();
    assert_eq!(b.parts.len(), 1);
    assert_eq!(
        b.parts[&target],
        f.sub(&f.translate(-1, &d).unwrap()).unwrap()
    );
    let mut rng = sample::rng(6);
    for _ in 0..10 {
        let mut c = FormChain::default();
        for _ in 0..3 {
            let t = sample::burghelea_tuple(&mut rng, 2, 2);
            c.add_at(t, &random_form(&mut rng, &d)).unwrap();
        }
        assert_eq!(homology_boundary_check(&c, &d).unwrap(), (true, true));
    }
}
