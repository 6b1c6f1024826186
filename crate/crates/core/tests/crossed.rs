use num_rational::BigRational;
use qtorus::crossed::{
    idempotent_residual, rieffel_projection, subalgebra_ctx, subalgebra_embed, CoeffAlgebra,
    Crossed, MatrixCrossed, PwSeries,
};
use qtorus::sample;
use qtorus::scalar::{ScalarField, EXACT};
use qtorus::torus::{parse_rational, Ramp, RieffelParams, TorusPoissonData};

fn params(ramp: Ramp) -> RieffelParams {
    RieffelParams::new(
        parse_rational("3/10").unwrap(),
        parse_rational("1/10").unwrap(),
        ramp,
    )
    .unwrap()
}

#[test]
fn convolution_is_associative() {
    let data = TorusPoissonData::exact(3);
    let mut rng = sample::rng(5);
    for _ in 0..6 {
        let a = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 1, 3).unwrap();
        let b = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 1, 3).unwrap();
        let c = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 1, 3).unwrap();
        let l = a.mul(&b, &data).unwrap().mul(&c, &data).unwrap();
        let r = a.mul(&b.mul(&c, &data).unwrap(), &data).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn unit_is_two_sided() {
    let data = TorusPoissonData::exact(3);
    let mut rng = sample::rng(9);
    let one = Crossed::one(&data);
    for _ in 0..5 {
        let a = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 2, 3).unwrap();
        assert_eq!(a.mul(&one, &data).unwrap(), a);
        assert_eq!(one.mul(&a, &data).unwrap(), a);
    }
}

#[test]
fn rieffel_component_identities_hold_exactly() {
    for ramp in [Ramp::Quintic, Ramp::Cubic] {
        let p = params(ramp);
        let f = p.f().unwrap();
        let g = p.g().unwrap();
        let a = p.alpha.clone();
        let g_plus = g.translate(&-a.clone());
        let g_minus = g.translate(&a);
        assert!(g.mul(&g_plus).unwrap().is_zero());
        assert!(g.mul(&g_minus).unwrap().is_zero());
        let lhs = g.mul(&f.add(&f.translate(&a))).unwrap();
        assert!(lhs.sub(&g).is_zero());
        let sum = f
            .mul(&f)
            .unwrap()
            .add(&g.mul(&g).unwrap())
            .add(&g_plus.mul(&g_plus).unwrap());
        assert!(sum.sub(&f).is_zero());
    }
}

#[test]
fn rieffel_projection_is_idempotent() {
    for ramp in [Ramp::Quintic, Ramp::Cubic] {
        let p = params(ramp);
        let ctx = subalgebra_ctx(&p, 2);
        let e = MatrixCrossed::scalar(rieffel_projection(&p).unwrap());
        let (sup, exact) = idempotent_residual(&e, &ctx, 10_000).unwrap();
        assert!(exact);
        assert!(sup < 1e-12);
        let trace = e.get(0, 0).trace(&ctx).unwrap();
        assert_eq!(
            trace.coeff(0).and_then(|c| c.as_rational()),
            Some(parse_rational("3/10").unwrap())
        );
    }
}

#[test]
fn embedding_multiplies_like_the_crossed_product() {
    let p = params(Ramp::Cubic);
    let ctx = subalgebra_ctx(&p, 2);
    let f = p.f().unwrap();
    let a = subalgebra_embed(f.clone(), 1);
    let b = subalgebra_embed(f.clone(), -1);
    let ab = a.mul(&b, &ctx).unwrap();
    let expect = f.mul(&f.translate(&p.alpha)).unwrap();
    assert_eq!(ab.support(), vec![0]);
    assert_eq!(ab.component(0), PwSeries::constant(expect, EXACT));
    assert!(!CoeffAlgebra::is_zero(&ab.component(0)));
    let half = BigRational::new(1.into(), 2.into());
    assert!(a.scale(&half).unwrap().sub(&a).unwrap().add(&a.scale(&half).unwrap()).unwrap().is_zero());
}
