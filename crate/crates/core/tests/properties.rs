//! Randomized structural properties of the crossed product and the cocycles.

use proptest::prelude::*;
use qtorus::crossed::{subalgebra_ctx, subalgebra_embed, Crossed, MatrixCrossed};
use qtorus::crossed::rieffel_projection;
use qtorus::cyclic::Chain;
use qtorus::pairing::{pair, phi_on_chain, phi_xi0, phi_xi2, phi_xi3, Cocycle};
use qtorus::sample;
use qtorus::scalar::{ScalarField, EXACT};
use qtorus::torus::{parse_rational, FourierPoly, Ramp, RieffelParams, TorusPoissonData};

fn params(ramp: Ramp) -> RieffelParams {
    RieffelParams::new(
        parse_rational("3/10").unwrap(),
        parse_rational("1/10").unwrap(),
        ramp,
    )
    .unwrap()
}

#[test]
fn xi3_is_a_hochschild_cocycle() {
    let data = TorusPoissonData::exact(6);
    let mut rng = sample::rng(11);
    for _ in 0..20 {
        let c = sample::chain_fourier(&mut rng, 3, 2, &data, false).unwrap();
        let bc = c.hochschild_b(&data).unwrap();
        for cocycle in [Cocycle::Xi2, Cocycle::Xi3] {
            let v = phi_on_chain(cocycle, &bc, &data).unwrap();
            assert!(v.series.is_zero(), "{:?} on b(c) = {}", cocycle, v.text());
        }
    }
}

#[test]
fn trilinear_cocycles_are_cyclic() {
    let data = TorusPoissonData::exact(4);
    let mut rng = sample::rng(12);
    for _ in 0..8 {
        let a: Vec<_> = (0..3)
            .map(|_| sample::crossed_fourier(&mut rng, &ScalarField::Exact, 1, 4).unwrap())
            .collect();
        let l = phi_xi3(&a[0], &a[1], &a[2], &data).unwrap();
        let r = phi_xi3(&a[2], &a[0], &a[1], &data).unwrap();
        assert_eq!(l.series, r.series);
        let l = phi_xi2(&a[0], &a[1], &a[2], &data).unwrap();
        let r = phi_xi2(&a[2], &a[0], &a[1], &data).unwrap();
        assert_eq!(l.series, r.series);
    }
}

#[test]
fn xi2_vanishes_on_first_axis_arguments() {
    let data = TorusPoissonData::exact(4);
    let mut rng = sample::rng(13);
    for _ in 0..8 {
        let a: Vec<Crossed<FourierPoly>> = (0..3)
            .map(|_| {
                let terms = (-1..=1)
                    .map(|n| {
                        let f = sample::fourier_first_axis(&mut rng, &ScalarField::Exact, 2, 2, 4)
                            .unwrap();
                        (n, f)
                    })
                    .collect::<Vec<_>>();
                Crossed::from_terms(terms).unwrap()
            })
            .collect();
        assert!(phi_xi2(&a[0], &a[1], &a[2], &data).unwrap().series.is_zero());
    }
}

#[test]
fn pairings_do_not_depend_on_the_ramp() {
    let values: Vec<Vec<String>> = [Ramp::Quintic, Ramp::Cubic]
        .into_iter()
        .map(|ramp| {
            let p = params(ramp);
            let ctx = subalgebra_ctx(&p, 4);
            let e = MatrixCrossed::scalar(rieffel_projection(&p).unwrap());
            [Cocycle::Xi0, Cocycle::Xi2, Cocycle::Xi3]
                .into_iter()
                .map(|c| pair(c, &e, &ctx).unwrap().text())
                .collect()
        })
        .collect();
    assert_eq!(values[0], values[1]);
    assert_eq!(values[0], vec!["-3/10 * h^-1 * theta^-1", "0", "h * theta^-1"]);
}

#[test]
fn embedding_is_multiplicative_on_the_zero_component() {
    let p = params(Ramp::Quintic);
    let ctx = subalgebra_ctx(&p, 2);
    let (f, g) = (p.f().unwrap(), p.g().unwrap());
    let lhs = subalgebra_embed(f.clone(), 0)
        .mul(&subalgebra_embed(g.clone(), 0), &ctx)
        .unwrap();
    let rhs = subalgebra_embed(f.mul(&g).unwrap(), 0);
    assert_eq!(lhs, rhs);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn conjugation_by_w_is_translation(seed in any::<u64>()) {
        let data = TorusPoissonData::exact(3);
        let mut rng = sample::rng(seed);
        let f = sample::fourier(&mut rng, &ScalarField::Exact, 2, 3, 3).unwrap();
        let w = Crossed::monomial(1, FourierPoly::one(EXACT));
        let w_inv = Crossed::monomial(-1, FourierPoly::one(EXACT));
        let conj = w.mul(&Crossed::monomial(0, f.clone()), &data).unwrap().mul(&w_inv, &data).unwrap();
        prop_assert_eq!(conj, Crossed::monomial(0, f.translate(1, &data).unwrap()));
    }

    #[test]
    fn xi0_vanishes_on_commutators(seed in any::<u64>()) {
        let data = TorusPoissonData::exact(3);
        let mut rng = sample::rng(seed);
        let a = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 2, 3).unwrap();
        let b = sample::crossed_fourier(&mut rng, &ScalarField::Exact, 2, 3).unwrap();
        let comm = a.mul(&b, &data).unwrap().sub(&b.mul(&a, &data).unwrap()).unwrap();
        prop_assert!(phi_xi0(&comm, &data).unwrap().series.is_zero());
    }

    #[test]
    fn hochschild_b_squares_to_zero(seed in any::<u64>()) {
        let data = TorusPoissonData::exact(2);
        let mut rng = sample::rng(seed);
        let c: Chain<FourierPoly> = sample::chain_fourier(&mut rng, 3, 2, &data, true).unwrap();
        let bb = c.hochschild_b(&data).unwrap().hochschild_b(&data).unwrap();
        prop_assert!(bb.is_zero_probed(seed, 2, &data).unwrap());
    }
}
