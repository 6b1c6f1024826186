use num_rational::BigRational;
use qtorus::crossed::{rieffel_projection, subalgebra_ctx, subalgebra_embed, Crossed, MatrixCrossed};
use qtorus::cyclic::{
    chern, chern_coefficient, conjugate_by_unipotent, restrict_to_loops, BurgheleaTuple, Chain,
};
use qtorus::sample;
use qtorus::scalar::{FormalLaurent, Scalar};
use qtorus::torus::{parse_rational, FourierPoly, Ramp, RieffelParams, TorusPoissonData};

fn data() -> TorusPoissonData {
    TorusPoissonData::exact(3)
}

fn params(ramp: Ramp) -> RieffelParams {
    RieffelParams::new(
        parse_rational("3/10").unwrap(),
        parse_rational("1/10").unwrap(),
        ramp,
    )
    .unwrap()
}

#[test]
fn mixed_complex_identities() {
    let d = data();
    let mut rng = sample::rng(21);
    for deg in 0..=2 {
        for _ in 0..3 {
            let c = sample::chain_fourier(&mut rng, deg, 2, &d, true).unwrap();
            let b = c.hochschild_b(&d).unwrap();
            assert!(b.hochschild_b(&d).unwrap().is_zero_probed(1, 2, &d).unwrap());
            let bb = c.connes_b(&d).unwrap();
            assert!(bb.connes_b(&d).unwrap().is_zero_probed(2, 2, &d).unwrap());
            let anti = bb.hochschild_b(&d).unwrap();
            let anti = if deg == 0 {
                anti
            } else {
                anti.add(&b.connes_b(&d).unwrap(), &d).unwrap()
            };
            assert!(anti.is_zero_probed(3, 2, &d).unwrap());
        }
    }
}

#[test]
fn degree_one_boundary_is_commutator() {
    let d = data();
    let mut rng = sample::rng(4);
    let a0 = sample::crossed_fourier(&mut rng, &d.field, 1, 3).unwrap();
    let a1 = sample::crossed_fourier(&mut rng, &d.field, 1, 3).unwrap();
    let c = Chain::tensor(vec![a0.clone(), a1.clone()], &d).unwrap();
    let comm = a0.mul(&a1, &d).unwrap().sub(&a1.mul(&a0, &d).unwrap()).unwrap();
    let expect = Chain::tensor(vec![comm], &d).unwrap();
    assert!(c.hochschild_b(&d).unwrap().sub(&expect, &d).unwrap().is_zero_probed(9, 3, &d).unwrap());
}

#[test]
fn connes_operator_in_degree_zero() {
    let d = data();
    let mut rng = sample::rng(8);
    let a0 = sample::crossed_fourier(&mut rng, &d.field, 1, 3).unwrap();
    let c = Chain::tensor(vec![a0.clone()], &d).unwrap();
    let expect = Chain::tensor(vec![Crossed::one(&d), a0], &d).unwrap();
    assert!(c.connes_b(&d).unwrap().sub(&expect, &d).unwrap().is_zero_probed(5, 3, &d).unwrap());
    // the unit in a normalized slot vanishes
    let unit = Chain::tensor(vec![Crossed::<FourierPoly>::one(&d), Crossed::one(&d)], &d).unwrap();
    assert!(unit.is_empty());
}

#[test]
fn chern_coefficients() {
    assert_eq!(chern_coefficient(0), BigRational::from_integer(1.into()));
    assert_eq!(chern_coefficient(1), BigRational::from_integer((-2).into()));
    assert_eq!(chern_coefficient(2), BigRational::from_integer(12.into()));
}

#[test]
fn chern_of_unit_is_trace_of_unit() {
    let d = data();
    let e = MatrixCrossed::<FourierPoly>::identity(1, &d);
    let ch = chern(&e, 2, &d).unwrap();
    assert_eq!(ch.parts[0].len(), 1);
    assert!(ch.parts[1].is_empty() && ch.parts[2].is_empty());
    assert!(ch.is_cycle(3, &d).unwrap());
}

#[test]
fn chern_of_rieffel_projection_is_a_cycle() {
    let p = params(Ramp::Cubic);
    let ctx = subalgebra_ctx(&p, 3);
    let e = MatrixCrossed::scalar(rieffel_projection(&p).unwrap());
    let ch = chern(&e, 2, &ctx).unwrap();
    assert!(ch.is_cycle(17, &ctx).unwrap());
    let h = subalgebra_embed(p.f().unwrap(), 1)
        .add(&subalgebra_embed(p.g().unwrap(), 0))
        .unwrap();
    let conj = conjugate_by_unipotent(&e, &h, &ctx).unwrap();
    assert_ne!(conj, e);
    let ch = chern(&conj, 1, &ctx).unwrap();
    assert!(ch.is_cycle(23, &ctx).unwrap());
}

#[test]
fn chern_rejects_non_idempotents() {
    let d = data();
    let two = Crossed::monomial(
        0,
        FourierPoly::constant(FormalLaurent::exact(Scalar::from_int(2))),
    );
    assert!(chern(&MatrixCrossed::scalar(two), 1, &d).is_err());
}

#[test]
fn burghelea_operators_satisfy_cyclic_identities() {
    let mut rng = sample::rng(77);
    for _ in 0..100 {
        let k = 1 + (rand::Rng::gen_range(&mut rng, 0..4usize));
        let t = sample::burghelea_tuple(&mut rng, k, 3);
        let mut r = t.clone();
        for _ in 0..=k {
            r = r.cyclic();
        }
        assert_eq!(r, t);
        for j in 0..=k {
            for i in 0..if k >= 2 { j } else { 0 } {
                assert_eq!(
                    t.face(j).unwrap().face(i).unwrap(),
                    t.face(i).unwrap().face(j - 1).unwrap()
                );
            }
            assert_eq!(t.degeneracy(j).unwrap().face(j).unwrap(), t);
            assert_eq!(t.degeneracy(j).unwrap().face(j + 1).unwrap(), t);
        }
        assert_eq!(t.cyclic().face(0).unwrap(), t.face(k).unwrap());
        for i in 1..=k {
            assert_eq!(t.cyclic().face(i).unwrap(), t.face(i - 1).unwrap().cyclic());
            assert_eq!(t.cyclic().degeneracy(i).unwrap(), t.degeneracy(i - 1).unwrap().cyclic());
        }
        assert_eq!(
            t.cyclic().degeneracy(0).unwrap(),
            t.degeneracy(k).unwrap().cyclic().cyclic()
        );
    }
    let t = BurgheleaTuple::new(vec![1, -1]).unwrap();
    assert_eq!(t.face(0).unwrap().entries(), &[0]);
    assert!(t.face(2).is_err());
    assert!(BurgheleaTuple::new(vec![1, 1]).is_err());
}

#[test]
fn restriction_commutes_with_boundary() {
    let d = data();
    let mut rng = sample::rng(31);
    for deg in 1..=3 {
        for _ in 0..3 {
            let c = sample::chain_fourier(&mut rng, deg, 2, &d, false).unwrap();
            let lhs = restrict_to_loops(&c.hochschild_b(&d).unwrap(), &d).unwrap();
            let rhs = restrict_to_loops(&c, &d).unwrap().boundary(&d).unwrap();
            assert!(lhs.sub(&rhs).is_zero_probed(12, 2, &d).unwrap());
        }
    }
}

#[test]
fn restriction_in_degree_zero_keeps_the_unit_component() {
    let d = data();
    let f = FourierPoly::exp((1, 0));
    let c = Chain::tensor_unnormalized(
        vec![Crossed::from_terms([(0, f.clone()), (2, f.clone())]).unwrap()],
        &d,
    )
    .unwrap();
    let l = restrict_to_loops(&c, &d).unwrap();
    let tuples: Vec<_> = l.tuples().cloned().collect();
    assert_eq!(tuples, vec![BurgheleaTuple::new(vec![0]).unwrap()]);
}

#[test]
fn regrouping_intertwines_boundaries() {
    let d = data();
    let mut rng = sample::rng(41);
    for _ in 0..10 {
        let k = 2 + rand::Rng::gen_range(&mut rng, 0..2usize);
        let c = sample::chain_fourier(&mut rng, k, 2, &d, false).unwrap();
        for q in 0..k {
            let lhs = c.hochschild_b(&d).unwrap().regroup(q, &d).unwrap();
            let mut rhs = c.regroup(q, &d).unwrap().hochschild_b(&d).unwrap();
            if q % 2 == 1 {
                rhs = rhs.scale(&BigRational::from_integer((-1).into()));
                rhs = rhs.add(&c.regroup(q + 1, &d).unwrap(), &d).unwrap();
            }
            assert!(lhs.sub(&rhs, &d).unwrap().is_zero_probed(3, 2, &d).unwrap());
        }
    }
}
