use qtorus::fedosov::{quantize, star_via_fedosov, WeylFormSection, WeylSection};
use qtorus::sample;
use qtorus::scalar::{FormalLaurent, GaussRational, Scalar, ScalarField};
use qtorus::torus::{FourierPoly, TorusPoissonData};

const N: i32 = 6;
const CAP: u32 = 2 * N as u32 + 4;

fn data() -> TorusPoissonData {
    TorusPoissonData::exact(N)
}

#[test]
fn d_of_y1_is_minus_dtheta1() {
    let d = data();
    let s = WeylFormSection::function(WeylSection::y(1, N, CAP));
    let out = s.fedosov_d(&d).unwrap();
    let mut expect = WeylFormSection::zero(CAP - 1);
    expect.parts[1] = WeylSection::from_fn(FourierPoly::one(N).neg(), CAP - 1);
    assert_eq!(out, expect);
    assert!(WeylFormSection::function(WeylSection::from_fn(FourierPoly::one(N), CAP))
        .fedosov_d(&d)
        .unwrap()
        .is_zero());
}

#[test]
fn connection_is_flat() {
    let d = data();
    let mut rng = sample::rng(11);
    for _ in 0..20 {
        let s = sample::weyl_form(&mut rng, &ScalarField::Exact, 4, N, CAP).unwrap();
        let dd = s.fedosov_d(&d).unwrap().fedosov_d(&d).unwrap();
        assert!(dd.is_zero());
    }
}

#[test]
fn both_forms_of_the_connection_agree() {
    let d = data();
    let mut rng = sample::rng(12);
    for _ in 0..50 {
        let s = sample::weyl_form(&mut rng, &ScalarField::Exact, 4, N, CAP).unwrap();
        assert_eq!(s.fedosov_d(&d).unwrap(), s.fedosov_d_commutator(&d).unwrap());
    }
}

#[test]
fn leibniz_rule() {
    let d = data();
    let mut rng = sample::rng(13);
    for _ in 0..10 {
        let s = sample::weyl_form(&mut rng, &ScalarField::Exact, 3, N, CAP).unwrap();
        let t = sample::weyl_form(&mut rng, &ScalarField::Exact, 3, N, CAP).unwrap();
        let lhs = s.product(&t, &d).unwrap().fedosov_d(&d).unwrap();
        let mut rhs = s.fedosov_d(&d).unwrap().product(&t, &d).unwrap();
        for p in 0..3 {
            let sp = s.homogeneous(p);
            let term = sp.product(&t.fedosov_d(&d).unwrap(), &d).unwrap();
            rhs = if p % 2 == 0 { rhs.add(&term) } else { rhs.sub(&term) }.unwrap();
        }
        assert_eq!(lhs.with_cap(CAP - 1), rhs.with_cap(CAP - 1));
    }
}

#[test]
fn weyl_square_commutator() {
    // (y¹)² ∘ (y²)² − (y²)² ∘ (y¹)² = −4iℏθ y¹y²
    let d = data();
    let y1 = WeylSection::y(1, N, CAP);
    let y2 = WeylSection::y(2, N, CAP);
    let a = y1.product(&y1, &d).unwrap();
    let b = y2.product(&y2, &d).unwrap();
    let c = a.commutator(&b, &d).unwrap();
    let coeff = d.field.i().try_mul(&d.theta).unwrap().scale(&GaussRational::from_int(-4));
    let expect = WeylSection::monomial(
        (1, 1),
        FourierPoly::constant(FormalLaurent::monomial(1, coeff, N)),
        CAP,
    );
    assert_eq!(c, expect);
}

#[test]
fn quantize_is_flat_with_the_right_symbol() {
    let d = data();
    let mut rng = sample::rng(14);
    for _ in 0..10 {
        let f = sample::fourier(&mut rng, &ScalarField::Exact, 2, 3, N).unwrap();
        let q = quantize(&f, &d, CAP).unwrap();
        assert_eq!(q.symbol(), f);
        assert!(WeylFormSection::function(q).fedosov_d(&d).unwrap().is_zero());
    }
    let q = quantize(&FourierPoly::one(N), &d, CAP).unwrap();
    assert_eq!(q, WeylSection::from_fn(FourierPoly::one(N), CAP));
}

#[test]
fn quantize_first_mode_is_exponential_series() {
    let d = data();
    let q = quantize(&FourierPoly::exp((1, 0)), &d, 8).unwrap();
    let tpi = d.two_pi_i().unwrap();
    for a in 0..=8u32 {
        let fact: i64 = (1..=a as i64).product();
        let c = tpi.pow(a as i32).unwrap().scale(&GaussRational::from_ratio(1, fact));
        let got = q.coeff((a, 0)).unwrap().coeff((1, 0)).unwrap().coeff(0).unwrap();
        assert_eq!(got, &c);
        assert!(q.coeff((a, 1)).is_none() || a == 8);
    }
}

#[test]
fn fedosov_star_matches_moyal_on_basis_pair() {
    let d = data();
    let f = FourierPoly::exp((1, 0));
    let g = FourierPoly::exp((0, 1));
    assert_eq!(
        star_via_fedosov(&f, &g, &d, CAP).unwrap(),
        f.moyal_star(&g, &d).unwrap()
    );
    assert!(star_via_fedosov(&f, &g, &d, 2 * N as u32 - 1).is_err());
}

#[test]
fn fedosov_commutator_is_poisson_bracket() {
    let d = data();
    let mut rng = sample::rng(15);
    for _ in 0..5 {
        let f = sample::fourier(&mut rng, &ScalarField::Exact, 2, 2, N).unwrap();
        let g = sample::fourier(&mut rng, &ScalarField::Exact, 2, 2, N).unwrap();
        let fg = star_via_fedosov(&f, &g, &d, CAP).unwrap();
        let gf = star_via_fedosov(&g, &f, &d, CAP).unwrap();
        let comm = fg.sub(&gf).unwrap();
        let minus_i_h = FormalLaurent::monomial(1, Scalar::constant(GaussRational::i()).neg(), N);
        let expect = f.poisson_bracket(&g, &d).unwrap().scale(&minus_i_h).unwrap();
        // compare the ℏ¹ coefficients of the (ℏ⁰-free) series
        let c1 = comm.truncate(1);
        let e1 = expect.truncate(1);
        let sub = c1.sub(&e1).unwrap();
        // the ℏ⁰ part of the commutator vanishes; the ℏ¹ part matches
        for (_, s) in sub.modes() {
            assert!(s.coeff(0).is_none() && s.coeff(1).is_none(), "{:?}", s);
        }
    }
}
