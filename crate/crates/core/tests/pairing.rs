use qtorus::crossed::{rieffel_projection, subalgebra_ctx, MatrixCrossed, PwSeries};
use qtorus::pairing::{pair, psi_chern_report, Cocycle, SimplicialCochain};
use qtorus::scalar::series::to_text;
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
fn rieffel_pairings() {
    for ramp in [Ramp::Quintic, Ramp::Cubic] {
        let p = params(ramp);
        let ctx = subalgebra_ctx(&p, 4);
        let e = MatrixCrossed::scalar(rieffel_projection(&p).unwrap());
        let one = MatrixCrossed::<PwSeries>::identity(1, &ctx);
        let v = pair(Cocycle::Xi0, &one, &ctx).unwrap();
        assert_eq!(v.text(), "-1 * h^-1 * theta^-1");
        let v = pair(Cocycle::Xi0, &e, &ctx).unwrap();
        assert_eq!(v.text(), "-3/10 * h^-1 * theta^-1");
        let v = pair(Cocycle::Xi3, &e, &ctx).unwrap();
        assert_eq!(v.text(), "h * theta^-1");
        assert!(v.exact);
        let v = pair(Cocycle::Xi2, &e, &ctx).unwrap();
        assert_eq!(v.text(), "0");
        let r = psi_chern_report(&e, &ctx).unwrap();
        let got: Vec<_> = r
            .components
            .iter()
            .map(|c| (c.component, to_text(&c.dtheta1), to_text(&c.dtheta2)))
            .collect();
        assert_eq!(
            got,
            vec![
                ((-1, 1), "-1/2 * h * theta^-1".to_string(), "0".to_string()),
                ((1, -1), "1/2 * h * theta^-1".to_string(), "0".to_string()),
            ]
        );
    }
}

#[test]
fn generators_are_closed() {
    let d = TorusPoissonData::exact(2);
    for g in SimplicialCochain::generators() {
        let cert = g.closedness(&d).unwrap();
        assert!(cert.is_closed(), "{} {:?}", g.name, cert);
    }
}

#[test]
fn pairings_are_homotopy_invariant() {
    let p = params(Ramp::Cubic);
    let ctx = subalgebra_ctx(&p, 6);
    let e = MatrixCrossed::scalar(rieffel_projection(&p).unwrap());
    let mut rng = qtorus::sample::rng(3);
    for _ in 0..2 {
        let h = qtorus::sample::crossed_rieffel(&mut rng, &p, 3).unwrap();
        let conj = qtorus::cyclic::conjugate_by_unipotent(&e, &h, &ctx).unwrap();
        assert!(conj.idempotent_defect(&ctx).unwrap().is_zero());
        for c in [Cocycle::Xi0, Cocycle::Xi2, Cocycle::Xi3] {
            let a = pair(c, &e, &ctx).unwrap();
            let b = pair(c, &conj, &ctx).unwrap();
            assert_eq!(a.series, b.series, "{:?}: {} vs {}", c, a.text(), b.text());
        }
    }
}
