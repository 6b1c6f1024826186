//! The acceptance suite: one pass/fail record per criterion, each built from
//! the module operations and their independent oracles.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::Serialize;

use crate::cohomology::{cohomology_dims, Action};
use crate::crossed::{
    idempotent_residual, rieffel_projection, subalgebra_ctx, Crossed, MatrixCrossed, PwSeries,
};
use crate::cyclic::{chern, conjugate_by_unipotent};
use crate::error::Result;
use crate::fedosov::{default_cap, star_via_fedosov};
use crate::pairing::{
    pair, phi::trilinear_integrands, psi_chern_report, Cocycle, PairingValue, SimplicialCochain,
};
use crate::sample;
use crate::scalar::{series, FormalLaurent, GaussRational, Scalar, ScalarField};
use crate::torus::{parse_rational, FourierPoly, Ramp, RieffelParams, TorusPoissonData};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub order: i32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { order: 6, seed: 7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({:.2}s / {:.0}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.budget_seconds,
            self.detail
        )
    }
}

pub const CRITERIA: [(u32, &str, f64); 9] = [
    (1, "trace pairing", 5.0),
    (2, "odd-degree vanishing and xi2", 5.0),
    (3, "degree-2 pairing", 30.0),
    (4, "psi report", 60.0),
    (5, "cohomology dimensions", 10.0),
    (6, "star-product consistency", 60.0),
    (7, "algebraic identity suites", 120.0),
    (8, "idempotency", 10.0),
    (9, "homotopy invariance", 60.0),
];

/// `(α, ε)` as exact rationals with the given ramp.
pub fn rieffel_params(alpha: &str, eps: &str, ramp: Ramp) -> Result<RieffelParams> {
    RieffelParams::new(parse_rational(alpha)?, parse_rational(eps)?, ramp)
}

fn default_params(ramp: Ramp) -> Result<RieffelParams> {
    rieffel_params("3/10", "1/10", ramp)
}

fn expect_text(v: &PairingValue, text: &str, detail: &mut Vec<String>) -> bool {
    let ok = v.exact && v.text() == text;
    detail.push(format!("{} (expected {}{})", v.text(), text, if v.exact { "" } else { ", inexact" }));
    ok
}

fn series_eq_text(s: &FormalLaurent, text: &str) -> bool {
    series::to_text(s) == text
}

fn criterion_1(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for (alpha, eps) in [("3/10", "1/10"), ("37/100", "5/100")] {
        let p = rieffel_params(alpha, eps, Ramp::Quintic)?;
        let ctx = subalgebra_ctx(&p, cfg.order);
        let one = MatrixCrossed::<PwSeries>::identity(1, &ctx);
        ok &= expect_text(&pair(Cocycle::Xi0, &one, &ctx)?, "-1 * h^-1 * theta^-1", &mut detail);
        let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
        let a = &p.alpha;
        let want = format!("-{}/{} * h^-1 * theta^-1", a.numer(), a.denom());
        ok &= expect_text(&pair(Cocycle::Xi0, &e, &ctx)?, &want, &mut detail);
        let f = p.f()?;
        let numeric = f.integrate_numeric();
        let err = (numeric - a.to_f64().unwrap_or(f64::NAN)).abs();
        let exact = f.integrate()?.as_rational();
        ok &= err < 1e-10 && exact.as_ref() == Some(a);
        detail.push(format!("|int f - alpha| = {:.1e}", err));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_2(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let p = default_params(Ramp::Quintic)?;
    let ctx = subalgebra_ctx(&p, cfg.order);
    let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
    let one = MatrixCrossed::<PwSeries>::identity(1, &ctx);
    let mut detail = Vec::new();
    let a = expect_text(&pair(Cocycle::Xi2, &e, &ctx)?, "0", &mut detail);
    let b = expect_text(&pair(Cocycle::Xi3, &one, &ctx)?, "0", &mut detail);
    Ok((a && b, detail.join("; ")))
}

/// `Σ n₁ ∫ …` of `⟨Φ(ξ₃), Ch₁(e)⟩` by adaptive quadrature, as the
/// coefficient of `ℏ θ⁻¹`.
pub fn xi3_pairing_numeric(p: &RieffelParams, order: i32) -> Result<f64> {
    let ctx = subalgebra_ctx(p, order);
    let e = MatrixCrossed::scalar(rieffel_projection(p)?);
    let ch = chern(&e, 1, &ctx)?;
    let mut total = 0.0;
    for (coef, t) in ch.parts[1].terms() {
        let a0 = t[0].scale(coef)?;
        for (_, f) in trilinear_integrands(1, &a0, &t[1], &t[2], &ctx)? {
            if let Some(c) = f.coeff(0) {
                total += c.integrate_numeric();
            }
        }
    }
    Ok(-total)
}

fn criterion_3(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for ramp in [Ramp::Quintic, Ramp::Cubic] {
        let p = default_params(ramp)?;
        let ctx = subalgebra_ctx(&p, cfg.order);
        let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
        ok &= expect_text(&pair(Cocycle::Xi3, &e, &ctx)?, "h * theta^-1", &mut detail);
        let numeric = xi3_pairing_numeric(&p, cfg.order)?;
        let rel = (numeric - 1.0).abs();
        ok &= rel < 1e-6;
        let g = p.g()?;
        let gdf = g.mul(&g)?.mul(&p.f()?.deriv()?)?;
        let exact = gdf.integrate()?.as_rational();
        let sixth = BigRational::new((-1).into(), 6.into());
        let num = gdf.integrate_numeric();
        ok &= exact.as_ref() == Some(&sixth) && (num + 1.0 / 6.0).abs() < 1e-10;
        detail.push(format!(
            "{}: quadrature {:.12} (rel err {:.1e}), int g^2 df = {} / {:.12}",
            p.ramp.name(),
            numeric,
            rel,
            exact.map(|r| r.to_string()).unwrap_or_else(|| "inexact".into()),
            num
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_4(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let p = default_params(Ramp::Quintic)?;
    let ctx = subalgebra_ctx(&p, cfg.order);
    let mut detail = Vec::new();
    let one = MatrixCrossed::<PwSeries>::identity(1, &ctx);
    let r1 = psi_chern_report(&one, &ctx)?;
    let mut ok = expect_text(&r1.identity, "-1 * h^-1 * theta^-1", &mut detail)
        && r1.components.is_empty();
    let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
    let r2 = psi_chern_report(&e, &ctx)?;
    ok &= expect_text(&r2.identity, "-3/10 * h^-1 * theta^-1", &mut detail);
    let comps: Vec<_> = r2
        .components
        .iter()
        .map(|c| (c.component, series::to_text(&c.dtheta1), series::to_text(&c.dtheta2), c.exact))
        .collect();
    let want = [((-1, 1), "-1/2 * h * theta^-1"), ((1, -1), "1/2 * h * theta^-1")];
    ok &= comps.len() == 2;
    for (c, w) in comps.iter().zip(want) {
        ok &= c.0 == w.0 && c.1 == w.1 && c.2 == "0" && c.3;
    }
    for c in &r2.components {
        ok &= series_eq_text(&c.dtheta2, "0");
    }
    detail.push(format!("components {:?}", comps));
    Ok((ok, detail.join("; ")))
}

fn criterion_5(_cfg: &VerifyConfig) -> Result<(bool, String)> {
    let data = TorusPoissonData::exact(2);
    let mut ok = true;
    let mut detail = Vec::new();
    for k in [1, 2, 4] {
        let r = cohomology_dims(k, &data, Action::Rotation)?;
        ok &= r.dims == [1, 3, 3, 1] && r.periodic == [4, 4];
        detail.push(format!("K={}: {:?} {:?}", k, r.dims, r.periodic));
    }
    Ok((ok, detail.join("; ")))
}

fn box_poly(rng: &mut sample::SeededRng) -> Result<FourierPoly> {
    let mut f = FourierPoly::zero();
    for k1 in -2..=2 {
        for k2 in -2..=2 {
            let c = sample::scalar(rng, &ScalarField::Exact, false)?;
            f = f.add(&FourierPoly::mode((k1, k2), FormalLaurent::exact(c)))?;
        }
    }
    Ok(f)
}

fn criterion_6(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let data = TorusPoissonData::exact(cfg.order);
    let mut rng = sample::rng(cfg.seed);
    let f = box_poly(&mut rng)?;
    let g = box_poly(&mut rng)?;
    let fed = star_via_fedosov(&f, &g, &data, default_cap(cfg.order))?;
    let moyal = f.moyal_star(&g, &data)?;
    let box_ok = fed == moyal;
    let small = TorusPoissonData::exact(2);
    let minus_i_h = FormalLaurent::monomial(1, Scalar::constant(GaussRational::i()).neg(), 2);
    let mut axiom_ok = true;
    for _ in 0..50 {
        let a = sample::fourier(&mut rng, &ScalarField::Exact, 2, 2, 2)?;
        let b = sample::fourier(&mut rng, &ScalarField::Exact, 2, 2, 2)?;
        let cap = default_cap(2);
        let comm = star_via_fedosov(&a, &b, &small, cap)?
            .sub(&star_via_fedosov(&b, &a, &small, cap)?)?;
        let expect = a.poisson_bracket(&b, &small)?.scale(&minus_i_h)?;
        let diff = comm.truncate(1).sub(&expect.truncate(1))?;
        axiom_ok &= diff
            .modes()
            .all(|(_, s)| s.coeff(0).is_none() && s.coeff(1).is_none());
    }
    Ok((
        box_ok && axiom_ok,
        format!(
            "fedosov = moyal on 5x5 box at N={}: {}; commutator = -i h {{,}} on 50 pairs: {}",
            cfg.order, box_ok, axiom_ok
        ),
    ))
}

fn criterion_7(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let data = TorusPoissonData::exact(cfg.order);
    let mut rng = sample::rng(cfg.seed.wrapping_add(1));
    let mut detail = Vec::new();

    let mut assoc = true;
    for _ in 0..20 {
        let a = sample::crossed_fourier(&mut rng, &data.field, 2, cfg.order)?;
        let b = sample::crossed_fourier(&mut rng, &data.field, 2, cfg.order)?;
        let c = sample::crossed_fourier(&mut rng, &data.field, 2, cfg.order)?;
        assoc &= a.mul(&b, &data)?.mul(&c, &data)? == a.mul(&b.mul(&c, &data)?, &data)?;
    }
    detail.push(format!("associativity x20: {}", assoc));

    let mut mixed = true;
    for i in 0..30 {
        let deg = i % 4;
        let c = sample::chain_fourier(&mut rng, deg, 2, &data, true)?;
        let s = rng.gen();
        let b = c.hochschild_b(&data)?;
        let bb = c.connes_b(&data)?;
        mixed &= b.hochschild_b(&data)?.is_zero_probed(s, 2, &data)?;
        mixed &= bb.connes_b(&data)?.is_zero_probed(s, 2, &data)?;
        let mut anti = bb.hochschild_b(&data)?;
        if deg > 0 {
            anti = anti.add(&b.connes_b(&data)?, &data)?;
        }
        mixed &= anti.is_zero_probed(s, 2, &data)?;
    }
    detail.push(format!("b^2 = B^2 = bB + Bb = 0 x30: {}", mixed));

    let p = default_params(Ramp::Quintic)?;
    let ctx = subalgebra_ctx(&p, cfg.order);
    let e1 = MatrixCrossed::<PwSeries>::identity(1, &ctx);
    let e2 = MatrixCrossed::scalar(rieffel_projection(&p)?);
    let h = sample::crossed_rieffel(&mut rng, &p, 3)?;
    let e3 = conjugate_by_unipotent(&e2, &h, &ctx)?;
    let mut cycles = true;
    for e in [&e1, &e2, &e3] {
        for k in 0..=2 {
            cycles &= chern(e, k, &ctx)?.is_cycle(rng.gen(), &ctx)?;
        }
    }
    detail.push(format!("(b+B) Ch_k = 0 for k <= 2 on e1, e2, u e2 u^-1: {}", cycles));

    let mut tuples = true;
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let t = sample::burghelea_tuple(&mut rng, k, 3);
        tuples &= check_tuple_identities(&t)?;
    }
    detail.push(format!("cyclic-set identities x100: {}", tuples));

    let mut closed = true;
    for g in SimplicialCochain::generators() {
        closed &= g.closedness(&data)?.is_closed();
    }
    detail.push(format!("8 generators closed: {}", closed));
    detail.push(format!("seed {}", cfg.seed));
    Ok((assoc && mixed && cycles && tuples && closed, detail.join("; ")))
}

/// All simplicial and cyclic relations among faces, degeneracies and `t`.
pub fn check_tuple_identities(t: &crate::cyclic::BurgheleaTuple) -> Result<bool> {
    let k = t.arity();
    let mut ok = true;
    let mut r = t.clone();
    for _ in 0..=k {
        r = r.cyclic();
    }
    ok &= r == *t;
    for j in 0..=k {
        if k >= 2 {
            for i in 0..j {
                ok &= t.face(j)?.face(i)? == t.face(i)?.face(j - 1)?;
            }
        }
        for i in 0..=j {
            ok &= t.degeneracy(j)?.degeneracy(i)? == t.degeneracy(i)?.degeneracy(j + 1)?;
        }
        // δᵢ sⱼ
        let s = t.degeneracy(j)?;
        for i in 0..=k + 1 {
            let lhs = s.face(i)?;
            let rhs = if i < j {
                t.face(i)?.degeneracy(j - 1)?
            } else if i == j || i == j + 1 {
                t.clone()
            } else {
                t.face(i - 1)?.degeneracy(j)?
            };
            ok &= lhs == rhs;
        }
    }
    ok &= t.cyclic().face(0)? == t.face(k)?;
    for i in 1..=k {
        ok &= t.cyclic().face(i)? == t.face(i - 1)?.cyclic();
        ok &= t.cyclic().degeneracy(i)? == t.degeneracy(i - 1)?.cyclic();
    }
    ok &= t.cyclic().degeneracy(0)? == t.degeneracy(k)?.cyclic().cyclic();
    Ok(ok)
}

fn criterion_8(_cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for ramp in [Ramp::Quintic, Ramp::Cubic] {
        let p = default_params(ramp)?;
        let ctx = subalgebra_ctx(&p, 2);
        let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
        let (sup, exact) = idempotent_residual(&e, &ctx, 10_000)?;
        let (f, g) = (p.f()?, p.g()?);
        let a = &p.alpha;
        let g_plus = g.translate(&-a.clone());
        let g_minus = g.translate(a);
        let supports = g.mul(&g_plus)?.is_zero() && g.mul(&g_minus)?.is_zero();
        let partition = g.mul(&f.add(&f.translate(a)))?.sub(&g).is_zero();
        let squares = f
            .mul(&f)?
            .add(&g.mul(&g)?)
            .add(&g_plus.mul(&g_plus)?)
            .sub(&f)
            .is_zero();
        ok &= sup < 1e-9 && exact && supports && partition && squares;
        detail.push(format!(
            "{}: grid residual {:.1e}, exact {}, g g(.-+a) = 0 {}, g(f + f(.-a)) = g {}, f^2 + g^2 + g(.+a)^2 = f {}",
            p.ramp.name(),
            sup,
            exact,
            supports,
            partition,
            squares
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_9(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let p = default_params(Ramp::Quintic)?;
    let ctx = subalgebra_ctx(&p, cfg.order);
    let e = MatrixCrossed::scalar(rieffel_projection(&p)?);
    let mut rng = sample::rng(cfg.seed.wrapping_add(2));
    let base: Vec<PairingValue> = [Cocycle::Xi0, Cocycle::Xi2, Cocycle::Xi3]
        .iter()
        .map(|&c| pair(c, &e, &ctx))
        .collect::<Result<_>>()?;
    let mut ok = true;
    let mut min_trunc = i32::MAX;
    for _ in 0..5 {
        let h: Crossed<PwSeries> = sample::crossed_rieffel(&mut rng, &p, 3)?;
        let conj = conjugate_by_unipotent(&e, &h, &ctx)?;
        for (i, c) in [Cocycle::Xi0, Cocycle::Xi2, Cocycle::Xi3].iter().enumerate() {
            let v = pair(*c, &conj, &ctx)?;
            min_trunc = min_trunc.min(v.series.trunc());
            ok &= v.exact && v.series == base[i].series;
            ok &= v.series.trunc() >= cfg.order - 1;
        }
    }
    Ok((
        ok,
        format!("5 conjugations, all pairings equal through h^{} (seed {})", min_trunc, cfg.seed),
    ))
}

type Check = fn(&VerifyConfig) -> Result<(bool, String)>;

const CHECKS: [Check; 9] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
];

/// Run one criterion by number (1-based).
pub fn run_criterion(id: u32, cfg: &VerifyConfig) -> CriterionResult {
    let (_, name, budget) = CRITERIA[(id - 1) as usize];
    let start = Instant::now();
    let (passed, detail) = match CHECKS[(id - 1) as usize](cfg) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {}", e)),
    };
    let seconds = start.elapsed().as_secs_f64();
    CriterionResult {
        id,
        name,
        passed: passed && seconds <= budget,
        detail: if seconds > budget {
            format!("{}; over time budget", detail)
        } else {
            detail
        },
        seconds,
        budget_seconds: budget,
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    (1..=9).map(|id| run_criterion(id, cfg)).collect()
}

/// `true` if every criterion passed.
pub fn all_passed(results: &[CriterionResult]) -> bool {
    !results.is_empty() && results.iter().all(|r| r.passed)
}
