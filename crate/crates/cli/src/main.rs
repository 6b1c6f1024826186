//! `qtorus`: JSON-emitting front end for star products, Fedosov checks,
//! Rieffel projections, Chern characters, pairings, cohomology and the
//! acceptance suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or constraint
//! error, 3 backend mismatch, 4 any other computational error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtorus::cohomology::{cohomology_dims, Action};
use qtorus::conventions::convention_ledger;
use qtorus::crossed::{
    idempotent_residual, rieffel_projection, subalgebra_ctx, CoeffAlgebra, Crossed,
    MatrixCrossed, PwSeries, SubalgebraCtx,
};
use qtorus::cyclic::chern;
use qtorus::fedosov::{default_cap, star_via_fedosov, WeylFormSection};
use qtorus::pairing::{pair, psi_chern_report, Cocycle};
use qtorus::scalar::{series, NumericBinding, ScalarField};
use qtorus::torus::{parse_rational, FourierPoly, Ramp, RieffelParams, TorusPoissonData};
use qtorus::verify::{all_passed, run_all, VerifyConfig};
use qtorus::{sample, Error};

#[derive(Parser, Debug)]
#[command(name = "qtorus", version, about = "Computations on the quantum-torus crossed product")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RampChoice {
    Quintic,
    Cubic,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Scalar backend.
    #[arg(long, global = true, value_enum, default_value = "exact")]
    backend: Backend,
    /// ℏ truncation order N.
    #[arg(long = "order", visible_alias = "hbar-order", global = true, default_value_t = 6)]
    order: i32,
    /// Lowest ℏ order allowed in products.
    #[arg(long, global = true, default_value_t = qtorus::scalar::DEFAULT_FLOOR)]
    floor: i32,
    /// Rotation number α (decimal or fraction).
    #[arg(long, global = true, default_value = "0.3")]
    alpha: String,
    /// Second rotation number β (numeric backend only).
    #[arg(long, global = true, default_value_t = 0.6180339887498949)]
    beta: f64,
    /// Value of θ for the numeric backend.
    #[arg(long, global = true, default_value_t = 1.0)]
    theta: f64,
    /// Ramp width ε for the Rieffel functions.
    #[arg(long, global = true, default_value = "0.1")]
    eps: String,
    /// Ramp shape.
    #[arg(long, global = true, value_enum, default_value = "quintic")]
    ramp: RampChoice,
    /// Write the JSON report here and print a summary table instead.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star product of two Fourier polynomials.
    Star {
        /// First factor: a mode `k1,k2` or a JSON Fourier polynomial.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Second factor.
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Compute through the Fedosov connection instead of the Moyal formula.
        #[arg(long)]
        fedosov: bool,
    },
    /// Flatness of the Fedosov connection and agreement of its two forms.
    FedosovCheck {
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Build the Rieffel projection and report its idempotent residual.
    Rieffel {
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
    /// Chern character of e1, e2 or an idempotent read from a JSON file.
    Chern {
        #[arg(long, default_value = "e2")]
        idempotent: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Pair a cocycle with the Chern character of an idempotent.
    Pair {
        #[arg(long, value_parser = ["xi0", "xi2", "xi3"])]
        cocycle: String,
        #[arg(long, default_value = "e2")]
        idempotent: String,
        /// Include the coordinate report of the Chern character.
        #[arg(long)]
        report: bool,
    },
    /// Dimensions of the groupoid cohomology and of its periodic assembly.
    Cohomology {
        #[arg(long, default_value_t = 1)]
        cutoff: i32,
        /// Use the trivial action (consistency fixture).
        #[arg(long)]
        identity_action: bool,
    },
    /// Run the acceptance suite.
    Verify,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(Value),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Constraint(m) | Error::Parse(m) => Failure::Usage(m),
            other => Failure::Compute(other),
        }
    }
}

type CmdResult = Result<Value, Failure>;

impl RunConfig {
    fn numeric_binding(&self) -> Result<NumericBinding, Failure> {
        let alpha = parse_rational(&self.alpha)?;
        Ok(NumericBinding {
            theta: self.theta,
            alpha: num_traits_to_f64(&alpha),
            beta: self.beta,
        })
    }

    fn field(&self) -> Result<ScalarField, Failure> {
        Ok(match self.backend {
            Backend::Exact => ScalarField::Exact,
            Backend::Numeric => ScalarField::Numeric(self.numeric_binding()?),
        })
    }

    fn torus(&self) -> Result<TorusPoissonData, Failure> {
        if self.order < 0 {
            return Err(Failure::Usage(format!("order must be nonnegative, got {}", self.order)));
        }
        Ok(TorusPoissonData::new(self.field()?, self.order))
    }

    fn rieffel(&self) -> Result<RieffelParams, Failure> {
        let ramp = match self.ramp {
            RampChoice::Quintic => Ramp::Quintic,
            RampChoice::Cubic => Ramp::Cubic,
        };
        Ok(RieffelParams::new(parse_rational(&self.alpha)?, parse_rational(&self.eps)?, ramp)?)
    }

    fn subalgebra(&self, p: &RieffelParams) -> Result<SubalgebraCtx, Failure> {
        let mut ctx = subalgebra_ctx(p, self.order);
        ctx.field = self.field()?;
        Ok(ctx)
    }

    fn describe(&self) -> Value {
        json!({
            "backend": match self.backend { Backend::Exact => "exact", Backend::Numeric => "numeric" },
            "order": self.order,
            "floor": self.floor,
            "alpha": self.alpha,
            "beta": self.beta,
            "theta": self.theta,
            "eps": self.eps,
            "ramp": match self.ramp { RampChoice::Quintic => "quintic", RampChoice::Cubic => "cubic" },
            "seed": self.seed,
        })
    }
}

fn num_traits_to_f64(r: &num_rational::BigRational) -> f64 {
    r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
        / r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn parse_fourier(s: &str, trunc: i32) -> Result<FourierPoly, Failure> {
    let s = s.trim();
    if s.starts_with('[') || s.starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(FourierPoly::from_json(&v, trunc)?);
    }
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Failure::Usage(format!("expected a mode k1,k2 or JSON, got {:?}", s));
    if parts.len() != 2 {
        return Err(bad());
    }
    let k1 = parts[0].trim().parse().map_err(|_| bad())?;
    let k2 = parts[1].trim().parse().map_err(|_| bad())?;
    Ok(FourierPoly::exp((k1, k2)))
}

fn cmd_star(cfg: &RunConfig, f: &str, g: &str, fedosov: bool) -> CmdResult {
    let data = cfg.torus()?;
    let a = parse_fourier(f, cfg.order)?;
    let b = parse_fourier(g, cfg.order)?;
    let product = if fedosov {
        star_via_fedosov(&a, &b, &data, default_cap(cfg.order))?
    } else {
        a.moyal_star(&b, &data)?
    };
    Ok(json!({
        "method": if fedosov { "fedosov" } else { "moyal" },
        "product": product.to_json(),
    }))
}

fn cmd_fedosov_check(cfg: &RunConfig, samples: usize) -> CmdResult {
    let data = cfg.torus()?;
    let cap = default_cap(cfg.order);
    let mut rng = sample::rng(cfg.seed);
    let (mut flat, mut agree) = (true, true);
    for _ in 0..samples {
        let s: WeylFormSection = sample::weyl_form(&mut rng, &data.field, 3, cfg.order, cap)?;
        let d1 = s.fedosov_d(&data)?;
        flat &= d1.fedosov_d(&data)?.is_zero();
        agree &= d1 == s.fedosov_d_commutator(&data)?;
    }
    let passed = flat && agree;
    let report = json!({"samples": samples, "flat": flat, "forms_agree": agree, "passed": passed});
    if passed {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

fn cmd_rieffel(cfg: &RunConfig, grid: usize) -> CmdResult {
    let p = cfg.rieffel()?;
    let ctx = subalgebra_ctx(&p, cfg.order);
    let e = rieffel_projection(&p)?;
    let (residual, exact) = idempotent_residual(&MatrixCrossed::scalar(e.clone()), &ctx, grid)?;
    let f = p.f()?;
    let integral = f.integrate()?;
    Ok(json!({
        "idempotent_residual": residual,
        "idempotent_exact": exact,
        "grid_points": grid,
        "integral_f": integral.as_rational().map(|r| r.to_string()),
        "integral_f_numeric": f.integrate_numeric(),
        "element": e.to_json(&ctx)?,
    }))
}

/// Loads `e1`, `e2` or a Fourier-mode idempotent from a JSON file.
enum Idempotent {
    Sub(MatrixCrossed<PwSeries>, SubalgebraCtx),
    Fourier(MatrixCrossed<FourierPoly>, TorusPoissonData),
}

fn load_idempotent(cfg: &RunConfig, which: &str) -> Result<Idempotent, Failure> {
    match which {
        "e1" | "e2" => {
            let p = cfg.rieffel()?;
            let ctx = cfg.subalgebra(&p)?;
            let e = if which == "e1" {
                MatrixCrossed::identity(1, &ctx)
            } else {
                MatrixCrossed::scalar(rieffel_projection(&p)?)
            };
            Ok(Idempotent::Sub(e, ctx))
        }
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {}", path, e)))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let data = cfg.torus()?;
            let e = Crossed::<FourierPoly>::from_json(&v, cfg.order)?;
            Ok(Idempotent::Fourier(MatrixCrossed::scalar(e), data))
        }
    }
}

fn chern_json<A: CoeffAlgebra>(e: &MatrixCrossed<A>, k: usize, ctx: &A::Ctx) -> CmdResult {
    let ch = chern(e, k, ctx)?;
    let cycle = ch.is_cycle(1, ctx)?;
    let parts = ch
        .parts
        .iter()
        .map(|c| c.to_json(ctx))
        .collect::<qtorus::Result<Vec<_>>>()?;
    Ok(json!({"k": k, "components": parts, "is_cycle": cycle}))
}

fn cmd_chern(cfg: &RunConfig, which: &str, k: usize) -> CmdResult {
    match load_idempotent(cfg, which)? {
        Idempotent::Sub(e, ctx) => chern_json(&e, k, &ctx),
        Idempotent::Fourier(e, ctx) => chern_json(&e, k, &ctx),
    }
}

fn pair_json<A: CoeffAlgebra>(c: Cocycle, e: &MatrixCrossed<A>, ctx: &A::Ctx, report: bool) -> CmdResult {
    let v = pair(c, e, ctx)?;
    let mut out = json!({
        "cocycle": c.name(),
        "value": v.text(),
        "value_series": series::to_json(&v.series),
        "exact": v.exact,
    });
    if report {
        let r = psi_chern_report(e, ctx)?;
        let comps: Vec<Value> = r
            .components
            .iter()
            .map(|c| {
                json!({
                    "component": [c.component.0, c.component.1],
                    "dtheta1": series::to_text(&c.dtheta1),
                    "dtheta2": series::to_text(&c.dtheta2),
                    "exact": c.exact,
                })
            })
            .collect();
        out["psi_report"] = json!({
            "identity": r.identity.text(),
            "components": comps,
            "xi1": r.xi1,
        });
    }
    Ok(out)
}

fn cmd_pair(cfg: &RunConfig, cocycle: &str, which: &str, report: bool) -> CmdResult {
    let c = Cocycle::parse(cocycle)?;
    match load_idempotent(cfg, which)? {
        Idempotent::Sub(e, ctx) => pair_json(c, &e, &ctx, report),
        Idempotent::Fourier(e, ctx) => pair_json(c, &e, &ctx, report),
    }
}

fn cmd_cohomology(cfg: &RunConfig, cutoff: i32, identity: bool) -> CmdResult {
    let data = cfg.torus()?;
    let action = if identity { Action::Identity } else { Action::Rotation };
    let r = cohomology_dims(cutoff, &data, action)?;
    Ok(json!({
        "cutoff": cutoff,
        "action": if identity { "identity" } else { "rotation" },
        "dims": r.dims,
        "periodic": r.periodic,
        "warnings": r.warnings,
    }))
}

fn cmd_verify(cfg: &RunConfig) -> CmdResult {
    let vc = VerifyConfig {
        order: cfg.order,
        seed: cfg.seed,
    };
    let results = run_all(&vc);
    for r in &results {
        eprintln!("{}", r.line());
    }
    let criteria: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "budget_seconds": r.budget_seconds,
            })
        })
        .collect();
    let report = json!({"criteria": criteria, "passed": all_passed(&results)});
    if all_passed(&results) {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

fn emit(cfg: &RunConfig, command: &str, body: Value) -> Result<(), Failure> {
    let doc = json!({
        "command": command,
        "config": cfg.describe(),
        "convention_ledger": convention_ledger(),
        "result": body,
    });
    let text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    match &cfg.output {
        Some(path) => {
            std::fs::write(path, text + "\n")
                .map_err(|e| Failure::Usage(format!("cannot write {}: {}", path.display(), e)))?;
            print_table(&doc["result"], "");
        }
        None => {
            // A closed pipe (for example `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{}", text);
        }
    }
    Ok(())
}

/// Flat `key: value` listing of scalar leaves for humans.
fn print_table(v: &Value, prefix: &str) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{}.{}", prefix, k) };
                print_table(x, &key);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            println!("{:<32} {}", prefix, v);
        }
        Value::Array(a) => println!("{:<32} [{} entries]", prefix, a.len()),
        _ => println!("{:<32} {}", prefix, v),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.cfg;
    let (name, result) = match &cli.cmd {
        Command::Star { f, g, fedosov } => ("star", cmd_star(cfg, f, g, *fedosov)),
        Command::FedosovCheck { samples } => ("fedosov-check", cmd_fedosov_check(cfg, *samples)),
        Command::Rieffel { grid } => ("rieffel", cmd_rieffel(cfg, *grid)),
        Command::Chern { idempotent, k } => ("chern", cmd_chern(cfg, idempotent, *k)),
        Command::Pair {
            cocycle,
            idempotent,
            report,
        } => ("pair", cmd_pair(cfg, cocycle, idempotent, *report)),
        Command::Cohomology {
            cutoff,
            identity_action,
        } => ("cohomology", cmd_cohomology(cfg, *cutoff, *identity_action)),
        Command::Verify => ("verify", cmd_verify(cfg)),
    };
    let outcome = result.and_then(|body| emit(cfg, name, body));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(report)) => {
            let _ = emit(cfg, name, report);
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Compute(e @ Error::BackendMismatch)) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(4)
        }
    }
}
