//! Self-check suite behind `logimg verify`: seeded random sampling of the
//! algebra invariants plus the solver regression against the bundled
//! reference fixtures.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enhance::solve_mmse;
use crate::logspace::{ColorVec, LogScalar};
use crate::reference;

pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Absolute tolerance on the regression parameters, sized for fixture
/// statistics printed at three decimals.
pub const REGRESSION_TOLERANCE: f64 = 0.005;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

/// Run the axiom checks followed by the regression checks.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let mut outcomes = run_axiom_checks(config);
    outcomes.extend(run_regression_checks());
    outcomes
}

/// Sampled invariants of the interval/cube algebra, each reported with its
/// worst observed error.
pub fn run_axiom_checks(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut check = |name: &str, max_err: f64, limit: f64| {
        out.push(CheckOutcome {
            name: name.to_string(),
            passed: max_err <= limit,
            detail: format!("max error {max_err:.3e} (limit {limit:.1e})"),
        });
    };
    let tol = config.tolerance;

    // Each check draws from its own deterministic stream so that adding or
    // reordering checks does not shift the others' samples.
    let rng_for = |salt: u64| ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(salt));

    // Group axioms. Commutativity is exact because float add/mul commute;
    // associativity accumulates rounding.
    {
        let mut rng = rng_for(1);
        let mut worst = 0.0f64;
        for _ in 0..config.samples {
            let (a, b, c) = (scalar(&mut rng, 0.999), scalar(&mut rng, 0.999), scalar(&mut rng, 0.999));
            worst = worst.max(((a + b).value() - (b + a).value()).abs());
            worst = worst.max((((a + b) + c).value() - (a + (b + c)).value()).abs());
            worst = worst.max(((a + LogScalar::ZERO).value() - a.value()).abs());
            worst = worst.max((a + (-a)).value().abs());
        }
        check("group-axioms", worst, tol);
    }

    // The atanh transport: addition and scaling agree with their images
    // under phi.
    {
        let mut rng = rng_for(2);
        let mut worst = 0.0f64;
        for _ in 0..config.samples {
            let (a, b) = (scalar(&mut rng, 0.999), scalar(&mut rng, 0.999));
            let via_phi = LogScalar::phi_inv(a.phi() + b.phi()).expect("finite");
            worst = worst.max(((a + b).value() - via_phi.value()).abs());

            let lambda = rng.gen_range(-16.0..=16.0);
            let via_phi = LogScalar::phi_inv(lambda * a.phi()).expect("finite");
            worst = worst.max((a.scale(lambda).value() - via_phi.value()).abs());
        }
        check("phi-isomorphism", worst, tol);
    }

    // The tanh form of scaling against the explicit power-quotient form.
    {
        let mut rng = rng_for(3);
        let mut worst = 0.0f64;
        for _ in 0..config.samples {
            let a: f64 = rng.gen_range(-0.999..=0.999);
            let lambda = rng.gen_range(-8.0..=8.0);
            let up = (1.0 + a).powf(lambda);
            let down = (1.0 - a).powf(lambda);
            let power = (up - down) / (up + down);
            worst = worst.max((LogScalar::clamped(a).scale(lambda).value() - power).abs());
        }
        check("scale-power-form", worst, tol);
    }

    // Vector-space axioms. Multipliers and components are kept away from
    // the saturation zone where the clamp deliberately flattens results.
    {
        let mut rng = rng_for(4);
        let mut worst = 0.0f64;
        for _ in 0..config.samples {
            let u = color(&mut rng, 0.95);
            let v = color(&mut rng, 0.95);
            let lambda = rng.gen_range(-2.0..=2.0);
            let mu = rng.gen_range(-2.0..=2.0);

            worst = worst.max(max_delta((u + v).scale(lambda), u.scale(lambda) + v.scale(lambda)));
            worst = worst.max(max_delta(v.scale(lambda + mu), v.scale(lambda) + v.scale(mu)));
            worst = worst.max(max_delta(v.scale(lambda * mu), v.scale(mu).scale(lambda)));
            worst = worst.max(max_delta(v.scale(1.0), v));
        }
        check("vector-space-axioms", worst, tol);
    }

    // Norm homogeneity.
    {
        let mut rng = rng_for(5);
        let mut worst = 0.0f64;
        for _ in 0..config.samples {
            let v = color(&mut rng, 0.95);
            let lambda = rng.gen_range(-2.0..=2.0);
            worst = worst.max((v.scale(lambda).norm() - lambda.abs() * v.norm()).abs());
        }
        check("norm-homogeneity", worst, tol);
    }

    // Cauchy-Schwarz, with a small absolute slack for rounding.
    {
        let mut rng = rng_for(6);
        let mut worst = 0.0f64;
        let slack = tol / 1000.0;
        for _ in 0..config.samples {
            let u = color(&mut rng, 0.999);
            let v = color(&mut rng, 0.999);
            worst = worst.max(u.dot(v).abs() - u.norm() * v.norm() - slack);
        }
        check("cauchy-schwarz", worst.max(0.0), 0.0);
    }

    // Closure: results of every operation stay strictly inside the
    // interval, including saturating inputs.
    {
        let mut rng = rng_for(7);
        let mut violations = 0usize;
        for _ in 0..config.samples {
            let a = LogScalar::clamped(rng.gen_range(-1.0..=1.0));
            let b = LogScalar::clamped(rng.gen_range(-1.0..=1.0));
            let lambda = rng.gen_range(-64.0..=64.0);
            for r in [a + b, a - b, -a, a.scale(lambda)] {
                if !(r.value().is_finite() && r.value().abs() < 1.0) {
                    violations += 1;
                }
            }
        }
        check("closure", violations as f64, 0.0);
    }

    // Strict monotonicity of scaling (positive factor) and of addition in
    // its first argument.
    {
        let mut rng = rng_for(8);
        let mut violations = 0usize;
        for _ in 0..config.samples {
            let a = rng.gen_range(-0.95..=0.9499);
            let gap = rng.gen_range(1e-6..=0.05);
            let lambda = rng.gen_range(0.1..=4.0);
            if LogScalar::clamped(a).scale(lambda).value()
                >= LogScalar::clamped(a + gap).scale(lambda).value()
            {
                violations += 1;
            }
            let b = scalar(&mut rng, 0.95);
            if (LogScalar::clamped(a) + b).value() >= (LogScalar::clamped(a + gap) + b).value() {
                violations += 1;
            }
        }
        check("monotonicity", violations as f64, 0.0);
    }

    out
}

/// Solve both systems of every reference fixture and compare against the
/// frozen parameter pairs.
pub fn run_regression_checks() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for case in reference::cases() {
        let mut push = |algo: &str, solved: crate::error::Result<(f64, f64)>, expected: (f64, f64)| {
            let (passed, detail) = match solved {
                Ok((alpha, beta)) => {
                    let (da, db) = ((alpha - expected.0).abs(), (beta - expected.1).abs());
                    (
                        da <= REGRESSION_TOLERANCE && db <= REGRESSION_TOLERANCE,
                        format!(
                            "alpha {alpha:.6} beta {beta:.6} (expected {:.6}, {:.6})",
                            expected.0, expected.1
                        ),
                    )
                }
                Err(e) => (false, format!("solver failed: {e}")),
            };
            out.push(CheckOutcome {
                name: format!("regression {} {algo}", case.name),
                passed,
                detail,
            });
        };
        push("A", solve_mmse(&case.system_a()), case.params_a);
        push(
            "B",
            case.system_b().and_then(|s| solve_mmse(&s)),
            case.params_b,
        );
    }
    out
}

fn scalar(rng: &mut ChaCha8Rng, limit: f64) -> LogScalar {
    LogScalar::clamped(rng.gen_range(-limit..=limit))
}

fn color(rng: &mut ChaCha8Rng, limit: f64) -> ColorVec {
    ColorVec::new(scalar(rng, limit), scalar(rng, limit), scalar(rng, limit))
}

fn max_delta(a: ColorVec, b: ColorVec) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
