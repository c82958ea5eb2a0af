//! Affine enhancement in the logarithmic colour space.
//!
//! An enhancement is `t(f) = alpha * f (+) beta * k` for a constant colour
//! `k`, applied pixelwise with the cube operations. The pair (alpha, beta)
//! is fitted so that the image statistics land on fixed targets: the global
//! mean should move to the cube centre while the below-mean and above-mean
//! averages move to -0.5 and +0.5 per channel. Writing those wishes down
//! gives nine scalar equations in two unknowns (three colour rows, three
//! channels each); the fit minimizes the squared residual in phi
//! coordinates, where every equation is linear.
//!
//! Two choices of `k` are provided:
//!
//! * algorithm A, a constant translation along the gray diagonal
//!   `(tanh 1, tanh 1, tanh 1)`;
//! * algorithm B, a translation proportional to the image mean `v0`
//!   (which therefore needs `|v0| > 0`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::logspace::{ColorVec, LogScalar};
use crate::raster::stats::{compute_stats, ImageStats};
use crate::raster::RasterImage;

/// Norm below which the global mean counts as the cube centre and
/// algorithm B is refused.
pub const ZERO_MEAN_TOLERANCE: f64 = 1e-9;

/// Relative tolerance on the normal-equation determinant. The determinant
/// is a Gram determinant, zero exactly when the two phi-coordinate columns
/// are collinear.
pub const SINGULARITY_TOLERANCE: f64 = 1e-12;

/// Translation direction of algorithm A: the gray diagonal whose phi
/// coordinates are (1, 1, 1).
pub fn unit_gray() -> ColorVec {
    ColorVec::splat(LogScalar::clamped(1f64.tanh()))
}

/// Where the global mean should land: the cube centre.
pub fn mean_target() -> ColorVec {
    ColorVec::ZERO
}

/// Where the below-mean averages should land.
pub fn lower_target() -> ColorVec {
    ColorVec::splat(LogScalar::clamped(-0.5))
}

/// Where the above-mean averages should land.
pub fn upper_target() -> ColorVec {
    ColorVec::splat(LogScalar::clamped(0.5))
}

/// The two automatic parameter fits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Constant translation along the gray diagonal (`k = unit_gray()`).
    A,
    /// Translation proportional to the image mean (`k = v0`).
    B,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::A => write!(f, "A"),
            Algorithm::B => write!(f, "B"),
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Algorithm, String> {
        match s {
            "A" | "a" => Ok(Algorithm::A),
            "B" | "b" => Ok(Algorithm::B),
            other => Err(format!("unknown algorithm '{other}' (expected A or B)")),
        }
    }
}

/// The parameters of one affine enhancement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineParams {
    pub alpha: f64,
    pub beta: f64,
    pub k: ColorVec,
}

impl AffineParams {
    /// Validate user-supplied parameters: both multipliers must be finite.
    pub fn new(alpha: f64, beta: f64, k: ColorVec) -> Result<AffineParams> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if !beta.is_finite() {
            return Err(Error::NonFinite("beta"));
        }
        Ok(AffineParams { alpha, beta, k })
    }
}

/// One colour row of an overdetermined system: in phi coordinates it
/// expands to the three scalar equations
/// `alpha * phi(stat_i) + beta * phi(direction_i) = phi(target_i)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LsqRow {
    /// Vector multiplied by alpha (an image statistic).
    pub stat: ColorVec,
    /// Vector multiplied by beta (the translation direction, or the centre
    /// for rows without a translation term).
    pub direction: ColorVec,
    /// Desired position.
    pub target: ColorVec,
}

/// An overdetermined linear system in (alpha, beta).
#[derive(Clone, Debug, PartialEq)]
pub struct LsqSystem {
    rows: Vec<LsqRow>,
}

impl LsqSystem {
    /// At least one colour row (three scalar equations) is required.
    pub fn new(rows: Vec<LsqRow>) -> Result<LsqSystem> {
        if rows.is_empty() {
            return Err(Error::InvalidStats);
        }
        Ok(LsqSystem { rows })
    }

    pub fn rows(&self) -> &[LsqRow] {
        &self.rows
    }

    /// The five sums defining the 2x2 normal equations.
    ///
    /// Accumulation runs channel-major so that, per channel, terms from
    /// opposite targets cancel exactly: the systems built here always have
    /// `c_uw == 0.0` bit for bit.
    pub fn normal_scalars(&self) -> NormalScalars {
        let mut s = NormalScalars {
            c_vv: 0.0,
            c_uu: 0.0,
            c_vu: 0.0,
            c_vw: 0.0,
            c_uw: 0.0,
        };
        for ch in 0..3 {
            for row in &self.rows {
                let p = row.stat.channels()[ch].phi();
                let q = row.direction.channels()[ch].phi();
                let t = row.target.channels()[ch].phi();
                s.c_vv += p * p;
                s.c_uu += q * q;
                s.c_vu += p * q;
                s.c_vw += p * t;
                s.c_uw += q * t;
            }
        }
        s
    }

    /// Flatten to scalar equations `alpha * p + beta * q = t` in phi
    /// coordinates.
    pub fn scalar_equations(&self) -> Vec<(f64, f64, f64)> {
        let mut eqs = Vec::with_capacity(3 * self.rows.len());
        for ch in 0..3 {
            for row in &self.rows {
                eqs.push((
                    row.stat.channels()[ch].phi(),
                    row.direction.channels()[ch].phi(),
                    row.target.channels()[ch].phi(),
                ));
            }
        }
        eqs
    }
}

/// Sums of products of the phi-coordinate columns (`v` the alpha column,
/// `u` the beta column, `w` the right-hand side).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalScalars {
    pub c_vv: f64,
    pub c_uu: f64,
    pub c_vu: f64,
    pub c_vw: f64,
    pub c_uw: f64,
}

impl NormalScalars {
    /// Gram determinant of the normal equations.
    pub fn determinant(&self) -> f64 {
        self.c_vv * self.c_uu - self.c_vu * self.c_vu
    }
}

/// System of algorithm A: the mean moves to the centre under a constant
/// translation, and the mean-relative offsets of the partition averages
/// stretch onto -0.5 and +0.5.
pub fn build_system_a(stats: &ImageStats) -> LsqSystem {
    LsqSystem {
        rows: vec![
            LsqRow {
                stat: stats.v0,
                direction: unit_gray(),
                target: mean_target(),
            },
            LsqRow {
                stat: stats.v1 - stats.v0,
                direction: ColorVec::ZERO,
                target: lower_target(),
            },
            LsqRow {
                stat: stats.v2 - stats.v0,
                direction: ColorVec::ZERO,
                target: upper_target(),
            },
        ],
    }
}

/// System of algorithm B: the translation direction is the mean itself,
/// so the mean must not sit at the cube centre.
pub fn build_system_b(stats: &ImageStats) -> Result<LsqSystem> {
    if stats.v0.norm() <= ZERO_MEAN_TOLERANCE {
        return Err(Error::ZeroMeanNorm);
    }
    Ok(LsqSystem {
        rows: vec![
            LsqRow {
                stat: stats.v0,
                direction: stats.v0,
                target: mean_target(),
            },
            LsqRow {
                stat: stats.v1,
                direction: stats.v0,
                target: lower_target(),
            },
            LsqRow {
                stat: stats.v2,
                direction: stats.v0,
                target: upper_target(),
            },
        ],
    })
}

/// Minimum-mean-square-error solution of the system: the (alpha, beta)
/// solving the 2x2 normal equations
///
/// ```text
/// | c_vv  c_vu | | alpha |   | c_vw |
/// | c_vu  c_uu | | beta  | = | c_uw |
/// ```
///
/// For the systems built by [`build_system_a`]/[`build_system_b`] the
/// cross term `c_uw` vanishes and this reduces to
/// `alpha = c_vw * c_uu / det`, `beta = -c_vw * c_vu / det`.
pub fn solve_mmse(system: &LsqSystem) -> Result<(f64, f64)> {
    let s = system.normal_scalars();
    let det = s.determinant();
    if det.abs() <= SINGULARITY_TOLERANCE * (s.c_vv * s.c_uu).max(1.0) {
        return Err(Error::SingularSystem);
    }
    let alpha = (s.c_vw * s.c_uu - s.c_uw * s.c_vu) / det;
    let beta = (s.c_uw * s.c_vv - s.c_vw * s.c_vu) / det;
    Ok((alpha, beta))
}

/// Fit the parameters of one algorithm from precomputed statistics.
pub fn fit_params(stats: &ImageStats, algorithm: Algorithm) -> Result<AffineParams> {
    let (system, k) = match algorithm {
        Algorithm::A => (build_system_a(stats), unit_gray()),
        Algorithm::B => (build_system_b(stats)?, stats.v0),
    };
    let (alpha, beta) = solve_mmse(&system)?;
    Ok(AffineParams { alpha, beta, k })
}

/// Apply `t(f) = alpha * f (+) beta * k` pixelwise. The constant term
/// `beta * k` is evaluated once.
pub fn apply_affine(image: &RasterImage, params: &AffineParams) -> RasterImage {
    let shift = params.k.scale(params.beta);
    let alpha = params.alpha;
    image.map_pixels(move |px| px.scale(alpha) + shift)
}

/// Result of an automatic enhancement.
#[derive(Clone, Debug)]
pub struct Enhanced {
    pub image: RasterImage,
    pub params: AffineParams,
    pub stats: ImageStats,
}

/// Compute statistics, fit the chosen algorithm and apply it.
pub fn enhance_auto(image: &RasterImage, algorithm: Algorithm) -> Result<Enhanced> {
    let stats = compute_stats(image);
    let params = fit_params(&stats, algorithm)?;
    Ok(Enhanced {
        image: apply_affine(image, &params),
        params,
        stats,
    })
}

/// Brute-force verifier for [`solve_mmse`]: exhaustively scan the square
/// grid `[-h, h]^2` with the given step and return the (alpha, beta) grid
/// point minimizing the summed squared residual of the scalar equations.
///
/// Quadratic in the grid size and used only by the verification suites;
/// ties resolve to the smallest (beta, alpha) indices.
pub fn mmse_oracle(system: &LsqSystem, grid_halfwidth: f64, step: f64) -> (f64, f64) {
    assert!(grid_halfwidth > 0.0 && step > 0.0, "grid parameters must be positive");
    let eqs = system.scalar_equations();
    let count = (2.0 * grid_halfwidth / step).round() as usize + 1;
    let grid = |i: usize| -grid_halfwidth + i as f64 * step;
    let alphas: Vec<f64> = (0..count).map(grid).collect();

    let mut residuals = vec![0.0f64; count];
    let mut best = (f64::INFINITY, 0usize, 0usize); // (error, beta index, alpha index)
    for bi in 0..count {
        let beta = grid(bi);
        for (e, &(p, q, t)) in eqs.iter().enumerate() {
            let d = beta * q - t;
            if e == 0 {
                for (res, &a) in residuals.iter_mut().zip(&alphas) {
                    let r = a * p + d;
                    *res = r * r;
                }
            } else {
                for (res, &a) in residuals.iter_mut().zip(&alphas) {
                    let r = a * p + d;
                    *res += r * r;
                }
            }
        }
        for (ai, &err) in residuals.iter().enumerate() {
            if err < best.0 {
                best = (err, bi, ai);
            }
        }
    }
    (grid(best.2), grid(best.1))
}
