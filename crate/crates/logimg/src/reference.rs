//! Regression fixtures: channel statistics of four classic colour test
//! images together with the enhancement parameters they determine.
//!
//! The statistics are reported at three decimals. The expected parameter
//! pairs were recomputed from those statistics with an independent
//! implementation of the normal equations and are frozen here at full
//! precision; they serve as the ground truth for the solver regression in
//! `logimg verify` and in the test suites.

use crate::enhance::{build_system_a, build_system_b, LsqSystem};
use crate::error::Result;
use crate::logspace::ColorVec;
use crate::raster::stats::ImageStats;

/// One fixture: per-channel means and the parameters both algorithms
/// should fit from them.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceCase {
    pub name: &'static str,
    /// Global channel means (r, g, b).
    pub v0: [f64; 3],
    /// Means of the below-mean pixel sets.
    pub v1: [f64; 3],
    /// Means of the above-mean pixel sets.
    pub v2: [f64; 3],
    /// Expected (alpha, beta) for algorithm A.
    pub params_a: (f64, f64),
    /// Expected (alpha, beta) for algorithm B.
    pub params_b: (f64, f64),
}

impl ReferenceCase {
    pub fn stats(&self) -> ImageStats {
        let vec = |m: [f64; 3]| {
            ColorVec::from_values(m[0], m[1], m[2]).expect("fixture means are interior")
        };
        ImageStats::from_means(vec(self.v0), vec(self.v1), vec(self.v2))
            .expect("fixture means are ordered")
    }

    pub fn system_a(&self) -> LsqSystem {
        build_system_a(&self.stats())
    }

    pub fn system_b(&self) -> Result<LsqSystem> {
        build_system_b(&self.stats())
    }
}

/// The four reference cases.
pub fn cases() -> [ReferenceCase; 4] {
    [
        ReferenceCase {
            name: "couple",
            v0: [-0.705, -0.784, -0.784],
            v1: [-0.868, -0.883, -0.873],
            v2: [-0.471, -0.567, -0.612],
            params_a: (1.435745368253, 1.430245229778),
            params_b: (1.473965963324, -1.462787587200),
        },
        ReferenceCase {
            name: "fruit",
            v0: [-0.187, -0.388, -0.586],
            v1: [-0.549, -0.710, -0.785],
            v2: [0.359, 0.079, -0.263],
            params_a: (1.080476881319, 0.457481938051),
            params_b: (1.179660068724, -1.155124666609),
        },
        ReferenceCase {
            name: "kidsat3",
            v0: [-0.694, -0.727, -0.580],
            v1: [-0.868, -0.846, -0.714],
            v2: [-0.347, -0.515, -0.459],
            params_a: (1.381745114120, 1.124016827204),
            params_b: (1.446937103037, -1.445152957999),
        },
        ReferenceCase {
            name: "boat",
            v0: [-0.194, -0.323, -0.338],
            v1: [-0.557, -0.675, -0.676],
            v2: [-0.001, -0.119, -0.107],
            params_a: (1.399705340352, 0.412127403860),
            params_b: (1.536174327146, -1.939041050401),
        },
    ]
}
