//! Colour image enhancement in a bounded logarithmic colour space.
//!
//! Colours live in the open cube (-1, 1)^3 equipped with a logarithmic
//! addition and real scalar multiplication that keep every result inside
//! the cube. Under the channelwise `atanh` map the cube becomes an
//! ordinary Euclidean space, which makes least-squares fitting of
//! enhancement transforms a 2x2 linear problem.
//!
//! The enhancement itself is affine: `t(f) = alpha * f (+) beta * k` for a
//! constant colour `k`. Two automatic fits are provided, differing in `k`:
//! algorithm A translates along a fixed gray diagonal, algorithm B along
//! the image mean. Both choose (alpha, beta) so that the image's global
//! mean moves to the cube centre while the below-mean and above-mean
//! channel averages spread towards -0.5 and +0.5, solved in the
//! minimum-mean-square-error sense.
//!
//! ```
//! use logimg::{enhance_auto, Algorithm, RasterImage};
//!
//! // A small dark image: codes near the bottom of the 8-bit range.
//! let img = RasterImage::from_rgb8(2, 2, &[
//!     10, 12, 20, 35, 30, 25, 18, 40, 22, 60, 45, 38,
//! ]).unwrap();
//! let enhanced = enhance_auto(&img, Algorithm::A).unwrap();
//! assert!(enhanced.params.alpha > 0.0);
//! // The enhanced mean sits closer to the cube centre than the original.
//! assert!(enhanced.stats.v0.norm() > logimg::compute_stats(&enhanced.image).v0.norm());
//! ```
//!
//! The `logimg` binary exposes the same functionality as `enhance`,
//! `stats`, `report` and `verify` subcommands; the crate's `examples/`
//! directory walks through each capability.

pub mod cli;
pub mod enhance;
mod error;
pub mod logspace;
pub mod raster;
pub mod reference;
pub mod verify;

pub use enhance::{
    apply_affine, build_system_a, build_system_b, enhance_auto, fit_params, mmse_oracle,
    solve_mmse, AffineParams, Algorithm, Enhanced, LsqRow, LsqSystem, NormalScalars,
};
pub use error::{Error, Result};
pub use logspace::{ColorVec, LogScalar, PhiVec, DOMAIN_MARGIN};
pub use raster::codec::{decode_channel, encode_channel};
pub use raster::io::{load_image, save_image};
pub use raster::stats::{channel_histograms, compute_stats, ImageStats};
pub use raster::RasterImage;
