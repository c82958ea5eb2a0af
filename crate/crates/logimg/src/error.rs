use std::io;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric input was NaN or infinite.
    #[error("non-finite {0}")]
    NonFinite(&'static str),

    /// Algorithm B requires a global mean with nonzero norm; a translation
    /// proportional to the cube centre is undefined.
    #[error("zero mean norm")]
    ZeroMeanNorm,

    /// The least-squares normal equations are degenerate. Happens when the
    /// two column vectors of the design matrix are collinear, e.g. for
    /// constant images.
    #[error("singular system")]
    SingularSystem,

    /// Zero-width or zero-height raster.
    #[error("dimension zero: image must contain at least one pixel")]
    EmptyImage,

    /// Pixel buffer does not match the stated dimensions.
    #[error("pixel count {got} does not match {width}x{height}")]
    PixelCount {
        width: u32,
        height: u32,
        got: usize,
    },

    /// Two images must share dimensions for pointwise operations.
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(u32, u32, u32, u32),

    /// Channel statistics must satisfy v1 <= v0 <= v2 per channel.
    #[error("invalid statistics: per-channel means must satisfy v1 <= v0 <= v2")]
    InvalidStats,

    /// Undecodable image data (bad header, truncated pixel payload, ...).
    #[error("corrupt input: {0}")]
    CorruptInput(String),

    /// Recognized but unsupported file content.
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
