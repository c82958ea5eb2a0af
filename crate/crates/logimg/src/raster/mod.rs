//! Discrete colour images over a rectangular domain, with the channel
//! algebra lifted pointwise and a discrete L2 structure (pixel sums replace
//! integrals).

pub mod codec;
pub mod io;
pub mod stats;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::logspace::ColorVec;

/// Pixel count above which pointwise maps run on the rayon pool.
const PARALLEL_THRESHOLD: usize = 64 * 1024;

/// An 8-bit-per-channel colour image decoded into the open cube.
///
/// Pixels are stored row-major. An optional alpha plane is carried along
/// untouched so RGBA inputs survive a round trip.
#[derive(Clone, Debug, PartialEq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<ColorVec>,
    alpha: Option<Vec<u8>>,
    source_depth: u8,
}

impl RasterImage {
    /// Build an image from decoded pixels. The buffer length must equal
    /// `width * height` and both dimensions must be nonzero.
    pub fn new(width: u32, height: u32, pixels: Vec<ColorVec>) -> Result<RasterImage> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(Error::PixelCount {
                width,
                height,
                got: pixels.len(),
            });
        }
        Ok(RasterImage {
            width,
            height,
            pixels,
            alpha: None,
            source_depth: 8,
        })
    }

    /// Attach an alpha plane (one byte per pixel).
    pub fn with_alpha(mut self, alpha: Vec<u8>) -> Result<RasterImage> {
        if alpha.len() != self.pixel_count() {
            return Err(Error::PixelCount {
                width: self.width,
                height: self.height,
                got: alpha.len(),
            });
        }
        self.alpha = Some(alpha);
        Ok(self)
    }

    /// Decode interleaved 8-bit RGB data.
    pub fn from_rgb8(width: u32, height: u32, data: &[u8]) -> Result<RasterImage> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if data.len() != width as usize * height as usize * 3 {
            return Err(Error::PixelCount {
                width,
                height,
                got: data.len() / 3,
            });
        }
        let pixels = data
            .chunks_exact(3)
            .map(|c| {
                ColorVec::new(
                    codec::decode_channel(c[0]),
                    codec::decode_channel(c[1]),
                    codec::decode_channel(c[2]),
                )
            })
            .collect();
        Self::new(width, height, pixels)
    }

    /// Decode interleaved 8-bit RGBA data, keeping the alpha plane.
    pub fn from_rgba8(width: u32, height: u32, data: &[u8]) -> Result<RasterImage> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if data.len() != width as usize * height as usize * 4 {
            return Err(Error::PixelCount {
                width,
                height,
                got: data.len() / 4,
            });
        }
        let mut pixels = Vec::with_capacity(data.len() / 4);
        let mut alpha = Vec::with_capacity(data.len() / 4);
        for c in data.chunks_exact(4) {
            pixels.push(ColorVec::new(
                codec::decode_channel(c[0]),
                codec::decode_channel(c[1]),
                codec::decode_channel(c[2]),
            ));
            alpha.push(c[3]);
        }
        Self::new(width, height, pixels)?.with_alpha(alpha)
    }

    /// Encode back to interleaved 8-bit RGB.
    pub fn to_rgb8(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.pixel_count() * 3);
        for px in &self.pixels {
            for c in px.channels() {
                out.push(codec::encode_channel(c));
            }
        }
        out
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn pixels(&self) -> &[ColorVec] {
        &self.pixels
    }

    pub fn alpha(&self) -> Option<&[u8]> {
        self.alpha.as_deref()
    }

    /// Bits per channel of the source data.
    pub fn source_depth(&self) -> u8 {
        self.source_depth
    }

    pub fn pixel(&self, x: u32, y: u32) -> ColorVec {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Apply `op` to every pixel, preserving dimensions and the alpha plane.
    /// Large images are mapped in parallel; because each output pixel
    /// depends only on its own input the result is identical either way.
    pub fn map_pixels<F>(&self, op: F) -> RasterImage
    where
        F: Fn(ColorVec) -> ColorVec + Sync,
    {
        self.map_pixels_with(op, self.pixel_count() >= PARALLEL_THRESHOLD)
    }

    /// [`RasterImage::map_pixels`] with an explicit parallelism switch.
    pub fn map_pixels_with<F>(&self, op: F, parallel: bool) -> RasterImage
    where
        F: Fn(ColorVec) -> ColorVec + Sync,
    {
        let pixels = if parallel {
            self.pixels.par_iter().map(|&px| op(px)).collect()
        } else {
            self.pixels.iter().map(|&px| op(px)).collect()
        };
        RasterImage {
            width: self.width,
            height: self.height,
            pixels,
            alpha: self.alpha.clone(),
            source_depth: self.source_depth,
        }
    }

    /// Discrete L2 scalar product: the sum over all pixels of the
    /// per-pixel colour dot product. Errors when dimensions differ.
    pub fn dot(&self, other: &RasterImage) -> Result<f64> {
        if (self.width, self.height) != (other.width, other.height) {
            return Err(Error::DimensionMismatch(
                self.width,
                self.height,
                other.width,
                other.height,
            ));
        }
        Ok(pairwise_sum_by(0, self.pixel_count(), &|i| {
            self.pixels[i].dot(other.pixels[i])
        }))
    }

    /// Discrete L2 norm: `sqrt(dot(self, self))`.
    pub fn norm(&self) -> f64 {
        self.dot(self).expect("same dimensions").sqrt()
    }
}

/// Pairwise (cascade) summation over `f(start..start+len)`.
///
/// The reduction tree depends only on `len`, so results are deterministic
/// and independent of any parallel context, while rounding error grows as
/// O(log n) instead of O(n).
pub(crate) fn pairwise_sum_by<F>(start: usize, len: usize, f: &F) -> f64
where
    F: Fn(usize) -> f64,
{
    if len <= 32 {
        let mut acc = 0.0;
        for i in start..start + len {
            acc += f(i);
        }
        acc
    } else {
        let half = len / 2;
        pairwise_sum_by(start, half, f) + pairwise_sum_by(start + half, len - half, f)
    }
}
