//! Per-channel image statistics: the global mean and the means of the
//! below-mean and above-mean pixel sets, which drive both enhancement
//! algorithms.

use crate::error::{Error, Result};
use crate::logspace::{ColorVec, LogScalar};
use crate::raster::codec::encode_channel;
use crate::raster::{pairwise_sum_by, RasterImage};

/// The three characteristic vectors of an image plus the partition sizes.
///
/// Per channel `i`: `v0_i` is the arithmetic mean of the channel values (in
/// (-1, 1) coordinates), `v1_i` the mean over pixels with value `<= v0_i`
/// and `v2_i` the mean over pixels with value `>= v0_i`. Pixels exactly
/// equal to the mean belong to both sets, so per channel
/// `lower + upper >= pixel count`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImageStats {
    pub v0: ColorVec,
    pub v1: ColorVec,
    pub v2: ColorVec,
    /// Sizes of the below-or-equal-mean sets, per channel (r, g, b).
    pub lower_counts: [u64; 3],
    /// Sizes of the above-or-equal-mean sets, per channel (r, g, b).
    pub upper_counts: [u64; 3],
}

impl ImageStats {
    /// Assemble stats from externally known means (e.g. regression
    /// fixtures). Partition counts are unknown and recorded as zero.
    pub fn from_means(v0: ColorVec, v1: ColorVec, v2: ColorVec) -> Result<ImageStats> {
        let ordered = v1
            .values()
            .iter()
            .zip(v0.values())
            .zip(v2.values())
            .all(|((lo, mid), hi)| *lo <= mid && mid <= hi);
        if !ordered {
            return Err(Error::InvalidStats);
        }
        Ok(ImageStats {
            v0,
            v1,
            v2,
            lower_counts: [0; 3],
            upper_counts: [0; 3],
        })
    }
}

/// Compute [`ImageStats`] for an image.
///
/// Accumulation uses deterministic pairwise summation, and each mean is
/// clamped into the min/max hull of the values it averages so that
/// floating-point drift can never violate `v1 <= v0 <= v2` (and a constant
/// channel reports its value as all three means exactly).
pub fn compute_stats(image: &RasterImage) -> ImageStats {
    let n = image.pixel_count();
    let pixels = image.pixels();

    let mut means = [0.0f64; 3];
    let mut lower_means = [0.0f64; 3];
    let mut upper_means = [0.0f64; 3];
    let mut lower_counts = [0u64; 3];
    let mut upper_counts = [0u64; 3];

    for ch in 0..3 {
        let value = |i: usize| pixels[i].channels()[ch].value();

        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            lo = lo.min(value(i));
            hi = hi.max(value(i));
        }
        let mean = (pairwise_sum_by(0, n, &value) / n as f64).clamp(lo, hi);

        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for i in 0..n {
            let v = value(i);
            if v <= mean {
                lower.push(v);
            }
            if v >= mean {
                upper.push(v);
            }
        }
        // Both sets are nonempty: lo <= mean <= hi.
        let subset_mean = |vals: &[f64]| {
            let sum = pairwise_sum_by(0, vals.len(), &|i| vals[i]);
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for &v in vals {
                lo = lo.min(v);
                hi = hi.max(v);
            }
            (sum / vals.len() as f64).clamp(lo, hi)
        };

        means[ch] = mean;
        lower_means[ch] = subset_mean(&lower);
        upper_means[ch] = subset_mean(&upper);
        lower_counts[ch] = lower.len() as u64;
        upper_counts[ch] = upper.len() as u64;
    }

    let vec_of = |m: [f64; 3]| {
        ColorVec::new(
            LogScalar::new(m[0]).expect("mean of interior values is interior"),
            LogScalar::new(m[1]).expect("mean of interior values is interior"),
            LogScalar::new(m[2]).expect("mean of interior values is interior"),
        )
    };
    ImageStats {
        v0: vec_of(means),
        v1: vec_of(lower_means),
        v2: vec_of(upper_means),
        lower_counts,
        upper_counts,
    }
}

/// Per-channel 256-bin histograms of the encoded pixel codes,
/// indexed (r, g, b).
pub fn channel_histograms(image: &RasterImage) -> [[u64; 256]; 3] {
    let mut hist = [[0u64; 256]; 3];
    for px in image.pixels() {
        for (ch, c) in px.channels().iter().enumerate() {
            hist[ch][encode_channel(*c) as usize] += 1;
        }
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    fn img_from_reds(reds: &[f64]) -> RasterImage {
        let pixels = reds
            .iter()
            .map(|&r| ColorVec::from_values(r, 0.0, 0.0).unwrap())
            .collect();
        RasterImage::new(reds.len() as u32, 1, pixels).unwrap()
    }

    #[test]
    fn symmetric_pair() {
        let stats = compute_stats(&img_from_reds(&[-0.5, 0.5]));
        assert_eq!(stats.v0.r.value(), 0.0);
        assert_eq!(stats.v1.r.value(), -0.5);
        assert_eq!(stats.v2.r.value(), 0.5);
        assert_eq!(stats.lower_counts[0], 1);
        assert_eq!(stats.upper_counts[0], 1);
        // green and blue channels are constant zero: every pixel sits in
        // both partitions
        assert_eq!(stats.lower_counts[1], 2);
        assert_eq!(stats.upper_counts[1], 2);
    }

    #[test]
    fn constant_image_reports_its_value_everywhere() {
        let v = ColorVec::from_values(0.31, -0.62, 0.053).unwrap();
        let img = RasterImage::new(3, 5, vec![v; 15]).unwrap();
        let stats = compute_stats(&img);
        assert_eq!(stats.v0, v);
        assert_eq!(stats.v1, v);
        assert_eq!(stats.v2, v);
        assert_eq!(stats.lower_counts, [15; 3]);
        assert_eq!(stats.upper_counts, [15; 3]);
    }

    #[test]
    fn four_pixel_example() {
        let stats = compute_stats(&img_from_reds(&[-0.8, -0.4, 0.2, 0.6]));
        assert!((stats.v0.r.value() + 0.1).abs() < 1e-12);
        assert!((stats.v1.r.value() + 0.6).abs() < 1e-12);
        assert!((stats.v2.r.value() - 0.4).abs() < 1e-12);
        assert_eq!(stats.lower_counts[0] + stats.upper_counts[0], 4);
    }

    #[test]
    fn from_means_validates_ordering() {
        let lo = ColorVec::from_values(-0.5, -0.5, -0.5).unwrap();
        let mid = ColorVec::ZERO;
        let hi = ColorVec::from_values(0.5, 0.5, 0.5).unwrap();
        assert!(ImageStats::from_means(mid, lo, hi).is_ok());
        assert!(matches!(
            ImageStats::from_means(lo, mid, hi),
            Err(Error::InvalidStats)
        ));
    }

    #[test]
    fn histograms_count_every_pixel() {
        let img = RasterImage::from_rgb8(2, 2, &[0, 0, 0, 255, 255, 255, 10, 20, 30, 10, 20, 30])
            .unwrap();
        let hist = channel_histograms(&img);
        for ch in hist {
            assert_eq!(ch.iter().sum::<u64>(), 4);
        }
        assert_eq!(hist[0][10], 2);
        assert_eq!(hist[1][20], 2);
        assert_eq!(hist[2][30], 2);
    }

    fn arb_image() -> impl Strategy<Value = RasterImage> {
        (1usize..=48, proptest::collection::vec(-0.999f64..=0.999, 3 * 48))
            .prop_map(|(n, vals)| {
                let pixels = (0..n)
                    .map(|i| {
                        ColorVec::from_values(vals[3 * i], vals[3 * i + 1], vals[3 * i + 2])
                            .unwrap()
                    })
                    .collect();
                RasterImage::new(n as u32, 1, pixels).unwrap()
            })
    }

    proptest! {
        #[test]
        fn stats_invariants(img in arb_image()) {
            let n = img.pixel_count() as u64;
            let stats = compute_stats(&img);
            for ch in 0..3 {
                prop_assert!(stats.v1.channels()[ch] <= stats.v0.channels()[ch]);
                prop_assert!(stats.v0.channels()[ch] <= stats.v2.channels()[ch]);
                prop_assert!(stats.lower_counts[ch] + stats.upper_counts[ch] >= n);

                let value = |i: usize| img.pixels()[i].channels()[ch].value();
                let constant = (0..img.pixel_count()).all(|i| value(i) == value(0));
                if !constant {
                    prop_assert!(stats.v1.channels()[ch] < stats.v2.channels()[ch]);
                }
            }
        }

        #[test]
        fn monotone_map_keeps_mean_between_partition_means(img in arb_image()) {
            // The mean of a monotonically mapped channel stays between the
            // images of the partition means.
            let stats = compute_stats(&img);
            let mapped = compute_stats(&img.map_pixels(|px| px.scale(2.0)));
            for ch in 0..3 {
                let lo = stats.v1.channels()[ch].scale(2.0).value();
                let hi = stats.v2.channels()[ch].scale(2.0).value();
                let mid = mapped.v0.channels()[ch].value();
                prop_assert!(lo - 1e-9 <= mid && mid <= hi + 1e-9);
            }
        }
    }
}
