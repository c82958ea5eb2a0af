//! Compute the characteristic vectors of an image: the global channel
//! means (v0) and the means of the below-mean (v1) and above-mean (v2)
//! pixel sets, which drive both automatic enhancements.
//!
//! Run with: `cargo run --example image_statistics`

use logimg::cli::StatsReport;
use logimg::{compute_stats, RasterImage};

fn main() -> logimg::Result<()> {
    // A horizontal gradient with a dark bias, one colour cast per channel.
    let (w, h) = (64u32, 16u32);
    let mut codes = Vec::with_capacity((w * h * 3) as usize);
    for y in 0..h {
        for x in 0..w {
            codes.push((10 + x) as u8);
            codes.push((5 + x + y / 2) as u8);
            codes.push((30 + x / 2) as u8);
        }
    }
    let image = RasterImage::from_rgb8(w, h, &codes)?;

    let stats = compute_stats(&image);
    println!("{}x{} image, {} pixels", w, h, image.pixel_count());
    println!("v0 (global means)      = {:?}", stats.v0.values());
    println!("v1 (below-mean means)  = {:?}", stats.v1.values());
    println!("v2 (above-mean means)  = {:?}", stats.v2.values());
    println!("lower / upper counts   = {:?} / {:?}", stats.lower_counts, stats.upper_counts);
    println!("|v0| in phi geometry   = {:.6}", stats.v0.norm());

    // The same numbers in the JSON wire format used by `logimg stats`,
    // including the parameter fits of both algorithms.
    println!("\nJSON report:\n{}", StatsReport::for_image(&image).to_json());
    Ok(())
}
