//! Apply hand-picked affine parameters instead of a fitted pair:
//! `t(f) = alpha (x) f (+) beta (x) k` pixelwise in the cube algebra.
//!
//! Run with: `cargo run --example manual_affine`

use logimg::{apply_affine, save_image, AffineParams, ColorVec, LogScalar, RasterImage};

fn main() -> logimg::Result<()> {
    let codes: Vec<u8> = (0..32 * 32 * 3).map(|i| (i * 13 % 200) as u8).collect();
    let image = RasterImage::from_rgb8(32, 32, &codes)?;

    let out_dir = std::env::temp_dir().join("logimg-examples");
    std::fs::create_dir_all(&out_dir)?;

    // alpha = 1, beta = 0: the identity.
    let identity = AffineParams::new(1.0, 0.0, ColorVec::ZERO)?;
    let same = apply_affine(&image, &identity);
    assert_eq!(same.to_rgb8(), image.to_rgb8());
    println!("(1, 0, any k)  is the identity: pixel codes unchanged");

    // alpha = -1, beta = 0: inversion about the cube centre.
    let invert = AffineParams::new(-1.0, 0.0, ColorVec::ZERO)?;
    let negative = apply_affine(&image, &invert);
    assert_eq!(negative.to_rgb8()[0], 255 - image.to_rgb8()[0]);
    save_image(&negative, out_dir.join("manual_negative.png"))?;
    println!("(-1, 0, any k) inverts every channel: code c -> 255 - c");

    // A gentle contrast boost with a warm push.
    let warm = AffineParams::new(1.3, 0.25, ColorVec::from_values(0.7, 0.2, -0.3)?)?;
    let boosted = apply_affine(&image, &warm);
    save_image(&boosted, out_dir.join("manual_warm.png"))?;
    println!(
        "(1.3, 0.25, (0.7, 0.2, -0.3)) boosts contrast and warms the cast"
    );

    // Strong parameters cannot push values out of the cube.
    let extreme = AffineParams::new(40.0, -12.0, ColorVec::splat(LogScalar::new(0.9)?))?;
    let crushed = apply_affine(&image, &extreme);
    let max_abs = crushed
        .pixels()
        .iter()
        .flat_map(|p| p.values())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    println!("(40, -12, 0.9^3) saturates hard; max |channel| = {max_abs} < 1");

    println!("outputs in {}", out_dir.display());
    Ok(())
}
