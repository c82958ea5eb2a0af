//! Automatic enhancement of a dark image with both parameter fits:
//! algorithm A (constant translation along the gray diagonal) and
//! algorithm B (translation proportional to the image mean).
//!
//! Run with: `cargo run --example enhance_auto`

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use logimg::{compute_stats, enhance_auto, save_image, Algorithm, RasterImage};

fn main() -> logimg::Result<()> {
    // A noisy, badly underexposed image.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (w, h) = (96u32, 64u32);
    let codes: Vec<u8> = (0..(w * h) as usize)
        .flat_map(|i| {
            let base = 8 + (i % w as usize) / 4;
            [
                (base as u8).saturating_add(rng.gen_range(0..25)),
                (base as u8).saturating_add(rng.gen_range(0..18)),
                (base as u8).saturating_add(rng.gen_range(0..12)),
            ]
        })
        .collect();
    let image = RasterImage::from_rgb8(w, h, &codes)?;

    let out_dir = std::env::temp_dir().join("logimg-examples");
    std::fs::create_dir_all(&out_dir)?;
    save_image(&image, out_dir.join("dark_original.png"))?;

    let before = compute_stats(&image);
    println!("original: v0 = {:?}  |v0| = {:.4}", before.v0.values(), before.v0.norm());

    for algorithm in [Algorithm::A, Algorithm::B] {
        let enhanced = enhance_auto(&image, algorithm)?;
        let after = compute_stats(&enhanced.image);
        let path = out_dir.join(format!("dark_enhanced_{algorithm}.png"));
        save_image(&enhanced.image, &path)?;
        println!(
            "\nalgorithm {algorithm}: alpha = {:.4}, beta = {:.4}, k = {:?}",
            enhanced.params.alpha,
            enhanced.params.beta,
            enhanced.params.k.values().map(|v| (v * 1000.0).round() / 1000.0),
        );
        println!("  mean norm {:.4} -> {:.4} (pulled towards the centre)", before.v0.norm(), after.v0.norm());
        for ch in 0..3 {
            println!(
                "  channel {ch}: spread v2-v1 {:.4} -> {:.4}",
                before.v2.values()[ch] - before.v1.values()[ch],
                after.v2.values()[ch] - after.v1.values()[ch],
            );
        }
        println!("  wrote {}", path.display());
    }
    Ok(())
}
