//! Per-channel 256-bin histograms before and after enhancement, in the
//! same CSV layout `logimg report` writes.
//!
//! Run with: `cargo run --example histogram_report`

use logimg::{channel_histograms, enhance_auto, Algorithm, RasterImage};

fn main() -> logimg::Result<()> {
    // Low-contrast image: codes pile up in a narrow dark band.
    let codes: Vec<u8> = (0..48 * 48 * 3).map(|i| 20 + (i % 61) as u8).collect();
    let image = RasterImage::from_rgb8(48, 48, &codes)?;

    let enhanced = enhance_auto(&image, Algorithm::A)?;
    let before = channel_histograms(&image);
    let after = channel_histograms(&enhanced.image);

    let out_dir = std::env::temp_dir().join("logimg-examples");
    std::fs::create_dir_all(&out_dir)?;
    let path = out_dir.join("histograms.csv");

    let mut csv = String::from("code,r_before,g_before,b_before,r_after,g_after,b_after\n");
    for code in 0..256 {
        csv.push_str(&format!(
            "{code},{},{},{},{},{},{}\n",
            before[0][code], before[1][code], before[2][code],
            after[0][code], after[1][code], after[2][code],
        ));
    }
    std::fs::write(&path, &csv)?;
    println!("wrote {}", path.display());

    // Where the mass sits before and after: the occupied code range.
    let occupied = |hist: &[[u64; 256]; 3]| {
        let lo = (0..256).find(|&c| (0..3).any(|ch| hist[ch][c] > 0)).unwrap();
        let hi = (0..256).rfind(|&c| (0..3).any(|ch| hist[ch][c] > 0)).unwrap();
        (lo, hi)
    };
    let (blo, bhi) = occupied(&before);
    let (alo, ahi) = occupied(&after);
    println!("occupied codes before: {blo}..={bhi}  (width {})", bhi - blo + 1);
    println!("occupied codes after:  {alo}..={ahi}  (width {})", ahi - alo + 1);
    println!(
        "fitted alpha = {:.4}, beta = {:.4}",
        enhanced.params.alpha, enhanced.params.beta
    );
    Ok(())
}
