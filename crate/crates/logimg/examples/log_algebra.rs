//! Tour of the bounded colour algebra: addition and scaling that can never
//! leave the open cube, and the atanh coordinates where they turn into
//! ordinary linear algebra.
//!
//! Run with: `cargo run --example log_algebra`

use logimg::{ColorVec, LogScalar};

fn main() -> logimg::Result<()> {
    let a = LogScalar::new(0.5)?;
    let b = LogScalar::new(0.8)?;

    println!("bounded addition:");
    println!("  0.5 (+) 0.5       = {:.6}", (a + a).value());
    println!("  0.8 (+) 0.8       = {:.6}", (b + b).value());
    println!("  0.999 (+) 0.999   = {:.12}", (LogScalar::new(0.999)? + LogScalar::new(0.999)?).value());
    println!("  (stays inside the interval no matter how often you add)");

    println!("\nscalar multiplication:");
    println!("  2.0 (x) 0.5       = {:.6}   (same as 0.5 (+) 0.5)", a.scale(2.0).value());
    println!("  0.5 (x) 0.8       = {:.6}", b.scale(0.5).value());
    println!("  1000 (x) 0.5      = {:.12} (saturates, still finite)", a.scale(1000.0).value());

    println!("\nthe atanh transport:");
    println!("  phi(0.5)          = {:.6}", a.phi());
    println!("  phi(0.5 (+) 0.5)  = {:.6}", (a + a).phi());
    println!("  phi(0.5)+phi(0.5) = {:.6}   (addition becomes +)", a.phi() + a.phi());

    let u = ColorVec::from_values(0.3, -0.2, 0.7)?;
    let v = ColorVec::from_values(-0.5, 0.1, 0.4)?;
    println!("\nvectors in the cube:");
    println!("  u                 = {:?}", u.values());
    println!("  v                 = {:?}", v.values());
    println!("  u (+) v           = {:?}", (u + v).values());
    println!("  (u (+) v) (-) v   = {:?}  (recovers u)", ((u + v) - v).values());
    println!("  <u, v>            = {:.6}", u.dot(v));
    println!("  |u|               = {:.6}", u.norm());
    println!("  |2 (x) u|         = {:.6}   (= 2 |u|)", u.scale(2.0).norm());

    // Cauchy-Schwarz in the logarithmic geometry.
    println!("\n  |<u,v>| <= |u||v|:  {:.6} <= {:.6}", u.dot(v).abs(), u.norm() * v.norm());
    Ok(())
}
