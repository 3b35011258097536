//! Checks the second-kind identities at seeded random rational points, then
//! shows that the same seed reproduces the same points.

use symident::identities::{random_points, second_kind_suite, VerifyMode};
use symident::symfun::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::var("SYMIDENT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mode = VerifyMode::Random { trials: 3, seed };

    for family in Family::ALL {
        let reports = second_kind_suite(family, 5, 1..=10, mode)?;
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!(
            "second kind {family}, r = 5: {} checks, {failed} failed",
            reports.len()
        );
    }

    let a = random_points(seed, "demo", 1, 3);
    assert_eq!(a, random_points(seed, "demo", 1, 3));
    let shown: Vec<String> = a[0].iter().map(ToString::to_string).collect();
    println!("point for seed {seed}: ({})", shown.join(", "));
    Ok(())
}
