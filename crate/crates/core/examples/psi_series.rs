//! The series psi(alpha; x) = sum_k c(alpha + 2k - 1, k) x^k and the
//! substitution Y = x psi(1; x^2) that inverts x = y / (1 + y^2).

use symident::combinat::psi_series;
use symident::identities::{psi_inverse_substitution, psi_power_law};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 8;
    println!("psi(1; x) = {}", psi_series(1, order)?);
    println!("psi(3; x) = {}", psi_series(3, order)?);

    println!("{}", psi_inverse_substitution(30));
    for n in 1..=4 {
        println!("{}", psi_power_law(n, 30));
    }
    Ok(())
}
