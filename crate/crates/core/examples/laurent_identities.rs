//! Expands h_4 of (z1 + 1/z1, z2 + 1/z2) through the complete symmetric
//! polynomials of the four variables (z1, z2, 1/z1, 1/z2), symbolically.

use symident::exactalg::MultiLaurent;
use symident::identities::{first_kind_sides, SymValues};
use symident::symfun::{complete, Family, PointVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 2;
    let z: Vec<_> = (0..r).map(|i| MultiLaurent::var(r, i)).collect();
    let zinv: Vec<_> = (0..r).map(|i| MultiLaurent::var_pow(r, i, -1)).collect();
    let doubled = PointVector::doubled(&z, &zinv)?;
    let shifted = PointVector::shifted(&z, &zinv)?;

    println!("h_2(z, 1/z) = {}", complete(2, &doubled)?);

    let m = 4;
    let (expansion, target) = first_kind_sides(
        Family::H,
        r,
        m,
        &SymValues::new(&doubled, m),
        &SymValues::new(&shifted, m),
    );
    println!(
        "sum_k c(m+r-1,k) h_(m-2k)(z, 1/z) has {} terms",
        expansion.len()
    );
    println!("equal to h_{m}(z + 1/z): {}", expansion == target);
    Ok(())
}
