//! Determinant formulas linking F^(r), L^(r) and the coefficients C^(r)_n of
//! the recursion, and the squared conjugate Vandermonde.

use symident::cyclotomic::{as_integer, conjugate_vandermonde};
use symident::exactalg::Ring;
use symident::sequences::{c_coeff, determinant_formulas_check, discriminant_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = c_coeff(4);
    let shown: Vec<String> = c.values().iter().map(ToString::to_string).collect();
    println!("C^(4) = ({})", shown.join(", "));

    for r in 1..=4 {
        println!("{}", determinant_formulas_check(r, 8)?);
    }
    for r in [1, 2, 3, 5] {
        let v = conjugate_vandermonde(r);
        println!("r={r}: det(V)^2 = {}", as_integer(&v.times(&v))?);
        println!("{}", discriminant_check(r, 6)?);
    }
    Ok(())
}
