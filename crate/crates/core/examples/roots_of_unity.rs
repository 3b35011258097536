//! Symmetric polynomials at the doubled roots -zeta^(+-j) of unity of order
//! 2r+1, computed exactly in the cyclotomic integers.

use symident::cyclotomic::{as_integer, zeta_doubled_vector};
use symident::identities::doubled_root_check;
use symident::symfun::{complete_upto, elementary_upto};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 3;
    let v = zeta_doubled_vector(r);
    let e: Result<Vec<_>, _> = elementary_upto(2 * r + 2, &v)
        .iter()
        .map(as_integer)
        .collect();
    let h: Result<Vec<_>, _> = complete_upto(4 * r + 3, &v)
        .iter()
        .map(as_integer)
        .collect();
    let show = |v: Vec<symident::exactalg::Int>| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("e_n, n <= {}: {}", 2 * r + 2, show(e?));
    println!("h_n, n <= {}: {}", 4 * r + 3, show(h?));

    for r in 1..=5 {
        println!("{}", doubled_root_check(r, 6 * (2 * r + 1))?);
    }
    Ok(())
}
