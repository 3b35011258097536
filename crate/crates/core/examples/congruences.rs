//! For p = 2r+1 prime and q = +-1 mod p, F^(r) and L^(r) repeat modulo q with
//! period dividing q - 1.

use symident::sequences::{congruence_check, fib_recurrence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = fib_recurrence(2, 30);
    let residues: Vec<String> = (1..=20).map(|n| (f.at(n) % 11u32).to_string()).collect();
    println!("F_n mod 11, n = 1..20: {}", residues.join(" "));

    for (r, q) in [(2, 11), (2, 19), (3, 13), (3, 29), (5, 23)] {
        println!("{}", congruence_check(r, q, 200)?);
    }

    match congruence_check(2, 13, 50) {
        Err(e) => println!("r=2, q=13 rejected: {e}"),
        Ok(rep) => println!("{rep}"),
    }
    Ok(())
}
