//! F^(r) and L^(r) by recursion, explicit binomial sums and cyclotomic
//! evaluation (h_(n-1) at -zeta^j - zeta^-j gives F_n); r = 2 gives the classical sequences.

use symident::sequences::{
    cross_oracle_check, fib_cyclotomic, fib_explicit, fib_recurrence, lucas_recurrence,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in 1..=5 {
        let f = fib_recurrence(r, 12);
        let l = lucas_recurrence(r, 12);
        let fs: Vec<String> = (1..=12).map(|n| f.at(n).to_string()).collect();
        let ls: Vec<String> = (0..=12).map(|n| l.at(n).to_string()).collect();
        println!("r={r}  F: {}", fs.join(" "));
        println!("r={r}  L: {}", ls.join(" "));
    }

    let (r, n) = (4, 40);
    println!("F^(4)_40 explicit   = {}", fib_explicit(r, n)?);
    println!(
        "F^(4)_40 cyclotomic = {}",
        fib_cyclotomic(r, n as usize - 1)?
    );
    println!("{}", cross_oracle_check(6, 60)?);
    Ok(())
}
