//! e, h and p at (q^r, ..., q, q^-r, ..., q^-1) as Laurent polynomials in q,
//! compared with their q-binomial closed forms.

use symident::identities::{principal_spec, q_point};
use symident::symfun::{complete, elementary, Family, PointVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 2;
    let (z, zinv) = q_point(r);
    let v = PointVector::doubled(&z, &zinv)?;
    println!("e_2 = {}", elementary(2, &v));
    println!("h_2 = {}", complete(2, &v)?);

    for family in Family::ALL {
        for n in 1..=6 {
            let rep = principal_spec(family, r, n)?;
            assert!(rep.passed(), "{rep}");
        }
        println!("closed form for {family}_n, n <= 6: pass");
    }
    Ok(())
}
