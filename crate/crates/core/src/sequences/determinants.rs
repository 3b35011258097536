//! Determinant formulas for `F`, `L` and `C`.

use num_traits::{One, Zero};

use super::{c_coeff, fib_recurrence, lucas_recurrence, sign, CCoeff};
use crate::combinat::factorial;
use crate::cyclotomic::{as_integer, is_prime, real_conjugates, CycInt};
use crate::error::{Error, Result};
use crate::exactalg::{bareiss_determinant, determinant, Int, Ring};
use crate::identities::{run_check, CheckReport, Counterexample};

fn square(n: usize, entry: impl Fn(usize, usize) -> Int) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect()
}

/// Lower Hessenberg matrix with `a_(i-j+1)` on and below the diagonal
/// (first column optionally weighted by `i+1`) and `sup(i)` above it.
fn hessenberg(
    n: usize,
    a: impl Fn(i64) -> Int,
    weighted: bool,
    sup: impl Fn(usize) -> Int,
) -> Vec<Vec<Int>> {
    square(n, |i, j| {
        if j == i + 1 {
            sup(i)
        } else if j > i + 1 {
            Int::zero()
        } else {
            let v = a((i - j + 1) as i64);
            if weighted && j == 0 {
                v * (i + 1)
            } else {
                v
            }
        }
    })
}

/// `det(C_(1-i+j))` and the weighted `C`-Hessenberg determinant, which give
/// `F_(n+1)` and `L_n`.
pub(crate) fn c_routes(cc: &CCoeff, n: usize) -> (Int, Int) {
    let toeplitz = bareiss_determinant(square(n, |i, j| cc.get(1 - i as i64 + j as i64)));
    let l = bareiss_determinant(hessenberg(n, |k| cc.get(k), true, |_| Int::one()));
    (toeplitz, l)
}

/// The matrix with first row `alpha_j^(n+r-1)` and then rows `alpha_j^(r-2), ..., 1`,
/// over the real conjugates `alpha_j = -zeta^(r+1-j) - zeta^-(r+1-j)`.
pub fn vandermonde_numerator(r: usize, n: usize) -> CycInt {
    let alpha = real_conjugates(r);
    let rows: Vec<Vec<CycInt>> = (0..r)
        .map(|i| {
            let e = if i == 0 { n + r - 1 } else { r - 1 - i };
            alpha.iter().map(|a| a.pow(e as u32)).collect()
        })
        .collect();
    determinant(&rows, &alpha[0].one_like())
}

/// All seven determinant formulas for `1 <= n <= n_max`. The alternant quotient
/// is checked cleared of its denominator: `det(N_n) = F_(n+1) det(V)` with `V`
/// the conjugate Vandermonde matrix.
pub fn determinant_formulas_check(r: usize, n_max: usize) -> Result<CheckReport> {
    if r == 0 || n_max == 0 {
        return Err(Error::Domain(
            "determinant formulas need r >= 1 and n_max >= 1".into(),
        ));
    }
    Ok(run_check(
        "determinant_formulas",
        &[("r", r as i64), ("n_max", n_max as i64)],
        || {
            let f = fib_recurrence(r, n_max as i64 + 2);
            let l = lucas_recurrence(r, n_max as i64);
            let cc = c_coeff(r);
            let vandermonde = vandermonde_numerator(r, 0);
            let big = |x: &Int| x.clone();
            for n in 1..=n_max {
                let ni = n as i64;
                let nf = factorial(n as u32);
                let (d1, d3) = c_routes(&cc, n);
                let d2 = bareiss_determinant(hessenberg(
                    n,
                    |k| l.at(k).clone(),
                    false,
                    |i| -Int::from(i + 1),
                ));
                let d4 = bareiss_determinant(hessenberg(n, |k| f.jt(k + 1), true, |_| f.jt(1)))
                    * sign(ni - 1);
                let d5 = bareiss_determinant(square(n, |i, j| f.jt(2 - i as i64 + j as i64)));
                let d6 = bareiss_determinant(hessenberg(
                    n,
                    |k| l.at(k).clone(),
                    false,
                    |i| Int::from(i + 1),
                ));
                let checks: [(&str, Int, Int); 6] = [
                    ("C Toeplitz = F", d1, big(f.at(ni + 1))),
                    ("L Hessenberg = n! F", d2, f.at(ni + 1) * &nf),
                    ("weighted C Hessenberg = L", d3, big(l.at(ni))),
                    ("weighted F Hessenberg = L", d4, big(l.at(ni))),
                    ("F Toeplitz = C", d5, cc.get(ni)),
                    ("L Hessenberg = n! C", d6, cc.get(ni) * &nf),
                ];
                for (name, got, want) in checks {
                    if got != want {
                        return Ok(Some(Counterexample::new(
                            format!("{name}, n={n}"),
                            got,
                            want,
                        )));
                    }
                }
                let lhs = vandermonde_numerator(r, n);
                let rhs = vandermonde.scaled(f.at(ni + 1));
                if lhs != rhs {
                    return Ok(Some(Counterexample::new(
                        format!("alternant = F det(V), n={n}"),
                        lhs,
                        rhs,
                    )));
                }
            }
            Ok(None)
        },
    ))
}

/// For prime `p = 2r+1`: `det(V)^2 = p^(r-1)` for the conjugate Vandermonde
/// matrix `V`, and `det(N_n) = F_(n+1) det(V)` for `1 <= n <= n_max`.
pub fn discriminant_check(r: usize, n_max: usize) -> Result<CheckReport> {
    let p = 2 * r as u64 + 1;
    if r == 0 || !is_prime(p) {
        return Err(Error::Domain(format!(
            "discriminant check needs 2r+1 prime, got {p}"
        )));
    }
    Ok(run_check(
        "discriminant",
        &[("r", r as i64), ("n_max", n_max as i64)],
        || {
            let v = vandermonde_numerator(r, 0);
            let square = as_integer(&v.times(&v))?;
            let want = Ring::pow(&Int::from(p), r as u32 - 1);
            if square != want {
                return Ok(Some(Counterexample::new("det(V)^2", square, want)));
            }
            let f = fib_recurrence(r, n_max as i64 + 1);
            Ok((1..=n_max).find_map(|n| {
                let lhs = vandermonde_numerator(r, n);
                let rhs = v.scaled(f.at(n as i64 + 1));
                (lhs != rhs).then(|| Counterexample::new(format!("det(N_{n})"), lhs, rhs))
            }))
        },
    ))
}
