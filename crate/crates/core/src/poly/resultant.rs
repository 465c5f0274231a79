//! Resultants via Sylvester matrices and fraction-free elimination.

use crate::error::{Error, Result};
use crate::poly::multipoly::MultiPoly;

/// Res_var(f, g): determinant of the Sylvester matrix, f-rows first.
///
/// Sign convention: with this row order, Res(x−a, x−b) = a − b.
/// Computed by Bareiss fraction-free elimination, so every division is
/// exact over the coefficient ring.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let m = f.deg_in(var)? as usize;
    let n = g.deg_in(var)? as usize;
    if m == 0 {
        return Err(Error::ResultantDegree(var.into(), 0));
    }
    if n == 0 {
        return Err(Error::ResultantDegree(var.into(), 0));
    }
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let size = m + n;
    let zero = MultiPoly::zero(&vars);
    let mut a = vec![vec![zero.clone(); size]; size];
    let fc: Vec<MultiPoly> =
        (0..=m).map(|k| f.coeff_of(var, (m - k) as u32)).collect::<Result<_>>()?;
    let gc: Vec<MultiPoly> =
        (0..=n).map(|k| g.coeff_of(var, (n - k) as u32)).collect::<Result<_>>()?;
    for i in 0..n {
        for (k, c) in fc.iter().enumerate() {
            a[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().enumerate() {
            a[n + i][i + k] = c.clone();
        }
    }
    bareiss_det(a)
}

/// Fraction-free determinant of a matrix of polynomials.
fn bareiss_det(mut a: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let size = a.len();
    let vars: Vec<String> = a[0][0].vars().to_vec();
    let varrefs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let mut sign = false;
    let mut prev = MultiPoly::one(&varrefs);
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..size).find(|&i| !a[i][k].is_zero());
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(MultiPoly::zero(&varrefs)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = a[k][k].mul(&a[i][j])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = MultiPoly::zero(&varrefs);
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::parse_poly;

    #[test]
    fn resultant_linear_pair() {
        let v = ["x", "a", "b"];
        let f = parse_poly(&v, "x - a").unwrap();
        let g = parse_poly(&v, "x - b").unwrap();
        let r = resultant(&f, &g, "x").unwrap();
        assert_eq!(r, parse_poly(&v, "a - b").unwrap());
    }

    #[test]
    fn resultant_quadratic_example() {
        // Res_x(x²−1, x−2) = f(2) = 3
        let v = ["x"];
        let f = parse_poly(&v, "x^2 - 1").unwrap();
        let g = parse_poly(&v, "x - 2").unwrap();
        let r = resultant(&f, &g, "x").unwrap();
        assert_eq!(r, parse_poly(&v, "3").unwrap());
    }

    #[test]
    fn resultant_of_poly_with_itself_vanishes() {
        let v = ["x", "t"];
        let f = parse_poly(&v, "x^2 + t*x - 1").unwrap();
        assert!(resultant(&f, &f, "x").unwrap().is_zero());
    }

    #[test]
    fn resultant_detects_shared_factor() {
        let v = ["x", "y"];
        // (x − y)(x + 1) and (x − y)(x + 2) share x − y
        let f = parse_poly(&v, "x^2 + x - x*y - y").unwrap();
        let g = parse_poly(&v, "x^2 + 2*x - x*y - 2*y").unwrap();
        assert!(resultant(&f, &g, "x").unwrap().is_zero());
        // and a coprime pair does not vanish
        let h = parse_poly(&v, "x - 1").unwrap();
        assert!(!resultant(&f, &h, "x").unwrap().is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let v = ["x"];
        let f = parse_poly(&v, "x^2 - 1").unwrap();
        let g = parse_poly(&v, "5").unwrap();
        assert!(matches!(resultant(&f, &g, "x"), Err(Error::ResultantDegree(_, 0))));
    }
}
