//! Exact resultants and discriminants over `Z[x]` via the Sylvester matrix.
//!
//! The Sylvester matrix of `P` and `dP/dy` (both read as polynomials in `y`
//! with coefficients in `Z[x]`) has entries in `Z[x]`; its determinant is
//! evaluated fraction-free with the Bareiss algorithm, whose interior
//! divisions are exact in `Z[x]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntBiPoly, IntPoly};
use crate::error::{Error, Result};

/// Sylvester resultant of two polynomials in `y` with `IntPoly`
/// coefficients (`f[k]` = coefficient of `y^k`).
pub fn resultant(f: &[IntPoly], g: &[IntPoly]) -> IntPoly {
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 {
        return pow(&f[0], n);
    }
    if n == 0 {
        return pow(&g[0], m);
    }
    let size = m + n;
    let mut mat = vec![vec![IntPoly::zero(); size]; size];
    // n shifted rows of f's coefficients, high power first
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    // m shifted rows of g's coefficients
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant of a matrix over `Z[x]`.
fn bareiss_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign_flips = 0usize;
    let mut prev_pivot = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let pivot_row = match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => i,
                None => return IntPoly::zero(),
            };
            m.swap(k, pivot_row);
            sign_flips += 1;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&pivot).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev_pivot);
            }
            m[i][k] = IntPoly::zero();
        }
        prev_pivot = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flips % 2 == 0 {
        det
    } else {
        det.neg()
    }
}

fn pow(base: &IntPoly, e: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// `disc_y P = (-1)^{g(g-1)/2} res_y(P, dP/dy) / a_g(x)`, exactly.
///
/// Errors with [`Error::NotSquarefreeGenerically`] when the discriminant is
/// identically zero (a repeated `y`-factor of `P`).
pub fn disc_y(p: &IntBiPoly) -> Result<IntPoly> {
    let g = p.deg_y();
    assert!(g >= 1, "disc_y requires deg_y >= 1");
    let f = p.y_coeffs();
    let fy = p.partial_y().y_coeffs();
    let res = resultant(&f, &fy);
    if res.is_zero() {
        return Err(Error::NotSquarefreeGenerically);
    }
    let disc = res.exact_div(&p.leading_y_coeff());
    let sign = (g * (g - 1) / 2) % 2;
    if sign == 0 {
        Ok(disc)
    } else {
        Ok(disc.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt as B;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn resultant_of_linear_pair() {
        // res(x + 1, x + 2) over constant coefficients = -1
        let r = resultant(&[ip(&[1]), ip(&[1])], &[ip(&[2]), ip(&[1])]);
        assert_eq!(r, ip(&[-1]));
    }

    #[test]
    fn resultant_detects_common_root() {
        // (y + 1)^2 and (y + 1)(y + 2) share y = -1
        let f = [ip(&[1]), ip(&[2]), ip(&[1])];
        let g = [ip(&[2]), ip(&[3]), ip(&[1])];
        assert!(resultant(&f, &g).is_zero());
    }

    #[test]
    fn quadratic_disc_is_b2_minus_4ac() {
        // y^2 - x: a = 1, b = 0, c = -x -> disc = 4x
        let p = IntBiPoly::from_terms(&[(0, 2, 1), (1, 0, -1)]);
        assert_eq!(disc_y(&p).unwrap(), ip(&[0, 4]));
    }

    #[test]
    fn repeated_factor_reports_not_squarefree() {
        // (y - x)^2 = y^2 - 2xy + x^2
        let p = IntBiPoly::from_terms(&[(0, 2, 1), (1, 1, -2), (2, 0, 1)]);
        assert!(matches!(
            disc_y(&p),
            Err(Error::NotSquarefreeGenerically)
        ));
    }

    #[test]
    fn linear_in_y_disc_is_one() {
        let p = IntBiPoly::from_terms(&[(0, 1, 1), (1, 0, -2)]); // y - 2x
        assert_eq!(disc_y(&p).unwrap(), IntPoly::new(vec![B::from(1)]));
    }
}
