//! Exact and floating polynomial arithmetic.
//!
//! Three representations:
//! - [`IntBiPoly`]: bivariate integer polynomial as a dense coefficient
//!   matrix `c[j][k]` for the monomial `x^j y^k`, with arbitrary-precision
//!   entries,
//! - [`IntPoly`]: dense univariate integer polynomial,
//! - [`CPoly`]: dense univariate complex polynomial over a [`Real`] scalar,
//!   the target of evaluation and root finding.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

mod resultant;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default floor for `|a_g(x0)|` below which specialization reports
/// [`Error::DegenerateLeading`].
pub const DEGENERACY_FLOOR: f64 = 1e-12;

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, little-endian (index = power). Trimmed: the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("trimmed poly is nonempty")
    }

    /// True iff the coefficient vector is palindromic (`p(x) = x^d p(1/x)`).
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.deg() == 0 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Evaluate at a complex point, converting coefficients to the scalar.
    pub fn eval<F: Real>(&self, z: Complex<F>) -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex::new(bigint_to_real::<F>(c), F::zero());
        }
        acc
    }

    /// Lossy conversion to a complex floating polynomial.
    pub fn to_cpoly<F: Real>(&self) -> CPoly<F> {
        CPoly::new(
            self.coeffs
                .iter()
                .map(|c| Complex::new(bigint_to_real::<F>(c), F::zero()))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.deg() + other.deg() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division; panics if the divisor does not divide exactly.
    /// Used only where exactness is guaranteed algebraically (Bareiss
    /// elimination, discriminant normalization).
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        assert!(
            self.deg() >= divisor.deg(),
            "exact_div: degree of dividend below divisor"
        );
        let mut rem = self.coeffs.clone();
        let dd = divisor.deg();
        let lead = divisor.leading();
        let qdeg = self.deg() - dd;
        let mut q = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            assert!(r.is_zero(), "exact_div: leading coefficient does not divide");
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "exact_div: nonzero remainder"
        );
        IntPoly::new(q)
    }

    /// Greatest common divisor of the coefficients (positive; 0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Canonical form for comparisons up to unit and content: common
    /// monomial factor `x^k` stripped, divided by the content, leading
    /// coefficient made positive.
    pub fn normalized(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let shift = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero poly has a nonzero coefficient");
        let content = self.content();
        let mut coeffs: Vec<BigInt> = self.coeffs[shift..]
            .iter()
            .map(|c| c / &content)
            .collect();
        if coeffs.last().map_or(false, Signed::is_negative) {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(self.is_zero() && k == 0) {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one_abs() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

trait IsOneAbs {
    fn is_one_abs(&self) -> bool;
}
impl IsOneAbs for BigInt {
    fn is_one_abs(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

pub(crate) fn bigint_to_real<F: Real>(c: &BigInt) -> F {
    F::of(c.to_f64().unwrap_or(f64::INFINITY))
}

// ---------------------------------------------------------------------------
// IntBiPoly
// ---------------------------------------------------------------------------

/// Bivariate integer polynomial `P(x, y) = sum c[j][k] x^j y^k`, stored as a
/// rectangular coefficient matrix indexed `[power of x][power of y]`.
///
/// Trimmed: the last row and the last column each contain a nonzero entry
/// (unless the polynomial is zero, represented as a 1x1 zero matrix). The
/// last column is the leading `y`-coefficient `a_g(x)` of
/// `P = a_g(x) y^g + ... + a_0(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntBiPoly {
    rows: Vec<Vec<BigInt>>,
}

impl IntBiPoly {
    /// Build from rows indexed by x-power; ragged rows are padded.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
        let mut rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut r| {
                r.resize(width, BigInt::zero());
                r
            })
            .collect();
        if rows.is_empty() {
            rows.push(vec![BigInt::zero()]);
        }
        // trim zero rows from the top (x side)
        while rows.len() > 1 && rows.last().map_or(false, |r| r.iter().all(Zero::is_zero)) {
            rows.pop();
        }
        // trim zero columns from the right (y side)
        let mut width = rows[0].len();
        while width > 1 && rows.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for r in &mut rows {
            r.truncate(width);
        }
        IntBiPoly { rows }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    /// Build from sparse terms `(x_power, y_power, coefficient)`; repeated
    /// terms accumulate.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let dx = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let dy = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut rows = vec![vec![BigInt::zero(); dy + 1]; dx + 1];
        for &(j, k, c) in terms {
            rows[j][k] += BigInt::from(c);
        }
        Self::from_rows(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].len() == 1 && self.rows[0][0].is_zero()
    }

    pub fn deg_x(&self) -> usize {
        self.rows.len() - 1
    }

    /// Degree in `y` (the paper's `g`).
    pub fn deg_y(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn coeff(&self, x_pow: usize, y_pow: usize) -> BigInt {
        self.rows
            .get(x_pow)
            .and_then(|r| r.get(y_pow))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// The coefficient of `y^k` as a polynomial in `x`.
    pub fn y_coeff(&self, k: usize) -> IntPoly {
        IntPoly::new(self.rows.iter().map(|r| r[k].clone()).collect())
    }

    /// Leading `y`-coefficient `a_g(x)`.
    pub fn leading_y_coeff(&self) -> IntPoly {
        self.y_coeff(self.deg_y())
    }

    /// All `y`-coefficients `a_0(x) ..= a_g(x)`.
    pub fn y_coeffs(&self) -> Vec<IntPoly> {
        (0..=self.deg_y()).map(|k| self.y_coeff(k)).collect()
    }

    /// Coefficient columns converted to floating scalars, for quadrature
    /// inner loops: `out[k][j]` is the coefficient of `x^j` in `a_k(x)`.
    pub fn y_coeff_floats<F: Real>(&self) -> Vec<Vec<F>> {
        (0..=self.deg_y())
            .map(|k| self.rows.iter().map(|r| bigint_to_real::<F>(&r[k])).collect())
            .collect()
    }

    /// Substitute `y -> x^n`: returns `P(x, x^n)`. Colliding monomials are
    /// summed. For `n > deg_x` the degree is exactly `deg(a_g) + n*deg_y`.
    pub fn substitute_y_xn(&self, n: usize) -> IntPoly {
        debug_assert!(n >= 1, "substitution power must be >= 1");
        let mut out = vec![BigInt::zero(); self.deg_x() + n * self.deg_y() + 1];
        for (j, row) in self.rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[j + n * k] += c;
                }
            }
        }
        IntPoly::new(out)
    }

    /// Swap the roles of `x` and `y` (coefficient matrix transpose). An
    /// involution.
    pub fn invert(&self) -> IntBiPoly {
        let (dx, dy) = (self.deg_x(), self.deg_y());
        let mut rows = vec![vec![BigInt::zero(); dx + 1]; dy + 1];
        for j in 0..=dx {
            for k in 0..=dy {
                rows[k][j] = self.rows[j][k].clone();
            }
        }
        IntBiPoly::from_rows(rows)
    }

    /// Formal partial derivative with respect to `x`.
    pub fn partial_x(&self) -> IntBiPoly {
        if self.deg_x() == 0 {
            return IntBiPoly::from_rows(vec![]);
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, r)| r.iter().map(|c| c * BigInt::from(j)).collect())
            .collect();
        IntBiPoly::from_rows(rows)
    }

    /// Formal partial derivative with respect to `y`.
    pub fn partial_y(&self) -> IntBiPoly {
        if self.deg_y() == 0 {
            return IntBiPoly::from_rows(vec![]);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * BigInt::from(k))
                    .collect()
            })
            .collect();
        IntBiPoly::from_rows(rows)
    }

    /// Specialize `x = x0`, producing the fiber polynomial in `y` with
    /// complex coefficients (column sums `sum_j c[j][k] x0^j`).
    ///
    /// Reports [`Error::DegenerateLeading`] when `|a_g(x0)| <= floor`: the
    /// top fiber root escaped to infinity and censuses at `x0` are
    /// ill-posed.
    pub fn specialize_x<F: Real>(&self, x0: Complex<F>, floor: F) -> Result<CPoly<F>> {
        let mut sums = vec![Complex::new(F::zero(), F::zero()); self.deg_y() + 1];
        for (k, s) in sums.iter_mut().enumerate() {
            let mut acc = Complex::new(F::zero(), F::zero());
            for row in self.rows.iter().rev() {
                acc = acc * x0 + Complex::new(bigint_to_real::<F>(&row[k]), F::zero());
            }
            *s = acc;
        }
        let lead = sums[self.deg_y()];
        if lead.norm() <= floor {
            return Err(Error::DegenerateLeading {
                magnitude: lead.norm().as_f64(),
                floor: floor.as_f64(),
            });
        }
        Ok(CPoly::new(sums))
    }

    /// Evaluate `P(x, y)` at a complex point.
    pub fn eval_bi<F: Real>(&self, x: Complex<F>, y: Complex<F>) -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for k in (0..=self.deg_y()).rev() {
            let mut col = Complex::new(F::zero(), F::zero());
            for row in self.rows.iter().rev() {
                col = col * x + Complex::new(bigint_to_real::<F>(&row[k]), F::zero());
            }
            acc = acc * y + col;
        }
        acc
    }

    /// Central symmetry of the coefficient matrix: `c[j][k] ==
    /// c[deg_x - j][deg_y - k]`. This is the bivariate reciprocity used by
    /// the jump-point lemma.
    pub fn is_centrally_symmetric(&self) -> bool {
        let (dx, dy) = (self.deg_x(), self.deg_y());
        self.rows.iter().enumerate().all(|(j, row)| {
            row.iter()
                .enumerate()
                .all(|(k, c)| *c == self.rows[dx - j][dy - k])
        })
    }

    /// Discriminant of `P` with respect to `y`, as an exact integer
    /// polynomial in `x`:
    /// `disc_y P = (-1)^{g(g-1)/2} res_y(P, dP/dy) / a_g(x)`,
    /// with the resultant evaluated as a fraction-free (Bareiss) Sylvester
    /// determinant over `Z[x]`.
    pub fn disc_y(&self) -> Result<IntPoly> {
        resultant::disc_y(self)
    }
}

impl std::fmt::Debug for IntBiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntBiPoly{:?}", self.rows)
    }
}

impl std::fmt::Display for IntBiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, col) in self.y_coeffs().iter().enumerate() {
            if col.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{col}")?,
                1 => write!(f, "({col})*y")?,
                _ => write!(f, "({col})*y^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// CPoly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with complex floating coefficients,
/// little-endian. Trimmed: exactly-zero leading coefficients are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly<F> {
    coeffs: Vec<Complex<F>>,
}

impl<F: Real> CPoly<F> {
    pub fn new(mut coeffs: Vec<Complex<F>>) -> Self {
        while coeffs.len() > 1
            && coeffs
                .last()
                .map_or(false, |c| c.re.is_zero() && c.im.is_zero())
        {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex::new(F::zero(), F::zero()));
        }
        CPoly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Complex::new(F::of(c), F::zero()))
                .collect(),
        )
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].norm_sqr().is_zero()
    }

    pub fn eval(&self, z: Complex<F>) -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> CPoly<F> {
        if self.deg() == 0 {
            return CPoly::new(vec![]);
        }
        CPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * F::of(k as f64))
                .collect(),
        )
    }

    pub fn scaled(&self, factor: Complex<F>) -> CPoly<F> {
        CPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Largest coefficient magnitude; 0 only for the zero polynomial.
    pub fn max_coeff_norm(&self) -> F {
        self.coeffs
            .iter()
            .map(|c| c.norm())
            .fold(F::zero(), F::max)
    }

    /// Product of two polynomials (coefficient convolution).
    pub fn mul(&self, other: &CPoly<F>) -> CPoly<F> {
        let mut out =
            vec![Complex::new(F::zero(), F::zero()); self.deg() + other.deg() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        CPoly::new(out)
    }
}

#[cfg(test)]
mod tests;
