//! Univariate integer polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;

/// Integer polynomial stored as ascending coefficients with trailing zeros
/// trimmed. The zero polynomial has no coefficients and degree zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> IntPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(t - 1)^k`
    pub fn t_minus_one_pow(k: usize) -> Self {
        let base = Self::new(vec![-T::one(), T::one()]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn subdegree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Value at `t = 1`, the sum of the coefficients.
    pub fn at_one(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |a, c| a + c.clone())
    }

    /// `coeff_i == coeff_{reflection - i}` for all `i` (coefficients past
    /// `reflection` must vanish).
    pub fn is_palindromic(&self, reflection: usize) -> bool {
        if self.coeffs.len() > reflection + 1 {
            return false;
        }
        (0..=reflection).all(|i| self.coeff(i) == self.coeff(reflection - i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficientwise `self <= other`.
    pub fn le_coefficientwise(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    /// Keeps the coefficients of `t^0 ..= t^k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().take(k + 1).cloned().collect())
    }

    /// `t^k * p(1/t)`, requiring `deg p <= k`.
    pub fn reverse(&self, k: usize) -> Self {
        assert!(
            self.coeffs.len() <= k + 1,
            "reflection degree below the polynomial degree"
        );
        Self::new((0..=k).map(|i| self.coeff(k - i)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Coefficients as machine integers, for reporting.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl<T: Scalar> Add for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn add(self, rhs: Self) -> IntPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn sub(self, rhs: Self) -> IntPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn mul(self, rhs: Self) -> IntPolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        IntPolynomial::new(out)
    }
}

impl<T: Scalar> Neg for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn neg(self) -> IntPolynomial<T> {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn neg(self) -> IntPolynomial<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for IntPolynomial<T> {
            type Output = IntPolynomial<T>;
            fn $m(self, rhs: Self) -> IntPolynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> std::iter::Sum for IntPolynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl<T: Scalar> fmt::Display for IntPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for IntPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Scalar> Serialize for IntPolynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::io::serialize_ints(&self.coeffs, s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for IntPolynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        crate::io::deserialize_ints(d).map(Self::new)
    }
}
