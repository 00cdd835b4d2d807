//! Truncated power series with exact rational coefficients.
//!
//! Ordinary and exponential kinds share one representation: the function's
//! Taylor coefficients, indexed 0..=order. For the exponential kind the
//! counting numbers are recovered as `coeff(n) * n!` at the comparison
//! boundary, so multiplication is the plain Cauchy product in both cases.
//! Closed forms with radicals or trigonometry are never evaluated; every
//! identity is checked algebraically on truncations.

use crate::exact::{rat, Rational};
use num::{BigInt, One, Zero};
use thiserror::Error;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Ordinary,
    Exponential,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("kind mismatch")]
    KindMismatch,
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("inner series must have zero constant term")]
    NonzeroConstant,
    #[error("reversion needs a nonzero linear coefficient")]
    ZeroLinear,
}

/// Power series truncated at x^order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    kind: SeriesKind,
    coeffs: Vec<Rational>, // index = exponent, length = order + 1
}

impl TruncSeries {
    pub fn zero(kind: SeriesKind, order: usize) -> Self {
        TruncSeries {
            kind,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The identity series x.
    pub fn x(kind: SeriesKind, order: usize) -> Self {
        let mut s = Self::zero(kind, order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn from_coeffs(kind: SeriesKind, order: usize, coeffs: &[(usize, Rational)]) -> Self {
        let mut s = Self::zero(kind, order);
        for (i, c) in coeffs {
            if *i <= order {
                s.coeffs[*i] = c.clone();
            }
        }
        s
    }

    /// Ordinary generating function from integer counts at exponents 1..;
    /// index 0 of `counts` lands on x^1.
    pub fn ogf_from_counts(order: usize, counts: &[usize]) -> Self {
        let mut s = Self::zero(SeriesKind::Ordinary, order);
        for (i, &c) in counts.iter().enumerate() {
            if i + 1 <= order {
                s.coeffs[i + 1] = rat(c as i64);
            }
        }
        s
    }

    /// Exponential generating function from counts: coefficient of x^n is
    /// count/n!.
    pub fn egf_from_counts(order: usize, counts: &[usize]) -> Self {
        let mut s = Self::zero(SeriesKind::Exponential, order);
        for (i, &c) in counts.iter().enumerate() {
            let n = i + 1;
            if n <= order {
                s.coeffs[n] = Rational::new(BigInt::from(c), factorial(n));
            }
        }
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Counting number at exponent n: the coefficient itself for ordinary
    /// series, coefficient times n! for exponential ones.
    pub fn count(&self, n: usize) -> Rational {
        match self.kind {
            SeriesKind::Ordinary => self.coeff(n),
            SeriesKind::Exponential => self.coeff(n) * Rational::from_integer(factorial(n)),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 1 { c.is_one() } else { c.is_zero() })
    }

    fn check_compatible(&self, other: &TruncSeries) -> Result<(), SeriesError> {
        if self.kind != other.kind {
            return Err(SeriesError::KindMismatch);
        }
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check_compatible(other)?;
        Ok(TruncSeries {
            kind: self.kind,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check_compatible(other)?;
        Ok(TruncSeries {
            kind: self.kind,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> TruncSeries {
        TruncSeries {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Substitutes -x: flips the sign of odd coefficients.
    pub fn negate_argument(&self) -> TruncSeries {
        TruncSeries {
            kind: self.kind,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check_compatible(other)?;
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        Ok(TruncSeries { kind: self.kind, coeffs })
    }

    /// Composition self(other); `other` must have zero constant term.
    pub fn compose(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check_compatible(other)?;
        if !other.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order();
        let mut acc = Self::zero(self.kind, order);
        // Horner evaluation: acc = a_order, acc = acc * g + a_k
        for k in (0..=order).rev() {
            acc = acc.mul(other)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse g with self(g(x)) = x up to the order.
    /// Coefficients are solved degree by degree: the x^m coefficient of
    /// self(g) is linear in g_m with slope self'(0).
    pub fn revert(&self) -> Result<TruncSeries, SeriesError> {
        if !self.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let a1 = self.coeff(1);
        if a1.is_zero() {
            return Err(SeriesError::ZeroLinear);
        }
        let order = self.order();
        let mut g = Self::zero(self.kind, order);
        for m in 1..=order {
            let cur = self.compose(&g)?.coeff(m);
            let target = if m == 1 { Rational::one() } else { Rational::zero() };
            g.coeffs[m] = (target - cur) / &a1;
        }
        debug_assert!(self.compose(&g).unwrap().is_identity());
        Ok(g)
    }

    /// JSON form: array of `"num/den"` strings, index = exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(crate::exact::format_rational(c)))
                .collect(),
        )
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// x/(1-x), the associative generating function.
pub fn geometric(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(SeriesKind::Ordinary, order);
    for n in 1..=order {
        s.coeffs[n] = Rational::one();
    }
    s
}

/// x/(1-x)^3: coefficients are the triangular numbers n(n+1)/2.
pub fn triangular_series(order: usize) -> TruncSeries {
    // 1/(1-x)^3 has coefficients C(n+2, 2)
    let mut s = TruncSeries::zero(SeriesKind::Ordinary, order);
    for n in 1..=order {
        s.coeffs[n] = rat((n * (n + 1) / 2) as i64);
    }
    s
}

/// e^x - 1 as an exponential-kind series.
pub fn exp_minus_one(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(SeriesKind::Exponential, order);
    for n in 1..=order {
        s.coeffs[n] = Rational::new(BigInt::one(), factorial(n));
    }
    s
}

/// (e^x - 1) e^(e^x - 1): the exponential generating function of set
/// partitions with one distinguished block.
pub fn marked_partition_egf(order: usize) -> TruncSeries {
    let b = exp_minus_one(order);
    // e^b = sum b^k / k!
    let mut exp_b = TruncSeries::zero(SeriesKind::Exponential, order);
    exp_b.coeffs[0] = Rational::one();
    let mut power = exp_b.clone(); // b^0
    for k in 1..=order {
        power = power.mul(&b).unwrap();
        let inv_fact = Rational::new(BigInt::one(), factorial(k));
        exp_b = exp_b.add(&power.scale(&inv_fact)).unwrap();
    }
    b.mul(&exp_b).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn mul_basics() {
        let x = TruncSeries::x(SeriesKind::Ordinary, 4);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.coeff(2), rat(1));
        assert!(x2.coeff(1).is_zero() && x2.coeff(3).is_zero());

        let zero = TruncSeries::zero(SeriesKind::Ordinary, 4);
        assert_eq!(x.mul(&zero).unwrap(), zero);

        // (x + x^2)^2 = x^2 + 2x^3 + x^4
        let s = TruncSeries::from_coeffs(SeriesKind::Ordinary, 4, &[(1, rat(1)), (2, rat(1))]);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeff(2), rat(1));
        assert_eq!(sq.coeff(3), rat(2));
        assert_eq!(sq.coeff(4), rat(1));
    }

    #[test]
    fn kind_and_order_guards() {
        let a = TruncSeries::x(SeriesKind::Ordinary, 4);
        let b = TruncSeries::x(SeriesKind::Exponential, 4);
        let c = TruncSeries::x(SeriesKind::Ordinary, 5);
        assert_eq!(a.mul(&b), Err(SeriesError::KindMismatch));
        assert_eq!(a.mul(&c), Err(SeriesError::OrderMismatch(4, 5)));
        let one = TruncSeries::from_coeffs(SeriesKind::Ordinary, 4, &[(0, rat(1))]);
        assert_eq!(a.compose(&one), Err(SeriesError::NonzeroConstant));
    }

    #[test]
    fn compose_classics() {
        let order = 6;
        let a = geometric(order);
        let x = TruncSeries::x(SeriesKind::Ordinary, order);
        assert_eq!(a.compose(&x).unwrap(), a);
        // x/(1-x) o x/(1-x) = x/(1-2x)
        let twice = a.compose(&a).unwrap();
        for n in 1..=order {
            assert_eq!(twice.coeff(n), rat(1 << (n - 1)));
        }
    }

    #[test]
    fn revert_basics() {
        let x = TruncSeries::x(SeriesKind::Ordinary, 5);
        assert_eq!(x.revert().unwrap(), x);

        let a = geometric(8);
        let g = a.revert().unwrap();
        // inverse of x/(1-x) is x/(1+x)
        for n in 1..=8usize {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(g.coeff(n), rat(sign));
        }
        assert!(a.compose(&g).unwrap().is_identity());
        assert!(g.compose(&a).unwrap().is_identity());

        let bad = TruncSeries::from_coeffs(SeriesKind::Ordinary, 4, &[(2, rat(1))]);
        assert_eq!(bad.revert(), Err(SeriesError::ZeroLinear));
    }

    #[test]
    fn egf_counts_roundtrip() {
        let s = TruncSeries::egf_from_counts(5, &[1, 3, 10, 37, 151]);
        assert_eq!(s.coeff(2), ratio(3, 2));
        assert_eq!(s.count(2), rat(3));
        assert_eq!(s.count(5), rat(151));
    }

    #[test]
    fn marked_partition_series() {
        let s = marked_partition_egf(5);
        let expected = [1, 3, 10, 37, 151];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(s.count(i + 1), rat(c));
        }
    }

    #[test]
    fn triangular_numbers() {
        let s = triangular_series(8);
        for n in 1..=8 {
            assert_eq!(s.coeff(n), rat((n * (n + 1) / 2) as i64));
        }
        // agree with x/(1-x)^3 expanded by repeated products
        let mut one_over = TruncSeries::zero(SeriesKind::Ordinary, 8);
        for n in 0..=8 {
            one_over.coeffs[n] = rat(1);
        }
        let cubed = one_over
            .mul(&one_over)
            .unwrap()
            .mul(&one_over)
            .unwrap()
            .mul(&TruncSeries::x(SeriesKind::Ordinary, 8))
            .unwrap();
        assert_eq!(cubed, s);
    }
}
