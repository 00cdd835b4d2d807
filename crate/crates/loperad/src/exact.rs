//! Exact rational scalars and dense linear algebra.
//!
//! Every dimension count in this crate comes out of a rank or kernel
//! computation over the rationals, so everything here is exact: no floats,
//! no tolerances. Matrices are dense and desk-scale (a few thousand columns
//! at most), which keeps the elimination code short.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Exact scalar: arbitrary-precision rational, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"num"` or `"num/den"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Prints a rational as `num` or `num/den`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format_rational(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer convenience constructor, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    let e = self.get(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += e * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k).clone();
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c).clone();
                        out.set(r, c, cur + &a * b);
                    }
                }
            }
        }
        out
    }

    /// Direct sum: block-diagonal stacking of `self` and `other`.
    pub fn direct_sum(&self, other: &RationalMatrix) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Row-reduces in place to reduced row echelon form; returns pivot columns.
    /// Pivoting takes the first nonzero entry — exact arithmetic needs no
    /// stability heuristics.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.entries
                        .swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) / &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &f * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right null space; `cols - rank` vectors `v` with
    /// `self * v = 0` exactly.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Smallest k <= maxpow with self^k = identity, if any.
    pub fn order(&self, maxpow: usize) -> Option<usize> {
        assert_eq!(self.rows, self.cols, "order needs a square matrix");
        let mut p = self.clone();
        for k in 1..=maxpow {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

/// Incrementally row-reduced span of vectors, used for graded ideal closures:
/// inserting a vector reports whether it enlarged the span, and the reduced
/// rows double as a canonical spanning set for the next degree.
pub struct RowSpace {
    cols: usize,
    // rows kept in echelon form, paired with their pivot column
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.rows.iter().map(|(_, v)| v)
    }

    /// Reduces `v` against the current span; inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.cols);
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    *x -= &f * y;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].clone();
        for x in v.iter_mut() {
            *x /= &inv;
        }
        // keep echelon order by pivot column
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |(p, _)| *p)
            .unwrap_err();
        self.rows.insert(pos, (pivot, v));
        true
    }
}
