//! Exact rationals, integer q-polynomials, truncated q-series and graded characters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// The value of an integral rational as `i64`. Panics if `x` is not integral or too large.
pub fn to_i64(x: &Rational) -> i64 {
    assert!(x.is_integer(), "expected an integer, got {x}");
    x.to_integer().to_i64().expect("integer out of range")
}

pub fn floor_i64(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().expect("integer out of range")
}

pub fn ceil_i64(x: &Rational) -> i64 {
    x.ceil().to_integer().to_i64().expect("integer out of range")
}

/// Parses `"7"`, `"-3"` or `"5/2"`. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::Parse(format!("decimal notation not accepted: {s:?}; use s/r")));
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(a)?, den))
        }
    }
}

/// `(numerator, denominator)` of a rational in lowest terms with positive denominator.
pub fn num_den(x: &Rational) -> (i64, i64) {
    (
        x.numer().to_i64().expect("numerator out of range"),
        x.denom().to_i64().expect("denominator out of range"),
    )
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Sparse Laurent polynomial in `q` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(deg: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c);
        p
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            p.add_term(d as i64, c);
        }
        p
    }

    pub fn add_term(&mut self, deg: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(deg).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        self.coeffs.get(&deg).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `q^shift * p(q^{-1})`.
    pub fn reverse(&self, shift: i64) -> Self {
        let mut p = Self::zero();
        for (d, c) in self.terms() {
            p.add_term(shift - d, c);
        }
        p
    }

    pub fn shift(&self, by: i64) -> Self {
        let mut p = Self::zero();
        for (d, c) in self.terms() {
            p.add_term(d + by, c);
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> =
            self.terms().map(|(d, c)| (d.to_string(), json!(c))).collect();
        Value::Object(map)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, deg: i64, c: i64) -> fmt::Result {
    if c < 0 {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    let a = c.abs();
    match deg {
        0 => write!(f, "{a}"),
        _ => {
            if a != 1 {
                write!(f, "{a}")?;
            }
            if deg == 1 {
                write!(f, "q")
            } else {
                write!(f, "q^{deg}")
            }
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            write_term(f, i == 0, d, c)?;
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut p = self.clone();
        for (d, c) in rhs.terms() {
            p.add_term(d, c);
        }
        p
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut p = self.clone();
        for (d, c) in rhs.terms() {
            p.add_term(d, -c);
        }
        p
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut p = QPoly::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in rhs.terms() {
                p.add_term(d1 + d2, c1 * c2);
            }
        }
        p
    }
}

/// Power series in `q` known exactly through degree `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<i64>,
}

impl QSeries {
    pub fn zero(max_degree: usize) -> Self {
        Self { coeffs: vec![0; max_degree + 1] }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.coeffs[0] = 1;
        s
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Self { coeffs }
    }

    /// Truncation of a polynomial. Negative degrees are not allowed.
    pub fn from_poly(p: &QPoly, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        for (d, c) in p.terms() {
            assert!(d >= 0, "series have no negative powers");
            if (d as usize) <= max_degree {
                s.coeffs[d as usize] += c;
            }
        }
        s
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add_term(&mut self, d: usize, c: i64) {
        if d <= self.max_degree() {
            self.coeffs[d] += c;
        }
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        for d in 0..=max_degree.min(self.max_degree()) {
            s.coeffs[d] = self.coeffs[d];
        }
        s
    }

    /// Coefficients agree through degree `d`.
    pub fn agrees_to(&self, other: &Self, d: usize) -> bool {
        d <= self.max_degree()
            && d <= other.max_degree()
            && self.coeffs[..=d] == other.coeffs[..=d]
    }

    pub fn inverse(&self) -> Result<Self> {
        series_inverse(self)
    }

    pub fn to_poly(&self) -> QPoly {
        QPoly::from_coeffs(&self.coeffs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_degree": self.max_degree(),
            "coefficients": self.coeffs,
            "string": self.to_string(),
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if !p.is_zero() {
            write!(f, "{p}+")?;
        }
        write!(f, "O(q^{})", self.max_degree() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let d = self.max_degree().min(rhs.max_degree());
        QSeries { coeffs: (0..=d).map(|i| self.coeffs[i] + rhs.coeffs[i]).collect() }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let d = self.max_degree().min(rhs.max_degree());
        QSeries { coeffs: (0..=d).map(|i| self.coeffs[i] - rhs.coeffs[i]).collect() }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let d = self.max_degree().min(rhs.max_degree());
        let mut out = vec![0i64; d + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }
}

/// `(q)_k = (1-q)(1-q^2)...(1-q^k)` as an exact polynomial.
pub fn qfac(k: usize) -> QPoly {
    let mut p = QPoly::one();
    for i in 1..=k as i64 {
        let f = &QPoly::one() - &QPoly::monomial(i, 1);
        p = &p * &f;
    }
    p
}

/// Inverse of a series whose constant term is `+1` or `-1`.
pub fn series_inverse(s: &QSeries) -> Result<QSeries> {
    let c0 = s.coeffs[0];
    if c0 != 1 && c0 != -1 {
        return Err(Error::NotInvertible(c0));
    }
    let d = s.max_degree();
    let mut inv = vec![0i64; d + 1];
    inv[0] = c0;
    for k in 1..=d {
        let acc: i64 = (1..=k).map(|j| s.coeffs[j] * inv[k - j]).sum();
        inv[k] = -acc * c0;
    }
    Ok(QSeries { coeffs: inv })
}

/// `num / den` as a series through degree `max_degree`.
pub fn series_quotient(num: &QPoly, den: &QPoly, max_degree: usize) -> Result<QSeries> {
    let inv = series_inverse(&QSeries::from_poly(den, max_degree))?;
    Ok(&QSeries::from_poly(num, max_degree) * &inv)
}

/// `q^offset * series`, the offset being rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    pub offset: Rational,
    pub series: QSeries,
}

impl QCharacter {
    pub fn new(offset: Rational, series: QSeries) -> Self {
        Self { offset, series }
    }

    pub fn max_degree(&self) -> usize {
        self.series.max_degree()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "offset": self.offset.to_string(),
            "series": self.series.to_json(),
        })
    }
}

impl fmt::Display for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({})*({})", self.offset, self.series)
    }
}

/// Equal offsets and equal coefficients through the smaller truncation degree.
pub fn char_equal(a: &QCharacter, b: &QCharacter) -> bool {
    let d = a.max_degree().min(b.max_degree());
    a.offset == b.offset && a.series.agrees_to(&b.series, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qfac_three() {
        assert_eq!(qfac(3), QPoly::from_coeffs(&[1, -1, -1, 0, 1, 1, -1]));
        assert_eq!(qfac(0), QPoly::one());
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let s = QSeries::from_poly(&qfac(1), 4);
        assert_eq!(series_inverse(&s).unwrap().coeffs(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let s = QSeries::from_coeffs(vec![2, 1, 0]);
        let e = series_inverse(&s).unwrap_err();
        assert!(e.to_string().contains("not invertible as a series"));
        assert!(series_inverse(&QSeries::from_coeffs(vec![-1, 1])).is_ok());
    }

    #[test]
    fn inverse_of_qfac_counts_partitions() {
        // partitions into at most 3 parts
        let inv = series_inverse(&QSeries::from_poly(&qfac(3), 8)).unwrap();
        assert_eq!(inv.coeffs(), &[1, 1, 2, 3, 4, 5, 7, 8, 10]);
    }

    #[test]
    fn character_equality_uses_common_degree() {
        let a = QCharacter::new(rat(-1, 3), QSeries::from_coeffs(vec![1, 2, 3, 4]));
        let b = QCharacter::new(rat(-1, 3), QSeries::from_coeffs(vec![1, 2, 3]));
        let c = QCharacter::new(rat(1, 3), QSeries::from_coeffs(vec![1, 2, 3]));
        assert!(char_equal(&a, &b));
        assert!(!char_equal(&a, &c));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPoly::from_coeffs(&[0, 1, 1]).to_string(), "q+q^2");
        assert_eq!(qfac(2).to_string(), "1-q-q^2+q^3");
        assert_eq!(QPoly::monomial(3, 2).to_string(), "2q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("2.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn reverse_polynomial() {
        let p = QPoly::from_coeffs(&[0, 1, 2]);
        assert_eq!(p.reverse(3), QPoly::from_coeffs(&[0, 2, 1]));
    }
}
