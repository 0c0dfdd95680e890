//! Truncated Laurent series over the rationals.
//!
//! A [`Series`] is an element of `t^-m Q[[t]]` known modulo `t^N`, where `N` is
//! its precision. Coefficients at exponents `>= N` are unknown and never
//! reported. Precision is tracked per value:
//!
//! * `a + b` is known modulo `t^min(N_a, N_b)`;
//! * `a * b` is known modulo `t^min(N_a + v(b), N_b + v(a))`, where the
//!   valuation of a series whose known coefficients all vanish is its precision.
//!
//! A precision of `None` marks an exact value (a Laurent polynomial).
//!
//! # Text form
//!
//! ```text
//! series   := "0" | terms | terms " + O(t^" int ")" | "O(t^" int ")"
//! terms    := term (" + " term)*
//! term     := rational "*t^" int
//! rational := ["-"] digits ["/" digits]
//! ```
//!
//! Terms appear in increasing exponent order with nonzero coefficients. The
//! parser also accepts a bare rational (`c` means `c*t^0`), `t^e` and `c*t`,
//! and any amount of whitespace around `+`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Pow;
use malachite_base::num::basic::traits::{One, Zero};
pub use malachite_q::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Three-valued logic for questions that depend on unknown coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn is_false(self) -> bool {
        self == Truth::False
    }
}

impl FromIterator<Truth> for Truth {
    fn from_iter<I: IntoIterator<Item = Truth>>(iter: I) -> Truth {
        iter.into_iter().fold(Truth::True, Truth::and)
    }
}

/// Valuation of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    /// Least exponent with a nonzero coefficient.
    Finite(i64),
    /// All known coefficients vanish; the series is zero modulo `t^N`.
    AtLeast(i64),
    /// The exact zero series.
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Whether the valuation is `>= bound`.
    pub fn at_least(self, bound: i64) -> Truth {
        match self {
            Valuation::Finite(v) => Truth::from_bool(v >= bound),
            Valuation::AtLeast(p) if p >= bound => Truth::True,
            Valuation::AtLeast(_) => Truth::Unknown,
            Valuation::Infinite => Truth::True,
        }
    }

    /// Valuation of the minimum of two quantities, e.g. of a sum with no cancellation.
    pub fn meet(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Infinite, v) | (v, Valuation::Infinite) => v,
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a.min(b)),
            (Valuation::Finite(a), Valuation::AtLeast(p))
            | (Valuation::AtLeast(p), Valuation::Finite(a)) => {
                if a < p {
                    Valuation::Finite(a)
                } else {
                    Valuation::AtLeast(p)
                }
            }
            (Valuation::AtLeast(a), Valuation::AtLeast(b)) => Valuation::AtLeast(a.min(b)),
        }
    }

    /// Whether the valuation is exactly `k`.
    pub fn equals(self, k: i64) -> Truth {
        match self {
            Valuation::Finite(v) => Truth::from_bool(v == k),
            Valuation::AtLeast(p) if p > k => Truth::False,
            Valuation::AtLeast(_) => Truth::Unknown,
            Valuation::Infinite => Truth::False,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(p) => write!(f, ">={p}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Laurent series with exact rational coefficients, known modulo `t^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    /// Exponent of `coeffs[0]`; equals the valuation when nonzero.
    low: i64,
    /// Dense coefficients; first and last entries are nonzero.
    coeffs: Vec<Rational>,
    prec: Option<i64>,
}

impl Series {
    /// The zero series known modulo `t^prec`.
    pub fn zero(prec: i64) -> Series {
        Series {
            low: 0,
            coeffs: Vec::new(),
            prec: Some(prec),
        }
    }

    pub fn exact_zero() -> Series {
        Series {
            low: 0,
            coeffs: Vec::new(),
            prec: None,
        }
    }

    /// An exact constant.
    pub fn constant(c: Rational) -> Series {
        Series::from_dense(0, vec![c], None)
    }

    pub fn from_int(c: i64) -> Series {
        Series::constant(Rational::from(c))
    }

    /// `c * t^e`, known modulo `t^prec`.
    pub fn monomial(c: Rational, e: i64, prec: Option<i64>) -> Series {
        Series::from_dense(e, vec![c], prec)
    }

    /// Builds `sum c_i t^(low + i)` and brings it into canonical form.
    pub fn from_dense(low: i64, coeffs: Vec<Rational>, prec: Option<i64>) -> Series {
        let mut s = Series { low, coeffs, prec };
        s.normalize();
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I, prec: Option<i64>) -> Series
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Series {
                low: 0,
                coeffs: Vec::new(),
                prec,
            };
        }
        terms.sort_by_key(|(e, _)| *e);
        let low = terms[0].0;
        let high = terms[terms.len() - 1].0;
        let mut coeffs = vec![Rational::ZERO; (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Series::from_dense(low, coeffs, prec)
    }

    fn normalize(&mut self) {
        if let Some(p) = self.prec {
            let keep = (p - self.low).clamp(0, self.coeffs.len() as i64) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| *c == Rational::ZERO) {
            self.coeffs.pop();
        }
        let lead = self
            .coeffs
            .iter()
            .position(|c| *c != Rational::ZERO)
            .unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Precision `N`: coefficients of `t^k` for `k >= N` are unknown. `None` means exact.
    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the only known nonzero coefficient (if any) sits at `t^0`.
    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn valuation(&self) -> Valuation {
        if !self.coeffs.is_empty() {
            Valuation::Finite(self.low)
        } else {
            match self.prec {
                Some(p) => Valuation::AtLeast(p),
                None => Valuation::Infinite,
            }
        }
    }

    /// Valuation, or the precision if all known coefficients vanish. `None` for exact zero.
    fn val_or_prec(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            self.prec
        } else {
            Some(self.low)
        }
    }

    /// Coefficient of `t^e`, or `None` when `e` is at or beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if self.prec.is_some_and(|p| e >= p) {
            return None;
        }
        let idx = e - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Some(Rational::ZERO)
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Rational::ZERO)
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// The constant coefficient if the series is constant.
    pub fn constant_term(&self) -> Option<Rational> {
        if self.is_constant() {
            self.coeff(0).or(Some(Rational::ZERO))
        } else {
            None
        }
    }

    /// Forgets every coefficient at exponents `>= prec`.
    pub fn truncate(&self, prec: i64) -> Series {
        Series::from_dense(
            self.low,
            self.coeffs.clone(),
            min_prec(self.prec, Some(prec)),
        )
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            low: if self.coeffs.is_empty() {
                0
            } else {
                self.low + k
            },
            coeffs: self.coeffs.clone(),
            prec: self.prec.map(|p| p + k),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        if *c == Rational::ZERO {
            return match self.prec {
                Some(_) => Series {
                    low: 0,
                    coeffs: Vec::new(),
                    prec: self.prec,
                },
                None => Series::exact_zero(),
            };
        }
        Series {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            prec: self.prec,
        }
    }

    /// Exact division by a nonzero integer.
    pub fn div_int(&self, k: i64) -> Series {
        assert!(k != 0, "division by zero");
        let inv = Rational::from_signeds(1, k);
        self.scale(&inv)
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::from_int(1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True when `self - other` has no known nonzero coefficient.
    pub fn agrees_with(&self, other: &Series) -> bool {
        (self - other).is_zero()
    }

    /// Precision of `a * b` under the propagation rule.
    fn product_precision(a: &Series, b: &Series) -> Option<i64> {
        let (va, vb) = (a.val_or_prec(), b.val_or_prec());
        // Exact zero times anything is exact zero.
        if (a.coeffs.is_empty() && a.prec.is_none()) || (b.coeffs.is_empty() && b.prec.is_none()) {
            return None;
        }
        let left = match (a.prec, vb) {
            (Some(p), Some(v)) => Some(p + v),
            _ => None,
        };
        let right = match (b.prec, va) {
            (Some(p), Some(v)) => Some(p + v),
            _ => None,
        };
        min_prec(left, right)
    }
}

/// Running sum of series and products without intermediate allocation.
#[derive(Debug, Clone)]
pub(crate) struct Accumulator {
    low: i64,
    coeffs: Vec<Rational>,
    prec: Option<i64>,
}

impl Accumulator {
    pub(crate) fn new() -> Accumulator {
        Accumulator {
            low: 0,
            coeffs: Vec::new(),
            prec: None,
        }
    }

    fn lower_precision(&mut self, p: Option<i64>) {
        self.prec = min_prec(self.prec, p);
    }

    fn reserve(&mut self, start: i64, end: i64) {
        if self.coeffs.is_empty() {
            self.low = start;
            self.coeffs = vec![Rational::ZERO; (end - start) as usize];
            return;
        }
        if start < self.low {
            let pad = (self.low - start) as usize;
            let mut fresh = vec![Rational::ZERO; pad];
            fresh.append(&mut self.coeffs);
            self.coeffs = fresh;
            self.low = start;
        }
        let have = self.low + self.coeffs.len() as i64;
        if end > have {
            self.coeffs
                .resize(self.coeffs.len() + (end - have) as usize, Rational::ZERO);
        }
    }

    fn bounded_end(&self, end: i64) -> i64 {
        match self.prec {
            Some(p) => end.min(p),
            None => end,
        }
    }

    pub(crate) fn add(&mut self, a: &Series) {
        self.lower_precision(a.prec);
        if a.coeffs.is_empty() {
            return;
        }
        let end = self.bounded_end(a.low + a.coeffs.len() as i64);
        if a.low >= end {
            return;
        }
        self.reserve(a.low, end);
        for (i, c) in a.coeffs.iter().enumerate() {
            let e = a.low + i as i64;
            if e >= end {
                break;
            }
            self.coeffs[(e - self.low) as usize] += c;
        }
    }

    pub(crate) fn add_product(&mut self, a: &Series, b: &Series) {
        self.lower_precision(Series::product_precision(a, b));
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return;
        }
        let start = a.low + b.low;
        let end = self.bounded_end(start + (a.coeffs.len() + b.coeffs.len() - 1) as i64);
        if start >= end {
            return;
        }
        self.reserve(start, end);
        for (i, ca) in a.coeffs.iter().enumerate() {
            let ea = a.low + i as i64 + b.low;
            if ea >= end {
                break;
            }
            if *ca == Rational::ZERO {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                let e = ea + j as i64;
                if e >= end {
                    break;
                }
                if *cb == Rational::ZERO {
                    continue;
                }
                self.coeffs[(e - self.low) as usize] += ca * cb;
            }
        }
    }

    pub(crate) fn finish(self) -> Series {
        Series::from_dense(self.low, self.coeffs, self.prec)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut acc = Accumulator::new();
        acc.add(self);
        acc.add(rhs);
        acc.finish()
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let mut acc = Accumulator::new();
        acc.add_product(self, rhs);
        acc.finish()
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*t^{e}")?;
        }
        match self.prec {
            Some(p) if first => write!(f, "O(t^{p})"),
            Some(p) => write!(f, " + O(t^{p})"),
            None if first => f.write_str("0"),
            None => Ok(()),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

fn parse_exponent(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad exponent `{s}`")))
}

fn parse_term(piece: &str) -> Result<(i64, Rational)> {
    let piece = piece.trim();
    if let Some(rest) = piece.strip_prefix("t^") {
        return Ok((parse_exponent(rest)?, Rational::ONE));
    }
    if piece == "t" {
        return Ok((1, Rational::ONE));
    }
    match piece.split_once('*') {
        Some((c, var)) => {
            let var = var.trim();
            let e = if var == "t" {
                1
            } else if let Some(rest) = var.strip_prefix("t^") {
                parse_exponent(rest)?
            } else {
                return Err(Error::Parse(format!("bad term `{piece}`")));
            };
            Ok((e, parse_rational(c)?))
        }
        None => Ok((0, parse_rational(piece)?)),
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Series> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty series".into()));
        }
        let mut prec = None;
        let mut terms = Vec::new();
        for piece in s.split('+') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            if let Some(inner) = piece.strip_prefix("O(") {
                if prec.is_some() {
                    return Err(Error::Parse("repeated O(...) marker".into()));
                }
                let inner = inner
                    .strip_suffix(')')
                    .and_then(|x| x.trim().strip_prefix("t^"))
                    .ok_or_else(|| Error::Parse(format!("bad precision marker `{piece}`")))?;
                prec = Some(parse_exponent(inner)?);
            } else {
                if prec.is_some() {
                    return Err(Error::Parse("terms after O(...) marker".into()));
                }
                terms.push(parse_term(piece)?);
            }
        }
        Ok(Series::from_terms(terms, prec))
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Series, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// `base^k` for rationals, used by a few closed forms.
pub fn rational_pow(base: &Rational, k: u64) -> Rational {
    base.clone().pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Series {
        text.parse().unwrap()
    }

    #[test]
    fn add_cancels_pole() {
        let a = s("1*t^-1 + 1*t^0 + O(t^4)");
        let b = s("-1*t^-1 + O(t^6)");
        let sum = &a + &b;
        assert_eq!(sum, s("1*t^0 + O(t^4)"));
        assert_eq!(sum.precision(), Some(4));
    }

    #[test]
    fn add_identity() {
        let x = s("3/2*t^-2 + -7*t^5 + O(t^9)");
        assert_eq!(&Series::exact_zero() + &x, x);
    }

    #[test]
    fn add_takes_min_precision() {
        let a = s("1 + 2*t + O(t^3)");
        let b = s("3*t + 1*t^3 + O(t^4)");
        assert_eq!(&a + &b, s("1*t^0 + 5*t^1 + O(t^3)"));
    }

    #[test]
    fn mul_exponent_cancellation() {
        let a = Series::monomial(Rational::ONE, -1, None);
        let b = Series::monomial(Rational::ONE, 1, None);
        assert_eq!(&a * &b, Series::from_int(1));
    }

    #[test]
    fn mul_square_truncates() {
        let a = s("1 + t + O(t^3)");
        assert_eq!(&a * &a, s("1*t^0 + 2*t^1 + 1*t^2 + O(t^3)"));
    }

    #[test]
    fn mul_precision_rule() {
        let a = s("1*t^-2 + O(t^2)");
        let b = s("1*t^3 + O(t^5)");
        let p = &a * &b;
        assert_eq!(p.precision(), Some(3));
        assert_eq!(p, s("1*t^1 + O(t^3)"));
    }

    #[test]
    fn valuations() {
        assert_eq!(s("1*t^-1 + 3 + O(t^4)").valuation(), Valuation::Finite(-1));
        assert_eq!(Series::zero(5).valuation(), Valuation::AtLeast(5));
        assert_eq!(
            s("7*t^2 + -1*t^3 + O(t^9)").valuation(),
            Valuation::Finite(2)
        );
        assert_eq!(Series::exact_zero().valuation(), Valuation::Infinite);
    }

    #[test]
    fn three_valued_bounds() {
        let z = Series::zero(3);
        assert_eq!(z.valuation().at_least(2), Truth::True);
        assert_eq!(z.valuation().at_least(4), Truth::Unknown);
        assert_eq!(z.valuation().equals(1), Truth::False);
        assert_eq!(z.valuation().equals(3), Truth::Unknown);
    }

    #[test]
    fn unknown_coefficients_are_not_reported() {
        let a = s("1 + O(t^2)");
        assert_eq!(a.coeff(1), Some(Rational::ZERO));
        assert_eq!(a.coeff(2), None);
    }

    #[test]
    fn zero_with_precision_limits_product() {
        let z = Series::zero(3);
        let b = s("1*t^-1 + O(t^10)");
        let p = &z * &b;
        assert!(p.is_zero());
        assert_eq!(p.precision(), Some(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Series::exact_zero().to_string(), "0");
        assert_eq!(Series::zero(5).to_string(), "O(t^5)");
        assert_eq!(
            s("-1/2*t^-1 + 3*t^2 + O(t^4)").to_string(),
            "-1/2*t^-1 + 3*t^2 + O(t^4)"
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Series>().is_err());
        assert!("1 + + 2".parse::<Series>().is_err());
        assert!("O(t^3) + 1".parse::<Series>().is_err());
        assert!("2*x^3".parse::<Series>().is_err());
    }
}
