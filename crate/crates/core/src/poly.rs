//! Dense univariate polynomials over the rationals.

use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use crate::series::Rational;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| *c == Rational::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// From coefficients listed from the leading term down.
    pub fn from_descending(coeffs: &[Rational]) -> Poly {
        Poly::new(coeffs.iter().rev().cloned().collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Rational::ONE],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&(Rational::ONE / lc)),
            None => Poly::zero(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or(Rational::ZERO);
                    let b = other.coeffs.get(i).cloned().unwrap_or(Rational::ZERO);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::ONE))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as u64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::ZERO; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty").clone() / &lc;
            for (i, x) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * x;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|c| *c == Rational::ZERO) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero when both inputs vanish).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree decomposition `f = lc * prod_i a_i^i` by Yun's algorithm; returns
    /// the nonconstant `(a_i, i)`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Whether the polynomial is the square of a polynomial with complex coefficients:
    /// every squarefree factor occurs with even multiplicity. Zero is a square.
    pub fn is_square(&self) -> bool {
        self.squarefree_decomposition()
            .iter()
            .all(|(_, mult)| mult % 2 == 0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, c| acc * x + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != Rational::ZERO)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*u"),
                _ => format!("{c}*u^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert!(Poly::from_ints(&[1, 2, 1]).is_square());
        assert!(!Poly::from_ints(&[1, 0, 1]).is_square());
        assert!(Poly::zero().is_square());
        assert!(Poly::from_ints(&[-3]).is_square());
        assert!(!Poly::from_ints(&[0, 1]).is_square());
        // 4 (u - 1)^2 (u^2 + 1)^2
        let base = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[1, 0, 1]));
        assert!(base.mul(&base).scale(&Rational::from(4)).is_square());
        assert!(!base.mul(&base).mul(&Poly::from_ints(&[0, 1])).is_square());
    }

    #[test]
    fn decomposition_multiplicities() {
        // u^3 (u + 1)^2 (u - 2)
        let f = Poly::from_ints(&[0, 0, 0, 1])
            .mul(&Poly::from_ints(&[1, 2, 1]))
            .mul(&Poly::from_ints(&[-2, 1]));
        let mults: Vec<usize> = f
            .squarefree_decomposition()
            .iter()
            .map(|(_, m)| *m)
            .collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn division() {
        let f = Poly::from_ints(&[1, 0, 0, 1]);
        let d = Poly::from_ints(&[1, 1]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(q, Poly::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
    }
}
