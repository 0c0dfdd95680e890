//! Square matrices over truncated Laurent series.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use super::qmatrix::QMatrix;
use crate::error::{Error, Result};
use crate::series::{Accumulator, Series, Valuation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    n: usize,
    entries: Vec<Series>,
}

/// Coefficients `c_1, ..., c_n` of `det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyCoeffs {
    coeffs: Vec<Series>,
}

impl CharPolyCoeffs {
    /// `c_j` for `1 <= j <= n`; `c_0 = 1` is implicit.
    pub fn c(&self, j: usize) -> &Series {
        assert!(j >= 1, "c_0 is the constant 1");
        &self.coeffs[j - 1]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_slice(&self) -> &[Series] {
        &self.coeffs
    }

    pub fn into_vec(self) -> Vec<Series> {
        self.coeffs
    }
}

impl SeriesMatrix {
    pub fn zeros(n: usize) -> SeriesMatrix {
        SeriesMatrix {
            n,
            entries: vec![Series::exact_zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> SeriesMatrix {
        let mut m = SeriesMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Series::from_int(1));
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Series) -> SeriesMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SeriesMatrix { n, entries }
    }

    pub fn from_qmatrix(m: &QMatrix) -> SeriesMatrix {
        assert!(m.is_square());
        SeriesMatrix::from_fn(m.rows(), |i, j| Series::constant(m.get(i, j).clone()))
    }

    /// `sum_k t^(low + k) * terms[k]`, known modulo `t^prec`.
    pub fn from_laurent(low: i64, terms: &[QMatrix], prec: Option<i64>) -> SeriesMatrix {
        let n = terms.first().map_or(0, |m| m.rows());
        SeriesMatrix::from_fn(n, |i, j| {
            Series::from_dense(
                low,
                terms.iter().map(|m| m.get(i, j).clone()).collect(),
                prec,
            )
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Series {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Series) {
        self.entries[i * self.n + j] = v;
    }

    /// Least precision among the entries; `None` when every entry is exact.
    pub fn precision(&self) -> Option<i64> {
        self.entries.iter().filter_map(|s| s.precision()).min()
    }

    /// Least valuation among the nonzero entries.
    pub fn min_valuation(&self) -> Option<i64> {
        self.entries
            .iter()
            .filter_map(|s| s.valuation().finite())
            .min()
    }

    /// The matrix of `t^e` coefficients, or `None` if some entry is unknown there.
    pub fn coefficient(&self, e: i64) -> Option<QMatrix> {
        let mut data = Vec::with_capacity(self.n * self.n);
        for s in &self.entries {
            data.push(s.coeff(e)?);
        }
        Some(QMatrix::from_vector(self.n, self.n, data))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Series::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Series) -> Series) -> SeriesMatrix {
        SeriesMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> SeriesMatrix {
        self.map(|s| s.shift(k))
    }

    pub fn truncate(&self, prec: i64) -> SeriesMatrix {
        self.map(|s| s.truncate(prec))
    }

    pub fn scale(&self, c: &Series) -> SeriesMatrix {
        self.map(|s| s * c)
    }

    pub fn transpose(&self) -> SeriesMatrix {
        SeriesMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!(self.n, other.n);
        SeriesMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!(self.n, other.n);
        SeriesMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Accumulator::new();
                for k in 0..n {
                    acc.add_product(self.get(i, k), other.get(k, j));
                }
                entries.push(acc.finish());
            }
        }
        SeriesMatrix { n, entries }
    }

    pub fn pow(&self, k: u32) -> SeriesMatrix {
        let mut acc = SeriesMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Series {
        let mut acc = Accumulator::new();
        for i in 0..self.n {
            acc.add(self.get(i, i));
        }
        acc.finish()
    }

    /// Characteristic polynomial coefficients by the Faddeev–LeVerrier recurrence.
    pub fn char_poly_coeffs(&self) -> CharPolyCoeffs {
        let n = self.n;
        let mut coeffs = Vec::with_capacity(n);
        let mut m = SeriesMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m);
            let ck = -am.trace().div_int(k as i64);
            m = am;
            if k < n {
                for i in 0..n {
                    let v = m.get(i, i) + &ck;
                    m.set(i, i, v);
                }
            }
            coeffs.push(ck);
        }
        CharPolyCoeffs { coeffs }
    }

    /// `det(self) = (-1)^n c_n`.
    pub fn determinant(&self) -> Series {
        if self.n == 0 {
            return Series::from_int(1);
        }
        let cn = self.char_poly_coeffs().c(self.n).clone();
        if self.n.is_multiple_of(2) {
            cn
        } else {
            -cn
        }
    }

    /// True when `self + self^T` has no known nonzero coefficient.
    pub fn is_skew(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| (self.get(i, j) + self.get(j, i)).is_zero()))
    }

    /// Pfaffian by expansion along the first row.
    pub fn pfaffian(&self) -> Result<Series> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::Structure(format!(
                "Pfaffian needs even size, got {}",
                self.n
            )));
        }
        if self.n > 32 {
            return Err(Error::Structure("Pfaffian size above 32".into()));
        }
        if !self.is_skew() {
            return Err(Error::Structure("matrix is not skew-symmetric".into()));
        }
        let full: u64 = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let mut memo = HashMap::new();
        Ok(self.pfaffian_rec(full, &mut memo))
    }

    fn pfaffian_rec(&self, set: u64, memo: &mut HashMap<u64, Series>) -> Series {
        if set == 0 {
            return Series::from_int(1);
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let first = set.trailing_zeros() as usize;
        let rest = set & !(1u64 << first);
        let mut acc = Accumulator::new();
        let mut position = 0;
        for j in 0..self.n {
            if rest & (1u64 << j) == 0 {
                continue;
            }
            let entry = self.get(first, j);
            if !(entry.is_zero() && entry.is_exact()) {
                let minor = self.pfaffian_rec(rest & !(1u64 << j), memo);
                if position % 2 == 0 {
                    acc.add_product(entry, &minor);
                } else {
                    acc.add_product(&-entry, &minor);
                }
            }
            position += 1;
        }
        let v = acc.finish();
        memo.insert(set, v.clone());
        v
    }

    /// The symmetric multilinear form with `c_j(A, ..., A) = c_j(A)`, computed as
    /// `(1/j!) sum_T (-1)^(j-|T|) c_j(sum_{u in T} x_u)`.
    pub fn polarized_invariant(xs: &[SeriesMatrix]) -> Result<Series> {
        let j = check_tuple(xs)?;
        let n = xs[0].n;
        let mut acc = Accumulator::new();
        for mask in 1u32..(1u32 << j) {
            let mut sum = SeriesMatrix::zeros(n);
            for (u, x) in xs.iter().enumerate() {
                if mask & (1 << u) != 0 {
                    sum = sum.add(x);
                }
            }
            let cj = sum.char_poly_coeffs().c(j).clone();
            if (j as u32 - mask.count_ones()).is_multiple_of(2) {
                acc.add(&cj);
            } else {
                acc.add(&-cj);
            }
        }
        let fact: i64 = (1..=j as i64).product();
        Ok(acc.finish().div_int(fact))
    }

    /// The same form evaluated as `(-1)^j / j!` times the trace on the `j`-th
    /// exterior power of `v_1 ∧ ... ∧ v_j ↦ sum_σ x_σ(1) v_1 ∧ ... ∧ x_σ(j) v_j`.
    ///
    /// Cost grows like `C(n, j) (j!)^2`; meant for small sizes.
    pub fn polarized_invariant_exterior(xs: &[SeriesMatrix]) -> Result<Series> {
        let j = check_tuple(xs)?;
        let n = xs[0].n;
        let perms: Vec<Vec<usize>> = (0..j).permutations(j).collect();
        let signs: Vec<bool> = perms.iter().map(|p| permutation_is_even(p)).collect();
        let mut acc = Accumulator::new();
        for subset in (0..n).combinations(j) {
            for sigma in &perms {
                // Coefficient of v_I in the wedge of x_σ(u) v_{i_u}: a determinant with
                // column u equal to the i_u-th column of x_σ(u) restricted to rows I.
                for (tau, even) in perms.iter().zip(&signs) {
                    let mut term = Series::from_int(if *even { 1 } else { -1 });
                    for u in 0..j {
                        let x = &xs[sigma[u]];
                        term = &term * x.get(subset[tau[u]], subset[u]);
                        if term.is_zero() && term.is_exact() {
                            break;
                        }
                    }
                    acc.add(&term);
                }
            }
        }
        let fact: i64 = (1..=j as i64).product();
        let sign = if j % 2 == 0 { fact } else { -fact };
        Ok(acc.finish().div_int(sign))
    }

    /// Exact rank when every entry is a constant.
    pub fn rank_over_rationals(&self) -> Result<usize> {
        Ok(self.to_qmatrix()?.rank())
    }

    /// The constant matrix, or an error naming the first non-constant entry.
    pub fn to_qmatrix(&self) -> Result<QMatrix> {
        let mut data = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                match self.get(i, j).constant_term() {
                    Some(c) => data.push(c),
                    None => return Err(Error::NonConstant { row: i, col: j }),
                }
            }
        }
        Ok(QMatrix::from_vector(self.n, self.n, data))
    }

    /// Conjugate `g * self * g^-1` by a constant invertible matrix.
    pub fn conjugate(&self, g: &QMatrix) -> Option<SeriesMatrix> {
        let inv = g.inverse()?;
        let gs = SeriesMatrix::from_qmatrix(g);
        let is = SeriesMatrix::from_qmatrix(&inv);
        Some(gs.mul(self).mul(&is))
    }

    /// Least valuation over entries, accounting for unknown ones.
    pub fn valuation(&self) -> Valuation {
        self.entries
            .iter()
            .map(Series::valuation)
            .fold(Valuation::Infinite, Valuation::meet)
    }
}

fn check_tuple(xs: &[SeriesMatrix]) -> Result<usize> {
    let j = xs.len();
    if j == 0 {
        return Err(Error::Precondition(
            "polarization needs at least one matrix".into(),
        ));
    }
    let n = xs[0].n;
    if let Some(bad) = xs.iter().find(|x| x.n != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            got: bad.n,
        });
    }
    if j > n {
        return Err(Error::Precondition(format!(
            "polarization degree {j} exceeds matrix size {n}"
        )));
    }
    Ok(j)
}

pub(crate) fn permutation_is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for SeriesMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Scalar `c` as a constant series.
pub fn constant(c: i64) -> Series {
    Series::from_int(c)
}

/// A constant matrix with every entry zero except those listed.
pub fn sparse(n: usize, entries: &[(usize, usize, Series)]) -> SeriesMatrix {
    let mut m = SeriesMatrix::zeros(n);
    for (i, j, v) in entries {
        m.set(*i, *j, v.clone());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn int_matrix(rows: &[Vec<i64>]) -> SeriesMatrix {
        SeriesMatrix::from_qmatrix(&QMatrix::from_ints(rows))
    }

    #[test]
    fn diagonal_char_poly() {
        let m = int_matrix(&[vec![3, 0], vec![0, -2]]);
        let c = m.char_poly_coeffs();
        assert_eq!(c.c(1), &constant(-1));
        assert_eq!(c.c(2), &constant(-6));
    }

    #[test]
    fn pfaffian_small() {
        let a = constant(5);
        let m = sparse(2, &[(0, 1, a.clone()), (1, 0, -a.clone())]);
        assert_eq!(m.pfaffian().unwrap(), a);
        let blocks = sparse(
            4,
            &[
                (0, 1, constant(2)),
                (1, 0, constant(-2)),
                (2, 3, constant(7)),
                (3, 2, constant(-7)),
            ],
        );
        assert_eq!(blocks.pfaffian().unwrap(), constant(14));
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        assert!(SeriesMatrix::zeros(3).pfaffian().is_err());
        assert!(int_matrix(&[vec![0, 1], vec![1, 0]]).pfaffian().is_err());
    }

    #[test]
    fn polarization_example_value() {
        let x1 = sparse(2, &[(1, 0, constant(1))]);
        let x2 = sparse(2, &[(0, 1, constant(1))]);
        let expected = Series::constant(Rational::from_signeds(-1, 2));
        assert_eq!(
            SeriesMatrix::polarized_invariant(&[x1.clone(), x2.clone()]).unwrap(),
            expected
        );
        assert_eq!(
            SeriesMatrix::polarized_invariant_exterior(&[x1, x2]).unwrap(),
            expected
        );
    }

    #[test]
    fn polarization_rejects_mismatch() {
        let a = SeriesMatrix::zeros(2);
        let b = SeriesMatrix::zeros(3);
        assert!(SeriesMatrix::polarized_invariant(&[a, b]).is_err());
    }

    #[test]
    fn rank_rejects_nonconstant() {
        let mut m = SeriesMatrix::identity(2);
        m.set(0, 1, Series::monomial(Rational::from(1), 1, None));
        assert_eq!(
            m.rank_over_rationals(),
            Err(Error::NonConstant { row: 0, col: 1 })
        );
    }
}
