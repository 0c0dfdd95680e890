//! Dense matrices with rational entries.

use std::fmt;

use malachite_base::num::arithmetic::traits::{DivExact, Lcm};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use serde::{Serialize, Serializer};

use crate::series::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::ONE);
        }
        m
    }

    /// The elementary matrix with a single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        m.set(i, j, Rational::ONE);
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> QMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> QMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix::from_fn(r, c, |i, j| Rational::from(rows[i][j]))
    }

    pub fn diagonal(entries: &[Rational]) -> QMatrix {
        let n = entries.len();
        QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::ZERO
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Row-major entries as one coordinate vector.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vec<Rational>) -> QMatrix {
        assert_eq!(v.len(), rows * cols);
        QMatrix {
            rows,
            cols,
            data: v,
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == Rational::ZERO)
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &QMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if *c == Rational::ZERO {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if *b != Rational::ZERO {
                *a += c * b;
            }
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if *a == Rational::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if *b != Rational::ZERO {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if *a != Rational::ZERO && *b != Rational::ZERO {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Commutator `[self, other]`.
    pub fn bracket(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> QMatrix {
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(Rational::ZERO, |a, b| a + b)
    }

    /// Coefficients `c_0 = 1, c_1, ..., c_n` of `det(xI - self)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        let mut c = vec![Rational::ONE];
        let mut m = QMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m);
            let ck = -am.trace() / Rational::from(k as u64);
            m = am;
            for i in 0..n {
                let v = m.get(i, i) + &ck;
                m.set(i, i, v);
            }
            c.push(ck);
        }
        c
    }

    pub fn det(&self) -> Rational {
        let n = self.rows;
        let c = self.char_poly();
        if n.is_multiple_of(2) {
            c[n].clone()
        } else {
            -c[n].clone()
        }
    }

    /// Rows scaled to integers, as required by fraction-free elimination.
    fn integer_rows(&self) -> Vec<Vec<Integer>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(Natural::ONE, |acc, x| acc.lcm(x.denominator_ref()));
                let l = Rational::from(l);
                row.iter()
                    .map(|x| Integer::try_from(&(x * &l)).expect("denominator cleared"))
                    .collect()
            })
            .collect()
    }

    /// Exact rank by Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = Integer::ONE;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| a[i][c] != Integer::ZERO) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v.div_exact(&prev);
                }
                a[i][c] = Integer::ZERO;
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| *m.get(i, c) != Rational::ZERO) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Rational::ONE / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || *m.get(i, c) == Rational::ZERO {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if *pj != Rational::ZERO {
                        let v = m.get(i, j) - &f * pj;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// A basis of `{v : self v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::ZERO; self.cols];
                v[f] = Rational::ONE;
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u32).is_zero()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Polarized invariant of constant matrices by inclusion–exclusion over subset sums:
/// `c_j(x_1, ..., x_j) = (1/j!) * sum_T (-1)^(j - |T|) c_j(sum_{u in T} x_u)`.
pub fn polarized_invariant_q(xs: &[QMatrix]) -> Rational {
    let j = xs.len();
    assert!((1..=20).contains(&j));
    let n = xs[0].rows();
    let mut total = Rational::ZERO;
    for mask in 1u32..(1u32 << j) {
        let mut sum = QMatrix::zeros(n, n);
        for (u, x) in xs.iter().enumerate() {
            if mask & (1 << u) != 0 {
                sum = sum.add(x);
            }
        }
        let cj = sum.char_poly().swap_remove(j);
        if (j as u32 - mask.count_ones()).is_multiple_of(2) {
            total += cj;
        } else {
            total -= cj;
        }
    }
    let fact: u64 = (1..=j as u64).product();
    total / Rational::from(fact)
}

/// Linear span of finitely many rational vectors with membership and coordinate queries.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim_ambient: usize,
    generators: usize,
    /// Nonzero rows of the reduced echelon form.
    echelon: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    /// `echelon[i] = sum_k transform[i][k] * generator_k`.
    transform: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn span(dim_ambient: usize, vectors: &[Vec<Rational>]) -> Subspace {
        let g = vectors.len();
        let aug = QMatrix::from_fn(g, dim_ambient + g, |i, j| {
            if j < dim_ambient {
                vectors[i][j].clone()
            } else if j - dim_ambient == i {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        });
        let (r, all_pivots) = aug.rref();
        let pivots: Vec<usize> = all_pivots
            .into_iter()
            .filter(|&p| p < dim_ambient)
            .collect();
        let echelon = (0..pivots.len())
            .map(|i| r.row(i)[..dim_ambient].to_vec())
            .collect();
        let transform = (0..pivots.len())
            .map(|i| r.row(i)[dim_ambient..].to_vec())
            .collect();
        Subspace {
            dim_ambient,
            generators: g,
            echelon,
            pivots,
            transform,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    /// Coordinates of `v` over the echelon rows, if `v` lies in the span.
    fn echelon_coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim_ambient);
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        for (j, vj) in v.iter().enumerate() {
            let mut acc = Rational::ZERO;
            for (row, c) in self.echelon.iter().zip(&coords) {
                if *c != Rational::ZERO && row[j] != Rational::ZERO {
                    acc += c * &row[j];
                }
            }
            if acc != *vj {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon_coordinates(v).is_some()
    }

    /// Some coefficients `a` with `v = sum a_k generator_k`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let e = self.echelon_coordinates(v)?;
        let mut out = vec![Rational::ZERO; self.generators];
        for (c, t) in e.iter().zip(&self.transform) {
            if *c == Rational::ZERO {
                continue;
            }
            for (o, x) in out.iter_mut().zip(t) {
                if *x != Rational::ZERO {
                    *o += c * x;
                }
            }
        }
        Some(out)
    }

    /// An echelon basis of the span.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.echelon
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from_signeds(a, b)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(QMatrix::identity(5).rank(), 5);
        assert_eq!(QMatrix::zeros(3, 4).rank(), 0);
        let a = QMatrix::from_ints(&[vec![1, 2], vec![0, 1], vec![3, -1], vec![2, 2]]);
        let b = QMatrix::from_ints(&[vec![1, 0, 2, -1], vec![4, 1, 1, 1]]);
        assert_eq!(a.mul(&b).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = QMatrix::from_fn(2, 2, |i, j| q((i + j) as i64 + 1, 3));
        assert_eq!(m.rank(), 2);
        let m = QMatrix::from_fn(2, 2, |i, _| q(i as i64 + 1, 7));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_is_killed() {
        let m = QMatrix::from_ints(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(|x| *x == Rational::ZERO));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = QMatrix::from_ints(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(3));
        assert!(QMatrix::from_ints(&[vec![1, 2], vec![2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn char_poly_diagonal() {
        let m = QMatrix::diagonal(&[q(2, 1), q(3, 1)]);
        assert_eq!(m.char_poly(), vec![q(1, 1), q(-5, 1), q(6, 1)]);
    }

    #[test]
    fn subspace_coordinates() {
        let v1 = vec![q(1, 1), q(0, 1), q(1, 1)];
        let v2 = vec![q(0, 1), q(1, 1), q(1, 1)];
        let s = Subspace::span(3, &[v1, v2.clone(), v2]);
        assert_eq!(s.dim(), 2);
        let target = vec![q(2, 1), q(-1, 1), q(1, 1)];
        let c = s.coordinates(&target).unwrap();
        assert_eq!(c[0], q(2, 1));
        assert_eq!(&c[1] + &c[2], q(-1, 1));
        assert!(!s.contains(&[q(1, 1), q(0, 1), q(0, 1)]));
    }
}
