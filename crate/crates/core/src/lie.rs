//! Matrix realizations of the classical Lie algebras and of `g2`.
//!
//! Types B and D preserve the symmetric form with ones on the anti-diagonal, type C
//! the anti-diagonal symplectic form `J[i][N-1-i] = 1` for `i < N/2` and `-1`
//! otherwise. With these forms the diagonal matrices form a Cartan subalgebra and
//! parabolics are block upper triangular.
//!
//! The `g2` model lives in `sl7` on the basis `v1, ..., v7`. It preserves the
//! anti-diagonal symmetric form and the 3-form
//! `v^156 + 2 v^237 + v^147 - v^246 - v^345`; the stabilizer of that 3-form is
//! 14-dimensional and already contained in `so7`.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::series::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieType::A),
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "D" => Ok(LieType::D),
            "G2" | "G" => Ok(LieType::G2),
            other => Err(Error::Parse(format!("unknown Lie type `{other}`"))),
        }
    }
}

/// Terms `(i, j, k, c)` with `i < j < k` of the `g2` 3-form, 0-based.
pub const G2_THREE_FORM: [(usize, usize, usize, i64); 5] = [
    (0, 4, 5, 1),
    (1, 2, 6, 2),
    (0, 3, 6, 1),
    (1, 3, 5, -1),
    (2, 3, 4, -1),
];

/// Largest defining-representation size accepted by [`build_algebra`].
pub const MAX_MATRIX_SIZE: usize = 16;

/// A Lie algebra given by an explicit basis of constant matrices.
#[derive(Clone, Debug)]
pub struct LieRealization {
    ty: LieType,
    rank: usize,
    size: usize,
    basis: Vec<QMatrix>,
    form: Option<QMatrix>,
    span: Subspace,
}

impl LieRealization {
    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The preserved bilinear form (absent in type A).
    pub fn form(&self) -> Option<&QMatrix> {
        self.form.as_ref()
    }

    pub fn contains(&self, x: &QMatrix) -> bool {
        self.span.contains(x.entries())
    }

    /// Coefficients of `x` over [`LieRealization::basis`], if `x` lies in the algebra.
    pub fn coordinates(&self, x: &QMatrix) -> Option<Vec<Rational>> {
        self.span.coordinates(x.entries())
    }

    /// Dimension predicted by the classical formulas.
    pub fn classical_dim(ty: LieType, rank: usize) -> usize {
        let n = rank;
        match ty {
            LieType::A => (n + 1) * (n + 1) - 1,
            LieType::B | LieType::C => 2 * n * n + n,
            LieType::D => 2 * n * n - n,
            LieType::G2 => 14,
        }
    }

    /// `g2` 3-form evaluated on basis vectors `v_a, v_b, v_c`.
    pub fn g2_form(a: usize, b: usize, c: usize) -> i64 {
        if a == b || b == c || a == c {
            return 0;
        }
        let mut idx = [a, b, c];
        let mut sign = 1;
        for i in 0..3 {
            for j in 0..2 - i {
                if idx[j] > idx[j + 1] {
                    idx.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        G2_THREE_FORM
            .iter()
            .find(|(i, j, k, _)| [*i, *j, *k] == idx)
            .map_or(0, |(_, _, _, c)| sign * c)
    }
}

/// The anti-diagonal form of the given type on `size`-dimensional space.
pub fn antidiagonal_form(ty: LieType, size: usize) -> Option<QMatrix> {
    match ty {
        LieType::A => None,
        LieType::B | LieType::D | LieType::G2 => Some(QMatrix::from_fn(size, size, |i, j| {
            if i + j + 1 == size {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        })),
        LieType::C => Some(QMatrix::from_fn(size, size, |i, j| {
            if i + j + 1 != size {
                Rational::ZERO
            } else if i < size / 2 {
                Rational::ONE
            } else {
                -Rational::ONE
            }
        })),
    }
}

fn matrix_size(ty: LieType, rank: usize) -> usize {
    match ty {
        LieType::A => rank + 1,
        LieType::B => 2 * rank + 1,
        LieType::C | LieType::D => 2 * rank,
        LieType::G2 => 7,
    }
}

/// Builds the realization of the given type and rank.
pub fn build_algebra(ty: LieType, rank: usize) -> Result<LieRealization> {
    let min_rank = match ty {
        LieType::D => 2,
        _ => 1,
    };
    let bad = rank < min_rank
        || (ty == LieType::G2 && rank != 2)
        || matrix_size(ty, rank) > MAX_MATRIX_SIZE;
    if bad {
        return Err(Error::UnsupportedRank { ty, rank });
    }
    let size = matrix_size(ty, rank);
    let form = antidiagonal_form(ty, size);
    let basis = match ty {
        LieType::A => type_a_basis(size),
        _ => {
            let j = form.as_ref().expect("form for B, C, D, G2");
            let mut rows = form_constraints(j);
            if ty == LieType::G2 {
                rows.extend(three_form_constraints());
            }
            let cols = size * size;
            let system = QMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone());
            system
                .nullspace()
                .into_iter()
                .map(|v| QMatrix::from_vector(size, size, v))
                .collect()
        }
    };
    let vectors: Vec<Vec<Rational>> = basis.iter().map(QMatrix::to_vector).collect();
    let span = Subspace::span(size * size, &vectors);
    let real = LieRealization {
        ty,
        rank,
        size,
        basis,
        form,
        span,
    };
    if real.dim() != LieRealization::classical_dim(ty, rank) {
        return Err(Error::Structure(format!(
            "type {ty} rank {rank}: constructed dimension {} differs from {}",
            real.dim(),
            LieRealization::classical_dim(ty, rank)
        )));
    }
    Ok(real)
}

fn type_a_basis(n: usize) -> Vec<QMatrix> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(QMatrix::unit(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        let mut h = QMatrix::unit(n, i, i);
        h.set(i + 1, i + 1, -Rational::ONE);
        basis.push(h);
    }
    basis
}

/// Linear conditions on the entries of `X` (row-major) expressing `X^T J + J X = 0`.
fn form_constraints(j: &QMatrix) -> Vec<Vec<Rational>> {
    let n = j.rows();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut row = vec![Rational::ZERO; n * n];
            for k in 0..n {
                // (X^T J)_{ab} = sum_k X_{ka} J_{kb}
                if *j.get(k, b) != Rational::ZERO {
                    row[k * n + a] += j.get(k, b);
                }
                // (J X)_{ab} = sum_k J_{ak} X_{kb}
                if *j.get(a, k) != Rational::ZERO {
                    row[k * n + b] += j.get(a, k);
                }
            }
            if row.iter().any(|x| *x != Rational::ZERO) {
                rows.push(row);
            }
        }
    }
    rows
}

/// Conditions for `X` to annihilate the `g2` 3-form.
fn three_form_constraints() -> Vec<Vec<Rational>> {
    let n = 7;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut row = vec![Rational::ZERO; n * n];
                for r in 0..n {
                    // X v_a = sum_r X_{ra} v_r
                    row[r * n + a] += Rational::from(LieRealization::g2_form(r, b, c));
                    row[r * n + b] += Rational::from(LieRealization::g2_form(a, r, c));
                    row[r * n + c] += Rational::from(LieRealization::g2_form(a, b, r));
                }
                if row.iter().any(|x| *x != Rational::ZERO) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Whether `x` annihilates the `g2` 3-form.
pub fn annihilates_three_form(x: &QMatrix) -> bool {
    three_form_constraints().iter().all(|row| {
        let mut acc = Rational::ZERO;
        for (c, v) in row.iter().zip(x.entries()) {
            if *c != Rational::ZERO && *v != Rational::ZERO {
                acc += c * v;
            }
        }
        acc == Rational::ZERO
    })
}

/// Whether `X^T J + J X = 0`.
pub fn preserves_form(x: &QMatrix, j: &QMatrix) -> bool {
    x.transpose().mul(j).add(&j.mul(x)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dimensions() {
        assert_eq!(build_algebra(LieType::A, 3).unwrap().dim(), 15);
        let d5 = build_algebra(LieType::D, 5).unwrap();
        assert_eq!((d5.dim(), d5.matrix_size()), (45, 10));
        assert_eq!(build_algebra(LieType::B, 2).unwrap().dim(), 10);
        assert_eq!(build_algebra(LieType::C, 3).unwrap().dim(), 21);
        assert_eq!(build_algebra(LieType::G2, 2).unwrap().dim(), 14);
    }

    #[test]
    fn unsupported_ranks() {
        assert!(build_algebra(LieType::G2, 3).is_err());
        assert!(build_algebra(LieType::D, 1).is_err());
        assert!(build_algebra(LieType::A, 0).is_err());
        assert!(build_algebra(LieType::B, 8).is_err());
    }

    #[test]
    fn g2_basis_is_skew_for_form_and_kills_three_form() {
        let g = build_algebra(LieType::G2, 2).unwrap();
        let j = g.form().unwrap();
        for x in g.basis() {
            assert!(preserves_form(x, j));
            assert!(annihilates_three_form(x));
            assert_eq!(x.trace(), Rational::ZERO);
        }
    }

    #[test]
    fn symplectic_form_is_alternating() {
        let j = antidiagonal_form(LieType::C, 6).unwrap();
        assert_eq!(j.transpose(), j.scale(&-Rational::ONE));
    }

    #[test]
    fn type_parsing() {
        assert_eq!("g2".parse::<LieType>().unwrap(), LieType::G2);
        assert!("E".parse::<LieType>().is_err());
    }
}
