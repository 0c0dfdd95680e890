//! Parabolic subalgebras as non-negative parts of a rational diagonal grading.
//!
//! Every parabolic is encoded by a diagonal element `h` of the Cartan subalgebra:
//! `p` is spanned by the matrix entries `(i, j)` with `h_i >= h_j`, the nilradical
//! `n` by those with `h_i > h_j`, and the Levi `l` by those with `h_i = h_j`. A
//! marked simple root `a` is one with `a(h) > 0`; roots are numbered in the usual
//! way for the classical types, and for `g2` root 1 is short and root 2 is long.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Sign;
use malachite_base::num::basic::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lie::{LieRealization, LieType};
use crate::linalg::{QMatrix, SeriesMatrix, Subspace};
use crate::series::Rational;

/// The three parabolics of `g2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum G2Parabolic {
    Borel,
    /// Stabilizer of an isotropic line.
    Line,
    /// Stabilizer of a 3-form-isotropic plane.
    Plane,
}

impl G2Parabolic {
    pub fn marked_roots(self) -> Vec<usize> {
        match self {
            G2Parabolic::Borel => vec![1, 2],
            G2Parabolic::Line => vec![1],
            G2Parabolic::Plane => vec![2],
        }
    }
}

impl fmt::Display for G2Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G2Parabolic::Borel => "borel",
            G2Parabolic::Line => "line",
            G2Parabolic::Plane => "plane",
        })
    }
}

impl FromStr for G2Parabolic {
    type Err = Error;

    fn from_str(s: &str) -> Result<G2Parabolic> {
        match s.trim().to_ascii_lowercase().as_str() {
            "borel" => Ok(G2Parabolic::Borel),
            "line" | "isotropic-line" => Ok(G2Parabolic::Line),
            "plane" | "isotropic-plane" => Ok(G2Parabolic::Plane),
            other => Err(Error::Parse(format!("unknown g2 parabolic `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParabolicDescription {
    /// Type A: block sizes summing to the matrix size. Types B, C, D: sizes
    /// `r_1, ..., r_k` of the isotropic flag steps, with `sum r <= rank`.
    Blocks(Vec<usize>),
    /// 1-based indices of the simple roots not in the Levi.
    MarkedRoots(Vec<usize>),
    G2(G2Parabolic),
}

impl fmt::Display for ParabolicDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            ParabolicDescription::Blocks(b) => write!(f, "blocks {}", join(b)),
            ParabolicDescription::MarkedRoots(s) => write!(f, "marked roots {{{}}}", join(s)),
            ParabolicDescription::G2(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicSpec {
    realization: LieRealization,
    description: ParabolicDescription,
    grading: Vec<Rational>,
    marked: Vec<usize>,
    p_basis: Vec<QMatrix>,
    n_basis: Vec<QMatrix>,
    l_basis: Vec<QMatrix>,
    n_span: Subspace,
}

impl ParabolicSpec {
    pub fn realization(&self) -> &LieRealization {
        &self.realization
    }

    pub fn lie_type(&self) -> LieType {
        self.realization.lie_type()
    }

    pub fn rank(&self) -> usize {
        self.realization.rank()
    }

    pub fn description(&self) -> &ParabolicDescription {
        &self.description
    }

    /// Diagonal entries of the grading element `h`.
    pub fn grading(&self) -> &[Rational] {
        &self.grading
    }

    /// Sorted 1-based indices of the simple roots `a` with `a(h) > 0`.
    pub fn marked_roots(&self) -> &[usize] {
        &self.marked
    }

    pub fn p_basis(&self) -> &[QMatrix] {
        &self.p_basis
    }

    pub fn n_basis(&self) -> &[QMatrix] {
        &self.n_basis
    }

    pub fn l_basis(&self) -> &[QMatrix] {
        &self.l_basis
    }

    pub fn dim_g(&self) -> usize {
        self.realization.dim()
    }

    pub fn dim_n(&self) -> usize {
        self.n_basis.len()
    }

    pub fn dim_l(&self) -> usize {
        self.l_basis.len()
    }

    pub fn in_nilradical(&self, x: &QMatrix) -> bool {
        self.n_span.contains(x.entries())
    }

    /// Multiplicities of the distinct grading values, in decreasing order of value.
    pub fn grading_groups(&self) -> Vec<(Rational, usize)> {
        let mut values = self.grading.clone();
        values.sort_by(|a, b| b.cmp(a));
        let mut groups: Vec<(Rational, usize)> = Vec::new();
        for v in values {
            match groups.last_mut() {
                Some((w, c)) if *w == v => *c += 1,
                _ => groups.push((v, 1)),
            }
        }
        groups
    }

    /// Coordinate flag `F_c = span{e_i : h_i >= c}` for each grading value `c`
    /// except the smallest, as lists of coordinate indices.
    pub fn flag(&self) -> Vec<Vec<usize>> {
        let groups = self.grading_groups();
        groups[..groups.len().saturating_sub(1)]
            .iter()
            .map(|(c, _)| {
                (0..self.grading.len())
                    .filter(|&i| self.grading[i] >= *c)
                    .collect()
            })
            .collect()
    }

    /// Whether `F^T J F = 0` for every flag step with positive grading value.
    pub fn flag_is_isotropic(&self) -> bool {
        let Some(j) = self.realization.form() else {
            return true;
        };
        self.grading_groups()
            .iter()
            .filter(|(c, _)| *c > Rational::ZERO)
            .all(|(c, _)| {
                let idx: Vec<usize> = (0..self.grading.len())
                    .filter(|&i| self.grading[i] >= *c)
                    .collect();
                idx.iter()
                    .all(|&a| idx.iter().all(|&b| *j.get(a, b) == Rational::ZERO))
            })
    }

    /// A pseudorandom element `t^-1 Y + sum_{k<N} t^k Z_k` of `t^-1 n + g(O)`,
    /// known modulo `t^N`.
    ///
    /// Coefficients are uniform integers in `[-bound, bound]`, drawn from a ChaCha8
    /// stream determined by `(seed, trial)`, first for `Y` and then for `Z_0, Z_1, ...`;
    /// raising `N` extends the same germ.
    pub fn sample_pperp(
        &self,
        precision: usize,
        seed: u64,
        trial: u64,
        bound: i64,
    ) -> SeriesMatrix {
        let mut rng = trial_rng(seed, trial);
        let mut terms = Vec::with_capacity(precision + 1);
        terms.push(random_element(
            &self.n_basis,
            self.realization.matrix_size(),
            &mut rng,
            bound,
        ));
        for _ in 0..precision {
            terms.push(random_element(
                self.realization.basis(),
                self.realization.matrix_size(),
                &mut rng,
                bound,
            ));
        }
        SeriesMatrix::from_laurent(-1, &terms, Some(precision as i64))
    }
}

/// The per-trial random stream.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A random integer combination of `basis` with coefficients in `[-bound, bound]`.
pub fn random_element<R: Rng>(basis: &[QMatrix], size: usize, rng: &mut R, bound: i64) -> QMatrix {
    let mut out = QMatrix::zeros(size, size);
    for b in basis {
        let c: i64 = if bound > 0 {
            rng.gen_range(-bound..=bound)
        } else {
            0
        };
        if c != 0 {
            out.add_scaled(&Rational::from(c), b);
        }
    }
    out
}

/// Builds the parabolic of `realization` described by `description`.
pub fn build_parabolic(
    realization: &LieRealization,
    description: ParabolicDescription,
) -> Result<ParabolicSpec> {
    let ty = realization.lie_type();
    let rank = realization.rank();
    let (grading, cartan_roots) = match (&description, ty) {
        (ParabolicDescription::G2(p), LieType::G2) => {
            let roots = G2Roots::compute(realization)?;
            (roots.grading_for(&p.marked_roots())?, Some(roots))
        }
        (ParabolicDescription::MarkedRoots(s), LieType::G2) => {
            let s = check_marked(s, 2)?;
            let roots = G2Roots::compute(realization)?;
            (roots.grading_for(&s)?, Some(roots))
        }
        (ParabolicDescription::G2(_), _) => {
            return Err(Error::InvalidParabolic(format!(
                "g2 parabolic names need type G2, got type {ty}"
            )))
        }
        (ParabolicDescription::Blocks(_), LieType::G2) => {
            return Err(Error::InvalidParabolic(
                "type G2 takes a parabolic name or marked roots, not blocks".into(),
            ))
        }
        (ParabolicDescription::Blocks(b), _) => (grading_from_blocks(ty, rank, b)?, None),
        (ParabolicDescription::MarkedRoots(s), _) => {
            let s = check_marked(s, rank)?;
            (grading_from_marked(ty, rank, &s), None)
        }
    };
    let marked = match &cartan_roots {
        Some(roots) => roots.marked_for(&grading),
        None => marked_from_grading(ty, rank, &grading),
    };
    let cmp = |i: usize, j: usize| grading[i].cmp(&grading[j]);
    let p_basis = graded_part(realization, |i, j| cmp(i, j) != Ordering::Less);
    let n_basis = graded_part(realization, |i, j| cmp(i, j) == Ordering::Greater);
    let l_basis = graded_part(realization, |i, j| cmp(i, j) == Ordering::Equal);
    if p_basis.len() != n_basis.len() + l_basis.len()
        || realization.dim() != l_basis.len() + 2 * n_basis.len()
    {
        return Err(Error::Structure(format!(
            "grading of {description} does not split the algebra: dim p {}, dim l {}, dim n {}",
            p_basis.len(),
            l_basis.len(),
            n_basis.len()
        )));
    }
    let size = realization.matrix_size();
    let n_span = Subspace::span(
        size * size,
        &n_basis.iter().map(QMatrix::to_vector).collect::<Vec<_>>(),
    );
    Ok(ParabolicSpec {
        realization: realization.clone(),
        description,
        grading,
        marked,
        p_basis,
        n_basis,
        l_basis,
        n_span,
    })
}

fn check_marked(s: &[usize], rank: usize) -> Result<Vec<usize>> {
    let mut s = s.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParabolic("repeated marked root".into()));
    }
    if let Some(bad) = s.iter().find(|&&i| i == 0 || i > rank) {
        return Err(Error::InvalidParabolic(format!(
            "marked root {bad} outside 1..={rank}"
        )));
    }
    Ok(s)
}

/// Elements of the algebra supported on the entries `(i, j)` with `keep(i, j)`.
fn graded_part(realization: &LieRealization, keep: impl Fn(usize, usize) -> bool) -> Vec<QMatrix> {
    let size = realization.matrix_size();
    let basis = realization.basis();
    let mut rows = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if keep(i, j) {
                continue;
            }
            let row: Vec<Rational> = basis.iter().map(|b| b.get(i, j).clone()).collect();
            if row.iter().any(|x| *x != Rational::ZERO) {
                rows.push(row);
            }
        }
    }
    let combos = if rows.is_empty() {
        (0..basis.len())
            .map(|k| {
                let mut v = vec![Rational::ZERO; basis.len()];
                v[k] = Rational::ONE;
                v
            })
            .collect()
    } else {
        QMatrix::from_fn(rows.len(), basis.len(), |r, c| rows[r][c].clone()).nullspace()
    };
    combos
        .into_iter()
        .map(|v| {
            let mut x = QMatrix::zeros(size, size);
            for (c, b) in v.iter().zip(basis) {
                x.add_scaled(c, b);
            }
            x
        })
        .collect()
}

/// Mirrors the first `n` grading values into the full anti-diagonal model.
fn mirrored(ty: LieType, half: &[Rational]) -> Vec<Rational> {
    let mut full = half.to_vec();
    if ty == LieType::B {
        full.push(Rational::ZERO);
    }
    full.extend(half.iter().rev().map(|x| -x.clone()));
    full
}

fn grading_from_blocks(ty: LieType, rank: usize, blocks: &[usize]) -> Result<Vec<Rational>> {
    if blocks.is_empty() && ty == LieType::A {
        return Err(Error::InvalidParabolic(
            "type A needs at least one block".into(),
        ));
    }
    if blocks.contains(&0) {
        return Err(Error::InvalidParabolic(
            "block sizes must be positive".into(),
        ));
    }
    let total: usize = blocks.iter().sum();
    let k = blocks.len();
    match ty {
        LieType::A => {
            if total != rank + 1 {
                return Err(Error::InvalidParabolic(format!(
                    "type A blocks must sum to {}, got {total}",
                    rank + 1
                )));
            }
            Ok(blocks
                .iter()
                .enumerate()
                .flat_map(|(t, &b)| std::iter::repeat_n(Rational::from((k - t) as u64), b))
                .collect())
        }
        LieType::B | LieType::C | LieType::D => {
            if total > rank {
                return Err(Error::Isotropy(format!(
                    "flag steps sum to {total}, exceeding the maximal isotropic dimension {rank}"
                )));
            }
            let mut half: Vec<Rational> = blocks
                .iter()
                .enumerate()
                .flat_map(|(t, &b)| std::iter::repeat_n(Rational::from((k - t) as u64), b))
                .collect();
            half.resize(rank, Rational::ZERO);
            Ok(mirrored(ty, &half))
        }
        LieType::G2 => unreachable!("handled by the caller"),
    }
}

fn grading_from_marked(ty: LieType, rank: usize, s: &[usize]) -> Vec<Rational> {
    let x = |i: usize| {
        if s.contains(&i) {
            Rational::ONE
        } else {
            Rational::ZERO
        }
    };
    let n = rank;
    match ty {
        LieType::A => {
            // a_i = e_i - e_{i+1} on n + 1 coordinates, last coordinate 0; made
            // traceless afterwards.
            let mut h = vec![Rational::ZERO; n + 1];
            for i in (0..n).rev() {
                h[i] = &h[i + 1] + x(i + 1);
            }
            let mean = h.iter().fold(Rational::ZERO, |a, b| a + b) / Rational::from((n + 1) as u64);
            h.iter().map(|v| v - &mean).collect()
        }
        LieType::B | LieType::C | LieType::D => {
            let mut h = vec![Rational::ZERO; n];
            match ty {
                LieType::B => h[n - 1] = x(n),
                LieType::C => h[n - 1] = x(n) / Rational::from(2u32),
                _ => {
                    let half = Rational::from_signeds(1, 2);
                    h[n - 1] = (x(n) - x(n - 1)) * &half;
                    h[n - 2] = (x(n) + x(n - 1)) * &half;
                }
            }
            let top = if ty == LieType::D { n - 2 } else { n - 1 };
            for i in (0..top).rev() {
                h[i] = &h[i + 1] + x(i + 1);
            }
            mirrored(ty, &h)
        }
        LieType::G2 => unreachable!("handled by the caller"),
    }
}

/// Values `a_i(h)` of the simple roots of a classical type.
pub fn simple_root_values(ty: LieType, rank: usize, h: &[Rational]) -> Vec<Rational> {
    let n = rank;
    let mut v: Vec<Rational> = (0..n.saturating_sub(1))
        .map(|i| &h[i] - &h[i + 1])
        .collect();
    match ty {
        LieType::A => v.push(&h[n - 1] - &h[n]),
        LieType::B => v.push(h[n - 1].clone()),
        LieType::C => v.push(&h[n - 1] * Rational::from(2u32)),
        LieType::D => v.push(&h[n - 2] + &h[n - 1]),
        LieType::G2 => unreachable!("g2 roots come from the realization"),
    }
    v
}

fn marked_from_grading(ty: LieType, rank: usize, h: &[Rational]) -> Vec<usize> {
    simple_root_values(ty, rank, h)
        .iter()
        .enumerate()
        .filter(|(_, v)| **v > Rational::ZERO)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Cartan subalgebra and simple roots of the `g2` realization.
#[derive(Clone, Debug)]
pub struct G2Roots {
    /// Diagonals of a basis `H_1, H_2` of the Cartan subalgebra.
    pub cartan: Vec<Vec<Rational>>,
    /// All roots as values on `(H_1, H_2)`.
    pub roots: Vec<[Rational; 2]>,
    /// Positive roots: those whose root vectors are strictly upper triangular.
    pub positive: Vec<[Rational; 2]>,
    /// Simple roots, short first.
    pub simple: [[Rational; 2]; 2],
}

impl G2Roots {
    pub fn compute(g: &LieRealization) -> Result<G2Roots> {
        let size = g.matrix_size();
        let diag = graded_part(g, |i, j| i == j);
        let cartan: Vec<Vec<Rational>> = diag
            .iter()
            .map(|d| (0..size).map(|i| d.get(i, i).clone()).collect())
            .collect();
        if cartan.len() != 2 {
            return Err(Error::Structure(format!(
                "g2 Cartan has dimension {}",
                cartan.len()
            )));
        }
        let weight = |i: usize| [cartan[0][i].clone(), cartan[1][i].clone()];
        let mut roots: Vec<[Rational; 2]> = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if i == j {
                    continue;
                }
                let (wi, wj) = (weight(i), weight(j));
                let alpha = [&wi[0] - &wj[0], &wi[1] - &wj[1]];
                if alpha[0] == Rational::ZERO && alpha[1] == Rational::ZERO {
                    continue;
                }
                if roots.contains(&alpha) {
                    continue;
                }
                // Root space: elements supported on entries (a, b) with weight
                // difference alpha.
                let space = graded_part(g, |a, b| {
                    let (wa, wb) = (weight(a), weight(b));
                    wa[0].clone() - &wb[0] == alpha[0] && wa[1].clone() - &wb[1] == alpha[1]
                });
                if !space.is_empty() {
                    roots.push(alpha);
                }
            }
        }
        if roots.len() != 12 {
            return Err(Error::Structure(format!("found {} g2 roots", roots.len())));
        }
        let upper = |alpha: &[Rational; 2]| {
            (0..size).any(|i| {
                (i + 1..size).any(|j| {
                    let (wi, wj) = (weight(i), weight(j));
                    wi[0].clone() - &wj[0] == alpha[0] && wi[1].clone() - &wj[1] == alpha[1]
                })
            })
        };
        let positive: Vec<[Rational; 2]> = roots.iter().filter(|a| upper(a)).cloned().collect();
        if positive.len() != 6 {
            return Err(Error::Structure(
                "g2 positive system is not upper triangular".into(),
            ));
        }
        let simple: Vec<[Rational; 2]> = positive
            .iter()
            .filter(|a| {
                !positive.iter().any(|b| {
                    let c = [&a[0] - &b[0], &a[1] - &b[1]];
                    positive.contains(&c)
                })
            })
            .cloned()
            .collect();
        if simple.len() != 2 {
            return Err(Error::Structure("g2 has no simple root pair".into()));
        }
        let is_short = |a: &[Rational; 2]| (0..size).any(|i| weight(i) == *a);
        let (short, long): (Vec<_>, Vec<_>) = simple.into_iter().partition(is_short);
        if short.len() != 1 || long.len() != 1 {
            return Err(Error::Structure(
                "g2 simple roots are not one short, one long".into(),
            ));
        }
        Ok(G2Roots {
            cartan,
            roots,
            positive,
            simple: [short[0].clone(), long[0].clone()],
        })
    }

    /// The Cartan element with `a_i(h) = 1` for `i` in `s` and `0` otherwise.
    fn grading_for(&self, s: &[usize]) -> Result<Vec<Rational>> {
        let target = |i: usize| {
            if s.contains(&i) {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        };
        let [a, b] = &self.simple;
        // Solve x * a(H1) + y * a(H2) = t1, x * b(H1) + y * b(H2) = t2.
        let det = &a[0] * &b[1] - &a[1] * &b[0];
        if det == Rational::ZERO {
            return Err(Error::Structure("g2 simple roots are dependent".into()));
        }
        let (t1, t2) = (target(1), target(2));
        let x = (&t1 * &b[1] - &t2 * &a[1]) / &det;
        let y = (&a[0] * &t2 - &b[0] * &t1) / &det;
        Ok((0..self.cartan[0].len())
            .map(|i| &x * &self.cartan[0][i] + &y * &self.cartan[1][i])
            .collect())
    }

    /// Value of a root functional on a Cartan element given by its diagonal.
    fn value(&self, alpha: &[Rational; 2], h: &[Rational]) -> Rational {
        // h = x H1 + y H2; recover (x, y) from two coordinates where the basis is independent.
        let size = h.len();
        for i in 0..size {
            for j in i + 1..size {
                let det = &self.cartan[0][i] * &self.cartan[1][j]
                    - &self.cartan[0][j] * &self.cartan[1][i];
                if det != Rational::ZERO {
                    let x = (&h[i] * &self.cartan[1][j] - &h[j] * &self.cartan[1][i]) / &det;
                    let y = (&self.cartan[0][i] * &h[j] - &self.cartan[0][j] * &h[i]) / &det;
                    return x * &alpha[0] + y * &alpha[1];
                }
            }
        }
        Rational::ZERO
    }

    fn marked_for(&self, h: &[Rational]) -> Vec<usize> {
        (0..2)
            .filter(|&i| self.value(&self.simple[i], h).sign() == Ordering::Greater)
            .map(|i| i + 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_algebra;

    fn par(ty: LieType, rank: usize, d: ParabolicDescription) -> ParabolicSpec {
        build_parabolic(&build_algebra(ty, rank).unwrap(), d).unwrap()
    }

    #[test]
    fn sl4_three_one() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        assert_eq!(p.dim_n(), 3);
        assert_eq!(p.dim_l(), 9);
        assert_eq!(p.marked_roots(), &[3]);
    }

    #[test]
    fn so10_end_nodes() {
        let p = par(LieType::D, 5, ParabolicDescription::MarkedRoots(vec![4, 5]));
        assert_eq!((p.dim_l(), p.dim_n()), (17, 14));
        assert!(p.flag_is_isotropic());
    }

    #[test]
    fn g2_parabolics() {
        let b = par(LieType::G2, 2, ParabolicDescription::G2(G2Parabolic::Borel));
        assert_eq!((b.dim_l(), b.dim_n()), (2, 6));
        for kind in [G2Parabolic::Line, G2Parabolic::Plane] {
            let p = par(LieType::G2, 2, ParabolicDescription::G2(kind));
            assert_eq!((p.dim_l(), p.dim_n()), (4, 5));
            assert_eq!(p.marked_roots(), kind.marked_roots());
        }
    }

    #[test]
    fn isotropy_violation() {
        let g = build_algebra(LieType::C, 2).unwrap();
        let err = build_parabolic(&g, ParabolicDescription::Blocks(vec![2, 1])).unwrap_err();
        assert!(matches!(err, Error::Isotropy(_)));
    }

    #[test]
    fn bad_block_data() {
        let g = build_algebra(LieType::A, 3).unwrap();
        assert!(build_parabolic(&g, ParabolicDescription::Blocks(vec![2, 1])).is_err());
        assert!(build_parabolic(&g, ParabolicDescription::Blocks(vec![4, 0])).is_err());
        assert!(build_parabolic(&g, ParabolicDescription::MarkedRoots(vec![4])).is_err());
    }

    #[test]
    fn zero_bound_sample_is_zero() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        assert!(p.sample_pperp(4, 1, 0, 0).is_zero());
    }
}
