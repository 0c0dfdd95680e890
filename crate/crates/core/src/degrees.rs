//! Fundamental degrees, Levi degrees, the predicted image box and the
//! combinatorics of decreases.
//!
//! Levi degrees `m_i` are 1-based and paired with the generator degrees `d_i` in the
//! fixed generator order: `(c_2, ..., c_n)` in type A, `(c_2, c_4, ..., c_2n)` in
//! types B and C, `(c_2, ..., c_{2n-2}, p_n)` in type D and `(c_2, c_6)` for `g2`.
//! For `gl_n` the sequence `m_0, ..., m_{n-1}` starts with an extra 1, which the
//! trace-free sequence drops.

use std::collections::BTreeMap;

use itertools::Itertools;
use malachite_base::num::basic::traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieType;
use crate::parabolic::ParabolicSpec;
use crate::series::Rational;

/// Degrees of the invariant generators in the fixed generator order.
pub fn fundamental_degrees(ty: LieType, rank: usize) -> Vec<usize> {
    let n = rank;
    match ty {
        LieType::A => (2..=n + 1).collect(),
        LieType::B | LieType::C => (1..=n).map(|i| 2 * i).collect(),
        LieType::D => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
        LieType::G2 => vec![2, 6],
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=top)
                .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
                .collect(),
        )
    }
}

/// The `gl_n` sequence `m_0 <= ... <= m_{n-1}` for flag blocks `(n_1, ..., n_k)`:
/// the value `r` repeated `delta_r` times, where `delta` is the conjugate of the
/// partition formed by the blocks.
pub fn gl_m_sequence(blocks: &[usize]) -> Vec<usize> {
    let delta = Partition::new(blocks.to_vec()).conjugate();
    delta
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &count)| std::iter::repeat_n(r + 1, count))
        .collect()
}

/// Degrees of the simple and central factors of the Levi, computed from the grading.
fn levi_factor_degrees(par: &ParabolicSpec) -> Vec<usize> {
    let groups = par.grading_groups();
    let mut degrees = Vec::new();
    match par.lie_type() {
        LieType::A => {
            for (_, r) in &groups {
                degrees.extend(1..=*r);
            }
            degrees.sort_unstable();
            degrees.remove(0);
        }
        LieType::B | LieType::C | LieType::D => {
            for (value, mult) in &groups {
                if *value > Rational::ZERO {
                    degrees.extend(1..=*mult);
                } else if *value == Rational::ZERO {
                    degrees.extend(orthosymplectic_degrees(par.lie_type(), *mult));
                }
            }
            degrees.sort_unstable();
        }
        LieType::G2 => {
            degrees = match par.marked_roots().len() {
                0 => vec![2, 6],
                1 => vec![1, 2],
                _ => vec![1, 1],
            };
        }
    }
    degrees
}

/// Degrees of the middle factor acting on the zero-graded coordinates.
fn orthosymplectic_degrees(ty: LieType, zero_mult: usize) -> Vec<usize> {
    let s = zero_mult / 2;
    match ty {
        LieType::B | LieType::C => (1..=s).map(|i| 2 * i).collect(),
        LieType::D => match s {
            0 => vec![],
            1 => vec![1],
            _ => (1..s).map(|i| 2 * i).chain(std::iter::once(s)).collect(),
        },
        _ => vec![],
    }
}

/// Half the number of zero-graded coordinates (`s` in the flag description).
pub fn middle_rank(par: &ParabolicSpec) -> usize {
    par.grading()
        .iter()
        .filter(|v| **v == Rational::ZERO)
        .count()
        / 2
}

/// Fundamental degrees of the Levi (trace-free in type A), sorted ascending.
pub fn levi_degrees(par: &ParabolicSpec) -> Vec<usize> {
    levi_factor_degrees(par)
}

/// Levi degrees of a type-A parabolic from the conjugate-partition formula.
pub fn type_a_levi_degrees_from_blocks(blocks: &[usize]) -> Vec<usize> {
    let mut m = gl_m_sequence(blocks);
    m.remove(0);
    m
}

/// Levi degrees paired with the generator order.
///
/// In type D the Pfaffian (degree `n`) is paired with the Pfaffian degree `s` of the
/// `so_2s` factor of the Levi and the remaining degrees are sorted into positions
/// `1, ..., n-1`. This coincides with the Newton-polygon sequence for every good
/// parabolic; plain sorting does not (for `so_10` with root 1 marked it would pair
/// `p_5` with 6).
pub fn paired_levi_degrees(par: &ParabolicSpec) -> Result<Vec<usize>> {
    let mut m = levi_degrees(par);
    if par.lie_type() == LieType::D {
        let good = is_good_parabolic(par);
        if !good.good {
            return Err(Error::BadParabolic {
                violated: good.violated.unwrap_or_default(),
            });
        }
        let s = middle_rank(par);
        let pos = m.iter().rposition(|&x| x == s).ok_or_else(|| {
            Error::Structure(format!("Levi degrees {m:?} lack the Pfaffian degree {s}"))
        })?;
        m.remove(pos);
        m.push(s);
    }
    Ok(m)
}

/// Generator degrees `d_i`, Levi degrees `m_i` and the exponents `-d_i + m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub d: Vec<usize>,
    pub m: Vec<usize>,
    pub exponents: Vec<i64>,
}

impl DegreeProfile {
    pub fn new(d: Vec<usize>, m: Vec<usize>) -> Result<DegreeProfile> {
        if d.len() != m.len() {
            return Err(Error::SizeMismatch {
                expected: d.len(),
                got: m.len(),
            });
        }
        if let Some(i) = (0..d.len()).find(|&i| m[i] < 1 || m[i] > d[i]) {
            return Err(Error::Structure(format!(
                "Levi degree m_{} = {} outside 1..={}",
                i + 1,
                m[i],
                d[i]
            )));
        }
        let exponents = d
            .iter()
            .zip(&m)
            .map(|(&d, &m)| m as i64 - d as i64)
            .collect();
        Ok(DegreeProfile { d, m, exponents })
    }
}

/// The box `sum_i t^(-d_i + m_i) O` predicted for the image of `t^-1 n + g(O)`.
pub fn predicted_image(par: &ParabolicSpec) -> Result<DegreeProfile> {
    let d = fundamental_degrees(par.lie_type(), par.rank());
    let m = paired_levi_degrees(par)?;
    DegreeProfile::new(d, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Goodness {
    pub good: bool,
    /// The failing inequality, for bad type-D parabolics.
    pub violated: Option<String>,
}

/// Type D: `2(n - i_k) >= max(i_1, i_2 - i_1, ..., i_k - i_{k-1}, 4)` for the marked
/// roots `i_1 < ... < i_k`. Every other type is good.
pub fn is_good_parabolic(par: &ParabolicSpec) -> Goodness {
    if par.lie_type() != LieType::D {
        return Goodness {
            good: true,
            violated: None,
        };
    }
    good_type_d(par.rank(), par.marked_roots())
}

pub fn good_type_d(n: usize, marked: &[usize]) -> Goodness {
    let last = marked.last().copied().unwrap_or(0);
    let mut gaps = Vec::new();
    let mut prev = 0;
    for &i in marked {
        gaps.push(i - prev);
        prev = i;
    }
    let rhs = gaps
        .iter()
        .copied()
        .chain(std::iter::once(4))
        .max()
        .unwrap_or(4);
    let lhs = 2 * (n - last);
    if lhs >= rhs {
        Goodness {
            good: true,
            violated: None,
        }
    } else {
        Goodness {
            good: false,
            violated: Some(format!("2(n - i_k) = {lhs} < {rhs}")),
        }
    }
}

/// Cells `(a, b)` with `1 <= b <= j_a`, in lexicographic order.
pub fn cells(js: &[usize]) -> Vec<(usize, usize)> {
    js.iter()
        .enumerate()
        .flat_map(|(a, &j)| (1..=j).map(move |b| (a + 1, b)))
        .collect()
}

/// Number of cells `(a, b)` with `sigma(a, b) = (a', b')` and `a' < a`, where the
/// permutation maps `cells[i]` to `cells[sigma[i]]`.
pub fn count_decreases(cells: &[(usize, usize)], sigma: &[usize]) -> usize {
    cells
        .iter()
        .zip(sigma)
        .filter(|((a, _), &to)| cells[to].0 < *a)
        .count()
}

/// Maximal number of decreases over all permutations: `r - max(j_1, ..., j_k)`.
pub fn lambda_of(js: &[usize]) -> usize {
    js.iter().sum::<usize>() - js.iter().copied().max().unwrap_or(0)
}

/// [`lambda_of`] by enumerating every permutation of the cells.
pub fn lambda_brute_force(js: &[usize]) -> usize {
    let c = cells(js);
    assert!(c.len() <= 9, "brute force limited to 9 cells");
    (0..c.len())
        .permutations(c.len())
        .map(|sigma| count_decreases(&c, &sigma))
        .max()
        .unwrap_or(0)
}

/// Tuples `(j_1, ..., j_k)` with `0 <= j_a <= n_a` and `sum j_a = r`.
pub fn j_tuples(blocks: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn rec(blocks: &[usize], r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match blocks.split_first() {
            None => {
                if r == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&n, rest)) => {
                let room: usize = rest.iter().sum();
                for j in r.saturating_sub(room)..=n.min(r) {
                    prefix.push(j);
                    rec(rest, r - j, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(blocks, r, &mut Vec::new(), &mut out);
    out
}

/// `mu_r = r - m_{r-1}` with the `gl_n` sequence of `blocks`.
pub fn mu_of(r: usize, blocks: &[usize]) -> Result<usize> {
    let n: usize = blocks.iter().sum();
    if r == 0 || r > n {
        return Err(Error::Precondition(format!(
            "mu_r needs 1 <= r <= {n}, got {r}"
        )));
    }
    Ok(r - gl_m_sequence(blocks)[r - 1])
}

/// `max over J_r of lambda`, with each lambda computed by brute force.
pub fn mu_brute_force(r: usize, blocks: &[usize]) -> usize {
    j_tuples(blocks, r)
        .iter()
        .map(|js| lambda_brute_force(js))
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionAudit {
    pub genus: usize,
    pub d: Vec<usize>,
    pub m: Vec<usize>,
    /// `sum_i [(2 d_i - 1)(g - 1) + (d_i - m_i)]`.
    pub lhs: i64,
    /// `dim G (g - 1) + dim G/P`.
    pub rhs: i64,
    /// Amount subtracted from the left side; `n_ev` for bad type-D parabolics.
    pub correction: i64,
    pub holds: bool,
}

/// Riemann–Roch count of the image against the dimension of the moduli space.
///
/// Bad type-D parabolics use the Newton-polygon Levi sequence, whose sum falls
/// short of `n^2 - dim n` by the number `n_ev` of even Jordan blocks; the audit
/// subtracts that amount.
pub fn dimension_audit(par: &ParabolicSpec, genus: usize) -> Result<DimensionAudit> {
    if genus < 2 {
        return Err(Error::Precondition(format!(
            "genus must be at least 2, got {genus}"
        )));
    }
    let d = fundamental_degrees(par.lie_type(), par.rank());
    let good = is_good_parabolic(par);
    let (m, correction) = if good.good {
        (paired_levi_degrees(par)?, 0)
    } else {
        let report = crate::type_d::codim_report(par)?;
        (report.m, report.n_even as i64)
    };
    let g1 = genus as i64 - 1;
    let lhs: i64 = d
        .iter()
        .zip(&m)
        .map(|(&d, &m)| (2 * d as i64 - 1) * g1 + d as i64 - m as i64)
        .sum();
    let rhs = par.dim_g() as i64 * g1 + par.dim_n() as i64;
    Ok(DimensionAudit {
        genus,
        d,
        m,
        lhs,
        rhs,
        correction,
        holds: lhs - correction == rhs,
    })
}

/// `sum_i (2 m_i - 1)` over the Levi degrees, which equals `dim l`.
pub fn levi_dim_from_degrees(par: &ParabolicSpec) -> usize {
    levi_degrees(par).iter().map(|m| 2 * m - 1).sum()
}

/// Histogram of a sequence, used in reports.
pub fn multiplicities(xs: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in xs {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_algebra;
    use crate::parabolic::{build_parabolic, G2Parabolic, ParabolicDescription};

    fn par(ty: LieType, rank: usize, d: ParabolicDescription) -> ParabolicSpec {
        build_parabolic(&build_algebra(ty, rank).unwrap(), d).unwrap()
    }

    #[test]
    fn fundamental_degree_lists() {
        assert_eq!(fundamental_degrees(LieType::A, 3), vec![2, 3, 4]);
        assert_eq!(fundamental_degrees(LieType::D, 5), vec![2, 4, 6, 8, 5]);
        assert_eq!(fundamental_degrees(LieType::G2, 2), vec![2, 6]);
    }

    #[test]
    fn sl4_profile() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        assert_eq!(levi_degrees(&p), vec![1, 2, 3]);
        let prof = predicted_image(&p).unwrap();
        assert_eq!(prof.exponents, vec![-1, -1, -1]);
    }

    #[test]
    fn m_sequence_for_blocks_2_1_4() {
        assert_eq!(gl_m_sequence(&[2, 1, 4]), vec![1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(mu_of(3, &[2, 1, 4]).unwrap(), 2);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(&[1, 1]), 1);
        assert_eq!(lambda_brute_force(&[1, 1]), 1);
        assert_eq!(lambda_of(&[4]), 0);
    }

    #[test]
    fn g2_levi_degrees() {
        for kind in [G2Parabolic::Line, G2Parabolic::Plane] {
            let p = par(LieType::G2, 2, ParabolicDescription::G2(kind));
            assert_eq!(levi_degrees(&p), vec![1, 2]);
        }
        let b = par(LieType::G2, 2, ParabolicDescription::G2(G2Parabolic::Borel));
        assert_eq!(predicted_image(&b).unwrap().exponents, vec![-1, -5]);
    }

    #[test]
    fn type_d_goodness() {
        let bad = par(LieType::D, 5, ParabolicDescription::MarkedRoots(vec![4, 5]));
        assert!(!is_good_parabolic(&bad).good);
        assert!(matches!(
            predicted_image(&bad),
            Err(Error::BadParabolic { .. })
        ));
        let good = par(LieType::D, 5, ParabolicDescription::MarkedRoots(vec![1]));
        assert!(is_good_parabolic(&good).good);
        assert_eq!(paired_levi_degrees(&good).unwrap(), vec![1, 2, 4, 6, 4]);
    }

    #[test]
    fn audit_examples() {
        let sl2 = par(LieType::A, 1, ParabolicDescription::Blocks(vec![1, 1]));
        let a = dimension_audit(&sl2, 2).unwrap();
        assert_eq!((a.lhs, a.rhs), (4, 4));
        let sl4 = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        let a = dimension_audit(&sl4, 2).unwrap();
        assert_eq!((a.lhs, a.rhs), (18, 18));
        let g2 = par(LieType::G2, 2, ParabolicDescription::G2(G2Parabolic::Borel));
        let a = dimension_audit(&g2, 3).unwrap();
        assert_eq!((a.lhs, a.rhs), (34, 34));
    }
}
