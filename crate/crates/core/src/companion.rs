//! Companion-matrix sections for type A parabolics.
//!
//! Cells `(a, b)` with `1 <= b <= n_a` label the standard basis, block by block:
//! cell `(a, b)` is coordinate `n_1 + ... + n_(a-1) + b - 1`. The walk `s` starts at
//! `(k, 1)`; from `(a, b)` it moves to the largest `a' < a` with a cell in column
//! `b`, and otherwise to the largest `a'` with a cell in column `b + 1`. Step `j` is
//! a decrease when the block index drops.
//!
//! With `eps_j = 1` at decreases, `E` has `t^(-eps_j)` at row `s(j)`, column
//! `s(j-1)`, and `A(f) = E - sum_j f_j e_{s(0), s(j)}`. Then
//! `c_j(t A) = t^(m_(j-1)) f_(j-1)` where `m` is the `gl_n` Levi sequence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::SeriesMatrix;
use crate::series::{Rational, Series, Truth, Valuation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompanionPlan {
    pub blocks: Vec<usize>,
    /// The walk `s(0), ..., s(n-1)` as 1-based cells `(a, b)`.
    pub s: Vec<(usize, usize)>,
    /// `eps_1, ..., eps_(n-1)`.
    pub eps: Vec<u8>,
}

impl CompanionPlan {
    pub fn size(&self) -> usize {
        self.s.len()
    }

    /// Coordinate index of a cell.
    pub fn index(&self, cell: (usize, usize)) -> usize {
        let (a, b) = cell;
        self.blocks[..a - 1].iter().sum::<usize>() + b - 1
    }

    /// `m_0, ..., m_(n-1)` read off the walk: `m_j = 1 + #{i <= j : i is not a decrease}`.
    pub fn m_sequence(&self) -> Vec<usize> {
        let mut m = vec![1];
        for &e in &self.eps {
            let last = *m.last().expect("nonempty");
            m.push(last + 1 - e as usize);
        }
        m
    }

    /// 1-based positions `j` of the decreases.
    pub fn decreases(&self) -> Vec<usize> {
        self.eps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

pub fn build_plan(blocks: &[usize]) -> Result<CompanionPlan> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::InvalidParabolic(
            "block sizes must be positive".into(),
        ));
    }
    let k = blocks.len();
    let n: usize = blocks.iter().sum();
    let has = |a: usize, b: usize| blocks[a - 1] >= b;
    let mut s = vec![(k, 1)];
    let mut eps = Vec::with_capacity(n - 1);
    while s.len() < n {
        let (a, b) = *s.last().expect("nonempty");
        if let Some(a2) = (1..a).rev().find(|&a2| has(a2, b)) {
            s.push((a2, b));
            eps.push(1);
        } else {
            let a2 = (1..=k)
                .rev()
                .find(|&a2| has(a2, b + 1))
                .ok_or_else(|| Error::Structure("companion walk stopped early".into()))?;
            s.push((a2, b + 1));
            eps.push(u8::from(a2 < a));
        }
    }
    Ok(CompanionPlan {
        blocks: blocks.to_vec(),
        s,
        eps,
    })
}

/// `A(f_0, ..., f_(n-1))`; every `f_j` must lie in `O`.
pub fn companion_matrix(plan: &CompanionPlan, f: &[Series]) -> Result<SeriesMatrix> {
    let n = plan.size();
    if f.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: f.len(),
        });
    }
    for (index, fj) in f.iter().enumerate() {
        match fj.valuation() {
            Valuation::Finite(v) if v < 0 => {
                return Err(Error::NegativeValuation {
                    index,
                    valuation: v,
                })
            }
            v if v.at_least(0) != Truth::True => {
                return Err(Error::Precondition(format!(
                    "f_{index} is not known to lie in O"
                )))
            }
            _ => {}
        }
    }
    let mut a = SeriesMatrix::zeros(n);
    for j in 1..n {
        let e = -(plan.eps[j - 1] as i64);
        a.set(
            plan.index(plan.s[j]),
            plan.index(plan.s[j - 1]),
            Series::monomial(Rational::from(1), e, None),
        );
    }
    let top = plan.index(plan.s[0]);
    for (j, fj) in f.iter().enumerate() {
        let col = plan.index(plan.s[j]);
        let v = a.get(top, col) - fj;
        a.set(top, col, v);
    }
    Ok(a)
}

/// Trace-free variant `A - (tr A / n) Id`.
pub fn sl_companion_matrix(plan: &CompanionPlan, f: &[Series]) -> Result<SeriesMatrix> {
    let a = companion_matrix(plan, f)?;
    let n = plan.size();
    let shift = a.trace().div_int(n as i64);
    Ok(a.sub(&SeriesMatrix::identity(n).scale(&shift)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_for_blocks_2_1_4() {
        let p = build_plan(&[2, 1, 4]).unwrap();
        assert_eq!(
            p.s,
            vec![(3, 1), (2, 1), (1, 1), (3, 2), (1, 2), (3, 3), (3, 4)]
        );
        assert_eq!(p.eps, vec![1, 1, 0, 1, 0, 0]);
        assert_eq!(p.decreases(), vec![1, 2, 4]);
        assert_eq!(p.m_sequence(), vec![1, 1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn single_block_and_borel() {
        assert!(build_plan(&[5]).unwrap().eps.iter().all(|&e| e == 0));
        assert!(build_plan(&[1, 1, 1, 1])
            .unwrap()
            .eps
            .iter()
            .all(|&e| e == 1));
    }

    #[test]
    fn zero_f_is_nilpotent() {
        let p = build_plan(&[2, 1, 4]).unwrap();
        let f = vec![Series::exact_zero(); 7];
        let a = companion_matrix(&p, &f).unwrap();
        let c = a.char_poly_coeffs();
        assert!(c.as_slice().iter().all(Series::is_zero));
    }

    #[test]
    fn rejects_poles() {
        let p = build_plan(&[1, 1]).unwrap();
        let f = vec![
            Series::monomial(Rational::from(1), -1, None),
            Series::exact_zero(),
        ];
        assert_eq!(
            companion_matrix(&p, &f).unwrap_err(),
            Error::NegativeValuation {
                index: 0,
                valuation: -1
            }
        );
    }
}
