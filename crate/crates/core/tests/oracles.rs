//! Library results against independent computations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parahitchin::degrees::Partition;
use parahitchin::lie::{build_algebra, LieRealization, LieType};
use parahitchin::linalg::{QMatrix, SeriesMatrix};
use parahitchin::parabolic::{build_parabolic, ParabolicDescription};
use parahitchin::poly::Poly;
use parahitchin::series::{Rational, Series};
use parahitchin::type_d::{jordan_type, richardson_jordan_type};

fn zero() -> Rational {
    Rational::from(0)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // Inserting the largest element at `pos` adds `len - pos` inversions.
            let parity = (p.len() - pos) % 2 == 0;
            out.push((q, even == parity));
        }
    }
    out
}

fn leibniz_det(m: &[Vec<Series>]) -> Series {
    let n = m.len();
    let mut total = Series::exact_zero();
    for (p, even) in permutations(n) {
        let mut term = Series::from_int(1);
        for i in 0..n {
            term = &term * &m[i][p[i]];
        }
        total = if even { &total + &term } else { &total - &term };
    }
    total
}

/// `c_j = (-1)^j * (sum of principal j x j minors)`.
fn minor_char_poly(x: &SeriesMatrix) -> Vec<Series> {
    let n = x.size();
    (1..=n)
        .map(|j| {
            let mut total = Series::exact_zero();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != j {
                    continue;
                }
                let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let minor: Vec<Vec<Series>> = idx
                    .iter()
                    .map(|&r| idx.iter().map(|&c| x.get(r, c).clone()).collect())
                    .collect();
                total = &total + &leibniz_det(&minor);
            }
            if j % 2 == 0 {
                total
            } else {
                -total
            }
        })
        .collect()
}

fn random_exact(rng: &mut ChaCha8Rng) -> Series {
    let terms: Vec<(i64, Rational)> = (-1..2)
        .map(|e| (e, Rational::from(rng.gen_range(-4i64..=4))))
        .collect();
    Series::from_terms(terms, None)
}

#[test]
fn faddeev_leverrier_matches_principal_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=5 {
        for _ in 0..4 {
            let x = SeriesMatrix::from_fn(n, |_, _| random_exact(&mut rng));
            let fl = x.char_poly_coeffs();
            let oracle = minor_char_poly(&x);
            for j in 1..=n {
                assert_eq!(fl.c(j), &oracle[j - 1], "n = {n}, j = {j}");
            }
        }
    }
}

/// Pfaffian as a signed sum over perfect matchings.
fn matching_pfaffian(a: &QMatrix) -> Rational {
    fn rec(a: &QMatrix, left: &[usize]) -> Rational {
        if left.is_empty() {
            return Rational::from(1);
        }
        let first = left[0];
        let mut total = zero();
        for k in 1..left.len() {
            let rest: Vec<usize> = left
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != 0 && *i != k)
                .map(|(_, v)| *v)
                .collect();
            let sign = if k % 2 == 1 {
                Rational::from(1)
            } else {
                Rational::from(-1)
            };
            total += sign * a.get(first, left[k]).clone() * rec(a, &rest);
        }
        total
    }
    let idx: Vec<usize> = (0..a.rows()).collect();
    rec(a, &idx)
}

#[test]
fn pfaffian_matches_matching_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 1..=4 {
        let n = 2 * k;
        for _ in 0..5 {
            let mut a = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    let v = Rational::from(rng.gen_range(-5i64..=5));
                    a.set(j, i, -v.clone());
                    a.set(i, j, v);
                }
            }
            let pf = SeriesMatrix::from_qmatrix(&a).pfaffian().unwrap();
            assert_eq!(pf.constant_term().unwrap(), matching_pfaffian(&a));
        }
    }
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut g = QMatrix::identity(n);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let c = Rational::from(rng.gen_range(-2i64..=2));
            let mut e = QMatrix::identity(n);
            e.set(i, j, c);
            g = g.mul(&e);
        }
    }
    g
}

#[test]
fn jordan_type_of_conjugated_blocks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for parts in [
        vec![3, 3, 2, 2],
        vec![4, 1],
        vec![2, 2, 2],
        vec![5, 3, 1, 1],
        vec![1, 1, 1],
    ] {
        let n: usize = parts.iter().sum();
        let mut y = QMatrix::zeros(n, n);
        let mut start = 0;
        for &p in &parts {
            for i in start..start + p - 1 {
                y.set(i, i + 1, Rational::from(1));
            }
            start += p;
        }
        let g = random_unimodular(n, &mut rng);
        let conj = g.mul(&y).mul(&g.inverse().unwrap());
        assert_eq!(jordan_type(&conj).parts(), &parts[..]);
    }
}

#[test]
fn type_a_richardson_is_conjugate_of_blocks() {
    for blocks in [
        vec![3, 1],
        vec![2, 1, 2],
        vec![1, 1, 1, 1],
        vec![2, 3],
        vec![4],
    ] {
        let n: usize = blocks.iter().sum();
        let g = build_algebra(LieType::A, n - 1).unwrap();
        let p = build_parabolic(&g, ParabolicDescription::Blocks(blocks.clone())).unwrap();
        let delta = richardson_jordan_type(&p).unwrap();
        assert_eq!(
            delta,
            Partition::new(blocks.clone()).conjugate(),
            "{blocks:?}"
        );
        let sq: usize = blocks.iter().map(|b| b * b).sum();
        assert_eq!(p.dim_n(), (n * n - sq) / 2);
    }
}

#[test]
fn algebra_dimensions() {
    for rank in 1..=5 {
        let expected = [
            (LieType::A, rank * (rank + 2)),
            (LieType::B, rank * (2 * rank + 1)),
            (LieType::C, rank * (2 * rank + 1)),
            (LieType::D, rank * (2 * rank - 1)),
        ];
        for (ty, dim) in expected {
            if let Ok(g) = build_algebra(ty, rank) {
                assert_eq!(g.dim(), dim, "{ty}{rank}");
                assert_eq!(g.dim(), LieRealization::classical_dim(ty, rank));
            }
        }
    }
    assert_eq!(build_algebra(LieType::G2, 2).unwrap().dim(), 14);
}

#[test]
fn algebra_is_closed_under_bracket() {
    for (ty, rank) in [
        (LieType::B, 2),
        (LieType::C, 3),
        (LieType::D, 4),
        (LieType::G2, 2),
    ] {
        let g = build_algebra(ty, rank).unwrap();
        let basis = g.basis();
        for a in basis.iter().step_by(3) {
            for b in basis.iter().step_by(2) {
                assert!(g.contains(&a.bracket(b)), "{ty}{rank}");
            }
        }
    }
}

/// Square test by extracting a formal square root of the monic polynomial.
fn sqrt_oracle(p: &Poly) -> bool {
    let Some(d) = p.degree() else { return true };
    if d % 2 == 1 {
        return false;
    }
    let f = p.monic();
    let k = d / 2;
    // q = u^k + q_(k-1) u^(k-1) + ... matched against the top k coefficients of f.
    let mut q = vec![zero(); k + 1];
    q[k] = Rational::from(1);
    for i in (0..k).rev() {
        let target = f.coeffs()[k + i].clone();
        let mut known = zero();
        for a in (i + 1)..=k {
            let b = k + i - a;
            if b > i && b <= k {
                known += q[a].clone() * q[b].clone();
            }
        }
        q[i] = (target - known) / Rational::from(2);
    }
    let q = Poly::new(q);
    q.mul(&q) == f
}

#[test]
fn square_test_matches_formal_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let deg = rng.gen_range(0..5);
        let base: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3i64..=3)).collect();
        let p = if rng.gen_bool(0.5) {
            let b = Poly::from_ints(&base);
            b.mul(&b)
        } else {
            Poly::from_ints(&base)
        };
        assert_eq!(p.is_square(), sqrt_oracle(&p), "{p}");
    }
}
