//! Richardson Jordan types, Newton polygons, edge polynomials and the component
//! and codimension bookkeeping for type D.
//!
//! A point is a monic polynomial `lambda^D + f_1 lambda^(D-1) + ... + f_D` with
//! `f_i` in `O`; `rho(alpha, beta)` is the `t^alpha` coefficient of `f_(D - beta)`.
//! It lies in the Newton polygon of slopes `-delta_1, ..., -delta_mu` when
//! `rho(alpha, beta) != 0` forces `alpha >= j` for the `j` with
//! `delta_1 + ... + delta_(j-1) < D - beta <= delta_1 + ... + delta_j`.

use serde::Serialize;

use crate::degrees::Partition;
use crate::error::{Error, Result};
use crate::lie::LieType;
use crate::linalg::QMatrix;
use crate::parabolic::{random_element, trial_rng, ParabolicSpec};
use crate::poly::Poly;
use crate::series::{Rational, Series, Truth};

/// Default seed for the generic samples of the Richardson oracle.
pub const RICHARDSON_SEED: u64 = 0x5eed;

/// Jordan type of a nilpotent matrix from the ranks of its powers:
/// `#{blocks of size >= k} = rank(Y^(k-1)) - rank(Y^k)`.
pub fn jordan_type(y: &QMatrix) -> Partition {
    let n = y.rows();
    let mut ranks = vec![n];
    let mut power = QMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        power = power.mul(y);
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            break;
        }
        ranks.push(r);
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(at_least).conjugate()
}

/// Jordan type of a generic element of the nilradical.
///
/// Three independent integer samples must agree; on disagreement the coefficient
/// bound grows tenfold, up to three times.
pub fn richardson_jordan_type(par: &ParabolicSpec) -> Result<Partition> {
    richardson_with_seed(par, RICHARDSON_SEED)
}

pub fn richardson_with_seed(par: &ParabolicSpec, seed: u64) -> Result<Partition> {
    let size = par.realization().matrix_size();
    let mut bound = 10;
    let mut seen = Vec::new();
    for attempt in 0..4u64 {
        let types: Vec<Partition> = (0..3u64)
            .map(|k| {
                let mut rng = trial_rng(seed, attempt * 3 + k);
                jordan_type(&random_element(par.n_basis(), size, &mut rng, bound))
            })
            .collect();
        if types.iter().all(|t| *t == types[0]) {
            return Ok(types[0].clone());
        }
        seen = types;
        bound *= 10;
    }
    Err(Error::Genericity(format!("{seen:?}")))
}

/// Checks the parity rules for nilpotent orbits of `so_2n`: even parts occur with
/// even multiplicity, hence the parts pair up `(delta_(2j-1), delta_(2j))` with equal
/// parity.
pub fn check_orthogonal_type(delta: &Partition) -> Result<()> {
    let parts = delta.parts();
    if !parts.len().is_multiple_of(2) {
        return Err(Error::Structure(format!(
            "odd number of Jordan blocks in {parts:?}"
        )));
    }
    for w in parts.chunks(2) {
        if w[0] % 2 != w[1] % 2 {
            return Err(Error::Structure(format!("unpaired parities in {parts:?}")));
        }
    }
    for p in parts.iter().filter(|p| *p % 2 == 0) {
        if parts.iter().filter(|q| *q == p).count() % 2 != 0 {
            return Err(Error::Structure(format!(
                "even part {p} with odd multiplicity"
            )));
        }
    }
    Ok(())
}

/// An edge of even slope `-delta_tilde` and its lattice points `(alpha, beta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenEdge {
    /// 1-based index among the distinct parts.
    pub index: usize,
    pub delta_tilde: usize,
    pub multiplicity: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub delta: Vec<usize>,
    pub degree: usize,
    /// `delta_1 + ... + delta_j` for `j = 0..=mu`.
    pub partial_sums: Vec<usize>,
    pub even_edges: Vec<EvenEdge>,
}

impl NewtonPolygon {
    pub fn new(delta: &Partition) -> NewtonPolygon {
        let parts = delta.parts().to_vec();
        let mut partial_sums = vec![0];
        for p in &parts {
            partial_sums.push(partial_sums.last().expect("nonempty") + p);
        }
        let degree = *partial_sums.last().expect("nonempty");
        // Distinct parts and multiplicities.
        let mut distinct: Vec<(usize, usize)> = Vec::new();
        for &p in &parts {
            match distinct.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => distinct.push((p, 1)),
            }
        }
        let mut even_edges = Vec::new();
        let (mut e_before, mut weight_before) = (0, 0);
        for (idx, &(dt, e)) in distinct.iter().enumerate() {
            if dt % 2 == 0 {
                let pairs = (0..=e)
                    .map(|s| (e_before + s, degree - weight_before - s * dt))
                    .collect();
                even_edges.push(EvenEdge {
                    index: idx + 1,
                    delta_tilde: dt,
                    multiplicity: e,
                    pairs,
                });
            }
            e_before += e;
            weight_before += e * dt;
        }
        NewtonPolygon {
            delta: parts,
            degree,
            partial_sums,
            even_edges,
        }
    }

    pub fn mu(&self) -> usize {
        self.delta.len()
    }

    /// Least admissible `alpha` for the coefficient of `lambda^beta`, `beta < D`.
    pub fn min_alpha(&self, beta: usize) -> usize {
        assert!(beta < self.degree);
        let k = self.degree - beta;
        (1..=self.mu())
            .find(|&j| self.partial_sums[j - 1] < k && k <= self.partial_sums[j])
            .expect("0 < D - beta <= D")
    }

    /// Whether the monomial `lambda^beta t^alpha` lies in the shaded region.
    pub fn allows(&self, alpha: usize, beta: usize) -> bool {
        if beta >= self.degree {
            return beta == self.degree && alpha == 0;
        }
        alpha >= self.min_alpha(beta)
    }
}

/// The coefficients `f_1, ..., f_D` of a monic polynomial in `lambda` over `O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPoint {
    pub f: Vec<Series>,
}

impl NewtonPoint {
    pub fn new(f: Vec<Series>) -> NewtonPoint {
        NewtonPoint { f }
    }

    /// `lambda^2n + c_2 lambda^(2n-2) + ... + c_(2n-2) lambda^2 + c_2n`, with
    /// `c_2n = p_n^2`.
    pub fn from_even(evens: &[Series], c_top: Series) -> NewtonPoint {
        let mut f = Vec::with_capacity(2 * evens.len() + 2);
        for c in evens {
            f.push(Series::exact_zero());
            f.push(c.clone());
        }
        f.push(Series::exact_zero());
        f.push(c_top);
        NewtonPoint { f }
    }

    /// The point `lambda^D + rho * lambda^beta t^alpha`.
    pub fn monomial(degree: usize, alpha: usize, beta: usize, rho: Rational) -> NewtonPoint {
        let mut f = vec![Series::exact_zero(); degree];
        f[degree - beta - 1] = Series::monomial(rho, alpha as i64, None);
        NewtonPoint { f }
    }

    pub fn degree(&self) -> usize {
        self.f.len()
    }

    /// `rho(alpha, beta)`; `None` when unknown at the available precision.
    pub fn rho(&self, alpha: usize, beta: usize) -> Option<Rational> {
        let d = self.degree();
        if beta == d {
            return Some(if alpha == 0 {
                Rational::from(1)
            } else {
                Rational::from(0)
            });
        }
        self.f[d - beta - 1].coeff(alpha as i64)
    }
}

pub fn polygon_membership(point: &NewtonPoint, polygon: &NewtonPolygon) -> Result<Truth> {
    check_degree(point, polygon)?;
    let d = polygon.degree;
    Ok((0..d)
        .map(|beta| {
            let fi = &point.f[d - beta - 1];
            fi.valuation().at_least(polygon.min_alpha(beta) as i64)
        })
        .collect())
}

fn check_degree(point: &NewtonPoint, polygon: &NewtonPolygon) -> Result<()> {
    if point.degree() != polygon.degree {
        return Err(Error::SizeMismatch {
            expected: polygon.degree,
            got: point.degree(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePolynomial {
    pub edge: usize,
    pub delta_tilde: usize,
    pub multiplicity: usize,
    /// `rho(alpha_(j,s), beta_(j,s))` for `s = 0..=e_j`; `q_j(u) = sum_s c_s u^(e_j - s)`.
    #[serde(serialize_with = "serialize_rationals")]
    pub coeffs: Vec<Rational>,
}

fn serialize_rationals<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl EdgePolynomial {
    pub fn poly(&self) -> Poly {
        Poly::from_descending(&self.coeffs)
    }

    pub fn is_square(&self) -> bool {
        self.poly().is_square()
    }
}

/// Edge polynomials of every even edge; `None` if a needed coefficient is unknown.
pub fn edge_polynomials(
    point: &NewtonPoint,
    polygon: &NewtonPolygon,
) -> Result<Option<Vec<EdgePolynomial>>> {
    check_degree(point, polygon)?;
    let mut out = Vec::new();
    for edge in &polygon.even_edges {
        let mut coeffs = Vec::with_capacity(edge.pairs.len());
        for &(alpha, beta) in &edge.pairs {
            match point.rho(alpha, beta) {
                Some(c) => coeffs.push(c),
                None => return Ok(None),
            }
        }
        out.push(EdgePolynomial {
            edge: edge.index,
            delta_tilde: edge.delta_tilde,
            multiplicity: edge.multiplicity,
            coeffs,
        });
    }
    Ok(Some(out))
}

/// Polygon membership together with squareness of every even-edge polynomial.
pub fn d_membership(point: &NewtonPoint, polygon: &NewtonPolygon) -> Result<Truth> {
    let inside = polygon_membership(point, polygon)?;
    if inside == Truth::False {
        return Ok(Truth::False);
    }
    let squares = match edge_polynomials(point, polygon)? {
        None => Truth::Unknown,
        Some(edges) => edges
            .iter()
            .filter(|e| e.multiplicity % 2 == 0)
            .map(|e| Truth::from_bool(e.is_square()))
            .collect(),
    };
    Ok(inside.and(squares))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SegmentCase {
    /// Interior segment: irreducible, singular.
    Interior,
    /// Starts at the leading coefficient: an affine space.
    Leading,
    /// Ends at the Pfaffian square: irreducible, singular.
    Trailing,
    /// Covers everything: all parts even, two components.
    Full,
}

impl SegmentCase {
    pub fn number(self) -> u8 {
        match self {
            SegmentCase::Interior => 1,
            SegmentCase::Leading => 2,
            SegmentCase::Trailing => 3,
            SegmentCase::Full => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub a: usize,
    pub b: usize,
    pub case: SegmentCase,
    pub case_number: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub delta: Vec<usize>,
    /// Vertex indices `alpha` of boundary coefficients on even edges.
    pub index_set: Vec<usize>,
    pub segments: Vec<Segment>,
    pub component_count: usize,
    pub singular: bool,
    pub two_components: bool,
}

/// Splits the even-edge vertices into maximal segments and classifies them.
///
/// Vertex `alpha` is the boundary coefficient `rho(alpha, D - delta_1 - ... - delta_alpha)`;
/// the vertices of the edge with slope `-delta_tilde_j` are
/// `e_1 + ... + e_(j-1) + s` for `s = 0..=e_j`.
pub fn component_analysis(delta: &Partition) -> ComponentReport {
    let polygon = NewtonPolygon::new(delta);
    let mu = polygon.mu();
    let mut index_set: Vec<usize> = polygon
        .even_edges
        .iter()
        .flat_map(|e| e.pairs.iter().map(|&(alpha, _)| alpha))
        .collect();
    index_set.sort_unstable();
    index_set.dedup();
    let mut segments = Vec::new();
    let mut i = 0;
    while i < index_set.len() {
        let a = index_set[i];
        let mut b = a;
        while i + 1 < index_set.len() && index_set[i + 1] == b + 1 {
            i += 1;
            b += 1;
        }
        let case = match (a == 0, b == mu) {
            (false, false) => SegmentCase::Interior,
            (true, false) => SegmentCase::Leading,
            (false, true) => SegmentCase::Trailing,
            (true, true) => SegmentCase::Full,
        };
        segments.push(Segment {
            a,
            b,
            case,
            case_number: case.number(),
        });
        i += 1;
    }
    let two_components = segments.iter().any(|s| s.case == SegmentCase::Full);
    let singular = segments
        .iter()
        .any(|s| matches!(s.case, SegmentCase::Interior | SegmentCase::Trailing));
    ComponentReport {
        delta: delta.parts().to_vec(),
        index_set,
        segments,
        component_count: if two_components { 2 } else { 1 },
        singular,
        two_components,
    }
}

/// The sequence `m_1, ..., m_n` of the Newton polygon: `m_j = m~_(2j-1)` where
/// `m~_0, ..., m~_(2n-1)` lists `j` repeated `delta_j` times (`delta_mu - 1` times
/// for the last part) followed by `mu / 2`.
pub fn polygon_m_sequence(delta: &Partition) -> Vec<usize> {
    let parts = delta.parts();
    let mu = parts.len();
    let mut tilde = Vec::new();
    for (j, &p) in parts.iter().enumerate() {
        let times = if j + 1 == mu { p - 1 } else { p };
        tilde.extend(std::iter::repeat_n(j + 1, times));
    }
    tilde.push(mu / 2);
    tilde.iter().skip(1).step_by(2).copied().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub n: usize,
    pub delta: Vec<usize>,
    pub conjugate: Vec<usize>,
    pub n_even: usize,
    pub n_odd: usize,
    pub m: Vec<usize>,
    pub sum_j_delta: usize,
    pub sum_conjugate_squares: usize,
    pub dim_l: usize,
    pub dim_n: usize,
    pub sum_m: usize,
}

/// Verifies the partition identity `-2n + 2 sum j delta_j = sum n'_j^2`, the Levi
/// dimension `2 dim l = sum n'_j^2 - 2 n_odd`, and
/// `2 sum m = sum j delta_j + n_odd - mu` together with `sum m = n^2 - dim n - n_ev`.
pub fn codim_report(par: &ParabolicSpec) -> Result<CodimReport> {
    if par.lie_type() != LieType::D {
        return Err(Error::Precondition(
            "codimension report needs type D".into(),
        ));
    }
    let n = par.rank();
    let delta = richardson_jordan_type(par)?;
    check_orthogonal_type(&delta)?;
    let parts = delta.parts();
    let mu = parts.len();
    let conj = delta.conjugate();
    let pairs: Vec<&[usize]> = parts.chunks(2).collect();
    let n_even = pairs.iter().filter(|p| p[0] % 2 == 0).count();
    let n_odd = pairs.len() - n_even;
    let m = polygon_m_sequence(&delta);
    let sum_j_delta: usize = parts.iter().enumerate().map(|(j, d)| (j + 1) * d).sum();
    let sum_sq: usize = conj.parts().iter().map(|x| x * x).sum();
    let sum_m: usize = m.iter().sum();
    let (dim_l, dim_n) = (par.dim_l(), par.dim_n());
    let fail = |what: String| Err(Error::Identity(what));
    if 2 * sum_j_delta != sum_sq + 2 * n {
        return fail(format!(
            "-2n + 2 sum j delta_j = {} but sum n'^2 = {sum_sq}",
            2 * sum_j_delta as i64 - 2 * n as i64
        ));
    }
    if 2 * dim_l + 2 * n_odd != sum_sq {
        return fail(format!(
            "2 dim l = {} but sum n'^2 - 2 n_odd = {}",
            2 * dim_l,
            sum_sq as i64 - 2 * n_odd as i64
        ));
    }
    if 2 * sum_m + mu != sum_j_delta + n_odd {
        return fail(format!(
            "2 sum m = {} but sum j delta + n_odd - mu = {}",
            2 * sum_m,
            sum_j_delta as i64 + n_odd as i64 - mu as i64
        ));
    }
    if sum_m + dim_n + n_even != n * n {
        return fail(format!(
            "sum m = {sum_m} but n^2 - dim n - n_ev = {}",
            (n * n) as i64 - dim_n as i64 - n_even as i64
        ));
    }
    Ok(CodimReport {
        n,
        delta: parts.to_vec(),
        conjugate: conj.parts().to_vec(),
        n_even,
        n_odd,
        m,
        sum_j_delta,
        sum_conjugate_squares: sum_sq,
        dim_l,
        dim_n,
        sum_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn relevant_pairs_of_3_3_2_2() {
        let poly = NewtonPolygon::new(&p(&[3, 3, 2, 2]));
        assert_eq!(poly.even_edges.len(), 1);
        assert_eq!(poly.even_edges[0].pairs, vec![(2, 4), (3, 2), (4, 0)]);
    }

    #[test]
    fn boundary_point_of_4_3_1_1() {
        let poly = NewtonPolygon::new(&p(&[4, 3, 1, 1]));
        assert!(poly.allows(1, 5));
        assert!(!poly.allows(0, 5));
    }

    #[test]
    fn zero_point_is_inside() {
        let poly = NewtonPolygon::new(&p(&[3, 3, 2, 2]));
        let zero = NewtonPoint::new(vec![Series::exact_zero(); 10]);
        assert_eq!(polygon_membership(&zero, &poly).unwrap(), Truth::True);
        assert_eq!(d_membership(&zero, &poly).unwrap(), Truth::True);
    }

    #[test]
    fn non_square_discriminant_point() {
        let poly = NewtonPolygon::new(&p(&[3, 3, 2, 2]));
        let one = Rational::from(1);
        let mut f = vec![Series::exact_zero(); 10];
        f[5] = Series::monomial(one.clone(), 2, None);
        f[7] = Series::monomial(one.clone(), 3, None);
        f[9] = Series::monomial(one, 4, None);
        let point = NewtonPoint::new(f);
        assert_eq!(polygon_membership(&point, &poly).unwrap(), Truth::True);
        assert_eq!(d_membership(&point, &poly).unwrap(), Truth::False);
    }

    #[test]
    fn segment_cases() {
        let r = component_analysis(&p(&[3, 3, 2, 2]));
        assert_eq!(r.segments.len(), 1);
        assert_eq!(
            (r.segments[0].a, r.segments[0].b, r.segments[0].case_number),
            (2, 4, 3)
        );
        assert_eq!(r.component_count, 1);
        assert!(r.singular);
        let r = component_analysis(&p(&[4, 4]));
        assert_eq!(r.segments[0].case, SegmentCase::Full);
        assert!(r.two_components);
        let r = component_analysis(&p(&[5, 3, 1, 1]));
        assert!(r.segments.is_empty());
        assert!(!r.singular);
    }

    #[test]
    fn polygon_m_of_3_3_2_2() {
        assert_eq!(polygon_m_sequence(&p(&[3, 3, 2, 2])), vec![1, 2, 2, 3, 2]);
    }

    #[test]
    fn jordan_type_of_shift() {
        let mut y = QMatrix::zeros(4, 4);
        for i in 0..3 {
            y.set(i, i + 1, Rational::from(1));
        }
        assert_eq!(jordan_type(&y).parts(), &[4]);
        assert_eq!(jordan_type(&QMatrix::zeros(3, 3)).parts(), &[1, 1, 1]);
    }
}
