//! The local Hitchin map on `t^-1 n + g(O)`: evaluation, inclusion campaigns and
//! witness searches.

use rayon::prelude::*;
use serde::Serialize;

use crate::companion::{build_plan, sl_companion_matrix};
use crate::degrees::{fundamental_degrees, is_good_parabolic, predicted_image};
use crate::error::{Error, Result};
use crate::lie::{LieRealization, LieType};
use crate::linalg::SeriesMatrix;
use crate::parabolic::{ParabolicDescription, ParabolicSpec};
use crate::series::{Rational, Series, Truth, Valuation};
use crate::type_d::{self, NewtonPoint, NewtonPolygon};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_COEFF_BOUND: i64 = 10;
/// Precision is doubled on undecidable tests until it exceeds this.
pub const MAX_PRECISION: usize = 64;

/// Values of the generators in the fixed order `c_2, ...` (with the Pfaffian last in
/// type D).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiImage {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub values: Vec<Series>,
    pub valuations: Vec<Valuation>,
}

impl ChiImage {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `t^k . chi`: the generator of degree `d` is multiplied by `t^(k d)`.
    pub fn weighted_shift(&self, k: i64) -> Vec<Series> {
        self.values
            .iter()
            .zip(&self.degrees)
            .map(|(v, &d)| v.shift(k * d as i64))
            .collect()
    }
}

/// Generator labels in evaluation order.
pub fn generator_labels(ty: LieType, rank: usize) -> Vec<String> {
    let d = fundamental_degrees(ty, rank);
    let mut labels: Vec<String> = d.iter().map(|d| format!("c{d}")).collect();
    if ty == LieType::D {
        labels[rank - 1] = format!("p{rank}");
    }
    labels
}

/// Checks that every coefficient of `phi` lies in the algebra.
pub fn check_in_algebra(g: &LieRealization, phi: &SeriesMatrix) -> Result<()> {
    if phi.size() != g.matrix_size() {
        return Err(Error::SizeMismatch {
            expected: g.matrix_size(),
            got: phi.size(),
        });
    }
    let exps: std::collections::BTreeSet<i64> = (0..phi.size())
        .flat_map(|i| (0..phi.size()).map(move |j| (i, j)))
        .flat_map(|(i, j)| phi.get(i, j).terms().map(|(e, _)| e).collect::<Vec<_>>())
        .collect();
    for e in exps {
        let x = phi.coefficient(e).expect("known coefficient");
        if !g.contains(&x) {
            return Err(Error::NotInAlgebra { exponent: e });
        }
    }
    Ok(())
}

/// `chi(phi)`: `(c_2, ..., c_n)` in type A, `(c_2, c_4, ..., c_2n)` in B and C,
/// `(c_2, ..., c_(2n-2), Pf(J phi))` in D and `(c_2, c_6)` for G2.
///
/// In type D, `c_2n = (-1)^n Pf(J phi)^2` for the anti-diagonal form `J`.
pub fn chi(g: &LieRealization, phi: &SeriesMatrix) -> Result<ChiImage> {
    check_in_algebra(g, phi)?;
    let ty = g.lie_type();
    let rank = g.rank();
    let degrees = fundamental_degrees(ty, rank);
    let c = phi.char_poly_coeffs();
    let values: Vec<Series> = match ty {
        LieType::D => {
            let j = SeriesMatrix::from_qmatrix(g.form().expect("type D has a form"));
            let mut v: Vec<Series> = degrees[..rank - 1]
                .iter()
                .map(|&d| c.c(d).clone())
                .collect();
            v.push(j.mul(phi).pfaffian()?);
            v
        }
        _ => degrees.iter().map(|&d| c.c(d).clone()).collect(),
    };
    let valuations = values.iter().map(Series::valuation).collect();
    Ok(ChiImage {
        labels: generator_labels(ty, rank),
        degrees,
        values,
        valuations,
    })
}

/// Per-coordinate lower bounds on `val(chi_i)` with the Levi degrees they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub d: Vec<usize>,
    pub m: Vec<usize>,
    pub bounds: Vec<i64>,
    /// Whether membership is the Newton-polygon test of a bad type-D parabolic.
    pub newton: bool,
}

/// `-d_i + m_i` for good parabolics. For bad type-D parabolics the `m` of the
/// Newton polygon gives `val(c_2j) >= m_j - 2j` and `val(p_n) >= m_n - n`.
pub fn coordinate_bounds(par: &ParabolicSpec) -> Result<Bounds> {
    if is_good_parabolic(par).good {
        let p = predicted_image(par)?;
        Ok(Bounds {
            d: p.d,
            m: p.m,
            bounds: p.exponents,
            newton: false,
        })
    } else {
        let delta = type_d::richardson_jordan_type(par)?;
        let m = type_d::polygon_m_sequence(&delta);
        let d = fundamental_degrees(par.lie_type(), par.rank());
        let bounds = d
            .iter()
            .zip(&m)
            .map(|(&d, &m)| m as i64 - d as i64)
            .collect();
        Ok(Bounds {
            d,
            m,
            bounds,
            newton: true,
        })
    }
}

/// The characteristic polynomial of `t phi` as a point for the Newton-polygon tests.
pub fn newton_point(image: &ChiImage, rank: usize) -> NewtonPoint {
    let n = rank;
    let evens: Vec<Series> = (0..n - 1)
        .map(|j| image.values[j].shift(2 * (j as i64 + 1)))
        .collect();
    let p = &image.values[n - 1];
    let sq = p * p;
    let top = if n.is_multiple_of(2) { sq } else { -sq };
    NewtonPoint::from_even(&evens, top.shift(2 * n as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub trials: u64,
    /// Initial precision; `None` picks one from the bounds.
    pub precision: Option<usize>,
    pub seed: u64,
    pub coeff_bound: i64,
}

impl VerifyConfig {
    pub fn new(trials: u64, seed: u64) -> VerifyConfig {
        VerifyConfig {
            trials,
            precision: None,
            seed,
            coeff_bound: DEFAULT_COEFF_BOUND,
        }
    }
}

/// `max m + 2` (or `mu + 2` for the Newton polygon), enough to decide every test and
/// to see a valuation equal to its bound.
pub fn default_precision(bounds: &Bounds, mu: Option<usize>) -> usize {
    let m = bounds.m.iter().copied().max().unwrap_or(1);
    mu.map_or(m, |mu| mu.max(m)) + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateReport {
    pub generator: String,
    pub d: usize,
    pub m: usize,
    pub bound: i64,
    pub min_val_observed: Valuation,
    /// Trials in which the valuation equals the bound.
    pub attained: u64,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub reason: String,
    pub precision: usize,
    pub phi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonSummary {
    pub delta: Vec<usize>,
    pub polygon_passes: u64,
    pub d_passes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub schema_version: u32,
    pub parabolic: String,
    pub lie_type: LieType,
    pub rank: usize,
    #[serde(rename = "N")]
    pub precision: usize,
    pub max_precision_used: usize,
    pub trials: u64,
    pub seed: u64,
    pub coeff_bound: i64,
    pub passes: u64,
    pub per_coordinate: Vec<CoordinateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub newton: Option<NewtonSummary>,
    pub failures: Vec<Failure>,
}

impl CampaignReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

struct TrialOutcome {
    valuations: Vec<Valuation>,
    precision: usize,
    polygon: bool,
    d_member: bool,
    failure: Option<Failure>,
}

fn run_trial(
    par: &ParabolicSpec,
    bounds: &Bounds,
    polygon: Option<&NewtonPolygon>,
    cfg: &VerifyConfig,
    start: usize,
    trial: u64,
) -> TrialOutcome {
    let mut precision = start;
    loop {
        let phi = par.sample_pperp(precision, cfg.seed, trial, cfg.coeff_bound);
        let fail = |reason: String| Failure {
            trial,
            reason,
            precision,
            phi: phi.to_string(),
        };
        let image = match chi(par.realization(), &phi) {
            Ok(im) => im,
            Err(e) => {
                return TrialOutcome {
                    valuations: vec![],
                    precision,
                    polygon: false,
                    d_member: false,
                    failure: Some(fail(e.to_string())),
                }
            }
        };
        let boxed: Vec<Truth> = image
            .valuations
            .iter()
            .zip(&bounds.bounds)
            .map(|(v, &b)| v.at_least(b))
            .collect();
        let (poly_t, d_t) = match polygon {
            Some(pg) => {
                let pt = newton_point(&image, par.rank());
                (
                    type_d::polygon_membership(&pt, pg).unwrap_or(Truth::False),
                    type_d::d_membership(&pt, pg).unwrap_or(Truth::False),
                )
            }
            None => (Truth::True, Truth::True),
        };
        let all: Truth = boxed.iter().copied().chain([poly_t, d_t]).collect();
        if all == Truth::Unknown && precision < MAX_PRECISION {
            precision *= 2;
            continue;
        }
        let failure = match all {
            Truth::True => None,
            Truth::Unknown => Some(fail("undecided at maximal precision".into())),
            Truth::False => {
                let mut reasons: Vec<String> = boxed
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.is_false())
                    .map(|(i, _)| {
                        format!(
                            "val({}) = {} < {}",
                            image.labels[i], image.valuations[i], bounds.bounds[i]
                        )
                    })
                    .collect();
                if poly_t.is_false() {
                    reasons.push("outside the Newton polygon".into());
                } else if d_t.is_false() {
                    reasons.push("edge polynomial is not a square".into());
                }
                Some(fail(reasons.join("; ")))
            }
        };
        return TrialOutcome {
            valuations: image.valuations,
            precision,
            polygon: poly_t.is_true(),
            d_member: d_t.is_true(),
            failure,
        };
    }
}

/// Samples `phi` in `t^-1 n + g(O)` and checks the predicted bounds (and, for bad
/// type-D parabolics, membership of `t . chi(phi)` in the Newton-polygon space).
///
/// Trials run in parallel; each has its own random stream, and the merge runs in
/// trial order, so the report depends only on the configuration.
pub fn verify_inclusion(par: &ParabolicSpec, cfg: &VerifyConfig) -> Result<CampaignReport> {
    let bounds = coordinate_bounds(par)?;
    let polygon = if bounds.newton {
        Some(NewtonPolygon::new(&type_d::richardson_jordan_type(par)?))
    } else {
        None
    };
    let precision = cfg
        .precision
        .unwrap_or_else(|| default_precision(&bounds, polygon.as_ref().map(NewtonPolygon::mu)));
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(par, &bounds, polygon.as_ref(), cfg, precision, trial))
        .collect();
    let labels = generator_labels(par.lie_type(), par.rank());
    let k = labels.len();
    let mut min_val = vec![Valuation::Infinite; k];
    let mut attained = vec![0u64; k];
    let mut coord_fail = vec![false; k];
    let mut failures = Vec::new();
    let (mut passes, mut max_prec) = (0, precision);
    let (mut poly_passes, mut d_passes) = (0, 0);
    for o in outcomes {
        max_prec = max_prec.max(o.precision);
        for (i, v) in o.valuations.iter().enumerate() {
            min_val[i] = min_val[i].meet(*v);
            if v.equals(bounds.bounds[i]).is_true() {
                attained[i] += 1;
            }
            if v.at_least(bounds.bounds[i]).is_false() {
                coord_fail[i] = true;
            }
        }
        poly_passes += u64::from(o.polygon);
        d_passes += u64::from(o.d_member);
        match o.failure {
            None => passes += 1,
            Some(f) => failures.push(f),
        }
    }
    let per_coordinate = (0..k)
        .map(|i| CoordinateReport {
            generator: labels[i].clone(),
            d: bounds.d[i],
            m: bounds.m[i],
            bound: bounds.bounds[i],
            min_val_observed: min_val[i],
            attained: attained[i],
            status: if coord_fail[i] { "fail" } else { "pass" }.into(),
        })
        .collect();
    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        parabolic: par.description().to_string(),
        lie_type: par.lie_type(),
        rank: par.rank(),
        precision,
        max_precision_used: max_prec,
        trials: cfg.trials,
        seed: cfg.seed,
        coeff_bound: cfg.coeff_bound,
        passes,
        per_coordinate,
        newton: polygon.map(|pg| NewtonSummary {
            delta: pg.delta,
            polygon_passes: poly_passes,
            d_passes,
        }),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateWitness {
    pub generator: String,
    pub target: i64,
    pub found: bool,
    /// Trial index of the sample, or `None` for the companion section.
    pub trial: Option<u64>,
    pub valuation: Option<Valuation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub schema_version: u32,
    pub parabolic: String,
    pub method: String,
    pub targets: Vec<i64>,
    pub coordinates: Vec<CoordinateWitness>,
    /// The companion witness in type A.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<Series>>,
    pub samples_used: u64,
}

impl WitnessReport {
    pub fn all_found(&self) -> bool {
        self.coordinates.iter().all(|c| c.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessConfig {
    pub budget: u64,
    pub seed: u64,
    pub coeff_bound: i64,
    pub precision: Option<usize>,
}

impl WitnessConfig {
    pub fn new(budget: u64, seed: u64) -> WitnessConfig {
        WitnessConfig {
            budget,
            seed,
            coeff_bound: DEFAULT_COEFF_BOUND,
            precision: None,
        }
    }
}

/// Block sizes of a type-A parabolic, first block highest in the grading.
pub fn type_a_blocks(par: &ParabolicSpec) -> Vec<usize> {
    match par.description() {
        ParabolicDescription::Blocks(b) => b.clone(),
        _ => par.grading_groups().iter().map(|(_, m)| *m).collect(),
    }
}

/// The companion section `A` with `val(c_d(A)) = target` exactly, in `t^-1 n + sl_n(O)`.
///
/// `c_j(t A) = t^(m_(j-1)) f_(j-1)`, so `f_0 = 0` and `f_(j-1) = t^(target_j + j - m_(j-1))`.
pub fn companion_witness(par: &ParabolicSpec, targets: &[i64]) -> Result<SeriesMatrix> {
    if par.lie_type() != LieType::A {
        return Err(Error::Precondition(
            "companion sections exist in type A only".into(),
        ));
    }
    let plan = build_plan(&type_a_blocks(par))?;
    let m = plan.m_sequence();
    let n = plan.size();
    let mut f = vec![Series::exact_zero(); n];
    for j in 2..=n {
        let e = targets[j - 2] + j as i64 - m[j - 1] as i64;
        f[j - 1] = Series::monomial(Rational::from(1), e, None);
    }
    let a = sl_companion_matrix(&plan, &f)?;
    check_in_pperp(par, &a)?;
    Ok(a)
}

/// Checks `phi` lies in `t^-1 n + g(O)`.
pub fn check_in_pperp(par: &ParabolicSpec, phi: &SeriesMatrix) -> Result<()> {
    check_in_algebra(par.realization(), phi)?;
    match phi.valuation() {
        Valuation::Finite(v) if v < -1 => Err(Error::Precondition(format!("pole of order {}", -v))),
        _ => {
            let y = phi.coefficient(-1).expect("known");
            if par.in_nilradical(&y) {
                Ok(())
            } else {
                Err(Error::Precondition(
                    "polar part is not in the nilradical".into(),
                ))
            }
        }
    }
}

/// Looks for `phi` with `val(chi_i(phi))` equal to the target, coordinate by coordinate.
///
/// Type A uses the companion section; other types sample until every target is
/// hit or the budget runs out. Not finding a witness is inconclusive.
pub fn witness_search(
    par: &ParabolicSpec,
    targets: Option<&[i64]>,
    cfg: &WitnessConfig,
) -> Result<WitnessReport> {
    let bounds = coordinate_bounds(par)?;
    let labels = generator_labels(par.lie_type(), par.rank());
    let targets: Vec<i64> = targets.map_or_else(|| bounds.bounds.clone(), <[i64]>::to_vec);
    if targets.len() != bounds.bounds.len() {
        return Err(Error::SizeMismatch {
            expected: bounds.bounds.len(),
            got: targets.len(),
        });
    }
    if let Some(i) = (0..targets.len()).find(|&i| targets[i] < bounds.bounds[i]) {
        return Err(Error::Precondition(format!(
            "target {} for {} is below the bound {}",
            targets[i], labels[i], bounds.bounds[i]
        )));
    }
    if par.lie_type() == LieType::A {
        let a = companion_witness(par, &targets)?;
        let image = chi(par.realization(), &a)?;
        let coordinates = (0..targets.len())
            .map(|i| CoordinateWitness {
                generator: labels[i].clone(),
                target: targets[i],
                found: image.valuations[i] == Valuation::Finite(targets[i]),
                trial: None,
                valuation: Some(image.valuations[i]),
            })
            .collect();
        return Ok(WitnessReport {
            schema_version: SCHEMA_VERSION,
            parabolic: par.description().to_string(),
            method: "companion".into(),
            targets,
            coordinates,
            matrix: Some(a.to_string()),
            chi: Some(image.values),
            samples_used: 0,
        });
    }
    let base = cfg.precision.unwrap_or_else(|| {
        let top = targets
            .iter()
            .zip(&bounds.d)
            .map(|(&t, &d)| t + d as i64)
            .max()
            .unwrap_or(1);
        top.max(1) as usize + 2
    });
    let mut coordinates: Vec<CoordinateWitness> = (0..targets.len())
        .map(|i| CoordinateWitness {
            generator: labels[i].clone(),
            target: targets[i],
            found: false,
            trial: None,
            valuation: None,
        })
        .collect();
    let mut used = 0;
    for trial in 0..cfg.budget {
        if coordinates.iter().all(|c| c.found) {
            break;
        }
        used += 1;
        let phi = par.sample_pperp(base, cfg.seed, trial, cfg.coeff_bound);
        let image = chi(par.realization(), &phi)?;
        for (c, v) in coordinates.iter_mut().zip(&image.valuations) {
            if !c.found && v.equals(c.target).is_true() {
                c.found = true;
                c.trial = Some(trial);
                c.valuation = Some(*v);
            }
        }
    }
    Ok(WitnessReport {
        schema_version: SCHEMA_VERSION,
        parabolic: par.description().to_string(),
        method: "random".into(),
        targets,
        coordinates,
        matrix: None,
        chi: None,
        samples_used: used,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceWitness {
    pub schema_version: u32,
    pub found: bool,
    pub trial: Option<u64>,
    pub samples_used: u64,
    pub trace_a4_valuation: Option<Valuation>,
    pub chi_valuations: Vec<Valuation>,
    pub matrix: Option<String>,
}

/// Searches `t^-1 n + sl_4(O)` for the `(3, 1)` parabolic for `A` with
/// `val(tr A^4) = -2` while `val(c_2), val(c_3), val(c_4) >= -1`.
pub fn trace_power_check(
    par: &ParabolicSpec,
    budget: u64,
    seed: u64,
    coeff_bound: i64,
) -> Result<TraceWitness> {
    if par.lie_type() != LieType::A || par.rank() != 3 || type_a_blocks(par) != [3, 1] {
        return Err(Error::Precondition(
            "trace check needs the (3,1) parabolic of sl_4".into(),
        ));
    }
    for trial in 0..budget {
        let phi = par.sample_pperp(4, seed, trial, coeff_bound);
        let tr = phi.pow(4).trace().valuation();
        let image = chi(par.realization(), &phi)?;
        let small = image.valuations.iter().all(|v| v.at_least(-1).is_true());
        if tr == Valuation::Finite(-2) && small {
            return Ok(TraceWitness {
                schema_version: SCHEMA_VERSION,
                found: true,
                trial: Some(trial),
                samples_used: trial + 1,
                trace_a4_valuation: Some(tr),
                chi_valuations: image.valuations,
                matrix: Some(phi.to_string()),
            });
        }
    }
    Ok(TraceWitness {
        schema_version: SCHEMA_VERSION,
        found: false,
        trial: None,
        samples_used: budget,
        trace_a4_valuation: None,
        chi_valuations: vec![],
        matrix: None,
    })
}

/// `chi(t^-1 phi) = t^-1 . chi(phi)` on one sample.
pub fn equivariance_holds(
    par: &ParabolicSpec,
    precision: usize,
    seed: u64,
    trial: u64,
) -> Result<bool> {
    let phi = par.sample_pperp(precision, seed, trial, DEFAULT_COEFF_BOUND);
    let lhs = chi(par.realization(), &phi.shift(-1))?;
    let rhs = chi(par.realization(), &phi)?.weighted_shift(-1);
    Ok(lhs.values == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_algebra;
    use crate::parabolic::{build_parabolic, G2Parabolic};

    fn par(ty: LieType, rank: usize, d: ParabolicDescription) -> ParabolicSpec {
        build_parabolic(&build_algebra(ty, rank).unwrap(), d).unwrap()
    }

    #[test]
    fn zero_maps_to_zero() {
        let g = build_algebra(LieType::B, 2).unwrap();
        let image = chi(&g, &SeriesMatrix::zeros(5)).unwrap();
        assert!(image.values.iter().all(Series::is_zero));
    }

    #[test]
    fn rejects_non_algebra() {
        let g = build_algebra(LieType::C, 2).unwrap();
        let mut x = SeriesMatrix::zeros(4);
        x.set(0, 0, Series::monomial(Rational::from(1), 2, None));
        assert_eq!(
            chi(&g, &x).unwrap_err(),
            Error::NotInAlgebra { exponent: 2 }
        );
    }

    #[test]
    fn sl4_campaign() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        let r = verify_inclusion(&p, &VerifyConfig::new(40, 1)).unwrap();
        assert!(r.all_pass());
        for c in &r.per_coordinate {
            assert_eq!(c.min_val_observed, Valuation::Finite(-1));
        }
    }

    #[test]
    fn sl4_companion_witness() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        let w = witness_search(&p, None, &WitnessConfig::new(1, 0)).unwrap();
        assert!(w.all_found());
        let w = witness_search(&p, Some(&[0, 2, 5]), &WitnessConfig::new(1, 0)).unwrap();
        assert!(w.all_found());
        assert!(witness_search(&p, Some(&[-2, -1, -1]), &WitnessConfig::new(1, 0)).is_err());
    }

    #[test]
    fn g2_borel_bounds() {
        let p = par(LieType::G2, 2, ParabolicDescription::G2(G2Parabolic::Borel));
        let r = verify_inclusion(&p, &VerifyConfig::new(10, 3)).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.per_coordinate[0].bound, -1);
        assert_eq!(r.per_coordinate[1].bound, -5);
    }

    #[test]
    fn zero_bound_samples_pass() {
        let p = par(LieType::C, 2, ParabolicDescription::MarkedRoots(vec![1, 2]));
        let mut cfg = VerifyConfig::new(5, 0);
        cfg.coeff_bound = 0;
        let r = verify_inclusion(&p, &cfg).unwrap();
        assert!(r.all_pass());
        assert!(r
            .per_coordinate
            .iter()
            .all(|c| c.min_val_observed.finite().is_none()));
    }

    #[test]
    fn equivariance_on_samples() {
        let p = par(LieType::D, 4, ParabolicDescription::MarkedRoots(vec![2]));
        for trial in 0..3 {
            assert!(equivariance_holds(&p, 3, 11, trial).unwrap());
        }
    }

    #[test]
    fn trace_power_witness() {
        let p = par(LieType::A, 3, ParabolicDescription::Blocks(vec![3, 1]));
        let w = trace_power_check(&p, 50, 0, DEFAULT_COEFF_BOUND).unwrap();
        assert!(w.found);
    }
}
