//! Inclusion and sharpness campaigns over whole families of parabolics.

use parahitchin::degrees::is_good_parabolic;
use parahitchin::hitchin::{
    equivariance_holds, verify_inclusion, witness_search, VerifyConfig, WitnessConfig,
};
use parahitchin::lie::{build_algebra, LieType};
use parahitchin::parabolic::{build_parabolic, G2Parabolic, ParabolicDescription, ParabolicSpec};
use parahitchin::series::Valuation;
use parahitchin::Error;

const WITNESS_BUDGET: u64 = 200;

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

fn family(types: &[LieType], ranks: std::ops::RangeInclusive<usize>) -> Vec<ParabolicSpec> {
    let mut out = Vec::new();
    for &ty in types {
        for rank in ranks.clone() {
            let g = match build_algebra(ty, rank) {
                Ok(g) => g,
                Err(Error::UnsupportedRank { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            for marked in subsets(rank) {
                out.push(build_parabolic(&g, ParabolicDescription::MarkedRoots(marked)).unwrap());
            }
        }
    }
    out
}

fn g2_family() -> Vec<ParabolicSpec> {
    let g = build_algebra(LieType::G2, 2).unwrap();
    [G2Parabolic::Line, G2Parabolic::Plane, G2Parabolic::Borel]
        .into_iter()
        .map(|p| build_parabolic(&g, ParabolicDescription::G2(p)).unwrap())
        .collect()
}

#[test]
fn inclusion_and_sharpness_up_to_rank_four() {
    let mut pars = family(&[LieType::A, LieType::B, LieType::C], 1..=4);
    pars.extend(g2_family());
    for p in &pars {
        let label = format!("{}{} {}", p.lie_type(), p.rank(), p.description());
        let r = verify_inclusion(p, &VerifyConfig::new(20, 5)).unwrap();
        assert!(r.all_pass(), "{label}: {:?}", r.failures);
        let w = witness_search(p, None, &WitnessConfig::new(WITNESS_BUDGET, 5)).unwrap();
        assert!(w.all_found(), "{label}: {:?}", w.coordinates);
    }
}

#[test]
fn type_d_campaigns() {
    for p in family(&[LieType::D], 4..=5) {
        let label = format!("D{} {}", p.rank(), p.description());
        let r = verify_inclusion(&p, &VerifyConfig::new(6, 9)).unwrap();
        assert!(r.all_pass(), "{label}: {:?}", r.failures);
        assert_eq!(r.newton.is_some(), !is_good_parabolic(&p).good, "{label}");
        for c in &r.per_coordinate {
            assert!(
                matches!(c.min_val_observed, Valuation::Finite(_)),
                "{label}"
            );
        }
    }
}

#[test]
fn sp4_borel_witness() {
    let g = build_algebra(LieType::C, 2).unwrap();
    let p = build_parabolic(&g, ParabolicDescription::MarkedRoots(vec![1, 2])).unwrap();
    let w = witness_search(&p, None, &WitnessConfig::new(WITNESS_BUDGET, 0)).unwrap();
    assert_eq!(w.targets, vec![-1, -3]);
    assert!(w.all_found());
}

#[test]
fn equivariance_across_types() {
    let mut pars = family(&[LieType::A, LieType::B, LieType::C, LieType::D], 2..=3);
    pars.extend(g2_family());
    for (k, p) in pars.iter().enumerate() {
        assert!(
            equivariance_holds(p, 3, 13, k as u64).unwrap(),
            "{}",
            p.description()
        );
    }
}

#[test]
fn campaign_reports_are_deterministic() {
    let g = build_algebra(LieType::B, 3).unwrap();
    let p = build_parabolic(&g, ParabolicDescription::MarkedRoots(vec![1, 3])).unwrap();
    let a = verify_inclusion(&p, &VerifyConfig::new(16, 42)).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let b = pool.install(|| verify_inclusion(&p, &VerifyConfig::new(16, 42)).unwrap());
    assert_eq!(a, b);
}
