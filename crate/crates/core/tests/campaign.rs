use num_bigint::BigUint;

use basis_hc::harness::{replay, Campaign, CapPolicy, Family, Grid, Status};

fn uniform_grid() -> Grid {
    Grid::Uniform { specs: vec![(2, 4), (2, 5), (3, 5)] }
}

#[test]
fn same_seed_gives_identical_reports() {
    let mut c = Campaign::new(Family::Graphic2, Grid::GraphicPool { n_min: 3, n_max: 4, m_max: 6, k: 2 });
    c.edges_per_instance = Some(3);
    c.seed = 7;
    let a = serde_json::to_string(&c.run().unwrap().to_json()).unwrap();
    let b = serde_json::to_string(&c.run().unwrap().to_json()).unwrap();
    assert_eq!(a, b);
    c.seed = 8;
    let other = c.run().unwrap();
    assert!(other.passed());
}

#[test]
fn record_status_follows_the_counts() {
    for c in [
        Campaign::new(Family::Uniform, uniform_grid()),
        Campaign::new(Family::Catalan, Grid::Catalan { ks: vec![2, 3] }),
        Campaign::new(Family::Gencat, Grid::Gencat { len_min: 4, len_max: 6, max_bases: 20 }),
    ] {
        let report = c.run().unwrap();
        assert!(report.passed(), "{:?}", report.failures().next());
        for r in &report.records {
            let bound: BigUint = r.bound_hc.parse().unwrap();
            let short = r.good_cycle_count < r.bound_good || (!r.hc_count.capped && BigUint::from(r.hc_count.value) < bound) || !r.templates_sound;
            assert_eq!(r.status == Status::Fail, short, "{r:?}");
            if r.status == Status::CappedPass {
                assert!(r.hc_count.capped && BigUint::from(r.hc_count.value) >= bound);
            }
            if let Some(w) = r.witness_count {
                assert!(BigUint::from(w) >= bound, "{r:?}");
            }
        }
    }
}

#[test]
fn every_record_replays_to_the_same_verdict() {
    let report = Campaign::new(Family::Uniform, uniform_grid()).run().unwrap();
    let json = report.to_json();
    for (r, raw) in report.records.iter().zip(json["records"].as_array().unwrap()) {
        let again = replay(raw, CapPolicy::Auto).unwrap();
        assert_eq!(again.status, r.status);
        assert_eq!(again.hc_count, r.hc_count);
    }
}

#[test]
fn exact_policy_refuses_large_instances() {
    let c = Campaign { cap: CapPolicy::Exact, ..Campaign::new(Family::Uniform, Grid::Uniform { specs: vec![(3, 7)] }) };
    assert!(c.run().is_err());
}
