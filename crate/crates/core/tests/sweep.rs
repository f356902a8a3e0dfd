use std::collections::BTreeMap;

use sp6::census::{sweep_census, verify_census, Fixtures};
use sp6::multiplicity::{alternation_set, AlternationSet};
use sp6::root_system::WeightFW;

#[test]
fn witnesses_are_lexicographically_first() {
    let r = sweep_census(3, 3);
    let mut first: BTreeMap<AlternationSet, (WeightFW, WeightFW)> = BTreeMap::new();
    for m in 0..=3 {
        for n in 0..=3 {
            for k in 0..=3 {
                for x in 0..=3 {
                    for y in 0..=3 {
                        for z in 0..=3 {
                            let (lam, mu) = (WeightFW::new(m, n, k), WeightFW::new(x, y, z));
                            if sp6::multiplicity::root_lattice_parity(lam, mu) {
                                first.entry(alternation_set(lam, mu)).or_insert((lam, mu));
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(r.witnesses.len(), first.len());
    for w in &r.witnesses {
        assert_eq!(first[&w.set], (w.lam, w.mu), "{}", w.set);
    }
    let keys: Vec<_> = r.witnesses.iter().map(|w| (w.lam, w.mu)).collect();
    assert!(keys.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn sweep_is_deterministic() {
    assert_eq!(sweep_census(4, 3), sweep_census(4, 3));
}

#[test]
fn sweep_witnesses_against_table4() {
    let fx = Fixtures::embedded();
    let r = sweep_census(10, 10);
    let listed: BTreeMap<AlternationSet, (WeightFW, WeightFW)> =
        fx.table4.iter().map(|w| (w.set, (w.lam, w.mu))).collect();
    let mut same = 0;
    for w in &r.witnesses {
        let (lam, mu) = listed[&w.set];
        assert!((w.lam, w.mu) <= (lam, mu), "{}", w.set);
        if (w.lam, w.mu) == (lam, mu) {
            same += 1;
        }
    }
    assert_eq!(same, 39);
}

#[test]
fn embedded_fixtures_verify() {
    let report = verify_census(&Fixtures::embedded(), 10, 10);
    for c in &report.checks {
        assert!(c.passed, "{}: {:?}", c.name, c.details);
    }
}

#[test]
fn fixture_directory_loads() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    assert_eq!(Fixtures::load(&dir).unwrap(), Fixtures::embedded());
    assert!(Fixtures::load(std::path::Path::new("/nonexistent")).is_err());
}
