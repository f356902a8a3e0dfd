use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use sp6::census::{
    contributing_elements, filter_pipeline, sweep_census, type1_excluded, Fixtures, TermSubset,
};
use sp6::multiplicity::{
    alternation_set, coefficient_profile, is_member, matching_cases, mult, mult_freudenthal,
    mult_q_cases, mult_q_cases_with, mult_q_direct, mult_q_direct_with, needed_triples,
    root_lattice_parity, sigma_coeffs, AlternationSet, TermId,
};
use sp6::partition::{kpf_q, kpf_q_oracle, AlphaTriple, KpfTable};
use sp6::qpoly::QPoly;
use sp6::root_system::WeightFW;
use sp6::weyl::{self, WeylElement};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn q(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn w(m: i64, n: i64, k: i64) -> WeightFW {
    WeightFW::new(m, n, k)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for m in 0..=12 {
        for n in 0..=12 {
            for k in 0..=12 {
                let t = AlphaTriple::new(m, n, k);
                let (a, b) = (kpf_q(t), kpf_q_oracle(t));
                ensure(a == b, || format!("{t}: formula {a}, oracle {b}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn highest_root() -> Outcome {
    let got = mult_q_direct(w(2, 0, 0), w(0, 0, 0));
    ensure(got == q("q + q^3 + q^5"), || format!("got {got}"))?;
    let one = got.eval_at_one();
    ensure(one == 3.into(), || format!("value at q=1 is {one}"))?;
    Ok(format!("m_q = {got}"))
}

fn worked_examples() -> Outcome {
    let cases = [
        (w(0, 0, 0), w(0, 0, 0), q("1")),
        (w(0, 0, 2), w(1, 0, 1), q("q^2")),
    ];
    for (lam, mu, want) in cases {
        let d = mult_q_direct(lam, mu);
        let c = mult_q_cases(lam, mu);
        ensure(d == want && c == want, || format!("{lam},{mu}: direct {d}, cases {c}, want {want}"))?;
    }
    Ok("both methods agree on 2 examples".into())
}

fn to_sets(v: &[TermSubset]) -> Vec<AlternationSet> {
    v.iter().map(|s| s.to_alternation_set()).collect()
}

fn classification_counts(fx: &Fixtures) -> Outcome {
    let p = filter_pipeline();
    let counts = p.counts();
    ensure(counts == [131072, 1124, 150, 46], || format!("counts {counts:?}"))?;
    for (name, got, want) in [
        ("type2", to_sets(&p.type2), &fx.type2_survivors),
        ("type3", to_sets(&p.type3), &fx.type3_survivors),
        ("final", to_sets(&p.final_sets), &fx.alternation_sets),
    ] {
        let diff = sp6::census::diff_families(&got, want);
        ensure(diff.is_empty(), || format!("{name}: {}", diff.join("; ")))?;
    }
    Ok(format!("{counts:?}, fixtures match"))
}

fn empirical_census(fx: &Fixtures) -> Outcome {
    let r = sweep_census(10, 10);
    let found: BTreeSet<AlternationSet> = r.family();
    let want: BTreeSet<AlternationSet> = fx.alternation_sets.iter().copied().collect();
    ensure(r.witnesses.len() == 46, || format!("{} distinct sets", r.witnesses.len()))?;
    ensure(found == want, || "family differs from reference".into())?;
    for row in &fx.table4 {
        let got = alternation_set(row.lam, row.mu);
        ensure(got == row.set, || format!("row {} {}: got {got}, want {}", row.lam, row.mu, row.set))?;
    }
    Ok(format!("{} pairs, 46 sets, {} witness rows", r.pairs, fx.table4.len()))
}

fn dispatch_equivalence() -> Outcome {
    let mut pairs = Vec::new();
    for m in 0..=6 {
        for n in 0..=6 {
            for k in 0..=6 {
                for x in 0..=6 {
                    for y in 0..=6 {
                        for z in 0..=6 {
                            let (lam, mu) = (w(m, n, k), w(x, y, z));
                            if root_lattice_parity(lam, mu) {
                                pairs.push((lam, mu));
                            }
                        }
                    }
                }
            }
        }
    }
    let triples: BTreeSet<AlphaTriple> = pairs.iter().flat_map(|(l, m)| needed_triples(*l, *m)).collect();
    let table = KpfTable::build(triples);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(lam, mu)| {
            let matched = matching_cases(&coefficient_profile(lam, mu));
            if matched.len() > 1 {
                return Some(format!("{lam},{mu}: cases {matched:?} overlap"));
            }
            let d = mult_q_direct_with(&table, lam, mu);
            let c = mult_q_cases_with(&table, lam, mu);
            (d != c).then(|| format!("{lam},{mu}: direct {d}, cases {c}"))
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} failures, first: {}", failures.len(), failures[..failures.len().min(3)].join("; "))
    })?;
    Ok(format!("{} pairs, {} partition values", pairs.len(), table.len()))
}

fn type1_conformance() -> Outcome {
    let t1 = type1_excluded();
    let listed: Vec<String> = serde_json::from_str(sp6::fixtures::TYPE1_ELEMENTS).unwrap();
    let listed = AlternationSet::from_labels(&listed).map_err(|e| e.to_string())?;
    ensure(t1.len() == 31, || format!("{} excluded", t1.len()))?;
    ensure(AlternationSet::from_elements(&t1) == listed, || "excluded list differs".into())?;
    let terms: Vec<WeylElement> = TermId::ALL.iter().map(|t| t.element()).collect();
    ensure(contributing_elements() == terms, || "contributing elements differ from term table".into())?;
    let seen = sweep_census(6, 6).elements_seen;
    let bad: Vec<&WeylElement> = t1.iter().filter(|e| seen.contains(e)).collect();
    ensure(bad.is_empty(), || format!("type I elements seen: {bad:?}"))?;
    Ok(format!("31 excluded, 17 contributing, {} elements seen in sweep(6,6)", seen.len()))
}

fn random_dominant(rng: &mut StdRng, max: i64) -> (WeightFW, WeightFW) {
    loop {
        let mut c = || rng.gen_range(0..=max);
        let lam = w(c(), c(), c());
        let mu = w(c(), c(), c());
        if root_lattice_parity(lam, mu) {
            return (lam, mu);
        }
    }
}

fn freudenthal_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for _ in 0..100 {
        let (lam, mu) = random_dominant(&mut rng, 5);
        let a = mult(lam, mu);
        let b = mult_freudenthal(lam, mu).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{lam},{mu}: kostant {a}, freudenthal {b}"))?;
    }
    Ok("100 random pairs".into())
}

fn structural_invariants() -> Outcome {
    let elems: Vec<WeylElement> = weyl::elements().collect();
    ensure(elems.len() == 48, || format!("|W| = {}", elems.len()))?;
    let mut hist = [0usize; 10];
    for e in &elems {
        hist[e.length()] += 1;
        ensure(e.sign().as_i32() == e.determinant(), || format!("{e}: sign != det"))?;
    }
    ensure(hist == [1, 3, 5, 7, 8, 8, 7, 5, 3, 1], || format!("lengths {hist:?}"))?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    for _ in 0..200 {
        let mut c = || rng.gen_range(0..=20);
        let (lam, mu) = (w(c(), c(), c()), w(c(), c(), c()));
        let parity = root_lattice_parity(lam, mu);
        for s in &elems {
            let integral = sigma_coeffs(s, lam, mu).is_integral();
            ensure(integral == parity, || format!("{s} at {lam},{mu}"))?;
        }
        if !parity {
            ensure(elems.iter().all(|s| !is_member(s, lam, mu)), || format!("member at odd {lam},{mu}"))?;
        }
    }
    Ok("48 elements, 200 random pairs".into())
}

fn typo_pin() -> Outcome {
    let got = kpf_q(AlphaTriple::new(2, 2, 0));
    ensure(got == q("q^2 + q^3 + q^4"), || format!("got {got}"))?;
    ensure(kpf_q_oracle(AlphaTriple::new(2, 2, 0)) == got, || "oracle disagrees".into())?;
    Ok(format!("kpf_q(2,2,0) = {got}"))
}

fn main() -> ExitCode {
    let fx = Fixtures::embedded();
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("highest root exponents", Box::new(highest_root)),
        ("worked examples", Box::new(worked_examples)),
        ("classification counts", Box::new(|| classification_counts(&fx))),
        ("empirical census", Box::new(|| empirical_census(&fx))),
        ("dispatch equivalence", Box::new(dispatch_equivalence)),
        ("type I conformance", Box::new(type1_conformance)),
        ("freudenthal oracle", Box::new(freudenthal_oracle)),
        ("structural invariants", Box::new(structural_invariants)),
        ("typo pin", Box::new(typo_pin)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
