//! Classification of the Weyl alternation sets.
//!
//! Two independent derivations of the same family are provided:
//!
//! * [`filter_pipeline`] starts from all `2^17` subsets of the contributing
//!   terms and discards those whose sign constraints are contradictory, in
//!   three stages;
//! * [`sweep_census`] enumerates pairs of dominant weights in a box and
//!   records which alternation sets occur.
//!
//! [`sign_pattern_family`] is a third check: it enumerates all sign
//! patterns of the fourteen profile variables allowed by the contradiction
//! rules and collects the induced term subsets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::multiplicity::{alternation_set, root_lattice_parity, symbolic_sigma_coeffs, AlternationSet, ProfileVar, TermId};
use crate::root_system::WeightFW;
use crate::weyl::{self, WeylElement};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    /// `>= 0`, written with subscript 0.
    NonNeg,
    /// `< 0`, written with subscript 1.
    Neg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPredicate {
    pub var: ProfileVar,
    pub polarity: Polarity,
}

impl SignPredicate {
    pub fn nonneg(var: ProfileVar) -> SignPredicate {
        SignPredicate { var, polarity: Polarity::NonNeg }
    }

    pub fn neg(var: ProfileVar) -> SignPredicate {
        SignPredicate { var, polarity: Polarity::Neg }
    }

    pub fn negation(self) -> SignPredicate {
        let polarity = match self.polarity {
            Polarity::NonNeg => Polarity::Neg,
            Polarity::Neg => Polarity::NonNeg,
        };
        SignPredicate { var: self.var, polarity }
    }

    /// Evaluates against a mask of nonnegative variables.
    pub fn holds(self, nonneg_mask: u16) -> bool {
        let nonneg = nonneg_mask & self.var.bit() != 0;
        nonneg == (self.polarity == Polarity::NonNeg)
    }
}

impl fmt::Display for SignPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = match self.polarity {
            Polarity::NonNeg => '0',
            Polarity::Neg => '1',
        };
        write!(f, "{}{}", self.var.name(), sub)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse sign predicate `{0}`")]
pub struct PredicateParseError(String);

impl FromStr for SignPredicate {
    type Err = PredicateParseError;
    fn from_str(s: &str) -> Result<SignPredicate, PredicateParseError> {
        let bad = || PredicateParseError(s.to_string());
        let mut chars = s.chars();
        let var = chars.next().and_then(ProfileVar::from_name).ok_or_else(bad)?;
        let polarity = match (chars.next(), chars.next()) {
            (Some('0'), None) => Polarity::NonNeg,
            (Some('1'), None) => Polarity::Neg,
            _ => return Err(bad()),
        };
        Ok(SignPredicate { var, polarity })
    }
}

pub fn all_predicates() -> Vec<SignPredicate> {
    ProfileVar::ALL
        .iter()
        .flat_map(|v| [SignPredicate::nonneg(*v), SignPredicate::neg(*v)])
        .collect()
}

/// Membership condition for a term: its three variables are nonnegative.
pub fn term_condition(t: TermId) -> [SignPredicate; 3] {
    t.vars().map(SignPredicate::nonneg)
}

/// A subset of the seventeen terms.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TermSubset(u32);

impl TermSubset {
    pub const CANDIDATES: u32 = 1 << 17;

    pub fn from_bits(bits: u32) -> TermSubset {
        TermSubset(bits & (TermSubset::CANDIDATES - 1))
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn contains(&self, t: TermId) -> bool {
        self.0 >> t.index() & 1 == 1
    }

    pub fn members(&self) -> Vec<TermId> {
        TermId::ALL.into_iter().filter(|t| self.contains(*t)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn from_terms<I: IntoIterator<Item = TermId>>(it: I) -> TermSubset {
        TermSubset(it.into_iter().fold(0, |acc, t| acc | 1 << t.index()))
    }

    /// Union of the variable triples of the members.
    pub fn var_mask(&self) -> u16 {
        self.members().iter().fold(0, |acc, t| acc | t.var_mask())
    }

    pub fn to_alternation_set(&self) -> AlternationSet {
        let elems: Vec<WeylElement> = self.members().iter().map(|t| t.element()).collect();
        AlternationSet::from_elements(&elems)
    }

    /// `None` when the set contains a non-contributing element.
    pub fn from_alternation_set(s: &AlternationSet) -> Option<TermSubset> {
        s.members()
            .iter()
            .map(TermId::from_element)
            .collect::<Option<Vec<_>>>()
            .map(TermSubset::from_terms)
    }
}

impl fmt::Display for TermSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.members().iter().map(|t| t.letter().to_string()).collect();
        write!(f, "{{{}}}", letters.join(", "))
    }
}

/// Same order as the corresponding alternation sets.
impl Ord for TermSubset {
    fn cmp(&self, other: &TermSubset) -> std::cmp::Ordering {
        self.to_alternation_set().cmp(&other.to_alternation_set())
    }
}

impl PartialOrd for TermSubset {
    fn partial_cmp(&self, other: &TermSubset) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A conjunction of sign predicates that never holds for dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContradictionRule {
    pub conjuncts: Vec<SignPredicate>,
}

impl ContradictionRule {
    pub fn holds(&self, nonneg_mask: u16) -> bool {
        self.conjuncts.iter().all(|p| p.holds(nonneg_mask))
    }
}

impl fmt::Display for ContradictionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.conjuncts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" & "))
    }
}

const TYPE3_RULES: [&str; 53] = [
    "a1b0", "a1c0", "a1g0", "a1h0", "b1c0", "b1h0", "b1p0", "c1p0", "d1b0", "d1c0", "d1e0", "d1f0",
    "d1g0", "d1h0", "d1i0", "d1l0", "d1o0", "d1p0", "d1r0", "e1c0", "e1f0", "e1g0", "e1h0", "e1i0",
    "e1o0", "e1p0", "e1r0", "f1c0", "f1h0", "f1p0", "g1h0", "g1i0", "g1r0", "i1r0", "j1c0", "j1h0",
    "j1l0", "j1o0", "j1p0", "j1r0", "l1h0", "l1o0", "l1p0", "l1r0", "o1p0", "o1r0", "p0r0",
    "b1f0h0", "j1a0f0", "l1b0g0", "l1b0i0", "l1f0g0", "o1c0i0",
];

/// The Type III catalog: 47 two-predicate and 6 three-predicate rules.
pub fn type3_rules() -> &'static [ContradictionRule] {
    static RULES: OnceLock<Vec<ContradictionRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        TYPE3_RULES
            .iter()
            .map(|s| {
                let conjuncts = s
                    .as_bytes()
                    .chunks(2)
                    .map(|c| std::str::from_utf8(c).unwrap().parse().expect("rule table is valid"))
                    .collect();
                ContradictionRule { conjuncts }
            })
            .collect()
    })
}

/// Elements with a coefficient that is negative for every choice of
/// nonnegative parameters, in canonical order.
pub fn type1_excluded() -> Vec<WeylElement> {
    weyl::elements()
        .filter(|e| symbolic_sigma_coeffs(e).iter().any(|f| f.always_negative()))
        .collect()
}

/// Complement of [`type1_excluded`].
pub fn contributing_elements() -> Vec<WeylElement> {
    let excluded = type1_excluded();
    weyl::elements().filter(|e| !excluded.contains(e)).collect()
}

/// Forced-nonnegative implications used by stages 2 and 3: if the key is
/// nonnegative then so is every variable in the value.
const ZERO_TO_ONE: [(char, &str); 11] = [
    ('b', "a"),
    ('c', "abf"),
    ('e', "d"),
    ('f', "de"),
    ('g', "de"),
    ('h', "defg"),
    ('i', "deg"),
    ('l', "j"),
    ('o', "jl"),
    ('p', "bcdefjlo"),
    ('r', "jloi"),
];

fn mask_of(s: &str) -> u16 {
    s.chars()
        .map(|c| ProfileVar::from_name(c).expect("known variable").bit())
        .fold(0, |a, b| a | b)
}

/// Rule data compiled into bit masks.
struct Derivation {
    zero_to_one: [u16; 14],
    /// (antecedents all nonnegative) implies (consequent nonnegative)
    horn: Vec<(u16, u16)>,
    /// sets of variables that cannot all be nonnegative
    exclusive: Vec<u16>,
}

fn derivation() -> &'static Derivation {
    static D: OnceLock<Derivation> = OnceLock::new();
    D.get_or_init(|| {
        let mut zero_to_one = [0u16; 14];
        for (k, v) in ZERO_TO_ONE {
            zero_to_one[ProfileVar::from_name(k).unwrap().index()] = mask_of(v);
        }
        let mut horn = Vec::new();
        let mut exclusive = Vec::new();
        for rule in type3_rules() {
            let pos: u16 = rule
                .conjuncts
                .iter()
                .filter(|p| p.polarity == Polarity::NonNeg)
                .fold(0, |a, p| a | p.var.bit());
            let neg: Vec<&SignPredicate> = rule.conjuncts.iter().filter(|p| p.polarity == Polarity::Neg).collect();
            match neg.as_slice() {
                [] => exclusive.push(pos),
                [n] if rule.conjuncts.len() == 3 => horn.push((pos, n.var.bit())),
                _ => {}
            }
        }
        Derivation { zero_to_one, horn, exclusive }
    })
}

/// Variables forced nonnegative by the membership conditions alone.
fn derived(small: u16) -> u16 {
    let d = derivation();
    let mut out = 0u16;
    for v in ProfileVar::ALL {
        if small & v.bit() != 0 {
            out |= d.zero_to_one[v.index()];
        }
    }
    for (ante, cons) in &d.horn {
        if small & ante == *ante {
            out |= cons;
        }
    }
    out
}

/// Some term outside `s` has all three variables inside `closure`.
fn forces_nonmember(s: TermSubset, closure: u16) -> bool {
    TermId::ALL
        .iter()
        .any(|t| !s.contains(*t) && closure & t.var_mask() == t.var_mask())
}

fn violates_exclusive(small: u16) -> bool {
    derivation().exclusive.iter().any(|m| small & m == *m)
}

/// Stage 1: no Type II contradiction.
pub fn stage1_survives(s: TermSubset) -> bool {
    !forces_nonmember(s, s.var_mask())
}

/// Stage 2: no contradiction between the membership conditions and the
/// Type III consequences derived from them.
pub fn stage2_survives(s: TermSubset) -> bool {
    let small = s.var_mask();
    !forces_nonmember(s, derived(small)) && !violates_exclusive(small)
}

/// Stage 3: both families at once, on the union of the forced variables.
pub fn stage3_survives(s: TermSubset) -> bool {
    let small = s.var_mask();
    !forces_nonmember(s, small | derived(small)) && !violates_exclusive(small)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineResult {
    pub candidates: usize,
    pub type2: Vec<TermSubset>,
    pub type3: Vec<TermSubset>,
    pub final_sets: Vec<TermSubset>,
}

impl PipelineResult {
    pub fn counts(&self) -> [usize; 4] {
        [self.candidates, self.type2.len(), self.type3.len(), self.final_sets.len()]
    }
}

impl Serialize for TermSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_alternation_set().serialize(s)
    }
}

fn sorted(mut v: Vec<TermSubset>) -> Vec<TermSubset> {
    v.sort();
    v
}

/// Runs the three filtering stages, each on the survivors of the previous
/// one. Every list is in canonical set order.
pub fn filter_pipeline() -> PipelineResult {
    let type2: Vec<TermSubset> = (0..TermSubset::CANDIDATES)
        .into_par_iter()
        .map(TermSubset::from_bits)
        .filter(|s| stage1_survives(*s))
        .collect();
    let type3: Vec<TermSubset> = type2.iter().copied().filter(|s| stage2_survives(*s)).collect();
    let final_sets: Vec<TermSubset> = type3.iter().copied().filter(|s| stage3_survives(*s)).collect();
    PipelineResult {
        candidates: TermSubset::CANDIDATES as usize,
        type2: sorted(type2),
        type3: sorted(type3),
        final_sets: sorted(final_sets),
    }
}

/// Stage 2 applied to all `2^17` candidates instead of the stage-1
/// survivors.
pub fn stage2_on_all_candidates() -> Vec<TermSubset> {
    sorted(
        (0..TermSubset::CANDIDATES)
            .into_par_iter()
            .map(TermSubset::from_bits)
            .filter(|s| stage2_survives(*s))
            .collect(),
    )
}

/// Term subsets induced by every sign pattern of the fourteen variables on
/// which none of `rules` holds.
pub fn sign_pattern_family(rules: &[ContradictionRule]) -> Vec<TermSubset> {
    let family: BTreeSet<u32> = (0u32..1 << 14)
        .into_par_iter()
        .filter_map(|bits| {
            let mask = bits as u16;
            if rules.iter().any(|r| r.holds(mask)) {
                return None;
            }
            let s = TermSubset::from_terms(
                TermId::ALL
                    .into_iter()
                    .filter(|t| mask & t.var_mask() == t.var_mask()),
            );
            Some(s.bits())
        })
        .collect();
    sorted(family.into_iter().map(TermSubset::from_bits).collect())
}

/// One alternation set with the first pair that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: AlternationSet,
    pub lam: WeightFW,
    pub mu: WeightFW,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub lam_max: i64,
    pub mu_max: i64,
    /// Pairs with even parity that were examined.
    pub pairs: u64,
    /// Distinct sets, ordered by their first witness.
    pub witnesses: Vec<Witness>,
    /// Every element that belonged to at least one set.
    pub elements_seen: AlternationSet,
}

impl SweepResult {
    pub fn family(&self) -> BTreeSet<AlternationSet> {
        self.witnesses.iter().map(|w| w.set).collect()
    }
}

type Key = (WeightFW, WeightFW);

/// Enumerates `(lambda, mu)` with coordinates in `0..=lam_max` and
/// `0..=mu_max`, lexicographically in `(m, n, k, x, y, z)`, skipping odd
/// parity.
pub fn sweep_census(lam_max: i64, mu_max: i64) -> SweepResult {
    assert!(lam_max >= 0 && mu_max >= 0, "bounds must be nonnegative");
    let outer: Vec<(i64, i64)> = (0..=lam_max).flat_map(|m| (0..=lam_max).map(move |n| (m, n))).collect();
    let partials: Vec<(HashMap<AlternationSet, Key>, u64, u64)> = outer
        .par_iter()
        .map(|&(m, n)| {
            let mut first: HashMap<AlternationSet, Key> = HashMap::new();
            let mut pairs = 0u64;
            let mut seen = 0u64;
            for k in 0..=lam_max {
                let lam = WeightFW::new(m, n, k);
                for x in 0..=mu_max {
                    for y in 0..=mu_max {
                        for z in 0..=mu_max {
                            let mu = WeightFW::new(x, y, z);
                            if !root_lattice_parity(lam, mu) {
                                continue;
                            }
                            pairs += 1;
                            let s = alternation_set(lam, mu);
                            seen |= s.bits();
                            first.entry(s).or_insert((lam, mu));
                        }
                    }
                }
            }
            (first, pairs, seen)
        })
        .collect();

    let mut first: HashMap<AlternationSet, Key> = HashMap::new();
    let mut pairs = 0;
    let mut seen = 0;
    for (part, p, s) in partials {
        pairs += p;
        seen |= s;
        for (set, key) in part {
            first
                .entry(set)
                .and_modify(|k| {
                    if key < *k {
                        *k = key;
                    }
                })
                .or_insert(key);
        }
    }
    let mut witnesses: Vec<Witness> = first
        .into_iter()
        .map(|(set, (lam, mu))| Witness { set, lam, mu })
        .collect();
    witnesses.sort_by_key(|w| (w.lam, w.mu));
    SweepResult {
        lam_max,
        mu_max,
        pairs,
        witnesses,
        elements_seen: AlternationSet::from_bits(seen),
    }
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parsing {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

/// Reference listings used by [`verify_census`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    pub type2_survivors: Vec<AlternationSet>,
    pub type3_survivors: Vec<AlternationSet>,
    pub alternation_sets: Vec<AlternationSet>,
    pub table4: Vec<Witness>,
}

#[derive(Deserialize)]
struct WitnessRow {
    set: AlternationSet,
    lam: [i64; 3],
    mu: [i64; 3],
}

impl From<WitnessRow> for Witness {
    fn from(r: WitnessRow) -> Witness {
        Witness {
            set: r.set,
            lam: WeightFW::new(r.lam[0], r.lam[1], r.lam[2]),
            mu: WeightFW::new(r.mu[0], r.mu[1], r.mu[2]),
        }
    }
}

pub const FIXTURE_FILES: [&str; 4] = [
    "type2_survivors.json",
    "type3_survivors.json",
    "alternation_sets.json",
    "table4_witnesses.json",
];

impl Fixtures {
    /// The copies compiled into the library.
    pub fn embedded() -> Fixtures {
        Fixtures::parse(|name| {
            let text = match name {
                "type2_survivors.json" => include_str!("../fixtures/type2_survivors.json"),
                "type3_survivors.json" => include_str!("../fixtures/type3_survivors.json"),
                "alternation_sets.json" => include_str!("../fixtures/alternation_sets.json"),
                "table4_witnesses.json" => include_str!("../fixtures/table4_witnesses.json"),
                _ => unreachable!(),
            };
            Ok(text.to_string())
        })
        .expect("embedded fixtures are valid")
    }

    pub fn load(dir: &Path) -> Result<Fixtures, FixtureError> {
        Fixtures::parse(|name| {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|source| FixtureError::Io {
                path: path.display().to_string(),
                source,
            })
        })
    }

    fn parse<F: Fn(&str) -> Result<String, FixtureError>>(read: F) -> Result<Fixtures, FixtureError> {
        fn json<T: serde::de::DeserializeOwned>(name: &str, text: &str) -> Result<T, FixtureError> {
            serde_json::from_str(text).map_err(|source| FixtureError::Json { path: name.to_string(), source })
        }
        let [t2, t3, alt, t4] = FIXTURE_FILES;
        let rows: Vec<WitnessRow> = json(t4, &read(t4)?)?;
        Ok(Fixtures {
            type2_survivors: json(t2, &read(t2)?)?,
            type3_survivors: json(t3, &read(t3)?)?,
            alternation_sets: json(alt, &read(alt)?)?,
            table4: rows.into_iter().map(Witness::from).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub checks: Vec<CheckResult>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Describes the differences between two families of sets.
pub fn diff_families(found: &[AlternationSet], expected: &[AlternationSet]) -> Vec<String> {
    let f: BTreeSet<AlternationSet> = found.iter().copied().collect();
    let e: BTreeSet<AlternationSet> = expected.iter().copied().collect();
    let mut out = Vec::new();
    if f.len() != found.len() {
        out.push(format!("computed family has {} duplicates", found.len() - f.len()));
    }
    if e.len() != expected.len() {
        out.push(format!("reference family has {} duplicates", expected.len() - e.len()));
    }
    for s in f.difference(&e) {
        out.push(format!("unexpected {s}"));
    }
    for s in e.difference(&f) {
        out.push(format!("missing {s}"));
    }
    out
}

fn family_check(name: &str, found: &[AlternationSet], expected: &[AlternationSet]) -> CheckResult {
    let mut details = diff_families(found, expected);
    let passed = details.is_empty();
    details.insert(0, format!("{} computed, {} expected", found.len(), expected.len()));
    CheckResult { name: name.to_string(), passed, details }
}

/// Compares the pipeline, the listed witnesses and a sweep against the
/// reference listings.
pub fn verify_census(fixtures: &Fixtures, lam_max: i64, mu_max: i64) -> CensusReport {
    let pipeline = filter_pipeline();
    let to_sets = |v: &[TermSubset]| v.iter().map(|s| s.to_alternation_set()).collect::<Vec<_>>();
    let mut checks = vec![
        family_check("pipeline stage 1 vs type2_survivors", &to_sets(&pipeline.type2), &fixtures.type2_survivors),
        family_check("pipeline stage 2 vs type3_survivors", &to_sets(&pipeline.type3), &fixtures.type3_survivors),
        family_check("pipeline final vs alternation_sets", &to_sets(&pipeline.final_sets), &fixtures.alternation_sets),
    ];

    let mut details = Vec::new();
    for row in &fixtures.table4 {
        let got = alternation_set(row.lam, row.mu);
        if got != row.set {
            details.push(format!("lam={} mu={}: expected {}, got {}", row.lam, row.mu, row.set, got));
        }
    }
    checks.push(CheckResult {
        name: "table4 witnesses".to_string(),
        passed: details.is_empty(),
        details: {
            details.insert(0, format!("{} rows", fixtures.table4.len()));
            details
        },
    });

    let sweep = sweep_census(lam_max, mu_max);
    let found: Vec<AlternationSet> = sweep.witnesses.iter().map(|w| w.set).collect();
    checks.push(family_check(
        &format!("sweep({lam_max},{mu_max}) vs alternation_sets"),
        &found,
        &fixtures.alternation_sets,
    ));
    CensusReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::coefficient_profile;

    fn ts(letters: &str) -> TermSubset {
        TermSubset::from_terms(letters.chars().map(|c| TermId::from_letter(c).unwrap()))
    }

    #[test]
    fn predicates() {
        assert_eq!(all_predicates().len(), 28);
        let p: SignPredicate = "a1".parse().unwrap();
        assert_eq!(p, SignPredicate::neg(ProfileVar::A));
        assert_eq!(p.negation().to_string(), "a0");
        assert!("k0".parse::<SignPredicate>().is_err());
        assert!("a2".parse::<SignPredicate>().is_err());
    }

    #[test]
    fn term_conditions() {
        use ProfileVar as V;
        assert_eq!(term_condition(TermId::A), [V::A, V::D, V::J].map(SignPredicate::nonneg));
        assert_eq!(term_condition(TermId::Q), [V::A, V::I, V::R].map(SignPredicate::nonneg));
        assert_eq!(term_condition(TermId::M), [V::B, V::F, V::P].map(SignPredicate::nonneg));
    }

    #[test]
    fn rule_catalog() {
        let rules = type3_rules();
        assert_eq!(rules.len(), 53);
        assert_eq!(rules.iter().filter(|r| r.conjuncts.len() == 2).count(), 47);
        assert_eq!(rules[0].to_string(), "(a1 & b0)");
        assert_eq!(rules[52].to_string(), "(o1 & c0 & i0)");
        let d = derivation();
        assert_eq!(d.horn.len(), 6);
        assert_eq!(d.exclusive, vec![ProfileVar::P.bit() | ProfileVar::R.bit()]);
    }

    #[test]
    fn zero_to_one_is_backed_by_rules() {
        let rules = type3_rules();
        for (k, vs) in ZERO_TO_ONE {
            for v in vs.chars() {
                let want = ContradictionRule {
                    conjuncts: vec![format!("{v}1").parse().unwrap(), format!("{k}0").parse().unwrap()],
                };
                assert!(rules.contains(&want), "{k} -> {v}");
            }
        }
    }

    #[test]
    fn rules_never_hold_on_dominant_pairs() {
        for m in 0..=6 {
            for n in 0..=6 {
                for k in 0..=6 {
                    for x in 0..=4 {
                        for y in 0..=4 {
                            for z in 0..=4 {
                                let lam = WeightFW::new(m, n, k);
                                let mu = WeightFW::new(x, y, z);
                                if !root_lattice_parity(lam, mu) {
                                    continue;
                                }
                                let mask = coefficient_profile(lam, mu).nonneg_mask();
                                for r in type3_rules() {
                                    assert!(!r.holds(mask), "{r} at {lam} {mu}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn type1_list() {
        let t1 = type1_excluded();
        assert_eq!(t1.len(), 31);
        assert!(t1.contains(&WeylElement::from_label("s1*s2*s3").unwrap()));
        assert!(!t1.contains(&WeylElement::IDENTITY));
        let contributing = contributing_elements();
        let terms: Vec<WeylElement> = TermId::ALL.iter().map(|t| t.element()).collect();
        assert_eq!(contributing, terms);
    }

    #[test]
    fn stage1_example() {
        assert!(!stage1_survives(ts("AF")));
        assert!(stage1_survives(ts("A")));
        assert!(stage1_survives(TermSubset::default()));
    }

    #[test]
    fn subset_conversions() {
        let s = ts("ACD");
        assert_eq!(s.to_string(), "{A, C, D}");
        assert_eq!(s.to_alternation_set().to_string(), "{1, s2, s3}");
        assert_eq!(TermSubset::from_alternation_set(&s.to_alternation_set()), Some(s));
        let t1 = AlternationSet::from_labels(&["s1*s2*s3"]).unwrap();
        assert_eq!(TermSubset::from_alternation_set(&t1), None);
    }

    #[test]
    fn small_sweep() {
        let r = sweep_census(0, 0);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].set.to_string(), "{1}");
        assert_eq!(r.pairs, 1);
    }

    #[test]
    fn diffing() {
        let a = AlternationSet::from_labels(&["1"]).unwrap();
        let b = AlternationSet::EMPTY;
        assert!(diff_families(&[a, b], &[b, a]).is_empty());
        let d = diff_families(&[a], &[b]);
        assert_eq!(d, vec!["unexpected {1}".to_string(), "missing {}".to_string()]);
    }

    #[test]
    fn embedded_fixtures_load() {
        let f = Fixtures::embedded();
        assert_eq!(f.type2_survivors.len(), 1124);
        assert_eq!(f.type3_survivors.len(), 150);
        assert_eq!(f.alternation_sets.len(), 46);
        assert_eq!(f.table4.len(), 46);
    }
}
