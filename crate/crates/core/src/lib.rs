//! q-analog of Kostant's partition function and Weyl alternation sets for
//! the Lie algebra `sp(6)` (type C3).

pub mod census;
pub mod multiplicity;
pub mod partition;
pub mod qpoly;
pub mod root_system;
pub mod weyl;

/// Raw reference data shipped with the crate.
pub mod fixtures {
    pub const TABLE2: &str = include_str!("../fixtures/table2.json");
    pub const TYPE1_ELEMENTS: &str = include_str!("../fixtures/type1_elements.json");
    pub const CLOSED_FORMULA_CASES: &str = include_str!("../fixtures/closed_formula_cases.json");
    pub const TABLE4_WITNESSES: &str = include_str!("../fixtures/table4_witnesses.json");
    pub const TYPE2_SURVIVORS: &str = include_str!("../fixtures/type2_survivors.json");
    pub const TYPE3_SURVIVORS: &str = include_str!("../fixtures/type3_survivors.json");
    pub const ALTERNATION_SETS: &str = include_str!("../fixtures/alternation_sets.json");
}

pub use census::{filter_pipeline, sweep_census, verify_census, Fixtures, TermSubset};
pub use multiplicity::{alternation_set, mult_q_cases, mult_q_direct, AlternationSet, TermId};
pub use partition::{kpf_q, AlphaTriple};
pub use qpoly::QPoly;
pub use root_system::WeightFW;
pub use weyl::{ReducedWord, WeylElement};
