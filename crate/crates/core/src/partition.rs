//! The q-analog of Kostant's partition function for C3.
//!
//! [`kpf_q`] evaluates the closed six-fold nested sum. [`kpf_q_oracle`]
//! enumerates decompositions directly from the root data and shares nothing
//! else with it; the two are compared exhaustively in the tests.
//!
//! Positive roots are counted in the order of
//! [`POSITIVE_ROOTS`](crate::root_system::POSITIVE_ROOTS):
//! `a, b, c` for the simple roots and `d..i` for
//! a1+a2, a2+a3, a1+a2+a3, a1+2a2+a3, 2a1+2a2+a3, 2a2+a3.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::qpoly::QPoly;
use crate::root_system::{parse_triple, ParseWeightError, POSITIVE_ROOTS};

/// `m*a1 + n*a2 + k*a3` with integer coordinates.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphaTriple {
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl AlphaTriple {
    pub const fn new(m: i64, n: i64, k: i64) -> AlphaTriple {
        AlphaTriple { m, n, k }
    }

    pub fn is_nonneg(&self) -> bool {
        self.m >= 0 && self.n >= 0 && self.k >= 0
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.m, self.n, self.k]
    }
}

impl fmt::Display for AlphaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.k)
    }
}

impl std::str::FromStr for AlphaTriple {
    type Err = ParseWeightError;
    fn from_str(s: &str) -> Result<AlphaTriple, ParseWeightError> {
        let [m, n, k] = parse_triple(s)?;
        Ok(AlphaTriple { m, n, k })
    }
}

/// Multiplicities of the nine positive roots in one decomposition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    pub counts: [u64; 9],
}

impl Decomposition {
    pub fn parts(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total(&self) -> AlphaTriple {
        let mut t = [0i64; 3];
        for (c, r) in self.counts.iter().zip(POSITIVE_ROOTS) {
            for j in 0..3 {
                t[j] += *c as i64 * r[j];
            }
        }
        AlphaTriple::new(t[0], t[1], t[2])
    }
}

/// Upper bound of a summation index; `None` means the range is empty.
fn upper(bound: i64) -> Option<i64> {
    (bound >= 0).then_some(bound)
}

fn min3(a: i64, b: i64, c: i64) -> i64 {
    a.min(b).min(c)
}

/// Evaluates the nested-sum formula. Negative input gives 0.
///
/// Each loop iteration adds one to a single exponent slot, so a `u64`
/// tally cannot overflow in any run that terminates.
pub fn kpf_q(t: AlphaTriple) -> QPoly {
    let AlphaTriple { m, n, k } = t;
    if !t.is_nonneg() {
        return QPoly::zero();
    }
    let top = m + n + k;
    let mut tally = vec![0u64; top as usize + 1];

    let Some(h_hat) = upper(min3(m.div_euclid(2), n.div_euclid(2), k)) else {
        return QPoly::zero();
    };
    for h in 0..=h_hat {
        let Some(g_hat) = upper(min3(m - 2 * h, (n - 2 * h).div_euclid(2), k - h)) else {
            continue;
        };
        for g in 0..=g_hat {
            let Some(f_hat) = upper(min3(m - 2 * h - g, n - 2 * h - 2 * g, k - h - g)) else {
                continue;
            };
            for f in 0..=f_hat {
                let Some(i_hat) = upper(((n - 2 * h - 2 * g - f).div_euclid(2)).min(k - h - g - f)) else {
                    continue;
                };
                for i in 0..=i_hat {
                    let Some(d_hat) = upper((m - 2 * h - g - f).min(n - 2 * h - 2 * g - f - 2 * i)) else {
                        continue;
                    };
                    for d in 0..=d_hat {
                        let Some(e_hat) =
                            upper((n - 2 * h - 2 * g - f - 2 * i - d).min(k - h - g - f - i))
                        else {
                            continue;
                        };
                        let base = top - d - 2 * f - 3 * g - 4 * h - 2 * i;
                        for e in 0..=e_hat {
                            tally[(base - e) as usize] += 1;
                        }
                    }
                }
            }
        }
    }
    QPoly::from_counts(&tally)
}

/// Every decomposition of `t` into positive roots.
///
/// Recurses over the non-simple roots with bounds taken from the remaining
/// vector; the simple-root counts are then whatever is left over.
pub fn decompositions(t: AlphaTriple) -> Vec<Decomposition> {
    fn go(idx: usize, rem: [i64; 3], counts: &mut [u64; 9], out: &mut Vec<Decomposition>) {
        if idx == POSITIVE_ROOTS.len() {
            if rem.iter().all(|&x| x >= 0) {
                let mut c = *counts;
                for j in 0..3 {
                    c[j] = rem[j] as u64;
                }
                out.push(Decomposition { counts: c });
            }
            return;
        }
        let root = POSITIVE_ROOTS[idx];
        let cap = (0..3)
            .filter(|&j| root[j] > 0)
            .map(|j| rem[j].div_euclid(root[j]))
            .min()
            .unwrap_or(0);
        for c in 0..=cap {
            let next = [rem[0] - c * root[0], rem[1] - c * root[1], rem[2] - c * root[2]];
            counts[idx] = c as u64;
            go(idx + 1, next, counts, out);
        }
        counts[idx] = 0;
    }

    let mut out = Vec::new();
    if t.is_nonneg() {
        let mut counts = [0u64; 9];
        // simple roots occupy slots 0..3 and are filled at the leaf
        go(3, t.as_array(), &mut counts, &mut out);
    }
    out
}

/// Brute-force q-partition function: tallies decompositions by part count.
pub fn kpf_q_oracle(t: AlphaTriple) -> QPoly {
    let decs = decompositions(t);
    let top = decs.iter().map(|d| d.parts()).max();
    let Some(top) = top else {
        return QPoly::zero();
    };
    let mut tally = vec![0u64; top as usize + 1];
    for d in &decs {
        tally[d.parts() as usize] += 1;
    }
    QPoly::from_counts(&tally)
}

pub fn kpf(t: AlphaTriple) -> BigInt {
    kpf_q(t).eval_at_one()
}

/// Something that can produce q-partition-function values.
pub trait KpfSource: Sync {
    fn kpf_q(&self, t: AlphaTriple) -> QPoly;
}

/// Evaluates [`kpf_q`] on every call.
#[derive(Copy, Clone, Debug, Default)]
pub struct Direct;

impl KpfSource for Direct {
    fn kpf_q(&self, t: AlphaTriple) -> QPoly {
        kpf_q(t)
    }
}

/// Precomputed values for a known set of arguments, with fallback to
/// direct evaluation for anything else.
#[derive(Clone, Debug, Default)]
pub struct KpfTable {
    values: HashMap<AlphaTriple, QPoly>,
}

impl KpfTable {
    /// Evaluates all nonnegative triples in parallel.
    pub fn build<I: IntoIterator<Item = AlphaTriple>>(triples: I) -> KpfTable {
        let mut keys: Vec<AlphaTriple> = triples.into_iter().filter(AlphaTriple::is_nonneg).collect();
        keys.sort_unstable();
        keys.dedup();
        let values = keys.into_par_iter().map(|t| (t, kpf_q(t))).collect();
        KpfTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl KpfSource for KpfTable {
    fn kpf_q(&self, t: AlphaTriple) -> QPoly {
        if !t.is_nonneg() {
            return QPoly::zero();
        }
        match self.values.get(&t) {
            Some(p) => p.clone(),
            None => kpf_q(t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn at(m: i64, n: i64, k: i64) -> AlphaTriple {
        AlphaTriple::new(m, n, k)
    }

    #[test]
    fn worked_example_values() {
        assert_eq!(kpf_q(at(2, 2, 1)), p("q + 2*q^2 + 4*q^3 + 2*q^4 + q^5"));
        assert_eq!(kpf_q(at(0, 0, 0)), QPoly::one());
        assert_eq!(kpf_q(at(2, 1, 1)), p("q^2 + 2*q^3 + q^4"));
        assert_eq!(kpf_q(at(1, 0, 0)), p("q"));
        assert_eq!(kpf_q(at(-1, 0, 0)), QPoly::zero());
    }

    #[test]
    fn two_two_zero() {
        // three decompositions: 2a1+2a2, a1+a2+(a1+a2), 2(a1+a2)
        assert_eq!(kpf_q(at(2, 2, 0)), p("q^2 + q^3 + q^4"));
        assert_eq!(kpf_q_oracle(at(2, 2, 0)), p("q^2 + q^3 + q^4"));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(kpf_q_oracle(at(2, 2, 1)), p("q + 2*q^2 + 4*q^3 + 2*q^4 + q^5"));
        assert_eq!(kpf_q_oracle(at(0, 0, 0)), QPoly::one());
        assert_eq!(kpf_q_oracle(at(0, 2, 1)), p("q + q^2 + q^3"));
        assert_eq!(kpf_q_oracle(at(0, -1, 3)), QPoly::zero());
    }

    #[test]
    fn evaluated_at_one() {
        assert_eq!(kpf(at(2, 2, 1)), BigInt::from(10));
        assert_eq!(kpf(at(0, 0, 0)), BigInt::from(1));
        assert_eq!(kpf(at(1, 1, 0)), BigInt::from(2));
    }

    #[test]
    fn decompositions_sum_back() {
        for d in decompositions(at(3, 4, 2)) {
            assert_eq!(d.total(), at(3, 4, 2));
        }
        assert_eq!(decompositions(at(2, 2, 1)).len(), 10);
    }

    #[test]
    fn exhaustive_small_agreement() {
        for m in 0..=8 {
            for n in 0..=8 {
                for k in 0..=8 {
                    let t = at(m, n, k);
                    let p = kpf_q(t);
                    assert!(p.has_contiguous_support(), "{t}");
                    assert_eq!(p, kpf_q_oracle(t), "{t}");
                }
            }
        }
    }

    #[test]
    fn table_falls_back() {
        let table = KpfTable::build([at(2, 2, 1), at(-1, 0, 0)]);
        assert_eq!(table.len(), 1);
        assert_eq!(table.kpf_q(at(2, 2, 1)), kpf_q(at(2, 2, 1)));
        assert_eq!(table.kpf_q(at(1, 1, 1)), kpf_q(at(1, 1, 1)));
        assert_eq!(table.kpf_q(at(-3, 1, 1)), QPoly::zero());
    }

    #[test]
    fn parse_triple() {
        assert_eq!("2,2,1".parse::<AlphaTriple>().unwrap(), at(2, 2, 1));
        assert!("2,2".parse::<AlphaTriple>().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn agrees_with_oracle(m in 0i64..=14, n in 0i64..=14, k in 0i64..=14) {
            prop_assert_eq!(kpf_q(at(m, n, k)), kpf_q_oracle(at(m, n, k)));
        }

        #[test]
        fn exponents_bounded_by_height(m in 0i64..=12, n in 0i64..=12, k in 0i64..=12) {
            let poly = kpf_q(at(m, n, k));
            prop_assert_eq!(poly.degree().unwrap() as i64, m + n + k);
            let fewest = decompositions(at(m, n, k)).iter().map(|d| d.parts()).min().unwrap();
            prop_assert_eq!(poly.min_degree().unwrap() as u64, fewest);
            prop_assert!(poly.has_contiguous_support());
        }

        #[test]
        fn negative_coordinates_vanish(m in -20i64..20, n in -20i64..20, k in -20i64..-1) {
            prop_assert!(kpf_q(at(m, n, k)).is_zero());
            prop_assert!(kpf_q(at(k, m, n)).is_zero());
            prop_assert!(kpf_q(at(n, k, m)).is_zero());
        }
    }
}
