//! Root data for C3 and the three coordinate systems used throughout the
//! crate.
//!
//! * fundamental-weight coordinates `(m, n, k)` for `m*w1 + n*w2 + k*w3`,
//! * simple-root coordinates `(c1, c2, c3)` for `c1*a1 + c2*a2 + c3*a3`,
//! * ambient coordinates `(e1, e2, e3)` with `a_i = e_i - e_{i+1}` and
//!   `a3 = 2*e3`.
//!
//! Roots and fundamental weights are integral in the ambient basis, so the
//! hot paths work there with plain integers and convert at the boundary.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseWeightError {
    #[error("expected three comma-separated integers, got `{0}`")]
    Shape(String),
    #[error("`{0}` is not an integer")]
    NotInteger(String),
}

/// A weight `m*w1 + n*w2 + k*w3`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightFW {
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl WeightFW {
    pub const ZERO: WeightFW = WeightFW { m: 0, n: 0, k: 0 };

    pub const fn new(m: i64, n: i64, k: i64) -> WeightFW {
        WeightFW { m, n, k }
    }

    pub fn is_dominant(&self) -> bool {
        self.m >= 0 && self.n >= 0 && self.k >= 0
    }

    /// Ambient coordinates, `w1 = e1`, `w2 = e1+e2`, `w3 = e1+e2+e3`.
    pub fn to_eps(&self) -> [i128; 3] {
        let (m, n, k) = (self.m as i128, self.n as i128, self.k as i128);
        [m + n + k, n + k, k]
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.m, self.n, self.k]
    }
}

impl fmt::Display for WeightFW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.k)
    }
}

/// Parses `m,n,k`, with optional surrounding parentheses and spaces.
impl std::str::FromStr for WeightFW {
    type Err = ParseWeightError;
    fn from_str(s: &str) -> Result<WeightFW, ParseWeightError> {
        let [m, n, k] = parse_triple(s)?;
        Ok(WeightFW { m, n, k })
    }
}

pub(crate) fn parse_triple(s: &str) -> Result<[i64; 3], ParseWeightError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(ParseWeightError::Shape(s.to_string()));
    }
    let mut out = [0i64; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| ParseWeightError::NotInteger(p.to_string()))?;
    }
    Ok(out)
}

/// A value in `(1/2) Z`, stored as twice its value.
///
/// Every coefficient that appears in this crate lives in the half lattice,
/// so this is exact and avoids rational arithmetic in inner loops.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(i128);

impl Half {
    pub const ZERO: Half = Half(0);

    pub const fn from_int(v: i128) -> Half {
        Half(2 * v)
    }

    pub const fn from_doubled(v: i128) -> Half {
        Half(v)
    }

    pub const fn doubled(self) -> i128 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_nonneg(self) -> bool {
        self.0 >= 0
    }

    /// The value as an integer, or `None` when it is a proper half.
    pub fn to_integer(self) -> Option<i128> {
        self.is_integral().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    /// Exact conversion; fails when the denominator is not 1 or 2 or the
    /// value does not fit.
    pub fn from_rational(r: &BigRational) -> Option<Half> {
        let doubled = r * BigInt::from(2);
        if !doubled.is_integer() {
            return None;
        }
        i128::try_from(doubled.to_integer()).ok().map(Half)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Lattice vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    pub c1: BigRational,
    pub c2: BigRational,
    pub c3: BigRational,
}

/// Lattice vector in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsVector {
    pub e1: BigRational,
    pub e2: BigRational,
    pub e3: BigRational,
}

fn int(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn half(v: i128) -> BigRational {
    BigRational::new(BigInt::from(v), BigInt::from(2))
}

impl AlphaVector {
    pub fn from_ints(c: [i64; 3]) -> AlphaVector {
        AlphaVector::new(int(c[0] as i128), int(c[1] as i128), int(c[2] as i128))
    }

    /// Builds a vector from halves.
    pub fn from_halves(c: [Half; 3]) -> AlphaVector {
        AlphaVector::new(c[0].to_rational(), c[1].to_rational(), c[2].to_rational())
    }

    /// Panics if a coordinate has a denominator other than 1 or 2.
    pub fn new(c1: BigRational, c2: BigRational, c3: BigRational) -> AlphaVector {
        for c in [&c1, &c2, &c3] {
            assert!(
                c.denom() == &BigInt::from(1) || c.denom() == &BigInt::from(2),
                "coordinate {c} is outside the half lattice"
            );
        }
        AlphaVector { c1, c2, c3 }
    }

    pub fn zero() -> AlphaVector {
        AlphaVector::from_ints([0, 0, 0])
    }

    pub fn coords(&self) -> [&BigRational; 3] {
        [&self.c1, &self.c2, &self.c3]
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    pub fn is_nonneg(&self) -> bool {
        self.coords().iter().all(|c| !c.is_negative())
    }

    /// Integer coordinates, when all three are integral and fit in `i64`.
    pub fn to_ints(&self) -> Option<[i64; 3]> {
        let mut out = [0i64; 3];
        for (slot, c) in out.iter_mut().zip(self.coords()) {
            if !c.is_integer() {
                return None;
            }
            *slot = i64::try_from(c.to_integer()).ok()?;
        }
        Some(out)
    }

    pub fn to_halves(&self) -> Option<[Half; 3]> {
        Some([
            Half::from_rational(&self.c1)?,
            Half::from_rational(&self.c2)?,
            Half::from_rational(&self.c3)?,
        ])
    }

    pub fn scale(&self, s: &BigRational) -> AlphaVector {
        AlphaVector::new(&self.c1 * s, &self.c2 * s, &self.c3 * s)
    }
}

impl Add<&AlphaVector> for &AlphaVector {
    type Output = AlphaVector;
    fn add(self, rhs: &AlphaVector) -> AlphaVector {
        AlphaVector::new(&self.c1 + &rhs.c1, &self.c2 + &rhs.c2, &self.c3 + &rhs.c3)
    }
}

impl Sub<&AlphaVector> for &AlphaVector {
    type Output = AlphaVector;
    fn sub(self, rhs: &AlphaVector) -> AlphaVector {
        AlphaVector::new(&self.c1 - &rhs.c1, &self.c2 - &rhs.c2, &self.c3 - &rhs.c3)
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)
    }
}

/// Serialized as `["3","5","3"]`, halves as `"3/2"`.
impl Serialize for AlphaVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<AlphaVector, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::custom("expected three coordinates"));
        }
        let parse = |s: &str| -> Result<BigRational, D::Error> {
            let r: BigRational = s.parse().map_err(serde::de::Error::custom)?;
            if r.denom() > &BigInt::from(2) {
                return Err(serde::de::Error::custom(format!("{s} is not in the half lattice")));
            }
            Ok(r)
        };
        Ok(AlphaVector::new(parse(&v[0])?, parse(&v[1])?, parse(&v[2])?))
    }
}

impl EpsVector {
    pub fn from_ints(e: [i128; 3]) -> EpsVector {
        EpsVector { e1: int(e[0]), e2: int(e[1]), e3: int(e[2]) }
    }
}

/// Positive roots in simple-root coordinates, in the order
/// a1, a2, a3, a1+a2, a2+a3, a1+a2+a3, a1+2a2+a3, 2a1+2a2+a3, 2a2+a3.
pub const POSITIVE_ROOTS: [[i64; 3]; 9] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
    [1, 1, 1],
    [1, 2, 1],
    [2, 2, 1],
    [0, 2, 1],
];

/// The Weyl vector in ambient coordinates.
pub const RHO_EPS: [i128; 3] = [3, 2, 1];

pub fn positive_roots() -> Vec<AlphaVector> {
    POSITIVE_ROOTS.iter().map(|&r| AlphaVector::from_ints(r)).collect()
}

pub fn fundamental_weights_alpha() -> (AlphaVector, AlphaVector, AlphaVector) {
    (
        fw_to_alpha(WeightFW::new(1, 0, 0)),
        fw_to_alpha(WeightFW::new(0, 1, 0)),
        fw_to_alpha(WeightFW::new(0, 0, 1)),
    )
}

pub fn fw_to_alpha(w: WeightFW) -> AlphaVector {
    let (m, n, k) = (w.m as i128, w.n as i128, w.k as i128);
    AlphaVector::new(int(m + n + k), int(m + 2 * n + 2 * k), half(m + 2 * n + 3 * k))
}

pub fn rho_alpha() -> AlphaVector {
    AlphaVector::from_ints([3, 5, 3])
}

pub fn alpha_to_eps(v: &AlphaVector) -> EpsVector {
    // a1 = e1-e2, a2 = e2-e3, a3 = 2e3
    EpsVector {
        e1: v.c1.clone(),
        e2: &v.c2 - &v.c1,
        e3: &v.c3 * BigInt::from(2) - &v.c2,
    }
}

pub fn eps_to_alpha(v: &EpsVector) -> AlphaVector {
    // e1 = a1+a2+a3/2, e2 = a2+a3/2, e3 = a3/2
    let c1 = v.e1.clone();
    let c2 = &v.e1 + &v.e2;
    let c3 = (&v.e1 + &v.e2 + &v.e3) / BigInt::from(2);
    AlphaVector { c1, c2, c3 }
}

/// Simple-root coordinates of an integral ambient vector, as halves.
pub fn eps_int_to_alpha(e: [i128; 3]) -> [Half; 3] {
    [
        Half::from_int(e[0]),
        Half::from_int(e[0] + e[1]),
        Half::from_doubled(e[0] + e[1] + e[2]),
    ]
}

/// Ambient coordinates of an integral simple-root vector.
pub fn alpha_int_to_eps(c: [i64; 3]) -> [i128; 3] {
    let (c1, c2, c3) = (c[0] as i128, c[1] as i128, c[2] as i128);
    [c1, c2 - c1, 2 * c3 - c2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn av(c1: i64, c2: i64, c3: i64) -> AlphaVector {
        AlphaVector::from_ints([c1, c2, c3])
    }

    #[test]
    fn positive_roots_shape() {
        let roots = positive_roots();
        assert_eq!(roots.len(), 9);
        assert!(roots.contains(&av(2, 2, 1)));
        assert!(roots.iter().all(|r| r.is_integral() && r.is_nonneg()));
    }

    #[test]
    fn fundamental_weights() {
        let (w1, w2, w3) = fundamental_weights_alpha();
        assert_eq!(w1, AlphaVector::new(int(1), int(1), half(1)));
        assert_eq!(w2, av(1, 2, 1));
        assert_eq!(w3, AlphaVector::new(int(1), int(2), half(3)));
        assert_eq!(&(&w1 + &w2) + &w3, av(3, 5, 3));
    }

    #[test]
    fn fw_to_alpha_examples() {
        assert_eq!(fw_to_alpha(WeightFW::new(2, 0, 0)), av(2, 2, 1));
        assert_eq!(fw_to_alpha(WeightFW::new(1, 1, 1)), av(3, 5, 3));
        assert_eq!(fw_to_alpha(WeightFW::new(0, 0, 2)), av(2, 4, 3));
    }

    #[test]
    fn rho_is_half_the_root_sum() {
        assert_eq!(rho_alpha(), fw_to_alpha(WeightFW::new(1, 1, 1)));
        let sum = positive_roots().iter().fold(AlphaVector::zero(), |acc, r| &acc + r);
        assert_eq!(sum, rho_alpha().scale(&int(2)));
    }

    #[test]
    fn eps_basis() {
        assert_eq!(alpha_to_eps(&av(1, 0, 0)), EpsVector::from_ints([1, -1, 0]));
        assert_eq!(alpha_to_eps(&av(0, 0, 1)), EpsVector::from_ints([0, 0, 2]));
        assert_eq!(alpha_to_eps(&AlphaVector::zero()), EpsVector::from_ints([0, 0, 0]));
        assert_eq!(alpha_to_eps(&rho_alpha()), EpsVector::from_ints(RHO_EPS));
        assert_eq!(eps_int_to_alpha(RHO_EPS), [3, 5, 3].map(Half::from_int));
    }

    #[test]
    fn half_display_and_json() {
        assert_eq!(Half::from_doubled(3).to_string(), "3/2");
        assert_eq!(Half::from_int(-2).to_string(), "-2");
        let v = fw_to_alpha(WeightFW::new(0, 0, 1));
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(j, r#"["1","2","3/2"]"#);
        assert_eq!(serde_json::from_str::<AlphaVector>(&j).unwrap(), v);
        assert!(serde_json::from_str::<AlphaVector>(r#"["1","2","1/3"]"#).is_err());
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("2,1,0".parse::<WeightFW>().unwrap(), WeightFW::new(2, 1, 0));
        assert_eq!("(0, 0, 2)".parse::<WeightFW>().unwrap(), WeightFW::new(0, 0, 2));
        assert!("1,2".parse::<WeightFW>().is_err());
        assert!("a,b,c".parse::<WeightFW>().is_err());
    }

    fn weight() -> impl Strategy<Value = WeightFW> {
        (-1000i64..1000, -1000i64..1000, -1000i64..1000).prop_map(|(m, n, k)| WeightFW::new(m, n, k))
    }

    proptest! {
        #[test]
        fn eps_round_trip(w in weight()) {
            let a = fw_to_alpha(w);
            prop_assert_eq!(eps_to_alpha(&alpha_to_eps(&a)), a.clone());
            prop_assert_eq!(alpha_to_eps(&a), EpsVector::from_ints(w.to_eps()));
            prop_assert_eq!(a.to_halves().unwrap(), eps_int_to_alpha(w.to_eps()));
        }

        #[test]
        fn fw_to_alpha_is_linear(u in weight(), v in weight()) {
            let s = WeightFW::new(u.m + v.m, u.n + v.n, u.k + v.k);
            prop_assert_eq!(fw_to_alpha(s), &fw_to_alpha(u) + &fw_to_alpha(v));
        }

        #[test]
        fn integrality_iff_m_plus_k_even(w in weight()) {
            prop_assert_eq!(fw_to_alpha(w).is_integral(), (w.m + w.k) % 2 == 0);
        }

        #[test]
        fn alpha_eps_int_inverse(c in prop::array::uniform3(-500i64..500)) {
            prop_assert_eq!(eps_int_to_alpha(alpha_int_to_eps(c)), c.map(|x| Half::from_int(x as i128)));
        }
    }
}
