//! Dense polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Index `i` of the coefficient vector holds the coefficient of `q^i`.
//! Trailing zeros are always trimmed, so the zero polynomial is the empty
//! vector and equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A sign `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QPolyError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("cannot parse polynomial term `{0}`")]
    BadTerm(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::monomial(0)
    }

    /// `q^e`.
    pub fn monomial(e: usize) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        QPoly { coeffs }
    }

    /// Like [`QPoly::monomial`] but takes a signed exponent and rejects
    /// negative values.
    pub fn try_monomial(e: i64) -> Result<QPoly, QPolyError> {
        usize::try_from(e)
            .map(QPoly::monomial)
            .map_err(|_| QPolyError::NegativeExponent(e))
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> QPoly {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// Builds a polynomial from an exponent tally.
    pub fn from_counts(counts: &[u64]) -> QPoly {
        QPoly::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, zero past the degree.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the nonzero coefficients occupy one unbroken run of exponents.
    pub fn has_contiguous_support(&self) -> bool {
        match self.min_degree() {
            None => true,
            Some(lo) => self.coeffs[lo..].iter().all(|c| !c.is_zero()),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add_signed(&self, sign: Sign, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_signed_assign(sign, other);
        out
    }

    pub fn add_signed_assign(&mut self, sign: Sign, other: &QPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            match sign {
                Sign::Plus => *dst += src,
                Sign::Minus => *dst -= src,
            }
        }
        self.trim();
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.add_signed(Sign::Plus, rhs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self.add_signed(Sign::Minus, rhs)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_signed_assign(Sign::Plus, rhs);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.add_signed_assign(Sign::Minus, rhs);
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Renders ascending in `q`, e.g. `1 + 2*q^2 - q^5`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses the format produced by `Display`. Whitespace is ignored and
/// repeated exponents are summed.
impl FromStr for QPoly {
    type Err = QPolyError;

    fn from_str(s: &str) -> Result<QPoly, QPolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(QPolyError::BadTerm(String::new()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if ch == '-' {
                negative = true;
            } else if ch != '+' {
                current.push(ch);
            }
        }
        terms.push((negative, current));

        let mut out = QPoly::zero();
        for (neg, term) in terms {
            let bad = || QPolyError::BadTerm(term.clone());
            let (coeff, exp) = match term.split_once('q') {
                None => (term.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some((c, rest)) => {
                    let coeff = match c.strip_suffix('*') {
                        Some(c) => c.parse::<BigInt>().map_err(|_| bad())?,
                        None if c.is_empty() => BigInt::one(),
                        None => return Err(bad()),
                    };
                    let exp = match rest.strip_prefix('^') {
                        Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (coeff, exp)
                }
            };
            let mut mono = QPoly::monomial(exp);
            mono.coeffs[exp] = coeff;
            mono.trim();
            out.add_signed_assign(Sign::from_parity(neg), &mono);
        }
        Ok(out)
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<QPoly, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}
