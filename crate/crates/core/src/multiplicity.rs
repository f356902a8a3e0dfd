//! Weyl alternation sets and q-multiplicities `m_q(lambda, mu)`.
//!
//! Two independent routes to `m_q` live here: the alternating sum over the
//! alternation set ([`mult_q_direct`]) and the closed case formula driven by
//! the sign pattern of the fourteen profile variables ([`mult_q_cases`]).
//! [`mult_freudenthal`] is a third, unrelated route to the value at `q = 1`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partition::{AlphaTriple, Direct, KpfSource};
use crate::qpoly::{QPoly, Sign};
use crate::root_system::{alpha_int_to_eps, eps_int_to_alpha, AlphaVector, Half, WeightFW, POSITIVE_ROOTS, RHO_EPS};
use crate::weyl::{self, WeylElement};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultError {
    #[error("highest weight {0} is not dominant")]
    NotDominant(WeightFW),
}

/// The fourteen substitution variables, in bit order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProfileVar {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    L,
    O,
    P,
    R,
}

impl ProfileVar {
    pub const ALL: [ProfileVar; 14] = [
        ProfileVar::A,
        ProfileVar::B,
        ProfileVar::C,
        ProfileVar::D,
        ProfileVar::E,
        ProfileVar::F,
        ProfileVar::G,
        ProfileVar::H,
        ProfileVar::I,
        ProfileVar::J,
        ProfileVar::L,
        ProfileVar::O,
        ProfileVar::P,
        ProfileVar::R,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn bit(self) -> u16 {
        1 << self.index()
    }

    pub fn name(self) -> char {
        b"abcdefghijlopr"[self.index()] as char
    }

    pub fn from_name(c: char) -> Option<ProfileVar> {
        ProfileVar::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for ProfileVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The profile variables evaluated at one `(lambda, mu)` pair.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientProfile {
    pub a: Half,
    pub b: Half,
    pub c: Half,
    pub d: Half,
    pub e: Half,
    pub f: Half,
    pub g: Half,
    pub h: Half,
    pub i: Half,
    pub j: Half,
    pub l: Half,
    pub o: Half,
    pub p: Half,
    pub r: Half,
}

impl CoefficientProfile {
    pub fn get(&self, v: ProfileVar) -> Half {
        use ProfileVar as V;
        match v {
            V::A => self.a,
            V::B => self.b,
            V::C => self.c,
            V::D => self.d,
            V::E => self.e,
            V::F => self.f,
            V::G => self.g,
            V::H => self.h,
            V::I => self.i,
            V::J => self.j,
            V::L => self.l,
            V::O => self.o,
            V::P => self.p,
            V::R => self.r,
        }
    }

    /// Bit set of the variables that are nonnegative.
    pub fn nonneg_mask(&self) -> u16 {
        ProfileVar::ALL
            .iter()
            .filter(|v| self.get(**v).is_nonneg())
            .fold(0, |acc, v| acc | v.bit())
    }

    pub fn all_integral(&self) -> bool {
        ProfileVar::ALL.iter().all(|v| self.get(*v).is_integral())
    }

    pub fn triple(&self, t: TermId) -> [Half; 3] {
        t.vars().map(|v| self.get(v))
    }

    /// Integer triple for a term, or `None` if a coordinate is a proper half
    /// or out of range.
    pub fn alpha_triple(&self, t: TermId) -> Option<AlphaTriple> {
        let [x, y, z] = self.triple(t).map(|h| h.to_integer().and_then(|v| i64::try_from(v).ok()));
        Some(AlphaTriple::new(x?, y?, z?))
    }
}

/// Evaluates the fourteen variables at `(lambda, mu)`.
pub fn coefficient_profile(lam: WeightFW, mu: WeightFW) -> CoefficientProfile {
    let [m, n, k] = lam.as_array().map(|v| v as i128);
    let [x, y, z] = mu.as_array().map(|v| v as i128);
    let int = Half::from_int;
    let half = Half::from_doubled;
    let p = CoefficientProfile {
        a: int(m + n + k - x - y - z),
        b: int(n + k - x - y - z - 1),
        c: int(k - x - y - z - 2),
        d: int(m + 2 * n + 2 * k - x - 2 * y - 2 * z),
        e: int(m + n + 2 * k - x - 2 * y - 2 * z - 1),
        f: int(n + 2 * k - x - 2 * y - 2 * z - 2),
        g: int(m + n - x - 2 * y - 2 * z - 3),
        h: int(n - x - 2 * y - 2 * z - 4),
        i: int(m - x - 2 * y - 2 * z - 4),
        j: half(m + 2 * n + 3 * k - x - 2 * y - 3 * z),
        l: half(m + 2 * n + k - x - 2 * y - 3 * z - 2),
        o: half(m + k - x - 2 * y - 3 * z - 4),
        p: half(-m + k - x - 2 * y - 3 * z - 6),
        r: half(m - k - x - 2 * y - 3 * z - 6),
    };
    debug_assert_eq!(p.a - p.b, int(m + 1));
    debug_assert_eq!(p.b - p.c, int(n + 1));
    debug_assert_eq!(p.d - p.e, int(n + 1));
    debug_assert!(TermId::ALL
        .iter()
        .all(|t| p.triple(*t) == sigma_coeffs_half(&t.element(), lam, mu)));
    p
}

/// The seventeen terms that can contribute for dominant weights.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TermId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    N,
    O,
    P,
    Q,
}

const TERM_TABLE: [(&str, [ProfileVar; 3]); 17] = {
    use ProfileVar as V;
    [
        ("1", [V::A, V::D, V::J]),
        ("s1", [V::B, V::D, V::J]),
        ("s2", [V::A, V::E, V::J]),
        ("s3", [V::A, V::D, V::L]),
        ("s1*s2", [V::C, V::E, V::J]),
        ("s2*s1", [V::B, V::F, V::J]),
        ("s2*s3", [V::A, V::G, V::L]),
        ("s3*s1", [V::B, V::D, V::L]),
        ("s3*s2", [V::A, V::E, V::O]),
        ("s1*s2*s1", [V::C, V::F, V::J]),
        ("s2*s3*s1", [V::B, V::H, V::L]),
        ("s2*s3*s2", [V::A, V::I, V::O]),
        ("s3*s2*s1", [V::B, V::F, V::P]),
        ("s3*s1*s2", [V::C, V::E, V::O]),
        ("s3*s2*s3", [V::A, V::G, V::R]),
        ("s3*s1*s2*s1", [V::C, V::F, V::P]),
        ("s3*s2*s3*s2", [V::A, V::I, V::R]),
    ]
};

impl TermId {
    pub const ALL: [TermId; 17] = [
        TermId::A,
        TermId::B,
        TermId::C,
        TermId::D,
        TermId::E,
        TermId::F,
        TermId::G,
        TermId::H,
        TermId::I,
        TermId::J,
        TermId::K,
        TermId::L,
        TermId::M,
        TermId::N,
        TermId::O,
        TermId::P,
        TermId::Q,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        (b'A' + self as u8) as char
    }

    pub fn from_letter(c: char) -> Option<TermId> {
        TermId::ALL.into_iter().find(|t| t.letter() == c)
    }

    pub fn element(self) -> WeylElement {
        WeylElement::from_label(TERM_TABLE[self.index()].0).expect("term words are valid")
    }

    pub fn vars(self) -> [ProfileVar; 3] {
        TERM_TABLE[self.index()].1
    }

    pub fn var_mask(self) -> u16 {
        self.vars().iter().fold(0, |acc, v| acc | v.bit())
    }

    pub fn from_element(e: &WeylElement) -> Option<TermId> {
        TermId::ALL.into_iter().find(|t| t.element() == *e)
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `sigma(lambda + rho) - rho - mu` in simple-root coordinates, as halves.
pub fn sigma_coeffs_half(s: &WeylElement, lam: WeightFW, mu: WeightFW) -> [Half; 3] {
    let l = lam.to_eps();
    let u = mu.to_eps();
    let shifted = s.apply_eps([l[0] + RHO_EPS[0], l[1] + RHO_EPS[1], l[2] + RHO_EPS[2]]);
    eps_int_to_alpha([
        shifted[0] - RHO_EPS[0] - u[0],
        shifted[1] - RHO_EPS[1] - u[1],
        shifted[2] - RHO_EPS[2] - u[2],
    ])
}

pub fn sigma_coeffs(s: &WeylElement, lam: WeightFW, mu: WeightFW) -> AlphaVector {
    AlphaVector::from_halves(sigma_coeffs_half(s, lam, mu))
}

/// An affine function of `(m, n, k, x, y, z)` with half-integer
/// coefficients, stored doubled.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub doubled_coeffs: [i128; 6],
    pub doubled_const: i128,
}

const PARAMS: [char; 6] = ['m', 'n', 'k', 'x', 'y', 'z'];

impl AffineForm {
    pub fn eval(&self, params: [i64; 6]) -> Half {
        let s: i128 = self
            .doubled_coeffs
            .iter()
            .zip(params)
            .map(|(c, p)| c * p as i128)
            .sum();
        Half::from_doubled(s + self.doubled_const)
    }

    /// Negative for every choice of nonnegative parameters.
    pub fn always_negative(&self) -> bool {
        self.doubled_coeffs.iter().all(|&c| c <= 0) && self.doubled_const < 0
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse affine form `{0}`")]
pub struct AffineParseError(String);

/// Parses sums of terms such as `-1/2m`, `3/2k`, `2y`, `-6`.
impl FromStr for AffineForm {
    type Err = AffineParseError;

    fn from_str(s: &str) -> Result<AffineForm, AffineParseError> {
        let bad = || AffineParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut form = AffineForm { doubled_coeffs: [0; 6], doubled_const: 0 };
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let neg = rest.starts_with('-');
            rest = rest.strip_prefix(['+', '-']).unwrap_or(rest);
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (num, var) = match term.chars().last() {
                Some(c) if c.is_ascii_alphabetic() => (&term[..term.len() - 1], Some(c)),
                _ => (term, None),
            };
            let doubled: i128 = match num.split_once('/') {
                Some((p, "2")) => p.parse().map_err(|_| bad())?,
                Some(_) => return Err(bad()),
                None if num.is_empty() && var.is_some() => 2,
                None => 2 * num.parse::<i128>().map_err(|_| bad())?,
            };
            let doubled = if neg { -doubled } else { doubled };
            match var {
                None => form.doubled_const += doubled,
                Some(v) => {
                    let idx = PARAMS.iter().position(|p| *p == v).ok_or_else(bad)?;
                    form.doubled_coeffs[idx] += doubled;
                }
            }
        }
        Ok(form)
    }
}

/// The three coefficients of `sigma(lambda + rho) - rho - mu` as affine
/// forms in `(m, n, k, x, y, z)`, read off from the action on unit vectors.
pub fn symbolic_sigma_coeffs(s: &WeylElement) -> [AffineForm; 3] {
    let eval = |p: [i64; 6]| {
        sigma_coeffs_half(s, WeightFW::new(p[0], p[1], p[2]), WeightFW::new(p[3], p[4], p[5]))
    };
    let base = eval([0; 6]);
    std::array::from_fn(|row| {
        let mut coeffs = [0i128; 6];
        for (col, c) in coeffs.iter_mut().enumerate() {
            let mut unit = [0i64; 6];
            unit[col] = 1;
            *c = eval(unit)[row].doubled() - base[row].doubled();
        }
        AffineForm { doubled_coeffs: coeffs, doubled_const: base[row].doubled() }
    })
}

/// A subset of the Weyl group, indexed by canonical position.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlternationSet {
    bits: u64,
}

impl AlternationSet {
    pub const EMPTY: AlternationSet = AlternationSet { bits: 0 };

    pub fn from_bits(bits: u64) -> AlternationSet {
        AlternationSet { bits: bits & ((1u64 << 48) - 1) }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, e: &WeylElement) {
        self.bits |= 1 << e.canonical_index();
    }

    pub fn contains(&self, e: &WeylElement) -> bool {
        self.bits >> e.canonical_index() & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..48).filter(|i| self.bits >> i & 1 == 1)
    }

    pub fn members(&self) -> Vec<WeylElement> {
        self.indices().map(WeylElement::by_index).collect()
    }

    pub fn from_elements<'a, I: IntoIterator<Item = &'a WeylElement>>(it: I) -> AlternationSet {
        let mut s = AlternationSet::EMPTY;
        for e in it {
            s.insert(e);
        }
        s
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<AlternationSet, weyl::WeylError> {
        let elems = labels
            .iter()
            .map(|l| WeylElement::from_label(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlternationSet::from_elements(&elems))
    }

    pub fn labels(&self) -> Vec<&'static str> {
        self.members().iter().map(|e| e.label()).collect()
    }
}

/// Size first, then the sorted list of canonical indices.
impl Ord for AlternationSet {
    fn cmp(&self, other: &AlternationSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for AlternationSet {
    fn partial_cmp(&self, other: &AlternationSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AlternationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl Serialize for AlternationSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlternationSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<AlternationSet, D::Error> {
        let labels = Vec::<String>::deserialize(d)?;
        AlternationSet::from_labels(&labels).map_err(serde::de::Error::custom)
    }
}

/// True iff `m + k + x + z` is even, i.e. `lambda - mu` is in the root
/// lattice.
pub fn root_lattice_parity(lam: WeightFW, mu: WeightFW) -> bool {
    (lam.m as i128 + lam.k as i128 + mu.m as i128 + mu.k as i128) % 2 == 0
}

/// Whether `sigma` belongs to the alternation set of `(lambda, mu)`.
///
/// The partition function of an integral vector is nonzero exactly when all
/// coordinates are nonnegative (the simple roots alone decompose it), so
/// this only inspects the coordinates. The equivalence with `kpf_q` is
/// checked in the tests.
pub fn is_member(s: &WeylElement, lam: WeightFW, mu: WeightFW) -> bool {
    sigma_coeffs_half(s, lam, mu)
        .iter()
        .all(|c| c.is_integral() && c.is_nonneg())
}

pub fn alternation_set(lam: WeightFW, mu: WeightFW) -> AlternationSet {
    let mut set = AlternationSet::EMPTY;
    for (i, e) in weyl::elements().enumerate() {
        if is_member(&e, lam, mu) {
            set.bits |= 1 << i;
        }
    }
    set
}

/// Nonnegative integer triples that an evaluation of `m_q(lambda, mu)` may
/// pass to the partition function.
pub fn needed_triples(lam: WeightFW, mu: WeightFW) -> Vec<AlphaTriple> {
    if !root_lattice_parity(lam, mu) {
        return Vec::new();
    }
    weyl::elements()
        .filter_map(|e| {
            let c = sigma_coeffs_half(&e, lam, mu);
            let t = c.map(|h| h.to_integer().and_then(|v| i64::try_from(v).ok()));
            match t {
                [Some(x), Some(y), Some(z)] if x >= 0 && y >= 0 && z >= 0 => Some(AlphaTriple::new(x, y, z)),
                _ => None,
            }
        })
        .collect()
}

pub fn mult_q_direct(lam: WeightFW, mu: WeightFW) -> QPoly {
    mult_q_direct_with(&Direct, lam, mu)
}

pub fn mult_q_direct_with<S: KpfSource + ?Sized>(src: &S, lam: WeightFW, mu: WeightFW) -> QPoly {
    let mut out = QPoly::zero();
    if !root_lattice_parity(lam, mu) {
        return out;
    }
    for e in alternation_set(lam, mu).members() {
        let [x, y, z] = sigma_coeffs_half(&e, lam, mu).map(|h| h.to_integer().expect("members are integral") as i64);
        out.add_signed_assign(e.sign(), &src.kpf_q(AlphaTriple::new(x, y, z)));
    }
    out
}

/// One conjunctive sign pattern of a closed-formula case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern {
    pub nonneg: Vec<ProfileVar>,
    pub negative: Vec<ProfileVar>,
    /// Variables only required to be integers; always true under even parity.
    pub integer: Vec<ProfileVar>,
}

impl SignPattern {
    pub fn matches(&self, nonneg_mask: u16) -> bool {
        self.nonneg.iter().all(|v| nonneg_mask & v.bit() != 0)
            && self.negative.iter().all(|v| nonneg_mask & v.bit() == 0)
    }
}

/// One numbered case of the closed formula: any of the patterns selects the
/// signed combination of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormulaCase {
    pub number: usize,
    pub patterns: Vec<SignPattern>,
    pub terms: Vec<(Sign, TermId)>,
}

impl ClosedFormulaCase {
    pub fn matches(&self, nonneg_mask: u16) -> bool {
        self.patterns.iter().any(|p| p.matches(nonneg_mask))
    }

    pub fn formula(&self) -> String {
        render_terms(&self.terms)
    }
}

pub fn render_terms(terms: &[(Sign, TermId)]) -> String {
    let mut s = String::new();
    for (i, (sign, t)) in terms.iter().enumerate() {
        if i > 0 || *sign == Sign::Minus {
            s.push(sign.symbol());
        }
        s.push(t.letter());
    }
    s
}

/// Parses `A-B+E`.
pub fn parse_terms(s: &str) -> Option<Vec<(Sign, TermId)>> {
    let mut out = Vec::new();
    let mut sign = Sign::Plus;
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '+' => sign = Sign::Plus,
            '-' => sign = Sign::Minus,
            _ => {
                out.push((sign, TermId::from_letter(c)?));
                sign = Sign::Plus;
            }
        }
    }
    Some(out)
}

fn parse_vars(s: &str) -> Vec<ProfileVar> {
    s.trim()
        .chars()
        .map(|c| ProfileVar::from_name(c).unwrap_or_else(|| panic!("unknown variable {c}")))
        .collect()
}

/// Case table, in order. Each condition is `nonneg : negative [: integer]`,
/// alternatives separated by `|`. Cases past the end give zero.
const CASE_TABLE: [(&str, &str); 45] = [
    ("abcdefghilroj : p", "A-B-C-D+E+F+G+H+I-J-K-L-N-O+Q"),
    ("abcdefghilopj : r", "A-B-C-D+E+F+G+H+I-J-K-L-M-N+P"),
    ("abcdefgilroj : hp", "A-B-C-D+E+F+G+H+I-J-L-N-O+Q"),
    ("abcdefgilopj : hr", "A-B-C-D+E+F+G+H+I-J-L-M-N+P"),
    ("abcdefghlopj : ir", "A-B-C-D+E+F+G+H+I-J-K-M-N+P"),
    ("abcdefglopj : hir", "A-B-C-D+E+F+G+H+I-J-M-N+P"),
    ("abcdefghiloj : rp", "A-B-C-D+E+F+G+H+I-J-K-L-N"),
    ("abcdefgiloj : hrp", "A-B-C-D+E+F+G+H+I-J-L-N"),
    ("abcdeflopj : ghir", "A-B-C-D+E+F+H+I-J-M-N+P"),
    ("abcdefghloj : irp", "A-B-C-D+E+F+G+H+I-J-K-N"),
    ("abdefghilroj : cp", "A-B-C-D+F+G+H+I-K-L-O+Q"),
    ("abcdefgloj : hirp", "A-B-C-D+E+F+G+H+I-J-N"),
    ("abdefgilroj : hcp", "A-B-C-D+F+G+H+I-L-O+Q"),
    ("abcdefghlj : irop", "A-B-C-D+E+F+G+H-J-K"),
    ("abcdefloj : ghirp", "A-B-C-D+E+F+H+I-J-N"),
    ("abdegilroj : fhcp", "A-B-C-D+G+H+I-L-O+Q"),
    ("abdefghiloj : rcp", "A-B-C-D+F+G+H+I-K-L"),
    ("abcdefglj : hirop", "A-B-C-D+E+F+G+H-J"),
    ("abdefgiloj : chrp", "A-B-C-D+F+G+H+I-L"),
    ("abdefghloj : cirp", "A-B-C-D+F+G+H+I-K"),
    ("abcdeflj : ghirop", "A-B-C-D+E+F+H-J"),
    ("abdefghlj : crop : i", "A-B-C-D+F+G+H-K"),
    ("abdefgloj : chirp", "A-B-C-D+F+G+H+I"),
    ("abdegiloj : cfhrp", "A-B-C-D+G+H+I-L"),
    ("adegilroj : bchp : f", "A-C-D+G+I-L-O+Q"),
    ("abdefglj : chrop : i", "A-B-C-D+F+G+H"),
    ("abdefloj : cghirp", "A-B-C-D+F+H+I"),
    ("abdegloj : cfhirp", "A-B-C-D+G+H+I"),
    ("abcdefj : ghilrop", "A-B-C+E+F-J"),
    ("abdeflj : cghirop", "A-B-C-D+F+H"),
    ("abdeglj : cfhrop : i", "A-B-C-D+G+H"),
    ("adegiloj : bchrp : f", "A-C-D+G+I-L"),
    ("abdeloj : cfghirp", "A-B-C-D+H+I"),
    ("abdelj : cfghirop", "A-B-C-D+H"),
    ("adegloj : bchirp : f", "A-C-D+G+I"),
    ("abdefj : cghilrop", "A-B-C+F"),
    ("abdlj : cefghirop", "A-B-D+H"),
    ("adeglj : bchirop : f", "A-C-D+G"),
    ("adeloj : bcghirp : f", "A-C-D+I"),
    ("abdej : cfghilrop", "A-B-C"),
    ("adelj : bcghirop : f", "A-C-D"),
    ("abdj : cefghilrop", "A-B"),
    ("adejg : bclohiprf | adejgi : bclohprf | adejf : bcloghipr | adej : bcloghiprf", "A-C"),
    ("adlj : bcefghirop", "A-D"),
    ("adj : bcefghilrop", "A"),
];

/// Number of the catch-all case that yields zero.
pub const FALLBACK_CASE: usize = CASE_TABLE.len() + 1;

pub fn closed_formula_cases() -> &'static [ClosedFormulaCase] {
    static CASES: OnceLock<Vec<ClosedFormulaCase>> = OnceLock::new();
    CASES.get_or_init(|| {
        CASE_TABLE
            .iter()
            .enumerate()
            .map(|(i, (cond, terms))| {
                let patterns = cond
                    .split('|')
                    .map(|alt| {
                        let parts: Vec<&str> = alt.split(':').collect();
                        SignPattern {
                            nonneg: parse_vars(parts[0]),
                            negative: parse_vars(parts[1]),
                            integer: parts.get(2).map(|s| parse_vars(s)).unwrap_or_default(),
                        }
                    })
                    .collect();
                ClosedFormulaCase {
                    number: i + 1,
                    patterns,
                    terms: parse_terms(terms).expect("case terms are valid"),
                }
            })
            .collect()
    })
}

/// Every case whose condition holds for the profile, in order.
pub fn matching_cases(profile: &CoefficientProfile) -> Vec<usize> {
    let mask = profile.nonneg_mask();
    closed_formula_cases()
        .iter()
        .filter(|c| c.matches(mask))
        .map(|c| c.number)
        .collect()
}

/// First matching case number, or [`FALLBACK_CASE`].
pub fn dispatch_case(profile: &CoefficientProfile) -> usize {
    let mask = profile.nonneg_mask();
    closed_formula_cases()
        .iter()
        .find(|c| c.matches(mask))
        .map_or(FALLBACK_CASE, |c| c.number)
}

pub fn mult_q_cases(lam: WeightFW, mu: WeightFW) -> QPoly {
    mult_q_cases_with(&Direct, lam, mu)
}

pub fn mult_q_cases_with<S: KpfSource + ?Sized>(src: &S, lam: WeightFW, mu: WeightFW) -> QPoly {
    let mut out = QPoly::zero();
    if !root_lattice_parity(lam, mu) {
        return out;
    }
    let profile = coefficient_profile(lam, mu);
    let case = dispatch_case(&profile);
    let Some(case) = closed_formula_cases().get(case - 1) else {
        return out;
    };
    for (sign, t) in &case.terms {
        let triple = profile.alpha_triple(*t).expect("even parity makes the profile integral");
        out.add_signed_assign(*sign, &src.kpf_q(triple));
    }
    out
}

pub fn mult(lam: WeightFW, mu: WeightFW) -> BigInt {
    mult_q_direct(lam, mu).eval_at_one()
}

fn dot(u: [i128; 3], v: [i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn dominant_conjugate(v: [i128; 3]) -> [i128; 3] {
    let mut a = v.map(i128::abs);
    a.sort_unstable_by(|x, y| y.cmp(x));
    a
}

/// Simple-root coordinates of `lam - nu` if they are nonnegative integers.
fn below(lam: [i128; 3], nu: [i128; 3]) -> Option<i128> {
    let d = [lam[0] - nu[0], lam[1] - nu[1], lam[2] - nu[2]];
    let c = eps_int_to_alpha(d);
    c.iter()
        .all(|h| h.is_integral() && h.is_nonneg())
        .then(|| c.iter().map(|h| h.doubled() / 2).sum())
}

/// Weight multiplicity by Freudenthal's recursion.
///
/// Works with dominant weights only, in ambient coordinates, using the
/// standard form in which the `e_i` are orthonormal. Multiplicities of
/// non-dominant weights are read off their dominant conjugate.
pub fn mult_freudenthal(lam: WeightFW, mu: WeightFW) -> Result<BigInt, MultError> {
    if !lam.is_dominant() {
        return Err(MultError::NotDominant(lam));
    }
    let top = lam.to_eps();
    let target = dominant_conjugate(mu.to_eps());
    if below(top, target).is_none() {
        return Ok(BigInt::from(0));
    }

    let mut dominant: Vec<([i128; 3], i128)> = Vec::new();
    for e1 in 0..=top[0] {
        for e2 in 0..=e1 {
            for e3 in 0..=e2 {
                if let Some(h) = below(top, [e1, e2, e3]) {
                    dominant.push(([e1, e2, e3], h));
                }
            }
        }
    }
    dominant.sort_by_key(|(_, h)| *h);

    let roots: Vec<[i128; 3]> = POSITIVE_ROOTS.iter().map(|r| alpha_int_to_eps(*r)).collect();
    let shift = |v: [i128; 3]| [v[0] + RHO_EPS[0], v[1] + RHO_EPS[1], v[2] + RHO_EPS[2]];
    let norm_top = dot(shift(top), shift(top));
    let mut mult: HashMap<[i128; 3], i128> = HashMap::new();
    for (nu, h) in dominant {
        if h == 0 {
            mult.insert(nu, 1);
            continue;
        }
        let mut acc = 0i128;
        for a in &roots {
            for k in 1.. {
                let w = [nu[0] + k * a[0], nu[1] + k * a[1], nu[2] + k * a[2]];
                match mult.get(&dominant_conjugate(w)) {
                    Some(m) => acc += dot(w, *a) * m,
                    None => break,
                }
            }
        }
        let denom = norm_top - dot(shift(nu), shift(nu));
        let num = 2 * acc;
        assert!(denom > 0 && num % denom == 0, "Freudenthal recursion is exact");
        mult.insert(nu, num / denom);
    }
    Ok(BigInt::from(mult.get(&target).copied().unwrap_or(0)))
}
