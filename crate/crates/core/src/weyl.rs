//! The Weyl group of C3 as signed permutations of three letters.
//!
//! An element sends `e_i` to `signs[i] * e_{perm[i]}`. The generators are
//! `s1 = (e1 e2)`, `s2 = (e2 e3)` and `s3: e3 -> -e3`. Words are read as
//! products, so `s1*s2` acts by `s2` first.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qpoly::Sign;
use crate::root_system::{alpha_to_eps, eps_int_to_alpha, eps_to_alpha, AlphaVector, EpsVector, POSITIVE_ROOTS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("generator index {0} is not in 1..=3")]
    BadGenerator(i64),
    #[error("cannot parse Weyl word `{0}`")]
    BadWord(String),
}

/// Reduced words for all 48 elements, in canonical order.
pub const CANONICAL_WORDS: [&str; 48] = [
    "1",
    "s1",
    "s2",
    "s3",
    "s1*s2",
    "s2*s1",
    "s2*s3",
    "s3*s1",
    "s3*s2",
    "s1*s2*s1",
    "s1*s2*s3",
    "s2*s3*s1",
    "s2*s3*s2",
    "s3*s2*s1",
    "s3*s1*s2",
    "s3*s2*s3",
    "s1*s2*s3*s1",
    "s1*s2*s3*s2",
    "s2*s3*s2*s1",
    "s2*s3*s1*s2",
    "s3*s1*s2*s1",
    "s3*s2*s3*s1",
    "s3*s2*s3*s2",
    "s3*s1*s2*s3",
    "s1*s2*s3*s2*s1",
    "s1*s2*s3*s1*s2",
    "s2*s3*s1*s2*s1",
    "s2*s3*s1*s2*s3",
    "s3*s1*s2*s3*s1",
    "s3*s1*s2*s3*s2",
    "s3*s2*s3*s2*s1",
    "s3*s2*s3*s1*s2",
    "s1*s2*s3*s1*s2*s1",
    "s2*s3*s1*s2*s3*s1",
    "s2*s3*s1*s2*s3*s2",
    "s3*s1*s2*s3*s1*s2",
    "s3*s1*s2*s3*s2*s1",
    "s3*s2*s3*s1*s2*s1",
    "s3*s2*s3*s1*s2*s3",
    "s2*s3*s1*s2*s3*s2*s1",
    "s2*s3*s1*s2*s3*s1*s2",
    "s3*s2*s3*s1*s2*s3*s2",
    "s3*s1*s2*s3*s1*s2*s1",
    "s3*s2*s3*s1*s2*s3*s1",
    "s2*s3*s1*s2*s3*s1*s2*s1",
    "s3*s2*s3*s1*s2*s3*s2*s1",
    "s3*s2*s3*s1*s2*s3*s1*s2",
    "s3*s2*s3*s1*s2*s3*s1*s2*s1",
];

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: [u8; 3],
    signs: [i8; 3],
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        perm: [0, 1, 2],
        signs: [1, 1, 1],
    };

    /// Builds an element from a 0-based permutation and signs, checking both.
    pub fn from_signed_permutation(perm: [u8; 3], signs: [i8; 3]) -> Option<WeylElement> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        signs
            .iter()
            .all(|s| *s == 1 || *s == -1)
            .then_some(WeylElement { perm, signs })
    }

    pub fn perm(&self) -> [u8; 3] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut perm = [0u8; 3];
        let mut signs = [0i8; 3];
        for i in 0..3 {
            let j = other.perm[i] as usize;
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = [0u8; 3];
        let mut signs = [0i8; 3];
        for i in 0..3 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// Action on integral ambient coordinates.
    pub fn apply_eps(&self, v: [i128; 3]) -> [i128; 3] {
        let mut out = [0i128; 3];
        for i in 0..3 {
            out[self.perm[i] as usize] = self.signs[i] as i128 * v[i];
        }
        out
    }

    pub fn apply_eps_rational(&self, v: &EpsVector) -> EpsVector {
        let src = [&v.e1, &v.e2, &v.e3];
        let mut out = [src[0].clone(), src[1].clone(), src[2].clone()];
        for i in 0..3 {
            let x = src[i].clone();
            out[self.perm[i] as usize] = if self.signs[i] < 0 { -x } else { x };
        }
        let [e1, e2, e3] = out;
        EpsVector { e1, e2, e3 }
    }

    pub fn apply(&self, v: &AlphaVector) -> AlphaVector {
        eps_to_alpha(&self.apply_eps_rational(&alpha_to_eps(v)))
    }

    /// Matrix in the ambient basis; column `i` is the image of `e_i`.
    pub fn matrix(&self) -> [[i32; 3]; 3] {
        let mut m = [[0i32; 3]; 3];
        for i in 0..3 {
            m[self.perm[i] as usize][i] = self.signs[i] as i32;
        }
        m
    }

    pub fn determinant(&self) -> i32 {
        let m = self.matrix();
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        POSITIVE_ROOTS
            .iter()
            .filter(|r| {
                let img = eps_int_to_alpha(self.apply_eps(crate::root_system::alpha_int_to_eps(**r)));
                img.iter().any(|c| !c.is_nonneg())
            })
            .count()
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.length() % 2 == 1)
    }

    /// Position in [`CANONICAL_WORDS`].
    pub fn canonical_index(&self) -> usize {
        group().index[self]
    }

    pub fn label(&self) -> &'static str {
        CANONICAL_WORDS[self.canonical_index()]
    }

    pub fn reduced_word(&self) -> &'static ReducedWord {
        &group().elements[self.canonical_index()].1
    }

    pub fn by_index(i: usize) -> WeylElement {
        group().elements[i].0
    }

    /// Looks up an element by a word such as `s3*s2`, `s3s2` or `1`.
    pub fn from_label(s: &str) -> Result<WeylElement, WeylError> {
        s.parse::<ReducedWord>().map(|w| w.evaluate())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<WeylElement, D::Error> {
        let s = String::deserialize(d)?;
        WeylElement::from_label(&s).map_err(serde::de::Error::custom)
    }
}

pub fn generator(i: i64) -> Result<WeylElement, WeylError> {
    match i {
        1 => Ok(WeylElement { perm: [1, 0, 2], signs: [1, 1, 1] }),
        2 => Ok(WeylElement { perm: [0, 2, 1], signs: [1, 1, 1] }),
        3 => Ok(WeylElement { perm: [0, 1, 2], signs: [1, 1, -1] }),
        _ => Err(WeylError::BadGenerator(i)),
    }
}

pub fn compose(s: &WeylElement, t: &WeylElement) -> WeylElement {
    s.compose(t)
}

pub fn length(s: &WeylElement) -> usize {
    s.length()
}

pub fn sign(s: &WeylElement) -> Sign {
    s.sign()
}

pub fn apply(s: &WeylElement, v: &AlphaVector) -> AlphaVector {
    s.apply(v)
}

/// A word in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<u8>,
}

impl ReducedWord {
    pub fn new(letters: Vec<u8>) -> Result<ReducedWord, WeylError> {
        if let Some(&bad) = letters.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(WeylError::BadGenerator(bad as i64));
        }
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> WeylElement {
        self.letters.iter().fold(WeylElement::IDENTITY, |acc, &l| {
            acc.compose(&generator(l as i64).expect("letters are validated"))
        })
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for ReducedWord {
    type Err = WeylError;

    /// Accepts `1`, `s3*s2`, `s3s2`, `s_3 s_2`.
    fn from_str(s: &str) -> Result<ReducedWord, WeylError> {
        let bad = || WeylError::BadWord(s.to_string());
        let compact: String = s.chars().filter(|c| !matches!(c, ' ' | '*' | '_')).collect();
        if compact == "1" {
            return Ok(ReducedWord { letters: Vec::new() });
        }
        let bytes = compact.as_bytes();
        if bytes.is_empty() || !bytes.len().is_multiple_of(2) {
            return Err(bad());
        }
        let mut letters = Vec::with_capacity(bytes.len() / 2);
        for pair in bytes.chunks(2) {
            match pair {
                [b's', d @ b'1'..=b'3'] => letters.push(d - b'0'),
                _ => return Err(bad()),
            }
        }
        Ok(ReducedWord { letters })
    }
}

struct Group {
    elements: Vec<(WeylElement, ReducedWord)>,
    index: HashMap<WeylElement, usize>,
}

fn group() -> &'static Group {
    static GROUP: OnceLock<Group> = OnceLock::new();
    GROUP.get_or_init(|| {
        let elements: Vec<(WeylElement, ReducedWord)> = CANONICAL_WORDS
            .iter()
            .map(|w| {
                let word: ReducedWord = w.parse().expect("canonical words parse");
                (word.evaluate(), word)
            })
            .collect();
        let index: HashMap<WeylElement, usize> =
            elements.iter().enumerate().map(|(i, (e, _))| (*e, i)).collect();
        assert_eq!(index.len(), 48, "canonical words must name 48 distinct elements");
        Group { elements, index }
    })
}

/// All 48 elements with their canonical reduced words, in canonical order.
pub fn enumerate_group() -> &'static [(WeylElement, ReducedWord)] {
    &group().elements
}

pub fn elements() -> impl Iterator<Item = WeylElement> {
    group().elements.iter().map(|(e, _)| *e)
}

/// Breadth-first distances from the identity in the right Cayley graph.
pub fn cayley_distances() -> HashMap<WeylElement, usize> {
    let gens: Vec<WeylElement> = (1..=3).map(|i| generator(i).unwrap()).collect();
    let mut dist = HashMap::from([(WeylElement::IDENTITY, 0usize)]);
    let mut queue = VecDeque::from([WeylElement::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for g in &gens {
            let y = x.compose(g);
            if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(y) {
                slot.insert(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}
