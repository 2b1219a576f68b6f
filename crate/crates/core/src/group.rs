//! The symmetric group of degree three, presented as
//! `<s, t | s^2 = t^2 = e, sts = tst>`.
//!
//! Elements are stored as their reduced words. The multiplication table is
//! derived once from word rewriting, so the relations of the presentation are
//! the only source of truth for the product.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// An element of S3 in reduced-word normal form.
///
/// The declaration order `e < s < t < sts < st < ts` is the canonical element
/// order used everywhere (enumeration order, palettes, reports).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum S3Element {
    E,
    S,
    T,
    Sts,
    St,
    Ts,
}

/// Conjugacy class of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    Identity,
    Transposition,
    ThreeCycle,
}

impl S3Element {
    pub const ALL: [S3Element; 6] = [
        S3Element::E,
        S3Element::S,
        S3Element::T,
        S3Element::Sts,
        S3Element::St,
        S3Element::Ts,
    ];

    /// The five admissible colors, in canonical order.
    pub const NON_IDENTITY: [S3Element; 5] = [
        S3Element::S,
        S3Element::T,
        S3Element::Sts,
        S3Element::St,
        S3Element::Ts,
    ];

    pub const TRANSPOSITIONS: [S3Element; 3] = [S3Element::S, S3Element::T, S3Element::Sts];
    pub const THREE_CYCLES: [S3Element; 2] = [S3Element::St, S3Element::Ts];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    /// The reduced word, e.g. `"sts"`.
    pub fn word(self) -> &'static str {
        match self {
            S3Element::E => "e",
            S3Element::S => "s",
            S3Element::T => "t",
            S3Element::Sts => "sts",
            S3Element::St => "st",
            S3Element::Ts => "ts",
        }
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self == S3Element::E
    }

    pub fn inverse(self) -> S3Element {
        match self {
            S3Element::St => S3Element::Ts,
            S3Element::Ts => S3Element::St,
            other => other,
        }
    }

    /// `self * y * self^-1`.
    #[inline]
    pub fn conjugate(self, y: S3Element) -> S3Element {
        self * y * self.inverse()
    }

    pub fn class(self) -> ClassLabel {
        match self {
            S3Element::E => ClassLabel::Identity,
            S3Element::S | S3Element::T | S3Element::Sts => ClassLabel::Transposition,
            S3Element::St | S3Element::Ts => ClassLabel::ThreeCycle,
        }
    }
}

pub fn mul(a: S3Element, b: S3Element) -> S3Element {
    a * b
}

pub fn inverse(a: S3Element) -> S3Element {
    a.inverse()
}

/// Returns `x * y * x^-1`.
pub fn conjugate(x: S3Element, y: S3Element) -> S3Element {
    x.conjugate(y)
}

pub fn class_of(a: S3Element) -> ClassLabel {
    a.class()
}

pub fn parse_element(text: &str) -> Result<S3Element, ParseError> {
    text.parse()
}

pub fn format_element(a: S3Element) -> &'static str {
    a.word()
}

impl std::ops::Mul for S3Element {
    type Output = S3Element;

    fn mul(self, rhs: S3Element) -> S3Element {
        mul_table()[self.index()][rhs.index()]
    }
}

impl fmt::Display for S3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

impl FromStr for S3Element {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e" => Ok(S3Element::E),
            "s" => Ok(S3Element::S),
            "t" => Ok(S3Element::T),
            "sts" => Ok(S3Element::Sts),
            "st" => Ok(S3Element::St),
            "ts" => Ok(S3Element::Ts),
            other => Err(ParseError::UnknownElement(other.to_string())),
        }
    }
}

impl From<S3Element> for String {
    fn from(a: S3Element) -> String {
        a.word().to_string()
    }
}

impl TryFrom<String> for S3Element {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Reduces a word over `{s, t}` with the rules `ss -> 1`, `tt -> 1`,
/// `tst -> sts`. The system is terminating and confluent; its irreducible
/// words are exactly the six normal forms.
fn reduce_word(word: &str) -> String {
    let mut w: Vec<u8> = word.bytes().filter(|&b| b != b'e').collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                changed = true;
                break;
            }
            if i + 2 < w.len() && &w[i..i + 3] == b"tst" {
                w[i..i + 3].copy_from_slice(b"sts");
                changed = true;
                break;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    if w.is_empty() {
        "e".to_string()
    } else {
        String::from_utf8(w).expect("ascii word")
    }
}

fn mul_table() -> &'static [[S3Element; 6]; 6] {
    static TABLE: OnceLock<[[S3Element; 6]; 6]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[S3Element::E; 6]; 6];
        for a in S3Element::ALL {
            for b in S3Element::ALL {
                let word = format!("{}{}", a.word(), b.word());
                table[a.index()][b.index()] = reduce_word(&word)
                    .parse()
                    .expect("rewriting yields a normal form");
            }
        }
        table
    })
}
