//! Family notation (`C(..)`, `J(k,l)`, `T(2,q)`), diagram generators and the
//! plain-text diagram and coloring formats.

mod plat;
mod text;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, ParseError, Result};

pub use plat::{plat_diagram, PlatDiagram};
pub use text::{emit_coloring, emit_diagram, parse_coloring, parse_diagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Four-plat with twist boxes `c1, ..., cn`.
    Plat(Vec<i64>),
    /// Double twist link `J(k, l)`.
    DoubleTwist(i64, i64),
    /// Two-strand torus link `T(2, q)`.
    Torus2(i64),
}

impl FamilySpec {
    pub fn entries(&self) -> Vec<i64> {
        match self {
            FamilySpec::Plat(c) => c.clone(),
            FamilySpec::DoubleTwist(k, l) => vec![*k, *l],
            FamilySpec::Torus2(q) => vec![*q],
        }
    }

    /// Conway normal form: a plat with every entry even.
    pub fn is_conway_normal_form(&self) -> bool {
        matches!(self, FamilySpec::Plat(c) if c.iter().all(|x| x % 2 == 0 && *x != 0))
    }

    pub fn plat(&self) -> Result<PlatDiagram> {
        plat_diagram(&self.entries())
    }

    pub fn diagram(&self) -> Result<Diagram> {
        Ok(self.plat()?.diagram)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Plat(c) => {
                let parts: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "C({})", parts.join(","))
            }
            FamilySpec::DoubleTwist(k, l) => write!(f, "J({k},{l})"),
            FamilySpec::Torus2(q) => write!(f, "T(2,{q})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_family(s)
    }
}

pub fn parse_family(text: &str) -> Result<FamilySpec, ParseError> {
    // (1-based column, char) with whitespace removed.
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + 1, c))
        .collect();
    let end_col = text.chars().count() + 1;
    let col = |k: usize| chars.get(k).map_or(end_col, |&(i, _)| i);

    let Some(&(_, kind)) = chars.first() else {
        return Err(ParseError::family(end_col, "empty notation"));
    };
    if !matches!(kind, 'C' | 'J' | 'T') {
        return Err(ParseError::family(col(0), format!("unknown family {kind:?}, expected C, J or T")));
    }
    if chars.get(1).map(|&(_, c)| c) != Some('(') {
        return Err(ParseError::family(col(1), "expected '('"));
    }

    let mut values = Vec::new();
    let mut k = 2;
    loop {
        let start = k;
        if matches!(chars.get(k), Some((_, '+' | '-'))) {
            k += 1;
        }
        while matches!(chars.get(k), Some((_, c)) if c.is_ascii_digit()) {
            k += 1;
        }
        let token: String = chars[start..k].iter().map(|&(_, c)| c).collect();
        let value: i64 = token
            .parse()
            .map_err(|_| ParseError::family(col(start), "expected a signed integer"))?;
        values.push((col(start), value));
        match chars.get(k) {
            Some((_, ',')) => k += 1,
            Some((_, ')')) => {
                k += 1;
                break;
            }
            _ => return Err(ParseError::family(col(k), "expected ',' or ')'")),
        }
    }
    if k != chars.len() {
        return Err(ParseError::family(col(k), "trailing characters"));
    }
    if let Some(&(pos, _)) = values.iter().find(|(_, v)| *v == 0) {
        return Err(ParseError::family(pos, "twist entries must be nonzero"));
    }

    let arity = |n: usize| {
        if values.len() == n {
            Ok(())
        } else {
            Err(ParseError::family(col(1), format!("{kind}(..) takes {n} arguments, got {}", values.len())))
        }
    };
    match kind {
        'C' => Ok(FamilySpec::Plat(values.iter().map(|&(_, v)| v).collect())),
        'J' => {
            arity(2)?;
            Ok(FamilySpec::DoubleTwist(values[0].1, values[1].1))
        }
        _ => {
            arity(2)?;
            if values[0].1 != 2 {
                return Err(ParseError::family(values[0].0, "only two-strand torus links T(2,q) are supported"));
            }
            Ok(FamilySpec::Torus2(values[1].1))
        }
    }
}

pub fn double_twist_diagram(k: i64, l: i64) -> Result<Diagram> {
    Ok(plat_diagram(&[k, l])?.diagram)
}

pub fn torus2_diagram(q: i64) -> Result<Diagram> {
    if q == 0 {
        return Err(Error::ZeroEntry(0));
    }
    Ok(plat_diagram(&[q])?.diagram)
}
