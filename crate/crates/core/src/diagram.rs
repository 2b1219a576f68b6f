//! Combinatorial model of an oriented link diagram.
//!
//! A diagram is a list of signed crossings over dense arc indices. Each arc
//! starts at exactly one undercrossing and ends at exactly one undercrossing;
//! crossing-free circles are only counted (`free_loops`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::S3Element;

pub type ArcId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flip()
    }
}

/// One crossing: `over` is the overpassing arc, `under_in` the under arc that
/// ends here and `under_out` the under arc that starts here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub over: ArcId,
    pub under_in: ArcId,
    pub under_out: ArcId,
}

impl Crossing {
    pub fn new(sign: Sign, over: ArcId, under_in: ArcId, under_out: ArcId) -> Self {
        Crossing { sign, over, under_in, under_out }
    }

    pub fn positive(over: ArcId, under_in: ArcId, under_out: ArcId) -> Self {
        Self::new(Sign::Positive, over, under_in, under_out)
    }

    pub fn negative(over: ArcId, under_in: ArcId, under_out: ArcId) -> Self {
        Self::new(Sign::Negative, over, under_in, under_out)
    }
}

/// A reason a diagram fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    ArcOutOfRange { crossing: usize, arc: ArcId },
    UnderInCount { arc: ArcId, count: usize },
    UnderOutCount { arc: ArcId, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArcOutOfRange { crossing, arc } => {
                write!(f, "crossing {crossing} references arc {arc}, which is out of range")
            }
            Violation::UnderInCount { arc, count } => {
                write!(f, "arc {arc} ends at {count} undercrossings (expected 1)")
            }
            Violation::UnderOutCount { arc, count } => {
                write!(f, "arc {arc} starts at {count} undercrossings (expected 1)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    num_arcs: usize,
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl Diagram {
    /// Builds a diagram and validates it.
    pub fn new(num_arcs: usize, crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = Self::from_parts(num_arcs, crossings, free_loops);
        d.check()?;
        Ok(d)
    }

    /// Builds a diagram without validation. Every analysis entry point
    /// re-validates, so an invalid value is reported rather than trusted.
    pub fn from_parts(num_arcs: usize, crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Diagram { num_arcs, crossings, free_loops }
    }

    pub fn unknot() -> Self {
        Diagram { num_arcs: 0, crossings: Vec::new(), free_loops: 1 }
    }

    /// Arcs that touch at least one crossing.
    pub fn num_arcs(&self) -> usize {
        self.num_arcs
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Arcs that receive a color: crossing arcs first, then one per free loop.
    pub fn colorable_arcs(&self) -> usize {
        self.num_arcs + self.free_loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut violations = Vec::new();
        let mut ins = vec![0usize; self.num_arcs];
        let mut outs = vec![0usize; self.num_arcs];
        for (i, c) in self.crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if arc >= self.num_arcs {
                    violations.push(Violation::ArcOutOfRange { crossing: i, arc });
                }
            }
            if let Some(n) = ins.get_mut(c.under_in) {
                *n += 1;
            }
            if let Some(n) = outs.get_mut(c.under_out) {
                *n += 1;
            }
        }
        for arc in 0..self.num_arcs {
            if ins[arc] != 1 {
                violations.push(Violation::UnderInCount { arc, count: ins[arc] });
            }
            if outs[arc] != 1 {
                violations.push(Violation::UnderOutCount { arc, count: outs[arc] });
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidDiagram)
    }

    /// For each arc, the index of the crossing where it ends (as `under_in`).
    pub(crate) fn ending_crossing(&self) -> Vec<usize> {
        let mut end = vec![usize::MAX; self.num_arcs];
        for (i, c) in self.crossings.iter().enumerate() {
            end[c.under_in] = i;
        }
        end
    }

    pub fn components(&self) -> Result<Components> {
        self.check()?;
        let mut successor = vec![0; self.num_arcs];
        for c in &self.crossings {
            successor[c.under_in] = c.under_out;
        }
        let mut component_of = vec![usize::MAX; self.num_arcs];
        let mut blocks = Vec::new();
        for start in 0..self.num_arcs {
            if component_of[start] != usize::MAX {
                continue;
            }
            let mut block = Vec::new();
            let mut arc = start;
            while component_of[arc] == usize::MAX {
                component_of[arc] = blocks.len();
                block.push(arc);
                arc = successor[arc];
            }
            blocks.push(block);
        }
        Ok(Components { blocks, component_of, free_loops: self.free_loops })
    }

    /// Half the signed count of crossings between the two components.
    pub fn linking_number(&self) -> Result<i64> {
        let comps = self.components()?;
        if comps.blocks.len() != 2 {
            return Err(Error::ComponentCount(comps.blocks.len()));
        }
        let total: i64 = self
            .crossings
            .iter()
            .filter(|c| comps.component_of[c.over] != comps.component_of[c.under_in])
            .map(|c| c.sign.value())
            .sum();
        if total % 2 != 0 {
            return Err(Error::OddLinkingSum(total));
        }
        Ok(total / 2)
    }
}

/// Partition of the arcs into link components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Arcs of each component, in traversal order from the smallest arc.
    /// Blocks are ordered by their smallest arc.
    pub blocks: Vec<Vec<ArcId>>,
    pub component_of: Vec<usize>,
    pub free_loops: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.blocks.len() + self.free_loops
    }

    /// Component index of a colorable arc; free loop `j` (colorable arc
    /// `num_arcs + j`) is component `blocks.len() + j`.
    pub fn of_colorable_arc(&self, arc: ArcId) -> usize {
        match self.component_of.get(arc) {
            Some(&c) => c,
            None => self.blocks.len() + (arc - self.component_of.len()),
        }
    }
}

/// Color of the outgoing under arc at a crossing with over color `x` and
/// incoming under color `y`: `x y x^-1` at a positive crossing,
/// `x^-1 y x` at a negative one.
pub fn under_color(sign: Sign, x: S3Element, y: S3Element) -> Result<S3Element> {
    if x.is_identity() || y.is_identity() {
        return Err(Error::IdentityColor);
    }
    Ok(under_color_raw(sign, x, y))
}

#[inline]
pub(crate) fn under_color_raw(sign: Sign, x: S3Element, y: S3Element) -> S3Element {
    match sign {
        Sign::Positive => x.conjugate(y),
        Sign::Negative => x.inverse().conjugate(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::S3Element::*;

    pub(crate) fn curl() -> Diagram {
        Diagram::new(1, vec![Crossing::positive(0, 0, 0)], 0).unwrap()
    }

    fn trefoil() -> Diagram {
        Diagram::new(
            3,
            vec![
                Crossing::positive(2, 0, 1),
                Crossing::positive(0, 1, 2),
                Crossing::positive(1, 2, 0),
            ],
            0,
        )
        .unwrap()
    }

    fn hopf() -> Diagram {
        Diagram::new(2, vec![Crossing::positive(1, 0, 0), Crossing::positive(0, 1, 1)], 0).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(curl().validate().is_ok());
        assert!(Diagram::unknot().validate().is_ok());

        let broken = Diagram::from_parts(
            4,
            vec![Crossing::positive(1, 0, 1), Crossing::positive(2, 3, 0)],
            0,
        );
        let v = broken.validate().unwrap_err();
        assert!(v.contains(&Violation::UnderOutCount { arc: 3, count: 0 }), "{v:?}");

        let out_of_range = Diagram::from_parts(1, vec![Crossing::positive(5, 0, 0)], 0);
        assert_eq!(
            out_of_range.validate().unwrap_err(),
            vec![Violation::ArcOutOfRange { crossing: 0, arc: 5 }]
        );
    }

    #[test]
    fn component_examples() {
        assert_eq!(trefoil().components().unwrap().count(), 1);
        assert_eq!(hopf().components().unwrap().count(), 2);
        let curl_and_loop = Diagram::new(1, vec![Crossing::positive(0, 0, 0)], 1).unwrap();
        assert_eq!(curl_and_loop.components().unwrap().count(), 2);
    }

    #[test]
    fn under_color_examples() {
        assert_eq!(under_color(Sign::Positive, St, Sts).unwrap(), S);
        assert_eq!(under_color(Sign::Negative, St, Sts).unwrap(), T);
        assert_eq!(under_color(Sign::Positive, S, St).unwrap(), Ts);
        assert_eq!(under_color(Sign::Positive, E, S), Err(Error::IdentityColor));
        assert_eq!(under_color(Sign::Negative, S, E), Err(Error::IdentityColor));
    }

    #[test]
    fn under_color_properties() {
        for sign in [Sign::Positive, Sign::Negative] {
            for x in S3Element::NON_IDENTITY {
                assert_eq!(under_color(sign, x, x).unwrap(), x);
                for y in S3Element::NON_IDENTITY {
                    let z = under_color(sign, x, y).unwrap();
                    assert_ne!(z, E);
                    assert_eq!(z.class(), y.class());
                    assert_eq!(under_color(-sign, x, z).unwrap(), y);
                }
            }
        }
    }

    #[test]
    fn linking_numbers() {
        assert_eq!(hopf().linking_number().unwrap().abs(), 1);
        // Two curls, no crossings between them.
        let split = Diagram::new(
            2,
            vec![Crossing::positive(0, 0, 0), Crossing::negative(1, 1, 1)],
            0,
        )
        .unwrap();
        assert_eq!(split.linking_number().unwrap(), 0);
        assert_eq!(trefoil().linking_number(), Err(Error::ComponentCount(1)));
    }
}
