//! Reidemeister I/II insertions on colored diagrams and the promotion of a
//! 4-color coloring to a 5-color one.
//!
//! Moves act on the incidence structure only. New arcs are appended after the
//! existing crossing arcs (free-loop entries of the coloring shift up) and new
//! crossings are appended to the crossing list.

use serde::Serialize;

use crate::diagram::{under_color_raw, ArcId, Crossing, Diagram, Sign};
use crate::error::{Error, Result};
use crate::group::{ClassLabel, S3Element};
use crate::solver::{first_bad_crossing, is_valid_coloring, Coloring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    R1Insert,
    R2Insert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    /// Arcs the move was applied to: `[arc]` for R1, `[moving, over]` for R2.
    pub site: Vec<ArcId>,
    /// Indices of the crossings created.
    pub new_crossings: Vec<usize>,
    /// Arcs created. For R2 the first is the middle arc and the second the
    /// tail that takes over the end of the moving arc.
    pub new_arcs: Vec<ArcId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moved {
    pub diagram: Diagram,
    pub coloring: Coloring,
    pub record: MoveRecord,
}

fn require_valid(d: &Diagram, c: &Coloring) -> Result<()> {
    if !is_valid_coloring(d, c)? {
        return Err(match first_bad_crossing(d, c) {
            Some(i) => Error::InvalidColoring(i),
            None => Error::IdentityColor,
        });
    }
    Ok(())
}

/// Appends `added` new crossing arcs with the given colors, keeping free-loop
/// colors after them.
fn extend_coloring(d: &Diagram, c: &Coloring, added: &[S3Element]) -> Coloring {
    let mut colors = c.clone().into_inner();
    let loops = colors.split_off(d.num_arcs());
    colors.extend_from_slice(added);
    colors.extend(loops);
    Coloring::new(colors)
}

/// Adds a curl at the end of `arc`. The new arc passes over the curl
/// crossing and carries the same color.
pub fn r1_insert(d: &Diagram, c: &Coloring, arc: ArcId, sign: Sign) -> Result<Moved> {
    require_valid(d, c)?;
    if arc >= d.num_arcs() {
        return Err(Error::NoSuchArc(arc));
    }
    let tail = d.num_arcs();
    let mut crossings = d.crossings().to_vec();
    let end = d.ending_crossing()[arc];
    crossings[end].under_in = tail;
    crossings.push(Crossing::new(sign, tail, arc, tail));
    let diagram = Diagram::new(d.num_arcs() + 1, crossings, d.free_loops())?;
    let coloring = extend_coloring(d, c, &[c.colors()[arc]]);
    Ok(Moved {
        diagram,
        coloring,
        record: MoveRecord {
            kind: MoveKind::R1Insert,
            site: vec![arc],
            new_crossings: vec![d.num_crossings()],
            new_arcs: vec![tail],
        },
    })
}

/// Pushes the end of `moving_arc` under `over_arc`: a positive then a
/// negative crossing, with a middle arc colored
/// `under_color(+1, color(over_arc), color(moving_arc))`.
pub fn r2_insert(d: &Diagram, c: &Coloring, moving_arc: ArcId, over_arc: ArcId) -> Result<Moved> {
    require_valid(d, c)?;
    for arc in [moving_arc, over_arc] {
        if arc >= d.num_arcs() {
            return Err(Error::NoSuchArc(arc));
        }
    }
    if moving_arc == over_arc {
        return Err(Error::SameArc(moving_arc));
    }
    let middle = d.num_arcs();
    let tail = middle + 1;
    let mut crossings = d.crossings().to_vec();
    let end = d.ending_crossing()[moving_arc];
    crossings[end].under_in = tail;
    crossings.push(Crossing::positive(over_arc, moving_arc, middle));
    crossings.push(Crossing::negative(over_arc, middle, tail));
    let diagram = Diagram::new(d.num_arcs() + 2, crossings, d.free_loops())?;

    let g = c.colors()[moving_arc];
    let h = c.colors()[over_arc];
    let coloring = extend_coloring(d, c, &[under_color_raw(Sign::Positive, h, g), g]);
    Ok(Moved {
        diagram,
        coloring,
        record: MoveRecord {
            kind: MoveKind::R2Insert,
            site: vec![moving_arc, over_arc],
            new_crossings: vec![d.num_crossings(), d.num_crossings() + 1],
            new_arcs: vec![middle, tail],
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Promotion {
    pub diagram: Diagram,
    pub coloring: Coloring,
    pub moves: Vec<MoveRecord>,
}

/// Turns a valid 4-color coloring into a 5-color coloring of a diagram
/// obtained by R2 insertions.
///
/// For each missing color the lowest-indexed pair (moving arc, over arc) whose
/// middle arc would receive exactly that color is used: a transposition
/// pushed under a 3-cycle yields another transposition, and a 3-cycle pushed
/// under a transposition yields the other 3-cycle.
pub fn promote_to_five(d: &Diagram, c: &Coloring) -> Result<Promotion> {
    require_valid(d, c)?;
    let palette = c.palette();
    if palette.len() != 4 {
        return Err(Error::PaletteNotFour(palette.len()));
    }
    let mut diagram = d.clone();
    let mut coloring = c.clone();
    let mut moves = Vec::new();
    while let Some(missing) = S3Element::NON_IDENTITY
        .into_iter()
        .find(|&a| !coloring.palette().contains(a))
    {
        let colors = &coloring.colors()[..diagram.num_arcs()];
        // Transposition under a 3-cycle, or 3-cycle under a transposition.
        let over_class = match missing.class() {
            ClassLabel::Transposition => ClassLabel::ThreeCycle,
            _ => ClassLabel::Transposition,
        };
        let pair = (0..colors.len()).find_map(|m| {
            (0..colors.len())
                .find(|&o| {
                    colors[o].class() == over_class
                        && under_color_raw(Sign::Positive, colors[o], colors[m]) == missing
                })
                .map(|o| (m, o))
        });
        let Some((moving, over)) = pair else {
            let reason = match missing.class() {
                ClassLabel::Transposition => {
                    "needs a transposition-colored arc and a 3-cycle-colored arc among the crossing arcs"
                }
                _ => "needs a 3-cycle-colored arc and a transposition-colored arc among the crossing arcs",
            };
            return Err(Error::NoPromotion { missing: missing.to_string(), reason: reason.into() });
        };
        let moved = r2_insert(&diagram, &coloring, moving, over)?;
        diagram = moved.diagram;
        coloring = moved.coloring;
        moves.push(moved.record);
    }
    Ok(Promotion { diagram, coloring, moves })
}
