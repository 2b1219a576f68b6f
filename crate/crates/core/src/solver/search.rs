//! Backtracking search over arc colors with forward propagation through the
//! crossing relation.
//!
//! The lowest uncolored arc is always branched on, trying colors in the order
//! `s < t < sts < st < ts`. Every arc below the branching arc is fixed inside a
//! subtree, so solutions come out in lexicographic (arc-major) order.

use crate::diagram::{under_color_raw, ArcId, Diagram};
use crate::group::S3Element;
use crate::par::{self, Exec};

/// `S3Element::E` marks an uncolored arc; it is never an admissible color.
const UNSET: S3Element = S3Element::E;

pub(crate) struct Search<'a> {
    d: &'a Diagram,
    /// Crossings touching each crossing arc, deduplicated.
    incident: Vec<Vec<usize>>,
}

#[derive(Clone)]
pub(crate) struct State {
    colors: Vec<S3Element>,
    trail: Vec<ArcId>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(d: &'a Diagram) -> Self {
        let mut incident = vec![Vec::new(); d.num_arcs()];
        for (i, c) in d.crossings().iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if incident[arc].last() != Some(&i) {
                    incident[arc].push(i);
                }
            }
        }
        Search { d, incident }
    }

    pub(crate) fn empty_state(&self) -> State {
        State { colors: vec![UNSET; self.d.colorable_arcs()], trail: Vec::new() }
    }

    fn set(state: &mut State, arc: ArcId, color: S3Element, stack: &mut Vec<ArcId>) {
        state.colors[arc] = color;
        state.trail.push(arc);
        stack.push(arc);
    }

    /// Colors `arc` and propagates every forced color. Returns false on a
    /// conflict; the partial work stays on the trail for `undo`.
    pub(crate) fn assign(&self, state: &mut State, arc: ArcId, color: S3Element) -> bool {
        let mut stack = Vec::new();
        Self::set(state, arc, color, &mut stack);
        let crossings = self.d.crossings();
        while let Some(a) = stack.pop() {
            let Some(touching) = self.incident.get(a) else {
                continue;
            };
            for &ci in touching {
                let c = crossings[ci];
                let x = state.colors[c.over];
                let y = state.colors[c.under_in];
                let z = state.colors[c.under_out];
                if x != UNSET {
                    if y != UNSET {
                        let want = under_color_raw(c.sign, x, y);
                        if z == UNSET {
                            Self::set(state, c.under_out, want, &mut stack);
                        } else if z != want {
                            return false;
                        }
                    } else if z != UNSET {
                        let want = under_color_raw(c.sign.flip(), x, z);
                        Self::set(state, c.under_in, want, &mut stack);
                    }
                } else if y != UNSET && z != UNSET && y.class() != z.class() {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn undo(state: &mut State, mark: usize) {
        while state.trail.len() > mark {
            let arc = state.trail.pop().expect("trail above mark");
            state.colors[arc] = UNSET;
        }
    }

    fn dfs(&self, state: &mut State, from: ArcId, visit: &mut dyn FnMut(&[S3Element])) {
        let Some(arc) = (from..state.colors.len()).find(|&a| state.colors[a] == UNSET) else {
            visit(&state.colors);
            return;
        };
        for color in S3Element::NON_IDENTITY {
            let mark = state.trail.len();
            if self.assign(state, arc, color) {
                self.dfs(state, arc + 1, visit);
            }
            Self::undo(state, mark);
        }
    }
}

/// Folds `visit` over every valid coloring in canonical order.
///
/// Under `Exec::Parallel` the tree is split at arc 0 and the per-branch
/// accumulators are merged in branch order, so the result is identical to
/// the sequential fold.
pub(crate) fn fold_colorings<A, I, V, M>(d: &Diagram, exec: Exec, init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[S3Element]) + Sync + Send,
    M: Fn(A, A) -> A,
{
    let search = Search::new(d);
    if d.colorable_arcs() == 0 {
        let mut acc = init();
        visit(&mut acc, &[]);
        return acc;
    }
    let branches = par::map(exec, &S3Element::NON_IDENTITY, |&color| {
        let mut acc = init();
        let mut state = search.empty_state();
        if search.assign(&mut state, 0, color) {
            search.dfs(&mut state, 1, &mut |c| visit(&mut acc, c));
        }
        acc
    });
    branches.into_iter().reduce(merge).expect("five branches")
}
