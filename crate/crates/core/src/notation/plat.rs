//! Four-strand plat diagrams.
//!
//! Strand positions are numbered 0 (top) to 3 (bottom). The left end is
//! closed by caps joining positions (0,1) and (2,3). Twist boxes alternate
//! between the middle pair (1,2) for odd list positions and the top pair
//! (0,1) for even list positions. An odd-length list is closed on the right
//! by caps (0,1),(2,3); an even-length list by nested caps (1,2),(0,3).
//!
//! Components are oriented so the strands at positions 1 and 2 leave the left
//! end moving right. Arcs are numbered in traversal order, components taken
//! from the top-left.
//!
//! With this convention the diagram for `[c1, ..., cn]` has determinant equal
//! to the numerator of `c1 + 1/(c2 + 1/(... + 1/cn))`, `[q]` is the standard
//! two-strand torus diagram and `[k, l]` the double twist diagram.

use crate::diagram::{ArcId, Crossing, Diagram, Sign};
use crate::error::{Error, Result};

/// A generated plat diagram together with the arcs through the two left caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatDiagram {
    pub diagram: Diagram,
    pub entries: Vec<i64>,
    /// Arc through the left cap joining positions 0 and 1.
    pub left_top_arc: ArcId,
    /// Arc through the left cap joining positions 2 and 3.
    pub left_bottom_arc: ArcId,
}

#[derive(Debug, Clone, Copy)]
struct Twist {
    /// Upper strand position of the pair.
    pos: usize,
    /// True when the strand running from upper-left to lower-right is over.
    falling_over: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    Right,
    Left,
}

#[derive(Debug, Clone, Copy)]
struct Passage {
    crossing: usize,
    over: bool,
    dx: i64,
    dy: i64,
}

pub fn plat_diagram(entries: &[i64]) -> Result<PlatDiagram> {
    if entries.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    if let Some(i) = entries.iter().position(|&c| c == 0) {
        return Err(Error::ZeroEntry(i));
    }

    let mut twists = Vec::new();
    for (i, &c) in entries.iter().enumerate() {
        let (pos, parity) = if i % 2 == 0 { (1, 1) } else { (0, -1) };
        let falling_over = c.signum() * parity > 0;
        twists.extend(std::iter::repeat_n(Twist { pos, falling_over }, c.unsigned_abs() as usize));
    }
    let right_caps: [(usize, usize); 2] = if entries.len() % 2 == 1 {
        [(0, 1), (2, 3)]
    } else {
        [(1, 2), (0, 3)]
    };
    let left_caps = [(0, 1), (2, 3)];
    let n = twists.len();

    // Nodes are (slice, position); slice t sits between element t and t+1,
    // where element 0 is the left closure, 1..=n the twists and n+1 the right
    // closure.
    let cap_partner = |caps: &[(usize, usize); 2], j: usize| {
        caps.iter()
            .find_map(|&(a, b)| if j == a { Some(b) } else if j == b { Some(a) } else { None })
            .expect("every position is capped")
    };
    let step = |t: usize, j: usize, dir: Dir| -> ((usize, usize), Dir, Option<Passage>) {
        match dir {
            Dir::Right if t == n => ((t, cap_partner(&right_caps, j)), Dir::Left, None),
            Dir::Left if t == 0 => ((t, cap_partner(&left_caps, j)), Dir::Right, None),
            Dir::Right => {
                let tw = twists[t];
                let passage = |falling: bool| Passage {
                    crossing: t,
                    over: falling == tw.falling_over,
                    dx: 1,
                    dy: if falling { -1 } else { 1 },
                };
                if j == tw.pos {
                    ((t + 1, j + 1), Dir::Right, Some(passage(true)))
                } else if j == tw.pos + 1 {
                    ((t + 1, j - 1), Dir::Right, Some(passage(false)))
                } else {
                    ((t + 1, j), Dir::Right, None)
                }
            }
            Dir::Left => {
                let tw = twists[t - 1];
                let passage = |falling: bool| Passage {
                    crossing: t - 1,
                    over: falling == tw.falling_over,
                    dx: -1,
                    dy: if falling { 1 } else { -1 },
                };
                if j == tw.pos + 1 {
                    ((t - 1, j - 1), Dir::Left, Some(passage(true)))
                } else if j == tw.pos {
                    ((t - 1, j + 1), Dir::Left, Some(passage(false)))
                } else {
                    ((t - 1, j), Dir::Left, None)
                }
            }
        }
    };

    let mut visited = vec![[false; 4]; n + 1];
    let mut over_arc = vec![usize::MAX; n];
    let mut over_dir = vec![(0i64, 0i64); n];
    let mut under = vec![(usize::MAX, usize::MAX); n];
    let mut under_dir = vec![(0i64, 0i64); n];
    let mut num_arcs = 0;
    let mut free_loops = 0;
    let mut left_arc = [usize::MAX; 4];

    for t0 in 0..=n {
        for j0 in 0..4 {
            if visited[t0][j0] {
                continue;
            }
            // Orientation: the middle strands leave the left end moving right,
            // so they run parallel through the first box.
            let start = if (t0, j0) == (0, 0) { (0, 1) } else { (t0, j0) };
            // Walk the component, counting undercrossings passed so far.
            let mut passages = Vec::new();
            let mut node_unders = Vec::new();
            let ((mut t, mut j), mut dir) = (start, Dir::Right);
            loop {
                visited[t][j] = true;
                if t == 0 {
                    node_unders.push((j, passages.iter().filter(|p: &&Passage| !p.over).count()));
                }
                let (next, next_dir, passage) = step(t, j, dir);
                passages.extend(passage);
                (t, j) = next;
                dir = next_dir;
                if (t, j) == start && dir == Dir::Right {
                    break;
                }
            }
            let unders = passages.iter().filter(|p| !p.over).count();
            if passages.is_empty() {
                free_loops += 1;
                continue;
            }
            if unders == 0 {
                return Err(Error::NeverUnder(j0));
            }
            let base = num_arcs;
            let mut seen = 0;
            for p in &passages {
                let arc = base + seen % unders;
                if p.over {
                    over_arc[p.crossing] = arc;
                    over_dir[p.crossing] = (p.dx, p.dy);
                } else {
                    seen += 1;
                    under[p.crossing] = (arc, base + seen % unders);
                    under_dir[p.crossing] = (p.dx, p.dy);
                }
            }
            for (j, count) in node_unders {
                left_arc[j] = base + count % unders;
            }
            num_arcs += unders;
        }
    }

    let crossings = (0..n)
        .map(|i| {
            let (ox, oy) = over_dir[i];
            let (ux, uy) = under_dir[i];
            let sign = if ox * uy - oy * ux > 0 { Sign::Positive } else { Sign::Negative };
            Crossing::new(sign, over_arc[i], under[i].0, under[i].1)
        })
        .collect();
    let diagram = Diagram::new(num_arcs, crossings, free_loops)?;
    Ok(PlatDiagram {
        diagram,
        entries: entries.to_vec(),
        left_top_arc: left_arc[0],
        left_bottom_arc: left_arc[2],
    })
}
