//! S3-colorings of diagrams: validity, enumeration, palette classification,
//! the per-component class profile, the constructive coloring of Conway
//! normal forms, and the linear invariants (Fox counts, determinant).

mod linear;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{under_color_raw, ArcId, Diagram};
use crate::error::{Error, Result};
use crate::group::{ClassLabel, S3Element};
use crate::notation::plat_diagram;
use crate::par::Exec;

pub use linear::{determinant, determinant_minor, fox_coloring_count};

/// Colors of all colorable arcs: crossing arcs `0..num_arcs`, then one entry
/// per free loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<S3Element>);

impl Coloring {
    pub fn new(colors: Vec<S3Element>) -> Self {
        Coloring(colors)
    }

    pub fn constant(d: &Diagram, color: S3Element) -> Self {
        Coloring(vec![color; d.colorable_arcs()])
    }

    pub fn colors(&self) -> &[S3Element] {
        &self.0
    }

    pub fn get(&self, arc: ArcId) -> Option<S3Element> {
        self.0.get(arc).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn palette(&self) -> Palette {
        self.0.iter().copied().collect()
    }

    pub fn into_inner(self) -> Vec<S3Element> {
        self.0
    }
}

/// Set of colors used by a coloring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Palette(u8);

impl Palette {
    pub fn insert(&mut self, a: S3Element) {
        self.0 |= 1 << a.index();
    }

    pub fn contains(self, a: S3Element) -> bool {
        self.0 & (1 << a.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_trivial(self) -> bool {
        self.len() == 1
    }

    pub fn iter(self) -> impl Iterator<Item = S3Element> {
        S3Element::ALL.into_iter().filter(move |&a| self.contains(a))
    }

    pub fn count_class(self, class: ClassLabel) -> usize {
        self.iter().filter(|a| a.class() == class).count()
    }
}

impl FromIterator<S3Element> for Palette {
    fn from_iter<I: IntoIterator<Item = S3Element>>(iter: I) -> Self {
        let mut p = Palette::default();
        for a in iter {
            p.insert(a);
        }
        p
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<&str> = self.iter().map(S3Element::word).collect();
        write!(f, "{{{}}}", words.join(","))
    }
}

impl Serialize for Palette {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn check_length(d: &Diagram, c: &Coloring) -> Result<()> {
    let expected = d.colorable_arcs();
    if c.len() < expected {
        return Err(Error::MissingColor(c.len()));
    }
    if c.len() > expected {
        return Err(Error::ColoringLength { expected, got: c.len() });
    }
    Ok(())
}

pub(crate) fn first_bad_crossing(d: &Diagram, c: &Coloring) -> Option<usize> {
    let colors = c.colors();
    d.crossings().iter().position(|x| {
        let (over, y, z) = (colors[x.over], colors[x.under_in], colors[x.under_out]);
        over.is_identity() || y.is_identity() || under_color_raw(x.sign, over, y) != z
    })
}

/// True iff no arc is colored by the identity and every crossing satisfies
/// the crossing relation.
pub fn is_valid_coloring(d: &Diagram, c: &Coloring) -> Result<bool> {
    d.check()?;
    check_length(d, c)?;
    Ok(!c.colors().iter().any(|a| a.is_identity()) && first_bad_crossing(d, c).is_none())
}

pub fn enumerate_colorings(d: &Diagram) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, Exec::default())
}

pub fn enumerate_colorings_with(d: &Diagram, exec: Exec) -> Result<Vec<Coloring>> {
    d.check()?;
    Ok(search::fold_colorings(
        d,
        exec,
        Vec::new,
        |acc: &mut Vec<Coloring>, c| acc.push(Coloring(c.to_vec())),
        |mut a, b| {
            a.extend(b);
            a
        },
    ))
}

/// Number of valid colorings, without materializing them.
pub fn count_colorings(d: &Diagram, exec: Exec) -> Result<u64> {
    d.check()?;
    Ok(search::fold_colorings(d, exec, || 0u64, |n, _| *n += 1, |a, b| a + b))
}

/// Achievable palette sizes with per-size counts.
///
/// Serializes as `{"n": [..], "counts": {"1": c1, ...}}`; the witnesses (the
/// first coloring of each size in canonical order) are not serialized.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: Vec<usize>,
    pub counts: BTreeMap<usize, u64>,
    #[serde(skip)]
    pub witnesses: BTreeMap<usize, Coloring>,
}

impl Classification {
    pub fn contains(&self, n: usize) -> bool {
        self.counts.contains_key(&n)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    fn record(&mut self, colors: &[S3Element]) {
        let n = colors.iter().copied().collect::<Palette>().len();
        *self.counts.entry(n).or_default() += 1;
        self.witnesses.entry(n).or_insert_with(|| Coloring(colors.to_vec()));
    }

    fn merge(mut self, other: Classification) -> Classification {
        for (n, count) in other.counts {
            *self.counts.entry(n).or_default() += count;
        }
        for (n, w) in other.witnesses {
            self.witnesses.entry(n).or_insert(w);
        }
        self
    }

    fn finish(mut self) -> Self {
        self.n = self.counts.keys().copied().collect();
        self
    }
}

pub fn classify(d: &Diagram) -> Result<Classification> {
    classify_with(d, Exec::default())
}

pub fn classify_with(d: &Diagram, exec: Exec) -> Result<Classification> {
    d.check()?;
    let c = search::fold_colorings(d, exec, Classification::default, Classification::record, Classification::merge);
    Ok(c.finish())
}

/// The conjugacy class shared by the colors of each component (blocks in the
/// order of [`Diagram::components`], then free loops).
pub fn component_class_profile(d: &Diagram, c: &Coloring) -> Result<Vec<ClassLabel>> {
    d.check()?;
    check_length(d, c)?;
    if let Some(bad) = first_bad_crossing(d, c) {
        return Err(Error::InvalidColoring(bad));
    }
    if c.colors().iter().any(|a| a.is_identity()) {
        return Err(Error::IdentityColor);
    }
    let comps = d.components()?;
    let mut profile = Vec::with_capacity(comps.count());
    for block in &comps.blocks {
        let class = c.colors()[block[0]].class();
        assert!(
            block.iter().all(|&a| c.colors()[a].class() == class),
            "valid coloring mixes conjugacy classes on one component"
        );
        profile.push(class);
    }
    profile.extend(c.colors()[d.num_arcs()..].iter().map(|a| a.class()));
    Ok(profile)
}

/// Result of the left-to-right constructive coloring of a Conway normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConwayColoring {
    Colored { diagram: Diagram, coloring: Coloring },
    /// The propagated colors disagree at `crossing` when the diagram closes.
    ConditionFailure { diagram: Diagram, crossing: usize },
}

impl ConwayColoring {
    pub fn diagram(&self) -> &Diagram {
        match self {
            ConwayColoring::Colored { diagram, .. } | ConwayColoring::ConditionFailure { diagram, .. } => diagram,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ConwayColoring::Colored { coloring, .. } => Some(coloring),
            ConwayColoring::ConditionFailure { .. } => None,
        }
    }
}

/// Seeds the arcs through the two left caps with `s` and `st` and propagates
/// the crossing relation through the twist boxes from left to right.
pub fn constructive_conway_coloring(entries: &[i64]) -> Result<ConwayColoring> {
    if let Some(i) = entries.iter().position(|&c| c == 0) {
        return Err(Error::ZeroEntry(i));
    }
    if let Some((position, &value)) = entries.iter().enumerate().find(|(_, c)| *c % 2 != 0) {
        return Err(Error::OddEntry { position, value });
    }
    let plat = plat_diagram(entries)?;
    let d = plat.diagram;
    let crossings = d.crossings();
    let mut colors = vec![S3Element::E; d.num_arcs()];
    // The top pair carries the b-boxes, so its cap gets the 3-cycle.
    colors[plat.left_bottom_arc] = S3Element::S;
    if colors[plat.left_top_arc] != S3Element::E {
        // Both caps on one component: it cannot carry both classes.
        let crossing = d.ending_crossing()[plat.left_top_arc];
        return Ok(ConwayColoring::ConditionFailure { diagram: d, crossing });
    }
    colors[plat.left_top_arc] = S3Element::St;

    // Crossings are stored left to right; sweep until nothing changes.
    let mut changed = true;
    while changed {
        changed = false;
        for (i, c) in crossings.iter().enumerate() {
            let (x, y, z) = (colors[c.over], colors[c.under_in], colors[c.under_out]);
            if x.is_identity() {
                continue;
            }
            match (y.is_identity(), z.is_identity()) {
                (false, true) => {
                    colors[c.under_out] = under_color_raw(c.sign, x, y);
                    changed = true;
                }
                (true, false) => {
                    colors[c.under_in] = under_color_raw(c.sign.flip(), x, z);
                    changed = true;
                }
                (false, false) if under_color_raw(c.sign, x, y) != z => {
                    return Ok(ConwayColoring::ConditionFailure { diagram: d, crossing: i });
                }
                _ => {}
            }
        }
    }
    assert!(
        colors.iter().all(|a| !a.is_identity()),
        "plat sweep leaves no arc uncolored"
    );
    Ok(ConwayColoring::Colored { diagram: d, coloring: Coloring(colors) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Crossing;
    use crate::group::S3Element::*;
    use crate::notation::{double_twist_diagram, torus2_diagram};

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
    fn validity_examples() {
        let t = trefoil();
        assert!(is_valid_coloring(&t, &Coloring::new(vec![S, T, Sts])).unwrap());
        for color in S3Element::NON_IDENTITY {
            assert!(is_valid_coloring(&t, &Coloring::constant(&t, color)).unwrap());
        }
        assert!(!is_valid_coloring(&hopf(), &Coloring::new(vec![S, T])).unwrap());
        assert!(!is_valid_coloring(&t, &Coloring::constant(&t, E)).unwrap());
        assert_eq!(is_valid_coloring(&t, &Coloring::new(vec![S, S])), Err(Error::MissingColor(2)));
    }

    #[test]
    fn trefoil_enumeration() {
        let all = enumerate_colorings(&trefoil()).unwrap();
        assert_eq!(all.len(), 11);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted, "canonical order");
        let c = classify(&trefoil()).unwrap();
        assert_eq!(c.n, vec![1, 3]);
        assert_eq!(c.counts[&3], 6);
    }

    #[test]
    fn hopf_has_two_color_coloring() {
        let all = enumerate_colorings(&hopf()).unwrap();
        assert!(all.contains(&Coloring::new(vec![St, Ts])));
    }

    #[test]
    fn free_loops_multiply_by_five() {
        let d = Diagram::new(3, trefoil().crossings().to_vec(), 2).unwrap();
        assert_eq!(count_colorings(&d, Exec::Sequential).unwrap(), 11 * 25);
        assert_eq!(count_colorings(&Diagram::unknot(), Exec::Sequential).unwrap(), 5);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&torus2_diagram(4).unwrap()).unwrap().n, vec![1, 2, 4]);
        // The standard twist diagram never carries a fifth color; the link
        // reaches 5 only after an R2 insertion (see moves::promote_to_five).
        assert_eq!(classify(&torus2_diagram(12).unwrap()).unwrap().n, vec![1, 2, 3, 4]);
        assert_eq!(classify(&trefoil()).unwrap().n, vec![1, 3]);
    }

    #[test]
    fn classification_json_shape() {
        let json = serde_json::to_value(classify(&trefoil()).unwrap()).unwrap();
        assert_eq!(json, serde_json::json!({"n": [1, 3], "counts": {"1": 5, "3": 6}}));
    }

    #[test]
    fn class_profiles() {
        let h = hopf();
        assert_eq!(
            component_class_profile(&h, &Coloring::new(vec![St, Ts])).unwrap(),
            vec![ClassLabel::ThreeCycle, ClassLabel::ThreeCycle]
        );
        assert_eq!(
            component_class_profile(&trefoil(), &Coloring::new(vec![S, T, Sts])).unwrap(),
            vec![ClassLabel::Transposition]
        );
        assert_eq!(
            component_class_profile(&h, &Coloring::constant(&h, S)).unwrap(),
            vec![ClassLabel::Transposition, ClassLabel::Transposition]
        );
        assert!(component_class_profile(&h, &Coloring::new(vec![S, T])).is_err());
    }

    #[test]
    fn constructive_examples() {
        let c4 = constructive_conway_coloring(&[4]).unwrap();
        let coloring = c4.coloring().expect("C(4) colors");
        assert!(is_valid_coloring(c4.diagram(), coloring).unwrap());
        assert_eq!(coloring.palette().len(), 4);

        assert!(matches!(
            constructive_conway_coloring(&[2]).unwrap(),
            ConwayColoring::ConditionFailure { .. }
        ));

        let c222 = constructive_conway_coloring(&[2, 2, 2]).unwrap();
        assert!(is_valid_coloring(c222.diagram(), c222.coloring().unwrap()).unwrap());

        assert_eq!(
            constructive_conway_coloring(&[2, 3, 2]).unwrap_err(),
            Error::OddEntry { position: 1, value: 3 }
        );
        assert_eq!(constructive_conway_coloring(&[2, 0]).unwrap_err(), Error::ZeroEntry(1));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&torus2_diagram(4).unwrap()).unwrap(), 4);
        assert_eq!(determinant(&double_twist_diagram(3, 5).unwrap()).unwrap(), 16);
        assert_eq!(determinant(&double_twist_diagram(1, 1).unwrap()).unwrap(), 2);
        assert_eq!(determinant(&double_twist_diagram(2, 2).unwrap()).unwrap(), 5);
    }

    #[test]
    fn fox_examples() {
        assert_eq!(fox_coloring_count(&trefoil(), 3).unwrap(), 9);
        let fig8 = double_twist_diagram(2, 2).unwrap();
        assert_eq!(fox_coloring_count(&fig8, 5).unwrap(), 25);
        assert_eq!(fox_coloring_count(&fig8, 3).unwrap(), 3);
    }
}
