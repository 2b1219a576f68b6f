//! Verification sweeps over the two-bridge families.
//!
//! Each sweep evaluates independent items (one diagram each) and assembles a
//! [`Report`] in input order. Items run in parallel under `Exec::Parallel`;
//! every field except `elapsed_ms` is a function of the inputs alone.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{under_color_raw, Diagram, Sign};
use crate::error::{Error, Result};
use crate::group::{ClassLabel, S3Element};
use crate::moves::{promote_to_five, Promotion};
use crate::notation::{emit_diagram, plat_diagram, FamilySpec};
use crate::par::{self, Exec};
use crate::solver::{classify_with, constructive_conway_coloring, determinant, is_valid_coloring, Classification, Coloring, ConwayColoring};

pub const DEFAULT_MAX_CROSSINGS: usize = 16;
pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }
}

/// Summary of a 4-to-5 color promotion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PromotionSummary {
    pub moves: Vec<crate::moves::MoveRecord>,
    pub palette_size: usize,
    pub crossings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ItemReport {
    pub label: String,
    pub entries: Vec<i64>,
    pub crossings: usize,
    pub components: usize,
    /// Palette sizes realized on the generated diagram.
    pub n_set: Vec<usize>,
    /// `n_set` plus palette sizes realized on diagrams of the same link
    /// reached by R2 insertions (the 4-to-5 promotion).
    pub link_n_set: Vec<usize>,
    pub counts: BTreeMap<usize, u64>,
    pub determinant: Option<u128>,
    pub linking_number: Option<i64>,
    pub promotion: Option<PromotionSummary>,
    pub checks: Vec<Check>,
    pub passed: bool,
    /// The offending diagram in the text format, present iff a check failed.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub items: Vec<ItemReport>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl Report {
    fn assemble(command: &str, inputs: serde_json::Value, items: Vec<ItemReport>, started: Instant) -> Report {
        let passed = items.iter().all(|i| i.passed);
        Report {
            command: command.to_string(),
            inputs,
            items,
            passed,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ItemReport> {
        self.items.iter().filter(|i| !i.passed)
    }
}

/// Checks that every R2 insertion of a promotion produced the color the
/// conjugation rule predicts and that the result is a valid 5-coloring.
fn check_promotion(start: &Coloring, p: &Promotion) -> Check {
    let valid = is_valid_coloring(&p.diagram, &p.coloring).unwrap_or(false);
    let size = p.coloring.palette().len();
    let colors = p.coloring.colors();
    let mut pattern_ok = true;
    let mut palette = start.palette();
    for m in &p.moves {
        let (moving, over) = (colors[m.site[0]], colors[m.site[1]]);
        let middle = colors[m.new_arcs[0]];
        let expected = under_color_raw(Sign::Positive, over, moving);
        let class_rule = match (moving.class(), over.class()) {
            (ClassLabel::Transposition, ClassLabel::ThreeCycle) => {
                middle.class() == ClassLabel::Transposition && middle != moving
            }
            (ClassLabel::ThreeCycle, ClassLabel::Transposition) => middle == moving.inverse(),
            _ => false,
        };
        pattern_ok &= middle == expected && class_rule && !palette.contains(middle);
        palette.insert(middle);
    }
    Check::new(
        "promote_to_five",
        valid && size == 5 && pattern_ok,
        format!("{} R2 insertion(s), palette {}, valid {valid}", p.moves.len(), p.coloring.palette()),
    )
}

struct Analysis {
    diagram: Diagram,
    classification: Classification,
    item: ItemReport,
}

fn analyze(label: String, entries: &[i64]) -> Result<Analysis> {
    let diagram = plat_diagram(entries)?.diagram;
    let classification = classify_with(&diagram, Exec::Sequential)?;
    let determinant = determinant(&diagram).ok();
    let linking_number = diagram.linking_number().ok();
    let mut item = ItemReport {
        label,
        entries: entries.to_vec(),
        crossings: diagram.num_crossings(),
        components: diagram.components()?.count(),
        n_set: classification.n.clone(),
        link_n_set: classification.n.clone(),
        counts: classification.counts.clone(),
        determinant,
        linking_number,
        promotion: None,
        checks: Vec::new(),
        passed: true,
        counterexample: None,
    };
    if let Some(witness) = classification.witnesses.get(&4) {
        let check = match promote_to_five(&diagram, witness) {
            Ok(p) => {
                let check = check_promotion(witness, &p);
                if check.passed && !item.link_n_set.contains(&5) {
                    item.link_n_set.push(5);
                }
                item.promotion = Some(PromotionSummary {
                    moves: p.moves,
                    palette_size: p.coloring.palette().len(),
                    crossings: p.diagram.num_crossings(),
                });
                check
            }
            Err(e) => Check::new("promote_to_five", false, e.to_string()),
        };
        item.checks.push(check);
    }
    Ok(Analysis { diagram, classification, item })
}

fn finish(mut a: Analysis, checks: Vec<Check>) -> ItemReport {
    a.item.checks.extend(checks);
    a.item.passed = a.item.checks.iter().all(|c| c.passed);
    if !a.item.passed {
        a.item.counterexample = Some(emit_diagram(&a.diagram));
    }
    a.item
}

fn failed_item(label: String, entries: &[i64], err: Error) -> ItemReport {
    ItemReport {
        label,
        entries: entries.to_vec(),
        crossings: entries.iter().map(|c| c.unsigned_abs() as usize).sum(),
        components: 0,
        n_set: Vec::new(),
        link_n_set: Vec::new(),
        counts: BTreeMap::new(),
        determinant: None,
        linking_number: None,
        promotion: None,
        checks: vec![Check::new("analysis", false, err.to_string())],
        passed: false,
        counterexample: None,
    }
}

fn iff(name: &str, lhs: bool, rhs: bool, lhs_text: &str, rhs_text: &str) -> Check {
    Check::new(name, lhs == rhs, format!("{lhs_text}: {lhs}, {rhs_text}: {rhs}"))
}

fn torus_item(q: i64) -> ItemReport {
    let label = FamilySpec::Torus2(q).to_string();
    let a = match analyze(label.clone(), &[q]) {
        Ok(a) => a,
        Err(e) => return failed_item(label, &[q], e),
    };
    let det = a.item.determinant;
    let mut checks = vec![
        iff("4-colorable iff q = 0 mod 4", a.classification.contains(4), q % 4 == 0, "4 in n-set", "q = 0 mod 4"),
        iff(
            "3-colorable iff det = 0 mod 3",
            a.classification.contains(3),
            det.is_some_and(|d| d % 3 == 0),
            "3 in n-set",
            "det = 0 mod 3",
        ),
        Check::new("det = q", det == Some(q.unsigned_abs() as u128), format!("det {det:?}, q {q}")),
    ];
    if q == 12 {
        let ok = [3, 4, 5].iter().all(|n| a.item.link_n_set.contains(n));
        checks.push(Check::new(
            "T(2,12) is (3,4,5)-colorable",
            ok,
            format!("link n-set {:?}", a.item.link_n_set),
        ));
    }
    finish(a, checks)
}

pub fn verify_torus(q_max: i64, exec: Exec) -> Result<Report> {
    if q_max < 2 {
        return Err(Error::Bound(format!("q_max must be at least 2, got {q_max}")));
    }
    let started = Instant::now();
    let qs: Vec<i64> = (2..=q_max).collect();
    let items = par::map(exec, &qs, |&q| torus_item(q));
    Ok(Report::assemble("verify-torus", serde_json::json!({ "q_max": q_max }), items, started))
}

fn double_twist_item(k: i64, l: i64) -> ItemReport {
    let label = FamilySpec::DoubleTwist(k, l).to_string();
    let a = match analyze(label.clone(), &[k, l]) {
        Ok(a) => a,
        Err(e) => return failed_item(label, &[k, l], e),
    };
    let kl = k * l;
    let det = a.item.determinant;
    let checks = vec![
        iff(
            "4-colorable iff kl = 3 mod 4",
            a.classification.contains(4),
            kl.rem_euclid(4) == 3,
            "4 in n-set",
            "kl = 3 mod 4",
        ),
        iff(
            "3-colorable iff kl = 2 mod 3",
            a.classification.contains(3),
            kl.rem_euclid(3) == 2,
            "3 in n-set",
            "kl = 2 mod 3",
        ),
        Check::new(
            "det = 1 + kl",
            det.map(|d| d as i128) == Some((1 + kl).abs() as i128),
            format!("det {det:?}, 1 + kl = {}", 1 + kl),
        ),
    ];
    finish(a, checks)
}

/// Sweeps `J(k, l)` over odd `1 <= k <= k_max`, `1 <= l <= l_max`.
pub fn verify_double_twist(k_max: i64, l_max: i64, exec: Exec) -> Result<Report> {
    if k_max < 1 || l_max < 1 {
        return Err(Error::Bound(format!("k_max and l_max must be at least 1, got {k_max}, {l_max}")));
    }
    let started = Instant::now();
    let pairs: Vec<(i64, i64)> = (1..=k_max)
        .step_by(2)
        .flat_map(|k| (1..=l_max).step_by(2).map(move |l| (k, l)))
        .collect();
    let items = par::map(exec, &pairs, |&(k, l)| double_twist_item(k, l));
    Ok(Report::assemble(
        "verify-j",
        serde_json::json!({ "k_max": k_max, "l_max": l_max }),
        items,
        started,
    ))
}

/// Seeded samples of Conway normal forms `C(2a1, 2b1, ..., 2bm, 2a(m+1))`
/// with `m <= 2`, `1 <= |a_i|, |b_j| <= 3`, free signs and at most
/// `max_crossings` crossings.
pub fn sample_conway(seed: u64, samples: usize, max_crossings: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    if max_crossings < 2 {
        return out;
    }
    while out.len() < samples {
        let m = rng.gen_range(0..=2usize);
        let entries: Vec<i64> = (0..2 * m + 1)
            .map(|_| {
                let magnitude = rng.gen_range(1..=3i64);
                if rng.gen_bool(0.5) {
                    2 * magnitude
                } else {
                    -2 * magnitude
                }
            })
            .collect();
        if entries.iter().map(|c| c.unsigned_abs() as usize).sum::<usize>() <= max_crossings {
            out.push(entries);
        }
    }
    out
}

/// `sum |a_i|` over the a-boxes (odd list positions) of `C(2a1, 2b1, ...)`.
pub fn a_sum(entries: &[i64]) -> i64 {
    entries.iter().step_by(2).map(|c| c.abs() / 2).sum()
}

fn conway_item(entries: &[i64]) -> ItemReport {
    let label = FamilySpec::Plat(entries.to_vec()).to_string();
    let mut a = match analyze(label.clone(), entries) {
        Ok(a) => a,
        Err(e) => return failed_item(label, entries, e),
    };
    let even = a_sum(entries) % 2 == 0;
    let mut checks = Vec::new();
    match constructive_conway_coloring(entries) {
        Ok(outcome) => {
            let colored = matches!(outcome, ConwayColoring::Colored { .. });
            checks.push(iff(
                "constructive coloring succeeds iff sum|a_i| even",
                colored,
                even,
                "succeeded",
                "sum|a_i| even",
            ));
            if let ConwayColoring::Colored { diagram, coloring } = &outcome {
                let valid = is_valid_coloring(diagram, coloring).unwrap_or(false);
                let palette = coloring.palette();
                let expected: crate::solver::Palette =
                    [S3Element::S, S3Element::T, S3Element::St, S3Element::Ts].into_iter().collect();
                checks.push(Check::new(
                    "constructive coloring is a valid 4-coloring",
                    valid && palette == expected,
                    format!("valid {valid}, palette {palette}"),
                ));
                match promote_to_five(diagram, coloring) {
                    Ok(p) => {
                        let mut check = check_promotion(coloring, &p);
                        check.name = "promote constructive coloring".into();
                        checks.push(check);
                    }
                    Err(e) => checks.push(Check::new("promote constructive coloring", false, e.to_string())),
                }
            }
        }
        Err(e) => checks.push(Check::new("constructive coloring", false, e.to_string())),
    }
    let five = a.classification.contains(5);
    let four = a.classification.contains(4);
    checks.push(Check::new(
        "5-colorable implies 4-colorable",
        !five || four,
        format!("5 in n-set: {five}, 4 in n-set: {four}"),
    ));
    match a.item.linking_number {
        Some(lk) => checks.push(iff(
            "linking number parity matches sum|a_i| parity",
            lk % 2 == 0,
            even,
            "lk even",
            "sum|a_i| even",
        )),
        None => checks.push(Check::new(
            "two components",
            false,
            format!("{} components", a.item.components),
        )),
    }
    a.item.label = label;
    finish(a, checks)
}

pub fn verify_conway(seed: u64, samples: usize, max_crossings: usize, exec: Exec) -> Result<Report> {
    let started = Instant::now();
    let specs = sample_conway(seed, samples, max_crossings);
    let items = par::map(exec, &specs, |e| conway_item(e));
    Ok(Report::assemble(
        "verify-conway",
        serde_json::json!({ "seed": seed, "samples": samples, "max_crossings": max_crossings }),
        items,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_small() {
        let r = verify_torus(4, Exec::Sequential).unwrap();
        assert!(r.passed, "{r:#?}");
        assert_eq!(r.items[0].n_set, vec![1, 2]);
        assert_eq!(r.items[2].determinant, Some(4));
        assert!(r.items[2].n_set.contains(&4));
        assert!(verify_torus(1, Exec::Sequential).is_err());
    }

    #[test]
    fn double_twist_small() {
        let r = verify_double_twist(3, 5, Exec::Sequential).unwrap();
        assert!(r.passed, "{r:#?}");
        let j11 = &r.items[0];
        assert_eq!(j11.label, "J(1,1)");
        assert!(!j11.n_set.contains(&4));
        assert_eq!(j11.determinant, Some(2));
        let j35 = r.items.iter().find(|i| i.label == "J(3,5)").unwrap();
        assert!(j35.n_set.contains(&4) && !j35.n_set.contains(&3));
        assert_eq!(j35.determinant, Some(16));
        let j33 = r.items.iter().find(|i| i.label == "J(3,3)").unwrap();
        assert!(!j33.n_set.contains(&4) && !j33.n_set.contains(&3));
    }

    #[test]
    fn conway_examples() {
        for (entries, colorable) in [(vec![4], true), (vec![2], false), (vec![2, 2, 2], true)] {
            let item = conway_item(&entries);
            assert!(item.passed, "{item:#?}");
            assert_eq!(item.n_set.contains(&4), colorable, "{entries:?}");
        }
        let c2 = conway_item(&[2]);
        assert!(!c2.n_set.contains(&5));
    }

    #[test]
    fn sampling_is_seeded_and_bounded() {
        let a = sample_conway(7, 50, 16);
        assert_eq!(a, sample_conway(7, 50, 16));
        assert_ne!(a, sample_conway(8, 50, 16));
        for e in &a {
            assert!(e.len() % 2 == 1 && e.len() <= 5);
            assert!(e.iter().all(|c| c % 2 == 0 && (2..=6).contains(&c.abs())));
            assert!(e.iter().map(|c| c.abs()).sum::<i64>() <= 16);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let mut a = verify_conway(3, 12, 12, Exec::Parallel).unwrap();
        let mut b = verify_conway(3, 12, 12, Exec::Sequential).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
    }
}
