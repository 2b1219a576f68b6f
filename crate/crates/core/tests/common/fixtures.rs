use knotcolor::notation::plat_diagram;
use knotcolor::{Crossing, Diagram, Error};

use super::{curl, hopf, random_diagram, trefoil};

/// Every entry list of the given length with entries in ±1..=±max.
pub fn entry_lists(len: usize, max: i64) -> Vec<Vec<i64>> {
    let values: Vec<i64> = (-max..=max).filter(|&v| v != 0).collect();
    let mut lists = vec![Vec::new()];
    for _ in 0..len {
        lists = lists
            .into_iter()
            .flat_map(|l| {
                values.iter().map(move |&v| {
                    let mut l = l.clone();
                    l.push(v);
                    l
                })
            })
            .collect();
    }
    lists
}

/// Plat diagrams for the list, skipping the ones with an overpassing
/// component.
pub fn plat_or_skip(entries: &[i64]) -> Option<Diagram> {
    match plat_diagram(entries) {
        Ok(p) => Some(p.diagram),
        Err(Error::NeverUnder(_)) => None,
        Err(e) => panic!("{entries:?}: {e}"),
    }
}

/// The small diagrams used by the enumeration oracle: named fixtures, all
/// plats with at most 8 crossings of length up to 3 and entries up to 4 in
/// absolute value, pseudo-random incidence structures and free-loop cases.
pub fn small_diagrams() -> Vec<(String, Diagram)> {
    let mut out = vec![
        ("trefoil".to_string(), trefoil()),
        ("hopf".to_string(), hopf()),
        ("curl".to_string(), curl()),
        ("unknot".to_string(), Diagram::unknot()),
        ("curl+loop".to_string(), Diagram::new(1, vec![Crossing::positive(0, 0, 0)], 1).unwrap()),
        ("two loops".to_string(), Diagram::new(0, vec![], 2).unwrap()),
    ];
    for len in 1..=3 {
        for entries in entry_lists(len, 4) {
            let total: i64 = entries.iter().map(|c| c.abs()).sum();
            if total > 8 {
                continue;
            }
            if let Some(d) = plat_or_skip(&entries) {
                out.push((format!("plat{entries:?}"), d));
            }
        }
    }
    for arcs in 1..=7 {
        for seed in 0..6 {
            out.push((format!("random({seed},{arcs})"), random_diagram(seed, arcs)));
        }
    }
    out
}
