#![allow(dead_code)]

//! Independent reference implementations used as test oracles.
//!
//! S3 is modeled here as permutations of {0, 1, 2}; nothing below calls the
//! crate's group kernel or solver.

pub mod fixtures;

use knotcolor::{Crossing, Diagram, S3Element, Sign};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Perm = [u8; 3];

pub const ID: Perm = [0, 1, 2];
pub const SIGMA: Perm = [1, 0, 2];
pub const TAU: Perm = [0, 2, 1];

pub fn compose(a: Perm, b: Perm) -> Perm {
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
}

pub fn invert(a: Perm) -> Perm {
    let mut out = [0; 3];
    for (i, &v) in a.iter().enumerate() {
        out[v as usize] = i as u8;
    }
    out
}

/// Image of a word in s, t under s -> SIGMA, t -> TAU.
pub fn perm_of_word(word: &str) -> Perm {
    word.chars().fold(ID, |acc, ch| match ch {
        's' => compose(acc, SIGMA),
        't' => compose(acc, TAU),
        'e' => acc,
        _ => panic!("bad letter {ch}"),
    })
}

pub fn perm(a: S3Element) -> Perm {
    perm_of_word(&a.to_string())
}

/// Non-identity elements in enumeration order.
pub const WORDS: [&str; 5] = ["s", "t", "sts", "st", "ts"];

pub fn element(word: &str) -> S3Element {
    word.parse().unwrap()
}

pub fn perm_relation_holds(sign: Sign, x: Perm, y: Perm, z: Perm) -> bool {
    match sign {
        Sign::Positive => compose(x, y) == compose(z, x),
        Sign::Negative => compose(x, z) == compose(y, x),
    }
}

/// All valid colorings by exhaustive search over 5^n assignments, in
/// lexicographic order with arc 0 most significant.
pub fn brute_force(d: &Diagram) -> Vec<Vec<S3Element>> {
    let n = d.colorable_arcs();
    assert!(n <= 8, "brute force limited to 8 arcs");
    let perms: Vec<Perm> = WORDS.iter().map(|w| perm_of_word(w)).collect();
    let mut out = Vec::new();
    let total = 5usize.pow(n as u32);
    let mut digits = vec![0usize; n];
    for code in 0..total {
        let mut rest = code;
        for i in (0..n).rev() {
            digits[i] = rest % 5;
            rest /= 5;
        }
        let ok = d.crossings().iter().all(|c| {
            perm_relation_holds(
                c.sign,
                perms[digits[c.over]],
                perms[digits[c.under_in]],
                perms[digits[c.under_out]],
            )
        });
        if ok {
            out.push(digits.iter().map(|&i| element(WORDS[i])).collect());
        }
    }
    out
}

/// Fox p-colorings by exhaustive search over p^arcs assignments.
pub fn brute_force_fox(d: &Diagram, p: u64) -> u64 {
    let n = d.num_arcs();
    let total = p.pow(n as u32);
    let mut count = 0;
    let mut x = vec![0u64; n];
    for code in 0..total {
        let mut rest = code;
        for v in x.iter_mut() {
            *v = rest % p;
            rest /= p;
        }
        if d.crossings()
            .iter()
            .all(|c| (2 * x[c.over] + 2 * p - x[c.under_in] - x[c.under_out]).is_multiple_of(p))
        {
            count += 1;
        }
    }
    count
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// |numerator| of c1 + 1/(c2 + 1/(... + 1/cn)) in lowest terms.
pub fn continued_fraction_numerator(entries: &[i64]) -> u128 {
    let (mut num, mut den) = (*entries.last().unwrap() as i128, 1i128);
    for &c in entries.iter().rev().skip(1) {
        // c + den/num
        let new_num = c as i128 * num + den;
        den = num;
        num = new_num;
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
    }
    num.unsigned_abs()
}

/// Closed two-strand braid with |q| crossings. The state is the pair of
/// colors (top, bottom) at a cross-section; a positive crossing sends the
/// top strand over to the bottom and conjugates the bottom strand by it.
/// Returns, for every starting pair that closes up, the number of distinct
/// colors seen.
pub fn braid_palette_sizes(q: i64) -> Vec<usize> {
    let perms: Vec<Perm> = WORDS.iter().map(|w| perm_of_word(w)).collect();
    let mut sizes = Vec::new();
    for &a in &perms {
        for &b in &perms {
            let (mut top, mut bottom) = (a, b);
            let mut seen = vec![a, b];
            for _ in 0..q.unsigned_abs() {
                let new_top = if q > 0 {
                    compose(compose(top, bottom), invert(top))
                } else {
                    compose(compose(invert(top), bottom), top)
                };
                bottom = top;
                top = new_top;
                seen.push(top);
            }
            if (top, bottom) == (a, b) {
                seen.sort();
                seen.dedup();
                sizes.push(seen.len());
            }
        }
    }
    sizes
}

pub fn trefoil() -> Diagram {
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

pub fn hopf() -> Diagram {
    Diagram::new(2, vec![Crossing::positive(1, 0, 0), Crossing::positive(0, 1, 1)], 0).unwrap()
}

pub fn curl() -> Diagram {
    Diagram::new(1, vec![Crossing::positive(0, 0, 0)], 0).unwrap()
}

/// Deterministic pseudo-random diagrams: crossing i ends arc i and starts
/// arc `outs[i]`, with arbitrary over arcs and signs.
pub fn random_diagram(seed: u64, arcs: usize) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outs: Vec<usize> = (0..arcs).collect();
    outs.shuffle(&mut rng);
    let crossings = (0..arcs)
        .map(|i| {
            let sign = if rng.gen() { Sign::Positive } else { Sign::Negative };
            Crossing::new(sign, rng.gen_range(0..arcs), i, outs[i])
        })
        .collect();
    Diagram::new(arcs, crossings, 0).unwrap()
}
