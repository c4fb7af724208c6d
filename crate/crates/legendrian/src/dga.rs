//! The Chekanov-Eliashberg differential graded algebra over Z/2.
//!
//! Generators are the crossings (q1..qn, left to right) followed by the
//! right cusps (q_{n+1} is the topmost pair, then downward). The boundary of
//! a generator counts embedded disks with their positive corner at that
//! generator, swept leftward: at every x-slice the disk occupies a contiguous
//! interval of positions, negative corners are picked up at crossings that
//! touch the interval from outside, and the disk must close up at a left
//! cusp. Each right cusp also bounds the small loop to its left, contributing
//! the constant term 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::front::{MaslovPotential, OrientedDiagram};
use crate::grading::reduce;

/// A monomial in the tensor algebra: generator indices, left to right.
/// The empty word is the unit 1.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Crossing { index: usize },
    RightCusp { cusp: usize },
}

pub fn generator_name(g: usize) -> String {
    format!("q{g}")
}

pub fn parse_generator_name(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('q')?;
    let g: usize = digits.parse().ok()?;
    if g == 0 || digits.starts_with('+') {
        None
    } else {
        Some(g)
    }
}

/// One disk of the boundary of `positive`. Corner lists are in the order the
/// leftward sweep met them (right to left along each edge); the boundary
/// word reads the upper edge right-to-left and then the lower edge
/// left-to-right, so it is `upper_corners` followed by `lower_corners`
/// reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    pub positive: usize,
    pub upper_corners: Vec<usize>,
    pub lower_corners: Vec<usize>,
    pub is_loop_term: bool,
}

impl Disk {
    pub fn word(&self) -> Word {
        let mut w = self.upper_corners.clone();
        w.extend(self.lower_corners.iter().rev());
        w
    }
}

/// Depth-first sweep of all disks with positive corner `positive`, starting
/// from the interval `init` = (lo, hi) at `from_slice` and moving leftward to
/// `to_slice`, where `accept` decides whether the surviving interval closes
/// the disk. At each crossing the interval's two boundary strands either
/// follow their strands or pick up a corner; a crossing that swaps the two
/// boundary strands themselves would need a second positive corner, so that
/// branch dies.
pub(crate) fn sweep(
    crossings: &[usize],
    positive: usize,
    from_slice: usize,
    to_slice: usize,
    init: (usize, usize),
    accept: &dyn Fn(usize, usize) -> bool,
) -> Vec<Disk> {
    assert!(to_slice <= from_slice);
    assert!(init.0 < init.1);
    let mut out = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    rec(
        crossings, positive, from_slice, to_slice, init.0, init.1, &mut upper, &mut lower, accept,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn rec(
    crossings: &[usize],
    positive: usize,
    slice: usize,
    to_slice: usize,
    lo: usize,
    hi: usize,
    upper: &mut Vec<usize>,
    lower: &mut Vec<usize>,
    accept: &dyn Fn(usize, usize) -> bool,
    out: &mut Vec<Disk>,
) {
    if slice == to_slice {
        if accept(lo, hi) {
            out.push(Disk {
                positive,
                upper_corners: upper.clone(),
                lower_corners: lower.clone(),
                is_loop_term: false,
            });
        }
        return;
    }
    // Crossing `slice` sits between slice-1 and slice; its transposition
    // swaps positions (t, t+1).
    let j = slice;
    let t = crossings[j - 1];
    if t + 1 < lo || t > hi || (lo < t && t + 1 < hi) {
        // Disjoint from the boundary, or entirely interior: nothing happens.
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo,
            hi,
            upper,
            lower,
            accept,
            out,
        );
    } else if t == lo && t + 1 == hi {
        // The two boundary strands cross: the branch dies.
    } else if t == hi {
        // Upper edge meets the crossing from below: follow the strand out...
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo,
            hi + 1,
            upper,
            lower,
            accept,
            out,
        );
        // ...or take a corner and stay underneath.
        upper.push(j);
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo,
            hi,
            upper,
            lower,
            accept,
            out,
        );
        upper.pop();
    } else if t + 1 == lo {
        // Mirror image on the lower edge.
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo - 1,
            hi,
            upper,
            lower,
            accept,
            out,
        );
        lower.push(j);
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo,
            hi,
            upper,
            lower,
            accept,
            out,
        );
        lower.pop();
    } else if t + 1 == hi {
        // Upper boundary strand dips inside; forced to follow it.
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo,
            hi - 1,
            upper,
            lower,
            accept,
            out,
        );
    } else {
        debug_assert_eq!(t, lo);
        rec(
            crossings,
            positive,
            j - 1,
            to_slice,
            lo + 1,
            hi,
            upper,
            lower,
            accept,
            out,
        );
    }
}

/// All boundary disks of generator `g` (1-based), in depth-first sweep
/// order; for right cusps the loop term comes first.
pub fn enumerate_disks(od: &OrientedDiagram, g: usize) -> Vec<Disk> {
    let d = od.diagram();
    let n = d.crossing_count();
    let c = d.cusps();
    assert!(g >= 1 && g <= n + c, "generator out of range");
    let close_at_left_cusp = |lo: usize, hi: usize| lo % 2 == 1 && hi == lo + 1;
    if g <= n {
        let s = d.position(g);
        sweep(d.crossings(), g, g - 1, 0, (s, s + 1), &close_at_left_cusp)
    } else {
        let k = c - (g - n) + 1;
        let mut disks = vec![Disk {
            positive: g,
            upper_corners: Vec::new(),
            lower_corners: Vec::new(),
            is_loop_term: true,
        }];
        disks.extend(sweep(
            d.crossings(),
            g,
            n,
            0,
            (2 * k - 1, 2 * k),
            &close_at_left_cusp,
        ));
        disks
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("word references unknown generator q{letter}")]
pub struct UnknownLetter {
    pub letter: usize,
}

/// Boundaries of every generator as sets of words over Z/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Differential {
    boundaries: Vec<BTreeSet<Word>>,
}

impl Differential {
    /// Build from explicit word lists; repeated words cancel in pairs.
    pub fn from_boundaries(boundaries: Vec<Vec<Word>>) -> Differential {
        Differential {
            boundaries: boundaries
                .into_iter()
                .map(|words| {
                    let mut set = BTreeSet::new();
                    for w in words {
                        toggle(&mut set, w);
                    }
                    set
                })
                .collect(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.boundaries.len()
    }

    pub fn boundary(&self, g: usize) -> &BTreeSet<Word> {
        &self.boundaries[g - 1]
    }

    /// The nonzero components of the square of the differential: for each
    /// generator whose boundary fails to die, the surviving words. Empty
    /// iff the differential squares to zero.
    pub fn check_d_squared(&self) -> BTreeMap<usize, BTreeSet<Word>> {
        let mut failures = BTreeMap::new();
        for g in 1..=self.generator_count() {
            let mut survivors = BTreeSet::new();
            for w in self.boundary(g) {
                let dw = apply_leibniz(self, w).expect("boundary words use known generators");
                for u in dw {
                    toggle(&mut survivors, u);
                }
            }
            if !survivors.is_empty() {
                failures.insert(g, survivors);
            }
        }
        failures
    }
}

fn toggle(set: &mut BTreeSet<Word>, w: Word) {
    if !set.remove(&w) {
        set.insert(w);
    }
}

/// Extend the differential to a word by the Leibniz rule (all signs are 1
/// over Z/2): the boundary of w1..wk is the sum over i of
/// w1..w_{i-1} (boundary of w_i) w_{i+1}..wk.
pub fn apply_leibniz(diff: &Differential, word: &Word) -> Result<BTreeSet<Word>, UnknownLetter> {
    for &letter in word {
        if letter < 1 || letter > diff.generator_count() {
            return Err(UnknownLetter { letter });
        }
    }
    let mut result = BTreeSet::new();
    for i in 0..word.len() {
        for mid in diff.boundary(word[i]) {
            let mut w = Vec::with_capacity(word.len() - 1 + mid.len());
            w.extend_from_slice(&word[..i]);
            w.extend_from_slice(mid);
            w.extend_from_slice(&word[i + 1..]);
            toggle(&mut result, w);
        }
    }
    Ok(result)
}

/// The full algebra of a validated diagram: generators, gradings, and
/// boundaries.
#[derive(Debug, Clone)]
pub struct Dga {
    crossing_count: usize,
    cusp_count: usize,
    potential: MaslovPotential,
    gradings: Vec<i64>,
    differential: Differential,
}

impl Dga {
    pub fn new(od: &OrientedDiagram) -> Dga {
        let d = od.diagram();
        let n = d.crossing_count();
        let c = d.cusps();
        let potential = od.maslov_potential();
        let mut gradings = potential.crossing_gradings(od);
        gradings.extend(std::iter::repeat_n(reduce(1, potential.modulus()), c));
        let boundaries = (1..=n + c)
            .map(|g| {
                enumerate_disks(od, g)
                    .iter()
                    .map(|disk| disk.word())
                    .collect()
            })
            .collect();
        Dga {
            crossing_count: n,
            cusp_count: c,
            potential,
            gradings,
            differential: Differential::from_boundaries(boundaries),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.crossing_count + self.cusp_count
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_count
    }

    pub fn cusp_count(&self) -> usize {
        self.cusp_count
    }

    pub fn generator_kind(&self, g: usize) -> GeneratorKind {
        assert!(g >= 1 && g <= self.generator_count());
        if g <= self.crossing_count {
            GeneratorKind::Crossing { index: g }
        } else {
            GeneratorKind::RightCusp {
                cusp: self.cusp_count - (g - self.crossing_count) + 1,
            }
        }
    }

    pub fn modulus(&self) -> u32 {
        self.potential.modulus()
    }

    pub fn potential(&self) -> &MaslovPotential {
        &self.potential
    }

    pub fn grading(&self, g: usize) -> i64 {
        self.gradings[g - 1]
    }

    pub fn gradings(&self) -> &[i64] {
        &self.gradings
    }

    pub fn differential(&self) -> &Differential {
        &self.differential
    }

    pub fn boundary(&self, g: usize) -> &BTreeSet<Word> {
        self.differential.boundary(g)
    }

    /// Grading of a monomial: the sum of its letters' gradings, reduced.
    pub fn word_grading(&self, word: &Word) -> i64 {
        reduce(word.iter().map(|&g| self.grading(g)).sum(), self.modulus())
    }

    pub fn check_d_squared(&self) -> BTreeMap<usize, BTreeSet<Word>> {
        self.differential.check_d_squared()
    }
}

impl fmt::Display for Dga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in 1..=self.generator_count() {
            writeln!(
                f,
                "d{} = {}",
                generator_name(g),
                format_boundary(self.boundary(g))
            )?;
        }
        Ok(())
    }
}

/// Render a boundary as "0", or terms joined by " + " with the empty word
/// printed as "1", shortest words first and ties broken lexicographically.
pub fn format_boundary(words: &BTreeSet<Word>) -> String {
    if words.is_empty() {
        return "0".to_string();
    }
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let terms: Vec<String> = sorted
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|&g| generator_name(g))
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::PlatDiagram;

    fn dga_of(cusps: usize, crossings: Vec<usize>) -> Dga {
        Dga::new(
            &PlatDiagram::new(cusps, crossings)
                .unwrap()
                .validate()
                .unwrap(),
        )
    }

    fn words(items: &[&[usize]]) -> BTreeSet<Word> {
        items.iter().map(|w| w.to_vec()).collect()
    }

    #[test]
    fn trefoil_boundaries() {
        let dga = dga_of(2, vec![2, 2, 2]);
        assert_eq!(dga.generator_count(), 5);
        for g in 1..=3 {
            assert!(dga.boundary(g).is_empty(), "dq{g} should vanish");
        }
        assert_eq!(*dga.boundary(4), words(&[&[], &[1], &[3], &[1, 2, 3]]));
        assert_eq!(*dga.boundary(5), words(&[&[], &[1], &[3], &[3, 2, 1]]));
    }

    #[test]
    fn trefoil_disk_sweep_order_and_corners() {
        let od = PlatDiagram::new(2, vec![2, 2, 2])
            .unwrap()
            .validate()
            .unwrap();
        let disks4 = enumerate_disks(&od, 4);
        assert_eq!(
            disks4.iter().map(|d| d.word()).collect::<Vec<_>>(),
            vec![vec![], vec![1], vec![3], vec![1, 2, 3]]
        );
        assert!(disks4[0].is_loop_term);
        assert!(disks4[1..].iter().all(|d| !d.is_loop_term));
        // the cusp (3,4) picks all its corners up on the lower edge
        assert!(disks4.iter().all(|d| d.upper_corners.is_empty()));
        assert_eq!(disks4[3].lower_corners, vec![3, 2, 1]);

        let disks5 = enumerate_disks(&od, 5);
        assert_eq!(
            disks5.iter().map(|d| d.word()).collect::<Vec<_>>(),
            vec![vec![], vec![1], vec![3], vec![3, 2, 1]]
        );
        // ...and the cusp (1,2) on the upper edge
        assert!(disks5.iter().all(|d| d.lower_corners.is_empty()));
        assert_eq!(disks5[3].upper_corners, vec![3, 2, 1]);
    }

    #[test]
    fn unknot_saucer_cancels_loop_term() {
        let od = PlatDiagram::new(1, vec![]).unwrap().validate().unwrap();
        let disks = enumerate_disks(&od, 1);
        assert_eq!(disks.len(), 2);
        assert!(disks[0].is_loop_term);
        assert!(!disks[1].is_loop_term);
        assert_eq!(disks[1].word(), Vec::<usize>::new());
        let dga = dga_of(1, vec![]);
        assert!(dga.boundary(1).is_empty());
    }

    #[test]
    fn stabilized_unknot_boundaries() {
        let dga = dga_of(2, vec![1, 2]);
        assert_eq!(*dga.boundary(1), words(&[&[]]));
        assert!(dga.boundary(2).is_empty());
        assert_eq!(*dga.boundary(3), words(&[&[], &[2]]));
        assert_eq!(*dga.boundary(4), words(&[&[]]));
    }

    #[test]
    fn two_hump_unknot_boundaries() {
        let dga = dga_of(2, vec![2]);
        assert!(dga.boundary(1).is_empty());
        assert_eq!(*dga.boundary(2), words(&[&[], &[1]]));
        assert_eq!(*dga.boundary(3), words(&[&[], &[1]]));
    }

    #[test]
    fn gradings_and_kinds() {
        let trefoil = dga_of(2, vec![2, 2, 2]);
        assert_eq!(trefoil.modulus(), 0);
        assert_eq!(trefoil.gradings(), &[0, 0, 0, 1, 1]);
        assert_eq!(
            trefoil.generator_kind(3),
            GeneratorKind::Crossing { index: 3 }
        );
        assert_eq!(
            trefoil.generator_kind(4),
            GeneratorKind::RightCusp { cusp: 2 }
        );
        assert_eq!(
            trefoil.generator_kind(5),
            GeneratorKind::RightCusp { cusp: 1 }
        );

        let stab = dga_of(2, vec![1, 2]);
        assert_eq!(stab.modulus(), 2);
        assert_eq!(stab.gradings(), &[1, 0, 1, 1]);

        let two_hump = dga_of(2, vec![2]);
        assert_eq!(two_hump.modulus(), 0);
        assert_eq!(two_hump.gradings(), &[0, 1, 1]);
    }

    #[test]
    fn boundary_drops_degree_by_one() {
        for dga in [
            dga_of(2, vec![2, 2, 2]),
            dga_of(2, vec![1, 2]),
            dga_of(2, vec![2]),
        ] {
            let m = dga.modulus();
            for g in 1..=dga.generator_count() {
                for w in dga.boundary(g) {
                    assert_eq!(dga.word_grading(w), reduce(dga.grading(g) - 1, m));
                }
            }
        }
    }

    #[test]
    fn leibniz_rule() {
        let stab = dga_of(2, vec![1, 2]);
        assert_eq!(
            apply_leibniz(stab.differential(), &vec![2, 1]).unwrap(),
            words(&[&[2]])
        );
        assert_eq!(
            apply_leibniz(stab.differential(), &vec![]).unwrap(),
            BTreeSet::new()
        );
        let trefoil = dga_of(2, vec![2, 2, 2]);
        assert_eq!(
            apply_leibniz(trefoil.differential(), &vec![1, 2, 3]).unwrap(),
            BTreeSet::new()
        );
        assert_eq!(
            apply_leibniz(trefoil.differential(), &vec![1, 6]).unwrap_err(),
            UnknownLetter { letter: 6 }
        );
    }

    #[test]
    fn differential_squares_to_zero() {
        for dga in [
            dga_of(1, vec![]),
            dga_of(2, vec![2, 2, 2]),
            dga_of(2, vec![1, 2]),
            dga_of(2, vec![2]),
        ] {
            assert!(dga.check_d_squared().is_empty());
        }
    }

    #[test]
    fn d_squared_detects_synthetic_failure() {
        // dq3 = 1 + q2 q1 with dq1 = 1, dq2 = 0 leaves the survivor q2 at q3.
        let diff =
            Differential::from_boundaries(vec![vec![vec![]], vec![], vec![vec![], vec![2, 1]]]);
        let failures = diff.check_d_squared();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[&3], words(&[&[2]]));
    }

    #[test]
    fn generator_names() {
        assert_eq!(generator_name(4), "q4");
        assert_eq!(parse_generator_name("q12"), Some(12));
        assert_eq!(parse_generator_name("q0"), None);
        assert_eq!(parse_generator_name("x3"), None);
        assert_eq!(parse_generator_name("q"), None);
        assert_eq!(parse_generator_name("q+3"), None);
    }

    #[test]
    fn boundary_formatting() {
        let trefoil = dga_of(2, vec![2, 2, 2]);
        assert_eq!(format_boundary(trefoil.boundary(1)), "0");
        assert_eq!(format_boundary(trefoil.boundary(4)), "1 + q1 + q3 + q1q2q3");
        assert_eq!(format_boundary(trefoil.boundary(5)), "1 + q1 + q3 + q3q2q1");
    }
}
