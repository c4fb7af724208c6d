//! Augmentations: algebra maps from the knot's algebra to Z/2.
//!
//! An augmentation sends 1 to 1, each generator to 0 or 1, and kills every
//! boundary. It may only send a generator to 1 when the generator's grading
//! is accepted by the chosen rho (0 in the graded case, any residue that is
//! 0 mod rho in the rho-graded case, anything when rho = 1).

use std::collections::BTreeSet;

use crate::dga::{Dga, Word};
use crate::grading::{IllegalRho, Rho};

/// An augmentation, recorded by its support: the set of generators sent to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub support: BTreeSet<usize>,
    pub rho: Rho,
}

impl Augmentation {
    pub fn new(support: BTreeSet<usize>, rho: Rho) -> Augmentation {
        Augmentation { support, rho }
    }

    /// Value on a generator.
    pub fn value(&self, g: usize) -> bool {
        self.support.contains(&g)
    }

    /// Value on a monomial: 1 iff every letter is sent to 1.
    pub fn evaluate_word(&self, word: &Word) -> bool {
        word.iter().all(|l| self.support.contains(l))
    }
}

/// Does `support` define a rho-graded augmentation?
pub fn is_augmentation(dga: &Dga, support: &BTreeSet<usize>, rho: Rho) -> Result<bool, IllegalRho> {
    rho.check_legal(dga.modulus())?;
    for &g in support {
        assert!(
            g >= 1 && g <= dga.generator_count(),
            "support references unknown generator q{g}"
        );
        if !rho.accepts(dga.grading(g)) {
            return Ok(false);
        }
    }
    for g in 1..=dga.generator_count() {
        let killed = dga
            .boundary(g)
            .iter()
            .filter(|w| w.iter().all(|l| support.contains(l)))
            .count()
            % 2
            == 0;
        if !killed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All rho-graded augmentations, sorted by support.
///
/// Backtracking over the eligible generators in index order: each boundary
/// constraint is reduced to a XOR of square-free monomials in eligible
/// letters (words touching an ineligible letter vanish, equal monomials
/// cancel in pairs) and is checked as soon as its highest letter is
/// assigned. A constraint that reduces to the constant 1 rules out every
/// assignment.
pub fn enumerate_augmentations(dga: &Dga, rho: Rho) -> Result<Vec<Augmentation>, IllegalRho> {
    rho.check_legal(dga.modulus())?;
    let n = dga.generator_count();
    let eligible: Vec<bool> = (0..n).map(|g| rho.accepts(dga.grading(g + 1))).collect();

    let mut by_trigger: Vec<Vec<Vec<Vec<usize>>>> = vec![Vec::new(); n + 1];
    for g in 1..=n {
        let mut monomials: BTreeSet<Vec<usize>> = BTreeSet::new();
        for w in dga.boundary(g) {
            if w.iter().any(|&l| !eligible[l - 1]) {
                continue;
            }
            let mono: Vec<usize> = w
                .iter()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if !monomials.remove(&mono) {
                monomials.insert(mono);
            }
        }
        if monomials.is_empty() {
            continue;
        }
        let trigger = monomials
            .iter()
            .filter_map(|m| m.last().copied())
            .max()
            .unwrap_or(0);
        if trigger == 0 {
            // Only the constant monomial survives: d g maps to 1 no matter what.
            return Ok(Vec::new());
        }
        by_trigger[trigger].push(monomials.into_iter().collect());
    }

    let order: Vec<usize> = (1..=n).filter(|&g| eligible[g - 1]).collect();
    let mut assignment = vec![false; n + 1];
    let mut found = Vec::new();
    dfs(&order, 0, &by_trigger, &mut assignment, &mut found);
    let mut augmentations: Vec<Augmentation> = found
        .into_iter()
        .map(|support| Augmentation::new(support, rho))
        .collect();
    augmentations.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(augmentations)
}

fn dfs(
    order: &[usize],
    pos: usize,
    by_trigger: &[Vec<Vec<Vec<usize>>>],
    assignment: &mut Vec<bool>,
    found: &mut Vec<BTreeSet<usize>>,
) {
    if pos == order.len() {
        found.push(
            assignment
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v)
                .map(|(g, _)| g)
                .collect(),
        );
        return;
    }
    let g = order[pos];
    for value in [false, true] {
        assignment[g] = value;
        let consistent = by_trigger[g].iter().all(|constraint| {
            constraint
                .iter()
                .filter(|mono| mono.iter().all(|&l| assignment[l]))
                .count()
                % 2
                == 0
        });
        if consistent {
            dfs(order, pos + 1, by_trigger, assignment, found);
        }
    }
    assignment[g] = false;
}

/// Exhaustive reference enumeration over all subsets of the eligible
/// generators. Exponential; only for cross-checking small examples.
pub fn brute_force_augmentations(dga: &Dga, rho: Rho) -> Result<Vec<Augmentation>, IllegalRho> {
    rho.check_legal(dga.modulus())?;
    let eligible: Vec<usize> = (1..=dga.generator_count())
        .filter(|&g| rho.accepts(dga.grading(g)))
        .collect();
    assert!(
        eligible.len() <= 20,
        "too many eligible generators for exhaustion"
    );
    let mut augmentations = Vec::new();
    for mask in 0u32..(1 << eligible.len()) {
        let support: BTreeSet<usize> = eligible
            .iter()
            .enumerate()
            .filter(|&(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &g)| g)
            .collect();
        if is_augmentation(dga, &support, rho)? {
            augmentations.push(Augmentation::new(support, rho));
        }
    }
    augmentations.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(augmentations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::PlatDiagram;
    use crate::grading::Rho;

    fn dga_of(cusps: usize, crossings: Vec<usize>) -> Dga {
        Dga::new(
            &PlatDiagram::new(cusps, crossings)
                .unwrap()
                .validate()
                .unwrap(),
        )
    }

    fn supports(augs: &[Augmentation]) -> Vec<Vec<usize>> {
        augs.iter()
            .map(|a| a.support.iter().copied().collect())
            .collect()
    }

    #[test]
    fn trefoil_graded_augmentations() {
        let dga = dga_of(2, vec![2, 2, 2]);
        let augs = enumerate_augmentations(&dga, Rho::GRADED).unwrap();
        assert_eq!(
            supports(&augs),
            vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![2, 3], vec![3],]
        );
    }

    #[test]
    fn trefoil_rho_graded_counts() {
        let dga = dga_of(2, vec![2, 2, 2]);
        assert_eq!(
            enumerate_augmentations(&dga, Rho::UNGRADED).unwrap().len(),
            20
        );
        let two_graded = enumerate_augmentations(&dga, Rho(2)).unwrap();
        assert_eq!(
            supports(&two_graded),
            supports(&enumerate_augmentations(&dga, Rho::GRADED).unwrap())
        );
    }

    #[test]
    fn stabilized_unknot_has_none() {
        let dga = dga_of(2, vec![1, 2]);
        for rho in [Rho::GRADED, Rho::UNGRADED, Rho(2)] {
            assert!(enumerate_augmentations(&dga, rho).unwrap().is_empty());
        }
        assert!(!is_augmentation(&dga, &BTreeSet::new(), Rho::GRADED).unwrap());
        assert!(enumerate_augmentations(&dga, Rho(3)).is_err());
        assert!(is_augmentation(&dga, &BTreeSet::new(), Rho(4)).is_err());
    }

    #[test]
    fn unknot_augmentations() {
        let dga = dga_of(1, vec![]);
        assert_eq!(
            supports(&enumerate_augmentations(&dga, Rho::GRADED).unwrap()),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(
            supports(&enumerate_augmentations(&dga, Rho(2)).unwrap()),
            vec![Vec::<usize>::new()]
        );
        // ungraded: the lone generator is unconstrained
        assert_eq!(
            supports(&enumerate_augmentations(&dga, Rho::UNGRADED).unwrap()),
            vec![vec![], vec![1]]
        );
    }

    #[test]
    fn two_hump_unknot_augmentations() {
        let dga = dga_of(2, vec![2]);
        assert_eq!(
            supports(&enumerate_augmentations(&dga, Rho::GRADED).unwrap()),
            vec![vec![1]]
        );
        assert_eq!(
            enumerate_augmentations(&dga, Rho::UNGRADED).unwrap().len(),
            4
        );
    }

    #[test]
    fn is_augmentation_spot_checks() {
        let dga = dga_of(2, vec![2, 2, 2]);
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert!(is_augmentation(&dga, &set(&[1]), Rho::GRADED).unwrap());
        assert!(!is_augmentation(&dga, &set(&[1, 3]), Rho::GRADED).unwrap());
        assert!(!is_augmentation(&dga, &set(&[]), Rho::GRADED).unwrap());
        // q4 has grading 1: not eligible in the graded case
        assert!(!is_augmentation(&dga, &set(&[1, 4]), Rho::GRADED).unwrap());
        assert!(is_augmentation(&dga, &set(&[1, 4]), Rho::UNGRADED).unwrap());
    }

    #[test]
    fn backtracking_matches_exhaustion() {
        for dga in [
            dga_of(1, vec![]),
            dga_of(2, vec![2, 2, 2]),
            dga_of(2, vec![1, 2]),
            dga_of(2, vec![2]),
        ] {
            for rho in [Rho::GRADED, Rho::UNGRADED, Rho(2)] {
                assert_eq!(
                    enumerate_augmentations(&dga, rho).unwrap(),
                    brute_force_augmentations(&dga, rho).unwrap()
                );
            }
        }
    }
}
