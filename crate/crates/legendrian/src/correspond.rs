//! The correspondence between augmentations and normal rulings.
//!
//! The constructive direction turns a rho-graded augmentation into a normal
//! ruling one crossing at a time: a crossing switches exactly when the
//! transported augmentation is 1 on it in a switchable configuration, and
//! passing the crossing transports the augmentation by counting truncated
//! disks that run from later crossings back to the pairs created here.
//! The module also packages the existence equivalence (augmentations exist
//! iff rulings do), the parity law tying even gradings to strand
//! orientations, and the rotation-number criterion for 2-graded
//! augmentations.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::augment::{enumerate_augmentations, Augmentation};
use crate::dga::{sweep, Dga, Disk};
use crate::front::OrientedDiagram;
use crate::grading::{IllegalRho, Rho};
use crate::ruling::{
    classify_config, enumerate_rulings, validate_ruling, Action, Config, PairingState, Ruling,
};

/// Two positions paired by a dip between crossings, low < high.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DipPair {
    pub low: usize,
    pub high: usize,
}

/// The pairs whose dip generators the transported augmentation must
/// augment at a crossing of positions (s, s+1) met in `config`, in
/// processing order: the numerically smaller pair first. Crossed needs
/// none, the interleaved configurations only the companion pair, and the
/// nested ones both.
pub fn beta_pairs(config: Config, state: &PairingState, s: usize) -> Vec<DipPair> {
    let a = state.partner(s);
    let b = state.partner(s + 1);
    let companion = DipPair {
        low: a.min(b),
        high: a.max(b),
    };
    let crossing = DipPair {
        low: s,
        high: s + 1,
    };
    match config {
        Config::Paired => Vec::new(),
        Config::A => vec![crossing],
        Config::B => vec![companion, crossing],
        Config::C => vec![crossing, companion],
        Config::Crossed => Vec::new(),
        Config::InterleavedBelow | Config::InterleavedAbove => vec![companion],
    }
}

/// Disks with positive corner at crossing k swept leftward only as far as
/// the slice after crossing j, accepted when they land exactly on `pair`.
/// These drive the transport of the augmentation across crossing j.
pub fn truncated_disks(od: &OrientedDiagram, k: usize, j: usize, pair: DipPair) -> Vec<Disk> {
    assert!(j < k && k <= od.diagram().crossing_count());
    let d = od.diagram();
    let s = d.position(k);
    sweep(d.crossings(), k, k - 1, j, (s, s + 1), &|lo, hi| {
        (lo, hi) == (pair.low, pair.high)
    })
}

/// What happened at one crossing during extraction: the configuration met,
/// the action taken, the dip pairs processed (empty when the transported
/// augmentation was 0 here), and the later crossings whose transported
/// value flipped, in the order the flips happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionStep {
    pub crossing: usize,
    pub config: Config,
    pub action: Action,
    pub betas: Vec<DipPair>,
    pub flips: Vec<usize>,
}

/// A ruling extracted from an augmentation, with the per-crossing trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub ruling: Ruling,
    pub trace: Vec<ExtractionStep>,
}

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum ExtractionError {
    #[error(
        "crossing q{crossing}: the crossing strands are paired in the ruling under construction"
    )]
    PairedConfig { crossing: usize },
    #[error("crossing q{crossing}: switch at a crossing whose grading the chosen rho rejects")]
    SwitchGradingViolation { crossing: usize },
    #[error(
        "crossing q{crossing}: dip pair ({low}, {high}) carries a grading the chosen rho rejects"
    )]
    BetaGradingViolation {
        crossing: usize,
        low: usize,
        high: usize,
    },
    #[error("the extracted pairing fails to close up to the cusp pairing at the right edge")]
    ClosureFailed,
}

/// Turn an augmentation into a normal ruling.
///
/// Walking left to right, a crossing switches iff the transported
/// augmentation is 1 on it and the configuration is switchable; it passes
/// otherwise (a paired configuration is fatal). Whenever the transported
/// value is 1, each dip pair of the configuration is processed in order:
/// its grading must be accepted by rho, and every later crossing flips its
/// transported value once per odd count of truncated disks landing on the
/// pair whose corners are all currently augmented.
pub fn extract_ruling(
    od: &OrientedDiagram,
    dga: &Dga,
    aug: &Augmentation,
) -> Result<Extraction, ExtractionError> {
    let rho = aug.rho;
    let potential = dga.potential();
    let d = od.diagram();
    let n = d.crossing_count();

    let mut table: Vec<bool> = (1..=dga.generator_count()).map(|g| aug.value(g)).collect();
    let mut states = vec![PairingState::cusp_pairing(d.cusps())];
    let mut switches = BTreeSet::new();
    let mut trace = Vec::new();

    for j in 1..=n {
        let s = d.position(j);
        let state = states.last().expect("nonempty").clone();
        let config = classify_config(&state, s);
        if config == Config::Paired {
            return Err(ExtractionError::PairedConfig { crossing: j });
        }
        let augmented = table[j - 1];
        let action = if augmented && config.is_switchable() {
            Action::Switch
        } else {
            Action::Pass
        };
        if action == Action::Switch {
            if !rho.accepts(dga.grading(j)) {
                return Err(ExtractionError::SwitchGradingViolation { crossing: j });
            }
            switches.insert(j);
        }

        let mut betas = Vec::new();
        let mut flips = Vec::new();
        if augmented {
            for pair in beta_pairs(config, &state, s) {
                if !rho.accepts(potential.pair_grading(od, j, pair.low, pair.high)) {
                    return Err(ExtractionError::BetaGradingViolation {
                        crossing: j,
                        low: pair.low,
                        high: pair.high,
                    });
                }
                for k in (j + 1)..=n {
                    let odd = truncated_disks(od, k, j, pair)
                        .iter()
                        .filter(|disk| disk.word().iter().all(|&g| table[g - 1]))
                        .count()
                        % 2
                        == 1;
                    if odd {
                        table[k - 1] = !table[k - 1];
                        flips.push(k);
                    }
                }
                betas.push(pair);
            }
        }

        let next = match action {
            Action::Pass => state.conjugate(s),
            Action::Switch => state,
        };
        states.push(next);
        trace.push(ExtractionStep {
            crossing: j,
            config,
            action,
            betas,
            flips,
        });
    }

    if !states.last().expect("nonempty").is_cusp_pairing() {
        return Err(ExtractionError::ClosureFailed);
    }
    Ok(Extraction {
        ruling: Ruling { switches, states },
        trace,
    })
}

/// Parity law: a crossing's grading is even exactly when its two strands
/// run the same way.
pub fn parity_check(od: &OrientedDiagram, dga: &Dga) -> bool {
    (1..=dga.crossing_count()).all(|i| (dga.grading(i) % 2 == 0) == (od.crossing_sign(i) == 1))
}

/// Existence equivalence at a fixed rho: augmentations exist iff normal
/// rulings do, and every augmentation extracts to a genuine enumerated
/// ruling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub rho: Rho,
    pub augmentations: usize,
    pub rulings: usize,
    pub extraction_failures: usize,
}

impl EquivalenceReport {
    pub fn existence_agrees(&self) -> bool {
        (self.augmentations > 0) == (self.rulings > 0)
    }

    pub fn holds(&self) -> bool {
        self.existence_agrees() && self.extraction_failures == 0
    }
}

pub fn check_equivalence(
    od: &OrientedDiagram,
    dga: &Dga,
    rho: Rho,
) -> Result<EquivalenceReport, IllegalRho> {
    let augmentations = enumerate_augmentations(dga, rho)?;
    let rulings = enumerate_rulings(od, rho)?;
    let mut extraction_failures = 0;
    for aug in &augmentations {
        let sound = match extract_ruling(od, dga, aug) {
            Ok(extraction) => {
                validate_ruling(od, rho, &extraction.ruling.switches).is_ok()
                    && rulings
                        .iter()
                        .any(|r| r.switches == extraction.ruling.switches)
            }
            Err(_) => false,
        };
        if !sound {
            extraction_failures += 1;
        }
    }
    Ok(EquivalenceReport {
        rho,
        augmentations: augmentations.len(),
        rulings: rulings.len(),
        extraction_failures,
    })
}

/// Which left cusp each right cusp is tied to by a ruling: entry k-1 names
/// the left cusp whose pair of paths closes up at right cusp k. Paths keep
/// their position at a switch and trade positions at a pass.
pub fn ruling_cusp_pairing(od: &OrientedDiagram, ruling: &Ruling) -> Vec<usize> {
    let d = od.diagram();
    let c = d.cusps();
    let mut label: Vec<usize> = (0..2 * c).map(|p| p / 2 + 1).collect();
    for j in 1..=d.crossing_count() {
        if !ruling.switches.contains(&j) {
            let s = d.position(j);
            label.swap(s - 1, s);
        }
    }
    (1..=c)
        .map(|k| {
            let lower = label[2 * k - 2];
            assert_eq!(
                lower,
                label[2 * k - 1],
                "ruling paths must close up at right cusps"
            );
            lower
        })
        .collect()
}

/// The rotation-number criterion at rho = 2: if a 2-graded augmentation
/// (equivalently, ruling) exists, the rotation number vanishes. The
/// mechanism is recorded too: every 2-graded ruling ties each right cusp
/// to a left cusp traversed the opposite way, so up and down cusps come in
/// equal numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationReport {
    pub rotation_number: i64,
    pub two_graded_augmentations: usize,
    pub two_graded_rulings: usize,
    pub opposite_cusp_pairings: bool,
}

impl RotationReport {
    pub fn criterion_holds(&self) -> bool {
        (self.two_graded_augmentations == 0 || self.rotation_number == 0)
            && (self.two_graded_rulings == 0 || self.rotation_number == 0)
            && self.opposite_cusp_pairings
    }
}

pub fn check_rotation_criterion(od: &OrientedDiagram, dga: &Dga) -> RotationReport {
    let rho = Rho(2);
    // the grading modulus 2|r| is even, so rho = 2 is always legal
    let augmentations = enumerate_augmentations(dga, rho).expect("2 divides every even modulus");
    let rulings = enumerate_rulings(od, rho).expect("2 divides every even modulus");
    let opposite_cusp_pairings = rulings.iter().all(|ruling| {
        ruling_cusp_pairing(od, ruling)
            .iter()
            .enumerate()
            .all(|(k0, &left)| od.right_cusp_type(k0 + 1) != od.left_cusp_type(left))
    });
    RotationReport {
        rotation_number: od.rotation_number(),
        two_graded_augmentations: augmentations.len(),
        two_graded_rulings: rulings.len(),
        opposite_cusp_pairings,
    }
}
