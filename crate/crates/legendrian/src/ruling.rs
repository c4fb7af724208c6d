//! Normal rulings of a plat front.
//!
//! A ruling pairs the 2c strand positions of every slice into c paths that
//! begin and end at cusps. At each crossing the two involved paths either
//! pass through transversely or both switch (turn back at the crossing).
//! Switches are only allowed where the two pairs sit in one of the normal
//! configurations, and in the rho-graded case only at crossings whose
//! grading rho accepts; at both ends the pairing must be the cusp pairing.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::front::OrientedDiagram;
use crate::grading::{IllegalRho, Rho};

/// A fixed-point-free involution of the positions 1..2c: which position is
/// paired with which at a given slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingState {
    partner: Vec<usize>,
}

impl PairingState {
    /// The pairing at both edges of the plat: (1 2)(3 4)...(2c-1 2c).
    pub fn cusp_pairing(cusps: usize) -> PairingState {
        assert!(cusps >= 1);
        let partner = (0..2 * cusps)
            .map(|i| if i % 2 == 0 { i + 2 } else { i })
            .collect();
        PairingState { partner }
    }

    /// Build from an explicit perfect matching of 1..2c.
    pub fn from_pairs(width: usize, pairs: &[(usize, usize)]) -> PairingState {
        assert!(width.is_multiple_of(2) && pairs.len() * 2 == width);
        let mut partner = vec![0usize; width];
        for &(a, b) in pairs {
            assert!(a >= 1 && a <= width && b >= 1 && b <= width && a != b);
            assert!(
                partner[a - 1] == 0 && partner[b - 1] == 0,
                "position paired twice"
            );
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        PairingState { partner }
    }

    pub fn width(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, position: usize) -> usize {
        self.partner[position - 1]
    }

    pub fn is_cusp_pairing(&self) -> bool {
        *self == PairingState::cusp_pairing(self.width() / 2)
    }

    /// Conjugate by the transposition of positions (s, s+1): the pairing
    /// after the two strands cross transversely.
    pub fn conjugate(&self, s: usize) -> PairingState {
        let tau = |p: usize| {
            if p == s {
                s + 1
            } else if p == s + 1 {
                s
            } else {
                p
            }
        };
        let partner = (1..=self.width())
            .map(|p| tau(self.partner(tau(p))))
            .collect();
        PairingState { partner }
    }
}

/// How the two pairs meeting at a crossing of positions (s, s+1) sit
/// relative to each other, in terms of the partners a = partner(s) and
/// b = partner(s+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Config {
    /// The crossing strands are paired with each other.
    Paired,
    /// a below, b above: the crossing lies between its two pairs.
    A,
    /// Both partners below, b under a: the pairs are nested.
    B,
    /// Both partners above, a over b: the pairs are nested.
    C,
    /// a above, b below: each pair encloses the other side.
    Crossed,
    /// Both partners below, a under b: the pairs interleave.
    InterleavedBelow,
    /// Both partners above, b over a: the pairs interleave.
    InterleavedAbove,
}

impl Config {
    /// The configurations where a switch keeps the paths disjoint.
    pub fn is_switchable(self) -> bool {
        matches!(self, Config::A | Config::B | Config::C)
    }
}

pub fn classify_config(state: &PairingState, s: usize) -> Config {
    let a = state.partner(s);
    let b = state.partner(s + 1);
    if a == s + 1 {
        Config::Paired
    } else if a < s && b > s + 1 {
        Config::A
    } else if b < a && a < s {
        Config::B
    } else if a > b && b > s + 1 {
        Config::C
    } else if a > s + 1 && b < s {
        Config::Crossed
    } else if a < b && b < s {
        Config::InterleavedBelow
    } else {
        debug_assert!(b > a && a > s + 1);
        Config::InterleavedAbove
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Pass,
    Switch,
}

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum StepError {
    #[error("the crossing strands are paired with each other; neither pass nor switch is allowed")]
    PairedCrossing,
    #[error("switch requested in non-switchable configuration {0:?}")]
    NonNormalSwitch(Config),
    #[error("switch requested at a crossing whose grading the chosen rho rejects")]
    GradedSwitchViolation,
}

/// Advance the pairing across one crossing at position s. A pass conjugates
/// the pairing by the crossing's transposition; a switch leaves it unchanged
/// but is only legal in a switchable configuration at an accepted grading.
pub fn step(
    state: &PairingState,
    s: usize,
    action: Action,
    grading: i64,
    rho: Rho,
) -> Result<(PairingState, Config), StepError> {
    let config = classify_config(state, s);
    if config == Config::Paired {
        return Err(StepError::PairedCrossing);
    }
    match action {
        Action::Pass => Ok((state.conjugate(s), config)),
        Action::Switch => {
            if !config.is_switchable() {
                return Err(StepError::NonNormalSwitch(config));
            }
            if !rho.accepts(grading) {
                return Err(StepError::GradedSwitchViolation);
            }
            Ok((state.clone(), config))
        }
    }
}

/// A normal ruling: the set of switched crossings together with the pairing
/// at every slice (`states[j]` holds after crossing j; `states[0]` and the
/// last state are the cusp pairing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ruling {
    pub switches: BTreeSet<usize>,
    pub states: Vec<PairingState>,
}

impl Ruling {
    /// The pairing on slice `slice`.
    pub fn state(&self, slice: usize) -> &PairingState {
        &self.states[slice]
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RulingViolation {
    #[error("crossing q{crossing}: {source}")]
    Step { crossing: usize, source: StepError },
    #[error("the pairing fails to close up to the cusp pairing at the right edge")]
    ClosureFailed,
}

/// All rho-graded normal rulings, sorted by switch set.
pub fn enumerate_rulings(od: &OrientedDiagram, rho: Rho) -> Result<Vec<Ruling>, IllegalRho> {
    let potential = od.maslov_potential();
    rho.check_legal(potential.modulus())?;
    let gradings = potential.crossing_gradings(od);
    let d = od.diagram();

    let mut rulings = Vec::new();
    let mut switches = BTreeSet::new();
    let mut states = vec![PairingState::cusp_pairing(d.cusps())];
    search(
        d.crossings(),
        &gradings,
        rho,
        1,
        &mut switches,
        &mut states,
        &mut rulings,
    );
    rulings.sort_by(|a, b| a.switches.cmp(&b.switches));
    Ok(rulings)
}

fn search(
    crossings: &[usize],
    gradings: &[i64],
    rho: Rho,
    j: usize,
    switches: &mut BTreeSet<usize>,
    states: &mut Vec<PairingState>,
    rulings: &mut Vec<Ruling>,
) {
    if j > crossings.len() {
        if states.last().expect("nonempty").is_cusp_pairing() {
            rulings.push(Ruling {
                switches: switches.clone(),
                states: states.clone(),
            });
        }
        return;
    }
    let s = crossings[j - 1];
    let state = states.last().expect("nonempty").clone();
    for action in [Action::Pass, Action::Switch] {
        if let Ok((next, _)) = step(&state, s, action, gradings[j - 1], rho) {
            if action == Action::Switch {
                switches.insert(j);
            }
            states.push(next);
            search(crossings, gradings, rho, j + 1, switches, states, rulings);
            states.pop();
            switches.remove(&j);
        }
    }
}

/// Replay a candidate switch set and return the full ruling, or say where
/// it breaks.
pub fn validate_ruling(
    od: &OrientedDiagram,
    rho: Rho,
    switches: &BTreeSet<usize>,
) -> Result<Ruling, RulingViolation> {
    let potential = od.maslov_potential();
    rho.check_legal(potential.modulus())
        .expect("rho must be legal for this diagram");
    let gradings = potential.crossing_gradings(od);
    let d = od.diagram();

    let mut states = vec![PairingState::cusp_pairing(d.cusps())];
    for j in 1..=d.crossing_count() {
        let action = if switches.contains(&j) {
            Action::Switch
        } else {
            Action::Pass
        };
        let (next, _) = step(
            states.last().expect("nonempty"),
            d.position(j),
            action,
            gradings[j - 1],
            rho,
        )
        .map_err(|source| RulingViolation::Step {
            crossing: j,
            source,
        })?;
        states.push(next);
    }
    if !states.last().expect("nonempty").is_cusp_pairing() {
        return Err(RulingViolation::ClosureFailed);
    }
    Ok(Ruling {
        switches: switches.clone(),
        states,
    })
}
