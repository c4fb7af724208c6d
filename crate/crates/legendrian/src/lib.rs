//! Invariants of Legendrian knots presented by plat-position front diagrams:
//! the Chekanov-Eliashberg differential graded algebra over Z/2, its graded
//! and rho-graded augmentations, normal rulings, and the constructive map
//! from augmentations to rulings.

pub mod augment;
pub mod correspond;
pub mod dga;
pub mod front;
pub mod grading;
pub mod ruling;

pub use correspond::{
    beta_pairs, check_equivalence, check_rotation_criterion, extract_ruling, parity_check,
    ruling_cusp_pairing, truncated_disks, DipPair, EquivalenceReport, Extraction, ExtractionError,
    ExtractionStep, RotationReport,
};

pub use ruling::{
    classify_config, enumerate_rulings, step, validate_ruling, Action, Config, PairingState,
    Ruling, RulingViolation, StepError,
};

pub use augment::{
    brute_force_augmentations, enumerate_augmentations, is_augmentation, Augmentation,
};

pub use dga::{
    apply_leibniz, enumerate_disks, format_boundary, generator_name, parse_generator_name, Dga,
    Differential, Disk, GeneratorKind, UnknownLetter, Word,
};
pub use front::{
    CuspType, DiagramError, Direction, MaslovPotential, OccupancyTable, OrientedDiagram,
    ParseError, PlatDiagram, ValidateError,
};
pub use grading::{IllegalRho, Rho};
