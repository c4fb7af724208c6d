//! Grading arithmetic shared by the DGA, augmentation and ruling layers.
//!
//! Gradings live in Z/m where m = 2|r| is the Maslov modulus of the knot;
//! m = 0 means honest integer gradings. A divisibility parameter rho selects
//! how much grading is respected downstream: 0 = graded, 1 = ungraded,
//! k >= 2 = k-graded (defined only when rho divides m).

use thiserror::Error;

/// Grading discipline: 0 = graded, 1 = ungraded, k >= 2 = k-graded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rho(pub u32);

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("rho = {rho} is illegal for grading modulus {modulus}: {rho} does not divide {modulus}")]
pub struct IllegalRho {
    pub rho: u32,
    pub modulus: u32,
}

impl Rho {
    pub const GRADED: Rho = Rho(0);
    pub const UNGRADED: Rho = Rho(1);

    pub fn value(self) -> u32 {
        self.0
    }

    /// rho >= 1 must divide the modulus when the modulus is nonzero;
    /// every rho is legal over integer gradings (m = 0).
    pub fn check_legal(self, modulus: u32) -> Result<(), IllegalRho> {
        if self.0 >= 1 && modulus > 0 && !modulus.is_multiple_of(self.0) {
            return Err(IllegalRho {
                rho: self.0,
                modulus,
            });
        }
        Ok(())
    }

    /// Is a grading value congruent to 0 under this discipline?
    /// Assumes the value is already reduced mod m when m > 0; since rho
    /// divides m the representative choice does not matter.
    pub fn accepts(self, grading: i64) -> bool {
        match self.0 {
            0 => grading == 0,
            k => grading.rem_euclid(i64::from(k)) == 0,
        }
    }
}

/// Reduce into [0, m) for m > 0; identity over integer gradings.
pub fn reduce(value: i64, modulus: u32) -> i64 {
    if modulus == 0 {
        value
    } else {
        value.rem_euclid(i64::from(modulus))
    }
}
