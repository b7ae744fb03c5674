use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// Z/2 grading of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Koszul sign `(-1)^{|a||b|}` as +1/-1.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Superdimension `(even | odd)` of a graded space.
///
/// `PartialOrd` is the componentwise order, so two superdimensions can be
/// incomparable: `(2|1)` and `(1|2)` compare as `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn get(&self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    /// Componentwise `<=`.
    pub fn leq(&self, other: &SuperDim) -> bool {
        self.even <= other.even && self.odd <= other.odd
    }

    pub fn checked_sub(&self, other: &SuperDim) -> Option<SuperDim> {
        Some(SuperDim {
            even: self.even.checked_sub(other.even)?,
            odd: self.odd.checked_sub(other.odd)?,
        })
    }
}

/// Free-function form of [`SuperDim::leq`].
pub fn superdim_leq(a: SuperDim, b: SuperDim) -> bool {
    a.leq(&b)
}

impl PartialOrd for SuperDim {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        match (self.leq(other), other.leq(self)) {
            (true, true) => Some(Equal),
            (true, false) => Some(Less),
            (false, true) => Some(Greater),
            (false, false) => None,
        }
    }
}

impl Add for SuperDim {
    type Output = SuperDim;
    fn add(self, rhs: SuperDim) -> SuperDim {
        SuperDim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl Sub for SuperDim {
    type Output = SuperDim;
    fn sub(self, rhs: SuperDim) -> SuperDim {
        self.checked_sub(&rhs).expect("superdimension underflow")
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({}|{})", self.even, self.odd))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leq_examples() {
        assert!(superdim_leq(SuperDim::new(1, 2), SuperDim::new(2, 2)));
        assert!(!superdim_leq(SuperDim::new(2, 1), SuperDim::new(1, 2)));
        assert!(!superdim_leq(SuperDim::new(1, 2), SuperDim::new(2, 1)));
        assert!(superdim_leq(SuperDim::ZERO, SuperDim::ZERO));
        assert_eq!(SuperDim::new(2, 1).partial_cmp(&SuperDim::new(1, 2)), None);
    }

    #[test]
    fn poset_axioms_exhaustive() {
        let all: Vec<SuperDim> = (0..5)
            .flat_map(|e| (0..5).map(move |o| SuperDim::new(e, o)))
            .collect();
        let mut incomparable = 0;
        for a in &all {
            assert!(a.leq(a));
            for b in &all {
                if a.leq(b) && b.leq(a) {
                    assert_eq!(a, b);
                }
                if !a.leq(b) && !b.leq(a) {
                    incomparable += 1;
                }
                for c in &all {
                    if a.leq(b) && b.leq(c) {
                        assert!(a.leq(c));
                    }
                }
            }
        }
        assert!(incomparable > 0, "order must not be total");
    }

    #[test]
    fn total_and_display() {
        let d = SuperDim::new(4, 3);
        assert_eq!(d.total(), 7);
        assert_eq!(d.to_string(), "(4|3)");
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
    }
}
