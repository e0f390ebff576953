use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Number of free parameters available to polynomial coefficients.
pub const NPARAMS: usize = 13;

/// The fixed, ordered list of symbolic parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    A,
    B,
    C,
    D,
    P,
    Q,
    R,
    X,
    Y,
    Z,
    U,
    V,
    S,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [
        Param::A,
        Param::B,
        Param::C,
        Param::D,
        Param::P,
        Param::Q,
        Param::R,
        Param::X,
        Param::Y,
        Param::Z,
        Param::U,
        Param::V,
        Param::S,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; NPARAMS] = ["a", "b", "c", "d", "p", "q", "r", "x", "y", "z", "u", "v", "s"];
        NAMES[self.index()]
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Param::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| AlgebraError::Parse { input: s.to_string(), reason: "unknown parameter".into() })
    }
}
