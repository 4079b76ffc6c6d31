use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Field;

/// How the distinguished classes are computed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `n = 1`: signs of `f` on the components of the superlevel sets.
    Signs,
    /// `n = 2`: winding classes in `H¹` of the superlevel sets.
    Circle,
    /// `m ≤ n`: degree classes in `Hⁿ` of the pair.
    Hopf,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Signs => "signs",
            Mode::Circle => "circle",
            Mode::Hopf => "hopf",
        }
    }

    pub fn check(&self, n: usize, m: usize) -> Result<()> {
        let ok = match self {
            Mode::Signs => n == 1,
            Mode::Circle => n == 2,
            Mode::Hopf => m <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ModeInapplicable(format!(
                "{} mode does not apply to n = {n}, m = {m}; supported: signs for n = 1, circle for n = 2, hopf for m ≤ n",
                self.name()
            )))
        }
    }

    /// Whether the computed invariants determine the robust-zero family:
    /// always for `n ≤ 2`, otherwise when `m ≤ 2n − 3`.
    pub fn determinacy(&self, n: usize, m: usize) -> bool {
        n <= 2 || m + 3 <= 2 * n
    }

    pub fn default_field(&self) -> Field {
        match self {
            Mode::Signs => Field::Prime(2),
            Mode::Circle | Mode::Hopf => Field::Rationals,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ModeChoice {
    #[default]
    Auto,
    Fixed(Mode),
}

impl ModeChoice {
    /// Signs for `n = 1`; Hopf when `m ≤ n` and either `n ≥ 3` or `m ≤ 2`;
    /// Circle for the remaining `n = 2` inputs.
    pub fn resolve(&self, n: usize, m: usize) -> Result<Mode> {
        let mode = match self {
            ModeChoice::Fixed(mode) => *mode,
            ModeChoice::Auto if n == 1 => Mode::Signs,
            ModeChoice::Auto if m <= n && (n >= 3 || m <= 2) => Mode::Hopf,
            ModeChoice::Auto if n == 2 => Mode::Circle,
            ModeChoice::Auto => Mode::Hopf,
        };
        mode.check(n, m)?;
        Ok(mode)
    }
}

impl FromStr for ModeChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(ModeChoice::Auto),
            "signs" => Ok(ModeChoice::Fixed(Mode::Signs)),
            "circle" => Ok(ModeChoice::Fixed(Mode::Circle)),
            "hopf" => Ok(ModeChoice::Fixed(Mode::Hopf)),
            other => Err(format!("unknown mode `{other}` (expected auto, signs, circle or hopf)")),
        }
    }
}

/// Coefficients of an assembled module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Coefficients {
    Integers,
    Field(Field),
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("z"),
            Coefficients::Field(field) => write!(f, "{field}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("z") {
            Ok(Coefficients::Integers)
        } else {
            s.parse().map(Coefficients::Field)
        }
    }
}
