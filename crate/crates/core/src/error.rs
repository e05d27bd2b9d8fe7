use std::fmt;

use thiserror::Error;

/// Which of the four gamma factors of the ratio hit a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaArg {
    APlusN,
    BPlusN,
    CPlusN,
    DPlusN,
}

impl fmt::Display for GammaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaArg::APlusN => "a+n",
            GammaArg::BPlusN => "b+n",
            GammaArg::CPlusN => "c+n",
            GammaArg::DPlusN => "a+b-c+n",
        })
    }
}

/// Which sine factor of the convergent-limit closed form vanished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SineFactor {
    CPlusN,
    DPlusN,
}

impl fmt::Display for SineFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SineFactor::CPlusN => "sin(pi(c+n))",
            SineFactor::DPlusN => "sin(pi(a+b-c+n))",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function has a pole at x = {x}")]
    Pole { x: f64 },

    #[error("gamma({arg}) has a pole: {arg} = {x}")]
    RatioPole { arg: GammaArg, x: f64 },

    #[error("zero factor {x} in the denominator of the Pochhammer symbol of order {n}")]
    ZeroDivisor { x: f64, n: i64 },

    #[error("term m = {m} has a vanishing denominator Pochhammer factor ({x})")]
    TermPole { m: usize, x: f64 },

    #[error("gamma argument of term m = {m} is a pole ({x})")]
    ShiftedPole { m: usize, x: f64 },

    #[error("{factor} vanishes")]
    SineZero { factor: SineFactor },

    #[error("{name} = {value} is not an integer")]
    NotInteger { name: &'static str, value: f64 },

    #[error("parameter {name} is not finite")]
    NonFinite { name: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
