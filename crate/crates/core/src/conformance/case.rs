use std::fmt;

use num_complex::Complex;
use serde::Serialize;

use crate::blas23::{Trans, Uplo};

/// Kernel a case exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Routine {
    #[serde(rename = "IAMAX_R")]
    IamaxR,
    #[serde(rename = "IAMAX_C")]
    IamaxC,
    #[serde(rename = "NRM2_R")]
    Nrm2R,
    #[serde(rename = "NRM2_C")]
    Nrm2C,
    #[serde(rename = "ROTG_R")]
    RotgR,
    #[serde(rename = "ROTG_C")]
    RotgC,
    #[serde(rename = "TRSV")]
    Trsv,
    #[serde(rename = "GER")]
    Ger,
    #[serde(rename = "GESV")]
    Gesv,
}

impl Routine {
    pub const ALL: [Routine; 9] = [
        Routine::IamaxR,
        Routine::IamaxC,
        Routine::Nrm2R,
        Routine::Nrm2C,
        Routine::RotgR,
        Routine::RotgC,
        Routine::Trsv,
        Routine::Ger,
        Routine::Gesv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Routine::IamaxR => "IAMAX_R",
            Routine::IamaxC => "IAMAX_C",
            Routine::Nrm2R => "NRM2_R",
            Routine::Nrm2C => "NRM2_C",
            Routine::RotgR => "ROTG_R",
            Routine::RotgC => "ROTG_C",
            Routine::Trsv => "TRSV",
            Routine::Ger => "GER",
            Routine::Gesv => "GESV",
        }
    }
}

impl fmt::Display for Routine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Data a case feeds to its kernel. Matrices are column-major with `ld = rows`.
#[derive(Debug, Clone, PartialEq)]
pub enum CaseInput<T> {
    Real(Vec<T>),
    Complex(Vec<Complex<T>>),
    RealPair(T, T),
    ComplexPair(Complex<T>, Complex<T>),
    Trsv { uplo: Uplo, trans: Trans, n: usize, a: Vec<T>, b: Vec<T> },
    Ger { m: usize, n: usize, alpha: T, x: Vec<T>, y: Vec<T>, a: Vec<T> },
    Gesv { n: usize, a: Vec<T>, b: Vec<T> },
}

/// One component of a pattern expectation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pat {
    /// Bitwise-equal value (zeros compare by value, so `-0 = 0`).
    Exact(f64),
    /// Within the suite's ulp tolerance.
    Approx(f64),
    NaN,
    /// `±Inf`, sign unconstrained.
    AnyInf,
}

impl fmt::Display for Pat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pat::Exact(v) => write!(f, "{v:e}"),
            Pat::Approx(v) => write!(f, "~{v:e}"),
            Pat::NaN => f.write_str("NaN"),
            Pat::AnyInf => f.write_str("±Inf"),
        }
    }
}

/// What the oracle says the kernel must produce.
#[derive(Debug, Clone, PartialEq)]
pub enum Expected {
    /// 1-based index, exact.
    Index(usize),
    /// Closed-form value, compared within the suite's ulp tolerance.
    Value(f64),
    NaN,
    PosInf,
    /// Some output component is Inf or NaN.
    Exceptional,
    Pattern(Vec<Pat>),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Index(i) => write!(f, "index {i}"),
            Expected::Value(v) => write!(f, "{v:e}"),
            Expected::NaN => f.write_str("NaN"),
            Expected::PosInf => f.write_str("+Inf"),
            Expected::Exceptional => f.write_str("output contains Inf/NaN"),
            Expected::Pattern(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// One generated conformance case.
#[derive(Debug, Clone, PartialEq)]
pub struct TestCase<T> {
    pub id: String,
    pub routine: Routine,
    /// Catalog group label, the column of the summary grid.
    pub group: String,
    pub n: usize,
    pub input: CaseInput<T>,
    pub expected: Expected,
    /// Set when the case cannot be meaningful on this platform or size.
    pub skip: Option<String>,
}
