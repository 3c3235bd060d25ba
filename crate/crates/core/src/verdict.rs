//! Decision outcomes and their evidence.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    /// Only produced by closed-form cascades that decline to decide.
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Closed-form results used by the classification cascade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Every monomial complete intersection has the SLP in characteristic zero.
    CharZero,
    /// Every artinian quotient of `K[x, y]` has the WLP.
    TwoVariablesWlp,
    /// WLP holds when `d_0 > ceil(t/2)`.
    LargeTopDegree,
    /// WLP fails when `d_1 <= p <= d_0 <= ceil(t/2)`: `l^{d_0}` vanishes.
    FrobeniusTopPower,
    /// WLP fails when `d_0 <= p^m <= ceil(t/2)`.
    PrimePowerWindow,
    /// WLP holds when `p > ceil((t+1)/2)`.
    LargePrimeWlp,
    /// WLP decided by the single multinomial when `d_0 = d_1 + ... + d_n - n`.
    SingleEntryDeterminant,
    /// Uniform degree in at least five variables: WLP iff `p > ceil((n+1)(d-1)/2)`.
    UniformManyVariablesWlp,
    /// `(d, ..., d, d-1)` in at least five variables fails for `p < d`.
    UniformOneShort,
    /// `(d, d, d, d-3)`, `d >= 6`: WLP iff `p > 2d - 3`.
    DdddMinusThree,
    /// Even socle degree: WLP of `(d, 2)` implies WLP of `d`.
    EvenSocleLift,
    /// SLP holds when `p > t`.
    LargePrimeSlp,
    /// SLP fails when `max(d_1, 2 d_0 - t) <= p <= d_0` or `d_0 <= p^m <= t`.
    SlpFailureWindow,
    /// Characteristic two, two variables.
    CharTwoTwoVariables,
    /// Characteristic two, at least three variables: SLP always fails.
    CharTwoManyVariables,
    /// `(a, 2)` and `(a, 3)`.
    SmallSecondDegree,
    /// `(d, d)`: prime-power criterion on `(2d-1)(2d+1)`.
    UniformTwoVariablesSlp,
    /// `(d, d, d)`: SLP iff `p > 3(d-1)`.
    UniformThreeVariablesSlp,
    /// `(d, d, d, d)`: SLP iff `p > 4(d-1)`.
    UniformFourVariablesSlp,
    /// Uniform degree in at least five variables: SLP iff `p > (n+1)(d-1)`.
    UniformManyVariablesSlp,
    /// SLP iff every `(d, t - 2k)` has the WLP.
    WlpFamily,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::CharZero,
        TheoremId::TwoVariablesWlp,
        TheoremId::LargeTopDegree,
        TheoremId::FrobeniusTopPower,
        TheoremId::PrimePowerWindow,
        TheoremId::LargePrimeWlp,
        TheoremId::SingleEntryDeterminant,
        TheoremId::UniformManyVariablesWlp,
        TheoremId::UniformOneShort,
        TheoremId::DdddMinusThree,
        TheoremId::EvenSocleLift,
        TheoremId::LargePrimeSlp,
        TheoremId::SlpFailureWindow,
        TheoremId::CharTwoTwoVariables,
        TheoremId::CharTwoManyVariables,
        TheoremId::SmallSecondDegree,
        TheoremId::UniformTwoVariablesSlp,
        TheoremId::UniformThreeVariablesSlp,
        TheoremId::UniformFourVariablesSlp,
        TheoremId::UniformManyVariablesSlp,
        TheoremId::WlpFamily,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::CharZero => "char-zero",
            TheoremId::TwoVariablesWlp => "two-variables-wlp",
            TheoremId::LargeTopDegree => "large-top-degree",
            TheoremId::FrobeniusTopPower => "frobenius-top-power",
            TheoremId::PrimePowerWindow => "prime-power-window",
            TheoremId::LargePrimeWlp => "large-prime-wlp",
            TheoremId::SingleEntryDeterminant => "single-entry-determinant",
            TheoremId::UniformManyVariablesWlp => "uniform-many-variables-wlp",
            TheoremId::UniformOneShort => "uniform-one-short",
            TheoremId::DdddMinusThree => "dddd-minus-three",
            TheoremId::EvenSocleLift => "even-socle-lift",
            TheoremId::LargePrimeSlp => "large-prime-slp",
            TheoremId::SlpFailureWindow => "slp-failure-window",
            TheoremId::CharTwoTwoVariables => "char-two-two-variables",
            TheoremId::CharTwoManyVariables => "char-two-many-variables",
            TheoremId::SmallSecondDegree => "small-second-degree",
            TheoremId::UniformTwoVariablesSlp => "uniform-two-variables-slp",
            TheoremId::UniformThreeVariablesSlp => "uniform-three-variables-slp",
            TheoremId::UniformFourVariablesSlp => "uniform-four-variables-slp",
            TheoremId::UniformManyVariablesSlp => "uniform-many-variables-slp",
            TheoremId::WlpFamily => "wlp-family",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Determinant,
    SyzygyGap,
    Theorem(TheoremId),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Oracle => f.write_str("oracle"),
            Method::Determinant => f.write_str("determinant"),
            Method::SyzygyGap => f.write_str("syzygy-gap"),
            Method::Theorem(id) => write!(f, "theorem:{id}"),
        }
    }
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `x l^power : [A]_degree -> [A]_{degree + power}` does not have maximal rank.
    Degree { degree: u32, power: u32 },
    /// `prime` divides the peak determinant with the given multiplicity.
    Prime { prime: u64, exponent: u32 },
    /// A low-degree non-Koszul syzygy; coefficients listed in generator order
    /// `(l^{d_0}, x_1^{d_1}, ...)`.
    Syzygy { degree: u32, coefficients: Vec<String> },
    /// Scale `s < 0` and odd lattice point within Manhattan distance one of
    /// `p^s (a, b, c)`.
    GapPoint { scale: i32, point: [i64; 3] },
    /// The closed-form result that decided the question.
    Theorem { id: TheoremId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(method: Method) -> Self {
        Self { status: Status::Holds, method, witness: None }
    }

    pub fn fails(method: Method, witness: Witness) -> Self {
        Self { status: Status::Fails, method, witness: Some(witness) }
    }

    pub fn unknown(method: Method) -> Self {
        Self { status: Status::Unknown, method, witness: None }
    }

    pub fn by_theorem(id: TheoremId, holds: bool) -> Self {
        if holds {
            Self::holds(Method::Theorem(id))
        } else {
            Self::fails(Method::Theorem(id), Witness::Theorem { id })
        }
    }

    pub fn holds_property(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails_property(&self) -> bool {
        self.status == Status::Fails
    }

    pub fn is_decided(&self) -> bool {
        self.status != Status::Unknown
    }

    /// `Some(true)` for holds, `Some(false)` for fails.
    pub fn decision(&self) -> Option<bool> {
        match self.status {
            Status::Holds => Some(true),
            Status::Fails => Some(false),
            Status::Unknown => None,
        }
    }
}
