use std::fmt;
use std::process::ExitCode;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Code {
    Ok = 0,
    /// Unreadable or malformed input, bad flags.
    Parse = 1,
    /// Well-formed input that is not a valid matroid, basis, or subset.
    Invalid = 2,
    /// An enumeration gate or cap was exceeded.
    Gate = 3,
    /// The partition problem is certifiably infeasible.
    Infeasible = 4,
    /// The search budget ran out without a witness.
    Exhausted = 5,
    /// A self-check failed; this is a bug.
    Internal = 6,
}

impl From<Code> for ExitCode {
    fn from(code: Code) -> Self {
        ExitCode::from(code as u8)
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: Code,
    pub message: String,
}

impl Failure {
    pub fn new(code: Code, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(Code::Parse, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<matex::Error> for Failure {
    fn from(err: matex::Error) -> Self {
        use matex::Error as E;
        let code = match &err {
            E::CapExceeded { .. } => Code::Gate,
            E::Internal(_) => Code::Internal,
            E::NotABasis { .. }
            | E::SeedNotSubset
            | E::NotInBasis(_)
            | E::ElementOutOfRange { .. }
            | E::Invalid(_)
            | E::AxiomViolated(_)
            | E::Generation { .. } => Code::Invalid,
        };
        let message = match err {
            // basis indices are reported 1-based, as B_1..B_k
            E::NotABasis { index } => format!("B_{} is not a basis", index + 1),
            other => other.to_string(),
        };
        Self { code, message }
    }
}
