use core::fmt;

/// Errors reported by this crate.
///
/// Every variant carries a stable machine-readable code (see [`Error::code`])
/// so front ends can map failures to exit codes without string matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coordinate exceeded the safe range, or checked arithmetic overflowed.
    Range(String),
    /// A segment whose endpoints coincide.
    DegenerateSegment,
    /// A vertex triple with zero area.
    DegenerateTriangle,
    /// The zero vector where a nonzero one is required.
    DegenerateInput,
    /// A linear map whose determinant is not +1 or -1.
    NotUnimodular,
    /// An argument outside the operation's domain.
    Domain(String),
    /// A configured work bound was exceeded.
    ResourceLimit(String),
    /// An internal consistency check failed; this indicates a bug.
    Invariant(String),
}

impl Error {
    /// Stable snake_case code identifying the error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Range(_) => "range",
            Error::DegenerateSegment => "degenerate_segment",
            Error::DegenerateTriangle => "degenerate_triangle",
            Error::DegenerateInput => "degenerate_input",
            Error::NotUnimodular => "not_unimodular",
            Error::Domain(_) => "domain",
            Error::ResourceLimit(_) => "resource_limit",
            Error::Invariant(_) => "invariant",
        }
    }

    pub(crate) fn overflow(context: &str) -> Self {
        Error::Range(format!("integer overflow in {context}"))
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Range(m) => write!(f, "range: {m}"),
            Error::DegenerateSegment => write!(f, "degenerate_segment: segment endpoints coincide"),
            Error::DegenerateTriangle => write!(f, "degenerate_triangle: vertices are collinear"),
            Error::DegenerateInput => write!(f, "degenerate_input: zero vector"),
            Error::NotUnimodular => write!(f, "not_unimodular: determinant must be +1 or -1"),
            Error::Domain(m) => write!(f, "domain: {m}"),
            Error::ResourceLimit(m) => write!(f, "resource_limit: {m}"),
            Error::Invariant(m) => write!(f, "invariant: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
