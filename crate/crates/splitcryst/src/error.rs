use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotOrthogonal(String),
    DegenerateBasis,
    NotASublattice,
    GeneratorNotInLattice(String),
    ClosureBoundExceeded,
    UnknownName(String),
    UnrecognizedType(String),
    NonIntegralResult(String),
    CatalogInconsistent(String),
    InvalidDomain(String),
    NotSubproper(String),
    NotASubgroup(String),
    PreconditionViolated(String),
    UnknownType(String),
    UnknownInclusion(String),
    UnsupportedTorsion(String),
    DimensionMismatch,
    HomologyOverlap(String),
    UnknownVcType(String),
    NotInCatalog(String),
    Procedure(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotOrthogonal(m) => write!(f, "matrix is not orthogonal: {m}"),
            Error::DegenerateBasis => write!(f, "lattice basis is degenerate"),
            Error::NotASublattice => write!(f, "not a sublattice"),
            Error::GeneratorNotInLattice(v) => write!(f, "generator {v} is not in the lattice"),
            Error::ClosureBoundExceeded => write!(f, "group closure exceeded 96 elements"),
            Error::UnknownName(n) => write!(f, "unknown name {n:?}"),
            Error::UnrecognizedType(s) => write!(f, "unrecognized finite group: {s}"),
            Error::NonIntegralResult(s) => write!(f, "non-integral matrix in lattice basis: {s}"),
            Error::CatalogInconsistent(s) => write!(f, "catalog inconsistent: {s}"),
            Error::InvalidDomain(s) => write!(f, "invalid fundamental domain: {s}"),
            Error::NotSubproper(s) => write!(f, "side pairing is not subproper: {s}"),
            Error::NotASubgroup(s) => write!(f, "not a subgroup: {s}"),
            Error::PreconditionViolated(s) => write!(f, "precondition violated: {s}"),
            Error::UnknownType(s) => write!(f, "unknown group type {s}"),
            Error::UnknownInclusion(s) => write!(f, "no K_-1 inclusion data for {s}"),
            Error::UnsupportedTorsion(s) => write!(f, "unsupported torsion factor {s}"),
            Error::DimensionMismatch => write!(f, "boundary matrix dimension mismatch"),
            Error::HomologyOverlap(s) => write!(f, "both E2_00 and E2_1,-1 are nonzero for {s}"),
            Error::UnknownVcType(s) => write!(f, "virtually cyclic structure outside the closed list: {s}"),
            Error::NotInCatalog(s) => write!(f, "{s} is not in the catalog"),
            Error::Procedure(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
