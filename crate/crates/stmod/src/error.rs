use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field extension degree {0} out of range (1..=16)")]
    BadFieldDegree(u32),
    #[error("field order p^m = {p}^{m} exceeds the 2^16 cap")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus is not a monic irreducible over GF(p)")]
    BadModulus,
    #[error("no embedding GF(p^{from}) -> GF(p^{to}): degrees do not divide")]
    BadExtension { from: u32, to: u32 },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("ambient dimension mismatch")]
    AmbientMismatch,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("group closure exceeded the element limit {0}")]
    ClosureLimit(usize),
    #[error("permutations act on different domains")]
    DegreeMismatch,
    #[error("{0} does not divide the group order")]
    PrimeNotDividing(u32),
    #[error("subgroup is not a p-group")]
    NotPGroup,
    #[error("Sylow subgroup is not cyclic")]
    NonCyclicSylow,
    #[error("modules live over different fields")]
    FieldMismatch,
    #[error("modules live over different groups")]
    GroupMismatch,
    #[error("character does not respect the group relations")]
    RelationViolation,
    #[error("subspace is not stable under the group action")]
    NotStable,
    #[error("not periodic within the bound {0}")]
    NotPeriodic(usize),
    #[error("decomposition undecided: {0}")]
    Undecided(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit-code taxonomy used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Undecided(_) => 3,
            Error::Internal(_) => 4,
            _ => 1,
        }
    }
}
