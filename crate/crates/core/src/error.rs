use thiserror::Error;

/// Errors raised by the library layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element is not real (nonzero imaginary part)")]
    NotReal,
    #[error("bad slot {slot} for k={k} (cell parity {parity})")]
    BadSlot { k: u32, slot: u32, parity: u8 },
    #[error("cells belong to different k ({0} vs {1})")]
    KMismatch(u32, u32),
    #[error("k must be at least 3 (got {0})")]
    BadKValue(u32),
    #[error("cells {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("parent index {parent} out of range ({len} cells placed)")]
    BadParent { parent: usize, len: usize },
    #[error("cell configuration is not connected")]
    Disconnected,
    #[error("expected a polyomino with {expected} cells, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("adjacency graph matches no known class")]
    UnknownGraph,
    #[error("n={0} is out of range")]
    BadN(u32),
    #[error("edge bounds are only known for k in {{3, 4, 6}} (got k={0})")]
    BadK(u32),
    #[error("candidate budget exceeded at n={n}: {candidates} > {budget}")]
    ResourceLimit { n: u32, candidates: u64, budget: u64 },
    #[error("inconsistent polyomino: {0}")]
    Inconsistent(&'static str),
    #[error("worker count must be at least 1")]
    BadWorkers,
    #[error("malformed canonical code")]
    BadCode,
}

pub type Result<T> = std::result::Result<T, Error>;
