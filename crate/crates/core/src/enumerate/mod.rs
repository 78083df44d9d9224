//! Exhaustive isomorph-free generation.
//!
//! Two independent generators produce the same level sets:
//!
//! * [`enumerate_oracle`] attaches a cell at every free slot of every
//!   representative and checks it against all cells.
//! * [`enumerate_orderly`] glues: it keeps, for every class, the complete set
//!   of valid one-cell extensions. The extensions of an `n`-cell polyomino `P`
//!   are inherited from the classes of `P - c` for removable cells `c` and
//!   cost a single pair check against `c` each.
//!
//! [`enumerate_parallel`] runs the orderly generator on a thread pool and
//! merges results in code order, so its output is independent of the worker
//! count.

mod oracle;
mod orderly;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::model::{CanonicalCode, GraphClass4, KPolyomino};
use crate::{Error, Result};

pub use oracle::enumerate_oracle_with;
pub use orderly::enumerate_orderly_with;

/// All classes of one size, sorted by canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSet {
    pub k: u32,
    pub n: u32,
    classes: Vec<(CanonicalCode, KPolyomino)>,
}

impl LevelSet {
    /// Builds the level from a sorted, duplicate-free code list. The
    /// representative of each class is rebuilt from its code.
    pub(crate) fn from_sorted_codes(k: u32, n: u32, codes: Vec<CanonicalCode>) -> Result<Self> {
        let classes = codes
            .into_iter()
            .map(|code| KPolyomino::from_code(k, &code).map(|p| (code, p)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LevelSet { k, n, classes })
    }

    pub(crate) fn single(k: u32) -> Result<Self> {
        let p = KPolyomino::single(k)?;
        Ok(LevelSet { k, n: 1, classes: vec![(p.canonical_code(), p)] })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.classes.iter().map(|(c, _)| c)
    }

    /// One polyomino per class, in code order.
    pub fn representatives(&self) -> impl Iterator<Item = &KPolyomino> {
        self.classes.iter().map(|(_, p)| p)
    }

    pub fn classes(&self) -> &[(CanonicalCode, KPolyomino)] {
        &self.classes
    }

    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        self.classes.binary_search_by(|(c, _)| c.cmp(code)).ok()
    }
}

/// Counters for one level.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub n: u32,
    /// Naive candidates: one per free slot of a cell of a parent class.
    pub candidates_naive: u64,
    /// Candidates produced by the generator that built the level.
    pub candidates_glue: u64,
    pub accepted: u64,
    /// `classify_pair` calls spent on the level.
    pub pair_checks: u64,
}

/// Tuning knobs shared by all generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Maximum candidates per level; exceeding it aborts the run.
    pub budget: Option<u64>,
    pub workers: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { budget: None, workers: 1 }
    }
}

impl EnumConfig {
    pub(crate) fn check_budget(&self, n: u32, candidates: u64) -> Result<()> {
        match self.budget {
            Some(budget) if candidates > budget => Err(Error::ResourceLimit { n, candidates, budget }),
            _ => Ok(()),
        }
    }
}

/// Level sets `1..=n_max` with per-level statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub levels: Vec<LevelSet>,
    pub stats: Vec<GenerationStats>,
}

impl Enumeration {
    pub fn counts(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.len() as u64).collect()
    }

    pub fn level(&self, n: u32) -> Option<&LevelSet> {
        self.levels.get((n as usize).checked_sub(1)?)
    }
}

/// Number of free (cell, slot) pairs over all classes of a level.
pub(crate) fn naive_candidates(level: &LevelSet) -> u64 {
    let k = level.k as u64;
    level
        .representatives()
        .map(|p| k * p.n() as u64 - 2 * p.adjacent_pairs() as u64)
        .sum()
}

fn check_args(k: u32, n_max: u32, workers: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::BadKValue(k));
    }
    if n_max == 0 {
        return Err(Error::BadN(0));
    }
    if workers == 0 {
        return Err(Error::BadWorkers);
    }
    Ok(())
}

/// Runs closures either inline or on a dedicated pool.
pub(crate) enum Exec {
    Serial,
    Pool(rayon::ThreadPool),
}

impl Exec {
    pub(crate) fn new(workers: usize) -> Result<Self> {
        if workers <= 1 {
            return Ok(Exec::Serial);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map(Exec::Pool)
            .map_err(|_| Error::BadWorkers)
    }

    /// Order-preserving map.
    pub(crate) fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Serial => items.iter().map(f).collect(),
            Exec::Pool(pool) => pool.install(|| items.par_iter().map(f).collect()),
        }
    }
}

/// Reference generator: every free slot, checked against every cell.
pub fn enumerate_oracle(k: u32, n_max: u32) -> Result<Vec<LevelSet>> {
    Ok(enumerate_oracle_with(k, n_max, &EnumConfig::default())?.levels)
}

/// Production generator, single-threaded.
pub fn enumerate_orderly(k: u32, n_max: u32) -> Result<Enumeration> {
    enumerate_orderly_with(k, n_max, &EnumConfig::default())
}

/// Production generator on `workers` threads.
pub fn enumerate_parallel(k: u32, n_max: u32, workers: usize) -> Result<Enumeration> {
    enumerate_orderly_with(k, n_max, &EnumConfig { budget: None, workers })
}

/// Four-cell classes split into (degree-3 graphs, paths and cycles).
pub fn graph_split4(k: u32) -> Result<(u64, u64)> {
    let run = enumerate_orderly(k, 4)?;
    let level = run.level(4).ok_or(Error::Inconsistent("missing level 4"))?;
    let mut split = (0, 0);
    for p in level.representatives() {
        if p.graph_class4()?.is_star_like() {
            split.0 += 1;
        } else {
            split.1 += 1;
        }
    }
    Ok(split)
}

/// Histogram of adjacency-graph classes among four-cell classes.
pub fn graph_classes4(k: u32) -> Result<Vec<(GraphClass4, u64)>> {
    let run = enumerate_orderly(k, 4)?;
    let level = run.level(4).ok_or(Error::Inconsistent("missing level 4"))?;
    let mut counts = std::collections::BTreeMap::new();
    for p in level.representatives() {
        *counts.entry(p.graph_class4()?).or_insert(0u64) += 1;
    }
    Ok(counts.into_iter().collect())
}
