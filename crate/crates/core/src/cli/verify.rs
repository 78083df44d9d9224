//! Self-check suites behind `kpoly verify`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use super::published::{TABLE_CANDIDATES, TABLE_LARGE_K, TABLE_SMALL_K};
use crate::enumerate::{enumerate_oracle_with, enumerate_orderly_with, EnumConfig, Enumeration};
use crate::formulas::{chain_threshold, count_formula, count_path4, count_star4};
use crate::geometry::{
    chain3, chain3_admissible, chain3_touching, chain4_admissible, chain4_closes_cycle, chain4_u, classify_pair,
    PairClass,
};
use crate::{Error, Result};

/// Published entries the exact enumeration exceeds by one class. In both the
/// extra class has two non-adjacent cells separated by a gap below 2e-3 of
/// the lattice step.
pub const KNOWN_UNDERCOUNTS: &[(u32, u32)] = &[(33, 5), (35, 5)];

/// First failing value of a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub k: u32,
    pub n: Option<u32>,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.k)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        write!(f, " expected={} got={}", self.expected, self.got)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    pub mismatch: Option<Mismatch>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, checked: 0, mismatch: None }
    }

    fn check(&mut self, ok: bool, m: impl FnOnce() -> Mismatch) {
        self.checked += 1;
        if !ok && self.mismatch.is_none() {
            self.mismatch = Some(m());
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn first_mismatch(&self) -> Option<(&'static str, &Mismatch)> {
        self.suites.iter().find_map(|s| s.mismatch.as_ref().map(|m| (s.name, m)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            match &s.mismatch {
                None => writeln!(f, "PASS {:<12} {} checks", s.name, s.checked)?,
                Some(m) => writeln!(f, "FAIL {:<12} {m}", s.name)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "NOTE {note}")?;
        }
        if let Some((name, m)) = self.first_mismatch() {
            writeln!(f, "first mismatch ({name}): {m}")?;
        }
        Ok(())
    }
}

/// One published value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PublishedEntry {
    pub k: u32,
    pub n: u32,
    pub count: u64,
    pub source: &'static str,
}

pub fn builtin_published() -> Vec<PublishedEntry> {
    let mut out = Vec::new();
    for &(k, n, count) in TABLE_SMALL_K {
        out.push(PublishedEntry { k, n, count, source: "small-k table" });
    }
    for &(k, n, count) in TABLE_LARGE_K {
        out.push(PublishedEntry { k, n, count, source: "large-k table" });
    }
    for &(k, n, count, _, _) in TABLE_CANDIDATES {
        out.push(PublishedEntry { k, n, count, source: "candidate table" });
    }
    out
}

/// Reads `k,n,count[,...]` rows with a header line.
pub fn load_published(path: &Path) -> std::result::Result<Vec<PublishedEntry>, String> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| format!("{}: {e}", path.display()))?;
        let field = |i: usize| -> std::result::Result<u64, String> {
            row.get(i)
                .ok_or_else(|| format!("{}: short row", path.display()))?
                .trim()
                .parse()
                .map_err(|e| format!("{}: {e}", path.display()))
        };
        out.push(PublishedEntry { k: field(0)? as u32, n: field(1)? as u32, count: field(2)?, source: "file" });
    }
    Ok(out)
}

/// End cells of a 3-chain are compatible exactly above the threshold and
/// edge-adjacent at the threshold exactly when `k ≡ 0 (mod 6)`.
pub fn chain3_suite(ks: impl Iterator<Item = u32>) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("chain3");
    for k in ks {
        for delta in 1..=k / 2 {
            let [c1, _, c3] = chain3(k, delta);
            let class = classify_pair(&c1, &c3)?;
            let want = chain3_admissible(k, delta);
            s.check(class.is_compatible() == want, || Mismatch {
                k,
                n: None,
                expected: format!("delta={delta} compatible={want}"),
                got: format!("{class:?}"),
            });
            if delta as u64 == chain_threshold(k) {
                let adjacent = matches!(class, PairClass::EdgeAdjacent(_));
                let want = chain3_touching(k);
                s.check(adjacent == want, || Mismatch {
                    k,
                    n: None,
                    expected: format!("delta={delta} adjacent={want}"),
                    got: format!("{class:?}"),
                });
            }
        }
    }
    Ok(s)
}

/// End cells of the U-shaped 4-chain versus the closed-form conditions.
pub fn chain4_suite(ks: impl Iterator<Item = u32>) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("chain4");
    for k in ks {
        let t = chain_threshold(k) as u32;
        for d1 in t..=k / 2 {
            for d2 in t..=k / 2 {
                let [c1, _, _, c4] = chain4_u(k, d1, d2);
                let class = classify_pair(&c1, &c4)?;
                let want = chain4_admissible(k, d1, d2);
                s.check(class.is_compatible() == want, || Mismatch {
                    k,
                    n: None,
                    expected: format!("deltas=({d1},{d2}) compatible={want}"),
                    got: format!("{class:?}"),
                });
                let adjacent = matches!(class, PairClass::EdgeAdjacent(_));
                let want = chain4_closes_cycle(k, d1, d2);
                s.check(adjacent == want, || Mismatch {
                    k,
                    n: None,
                    expected: format!("deltas=({d1},{d2}) cycle={want}"),
                    got: format!("{class:?}"),
                });
            }
        }
    }
    Ok(s)
}

/// `count_formula(k, 4) = count_star4(k) + count_path4(k)`.
pub fn decomposition_suite(ks: impl Iterator<Item = u32>) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("decompose");
    for k in ks {
        let total = count_formula(k, 4)?;
        let parts = count_star4(k) + count_path4(k);
        s.check(total == parts, || Mismatch {
            k,
            n: Some(4),
            expected: total.to_string(),
            got: parts.to_string(),
        });
    }
    Ok(s)
}

/// Closed forms against enumerated counts for `n <= 4`.
pub fn formula_suite(runs: &BTreeMap<u32, Enumeration>) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("formula");
    for (&k, run) in runs {
        for level in run.levels.iter().take(4) {
            let want = count_formula(k, level.n)?;
            s.check(want == level.len() as u64, || Mismatch {
                k,
                n: Some(level.n),
                expected: want.to_string(),
                got: level.len().to_string(),
            });
        }
    }
    Ok(s)
}

/// Oracle and orderly generators must produce the same code sets.
pub fn generator_suite(runs: &BTreeMap<u32, Enumeration>, n_max: u32, cfg: &EnumConfig) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("generators");
    for (&k, run) in runs {
        let oracle = enumerate_oracle_with(k, n_max, cfg)?;
        for (a, b) in oracle.levels.iter().zip(&run.levels) {
            let left: BTreeSet<_> = a.codes().collect();
            let right: BTreeSet<_> = b.codes().collect();
            s.check(left == right, || Mismatch {
                k,
                n: Some(a.n),
                expected: format!("{} oracle classes", left.len()),
                got: format!("{} orderly classes ({} differ)", right.len(), left.symmetric_difference(&right).count()),
            });
        }
    }
    Ok(s)
}

/// Graph-class split of the four-cell classes.
pub fn split_suite(runs: &BTreeMap<u32, Enumeration>) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("graph-split");
    for (&k, run) in runs {
        let Some(level) = run.level(4) else { continue };
        let mut split = (0u64, 0u64);
        for p in level.representatives() {
            if p.graph_class4()?.is_star_like() {
                split.0 += 1;
            } else {
                split.1 += 1;
            }
        }
        let want = (count_star4(k), count_path4(k));
        s.check(split == want, || Mismatch {
            k,
            n: Some(4),
            expected: format!("{want:?}"),
            got: format!("{split:?}"),
        });
    }
    Ok(s)
}

/// Enumerated counts against published values. Entries on which the
/// published sources disagree pass when one of them matches; documented
/// undercounts are reported as notes when `allow_known` is set.
pub fn published_suite(
    runs: &BTreeMap<u32, Enumeration>,
    entries: &[PublishedEntry],
    allow_known: bool,
    notes: &mut Vec<String>,
) -> SuiteResult {
    let mut s = SuiteResult::new("published");
    let mut by_key: BTreeMap<(u32, u32), Vec<&PublishedEntry>> = BTreeMap::new();
    for e in entries {
        by_key.entry((e.k, e.n)).or_default().push(e);
    }
    for ((k, n), list) in by_key {
        let Some(level) = runs.get(&k).and_then(|r| r.level(n)) else { continue };
        let got = level.len() as u64;
        let values: BTreeSet<u64> = list.iter().map(|e| e.count).collect();
        if values.len() > 1 {
            let detail: Vec<String> = list.iter().map(|e| format!("{} in the {}", e.count, e.source)).collect();
            let matching: Vec<&str> = list.iter().filter(|e| e.count == got).map(|e| e.source).collect();
            let verdict = if matching.is_empty() {
                "matching none of them".to_string()
            } else {
                format!("matching the {}", matching.join(" and the "))
            };
            notes.push(format!(
                "a_{k}({n}): published values conflict ({}); enumeration gives {got}, {verdict}",
                detail.join(", ")
            ));
            s.check(values.contains(&got), || Mismatch {
                k,
                n: Some(n),
                expected: format!("{values:?}"),
                got: got.to_string(),
            });
            continue;
        }
        let want = list[0].count;
        if want != got && allow_known && KNOWN_UNDERCOUNTS.contains(&(k, n)) {
            notes.push(format!(
                "a_{k}({n}): published {want}, enumeration gives {got}; the extra class has a \
                 non-adjacent pair with a positive gap below 2e-3, confirmed by exact arithmetic"
            ));
            s.checked += 1;
            continue;
        }
        s.check(want == got, || Mismatch { k, n: Some(n), expected: want.to_string(), got: got.to_string() });
    }
    s
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub k_max: u32,
    pub n_max: u32,
    pub cfg: EnumConfig,
    /// Replaces the built-in tables; every entry is then checked strictly.
    pub published: Option<Vec<PublishedEntry>>,
}

pub fn run_verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.k_max < 3 {
        return Err(Error::BadKValue(opts.k_max));
    }
    if opts.n_max == 0 {
        return Err(Error::BadN(0));
    }
    let ks = 3..=opts.k_max;
    let mut runs = BTreeMap::new();
    for k in ks.clone() {
        runs.insert(k, enumerate_orderly_with(k, opts.n_max.max(4), &opts.cfg)?);
    }
    let mut report = VerifyReport::default();
    report.suites.push(chain3_suite(ks.clone())?);
    report.suites.push(chain4_suite(ks.clone())?);
    report.suites.push(decomposition_suite(3..=1_000_000)?);
    report.suites.push(formula_suite(&runs)?);
    report.suites.push(generator_suite(&runs, opts.n_max, &opts.cfg)?);
    report.suites.push(split_suite(&runs)?);
    // levels past n_max exist only for the split suite
    for run in runs.values_mut() {
        run.levels.truncate(opts.n_max as usize);
    }
    let (entries, allow_known) = match &opts.published {
        Some(list) => (list.clone(), false),
        None => (builtin_published(), true),
    };
    let published = published_suite(&runs, &entries, allow_known, &mut report.notes);
    report.suites.push(published);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verify_passes() {
        let opts = VerifyOptions { k_max: 6, n_max: 5, cfg: EnumConfig::default(), published: None };
        let report = run_verify(&opts).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().contains("PASS chain3"));
    }

    #[test]
    fn corrupted_entry_is_named() {
        let bad = vec![PublishedEntry { k: 5, n: 4, count: 8, source: "file" }];
        let opts = VerifyOptions { k_max: 5, n_max: 4, cfg: EnumConfig::default(), published: Some(bad) };
        let report = run_verify(&opts).unwrap();
        assert!(!report.passed());
        let (name, m) = report.first_mismatch().unwrap();
        assert_eq!(name, "published");
        assert_eq!((m.k, m.n), (5, Some(4)));
    }

    #[test]
    fn builtin_tables_have_expected_size() {
        assert_eq!(TABLE_SMALL_K.len(), 139);
        assert_eq!(TABLE_LARGE_K.len(), 105);
        assert_eq!(TABLE_CANDIDATES.len(), 31);
    }
}
