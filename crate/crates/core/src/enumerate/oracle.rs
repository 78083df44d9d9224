use std::collections::BTreeSet;

use super::{check_args, naive_candidates, EnumConfig, Enumeration, Exec, GenerationStats, LevelSet};
use crate::geometry::{classify_pair, PairClass};
use crate::model::{CanonicalCode, KPolyomino};
use crate::Result;

/// Children of one representative, with the number of pair checks spent.
fn children(p: &KPolyomino) -> Result<(Vec<CanonicalCode>, u64)> {
    let mut out = Vec::new();
    let mut checks = 0u64;
    for (i, cell) in p.cells().iter().enumerate() {
        let used: Vec<u32> = p.neighbors(i).map(|(d, _)| d).collect();
        for d in cell.normal_slots().filter(|d| !used.contains(d)) {
            let new = cell.neighbor(d)?;
            let mut adjacent = Vec::new();
            let mut ok = true;
            for (j, other) in p.cells().iter().enumerate() {
                checks += 1;
                match classify_pair(other, &new)? {
                    PairClass::EdgeAdjacent(s) => adjacent.push((j, s)),
                    PairClass::Touching | PairClass::Disjoint => {}
                    PairClass::Identical | PairClass::Overlapping => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.push(p.with_cell(new, &adjacent).canonical_code());
            }
        }
    }
    Ok((out, checks))
}

/// Reference generator with explicit configuration.
pub fn enumerate_oracle_with(k: u32, n_max: u32, cfg: &EnumConfig) -> Result<Enumeration> {
    check_args(k, n_max, cfg.workers)?;
    let exec = Exec::new(cfg.workers)?;
    let mut levels = vec![LevelSet::single(k)?];
    let mut stats = vec![GenerationStats { n: 1, accepted: 1, ..Default::default() }];
    for n in 2..=n_max {
        let parent = levels.last().expect("level 1 exists");
        let naive = naive_candidates(parent);
        cfg.check_budget(n, naive)?;
        let reps: Vec<&KPolyomino> = parent.representatives().collect();
        let results = exec.map(&reps, |p| children(p));
        let mut codes = BTreeSet::new();
        let mut checks = 0;
        for r in results {
            let (c, spent) = r?;
            checks += spent;
            codes.extend(c);
        }
        let level = LevelSet::from_sorted_codes(k, n, codes.into_iter().collect())?;
        stats.push(GenerationStats {
            n,
            candidates_naive: naive,
            candidates_glue: naive,
            accepted: level.len() as u64,
            pair_checks: checks,
        });
        levels.push(level);
    }
    Ok(Enumeration { levels, stats })
}
