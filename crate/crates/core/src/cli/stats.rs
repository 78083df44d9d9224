use serde::{Deserialize, Serialize};

use crate::enumerate::Enumeration;
use crate::formulas::{edge_bounds, general_edge_upper_bound};
use crate::Result;

/// Edge-count range over all classes of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStat {
    pub k: u32,
    pub n: u32,
    pub classes: u64,
    pub q_min: u64,
    pub q_max: u64,
    /// `None` when no closed-form bounds exist for `k`.
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub general_upper: u64,
    pub max_degree: u64,
    pub c1: u64,
    pub c2: u64,
}

impl EdgeStat {
    pub fn within_bounds(&self) -> bool {
        let lo = self.lower.is_none_or(|l| self.q_min as i64 >= l);
        let hi = self.upper.is_none_or(|u| self.q_max as i64 <= u);
        lo && hi && self.q_max <= self.general_upper
    }
}

pub fn edge_stats(run: &Enumeration) -> Result<Vec<EdgeStat>> {
    let mut out = Vec::new();
    for (level, stats) in run.levels.iter().zip(&run.stats) {
        let (k, n) = (level.k, level.n);
        let qs: Vec<u64> = level.representatives().map(|p| p.edge_count() as u64).collect();
        let bounds = edge_bounds(k, n as u64).ok();
        out.push(EdgeStat {
            k,
            n,
            classes: level.len() as u64,
            q_min: qs.iter().copied().min().unwrap_or(0),
            q_max: qs.iter().copied().max().unwrap_or(0),
            lower: bounds.map(|b| b.0),
            upper: bounds.map(|b| b.1),
            general_upper: general_edge_upper_bound(k, n as u64),
            max_degree: level.representatives().map(|p| p.max_cell_degree() as u64).max().unwrap_or(0),
            c1: stats.candidates_naive,
            c2: stats.candidates_glue,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_orderly;

    #[test]
    fn squares_hit_both_bounds() {
        let stats = edge_stats(&enumerate_orderly(4, 6).unwrap()).unwrap();
        for s in &stats {
            assert!(s.within_bounds(), "{s:?}");
            assert_eq!(s.q_max as i64, s.upper.unwrap());
        }
        assert_eq!(stats[1].q_min, 7);
    }
}
