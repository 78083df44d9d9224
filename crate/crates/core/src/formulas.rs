//! Closed-form counts for up to four cells and edge-count bounds.
//!
//! Everything here is plain integer arithmetic; square roots go through an
//! exact integer square root.

use crate::{Error, Result};

/// Smallest angle (in units of `2π/k`) at which three chained cells fit.
pub fn chain_threshold(k: u32) -> u64 {
    (k as u64 + 5) / 6
}

/// Number of partitions of `m` into at most three parts.
pub fn partitions_le3(m: u64) -> u64 {
    (m * m + 6 * m + 12) / 12
}

/// Four-cell classes whose graph contains a vertex of degree 3.
pub fn count_star4(k: u32) -> u64 {
    partitions_le3(k as u64 - 3 * chain_threshold(k))
}

/// Four-cell classes whose graph is a path or a 4-cycle.
pub fn count_path4(k: u32) -> u64 {
    let k = k as i64;
    let tail = match k % 12 {
        0 => 4 * k,
        1 => 6 * k - 11,
        2 => 12 * k + 4,
        3 => 14 * k + 9,
        4 => 20 * k + 32,
        5 => 22 * k + 5,
        6 => 4 * k - 12,
        7 => 6 * k + 1,
        8 => 12 * k + 16,
        9 => 14 * k - 3,
        10 => 20 * k + 20,
        _ => 22 * k + 17,
    };
    let num = 5 * k * k + tail;
    debug_assert_eq!(num % 48, 0);
    (num / 48) as u64
}

fn count4(k: u32) -> u64 {
    let k = k as i64;
    let tail = match k % 12 {
        0 => 8 * k + 24,
        1 | 7 => 4 * k - 7,
        2 => 8 * k - 4,
        3 => 10 * k + 15,
        4 | 10 => 14 * k + 16,
        5 | 11 => 16 * k + 13,
        6 => 8 * k + 12,
        8 => 8 * k + 8,
        _ => 10 * k + 3,
    };
    let num = 3 * k * k + tail;
    debug_assert_eq!(num % 24, 0);
    (num / 24) as u64
}

/// `a_k(n)` for `n <= 4`.
pub fn count_formula(k: u32, n: u32) -> Result<u64> {
    if k < 3 {
        return Err(Error::BadKValue(k));
    }
    match n {
        1 | 2 => Ok(1),
        3 => Ok((k / 2) as u64 + 1 - chain_threshold(k)),
        4 => Ok(count4(k)),
        _ => Err(Error::BadN(n)),
    }
}

/// Largest possible number of neighbors of a single cell.
pub fn max_degree(k: u32) -> u32 {
    let t = chain_threshold(k) as u32;
    k.min(k / t)
}

/// `⌈√x⌉`, exact.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// `(lower, upper)` bounds on the edge count `q` of an `n`-cell polyomino.
pub fn edge_bounds(k: u32, n: u64) -> Result<(i64, i64)> {
    if n == 0 {
        return Err(Error::BadN(0));
    }
    let ni = n as i64;
    match k {
        3 => {
            let t = ceil_sqrt(6 * n) as i64;
            // ⌈(n + √(6n)) / 2⌉ equals ⌈(n + ⌈√(6n)⌉) / 2⌉
            Ok((ni + (ni + t + 1) / 2, 2 * ni + 1))
        }
        4 => Ok((2 * ni + ceil_sqrt(4 * n) as i64, 3 * ni + 1)),
        6 => Ok((3 * ni - ceil_sqrt(12 * n - 3) as i64, 5 * ni + 1)),
        _ => Err(Error::BadK(k)),
    }
}

/// `(k-1)n + 1`, valid for every `k`.
pub fn general_edge_upper_bound(k: u32, n: u64) -> u64 {
    (k as u64 - 1) * n + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_match_listing() {
        fn brute(m: u64) -> u64 {
            let mut c = 0;
            for a in 0..=m {
                for b in 0..=a {
                    if a + b <= m && m - a - b <= b {
                        c += 1;
                    }
                }
            }
            c
        }
        assert_eq!(partitions_le3(0), 1);
        assert_eq!(partitions_le3(3), 3);
        assert_eq!(partitions_le3(6), 7);
        for m in 0..200 {
            assert_eq!(partitions_le3(m), brute(m), "m={m}");
        }
    }

    #[test]
    fn star_counts_by_angle_triples() {
        // triples of angles ≥ threshold summing to k, up to dihedral symmetry
        for k in 3..60u32 {
            let t = chain_threshold(k) as u32;
            let mut c = 0;
            for a in t..=k {
                for b in a..=k {
                    if a + b <= k && k - a - b >= b {
                        c += 1;
                    }
                }
            }
            assert_eq!(count_star4(k), c, "k={k}");
        }
        assert_eq!(count_star4(3), 1);
        assert_eq!(count_star4(4), 1);
        assert_eq!(count_star4(6), 3);
    }

    #[test]
    fn path_examples() {
        assert_eq!(count_path4(3), 2);
        assert_eq!(count_path4(6), 4);
        assert_eq!(count_path4(12), 16);
    }

    #[test]
    fn formula_examples() {
        for k in 3..40 {
            assert_eq!(count_formula(k, 1).unwrap(), 1);
            assert_eq!(count_formula(k, 2).unwrap(), 1);
        }
        assert_eq!(count_formula(11, 3).unwrap(), 4);
        assert_eq!(count_formula(13, 4).unwrap(), 23);
        assert_eq!(count_formula(17, 4).unwrap(), 48);
        assert_eq!(count_formula(4, 4).unwrap(), 5);
        assert!(matches!(count_formula(4, 5), Err(Error::BadN(5))));
        assert!(matches!(count_formula(4, 0), Err(Error::BadN(0))));
    }

    #[test]
    fn decomposition_on_small_range() {
        for k in 3..5000 {
            assert_eq!(count_formula(k, 4).unwrap(), count_star4(k) + count_path4(k), "k={k}");
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(max_degree(3), 3);
        assert_eq!(max_degree(7), 3);
        assert_eq!(max_degree(12), 6);
        for k in 3..1000 {
            assert!(max_degree(k) <= 6);
        }
    }

    #[test]
    fn sqrt_is_exact_at_squares() {
        for r in 0..2000u64 {
            assert_eq!(ceil_sqrt(r * r), r);
            assert_eq!(ceil_sqrt(r * r + 1), r + 1);
            if r > 1 {
                assert_eq!(ceil_sqrt(r * r - 1), r);
            }
        }
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(edge_bounds(4, 2).unwrap(), (7, 7));
        assert_eq!(edge_bounds(3, 1).unwrap(), (3, 3));
        assert_eq!(edge_bounds(6, 5).unwrap(), (7, 26));
        assert!(matches!(edge_bounds(5, 2), Err(Error::BadK(5))));
        assert_eq!(general_edge_upper_bound(4, 3), 10);
    }
}
