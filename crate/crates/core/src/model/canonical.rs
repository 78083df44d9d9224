use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::KPolyomino;
use crate::{Error, Result};

/// Isomorphism-class key.
///
/// For the chosen start cell and symmetry, cells are numbered in
/// breadth-first order (neighbors visited by increasing transformed slot);
/// each cell then contributes its degree followed by its sorted
/// `(transformed slot, neighbor index)` pairs. The code of a polyomino is the
/// lexicographic minimum over start cells, the 2k rotations by `π/k` and the
/// reflection `d -> -d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u16>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// Little-endian bytes, for hashing and FFI.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|v| v.to_le_bytes()).collect()
    }

    /// Per-cell `(slot, neighbor)` lists in code order.
    pub fn neighbor_lists(&self) -> Result<Vec<Vec<(u32, usize)>>> {
        let c = &self.0;
        let mut lists = Vec::new();
        let mut pos = 0;
        while pos < c.len() {
            let deg = c[pos] as usize;
            pos += 1;
            if pos + 2 * deg > c.len() {
                return Err(Error::BadCode);
            }
            let list = (0..deg)
                .map(|i| (c[pos + 2 * i] as u32, c[pos + 2 * i + 1] as usize))
                .collect();
            pos += 2 * deg;
            lists.push(list);
        }
        if lists.is_empty() {
            return Err(Error::BadCode);
        }
        Ok(lists)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A canonical code together with one symmetry realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub start: usize,
    pub rotation: u32,
    pub reflect: bool,
    /// `order[i]` is the original index of the i-th cell in code order.
    pub order: Vec<usize>,
}

impl CanonicalForm {
    /// Slot as seen in code coordinates.
    pub fn map_slot(&self, k: u32, d: u32) -> u32 {
        let two_k = 2 * k;
        let base = if self.reflect { (two_k - d) % two_k } else { d };
        (base + self.rotation) % two_k
    }

    /// Inverse of [`CanonicalForm::map_slot`].
    pub fn unmap_slot(&self, k: u32, t: u32) -> u32 {
        let two_k = 2 * k;
        let base = (t + two_k - self.rotation) % two_k;
        if self.reflect {
            (two_k - base) % two_k
        } else {
            base
        }
    }
}

impl KPolyomino {
    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical_form().code
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let n = self.n();
        if n == 1 {
            // rotate odd-parity cells onto the root's parity
            return CanonicalForm {
                code: CanonicalCode(vec![0]),
                start: 0,
                rotation: self.cells()[0].parity as u32,
                reflect: false,
                order: vec![0],
            };
        }
        let two_k = 2 * self.k();
        let nbrs: Vec<Vec<(u32, usize)>> = (0..n).map(|i| self.neighbors(i).collect()).collect();
        // the code opens with the start degree, then the smallest start slot,
        // which some rotation always brings to 0
        let min_deg = nbrs.iter().map(Vec::len).min().unwrap_or(0);
        let mut best: Option<CanonicalForm> = None;
        for start in (0..n).filter(|&s| nbrs[s].len() == min_deg) {
            for reflect in [false, true] {
                for &(d0, _) in &nbrs[start] {
                    let base = if reflect { (two_k - d0) % two_k } else { d0 };
                    let rotation = (two_k - base) % two_k;
                    let bound = best.as_ref().map(|b| b.code.0.as_slice());
                    if let Some((code, order)) = bfs_code(&nbrs, start, rotation, reflect, two_k, bound) {
                        best = Some(CanonicalForm { code: CanonicalCode(code), start, rotation, reflect, order });
                    }
                }
            }
        }
        best.expect("a connected polyomino with n >= 2 has a neighbor at every start")
    }
}

/// Code for one (start, symmetry) choice; `None` unless strictly below `bound`.
fn bfs_code(
    nbrs: &[Vec<(u32, usize)>],
    start: usize,
    rotation: u32,
    reflect: bool,
    two_k: u32,
    bound: Option<&[u16]>,
) -> Option<(Vec<u16>, Vec<usize>)> {
    let n = nbrs.len();
    let map = |d: u32| {
        let base = if reflect { (two_k - d) % two_k } else { d };
        ((base + rotation) % two_k) as u16
    };
    let mut index = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    index[start] = 0;
    order.push(start);
    let mut code: Vec<u16> = Vec::with_capacity(bound.map_or(5 * n, <[u16]>::len));
    let mut state = if bound.is_some() { Ordering::Equal } else { Ordering::Less };
    let mut list: Vec<(u16, usize)> = Vec::with_capacity(8);

    let mut emit = |code: &mut Vec<u16>, v: u16| -> bool {
        if state == Ordering::Equal {
            let b = bound.expect("bound present while comparing")[code.len()];
            match v.cmp(&b) {
                Ordering::Less => state = Ordering::Less,
                Ordering::Greater => return false,
                Ordering::Equal => {}
            }
        }
        code.push(v);
        true
    };

    let mut head = 0;
    while head < order.len() {
        let i = order[head];
        head += 1;
        list.clear();
        list.extend(nbrs[i].iter().map(|&(d, j)| (map(d), j)));
        list.sort_unstable();
        for &(_, j) in &list {
            if index[j] == usize::MAX {
                index[j] = order.len();
                order.push(j);
            }
        }
        if !emit(&mut code, list.len() as u16) {
            return None;
        }
        for &(t, j) in &list {
            if !emit(&mut code, t) || !emit(&mut code, index[j] as u16) {
                return None;
            }
        }
    }
    (state == Ordering::Less).then_some((code, order))
}
