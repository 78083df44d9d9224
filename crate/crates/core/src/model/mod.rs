//! The k-polyomino value: placements plus slot-labelled adjacency.

mod canonical;

use std::collections::VecDeque;

pub use canonical::{CanonicalCode, CanonicalForm};

use crate::exactnum::CycNum;
use crate::formulas::max_degree;
use crate::geometry::{classify_pair, CellPlacement, PairClass};
use crate::{Error, Result};

/// A set of cells with its full adjacency matrix.
///
/// `adj[i·n + j]` holds `d + 1` when cell `j` shares a full edge with cell
/// `i` across slot `d` of `i`, and `0` otherwise. Polyominoes produced by
/// [`KPolyomino::build`], [`KPolyomino::from_code`] and the enumerators start
/// with the root cell (origin, parity 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolyomino {
    k: u32,
    cells: Vec<CellPlacement>,
    adj: Vec<u16>,
}

/// Adjacency classes of a 4-cell polyomino.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass4 {
    /// `K_{1,3}`.
    Star,
    /// Triangle with a pendant vertex.
    StarPlusEdge,
    /// `K_4` minus an edge.
    StarPlusTwoEdges,
    Path,
    Cycle,
}

impl GraphClass4 {
    /// The classes containing a vertex of degree 3.
    pub fn is_star_like(self) -> bool {
        matches!(self, GraphClass4::Star | GraphClass4::StarPlusEdge | GraphClass4::StarPlusTwoEdges)
    }
}

impl KPolyomino {
    /// The one-cell polyomino.
    pub fn single(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::BadKValue(k));
        }
        Ok(KPolyomino { k, cells: vec![CellPlacement::root(k)], adj: vec![0] })
    }

    /// Grows a polyomino from the root: step `(p, d)` adds the cell across
    /// slot `d` of cell `p`. Every new cell is classified against all placed
    /// cells, so coincidental adjacencies outside the growth tree are kept.
    pub fn build(k: u32, steps: &[(usize, u32)]) -> Result<Self> {
        let mut poly = Self::single(k)?;
        for &(parent, slot) in steps {
            let n = poly.n();
            if parent >= n {
                return Err(Error::BadParent { parent, len: n });
            }
            let cell = poly.cells[parent].neighbor(slot)?;
            let mut touching = Vec::new();
            for (i, other) in poly.cells.iter().enumerate() {
                match classify_pair(other, &cell)? {
                    PairClass::EdgeAdjacent(d) => touching.push((i, d)),
                    PairClass::Identical | PairClass::Overlapping => return Err(Error::Overlap(i, n)),
                    PairClass::Touching | PairClass::Disjoint => {}
                }
            }
            poly = poly.with_cell(cell, &touching);
        }
        Ok(poly)
    }

    /// Builds from arbitrary placements, classifying every pair.
    pub fn from_placements(cells: Vec<CellPlacement>) -> Result<Self> {
        let Some(first) = cells.first() else {
            return Err(Error::WrongSize { expected: 1, got: 0 });
        };
        let k = first.k();
        let n = cells.len();
        let mut adj = vec![0u16; n * n];
        for i in 0..n {
            for j in i + 1..n {
                match classify_pair(&cells[i], &cells[j])? {
                    PairClass::EdgeAdjacent(d) => {
                        adj[i * n + j] = d as u16 + 1;
                        adj[j * n + i] = ((d + k) % (2 * k)) as u16 + 1;
                    }
                    PairClass::Identical | PairClass::Overlapping => return Err(Error::Overlap(i, j)),
                    PairClass::Touching | PairClass::Disjoint => {}
                }
            }
        }
        let poly = KPolyomino { k, cells, adj };
        if !poly.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(poly)
    }

    /// Appends `cell` with its known adjacencies `(existing index, slot from
    /// the existing cell)`. No geometry is checked.
    pub(crate) fn with_cell(&self, cell: CellPlacement, adjacent: &[(usize, u32)]) -> Self {
        let n = self.n();
        let m = n + 1;
        let mut adj = vec![0u16; m * m];
        for i in 0..n {
            adj[i * m..i * m + n].copy_from_slice(&self.adj[i * n..(i + 1) * n]);
        }
        for &(i, d) in adjacent {
            adj[i * m + n] = d as u16 + 1;
            adj[n * m + i] = ((d + self.k) % (2 * self.k)) as u16 + 1;
        }
        let mut cells = self.cells.clone();
        cells.push(cell);
        KPolyomino { k: self.k, cells, adj }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[CellPlacement] {
        &self.cells
    }

    /// Row-major `n×n` matrix of `slot + 1` entries.
    pub fn adjacency_matrix(&self) -> &[u16] {
        &self.adj
    }

    /// Slot from cell `i` towards cell `j` if they share an edge.
    pub fn adjacency(&self, i: usize, j: usize) -> Option<u32> {
        match self.adj[i * self.n() + j] {
            0 => None,
            v => Some(v as u32 - 1),
        }
    }

    /// `(slot, neighbor)` pairs of cell `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (u32, usize)> + '_ {
        let n = self.n();
        self.adj[i * n..(i + 1) * n]
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(j, &v)| (v as u32 - 1, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        let n = self.n();
        self.adj[i * n..(i + 1) * n].iter().filter(|&&v| v != 0).count()
    }

    pub fn max_cell_degree(&self) -> usize {
        (0..self.n()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    /// Number of cell pairs sharing a full edge.
    pub fn adjacent_pairs(&self) -> usize {
        self.adj.iter().filter(|&&v| v != 0).count() / 2
    }

    /// Number of polygon edges: shared edges count once.
    pub fn edge_count(&self) -> usize {
        self.k as usize * self.n() - self.adjacent_pairs()
    }

    fn is_connected_without(&self, skip: Option<usize>) -> bool {
        let n = self.n();
        let Some(start) = (0..n).find(|&i| Some(i) != skip) else {
            return true;
        };
        let mut seen = vec![false; n];
        if let Some(s) = skip {
            seen[s] = true;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for (_, j) in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == n - skip.map_or(0, |_| 1)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(None)
    }

    /// Cells whose removal leaves the adjacency graph connected.
    pub fn removable_cells(&self) -> Vec<usize> {
        if self.n() == 1 {
            return Vec::new();
        }
        (0..self.n()).filter(|&c| self.is_connected_without(Some(c))).collect()
    }

    /// The polyomino without cell `c`, and the old index of every new cell.
    pub fn without_cell(&self, c: usize) -> (KPolyomino, Vec<usize>) {
        let n = self.n();
        let keep: Vec<usize> = (0..n).filter(|&i| i != c).collect();
        let m = keep.len();
        let mut adj = vec![0u16; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                adj[a * m + b] = self.adj[i * n + j];
            }
        }
        let cells = keep.iter().map(|&i| self.cells[i].clone()).collect();
        (KPolyomino { k: self.k, cells, adj }, keep)
    }

    /// Image under the isometry `z -> ζ^rotation · z` (after conjugation when
    /// `reflect`), with cells reordered so that new cell `i` is old
    /// `order[i]`. The result need not start at the origin.
    pub fn transformed(&self, rotation: u32, reflect: bool, order: &[usize]) -> KPolyomino {
        let k = self.k;
        let n = self.n();
        assert_eq!(order.len(), n, "order must be a permutation of the cells");
        let map_slot = |d: u32| -> u32 {
            let base = if reflect { (2 * k - d) % (2 * k) } else { d };
            (base + rotation) % (2 * k)
        };
        let cells = order
            .iter()
            .map(|&i| {
                let c = &self.cells[i];
                let z = if reflect { c.center.conj() } else { c.center.clone() };
                CellPlacement {
                    center: z.mul_zeta_pow(rotation as i64),
                    parity: ((c.parity as u32 + rotation) % 2) as u8,
                }
            })
            .collect();
        let mut adj = vec![0u16; n * n];
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                if let Some(d) = self.adjacency(i, j) {
                    adj[a * n + b] = map_slot(d) as u16 + 1;
                }
            }
        }
        KPolyomino { k, cells, adj }
    }

    /// Copy shifted so that cell `i` sits at the origin.
    pub fn translated_to(&self, i: usize) -> KPolyomino {
        let origin = self.cells[i].center.clone();
        let cells = self
            .cells
            .iter()
            .map(|c| CellPlacement { center: &c.center - &origin, parity: c.parity })
            .collect();
        KPolyomino { k: self.k, cells, adj: self.adj.clone() }
    }

    /// Full re-validation: every pair is compatible, the stored adjacency
    /// equals a recomputation from scratch, the graph is connected and every
    /// degree respects the neighbor bound.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = Self::from_placements(self.cells.clone())?;
        if rebuilt.adj != self.adj {
            return Err(Error::Inconsistent("stored adjacency differs from recomputation"));
        }
        let bound = max_degree(self.k) as usize;
        if self.n() > 1 && (0..self.n()).any(|i| self.degree(i) == 0 || self.degree(i) > bound) {
            return Err(Error::Inconsistent("cell degree outside [1, max_degree(k)]"));
        }
        Ok(())
    }

    /// Classifies the adjacency graph of a 4-cell polyomino.
    pub fn graph_class4(&self) -> Result<GraphClass4> {
        if self.n() != 4 {
            return Err(Error::WrongSize { expected: 4, got: self.n() });
        }
        let max_deg = self.max_cell_degree();
        match (self.adjacent_pairs(), max_deg) {
            (3, 3) => Ok(GraphClass4::Star),
            (3, 2) if self.is_connected() => Ok(GraphClass4::Path),
            (4, 3) => Ok(GraphClass4::StarPlusEdge),
            (4, 2) => Ok(GraphClass4::Cycle),
            (5, 3) => Ok(GraphClass4::StarPlusTwoEdges),
            _ => Err(Error::UnknownGraph),
        }
    }

    /// Rebuilds the polyomino encoded by `code`. Cell `i` is the i-th cell in
    /// the code's breadth-first order; cell 0 is the root. The code is checked
    /// for structural consistency but the geometry is not re-validated (see
    /// [`KPolyomino::validate`]).
    pub fn from_code(k: u32, code: &CanonicalCode) -> Result<Self> {
        let lists = code.neighbor_lists()?;
        let n = lists.len();
        let two_k = 2 * k;
        let mut adj = vec![0u16; n * n];
        for (i, list) in lists.iter().enumerate() {
            for &(t, j) in list {
                if t >= two_k || j >= n || j == i {
                    return Err(Error::BadCode);
                }
                adj[i * n + j] = t as u16 + 1;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (adj[i * n + j], adj[j * n + i]);
                if (a == 0) != (b == 0) || (a != 0 && (a as u32 - 1 + k) % two_k != b as u32 - 1) {
                    return Err(Error::BadCode);
                }
            }
        }
        let root_parity = lists
            .first()
            .and_then(|l| l.first())
            .map_or(0, |&(t, _)| (t % 2) as u8);
        let mut cells: Vec<Option<CellPlacement>> = vec![None; n];
        cells[0] = Some(CellPlacement { center: CycNum::zero(k), parity: root_parity });
        for (i, list) in lists.iter().enumerate() {
            let Some(here) = cells[i].clone() else {
                return Err(Error::BadCode);
            };
            for &(t, j) in list {
                if cells[j].is_none() {
                    cells[j] = Some(here.neighbor(t).map_err(|_| Error::BadCode)?);
                }
            }
        }
        let cells = cells.into_iter().collect::<Option<Vec<_>>>().ok_or(Error::BadCode)?;
        Ok(KPolyomino { k, cells, adj })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domino() {
        let p = KPolyomino::build(4, &[(0, 0)]).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.adjacent_pairs(), 1);
        assert_eq!(p.adjacency(0, 1), Some(0));
        assert_eq!(p.adjacency(1, 0), Some(4));
        assert_eq!(p.edge_count(), 7);
    }

    #[test]
    fn hexagon_triangle_picks_up_closing_edge() {
        // second hexagon across slot 0, third across slot 2 of the root: δ = 1
        let p = KPolyomino::build(6, &[(0, 0), (0, 2)]).unwrap();
        assert_eq!(p.adjacent_pairs(), 3);
        assert_eq!(p.edge_count(), 15);
        p.validate().unwrap();
    }

    #[test]
    fn heptagon_tight_chain_overlaps() {
        assert_eq!(KPolyomino::build(7, &[(0, 0), (0, 2)]), Err(Error::Overlap(1, 2)));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(KPolyomino::build(5, &[(0, 1)]), Err(Error::BadSlot { .. })));
        assert!(matches!(KPolyomino::build(5, &[(3, 0)]), Err(Error::BadParent { .. })));
        assert_eq!(KPolyomino::build(4, &[(0, 0), (1, 4)]), Err(Error::Overlap(0, 2)));
        assert_eq!(KPolyomino::single(2), Err(Error::BadKValue(2)));
    }

    #[test]
    fn single_cell_edges() {
        assert_eq!(KPolyomino::single(4).unwrap().edge_count(), 4);
    }

    #[test]
    fn tetromino_graph_classes() {
        let t = KPolyomino::build(4, &[(0, 0), (0, 4), (0, 2)]).unwrap();
        assert_eq!(t.graph_class4(), Ok(GraphClass4::Star));
        let block = KPolyomino::build(4, &[(0, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(block.adjacent_pairs(), 4);
        assert_eq!(block.graph_class4(), Ok(GraphClass4::Cycle));
        let line = KPolyomino::build(4, &[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(line.graph_class4(), Ok(GraphClass4::Path));
        assert!(matches!(KPolyomino::single(4).unwrap().graph_class4(), Err(Error::WrongSize { .. })));
    }

    #[test]
    fn hexagon_graph_classes() {
        // two hexagons on either side of a tight triangle
        let bee = KPolyomino::build(6, &[(0, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(bee.graph_class4(), Ok(GraphClass4::StarPlusTwoEdges));
        let pistol = KPolyomino::build(6, &[(0, 0), (0, 2), (0, 6)]).unwrap();
        assert_eq!(pistol.graph_class4(), Ok(GraphClass4::StarPlusEdge));
    }

    #[test]
    fn removable_cells_of_a_path() {
        let line = KPolyomino::build(4, &[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(line.removable_cells(), vec![0, 3]);
        let (rest, keep) = line.without_cell(0);
        assert_eq!(keep, vec![1, 2, 3]);
        assert_eq!(rest.n(), 3);
        assert!(rest.is_connected());
    }

    #[test]
    fn code_round_trip() {
        let p = KPolyomino::build(5, &[(0, 0), (1, 1), (0, 4)]).unwrap();
        let form = p.canonical_form();
        let rebuilt = KPolyomino::from_code(5, &form.code).unwrap();
        rebuilt.validate().unwrap();
        assert_eq!(rebuilt.canonical_code(), form.code);
        assert_eq!(rebuilt.cells()[0], CellPlacement::root(5));
    }

    #[test]
    fn transformed_matches_geometry() {
        let p = KPolyomino::build(7, &[(0, 0), (1, 3), (0, 6)]).unwrap();
        for r in 0..14 {
            for reflect in [false, true] {
                let q = p.transformed(r, reflect, &[2, 0, 3, 1]);
                let rebuilt = KPolyomino::from_placements(q.cells().to_vec()).unwrap();
                assert_eq!(rebuilt.adjacency_matrix(), q.adjacency_matrix());
            }
        }
    }
}
