//! Placement algebra for regular k-gons and exact pair classification.
//!
//! Units: adjacent centers are one step apart, so the apothem is 1/2 and the
//! circumradius is `1 / (2cos(π/k))`. Directions are slots `d` in `0..2k`
//! standing for the angle `π·d/k`. A cell of parity `p` has its edge normals
//! at the slots `d ≡ p (mod 2)` and its vertices at the other parity.

use crate::exactnum::{slot_unit_f64, CycNum, Sign};
use crate::{Error, Result};

/// One k-gon: exact center plus orientation class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPlacement {
    pub center: CycNum,
    pub parity: u8,
}

impl CellPlacement {
    /// The root cell: center 0, parity 0.
    pub fn root(k: u32) -> Self {
        CellPlacement { center: CycNum::zero(k), parity: 0 }
    }

    pub fn k(&self) -> u32 {
        self.center.k()
    }

    /// True if `d` is one of this cell's edge-normal slots.
    pub fn admits_slot(&self, d: u32) -> bool {
        d < 2 * self.k() && d % 2 == self.parity as u32
    }

    /// Edge-normal slots in increasing order.
    pub fn normal_slots(&self) -> impl Iterator<Item = u32> {
        let p = self.parity as u32;
        (0..self.k()).map(move |j| 2 * j + p)
    }

    /// The edge-adjacent cell across normal slot `d`.
    pub fn neighbor(&self, d: u32) -> Result<CellPlacement> {
        neighbor_placement(self, d)
    }

    /// Vertex coordinates, each multiplied by `2cos(π/k)`.
    pub fn vertices(&self) -> Vec<CycNum> {
        vertices(self)
    }
}

/// Cell across slot `d` of `c`: center shifted by `ζ^d`, parity shifted by k.
pub fn neighbor_placement(c: &CellPlacement, d: u32) -> Result<CellPlacement> {
    let k = c.k();
    if !c.admits_slot(d) {
        return Err(Error::BadSlot { k, slot: d, parity: c.parity });
    }
    let mut center = c.center.clone();
    center = center + CycNum::zeta_pow(k, d as i64);
    Ok(CellPlacement { center, parity: ((c.parity as u32 + k) % 2) as u8 })
}

/// Scaled vertices `2cos(π/k)·center + ζ^v` at the slots `v` of opposite parity.
pub fn vertices(c: &CellPlacement) -> Vec<CycNum> {
    let k = c.k();
    let scaled = c.center.mul(&CycNum::two_cos_pi_over_k(k));
    let first = 1 - c.parity as u32;
    (0..k)
        .map(|j| &scaled + &CycNum::zeta_pow(k, (2 * j + first) as i64))
        .collect()
}

/// Discrete angle between the directions `d1`, `d2` seen from a common cell,
/// in units of `2π/k`, folded to the smaller side.
pub fn discrete_angle(k: u32, d1: u32, d2: u32) -> Result<u32> {
    let two_k = 2 * k;
    if d1 >= two_k || d1 == d2 || d1 % 2 != d2 % 2 {
        return Err(Error::BadSlot { k, slot: d1, parity: (d2 % 2) as u8 });
    }
    if d2 >= two_k {
        return Err(Error::BadSlot { k, slot: d2, parity: (d1 % 2) as u8 });
    }
    let diff = d1.abs_diff(d2);
    Ok(diff.min(two_k - diff) / 2)
}

/// Smallest discrete angle at which two cells glued to a common cell do not
/// overlap: `⌊(k+5)/6⌋`.
pub fn chain3_threshold(k: u32) -> u32 {
    (k + 5) / 6
}

pub fn chain3_admissible(k: u32, delta: u32) -> bool {
    delta >= chain3_threshold(k)
}

/// At the minimal admissible angle the two end cells share a full edge
/// exactly when `6 | k`.
pub fn chain3_touching(k: u32) -> bool {
    k % 6 == 0
}

/// End cells of a U-shaped 4-chain with turning angles `delta1`, `delta2` do
/// not overlap.
pub fn chain4_admissible(k: u32, delta1: u32, delta2: u32) -> bool {
    delta1 + delta2 >= (k + 1) / 2
}

/// The U-shaped 4-chain closes into a 4-cycle.
pub fn chain4_closes_cycle(k: u32, delta1: u32, delta2: u32) -> bool {
    k % 2 == 0 && delta1 + delta2 == k / 2
}

/// Three cells `[C1, C2, C3]`: `C2` is the root, `C1` sits across slot 0 and
/// `C3` across slot `2·delta`.
pub fn chain3(k: u32, delta: u32) -> [CellPlacement; 3] {
    let c2 = CellPlacement::root(k);
    let c1 = c2.neighbor(0).expect("slot 0 is admissible at the root");
    let c3 = c2.neighbor(2 * delta % (2 * k)).expect("even slot is admissible at the root");
    [c1, c2, c3]
}

/// Four cells `[C1, C2, C3, C4]` forming the U-shaped chain: both end cells
/// turn towards the same side of the `C2`-`C3` axis.
pub fn chain4_u(k: u32, delta1: u32, delta2: u32) -> [CellPlacement; 4] {
    let c2 = CellPlacement::root(k);
    let c3 = c2.neighbor(0).expect("slot 0 is admissible at the root");
    let c1 = c2.neighbor(2 * delta1 % (2 * k)).expect("even slot is admissible at the root");
    let c4 = c3
        .neighbor((k + 2 * k - 2 * delta2) % (2 * k))
        .expect("slot of parity k is admissible at C3");
    [c1, c2, c3, c4]
}

/// Relationship between two cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    Identical,
    Overlapping,
    /// Full shared edge; the slot points from the first cell to the second.
    EdgeAdjacent(u32),
    /// Boundaries meet, interiors are disjoint, no full edge is shared.
    Touching,
    Disjoint,
}

impl PairClass {
    /// True for the classes allowed between two cells of a polyomino.
    pub fn is_compatible(self) -> bool {
        matches!(self, PairClass::EdgeAdjacent(_) | PairClass::Touching | PairClass::Disjoint)
    }
}

const FILTER_EPS: f64 = 1e-9;

/// Exact classification of two placements.
///
/// Coincident centers and unit steps along a slot are decided by exact zero
/// tests. Everything else is a separating-axis test over the edge normals of
/// both cells. Along the axis of slot `s` the gap between the projections is
/// `w·u_s - h_a(s) - h_b(s+k)` with `w = b - a`, where the support value `h`
/// of a cell is the apothem 1/2 in its normal directions and the circumradius
/// in its vertex directions. Scaled by `4cos(π/k)` the gap becomes the real
/// ring element `c·(w·ζ^{-s} + conj(w)·ζ^s) - t_a - t_b` with
/// `c = 2cos(π/k)` and `t ∈ {c, 2}`; a double-precision filter decides clear
/// axes and [`CycNum::sign_real`] the rest.
pub fn classify_pair(a: &CellPlacement, b: &CellPlacement) -> Result<PairClass> {
    let k = a.k();
    if b.k() != k {
        return Err(Error::KMismatch(k, b.k()));
    }
    let w = &b.center - &a.center;
    let (wx, wy) = w.approx();
    let dist = wx.hypot(wy);

    if dist < 1e-6 && w.is_zero() {
        return Ok(if a.parity == b.parity { PairClass::Identical } else { PairClass::Overlapping });
    }

    if (dist - 1.0).abs() < 1e-6 {
        let step = std::f64::consts::PI / k as f64;
        let d = (wy.atan2(wx) / step).round().rem_euclid(2.0 * k as f64) as u32 % (2 * k);
        if (&w - &CycNum::zeta_pow(k, d as i64)).is_zero() {
            let complementary = b.parity as u32 == (a.parity as u32 + k) % 2;
            return Ok(if a.admits_slot(d) && complementary {
                PairClass::EdgeAdjacent(d)
            } else {
                PairClass::Overlapping
            });
        }
    }

    let c_f = 2.0 * (std::f64::consts::PI / k as f64).cos();
    let support = |on_normal: bool| if on_normal { c_f } else { 2.0 };
    let mut ambiguous = Vec::new();
    for s in 0..2 * k {
        let on_a = s % 2 == a.parity as u32;
        let on_b = (s + k) % 2 == b.parity as u32;
        if !on_a && !on_b {
            continue;
        }
        let (ux, uy) = slot_unit_f64(k, s);
        let gap = c_f * 2.0 * (wx * ux + wy * uy) - support(on_a) - support(on_b);
        if gap > FILTER_EPS {
            return Ok(PairClass::Disjoint);
        }
        if gap >= -FILTER_EPS {
            ambiguous.push((s, on_a, on_b));
        }
    }

    let mut touching = false;
    if !ambiguous.is_empty() {
        let c = CycNum::two_cos_pi_over_k(k);
        let wc = w.conj();
        let two = CycNum::from_int(k, 2);
        let t = |on_normal: bool| if on_normal { &c } else { &two };
        for (s, on_a, on_b) in ambiguous {
            let proj = w.mul_zeta_pow(-(s as i64)) + wc.mul_zeta_pow(s as i64);
            let gap = proj.mul(&c) - t(on_a) - t(on_b);
            match gap.sign_real().expect("projection gap is real by construction") {
                Sign::Positive => return Ok(PairClass::Disjoint),
                Sign::Zero => touching = true,
                Sign::Negative => {}
            }
        }
    }
    Ok(if touching { PairClass::Touching } else { PairClass::Overlapping })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbor_examples() {
        let n = CellPlacement::root(4).neighbor(0).unwrap();
        assert_eq!(n.center, CycNum::one(4));
        assert_eq!(n.parity, 0);
        let n = CellPlacement::root(3).neighbor(0).unwrap();
        assert_eq!(n.center, CycNum::one(3));
        assert_eq!(n.parity, 1);
        assert!(matches!(CellPlacement::root(5).neighbor(1), Err(Error::BadSlot { .. })));
        assert!(CellPlacement::root(5).neighbor(10).is_err());
    }

    #[test]
    fn neighbor_of_neighbor_returns() {
        for k in 3..12 {
            let r = CellPlacement::root(k);
            for d in r.normal_slots() {
                let n = r.neighbor(d).unwrap();
                let back = n.neighbor((d + k) % (2 * k)).unwrap();
                assert_eq!(back, r);
            }
        }
    }

    #[test]
    fn discrete_angle_examples() {
        assert_eq!(discrete_angle(6, 0, 4), Ok(2));
        assert_eq!(discrete_angle(6, 0, 10), Ok(1));
        assert_eq!(discrete_angle(5, 1, 7), Ok(2));
        assert!(discrete_angle(5, 1, 2).is_err());
        assert!(discrete_angle(5, 3, 3).is_err());
    }

    #[test]
    fn chain_predicates() {
        assert!(!chain3_admissible(7, 1));
        assert!(chain3_admissible(4, 1));
        assert!(chain3_admissible(12, 2));
        assert!(!chain3_admissible(12, 1));
        assert!(chain3_touching(6) && chain3_touching(12) && !chain3_touching(7));
        assert!(chain4_admissible(4, 1, 1));
        assert!(!chain4_admissible(8, 2, 1));
        assert!(chain4_admissible(5, 1, 2));
        assert!(chain4_closes_cycle(4, 1, 1));
        assert!(chain4_closes_cycle(6, 1, 2));
        for d1 in 1..=2 {
            for d2 in 1..=2 {
                assert!(!chain4_closes_cycle(5, d1, d2));
            }
        }
    }

    #[test]
    fn vertex_examples() {
        let r = CellPlacement::root(4);
        let v = r.vertices();
        assert_eq!(v.len(), 4);
        // corners (±1/2, ±1/2) times √2 are the unit vectors at the odd slots
        for (i, p) in v.iter().enumerate() {
            assert_eq!(*p, CycNum::zeta_pow(4, (2 * i + 1) as i64));
        }
        let t = CellPlacement::root(3).vertices();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0], CycNum::zeta_pow(3, 1));
        assert_eq!(t[2], CycNum::zeta_pow(3, 5));
        for k in 3..20 {
            assert_eq!(CellPlacement::root(k).vertices().len(), k as usize);
        }
    }

    #[test]
    fn classify_examples() {
        let r = CellPlacement::root(4);
        assert_eq!(classify_pair(&r, &r), Ok(PairClass::Identical));
        let [c1, _, c3] = chain3(7, 1);
        assert_eq!(classify_pair(&c1, &c3), Ok(PairClass::Overlapping));
        let [c1, _, c3] = chain3(6, 1);
        assert!(matches!(classify_pair(&c1, &c3), Ok(PairClass::EdgeAdjacent(_))));
        // both end cells contain the middle cell's vertex between the two edges
        let [c1, _, c3] = chain3(5, 1);
        assert_eq!(classify_pair(&c1, &c3), Ok(PairClass::Touching));
        let [c1, _, c3] = chain3(5, 2);
        assert_eq!(classify_pair(&c1, &c3), Ok(PairClass::Disjoint));
        assert_eq!(
            classify_pair(&CellPlacement::root(4), &CellPlacement::root(5)),
            Err(Error::KMismatch(4, 5))
        );
    }

    #[test]
    fn square_corner_contact_is_touching() {
        let r = CellPlacement::root(4);
        let diag = r.neighbor(0).unwrap().neighbor(2).unwrap();
        assert_eq!(classify_pair(&r, &diag), Ok(PairClass::Touching));
        let far = diag.neighbor(0).unwrap();
        assert_eq!(classify_pair(&r, &far), Ok(PairClass::Disjoint));
    }

    #[test]
    fn opposite_parity_at_same_center_overlaps() {
        let a = CellPlacement::root(5);
        let b = CellPlacement { center: CycNum::zero(5), parity: 1 };
        assert_eq!(classify_pair(&a, &b), Ok(PairClass::Overlapping));
    }

    #[test]
    fn unit_step_with_wrong_parity_overlaps() {
        // even k keeps parity; a parity-1 square one step right overlaps
        let a = CellPlacement::root(4);
        let b = CellPlacement { center: CycNum::one(4), parity: 1 };
        assert_eq!(classify_pair(&a, &b), Ok(PairClass::Overlapping));
    }
}
