use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::rc::Rc;

/// Coefficients (ascending powers) of the `m`-th cyclotomic polynomial.
///
/// Computed by dividing `x^m - 1` by every `Φ_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact quotient of `num / den` where `den` is monic and divides `num`.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division left a remainder");
    quot
}

/// Per-k tables shared by every ring element with that k.
#[derive(Debug)]
pub(crate) struct RingTables {
    /// Degree of `Φ_{2k}`, i.e. `φ(2k)`.
    pub phi_deg: usize,
    /// `x^j mod Φ_{2k}` for `j` in `phi_deg..k`, each of length `phi_deg`.
    pub reduce_rows: Vec<Vec<i64>>,
    /// `cos(πj/k)` and `sin(πj/k)` for every slot `j` in `0..2k`.
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl RingTables {
    fn new(k: u32) -> Self {
        let phi = cyclotomic_polynomial(2 * k);
        let phi_deg = phi.len() - 1;
        let k = k as usize;
        let mut reduce_rows = Vec::with_capacity(k - phi_deg);
        if phi_deg < k {
            // x^phi_deg = -(phi[0] + ... + phi[deg-1] x^(deg-1))
            let mut row: Vec<i64> = phi[..phi_deg].iter().map(|c| -c).collect();
            reduce_rows.push(row.clone());
            for _ in phi_deg + 1..k {
                // multiply by x and fold the overflowing top term back
                let top = row[phi_deg - 1];
                for i in (1..phi_deg).rev() {
                    row[i] = row[i - 1] - top * phi[i];
                }
                row[0] = -top * phi[0];
                reduce_rows.push(row.clone());
            }
        }
        let (cos, sin) = (0..2 * k)
            .map(|j| {
                let t = PI * j as f64 / k as f64;
                (t.cos(), t.sin())
            })
            .unzip();
        RingTables { phi_deg, reduce_rows, cos, sin }
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<RingTables>>> = RefCell::new(HashMap::new());
}

pub(crate) fn ring_tables(k: u32) -> Rc<RingTables> {
    TABLES.with(|t| {
        t.borrow_mut()
            .entry(k)
            .or_insert_with(|| Rc::new(RingTables::new(k)))
            .clone()
    })
}
