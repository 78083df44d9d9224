//! C ABI over the kpoly library.
//!
//! Handles are opaque heap objects owned by the caller once returned and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`KpolyStatus`] and writes results through out-pointers; out-pointers are
//! left untouched on failure. Panics never cross the boundary.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kpoly::enumerate::{enumerate_orderly_with, EnumConfig, Enumeration};
use kpoly::{formulas, Error, KPolyomino};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KpolyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Overlap = 3,
    BudgetExceeded = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// Classes of every size `1..=n_max` for one `k`.
pub struct KpolyEnumeration {
    inner: Enumeration,
}

/// One k-polyomino.
pub struct KpolyPolyomino {
    inner: KPolyomino,
}

fn status_of(e: &Error) -> KpolyStatus {
    match e {
        Error::Overlap(..) => KpolyStatus::Overlap,
        Error::ResourceLimit { .. } => KpolyStatus::BudgetExceeded,
        Error::NotReal | Error::Inconsistent(_) | Error::UnknownGraph => KpolyStatus::Internal,
        _ => KpolyStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> KpolyStatus) -> KpolyStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(KpolyStatus::Panic)
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn kpoly_status_message(status: KpolyStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        KpolyStatus::Ok => b"ok\0",
        KpolyStatus::NullPointer => b"null pointer argument\0",
        KpolyStatus::InvalidArgument => b"invalid argument\0",
        KpolyStatus::Overlap => b"cells overlap\0",
        KpolyStatus::BudgetExceeded => b"candidate budget exceeded\0",
        KpolyStatus::OutOfRange => b"index out of range\0",
        KpolyStatus::BufferTooSmall => b"buffer too small\0",
        KpolyStatus::Internal => b"internal error\0",
        KpolyStatus::Panic => b"panic caught at the ABI boundary\0",
    };
    s.as_ptr().cast()
}

/// Closed-form count of classes with `n` cells, for `n` in 1..=4.
///
/// # Safety
/// `out` must be null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kpoly_count_formula(k: u32, n: u32, out: *mut u64) -> KpolyStatus {
    if out.is_null() {
        return KpolyStatus::NullPointer;
    }
    guard(|| match formulas::count_formula(k, n) {
        Ok(v) => {
            unsafe { *out = v };
            KpolyStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Enumerates all classes with `1..=n_max` cells.
///
/// `budget` caps candidates per level; 0 means unlimited. `workers` must be
/// at least 1.
///
/// # Safety
/// `out` must be null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn kpoly_enumerate(
    k: u32,
    n_max: u32,
    workers: u32,
    budget: u64,
    out: *mut *mut KpolyEnumeration,
) -> KpolyStatus {
    if out.is_null() {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let cfg = EnumConfig { budget: (budget > 0).then_some(budget), workers: workers as usize };
        match enumerate_orderly_with(k, n_max, &cfg) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(KpolyEnumeration { inner })) };
                KpolyStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of classes with `n` cells.
///
/// # Safety
/// `e` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_enumeration_count(e: *const KpolyEnumeration, n: u32, out: *mut u64) -> KpolyStatus {
    if e.is_null() || out.is_null() {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let e = unsafe { &*e };
        match e.inner.level(n) {
            Some(level) => {
                unsafe { *out = level.len() as u64 };
                KpolyStatus::Ok
            }
            None => KpolyStatus::OutOfRange,
        }
    })
}

/// Copies out the representative at `index` among classes with `n` cells.
/// Classes are ordered by canonical code.
///
/// # Safety
/// `e` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_enumeration_get(
    e: *const KpolyEnumeration,
    n: u32,
    index: usize,
    out: *mut *mut KpolyPolyomino,
) -> KpolyStatus {
    if e.is_null() || out.is_null() {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let e = unsafe { &*e };
        let Some(p) = e.inner.level(n).and_then(|l| l.representatives().nth(index)) else {
            return KpolyStatus::OutOfRange;
        };
        unsafe { *out = Box::into_raw(Box::new(KpolyPolyomino { inner: p.clone() })) };
        KpolyStatus::Ok
    })
}

/// Releases an enumeration. Null is a no-op.
///
/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kpoly_enumeration_free(e: *mut KpolyEnumeration) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Grows a polyomino from the root cell. Step `i` attaches a new cell across
/// slot `slots[i]` of cell `parents[i]`.
///
/// # Safety
/// When `steps > 0`, `parents` and `slots` must each point to `steps` values.
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_build(
    k: u32,
    parents: *const usize,
    slots: *const u32,
    steps: usize,
    out: *mut *mut KpolyPolyomino,
) -> KpolyStatus {
    if out.is_null() || (steps > 0 && (parents.is_null() || slots.is_null())) {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let list: Vec<(usize, u32)> = if steps == 0 {
            Vec::new()
        } else {
            let ps = unsafe { std::slice::from_raw_parts(parents, steps) };
            let ss = unsafe { std::slice::from_raw_parts(slots, steps) };
            ps.iter().copied().zip(ss.iter().copied()).collect()
        };
        match KPolyomino::build(k, &list) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(KpolyPolyomino { inner })) };
                KpolyStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of cells.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_cells(p: *const KpolyPolyomino, out: *mut usize) -> KpolyStatus {
    if p.is_null() || out.is_null() {
        return KpolyStatus::NullPointer;
    }
    unsafe { *out = (*p).inner.n() };
    KpolyStatus::Ok
}

/// Number of distinct polygon edges in the union of cells.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_edge_count(p: *const KpolyPolyomino, out: *mut usize) -> KpolyStatus {
    if p.is_null() || out.is_null() {
        return KpolyStatus::NullPointer;
    }
    unsafe { *out = (*p).inner.edge_count() };
    KpolyStatus::Ok
}

/// Approximate center of cell `i`, in units where adjacent centers are 1 apart.
///
/// # Safety
/// `p` must be null or a live handle; `x` and `y` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_center(
    p: *const KpolyPolyomino,
    i: usize,
    x: *mut f64,
    y: *mut f64,
) -> KpolyStatus {
    if p.is_null() || x.is_null() || y.is_null() {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let p = unsafe { &*p };
        let Some(cell) = p.inner.cells().get(i) else {
            return KpolyStatus::OutOfRange;
        };
        let (cx, cy) = cell.center.to_float(64).midpoint();
        unsafe {
            *x = cx;
            *y = cy;
        }
        KpolyStatus::Ok
    })
}

/// Copies the canonical code into `buf`. `len` always receives the full code
/// length; when it exceeds `cap` nothing is copied and `BufferTooSmall` is
/// returned, so callers may probe with `buf = NULL, cap = 0`.
///
/// # Safety
/// `p` must be null or a live handle; `buf` must be valid for `cap` writes
/// when `cap > 0`; `len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_canonical_code(
    p: *const KpolyPolyomino,
    buf: *mut u16,
    cap: usize,
    len: *mut usize,
) -> KpolyStatus {
    if p.is_null() || len.is_null() || (cap > 0 && buf.is_null()) {
        return KpolyStatus::NullPointer;
    }
    guard(|| {
        let code = unsafe { &*p }.inner.canonical_code();
        let words = code.as_slice();
        unsafe { *len = words.len() };
        if words.len() > cap {
            return KpolyStatus::BufferTooSmall;
        }
        unsafe { ptr::copy_nonoverlapping(words.as_ptr(), buf, words.len()) };
        KpolyStatus::Ok
    })
}

/// Releases a polyomino. Null is a no-op.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kpoly_polyomino_free(p: *mut KpolyPolyomino) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}
