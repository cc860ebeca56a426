//! C ABI over `chordarc`.
//!
//! Diagrams are opaque heap handles created by `chordarc_diagram_parse`,
//! `chordarc_diagram_from_pairing` or `chordarc_make_c` and released with
//! `chordarc_diagram_free`. Every other call returns a [`ChordarcStatus`] and
//! writes results through out-pointers. On failure a message is kept per
//! thread and can be read with `chordarc_last_error`.
//!
//! Variable-length results use a caller buffer: the required length is always
//! written to `*len`, and `CHORDARC_STATUS_BUFFER_TOO_SMALL` is returned when
//! `cap` is short. Passing a null buffer with `cap == 0` queries the length.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chordarc::realize::is_planar_realizable;
use chordarc::{
    arc_number, find_cutting_pair, find_obstruction, make_c, ChordDiagram, Error, Format,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordarcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    InvalidArgument = 3,
    GuardExceeded = 4,
    BufferTooSmall = 5,
    NotFound = 6,
    Internal = 7,
}

/// Opaque chord diagram.
pub struct ChordarcDiagram {
    inner: ChordDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> ChordarcStatus {
    match err {
        Error::GuardExceeded { .. } => ChordarcStatus::GuardExceeded,
        Error::OddLength(_)
        | Error::OutOfRange { .. }
        | Error::FixedPoint(_)
        | Error::NotInvolution(_)
        | Error::BadMultiplicity { .. }
        | Error::BadToken(_)
        | Error::DuplicatePoint(_) => ChordarcStatus::InvalidInput,
        Error::Inconsistent(_) | Error::Io(_) => ChordarcStatus::Internal,
        _ => ChordarcStatus::InvalidArgument,
    }
}

fn fail(status: ChordarcStatus, msg: impl Into<String>) -> ChordarcStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping library errors and panics to status codes.
fn guarded(f: impl FnOnce() -> Result<ChordarcStatus, (ChordarcStatus, String)>) -> ChordarcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => fail(status, msg),
        Err(_) => fail(ChordarcStatus::Internal, "internal panic"),
    }
}

fn lib_err(e: Error) -> (ChordarcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ChordarcStatus, String) {
    (ChordarcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(
    d: *const ChordarcDiagram,
    what: &str,
) -> Result<&'a ChordDiagram, (ChordarcStatus, String)> {
    d.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (ChordarcStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn emit(
    d: *mut *mut ChordarcDiagram,
    c: ChordDiagram,
) -> Result<ChordarcStatus, (ChordarcStatus, String)> {
    let slot = out_ref(d, "out")?;
    *slot = Box::into_raw(Box::new(ChordarcDiagram { inner: c }));
    Ok(ChordarcStatus::Ok)
}

/// Copies `values` into a caller buffer of capacity `cap`.
unsafe fn fill<T: Copy>(
    values: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<ChordarcStatus, (ChordarcStatus, String)> {
    *out_ref(len, "len")? = values.len();
    if values.len() > cap {
        return Err((
            ChordarcStatus::BufferTooSmall,
            format!("buffer holds {cap}, need {}", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(ChordarcStatus::Ok)
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn chordarc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a diagram in pairing, pairs or Gauss-word notation (auto-detected).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chordarc_diagram_parse(
    text: *const c_char,
    out: *mut *mut ChordarcDiagram,
) -> ChordarcStatus {
    guarded(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            (
                ChordarcStatus::InvalidInput,
                "text is not UTF-8".to_string(),
            )
        })?;
        let c = ChordDiagram::parse(s, Format::Auto).map_err(lib_err)?;
        emit(out, c)
    })
}

/// Builds a diagram from a partner array of even length `len`.
///
/// # Safety
/// `pairing` must point to `len` values (may be null when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn chordarc_diagram_from_pairing(
    pairing: *const usize,
    len: usize,
    out: *mut *mut ChordarcDiagram,
) -> ChordarcStatus {
    guarded(|| {
        let p: &[usize] = if len == 0 {
            &[]
        } else if pairing.is_null() {
            return Err(null("pairing"));
        } else {
            std::slice::from_raw_parts(pairing, len)
        };
        let c = ChordDiagram::from_pairing(p).map_err(lib_err)?;
        emit(out, c)
    })
}

/// The obstruction diagram `C_{2n+1}` on `4n + 2` points.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chordarc_make_c(
    n: usize,
    out: *mut *mut ChordarcDiagram,
) -> ChordarcStatus {
    guarded(|| emit(out, make_c(n).map_err(lib_err)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `d` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chordarc_diagram_free(d: *mut ChordarcDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn chordarc_diagram_chord_count(
    d: *const ChordarcDiagram,
    out: *mut usize,
) -> ChordarcStatus {
    guarded(|| {
        *out_ref(out, "out")? = handle(d, "diagram")?.m();
        Ok(ChordarcStatus::Ok)
    })
}

/// Partner array, `2m` entries.
///
/// # Safety
/// `buf` must hold `cap` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chordarc_diagram_pairing(
    d: *const ChordarcDiagram,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> ChordarcStatus {
    guarded(|| fill(handle(d, "diagram")?.pairing(), buf, cap, len))
}

/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn chordarc_arc_number(
    d: *const ChordarcDiagram,
    out: *mut usize,
) -> ChordarcStatus {
    guarded(|| {
        *out_ref(out, "out")? = arc_number(handle(d, "diagram")?);
        Ok(ChordarcStatus::Ok)
    })
}

/// Antipodal cutting pair as two gap indices, or `CHORDARC_STATUS_NOT_FOUND`
/// when the arc number exceeds 2.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chordarc_find_cutting_pair(
    d: *const ChordarcDiagram,
    gap1: *mut usize,
    gap2: *mut usize,
) -> ChordarcStatus {
    guarded(|| {
        let c = handle(d, "diagram")?;
        let (g1, g2) = (out_ref(gap1, "gap1")?, out_ref(gap2, "gap2")?);
        match find_cutting_pair(c).map_err(lib_err)? {
            Some(p) => {
                *g1 = p.g1.0;
                *g2 = p.g2.0;
                Ok(ChordarcStatus::Ok)
            }
            None => Ok(ChordarcStatus::NotFound),
        }
    })
}

/// Rotation-invariant canonical code, `2m` entries.
///
/// # Safety
/// `buf` must hold `cap` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chordarc_canonical_code(
    d: *const ChordarcDiagram,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> ChordarcStatus {
    guarded(|| {
        fill(
            handle(d, "diagram")?.canonical_code().as_slice(),
            buf,
            cap,
            len,
        )
    })
}

/// Equivalence under rotation, or under rotation and reflection when
/// `dihedral` is set.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn chordarc_equivalent(
    a: *const ChordarcDiagram,
    b: *const ChordarcDiagram,
    dihedral: bool,
    out: *mut bool,
) -> ChordarcStatus {
    guarded(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        *out_ref(out, "out")? = if dihedral {
            a.equivalent_dihedral(b)
        } else {
            a.equivalent(b)
        };
        Ok(ChordarcStatus::Ok)
    })
}

/// Obstruction witness as flattened endpoint pairs `a0 b0 a1 b1 ...`
/// (`2(2n+1)` entries) with its parameter in `*n`. Returns
/// `CHORDARC_STATUS_NOT_FOUND` when the arc number is at most 2.
///
/// # Safety
/// `buf` must hold `cap` values; `len` and `n` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chordarc_find_obstruction(
    d: *const ChordarcDiagram,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
    n: *mut usize,
) -> ChordarcStatus {
    guarded(|| {
        let c = handle(d, "diagram")?;
        let n = out_ref(n, "n")?;
        match find_obstruction(c) {
            Some(w) => {
                *n = w.n;
                let flat: Vec<usize> = w.chords.iter().flat_map(|ch| [ch.a, ch.b]).collect();
                fill(&flat, buf, cap, len)
            }
            None => {
                *out_ref(len, "len")? = 0;
                Ok(ChordarcStatus::NotFound)
            }
        }
    })
}

/// Whether some choice at every double point gives a genus-0 rotation system.
///
/// # Safety
/// `d` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn chordarc_is_planar_realizable(
    d: *const ChordarcDiagram,
    out: *mut bool,
) -> ChordarcStatus {
    guarded(|| {
        *out_ref(out, "out")? = is_planar_realizable(handle(d, "diagram")?).map_err(lib_err)?;
        Ok(ChordarcStatus::Ok)
    })
}
