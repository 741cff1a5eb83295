//! C ABI for `acwb`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Strings returned to C are
//! heap-allocated and released with [`acwb_string_free`]. Every fallible call
//! returns an [`AcwbStatus`]; on failure the message is available from
//! [`acwb_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use acwb::curves::{self, PunctureLabeling, Slope};
use acwb::family::{gersten_certificate, presentation_ln1};
use acwb::kirby::{FramedLinkMatrix, KirbyError};
use acwb::{
    hybrid_trivialize, search, verify, BalancedPresentation, Move, MoveCertificate, SearchConfig, SearchError,
    SearchOutcome, Sign,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcwbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    IllegalMove = 4,
    InvalidArgument = 5,
    Search = 6,
    Kirby = 7,
    Overflow = 8,
    Panic = 9,
}

/// Search result kind; the values match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcwbSearchStatus {
    Found = 0,
    Exhausted = 1,
    Inconclusive = 3,
}

pub struct AcwbPresentation(BalancedPresentation);

pub struct AcwbMatrix(FramedLinkMatrix);

pub struct AcwbOutcome(SearchOutcome);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

struct Fail(AcwbStatus, String);

impl Fail {
    fn new(status: AcwbStatus, e: impl ToString) -> Self {
        Fail(status, e.to_string())
    }
}

impl From<KirbyError> for Fail {
    fn from(e: KirbyError) -> Self {
        let status = if matches!(e, KirbyError::Overflow(_)) { AcwbStatus::Overflow } else { AcwbStatus::Kirby };
        Fail::new(status, e)
    }
}

impl From<SearchError> for Fail {
    fn from(e: SearchError) -> Self {
        Fail::new(AcwbStatus::Search, e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AcwbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AcwbStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AcwbStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::new(AcwbStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail::new(AcwbStatus::InvalidUtf8, e))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::new(AcwbStatus::NullPointer, "null handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(AcwbStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(value)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

fn to_json<T: serde::Serialize>(v: &T) -> *mut c_char {
    serde_json::to_string(v).map_or(ptr::null_mut(), c_string)
}

/// Message of the last failed call on this thread, or null. Caller frees.
#[no_mangle]
pub extern "C" fn acwb_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acwb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static version string; do not free.
#[no_mangle]
pub extern "C" fn acwb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// presentations

/// Parses `rank; r1; …; rn`.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_parse(src: *const c_char, out: *mut *mut AcwbPresentation) -> AcwbStatus {
    guard(|| {
        let p = BalancedPresentation::parse(text(src)?).map_err(|e| Fail::new(AcwbStatus::Parse, e))?;
        put_box(out, AcwbPresentation(p))
    })
}

/// The family member with `w = yx`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_family(n: i64, out: *mut *mut AcwbPresentation) -> AcwbStatus {
    guard(|| {
        let p = presentation_ln1(n).map_err(|e| Fail::new(AcwbStatus::InvalidArgument, e))?;
        put_box(out, AcwbPresentation(p))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_free(p: *mut AcwbPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Text form; caller frees. Null if `p` is null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_to_string(p: *const AcwbPresentation) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| c_string(p.0.to_string()))
}

/// Text form of the canonical representative; caller frees.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_canonical(p: *const AcwbPresentation) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| c_string(p.0.canonical_form().to_string()))
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_rank(p: *const AcwbPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.rank())
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_total_length(p: *const AcwbPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.total_length())
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_is_trivial(p: *const AcwbPresentation) -> bool {
    p.as_ref().is_some_and(|p| p.0.is_trivial())
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_determinant(p: *const AcwbPresentation, out: *mut i64) -> AcwbStatus {
    guard(|| {
        let d = handle(p)?.0.abelianization_determinant().map_err(|e| Fail::new(AcwbStatus::Overflow, e))?;
        put(out, d)
    })
}

/// Applies one move given as a JSON document, e.g.
/// `{"type":"invert_relator","relator":1}`, producing a new handle.
///
/// # Safety
/// `p` must be a live handle, `move_json` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_presentation_apply_move(
    p: *const AcwbPresentation,
    move_json: *const c_char,
    out: *mut *mut AcwbPresentation,
) -> AcwbStatus {
    guard(|| {
        let m: Move = serde_json::from_str(text(move_json)?).map_err(|e| Fail::new(AcwbStatus::Parse, e))?;
        let q = m.apply(&handle(p)?.0).map_err(|e| Fail::new(AcwbStatus::IllegalMove, e))?;
        put_box(out, AcwbPresentation(q))
    })
}

// search and certificates

/// Breadth-first search in the strict regime. `workers` 0 uses every core.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_search(
    p: *const AcwbPresentation,
    max_total_length: usize,
    max_depth: usize,
    workers: usize,
    out: *mut *mut AcwbOutcome,
) -> AcwbStatus {
    guard(|| {
        let mut cfg = SearchConfig::new(max_total_length, max_depth);
        cfg.workers = workers;
        let outcome = search(&handle(p)?.0, &cfg)?;
        put_box(out, AcwbOutcome(outcome))
    })
}

/// Replays the prefix certificate (JSON), then searches from its endpoint.
///
/// # Safety
/// `p` must be a live handle, `prefix_json` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_hybrid_search(
    p: *const AcwbPresentation,
    prefix_json: *const c_char,
    max_total_length: usize,
    max_depth: usize,
    out: *mut *mut AcwbOutcome,
) -> AcwbStatus {
    guard(|| {
        let prefix: MoveCertificate =
            serde_json::from_str(text(prefix_json)?).map_err(|e| Fail::new(AcwbStatus::Parse, e))?;
        let cfg = SearchConfig::new(max_total_length, max_depth);
        let outcome = hybrid_trivialize(&handle(p)?.0, &prefix, &cfg)?;
        put_box(out, AcwbOutcome(outcome))
    })
}

/// # Safety
/// `o` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_free(o: *mut AcwbOutcome) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// # Safety
/// `o` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_status(o: *const AcwbOutcome) -> AcwbSearchStatus {
    match &(*o).0 {
        SearchOutcome::Found { .. } => AcwbSearchStatus::Found,
        SearchOutcome::Exhausted { .. } => AcwbSearchStatus::Exhausted,
        SearchOutcome::Inconclusive { .. } => AcwbSearchStatus::Inconclusive,
    }
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_visited(o: *const AcwbOutcome) -> u64 {
    o.as_ref().map_or(0, |o| o.0.stats().visited)
}

/// Class-level depth of a found certificate, or -1.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_depth(o: *const AcwbOutcome) -> i64 {
    match o.as_ref().map(|o| &o.0) {
        Some(SearchOutcome::Found { depth, .. }) => *depth as i64,
        _ => -1,
    }
}

/// Full outcome record as JSON; caller frees.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_to_json(o: *const AcwbOutcome) -> *mut c_char {
    o.as_ref().map_or(ptr::null_mut(), |o| to_json(&o.0))
}

/// Certificate document as JSON, or null when nothing was found; caller frees.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_outcome_certificate_json(o: *const AcwbOutcome) -> *mut c_char {
    o.as_ref().and_then(|o| o.0.certificate()).map_or(ptr::null_mut(), to_json)
}

/// Replays a certificate document and reports whether it trivializes. When
/// it does not, the failing step is available from [`acwb_last_error`].
///
/// # Safety
/// `cert_json` must be a NUL-terminated string; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_verify(cert_json: *const c_char, valid: *mut bool) -> AcwbStatus {
    guard(|| {
        let cert: MoveCertificate =
            serde_json::from_str(text(cert_json)?).map_err(|e| Fail::new(AcwbStatus::Parse, e))?;
        let report = verify(&cert);
        if let Some(f) = &report.failure {
            set_error(format!("{f:?}"));
        }
        put(valid, report.valid)
    })
}

/// The built-in Gersten certificate as JSON; caller frees.
#[no_mangle]
pub extern "C" fn acwb_gersten_certificate_json() -> *mut c_char {
    to_json(&gersten_certificate())
}

// linking matrices

/// Parses the text form (size line, rows, `h`/`d` kinds line).
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_parse(src: *const c_char, out: *mut *mut AcwbMatrix) -> AcwbStatus {
    guard(|| {
        let m = FramedLinkMatrix::parse_text(text(src)?)?;
        put_box(out, AcwbMatrix(m))
    })
}

/// A new matrix with no components.
#[no_mangle]
pub extern "C" fn acwb_matrix_empty() -> *mut AcwbMatrix {
    Box::into_raw(Box::new(AcwbMatrix(FramedLinkMatrix::empty())))
}

/// # Safety
/// `m` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_free(m: *mut AcwbMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_to_string(m: *const AcwbMatrix) -> *mut c_char {
    m.as_ref().map_or(ptr::null_mut(), |m| c_string(m.0.to_text()))
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_size(m: *const AcwbMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.size())
}

/// 1-based entry.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_entry(m: *const AcwbMatrix, i: usize, j: usize, out: *mut i64) -> AcwbStatus {
    guard(|| {
        let m = &handle(m)?.0;
        let n = m.size();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Fail::new(AcwbStatus::InvalidArgument, format!("({i}, {j}) outside {n}x{n}")));
        }
        put(out, m.entry(i, j))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_det(m: *const AcwbMatrix, out: *mut i64) -> AcwbStatus {
    guard(|| {
        let d = handle(m)?.0.det().map_err(|e| Fail::new(AcwbStatus::Overflow, e))?;
        put(out, d)
    })
}

/// Slides component `i` over `j`; `sign` is +1 or -1.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_slide(
    m: *const AcwbMatrix,
    i: usize,
    j: usize,
    sign: i32,
    out: *mut *mut AcwbMatrix,
) -> AcwbStatus {
    guard(|| {
        let sign = match sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            s => return Err(Fail::new(AcwbStatus::InvalidArgument, format!("sign must be +1 or -1, got {s}"))),
        };
        let r = handle(m)?.0.slide(i, j, sign)?;
        put_box(out, AcwbMatrix(r))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_blow_down(m: *const AcwbMatrix, i: usize, out: *mut *mut AcwbMatrix) -> AcwbStatus {
    guard(|| {
        let r = handle(m)?.0.blow_down(i)?;
        put_box(out, AcwbMatrix(r))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_add_unlink(m: *const AcwbMatrix, r: usize, out: *mut *mut AcwbMatrix) -> AcwbStatus {
    guard(|| put_box(out, AcwbMatrix(handle(m)?.0.add_unlink(r))))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_add_hopf_pair(m: *const AcwbMatrix, out: *mut *mut AcwbMatrix) -> AcwbStatus {
    guard(|| put_box(out, AcwbMatrix(handle(m)?.0.add_hopf_pair())))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_gpr_condition(m: *const AcwbMatrix, out: *mut bool) -> AcwbStatus {
    guard(|| put(out, handle(m)?.0.gpr_necessary_condition()?))
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acwb_matrix_is_weak_trivial_form(m: *const AcwbMatrix) -> bool {
    m.as_ref().is_some_and(|m| m.0.is_weak_trivial_form())
}

// curves

unsafe fn labeling(s: *const c_char) -> Result<PunctureLabeling, Fail> {
    if s.is_null() {
        return Ok(PunctureLabeling::default());
    }
    text(s)?.parse().map_err(|e| Fail::new(AcwbStatus::Parse, e))
}

fn slope(a: i64, b: i64) -> Result<Slope, Fail> {
    Slope::new(a, b).map_err(|e| Fail::new(AcwbStatus::InvalidArgument, e))
}

/// Whether the slope `(a, b)` is a candidate; `labeling` may be null for the default.
///
/// # Safety
/// `labeling` must be null or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_curve_is_candidate(a: i64, b: i64, labeling: *const c_char, out: *mut bool) -> AcwbStatus {
    guard(|| {
        let lab = self::labeling(labeling)?;
        put(out, curves::is_candidate(slope(a, b)?, &lab))
    })
}

/// # Safety
/// `labeling` must be null or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_curve_z3_class(a: i64, b: i64, labeling: *const c_char, out: *mut u8) -> AcwbStatus {
    guard(|| {
        let lab = self::labeling(labeling)?;
        put(out, curves::z3_class(slope(a, b)?, &lab))
    })
}

/// Candidate slopes up to `height` as a JSON array of `[a, b]` pairs; caller frees.
///
/// # Safety
/// `labeling` must be null or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acwb_curve_candidates_json(
    height: i64,
    labeling: *const c_char,
    out: *mut *mut c_char,
) -> AcwbStatus {
    guard(|| {
        let lab = self::labeling(labeling)?;
        let list = curves::enumerate_candidates(height, &lab).map_err(|e| Fail::new(AcwbStatus::InvalidArgument, e))?;
        put(out, to_json(&list))
    })
}
