//! C ABI over `seqsym`.
//!
//! Every fallible function returns a [`SeqsymStatus`] and writes its result
//! through an out-pointer. Matrices and permutations are opaque handles owned
//! by the caller once returned and released with the matching `_free`
//! function. Strings returned by the library are released with
//! [`seqsym_string_free`]. After a non-OK status the thread-local message from
//! [`seqsym_last_error_message`] describes the failure.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use seqsym::{
    DihedralElement, Error, JacobiMap, ParamRange, Permutation, RenderFormat, ResidueMatrix, SignMatrix,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ModulusMismatch = 3,
    EvenModulus = 4,
    NotCoprime = 5,
    OddSide = 6,
    NotPrime = 7,
    Parse = 8,
    OutOfRange = 9,
    Unsupported = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqsymElement {
    Identity = 0,
    Rho = 1,
    Rho2 = 2,
    Rho3 = 3,
    Tau = 4,
    TauRho = 5,
    TauRho2 = 6,
    TauRho3 = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqsymFormat {
    Text = 0,
    Csv = 1,
    Json = 2,
    Pgm = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqsymCheck {
    Theorem1 = 0,
    Table = 1,
    Corollary = 2,
    JacobiTheorem = 3,
    BasicSymmetry = 4,
    Lemma = 5,
    Cycles = 6,
    Zolotarev = 7,
}

/// Opaque `n x n` matrix over `Z/(n^2+1)Z`.
pub struct SeqsymResidueMatrix(ResidueMatrix);

/// Opaque `n x n` matrix over `{-1, 0, +1}`.
pub struct SeqsymSignMatrix(SignMatrix);

/// Opaque permutation of `{0, ..., m-1}`.
pub struct SeqsymPermutation(Permutation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> SeqsymStatus {
    match e {
        Error::ModulusMismatch { .. } => SeqsymStatus::ModulusMismatch,
        Error::EvenModulus(_) => SeqsymStatus::EvenModulus,
        Error::NotCoprime { .. } => SeqsymStatus::NotCoprime,
        Error::OddSide(_) => SeqsymStatus::OddSide,
        Error::NotPrime(_) => SeqsymStatus::NotPrime,
        Error::Parse(_) | Error::ShapeMismatch { .. } | Error::NotCanonical { .. } => SeqsymStatus::Parse,
        Error::Unsupported(_) => SeqsymStatus::Unsupported,
        Error::Overflow | Error::EmptyRange(_) | Error::InvalidRange(_) => SeqsymStatus::OutOfRange,
        Error::InvalidModulus(_)
        | Error::ZeroSide
        | Error::GcdZeroZero
        | Error::ModulusTooSmall(_)
        | Error::UnknownElement(_)
        | Error::UnknownCheck(_) => SeqsymStatus::InvalidArgument,
    }
}

struct Fail(SeqsymStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null_pointer(name: &str) -> Fail {
    Fail(SeqsymStatus::NullPointer, format!("`{name}` is null"))
}

/// Runs `body`, recording errors and containing panics.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> SeqsymStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SeqsymStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SeqsymStatus::Panic
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_pointer(name));
    }
    out.write(value);
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null_pointer(name))
}

/// Boxes `value` into `*out` only after `out` is known to be non-null.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null_pointer(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SeqsymStatus::Parse, format!("`{name}` is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    out.write(owned_string(s)?);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(SeqsymStatus::Unsupported, "output contains NUL".into()))
}

fn element(e: SeqsymElement) -> DihedralElement {
    DihedralElement::ALL[e as usize]
}

fn format(f: SeqsymFormat) -> RenderFormat {
    RenderFormat::ALL[f as usize]
}

fn check(c: SeqsymCheck) -> seqsym::Check {
    seqsym::Check::ALL[c as usize]
}

/// Message for the last failed call on this thread; empty if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn seqsym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn seqsym_status_name(status: SeqsymStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SeqsymStatus::Ok => c"ok",
        SeqsymStatus::NullPointer => c"null pointer",
        SeqsymStatus::InvalidArgument => c"invalid argument",
        SeqsymStatus::ModulusMismatch => c"modulus mismatch",
        SeqsymStatus::EvenModulus => c"modulus even",
        SeqsymStatus::NotCoprime => c"not coprime",
        SeqsymStatus::OddSide => c"odd side length",
        SeqsymStatus::NotPrime => c"not prime",
        SeqsymStatus::Parse => c"parse error",
        SeqsymStatus::OutOfRange => c"out of range",
        SeqsymStatus::Unsupported => c"unsupported",
        SeqsymStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn seqsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- residue matrices ----

/// The sequential matrix `Q_n`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_sequential(n: usize, out: *mut *mut SeqsymResidueMatrix) -> SeqsymStatus {
    guard(|| {
        let q = ResidueMatrix::sequential(n)?;
        write_handle(out, SeqsymResidueMatrix(q))
    })
}

/// Builds a matrix from `n * n` row-major values, each below `n^2 + 1`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_from_values(
    n: usize,
    values: *const u64,
    out: *mut *mut SeqsymResidueMatrix,
) -> SeqsymStatus {
    guard(|| {
        if values.is_null() {
            return Err(null_pointer("values"));
        }
        let len = n.checked_mul(n).ok_or(Error::Overflow)?;
        let flat = std::slice::from_raw_parts(values, len);
        let rows = flat.chunks(n.max(1)).map(<[u64]>::to_vec).collect();
        let a = ResidueMatrix::from_rows(rows)?;
        write_handle(out, SeqsymResidueMatrix(a))
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_free(m: *mut SeqsymResidueMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Side length, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_side(m: *const SeqsymResidueMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.side())
}

/// Modulus `n^2 + 1`, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_modulus(m: *const SeqsymResidueMatrix) -> u64 {
    m.as_ref().map_or(0, |m| m.0.modulus().get())
}

/// Entry at the 1-indexed position `(i, j)`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_get(
    m: *const SeqsymResidueMatrix,
    i: usize,
    j: usize,
    out: *mut u64,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        let v = m.0.get(i, j).ok_or_else(|| {
            Fail(SeqsymStatus::OutOfRange, format!("({i}, {j}) outside a {0}x{0} matrix", m.0.side()))
        })?;
        write_out(out, v.value(), "out")
    })
}

/// `sigma(A)` by the index formulas.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_apply(
    m: *const SeqsymResidueMatrix,
    sigma: SeqsymElement,
    out: *mut *mut SeqsymResidueMatrix,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        write_handle(out, SeqsymResidueMatrix(m.0.apply(element(sigma))))
    })
}

/// `sigma(A)` by transposition and products with the exchange matrix.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_realize_by_products(
    m: *const SeqsymResidueMatrix,
    sigma: SeqsymElement,
    out: *mut *mut SeqsymResidueMatrix,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        write_handle(out, SeqsymResidueMatrix(m.0.realize_by_products(element(sigma))))
    })
}

/// Entrywise `c * A`; `c` is reduced modulo the matrix modulus.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_scalar_mul(
    m: *const SeqsymResidueMatrix,
    c: i64,
    out: *mut *mut SeqsymResidueMatrix,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        let c = m.0.modulus().reduce(c as i128);
        write_handle(out, SeqsymResidueMatrix(m.0.scalar_mul(c)?))
    })
}

/// Entrywise equality; false if either handle is NULL.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_equal(
    a: *const SeqsymResidueMatrix,
    b: *const SeqsymResidueMatrix,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_render(
    m: *const SeqsymResidueMatrix,
    fmt: SeqsymFormat,
    out: *mut *mut c_char,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        let text = seqsym::render_residue(&m.0, format(fmt))?;
        write_string(out, text)
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_parse(
    fmt: SeqsymFormat,
    text: *const c_char,
    out: *mut *mut SeqsymResidueMatrix,
) -> SeqsymStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let a = seqsym::parse_residue(format(fmt), text)?;
        write_handle(out, SeqsymResidueMatrix(a))
    })
}

// ---- sign matrices ----

/// Entrywise Jacobi symbol of `A`; the modulus must be odd.
#[no_mangle]
pub unsafe extern "C" fn seqsym_residue_matrix_jacobi(
    m: *const SeqsymResidueMatrix,
    out: *mut *mut SeqsymSignMatrix,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        let phi = JacobiMap::new(m.0.modulus())?;
        write_handle(out, SeqsymSignMatrix(seqsym::apply_map(&phi, &m.0)?))
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_free(m: *mut SeqsymSignMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_side(m: *const SeqsymSignMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.side())
}

/// Entry (-1, 0 or 1) at the 1-indexed position `(i, j)`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_get(
    m: *const SeqsymSignMatrix,
    i: usize,
    j: usize,
    out: *mut i8,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        let v = m.0.grid().get(i, j).ok_or_else(|| {
            Fail(SeqsymStatus::OutOfRange, format!("({i}, {j}) outside a {0}x{0} matrix", m.0.side()))
        })?;
        write_out(out, v.to_i8(), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_apply(
    m: *const SeqsymSignMatrix,
    sigma: SeqsymElement,
    out: *mut *mut SeqsymSignMatrix,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        write_handle(out, SeqsymSignMatrix(m.0.apply(element(sigma))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_equal(a: *const SeqsymSignMatrix, b: *const SeqsymSignMatrix) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_render(
    m: *const SeqsymSignMatrix,
    fmt: SeqsymFormat,
    out: *mut *mut c_char,
) -> SeqsymStatus {
    guard(|| {
        let m = borrow(m, "matrix")?;
        write_string(out, seqsym::render_sign(&m.0, format(fmt)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_sign_matrix_parse(
    fmt: SeqsymFormat,
    text: *const c_char,
    out: *mut *mut SeqsymSignMatrix,
) -> SeqsymStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let s = seqsym::parse_sign(format(fmt), text)?;
        write_handle(out, SeqsymSignMatrix(s))
    })
}

// ---- symbols ----

/// Jacobi symbol `(a/m)` for odd `m >= 3`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_jacobi(a: i64, m: u64, out: *mut i8) -> SeqsymStatus {
    guard(|| write_out(out, seqsym::jacobi(a, m)?.to_i8(), "out"))
}

/// Legendre symbol by Euler's criterion for an odd prime `p`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_legendre_euler(a: i64, p: u64, out: *mut i8) -> SeqsymStatus {
    guard(|| write_out(out, seqsym::legendre_euler(a, p)?.to_i8(), "out"))
}

// ---- permutations ----

/// `x -> a x mod m`; requires `gcd(a, m) = 1`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_mult_perm(a: i64, m: u64, out: *mut *mut SeqsymPermutation) -> SeqsymStatus {
    guard(|| write_handle(out, SeqsymPermutation(seqsym::mult_perm(a, m)?)))
}

/// Permutation of `Z/(n^2+1)Z` induced by `sigma` acting on `Q_n`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_induced_permutation(
    sigma: SeqsymElement,
    n: usize,
    out: *mut *mut SeqsymPermutation,
) -> SeqsymStatus {
    guard(|| {
        let p = seqsym::induced_permutation(element(sigma), n)?;
        write_handle(out, SeqsymPermutation(p))
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_free(p: *mut SeqsymPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of points, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_len(p: *const SeqsymPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_apply(p: *const SeqsymPermutation, x: usize, out: *mut usize) -> SeqsymStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        if x >= p.0.len() {
            return Err(Fail(SeqsymStatus::OutOfRange, format!("point {x} outside 0..{}", p.0.len())));
        }
        write_out(out, p.0.apply(x), "out")
    })
}

/// Signature, +1 or -1.
#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_signature(p: *const SeqsymPermutation, out: *mut i8) -> SeqsymStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        write_out(out, p.0.signature().to_i8(), "out")
    })
}

/// Writes up to `cap` cycle lengths (canonical cycle order) into `lengths`
/// and the total number of cycles into `count`. `lengths` may be NULL when
/// `cap` is 0, which lets callers size the buffer first.
#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_cycle_lengths(
    p: *const SeqsymPermutation,
    lengths: *mut usize,
    cap: usize,
    count: *mut usize,
) -> SeqsymStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        let all = p.0.cycles().lengths();
        if cap > 0 {
            if lengths.is_null() {
                return Err(null_pointer("lengths"));
            }
            let n = cap.min(all.len());
            ptr::copy_nonoverlapping(all.as_ptr(), lengths, n);
        }
        write_out(count, all.len(), "count")
    })
}

#[no_mangle]
pub unsafe extern "C" fn seqsym_permutation_equal(a: *const SeqsymPermutation, b: *const SeqsymPermutation) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

// ---- checks ----

/// `(a/m)` equals the signature of `x -> a x`.
#[no_mangle]
pub unsafe extern "C" fn seqsym_check_zolotarev(a: i64, m: u64, out: *mut bool) -> SeqsymStatus {
    guard(|| write_out(out, seqsym::check_zolotarev(a, m)?, "out"))
}

/// Runs a check over the inclusive range `lo..=hi`. `passed` receives whether
/// there were no failures; `report_json`, when not NULL, receives the JSON
/// report (free with `seqsym_string_free`).
#[no_mangle]
pub unsafe extern "C" fn seqsym_verify(
    which: SeqsymCheck,
    lo: u64,
    hi: u64,
    workers: usize,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> SeqsymStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null_pointer("passed"));
        }
        let range = ParamRange::new(lo, hi)?;
        let report = seqsym::run_check(check(which), range, workers.max(1))?;
        if !report_json.is_null() {
            report_json.write(owned_string(report.to_json())?);
        }
        write_out(passed, report.passed(), "passed")
    })
}
