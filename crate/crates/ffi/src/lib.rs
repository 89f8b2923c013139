//! C ABI over the `z2z4` library.
//!
//! Codes and PD-sets cross the boundary as opaque handles created by a
//! `*_new`/`*_preset` call and released with the matching `*_free`. Every
//! fallible call returns a [`Z2z4Status`]; on anything other than
//! `Z2Z4_STATUS_OK` a description is available from [`z2z4_last_error`] on
//! the same thread. Binary vectors are arrays of `uint8_t` holding 0 or 1,
//! coordinate 1 first.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use z2z4::decode::{self, Method};
use z2z4::{presets, BinaryVector, Error, ErrorModel, PdSet, PdVerdict, Z2Z4Code};

/// Opaque handle to a code.
pub struct Z2z4Code(Z2Z4Code);

/// Opaque handle to a PD-set.
pub struct Z2z4PdSet(PdSet);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2z4Status {
    Ok = 0,
    /// Decoding found no permutation, or a PD-set failed certification.
    Failure = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    InvalidArgument = 4,
    Parse = 5,
    /// The operation does not apply to this code or PD-set.
    Config = 6,
    CapExceeded = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2z4Method {
    Alternative = 0,
    Syndrome = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Z2z4CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Z2z4SimReport {
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    pub miscorrections: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> Z2z4Status {
    match err {
        Error::Parse { .. } => Z2z4Status::Parse,
        Error::Config(_) | Error::NotAutomorphism(_) => Z2z4Status::Config,
        Error::CapExceeded { .. } => Z2z4Status::CapExceeded,
        _ => Z2z4Status::InvalidArgument,
    }
}

struct FfiError(Z2z4Status, String);

type FfiResult<T> = std::result::Result<T, FfiError>;

impl From<Error> for FfiError {
    fn from(err: Error) -> Self {
        FfiError(status_of(&err), err.to_string())
    }
}

fn fail<T>(status: Z2z4Status, message: impl Into<String>) -> FfiResult<T> {
    Err(FfiError(status, message.into()))
}

/// Runs `body`, recording any error or panic as the thread's last error.
fn guard(body: impl FnOnce() -> FfiResult<Z2z4Status>) -> Z2z4Status {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(FfiError(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            Z2z4Status::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().map_or_else(|| fail(Z2z4Status::NullPointer, format!("{} is null", what)), Ok)
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return fail(Z2z4Status::NullPointer, format!("{} is null", what));
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(Z2z4Status::InvalidUtf8, format!("{} is not UTF-8", what)))
}

unsafe fn bits_in(p: *const u8, len: usize, what: &str) -> FfiResult<BinaryVector> {
    if p.is_null() && len > 0 {
        return fail(Z2z4Status::NullPointer, format!("{} is null", what));
    }
    let bits = if len == 0 { Vec::new() } else { slice::from_raw_parts(p, len).to_vec() };
    Ok(BinaryVector::from_bits(bits)?)
}

unsafe fn bits_out(v: &BinaryVector, out: *mut u8, cap: usize, what: &str) -> FfiResult<()> {
    if out.is_null() {
        return fail(Z2z4Status::NullPointer, format!("{} is null", what));
    }
    if cap < v.len() {
        return fail(Z2z4Status::BufferTooSmall, format!("{} holds {} bits, {} needed", what, cap, v.len()));
    }
    ptr::copy_nonoverlapping(v.bits().as_ptr(), out, v.len());
    Ok(())
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> FfiResult<()> {
    if out.is_null() {
        return fail(Z2z4Status::NullPointer, format!("{} is null", what));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn z2z4_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a code file (header `alpha A beta B`, `rows k`, then k rows).
///
/// # Safety
/// `source` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_new(source: *const c_char, out: *mut *mut Z2z4Code) -> Z2z4Status {
    guard(|| {
        let code = z2z4::code::parse_code(text(source, "source")?)?;
        write(out, Box::into_raw(Box::new(Z2z4Code(code))), "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Built-in code by name: example3, example4, mixed, nonlinear, hadamard32.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_preset(name: *const c_char, out: *mut *mut Z2z4Code) -> Z2z4Status {
    guard(|| {
        let name = text(name, "name")?;
        let code = presets::code_by_name(name)
            .map_or_else(|| fail(Z2z4Status::InvalidArgument, format!("unknown code {:?}", name)), Ok)?;
        write(out, Box::into_raw(Box::new(Z2z4Code(code))), "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// # Safety
/// `code` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_free(code: *mut Z2z4Code) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_type(code: *const Z2z4Code, out: *mut Z2z4CodeType) -> Z2z4Status {
    guard(|| {
        let ct = borrow(code, "code")?.0.code_type();
        let value = Z2z4CodeType { alpha: ct.alpha, beta: ct.beta, gamma: ct.gamma, delta: ct.delta, kappa: ct.kappa };
        write(out, value, "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Binary length n = α + 2β, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_length(code: *const Z2z4Code) -> usize {
    code.as_ref().map_or(0, |c| c.0.length())
}

/// Information length γ + 2δ, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_dimension(code: *const Z2z4Code) -> usize {
    code.as_ref().map_or(0, |c| c.0.dimension())
}

/// Writes the 1-based information positions to `buf` and their count to
/// `len`. With a short buffer only `len` is written and
/// `Z2Z4_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `buf` must hold `cap` elements (or be null with `cap == 0`); `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_info_set(
    code: *const Z2z4Code,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> Z2z4Status {
    guard(|| {
        let info = borrow(code, "code")?.0.info_set();
        let positions = info.positions();
        write(len, positions.len(), "len")?;
        if cap < positions.len() {
            return fail(Z2z4Status::BufferTooSmall, format!("info set has {} positions", positions.len()));
        }
        if !positions.is_empty() {
            if buf.is_null() {
                return fail(Z2z4Status::NullPointer, "buf is null");
            }
            ptr::copy_nonoverlapping(positions.as_ptr(), buf, positions.len());
        }
        Ok(Z2z4Status::Ok)
    })
}

/// Minimum Hamming distance of the Gray image and t = ⌊(d−1)/2⌋. Either
/// output may be null.
///
/// # Safety
/// `code` must be a valid handle; outputs must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_min_distance(code: *const Z2z4Code, d: *mut usize, t: *mut usize) -> Z2z4Status {
    guard(|| {
        let code = &borrow(code, "code")?.0;
        let dist = code.min_distance()?;
        if !d.is_null() {
            d.write(dist);
        }
        if !t.is_null() {
            t.write(code.error_capability()?);
        }
        Ok(Z2z4Status::Ok)
    })
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_is_binary_linear(code: *const Z2z4Code, out: *mut bool) -> Z2z4Status {
    guard(|| {
        write(out, borrow(code, "code")?.0.is_binary_linear(), "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// # Safety
/// `word` must hold `n` bytes; `code` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn z2z4_code_contains(
    code: *const Z2z4Code,
    word: *const u8,
    n: usize,
    out: *mut bool,
) -> Z2z4Status {
    guard(|| {
        let code = &borrow(code, "code")?.0;
        let x = bits_in(word, n, "word")?;
        write(out, code.contains(&x)?, "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Systematic encoding of `k` information bits into `out` (`cap` ≥ n).
///
/// # Safety
/// `info` must hold `k` bytes and `out` `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn z2z4_encode(
    code: *const Z2z4Code,
    info: *const u8,
    k: usize,
    out: *mut u8,
    cap: usize,
) -> Z2z4Status {
    guard(|| {
        let code = &borrow(code, "code")?.0;
        let x = z2z4::encode(&bits_in(info, k, "info")?, code)?;
        bits_out(&x, out, cap, "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Parses a PD-set file for codes of length `n`.
///
/// # Safety
/// `source` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn z2z4_pdset_new(source: *const c_char, n: usize, out: *mut *mut Z2z4PdSet) -> Z2z4Status {
    guard(|| {
        let set = decode::parse_pd_set(text(source, "source")?, n)?;
        write(out, Box::into_raw(Box::new(Z2z4PdSet(set))), "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Built-in PD-set by name: example3, example4.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn z2z4_pdset_preset(name: *const c_char, out: *mut *mut Z2z4PdSet) -> Z2z4Status {
    guard(|| {
        let set = presets::pd_set_by_name(text(name, "name")?)?;
        write(out, Box::into_raw(Box::new(Z2z4PdSet(set))), "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// # Safety
/// `set` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn z2z4_pdset_free(set: *mut Z2z4PdSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of permutations, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn z2z4_pdset_len(set: *const Z2z4PdSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// Exhaustively checks every error of weight ≤ t. Returns `Z2Z4_STATUS_OK`
/// when certified and `Z2Z4_STATUS_FAILURE` otherwise; in the latter case the
/// first uncovered error is written to `witness` if it is non-null.
///
/// # Safety
/// `set` must be valid; `witness` must be null or hold `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn z2z4_pdset_verify(set: *const Z2z4PdSet, witness: *mut u8, cap: usize) -> Z2z4Status {
    guard(|| {
        let set = &borrow(set, "set")?.0;
        match z2z4::verify_pd_set(set) {
            PdVerdict::Certified { .. } => Ok(Z2z4Status::Ok),
            PdVerdict::Failed { witness: e } => {
                if !witness.is_null() {
                    bits_out(&e, witness, cap, "witness")?;
                }
                set_last_error(format!("error {} is not moved off the information set", e));
                Ok(Z2z4Status::Failure)
            }
        }
    })
}

/// Decodes `n` received bits. On success the codeword goes to `codeword`
/// and the number of flipped bits to `errors` (may be null). Returns
/// `Z2Z4_STATUS_FAILURE` when more than t errors are detected.
///
/// # Safety
/// `received` must hold `n` bytes and `codeword` `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn z2z4_decode(
    code: *const Z2z4Code,
    set: *const Z2z4PdSet,
    method: Z2z4Method,
    received: *const u8,
    n: usize,
    codeword: *mut u8,
    cap: usize,
    errors: *mut usize,
) -> Z2z4Status {
    guard(|| {
        let code = &borrow(code, "code")?.0;
        let set = &borrow(set, "set")?.0;
        let y = bits_in(received, n, "received")?;
        let method = match method {
            Z2z4Method::Alternative => Method::Alternative,
            Z2z4Method::Syndrome => Method::Syndrome,
        };
        match decode::decode(code, set, &y, method)?.decoded() {
            Some(d) => {
                bits_out(&d.codeword, codeword, cap, "codeword")?;
                if !errors.is_null() {
                    errors.write(d.errors_corrected);
                }
                Ok(Z2z4Status::Ok)
            }
            None => {
                set_last_error("more than t errors".into());
                Ok(Z2z4Status::Failure)
            }
        }
    })
}

unsafe fn run_simulation(
    code: *const Z2z4Code,
    set: *const Z2z4PdSet,
    model: ErrorModel,
    trials: u64,
    seed: u64,
    out: *mut Z2z4SimReport,
) -> Z2z4Status {
    guard(|| {
        let r = z2z4::simulate(&borrow(code, "code")?.0, &borrow(set, "set")?.0, model, trials, seed)?;
        let report = Z2z4SimReport {
            trials: r.trials,
            successes: r.successes,
            failures: r.failures,
            miscorrections: r.miscorrections,
        };
        write(out, report, "out")?;
        Ok(Z2z4Status::Ok)
    })
}

/// Monte-Carlo run with error patterns of exactly `weight` bits.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn z2z4_simulate_weight(
    code: *const Z2z4Code,
    set: *const Z2z4PdSet,
    weight: usize,
    trials: u64,
    seed: u64,
    out: *mut Z2z4SimReport,
) -> Z2z4Status {
    run_simulation(code, set, ErrorModel::Weight { weight }, trials, seed, out)
}

/// Monte-Carlo run on a binary symmetric channel with flip probability `p`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn z2z4_simulate_flip(
    code: *const Z2z4Code,
    set: *const Z2z4PdSet,
    p: f64,
    trials: u64,
    seed: u64,
    out: *mut Z2z4SimReport,
) -> Z2z4Status {
    run_simulation(code, set, ErrorModel::Flip { p }, trials, seed, out)
}
