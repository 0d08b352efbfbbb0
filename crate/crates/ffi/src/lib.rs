//! C interface to `qthpower`.
//!
//! Every entry point returns a [`QthStatus`]. On failure the message is
//! available from [`qth_last_error`] on the same thread until the next call.
//! Handles and strings returned through out-parameters are owned by the
//! caller and released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use qthpower::cli::{run_char0, run_charq, ProblemFile, Report};
use qthpower::closure::DEFAULT_MAX_ITER;
use qthpower::lifting::{mod_n, rat_recon, LiftConfig, PrimeSchedule};
use qthpower::polycore::parse_rational;
use qthpower::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QthStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    NotInvertible = 5,
    Reconstruction = 6,
    ComputationFailed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QthFormat {
    Text = 0,
    Structured = 1,
}

/// A parsed problem file.
pub struct QthProblem {
    inner: ProblemFile,
}

/// The result of a run together with its audit log.
pub struct QthReport {
    report: Report,
    log: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> QthStatus {
    match e {
        Error::Parse { .. } => QthStatus::Parse,
        Error::NotInvertible { .. } => QthStatus::NotInvertible,
        Error::Reconstruction { .. } => QthStatus::Reconstruction,
        Error::Input(_)
        | Error::Dimension { .. }
        | Error::NotPrime(_)
        | Error::Unsupported(_)
        | Error::DomainMismatch(_)
        | Error::DuplicateModulus(_)
        | Error::Degenerate(_) => QthStatus::InvalidInput,
        _ => QthStatus::ComputationFailed,
    }
}

struct Failure(QthStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> QthStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QthStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QthStatus::Panic
        }
    }
}

unsafe fn text_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(QthStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QthStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(QthStatus::NullArgument, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn string_out(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    check_out(out)?;
    let c = CString::new(s).map_err(|_| Failure(QthStatus::ComputationFailed, "interior NUL".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// The message of the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn qth_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse a problem file.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_problem_parse(text: *const c_char, out: *mut *mut QthProblem) -> QthStatus {
    guarded(|| {
        check_out(out)?;
        let text = text_arg(text, "text")?;
        let inner = ProblemFile::parse(text)?;
        write_out(out, QthProblem { inner });
        Ok(())
    })
}

/// # Safety
/// `problem` must come from [`qth_problem_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn qth_problem_free(problem: *mut QthProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Multi-modular run over the rationals. With `nprimes == 0` the primes
/// ascend from 5, at most `max_primes` of them; `max_iter == 0` selects the
/// default iteration bound. A rejected candidate is still returned with
/// status `Ok`; see [`qth_report_accepted`].
///
/// # Safety
/// `problem` must be a live handle, `primes` must point to `nprimes`
/// values (or be null when `nprimes` is 0), and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_run_char0(
    problem: *const QthProblem,
    primes: *const u64,
    nprimes: usize,
    max_primes: usize,
    max_iter: usize,
    out: *mut *mut QthReport,
) -> QthStatus {
    guarded(|| {
        check_out(out)?;
        let problem = problem
            .as_ref()
            .ok_or_else(|| Failure(QthStatus::NullArgument, "problem is null".into()))?;
        let schedule = if nprimes == 0 {
            PrimeSchedule::Ascending { start: 5 }
        } else if primes.is_null() {
            return Err(Failure(QthStatus::NullArgument, "primes is null".into()));
        } else {
            PrimeSchedule::Explicit(std::slice::from_raw_parts(primes, nprimes).to_vec())
        };
        let config = LiftConfig {
            primes: schedule,
            max_primes: if nprimes == 0 { max_primes } else { nprimes },
            max_iter: if max_iter == 0 { DEFAULT_MAX_ITER } else { max_iter },
        };
        let (report, log) = run_char0(&problem.inner, &config)?;
        write_out(out, QthReport { report, log });
        Ok(())
    })
}

/// Closure over `Z_q`.
///
/// # Safety
/// `problem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_run_charq(
    problem: *const QthProblem,
    q: u64,
    max_iter: usize,
    out: *mut *mut QthReport,
) -> QthStatus {
    guarded(|| {
        check_out(out)?;
        let problem = problem
            .as_ref()
            .ok_or_else(|| Failure(QthStatus::NullArgument, "problem is null".into()))?;
        let max_iter = if max_iter == 0 { DEFAULT_MAX_ITER } else { max_iter };
        let (report, log) = run_charq(&problem.inner, q, max_iter)?;
        write_out(out, QthReport { report, log });
        Ok(())
    })
}

/// Whether the report carries an accepted certificate (always true for
/// characteristic-q runs). Null gives false.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qth_report_accepted(report: *const QthReport) -> bool {
    report.as_ref().is_some_and(|r| r.report.accepted)
}

/// Render a report; free the string with [`qth_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_report_render(
    report: *const QthReport,
    format: QthFormat,
    out: *mut *mut c_char,
) -> QthStatus {
    guarded(|| {
        let r = report
            .as_ref()
            .ok_or_else(|| Failure(QthStatus::NullArgument, "report is null".into()))?;
        let text = match format {
            QthFormat::Text => r.report.to_text(),
            QthFormat::Structured => r.report.to_json(),
        };
        string_out(out, text)
    })
}

/// The audit log, one line per event.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_report_log(report: *const QthReport, out: *mut *mut c_char) -> QthStatus {
    guarded(|| {
        let r = report
            .as_ref()
            .ok_or_else(|| Failure(QthStatus::NullArgument, "report is null".into()))?;
        string_out(out, r.log.join("\n"))
    })
}

/// # Safety
/// `report` must come from a run function or be null.
#[no_mangle]
pub unsafe extern "C" fn qth_report_free(report: *mut QthReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Balanced image of the rational `value` (`a` or `a/b`) modulo `modulus`.
///
/// # Safety
/// Both inputs must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_mod_n(value: *const c_char, modulus: *const c_char, out: *mut *mut c_char) -> QthStatus {
    guarded(|| {
        let r = parse_rational(text_arg(value, "value")?)?;
        let n = parse_modulus(text_arg(modulus, "modulus")?)?;
        string_out(out, mod_n(&r, &n)?.to_string())
    })
}

/// Rational reconstruction of the integer `residue` modulo `modulus`, as
/// `a` or `a/b`.
///
/// # Safety
/// Both inputs must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qth_rat_recon(
    residue: *const c_char,
    modulus: *const c_char,
    out: *mut *mut c_char,
) -> QthStatus {
    guarded(|| {
        let c: BigInt = text_arg(residue, "residue")?
            .trim()
            .parse()
            .map_err(|_| Failure(QthStatus::Parse, "residue is not an integer".into()))?;
        let n = parse_modulus(text_arg(modulus, "modulus")?)?;
        string_out(out, rat_recon(&c, &n)?.to_string())
    })
}

fn parse_modulus(text: &str) -> Result<BigInt, Failure> {
    match text.trim().parse::<BigInt>() {
        Ok(n) if n > BigInt::from(1) => Ok(n),
        _ => Err(Failure(QthStatus::InvalidInput, format!("not a modulus: {text:?}"))),
    }
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn qth_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

