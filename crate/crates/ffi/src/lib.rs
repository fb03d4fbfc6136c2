//! C interface to the belief-change engine.
//!
//! Knowledge bases live behind an opaque [`BcKb`] handle. Every call returns a
//! [`BcStatus`]; on failure [`bc_last_error_message`] describes the problem.
//! Strings handed out by the library are JSON and must be released with
//! [`bc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use belief_change::cli::{contract_by_name, family_by_name, KbFile};
use belief_change::postulates::{Subject, SubjectKind};
use belief_change::semantics::models;
use belief_change::{verify, Error, Formula};

/// Status code returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    InputError = 1,
    LimitExceeded = 2,
    VerificationFailed = 3,
    NullPointer = 4,
    Panic = 5,
}

/// What a knowledge base denotes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcMode {
    Base = 0,
    PropSet = 1,
    HornSet = 2,
}

impl From<BcMode> for SubjectKind {
    fn from(m: BcMode) -> SubjectKind {
        match m {
            BcMode::Base => SubjectKind::Base,
            BcMode::PropSet => SubjectKind::PropSet,
            BcMode::HornSet => SubjectKind::HornSet,
        }
    }
}

/// A parsed knowledge base.
pub struct BcKb {
    subject: Subject,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

enum Failure {
    Status(BcStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F: FnOnce() -> Result<BcStatus, Failure>>(f: F) -> BcStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure::Status(status, message))) => {
            set_error(message);
            status
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            match e.exit_code() {
                2 => BcStatus::LimitExceeded,
                _ => BcStatus::InputError,
            }
        }
        Err(_) => {
            set_error("internal panic".into());
            BcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(BcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(BcStatus::InputError, format!("{what} is not UTF-8")))
}

unsafe fn kb_ref<'a>(kb: *const BcKb) -> Result<&'a BcKb, Failure> {
    kb.as_ref()
        .ok_or_else(|| Failure::Status(BcStatus::NullPointer, "knowledge base handle is null".into()))
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<BcStatus, Failure> {
    if out.is_null() {
        return Err(Failure::Status(BcStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure::Status(BcStatus::InputError, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(BcStatus::Ok)
}

fn parse_phi(kb: &BcKb, phi: &str) -> Result<Formula, Failure> {
    Ok(kb.subject.signature().parse(phi)?)
}

/// Parses knowledge-base text (a `sig:` line, then one formula per line).
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_kb_parse(source: *const c_char, mode: BcMode, out: *mut *mut BcKb) -> BcStatus {
    guard(|| {
        let source = text(source, "text")?;
        if out.is_null() {
            return Err(Failure::Status(BcStatus::NullPointer, "output pointer is null".into()));
        }
        let kb = KbFile::parse(source, "<input>")?;
        let subject = Subject::from_formulas(mode.into(), &kb.signature, &kb.formulas)?;
        *out = Box::into_raw(Box::new(BcKb { subject }));
        Ok(BcStatus::Ok)
    })
}

/// Releases a handle from [`bc_kb_parse`]. Null is ignored.
///
/// # Safety
/// `kb` must come from [`bc_kb_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_kb_free(kb: *mut BcKb) {
    if !kb.is_null() {
        drop(Box::from_raw(kb));
    }
}

/// Contracts by `phi` with a named method (`partial-meet`, `maxichoice`,
/// `full-meet`, `kernel`, `saturated-kernel`, `infra`, `orderly-maxichoice`)
/// using default choices. `out` receives a JSON array of formulas.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bc_contract(
    kb: *const BcKb,
    phi: *const c_char,
    method: *const c_char,
    out: *mut *mut c_char,
) -> BcStatus {
    guard(|| {
        let kb = kb_ref(kb)?;
        let phi = parse_phi(kb, text(phi, "phi")?)?;
        let result = contract_by_name(&kb.subject, &phi, text(method, "method")?)?;
        give_string(out, serde_json::to_string(&result).expect("strings serialize"))
    })
}

unsafe fn family(kb: *const BcKb, phi: *const c_char, name: &str, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let kb = kb_ref(kb)?;
        let phi = parse_phi(kb, text(phi, "phi")?)?;
        let members = family_by_name(&kb.subject, &phi, name)?;
        give_string(out, serde_json::to_string(&members).expect("strings serialize"))
    })
}

/// Remainders by `phi` as a JSON array of formula arrays.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bc_remainders(kb: *const BcKb, phi: *const c_char, out: *mut *mut c_char) -> BcStatus {
    family(kb, phi, "remainders", out)
}

/// Kernels for `phi` as a JSON array of formula arrays.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bc_kernels(kb: *const BcKb, phi: *const c_char, out: *mut *mut c_char) -> BcStatus {
    family(kb, phi, "kernels", out)
}

/// Infra remainders for `phi` as a JSON array of formula arrays.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bc_infra(kb: *const BcKb, phi: *const c_char, out: *mut *mut c_char) -> BcStatus {
    family(kb, phi, "infra", out)
}

/// Whether the knowledge base entails `phi`.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bc_entails(kb: *const BcKb, phi: *const c_char, out: *mut bool) -> BcStatus {
    guard(|| {
        let kb = kb_ref(kb)?;
        let phi = parse_phi(kb, text(phi, "phi")?)?;
        if out.is_null() {
            return Err(Failure::Status(BcStatus::NullPointer, "output pointer is null".into()));
        }
        let sig = kb.subject.signature();
        let have = match &kb.subject {
            Subject::Base(b) => b.models(),
            Subject::PropSet(k) => k.models(),
            Subject::HornSet(h) => h.models(),
        };
        *out = have.is_subset(&models([&phi], sig)?);
        Ok(BcStatus::Ok)
    })
}

/// Runs a verification suite (or `all`). `out` receives the text report.
/// Returns [`BcStatus::VerificationFailed`] when any case fails.
///
/// # Safety
/// `name` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bc_verify_suite(name: *const c_char, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let reports = verify::run(text(name, "suite name")?)?;
        let report: String = reports.iter().map(|r| r.to_string()).collect();
        give_string(out, report)?;
        if reports.iter().all(|r| r.pass()) {
            Ok(BcStatus::Ok)
        } else {
            set_error("verification failed".into());
            Ok(BcStatus::VerificationFailed)
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
