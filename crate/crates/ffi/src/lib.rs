//! C ABI over the `sasaki` engine.
//!
//! Manifolds live behind an opaque `SasakiManifold` handle. Every function
//! returns a `SasakiStatus`; on failure a message is available from
//! `sasaki_last_error` on the same thread until the next call. Rationals
//! cross the boundary as strings (`"3"`, `"-1/2"`). Strings returned
//! through `char **` out-parameters are owned by the caller and must be
//! released with `sasaki_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use sasaki::curvature::{levi_civita, Connection, CurvaturePack};
use sasaki::derived::PseudoProjectiveParams;
use sasaki::kernel::rat::{self, Rat};
use sasaki::manifold::{classify_contact, parse_manifold, FrameManifold};
use sasaki::report::{Report, SolitonDto};
use sasaki::soliton::{solve_soliton, verify_theorems, SolitonVariant};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SasakiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownName = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// Contact structure classification of a manifold.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SasakiStructureFlags {
    pub almost_contact_metric: bool,
    pub contact_metric: bool,
    pub killing_reeb: bool,
    pub k_contact: bool,
    pub normal: bool,
    pub sasakian: bool,
}

/// Opaque manifold handle with its connection and curvature precomputed.
pub struct SasakiManifold {
    manifold: FrameManifold,
    conn: Connection,
    pack: CurvaturePack,
}

impl SasakiManifold {
    fn new(manifold: FrameManifold) -> Self {
        let conn = levi_civita(&manifold);
        let pack = CurvaturePack::new(&manifold, &conn);
        Self { manifold, conn, pack }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(SasakiStatus, String);

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, records its error message, and converts panics to `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SasakiStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SasakiStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SasakiStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SasakiStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SasakiStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a>(p: *const SasakiManifold) -> Result<&'a SasakiManifold, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SasakiStatus::NullPointer, "manifold handle is null".into()))
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(SasakiStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn rational(p: *const c_char, what: &str) -> Result<Rat, Failure> {
    let s = text(p, what)?;
    rat::parse(s).map_err(|e| Failure(SasakiStatus::InvalidArgument, format!("{what}: {e}")))
}

unsafe fn params(a: *const c_char, b: *const c_char, r_override: *const c_char) -> Result<PseudoProjectiveParams, Failure> {
    let a = rational(a, "a")?;
    let b = rational(b, "b")?;
    let r = if r_override.is_null() {
        None
    } else {
        Some(rational(r_override, "r_override")?)
    };
    PseudoProjectiveParams::new(a, b, r).map_err(|e| Failure(SasakiStatus::InvalidArgument, e.to_string()))
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SasakiStatus::Panic, "output contains NUL".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Parses a manifold document. On success `*out` owns a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_manifold_from_json(json: *const c_char, out: *mut *mut SasakiManifold) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        let m = parse_manifold(text(json, "json")?).map_err(|e| Failure(SasakiStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(SasakiManifold::new(m)));
        Ok(())
    })
}

/// Loads a built-in manifold such as `"heisenberg5"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_manifold_builtin(name: *const c_char, out: *mut *mut SasakiManifold) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        let name = text(name, "name")?;
        let m = sasaki::builtins::manifold(name)
            .ok_or_else(|| Failure(SasakiStatus::UnknownName, format!("unknown built-in {name:?}")))?;
        *out = Box::into_raw(Box::new(SasakiManifold::new(m)));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sasaki_manifold_free(m: *mut SasakiManifold) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_manifold_dimension(m: *const SasakiManifold, out: *mut usize) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(m)?.manifold.dim();
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_manifold_classify(m: *const SasakiManifold, out: *mut SasakiStructureFlags) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(m)?;
        let c = classify_contact(&h.manifold, &h.conn);
        *out = SasakiStructureFlags {
            almost_contact_metric: c.almost_contact_metric.holds,
            contact_metric: c.contact_metric.holds,
            killing_reeb: c.killing_reeb.holds,
            k_contact: c.k_contact.holds,
            normal: c.normal.holds,
            sasakian: c.sasakian.holds,
        };
        Ok(())
    })
}

/// Solves the named soliton variant and writes a JSON object to `*out`.
///
/// # Safety
/// `m` must be a live handle, `variant` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_soliton_json(
    m: *const SasakiManifold,
    variant: *const c_char,
    out: *mut *mut c_char,
) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(m)?;
        let name = text(variant, "variant")?;
        let v = SolitonVariant::named(name)
            .ok_or_else(|| Failure(SasakiStatus::UnknownName, format!("unknown variant {name:?}")))?;
        let sol = solve_soliton(&h.manifold, &h.pack, &h.conn, &v);
        let json = serde_json::to_string(&SolitonDto::new(name, &sol)).expect("soliton serializes");
        give_string(json, out)
    })
}

/// Builds the full report as JSON. `r_override` may be null.
///
/// # Safety
/// `m` must be a live handle, `a` and `b` NUL-terminated strings,
/// `r_override` null or a NUL-terminated string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sasaki_report_json(
    m: *const SasakiManifold,
    a: *const c_char,
    b: *const c_char,
    r_override: *const c_char,
    out: *mut *mut c_char,
) -> SasakiStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(m)?;
        let p = params(a, b, r_override)?;
        give_string(Report::build(&h.manifold, &p).to_json(), out)
    })
}

/// Runs the theorem harness and writes the number of violations to
/// `*violations`.
///
/// # Safety
/// As for `sasaki_report_json`.
#[no_mangle]
pub unsafe extern "C" fn sasaki_check_theorems(
    m: *const SasakiManifold,
    a: *const c_char,
    b: *const c_char,
    r_override: *const c_char,
    violations: *mut usize,
) -> SasakiStatus {
    guard(|| {
        check_out(violations)?;
        let h = handle(m)?;
        let p = params(a, b, r_override)?;
        *violations = verify_theorems(&h.manifold, &h.pack, &h.conn, &p).violations().count();
        Ok(())
    })
}

/// Message for the last failed call on this thread, or `""`. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sasaki_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sasaki_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
