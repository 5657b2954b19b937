use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use sasaki_ffi::*;

fn builtin(name: &str) -> *mut SasakiManifold {
    let name = CString::new(name).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { sasaki_manifold_builtin(name.as_ptr(), &mut m) }, SasakiStatus::Ok);
    assert!(!m.is_null());
    m
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sasaki_last_error()) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { sasaki_string_free(p) };
    s
}

#[test]
fn builtin_dimension_and_classification() {
    let m = builtin("heisenberg5");
    let mut dim = 0usize;
    assert_eq!(unsafe { sasaki_manifold_dimension(m, &mut dim) }, SasakiStatus::Ok);
    assert_eq!(dim, 5);
    let mut flags = SasakiStructureFlags::default();
    assert_eq!(unsafe { sasaki_manifold_classify(m, &mut flags) }, SasakiStatus::Ok);
    assert!(flags.sasakian && flags.k_contact && flags.contact_metric);
    unsafe { sasaki_manifold_free(m) };

    let m = builtin("abelian5");
    assert_eq!(unsafe { sasaki_manifold_classify(m, &mut flags) }, SasakiStatus::Ok);
    assert!(flags.almost_contact_metric && !flags.contact_metric && !flags.sasakian);
    unsafe { sasaki_manifold_free(m) };
}

#[test]
fn soliton_json() {
    let m = builtin("heisenberg5");
    let variant = CString::new("star-conformal-eta").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sasaki_soliton_json(m, variant.as_ptr(), &mut out) }, SasakiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["lambda_shifted"], "5");
    assert_eq!(v["mu"], "-5");
    assert_eq!(v["constraint_satisfied"], true);

    let bad = CString::new("gradient").unwrap();
    assert_eq!(
        unsafe { sasaki_soliton_json(m, bad.as_ptr(), &mut out) },
        SasakiStatus::UnknownName
    );
    assert!(last_error().contains("gradient"));
    unsafe { sasaki_manifold_free(m) };
}

#[test]
fn report_and_theorems() {
    let m = builtin("sphere3");
    let (a, b) = (CString::new("1").unwrap(), CString::new("1").unwrap());
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { sasaki_report_json(m, a.as_ptr(), b.as_ptr(), ptr::null(), &mut out) },
        SasakiStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["curvature"]["ricci_class"]["einstein"]["alpha"], "2");

    let mut violations = usize::MAX;
    let r = CString::new("-1").unwrap();
    assert_eq!(
        unsafe { sasaki_check_theorems(m, a.as_ptr(), b.as_ptr(), r.as_ptr(), &mut violations) },
        SasakiStatus::Ok
    );
    assert_eq!(violations, 0);

    let zero = CString::new("0").unwrap();
    assert_eq!(
        unsafe { sasaki_check_theorems(m, zero.as_ptr(), b.as_ptr(), ptr::null(), &mut violations) },
        SasakiStatus::InvalidArgument
    );
    let junk = CString::new("1/0").unwrap();
    assert_eq!(
        unsafe { sasaki_report_json(m, junk.as_ptr(), b.as_ptr(), ptr::null(), &mut out) },
        SasakiStatus::InvalidArgument
    );
    unsafe { sasaki_manifold_free(m) };
}

#[test]
fn parse_errors_and_null_pointers() {
    let mut m = ptr::null_mut();
    let broken = CString::new(r#"{"name":"x","dimension":4,"brackets":[],"phi":[],"xi":[]}"#).unwrap();
    assert_eq!(
        unsafe { sasaki_manifold_from_json(broken.as_ptr(), &mut m) },
        SasakiStatus::ParseError
    );
    assert!(m.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { sasaki_manifold_from_json(ptr::null(), &mut m) },
        SasakiStatus::NullPointer
    );
    let unknown = CString::new("torus").unwrap();
    assert_eq!(
        unsafe { sasaki_manifold_builtin(unknown.as_ptr(), &mut m) },
        SasakiStatus::UnknownName
    );
    let mut dim = 0usize;
    assert_eq!(
        unsafe { sasaki_manifold_dimension(ptr::null(), &mut dim) },
        SasakiStatus::NullPointer
    );
    let h = builtin("sphere3");
    assert_eq!(
        unsafe { sasaki_manifold_dimension(h, ptr::null_mut()) },
        SasakiStatus::NullPointer
    );
    // A successful call clears the message.
    assert_eq!(unsafe { sasaki_manifold_dimension(h, &mut dim) }, SasakiStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        sasaki_manifold_free(h);
        sasaki_manifold_free(ptr::null_mut());
        sasaki_string_free(ptr::null_mut());
    }
}

#[test]
fn from_json_round_trip() {
    let text = sasaki::builtins::document("heisenberg3").unwrap().to_json();
    let json = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { sasaki_manifold_from_json(json.as_ptr(), &mut m) }, SasakiStatus::Ok);
    let mut flags = SasakiStructureFlags::default();
    assert_eq!(unsafe { sasaki_manifold_classify(m, &mut flags) }, SasakiStatus::Ok);
    assert!(flags.sasakian);
    unsafe { sasaki_manifold_free(m) };
}

#[test]
fn header_declares_the_abi() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/sasaki.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for symbol in [
        "typedef struct SasakiManifold SasakiManifold;",
        "SASAKI_STATUS_OK = 0",
        "SASAKI_STATUS_PANIC = 6",
        "sasaki_manifold_from_json(",
        "sasaki_manifold_builtin(",
        "sasaki_manifold_free(",
        "sasaki_manifold_dimension(",
        "sasaki_manifold_classify(",
        "sasaki_soliton_json(",
        "sasaki_report_json(",
        "sasaki_check_theorems(",
        "sasaki_last_error(void)",
        "sasaki_string_free(",
    ] {
        assert!(text.contains(symbol), "header lacks {symbol}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/sasaki.h");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("cc not found; skipping header compile check");
        return;
    };
    assert!(status.success(), "cc rejected {}", header.display());
}
