use std::ffi::{c_char, CStr, CString};
use std::ptr;

use belief_change_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    bc_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = bc_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn parse(text: &str, mode: BcMode) -> *mut BcKb {
    let mut kb = ptr::null_mut();
    assert_eq!(bc_kb_parse(c(text).as_ptr(), mode, &mut kb), BcStatus::Ok);
    kb
}

#[test]
fn horn_contraction_through_the_c_interface() {
    unsafe {
        let kb = parse("sig: p, q, r\np -> q\nq -> r\n", BcMode::HornSet);
        let mut out = ptr::null_mut();
        assert_eq!(bc_contract(kb, c("p -> r").as_ptr(), c("full-meet").as_ptr(), &mut out), BcStatus::Ok);
        assert_eq!(take(out), r#"["p & r -> q"]"#);

        assert_eq!(bc_remainders(kb, c("p -> r").as_ptr(), &mut out), BcStatus::Ok);
        assert_eq!(take(out), r#"[["p -> q"],["q -> r","p & r -> q"]]"#);

        assert_eq!(bc_infra(kb, c("p -> r").as_ptr(), &mut out), BcStatus::Ok);
        let members: Vec<Vec<String>> = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(members.len(), 4);

        let mut yes = false;
        assert_eq!(bc_entails(kb, c("p & q -> r").as_ptr(), &mut yes), BcStatus::Ok);
        assert!(yes);
        assert_eq!(bc_entails(kb, c("r -> p").as_ptr(), &mut yes), BcStatus::Ok);
        assert!(!yes);
        bc_kb_free(kb);
    }
}

#[test]
fn base_kernels() {
    unsafe {
        let kb = parse("sig: p, q\np\np | q\np <-> q\n", BcMode::Base);
        let mut out = ptr::null_mut();
        assert_eq!(bc_kernels(kb, c("p & q").as_ptr(), &mut out), BcStatus::Ok);
        assert_eq!(take(out), r#"[["p","p <-> q"],["p | q","p <-> q"]]"#);
        bc_kb_free(kb);
    }
}

#[test]
fn errors_are_reported_by_status_and_message() {
    unsafe {
        let mut kb = ptr::null_mut();
        assert_eq!(bc_kb_parse(c("sig: p\np &\n").as_ptr(), BcMode::Base, &mut kb), BcStatus::InputError);
        assert!(kb.is_null());
        assert!(last_error().starts_with("<input>:2:"), "{}", last_error());

        assert_eq!(bc_kb_parse(ptr::null(), BcMode::Base, &mut kb), BcStatus::NullPointer);
        assert_eq!(
            bc_kb_parse(c("sig: a, b, c, d, e\na\n").as_ptr(), BcMode::PropSet, &mut kb),
            BcStatus::LimitExceeded
        );

        let kb = parse("sig: p\np\n", BcMode::Base);
        let mut out = ptr::null_mut();
        assert_eq!(bc_contract(kb, c("p").as_ptr(), c("sideways").as_ptr(), &mut out), BcStatus::InputError);
        assert!(last_error().contains("sideways"));
        assert_eq!(bc_contract(ptr::null(), c("p").as_ptr(), c("kernel").as_ptr(), &mut out), BcStatus::NullPointer);
        assert_eq!(bc_contract(kb, c("p").as_ptr(), c("kernel").as_ptr(), &mut out), BcStatus::Ok);
        assert_eq!(take(out), "[]");
        assert!(bc_last_error_message().is_null());
        bc_kb_free(kb);
        bc_kb_free(ptr::null_mut());
        bc_string_free(ptr::null_mut());
    }
}

#[test]
fn verification_suites() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(bc_verify_suite(c("non-decomposability").as_ptr(), &mut out), BcStatus::Ok);
        assert!(take(out).ends_with("non-decomposability: 2/2 passed\n"));
        assert_eq!(bc_verify_suite(c("nope").as_ptr(), &mut out), BcStatus::InputError);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/belief_change.h");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = std::process::Command::new(&cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status();
    match status {
        Ok(s) => assert!(s.success(), "{header} does not compile"),
        Err(e) => eprintln!("skipping header check: {cc}: {e}"),
    }
}
