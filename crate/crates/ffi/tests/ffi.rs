use std::ffi::{c_char, CStr, CString};
use std::ptr;

use arithnull_ffi::*;

fn parse(text: &str, n: usize) -> *mut ArithnullPoly {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { arithnull_poly_parse(c.as_ptr(), n, &mut out) }, ArithnullStatus::Ok);
    out
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { arithnull_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(arithnull_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn parse_print_and_degree() {
    let p = parse("3*x1 + 7", 1);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { arithnull_poly_to_string(p, &mut s) }, ArithnullStatus::Ok);
    assert_eq!(take_string(s), "3*x1 + 7");
    assert_eq!(unsafe { arithnull_poly_degree(p) }, 1);
    assert_eq!(unsafe { arithnull_poly_degree(ptr::null()) }, -1);
    unsafe { arithnull_poly_free(p) };
}

#[test]
fn errors_carry_status_and_message() {
    let bad = CString::new("x1 +* 2").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { arithnull_poly_parse(bad.as_ptr(), 1, &mut out) }, ArithnullStatus::Parse);
    assert!(last_error().contains("parse"), "{}", last_error());
    assert!(out.is_null());
    assert_eq!(unsafe { arithnull_poly_parse(ptr::null(), 1, &mut out) }, ArithnullStatus::NullPointer);
    let p = parse("x1", 1);
    assert_eq!(unsafe { arithnull_poly_to_string(p, ptr::null_mut()) }, ArithnullStatus::NullPointer);
    unsafe { arithnull_poly_free(p) };
    // a success clears the message
    let q = parse("x1", 1);
    assert_eq!(last_error(), "");
    unsafe { arithnull_poly_free(q) };
}

#[test]
fn height_and_volume() {
    let p = parse("3*x1 + 7", 1);
    let ps = [p as *const ArithnullPoly];
    let mut h = 0.0;
    assert_eq!(unsafe { arithnull_global_height(ps.as_ptr(), 1, &mut h) }, ArithnullStatus::Ok);
    assert!((h - 7f64.ln()).abs() < 1e-15);
    let mut v = 0;
    assert_eq!(unsafe { arithnull_normalized_volume(ps.as_ptr(), 1, 0, &mut v) }, ArithnullStatus::Ok);
    assert_eq!(v, 1);
    let (mut m, mut se) = (0.0, 1.0);
    assert_eq!(unsafe { arithnull_mahler(p, 1000, 0, &mut m, &mut se) }, ArithnullStatus::Ok);
    assert!((m - 7f64.ln()).abs() < 1e-9 && se == 0.0);
    unsafe { arithnull_poly_free(p) };
}

#[test]
fn bound_report_as_json() {
    let st = CString::new("theorem1").unwrap();
    let inputs = CString::new(r#"{"n": "2", "d": 3}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { arithnull_bound(st.as_ptr(), inputs.as_ptr(), &mut out) }, ArithnullStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["degree_bound"], 72);
    let bad = CString::new("[1]").unwrap();
    assert_eq!(unsafe { arithnull_bound(st.as_ptr(), bad.as_ptr(), &mut out) }, ArithnullStatus::Parse);
}

#[test]
fn certificate_round_trip() {
    let fs = [parse("x1 - 1", 2), parse("x2 - x1^2", 2), parse("3 - x2^2", 2)];
    let handles: Vec<*const ArithnullPoly> = fs.iter().map(|&p| p as *const _).collect();
    let mut cert = ptr::null_mut();
    let st = unsafe { arithnull_certificate_search(handles.as_ptr(), 3, -1, &mut cert) };
    assert_eq!(st, ArithnullStatus::Ok, "{}", last_error());
    let mut degree = u32::MAX;
    assert_eq!(unsafe { arithnull_certificate_verify(cert, handles.as_ptr(), 3, &mut degree) }, ArithnullStatus::Ok);
    assert!(degree <= 4 * 2 * 4);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { arithnull_certificate_to_json(cert, &mut json) }, ArithnullStatus::Ok);
    let text = CString::new(take_string(json)).unwrap();
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { arithnull_certificate_from_json(text.as_ptr(), &mut again) }, ArithnullStatus::Ok);
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { arithnull_certificate_a(again, &mut a) }, ArithnullStatus::Ok);
    let a: i64 = take_string(a).parse().unwrap();
    assert_ne!(a, 0);
    // against a different system the identity fails
    let other = [parse("x1 - 2", 2), parse("x2", 2), parse("1", 2)];
    let oh: Vec<*const ArithnullPoly> = other.iter().map(|&p| p as *const _).collect();
    let st = unsafe { arithnull_certificate_verify(again, oh.as_ptr(), 3, ptr::null_mut()) };
    assert_eq!(st, ArithnullStatus::VerificationFailed);
    unsafe {
        arithnull_certificate_free(cert);
        arithnull_certificate_free(again);
        for p in fs.into_iter().chain(other) {
            arithnull_poly_free(p);
        }
    }
}

#[test]
fn infeasible_with_common_zero() {
    let fs = [parse("x1 - 1", 1), parse("x1^2 - 1", 1)];
    let handles: Vec<*const ArithnullPoly> = fs.iter().map(|&p| p as *const _).collect();
    let mut cert = ptr::null_mut();
    let st = unsafe { arithnull_certificate_search(handles.as_ptr(), 2, 3, &mut cert) };
    assert_eq!(st, ArithnullStatus::Infeasible);
    assert!(cert.is_null());
    unsafe { fs.into_iter().for_each(|p| arithnull_poly_free(p)) };
}

#[test]
fn division_modulo_sqrt2() {
    let ideal = [parse("x1^2 - 2", 1)];
    let ih: Vec<*const ArithnullPoly> = ideal.iter().map(|&p| p as *const _).collect();
    let f = parse("x1 + 1", 1);
    let g = parse("1", 1);
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { arithnull_divide(ih.as_ptr(), 1, f, g, &mut q) }, ArithnullStatus::Ok, "{}", last_error());
    // (x + 1)(x − 1) = x² − 1 ≡ 1
    let mut s = ptr::null_mut();
    unsafe { arithnull_poly_to_string(q, &mut s) };
    assert_eq!(take_string(s), "x1 - 1");
    let zero_divisor = parse("x1^2 - 2", 1);
    assert_eq!(unsafe { arithnull_divide(ih.as_ptr(), 1, zero_divisor, g, &mut q) }, ArithnullStatus::Failed);
    unsafe {
        for p in [ideal[0], f, g, zero_divisor] {
            arithnull_poly_free(p);
        }
    }
}
