use std::ffi::{CStr, CString};
use std::ptr;

use systolic_ffi::*;

fn parse(text: &str) -> *mut SystolicComplex {
    let t = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { systolic_complex_parse(t.as_ptr(), &mut out) }, SystolicStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(systolic_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn generate_and_classify_icosahedron() {
    let name = CString::new("icosahedron").unwrap();
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { systolic_complex_generate(name.as_ptr(), &mut x) }, SystolicStatus::Ok);
    assert_eq!(unsafe { systolic_complex_num_vertices(x) }, 12);
    let mut f = [0usize; 4];
    let mut len = 0;
    assert_eq!(unsafe { systolic_complex_f_vector(x, f.as_mut_ptr(), f.len(), &mut len) }, SystolicStatus::Ok);
    assert_eq!((len, &f[..3]), (3, &[12, 30, 20][..]));
    let mut v = SystolicVerdicts::default();
    assert_eq!(unsafe { systolic_classify(x, 10_000, &mut v) }, SystolicStatus::Ok);
    assert_eq!((v.flag, v.locally_5_large, v.locally_6_large, v.simply_connected), (1, 1, 0, 1));
    unsafe { systolic_complex_free(x) };
}

#[test]
fn error_codes_and_messages() {
    let bad = CString::new("s 0 1\ns 0 zz\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { systolic_complex_parse(bad.as_ptr(), &mut out) }, SystolicStatus::ParseError);
    assert!(out.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());
    let name = CString::new("blob").unwrap();
    assert_eq!(unsafe { systolic_complex_generate(name.as_ptr(), &mut out) }, SystolicStatus::InputError);
    assert_eq!(unsafe { systolic_complex_parse(ptr::null(), &mut out) }, SystolicStatus::NullPointer);
    assert_eq!(unsafe { systolic_complex_num_vertices(ptr::null()) }, 0);
    unsafe { systolic_complex_free(ptr::null_mut()) };
}

#[test]
fn helly_on_tetrahedron_faces() {
    let x = parse("s 0 1 2 3\n");
    let a = ["s 1 2 3", "s 0 2 3", "s 0 1 3", "s 0 1 2"].map(parse);
    let handles = a.map(|p| p as *const SystolicComplex);
    let mut v = [0u32; 4];
    let mut trivial = true;
    assert_eq!(unsafe { systolic_helly(x, handles.as_ptr(), v.as_mut_ptr(), &mut trivial) }, SystolicStatus::Ok);
    assert!(!trivial);
    assert_eq!(unsafe { systolic_verify_certificate(x, handles.as_ptr(), v.as_ptr()) }, SystolicStatus::Ok);
    let wrong = [0u32, 0, 0, 0];
    assert_eq!(unsafe { systolic_verify_certificate(x, handles.as_ptr(), wrong.as_ptr()) }, SystolicStatus::Rejected);
    assert!(last_error().contains("A0"));

    let broken = [parse("s 0 1"), parse("s 2 3"), a[2], a[3]].map(|p| p as *const SystolicComplex);
    assert_eq!(
        unsafe { systolic_helly(x, broken.as_ptr(), v.as_mut_ptr(), &mut trivial) },
        SystolicStatus::HypothesisFailure
    );
    unsafe {
        systolic_complex_free(broken[0] as *mut _);
        systolic_complex_free(broken[1] as *mut _);
        for p in a {
            systolic_complex_free(p);
        }
        systolic_complex_free(x);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/systolic.h")).unwrap();
    for sym in ["systolic_complex_parse", "systolic_helly", "systolic_verify_certificate", "SystolicStatus", "SystolicVerdicts"] {
        assert!(header.contains(sym), "{sym}");
    }
}
