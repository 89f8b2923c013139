use std::ffi::{CStr, CString};
use std::ptr;

use z2z4_ffi::*;

fn code(name: &str) -> *mut Z2z4Code {
    let mut out = ptr::null_mut();
    let name = CString::new(name).unwrap();
    assert_eq!(unsafe { z2z4_code_preset(name.as_ptr(), &mut out) }, Z2z4Status::Ok);
    out
}

fn pdset(name: &str) -> *mut Z2z4PdSet {
    let mut out = ptr::null_mut();
    let name = CString::new(name).unwrap();
    assert_eq!(unsafe { z2z4_pdset_preset(name.as_ptr(), &mut out) }, Z2z4Status::Ok);
    out
}

fn last_error() -> String {
    let p = z2z4_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn bits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

#[test]
fn code_queries() {
    let c = code("example4");
    let mut ct = Z2z4CodeType::default();
    unsafe {
        assert_eq!(z2z4_code_type(c, &mut ct), Z2z4Status::Ok);
        assert_eq!(ct, Z2z4CodeType { alpha: 0, beta: 8, gamma: 1, delta: 2, kappa: 0 });
        assert_eq!(z2z4_code_length(c), 16);
        assert_eq!(z2z4_code_dimension(c), 5);

        let mut len = 0;
        assert_eq!(z2z4_code_info_set(c, ptr::null_mut(), 0, &mut len), Z2z4Status::BufferTooSmall);
        assert_eq!(len, 5);
        let mut buf = [0usize; 5];
        assert_eq!(z2z4_code_info_set(c, buf.as_mut_ptr(), buf.len(), &mut len), Z2z4Status::Ok);
        assert_eq!(buf, [11, 13, 14, 15, 16]);

        let (mut d, mut t) = (0, 0);
        assert_eq!(z2z4_code_min_distance(c, &mut d, &mut t), Z2z4Status::Ok);
        assert_eq!((d, t), (8, 3));
        let mut linear = false;
        assert_eq!(z2z4_code_is_binary_linear(c, &mut linear), Z2z4Status::Ok);
        assert!(linear);
        z2z4_code_free(c);
    }
}

#[test]
fn parse_encode_contains() {
    let src = CString::new("alpha 0 beta 4\nrows 2\n- | 3 2 1 0\n- | 2 3 0 1\n").unwrap();
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(z2z4_code_new(src.as_ptr(), &mut c), Z2z4Status::Ok);
        let info = bits("0101");
        let mut x = [0u8; 8];
        assert_eq!(z2z4_encode(c, info.as_ptr(), info.len(), x.as_mut_ptr(), x.len()), Z2z4Status::Ok);
        assert_eq!(x.to_vec(), bits("01010101"));
        let mut member = false;
        assert_eq!(z2z4_code_contains(c, x.as_ptr(), x.len(), &mut member), Z2z4Status::Ok);
        assert!(member);
        x[7] ^= 1;
        assert_eq!(z2z4_code_contains(c, x.as_ptr(), x.len(), &mut member), Z2z4Status::Ok);
        assert!(!member);

        let mut short = [0u8; 4];
        assert_eq!(z2z4_encode(c, info.as_ptr(), 4, short.as_mut_ptr(), short.len()), Z2z4Status::BufferTooSmall);
        z2z4_code_free(c);
    }
}

#[test]
fn errors_are_reported() {
    let mut c = ptr::null_mut();
    let bad = CString::new("alpha 0 beta 4\nrows 1\n- | 3 2 1\n").unwrap();
    unsafe {
        assert_eq!(z2z4_code_new(bad.as_ptr(), &mut c), Z2z4Status::Parse);
        assert!(last_error().contains("line 3"));
        assert!(c.is_null());
        assert_eq!(z2z4_code_new(ptr::null(), &mut c), Z2z4Status::NullPointer);
        let name = CString::new("nope").unwrap();
        assert_eq!(z2z4_code_preset(name.as_ptr(), &mut c), Z2z4Status::InvalidArgument);
        assert_eq!(z2z4_code_type(ptr::null(), ptr::null_mut()), Z2z4Status::NullPointer);
        assert_eq!(z2z4_code_length(ptr::null()), 0);
        z2z4_code_free(ptr::null_mut());
        z2z4_pdset_free(ptr::null_mut());

        let ok = code("example3");
        assert_eq!(z2z4_code_length(ok), 8);
        let info = [0u8, 1, 2, 1];
        let mut x = [0u8; 8];
        assert_eq!(z2z4_encode(ok, info.as_ptr(), 4, x.as_mut_ptr(), 8), Z2z4Status::InvalidArgument);
        z2z4_code_free(ok);
    }
    // a successful call clears the message
    let c = code("example3");
    assert!(z2z4_last_error().is_null());
    unsafe { z2z4_code_free(c) };
}

#[test]
fn decoding() {
    let c = code("example3");
    let s = pdset("example3");
    unsafe {
        assert_eq!(z2z4_pdset_len(s), 3);
        assert_eq!(z2z4_pdset_verify(s, ptr::null_mut(), 0), Z2z4Status::Ok);
        for method in [Z2z4Method::Alternative, Z2z4Method::Syndrome] {
            let y = bits("01010100");
            let mut x = [0u8; 8];
            let mut errors = 0;
            let status = z2z4_decode(c, s, method, y.as_ptr(), y.len(), x.as_mut_ptr(), x.len(), &mut errors);
            assert_eq!(status, Z2z4Status::Ok);
            assert_eq!(x.to_vec(), bits("01010101"));
            assert_eq!(errors, 1);
        }
        let y = bits("11010100");
        let mut x = [0u8; 8];
        let status = z2z4_decode(c, s, Z2z4Method::Alternative, y.as_ptr(), 8, x.as_mut_ptr(), 8, ptr::null_mut());
        assert_eq!(status, Z2z4Status::Failure);
        z2z4_pdset_free(s);
        z2z4_code_free(c);
    }
}

#[test]
fn pdset_verification_and_gating() {
    let text = CString::new("info_set: 5,6,7,8\nt: 1\n()\n").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(z2z4_pdset_new(text.as_ptr(), 8, &mut s), Z2z4Status::Ok);
        let mut witness = [0u8; 8];
        assert_eq!(z2z4_pdset_verify(s, witness.as_mut_ptr(), 8), Z2z4Status::Failure);
        assert_eq!(witness.to_vec(), bits("00001000"));
        z2z4_pdset_free(s);

        let nl = code("nonlinear");
        let text = CString::new("info_set: 1,2,3,4,5,6,7,8,9,10\nt: 0\n()\n").unwrap();
        assert_eq!(z2z4_pdset_new(text.as_ptr(), 10, &mut s), Z2z4Status::Ok);
        let y = [0u8; 10];
        let mut x = [0u8; 10];
        let status = z2z4_decode(nl, s, Z2z4Method::Syndrome, y.as_ptr(), 10, x.as_mut_ptr(), 10, ptr::null_mut());
        assert_eq!(status, Z2z4Status::Config);
        z2z4_pdset_free(s);
        z2z4_code_free(nl);
    }
}

#[test]
fn simulation() {
    let c = code("example4");
    let s = pdset("example4");
    let (mut a, mut b) = (Z2z4SimReport::default(), Z2z4SimReport::default());
    unsafe {
        assert_eq!(z2z4_simulate_weight(c, s, 3, 400, 5, &mut a), Z2z4Status::Ok);
        assert_eq!(a.successes, 400);
        assert_eq!(z2z4_simulate_flip(c, s, 0.2, 400, 5, &mut a), Z2z4Status::Ok);
        assert_eq!(z2z4_simulate_flip(c, s, 0.2, 400, 5, &mut b), Z2z4Status::Ok);
        assert_eq!(a, b);
        assert_eq!(a.successes + a.failures + a.miscorrections, 400);
        assert_eq!(z2z4_simulate_flip(c, s, 2.0, 10, 5, &mut a), Z2z4Status::InvalidArgument);
        z2z4_pdset_free(s);
        z2z4_code_free(c);
    }
}
