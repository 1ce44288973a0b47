use std::ffi::{CStr, CString};
use std::ptr;

use su2branch_ffi::*;

fn open(name: &str) -> *mut Su2Branching {
    let s = CString::new(name).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { su2_branching_open(s.as_ptr(), &mut h) }, Su2Status::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(su2_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn e8_params_and_rank() {
    let h = open("E8");
    let mut rank = 0;
    let mut p = Su2Params::default();
    unsafe {
        assert_eq!(su2_branching_rank(h, &mut rank), Su2Status::Ok);
        assert_eq!(su2_branching_params(h, &mut p), Su2Status::Ok);
        su2_branching_free(h);
    }
    assert_eq!(rank, 8);
    assert_eq!((p.a, p.b, p.h, p.g), (12, 20, 30, 15));
    assert_eq!((p.order_f, p.order_fstar, p.special_node), (60, 120, 4));
}

#[test]
fn zpoly_buffer_protocol() {
    let h = open("E8");
    let mut node = 0;
    let mut len = 0;
    unsafe {
        assert_eq!(su2_branching_find_node(h, 2, 1, &mut node), Su2Status::Ok);
        assert_eq!(node, 8);
        // size query
        assert_eq!(
            su2_branching_zpoly(h, node, ptr::null_mut(), 0, &mut len),
            Su2Status::BufferTooSmall
        );
        assert_eq!(len, 30);
        let mut buf = vec![0i64; len];
        assert_eq!(
            su2_branching_zpoly(h, node, buf.as_mut_ptr(), buf.len(), &mut len),
            Su2Status::Ok
        );
        let support: Vec<usize> = (0..len).filter(|&e| buf[e] != 0).collect();
        assert_eq!(support, vec![1, 11, 19, 29]);
        su2_branching_free(h);
    }
}

#[test]
fn series_matches_multiplicity() {
    let h = open("D5");
    let mut buf = [0i64; 41];
    let mut len = 0;
    unsafe {
        assert_eq!(
            su2_branching_series(h, 0, 40, buf.as_mut_ptr(), buf.len(), &mut len),
            Su2Status::Ok
        );
        assert_eq!(len, 41);
        for n in 0..=40 {
            let mut m = -1;
            assert_eq!(su2_branching_multiplicity(h, n, 0, &mut m), Su2Status::Ok);
            assert_eq!(m, buf[n]);
        }
        su2_branching_free(h);
    }
    assert_eq!(buf[0], 1);
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    let a4 = CString::new("A4").unwrap();
    let junk = CString::new("Q9").unwrap();
    unsafe {
        assert_eq!(su2_branching_open(a4.as_ptr(), &mut h), Su2Status::InvalidArgument);
        assert!(h.is_null());
        assert!(last_error().contains("A4"), "{}", last_error());
        assert_eq!(su2_branching_open(junk.as_ptr(), &mut h), Su2Status::InvalidArgument);
        assert_eq!(su2_branching_open(ptr::null(), &mut h), Su2Status::NullPointer);
        assert_eq!(su2_branching_rank(ptr::null(), ptr::null_mut()), Su2Status::NullPointer);

        let h = open("A3");
        let mut m = 0;
        assert_eq!(su2_branching_multiplicity(h, 2, 7, &mut m), Su2Status::InvalidArgument);
        assert!(!last_error().is_empty());
        assert_eq!(su2_branching_multiplicity(h, 2, 2, &mut m), Su2Status::Ok);
        assert_eq!(m, 2);
        assert!(last_error().is_empty());
        su2_branching_free(h);
        su2_branching_free(ptr::null_mut());
    }
}

#[test]
fn convention_tag() {
    let s = unsafe { CStr::from_ptr(su2_convention()) };
    assert_eq!(s.to_str().unwrap(), su2branch::NODE_CONVENTION);
}
