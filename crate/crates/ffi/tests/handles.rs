use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fplab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    fplab_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(fplab_last_error())
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn ring(p: u64, vars: &str) -> *mut FplabRing {
    let mut r = ptr::null_mut();
    assert_eq!(
        fplab_ring_new(p, c(vars).as_ptr(), ptr::null(), &mut r),
        FplabStatus::Ok
    );
    r
}

unsafe fn ideal(r: *const FplabRing, gens: &str) -> *mut FplabIdeal {
    let mut i = ptr::null_mut();
    assert_eq!(
        fplab_ideal_parse(r, c(gens).as_ptr(), &mut i),
        FplabStatus::Ok,
        "{}",
        last_error()
    );
    i
}

unsafe fn poly(r: *const FplabRing, text: &str) -> *mut FplabPoly {
    let mut f = ptr::null_mut();
    assert_eq!(
        fplab_poly_parse(r, c(text).as_ptr(), &mut f),
        FplabStatus::Ok,
        "{}",
        last_error()
    );
    f
}

#[test]
fn example1_invariants_through_handles() {
    unsafe {
        let r = ring(2, "x,y,u,v");
        let i = ideal(r, "x*v*(y-u), y*u*(x-v), y*u*v*(y-u), x*u*v*(x-v)");
        let (mut e, mut d, mut v) = (0u64, 0u64, 0u64);
        assert_eq!(fplab_multiplicity(i, &mut e), FplabStatus::Ok);
        assert_eq!(fplab_dimension(i, &mut d), FplabStatus::Ok);
        assert_eq!(fplab_embedding_dimension(i, &mut v), FplabStatus::Ok);
        assert_eq!((e, d, v), (7, 2, 4));
        let mut s = ptr::null_mut();
        assert_eq!(fplab_ideal_groebner_basis(i, &mut s), FplabStatus::Ok);
        assert!(take(s).starts_with("x*y*v + x*u*v"));
        fplab_ideal_free(i);
        fplab_ring_free(r);
    }
}

#[test]
fn membership_and_binary_ops() {
    unsafe {
        let r = ring(2, "x,y");
        let a = ideal(r, "x");
        let b = ideal(r, "y");
        let mut meet = ptr::null_mut();
        assert_eq!(
            fplab_ideal_binary(FplabIdealOp::Intersect, a, b, &mut meet),
            FplabStatus::Ok
        );
        let xy = ideal(r, "x*y");
        let mut eq = false;
        assert_eq!(fplab_ideal_equal(meet, xy, &mut eq), FplabStatus::Ok);
        assert!(eq);
        let f = poly(r, "x^2*y + x*y^2");
        let mut member = false;
        assert_eq!(fplab_ideal_contains(meet, f, &mut member), FplabStatus::Ok);
        assert!(member);
        let mut s = ptr::null_mut();
        assert_eq!(fplab_poly_to_string(f, &mut s), FplabStatus::Ok);
        assert_eq!(take(s), "x^2*y + x*y^2");
        let mut q = ptr::null_mut();
        assert_eq!(
            fplab_ideal_binary(FplabIdealOp::Colon, xy, b, &mut q),
            FplabStatus::Ok
        );
        assert_eq!(fplab_ideal_equal(q, a, &mut eq), FplabStatus::Ok);
        assert!(eq);
        for h in [a, b, meet, xy, q] {
            fplab_ideal_free(h);
        }
        fplab_poly_free(f);
        fplab_ring_free(r);
    }
}

#[test]
fn frobenius_entry_points() {
    unsafe {
        let r = ring(2, "x,y");
        let f = poly(r, "x*y");
        let mut eta = 99;
        assert_eq!(fplab_hsl_number(f, 4, &mut eta), FplabStatus::Ok);
        assert_eq!(eta, 0);
        let i = ideal(r, "x*y");
        let mut pure = false;
        assert_eq!(fplab_fedder_is_fpure(i, &mut pure), FplabStatus::Ok);
        assert!(pure);
        let m = ideal(r, "x, y");
        let mut sq = ptr::null_mut();
        assert_eq!(
            fplab_frobenius(FplabFrobeniusOp::BracketPower, m, 1, &mut sq),
            FplabStatus::Ok
        );
        let mut back = ptr::null_mut();
        assert_eq!(
            fplab_frobenius(FplabFrobeniusOp::Root, sq, 1, &mut back),
            FplabStatus::Ok
        );
        let mut eq = false;
        assert_eq!(fplab_ideal_equal(back, m, &mut eq), FplabStatus::Ok);
        assert!(eq);
        let j = ideal(r, "x + y");
        let x2 = poly(r, "x^2");
        let mut we = 99;
        assert_eq!(
            fplab_in_frobenius_closure(x2, j, i, 2, &mut we),
            FplabStatus::Ok
        );
        assert_eq!(we, 1);
        let mut len = 0;
        let mut finite = false;
        assert_eq!(fplab_length(sq, &mut len, &mut finite), FplabStatus::Ok);
        assert_eq!((len, finite), (4, true));
        assert_eq!(fplab_length(i, &mut len, &mut finite), FplabStatus::Ok);
        assert!(!finite);
        for h in [i, m, sq, back, j] {
            fplab_ideal_free(h);
        }
        fplab_poly_free(f);
        fplab_poly_free(x2);
        fplab_ring_free(r);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(
            fplab_ring_new(4, c("x").as_ptr(), ptr::null(), &mut r),
            FplabStatus::NotPrime
        );
        assert!(last_error().contains("not a prime"));
        assert_eq!(
            fplab_ring_new(2, c("x").as_ptr(), c("deglex").as_ptr(), &mut r),
            FplabStatus::InvalidArgument
        );
        assert_eq!(
            fplab_ring_new(2, ptr::null(), ptr::null(), &mut r),
            FplabStatus::NullPointer
        );
        let r = ring(2, "x,y");
        let mut f = ptr::null_mut();
        assert_eq!(
            fplab_poly_parse(r, c("x**y").as_ptr(), &mut f),
            FplabStatus::Syntax
        );
        assert!(last_error().contains("column"), "{}", last_error());
        assert_eq!(
            fplab_poly_parse(r, c("z").as_ptr(), &mut f),
            FplabStatus::Syntax
        );
        let other = ring(3, "x,y");
        let a = ideal(r, "x");
        let b = ideal(other, "x");
        let mut out = ptr::null_mut();
        assert_eq!(
            fplab_ideal_binary(FplabIdealOp::Sum, a, b, &mut out),
            FplabStatus::ContextMismatch
        );
        let inhom = ideal(r, "x + y^2");
        let mut e = 0;
        assert_eq!(
            fplab_multiplicity(inhom, &mut e),
            FplabStatus::NotHomogeneous
        );
        let unit = ideal(r, "1");
        let mut pure = false;
        assert_eq!(
            fplab_fedder_is_fpure(unit, &mut pure),
            FplabStatus::UnitIdeal
        );
        assert_eq!(
            fplab_multiplicity(a, ptr::null_mut()),
            FplabStatus::NullPointer
        );
        assert_eq!(fplab_multiplicity(a, &mut e), FplabStatus::Ok);
        assert_eq!(last_error(), "");
        for h in [a, b, inhom, unit] {
            fplab_ideal_free(h);
        }
        fplab_ring_free(r);
        fplab_ring_free(other);
        fplab_string_free(ptr::null_mut());
    }
}

#[test]
fn suites_through_the_abi() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut ok = false;
        assert_eq!(
            fplab_run_suite(c("example1").as_ptr(), 4, 10, &mut json, &mut ok),
            FplabStatus::Ok
        );
        assert!(ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 4);
        assert_eq!(
            fplab_run_suite(c("example9").as_ptr(), 4, 10, &mut json, &mut ok),
            FplabStatus::InvalidArgument
        );
        let version = CStr::from_ptr(fplab_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}
