//! Exercises the C entry points exactly as a C caller would: through raw
//! pointers, status codes, and the paired free functions.

use std::ffi::{CStr, CString};
use std::ptr;

use tricluster_ffi::*;

const ANNULUS: &str = include_str!("../../../fixtures/annulus.srf");

fn parse(text: &str) -> *mut TriSurface {
    let c_text = CString::new(text).unwrap();
    let mut handle: *mut TriSurface = ptr::null_mut();
    let status = unsafe { tri_surface_parse(c_text.as_ptr(), &mut handle) };
    assert_eq!(status, TriStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn render(poly: *const TriPoly) -> String {
    let mut text: *mut std::os::raw::c_char = ptr::null_mut();
    assert_eq!(unsafe { tri_poly_render(poly, &mut text) }, TriStatus::Ok);
    let owned = unsafe { CStr::from_ptr(text) }
        .to_str()
        .unwrap()
        .to_string();
    unsafe { tri_string_free(text) };
    owned
}

fn last_error() -> String {
    let ptr = tri_last_error();
    assert!(!ptr.is_null());
    unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string()
}

#[test]
fn surface_round_trip_and_stats() {
    let s = parse(ANNULUS);
    assert_eq!(unsafe { tri_surface_rank(s) }, 3);
    let mut stats = TriStats {
        genus: 99,
        boundary_components: 0,
        marked_points: 0,
        internal_arcs: 0,
        boundary_arcs: 0,
        triangles: 0,
    };
    assert_eq!(unsafe { tri_surface_stats(s, &mut stats) }, TriStatus::Ok);
    assert_eq!(
        stats,
        TriStats {
            genus: 0,
            boundary_components: 2,
            marked_points: 3,
            internal_arcs: 3,
            boundary_arcs: 3,
            triangles: 3,
        }
    );
    let mut b = [0i64; 9];
    assert_eq!(
        unsafe { tri_surface_b_matrix(s, b.as_mut_ptr(), b.len()) },
        TriStatus::Ok
    );
    assert_eq!(b, [0, -1, 2, 1, 0, -1, -2, 1, 0]);
    unsafe { tri_surface_free(s) };
}

#[test]
fn expansion_and_vectors() {
    let s = parse(ANNULUS);
    let curve = CString::new("gamma2").unwrap();

    let mut poly: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_expand(s, curve.as_ptr(), &mut poly) },
        TriStatus::Ok
    );
    assert_eq!(
        render(poly),
        "x1^-1 + x1^-1*x2*x3^-2*y1 + 2*x1*x3^-2*y1*y3 + x1^3*x2^-1*x3^-2*y1*y3^2 \
         + x3^-1*y1*y2*y3 + x1^2*x2^-1*x3^-1*y1*y2*y3^2"
    );
    assert_eq!(unsafe { tri_poly_term_count(poly) }, 6);

    let mut f: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_f_polynomial(s, curve.as_ptr(), &mut f) },
        TriStatus::Ok
    );
    assert_eq!(
        render(f),
        "1 + y1 + 2*y1*y3 + y1*y3^2 + y1*y2*y3 + y1*y2*y3^2"
    );

    let mut ind = [0i64; 3];
    assert_eq!(
        unsafe { tri_index_vector(s, curve.as_ptr(), ind.as_mut_ptr(), 3) },
        TriStatus::Ok
    );
    assert_eq!(ind, [-1, 0, 0]);
    let mut g = [9i64; 3];
    assert_eq!(
        unsafe { tri_g_vector(s, curve.as_ptr(), g.as_mut_ptr(), 3) },
        TriStatus::Ok
    );
    assert_eq!(g, [-1, 0, 0]);

    // The flip-search variable agrees with the expansion.
    let mut oracle: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_oracle_variable(s, curve.as_ptr(), 18, &mut oracle) },
        TriStatus::Ok
    );
    assert!(unsafe { tri_poly_eq(oracle, poly) });

    unsafe {
        tri_poly_free(oracle);
        tri_poly_free(f);
        tri_poly_free(poly);
        tri_surface_free(s);
    }
}

#[test]
fn closed_set_count_is_a_decimal_string() {
    let s = parse(ANNULUS);
    let curve = CString::new("gamma1").unwrap();
    let mut text: *mut std::os::raw::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { tri_closed_set_count(s, curve.as_ptr(), &mut text) },
        TriStatus::Ok
    );
    assert_eq!(unsafe { CStr::from_ptr(text) }.to_str().unwrap(), "18");
    unsafe {
        tri_string_free(text);
        tri_surface_free(s);
    }
}

#[test]
fn poly_parse_round_trips() {
    let text = CString::new("x1^-1 + 2*x1*x2^-2*y1").unwrap();
    let mut poly: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_poly_parse(2, text.as_ptr(), &mut poly) },
        TriStatus::Ok
    );
    assert_eq!(render(poly), "x1^-1 + 2*x1*x2^-2*y1");
    unsafe { tri_poly_free(poly) };

    let bad = CString::new("x1^^2").unwrap();
    let mut out: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_poly_parse(2, bad.as_ptr(), &mut out) },
        TriStatus::ParseError
    );
    assert!(out.is_null());
    assert!(last_error().starts_with("laurent:"));
}

#[test]
fn status_codes_and_error_messages() {
    // Null arguments.
    let mut handle: *mut TriSurface = ptr::null_mut();
    assert_eq!(
        unsafe { tri_surface_parse(ptr::null(), &mut handle) },
        TriStatus::InvalidArgument
    );
    assert!(last_error().contains("must not be null"));

    // Parse errors carry the surface module's diagnostics.
    let junk = CString::new("arc only-half").unwrap();
    assert_eq!(
        unsafe { tri_surface_parse(junk.as_ptr(), &mut handle) },
        TriStatus::ParseError
    );
    assert!(last_error().starts_with("surface: parse error at line 1"));

    let s = parse(ANNULUS);

    // Unknown curves are domain errors.
    let missing = CString::new("missing").unwrap();
    let mut poly: *mut TriPoly = ptr::null_mut();
    assert_eq!(
        unsafe { tri_expand(s, missing.as_ptr(), &mut poly) },
        TriStatus::DomainError
    );
    assert!(last_error().contains("unknown curve"));

    // Exhausted searches are reported as NotFound, not as success.
    let winding = CString::new("gamma1").unwrap();
    assert_eq!(
        unsafe { tri_oracle_variable(s, winding.as_ptr(), 2, &mut poly) },
        TriStatus::NotFound
    );
    assert!(poly.is_null());

    // Length mismatches are invalid arguments.
    let curve = CString::new("gamma2").unwrap();
    let mut ind = [0i64; 2];
    assert_eq!(
        unsafe { tri_index_vector(s, curve.as_ptr(), ind.as_mut_ptr(), 2) },
        TriStatus::InvalidArgument
    );

    unsafe { tri_surface_free(s) };
}

#[test]
fn frees_accept_null() {
    unsafe {
        tri_surface_free(ptr::null_mut());
        tri_poly_free(ptr::null_mut());
        tri_string_free(ptr::null_mut());
    }
}
