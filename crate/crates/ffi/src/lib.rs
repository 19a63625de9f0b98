//! C interface to the tricluster library.
//!
//! Surfaces and Laurent polynomials are exposed as opaque handles created
//! and destroyed by paired functions (`tri_surface_parse` /
//! `tri_surface_free`, and so on). Every fallible function returns a
//! [`TriStatus`]; on failure a human-readable message is stored in
//! thread-local state and can be read with [`tri_last_error`] until the next
//! failing call on the same thread. Strings returned through out-pointers
//! are owned by the caller and must be released with [`tri_string_free`].
//!
//! All entry points catch panics and convert them into
//! [`TriStatus::InternalError`], so no unwind ever crosses the boundary.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use tricluster::cluster::ClusterError;
use tricluster::expansion::{self, ExpansionError};
use tricluster::laurent::LaurentPoly;
use tricluster::surface::{Surface, SurfaceError};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriStatus {
    /// Success.
    Ok = 0,
    /// A required pointer was null or a length did not match.
    InvalidArgument = 1,
    /// The input text could not be parsed.
    ParseError = 2,
    /// The request was well-formed but impossible (unknown curve, invalid
    /// surface, routes disagreeing, boundary curve passed to the oracle).
    DomainError = 3,
    /// The flip search exhausted its depth without finding the variable.
    NotFound = 4,
    /// A panic was caught at the boundary; this is a bug in the library.
    InternalError = 5,
}

/// Opaque handle to a parsed surface and its named curves.
pub struct TriSurface {
    inner: Surface,
}

/// Opaque handle to an exact Laurent polynomial.
pub struct TriPoly {
    inner: LaurentPoly,
}

/// Topological summary of a surface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriStats {
    pub genus: u32,
    pub boundary_components: u32,
    pub marked_points: u32,
    pub internal_arcs: u32,
    pub boundary_arcs: u32,
    pub triangles: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn fail(status: TriStatus, message: String) -> TriStatus {
    set_error(message);
    status
}

fn surface_status(e: &SurfaceError) -> TriStatus {
    match e {
        SurfaceError::Parse { .. } => TriStatus::ParseError,
        _ => TriStatus::DomainError,
    }
}

fn expansion_status(e: &ExpansionError) -> TriStatus {
    match e {
        ExpansionError::Cluster(ClusterError::NotFound { .. }) => TriStatus::NotFound,
        ExpansionError::Path(_) | ExpansionError::Laurent(_) => TriStatus::DomainError,
        _ => TriStatus::DomainError,
    }
}

/// Run a body with a panic guard so unwinding never crosses the C boundary.
fn guarded(body: impl FnOnce() -> TriStatus) -> TriStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            fail(
                TriStatus::InternalError,
                format!("internal panic: {message}"),
            )
        }
    }
}

/// Read a required UTF-8 C string argument.
///
/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn text_arg(ptr: *const c_char, what: &str) -> Result<String, TriStatus> {
    if ptr.is_null() {
        return Err(fail(
            TriStatus::InvalidArgument,
            format!("{what} must not be null"),
        ));
    }
    match unsafe { CStr::from_ptr(ptr) }.to_str() {
        Ok(s) => Ok(s.to_string()),
        Err(_) => Err(fail(
            TriStatus::InvalidArgument,
            format!("{what} must be valid UTF-8"),
        )),
    }
}

fn null_arg(what: &str) -> TriStatus {
    fail(
        TriStatus::InvalidArgument,
        format!("{what} must not be null"),
    )
}

/// The message of the most recent failure on this thread, or null if no
/// failure has occurred. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn tri_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Parse a surface document into a new handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
/// On success `*out` owns the surface and must be released with
/// [`tri_surface_free`].
#[no_mangle]
pub unsafe extern "C" fn tri_surface_parse(
    text: *const c_char,
    out: *mut *mut TriSurface,
) -> TriStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match unsafe { text_arg(text, "text") } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Surface::parse(&text) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(TriSurface { inner })) };
                TriStatus::Ok
            }
            Err(e) => fail(surface_status(&e), e.to_string()),
        }
    })
}

/// Release a surface handle. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer returned by [`tri_surface_parse`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn tri_surface_free(s: *mut TriSurface) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Number of internal arcs (exchange directions); 0 for a null handle.
///
/// # Safety
/// `s` must be null or a valid surface handle.
#[no_mangle]
pub unsafe extern "C" fn tri_surface_rank(s: *const TriSurface) -> u32 {
    if s.is_null() {
        return 0;
    }
    unsafe { &*s }.inner.rank() as u32
}

/// Fill `*out` with the topological summary of the surface.
///
/// # Safety
/// `s` must be a valid surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tri_surface_stats(s: *const TriSurface, out: *mut TriStats) -> TriStatus {
    guarded(|| {
        if s.is_null() {
            return null_arg("surface");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let st = unsafe { &*s }.inner.stats();
        unsafe {
            *out = TriStats {
                genus: st.genus as u32,
                boundary_components: st.boundary_components as u32,
                marked_points: st.marked_points as u32,
                internal_arcs: st.internal_arcs as u32,
                boundary_arcs: st.boundary_arcs as u32,
                triangles: st.triangles as u32,
            };
        }
        TriStatus::Ok
    })
}

/// Write the `rank x rank` signed adjacency matrix into `out` in row-major
/// order. `len` must equal `rank * rank`.
///
/// # Safety
/// `s` must be a valid surface handle and `out` must point to at least `len`
/// writable `int64_t` slots.
#[no_mangle]
pub unsafe extern "C" fn tri_surface_b_matrix(
    s: *const TriSurface,
    out: *mut i64,
    len: usize,
) -> TriStatus {
    guarded(|| {
        if s.is_null() {
            return null_arg("surface");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let surface = &unsafe { &*s }.inner;
        let n = surface.rank();
        if len != n * n {
            return fail(
                TriStatus::InvalidArgument,
                format!("len is {len}, expected rank*rank = {}", n * n),
            );
        }
        let b = tricluster::quiver::Quiver::of(surface).b_matrix();
        for (i, row) in b.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                unsafe { *out.add(i * n + j) = v };
            }
        }
        TriStatus::Ok
    })
}

fn poly_out(out: *mut *mut TriPoly, inner: LaurentPoly) -> TriStatus {
    unsafe { *out = Box::into_raw(Box::new(TriPoly { inner })) };
    TriStatus::Ok
}

unsafe fn curve_poly(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut *mut TriPoly,
    compute: impl FnOnce(&Surface, &tricluster::surface::Curve) -> Result<LaurentPoly, ExpansionError>,
) -> TriStatus {
    if s.is_null() {
        return null_arg("surface");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let name = match unsafe { text_arg(curve, "curve") } {
        Ok(t) => t,
        Err(status) => return status,
    };
    let surface = &unsafe { &*s }.inner;
    let c = match surface.curve(&name) {
        Ok(c) => c,
        Err(e) => return fail(TriStatus::DomainError, e.to_string()),
    };
    match compute(surface, c) {
        Ok(poly) => poly_out(out, poly),
        Err(e) => fail(expansion_status(&e), e.to_string()),
    }
}

/// Expand a named curve by both routes, insisting they agree.
///
/// # Safety
/// `s` must be a valid surface handle, `curve` a valid NUL-terminated
/// string, and `out` a valid pointer. On success `*out` must be released
/// with [`tri_poly_free`].
#[no_mangle]
pub unsafe extern "C" fn tri_expand(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut *mut TriPoly,
) -> TriStatus {
    guarded(|| unsafe { curve_poly(s, curve, out, expansion::expand) })
}

/// The expansion with every `x` set to 1.
///
/// # Safety
/// Same contract as [`tri_expand`].
#[no_mangle]
pub unsafe extern "C" fn tri_f_polynomial(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut *mut TriPoly,
) -> TriStatus {
    guarded(|| unsafe { curve_poly(s, curve, out, expansion::f_polynomial) })
}

/// Find the curve's cluster variable by flips alone, searching at most
/// `max_depth` flips deep. Returns `NotFound` when the search exhausts.
///
/// # Safety
/// Same contract as [`tri_expand`].
#[no_mangle]
pub unsafe extern "C" fn tri_oracle_variable(
    s: *const TriSurface,
    curve: *const c_char,
    max_depth: usize,
    out: *mut *mut TriPoly,
) -> TriStatus {
    guarded(|| unsafe {
        curve_poly(s, curve, out, |surface, c| {
            expansion::variable_by_flips(surface, c, max_depth).map(|found| found.variable)
        })
    })
}

unsafe fn vector_out(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut i64,
    len: usize,
    compute: impl FnOnce(&Surface, &tricluster::surface::Curve) -> Result<Vec<i64>, ExpansionError>,
) -> TriStatus {
    if s.is_null() {
        return null_arg("surface");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let name = match unsafe { text_arg(curve, "curve") } {
        Ok(t) => t,
        Err(status) => return status,
    };
    let surface = &unsafe { &*s }.inner;
    if len != surface.rank() {
        return fail(
            TriStatus::InvalidArgument,
            format!("len is {len}, expected rank = {}", surface.rank()),
        );
    }
    let c = match surface.curve(&name) {
        Ok(c) => c,
        Err(e) => return fail(TriStatus::DomainError, e.to_string()),
    };
    match compute(surface, c) {
        Ok(v) => {
            for (i, &value) in v.iter().enumerate() {
                unsafe { *out.add(i) = value };
            }
            TriStatus::Ok
        }
        Err(e) => fail(expansion_status(&e), e.to_string()),
    }
}

/// Write the index vector of a curve into `out`. `len` must equal the rank.
///
/// # Safety
/// `s` must be a valid surface handle, `curve` a valid NUL-terminated
/// string, and `out` must point to at least `len` writable `int64_t` slots.
#[no_mangle]
pub unsafe extern "C" fn tri_index_vector(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut i64,
    len: usize,
) -> TriStatus {
    guarded(|| unsafe {
        vector_out(s, curve, out, len, |surface, c| {
            Ok(expansion::index_vector(surface, c))
        })
    })
}

/// Write the degree vector of the expansion into `out`. `len` must equal
/// the rank.
///
/// # Safety
/// Same contract as [`tri_index_vector`].
#[no_mangle]
pub unsafe extern "C" fn tri_g_vector(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut i64,
    len: usize,
) -> TriStatus {
    guarded(|| unsafe { vector_out(s, curve, out, len, expansion::g_vector) })
}

/// Write the number of closed position sets of the curve's string module,
/// as a decimal string, into `*out`.
///
/// # Safety
/// `s` must be a valid surface handle, `curve` a valid NUL-terminated
/// string, and `out` a valid pointer. On success `*out` must be released
/// with [`tri_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tri_closed_set_count(
    s: *const TriSurface,
    curve: *const c_char,
    out: *mut *mut c_char,
) -> TriStatus {
    guarded(|| {
        if s.is_null() {
            return null_arg("surface");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let name = match unsafe { text_arg(curve, "curve") } {
            Ok(t) => t,
            Err(status) => return status,
        };
        let surface = &unsafe { &*s }.inner;
        let c = match surface.curve(&name) {
            Ok(c) => c,
            Err(e) => return fail(TriStatus::DomainError, e.to_string()),
        };
        let count = expansion::closed_set_count(surface, c).to_string();
        let owned = CString::new(count).expect("decimal digits contain no NUL");
        unsafe { *out = owned.into_raw() };
        TriStatus::Ok
    })
}

/// Parse a polynomial in the canonical text form over `nvars` variables.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
/// On success `*out` must be released with [`tri_poly_free`].
#[no_mangle]
pub unsafe extern "C" fn tri_poly_parse(
    nvars: usize,
    text: *const c_char,
    out: *mut *mut TriPoly,
) -> TriStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match unsafe { text_arg(text, "text") } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match LaurentPoly::parse(nvars, &text) {
            Ok(inner) => poly_out(out, inner),
            Err(e) => fail(TriStatus::ParseError, e.to_string()),
        }
    })
}

/// Release a polynomial handle. Null is ignored.
///
/// # Safety
/// `p` must be null or an unfreed pointer produced by this library.
#[no_mangle]
pub unsafe extern "C" fn tri_poly_free(p: *mut TriPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Write the canonical text form of the polynomial into `*out`.
///
/// # Safety
/// `p` must be a valid polynomial handle and `out` a valid pointer. On
/// success `*out` must be released with [`tri_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tri_poly_render(p: *const TriPoly, out: *mut *mut c_char) -> TriStatus {
    guarded(|| {
        if p.is_null() {
            return null_arg("poly");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let text = unsafe { &*p }.inner.render();
        let owned = CString::new(text).expect("canonical text contains no NUL");
        unsafe { *out = owned.into_raw() };
        TriStatus::Ok
    })
}

/// Exact equality of two polynomials; false if either handle is null.
///
/// # Safety
/// `a` and `b` must each be null or a valid polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn tri_poly_eq(a: *const TriPoly, b: *const TriPoly) -> bool {
    if a.is_null() || b.is_null() {
        return false;
    }
    unsafe { &*a }.inner == unsafe { &*b }.inner
}

/// Number of terms; 0 for a null handle.
///
/// # Safety
/// `p` must be null or a valid polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn tri_poly_term_count(p: *const TriPoly) -> usize {
    if p.is_null() {
        return 0;
    }
    unsafe { &*p }.inner.term_count()
}

/// Release a string returned through an out-pointer. Null is ignored.
///
/// # Safety
/// `s` must be null or an unfreed string produced by this library.
#[no_mangle]
pub unsafe extern "C" fn tri_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
