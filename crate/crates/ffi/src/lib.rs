//! C interface to the `qmat` library.
//!
//! Algebras and polynomials are opaque heap handles owned by the caller and
//! released with the matching `_free` function. Every fallible function
//! returns a [`QmatStatus`]; on failure a message is available from
//! [`qmat_last_error_message`] until the next failing call on the same thread.
//! Strings returned through `char **` must be released with
//! [`qmat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use qmat::detid::{quantum_determinant, reduce_mod_i1};
use qmat::hspec::{enumerate_hprimes, hasse_diagram, DEFAULT_HASSE_CAP};
use qmat::maps::{coinvariant_preimage, theta};
use qmat::parse::parse;
use qmat::{Algebra, Error, NCPoly};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QmatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    IndexOutOfRange = 4,
    InvalidShape = 5,
    WrongAlgebra = 6,
    AlgebraMismatch = 7,
    CapExceeded = 8,
    NotCoinvariant = 9,
    InvalidArgument = 10,
    Internal = 11,
}

/// A presented algebra.
pub struct QmatAlgebra {
    inner: Arc<Algebra>,
}

/// An element of an algebra, in normal form.
pub struct QmatPoly {
    inner: NCPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QmatStatus {
    match e {
        Error::Syntax { .. } => QmatStatus::Syntax,
        Error::IndexOutOfRange(_) => QmatStatus::IndexOutOfRange,
        Error::InvalidShape(_) | Error::InvalidMinor(_) | Error::InvalidPair(_) => QmatStatus::InvalidShape,
        Error::WrongAlgebra { .. } => QmatStatus::WrongAlgebra,
        Error::AlgebraMismatch => QmatStatus::AlgebraMismatch,
        Error::CapExceeded { .. } => QmatStatus::CapExceeded,
        Error::NotCoinvariant { .. } => QmatStatus::NotCoinvariant,
        _ => QmatStatus::InvalidArgument,
    }
}

enum Failure {
    Status(QmatStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics to status codes.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> QmatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QmatStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal error".into());
            QmatStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(QmatStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    unsafe { p.as_mut() }.ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("text"));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Failure::Status(QmatStatus::InvalidUtf8, "text is not valid UTF-8".into()))
}

fn give_poly(out: &mut *mut QmatPoly, p: NCPoly) {
    *out = Box::into_raw(Box::new(QmatPoly { inner: p }));
}

fn give_string(out: &mut *mut c_char, s: String) {
    *out = CString::new(s).expect("library output has no nul bytes").into_raw();
}

/// Message for the last failing call on this thread, or null. The pointer is
/// valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn qmat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates `O_q(M_{m,n})`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qmat_algebra_new_matrix(m: usize, n: usize, out: *mut *mut QmatAlgebra) -> QmatStatus {
    guard(|| {
        let out = unsafe { out_ptr(out, "out") }?;
        *out = Box::into_raw(Box::new(QmatAlgebra { inner: Algebra::quantum_matrix(m, n)? }));
        Ok(())
    })
}

/// Creates `O_q(k^m) (x) O_q(k^n)`, with generators `y[1..m]` and `z[1..n]`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qmat_algebra_new_tensor(m: usize, n: usize, out: *mut *mut QmatAlgebra) -> QmatStatus {
    guard(|| {
        let out = unsafe { out_ptr(out, "out") }?;
        *out = Box::into_raw(Box::new(QmatAlgebra { inner: Algebra::affine_tensor(m, n)? }));
        Ok(())
    })
}

/// Releases an algebra. Polynomials created from it stay valid.
///
/// # Safety
/// `algebra` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qmat_algebra_free(algebra: *mut QmatAlgebra) {
    if !algebra.is_null() {
        drop(unsafe { Box::from_raw(algebra) });
    }
}

/// Parses an expression such as `X[1,1]*X[2,2] - q*X[1,2]*X[2,1]`.
///
/// # Safety
/// `algebra` must be a live handle, `text` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_parse(
    algebra: *const QmatAlgebra,
    text: *const c_char,
    out: *mut *mut QmatPoly,
) -> QmatStatus {
    guard(|| {
        let a = unsafe { deref(algebra, "algebra") }?;
        let text = unsafe { read_str(text) }?;
        let out = unsafe { out_ptr(out, "out") }?;
        give_poly(out, parse(text, &a.inner)?);
        Ok(())
    })
}

/// Releases a polynomial.
///
/// # Safety
/// `poly` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_free(poly: *mut QmatPoly) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// The quantum determinant of a square quantum matrix algebra.
///
/// # Safety
/// `algebra` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_quantum_determinant(algebra: *const QmatAlgebra, out: *mut *mut QmatPoly) -> QmatStatus {
    guard(|| {
        let a = unsafe { deref(algebra, "algebra") }?;
        let out = unsafe { out_ptr(out, "out") }?;
        give_poly(out, quantum_determinant(&a.inner)?);
        Ok(())
    })
}

unsafe fn binary(
    a: *const QmatPoly,
    b: *const QmatPoly,
    out: *mut *mut QmatPoly,
    op: fn(&NCPoly, &NCPoly) -> qmat::Result<NCPoly>,
) -> QmatStatus {
    guard(|| {
        let a = unsafe { deref(a, "a") }?;
        let b = unsafe { deref(b, "b") }?;
        let out = unsafe { out_ptr(out, "out") }?;
        give_poly(out, op(&a.inner, &b.inner)?);
        Ok(())
    })
}

unsafe fn unary(p: *const QmatPoly, out: *mut *mut QmatPoly, op: fn(&NCPoly) -> qmat::Result<NCPoly>) -> QmatStatus {
    guard(|| {
        let p = unsafe { deref(p, "poly") }?;
        let out = unsafe { out_ptr(out, "out") }?;
        give_poly(out, op(&p.inner)?);
        Ok(())
    })
}

/// `a + b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_add(a: *const QmatPoly, b: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { binary(a, b, out, NCPoly::try_add) }
}

/// `a - b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_sub(a: *const QmatPoly, b: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { binary(a, b, out, NCPoly::try_sub) }
}

/// The product `a * b` in normal form.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_mul(a: *const QmatPoly, b: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { binary(a, b, out, NCPoly::try_mul) }
}

/// Representative modulo the ideal of 2x2 quantum minors.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_reduce_mod_i1(poly: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { unary(poly, out, reduce_mod_i1) }
}

/// Image under `X[i,j] -> y[i] z[j]`.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_theta(poly: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { unary(poly, out, theta) }
}

/// Preimage of a grading-zero element of the tensor product.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_coinvariant_preimage(poly: *const QmatPoly, out: *mut *mut QmatPoly) -> QmatStatus {
    unsafe { unary(poly, out, coinvariant_preimage) }
}

/// Writes whether `poly` is zero.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_is_zero(poly: *const QmatPoly, out: *mut bool) -> QmatStatus {
    guard(|| {
        let p = unsafe { deref(poly, "poly") }?;
        *unsafe { out_ptr(out, "out") }? = p.inner.is_zero();
        Ok(())
    })
}

/// Writes whether `a` and `b` are the same element of the same algebra.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_equal(a: *const QmatPoly, b: *const QmatPoly, out: *mut bool) -> QmatStatus {
    guard(|| {
        let a = unsafe { deref(a, "a") }?;
        let b = unsafe { deref(b, "b") }?;
        *unsafe { out_ptr(out, "out") }? = a.inner == b.inner;
        Ok(())
    })
}

/// Text form, parseable by [`qmat_poly_parse`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_to_string(poly: *const QmatPoly, out: *mut *mut c_char) -> QmatStatus {
    guard(|| {
        let p = unsafe { deref(poly, "poly") }?;
        give_string(unsafe { out_ptr(out, "out") }?, p.inner.to_string());
        Ok(())
    })
}

/// JSON form: a list of `{word, coeff}` objects.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_poly_to_json(poly: *const QmatPoly, out: *mut *mut c_char) -> QmatStatus {
    guard(|| {
        let p = unsafe { deref(poly, "poly") }?;
        give_string(unsafe { out_ptr(out, "out") }?, p.inner.to_json().to_string());
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qmat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Number of torus-invariant primes of `O_q(M_{m,n})` containing the 2x2
/// quantum minors.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_hprime_count(m: usize, n: usize, out: *mut u64) -> QmatStatus {
    guard(|| {
        let out = unsafe { out_ptr(out, "out") }?;
        *out = enumerate_hprimes(m, n)?.len() as u64;
        Ok(())
    })
}

/// Hasse diagram of those primes in DOT format.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qmat_hasse_dot(m: usize, n: usize, out: *mut *mut c_char) -> QmatStatus {
    guard(|| {
        let out = unsafe { out_ptr(out, "out") }?;
        give_string(out, hasse_diagram(m, n, DEFAULT_HASSE_CAP)?.to_dot());
        Ok(())
    })
}
