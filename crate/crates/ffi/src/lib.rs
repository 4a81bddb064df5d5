//! C ABI over the `adu` library.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every call returns an [`AduStatus`]; on failure the message is available
//! from [`adu_last_error`] on the same thread. Strings returned through out
//! parameters are owned by the caller and released with [`adu_string_free`].

use adu::algebra::suite::{run_suite, SuiteOptions};
use adu::algebra::{casimir_from_ladder, verify_cubic_relations, Algebra, BElement, Which};
use adu::geometry::RankedPoset;
use adu::laurent::{inverse_psi_st, parse_laurent, psi_st, AlgebraSignature};
use adu::report::all_pass;
use adu::rep::{parse_family, verify_family, VerifyOptions};
use adu::AduError;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of every exported call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AduStatus {
    Ok = 0,
    /// A verification ran and found a nonzero residual.
    VerificationFailed = 1,
    InvalidArgument = 2,
    SizeGuard = 3,
    Gated = 4,
    NullPointer = 5,
    Arithmetic = 6,
    Io = 7,
    Panic = 8,
}

/// Algebra with fixed parameters `(s, t, phi)`.
pub struct AduAlgebra {
    alg: Algebra,
}

/// Element of an algebra in normal form.
pub struct AduElement {
    x: BElement,
}

/// Ranked poset.
pub struct AduPoset {
    p: RankedPoset,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &AduError) -> AduStatus {
    match e {
        AduError::SizeGuard { .. } => AduStatus::SizeGuard,
        AduError::Gated(_) => AduStatus::Gated,
        AduError::DivisionByZero | AduError::PoleAtSqrt { .. } => AduStatus::Arithmetic,
        AduError::Io(_) => AduStatus::Io,
        _ => AduStatus::InvalidArgument,
    }
}

enum Failure {
    Adu(AduError),
    Null(&'static str),
    Verify(String),
}

impl From<AduError> for Failure {
    fn from(e: AduError) -> Self {
        Failure::Adu(e)
    }
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AduStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            AduStatus::Ok
        }
        Ok(Err(Failure::Adu(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            AduStatus::NullPointer
        }
        Ok(Err(Failure::Verify(msg))) => {
            set_error(msg);
            AduStatus::VerificationFailed
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            AduStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Adu(AduError::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn opt_text<'a>(p: *const c_char) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, "string").map(Some)
    }
}

unsafe fn out<T>(dst: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if dst.is_null() {
        return Err(Failure::Null(what));
    }
    dst.write(value);
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn adu_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adu_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the algebra `B_q(s, t, phi)`; `phi` uses the `EXP:COEFF; ...`
/// grammar (e.g. `"const:-1"`) or LaurentPoly JSON.
///
/// # Safety
/// `phi` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn adu_algebra_new(s: i64, t: i64, phi: *const c_char, out_alg: *mut *mut AduAlgebra) -> AduStatus {
    guard(|| {
        let phi = parse_laurent(text(phi, "phi")?)?;
        let alg = Algebra::new(AlgebraSignature::new(s, t, phi)?);
        out(out_alg, Box::into_raw(Box::new(AduAlgebra { alg })), "out_alg")
    })
}

/// # Safety
/// `alg` must come from [`adu_algebra_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adu_algebra_free(alg: *mut AduAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Generator or unit by name: `"1"`, `"E"`, `"F"`, `"K"`, `"Kinv"`, `"Cs"`, `"Ct"`.
///
/// # Safety
/// `alg` must be a live handle, `name` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn adu_element_generator(
    alg: *const AduAlgebra,
    name: *const c_char,
    out_elem: *mut *mut AduElement,
) -> AduStatus {
    guard(|| {
        let a = &handle(alg, "alg")?.alg;
        let x = match text(name, "name")? {
            "1" => a.one(),
            "E" => a.e(),
            "F" => a.f(),
            "K" => a.k(1),
            "Kinv" => a.k(-1),
            "Cs" => a.cs(),
            "Ct" => a.ct(),
            other => return Err(AduError::Parse(format!("unknown generator {other:?}")).into()),
        };
        out(out_elem, Box::into_raw(Box::new(AduElement { x })), "out_elem")
    })
}

/// # Safety
/// `x` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adu_element_free(x: *mut AduElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

unsafe fn binary(
    a: *const AduElement,
    b: *const AduElement,
    out_elem: *mut *mut AduElement,
    op: fn(&BElement, &BElement) -> adu::Result<BElement>,
) -> AduStatus {
    guard(|| {
        let x = op(&handle(a, "a")?.x, &handle(b, "b")?.x)?;
        out(out_elem, Box::into_raw(Box::new(AduElement { x })), "out_elem")
    })
}

/// Product `a * b`; both must belong to the same algebra.
///
/// # Safety
/// `a`, `b` must be live handles; `out_elem` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_element_mul(a: *const AduElement, b: *const AduElement, out_elem: *mut *mut AduElement) -> AduStatus {
    binary(a, b, out_elem, BElement::try_mul)
}

/// # Safety
/// As for [`adu_element_mul`].
#[no_mangle]
pub unsafe extern "C" fn adu_element_add(a: *const AduElement, b: *const AduElement, out_elem: *mut *mut AduElement) -> AduStatus {
    binary(a, b, out_elem, BElement::try_add)
}

/// # Safety
/// As for [`adu_element_mul`].
#[no_mangle]
pub unsafe extern "C" fn adu_element_sub(a: *const AduElement, b: *const AduElement, out_elem: *mut *mut AduElement) -> AduStatus {
    binary(a, b, out_elem, BElement::try_sub)
}

/// # Safety
/// `x` must be a live handle; `out_zero` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_element_is_zero(x: *const AduElement, out_zero: *mut bool) -> AduStatus {
    guard(|| out(out_zero, handle(x, "x")?.x.is_zero(), "out_zero"))
}

/// Canonical text form. Free the result with [`adu_string_free`].
///
/// # Safety
/// `x` must be a live handle; `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_element_to_string(x: *const AduElement, out_text: *mut *mut c_char) -> AduStatus {
    guard(|| out(out_text, owned_string(handle(x, "x")?.x.to_string()), "out_text"))
}

/// Runs the seeded algebra property suite plus the Casimir and cubic checks.
/// Returns `VERIFICATION_FAILED` when any check fails.
///
/// # Safety
/// `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn adu_algebra_verify(alg: *const AduAlgebra, seed: u64) -> AduStatus {
    guard(|| {
        let a = &handle(alg, "alg")?.alg;
        let checks = run_suite(a, &SuiteOptions { seed, ..SuiteOptions::default() });
        let casimirs = casimir_from_ladder(Which::S, a) == a.cs() && casimir_from_ladder(Which::T, a) == a.ct();
        if !all_pass(&checks) || !casimirs || !verify_cubic_relations(a).passed() {
            let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
            return Err(Failure::Verify(format!("failed checks: {failed:?}")));
        }
        Ok(())
    })
}

/// `psi_{s,t}` (or its inverse when `inverse` is true) as LaurentPoly JSON.
///
/// # Safety
/// `psi` must be a NUL-terminated string; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_phi_map(s: i64, t: i64, psi: *const c_char, inverse: bool, out_json: *mut *mut c_char) -> AduStatus {
    guard(|| {
        if s == t {
            return Err(AduError::InvalidSignature(format!("s and t must differ (both are {s})")).into());
        }
        let p = parse_laurent(text(psi, "psi")?)?;
        let r = if inverse { inverse_psi_st(&p, s, t)? } else { psi_st(&p, s, t) };
        out(out_json, owned_string(r.to_json()), "out_json")
    })
}

/// Builds a catalog poset. `eps` (polar families) and `m` (attenuated, pass 0
/// otherwise) may be NULL/0 when unused; `base` is used by `polar_top` only.
///
/// # Safety
/// `family` must be a NUL-terminated string, `eps` NULL or NUL-terminated;
/// `out_poset` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_poset_build(
    family: *const c_char,
    b: usize,
    n: usize,
    m: usize,
    eps: *const c_char,
    base: usize,
    out_poset: *mut *mut AduPoset,
) -> AduStatus {
    guard(|| {
        let fam = parse_family(text(family, "family")?, b, n, (m > 0).then_some(m), opt_text(eps)?, Some(base))?;
        let p = fam.build(fam.default_convention())?.remove(0);
        out(out_poset, Box::into_raw(Box::new(AduPoset { p })), "out_poset")
    })
}

/// # Safety
/// `p` must come from [`adu_poset_build`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adu_poset_free(p: *mut AduPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of fibers (`top rank + 1`).
///
/// # Safety
/// `p` must be a live handle; `out_count` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_poset_fiber_count(p: *const AduPoset, out_count: *mut usize) -> AduStatus {
    guard(|| out(out_count, handle(p, "poset")?.p.fibers.len(), "out_count"))
}

/// Size of fiber `i`.
///
/// # Safety
/// `p` must be a live handle; `out_size` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_poset_fiber_size(p: *const AduPoset, i: usize, out_size: *mut usize) -> AduStatus {
    guard(|| {
        let fibers = &handle(p, "poset")?.p.fibers;
        let f = fibers
            .get(i)
            .ok_or_else(|| AduError::Unsupported(format!("fiber {i} out of range ({} fibers)", fibers.len())))?;
        out(out_size, f.len(), "out_size")
    })
}

/// Poset JSON `{family, params, elements, fibers, covers}`.
///
/// # Safety
/// `p` must be a live handle; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn adu_poset_to_json(p: *const AduPoset, out_json: *mut *mut c_char) -> AduStatus {
    guard(|| out(out_json, owned_string(handle(p, "poset")?.p.to_json()), "out_json"))
}

/// Verifies the module relations for a catalog family, trying each poset
/// convention. Writes the report JSON; returns `VERIFICATION_FAILED` when no
/// convention passes. `base` selects a `polar_top` base vertex; pass
/// `SIZE_MAX` to check every vertex.
///
/// # Safety
/// String arguments must be NUL-terminated (`eps` may be NULL);
/// `out_report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn adu_verify_module(
    family: *const c_char,
    b: usize,
    n: usize,
    m: usize,
    eps: *const c_char,
    base: usize,
    out_report: *mut *mut c_char,
) -> AduStatus {
    guard(|| {
        let base = (base != usize::MAX).then_some(base);
        let fam = parse_family(text(family, "family")?, b, n, (m > 0).then_some(m), opt_text(eps)?, base)?;
        let report = verify_family(&fam, &VerifyOptions { calibrate: true, ..Default::default() })?;
        if !out_report.is_null() {
            out_report.write(owned_string(report.to_json()));
        }
        if report.passed() {
            Ok(())
        } else {
            Err(Failure::Verify(format!("{} module relations fail under every convention", report.family)))
        }
    })
}

