//! C ABI over `operad-hopf`.
//!
//! Every function returns an [`OhStatus`]. Results come back through out
//! pointers. Handles and strings handed out here are owned by the caller and
//! released with the matching `*_free` function. After a non-`Ok` status,
//! [`oh_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use operad_hopf::free::{quotient_dim, Presentation};
use operad_hopf::hopf::{antipode, coproduct, product, ProductKind, TensorConvention};
use operad_hopf::operad::Multiplicative;
use operad_hopf::parse::{parse_lincomb, parse_perm};
use operad_hopf::perm::{parse_word, standardize};
use operad_hopf::suites::{run_suite, SuiteOptions};
use operad_hopf::{Error, LinComb, Perm};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OhStatus {
    Ok = 0,
    /// Malformed permutation, coefficient, JSON or name.
    ParseError = 1,
    /// Well-formed input outside the domain of the operation.
    InvalidArgument = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OhProduct {
    Odot = 0,
    Shuffle = 1,
    ShuffleSigned = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OhTensor {
    Plain = 0,
    Koszul = 1,
}

/// Opaque permutation.
pub struct OhPerm(Perm);

/// Opaque rational linear combination of permutations.
pub struct OhLinComb(LinComb<Perm>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OhStatus {
    match e {
        Error::Parse { .. }
        | Error::Json(_)
        | Error::Presentation(_)
        | Error::UnknownGenerator(_) => OhStatus::ParseError,
        _ => OhStatus::InvalidArgument,
    }
}

/// Runs `f` with panics and errors turned into status codes.
fn guard(f: impl FnOnce() -> Result<(), OhStatus>) -> OhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            OhStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal error");
            OhStatus::Internal
        }
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, OhStatus>;
}

impl<T> OrStatus<T> for Result<T, Error> {
    fn or_status(self) -> Result<T, OhStatus> {
        self.map_err(|e| {
            set_error(&e.to_string());
            status_of(&e)
        })
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, OhStatus> {
    if p.is_null() {
        set_error("null pointer");
        return Err(OhStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        OhStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, OhStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null pointer");
        OhStatus::NullPointer
    })
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), OhStatus> {
    if out.is_null() {
        set_error("null out pointer");
        return Err(OhStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), OhStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("result contains a NUL byte");
        OhStatus::Internal
    })?;
    put(out, c.into_raw())
}

fn product_kind(p: OhProduct) -> ProductKind {
    match p {
        OhProduct::Odot => ProductKind::Odot,
        OhProduct::Shuffle => ProductKind::ShuffleUnsigned,
        OhProduct::ShuffleSigned => ProductKind::ShuffleSigned,
    }
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn oh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn oh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `4312` or `[10,1,2,...]`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_parse(text: *const c_char, out: *mut *mut OhPerm) -> OhStatus {
    guard(|| {
        let p = parse_perm(read_str(text)?).or_status()?;
        put(out, Box::into_raw(Box::new(OhPerm(p))))
    })
}

/// Standardizes a word that may repeat letters, e.g. `2122`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_standardize(
    word: *const c_char,
    out: *mut *mut OhPerm,
) -> OhStatus {
    guard(|| {
        let w = parse_word(read_str(word)?).or_status()?;
        put(out, Box::into_raw(Box::new(OhPerm(standardize(&w)))))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_free(p: *mut OhPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_len(p: *const OhPerm, out: *mut usize) -> OhStatus {
    guard(|| put(out, deref(p)?.0.len()))
}

/// # Safety
/// `p` must be a live handle and `out` writable. Free the result with
/// `oh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_to_string(p: *const OhPerm, out: *mut *mut c_char) -> OhStatus {
    guard(|| put_string(out, deref(p)?.0.to_string()))
}

/// Substitution of `beta` at position `i` (1-based) of `alpha`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_substitute(
    alpha: *const OhPerm,
    i: usize,
    beta: *const OhPerm,
    out: *mut *mut OhPerm,
) -> OhStatus {
    guard(|| {
        let r = deref(alpha)?.0.substitute(i, &deref(beta)?.0).or_status()?;
        put(out, Box::into_raw(Box::new(OhPerm(r))))
    })
}

/// Block composition `tau ∘_i sigma`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_perm_block_compose(
    tau: *const OhPerm,
    i: usize,
    sigma: *const OhPerm,
    out: *mut *mut OhPerm,
) -> OhStatus {
    guard(|| {
        let r = deref(tau)?
            .0
            .block_compose(i, &deref(sigma)?.0)
            .or_status()?;
        put(out, Box::into_raw(Box::new(OhPerm(r))))
    })
}

/// Parses text such as `2*4312 - 1/2*21` or the JSON term list.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_lincomb_parse(
    text: *const c_char,
    out: *mut *mut OhLinComb,
) -> OhStatus {
    guard(|| {
        let v = parse_lincomb(read_str(text)?).or_status()?;
        put(out, Box::into_raw(Box::new(OhLinComb(v))))
    })
}

/// # Safety
/// `v` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oh_lincomb_free(v: *mut OhLinComb) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_lincomb_to_string(
    v: *const OhLinComb,
    out: *mut *mut c_char,
) -> OhStatus {
    guard(|| put_string(out, deref(v)?.0.to_string()))
}

/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_lincomb_to_json(
    v: *const OhLinComb,
    out: *mut *mut c_char,
) -> OhStatus {
    guard(|| put_string(out, deref(v)?.0.to_json().to_string()))
}

/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_hopf_product(
    kind: OhProduct,
    x: *const OhLinComb,
    y: *const OhLinComb,
    out: *mut *mut OhLinComb,
) -> OhStatus {
    guard(|| {
        let m = Multiplicative::ass();
        let r = product(&m, product_kind(kind), &deref(x)?.0, &deref(y)?.0).or_status()?;
        put(out, Box::into_raw(Box::new(OhLinComb(r))))
    })
}

/// # Safety
/// `x` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_hopf_antipode(
    kind: OhProduct,
    x: *const OhLinComb,
    out: *mut *mut OhLinComb,
) -> OhStatus {
    guard(|| {
        let m = Multiplicative::ass();
        let r = antipode(&m, product_kind(kind), &deref(x)?.0).or_status()?;
        put(out, Box::into_raw(Box::new(OhLinComb(r))))
    })
}

/// The coproduct as JSON terms with `{"left", "right"}` basis objects.
///
/// # Safety
/// `x` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_hopf_coproduct_json(
    x: *const OhLinComb,
    out: *mut *mut c_char,
) -> OhStatus {
    guard(|| {
        let m = Multiplicative::ass();
        let d = coproduct(&m, &deref(x)?.0).or_status()?;
        put_string(out, d.to_json().to_string())
    })
}

/// Runs a named suite and returns its JSON report. `max_arity` 0 selects the
/// suite default. `passed` receives whether every case held.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `report` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_verify_json(
    suite: *const c_char,
    max_arity: usize,
    kind: OhProduct,
    tensor: OhTensor,
    seed: u64,
    report: *mut *mut c_char,
    passed: *mut bool,
) -> OhStatus {
    guard(|| {
        let name = read_str(suite)?;
        let opts = SuiteOptions {
            max_arity: (max_arity > 0).then_some(max_arity),
            product: product_kind(kind),
            tensor: match tensor {
                OhTensor::Plain => TensorConvention::Plain,
                OhTensor::Koszul => TensorConvention::ArityKoszul,
            },
            seed,
        };
        let r = run_suite(name, &opts).or_status()?;
        put(passed, r.passed())?;
        put_string(report, r.to_json_string())
    })
}

/// Quotient dimension in arity `arity` of the preset `assoc` or `lie`,
/// saturating up to `cap`.
///
/// # Safety
/// `preset` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oh_free_quotient_dim(
    preset: *const c_char,
    arity: usize,
    cap: usize,
    out: *mut usize,
) -> OhStatus {
    guard(|| {
        let name = read_str(preset)?;
        let p = Presentation::preset(name).ok_or_else(|| {
            set_error(&format!("unknown preset {name:?}"));
            OhStatus::ParseError
        })?;
        put(out, quotient_dim(&p, arity, cap).or_status()?.dim)
    })
}
