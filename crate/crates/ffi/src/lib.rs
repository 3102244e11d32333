//! C ABI for the `infhopf` library.
//!
//! Conventions:
//!
//! * Every function returns an [`IhStatus`]; results come back through out
//!   pointers. `IH_STATUS_OK` means the out pointers were written.
//! * [`IhElement`] is an opaque handle owned by the caller; release it with
//!   [`ih_element_free`]. Strings returned through `char**` are NUL
//!   terminated, UTF-8, and released with [`ih_string_free`].
//! * On any non-OK status the out pointers are left untouched and
//!   [`ih_last_error_message`] returns a description of the failure.
//! * Handles are not synchronized; do not share one handle across threads
//!   without external locking. The error message store is per thread.
//!
//! The header `include/infhopf.h` is regenerated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use infhopf::algebra::{
    antipode_left_cut, antipode_recursive, coproduct, parse_element, product, Element,
};
use infhopf::forest::parse_forest;
use infhopf::pairing::{
    dual_basis_via_gram, gram_matrix, pairing_bijection, pairing_recursive, pairing_tamari,
};
use infhopf::tamari::{build_poset, dual_basis_via_mobius, IndexSet};

/// Status code returned by every API function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IhStatus {
    /// Success; out pointers are valid.
    IhStatusOk = 0,
    /// A required pointer argument was NULL.
    IhStatusNullPointer = 1,
    /// A string argument was not valid UTF-8.
    IhStatusUtf8 = 2,
    /// Parsing or a domain-side precondition failed; see
    /// `ih_last_error_message`.
    IhStatusError = 3,
    /// An internal panic was caught; see `ih_last_error_message`.
    IhStatusPanic = 4,
}

/// Antipode algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IhAntipodeMethod {
    IhAntipodeRecursive = 0,
    IhAntipodeLeftCut = 1,
}

/// Pairing algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IhPairMethod {
    IhPairBijection = 0,
    IhPairRecursive = 1,
    IhPairTamari = 2,
}

/// Dual-basis algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IhDualMethod {
    IhDualMobius = 0,
    IhDualGram = 1,
}

/// Opaque element of the algebra (a rational linear combination of
/// forests).
pub struct IhElement {
    inner: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let stored = CString::new(message.replace('\0', "?"))
        .unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Runs `body` with panics converted to `IhStatusPanic`; clears the error
/// slot first so `ih_last_error_message` reflects this call only.
fn guarded(body: impl FnOnce() -> IhStatus) -> IhStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_owned())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_owned());
            set_error(&message);
            IhStatus::IhStatusPanic
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated pointer.
unsafe fn read_utf8<'a>(text: *const c_char) -> Result<&'a str, IhStatus> {
    if text.is_null() {
        set_error("NULL string argument");
        return Err(IhStatus::IhStatusNullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        IhStatus::IhStatusUtf8
    })
}

fn write_string(out: *mut *mut c_char, value: String) -> IhStatus {
    if out.is_null() {
        set_error("NULL out pointer");
        return IhStatus::IhStatusNullPointer;
    }
    match CString::new(value) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            IhStatus::IhStatusOk
        }
        Err(_) => {
            set_error("output contained an interior NUL byte");
            IhStatus::IhStatusError
        }
    }
}

fn write_element(out: *mut *mut IhElement, value: Element) -> IhStatus {
    if out.is_null() {
        set_error("NULL out pointer");
        return IhStatus::IhStatusNullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(IhElement { inner: value })) };
    IhStatus::IhStatusOk
}

/// # Safety
/// `handle` must be a live pointer produced by this library.
unsafe fn read_element<'a>(handle: *const IhElement) -> Result<&'a Element, IhStatus> {
    if handle.is_null() {
        set_error("NULL element handle");
        return Err(IhStatus::IhStatusNullPointer);
    }
    Ok(&(*handle).inner)
}

/// Parses an element from its text form (e.g. `"2*[[]] - 1/3*[] []"`).
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_parse(
    text: *const c_char,
    out: *mut *mut IhElement,
) -> IhStatus {
    guarded(|| {
        let text = match read_utf8(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_element(text) {
            Ok(element) => write_element(out, element),
            Err(e) => {
                set_error(&e.to_string());
                IhStatus::IhStatusError
            }
        }
    })
}

/// Renders an element in the canonical text form.
///
/// # Safety
/// `element` must be a live handle and `out` writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_to_string(
    element: *const IhElement,
    out: *mut *mut c_char,
) -> IhStatus {
    guarded(|| {
        let element = match read_element(element) {
            Ok(e) => e,
            Err(status) => return status,
        };
        write_string(out, element.to_string())
    })
}

/// Sum of two elements.
///
/// # Safety
/// `left` and `right` must be live handles and `out` writable storage for
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_add(
    left: *const IhElement,
    right: *const IhElement,
    out: *mut *mut IhElement,
) -> IhStatus {
    guarded(|| {
        let (left, right) = match (read_element(left), read_element(right)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        write_element(out, left.plus(right))
    })
}

/// Product (concatenation, extended bilinearly) of two elements.
///
/// # Safety
/// `left` and `right` must be live handles and `out` writable storage for
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_product(
    left: *const IhElement,
    right: *const IhElement,
    out: *mut *mut IhElement,
) -> IhStatus {
    guarded(|| {
        let (left, right) = match (read_element(left), read_element(right)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        write_element(out, product(left, right))
    })
}

/// Coproduct of an element, rendered as a sum of `F (x) G` terms.
///
/// # Safety
/// `element` must be a live handle and `out` writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_coproduct_string(
    element: *const IhElement,
    out: *mut *mut c_char,
) -> IhStatus {
    guarded(|| {
        let element = match read_element(element) {
            Ok(e) => e,
            Err(status) => return status,
        };
        write_string(out, coproduct(element).to_string())
    })
}

/// Antipode of an element by the selected algorithm.
///
/// # Safety
/// `element` must be a live handle and `out` writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_antipode(
    element: *const IhElement,
    method: IhAntipodeMethod,
    out: *mut *mut IhElement,
) -> IhStatus {
    guarded(|| {
        let element = match read_element(element) {
            Ok(e) => e,
            Err(status) => return status,
        };
        let image = match method {
            IhAntipodeMethod::IhAntipodeRecursive => antipode_recursive(element),
            IhAntipodeMethod::IhAntipodeLeftCut => antipode_left_cut(element),
        };
        write_element(out, image)
    })
}

/// Pairing of two forests (in bracket notation) by the selected algorithm;
/// the exact rational value is returned as text.
///
/// # Safety
/// `left` and `right` must point to NUL-terminated strings and `out` to
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_pair(
    left: *const c_char,
    right: *const c_char,
    method: IhPairMethod,
    out: *mut *mut c_char,
) -> IhStatus {
    guarded(|| {
        let (left, right) = match (read_utf8(left), read_utf8(right)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let (f, g) = match (parse_forest(left), parse_forest(right)) {
            (Ok(f), Ok(g)) => (f, g),
            (Err(e), _) | (_, Err(e)) => {
                set_error(&e.to_string());
                return IhStatus::IhStatusError;
            }
        };
        let value = match method {
            IhPairMethod::IhPairBijection => pairing_bijection(&f, &g),
            IhPairMethod::IhPairRecursive => {
                pairing_recursive(&Element::basis(f), &Element::basis(g))
            }
            IhPairMethod::IhPairTamari => pairing_tamari(&f, &g),
        };
        write_string(out, value.to_string())
    })
}

/// Dual-basis element `f_F` for the forest `F`, by Möbius inversion or by
/// Gram-matrix inversion.
///
/// # Safety
/// `forest` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_dual_basis(
    forest: *const c_char,
    method: IhDualMethod,
    out: *mut *mut IhElement,
) -> IhStatus {
    guarded(|| {
        let forest = match read_utf8(forest) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let f = match parse_forest(forest) {
            Ok(f) => f,
            Err(e) => {
                set_error(&e.to_string());
                return IhStatus::IhStatusError;
            }
        };
        let dual = match method {
            IhDualMethod::IhDualMobius => dual_basis_via_mobius(&f),
            IhDualMethod::IhDualGram => match dual_basis_via_gram(f.weight()) {
                Ok(basis) => basis
                    .into_iter()
                    .find(|(g, _)| *g == f)
                    .map(|(_, e)| e)
                    .expect("every forest appears at its weight"),
                Err(e) => {
                    set_error(&e.to_string());
                    return IhStatus::IhStatusError;
                }
            },
        };
        write_element(out, dual)
    })
}

/// Gram matrix of the pairing at one weight, as CSV with forest labels.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_gram_csv(weight: usize, out: *mut *mut c_char) -> IhStatus {
    guarded(|| write_string(out, gram_matrix(weight).to_csv()))
}

/// Möbius matrix of the full forest poset at one weight, as CSV.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_mobius_csv(weight: usize, out: *mut *mut c_char) -> IhStatus {
    guarded(|| write_string(out, build_poset(weight, &IndexSet::All).mobius_csv()))
}

/// Hasse diagram of the full forest poset at one weight, as DOT text.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_hasse_dot(weight: usize, out: *mut *mut c_char) -> IhStatus {
    guarded(|| write_string(out, build_poset(weight, &IndexSet::All).to_dot()))
}

/// Releases an element handle. NULL is accepted and ignored.
///
/// # Safety
/// `element` must be NULL or a live handle produced by this library; the
/// handle is dead afterwards.
#[no_mangle]
pub unsafe extern "C" fn ih_element_free(element: *mut IhElement) {
    if !element.is_null() {
        drop(Box::from_raw(element));
    }
}

/// Releases a string produced by this library. NULL is accepted and
/// ignored.
///
/// # Safety
/// `text` must be NULL or a string produced by this library; the pointer is
/// dead afterwards.
#[no_mangle]
pub unsafe extern "C" fn ih_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Message for the most recent failure on this thread, or NULL if the last
/// call succeeded. Release with [`ih_string_free`].
///
/// # Safety
/// Callable at any time; the returned string is a fresh allocation.
#[no_mangle]
pub unsafe extern "C" fn ih_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(message) => message.clone().into_raw(),
        None => ptr::null_mut(),
    })
}
