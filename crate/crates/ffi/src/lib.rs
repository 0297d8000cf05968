//! C ABI for the pdtrank library.
//!
//! Conventions:
//! - every fallible function returns a [`PdtrankStatus`] and writes results
//!   through out-pointers, which are untouched on failure;
//! - handles ([`PdtrankOverline`], [`PdtrankSeries`]) are opaque; free them
//!   with the matching `_free` function exactly once;
//! - string outputs use a caller-supplied buffer: `required` always receives
//!   the byte length including the trailing NUL, and the call reports
//!   `BufferTooSmall` (writing nothing else) when the capacity is short, so
//!   callers may pass a null buffer with capacity 0 to query the size.
//!
//! The build script generates `include/pdtrank.h` from these definitions.

#![deny(unsafe_op_in_unsafe_fn)]

use std::ffi::{c_char, CStr};
use std::ptr;

use pdtrank::designated::{parse_overline, OverlinePartition};
use pdtrank::partition::parse_partition;
use pdtrank::ranks::{classify, modified_rank, pdt_rank, Class, RankValue};
use pdtrank::series::{dissection_g, lambert_pdt, pd_prefactor, pdt_gf, theta_alt, Series};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdtrankStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of range or not a valid enum value.
    InvalidArgument = 2,
    /// Text input was not valid UTF-8 or did not parse.
    ParseFailed = 3,
    /// The result does not fit the requested integer width.
    Overflow = 4,
    /// The supplied buffer is too small; `required` holds the needed size.
    BufferTooSmall = 5,
}

/// Class labels of the modified-rank construction.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdtrankClass {
    A1 = 0,
    A2 = 1,
    A3 = 2,
    A4 = 3,
    A5 = 4,
    B1 = 5,
    B2 = 6,
    B3 = 7,
    B4 = 8,
    B5 = 9,
    Neither = 10,
}

impl From<Class> for PdtrankClass {
    fn from(c: Class) -> Self {
        match c {
            Class::A1 => PdtrankClass::A1,
            Class::A2 => PdtrankClass::A2,
            Class::A3 => PdtrankClass::A3,
            Class::A4 => PdtrankClass::A4,
            Class::A5 => PdtrankClass::A5,
            Class::B1 => PdtrankClass::B1,
            Class::B2 => PdtrankClass::B2,
            Class::B3 => PdtrankClass::B3,
            Class::B4 => PdtrankClass::B4,
            Class::B5 => PdtrankClass::B5,
            Class::Neither => PdtrankClass::Neither,
        }
    }
}

/// Selector for [`pdtrank_series_new`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdtrankSeriesKind {
    /// Generating function of PD_t(n).
    Pdt = 0,
    /// Eta-quotient prefactor; coefficients match PD(n).
    PdPrefactor = 1,
    /// The Lambert-type sum.
    Lambert = 2,
    /// The alternating theta series.
    Theta = 3,
    /// The 3-dissection combination G.
    DissectionG = 4,
}

/// Opaque handle to a partition with overline designated summands.
pub struct PdtrankOverline {
    inner: OverlinePartition,
}

/// Opaque handle to a truncated integer series.
pub struct PdtrankSeries {
    inner: Series,
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn pdtrank_version() -> *const c_char {
    const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

fn write_string(text: &str, buf: *mut c_char, cap: usize, required: *mut usize) -> PdtrankStatus {
    if required.is_null() {
        return PdtrankStatus::NullArgument;
    }
    let needed = text.len() + 1;
    unsafe { *required = needed };
    if buf.is_null() || cap < needed {
        return PdtrankStatus::BufferTooSmall;
    }
    unsafe {
        ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
        *buf.add(text.len()) = 0;
    }
    PdtrankStatus::Ok
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, PdtrankStatus> {
    if text.is_null() {
        return Err(PdtrankStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| PdtrankStatus::ParseFailed)
}

/// `PD(n)` by enumeration. Exponential in n; fails with `Overflow` if the
/// count exceeds 64 bits.
/// # Safety
/// `out` must be null or valid for writing a u64.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_pd_count(n: u32, out: *mut u64) -> PdtrankStatus {
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    match std::panic::catch_unwind(|| pdtrank::designated::pd_count(n)) {
        Ok(v) => {
            unsafe { *out = v };
            PdtrankStatus::Ok
        }
        Err(_) => PdtrankStatus::Overflow,
    }
}

/// `PD_t(n)` by enumeration. Exponential in n; fails with `Overflow` if the
/// count exceeds 64 bits.
/// # Safety
/// `out` must be null or valid for writing a u64.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_pdt_count(n: u32, out: *mut u64) -> PdtrankStatus {
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    match std::panic::catch_unwind(|| pdtrank::designated::pdt_count(n)) {
        Ok(v) => {
            unsafe { *out = v };
            PdtrankStatus::Ok
        }
        Err(_) => PdtrankStatus::Overflow,
    }
}

/// Crank of an ordinary partition given in `a+b+c` text form (`-` for the
/// empty partition).
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_crank(text: *const c_char, out: *mut i64) -> PdtrankStatus {
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_partition(text) {
        Ok(p) => {
            unsafe { *out = p.crank() };
            PdtrankStatus::Ok
        }
        Err(_) => PdtrankStatus::ParseFailed,
    }
}

/// Parses the overline text form (for example `~2'+2+1'`) into a handle.
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_parse(
    text: *const c_char,
    out: *mut *mut PdtrankOverline,
) -> PdtrankStatus {
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_overline(text) {
        Ok(inner) => {
            let handle = Box::new(PdtrankOverline { inner });
            unsafe { *out = Box::into_raw(handle) };
            PdtrankStatus::Ok
        }
        Err(_) => PdtrankStatus::ParseFailed,
    }
}

/// Frees a handle returned by [`pdtrank_overline_parse`]. Null is a no-op.
/// # Safety
/// `p` must be null or a handle from [`pdtrank_overline_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_free(p: *mut PdtrankOverline) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Canonical text form of the object.
/// # Safety
/// `p` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_format(
    p: *const PdtrankOverline,
    buf: *mut c_char,
    cap: usize,
    required: *mut usize,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    write_string(&handle.inner.to_string(), buf, cap, required)
}

/// Weight (sum of parts) of the object.
/// # Safety
/// `p` must be null or a live handle; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_weight(
    p: *const PdtrankOverline,
    out: *mut u64,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    unsafe { *out = handle.inner.weight() };
    PdtrankStatus::Ok
}

/// The pdt-rank. On the exceptional objects (split beta = (1)) sets
/// `*exceptional` to true and `*rank` to 0; otherwise `*exceptional` is
/// false and `*rank` holds the rank.
/// # Safety
/// `p` must be null or a live handle; `rank` and `exceptional` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_rank(
    p: *const PdtrankOverline,
    rank: *mut i64,
    exceptional: *mut bool,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if rank.is_null() || exceptional.is_null() {
        return PdtrankStatus::NullArgument;
    }
    match pdt_rank(&handle.inner) {
        RankValue::Regular(m) => unsafe {
            *rank = m;
            *exceptional = false;
        },
        RankValue::Exceptional => unsafe {
            *rank = 0;
            *exceptional = true;
        },
    }
    PdtrankStatus::Ok
}

/// The modified pdt-rank (total-valued).
/// # Safety
/// `p` must be null or a live handle; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_modified_rank(
    p: *const PdtrankOverline,
    out: *mut i64,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    unsafe { *out = modified_rank(&handle.inner) };
    PdtrankStatus::Ok
}

/// A/B class of the object.
/// # Safety
/// `p` must be null or a live handle; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_class(
    p: *const PdtrankOverline,
    out: *mut PdtrankClass,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    unsafe { *out = classify(&handle.inner).into() };
    PdtrankStatus::Ok
}

/// The split of the object, rendered as `alpha=..., beta=..., t=...`.
/// # Safety
/// `p` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_overline_delta(
    p: *const PdtrankOverline,
    buf: *mut c_char,
    cap: usize,
    required: *mut usize,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { p.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    let image = pdtrank::delta(&handle.inner);
    write_string(&image.to_string(), buf, cap, required)
}

/// Expands a named series to the given precision (coefficients 0..=terms).
/// # Safety
/// `out` must be null or valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_series_new(
    kind: PdtrankSeriesKind,
    terms: u32,
    out: *mut *mut PdtrankSeries,
) -> PdtrankStatus {
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    let terms = terms as usize;
    let inner = match kind {
        PdtrankSeriesKind::Pdt => pdt_gf(terms),
        PdtrankSeriesKind::PdPrefactor => pd_prefactor(terms),
        PdtrankSeriesKind::Lambert => lambert_pdt(terms),
        PdtrankSeriesKind::Theta => theta_alt(terms),
        PdtrankSeriesKind::DissectionG => dissection_g(terms),
    };
    let handle = Box::new(PdtrankSeries { inner });
    unsafe { *out = Box::into_raw(handle) };
    PdtrankStatus::Ok
}

/// Frees a handle returned by [`pdtrank_series_new`]. Null is a no-op.
/// # Safety
/// `s` must be null or a handle from [`pdtrank_series_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_series_free(s: *mut PdtrankSeries) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Largest exponent the series stores.
/// # Safety
/// `s` must be null or a live handle; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_series_precision(
    s: *const PdtrankSeries,
    out: *mut u32,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { s.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    unsafe { *out = handle.inner.precision() as u32 };
    PdtrankStatus::Ok
}

/// Coefficient of q^n as a 64-bit integer; `Overflow` if it does not fit,
/// `InvalidArgument` if n exceeds the precision.
/// # Safety
/// `s` must be null or a live handle; `out` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_series_coeff_i64(
    s: *const PdtrankSeries,
    n: u32,
    out: *mut i64,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { s.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if out.is_null() {
        return PdtrankStatus::NullArgument;
    }
    if n as usize > handle.inner.precision() {
        return PdtrankStatus::InvalidArgument;
    }
    match i64::try_from(handle.inner.coeff(n as usize)) {
        Ok(v) => {
            unsafe { *out = v };
            PdtrankStatus::Ok
        }
        Err(_) => PdtrankStatus::Overflow,
    }
}

/// Coefficient of q^n as a decimal string (exact at any size).
/// # Safety
/// `s` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pdtrank_series_coeff_str(
    s: *const PdtrankSeries,
    n: u32,
    buf: *mut c_char,
    cap: usize,
    required: *mut usize,
) -> PdtrankStatus {
    let Some(handle) = (unsafe { s.as_ref() }) else {
        return PdtrankStatus::NullArgument;
    };
    if n as usize > handle.inner.precision() {
        return PdtrankStatus::InvalidArgument;
    }
    write_string(
        &handle.inner.coeff(n as usize).to_string(),
        buf,
        cap,
        required,
    )
}
