//! Exercises the C ABI through the extern functions directly.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pdtrank_ffi::*;

fn parse(text: &str) -> *mut PdtrankOverline {
    let c = CString::new(text).unwrap();
    let mut handle: *mut PdtrankOverline = ptr::null_mut();
    let status = unsafe { pdtrank_overline_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, PdtrankStatus::Ok, "parse {text:?}");
    assert!(!handle.is_null());
    handle
}

fn read_string(f: impl Fn(*mut c_char, usize, *mut usize) -> PdtrankStatus) -> String {
    let mut required = 0usize;
    let status = f(ptr::null_mut(), 0, &mut required);
    assert_eq!(status, PdtrankStatus::BufferTooSmall);
    assert!(required > 0);
    let mut buf = vec![0u8; required];
    let status = f(buf.as_mut_ptr() as *mut c_char, buf.len(), &mut required);
    assert_eq!(status, PdtrankStatus::Ok);
    CStr::from_bytes_until_nul(&buf)
        .unwrap()
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn version_is_present() {
    let v = unsafe { CStr::from_ptr(pdtrank_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn counts() {
    let mut out = 0u64;
    assert_eq!(unsafe { pdtrank_pd_count(5, &mut out) }, PdtrankStatus::Ok);
    assert_eq!(out, 15);
    assert_eq!(unsafe { pdtrank_pdt_count(5, &mut out) }, PdtrankStatus::Ok);
    assert_eq!(out, 24);
    assert_eq!(unsafe { pdtrank_pdt_count(0, &mut out) }, PdtrankStatus::Ok);
    assert_eq!(out, 0);
    assert_eq!(
        unsafe { pdtrank_pd_count(5, ptr::null_mut()) },
        PdtrankStatus::NullArgument
    );
}

#[test]
fn crank_text() {
    let mut out = 0i64;
    let text = CString::new("2+1+1").unwrap();
    assert_eq!(
        unsafe { pdtrank_crank(text.as_ptr(), &mut out) },
        PdtrankStatus::Ok
    );
    assert_eq!(out, -2);
    let empty = CString::new("-").unwrap();
    assert_eq!(
        unsafe { pdtrank_crank(empty.as_ptr(), &mut out) },
        PdtrankStatus::Ok
    );
    assert_eq!(out, 0);
    let bad = CString::new("3+0").unwrap();
    assert_eq!(
        unsafe { pdtrank_crank(bad.as_ptr(), &mut out) },
        PdtrankStatus::ParseFailed
    );
    assert_eq!(
        unsafe { pdtrank_crank(ptr::null(), &mut out) },
        PdtrankStatus::NullArgument
    );
}

#[test]
fn overline_round_trip_and_statistics() {
    let handle = parse("~2'+2+1'");

    let mut weight = 0u64;
    assert_eq!(
        unsafe { pdtrank_overline_weight(handle, &mut weight) },
        PdtrankStatus::Ok
    );
    assert_eq!(weight, 5);

    let text =
        read_string(|buf, cap, req| unsafe { pdtrank_overline_format(handle, buf, cap, req) });
    assert_eq!(text, "~2'+2+1'");

    let mut rank = -99i64;
    let mut exceptional = true;
    assert_eq!(
        unsafe { pdtrank_overline_rank(handle, &mut rank, &mut exceptional) },
        PdtrankStatus::Ok
    );
    assert_eq!((rank, exceptional), (0, false));

    let mut mrank = 0i64;
    assert_eq!(
        unsafe { pdtrank_overline_modified_rank(handle, &mut mrank) },
        PdtrankStatus::Ok
    );
    assert_eq!(mrank, 1);

    let mut class = PdtrankClass::Neither;
    assert_eq!(
        unsafe { pdtrank_overline_class(handle, &mut class) },
        PdtrankStatus::Ok
    );
    assert_eq!(class, PdtrankClass::A3);

    let delta =
        read_string(|buf, cap, req| unsafe { pdtrank_overline_delta(handle, buf, cap, req) });
    assert_eq!(delta, "alpha=2, beta=2+1, t=2");

    unsafe { pdtrank_overline_free(handle) };
}

#[test]
fn exceptional_rank_via_ffi() {
    let handle = parse("~4'+1'");
    let mut rank = -99i64;
    let mut exceptional = false;
    assert_eq!(
        unsafe { pdtrank_overline_rank(handle, &mut rank, &mut exceptional) },
        PdtrankStatus::Ok
    );
    assert!(exceptional);
    assert_eq!(rank, 0);
    let mut class = PdtrankClass::Neither;
    assert_eq!(
        unsafe { pdtrank_overline_class(handle, &mut class) },
        PdtrankStatus::Ok
    );
    assert_eq!(class, PdtrankClass::B5);
    unsafe { pdtrank_overline_free(handle) };
}

#[test]
fn parse_failures() {
    let mut handle: *mut PdtrankOverline = ptr::null_mut();
    let bad = CString::new("2+1'").unwrap();
    assert_eq!(
        unsafe { pdtrank_overline_parse(bad.as_ptr(), &mut handle) },
        PdtrankStatus::ParseFailed
    );
    assert!(handle.is_null());
    assert_eq!(
        unsafe { pdtrank_overline_parse(ptr::null(), &mut handle) },
        PdtrankStatus::NullArgument
    );
    // free of null is a no-op
    unsafe { pdtrank_overline_free(ptr::null_mut()) };
}

#[test]
fn series_handles() {
    let mut series: *mut PdtrankSeries = ptr::null_mut();
    assert_eq!(
        unsafe { pdtrank_series_new(PdtrankSeriesKind::Pdt, 10, &mut series) },
        PdtrankStatus::Ok
    );
    let mut precision = 0u32;
    assert_eq!(
        unsafe { pdtrank_series_precision(series, &mut precision) },
        PdtrankStatus::Ok
    );
    assert_eq!(precision, 10);

    let mut coeff = 0i64;
    assert_eq!(
        unsafe { pdtrank_series_coeff_i64(series, 5, &mut coeff) },
        PdtrankStatus::Ok
    );
    assert_eq!(coeff, 24);
    assert_eq!(
        unsafe { pdtrank_series_coeff_i64(series, 11, &mut coeff) },
        PdtrankStatus::InvalidArgument
    );

    let text =
        read_string(|buf, cap, req| unsafe { pdtrank_series_coeff_str(series, 10, buf, cap, req) });
    assert_eq!(text, "346");
    unsafe { pdtrank_series_free(series) };

    // the dissection series vanishes at exponents 2 mod 3
    let mut g: *mut PdtrankSeries = ptr::null_mut();
    assert_eq!(
        unsafe { pdtrank_series_new(PdtrankSeriesKind::DissectionG, 20, &mut g) },
        PdtrankStatus::Ok
    );
    for n in [2u32, 5, 8, 11, 14, 17, 20] {
        assert_eq!(
            unsafe { pdtrank_series_coeff_i64(g, n, &mut coeff) },
            PdtrankStatus::Ok
        );
        assert_eq!(coeff, 0, "G at q^{n}");
    }
    unsafe { pdtrank_series_free(g) };
}

#[test]
fn generated_header_exports_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/pdtrank.h"))
        .expect("build script wrote include/pdtrank.h");
    for symbol in [
        "pdtrank_version",
        "pdtrank_pd_count",
        "pdtrank_pdt_count",
        "pdtrank_crank",
        "pdtrank_overline_parse",
        "pdtrank_overline_free",
        "pdtrank_overline_format",
        "pdtrank_overline_weight",
        "pdtrank_overline_rank",
        "pdtrank_overline_modified_rank",
        "pdtrank_overline_class",
        "pdtrank_overline_delta",
        "pdtrank_series_new",
        "pdtrank_series_free",
        "pdtrank_series_precision",
        "pdtrank_series_coeff_i64",
        "pdtrank_series_coeff_str",
        "PDTRANK_STATUS_BUFFER_TOO_SMALL",
        "PDTRANK_CLASS_A4",
        "PDTRANK_SERIES_KIND_DISSECTION_G",
    ] {
        assert!(header.contains(symbol), "header missing {symbol}");
    }
}
