//! C ABI for the ferrers library.
//!
//! Handles are opaque pointers owned by the caller and released through the
//! matching `_free` function. Every fallible call returns a status code and
//! writes its result through an out-pointer only on `FERRERS_STATUS_OK`.
//! Coefficients can be read as decimal strings to avoid any integer-width
//! assumptions on the consumer side.
//!
//! The C header is generated by cbindgen into `include/ferrers.h` at build
//! time.

use std::ffi::{c_char, CString};

use ferrers::analysis;
use ferrers::genfunc;
use ferrers::search;
use ferrers::{CoeffSeq, Error, Partition};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FerrersStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The part sequence does not form a valid partition for the operation.
    InvalidPartition = 2,
    /// An argument is outside the supported domain.
    InvalidArgument = 3,
    /// An index is out of range or a value does not fit the requested width.
    OutOfRange = 4,
    /// The search completed without a result.
    NotFound = 5,
    /// An internal cross-check failed; indicates a library bug.
    VerificationFailed = 6,
}

/// Computation route for the rank generating function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FerrersMethod {
    /// Subset expansion, the default.
    Formula = 0,
    /// Largest-part recursion with memoization.
    Recursion = 1,
    /// First-part-bounded dynamic program (weight 1 only).
    Dp = 2,
}

/// Verdict on a coefficient sequence.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct FerrersUnimodality {
    pub unimodal: bool,
    /// Smallest index attaining the maximum coefficient.
    pub peak_index: u64,
    /// Smallest index with strictly larger coefficients on both sides,
    /// or -1 when the sequence is unimodal.
    pub first_dip_index: i64,
}

/// A verified nonunimodal 4-part witness.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct FerrersWitness4 {
    pub lambda: [u32; 4],
    /// 12-divisible base index; the dip sits at `n_base + 1`.
    pub n_base: u64,
    pub m: u64,
    pub ell: u64,
    pub n: u64,
    /// Coefficient of the difference series at `n_base + 1` (negative).
    pub f: i64,
    /// Coefficient of the difference series at `n_base + 2` (positive).
    pub g: i64,
}

/// Opaque partition handle.
pub struct FerrersPartition(Partition);

/// Opaque coefficient-sequence handle.
pub struct FerrersSeries(CoeffSeq);

fn status_of(error: &Error) -> FerrersStatus {
    match error {
        Error::NotWeaklyDecreasing { .. }
        | Error::NotStrictlyDecreasing
        | Error::WrongLength { .. } => FerrersStatus::InvalidPartition,
        Error::VerificationFailed(_) => FerrersStatus::VerificationFailed,
        Error::WindowOutOfRange { .. } | Error::SubsetElementOutOfRange { .. } => {
            FerrersStatus::OutOfRange
        }
        _ => FerrersStatus::InvalidArgument,
    }
}

/// Library version as a static null-terminated string; never freed.
#[no_mangle]
pub extern "C" fn ferrers_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static human-readable description of a status code; never freed.
#[no_mangle]
pub extern "C" fn ferrers_status_message(status: FerrersStatus) -> *const c_char {
    let text: &'static str = match status {
        FerrersStatus::Ok => "ok\0",
        FerrersStatus::NullPointer => "null pointer argument\0",
        FerrersStatus::InvalidPartition => "invalid partition\0",
        FerrersStatus::InvalidArgument => "invalid argument\0",
        FerrersStatus::OutOfRange => "out of range\0",
        FerrersStatus::NotFound => "not found\0",
        FerrersStatus::VerificationFailed => "internal verification failed\0",
    };
    text.as_ptr() as *const c_char
}

/// Builds a partition from `len` weakly decreasing nonnegative parts
/// (trailing zeros are stripped). `parts` may be null only when `len` is 0.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t` values and `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_new(
    parts: *const u32,
    len: usize,
    out: *mut *mut FerrersPartition,
) -> FerrersStatus {
    if out.is_null() || (parts.is_null() && len > 0) {
        return FerrersStatus::NullPointer;
    }
    let raw: &[u32] = if len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(parts, len)
    };
    match Partition::new(raw) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(FerrersPartition(p)));
            FerrersStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a partition handle; null is ignored.
///
/// # Safety
/// `p` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_free(p: *mut FerrersPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of parts; 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_len(p: *const FerrersPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Sum of the parts; 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_size(p: *const FerrersPartition) -> u64 {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// The `k`-th part, 1-indexed from the largest.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_part(
    p: *const FerrersPartition,
    k: usize,
    out: *mut u32,
) -> FerrersStatus {
    let Some(p) = p.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    if k < 1 || k > p.0.len() {
        return FerrersStatus::OutOfRange;
    }
    *out = p.0.part(k);
    FerrersStatus::Ok
}

/// Writes whether the diagram of `mu` fits inside the diagram of `lambda`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_contains(
    lambda: *const FerrersPartition,
    mu: *const FerrersPartition,
    out: *mut bool,
) -> FerrersStatus {
    let (Some(lambda), Some(mu)) = (lambda.as_ref(), mu.as_ref()) else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    *out = lambda.0.contains(&mu.0);
    FerrersStatus::Ok
}

/// Builds the conjugate (transposed diagram) partition.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_partition_conjugate(
    p: *const FerrersPartition,
    out: *mut *mut FerrersPartition,
) -> FerrersStatus {
    let Some(p) = p.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(FerrersPartition(p.0.conjugate())));
    FerrersStatus::Ok
}

/// Computes the weighted rank generating function. `truncate` of -1 means
/// the full degree; other negative values are rejected. The partition must
/// have fewer than 64 parts and `weight` must be at least 1; `Dp` supports
/// weight 1 only.
///
/// # Safety
/// `lambda` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_rank_gf(
    lambda: *const FerrersPartition,
    weight: u32,
    truncate: i64,
    method: FerrersMethod,
    out: *mut *mut FerrersSeries,
) -> FerrersStatus {
    let Some(lambda) = lambda.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    if weight < 1 || truncate < -1 || lambda.0.len() >= 64 {
        return FerrersStatus::InvalidArgument;
    }
    let t = if truncate == -1 {
        genfunc::full_degree(&lambda.0, weight)
    } else {
        truncate as usize
    };
    let series = match method {
        FerrersMethod::Formula => genfunc::rank_gf_formula(&lambda.0, weight, t),
        FerrersMethod::Recursion => genfunc::rank_gf_recursive(&lambda.0, weight, t),
        FerrersMethod::Dp => {
            if weight != 1 {
                return FerrersStatus::InvalidArgument;
            }
            genfunc::rank_gf_dp(&lambda.0, t)
        }
    };
    *out = Box::into_raw(Box::new(FerrersSeries(series)));
    FerrersStatus::Ok
}

/// Computes the distinct-parts generating function for a strictly
/// decreasing partition. `truncate` of -1 means the full degree.
///
/// # Safety
/// `lambda` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_distinct_rank_gf(
    lambda: *const FerrersPartition,
    truncate: i64,
    out: *mut *mut FerrersSeries,
) -> FerrersStatus {
    let Some(lambda) = lambda.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    if truncate < -1 || lambda.0.len() >= 64 {
        return FerrersStatus::InvalidArgument;
    }
    let t = if truncate == -1 {
        lambda.0.size() as usize
    } else {
        truncate as usize
    };
    match genfunc::distinct_rank_gf(&lambda.0, t) {
        Ok(series) => {
            *out = Box::into_raw(Box::new(FerrersSeries(series)));
            FerrersStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a series handle; null is ignored.
///
/// # Safety
/// `s` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn ferrers_series_free(s: *mut FerrersSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of stored coefficients (truncation + 1); 0 for null.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ferrers_series_len(s: *const FerrersSeries) -> usize {
    s.as_ref().map_or(0, |s| s.0.coeffs().len())
}

/// Reads one coefficient as a signed 64-bit integer; `OutOfRange` when the
/// index exceeds the truncation or the value does not fit.
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_series_coeff_i64(
    s: *const FerrersSeries,
    index: usize,
    out: *mut i64,
) -> FerrersStatus {
    let Some(s) = s.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    let Some(value) = s.0.coeffs().get(index) else {
        return FerrersStatus::OutOfRange;
    };
    match i64::try_from(value) {
        Ok(v) => {
            *out = v;
            FerrersStatus::Ok
        }
        Err(_) => FerrersStatus::OutOfRange,
    }
}

/// Reads one coefficient as a decimal string; release it with
/// `ferrers_string_free`.
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_series_coeff_decimal(
    s: *const FerrersSeries,
    index: usize,
    out: *mut *mut c_char,
) -> FerrersStatus {
    let Some(s) = s.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    let Some(value) = s.0.coeffs().get(index) else {
        return FerrersStatus::OutOfRange;
    };
    let text = CString::new(value.to_string()).expect("decimal digits have no NUL");
    *out = text.into_raw();
    FerrersStatus::Ok
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn ferrers_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Classifies a coefficient sequence as unimodal or not.
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ferrers_unimodality(
    s: *const FerrersSeries,
    out: *mut FerrersUnimodality,
) -> FerrersStatus {
    let Some(s) = s.as_ref() else {
        return FerrersStatus::NullPointer;
    };
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    let report = analysis::unimodality_report(&s.0);
    *out = FerrersUnimodality {
        unimodal: report.unimodal,
        peak_index: report.peak_index as u64,
        first_dip_index: report.first_dip_index.map_or(-1, |d| d as i64),
    };
    FerrersStatus::Ok
}

/// Searches the 4-part quadratic witness family at the given `m` (at least
/// 1). `NotFound` when no witness exists there; on success the witness has
/// already been re-verified against the truncated series.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ferrers_find_witness4(
    m: u64,
    out: *mut FerrersWitness4,
) -> FerrersStatus {
    if out.is_null() {
        return FerrersStatus::NullPointer;
    }
    if m < 1 {
        return FerrersStatus::InvalidArgument;
    }
    match search::find_witness(m) {
        Ok(Some(w)) => {
            let parts = w.lambda.parts();
            let (Ok(f), Ok(g)) = (i64::try_from(&w.f_value), i64::try_from(&w.g_value)) else {
                return FerrersStatus::OutOfRange;
            };
            *out = FerrersWitness4 {
                lambda: [parts[0], parts[1], parts[2], parts[3]],
                n_base: w.n_base as u64,
                m: w.m,
                ell: w.ell,
                n: w.n,
                f,
                g,
            };
            FerrersStatus::Ok
        }
        Ok(None) => FerrersStatus::NotFound,
        Err(e) => status_of(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;
    use std::ptr;

    unsafe fn make_partition(parts: &[u32]) -> *mut FerrersPartition {
        let mut out = ptr::null_mut();
        let status = ferrers_partition_new(parts.as_ptr(), parts.len(), &mut out);
        assert_eq!(status, FerrersStatus::Ok);
        out
    }

    #[test]
    fn partition_lifecycle_and_accessors() {
        unsafe {
            let p = make_partition(&[4, 3, 1]);
            assert_eq!(ferrers_partition_len(p), 3);
            assert_eq!(ferrers_partition_size(p), 8);
            let mut part = 0u32;
            assert_eq!(ferrers_partition_part(p, 1, &mut part), FerrersStatus::Ok);
            assert_eq!(part, 4);
            assert_eq!(
                ferrers_partition_part(p, 4, &mut part),
                FerrersStatus::OutOfRange
            );
            ferrers_partition_free(p);
        }
    }

    #[test]
    fn invalid_partition_is_rejected() {
        unsafe {
            let parts = [3u32, 4];
            let mut out = ptr::null_mut();
            assert_eq!(
                ferrers_partition_new(parts.as_ptr(), 2, &mut out),
                FerrersStatus::InvalidPartition
            );
            assert_eq!(
                ferrers_partition_new(ptr::null(), 2, &mut out),
                FerrersStatus::NullPointer
            );
        }
    }

    #[test]
    fn containment_and_conjugate() {
        unsafe {
            let lambda = make_partition(&[2, 2]);
            let mu = make_partition(&[2, 1]);
            let mut held = false;
            assert_eq!(
                ferrers_partition_contains(lambda, mu, &mut held),
                FerrersStatus::Ok
            );
            assert!(held);
            let mut conj = ptr::null_mut();
            assert_eq!(
                ferrers_partition_conjugate(mu, &mut conj),
                FerrersStatus::Ok
            );
            assert_eq!(ferrers_partition_len(conj), 2);
            ferrers_partition_free(conj);
            ferrers_partition_free(mu);
            ferrers_partition_free(lambda);
        }
    }

    #[test]
    fn rank_gf_round_trip_through_the_abi() {
        unsafe {
            let p = make_partition(&[2, 1]);
            let mut series = ptr::null_mut();
            assert_eq!(
                ferrers_rank_gf(p, 1, -1, FerrersMethod::Formula, &mut series),
                FerrersStatus::Ok
            );
            assert_eq!(ferrers_series_len(series), 4);
            let mut expected = [1i64, 1, 2, 1];
            for (n, want) in expected.iter_mut().enumerate() {
                let mut got = 0i64;
                assert_eq!(
                    ferrers_series_coeff_i64(series, n, &mut got),
                    FerrersStatus::Ok
                );
                assert_eq!(got, *want, "coefficient {n}");
            }
            let mut text = ptr::null_mut();
            assert_eq!(
                ferrers_series_coeff_decimal(series, 2, &mut text),
                FerrersStatus::Ok
            );
            assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "2");
            ferrers_string_free(text);

            let mut verdict = FerrersUnimodality {
                unimodal: false,
                peak_index: 0,
                first_dip_index: 0,
            };
            assert_eq!(ferrers_unimodality(series, &mut verdict), FerrersStatus::Ok);
            assert!(verdict.unimodal);
            assert_eq!(verdict.first_dip_index, -1);
            ferrers_series_free(series);

            // weight and method guards
            assert_eq!(
                ferrers_rank_gf(p, 0, -1, FerrersMethod::Formula, &mut series),
                FerrersStatus::InvalidArgument
            );
            assert_eq!(
                ferrers_rank_gf(p, 2, -1, FerrersMethod::Dp, &mut series),
                FerrersStatus::InvalidArgument
            );
            ferrers_partition_free(p);
        }
    }

    #[test]
    fn distinct_requires_strict_parts() {
        unsafe {
            let p = make_partition(&[2, 2]);
            let mut series = ptr::null_mut();
            assert_eq!(
                ferrers_distinct_rank_gf(p, -1, &mut series),
                FerrersStatus::InvalidPartition
            );
            ferrers_partition_free(p);

            let p = make_partition(&[3, 2, 1]);
            assert_eq!(
                ferrers_distinct_rank_gf(p, -1, &mut series),
                FerrersStatus::Ok
            );
            assert_eq!(ferrers_series_len(series), 7);
            ferrers_series_free(series);
            ferrers_partition_free(p);
        }
    }

    #[test]
    fn witness_search_statuses() {
        unsafe {
            let mut w = FerrersWitness4 {
                lambda: [0; 4],
                n_base: 0,
                m: 0,
                ell: 0,
                n: 0,
                f: 0,
                g: 0,
            };
            assert_eq!(ferrers_find_witness4(10, &mut w), FerrersStatus::NotFound);
            assert_eq!(ferrers_find_witness4(1200, &mut w), FerrersStatus::Ok);
            assert_eq!(w.lambda, [14399, 14075, 14075, 14075]);
            assert_eq!(w.n_base, 28776);
            assert_eq!(w.f, -2214);
            assert_eq!(w.g, 24);
            assert_eq!(ferrers_find_witness4(0, &mut w), FerrersStatus::InvalidArgument);
        }
    }

    #[test]
    fn version_and_messages_are_static_strings() {
        unsafe {
            let v = CStr::from_ptr(ferrers_version()).to_str().unwrap();
            assert_eq!(v, env!("CARGO_PKG_VERSION"));
            let msg = CStr::from_ptr(ferrers_status_message(FerrersStatus::NotFound));
            assert_eq!(msg.to_str().unwrap(), "not found");
        }
    }
}
