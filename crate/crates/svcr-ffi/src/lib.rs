//! C ABI for the committee-selection engine.
//!
//! The surface follows the usual handle pattern: opaque pointers created
//! and destroyed by paired functions, status codes for every fallible
//! call, strings allocated by the library and released through
//! [`svcr_string_free`]. The most recent error message per thread is
//! available from [`svcr_last_error_message`].
//!
//! The generated header lands in `include/svcr.h` at build time.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;

use svcr::io::{self, ProfileFormat};
use svcr::model::{EvaluationProfile, TUGame};
use svcr::rules::{self, TiePolicy};
use svcr::shapley::{self, ScoreVector};
use svcr::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvcrStatus {
    SvcrOk = 0,
    SvcrNullPointer = 1,
    SvcrUtf8Error = 2,
    SvcrParseError = 3,
    SvcrInvalidArgument = 4,
    SvcrTieError = 5,
    SvcrPanic = 6,
}

/// Profile encodings accepted by the parsers.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvcrFormat {
    SvcrFormatDense = 0,
    SvcrFormatSparse = 1,
}

/// Boundary-tie handling for committee selection.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvcrTiePolicy {
    SvcrTiePolicyLex = 0,
    SvcrTiePolicyError = 1,
    SvcrTiePolicyReport = 2,
}

/// Opaque parsed profile handle.
pub struct SvcrProfile(EvaluationProfile);

/// Opaque game handle.
pub struct SvcrGame(TUGame);

/// Opaque score-vector handle.
pub struct SvcrScores(ScoreVector);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(err: &Error) -> SvcrStatus {
    match err {
        Error::BoundaryTie { .. } => SvcrStatus::SvcrTieError,
        Error::MalformedHeader(_)
        | Error::MalformedDocument(_)
        | Error::NonBinaryCell { .. }
        | Error::InvalidRational(_) => SvcrStatus::SvcrParseError,
        _ => SvcrStatus::SvcrInvalidArgument,
    }
}

fn fail(err: &Error) -> SvcrStatus {
    let status = status_of(err);
    set_last_error(err.to_string());
    status
}

fn guard(body: impl FnOnce() -> SvcrStatus) -> SvcrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic".to_string());
            SvcrStatus::SvcrPanic
        }
    }
}

fn into_raw_string(text: String) -> *mut c_char {
    CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `text` must be a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SvcrStatus> {
    if text.is_null() {
        set_last_error("null input pointer".to_string());
        return Err(SvcrStatus::SvcrNullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("input is not valid UTF-8".to_string());
        SvcrStatus::SvcrUtf8Error
    })
}

fn profile_format(format: SvcrFormat) -> ProfileFormat {
    match format {
        SvcrFormat::SvcrFormatDense => ProfileFormat::Dense,
        SvcrFormat::SvcrFormatSparse => ProfileFormat::Sparse,
    }
}

fn tie_policy(policy: SvcrTiePolicy) -> TiePolicy {
    match policy {
        SvcrTiePolicy::SvcrTiePolicyLex => TiePolicy::Lex,
        SvcrTiePolicy::SvcrTiePolicyError => TiePolicy::Error,
        SvcrTiePolicy::SvcrTiePolicyReport => TiePolicy::Report,
    }
}

/// Returns the most recent error message on this thread, or NULL. The
/// caller owns the string and must free it with [`svcr_string_free`].
#[no_mangle]
pub extern "C" fn svcr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |msg| {
                CString::new(msg.as_bytes()).map_or(std::ptr::null_mut(), CString::into_raw)
            })
    })
}

/// Frees a string allocated by this library. NULL is ignored.
///
/// # Safety
/// `text` must have been returned by an `svcr_*` function and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn svcr_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Parses a profile document. On success stores a new handle in `out`;
/// the caller frees it with [`svcr_profile_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn svcr_profile_parse(
    text: *const c_char,
    format: SvcrFormat,
    out: *mut *mut SvcrProfile,
) -> SvcrStatus {
    guard(|| {
        if out.is_null() {
            set_last_error("null output pointer".to_string());
            return SvcrStatus::SvcrNullPointer;
        }
        let text = match read_str(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        match io::parse_profile(text, profile_format(format)) {
            Ok(parsed) => {
                *out = Box::into_raw(Box::new(SvcrProfile(parsed.profile)));
                SvcrStatus::SvcrOk
            }
            Err(err) => fail(&err),
        }
    })
}

/// # Safety
/// `profile` must come from [`svcr_profile_parse`] and not be freed
/// twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn svcr_profile_free(profile: *mut SvcrProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Number of voters in the profile; 0 when `profile` is NULL.
///
/// # Safety
/// `profile` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_profile_voter_count(profile: *const SvcrProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.voter_count())
}

/// Number of alternatives in the profile; 0 when `profile` is NULL.
///
/// # Safety
/// `profile` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_profile_alternative_count(profile: *const SvcrProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.alternatives().len())
}

/// Name of alternative `index`, or NULL when out of range. Free with
/// [`svcr_string_free`].
///
/// # Safety
/// `profile` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_profile_alternative_name(
    profile: *const SvcrProfile,
    index: usize,
) -> *mut c_char {
    let Some(profile) = profile.as_ref() else {
        return std::ptr::null_mut();
    };
    if index >= profile.0.alternatives().len() {
        return std::ptr::null_mut();
    }
    into_raw_string(profile.0.alternatives().name(index).to_string())
}

/// Builds the game induced by a profile. The caller frees the handle
/// with [`svcr_game_free`].
///
/// # Safety
/// `profile` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn svcr_game_build(
    profile: *const SvcrProfile,
    out: *mut *mut SvcrGame,
) -> SvcrStatus {
    guard(|| {
        if profile.is_null() || out.is_null() {
            set_last_error("null pointer".to_string());
            return SvcrStatus::SvcrNullPointer;
        }
        let game = TUGame::from_profile(&(*profile).0);
        *out = Box::into_raw(Box::new(SvcrGame(game)));
        SvcrStatus::SvcrOk
    })
}

/// # Safety
/// `game` must come from [`svcr_game_build`] and not be freed twice.
/// NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn svcr_game_free(game: *mut SvcrGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Worth of the coalition whose members are given by `bits` (bit `i`
/// set means alternative `i` is a member). Returns 0 for NULL handles.
///
/// # Safety
/// `game` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_game_worth(game: *const SvcrGame, bits: u32) -> i64 {
    game.as_ref()
        .map_or(0, |g| g.0.worth(svcr::Coalition::from_bits(bits)))
}

/// Computes exact Shapley scores for a game. The caller frees the handle
/// with [`svcr_scores_free`].
///
/// # Safety
/// `game` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn svcr_scores_compute(
    game: *const SvcrGame,
    out: *mut *mut SvcrScores,
) -> SvcrStatus {
    guard(|| {
        if game.is_null() || out.is_null() {
            set_last_error("null pointer".to_string());
            return SvcrStatus::SvcrNullPointer;
        }
        let scores = shapley::sparse(&(*game).0);
        *out = Box::into_raw(Box::new(SvcrScores(scores)));
        SvcrStatus::SvcrOk
    })
}

/// # Safety
/// `scores` must come from [`svcr_scores_compute`] and not be freed
/// twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn svcr_scores_free(scores: *mut SvcrScores) {
    if !scores.is_null() {
        drop(Box::from_raw(scores));
    }
}

/// Number of scores; 0 for NULL handles.
///
/// # Safety
/// `scores` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_scores_len(scores: *const SvcrScores) -> usize {
    scores.as_ref().map_or(0, |s| s.0.len())
}

/// Exact score of alternative `index` as a `num/den` string, or NULL
/// when out of range. Free with [`svcr_string_free`].
///
/// # Safety
/// `scores` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_scores_exact(
    scores: *const SvcrScores,
    index: usize,
) -> *mut c_char {
    let Some(scores) = scores.as_ref() else {
        return std::ptr::null_mut();
    };
    if index >= scores.0.len() {
        return std::ptr::null_mut();
    }
    into_raw_string(shapley::exact_string(scores.0.score(index)))
}

/// Score of alternative `index` rendered with `places` decimal digits,
/// or NULL when out of range. Free with [`svcr_string_free`].
///
/// # Safety
/// `scores` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn svcr_scores_decimal(
    scores: *const SvcrScores,
    index: usize,
    places: u32,
) -> *mut c_char {
    let Some(scores) = scores.as_ref() else {
        return std::ptr::null_mut();
    };
    if index >= scores.0.len() {
        return std::ptr::null_mut();
    }
    into_raw_string(shapley::decimal_string(
        scores.0.score(index),
        places as usize,
    ))
}

/// One-shot election: parses `text`, scores the profile, selects a
/// size-`k` committee under `policy`, and stores the results document
/// (JSON) in `out_json`. Free the string with [`svcr_string_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn svcr_elect_json(
    text: *const c_char,
    format: SvcrFormat,
    k: usize,
    policy: SvcrTiePolicy,
    decimals: u32,
    out_json: *mut *mut c_char,
) -> SvcrStatus {
    guard(|| {
        if out_json.is_null() {
            set_last_error("null output pointer".to_string());
            return SvcrStatus::SvcrNullPointer;
        }
        let text = match read_str(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let parsed = match io::parse_profile(text, profile_format(format)) {
            Ok(parsed) => parsed,
            Err(err) => return fail(&err),
        };
        match rules::shapley_committee(&parsed.profile, k, tie_policy(policy)) {
            Ok((ranking, committee)) => {
                let document =
                    io::results_document(&ranking, Some(&committee), &[], decimals as usize);
                *out_json = into_raw_string(document);
                SvcrStatus::SvcrOk
            }
            Err(err) => fail(&err),
        }
    })
}

/// One-shot rule comparison: parses `text` and stores the comparison
/// document (JSON) in `out_json`. Free the string with
/// [`svcr_string_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn svcr_compare_json(
    text: *const c_char,
    format: SvcrFormat,
    k: usize,
    policy: SvcrTiePolicy,
    decimals: u32,
    out_json: *mut *mut c_char,
) -> SvcrStatus {
    guard(|| {
        if out_json.is_null() {
            set_last_error("null output pointer".to_string());
            return SvcrStatus::SvcrNullPointer;
        }
        let text = match read_str(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let parsed = match io::parse_profile(text, profile_format(format)) {
            Ok(parsed) => parsed,
            Err(err) => return fail(&err),
        };
        match rules::compare_rules(&parsed.profile, k, tie_policy(policy)) {
            Ok(comparison) => {
                let document = io::comparison_document(&comparison, decimals as usize);
                *out_json = into_raw_string(document);
                SvcrStatus::SvcrOk
            }
            Err(err) => fail(&err),
        }
    })
}
