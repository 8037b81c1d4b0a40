//! C ABI for the densecode library.
//!
//! Conventions: every fallible function returns a [`DcStatus`] and writes
//! its result through an out-parameter. Handles (`DcState`, `DcCodebook`)
//! are opaque and freed with their `_free` function. Strings returned
//! through `char**` are UTF-8, NUL-terminated, and freed with
//! [`dc_string_free`]. On failure the thread-local message from
//! [`dc_last_error`] describes the problem; the pointer stays valid until
//! the next failing call on the same thread.

#![allow(clippy::missing_safety_doc)] // pointer contracts are in the crate docs

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use densecode::codec::{Codebook, Ordering};
use densecode::select::FilterMode;
use densecode::{builtin_state, select, LabelBook, PositionSet, SymmetricState, TableFormat};

/// Status codes shared with the C side.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    /// A text input failed to parse.
    ParseError = 1,
    /// Operator length and operated-qubit count disagree.
    ArityError = 2,
    /// The state violates an evenness/orthogonality constraint, or the
    /// triple fails verification.
    ConstraintError = 3,
    /// Index out of range or no matching codeword.
    LookupError = 4,
    /// Null pointer or invalid UTF-8 argument.
    BadArgument = 5,
    /// Internal invariant violation.
    InternalError = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &densecode::Error) -> DcStatus {
    use densecode::Error as E;
    match err {
        E::Parse { .. } | E::Json(_) => DcStatus::ParseError,
        E::Arity(_) => DcStatus::ArityError,
        E::Constraint1(_)
        | E::Constraint2(_)
        | E::Condition2(_)
        | E::NotOrthogonal { .. }
        | E::ChunkLength { .. } => {
            DcStatus::ConstraintError
        }
        E::NoMatch | E::IndexOutOfRange { .. } | E::UnknownState(_) | E::UnknownLabel(_) => {
            DcStatus::LookupError
        }
        E::Usage(_) | E::Io(_) => DcStatus::BadArgument,
        E::Ambiguous(_, _) | E::Internal(_) => DcStatus::InternalError,
    }
}

fn fail(err: densecode::Error) -> DcStatus {
    let status = status_of(&err);
    set_error(&err.to_string());
    status
}

/// Opaque symmetric-state handle.
pub struct DcState(SymmetricState);

/// Opaque codebook handle.
pub struct DcCodebook(Codebook);

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, DcStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(DcStatus::BadArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        DcStatus::BadArgument
    })
}

fn give_string(out: *mut *mut c_char, text: String) -> DcStatus {
    if out.is_null() {
        set_error("null output pointer");
        return DcStatus::BadArgument;
    }
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            DcStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            DcStatus::InternalError
        }
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn dc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread; valid until the next
/// failing call. Do not free.
#[no_mangle]
pub extern "C" fn dc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned through a `char**` out-parameter.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Creates a state from a builtin name (`ghz3`, `w1_4`, `cluster5`, …).
#[no_mangle]
pub unsafe extern "C" fn dc_state_builtin(
    name: *const c_char,
    out: *mut *mut DcState,
) -> DcStatus {
    let name = match cstr(name) {
        Ok(s) => s,
        Err(st) => return st,
    };
    if out.is_null() {
        set_error("null output pointer");
        return DcStatus::BadArgument;
    }
    match builtin_state(name) {
        Ok(state) => {
            *out = Box::into_raw(Box::new(DcState(state)));
            DcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parses a state from its text form (`+000`, `-111`, comma or newline
/// separated, `#` comments).
#[no_mangle]
pub unsafe extern "C" fn dc_state_parse(
    text: *const c_char,
    out: *mut *mut DcState,
) -> DcStatus {
    let text = match cstr(text) {
        Ok(s) => s,
        Err(st) => return st,
    };
    if out.is_null() {
        set_error("null output pointer");
        return DcStatus::BadArgument;
    }
    match SymmetricState::parse(text) {
        Ok(state) => {
            *out = Box::into_raw(Box::new(DcState(state)));
            DcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn dc_state_free(state: *mut DcState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Writes the state's one-item-per-line text form.
#[no_mangle]
pub unsafe extern "C" fn dc_state_format(
    state: *const DcState,
    out: *mut *mut c_char,
) -> DcStatus {
    let Some(state) = state.as_ref() else {
        set_error("null state handle");
        return DcStatus::BadArgument;
    };
    give_string(out, state.0.format())
}

/// JSON listing of the 2^t-order subgroup construction for t qubits.
#[no_mangle]
pub unsafe extern "C" fn dc_construct_json(t: u32, out: *mut *mut c_char) -> DcStatus {
    if t == 0 || t > 16 {
        set_error("qubit count must be in 1..=16");
        return DcStatus::BadArgument;
    }
    let labels = match LabelBook::load() {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    let subs = densecode::construct_mgp_subgroups(t as usize);
    #[derive(serde::Serialize)]
    struct Row {
        key: String,
        labels: Vec<String>,
        order: usize,
        elements: Vec<String>,
    }
    let rows: Vec<Row> = subs
        .iter()
        .map(|s| Row {
            key: s.canonical_key(),
            labels: labels.labels_for(s),
            order: s.order,
            elements: s.elements.iter().map(|e| e.to_compact()).collect(),
        })
        .collect();
    match serde_json::to_string_pretty(&rows) {
        Ok(json) => give_string(out, json),
        Err(e) => fail(e.into()),
    }
}

/// Selection report (JSON) for a state. `filter`: 0 none, 1 literal,
/// 2 semantic.
#[no_mangle]
pub unsafe extern "C" fn dc_select_json(
    state: *const DcState,
    filter: u32,
    out: *mut *mut c_char,
) -> DcStatus {
    let Some(state) = state.as_ref() else {
        set_error("null state handle");
        return DcStatus::BadArgument;
    };
    let filter = match filter {
        0 => FilterMode::None,
        1 => FilterMode::Literal,
        2 => FilterMode::Semantic,
        _ => {
            set_error("filter must be 0 (none), 1 (literal) or 2 (semantic)");
            return DcStatus::BadArgument;
        }
    };
    let labels = match LabelBook::load() {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    match select(&state.0, "state", filter, &labels).and_then(|r| r.to_json()) {
        Ok(json) => give_string(out, json),
        Err(e) => fail(e),
    }
}

/// Builds a verified codebook from a subgroup display label and 1-based
/// operated-qubit indices.
#[no_mangle]
pub unsafe extern "C" fn dc_codebook_build(
    state: *const DcState,
    subgroup_label: *const c_char,
    positions: *const u32,
    positions_len: usize,
    out: *mut *mut DcCodebook,
) -> DcStatus {
    let Some(state) = state.as_ref() else {
        set_error("null state handle");
        return DcStatus::BadArgument;
    };
    let label = match cstr(subgroup_label) {
        Ok(s) => s,
        Err(st) => return st,
    };
    if positions.is_null() || out.is_null() {
        set_error("null pointer argument");
        return DcStatus::BadArgument;
    }
    let indices: Vec<usize> = std::slice::from_raw_parts(positions, positions_len)
        .iter()
        .map(|&p| p as usize)
        .collect();
    let build = || -> densecode::Result<Codebook> {
        let labels = LabelBook::load()?;
        let sub = labels.subgroup(label)?;
        let pos = PositionSet::new(indices.clone(), state.0.qubits())?;
        Codebook::build(&sub, &pos, &state.0, &Ordering::Canonical)
    };
    match build() {
        Ok(cb) => {
            *out = Box::into_raw(Box::new(DcCodebook(cb)));
            DcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn dc_codebook_free(cb: *mut DcCodebook) {
    if !cb.is_null() {
        drop(Box::from_raw(cb));
    }
}

/// Number of codewords (2^t).
#[no_mangle]
pub unsafe extern "C" fn dc_codebook_len(cb: *const DcCodebook) -> usize {
    cb.as_ref().map(|c| c.0.len()).unwrap_or(0)
}

/// Writes the text form of codeword `index`.
#[no_mangle]
pub unsafe extern "C" fn dc_encode(
    cb: *const DcCodebook,
    index: usize,
    out: *mut *mut c_char,
) -> DcStatus {
    let Some(cb) = cb.as_ref() else {
        set_error("null codebook handle");
        return DcStatus::BadArgument;
    };
    match cb.0.encode(index) {
        Ok(state) => give_string(out, state.format()),
        Err(e) => fail(e),
    }
}

/// Decodes a received state (text form) to its message index.
#[no_mangle]
pub unsafe extern "C" fn dc_decode(
    cb: *const DcCodebook,
    state_text: *const c_char,
    out_index: *mut usize,
) -> DcStatus {
    let Some(cb) = cb.as_ref() else {
        set_error("null codebook handle");
        return DcStatus::BadArgument;
    };
    let text = match cstr(state_text) {
        Ok(s) => s,
        Err(st) => return st,
    };
    if out_index.is_null() {
        set_error("null output pointer");
        return DcStatus::BadArgument;
    }
    let decode = || -> densecode::Result<usize> {
        let state = SymmetricState::parse(text)?;
        cb.0.decode(&state)
    };
    match decode() {
        Ok(i) => {
            *out_index = i;
            DcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Round-trips a classical bit message; writes the transcript JSON.
#[no_mangle]
pub unsafe extern "C" fn dc_simulate_json(
    cb: *const DcCodebook,
    bits: *const c_char,
    out: *mut *mut c_char,
) -> DcStatus {
    let Some(cb) = cb.as_ref() else {
        set_error("null codebook handle");
        return DcStatus::BadArgument;
    };
    let bits = match cstr(bits) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match cb.0.simulate_roundtrip(bits).and_then(|t| t.to_json()) {
        Ok(json) => give_string(out, json),
        Err(e) => fail(e),
    }
}

/// Emits the dense-coding table. `format`: 0 markdown, 1 csv, 2 json.
#[no_mangle]
pub unsafe extern "C" fn dc_table(
    cb: *const DcCodebook,
    format: u32,
    out: *mut *mut c_char,
) -> DcStatus {
    let Some(cb) = cb.as_ref() else {
        set_error("null codebook handle");
        return DcStatus::BadArgument;
    };
    let format = match format {
        0 => TableFormat::Md,
        1 => TableFormat::Csv,
        2 => TableFormat::Json,
        _ => {
            set_error("format must be 0 (md), 1 (csv) or 2 (json)");
            return DcStatus::BadArgument;
        }
    };
    give_string(out, cb.0.emit_table(format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(ptr: *mut c_char) -> String {
        let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
        dc_string_free(ptr);
        s
    }

    #[test]
    fn version_is_a_cstring() {
        let v = unsafe { CStr::from_ptr(dc_version()) };
        assert!(!v.to_str().unwrap().is_empty());
    }

    #[test]
    fn state_round_trip_through_the_abi() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(dc_state_builtin(c("ghz3").as_ptr(), &mut state), DcStatus::Ok);
            let mut text: *mut c_char = ptr::null_mut();
            assert_eq!(dc_state_format(state, &mut text), DcStatus::Ok);
            assert_eq!(take_string(text), "+000\n+111");
            dc_state_free(state);
        }
    }

    #[test]
    fn unknown_builtin_reports_lookup_error() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(
                dc_state_builtin(c("nope").as_ptr(), &mut state),
                DcStatus::LookupError
            );
            let msg = CStr::from_ptr(dc_last_error()).to_str().unwrap();
            assert!(msg.contains("nope"));
        }
    }

    #[test]
    fn encode_decode_through_the_abi() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(dc_state_builtin(c("ghz3").as_ptr(), &mut state), DcStatus::Ok);
            let mut cb: *mut DcCodebook = ptr::null_mut();
            let positions = [1u32, 2u32];
            assert_eq!(
                dc_codebook_build(state, c("G2^12").as_ptr(), positions.as_ptr(), 2, &mut cb),
                DcStatus::Ok
            );
            assert_eq!(dc_codebook_len(cb), 8);

            let mut text: *mut c_char = ptr::null_mut();
            assert_eq!(dc_encode(cb, 4, &mut text), DcStatus::Ok);
            let encoded = take_string(text);
            assert_eq!(encoded, "-110\n+001");

            let mut index: usize = 99;
            assert_eq!(dc_decode(cb, c(&encoded).as_ptr(), &mut index), DcStatus::Ok);
            assert_eq!(index, 4);

            assert_eq!(dc_encode(cb, 8, &mut text), DcStatus::LookupError);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(dc_simulate_json(cb, c("101110").as_ptr(), &mut json), DcStatus::Ok);
            let transcript = take_string(json);
            assert!(transcript.contains("\"delivered\": \"101110\""));

            dc_codebook_free(cb);
            dc_state_free(state);
        }
    }

    #[test]
    fn non_verifying_triple_is_a_constraint_error() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(dc_state_builtin(c("ghz3").as_ptr(), &mut state), DcStatus::Ok);
            let mut cb: *mut DcCodebook = ptr::null_mut();
            let positions = [1u32, 2u32];
            assert_eq!(
                dc_codebook_build(state, c("G2^3").as_ptr(), positions.as_ptr(), 2, &mut cb),
                DcStatus::ConstraintError
            );
            let msg = CStr::from_ptr(dc_last_error()).to_str().unwrap();
            assert!(msg.contains("Z⊗Z"), "{msg}");
            dc_state_free(state);
        }
    }

    #[test]
    fn select_json_through_the_abi() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(dc_state_builtin(c("w3").as_ptr(), &mut state), DcStatus::Ok);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(dc_select_json(state, 0, &mut json), DcStatus::Ok);
            let report = take_string(json);
            assert!(report.contains("even_items"));
            dc_state_free(state);
        }
    }

    #[test]
    fn construct_json_lists_lambda_entries() {
        unsafe {
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(dc_construct_json(3, &mut json), DcStatus::Ok);
            let listing = take_string(json);
            let rows: serde_json::Value = serde_json::from_str(&listing).unwrap();
            assert_eq!(rows.as_array().unwrap().len(), 15);
            assert_eq!(dc_construct_json(0, &mut json), DcStatus::BadArgument);
        }
    }

    #[test]
    fn null_arguments_do_not_crash() {
        unsafe {
            let mut state: *mut DcState = ptr::null_mut();
            assert_eq!(dc_state_builtin(ptr::null(), &mut state), DcStatus::BadArgument);
            assert_eq!(dc_state_parse(c("+00,+11").as_ptr(), ptr::null_mut()), DcStatus::BadArgument);
            assert_eq!(dc_codebook_len(ptr::null()), 0);
            dc_state_free(ptr::null_mut());
            dc_codebook_free(ptr::null_mut());
            dc_string_free(ptr::null_mut());
        }
    }
}
