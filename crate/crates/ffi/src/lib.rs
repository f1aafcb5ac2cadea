//! C ABI over `cyclic-mvif`.
//!
//! Every entry point returns a [`CmvifStatus`]; on anything but
//! `CMVIF_STATUS_OK` a message is available from [`cmvif_last_error`] on the
//! same thread. Handles are opaque and owned by the caller once returned;
//! release them with the matching `_free` function. Field elements cross the
//! boundary as their `u32` codes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;
use std::sync::Arc;

use cyclic_mvif::code::presets;
use cyclic_mvif::decoder::{decode, ArtifactSet, Pipeline};
use cyclic_mvif::repr::{build_representation, required_kinds, ArtifactCache};
use cyclic_mvif::{CodeSpec, CyclicCode, Element, Error, Field};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmvifStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    DecodeFailure = 4,
    MissingArtifact = 5,
    Io = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmvifPipeline {
    OneStep = 0,
    Gelp = 1,
}

impl From<CmvifPipeline> for Pipeline {
    fn from(p: CmvifPipeline) -> Pipeline {
        match p {
            CmvifPipeline::OneStep => Pipeline::OneStep,
            CmvifPipeline::Gelp => Pipeline::Gelp,
        }
    }
}

pub struct CmvifField {
    field: Arc<Field>,
}

pub struct CmvifCode {
    code: CyclicCode,
}

pub struct CmvifDecoder {
    code: CyclicCode,
    artifacts: ArtifactSet,
    pipeline: Pipeline,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Fail(CmvifStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match &e {
            Error::MissingArtifact(_) => CmvifStatus::MissingArtifact,
            Error::Io(_) => CmvifStatus::Io,
            Error::InjectivityViolated { .. }
            | Error::HypothesisViolated(_)
            | Error::StructureTheoremViolated(_)
            | Error::ZeroDerivativeAtRoot { .. } => CmvifStatus::Internal,
            _ => CmvifStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<CmvifStatus, Fail>) -> CmvifStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let (status, msg) = match outcome {
        Ok(Ok(s)) => (s, String::new()),
        Ok(Err(Fail(s, m))) => (s, m),
        Err(payload) => {
            let m = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            (CmvifStatus::Panic, format!("panic: {m}"))
        }
    };
    set_last_error(&msg);
    status
}

fn null(what: &str) -> Fail {
    Fail(CmvifStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(CmvifStatus::InvalidArgument, msg.into())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn element(field: &Field, code: u32) -> Result<Element, Fail> {
    if code >= field.order() {
        return Err(invalid(format!("symbol {code:#x} is outside GF({})", field.order())));
    }
    Ok(Element(code))
}

fn word(field: &Field, codes: &[u32]) -> Result<Vec<Element>, Fail> {
    codes.iter().map(|&c| element(field, c)).collect()
}

/// Message for the most recent failing call on this thread, or `""`.
/// Valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cmvif_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn cmvif_status_name(status: CmvifStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CmvifStatus::Ok => c"ok",
        CmvifStatus::NullPointer => c"null pointer",
        CmvifStatus::InvalidArgument => c"invalid argument",
        CmvifStatus::BufferTooSmall => c"buffer too small",
        CmvifStatus::DecodeFailure => c"decode failure",
        CmvifStatus::MissingArtifact => c"missing artifact",
        CmvifStatus::Io => c"io error",
        CmvifStatus::Internal => c"internal error",
        CmvifStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cmvif_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `GF(p^e)` with the modulus given as a radix-`p` code, e.g. `0x25` for
/// `x^5 + x^2 + 1` over GF(2).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_new(p: u32, e: u32, modulus: u64, out: *mut *mut CmvifField) -> CmvifStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let field = Arc::new(Field::from_modulus_code(p, e, modulus)?);
        put(out, Box::into_raw(Box::new(CmvifField { field })), "out")?;
        Ok(CmvifStatus::Ok)
    })
}

/// # Safety
/// `field` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_free(field: *mut CmvifField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_order(field: *const CmvifField) -> u32 {
    field.as_ref().map_or(0, |f| f.field.order())
}

/// `α^k` for any integer `k`.
///
/// # Safety
/// `field` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_alpha_pow(field: *const CmvifField, k: i64, out: *mut u32) -> CmvifStatus {
    guard(|| {
        let f = &deref(field, "field")?.field;
        put(out, f.alpha_pow(k).code(), "out")?;
        Ok(CmvifStatus::Ok)
    })
}

/// Logarithm to base `α` of a nonzero element.
///
/// # Safety
/// `field` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_log(field: *const CmvifField, a: u32, out: *mut u32) -> CmvifStatus {
    guard(|| {
        let f = &deref(field, "field")?.field;
        let a = element(f, a)?;
        let log = f.log(a).ok_or_else(|| invalid("log of zero"))?;
        put(out, log, "out")?;
        Ok(CmvifStatus::Ok)
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmvifOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `a op b`. Division by zero reports `CMVIF_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `field` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_field_apply(
    field: *const CmvifField,
    op: CmvifOp,
    a: u32,
    b: u32,
    out: *mut u32,
) -> CmvifStatus {
    guard(|| {
        let f = &deref(field, "field")?.field;
        let (a, b) = (element(f, a)?, element(f, b)?);
        let r = match op {
            CmvifOp::Add => f.add(a, b),
            CmvifOp::Sub => f.sub(a, b),
            CmvifOp::Mul => f.mul(a, b),
            CmvifOp::Div => f.div(a, b)?,
        };
        put(out, r.code(), "out")?;
        Ok(CmvifStatus::Ok)
    })
}

fn boxed_code(code: CyclicCode, out: *mut *mut CmvifCode) -> Result<CmvifStatus, Fail> {
    unsafe { put(out, Box::into_raw(Box::new(CmvifCode { code })), "out")? };
    Ok(CmvifStatus::Ok)
}

/// Built-in code by name: `qr31`, `rs15`, `golay23`, `hamming7`, `bch15`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_from_preset(name: *const c_char, out: *mut *mut CmvifCode) -> CmvifStatus {
    guard(|| {
        let name = string(name, "name")?;
        let spec = presets::by_name(name).ok_or_else(|| invalid(format!("unknown preset {name:?}")))?;
        boxed_code(spec.build()?, out)
    })
}

/// Code from the text of a `.spec` file.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_from_spec(text: *const c_char, out: *mut *mut CmvifCode) -> CmvifStatus {
    guard(|| {
        let spec = CodeSpec::parse(string(text, "text")?)?;
        boxed_code(spec.build()?, out)
    })
}

/// Length-`n` code over `GF(q)` inside `GF(p^e)` with base set
/// `base_set[0..base_len]`, correcting `t` errors.
///
/// # Safety
/// `base_set` must point to `base_len` values; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_new(
    p: u32,
    e: u32,
    modulus: u64,
    n: u32,
    q: u32,
    base_set: *const u32,
    base_len: usize,
    t: u32,
    out: *mut *mut CmvifCode,
) -> CmvifStatus {
    guard(|| {
        let base_set = slice(base_set, base_len, "base_set")?.to_vec();
        let spec = CodeSpec { p, e, modulus, n, q, base_set, t };
        boxed_code(spec.build()?, out)
    })
}

/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_free(code: *mut CmvifCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CmvifCodeInfo {
    pub n: u32,
    pub k: u32,
    pub q: u32,
    pub t: u32,
    pub field_order: u32,
    pub base_len: usize,
}

/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_info(code: *const CmvifCode, out: *mut CmvifCodeInfo) -> CmvifStatus {
    guard(|| {
        let c = &deref(code, "code")?.code;
        let info = CmvifCodeInfo {
            n: c.n(),
            k: c.dimension(),
            q: c.q(),
            t: c.t(),
            field_order: c.field().order(),
            base_len: c.base_set().len(),
        };
        put(out, info, "out")?;
        Ok(CmvifStatus::Ok)
    })
}

/// Non-systematic encoding `m(x) g(x)`: `message` has `k` symbols of
/// `GF(q)`, `codeword` room for `codeword_cap >= n`.
///
/// # Safety
/// Pointers must cover the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_encode(
    code: *const CmvifCode,
    message: *const u32,
    message_len: usize,
    codeword: *mut u32,
    codeword_cap: usize,
) -> CmvifStatus {
    guard(|| {
        let c = &deref(code, "code")?.code;
        let msg = word(c.field(), slice(message, message_len, "message")?)?;
        if codeword_cap < c.n() as usize {
            return Err(Fail(CmvifStatus::BufferTooSmall, format!("codeword needs {} slots", c.n())));
        }
        if codeword.is_null() {
            return Err(null("codeword"));
        }
        let cw = c.encode(&msg)?;
        for (i, s) in cw.iter().enumerate() {
            codeword.add(i).write(s.code());
        }
        Ok(CmvifStatus::Ok)
    })
}

/// Writes 1 to `out` when `word` is a codeword, else 0.
///
/// # Safety
/// `word` must point to `len` values; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_code_is_codeword(
    code: *const CmvifCode,
    word_ptr: *const u32,
    len: usize,
    out: *mut i32,
) -> CmvifStatus {
    guard(|| {
        let c = &deref(code, "code")?.code;
        let w = word(c.field(), slice(word_ptr, len, "word")?)?;
        let yes = w.len() == c.n() as usize && c.is_codeword(&w);
        put(out, yes as i32, "out")?;
        Ok(CmvifStatus::Ok)
    })
}

/// Decoder for `code` running `pipeline`. With a non-null `cache_dir`
/// artifacts are loaded from, or built into, that directory; with null they
/// are built in memory.
///
/// # Safety
/// `code` must be a live handle, `cache_dir` null or NUL-terminated, `out`
/// valid for writes. The decoder keeps its own copy of the code.
#[no_mangle]
pub unsafe extern "C" fn cmvif_decoder_new(
    code: *const CmvifCode,
    pipeline: CmvifPipeline,
    cache_dir: *const c_char,
    out: *mut *mut CmvifDecoder,
) -> CmvifStatus {
    guard(|| {
        let code = deref(code, "code")?.code.clone();
        if out.is_null() {
            return Err(null("out"));
        }
        let pipeline = Pipeline::from(pipeline);
        let artifacts = if cache_dir.is_null() {
            let built = required_kinds(&code, pipeline == Pipeline::Gelp)
                .into_iter()
                .map(|kind| build_representation(&code, kind))
                .collect::<Result<Vec<_>, _>>()?;
            ArtifactSet::new().with(&code, built)?
        } else {
            let cache = ArtifactCache::new(PathBuf::from(string(cache_dir, "cache_dir")?));
            ArtifactSet::from_cache(&cache, &code, pipeline, false)?
        };
        put(out, Box::into_raw(Box::new(CmvifDecoder { code, artifacts, pipeline })), "out")?;
        Ok(CmvifStatus::Ok)
    })
}

/// # Safety
/// `decoder` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cmvif_decoder_free(decoder: *mut CmvifDecoder) {
    if !decoder.is_null() {
        drop(Box::from_raw(decoder));
    }
}

/// Decodes `received[0..len]` (`len == n`). On `CMVIF_STATUS_OK` the
/// corrected word is in `codeword[0..n]` and the number of corrected symbols
/// in `weight`. On `CMVIF_STATUS_DECODE_FAILURE` neither output is touched.
///
/// # Safety
/// `received` must hold `len` values, `codeword` room for `codeword_cap`;
/// `weight` may be null.
#[no_mangle]
pub unsafe extern "C" fn cmvif_decoder_decode(
    decoder: *const CmvifDecoder,
    received: *const u32,
    len: usize,
    codeword: *mut u32,
    codeword_cap: usize,
    weight: *mut u32,
) -> CmvifStatus {
    guard(|| {
        let d = deref(decoder, "decoder")?;
        let r = word(d.code.field(), slice(received, len, "received")?)?;
        if codeword_cap < d.code.n() as usize {
            return Err(Fail(CmvifStatus::BufferTooSmall, format!("codeword needs {} slots", d.code.n())));
        }
        if codeword.is_null() {
            return Err(null("codeword"));
        }
        let result = decode(&d.code, &r, &d.artifacts, d.pipeline, false)?;
        let Some(error) = &result.error else {
            let reason = result.failure.map(|f| f.to_string()).unwrap_or_default();
            return Err(Fail(CmvifStatus::DecodeFailure, reason));
        };
        for (i, s) in result.codeword.iter().enumerate() {
            codeword.add(i).write(s.code());
        }
        if !weight.is_null() {
            weight.write(error.weight() as u32);
        }
        Ok(CmvifStatus::Ok)
    })
}

/// Full decoding report as `key = value` lines, the same text the CLI prints
/// with `--format kv`. Returned for failures too; free with
/// [`cmvif_string_free`].
///
/// # Safety
/// `received` must hold `len` values; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cmvif_decoder_report(
    decoder: *const CmvifDecoder,
    received: *const u32,
    len: usize,
    with_trace: bool,
    out: *mut *mut c_char,
) -> CmvifStatus {
    guard(|| {
        let d = deref(decoder, "decoder")?;
        if out.is_null() {
            return Err(null("out"));
        }
        out.write(ptr::null_mut());
        let r = word(d.code.field(), slice(received, len, "received")?)?;
        let result = decode(&d.code, &r, &d.artifacts, d.pipeline, with_trace)?;
        let text = CString::new(result.to_kv()).map_err(|e| Fail(CmvifStatus::Internal, e.to_string()))?;
        out.write(text.into_raw());
        Ok(CmvifStatus::Ok)
    })
}
