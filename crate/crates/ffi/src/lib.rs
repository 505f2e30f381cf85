//! C interface to `systolic`.
//!
//! Complexes live behind opaque `SystolicComplex` handles created by
//! [`systolic_complex_parse`] or [`systolic_complex_generate`] and released
//! with [`systolic_complex_free`]. Every fallible call returns a
//! [`SystolicStatus`]; the message of the last failure on the calling thread
//! is available from [`systolic_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use systolic::checkers::{classify, ClassifyOptions, TriState};
use systolic::generate::{generate, CorpusName};
use systolic::helly::{helly_point, HellyInput, HellyOutcome};
use systolic::{io, verify, Complex, Error, Vertex};

/// Opaque complex handle.
pub struct SystolicComplex(Complex);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystolicStatus {
    Ok = 0,
    InputError = 1,
    HypothesisFailure = 2,
    BudgetExhausted = 3,
    ParseError = 4,
    DomainError = 5,
    InternalError = 6,
    NullPointer = 7,
    /// A certificate failed verification.
    Rejected = 8,
    Panic = 9,
}

/// Verdict codes: 0 = no, 1 = yes, 2 = unknown.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SystolicVerdicts {
    pub flag: u8,
    pub locally_5_large: u8,
    pub locally_6_large: u8,
    pub sd2star: u8,
    pub sd2star_links: u8,
    pub simply_connected: u8,
    pub systolic: u8,
    pub weakly_systolic: u8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> SystolicStatus {
    match e {
        Error::Input(_) | Error::Io(_) => SystolicStatus::InputError,
        Error::Parse { .. } => SystolicStatus::ParseError,
        Error::Domain(_) => SystolicStatus::DomainError,
        Error::Hypothesis(_) => SystolicStatus::HypothesisFailure,
        Error::Internal(_) => SystolicStatus::InternalError,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<SystolicStatus, (SystolicStatus, String)>) -> SystolicStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside systolic");
            SystolicStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SystolicStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (SystolicStatus, String) {
    (SystolicStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (SystolicStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (SystolicStatus::InputError, "text is not UTF-8".into()))
}

unsafe fn complex<'a>(p: *const SystolicComplex) -> Result<&'a Complex, (SystolicStatus, String)> {
    p.as_ref().map(|c| &c.0).ok_or_else(null)
}

unsafe fn sets(a: *const *const SystolicComplex) -> Result<[Complex; 4], (SystolicStatus, String)> {
    if a.is_null() {
        return Err(null());
    }
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        out.push(complex(*a.add(i))?.clone());
    }
    Ok(out.try_into().expect("four sets"))
}

unsafe fn store(out: *mut *mut SystolicComplex, c: Complex) {
    *out = Box::into_raw(Box::new(SystolicComplex(c)));
}

/// Message of the last failed call on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn systolic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the line format (`s v1 v2 ...` per simplex).
///
/// # Safety
/// `text_ptr` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn systolic_complex_parse(text_ptr: *const c_char, out: *mut *mut SystolicComplex) -> SystolicStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let x = io::parse_complex(text(text_ptr)?).map_err(lib_err)?;
        store(out, x);
        Ok(SystolicStatus::Ok)
    })
}

/// Builds a named complex such as `"tri_grid 5 5"` or `"cone cycle 5"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn systolic_complex_generate(name: *const c_char, out: *mut *mut SystolicComplex) -> SystolicStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let name: CorpusName = text(name)?.parse().map_err(lib_err)?;
        store(out, generate(&name).map_err(lib_err)?);
        Ok(SystolicStatus::Ok)
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn systolic_complex_free(c: *mut SystolicComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn systolic_complex_num_vertices(c: *const SystolicComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.num_vertices())
}

/// Writes up to `cap` entries of the f-vector into `buf` and its full length
/// into `len`.
///
/// # Safety
/// `buf` must hold `cap` entries (or be null with `cap == 0`); `len` valid.
#[no_mangle]
pub unsafe extern "C" fn systolic_complex_f_vector(
    c: *const SystolicComplex,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> SystolicStatus {
    guard(|| {
        let f = complex(c)?.f_vector();
        if len.is_null() || (buf.is_null() && cap > 0) {
            return Err(null());
        }
        *len = f.len();
        for (k, v) in f.iter().take(cap).enumerate() {
            *buf.add(k) = *v;
        }
        Ok(SystolicStatus::Ok)
    })
}

fn code(t: TriState) -> u8 {
    match t {
        TriState::No => 0,
        TriState::Yes => 1,
        TriState::Unknown => 2,
    }
}

/// Classifies `c` with the given Tietze effort.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn systolic_classify(
    c: *const SystolicComplex,
    effort: usize,
    out: *mut SystolicVerdicts,
) -> SystolicStatus {
    guard(|| {
        let x = complex(c)?;
        if out.is_null() {
            return Err(null());
        }
        let r = classify(x, &ClassifyOptions { effort, ..ClassifyOptions::default() }).map_err(lib_err)?;
        *out = SystolicVerdicts {
            flag: code(r.flag),
            locally_5_large: code(r.loc5),
            locally_6_large: code(r.loc6),
            sd2star: code(r.sd2star),
            sd2star_links: code(r.sd2star_links),
            simply_connected: code(r.simply_connected),
            systolic: code(r.systolic),
            weakly_systolic: code(r.weakly_systolic),
        };
        Ok(SystolicStatus::Ok)
    })
}

/// Runs the four-set Helly procedure with default budgets. On success the
/// certificate `v_0..v_3` is written to `simplex` and `trivial` says whether
/// all four sets share a vertex.
///
/// # Safety
/// `x` live, `a` points to four live handles, `simplex` holds 4 entries,
/// `trivial` valid.
#[no_mangle]
pub unsafe extern "C" fn systolic_helly(
    x: *const SystolicComplex,
    a: *const *const SystolicComplex,
    simplex: *mut u32,
    trivial: *mut bool,
) -> SystolicStatus {
    guard(|| {
        let input = HellyInput::new(complex(x)?.clone(), sets(a)?);
        if simplex.is_null() || trivial.is_null() {
            return Err(null());
        }
        match helly_point(&input).map_err(lib_err)? {
            HellyOutcome::Certificate(c) => {
                for i in 0..4 {
                    *simplex.add(i) = c.simplex[i].0;
                }
                *trivial = c.is_trivial();
                Ok(SystolicStatus::Ok)
            }
            HellyOutcome::Unknown(s) => Err((SystolicStatus::BudgetExhausted, format!("{}: {}", s.stage, s.reason))),
        }
    })
}

/// Checks `v_i ∈ A_i` and that the `v_i` span a simplex of `x`.
///
/// # Safety
/// `x` live, `a` points to four live handles, `simplex` holds 4 entries.
#[no_mangle]
pub unsafe extern "C" fn systolic_verify_certificate(
    x: *const SystolicComplex,
    a: *const *const SystolicComplex,
    simplex: *const u32,
) -> SystolicStatus {
    guard(|| {
        let x = complex(x)?;
        let a = sets(a)?;
        if simplex.is_null() {
            return Err(null());
        }
        let v = [0, 1, 2, 3].map(|i| Vertex(*simplex.add(i)));
        verify::certificate(x, &a, &v).map_err(|why| (SystolicStatus::Rejected, why))?;
        Ok(SystolicStatus::Ok)
    })
}
