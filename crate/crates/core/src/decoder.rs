//! One-step decoding (syndromes, unknown-syndrome artifacts, inverse-free
//! Berlekamp-Massey, Chien, Forney) and locator-coefficient decoding
//! (artifacts evaluate the locator directly).

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::code::{format_word, CyclicCode, ErrorPattern};
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::poly::UniPoly;
use crate::repr::{required_kinds, ArtifactCache, ArtifactKind, RepresentationArtifact};

/// Artifacts available to the decoders, all for one code.
#[derive(Clone, Debug, Default)]
pub struct ArtifactSet {
    syndromes: BTreeMap<u32, RepresentationArtifact>,
    locator: BTreeMap<u32, RepresentationArtifact>,
}

impl ArtifactSet {
    pub fn new() -> ArtifactSet {
        ArtifactSet::default()
    }

    pub fn insert(&mut self, code: &CyclicCode, artifact: RepresentationArtifact) -> Result<()> {
        if artifact.spec() != &code.spec() {
            return Err(Error::InvalidCode(format!("artifact {} was built for a different code", artifact.kind())));
        }
        match artifact.kind() {
            ArtifactKind::UnknownSyndrome { target } => self.syndromes.insert(target, artifact),
            ArtifactKind::GelpCoefficient { index } => self.locator.insert(index, artifact),
        };
        Ok(())
    }

    pub fn with(mut self, code: &CyclicCode, artifacts: impl IntoIterator<Item = RepresentationArtifact>) -> Result<Self> {
        for a in artifacts {
            self.insert(code, a)?;
        }
        Ok(self)
    }

    /// Loads or builds every artifact `pipeline` needs.
    pub fn from_cache(cache: &ArtifactCache, code: &CyclicCode, pipeline: Pipeline, force: bool) -> Result<ArtifactSet> {
        let mut set = ArtifactSet::new();
        for kind in required_kinds(code, pipeline == Pipeline::Gelp) {
            set.insert(code, cache.get_or_build(code, kind, force)?.0)?;
        }
        Ok(set)
    }

    pub fn syndrome(&self, target: u32) -> Option<&RepresentationArtifact> {
        self.syndromes.get(&target)
    }

    pub fn locator_coefficient(&self, index: u32) -> Option<&RepresentationArtifact> {
        self.locator.get(&index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    OneStep,
    Gelp,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::OneStep => "one-step",
            Pipeline::Gelp => "gelp",
        }
    }

    pub fn from_name(s: &str) -> Option<Pipeline> {
        match s {
            "one-step" => Some(Pipeline::OneStep),
            "gelp" => Some(Pipeline::Gelp),
            _ => None,
        }
    }
}

/// Where a syndrome value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Evaluated on the received word.
    Known,
    /// An artifact evaluated on the known base-set syndromes.
    Artifact,
    /// `S_from^(q^power)`.
    Conjugate { from: u32, power: u32 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Known => f.write_str("known"),
            Provenance::Artifact => f.write_str("artifact"),
            Provenance::Conjugate { from, power } => write!(f, "conjugate({from}^{power})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SyndromeEntry {
    pub index: u32,
    pub value: Element,
    pub provenance: Provenance,
}

/// `S_1 … S_count` of the received word.
pub fn assemble_syndromes(
    code: &CyclicCode,
    received: &[Element],
    artifacts: &ArtifactSet,
    count: u32,
) -> Result<Vec<SyndromeEntry>> {
    let field = code.field();
    let (n, q) = (code.n(), code.q());
    let known = code.word_syndrome_tuple(received);
    let mut out: Vec<SyndromeEntry> = Vec::with_capacity(count as usize);
    for i in 1..=count {
        let r = i % n;
        if code.in_defining_set(r) {
            out.push(SyndromeEntry { index: i, value: code.word_syndrome(received, r), provenance: Provenance::Known });
            continue;
        }
        if let Some(a) = artifacts.syndrome(i) {
            let value = a.poly().eval_unchecked(&known.0, field);
            out.push(SyndromeEntry { index: i, value, provenance: Provenance::Artifact });
            continue;
        }
        let conj = out.iter().find_map(|e| {
            let mut x = e.index as u64 % n as u64;
            let mut power = 0;
            loop {
                if x == r as u64 {
                    return Some((e, power));
                }
                x = x * q as u64 % n as u64;
                power += 1;
                if x == e.index as u64 % n as u64 {
                    return None;
                }
            }
        });
        match conj {
            Some((e, power)) => {
                let value = (0..power).fold(e.value, |v, _| field.frobenius(v, q));
                out.push(SyndromeEntry { index: i, value, provenance: Provenance::Conjugate { from: e.index, power } });
            }
            None => return Err(Error::MissingArtifact(i)),
        }
    }
    Ok(out)
}

/// One row of the inverse-free Berlekamp-Massey iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmTraceRow {
    pub k: u32,
    /// `None` on the initial row.
    pub delta: Option<Element>,
    pub c: UniPoly,
    pub a: UniPoly,
    pub l: u32,
    pub gamma: Element,
}

/// Inverse-free Berlekamp-Massey over `S_1 … S_len`. Returns the final
/// connection polynomial (a scalar multiple of the locator) and every row.
pub fn ifbma(syndromes: &[Element], field: &Field) -> (UniPoly, Vec<BmTraceRow>) {
    let mut c = UniPoly::one();
    let mut a = UniPoly::one();
    let mut l = 0u32;
    let mut gamma = Element::ONE;
    let mut rows = vec![BmTraceRow { k: 0, delta: None, c: c.clone(), a: a.clone(), l, gamma }];
    for k in 0..syndromes.len() {
        // Δ = Σ_i C_i S_{k+1-i}
        let delta = (0..=k)
            .map(|i| field.mul(c.coeff(i), syndromes[k - i]))
            .fold(Element::ZERO, |acc, x| field.add(acc, x));
        let next = c.scale(gamma, field).sub(&a.shift(1).scale(delta, field), field);
        if !delta.is_zero() && 2 * l as usize <= k {
            a = c;
            gamma = delta;
            l = k as u32 + 1 - l;
        } else {
            a = a.shift(1);
        }
        c = next;
        rows.push(BmTraceRow { k: k as u32 + 1, delta: Some(delta), c: c.clone(), a: a.clone(), l, gamma });
    }
    (c, rows)
}

/// Positions `i` with `locator(β^{-i}) = 0`, ascending.
pub fn chien_search(code: &CyclicCode, locator: &UniPoly) -> Vec<u32> {
    let field = code.field();
    (0..code.n()).filter(|&i| locator.eval(code.beta_pow(-(i as i64)), field).is_zero()).collect()
}

/// Magnitudes `-Ω(β^{-i}) / σ'(β^{-i})` with `Ω = S σ mod x^v`, `v` the
/// number of locations and `S(x) = Σ_j S_j x^{j-1}`.
pub fn forney(code: &CyclicCode, locator: &UniPoly, syndromes: &[Element], locations: &[u32]) -> Result<Vec<Element>> {
    let field = code.field();
    let v = locations.len();
    if syndromes.len() < v {
        return Err(Error::MissingArtifact(syndromes.len() as u32 + 1));
    }
    let s = UniPoly::new(syndromes[..v].to_vec());
    let omega = s.mul_mod(locator, v, field);
    let deriv = locator.derivative(field);
    locations
        .iter()
        .map(|&i| {
            let x = code.beta_pow(-(i as i64));
            let d = deriv.eval(x, field);
            if d.is_zero() {
                return Err(Error::ZeroDerivativeAtRoot { position: i });
            }
            Ok(field.neg(field.div(omega.eval(x, field), d)?))
        })
        .collect()
}

/// `Ω = S σ mod x^v` as used by [`forney`].
pub fn evaluator_poly(code: &CyclicCode, locator: &UniPoly, syndromes: &[Element], v: usize) -> UniPoly {
    UniPoly::new(syndromes[..v.min(syndromes.len())].to_vec()).mul_mod(locator, v, code.field())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    RootCountMismatch { roots: u32, degree: u32 },
    SyndromeRecheckFailed,
    ZeroDerivative { position: u32 },
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::RootCountMismatch { roots, degree } => {
                write!(f, "root-count-mismatch roots={roots} degree={degree}")
            }
            FailureReason::SyndromeRecheckFailed => f.write_str("syndrome-recheck-failed"),
            FailureReason::ZeroDerivative { position } => write!(f, "zero-derivative position={position}"),
        }
    }
}

impl FailureReason {
    fn parse(s: &str) -> Option<FailureReason> {
        let mut parts = s.split_whitespace();
        let head = parts.next()?;
        let mut field = |name: &str| -> Option<u32> { parts.next()?.strip_prefix(name)?.strip_prefix('=')?.parse().ok() };
        match head {
            "root-count-mismatch" => {
                let roots = field("roots")?;
                let degree = field("degree")?;
                Some(FailureReason::RootCountMismatch { roots, degree })
            }
            "syndrome-recheck-failed" => Some(FailureReason::SyndromeRecheckFailed),
            "zero-derivative" => Some(FailureReason::ZeroDerivative { position: field("position")? }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub pipeline: Pipeline,
    pub failure: Option<FailureReason>,
    pub syndromes: Vec<SyndromeEntry>,
    pub locator: UniPoly,
    pub locations: Vec<u32>,
    pub magnitudes: Vec<Element>,
    /// Present on success.
    pub error: Option<ErrorPattern>,
    /// The corrected word on success, the received word otherwise.
    pub codeword: Vec<Element>,
    pub trace: Option<Vec<BmTraceRow>>,
}

impl DecodeResult {
    pub fn is_success(&self) -> bool {
        self.failure.is_none()
    }

    /// Key-value report; [`DecodeResult::parse_kv`] reads it back exactly.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pipeline = {}", self.pipeline.name());
        match self.failure {
            None => out.push_str("status = success\n"),
            Some(r) => {
                let _ = writeln!(out, "status = failure\nreason = {r}");
            }
        }
        let syn: Vec<String> =
            self.syndromes.iter().map(|e| format!("{}:{:x}:{}", e.index, e.value, e.provenance)).collect();
        let _ = writeln!(out, "syndromes = {}", syn.join(","));
        let _ = writeln!(out, "locator = {}", poly_kv(&self.locator));
        let _ = writeln!(out, "locations = {}", join(self.locations.iter().map(u32::to_string)));
        let _ = writeln!(out, "magnitudes = {}", join(self.magnitudes.iter().map(|c| format!("{c:x}"))));
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error = {}", join(e.entries().iter().map(|(l, c)| format!("{l}:{c:x}"))));
        }
        let _ = writeln!(out, "codeword = {}", format_word(&self.codeword));
        for row in self.trace.iter().flatten() {
            let delta = row.delta.map_or("-".to_string(), |d| format!("{d:x}"));
            let _ = writeln!(
                out,
                "trace = k={} delta={} C={} A={} l={} gamma={:x}",
                row.k,
                delta,
                poly_kv(&row.c),
                poly_kv(&row.a),
                row.l,
                row.gamma
            );
        }
        out
    }

    pub fn parse_kv(text: &str) -> Result<DecodeResult> {
        let mut pipeline = None;
        let mut status = None;
        let mut failure = None;
        let mut syndromes = None;
        let mut locator = None;
        let mut locations = None;
        let mut magnitudes = None;
        let mut error = None;
        let mut codeword = None;
        let mut trace: Option<Vec<BmTraceRow>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let (key, value) = raw.split_once(" = ").ok_or_else(|| Error::parse(line, "expected `key = value`"))?;
            let bad = |what: &str| Error::parse(line, format!("bad {what}"));
            match key {
                "pipeline" => pipeline = Some(Pipeline::from_name(value).ok_or_else(|| bad("pipeline"))?),
                "status" => status = Some(value == "success"),
                "reason" => failure = Some(FailureReason::parse(value).ok_or_else(|| bad("reason"))?),
                "syndromes" => {
                    syndromes = Some(
                        split_list(value)
                            .map(|item| parse_syndrome_entry(item).ok_or_else(|| bad("syndrome entry")))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "locator" => locator = Some(parse_poly_kv(value).ok_or_else(|| bad("locator"))?),
                "locations" => {
                    locations = Some(
                        split_list(value).map(|s| s.parse().map_err(|_| bad("location"))).collect::<Result<Vec<u32>>>()?,
                    )
                }
                "magnitudes" => {
                    magnitudes = Some(
                        split_list(value).map(|s| Element::from_hex(s).ok_or_else(|| bad("magnitude"))).collect::<Result<Vec<_>>>()?,
                    )
                }
                "error" => {
                    let entries = split_list(value)
                        .map(|item| {
                            let (l, c) = item.split_once(':')?;
                            Some((l.parse().ok()?, Element::from_hex(c)?))
                        })
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| bad("error entry"))?;
                    error = Some(ErrorPattern::from_entries(entries));
                }
                "codeword" => {
                    codeword = Some(
                        split_list(value).map(|s| Element::from_hex(s).ok_or_else(|| bad("symbol"))).collect::<Result<Vec<_>>>()?,
                    )
                }
                "trace" => trace.get_or_insert_with(Vec::new).push(parse_trace_row(value).ok_or_else(|| bad("trace row"))?),
                other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::parse(0, format!("missing key {k:?}"));
        let success = status.ok_or_else(|| missing("status"))?;
        if success == failure.is_some() {
            return Err(Error::parse(0, "status and reason disagree"));
        }
        Ok(DecodeResult {
            pipeline: pipeline.ok_or_else(|| missing("pipeline"))?,
            failure,
            syndromes: syndromes.ok_or_else(|| missing("syndromes"))?,
            locator: locator.ok_or_else(|| missing("locator"))?,
            locations: locations.ok_or_else(|| missing("locations"))?,
            magnitudes: magnitudes.ok_or_else(|| missing("magnitudes"))?,
            error,
            codeword: codeword.ok_or_else(|| missing("codeword"))?,
            trace,
        })
    }

    /// Human-readable report with field elements as powers of `α`.
    pub fn to_text(&self, field: &Field) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pipeline:   {}", self.pipeline.name());
        match self.failure {
            None => out.push_str("status:     success\n"),
            Some(r) => {
                let _ = writeln!(out, "status:     failure ({r})");
            }
        }
        for e in &self.syndromes {
            let _ = writeln!(out, "S_{:<3}      {:<8} {}", e.index, alpha(e.value, field), e.provenance);
        }
        let _ = writeln!(out, "locator:    {}", alpha_poly(&self.locator, field));
        let _ = writeln!(out, "locations:  {}", join(self.locations.iter().map(u32::to_string)));
        let _ = writeln!(out, "magnitudes: {}", join(self.magnitudes.iter().map(|&c| alpha(c, field))));
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error:      {e}");
        }
        let _ = writeln!(out, "codeword:   {}", format_word(&self.codeword));
        if let Some(rows) = &self.trace {
            let _ = writeln!(out, "{:>3}  {:<8} {:<40} {:<40} {:>3}  gamma", "k", "delta", "C(x)", "A(x)", "l");
            for r in rows {
                let delta = r.delta.map_or("n.a.".to_string(), |d| alpha(d, field));
                let _ = writeln!(
                    out,
                    "{:>3}  {:<8} {:<40} {:<40} {:>3}  {}",
                    r.k,
                    delta,
                    alpha_poly(&r.c, field),
                    alpha_poly(&r.a, field),
                    r.l,
                    alpha(r.gamma, field)
                );
            }
        }
        out
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').filter(|x| !x.is_empty())
}

fn poly_kv(p: &UniPoly) -> String {
    if p.is_zero() {
        "0".into()
    } else {
        join(p.coeffs().iter().map(|c| format!("{c:x}")))
    }
}

fn parse_poly_kv(s: &str) -> Option<UniPoly> {
    let coeffs = s.split(',').map(Element::from_hex).collect::<Option<Vec<_>>>()?;
    let p = UniPoly::new(coeffs);
    (poly_kv(&p) == s).then_some(p)
}

fn parse_syndrome_entry(item: &str) -> Option<SyndromeEntry> {
    let mut parts = item.splitn(3, ':');
    let index = parts.next()?.parse().ok()?;
    let value = Element::from_hex(parts.next()?)?;
    let provenance = match parts.next()? {
        "known" => Provenance::Known,
        "artifact" => Provenance::Artifact,
        other => {
            let inner = other.strip_prefix("conjugate(")?.strip_suffix(')')?;
            let (from, power) = inner.split_once('^')?;
            Provenance::Conjugate { from: from.parse().ok()?, power: power.parse().ok()? }
        }
    };
    Some(SyndromeEntry { index, value, provenance })
}

fn parse_trace_row(s: &str) -> Option<BmTraceRow> {
    let mut kv = s.split_whitespace().map(|t| t.split_once('='));
    let mut next = |name: &str| -> Option<&str> {
        let (k, v) = kv.next()??;
        (k == name).then_some(v)
    };
    let k = next("k")?.parse().ok()?;
    let delta = match next("delta")? {
        "-" => None,
        d => Some(Element::from_hex(d)?),
    };
    let c = parse_poly_kv(next("C")?)?;
    let a = parse_poly_kv(next("A")?)?;
    let l = next("l")?.parse().ok()?;
    let gamma = Element::from_hex(next("gamma")?)?;
    Some(BmTraceRow { k, delta, c, a, l, gamma })
}

/// `0`, `1`, `α` or `α^k`.
pub fn alpha(x: Element, field: &Field) -> String {
    match field.log(x) {
        None => "0".into(),
        Some(0) => "1".into(),
        Some(1) => "α".into(),
        Some(k) => format!("α^{k}"),
    }
}

pub fn alpha_poly(p: &UniPoly, field: &Field) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| {
            let coeff = alpha(c, field);
            match (i, coeff.as_str()) {
                (0, _) => coeff,
                (1, "1") => "x".into(),
                (1, _) => format!("{coeff}x"),
                (_, "1") => format!("x^{i}"),
                _ => format!("{coeff}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Chien, Forney, recheck. Shared tail of both pipelines.
fn finish(
    code: &CyclicCode,
    received: &[Element],
    pipeline: Pipeline,
    locator: UniPoly,
    syndromes: Vec<SyndromeEntry>,
    magnitude_syndromes: impl FnOnce(usize) -> Result<Vec<Element>>,
    trace: Option<Vec<BmTraceRow>>,
) -> Result<DecodeResult> {
    let mut result = DecodeResult {
        pipeline,
        failure: None,
        syndromes,
        locator,
        locations: Vec::new(),
        magnitudes: Vec::new(),
        error: None,
        codeword: received.to_vec(),
        trace,
    };
    let locations = chien_search(code, &result.locator);
    let degree = result.locator.degree().unwrap_or(0) as u32;
    result.locations = locations.clone();
    if locations.len() as u32 != degree || degree > code.t() || result.locator.coeff(0).is_zero() {
        result.failure = Some(FailureReason::RootCountMismatch { roots: locations.len() as u32, degree });
        return Ok(result);
    }
    let magnitudes = if code.q() == 2 {
        vec![Element::ONE; locations.len()]
    } else {
        let s = magnitude_syndromes(locations.len())?;
        match forney(code, &result.locator, &s, &locations) {
            Ok(m) => m,
            Err(Error::ZeroDerivativeAtRoot { position }) => {
                result.failure = Some(FailureReason::ZeroDerivative { position });
                return Ok(result);
            }
            Err(e) => return Err(e),
        }
    };
    result.magnitudes = magnitudes.clone();
    let field = code.field();
    let entries: Vec<(u32, Element)> = locations.into_iter().zip(magnitudes).collect();
    let pattern = match ErrorPattern::new(entries, code) {
        Ok(p) => p,
        Err(_) => {
            result.failure = Some(FailureReason::SyndromeRecheckFailed);
            return Ok(result);
        }
    };
    let mut corrected = received.to_vec();
    for &(l, c) in pattern.entries() {
        corrected[l as usize] = field.sub(corrected[l as usize], c);
    }
    if !code.is_codeword(&corrected) {
        result.failure = Some(FailureReason::SyndromeRecheckFailed);
        return Ok(result);
    }
    result.codeword = corrected;
    result.error = Some(pattern);
    Ok(result)
}

fn check_length(code: &CyclicCode, received: &[Element]) -> Result<()> {
    if received.len() != code.n() as usize {
        return Err(Error::ArityMismatch { expected: code.n() as usize, got: received.len() });
    }
    Ok(())
}

/// Syndromes, artifact-filled unknowns, IFBMA, Chien, Forney.
pub fn decode_one_step(
    code: &CyclicCode,
    received: &[Element],
    artifacts: &ArtifactSet,
    keep_trace: bool,
) -> Result<DecodeResult> {
    check_length(code, received)?;
    let syndromes = assemble_syndromes(code, received, artifacts, 2 * code.t())?;
    let values: Vec<Element> = syndromes.iter().map(|e| e.value).collect();
    let (locator, rows) = ifbma(&values, code.field());
    finish(
        code,
        received,
        Pipeline::OneStep,
        locator,
        syndromes,
        |_| Ok(values.clone()),
        keep_trace.then_some(rows),
    )
}

/// Locator `1 + Σ_i σ_i(S) x^i` from the locator-coefficient artifacts,
/// then Chien and Forney.
pub fn decode_gelp(code: &CyclicCode, received: &[Element], artifacts: &ArtifactSet) -> Result<DecodeResult> {
    check_length(code, received)?;
    let field = code.field();
    let known = code.word_syndrome_tuple(received);
    let mut coeffs = vec![Element::ONE];
    for i in 1..=code.t() {
        let a = artifacts
            .locator_coefficient(i)
            .ok_or_else(|| Error::InvalidCode(format!("missing locator coefficient artifact {i}")))?;
        coeffs.push(a.poly().eval_unchecked(&known.0, field));
    }
    let syndromes: Vec<SyndromeEntry> = code
        .base_set()
        .iter()
        .zip(&known.0)
        .map(|(&r, &value)| SyndromeEntry { index: r, value, provenance: Provenance::Known })
        .collect();
    finish(
        code,
        received,
        Pipeline::Gelp,
        UniPoly::new(coeffs),
        syndromes,
        |v| Ok(assemble_syndromes(code, received, artifacts, v as u32)?.iter().map(|e| e.value).collect()),
        None,
    )
}

pub fn decode(
    code: &CyclicCode,
    received: &[Element],
    artifacts: &ArtifactSet,
    pipeline: Pipeline,
    keep_trace: bool,
) -> Result<DecodeResult> {
    match pipeline {
        Pipeline::OneStep => decode_one_step(code, received, artifacts, keep_trace),
        Pipeline::Gelp => decode_gelp(code, received, artifacts),
    }
}

/// Decodes many words in parallel.
pub fn decode_batch(
    code: &CyclicCode,
    words: &[Vec<Element>],
    artifacts: &ArtifactSet,
    pipeline: Pipeline,
) -> Vec<Result<DecodeResult>> {
    words.par_iter().map(|w| decode(code, w, artifacts, pipeline, false)).collect()
}

/// Outcome of decoding `codeword + e` for every correctable `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub corrected: usize,
    /// Per weight `1..=t`: (patterns, corrected).
    pub by_weight: Vec<(usize, usize)>,
    /// First failures, at most a few.
    pub failures: Vec<ErrorPattern>,
}

/// Decodes the all-zero codeword plus every correctable pattern, one worker
/// pool task per weight class.
pub fn sweep(code: &CyclicCode, artifacts: &ArtifactSet, pipeline: Pipeline) -> Result<SweepSummary> {
    let patterns = code.correctable_patterns_vec()?;
    let t = code.t() as usize;
    let mut by_weight_patterns: Vec<Vec<ErrorPattern>> = vec![Vec::new(); t + 1];
    for p in patterns {
        by_weight_patterns[p.weight()].push(p);
    }
    let per_weight: Vec<Result<(usize, Vec<ErrorPattern>)>> = by_weight_patterns[1..]
        .par_iter()
        .map(|group| {
            let failures: Vec<ErrorPattern> = group
                .par_iter()
                .map(|p| {
                    let r = decode(code, &p.to_word(code.n()), artifacts, pipeline, false)?;
                    Ok((r.error.as_ref() != Some(p)).then(|| p.clone()))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            Ok((group.len(), failures))
        })
        .collect();
    let mut summary = SweepSummary::default();
    for r in per_weight {
        let (count, failures) = r?;
        summary.total += count;
        summary.corrected += count - failures.len();
        summary.by_weight.push((count, count - failures.len()));
        let room = 8usize.saturating_sub(summary.failures.len());
        summary.failures.extend(failures.into_iter().take(room));
    }
    Ok(summary)
}
