//! Representation artifacts: unknown syndromes and error-locator
//! coefficients written as polynomials in the known syndromes.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::code::{CodeSpec, CyclicCode, ErrorPattern, SyndromeTuple};
use crate::error::{Error, Result};
use crate::field::{cyclotomic_coset, Element, Field};
use crate::interp::{mvif_orbit, term_residue};
use crate::poly::{parse_term_table, poly_from_rows, SparseMultiPoly, UniPoly};

/// Environment variable overriding the artifact cache directory.
pub const CACHE_ENV: &str = "CYCLIC_MVIF_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArtifactKind {
    /// `S_target` as a function of the base-set syndromes.
    UnknownSyndrome { target: u32 },
    /// Coefficient of `x^index` in `∏_j (1 - β^{l_j} x)`.
    GelpCoefficient { index: u32 },
}

impl ArtifactKind {
    /// Homogeneous degree of the target map.
    pub fn degree(self) -> u32 {
        match self {
            ArtifactKind::UnknownSyndrome { target } => target,
            ArtifactKind::GelpCoefficient { index } => index,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ArtifactKind::UnknownSyndrome { .. } => "unknown-syndrome",
            ArtifactKind::GelpCoefficient { .. } => "gelp",
        }
    }

    pub fn from_parts(name: &str, index: u32) -> Option<ArtifactKind> {
        match name {
            "unknown-syndrome" => Some(ArtifactKind::UnknownSyndrome { target: index }),
            "gelp" => Some(ArtifactKind::GelpCoefficient { index }),
            _ => None,
        }
    }

    /// File stem used by the cache, e.g. `unknown-syndrome-3`.
    pub fn file_stem(self) -> String {
        format!("{}-{}", self.name(), self.degree())
    }
}

impl fmt::Display for ArtifactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArtifactKind::UnknownSyndrome { target } => write!(f, "S_{target}"),
            ArtifactKind::GelpCoefficient { index } => write!(f, "sigma_{index}"),
        }
    }
}

/// Coefficients of `∏_j (1 - β^{l_j} x)` over the pattern's positions.
pub fn locator_poly(code: &CyclicCode, pattern: &ErrorPattern) -> UniPoly {
    let field = code.field();
    pattern.positions().fold(UniPoly::one(), |acc, l| {
        let factor = UniPoly::new(vec![Element::ONE, field.neg(code.beta_pow(l as i64))]);
        acc.mul(&factor, field)
    })
}

/// The value an artifact of `kind` must take on `pattern`'s syndromes.
pub fn target_value(code: &CyclicCode, kind: ArtifactKind, pattern: &ErrorPattern) -> Element {
    match kind {
        ArtifactKind::UnknownSyndrome { target } => code.syndrome(pattern, target),
        ArtifactKind::GelpCoefficient { index } => locator_poly(code, pattern).coeff(index as usize),
    }
}

/// Structural properties, always recomputed from the polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub terms: usize,
    pub coefficients_in_subfield: bool,
    pub congruence_clean: bool,
    /// Residue every term should satisfy: the target degree mod `n`.
    pub expected_residue: u32,
    /// Distinct `Σ r_i k_i mod n` over the terms.
    pub residues: BTreeSet<u32>,
    pub congruence_violations: usize,
    /// Distinct coefficient values.
    pub coefficient_values: BTreeSet<Element>,
    pub coprime_regime: bool,
}

impl StructureReport {
    pub fn unit_coefficients(&self) -> bool {
        self.coefficient_values.iter().all(|&c| c == Element::ONE)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationArtifact {
    spec: CodeSpec,
    kind: ArtifactKind,
    poly: SparseMultiPoly,
    builder: String,
    patterns: u128,
    report: StructureReport,
}

impl RepresentationArtifact {
    pub fn new(code: &CyclicCode, kind: ArtifactKind, poly: SparseMultiPoly, builder: &str) -> Result<Self> {
        if poly.arity() != code.base_set().len() {
            return Err(Error::ArityMismatch { expected: code.base_set().len(), got: poly.arity() });
        }
        if poly.units() != code.field().units() {
            return Err(Error::InvalidCode(format!(
                "polynomial exponents are reduced mod {}, field has {} units",
                poly.units(),
                code.field().units()
            )));
        }
        let report = structure_report(&poly, code, kind);
        Ok(RepresentationArtifact {
            spec: code.spec(),
            kind,
            poly,
            builder: builder.to_string(),
            patterns: code.pattern_count(),
            report,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn kind(&self) -> ArtifactKind {
        self.kind
    }

    pub fn poly(&self) -> &SparseMultiPoly {
        &self.poly
    }

    pub fn builder(&self) -> &str {
        &self.builder
    }

    pub fn pattern_count(&self) -> u128 {
        self.patterns
    }

    pub fn report(&self) -> &StructureReport {
        &self.report
    }

    pub fn evaluate(&self, known: &[Element], field: &Field) -> Result<Element> {
        self.poly.eval(known, field)
    }

    pub fn to_text(&self) -> String {
        let r = &self.report;
        let mut out = String::from("# cyclic-mvif representation artifact\n");
        out.push_str(&format!("kind = {}\nindex = {}\n", self.kind.name(), self.kind.degree()));
        out.push_str(&self.spec.to_text());
        out.push_str(&format!(
            "degrees = {}\nbuilder = {}\npatterns = {}\n",
            self.spec.base_set.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            self.builder,
            self.patterns
        ));
        out.push_str(&format!(
            "coefficients_in_subfield = {}\ncongruence_clean = {}\nterms = {}\n",
            r.coefficients_in_subfield, r.congruence_clean, r.terms
        ));
        if let ArtifactKind::GelpCoefficient { .. } = self.kind {
            out.push_str("# locator convention: prod_j (1 - beta^l_j x), constant term 1\n");
        }
        out.push_str("---\n");
        out.push_str(&self.poly.to_term_table());
        out
    }

    /// Parses an artifact file. The stored flags are ignored and recomputed.
    pub fn parse(text: &str) -> Result<RepresentationArtifact> {
        let mut lines = text.lines().enumerate();
        let mut spec_text = String::new();
        let (mut kind_name, mut index, mut builder, mut terms) = (None, None, None, None);
        let mut body_start = None;
        for (idx, raw) in lines.by_ref() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body == "---" {
                body_start = Some(line);
                break;
            }
            if body.is_empty() {
                spec_text.push('\n');
                continue;
            }
            let (key, value) =
                body.split_once('=').ok_or_else(|| Error::parse(line, "expected `key = value`"))?;
            let value = value.trim();
            match key.trim() {
                "kind" => kind_name = Some(value.to_string()),
                "index" => index = Some(value.parse::<u32>().map_err(|_| Error::parse(line, "bad index"))?),
                "builder" => builder = Some(value.to_string()),
                "terms" => terms = Some(value.parse::<usize>().map_err(|_| Error::parse(line, "bad term count"))?),
                "degrees" | "patterns" | "coefficients_in_subfield" | "congruence_clean" => {}
                _ => {
                    spec_text.push_str(raw);
                    spec_text.push('\n');
                    continue;
                }
            }
            spec_text.push('\n');
        }
        let start = body_start.ok_or_else(|| Error::parse(0, "missing `---` separator"))?;
        let kind = kind_name
            .zip(index)
            .and_then(|(k, i)| ArtifactKind::from_parts(&k, i))
            .ok_or_else(|| Error::parse(0, "missing or unknown kind/index"))?;
        let spec = CodeSpec::parse(&spec_text)?;
        let code = spec.build()?;
        let table: String = lines.map(|(_, l)| l).collect::<Vec<_>>().join("\n");
        let mut rows = parse_term_table(&table, Some(code.base_set().len()))
            .map_err(|e| shift_line(e, start))?;
        for r in &mut rows {
            r.line += start;
        }
        let poly = poly_from_rows(&rows, code.base_set().len(), code.field())?;
        if let Some(expected) = terms {
            if expected != poly.len() {
                return Err(Error::parse(0, format!("header says {expected} terms, table has {}", poly.len())));
            }
        }
        RepresentationArtifact::new(&code, kind, poly, builder.as_deref().unwrap_or("file"))
    }
}

fn shift_line(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse { line: line + by, msg },
        other => other,
    }
}

pub fn structure_report(poly: &SparseMultiPoly, code: &CyclicCode, kind: ArtifactKind) -> StructureReport {
    let field = code.field();
    let n = code.n();
    let expected_residue = kind.degree() % n;
    let mut residues = BTreeSet::new();
    let mut violations = 0;
    let mut coefficient_values = BTreeSet::new();
    for (exps, c) in poly.terms() {
        let r = term_residue(exps, code.base_set(), n);
        residues.insert(r);
        if r != expected_residue {
            violations += 1;
        }
        coefficient_values.insert(*c);
    }
    StructureReport {
        terms: poly.len(),
        coefficients_in_subfield: coefficient_values.iter().all(|&c| field.in_subfield(c, code.q())),
        congruence_clean: violations == 0,
        expected_residue,
        residues,
        congruence_violations: violations,
        coefficient_values,
        coprime_regime: code.coprime_regime(),
    }
}

/// Recomputes the structure flags. A failed flag is an error only when
/// `gcd(n, q - 1) = 1`; otherwise it is returned as a finding.
pub fn check_structure(artifact: &RepresentationArtifact, code: &CyclicCode) -> Result<StructureReport> {
    let report = structure_report(artifact.poly(), code, artifact.kind());
    if report.coprime_regime {
        if !report.coefficients_in_subfield {
            return Err(Error::StructureTheoremViolated(format!(
                "{} has coefficients outside GF({})",
                artifact.kind(),
                code.q()
            )));
        }
        if !report.congruence_clean {
            return Err(Error::StructureTheoremViolated(format!(
                "{} has {} terms off residue {}",
                artifact.kind(),
                report.congruence_violations,
                report.expected_residue
            )));
        }
    }
    Ok(report)
}

/// Builds the interpolant of `kind` on the correctable syndromes without
/// rejecting targets inside the defining set.
pub fn build_representation(code: &CyclicCode, kind: ArtifactKind) -> Result<RepresentationArtifact> {
    if let ArtifactKind::GelpCoefficient { index } = kind {
        if index == 0 || index > code.t() {
            return Err(Error::InvalidCode(format!("locator coefficient index {index} outside 1..={}", code.t())));
        }
    }
    code.verify_injectivity()?;
    let poly = mvif_orbit(
        code,
        |p| code.syndrome_tuple(p).0,
        code.base_set(),
        |p| target_value(code, kind, p),
        kind.degree(),
    )?;
    let artifact = RepresentationArtifact::new(code, kind, poly, "orbit")?;
    check_structure(&artifact, code)?;
    Ok(artifact)
}

pub fn build_unknown_syndrome_rep(code: &CyclicCode, target: u32) -> Result<RepresentationArtifact> {
    let r = target % code.n();
    if code.in_defining_set(r) {
        return Err(Error::TargetInDefiningSet(target));
    }
    build_representation(code, ArtifactKind::UnknownSyndrome { target })
}

/// Locator coefficients `x^1 … x^t`; the constant term is always 1.
pub fn build_gelp_coefficients(code: &CyclicCode) -> Result<Vec<RepresentationArtifact>> {
    (1..=code.t()).map(|index| build_representation(code, ArtifactKind::GelpCoefficient { index })).collect()
}

/// Residues in `1..=2t` outside the defining set that are the smallest
/// member of their cyclotomic coset within that range. Every other missing
/// syndrome is a Frobenius power of one of these.
pub fn needed_targets(code: &CyclicCode) -> Vec<u32> {
    let two_t = 2 * code.t();
    let mut covered = BTreeSet::new();
    let mut out = Vec::new();
    for i in 1..=two_t {
        let r = i % code.n();
        if code.in_defining_set(r) || covered.contains(&r) {
            continue;
        }
        out.push(i);
        covered.extend(cyclotomic_coset(r, code.n(), code.q()));
    }
    out
}

/// Every artifact a decoding pipeline needs.
pub fn required_kinds(code: &CyclicCode, gelp: bool) -> Vec<ArtifactKind> {
    if gelp {
        (1..=code.t()).map(|index| ArtifactKind::GelpCoefficient { index }).collect()
    } else {
        needed_targets(code).into_iter().map(|target| ArtifactKind::UnknownSyndrome { target }).collect()
    }
}

/// Patterns on which the artifact disagrees with the directly computed
/// target.
pub fn universality_failures(artifact: &RepresentationArtifact, code: &CyclicCode) -> Result<Vec<ErrorPattern>> {
    let patterns = code.correctable_patterns_vec()?;
    let field = code.field();
    Ok(patterns
        .into_par_iter()
        .filter(|p| {
            let s = code.syndrome_tuple(p);
            artifact.poly().eval_unchecked(&s.0, field) != target_value(code, artifact.kind(), p)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub tuple: SyndromeTuple,
    pub expected: Element,
    pub got: Element,
}

/// Term-set and functional comparison of a printed table against an
/// artifact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableComparison {
    pub table_terms: usize,
    pub artifact_terms: usize,
    pub only_in_table: Vec<Vec<u32>>,
    pub only_in_artifact: Vec<Vec<u32>>,
    /// Shared exponents with different coefficients: (exponents, artifact, table).
    pub coefficient_mismatches: Vec<(Vec<u32>, Element, Element)>,
    pub agreeing: usize,
    pub total: usize,
    /// First disagreeing tuples, at most [`MAX_REPORTED`].
    pub disagreements: Vec<Disagreement>,
}

pub const MAX_REPORTED: usize = 32;

impl TableComparison {
    pub fn identical_terms(&self) -> bool {
        self.only_in_table.is_empty() && self.only_in_artifact.is_empty() && self.coefficient_mismatches.is_empty()
    }

    pub fn agreement(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.agreeing as f64 / self.total as f64
        }
    }
}

pub fn compare_with_table(
    artifact: &RepresentationArtifact,
    table: &SparseMultiPoly,
    code: &CyclicCode,
) -> Result<TableComparison> {
    let ours = artifact.poly();
    if table.arity() != ours.arity() || table.units() != ours.units() {
        return Err(Error::ArityMismatch { expected: ours.arity(), got: table.arity() });
    }
    let mut only_in_table = Vec::new();
    let mut only_in_artifact = Vec::new();
    let mut coefficient_mismatches = Vec::new();
    let (a, b) = (ours.terms(), table.terms());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                if ca != cb {
                    coefficient_mismatches.push((ea.clone(), *ca, *cb));
                }
                i += 1;
                j += 1;
            }
            (Some((ea, _)), Some((eb, _))) if ea < eb => {
                only_in_artifact.push(ea.clone());
                i += 1;
            }
            (Some((ea, _)), None) => {
                only_in_artifact.push(ea.clone());
                i += 1;
            }
            (_, Some((eb, _))) => {
                only_in_table.push(eb.clone());
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let field = code.field();
    let patterns = code.correctable_patterns_vec()?;
    let total = patterns.len();
    let mut bad: Vec<Disagreement> = patterns
        .par_iter()
        .filter_map(|p| {
            let s = code.syndrome_tuple(p);
            let expected = ours.eval_unchecked(&s.0, field);
            let got = table.eval_unchecked(&s.0, field);
            (expected != got).then_some(Disagreement { tuple: s, expected, got })
        })
        .collect();
    let agreeing = total - bad.len();
    bad.truncate(MAX_REPORTED);
    Ok(TableComparison {
        table_terms: table.len(),
        artifact_terms: ours.len(),
        only_in_table,
        only_in_artifact,
        coefficient_mismatches,
        agreeing,
        total,
        disagreements: bad,
    })
}

/// Reads a bare hex-tuple table (the printed format) as a polynomial.
pub fn load_table(text: &str, code: &CyclicCode) -> Result<SparseMultiPoly> {
    let arity = code.base_set().len();
    let rows = parse_term_table(text, Some(arity))?;
    poly_from_rows(&rows, arity, code.field())
}

/// On-disk artifact store, keyed by code-spec hash and artifact kind.
#[derive(Clone, Debug)]
pub struct ArtifactCache {
    dir: PathBuf,
}

impl ArtifactCache {
    pub fn new(dir: impl Into<PathBuf>) -> ArtifactCache {
        ArtifactCache { dir: dir.into() }
    }

    /// `$CYCLIC_MVIF_CACHE` if set, else `fallback`.
    pub fn from_env_or(fallback: impl Into<PathBuf>) -> ArtifactCache {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => ArtifactCache::new(d),
            _ => ArtifactCache::new(fallback),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, spec: &CodeSpec, kind: ArtifactKind) -> PathBuf {
        self.dir.join(&spec.content_hash()[..16]).join(format!("{}.txt", kind.file_stem()))
    }

    /// A cached artifact, if present and built for the same code.
    pub fn load(&self, spec: &CodeSpec, kind: ArtifactKind) -> Result<Option<RepresentationArtifact>> {
        let path = self.path(spec, kind);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let artifact = RepresentationArtifact::parse(&text)?;
        Ok((artifact.spec() == spec && artifact.kind() == kind).then_some(artifact))
    }

    pub fn store(&self, artifact: &RepresentationArtifact) -> Result<PathBuf> {
        let path = self.path(artifact.spec(), artifact.kind());
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, artifact.to_text())?;
        std::fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Loads from the cache unless `force`, building and storing otherwise.
    /// The flag reports whether a build happened.
    pub fn get_or_build(
        &self,
        code: &CyclicCode,
        kind: ArtifactKind,
        force: bool,
    ) -> Result<(RepresentationArtifact, bool)> {
        if !force {
            if let Some(a) = self.load(&code.spec(), kind)? {
                return Ok((a, false));
            }
        }
        let artifact = build_representation(code, kind)?;
        self.store(&artifact)?;
        Ok((artifact, true))
    }
}
