//! Cyclic codes: defining set, base set, generator, correctable error
//! patterns and syndromes.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{cyclotomic_coset, gcd, minimal_polynomial, multiplicative_order, Element, Field};
use crate::poly::UniPoly;

/// Enumeration guard for exhaustive sweeps.
pub const MAX_PATTERNS: u128 = 10_000_000;

/// A cyclic code of length `n` over `GF(q)`, described inside `GF(p^e)`.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    field: Arc<Field>,
    n: u32,
    q: u32,
    beta_exp: u32,
    defining_set: Vec<u32>,
    base_set: Vec<u32>,
    generator: UniPoly,
    t: u32,
    magnitudes: Vec<Element>,
    pattern_limit: u128,
}

impl CyclicCode {
    /// Assembles the code generated by `∏_{r ∈ base_set} m_r(x)` with
    /// `β = α^{N/n}`.
    pub fn new(field: Arc<Field>, n: u32, q: u32, base_set: &[u32], t: u32) -> Result<CyclicCode> {
        let units = field.units();
        if n < 2 || !units.is_multiple_of(n) {
            return Err(Error::BadOrder { n, order: units });
        }
        field.subfield(q)?;
        if gcd(n as u64, q as u64) != 1 {
            return Err(Error::InvalidCode(format!("gcd({n}, {q}) != 1")));
        }
        let beta_exp = units / n;
        let mut defining_set = Vec::new();
        let mut seen: HashMap<u32, u32> = HashMap::new();
        let mut generator = UniPoly::one();
        for &r in base_set {
            if r >= n {
                return Err(Error::InvalidCode(format!("base-set residue {r} is not below {n}")));
            }
            let coset = cyclotomic_coset(r, n, q);
            if let Some(&prev) = coset.iter().find_map(|j| seen.get(j)) {
                return Err(Error::OverlappingCosets { a: prev, b: r });
            }
            for &j in &coset {
                seen.insert(j, r);
            }
            defining_set.extend_from_slice(&coset);
            let m = minimal_polynomial(&field, beta_exp, r, n, q)
                .map_err(|_| Error::GeneratorNotOverSubfield)?;
            generator = generator.mul(&m, &field);
        }
        defining_set.sort_unstable();
        if generator.coeffs().iter().any(|&c| !field.in_subfield(c, q)) {
            return Err(Error::GeneratorNotOverSubfield);
        }
        let magnitudes = field.subfield_units(q);
        Ok(CyclicCode {
            field,
            n,
            q,
            beta_exp,
            defining_set,
            base_set: base_set.to_vec(),
            generator,
            t,
            magnitudes,
            pattern_limit: MAX_PATTERNS,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `β = α^{beta_exp}` has order `n`.
    pub fn beta_exp(&self) -> u32 {
        self.beta_exp
    }

    pub fn beta_pow(&self, k: i64) -> Element {
        self.field.alpha_pow(self.beta_exp as i64 * k.rem_euclid(self.n as i64))
    }

    pub fn defining_set(&self) -> &[u32] {
        &self.defining_set
    }

    pub fn base_set(&self) -> &[u32] {
        &self.base_set
    }

    pub fn generator(&self) -> &UniPoly {
        &self.generator
    }

    /// Nonzero elements of the symbol field, ascending by code.
    pub fn magnitudes(&self) -> &[Element] {
        &self.magnitudes
    }

    pub fn dimension(&self) -> u32 {
        self.n - self.defining_set.len() as u32
    }

    pub fn in_defining_set(&self, r: u32) -> bool {
        self.defining_set.binary_search(&(r % self.n)).is_ok()
    }

    /// Multiplicative order of `q` modulo `n`.
    pub fn extension_degree(&self) -> u32 {
        multiplicative_order(self.q, self.n)
    }

    /// `gcd(n, q - 1) = 1`: the regime where the base-field and congruence
    /// guarantees are theorems rather than observations.
    pub fn coprime_regime(&self) -> bool {
        gcd(self.n as u64, self.q as u64 - 1) == 1
    }

    pub fn pattern_count(&self) -> u128 {
        (1..=self.t as u128)
            .map(|v| binomial(self.n as u128, v) * (self.magnitudes.len() as u128).pow(v as u32))
            .sum()
    }

    /// Every error pattern of weight `1..=t` in (weight, positions,
    /// magnitudes) lexicographic order.
    pub fn correctable_patterns(&self) -> PatternIter<'_> {
        PatternIter::new(self)
    }

    /// Replaces the enumeration budget (default [`MAX_PATTERNS`]).
    pub fn with_pattern_limit(mut self, limit: u128) -> CyclicCode {
        self.pattern_limit = limit;
        self
    }

    pub fn pattern_limit(&self) -> u128 {
        self.pattern_limit
    }

    pub fn correctable_patterns_vec(&self) -> Result<Vec<ErrorPattern>> {
        let count = self.pattern_count();
        if count > self.pattern_limit {
            return Err(Error::BudgetExceeded { what: "pattern enumeration", count, limit: self.pattern_limit });
        }
        Ok(self.correctable_patterns().collect())
    }

    /// `S_r = Σ c_j β^{r l_j}`.
    pub fn syndrome(&self, pattern: &ErrorPattern, r: u32) -> Element {
        let f = &self.field;
        pattern.entries.iter().fold(Element::ZERO, |acc, &(l, c)| {
            f.add(acc, f.mul(c, self.beta_pow(r as i64 * l as i64)))
        })
    }

    /// Received word evaluated at `β^r`.
    pub fn word_syndrome(&self, word: &[Element], r: u32) -> Element {
        let f = &self.field;
        let x = self.beta_pow(r as i64);
        word.iter().rev().fold(Element::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Syndromes at the base-set residues.
    pub fn syndrome_tuple(&self, pattern: &ErrorPattern) -> SyndromeTuple {
        SyndromeTuple(self.base_set.iter().map(|&r| self.syndrome(pattern, r)).collect())
    }

    pub fn word_syndrome_tuple(&self, word: &[Element]) -> SyndromeTuple {
        SyndromeTuple(self.base_set.iter().map(|&r| self.word_syndrome(word, r)).collect())
    }

    pub fn is_codeword(&self, word: &[Element]) -> bool {
        word.len() == self.n as usize
            && word.iter().all(|&c| self.field.in_subfield(c, self.q))
            && self.base_set.iter().all(|&r| self.word_syndrome(word, r).is_zero())
    }

    /// Non-systematic encoding `m(x) g(x)`.
    pub fn encode(&self, message: &[Element]) -> Result<Vec<Element>> {
        if message.len() != self.dimension() as usize {
            return Err(Error::InvalidCode(format!(
                "message has {} symbols, expected {}",
                message.len(),
                self.dimension()
            )));
        }
        let c = UniPoly::new(message.to_vec()).mul(&self.generator, &self.field);
        let mut word = c.coeffs().to_vec();
        word.resize(self.n as usize, Element::ZERO);
        Ok(word)
    }

    /// Pairwise distinctness of the base-set syndrome tuples over every
    /// correctable pattern.
    pub fn verify_injectivity(&self) -> Result<InjectivityReport> {
        let patterns = self.correctable_patterns_vec()?;
        let mut seen: HashMap<SyndromeTuple, usize> = HashMap::with_capacity(patterns.len());
        for (i, p) in patterns.iter().enumerate() {
            if let Some(&j) = seen.get(&self.syndrome_tuple(p)) {
                return Err(Error::InjectivityViolated {
                    first: patterns[j].to_string(),
                    second: p.to_string(),
                });
            }
            seen.insert(self.syndrome_tuple(p), i);
        }
        Ok(InjectivityReport { patterns: patterns.len(), distinct: seen.len() })
    }

    /// Minimum distance by enumerating all codewords; only for `n <= 31`
    /// and at most `2^20` codewords.
    pub fn minimum_distance_bruteforce(&self) -> Result<u32> {
        let k = self.dimension();
        let count = (self.q as u128).pow(k);
        if self.n > 31 || count > 1 << 20 {
            return Err(Error::BudgetExceeded { what: "codeword enumeration", count, limit: 1 << 20 });
        }
        let symbols: Vec<Element> = std::iter::once(Element::ZERO).chain(self.magnitudes.iter().copied()).collect();
        let mut best = self.n;
        let mut digits = vec![0usize; k as usize];
        for _ in 1..count {
            for d in digits.iter_mut() {
                *d += 1;
                if *d < symbols.len() {
                    break;
                }
                *d = 0;
            }
            let msg: Vec<Element> = digits.iter().map(|&d| symbols[d]).collect();
            let w = self.encode(&msg)?.iter().filter(|c| !c.is_zero()).count() as u32;
            best = best.min(w);
        }
        Ok(best)
    }

    /// Key-value description (see [`CodeSpec`]).
    pub fn spec(&self) -> CodeSpec {
        CodeSpec {
            p: self.field.characteristic(),
            e: self.field.degree(),
            modulus: self.field.modulus_code(),
            n: self.n,
            q: self.q,
            base_set: self.base_set.clone(),
            t: self.t,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub patterns: usize,
    pub distinct: usize,
}

/// A correctable error: strictly increasing positions with nonzero
/// magnitudes from the symbol field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErrorPattern {
    entries: Vec<(u32, Element)>,
}

impl ErrorPattern {
    pub fn new(mut entries: Vec<(u32, Element)>, code: &CyclicCode) -> Result<ErrorPattern> {
        entries.sort_unstable_by_key(|e| e.0);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidPattern("repeated position".into()));
        }
        for &(l, c) in &entries {
            if l >= code.n {
                return Err(Error::InvalidPattern(format!("position {l} out of range")));
            }
            if c.is_zero() || !code.field.in_subfield(c, code.q) {
                return Err(Error::InvalidPattern(format!("magnitude {c} not in GF({})*", code.q)));
            }
        }
        Ok(ErrorPattern { entries })
    }

    /// Binary pattern with unit magnitudes.
    pub fn binary(positions: &[u32], code: &CyclicCode) -> Result<ErrorPattern> {
        ErrorPattern::new(positions.iter().map(|&l| (l, Element::ONE)).collect(), code)
    }

    /// Entries taken as given, sorted by position; no range checks.
    pub fn from_entries(mut entries: Vec<(u32, Element)>) -> ErrorPattern {
        entries.sort_unstable_by_key(|e| e.0);
        ErrorPattern { entries }
    }

    /// Nonzero positions of a word.
    pub fn from_word(word: &[Element]) -> ErrorPattern {
        ErrorPattern {
            entries: word
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, &c)| (i as u32, c))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(u32, Element)] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.len()
    }

    pub fn positions(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    /// Cyclic shift `x^w e(x)`.
    pub fn shift(&self, w: u32, n: u32) -> ErrorPattern {
        let mut entries: Vec<_> = self.entries.iter().map(|&(l, c)| ((l + w) % n, c)).collect();
        entries.sort_unstable_by_key(|e| e.0);
        ErrorPattern { entries }
    }

    /// Positions multiplied by `q` modulo `n`, magnitudes fixed.
    pub fn frobenius(&self, q: u32, n: u32) -> ErrorPattern {
        let mut entries: Vec<_> =
            self.entries.iter().map(|&(l, c)| ((l as u64 * q as u64 % n as u64) as u32, c)).collect();
        entries.sort_unstable_by_key(|e| e.0);
        ErrorPattern { entries }
    }

    pub fn to_word(&self, n: u32) -> Vec<Element> {
        let mut w = vec![Element::ZERO; n as usize];
        for &(l, c) in &self.entries {
            w[l as usize] = c;
        }
        w
    }
}

impl fmt::Display for ErrorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(l, c)| format!("{c:x}*x^{l}")).collect();
        f.write_str(&parts.join("+"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyndromeTuple(pub Vec<Element>);

impl SyndromeTuple {
    pub fn values(&self) -> &[Element] {
        &self.0
    }
}

/// Streaming enumerator behind [`CyclicCode::correctable_patterns`].
pub struct PatternIter<'a> {
    code: &'a CyclicCode,
    weight: usize,
    positions: Vec<u32>,
    mags: Vec<usize>,
    done: bool,
}

impl<'a> PatternIter<'a> {
    fn new(code: &'a CyclicCode) -> Self {
        let mut it = PatternIter { code, weight: 0, positions: Vec::new(), mags: Vec::new(), done: false };
        it.start_weight(1);
        it
    }

    fn start_weight(&mut self, v: usize) {
        if v > self.code.t as usize || v > self.code.n as usize || self.code.magnitudes.is_empty() {
            self.done = true;
            return;
        }
        self.weight = v;
        self.positions = (0..v as u32).collect();
        self.mags = vec![0; v];
    }

    fn advance(&mut self) {
        let m = self.code.magnitudes.len();
        for i in (0..self.weight).rev() {
            self.mags[i] += 1;
            if self.mags[i] < m {
                return;
            }
            self.mags[i] = 0;
        }
        // next combination
        let n = self.code.n;
        let v = self.weight;
        let mut i = v;
        while i > 0 {
            i -= 1;
            if self.positions[i] < n - (v - i) as u32 {
                self.positions[i] += 1;
                for j in i + 1..v {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                return;
            }
        }
        self.start_weight(v + 1);
    }
}

impl Iterator for PatternIter<'_> {
    type Item = ErrorPattern;

    fn next(&mut self) -> Option<ErrorPattern> {
        if self.done {
            return None;
        }
        let entries = self
            .positions
            .iter()
            .zip(&self.mags)
            .map(|(&l, &m)| (l, self.code.magnitudes[m]))
            .collect();
        self.advance();
        Some(ErrorPattern { entries })
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Text description of a code: field triple, length, symbol field, base
/// set and capacity.
///
/// ```text
/// field = 2,5,0x25
/// n = 31
/// q = 2
/// base_set = 1,5,7
/// t = 3
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub p: u32,
    pub e: u32,
    pub modulus: u64,
    pub n: u32,
    pub q: u32,
    pub base_set: Vec<u32>,
    pub t: u32,
}

impl CodeSpec {
    pub fn build(&self) -> Result<CyclicCode> {
        let field = Arc::new(Field::from_modulus_code(self.p, self.e, self.modulus)?);
        CyclicCode::new(field, self.n, self.q, &self.base_set, self.t)
    }

    pub fn to_text(&self) -> String {
        format!(
            "field = {},{},{:#x}\nn = {}\nq = {}\nbase_set = {}\nt = {}\n",
            self.p,
            self.e,
            self.modulus,
            self.n,
            self.q,
            join(&self.base_set),
            self.t
        )
    }

    pub fn parse(text: &str) -> Result<CodeSpec> {
        let mut field = None;
        let (mut n, mut q, mut base_set, mut t) = (None, None, None, None);
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) =
                body.split_once('=').ok_or_else(|| Error::parse(line, "expected `key = value`"))?;
            let value = value.trim();
            match key.trim() {
                "field" => field = Some(parse_field_triple(value).map_err(|m| Error::parse(line, m))?),
                "n" => n = Some(parse_u32(value, line)?),
                "q" => q = Some(parse_u32(value, line)?),
                "base_set" => {
                    base_set = Some(
                        value.split(',').map(|s| parse_u32(s.trim(), line)).collect::<Result<Vec<_>>>()?,
                    )
                }
                "t" => t = Some(parse_u32(value, line)?),
                other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::parse(0, format!("missing key {k:?}"));
        let (p, e, modulus) = field.ok_or_else(|| missing("field"))?;
        Ok(CodeSpec {
            p,
            e,
            modulus,
            n: n.ok_or_else(|| missing("n"))?,
            q: q.ok_or_else(|| missing("q"))?,
            base_set: base_set.ok_or_else(|| missing("base_set"))?,
            t: t.ok_or_else(|| missing("t"))?,
        })
    }

    /// Hex SHA-256 of the canonical text; keys the artifact cache.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_text().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Parses `p,e,modulus` where the modulus is hex (with or without `0x`).
pub fn parse_field_triple(s: &str) -> std::result::Result<(u32, u32, u64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("field triple {s:?} must be `p,e,modulus`"));
    }
    let p = parts[0].parse().map_err(|_| format!("bad characteristic {:?}", parts[0]))?;
    let e = parts[1].parse().map_err(|_| format!("bad degree {:?}", parts[1]))?;
    let m = parts[2].strip_prefix("0x").unwrap_or(parts[2]);
    let modulus = u64::from_str_radix(m, 16).map_err(|_| format!("bad modulus {:?}", parts[2]))?;
    Ok((p, e, modulus))
}

fn parse_u32(s: &str, line: usize) -> Result<u32> {
    s.parse().map_err(|_| Error::parse(line, format!("expected an integer, got {s:?}")))
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Comma-separated hex symbols, index `0..n-1`.
pub fn format_word(word: &[Element]) -> String {
    word.iter().map(|c| format!("{c:x}")).collect::<Vec<_>>().join(",")
}

pub fn parse_word(s: &str, n: u32, field: &Field) -> Result<Vec<Element>> {
    let word: Vec<Element> = s
        .trim()
        .split(',')
        .map(|h| Element::from_hex(h).ok_or_else(|| Error::parse(1, format!("bad symbol {h:?}"))))
        .collect::<Result<_>>()?;
    if word.len() != n as usize {
        return Err(Error::parse(1, format!("word has {} symbols, expected {n}", word.len())));
    }
    if let Some(c) = word.iter().find(|c| !field.contains(**c)) {
        return Err(Error::parse(1, format!("symbol {c} outside the field")));
    }
    Ok(word)
}

/// Codes used throughout the tests and the CLI.
pub mod presets {
    use super::CodeSpec;

    /// Binary quadratic-residue code (31, 16, 7).
    pub fn qr31() -> CodeSpec {
        CodeSpec { p: 2, e: 5, modulus: 0x25, n: 31, q: 2, base_set: vec![1, 5, 7], t: 3 }
    }

    /// Reed-Solomon (15, 11, 5) over GF(16).
    pub fn rs15() -> CodeSpec {
        CodeSpec { p: 2, e: 4, modulus: 0x13, n: 15, q: 16, base_set: vec![1, 2, 3, 4], t: 2 }
    }

    /// Binary Golay (23, 12, 7); irreducible generator.
    pub fn golay23() -> CodeSpec {
        CodeSpec { p: 2, e: 11, modulus: 0x805, n: 23, q: 2, base_set: vec![1], t: 3 }
    }

    /// Binary Hamming (7, 4, 3).
    pub fn hamming7() -> CodeSpec {
        CodeSpec { p: 2, e: 3, modulus: 0xb, n: 7, q: 2, base_set: vec![1], t: 1 }
    }

    /// Binary BCH (15, 7, 5).
    pub fn bch15() -> CodeSpec {
        CodeSpec { p: 2, e: 4, modulus: 0x13, n: 15, q: 2, base_set: vec![1, 3], t: 2 }
    }

    pub fn by_name(name: &str) -> Option<CodeSpec> {
        match name {
            "qr31" => Some(qr31()),
            "rs15" => Some(rs15()),
            "golay23" => Some(golay23()),
            "hamming7" => Some(hamming7()),
            "bch15" => Some(bch15()),
            _ => None,
        }
    }

    pub const NAMES: &[&str] = &["qr31", "rs15", "golay23", "hamming7", "bch15"];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr31() -> CyclicCode {
        presets::qr31().build().unwrap()
    }

    fn rs15() -> CyclicCode {
        presets::rs15().build().unwrap()
    }

    #[test]
    fn qr31_defining_set_and_generator() {
        let c = qr31();
        assert_eq!(c.defining_set(), &[1, 2, 4, 5, 7, 8, 9, 10, 14, 16, 18, 19, 20, 25, 28]);
        let nz: Vec<usize> =
            c.generator().coeffs().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect();
        assert_eq!(nz, vec![0, 3, 8, 9, 13, 14, 15]);
        assert!(c.coprime_regime());
        assert_eq!(c.extension_degree(), 5);
    }

    #[test]
    fn rs15_generator() {
        let c = rs15();
        let f = c.field();
        // ∏(x + α^i) for i = 1..4 has constant term α^10; the listing
        // α^13, α^6, α^3, α^10 reads the same coefficients from x^3 down.
        let expect: Vec<Element> = [10, 3, 6, 13].iter().map(|&k| f.alpha_pow(k)).chain([Element::ONE]).collect();
        assert_eq!(c.generator().coeffs(), &expect[..]);
        let direct = (1..=4).fold(UniPoly::one(), |g, i| g.mul(&UniPoly::new(vec![f.alpha_pow(i), Element::ONE]), f));
        assert_eq!(&direct, c.generator());
        assert!(!c.coprime_regime());
    }

    #[test]
    fn construction_errors() {
        let f = Arc::new(Field::from_modulus_code(2, 5, 0x25).unwrap());
        assert_eq!(CyclicCode::new(f.clone(), 30, 2, &[1], 1).unwrap_err(), Error::BadOrder { n: 30, order: 31 });
        assert_eq!(CyclicCode::new(f.clone(), 31, 2, &[1, 2], 1).unwrap_err(), Error::OverlappingCosets { a: 1, b: 2 });
        assert!(matches!(CyclicCode::new(f, 31, 4, &[1], 1), Err(Error::InvalidSubfield { .. })));
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(qr31().pattern_count(), 4991);
        assert_eq!(qr31().correctable_patterns().count(), 4991);
        assert_eq!(rs15().pattern_count(), 23850);
        assert_eq!(rs15().correctable_patterns().count(), 23850);
        let h = presets::hamming7().build().unwrap();
        assert_eq!(h.correctable_patterns().count(), 7);
    }

    #[test]
    fn enumeration_is_ordered_and_unique() {
        let c = rs15();
        let pats: Vec<_> = c.correctable_patterns().collect();
        for w in pats.windows(2) {
            let key = |p: &ErrorPattern| {
                (p.weight(), p.positions().collect::<Vec<_>>(), p.entries().iter().map(|e| e.1).collect::<Vec<_>>())
            };
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn worked_example_syndromes() {
        let c = qr31();
        let f = c.field();
        let e = ErrorPattern::binary(&[3, 7, 20], &c).unwrap();
        assert_eq!(c.syndrome(&e, 1), f.alpha_pow(4));
        assert_eq!(c.syndrome(&e, 5), f.alpha_pow(16));
        assert_eq!(c.syndrome(&e, 7), Element::ZERO);
        assert!(!c.is_codeword(&e.to_word(31)));

        let r = rs15();
        let g = r.field();
        let e = ErrorPattern::new(vec![(2, g.alpha_pow(6)), (14, g.alpha_pow(5))], &r).unwrap();
        let s: Vec<_> = (1..=4).map(|i| r.syndrome(&e, i)).collect();
        assert_eq!(s, [5, 12, 7, 7].map(|k| g.alpha_pow(k)));
        assert_eq!(r.word_syndrome(&e.to_word(15), 4), g.alpha_pow(7));
    }

    #[test]
    fn codewords() {
        let c = qr31();
        assert!(c.is_codeword(&[Element::ZERO; 31]));
        let mut g = c.generator().coeffs().to_vec();
        g.resize(31, Element::ZERO);
        assert!(c.is_codeword(&g));
        for r in c.defining_set() {
            assert!(c.word_syndrome(&g, *r).is_zero());
        }
    }

    #[test]
    fn injectivity_on_examples() {
        assert_eq!(qr31().verify_injectivity().unwrap(), InjectivityReport { patterns: 4991, distinct: 4991 });
        assert_eq!(rs15().verify_injectivity().unwrap().distinct, 23850);
        let mut spec = presets::qr31();
        spec.t = 0;
        assert_eq!(spec.build().unwrap().verify_injectivity().unwrap().distinct, 0);
    }

    #[test]
    fn injectivity_violation_detected() {
        let mut spec = presets::hamming7();
        spec.t = 2;
        assert!(matches!(spec.build().unwrap().verify_injectivity(), Err(Error::InjectivityViolated { .. })));
    }

    #[test]
    fn minimum_distances() {
        assert_eq!(qr31().minimum_distance_bruteforce().unwrap(), 7);
        assert_eq!(presets::hamming7().build().unwrap().minimum_distance_bruteforce().unwrap(), 3);
        assert_eq!(presets::bch15().build().unwrap().minimum_distance_bruteforce().unwrap(), 5);
        assert!(rs15().minimum_distance_bruteforce().is_err());
    }

    #[test]
    fn spec_text_roundtrip() {
        for name in presets::NAMES {
            let spec = presets::by_name(name).unwrap();
            assert_eq!(CodeSpec::parse(&spec.to_text()).unwrap(), spec);
        }
        assert_eq!(presets::qr31().to_text(), "field = 2,5,0x25\nn = 31\nq = 2\nbase_set = 1,5,7\nt = 3\n");
        assert!(matches!(CodeSpec::parse("n = x\n"), Err(Error::Parse { line: 1, .. })));
        assert_ne!(presets::qr31().content_hash(), presets::rs15().content_hash());
    }

    #[test]
    fn shifts_and_conjugates_of_syndromes() {
        let c = qr31();
        let f = c.field();
        for p in c.correctable_patterns().take(600) {
            for w in [1, 5, 30] {
                let sp = p.shift(w, 31);
                for r in [1, 3, 5, 7] {
                    let expect = f.mul(c.beta_pow(r as i64 * w as i64), c.syndrome(&p, r));
                    assert_eq!(c.syndrome(&sp, r), expect);
                }
            }
            let fp = p.frobenius(2, 31);
            for r in [1, 3, 5, 7] {
                assert_eq!(c.syndrome(&fp, r), f.frobenius(c.syndrome(&p, r), 2));
                assert_eq!(c.syndrome(&p, 2 * r % 31), f.frobenius(c.syndrome(&p, r), 2));
            }
        }
    }

    #[test]
    fn word_parsing() {
        let c = qr31();
        let w = ErrorPattern::binary(&[3, 7, 20], &c).unwrap().to_word(31);
        assert_eq!(parse_word(&format_word(&w), 31, c.field()).unwrap(), w);
        assert!(parse_word("0,1", 31, c.field()).is_err());
        assert!(parse_word(&format_word(&w).replace("1", "zz"), 31, c.field()).is_err());
    }
}
