//! Dense univariate and sparse multivariate polynomials over `GF(p^e)`.
//!
//! Multivariate polynomials are kept in the canonical form of functions on
//! the field: every exponent lies in `0..=N`, where `x^0` and `x^N` are
//! different functions (they disagree at zero).

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Element, Field};

/// `x^k` as a function on `GF(p^e)` equals `x^{normalize_exponent(k, N)}`.
#[inline]
pub fn normalize_exponent(k: u64, units: u32) -> u32 {
    if k == 0 {
        0
    } else {
        ((k - 1) % units as u64) as u32 + 1
    }
}

/// Dense polynomial, index = degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Element>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Element>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly { coeffs: vec![Element::ONE] }
    }

    pub fn monomial(c: Element, deg: usize) -> UniPoly {
        let mut coeffs = vec![Element::ZERO; deg + 1];
        coeffs[deg] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(Element::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly, field: &Field) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|i| field.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &UniPoly, field: &Field) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|i| field.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: Element, field: &Field) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Element::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn mul(&self, other: &UniPoly, field: &Field) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    /// Product truncated below `x^k`.
    pub fn mul_mod(&self, other: &UniPoly, k: usize, field: &Field) -> UniPoly {
        let mut out = vec![Element::ZERO; k];
        for (i, &a) in self.coeffs.iter().enumerate().take(k) {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(k - i) {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    pub fn truncate(&self, k: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().take(k).copied().collect())
    }

    /// Formal derivative; the factor `i` is reduced modulo the characteristic.
    pub fn derivative(&self, field: &Field) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| field.mul(field.scalar(i as i64), c))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Element, field: &Field) -> Element {
        self.coeffs.iter().rev().fold(Element::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &UniPoly, field: &Field) -> Option<(UniPoly, UniPoly)> {
        let dd = divisor.degree()?;
        let lead_inv = field.inv(divisor.coeffs[dd]).ok()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Element::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let f = field.mul(rem[top], lead_inv);
            if f.is_zero() {
                continue;
            }
            quot[top - dd] = f;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = field.sub(rem[idx], field.mul(f, c));
            }
        }
        Some((UniPoly::new(quot), UniPoly::new(rem)))
    }
}

/// Sparse polynomial in `arity` variables, terms ascending by exponent
/// vector, no zero coefficients, exponents in `0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMultiPoly {
    arity: usize,
    units: u32,
    terms: Vec<(Vec<u32>, Element)>,
}

impl SparseMultiPoly {
    pub fn zero(arity: usize, units: u32) -> SparseMultiPoly {
        SparseMultiPoly { arity, units, terms: Vec::new() }
    }

    /// Canonicalizes an arbitrary term list: exponents normalized, equal
    /// exponent vectors summed, zero coefficients dropped.
    pub fn from_terms(
        arity: usize,
        field: &Field,
        terms: impl IntoIterator<Item = (Vec<u64>, Element)>,
    ) -> Result<SparseMultiPoly> {
        let units = field.units();
        let mut map: HashMap<Vec<u32>, Element> = HashMap::new();
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: exps.len() });
            }
            let key: Vec<u32> = exps.iter().map(|&k| normalize_exponent(k, units)).collect();
            let slot = map.entry(key).or_insert(Element::ZERO);
            *slot = field.add(*slot, c);
        }
        Ok(Self::from_map(arity, units, map))
    }

    fn from_map(arity: usize, units: u32, map: HashMap<Vec<u32>, Element>) -> SparseMultiPoly {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        SparseMultiPoly { arity, units, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn units(&self) -> u32 {
        self.units
    }

    pub fn terms(&self) -> &[(Vec<u32>, Element)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Element {
        match self.terms.binary_search_by(|(e, _)| e.as_slice().cmp(exps)) {
            Ok(i) => self.terms[i].1,
            Err(_) => Element::ZERO,
        }
    }

    /// Adds `coeff · x^exps` in place; `exps` must already be normalized.
    pub fn accumulate(&mut self, exps: &[u32], coeff: Element, field: &Field) {
        debug_assert_eq!(exps.len(), self.arity);
        match self.terms.binary_search_by(|(e, _)| e.as_slice().cmp(exps)) {
            Ok(i) => {
                let c = field.add(self.terms[i].1, coeff);
                if c.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = c;
                }
            }
            Err(i) => {
                if !coeff.is_zero() {
                    self.terms.insert(i, (exps.to_vec(), coeff));
                }
            }
        }
    }

    /// Term-wise sum.
    pub fn add(&self, other: &SparseMultiPoly, field: &Field) -> SparseMultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e, *c, field);
        }
        out
    }

    /// Term-by-term evaluation with `x^0 = 1` everywhere.
    pub fn eval(&self, point: &[Element], field: &Field) -> Result<Element> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: point.len() });
        }
        Ok(self.eval_unchecked(point, field))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Element], field: &Field) -> Element {
        let logs: Vec<Option<u32>> = point.iter().map(|&x| field.log(x)).collect();
        let units = field.units() as u64;
        let mut acc = Element::ZERO;
        'terms: for (exps, c) in &self.terms {
            let mut l = field.log(*c).expect("nonzero coefficient") as u64;
            for (&k, lg) in exps.iter().zip(&logs) {
                if k == 0 {
                    continue;
                }
                match lg {
                    Some(lg) => l += *lg as u64 * k as u64,
                    None => continue 'terms,
                }
            }
            acc = field.add(acc, field.alpha_pow((l % units) as i64));
        }
        acc
    }

    /// Serializes in the term-table format: one term per line, uppercase
    /// hex exponents separated by commas, `*<coeff>` when the coefficient
    /// is not one.
    pub fn to_term_table(&self) -> String {
        let mut out = String::new();
        for (exps, c) in &self.terms {
            out.push_str(&format_exponents(exps));
            if *c != Element::ONE {
                let _ = write!(out, "*{c:x}");
            }
            out.push('\n');
        }
        out
    }
}

fn format_exponents(exps: &[u32]) -> String {
    exps.iter().map(|k| format!("{k:X}")).collect::<Vec<_>>().join(",")
}

/// One parsed row of a term table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRow {
    pub line: usize,
    pub exponents: Vec<u32>,
    pub coeff: Element,
}

/// Parses a term table. Tokens are separated by whitespace or `&`; `#`
/// starts a comment. Each token is a comma-separated hex exponent tuple with
/// an optional `*<coeff-hex>` suffix.
pub fn parse_term_table(text: &str, arity: Option<usize>) -> Result<Vec<TermRow>> {
    let mut rows = Vec::new();
    let mut width = arity;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        for token in body.split(|c: char| c.is_whitespace() || c == '&').filter(|t| !t.is_empty()) {
            let (exp_part, coeff) = match token.split_once('*') {
                Some((e, c)) => {
                    let c = Element::from_hex(c)
                        .ok_or_else(|| Error::parse(line, format!("bad coefficient in {token:?}")))?;
                    (e, c)
                }
                None => (token, Element::ONE),
            };
            let exponents = exp_part
                .split(',')
                .map(|h| u32::from_str_radix(h.trim(), 16))
                .collect::<std::result::Result<Vec<u32>, _>>()
                .map_err(|_| Error::parse(line, format!("malformed hex tuple {token:?}")))?;
            match width {
                Some(w) if w != exponents.len() => {
                    return Err(Error::parse(
                        line,
                        format!("tuple {token:?} has {} entries, expected {w}", exponents.len()),
                    ))
                }
                None => width = Some(exponents.len()),
                _ => {}
            }
            rows.push(TermRow { line, exponents, coeff });
        }
    }
    Ok(rows)
}

/// Builds a polynomial from parsed rows; exponents above `N` are rejected
/// rather than folded.
pub fn poly_from_rows(rows: &[TermRow], arity: usize, field: &Field) -> Result<SparseMultiPoly> {
    for r in rows {
        if r.exponents.iter().any(|&k| k > field.units()) {
            return Err(Error::parse(r.line, format!("exponent exceeds {}", field.units())));
        }
        if !field.contains(r.coeff) {
            return Err(Error::parse(r.line, "coefficient outside the field"));
        }
    }
    SparseMultiPoly::from_terms(
        arity,
        field,
        rows.iter().map(|r| (r.exponents.iter().map(|&k| k as u64).collect(), r.coeff)),
    )
}

/// Coefficient accumulator used by the interpolation builders. Dense when
/// the exponent box is small, hashed otherwise. Partial builds merge by
/// term-wise addition.
#[derive(Clone, Debug)]
pub struct TermAccumulator {
    arity: usize,
    units: u32,
    storage: Storage,
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(Vec<Element>),
    Sparse(HashMap<Vec<u32>, Element>),
}

const DENSE_LIMIT: u64 = 1 << 22;

impl TermAccumulator {
    pub fn new(arity: usize, units: u32) -> TermAccumulator {
        let side = units as u64 + 1;
        let cells = (0..arity).try_fold(1u64, |acc, _| acc.checked_mul(side));
        let storage = match cells {
            Some(c) if c <= DENSE_LIMIT => Storage::Dense(vec![Element::ZERO; c as usize]),
            _ => Storage::Sparse(HashMap::new()),
        };
        TermAccumulator { arity, units, storage }
    }

    #[inline]
    pub fn add(&mut self, exps: &[u32], c: Element, field: &Field) {
        if c.is_zero() {
            return;
        }
        match &mut self.storage {
            Storage::Dense(cells) => {
                let side = self.units as usize + 1;
                let i = exps.iter().fold(0usize, |acc, &k| acc * side + k as usize);
                cells[i] = field.add(cells[i], c);
            }
            Storage::Sparse(map) => {
                let slot = map.entry(exps.to_vec()).or_insert(Element::ZERO);
                *slot = field.add(*slot, c);
            }
        }
    }

    pub fn merge(mut self, other: TermAccumulator, field: &Field) -> TermAccumulator {
        match (&mut self.storage, other.storage) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = field.add(*x, y);
                }
            }
            (Storage::Sparse(a), Storage::Sparse(b)) => {
                for (k, v) in b {
                    let slot = a.entry(k).or_insert(Element::ZERO);
                    *slot = field.add(*slot, v);
                }
            }
            _ => unreachable!("accumulators of different shapes"),
        }
        self
    }

    pub fn finish(self) -> SparseMultiPoly {
        let (arity, units) = (self.arity, self.units);
        match self.storage {
            Storage::Dense(cells) => {
                let side = units as usize + 1;
                let mut terms = Vec::new();
                for (mut i, c) in cells.into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut exps = vec![0u32; arity];
                    for slot in exps.iter_mut().rev() {
                        *slot = (i % side) as u32;
                        i /= side;
                    }
                    terms.push((exps, c));
                }
                // Row-major index order is already lexicographic.
                SparseMultiPoly { arity, units, terms }
            }
            Storage::Sparse(map) => SparseMultiPoly::from_map(arity, units, map),
        }
    }

}
