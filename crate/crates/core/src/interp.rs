//! The finite-field Kronecker delta and the multivariate interpolation
//! builders.
//!
//! `δ_a(x)` is `1 - x^N` for `a = 0` and `-Σ_{k=1}^{N} (x/a)^k` otherwise; it
//! is one at `a` and zero elsewhere on the field. Summing `y_i ∏_j δ_{x_ij}(x_j)`
//! over pairwise distinct points interpolates any data exactly.
//!
//! Two builders produce that polynomial:
//! - [`mvif_naive`] expands every point's delta product. It is the oracle.
//! - [`mvif_orbit`] works on cyclic-shift orbits of correctable error
//!   patterns. When the coordinate and target maps are homogeneous under the
//!   shift `θ ↦ β^w θ`, an orbit contributes to `x_1^{k_1} ⋯ x_s^{k_s}` only if
//!   `r_1 k_1 + ⋯ + r_s k_s ≡ r (mod n)`, and then contributes the
//!   representative's term times the orbit size. Coordinates that vanish on
//!   the orbit factor out as `1 - x_i^N`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::code::{CyclicCode, ErrorPattern};
use crate::error::{Error, Result};
use crate::field::{conjugacy_trace_sum, Element, Field};
use crate::poly::{SparseMultiPoly, TermAccumulator, UniPoly};

/// `δ_a(x)` as a dense polynomial of degree `N`.
pub fn delta_poly(field: &Field, a: Element) -> UniPoly {
    let n = field.units() as usize;
    let mut coeffs = vec![Element::ZERO; n + 1];
    if a.is_zero() {
        coeffs[0] = Element::ONE;
        coeffs[n] = field.neg(Element::ONE);
    } else {
        for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = field.neg(field.pow(a, -(k as i64)));
        }
    }
    UniPoly::new(coeffs)
}

/// Nonzero terms of `δ_a` as `(exponent, coefficient)` pairs.
fn delta_terms(field: &Field, a: Element) -> Vec<(u32, Element)> {
    let n = field.units();
    let minus_one = field.neg(Element::ONE);
    match field.log(a) {
        None => vec![(0, Element::ONE), (n, minus_one)],
        Some(la) => (1..=n)
            .map(|k| (k, field.mul(minus_one, field.alpha_pow(-(la as i64) * k as i64))))
            .collect(),
    }
}

/// Pairwise distinct points with one value each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationProblem {
    arity: usize,
    points: Vec<Vec<Element>>,
    values: Vec<Element>,
}

impl InterpolationProblem {
    pub fn new(arity: usize, points: Vec<Vec<Element>>, values: Vec<Element>) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::ArityMismatch { expected: points.len(), got: values.len() });
        }
        if let Some(p) = points.iter().find(|p| p.len() != arity) {
            return Err(Error::ArityMismatch { expected: arity, got: p.len() });
        }
        let mut seen = std::collections::HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert(p.as_slice(), i) {
                return Err(Error::DuplicatePoints { first: j, second: i });
            }
        }
        Ok(InterpolationProblem { arity, points, values })
    }

    /// Points are base-set syndrome tuples of every correctable pattern;
    /// values come from `target`.
    pub fn from_code(code: &CyclicCode, target: impl Fn(&ErrorPattern) -> Element) -> Result<Self> {
        let patterns = code.correctable_patterns_vec()?;
        let points = patterns.iter().map(|p| code.syndrome_tuple(p).0).collect();
        let values = patterns.iter().map(target).collect();
        InterpolationProblem::new(code.base_set().len(), points, values)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[Vec<Element>] {
        &self.points
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }
}

/// Size limits for [`mvif_naive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveBudget {
    pub max_points: usize,
    pub max_arity: usize,
}

impl Default for NaiveBudget {
    fn default() -> Self {
        NaiveBudget { max_points: 10_000, max_arity: 4 }
    }
}

/// Direct expansion of `Σ_i y_i ∏_j δ_{x_ij}(x_j)`.
pub fn mvif_naive(problem: &InterpolationProblem, field: &Field, budget: NaiveBudget) -> Result<SparseMultiPoly> {
    if problem.points.len() > budget.max_points {
        return Err(Error::BudgetExceeded {
            what: "naive interpolation points",
            count: problem.points.len() as u128,
            limit: budget.max_points as u128,
        });
    }
    if problem.arity > budget.max_arity {
        return Err(Error::BudgetExceeded {
            what: "naive interpolation arity",
            count: problem.arity as u128,
            limit: budget.max_arity as u128,
        });
    }
    let arity = problem.arity;
    let units = field.units();
    let acc = problem
        .points
        .par_iter()
        .zip(problem.values.par_iter())
        .fold(
            || TermAccumulator::new(arity, units),
            |mut acc, (point, &y)| {
                if y.is_zero() {
                    return acc;
                }
                let factors: Vec<Vec<(u32, Element)>> = point.iter().map(|&a| delta_terms(field, a)).collect();
                let mut exps = vec![0u32; arity];
                expand_product(&factors, 0, y, &mut exps, &mut acc, field);
                acc
            },
        )
        .reduce(|| TermAccumulator::new(arity, units), |a, b| a.merge(b, field));
    Ok(acc.finish())
}

fn expand_product(
    factors: &[Vec<(u32, Element)>],
    var: usize,
    coeff: Element,
    exps: &mut [u32],
    acc: &mut TermAccumulator,
    field: &Field,
) {
    if var == factors.len() {
        acc.add(exps, coeff, field);
        return;
    }
    for &(k, c) in &factors[var] {
        exps[var] = k;
        expand_product(factors, var + 1, field.mul(coeff, c), exps, acc, field);
    }
}

/// Which equivalence relation an [`OrbitStructure`] records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// `θ ~ β^w θ`: cyclic shifts of the error pattern.
    Shift,
    /// `θ ≈ θ^{q^w}`: positions multiplied by powers of `q`.
    Frobenius,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: ErrorPattern,
    pub size: usize,
    /// Smallest `d >= 1` with `θ^{q^d} = θ` for the representative.
    pub degree: u32,
}

/// A partition of the correctable patterns into orbits.
#[derive(Clone, Debug)]
pub struct OrbitStructure {
    pub kind: OrbitKind,
    pub orbits: Vec<Orbit>,
}

impl OrbitStructure {
    pub fn new(code: &CyclicCode, kind: OrbitKind) -> Result<OrbitStructure> {
        let patterns = code.correctable_patterns_vec()?;
        let (n, q) = (code.n(), code.q());
        let step = |p: &ErrorPattern| match kind {
            OrbitKind::Shift => p.shift(1, n),
            OrbitKind::Frobenius => p.frobenius(q, n),
        };
        let mut visited: HashSet<ErrorPattern> = HashSet::with_capacity(patterns.len());
        let mut orbits = Vec::new();
        for p in patterns {
            if visited.contains(&p) {
                continue;
            }
            let mut size = 1;
            let mut cur = step(&p);
            while cur != p {
                visited.insert(cur.clone());
                cur = step(&cur);
                size += 1;
            }
            let degree = frobenius_degree(&p, q, n);
            visited.insert(p.clone());
            orbits.push(Orbit { representative: p, size, degree });
        }
        Ok(OrbitStructure { kind, orbits })
    }

    pub fn total(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Every member of an orbit, representative first.
    pub fn members(&self, orbit: &Orbit, code: &CyclicCode) -> Vec<ErrorPattern> {
        let mut out = vec![orbit.representative.clone()];
        for _ in 1..orbit.size {
            let last = out.last().expect("nonempty");
            out.push(match self.kind {
                OrbitKind::Shift => last.shift(1, code.n()),
                OrbitKind::Frobenius => last.frobenius(code.q(), code.n()),
            });
        }
        out
    }
}

/// Smallest `d >= 1` with `θ^{q^d} = θ`.
pub fn frobenius_degree(p: &ErrorPattern, q: u32, n: u32) -> u32 {
    let mut cur = p.frobenius(q, n);
    let mut d = 1;
    while &cur != p {
        cur = cur.frobenius(q, n);
        d += 1;
    }
    d
}

/// `Σ r_i k_i mod n`.
pub fn term_residue(exps: &[u32], degrees: &[u32], n: u32) -> u32 {
    (exps.iter().zip(degrees).map(|(&k, &r)| k as u64 * r as u64).sum::<u64>() % n as u64) as u32
}

/// Terms split by whether `r_1 k_1 + ⋯ + r_s k_s ≡ r (mod n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CongruenceSplit {
    pub kept: Vec<(Vec<u32>, Element)>,
    pub violating: Vec<(Vec<u32>, Element)>,
}

pub fn congruence_filter(poly: &SparseMultiPoly, degrees: &[u32], r: u32, n: u32) -> CongruenceSplit {
    let (kept, violating) =
        poly.terms().iter().cloned().partition(|(e, _)| term_residue(e, degrees, n) == r % n);
    CongruenceSplit { kept, violating }
}

/// Shift-orbit builder. `coords` are the maps `h_1, …, h_s` with
/// homogeneous degrees `coord_degrees`; `target` has degree `target_degree`.
/// Produces the same polynomial as [`mvif_naive`] on the syndrome points.
pub fn mvif_orbit<C, T>(
    code: &CyclicCode,
    coords: C,
    coord_degrees: &[u32],
    target: T,
    target_degree: u32,
) -> Result<SparseMultiPoly>
where
    C: Fn(&ErrorPattern) -> Vec<Element> + Sync,
    T: Fn(&ErrorPattern) -> Element + Sync,
{
    let orbits = OrbitStructure::new(code, OrbitKind::Shift)?;
    check_hypotheses(code, &orbits, &coords, coord_degrees, &target, target_degree)?;

    let field = code.field();
    let (n, units) = (code.n(), field.units());
    let arity = coord_degrees.len();
    // residue_table[i][c] lists k in 1..=N with r_i k ≡ c (mod n)
    let residue_table: Vec<Vec<Vec<u32>>> = coord_degrees
        .iter()
        .map(|&r| {
            let mut t = vec![Vec::new(); n as usize];
            for k in 1..=units {
                t[(k as u64 * r as u64 % n as u64) as usize].push(k);
            }
            t
        })
        .collect();

    let acc = orbits
        .orbits
        .par_iter()
        .fold(
            || TermAccumulator::new(arity, units),
            |mut acc, orbit| {
                add_orbit(
                    &mut acc,
                    field,
                    orbit,
                    &coords(&orbit.representative),
                    target(&orbit.representative),
                    coord_degrees,
                    target_degree,
                    n,
                    &residue_table,
                );
                acc
            },
        )
        .reduce(|| TermAccumulator::new(arity, units), |a, b| a.merge(b, field));
    Ok(acc.finish())
}

#[allow(clippy::too_many_arguments)]
fn add_orbit(
    acc: &mut TermAccumulator,
    field: &Field,
    orbit: &Orbit,
    h: &[Element],
    f: Element,
    degrees: &[u32],
    target_degree: u32,
    n: u32,
    residue_table: &[Vec<Vec<u32>>],
) {
    let scalar = field.scalar(orbit.size as i64);
    if f.is_zero() || scalar.is_zero() {
        return;
    }
    let units = field.units();
    let u1: Vec<usize> = (0..h.len()).filter(|&i| !h[i].is_zero()).collect();
    let u0: Vec<usize> = (0..h.len()).filter(|&i| h[i].is_zero()).collect();
    let mut base = field.mul(scalar, f);
    if u1.len() % 2 == 1 {
        base = field.neg(base);
    }
    let logs: Vec<u64> = u1.iter().map(|&i| field.log(h[i]).expect("nonzero") as u64).collect();
    let minus_one = field.neg(Element::ONE);

    let mut exps = vec![0u32; h.len()];
    let mut emit = |exps: &mut [u32], coeff: Element| {
        for mask in 0u32..(1 << u0.len()) {
            let mut c = coeff;
            for (bit, &i) in u0.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    exps[i] = units;
                    c = field.mul(c, minus_one);
                } else {
                    exps[i] = 0;
                }
            }
            acc.add(exps, c, field);
        }
    };

    let n64 = n as u64;
    let want = target_degree as u64 % n64;
    if u1.is_empty() {
        if want == 0 {
            emit(&mut exps, base);
        }
        return;
    }
    // Odometer over all but the last U_1 coordinate; the last is read off the
    // residue table.
    let last = u1.len() - 1;
    let mut ks = vec![1u32; last];
    loop {
        let mut residue = 0u64;
        let mut log_sum = 0u64;
        for (j, &k) in ks.iter().enumerate() {
            residue += degrees[u1[j]] as u64 * k as u64;
            log_sum += logs[j] * k as u64;
            exps[u1[j]] = k;
        }
        let need = ((want + n64 * n64 - residue % n64) % n64) as usize;
        for &k in &residue_table[u1[last]][need] {
            exps[u1[last]] = k;
            let l = log_sum + logs[last] * k as u64;
            let coeff = field.mul(base, field.alpha_pow(-((l % units as u64) as i64)));
            emit(&mut exps, coeff);
        }
        // advance
        let mut j = 0;
        loop {
            if j == last {
                return;
            }
            ks[j] += 1;
            if ks[j] <= units {
                break;
            }
            ks[j] = 1;
            j += 1;
        }
    }
}

/// Spot-checks shift homogeneity and Frobenius symmetry on a spread of
/// representatives.
fn check_hypotheses<C, T>(
    code: &CyclicCode,
    orbits: &OrbitStructure,
    coords: &C,
    coord_degrees: &[u32],
    target: &T,
    target_degree: u32,
) -> Result<()>
where
    C: Fn(&ErrorPattern) -> Vec<Element>,
    T: Fn(&ErrorPattern) -> Element,
{
    let field = code.field();
    let (n, q) = (code.n(), code.q());
    let stride = (orbits.orbits.len() / 16).max(1);
    for orbit in orbits.orbits.iter().step_by(stride) {
        let theta = &orbit.representative;
        let h = coords(theta);
        if h.len() != coord_degrees.len() {
            return Err(Error::ArityMismatch { expected: coord_degrees.len(), got: h.len() });
        }
        let f = target(theta);
        for w in [1, n / 2, n - 1] {
            let shifted = theta.shift(w, n);
            let hs = coords(&shifted);
            for (i, (&a, &b)) in h.iter().zip(&hs).enumerate() {
                let expect = field.mul(code.beta_pow(w as i64 * coord_degrees[i] as i64), a);
                if b != expect {
                    return Err(Error::HypothesisViolated(format!(
                        "coordinate {i} is not homogeneous of degree {} at {theta}",
                        coord_degrees[i]
                    )));
                }
            }
            if target(&shifted) != field.mul(code.beta_pow(w as i64 * target_degree as i64), f) {
                return Err(Error::HypothesisViolated(format!(
                    "target is not homogeneous of degree {target_degree} at {theta}"
                )));
            }
        }
        let conj = theta.frobenius(q, n);
        if coords(&conj).iter().zip(&h).any(|(&b, &a)| b != field.frobenius(a, q))
            || target(&conj) != field.frobenius(f, q)
        {
            return Err(Error::HypothesisViolated(format!("maps are not symmetric at {theta}")));
        }
    }
    Ok(())
}

/// Frobenius-class sum of one expansion coefficient: returns
/// `Σ_{a ∈ [θ]} f(a) ∏_{i ∈ U_1} h_i(a)^{-k_i}` computed over the class
/// members, and the same quantity as the trace of the representative's
/// term. Both lie in `GF(q)` when the maps are symmetric.
pub fn frobenius_class_coefficient<C, T>(
    code: &CyclicCode,
    orbits: &OrbitStructure,
    orbit: &Orbit,
    coords: C,
    target: T,
    ks: &[u32],
) -> Result<(Element, Element)>
where
    C: Fn(&ErrorPattern) -> Vec<Element>,
    T: Fn(&ErrorPattern) -> Element,
{
    if orbits.kind != OrbitKind::Frobenius {
        return Err(Error::HypothesisViolated("expected Frobenius orbits".into()));
    }
    let field = code.field();
    let term = |p: &ErrorPattern| -> Element {
        let h = coords(p);
        h.iter().zip(ks).filter(|(a, _)| !a.is_zero()).fold(target(p), |acc, (&a, &k)| {
            field.mul(acc, field.pow(a, -(k as i64)))
        })
    };
    let direct = orbits
        .members(orbit, code)
        .iter()
        .fold(Element::ZERO, |acc, p| field.add(acc, term(p)));
    let gamma = term(&orbit.representative);
    let traced = conjugacy_trace_sum(field, gamma, code.q(), orbit.degree)?;
    Ok((direct, traced))
}
