//! Arithmetic in the extension field `GF(p^e)`.
//!
//! Elements are stored by their polynomial-basis code: the radix-`p` digits of
//! the code, least significant first, are the coordinates with respect to
//! `1, α, α^2, …, α^{e-1}` where `α` is a root of the primitive modulus. For
//! `p = 2` and modulus `1 + x^2 + x^5`, `α^5 = 1 + α^2` has code `0b00101`.
//!
//! Subfields `GF(q)` are not given their own tables; membership is the
//! predicate `x^q = x` evaluated in the big field.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Largest supported table size.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of `GF(p^e)` in canonical polynomial-basis encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Parses the lowercase (or uppercase) hex serialization.
    pub fn from_hex(s: &str) -> Option<Element> {
        let s = s.trim();
        let s = s.strip_prefix("0x").unwrap_or(s);
        if s.is_empty() {
            return None;
        }
        u32::from_str_radix(s, 16).ok().map(Element)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// A subfield `GF(q)` of the ambient field, `q = p^k` with `k | e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subfield {
    pub q: u32,
    pub k: u32,
}

/// The field `GF(p^e)` with log/antilog tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    e: u32,
    /// Monic modulus, `e + 1` coefficients, constant term first.
    modulus: Vec<u32>,
    order: u32,
    /// `order - 1`, the multiplicative group order.
    units: u32,
    /// Discrete log of each nonzero code; entry 0 is unused.
    log: Vec<u32>,
    /// `α^i` for `i in 0..2*units`, doubled so products need no reduction.
    exp: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(GF({}^{}), modulus {:#x})", self.p, self.e, self.modulus_code())
    }
}

impl Field {
    /// Builds `GF(p^e)` from the coefficient list of a primitive polynomial
    /// (constant term first, `e + 1` entries).
    pub fn new(p: u32, e: u32, modulus: &[u32]) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(e).filter(|&o| o <= MAX_FIELD_ORDER).ok_or_else(|| {
            Error::InvalidField(format!("GF({p}^{e}) exceeds {MAX_FIELD_ORDER} elements"))
        })? as u32;
        let mut coeffs: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() != e as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus has degree {}, expected {e}",
                coeffs.len().saturating_sub(1)
            )));
        }
        if coeffs[0] == 0 {
            return Err(Error::InvalidField("modulus has zero constant term".into()));
        }
        // Make monic.
        let lead_inv = inv_mod(coeffs[e as usize], p);
        for c in coeffs.iter_mut() {
            *c = (*c as u64 * lead_inv as u64 % p as u64) as u32;
        }
        if !gfp::is_irreducible(&coeffs, p) {
            return Err(Error::ReduciblePolynomial { p });
        }

        let units = order - 1;
        let mut log = vec![u32::MAX; order as usize];
        let mut exp = vec![0u32; 2 * units as usize];
        let mut digits = vec![0u32; e as usize];
        digits[0] = 1;
        for i in 0..units {
            let code = digits_to_code(&digits, p);
            if i > 0 && code == 1 {
                return Err(Error::NonPrimitivePolynomial { order: i, expected: units });
            }
            exp[i as usize] = code;
            log[code as usize] = i;
            // multiply by α
            let top = digits[e as usize - 1];
            for j in (1..e as usize).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for (j, d) in digits.iter_mut().enumerate() {
                    let sub = (top as u64 * coeffs[j] as u64 % p as u64) as u32;
                    *d = (*d + p - sub) % p;
                }
            }
        }
        if digits_to_code(&digits, p) != 1 {
            // Unreachable for an irreducible modulus; kept as a table sanity check.
            return Err(Error::ReduciblePolynomial { p });
        }
        for i in 0..units as usize {
            exp[units as usize + i] = exp[i];
        }
        Ok(Field { p, e, modulus: coeffs, order, units, log, exp })
    }

    /// Builds the field from the radix-`p` encoding of the modulus
    /// (`0x25` is `1 + x^2 + x^5` for `p = 2`).
    pub fn from_modulus_code(p: u32, e: u32, code: u64) -> Result<Field> {
        if p < 2 {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        let mut coeffs = Vec::new();
        let mut c = code;
        while c > 0 {
            coeffs.push((c % p as u64) as u32);
            c /= p as u64;
        }
        Field::new(p, e, &coeffs)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Number of elements, `p^e`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the multiplicative group, `N = p^e - 1`.
    pub fn units(&self) -> u32 {
        self.units
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Radix-`p` encoding of the modulus including its leading term.
    pub fn modulus_code(&self) -> u64 {
        self.modulus.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// `(p, e, modulus-hex)` triple, e.g. `2,5,0x25`.
    pub fn descriptor(&self) -> String {
        format!("{},{},{:#x}", self.p, self.e, self.modulus_code())
    }

    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn antilog_table(&self) -> &[u32] {
        &self.exp[..self.units as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    #[inline]
    pub fn alpha(&self) -> Element {
        self.exp_elem(1)
    }

    /// `α^k` for any integer `k`.
    #[inline]
    pub fn alpha_pow(&self, k: i64) -> Element {
        Element(self.exp[k.rem_euclid(self.units as i64) as usize])
    }

    #[inline]
    fn exp_elem(&self, k: u32) -> Element {
        Element(self.exp[(k % self.units) as usize])
    }

    /// Discrete logarithm base `α`; `None` for zero.
    #[inline]
    pub fn log(&self, a: Element) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn contains(&self, a: Element) -> bool {
        a.0 < self.order
    }

    /// The image of the integer `m` in the prime field.
    pub fn scalar(&self, m: i64) -> Element {
        Element(m.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.p == 2 {
            return Element(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Element(out)
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            let d = (p - x % p) % p;
            out += d * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Element(out)
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        Element(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.exp_elem(self.units - self.log[a.0 as usize]))
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` with `0^0 = 1`, `0^k = 0` for `k > 0`.
    ///
    /// # Panics
    /// On a negative exponent with zero base; use [`Field::checked_pow`] to
    /// get an error instead.
    #[inline]
    pub fn pow(&self, a: Element, k: i64) -> Element {
        self.checked_pow(a, k).expect("negative power of zero")
    }

    pub fn checked_pow(&self, a: Element, k: i64) -> Result<Element> {
        if k == 0 {
            return Ok(Element::ONE);
        }
        if a.0 == 0 {
            return if k > 0 { Ok(Element::ZERO) } else { Err(Error::DivisionByZero) };
        }
        let l = self.log[a.0 as usize] as i64;
        Ok(self.alpha_pow(l * (k.rem_euclid(self.units as i64))))
    }

    /// Validates that `q` is the order of a subfield.
    pub fn subfield(&self, q: u32) -> Result<Subfield> {
        let mut k = 0;
        let mut acc = 1u64;
        while acc < q as u64 {
            acc *= self.p as u64;
            k += 1;
        }
        if acc != q as u64 || k == 0 || !self.e.is_multiple_of(k) {
            return Err(Error::InvalidSubfield { q, p: self.p, e: self.e });
        }
        Ok(Subfield { q, k })
    }

    /// The Frobenius step `a ↦ a^q`.
    #[inline]
    pub fn frobenius(&self, a: Element, q: u32) -> Element {
        self.pow(a, q as i64)
    }

    /// `a^q = a`.
    #[inline]
    pub fn in_subfield(&self, a: Element, q: u32) -> bool {
        self.frobenius(a, q) == a
    }

    /// Nonzero elements of `GF(q)`, ascending by code.
    pub fn subfield_units(&self, q: u32) -> Vec<Element> {
        self.elements().filter(|&a| !a.is_zero() && self.in_subfield(a, q)).collect()
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Element) -> Option<u32> {
        let l = self.log(a)?;
        Some(self.units / gcd(self.units as u64, l as u64) as u32)
    }
}

/// Orbit of `i` under multiplication by `q` modulo `n`, sorted ascending.
pub fn cyclotomic_coset(i: u32, n: u32, q: u32) -> Vec<u32> {
    let n64 = n as u64;
    let start = i as u64 % n64;
    let mut out = vec![start as u32];
    let mut x = start * q as u64 % n64;
    while x != start {
        out.push(x as u32);
        x = x * q as u64 % n64;
    }
    out.sort_unstable();
    out
}

/// Minimal polynomial over `GF(q)` of `β^i` where `β = α^{beta_exp}` has
/// order `n`: the product of `(x - β^j)` over the coset of `i`.
pub fn minimal_polynomial(field: &Field, beta_exp: u32, i: u32, n: u32, q: u32) -> Result<UniPoly> {
    let mut poly = UniPoly::one();
    for j in cyclotomic_coset(i, n, q) {
        let root = field.alpha_pow(beta_exp as i64 * j as i64);
        poly = poly.mul(&UniPoly::new(vec![field.neg(root), Element::ONE]), field);
    }
    if let Some(&c) = poly.coeffs().iter().find(|&&c| !field.in_subfield(c, q)) {
        return Err(Error::CoefficientOutsideSubfield { coeff: c.0, q });
    }
    Ok(poly)
}

/// `Σ_{w<d} γ^{q^w}`, the trace from `GF(q^d)` down to `GF(q)`.
pub fn conjugacy_trace_sum(field: &Field, gamma: Element, q: u32, d: u32) -> Result<Element> {
    let mut acc = Element::ZERO;
    let mut g = gamma;
    for _ in 0..d {
        acc = field.add(acc, g);
        g = field.frobenius(g, q);
    }
    if g != gamma {
        return Err(Error::NotFixedByFrobeniusPower { d });
    }
    Ok(acc)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative order of `q` modulo `n` (`n > 1`, `gcd(n, q) = 1`).
pub fn multiplicative_order(q: u32, n: u32) -> u32 {
    if n <= 1 {
        return 1;
    }
    let mut x = q as u64 % n as u64;
    let mut k = 1;
    while x != 1 {
        x = x * q as u64 % n as u64;
        k += 1;
        if k > n {
            return 0;
        }
    }
    k
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p prime: a^(p-2)
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn digits_to_code(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

/// Dense polynomial arithmetic over the prime field, just enough for the
/// irreducibility test.
mod gfp {
    use super::inv_mod;

    fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let top = r.len() - 1;
            let f = r[top] as u64 * lead_inv % p as u64;
            let shift = top - dm;
            for (j, &c) in m.iter().enumerate() {
                let sub = (f * c as u64 % p as u64) as u32;
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        rem(&out, m, p)
    }

    fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }

    fn gcd_degree(a: &[u32], b: &[u32], p: u32) -> usize {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x.len().saturating_sub(1)
    }

    /// Ben-Or: `f` is irreducible iff `gcd(f, x^{p^k} - x) = 1` for all
    /// `k <= deg f / 2`.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        let x = vec![0u32, 1];
        let mut h = rem(&x, f, p);
        for _ in 1..=deg / 2 {
            h = powmod(&h, p as u64, f, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(&mut diff);
            if diff.is_empty() || gcd_degree(f, &diff, p) > 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf32() -> Field {
        Field::from_modulus_code(2, 5, 0x25).unwrap()
    }

    fn gf16() -> Field {
        Field::from_modulus_code(2, 4, 0x13).unwrap()
    }

    #[test]
    fn builds_gf32_and_gf16() {
        let f = gf32();
        assert_eq!(f.units(), 31);
        assert_eq!(f.element_order(f.alpha()), Some(31));
        assert_eq!(f.descriptor(), "2,5,0x25");
        let g = gf16();
        assert_eq!(g.units(), 15);
        assert_eq!(g.element_order(g.alpha()), Some(15));
    }

    #[test]
    fn non_primitive_modulus_rejected() {
        // 1 + x + x^2 + x^3 + x^4 is irreducible but x has order 5
        let err = Field::new(2, 4, &[1, 1, 1, 1, 1]).unwrap_err();
        assert_eq!(err, Error::NonPrimitivePolynomial { order: 5, expected: 15 });
    }

    #[test]
    fn reducible_modulus_rejected() {
        // (1 + x + x^2)^2 = 1 + x^2 + x^4
        assert_eq!(Field::new(2, 4, &[1, 0, 1, 0, 1]).unwrap_err(), Error::ReduciblePolynomial { p: 2 });
        // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert_eq!(Field::new(2, 3, &[1, 0, 0, 1]).unwrap_err(), Error::ReduciblePolynomial { p: 2 });
        assert!(matches!(Field::new(2, 3, &[0, 1, 0, 1]), Err(Error::InvalidField(_))));
        assert!(matches!(Field::new(4, 2, &[1, 1, 1]), Err(Error::InvalidField(_))));
    }

    #[test]
    fn table_roundtrip_and_encoding() {
        let f = gf32();
        for x in 1..f.order() {
            assert_eq!(f.antilog_table()[f.log_table()[x as usize] as usize], x);
        }
        assert_eq!(f.alpha_pow(5), Element(5));
        assert_eq!(f.mul(f.alpha_pow(16), f.alpha_pow(20)), f.alpha_pow(5));
        let g = gf16();
        assert_eq!(g.add(g.alpha_pow(8), g.alpha_pow(4)), g.alpha_pow(5));
    }

    #[test]
    fn ternary_field() {
        // x^3 + 2x + 1 over GF(3)
        let f = Field::new(3, 3, &[1, 2, 0, 1]).unwrap();
        assert_eq!(f.units(), 26);
        assert_eq!(f.modulus_code(), 1 + 2 * 3 + 27);
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Element::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
            }
        }
        // three times anything is zero
        for a in f.elements() {
            assert_eq!(f.add(f.add(a, a), a), Element::ZERO);
        }
    }

    #[test]
    fn pow_conventions() {
        let f = gf32();
        assert_eq!(f.pow(Element::ZERO, 0), Element::ONE);
        assert_eq!(f.pow(Element::ZERO, 7), Element::ZERO);
        assert_eq!(f.checked_pow(Element::ZERO, -1), Err(Error::DivisionByZero));
        assert_eq!(f.inv(Element::ZERO), Err(Error::DivisionByZero));
        let a = f.alpha_pow(7);
        assert_eq!(f.pow(a, -1), f.inv(a).unwrap());
        assert_eq!(f.pow(a, 31), Element::ONE);
        assert_eq!(f.pow(a, 32), a);
    }

    #[test]
    fn frobenius_examples() {
        let f = gf32();
        assert_eq!(f.frobenius(f.alpha_pow(3), 2), f.alpha_pow(6));
        assert_eq!(f.frobenius(Element::ZERO, 2), Element::ZERO);
        assert_eq!(f.frobenius(Element::ONE, 2), Element::ONE);
        let g = gf16();
        for a in g.elements() {
            assert_eq!(g.frobenius(a, 16), a);
        }
        assert!(f.subfield(4).is_err());
        assert_eq!(g.subfield(4).unwrap(), Subfield { q: 4, k: 2 });
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_coset(1, 31, 2), vec![1, 2, 4, 8, 16]);
        assert_eq!(cyclotomic_coset(0, 31, 2), vec![0]);
        assert_eq!(cyclotomic_coset(1, 15, 16), vec![1]);
        assert_eq!(cyclotomic_coset(3, 31, 2), vec![3, 6, 12, 17, 24]);
    }

    #[test]
    fn minimal_polynomials() {
        let f = gf32();
        let mut g = UniPoly::one();
        for r in [1, 5, 7] {
            g = g.mul(&minimal_polynomial(&f, 1, r, 31, 2).unwrap(), &f);
        }
        let mut expect = [Element::ZERO; 16];
        for i in [0, 3, 8, 9, 13, 14, 15] {
            expect[i] = Element::ONE;
        }
        assert_eq!(g.coeffs(), &expect[..]);

        let m0 = minimal_polynomial(&f, 1, 0, 31, 2).unwrap();
        assert_eq!(m0.coeffs(), &[Element::ONE, Element::ONE]);

        let h = gf16();
        let m1 = minimal_polynomial(&h, 1, 1, 15, 16).unwrap();
        assert_eq!(m1.coeffs(), &[h.alpha(), Element::ONE]);
        // with q = 2 the coset of 1 in n = 15 has four members
        assert_eq!(minimal_polynomial(&h, 1, 1, 15, 2).unwrap().degree(), Some(4));
    }

    #[test]
    fn trace_sums() {
        let f = gf32();
        assert_eq!(conjugacy_trace_sum(&f, Element::ZERO, 2, 3).unwrap(), Element::ZERO);
        assert_eq!(conjugacy_trace_sum(&f, Element::ONE, 2, 3).unwrap(), Element::ONE);
        let t = conjugacy_trace_sum(&f, f.alpha(), 2, 5).unwrap();
        assert!(f.in_subfield(t, 2));
        // direct sum
        let direct = [1, 2, 4, 8, 16].iter().fold(Element::ZERO, |acc, &k| f.add(acc, f.alpha_pow(k)));
        assert_eq!(t, direct);
        assert_eq!(conjugacy_trace_sum(&f, f.alpha(), 2, 2), Err(Error::NotFixedByFrobeniusPower { d: 2 }));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in [gf16(), Field::from_modulus_code(2, 3, 0xb).unwrap()] {
            let n = f.units() as i64;
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
                    assert_eq!(f.pow(a, n), Element::ONE);
                    assert_eq!(f.pow(a, n + 1), a);
                }
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b), 2), f.add(f.frobenius(a, 2), f.frobenius(b, 2)));
                    assert_eq!(f.frobenius(f.mul(a, b), 2), f.mul(f.frobenius(a, 2), f.frobenius(b, 2)));
                }
            }
        }
    }

    #[test]
    fn subfield_membership_matches_order() {
        let f = Field::from_modulus_code(2, 8, 0x11d).unwrap();
        for q in [2u32, 4, 16, 256] {
            let members = f.elements().filter(|&a| f.in_subfield(a, q)).count();
            assert_eq!(members as u32, q);
            for a in f.elements().skip(1) {
                let ord = f.element_order(a).unwrap();
                assert_eq!(f.in_subfield(a, q), (q - 1) % ord == 0);
            }
        }
    }

    #[test]
    fn beta_powers_avoid_base_field_when_coprime() {
        let f = gf32();
        for i in 1..31 {
            assert!(!f.in_subfield(f.alpha_pow(i), 2));
        }
    }
}
