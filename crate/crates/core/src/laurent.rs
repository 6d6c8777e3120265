//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Terms are kept in a `BTreeMap` keyed by the graded-lexicographic
//! [`Monomial`] order, so iteration, printing and hashing are deterministic
//! and the canonical form (no zero coefficients) is maintained by every
//! operation. Exact division factors the monomial content out of divisor and
//! dividend (Laurent monomials are units) and then runs ordinary
//! leading-term elimination, failing loudly on any non-exact step.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::monomial::Monomial;
use crate::ring::{Int, Ring, RingError};

/// A sparse Laurent polynomial in `nvars` variables with `Int` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Int>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Int::one())
    }

    pub fn constant(nvars: usize, c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(nvars), c);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// The variable `x_idx` (0-based).
    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, idx), Int::one());
        LaurentPolynomial { nvars, terms }
    }

    /// A single term `c * x^exponents`.
    pub fn monomial(nvars: usize, exponents: Vec<i64>, c: Int) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exponents), c);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// Canonicalize a raw term list: duplicates merged by addition, zero
    /// coefficients dropped. Rejects exponent vectors of the wrong length.
    pub fn from_raw_terms(
        nvars: usize,
        raw: impl IntoIterator<Item = (Vec<i64>, Int)>,
    ) -> Result<Self, RingError> {
        let mut terms: BTreeMap<Monomial, Int> = BTreeMap::new();
        for (exps, c) in raw {
            if exps.len() != nvars {
                return Err(RingError::BadExponentLength {
                    got: exps.len(),
                    expected: nvars,
                });
            }
            if c.is_zero() {
                continue;
            }
            let m = Monomial(exps);
            let merged = match terms.get(&m) {
                Some(existing) => existing + &c,
                None => c,
            };
            if merged.is_zero() {
                terms.remove(&m);
            } else {
                terms.insert(m, merged);
            }
        }
        Ok(LaurentPolynomial { nvars, terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_constant() && c.is_one())
                .unwrap_or(false)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter().rev()
    }

    /// Sum of absolute coefficient values. For a `{0, ±1}`-signed expansion
    /// this counts the contributing monomials before cancellation-free merges.
    pub fn coefficient_mass(&self) -> Int {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// The constant-term coefficient (zero if absent).
    pub fn constant_coefficient(&self) -> Int {
        self.terms
            .get(&Monomial::constant(self.nvars))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    fn leading(&self) -> Option<(&Monomial, &Int)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent over all terms (the monomial content
    /// exponent vector). `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.min_with(m)))
    }

    /// Minimum exponent of variable `idx` over all terms, `None` when zero.
    pub fn min_exponent(&self, idx: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.0[idx]).min()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars != other.nvars {
            Err(RingError::VariableMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable count mismatch")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(existing) => {
                    *existing += c;
                    if existing.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(LaurentPolynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable count mismatch")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let mut terms: BTreeMap<Monomial, Int> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match terms.get_mut(&m) {
                    Some(existing) => {
                        *existing += c;
                        if existing.is_zero() {
                            terms.remove(&m);
                        }
                    }
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        Ok(LaurentPolynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul_int(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiply all exponent vectors by a fixed monomial (a Laurent unit).
    pub fn mul_monomial(&self, shift: &Monomial) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division in the Laurent ring: the unique `q` with `q * b == a`.
    ///
    /// Strategy: factor the minimal monomial out of both operands, then divide
    /// the remaining ordinary polynomials by leading-term elimination under
    /// the graded-lex order. Any non-exact step reports `NotDivisible`.
    pub fn exact_div(&self, b: &Self) -> Result<Self, RingError> {
        self.check_compatible(b)?;
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let content_a = self.min_exponents().expect("nonzero");
        let content_b = b.min_exponents().expect("nonzero");
        let a1 = self.mul_monomial(&content_a.inverse());
        let b1 = b.mul_monomial(&content_b.inverse());

        let mut quotient: BTreeMap<Monomial, Int> = BTreeMap::new();
        let mut rem = a1;
        let (lm_b, lc_b) = {
            let (m, c) = b1.leading().expect("nonzero");
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (lm_r, lc_r) = {
                let (m, c) = rem.leading().expect("nonzero");
                (m.clone(), c.clone())
            };
            let m = lm_r.div(&lm_b);
            if !m.is_polynomial() {
                return Err(RingError::NotDivisible);
            }
            let (q, r) = lc_r.div_rem(&lc_b);
            if !r.is_zero() {
                return Err(RingError::NotDivisible);
            }
            let t = LaurentPolynomial::monomial(self.nvars, m.0.clone(), q.clone());
            rem = rem.sub(&t.mul(&b1));
            quotient.insert(m, q);
        }
        let q1 = LaurentPolynomial {
            nvars: self.nvars,
            terms: quotient,
        };
        Ok(q1.mul_monomial(&content_a.div(&content_b)))
    }

    /// Evaluate at `values` in a target ring with an exact-division probe.
    ///
    /// Negative exponents are cleared by multiplying through with the common
    /// denominator monomial and dividing once at the end, so the substitution
    /// succeeds whenever the result lives in the target ring. All values must
    /// be nonzero.
    pub fn specialize<R: Ring>(
        &self,
        values: &[R::Element],
        target: &R,
    ) -> Result<R::Element, RingError> {
        if values.len() != self.nvars {
            return Err(RingError::VariableMismatch(values.len(), self.nvars));
        }
        for (i, v) in values.iter().enumerate() {
            if target.is_zero(v) {
                return Err(RingError::Specialization(format!(
                    "value for variable {} is zero",
                    i + 1
                )));
            }
        }
        // denominator exponents: how far each variable dips negative
        let denom: Vec<u64> = (0..self.nvars)
            .map(|i| {
                self.min_exponent(i)
                    .map(|e| if e < 0 { (-e) as u64 } else { 0 })
                    .unwrap_or(0)
            })
            .collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.from_int(c);
            for (i, &e) in m.0.iter().enumerate() {
                let shifted = (e + denom[i] as i64) as u64;
                if shifted > 0 {
                    term = target.mul(&term, &ring_pow(target, &values[i], shifted));
                }
            }
            acc = target.add(&acc, &term);
        }
        let mut divisor = target.one();
        for (i, &d) in denom.iter().enumerate() {
            if d > 0 {
                divisor = target.mul(&divisor, &ring_pow(target, &values[i], d));
            }
        }
        target.exact_div(&acc, &divisor).map_err(|e| match e {
            RingError::NotDivisible => RingError::Specialization(
                "substitution does not cancel the denominator".to_string(),
            ),
            other => other,
        })
    }

    /// Evaluate at integer values, requiring an integer result.
    pub fn specialize_int(&self, values: &[Int]) -> Result<Int, RingError> {
        self.specialize(values, &crate::ring::IntegerRing)
    }

    /// Render with explicit variable names.
    pub fn format_with_names(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(names[i].clone());
                } else {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the text syntax: terms joined by `+`/`-`, factors joined by `*`,
    /// variables written as a letter prefix plus a 1-based index (`x1`,
    /// `z_2`), exponents after `^` (negative permitted).
    pub fn parse(input: &str, nvars: usize) -> Result<Self, PolyParseError> {
        Parser::new(input, nvars).parse()
    }
}

fn ring_pow<R: Ring>(ring: &R, base: &R::Element, mut e: u64) -> R::Element {
    let mut b = base.clone();
    let mut acc = ring.one();
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.mul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = ring.mul(&b, &b);
        }
    }
    acc
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.format_with_names(&names))
    }
}

/// Error from the polynomial text parser, with a byte position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, nvars: usize) -> Self {
        Parser {
            src: input.as_bytes(),
            pos: 0,
            nvars,
        }
    }

    fn error(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<LaurentPolynomial, PolyParseError> {
        let mut acc = LaurentPolynomial::zero(self.nvars);
        let mut sign = 1i64;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(_) => {}
            None => return Err(self.error("empty polynomial")),
        }
        loop {
            let term = self.parse_term(sign)?;
            acc = acc.add(&term);
            match self.peek() {
                Some(b'+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(c) => {
                    return Err(self.error(format!("unexpected character '{}'", c as char)))
                }
                None => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, sign: i64) -> Result<LaurentPolynomial, PolyParseError> {
        let mut coeff = Int::from(sign);
        let mut exps = vec![0i64; self.nvars];
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.parse_uint()?;
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let idx = self.parse_var()?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.parse_signed_exp()?
                    } else {
                        1
                    };
                    exps[idx] += e;
                    saw_factor = true;
                }
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err(self.error("empty term"));
        }
        Ok(LaurentPolynomial::monomial(self.nvars, exps, coeff))
    }

    fn parse_uint(&mut self) -> Result<Int, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<Int>()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }

    fn parse_signed_exp(&mut self) -> Result<i64, PolyParseError> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.src.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected exponent digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<i64>()
            .map(|v| sign * v)
            .map_err(|e| self.error(format!("bad exponent: {e}")))
    }

    fn parse_var(&mut self) -> Result<usize, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            self.pos = start;
            return Err(self.error("variable name must end in a 1-based index"));
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii");
        let index: usize = text
            .parse()
            .map_err(|e| self.error(format!("bad variable index: {e}")))?;
        if index == 0 || index > self.nvars {
            return Err(self.error(format!(
                "variable index {index} out of range 1..={}",
                self.nvars
            )));
        }
        Ok(index - 1)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: Vec<i64>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: usize,
    terms: Vec<JsonTerm>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| JsonTerm {
                e: m.0.clone(),
                c: c.to_string(),
            })
            .collect();
        JsonPoly {
            vars: self.nvars,
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: Int = t
                .c
                .parse()
                .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))?;
            terms.push((t.e, c));
        }
        LaurentPolynomial::from_raw_terms(raw.vars, terms)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// The ring of Laurent polynomials in a fixed number of variables, carrying
/// the variable names used for printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentRing {
    nvars: usize,
    names: Vec<String>,
}

impl LaurentRing {
    /// Variables named `x1..xn`.
    pub fn new(nvars: usize) -> Self {
        LaurentRing {
            nvars,
            names: (1..=nvars).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Variables named `z_1..z_n`, the universal-frieze convention.
    pub fn with_z_names(nvars: usize) -> Self {
        LaurentRing {
            nvars,
            names: (1..=nvars).map(|i| format!("z_{i}")).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, idx: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(self.nvars, idx)
    }

    pub fn parse(&self, input: &str) -> Result<LaurentPolynomial, PolyParseError> {
        LaurentPolynomial::parse(input, self.nvars)
    }
}

impl Ring for LaurentRing {
    type Element = LaurentPolynomial;

    fn zero(&self) -> LaurentPolynomial {
        LaurentPolynomial::zero(self.nvars)
    }

    fn one(&self) -> LaurentPolynomial {
        LaurentPolynomial::one(self.nvars)
    }

    fn add(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.add(b)
    }

    fn sub(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.sub(b)
    }

    fn mul(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.mul(b)
    }

    fn neg(&self, a: &LaurentPolynomial) -> LaurentPolynomial {
        a.neg()
    }

    fn is_zero(&self, a: &LaurentPolynomial) -> bool {
        a.is_zero()
    }

    fn exact_div(
        &self,
        a: &LaurentPolynomial,
        b: &LaurentPolynomial,
    ) -> Result<LaurentPolynomial, RingError> {
        a.exact_div(b)
    }

    fn from_int(&self, v: &Int) -> LaurentPolynomial {
        LaurentPolynomial::constant(self.nvars, v.clone())
    }

    fn format(&self, a: &LaurentPolynomial) -> String {
        a.format_with_names(&self.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn p(s: &str, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn normalize_cancels_and_merges() {
        let zero =
            LaurentPolynomial::from_raw_terms(2, vec![(vec![0, 0], int(3)), (vec![0, 0], int(-3))])
                .unwrap();
        assert!(zero.is_zero());

        let merged =
            LaurentPolynomial::from_raw_terms(2, vec![(vec![1, 0], int(1)), (vec![1, 0], int(1))])
                .unwrap();
        assert_eq!(merged, p("2*x1", 2));

        let untouched =
            LaurentPolynomial::from_raw_terms(2, vec![(vec![0, -1], int(5))]).unwrap();
        assert_eq!(untouched, p("5*x2^-1", 2));
    }

    #[test]
    fn normalize_rejects_bad_exponent_length() {
        let err = LaurentPolynomial::from_raw_terms(2, vec![(vec![1], int(1))]).unwrap_err();
        assert!(matches!(err, RingError::BadExponentLength { .. }));
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = p("x1 + x2^-1", 2);
        let b = p("x1 - x2^-1", 2);
        assert_eq!(a.mul(&b), p("x1^2 - x2^-2", 2));
    }

    #[test]
    fn mul_identity_and_vars() {
        let a = p("3*x1^2 - x2 + 7", 2);
        assert_eq!(a.mul(&LaurentPolynomial::one(2)), a);
        let z1 = LaurentPolynomial::var(2, 0);
        let z2 = LaurentPolynomial::var(2, 1);
        assert_eq!(z1.mul(&z2), p("x1*x2", 2));
    }

    #[test]
    fn exact_div_basic() {
        let a = p("x1^2 - 1", 1);
        let b = p("x1 - 1", 1);
        assert_eq!(a.exact_div(&b).unwrap(), p("x1 + 1", 1));
    }

    #[test]
    fn exact_div_by_monomial_is_unit_shift() {
        let a = p("x1^2 + x2 - 3", 2);
        let q = a.exact_div(&p("x1", 2)).unwrap();
        assert_eq!(q, p("x1 + x1^-1*x2 - 3*x1^-1", 2));
        assert_eq!(q.mul(&p("x1", 2)), a);
    }

    #[test]
    fn exact_div_failure_and_zero() {
        let a = p("x1 + 1", 2);
        let b = p("x2 + 1", 2);
        assert_eq!(a.exact_div(&b), Err(RingError::NotDivisible));
        assert_eq!(
            a.exact_div(&LaurentPolynomial::zero(2)),
            Err(RingError::DivisionByZero)
        );
    }

    #[test]
    fn specialize_f4_mouth_variable_at_ones() {
        // (x1*x2^2 + x1*x4 + x3*x4) / (x2*x3) at all ones
        let x = p("x1*x2^2*x2^-1*x3^-1 + x1*x4*x2^-1*x3^-1 + x3*x4*x2^-1*x3^-1", 4);
        let ones = vec![int(1); 4];
        assert_eq!(x.specialize_int(&ones).unwrap(), int(3));
    }

    #[test]
    fn specialize_growth_poly() {
        // z1*z2 - 2 at (6, 20)
        let s = p("x1*x2 - 2", 2);
        assert_eq!(s.specialize_int(&[int(6), int(20)]).unwrap(), int(118));
        let c = LaurentPolynomial::constant(3, int(7));
        assert_eq!(
            c.specialize_int(&[int(4), int(5), int(6)]).unwrap(),
            int(7)
        );
    }

    #[test]
    fn specialize_rejects_zero_value() {
        let s = p("x1*x2^-1", 2);
        assert!(matches!(
            s.specialize_int(&[int(1), int(0)]),
            Err(RingError::Specialization(_))
        ));
    }

    #[test]
    fn specialize_requires_cancellation() {
        let s = p("x1*x2^-1", 2);
        assert!(matches!(
            s.specialize_int(&[int(3), int(2)]),
            Err(RingError::Specialization(_))
        ));
        assert_eq!(s.specialize_int(&[int(4), int(2)]).unwrap(), int(2));
    }

    #[test]
    fn display_matches_canonical_order() {
        let q = p("x2 + x1*x2 - 1 + x1", 2);
        assert_eq!(q.to_string(), "x1*x2 + x1 + x2 - 1");
        let zero = LaurentPolynomial::zero(2);
        assert_eq!(zero.to_string(), "0");
        let neg = p("-x1 + 2", 1);
        assert_eq!(neg.to_string(), "-x1 + 2");
    }

    #[test]
    fn parse_display_round_trip() {
        let samples = [
            "x1*x2 + x1 + x2 - 1",
            "-3*x1^2*x2^-4 + 7",
            "x1^-1",
            "0",
            "42",
        ];
        for s in samples {
            let q = p(s, 2);
            assert_eq!(q.to_string(), s);
            assert_eq!(p(&q.to_string(), 2), q);
        }
    }

    #[test]
    fn parse_z_underscore_names() {
        let q = LaurentPolynomial::parse("z_1*z_2 - 2", 2).unwrap();
        assert_eq!(q, p("x1*x2 - 2", 2));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = LaurentPolynomial::parse("x1 + ?", 2).unwrap_err();
        assert_eq!(err.position, 5);
        let err = LaurentPolynomial::parse("x9", 2).unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn json_round_trip() {
        let q = p("2*x1^3*x2^-1 - 5", 2);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"{"vars":2,"terms":[{"e":[3,-1],"c":"2"},{"e":[0,0],"c":"-5"}]}"#);
        let back: LaurentPolynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
    }
}
