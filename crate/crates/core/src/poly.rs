//! Sparse multivariate polynomials over the binary fields of [`crate::field`].
//!
//! Monomials are ordered graded-lexicographically, with the first variable of
//! the ring the most significant. Iteration goes from the smallest monomial to
//! the leading one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{BinaryField, FieldElement};
use crate::ratfun::RationalFunction;

/// An ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new(names: &[&str]) -> Self {
        let vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate variable `{v}`");
        }
        PolyRing { vars: vars.into() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn require_index(&self, name: &str) -> usize {
        self.index_of(name)
            .unwrap_or_else(|| panic!("variable `{name}` not in ring {:?}", self.vars))
    }

    pub fn zero(&self) -> SparsePoly {
        SparsePoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> SparsePoly {
        self.constant(FieldElement::one(BinaryField::Gf2))
    }

    pub fn constant(&self, c: FieldElement) -> SparsePoly {
        self.monomial(vec![0; self.nvars()], c)
    }

    pub fn monomial(&self, exps: Vec<u32>, c: FieldElement) -> SparsePoly {
        assert_eq!(exps.len(), self.nvars());
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn var(&self, name: &str) -> SparsePoly {
        let i = self.require_index(name);
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e, FieldElement::one(BinaryField::Gf2))
    }
}

impl PolyRing {
    /// Parses `+`, `-`, `*`, `^`, parentheses, integer constants (read mod 2)
    /// and variable names, e.g. `"t^2*x*(y^2 + y + 1)"`.
    pub fn parse(&self, src: &str) -> Result<SparsePoly> {
        let toks = tokenize(src)?;
        let mut pos = 0;
        let p = self.parse_sum(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Precondition(format!("trailing input in {src:?}")));
        }
        Ok(p)
    }

    fn parse_sum(&self, toks: &[Tok], pos: &mut usize) -> Result<SparsePoly> {
        let mut acc = self.parse_product(toks, pos)?;
        while let Some(Tok::Op('+' | '-')) = toks.get(*pos) {
            *pos += 1;
            acc = &acc + &self.parse_product(toks, pos)?;
        }
        Ok(acc)
    }

    fn parse_product(&self, toks: &[Tok], pos: &mut usize) -> Result<SparsePoly> {
        let mut acc = self.parse_power(toks, pos)?;
        loop {
            match toks.get(*pos) {
                Some(Tok::Op('*')) => {
                    *pos += 1;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.parse_power(toks, pos)?;
        }
    }

    fn parse_power(&self, toks: &[Tok], pos: &mut usize) -> Result<SparsePoly> {
        let base = match toks.get(*pos) {
            Some(Tok::Num(n)) => {
                *pos += 1;
                if n % 2 == 0 {
                    self.zero()
                } else {
                    self.one()
                }
            }
            Some(Tok::Ident(name)) => {
                *pos += 1;
                if self.index_of(name).is_none() {
                    return Err(Error::UnknownVariable(name.clone()));
                }
                self.var(name)
            }
            Some(Tok::Op('(')) => {
                *pos += 1;
                let inner = self.parse_sum(toks, pos)?;
                if toks.get(*pos) != Some(&Tok::Op(')')) {
                    return Err(Error::Precondition("unbalanced parenthesis".into()));
                }
                *pos += 1;
                inner
            }
            t => return Err(Error::Precondition(format!("unexpected token {t:?}"))),
        };
        if let Some(Tok::Op('^')) = toks.get(*pos) {
            *pos += 1;
            match toks.get(*pos) {
                Some(Tok::Num(e)) => {
                    *pos += 1;
                    return Ok(base.pow(*e as u32));
                }
                _ => return Err(Error::Precondition("exponent must be an integer".into())),
            }
        }
        Ok(base)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut n = 0u64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n * 10 + d as u64;
                chars.next();
            }
            out.push(Tok::Num(n));
        } else if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Tok::Ident(name));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(Error::Precondition(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing{:?}", self.vars)
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, by: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&by.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Polynomial with nonzero coefficients indexed by exponent vectors.
#[derive(Clone)]
pub struct SparsePoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl SparsePoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.degree() == 0 && c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.ring.require_index(var);
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Indices of the variables that actually occur.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElement {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .copied()
            .unwrap_or(FieldElement::zero(BinaryField::Gf2))
    }

    /// Constant term.
    pub fn constant_term(&self) -> FieldElement {
        self.coefficient(&vec![0; self.ring.nvars()])
    }

    fn check_ring(&self, other: &SparsePoly) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: FieldElement) -> SparsePoly {
        let mut out = self.ring.zero();
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), *a * c);
        }
        out
    }

    fn mul_term(&self, m: &Monomial, c: FieldElement) -> SparsePoly {
        let mut out = self.ring.zero();
        for (n, a) in &self.terms {
            let v = *a * c;
            if !v.is_zero() {
                out.terms.insert(n.product(m), v);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient-wise Frobenius with doubled exponents. Equals `self * self`
    /// in characteristic 2.
    pub fn frobenius(&self) -> SparsePoly {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            out.terms
                .insert(Monomial(m.0.iter().map(|e| 2 * e).collect()), c.square());
        }
        out
    }

    pub fn derivative(&self, var: &str) -> SparsePoly {
        let i = self.ring.require_index(var);
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            // d/dv v^e = e v^(e-1); only odd exponents survive in char 2
            if m.0[i] % 2 == 1 {
                let mut e = m.0.clone();
                e[i] -= 1;
                out.add_term(Monomial(e), *c);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = FieldElement::zero(BinaryField::Gf2);
        for (m, c) in &self.terms {
            let mut t = *c;
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= x.pow(e as u64);
                }
            }
            acc += t;
        }
        acc
    }

    /// Fixes some variables to field values, keeping the ring.
    pub fn specialize(&self, values: &[(&str, FieldElement)]) -> SparsePoly {
        let idx: Vec<(usize, FieldElement)> = values
            .iter()
            .map(|(n, v)| (self.ring.require_index(n), *v))
            .collect();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let mut coeff = *c;
            for &(i, v) in &idx {
                coeff *= v.pow(e[i] as u64);
                e[i] = 0;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Re-expresses the polynomial in a ring that contains every variable
    /// actually used.
    pub fn change_ring(&self, target: &PolyRing) -> Result<SparsePoly> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.index_of(v))
            .collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.vars()[i].clone()))?;
                e[j] += k;
            }
            out.add_term(Monomial(e), *c);
        }
        Ok(out)
    }

    /// Coefficients as a polynomial in `var`: `result[k]` multiplies `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<SparsePoly> {
        let i = self.ring.require_index(var);
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![self.ring.zero(); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i] as usize;
            e[i] = 0;
            out[k].terms.insert(Monomial(e), *c);
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let n = self.ring.nvars();
        let mut e: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            e = Some(match e {
                None => m.0.clone(),
                Some(prev) => prev.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        Monomial(e.unwrap_or_else(|| vec![0; n]))
    }

    /// Divides every term by a monomial that divides all of them.
    pub fn div_monomial(&self, m: &Monomial) -> SparsePoly {
        let mut out = self.ring.zero();
        for (n, c) in &self.terms {
            assert!(m.divides(n), "monomial does not divide every term");
            out.terms.insert(n.quotient(m), *c);
        }
        out
    }

    /// Division with remainder by a single divisor in the graded-lex order.
    /// The remainder is zero exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &SparsePoly) -> Result<(SparsePoly, SparsePoly)> {
        self.check_ring(divisor);
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), *c))
            .ok_or(Error::DivisionByZero("polynomial"))?;
        let lc_inv = lc.inverse().expect("nonzero leading coefficient");
        let mut p = self.clone();
        let mut q = self.ring.zero();
        let mut r = self.ring.zero();
        while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), *c)) {
            if lm.divides(&m) {
                let t = m.quotient(&lm);
                let f = c * lc_inv;
                p = &p - &divisor.mul_term(&t, f);
                q.add_term(t, f);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        Ok((q, r))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn divide_exact(&self, divisor: &SparsePoly) -> Result<Option<SparsePoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Pseudo-division in `var`: returns `(q, r, k)` with
    /// `lc^k * self = q * divisor + r` and `deg_var r < deg_var divisor`,
    /// where `lc` is the leading coefficient of `divisor` in `var`.
    pub fn pseudo_div_rem(
        &self,
        divisor: &SparsePoly,
        var: &str,
    ) -> Result<(SparsePoly, SparsePoly, u32)> {
        self.check_ring(divisor);
        let i = self.ring.require_index(var);
        let dcoeffs = divisor.coefficients_in(var);
        let dd = dcoeffs
            .len()
            .checked_sub(1)
            .ok_or(Error::DivisionByZero("polynomial"))?;
        let lc = dcoeffs[dd].clone();
        let mut r = self.clone();
        let mut q = self.ring.zero();
        let mut k = 0;
        while let Some(dr) = r.degree_in(var) {
            if (dr as usize) < dd {
                break;
            }
            let lr = r.coefficients_in(var).swap_remove(dr as usize);
            let mut e = vec![0; self.ring.nvars()];
            e[i] = dr - dd as u32;
            let shift = Monomial(e);
            let shifted = lr.mul_term(&shift, FieldElement::one(BinaryField::Gf2));
            r = &(&lc * &r) - &(&shifted * divisor);
            q = &(&lc * &q) + &shifted;
            k += 1;
        }
        Ok((q, r, k))
    }

    /// Greatest common divisor when at most one variable occurs in either
    /// argument; made monic. `None` for genuinely multivariate input.
    pub fn univariate_gcd(&self, other: &SparsePoly) -> Option<SparsePoly> {
        self.check_ring(other);
        let mut used = self.variables_used();
        used.extend(other.variables_used());
        used.sort_unstable();
        used.dedup();
        if used.len() > 1 {
            return None;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        Some(a.monic())
    }

    /// Scales so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> SparsePoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(c.inverse().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Ring homomorphism sending bound variables to rational functions in
    /// `target` and every other used variable to the same-named variable of
    /// `target`.
    pub fn substitute(
        &self,
        target: &PolyRing,
        bindings: &[(&str, RationalFunction)],
    ) -> Result<RationalFunction> {
        let n = self.ring.nvars();
        let mut images: Vec<Option<(SparsePoly, SparsePoly)>> = vec![None; n];
        for (name, rf) in bindings {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if rf.ring() != target {
                return Err(Error::Precondition(format!(
                    "binding for `{name}` lives in {:?}, expected {:?}",
                    rf.ring(),
                    target
                )));
            }
            images[i] = Some((rf.numer().clone(), rf.denom().clone()));
        }
        for i in 0..n {
            if images[i].is_none() && self.terms.keys().any(|m| m.0[i] > 0) {
                let name = &self.ring.vars()[i];
                target
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                images[i] = Some((target.var(name), target.one()));
            }
        }
        // p(n/d) = [sum c prod n_i^e_i d_i^(E_i - e_i)] / prod d_i^E_i
        let max_deg: Vec<u32> = (0..n)
            .map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0))
            .collect();
        let mut num_pows: Vec<Vec<SparsePoly>> = Vec::with_capacity(n);
        let mut den_pows: Vec<Vec<SparsePoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut np = vec![target.one()];
            let mut dp = vec![target.one()];
            if let Some((num, den)) = &images[i] {
                for k in 1..=max_deg[i] as usize {
                    np.push(&np[k - 1] * num);
                    dp.push(&dp[k - 1] * den);
                }
            }
            num_pows.push(np);
            den_pows.push(dp);
        }
        let mut numer = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(*c);
            for i in 0..n {
                if images[i].is_none() {
                    continue;
                }
                let e = m.0[i] as usize;
                let big = max_deg[i] as usize;
                if e > 0 {
                    t = &t * &num_pows[i][e];
                }
                if big > e {
                    t = &t * &den_pows[i][big - e];
                }
            }
            numer = &numer + &t;
        }
        let mut denom = target.one();
        for i in 0..n {
            if images[i].is_some() && max_deg[i] > 0 {
                denom = &denom * &den_pows[i][max_deg[i] as usize];
            }
        }
        RationalFunction::new(numer, denom)
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && (self - other).is_zero()
    }
}

impl Eq for SparsePoly {}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + rhs
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.clone()
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_ring(rhs);
        let mut out = self.ring.zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.product(n), *a * *b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !c.is_one() || m.degree() == 0 {
                factors.push(if m.degree() == 0 || c.is_one() {
                    c.to_string()
                } else {
                    format!("({c})")
                });
            }
            for (v, &e) in self.ring.vars().iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf2(b: u8) -> FieldElement {
        FieldElement::new(BinaryField::Gf2, b)
    }

    #[test]
    fn grlex_order() {
        let r = PolyRing::new(&["t", "x"]);
        let p = &(&r.var("t") * &r.var("x")) + &r.var("t").pow(2);
        // t^2 > t*x in grlex with t first
        assert_eq!(p.leading_term().unwrap().0 .0, vec![2, 0]);
        assert_eq!(p.to_string(), "t^2 + t*x");
    }

    #[test]
    fn char_two_frobenius_identity() {
        let r = PolyRing::new(&["t", "x", "y"]);
        let p = &(&r.var("t") * &r.var("x")) + &(&r.var("y") + &r.constant(FieldElement::omega()));
        assert_eq!(&p * &p, p.frobenius());
    }

    #[test]
    fn derivative_drops_even_powers() {
        let r = PolyRing::new(&["t"]);
        let t = r.var("t");
        let p = &t.pow(3) + &t.pow(2);
        assert_eq!(p.derivative("t"), t.pow(2));
    }

    #[test]
    fn exact_division_and_remainder() {
        let r = PolyRing::new(&["t", "x"]);
        let a = &r.var("t") + &r.one();
        let b = &(&r.var("t") * &r.var("x")) + &r.var("x").pow(3);
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&a).unwrap(), Some(b.clone()));
        let shifted = &prod + &r.one();
        assert_eq!(shifted.divide_exact(&a).unwrap(), None);
    }

    #[test]
    fn pseudo_division_identity() {
        let r = PolyRing::new(&["t", "x", "y"]);
        let (t, x, y) = (r.var("t"), r.var("x"), r.var("y"));
        let d = &(&(&(&r.one() + &(&t.pow(2) * &x)) * &y.pow(2)) + &y) + &x;
        let p = &(&y.pow(4) * &t) + &(&x * &y);
        let (q, rem, k) = p.pseudo_div_rem(&d, "y").unwrap();
        let lc = d.coefficients_in("y")[2].clone();
        assert_eq!(&lc.pow(k) * &p, &(&q * &d) + &rem);
        assert!(rem.degree_in("y").unwrap_or(0) < 2);
    }

    #[test]
    fn univariate_gcd() {
        let r = PolyRing::new(&["t"]);
        let t = r.var("t");
        let a = &(&t + &r.one()).pow(3) * &t;
        let b = &(&t + &r.one()).pow(2) * &(&t.pow(2) + &(&t + &r.one()));
        assert_eq!(a.univariate_gcd(&b).unwrap(), (&t + &r.one()).pow(2));
    }

    #[test]
    fn parser() {
        let r = PolyRing::new(&["t", "x"]);
        let (t, x) = (r.var("t"), r.var("x"));
        let want = &(&t.pow(2) * &x) + &(&x + &r.one());
        assert_eq!(r.parse("t^2*x + x + 1").unwrap(), want);
        assert_eq!(r.parse("t^2 x + (x + 3)").unwrap(), want);
        assert_eq!(r.parse("(t+1)^2").unwrap(), r.parse("t^2+1").unwrap());
        assert!(r.parse("y").is_err());
        assert!(r.parse("(t").is_err());
    }

    #[test]
    fn substitution_examples() {
        let r = PolyRing::new(&["x"]);
        let p = &r.var("x").pow(2) + &r.one();
        let id = RationalFunction::from_poly(r.var("x"));
        let out = p.substitute(&r, &[("x", id)]).unwrap();
        assert_eq!(out, RationalFunction::from_poly(p.clone()));

        let src = PolyRing::new(&["t", "x"]);
        let dst = PolyRing::new(&["T", "U"]);
        let (tt, uu) = (dst.var("T"), dst.var("U"));
        let q = &src.var("t").pow(2) * &src.var("x");
        let out = q
            .substitute(
                &dst,
                &[
                    ("t", RationalFunction::from_poly(&(&tt * &uu) + &dst.one())),
                    ("x", RationalFunction::from_poly(&uu + &dst.one())),
                ],
            )
            .unwrap();
        let expected = &(&(&tt.pow(2) * &uu.pow(2)) + &dst.one()) * &(&uu + &dst.one());
        assert_eq!(out, RationalFunction::from_poly(expected));
        assert_eq!(gf2(1), out.numer().constant_term());
    }

    #[test]
    fn substitution_with_vanishing_denominator_is_reported() {
        let src = PolyRing::new(&["x"]);
        let dst = PolyRing::new(&["y"]);
        let bad = RationalFunction::new(dst.one(), dst.zero());
        assert!(bad.is_err());
        let p = src.var("x");
        let good = RationalFunction::new(dst.one(), dst.var("y")).unwrap();
        assert!(p.substitute(&dst, &[("x", good)]).is_ok());
    }

    fn arb_poly(r: PolyRing) -> impl Strategy<Value = SparsePoly> {
        let n = r.nvars();
        prop::collection::vec(
            (prop::collection::vec(0u32..=2, n), 1u8..64),
            0..6,
        )
        .prop_map(move |ts| {
            let mut p = r.zero();
            for (e, c) in ts {
                p = &p + &r.monomial(e, FieldElement::new(BinaryField::Gf64, c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_multiplicative(
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let r = PolyRing::new(&["a", "b", "c", "d"]);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let gen = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = r.zero();
                for _ in 0..rng.gen_range(1..6) {
                    let e: Vec<u32> = (0..4).map(|_| rng.gen_range(0..=1)).collect();
                    p = &p + &r.monomial(e, FieldElement::new(BinaryField::Gf64, rng.gen_range(1..64)));
                }
                p
            };
            let p = gen(&mut rng);
            let q = gen(&mut rng);
            let pt: Vec<FieldElement> = (0..4)
                .map(|_| FieldElement::new(BinaryField::Gf64, rng.gen_range(0..64)))
                .collect();
            prop_assert_eq!((&p * &q).evaluate(&pt), p.evaluate(&pt) * q.evaluate(&pt));
            prop_assert_eq!((&p + &q).evaluate(&pt), p.evaluate(&pt) + q.evaluate(&pt));
        }

        #[test]
        fn distributive(
            p in arb_poly(PolyRing::new(&["x", "y", "z"])),
            q in arb_poly(PolyRing::new(&["x", "y", "z"])),
            s in arb_poly(PolyRing::new(&["x", "y", "z"])),
        ) {
            prop_assert_eq!(&(&p + &q) * &s, &(&p * &s) + &(&q * &s));
            prop_assert_eq!(&p * &p, p.frobenius());
        }
    }
}
