//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in descending graded reverse lexicographic order
//! with no zero coefficients, so equality and hashing see a canonical form.

use crate::monomial::Monomial;
use crate::rational::{rat_to_f64, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("variable names must be distinct, `{name}` repeats")]
    DuplicateVariable { name: String },
    #[error("`{name}` is not a valid variable name")]
    BadVariableName { name: String },
}

/// An ordered, shared list of variable names.
///
/// Cloning is cheap; two lists compare equal when the names match in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Variables(Arc<Vec<String>>);

impl Variables {
    /// Builds a variable list, checking names are identifiers and distinct.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(PolyError::BadVariableName { name: n.into() });
            }
            if !seen.insert(n.to_string()) {
                return Err(PolyError::DuplicateVariable { name: n.into() });
            }
            out.push(n.to_string());
        }
        Ok(Variables(Arc::new(out)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: Variables,
    /// Sorted descending in degrevlex; no zero coefficients.
    terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn zero(vars: &Variables) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &Variables, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        Polynomial {
            vars: vars.clone(),
            terms: vec![(Monomial::one(vars.len()), c)],
        }
    }

    pub fn one(vars: &Variables) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn variable(vars: &Variables, index: usize) -> Result<Self, PolyError> {
        if index >= vars.len() {
            return Err(PolyError::IndexOutOfRange {
                index,
                nvars: vars.len(),
            });
        }
        Ok(Polynomial {
            vars: vars.clone(),
            terms: vec![(Monomial::variable(vars.len(), index), Rat::one())],
        })
    }

    /// Builds the canonical form from arbitrary (monomial, coefficient)
    /// pairs: combines duplicates, drops zeros, sorts descending.
    pub fn from_terms<I>(vars: &Variables, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut map: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), vars.len());
            if c.is_zero() {
                continue;
            }
            use std::collections::hash_map::Entry;
            match map.entry(m) {
                Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
                Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Rat)> = map.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn variables(&self) -> &Variables {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Leading (monomial, coefficient) in degrevlex, if nonzero.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variable lists"
        );
    }

    /// Merge of two sorted term lists with `self + scale * t * other`.
    pub fn add_scaled_shifted(&self, other: &Polynomial, scale: &Rat, shift: &Monomial) -> Polynomial {
        self.assert_compatible(other);
        if scale.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, c)| (m.mul(shift), c * scale))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => {
                        let (m, c) = a.next().unwrap();
                        out.push((m.clone(), c.clone()));
                    }
                    std::cmp::Ordering::Less => {
                        out.push(b.next().unwrap());
                    }
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + &cb;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
                (Some(_), None) => {
                    let (m, c) = a.next().unwrap();
                    out.push((m.clone(), c.clone()));
                }
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by a single term (order-preserving; no re-sort).
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact partial derivative with respect to the variable at `var_index`.
    pub fn differentiate(&self, var_index: usize) -> Result<Polynomial, PolyError> {
        if var_index >= self.nvars() {
            return Err(PolyError::IndexOutOfRange {
                index: var_index,
                nvars: self.nvars(),
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var_index);
            if e == 0 {
                return None;
            }
            let mut exps = m.exps().to_vec();
            exps[var_index] -= 1;
            Some((Monomial::from_exps(&exps), c * Rat::from_integer(e.into())))
        });
        Ok(Polynomial::from_terms(&self.vars, terms))
    }

    /// Exact evaluation at a rational point (recursive Horner scheme).
    pub fn evaluate_rat(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::PointLength {
                got: point.len(),
                expected: self.nvars(),
            });
        }
        Ok(horner(&self.lex_sorted_terms(), 0, point, &Rat::zero()))
    }

    /// Floating-point evaluation at a real point (same Horner scheme).
    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::PointLength {
                got: point.len(),
                expected: self.nvars(),
            });
        }
        let terms: Vec<(Monomial, f64)> = self
            .lex_sorted_terms()
            .into_iter()
            .map(|(m, c)| (m, rat_to_f64(&c)))
            .collect();
        Ok(horner(&terms, 0, point, &0.0))
    }

    /// Sum of `|coefficient| * |monomial at point|`; the natural scale for
    /// judging how small a floating evaluation of this polynomial can be.
    pub fn eval_magnitude_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m
                    .exps()
                    .iter()
                    .zip(point)
                    .map(|(e, x)| x.abs().powi(*e as i32))
                    .product();
                rat_to_f64(c).abs() * mono
            })
            .sum()
    }

    /// Terms sorted descending lexicographically by exponent vector
    /// (the grouping order the Horner recursion wants).
    fn lex_sorted_terms(&self) -> Vec<(Monomial, Rat)> {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.0.exps().cmp(a.0.exps()));
        terms
    }

    /// Exact multivariate division; `Some(q)` iff `self == q * divisor`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_compatible(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dm, dc) = divisor.leading_term().unwrap();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rat)> = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let t = m.div(&dm)?;
            let q = c / &dc;
            rem = rem.add_scaled_shifted(divisor, &(-&q), &t);
            // leading monomials shrink strictly, so pushes arrive in
            // descending order already
            quot.push((t, q));
        }
        Some(Polynomial {
            vars: self.vars.clone(),
            terms: quot,
        })
    }
}

/// Recursive Horner evaluation over any scalar with ring ops.
fn horner<T>(terms: &[(Monomial, T)], var: usize, point: &[T], zero: &T) -> T
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    if terms.is_empty() {
        return zero.clone();
    }
    let nvars = point.len();
    if var == nvars {
        // all exponents consumed: at most one constant term remains
        let mut acc = zero.clone();
        for (_, c) in terms {
            acc = acc + c.clone();
        }
        return acc;
    }
    let mut acc: Option<T> = None;
    let mut prev_exp = 0u32;
    let mut i = 0;
    while i < terms.len() {
        let e = terms[i].0.exp(var);
        let mut j = i;
        while j < terms.len() && terms[j].0.exp(var) == e {
            j += 1;
        }
        let inner = horner(&terms[i..j], var + 1, point, zero);
        acc = Some(match acc {
            None => inner,
            Some(a) => {
                let mut stepped = a;
                for _ in 0..(prev_exp - e) {
                    stepped = stepped * point[var].clone();
                }
                stepped + inner
            }
        });
        prev_exp = e;
        i = j;
    }
    let mut result = acc.unwrap();
    for _ in 0..prev_exp {
        result = result * point[var].clone();
    }
    result
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled_shifted(rhs, &Rat::one(), &Monomial::one(self.nvars()))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled_shifted(rhs, &-Rat::one(), &Monomial::one(self.nvars()))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let mut map: HashMap<Monomial, Rat> = HashMap::with_capacity(self.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                use std::collections::hash_map::Entry;
                match map.entry(m) {
                    Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rat)> = map.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rat(&abs));
            }
            for (v, e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An ordered tuple of polynomials over one shared variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialMap {
    vars: Variables,
    components: Vec<Polynomial>,
}

impl PolynomialMap {
    pub fn new(vars: &Variables, components: Vec<Polynomial>) -> Self {
        for p in &components {
            assert_eq!(p.variables(), vars, "component over wrong variable list");
        }
        PolynomialMap {
            vars: vars.clone(),
            components,
        }
    }

    pub fn variables(&self) -> &Variables {
        &self.vars
    }

    /// Domain dimension (number of variables).
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Target dimension (number of components).
    pub fn ncomponents(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Result<Vec<f64>, PolyError> {
        self.components
            .iter()
            .map(|p| p.evaluate_f64(point))
            .collect()
    }

    pub fn evaluate_rat(&self, point: &[Rat]) -> Result<Vec<Rat>, PolyError> {
        self.components
            .iter()
            .map(|p| p.evaluate_rat(point))
            .collect()
    }
}
