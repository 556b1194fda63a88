//! Sparse Laurent polynomials over exact rings, and dense q-polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient ring.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self>
{
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_neg(&self) -> bool;
}

impl Coeff for BigInt {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Coeff for BigRational {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
}

pub type Exp = Vec<i32>;

/// Sparse polynomial in `nvars` variables, exponents may be negative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R> {
    nvars: usize,
    terms: BTreeMap<Exp, R>,
}

impl<R: Coeff> Poly<R> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exp, c: R) -> Self {
        let mut p = Poly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exp, R> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exp, R> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i32]) -> R {
        self.terms.get(exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, exp: Exp, c: R) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Exp, R)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul_ref(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &[i32]) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Rewrites every exponent vector; colliding terms are merged.
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Exp) -> Self {
        let mut out: Option<Poly<R>> = None;
        for (e, c) in &self.terms {
            let ne = f(e);
            out.get_or_insert_with(|| Poly::zero(ne.len())).add_term(ne, c.clone());
        }
        out.unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub fn filter(&self, pred: impl Fn(&[i32]) -> bool) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] != 0 {
                let mut ne = e.clone();
                ne[var] -= 1;
                out.add_term(ne, c.mul_ref(&R::from_i64(e[var] as i64)));
            }
        }
        out
    }

    /// Exact division by `x_i - x_j`.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        // bucket by exponent of x_i, remaining key has x_i zeroed
        let mut buckets: BTreeMap<i32, BTreeMap<Exp, R>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut k = e.clone();
            let d = k[i];
            k[i] = 0;
            buckets.entry(d).or_default().insert(k, c.clone());
        }
        let lo = *buckets.keys().next().unwrap();
        let hi = *buckets.keys().next_back().unwrap();
        let mut out = Poly::zero(self.nvars);
        // Q_{e-1} = C_e + x_j Q_e, from the top down
        let mut q: BTreeMap<Exp, R> = BTreeMap::new();
        let mut e = hi;
        while e >= lo {
            let mut next: BTreeMap<Exp, R> = buckets.remove(&e).unwrap_or_default();
            for (k, c) in &q {
                let mut nk = k.clone();
                nk[j] += 1;
                match next.get_mut(&nk) {
                    Some(v) => {
                        v.add_ref(c);
                        if v.is_zero() {
                            next.remove(&nk);
                        }
                    }
                    None => {
                        next.insert(nk, c.clone());
                    }
                }
            }
            if e == lo {
                if !next.is_empty() {
                    return Err(Error::InexactDivision(format!(
                        "nonzero remainder dividing by x{} - x{}",
                        i + 1,
                        j + 1
                    )));
                }
                break;
            }
            for (k, c) in &next {
                let mut nk = k.clone();
                nk[i] = e - 1;
                out.add_term(nk, c.clone());
            }
            q = next;
            e -= 1;
        }
        Ok(out)
    }

    /// Sum of the exponents of the listed variables, for every term.
    pub fn partial_degrees(&self, vars: &[usize]) -> Vec<i32> {
        let mut v: Vec<i32> = self
            .terms
            .keys()
            .map(|e| vars.iter().map(|&i| e[i]).sum())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl<R: Coeff> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<R: Coeff> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<R: Coeff> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<R: Coeff> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        let mut acc: BTreeMap<Exp, R> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.mul_ref(c2);
                match acc.get_mut(&e) {
                    Some(v) => v.add_ref(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Poly { nvars: self.nvars.max(rhs.nvars), terms: acc }
    }
}

/// Renders a coefficient-times-monomial list as `c*m + ...`.
pub(crate) fn render_terms<'a, R: Coeff + 'a>(
    terms: impl Iterator<Item = (String, &'a R)>,
) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let neg = c.is_neg();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", abs, mono));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Dense polynomial in q with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly(Vec<BigInt>);

impl QPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    pub fn monomial(e: usize, c: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c;
        QPoly::new(v)
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.0.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn truncate(&self, d: usize) -> Self {
        QPoly::new(self.0.iter().take(d + 1).cloned().collect())
    }

    /// `[m]_q! = prod_{i<=m} (1 + q + ... + q^{i-1})`.
    pub fn q_factorial(m: usize) -> Self {
        let mut out = QPoly::one();
        for i in 1..=m {
            out = &out * &QPoly::new(vec![BigInt::one(); i]);
        }
        out
    }

    /// Exact division by a polynomial with unit leading coefficient.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let dd = d.degree().ok_or_else(|| Error::InexactDivision("by zero".into()))?;
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(QPoly::zero())
            } else {
                Err(Error::InexactDivision("q-degree too small".into()))
            };
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let top = &rem[i + dd];
            let (qt, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision("non-integral q-quotient".into()));
            }
            for (t, c) in d.0.iter().enumerate() {
                rem[i + t] -= &qt * c;
            }
            quo[i] = qt;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero q-remainder".into()));
        }
        Ok(QPoly::new(quo))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(e, c)| {
                let m = match e {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{}", e),
                };
                (m, c)
            },
        ));
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[i32], i64)]) -> Poly<BigInt> {
        Poly::from_terms(
            terms[0].0.len(),
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn linear_division_roundtrip() {
        let f = p(&[(&[2, 1, 0], 3), (&[0, 0, 4], -1), (&[1, -1, 2], 5)]);
        let lin = p(&[(&[1, 0, 0], 1), (&[0, 0, 1], -1)]);
        let g = &f * &lin;
        assert_eq!(g.div_linear(0, 2).unwrap(), f);
    }

    #[test]
    fn linear_division_detects_remainder() {
        let f = p(&[(&[1, 0], 1)]);
        assert!(f.div_linear(0, 1).is_err());
    }

    #[test]
    fn q_division() {
        let a = QPoly::q_factorial(3);
        let b = QPoly::q_factorial(2);
        assert_eq!(a.div_exact(&b).unwrap(), QPoly::from_i64s(&[1, 1, 1]));
        assert!(QPoly::from_i64s(&[1, 0, 1]).div_exact(&QPoly::from_i64s(&[1, 1])).is_err());
    }

    #[test]
    fn qpoly_display() {
        assert_eq!(QPoly::from_i64s(&[1, -2, 0, 1]).to_string(), "1 - 2*q + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
