//! Symmetric polynomials in `a_1..a_n` with coefficients in `Z[q]`.
//!
//! A [`SymPoly`] stores one exponent vector per orbit of the symmetric group
//! (the weakly decreasing representative), i.e. it is an expansion in monomial
//! symmetric polynomials.

mod hall;
mod schur;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{render_terms, Exp, Poly, QPoly};

pub use hall::{
    hall_littlewood_p, jing, jing_truncated, kostka_foulkes, kostka_matrix, transformed_hl,
    transformed_hl_truncated,
};
pub use schur::{schur, skew_schur, skew_schur_rows, skew_tableau_count};

/// Weakly decreasing sequence of non-negative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!("{:?} is not a partition", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(k, ..., k)` with `rows` rows.
    pub fn rectangle(k: i64, rows: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition(vec![k; rows])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All partitions of `size`, in decreasing lexicographic order.
    pub fn all(size: i64) -> Vec<Partition> {
        fn rec(rem: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance order `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (a, b) = (self.padded(n), other.padded(n));
        let (mut sa, mut sb) = (0, 0);
        for i in 0..n {
            sa += a[i];
            sb += b[i];
            if sa < sb {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Distinct permutations of an exponent vector.
pub fn orbit(exp: &[i32]) -> Vec<Exp> {
    let mut cur: Exp = exp.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn is_sorted_desc(e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Symmetric Laurent polynomial in `n` variables over `Z[q]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Exp, QPoly>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, QPoly::one())
    }

    pub fn constant(n: usize, c: QPoly) -> Self {
        let mut s = SymPoly::zero(n);
        s.add_orbit(vec![0; n], c);
        s
    }

    /// The monomial symmetric polynomial `m_e` times `c`.
    pub fn monomial_symmetric(exp: &[i32], c: QPoly) -> Self {
        let mut s = SymPoly::zero(exp.len());
        let mut e = exp.to_vec();
        e.sort_unstable_by(|a, b| b.cmp(a));
        s.add_orbit(e, c);
        s
    }

    /// `(a_1 ... a_n)^s`.
    pub fn det_power(n: usize, s: i32) -> Self {
        Self::monomial_symmetric(&vec![s; n], QPoly::one())
    }

    fn add_orbit(&mut self, e: Exp, c: QPoly) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Orbit representatives (weakly decreasing) and their coefficients.
    pub fn terms(&self) -> &BTreeMap<Exp, QPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i32]) -> QPoly {
        let mut e = exp.to_vec();
        e.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Builds from a full term map; fails unless it is symmetric.
    pub fn from_full_terms(n: usize, full: BTreeMap<Exp, QPoly>) -> Result<Self> {
        let mut s = SymPoly::zero(n);
        for (e, c) in &full {
            if is_sorted_desc(e) {
                s.add_orbit(e.clone(), c.clone());
            }
        }
        let mut count = 0usize;
        for (rep, c) in &s.terms {
            for e in orbit(rep) {
                if full.get(&e) != Some(c) {
                    return Err(Error::NotSymmetric);
                }
                count += 1;
            }
        }
        if count != full.values().filter(|c| !c.is_zero()).count() {
            return Err(Error::NotSymmetric);
        }
        Ok(s)
    }

    /// Builds from a polynomial in `a_1..a_n, q` (q last).
    pub fn from_poly(p: &Poly<BigInt>) -> Result<Self> {
        let n = p.nvars() - 1;
        let mut full: BTreeMap<Exp, Vec<BigInt>> = BTreeMap::new();
        for (e, c) in p.terms() {
            let qe = e[n];
            if qe < 0 {
                return Err(Error::InvalidParams("negative power of q".into()));
            }
            let v = full.entry(e[..n].to_vec()).or_default();
            if v.len() <= qe as usize {
                v.resize(qe as usize + 1, BigInt::zero());
            }
            v[qe as usize] += c;
        }
        Self::from_full_terms(n, full.into_iter().map(|(e, v)| (e, QPoly::new(v))).collect())
    }

    /// Builds from a q-free polynomial in `a_1..a_n`.
    pub fn from_a_poly(p: &Poly<BigInt>) -> Result<Self> {
        let n = p.nvars();
        Self::from_full_terms(
            n,
            p.terms().iter().map(|(e, c)| (e.clone(), QPoly::constant(c.clone()))).collect(),
        )
    }

    /// Full expansion as a polynomial in `a_1..a_n, q`.
    pub fn to_poly(&self) -> Poly<BigInt> {
        let mut p = Poly::zero(self.n + 1);
        for (rep, c) in &self.terms {
            for e in orbit(rep) {
                for (qe, v) in c.coeffs().iter().enumerate() {
                    let mut ex = e.clone();
                    ex.push(qe as i32);
                    p.add_term(ex, v.clone());
                }
            }
        }
        p
    }

    /// Every monomial of the orbit expansion with its q-coefficient.
    pub fn expanded_terms(&self) -> Vec<(Exp, QPoly)> {
        let mut v: Vec<(Exp, QPoly)> = self
            .terms
            .iter()
            .flat_map(|(rep, c)| orbit(rep).into_iter().map(move |e| (e, c.clone())))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        let mut s = SymPoly::zero(self.n);
        for (e, v) in &self.terms {
            s.add_orbit(e.clone(), v * c);
        }
        s
    }

    /// Multiplies by `(a_1 ... a_n)^s`.
    pub fn times_det(&self, s: i32) -> Self {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x + s).collect(), c.clone()))
                .collect(),
        }
    }

    /// Specializes q to an integer.
    pub fn eval_q(&self, q: i64) -> Self {
        let qv = BigInt::from(q);
        let mut s = SymPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut acc = BigInt::zero();
            let mut pw = BigInt::one();
            for v in c.coeffs() {
                acc += v * &pw;
                pw *= &qv;
            }
            s.add_orbit(e.clone(), QPoly::constant(acc));
        }
        s
    }

    /// The q-free polynomial multiplying `q^d`.
    pub fn q_coeff(&self, d: usize) -> Self {
        let mut s = SymPoly::zero(self.n);
        for (e, c) in &self.terms {
            s.add_orbit(e.clone(), QPoly::constant(c.coeff(d)));
        }
        s
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    /// Drops all powers of q above `d`.
    pub fn truncate_q(&self, d: usize) -> Self {
        let mut s = SymPoly::zero(self.n);
        for (e, c) in &self.terms {
            s.add_orbit(e.clone(), c.truncate(d));
        }
        s
    }

    /// Value at `a_1 = ... = a_n = 1`.
    pub fn at_ones(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for (e, c) in &self.terms {
            acc = &acc + &c.scale(&BigInt::from(orbit(e).len()));
        }
        acc
    }

    /// Total dimension of a q-free polynomial with non-negative coefficients.
    pub fn dimension(&self) -> BigInt {
        self.at_ones().eval_one()
    }

    /// Whether swapping `a_i` and `a_j` fixes the full expansion.
    pub fn is_invariant_under_swap(&self, i: usize, j: usize) -> bool {
        let p = self.to_poly();
        let swapped = p.map_exponents(|e| {
            let mut v = e.to_vec();
            v.swap(i, j);
            v
        });
        swapped == p
    }

    /// Expansion in the Schur basis, ordered by partition.
    pub fn schur_expand(&self) -> Result<Vec<(Partition, QPoly)>> {
        let mut rem = self.clone();
        let mut out = BTreeMap::new();
        while let Some((lead, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if lead.iter().any(|&x| x < 0) {
                return Err(Error::InvalidParams("Schur expansion needs a polynomial".into()));
            }
            let lam = Partition::new(lead.iter().map(|&x| x as i64).collect())?;
            let s = schur(&lam, self.n);
            rem = &rem - &s.scale(&c);
            out.insert(lam, c);
        }
        Ok(out.into_iter().collect())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut s = self.clone();
        for (e, c) in &rhs.terms {
            s.add_orbit(e.clone(), c.clone());
        }
        s
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut s = self.clone();
        for (e, c) in &rhs.terms {
            s.add_orbit(e.clone(), -c);
        }
        s
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        &SymPoly::zero(self.n) - self
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let a = self.expanded_terms();
        let b = rhs.expanded_terms();
        let mut s = SymPoly::zero(self.n);
        for (e1, c1) in &a {
            for (e2, c2) in &b {
                let e: Exp = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                if is_sorted_desc(&e) {
                    s.add_orbit(e, c1 * c2);
                }
            }
        }
        s
    }
}

fn monomial_string(qe: usize, e: &[i32]) -> String {
    let mut parts = Vec::new();
    match qe {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{}", qe)),
    }
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(format!("a{}", i + 1)),
            _ => parts.push(format!("a{}^{}", i + 1, x)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat: Vec<(i64, Exp, usize, BigInt)> = Vec::new();
        for (e, c) in self.expanded_terms() {
            for (qe, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    let deg = e.iter().map(|&x| x as i64).sum::<i64>() + qe as i64;
                    flat.push((deg, e.clone(), qe, v.clone()));
                }
            }
        }
        flat.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
        let s = render_terms(flat.iter().map(|(_, e, qe, v)| (monomial_string(*qe, e), v)));
        f.write_str(&s)
    }
}

/// Renders a Schur expansion as `c*s[..] + ...`.
pub fn render_schur(terms: &[(Partition, QPoly)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (lam, c) in terms {
        let nz: Vec<_> = c.coeffs().iter().filter(|x| !x.is_zero()).collect();
        let cs = c.to_string();
        let (neg, body) = if nz.len() == 1 {
            match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            }
        } else {
            (false, format!("({})", cs))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body != "1" {
            out.push_str(&body);
            out.push('*');
        }
        out.push_str(&format!("s{}", lam));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, terms: &[(&[i32], &[i64])]) -> SymPoly {
        let mut full = BTreeMap::new();
        for (e, c) in terms {
            full.insert(e.to_vec(), QPoly::from_i64s(c));
        }
        SymPoly::from_full_terms(n, full).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit(&[1, 1, 0]).len(), 3);
        assert_eq!(orbit(&[2, 1, 0]).len(), 6);
        assert_eq!(orbit(&[]).len(), 1);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let mut full = BTreeMap::new();
        full.insert(vec![1, 0], QPoly::one());
        assert_eq!(SymPoly::from_full_terms(2, full), Err(Error::NotSymmetric));
    }

    #[test]
    fn display_orders_by_degree() {
        let p = sp(2, &[(&[2, 0], &[1]), (&[0, 2], &[1]), (&[1, 1], &[1, -1])]);
        assert_eq!(p.to_string(), "a1^2 + a1*a2 + a2^2 - q*a1*a2");
    }

    #[test]
    fn partitions_of_five() {
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn schur_render() {
        let t = vec![
            (Partition::new(vec![1, 1]).unwrap(), QPoly::one()),
            (Partition::new(vec![2]).unwrap(), QPoly::from_i64s(&[0, 1])),
        ];
        assert_eq!(render_schur(&t), "s[1,1] + q*s[2]");
    }

    #[test]
    fn product_of_schurs_is_schur_positive() {
        let s1 = schur(&Partition::new(vec![1]).unwrap(), 3);
        let s21 = schur(&Partition::new(vec![2, 1]).unwrap(), 3);
        let prod = &s1 * &s21;
        let exp = prod.schur_expand().unwrap();
        let got: Vec<(Vec<i64>, i64)> = exp
            .iter()
            .map(|(l, c)| (l.parts().to_vec(), c.eval_one().try_into().unwrap()))
            .collect();
        assert_eq!(got, vec![(vec![2, 1, 1], 1), (vec![2, 2], 1), (vec![3, 1], 1)]);
    }
}
