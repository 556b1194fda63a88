//! Graded characters of the Hilbert space, its ground states, the shifted space
//! and the conformal limit.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagrams::{admissible_rows, degree, diagram_schur, DegreeMode};
use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::symfunc::{schur, transformed_hl_truncated, Partition, SymPoly};

/// Power series in q truncated at `max_degree`, with symmetric coefficients in
/// the flavor variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeries {
    n: usize,
    coeffs: Vec<SymPoly>,
}

impl SymSeries {
    pub fn zero(n: usize, max_degree: usize) -> Self {
        SymSeries { n, coeffs: vec![SymPoly::zero(n); max_degree + 1] }
    }

    /// Coefficients must be q-free.
    pub fn new(n: usize, coeffs: Vec<SymPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParams("a series needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| c.n() != n || c.q_degree().unwrap_or(0) > 0) {
            return Err(Error::InvalidParams("coefficients must be q-free in n variables".into()));
        }
        Ok(SymSeries { n, coeffs })
    }

    /// Splits a q-graded polynomial into its q-coefficients up to `max_degree`.
    pub fn from_graded(f: &SymPoly, max_degree: usize) -> Self {
        SymSeries { n: f.n(), coeffs: (0..=max_degree).map(|d| f.q_coeff(d)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SymPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &SymPoly {
        &self.coeffs[d]
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(max_degree + 1, SymPoly::zero(self.n));
        SymSeries { n: self.n, coeffs: c }
    }

    /// Multiplies by an integer power series in q.
    pub fn times_scalar_series(&self, s: &[BigInt]) -> Self {
        let mut out = SymSeries::zero(self.n, self.max_degree());
        for (d, slot) in out.coeffs.iter_mut().enumerate() {
            for e in 0..=d.min(s.len().saturating_sub(1)) {
                if !s[e].is_zero() {
                    *slot = &*slot + &self.coeffs[d - e].scale(&QPoly::constant(s[e].clone()));
                }
            }
        }
        out
    }

    /// Multiplies every coefficient by `(a_1 ... a_n)^s`.
    pub fn times_det(&self, s: i32) -> Self {
        SymSeries { n: self.n, coeffs: self.coeffs.iter().map(|c| c.times_det(s)).collect() }
    }

    /// Total dimension of each coefficient.
    pub fn dimensions(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.dimension()).collect()
    }
}

impl Add for &SymSeries {
    type Output = SymSeries;
    fn add(self, rhs: &SymSeries) -> SymSeries {
        let d = self.max_degree().min(rhs.max_degree());
        SymSeries {
            n: self.n,
            coeffs: (0..=d).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &SymSeries {
    type Output = SymSeries;
    fn mul(self, rhs: &SymSeries) -> SymSeries {
        let d = self.max_degree().min(rhs.max_degree());
        let mut out = SymSeries::zero(self.n, d);
        for i in 0..=d {
            for j in 0..=d - i {
                if !self.coeffs[i].is_zero() && !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "q^{}: {}", d, c)?;
        }
        Ok(())
    }
}

/// Particle number `N`, flavor count `n` and level `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub particles: usize,
    pub flavors: usize,
    pub level: i64,
}

impl ModelParams {
    pub fn new(particles: usize, flavors: usize, level: i64) -> Result<Self> {
        if flavors == 0 || level < 1 {
            return Err(Error::InvalidParams(format!(
                "need n >= 1 and k >= 1, got n={} k={}",
                flavors, level
            )));
        }
        Ok(ModelParams { particles, flavors, level })
    }

    /// `L = floor(N / n)`
    pub fn layers(&self) -> usize {
        self.particles / self.flavors
    }

    /// `r = N - n L`
    pub fn remainder(&self) -> usize {
        self.particles % self.flavors
    }

    /// Ground state energy `(k/2) L (L-1) n + k r L`.
    pub fn ground_energy(&self) -> i64 {
        let (l, n, r, k) = (self.layers() as i64, self.flavors as i64, self.remainder() as i64, self.level);
        k * l * (l - 1) * n / 2 + k * r * l
    }
}

/// Coefficients of `prod_{i=1}^{parts} 1/(1 - q^i)` up to `max_degree`.
pub fn partition_counts(parts: usize, max_degree: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); max_degree + 1];
    c[0] = BigInt::one();
    for i in 1..=parts.min(max_degree.max(1)) {
        for d in i..=max_degree {
            let prev = c[d - i].clone();
            c[d] += prev;
        }
    }
    c
}

/// `H_{(k^N)}(a; q) * prod_{i=1}^N 1/(1 - q^i)`.
pub fn hilbert_character(p: ModelParams, max_degree: usize) -> Result<SymSeries> {
    let mu = Partition::rectangle(p.level, p.particles);
    let h = transformed_hl_truncated(&mu, p.flavors, Some(max_degree))?;
    Ok(SymSeries::from_graded(&h, max_degree)
        .times_scalar_series(&partition_counts(p.particles, max_degree)))
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The level-one character as a sum over compositions `N_1 + ... + N_n = N`.
pub fn character_k1(particles: usize, n: usize, max_degree: usize) -> Result<SymSeries> {
    let mut full: Vec<BTreeMap<Vec<i32>, QPoly>> = vec![BTreeMap::new(); max_degree + 1];
    for comp in compositions(particles, n) {
        let mut series = vec![BigInt::zero(); max_degree + 1];
        series[0] = BigInt::one();
        let mut shift = 0usize;
        for &m in &comp {
            shift += m * m.saturating_sub(1) / 2;
            let pc = partition_counts(m, max_degree);
            let mut next = vec![BigInt::zero(); max_degree + 1];
            for i in 0..=max_degree {
                for j in 0..=max_degree - i {
                    next[i + j] += &series[i] * &pc[j];
                }
            }
            series = next;
        }
        let e: Vec<i32> = comp.iter().map(|&m| m as i32).collect();
        for d in shift..=max_degree {
            let c = &series[d - shift];
            if !c.is_zero() {
                let slot = full[d].entry(e.clone()).or_default();
                *slot = &*slot + &QPoly::constant(c.clone());
            }
        }
    }
    let coeffs = full
        .into_iter()
        .map(|m| SymPoly::from_full_terms(n, m))
        .collect::<Result<Vec<_>>>()?;
    SymSeries::new(n, coeffs)
}

/// `sum over admissible lam of q^{d(lam)} s_{lam / (lam - k)}(a)`.
pub fn character_via_decomposition(p: ModelParams, max_degree: usize) -> Result<SymSeries> {
    let e0 = p.ground_energy();
    let mut out = SymSeries::zero(p.flavors, max_degree);
    if e0 > max_degree as i64 {
        return Ok(out);
    }
    let budget = max_degree - e0 as usize;
    for lam in admissible_rows(p.particles, p.flavors, p.level, budget) {
        let d = degree(&lam, DegreeMode::Plain { k: p.level })? as usize;
        let s = diagram_schur(&lam, p.flavors, p.level)?;
        out.coeffs[d] = &out.coeffs[d] + &s;
    }
    Ok(out)
}

/// `(A^{kL} s_{k omega_r}(a), E_0)`.
pub fn ground_state_character(p: ModelParams) -> (SymPoly, i64) {
    let s = schur(&Partition::rectangle(p.level, p.remainder()), p.flavors);
    (s.times_det((p.level * p.layers() as i64) as i32), p.ground_energy())
}

/// Character of the shifted space: the Hilbert character divided by
/// `q^{E_0} A^{kL}`, computed diagram by diagram.
pub fn shifted_character(p: ModelParams, max_degree: usize) -> Result<SymSeries> {
    let (n, k) = (p.flavors, p.level);
    let mut out = SymSeries::zero(n, max_degree);
    for lam in admissible_rows(p.particles, n, k, max_degree) {
        let d = degree(&lam, DegreeMode::Shifted { n, k })? as usize;
        let s = diagram_schur(&lam, n, k)?;
        out.coeffs[d] = &out.coeffs[d] + &s;
    }
    Ok(out.times_det(-((k * p.layers() as i64) as i32)))
}

/// Default stabilization cap for degree `d`.
pub fn default_layer_cap(d: usize) -> usize {
    d + 2
}

/// Conformal-limit character with the default cap `L <= d + 2`.
pub fn limit_character(r: usize, n: usize, k: i64, max_degree: usize) -> Result<SymSeries> {
    limit_character_capped(r, n, k, max_degree, None)
}

/// Conformal-limit character: coefficient `d` is the first value repeated at
/// two consecutive `L`, with `L` allowed up to `cap` (default `d + 2`).
pub fn limit_character_capped(
    r: usize,
    n: usize,
    k: i64,
    max_degree: usize,
    cap: Option<usize>,
) -> Result<SymSeries> {
    if n == 0 || r >= n {
        return Err(Error::InvalidParams(format!("need 0 <= r < n, got r={} n={}", r, n)));
    }
    let start = if r == 0 { 1 } else { 0 };
    let at = |layers: usize| shifted_character(ModelParams::new(n * layers + r, n, k)?, max_degree);
    let mut coeffs = Vec::with_capacity(max_degree + 1);
    let mut cache: BTreeMap<usize, SymSeries> = BTreeMap::new();
    for d in 0..=max_degree {
        let limit = cap.unwrap_or_else(|| default_layer_cap(d));
        let mut layers = start;
        let found = loop {
            if layers + 1 > limit {
                break None;
            }
            for l in [layers, layers + 1] {
                if !cache.contains_key(&l) {
                    cache.insert(l, at(l)?);
                }
            }
            if cache[&layers].coeff(d) == cache[&(layers + 1)].coeff(d) {
                break Some(cache[&layers].coeff(d).clone());
            }
            layers += 1;
        };
        match found {
            Some(c) => coeffs.push(c),
            None => return Err(Error::NoStabilization { degree: d, cap: limit }),
        }
    }
    SymSeries::new(n, coeffs)
}

/// `sum mu_i (mu_i - 1) / 2`.
pub fn orbit_energy(mu: &Partition) -> i64 {
    mu.parts().iter().map(|m| m * (m - 1) / 2).sum()
}

/// Partitions of `N` with at most `n` parts of least orbit energy.
pub fn orbit_energy_minimizers(particles: i64, n: usize) -> Vec<Partition> {
    let cands: Vec<Partition> = Partition::all(particles).into_iter().filter(|p| p.len() <= n).collect();
    let best = cands.iter().map(orbit_energy).min().unwrap_or(0);
    cands.into_iter().filter(|p| orbit_energy(p) == best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(big_n: usize, n: usize, k: i64) -> ModelParams {
        ModelParams::new(big_n, n, k).unwrap()
    }

    fn sym(n: usize, terms: &[(&[i32], i64)]) -> SymPoly {
        let mut s = SymPoly::zero(n);
        for (e, c) in terms {
            s = &s + &SymPoly::monomial_symmetric(e, QPoly::from_i64s(&[*c]));
        }
        s
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_character(params(1, 2, 1), 2).unwrap();
        let e1 = sym(2, &[(&[1, 0], 1)]);
        assert!(h.coeffs().iter().all(|c| *c == e1));

        let h = hilbert_character(params(2, 2, 1), 1).unwrap();
        assert_eq!(h.coeff(0), &sym(2, &[(&[1, 1], 1)]));
        assert_eq!(h.coeff(1), &sym(2, &[(&[2, 0], 1), (&[1, 1], 2)]));

        let h = hilbert_character(params(2, 1, 1), 3).unwrap();
        let a2 = sym(1, &[(&[2], 1)]);
        assert_eq!(h.coeffs(), &[SymPoly::zero(1), a2.clone(), a2.clone(), a2.scale(&QPoly::from_i64s(&[2]))]);
    }

    #[test]
    fn k1_examples() {
        assert_eq!(character_k1(2, 2, 1).unwrap(), hilbert_character(params(2, 2, 1), 1).unwrap());
        let c = character_k1(1, 3, 4).unwrap();
        assert!(c.coeffs().iter().all(|x| *x == sym(3, &[(&[1, 0, 0], 1)])));
        let c = character_k1(0, 2, 3).unwrap();
        assert_eq!(c.coeff(0), &SymPoly::one(2));
        assert!(c.coeffs()[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn decomposition_examples() {
        let c = character_via_decomposition(params(1, 2, 1), 1).unwrap();
        let e1 = sym(2, &[(&[1, 0], 1)]);
        assert_eq!(c.coeffs(), &[e1.clone(), e1]);
        assert_eq!(
            character_via_decomposition(params(2, 2, 1), 1).unwrap(),
            hilbert_character(params(2, 2, 1), 1).unwrap()
        );
    }

    #[test]
    fn ground_state_examples() {
        assert_eq!(ground_state_character(params(2, 2, 1)), (sym(2, &[(&[1, 1], 1)]), 0));
        assert_eq!(
            ground_state_character(params(3, 2, 2)),
            (sym(2, &[(&[4, 2], 1), (&[3, 3], 1)]), 2)
        );
        assert_eq!(ground_state_character(params(1, 3, 2)).0, schur(&Partition::rectangle(2, 1), 3));
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(shifted_character(params(2, 2, 1), 0).unwrap().coeff(0), &SymPoly::one(2));
        assert_eq!(
            shifted_character(params(3, 2, 2), 0).unwrap().coeff(0),
            &sym(2, &[(&[2, 0], 1), (&[1, 1], 1)])
        );
        for big_n in 1..=4 {
            let s = shifted_character(params(big_n, 1, 2), 6).unwrap();
            let pc = partition_counts(big_n, 6);
            for d in 0..=6 {
                assert_eq!(s.coeff(d), &SymPoly::constant(1, QPoly::constant(pc[d].clone())));
            }
        }
    }

    #[test]
    fn shifted_matches_divided_hilbert() {
        for (big_n, n, k) in [(2, 2, 1), (3, 2, 1), (3, 2, 2), (4, 3, 1), (4, 2, 2)] {
            let p = params(big_n, n, k);
            let e0 = p.ground_energy() as usize;
            let h = hilbert_character(p, e0 + 4).unwrap();
            let s = shifted_character(p, 4).unwrap();
            let kl = (k * p.layers() as i64) as i32;
            for d in 0..=4 {
                assert_eq!(h.coeff(e0 + d).times_det(-kl), *s.coeff(d));
            }
        }
    }

    #[test]
    fn limit_examples() {
        let c = limit_character(0, 1, 1, 2).unwrap();
        assert_eq!(c.dimensions(), vec![1.into(), 1.into(), 2.into()]);
        let c = limit_character(0, 2, 1, 1).unwrap();
        assert_eq!(c.dimensions(), vec![1.into(), 4.into()]);
        for (r, n, k) in [(1, 2, 1), (2, 3, 2), (0, 3, 2)] {
            let c = limit_character(r, n, k, 0).unwrap();
            assert_eq!(c.coeff(0), &schur(&Partition::rectangle(k, r), n));
        }
    }

    #[test]
    fn limit_cap_is_enforced() {
        assert_eq!(
            limit_character_capped(0, 2, 1, 3, Some(1)),
            Err(Error::NoStabilization { degree: 0, cap: 1 })
        );
    }

    #[test]
    fn orbit_energies() {
        assert_eq!(orbit_energy(&Partition::new(vec![1; 5]).unwrap()), 0);
        assert_eq!(orbit_energy(&Partition::new(vec![2, 1]).unwrap()), 1);
        assert_eq!(orbit_energy_minimizers(5, 2), vec![Partition::new(vec![3, 2]).unwrap()]);
    }
}
