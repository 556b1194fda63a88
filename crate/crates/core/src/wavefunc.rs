//! Polynomial wave functions in positions `x_i` and spins `y^a_i`, with the
//! differential operators of the Calogero representation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{render_terms, Exp, Poly};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Polynomial in `x_1..x_N` and `y^a_i` (`1 <= a <= n`, `1 <= i <= N`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WavePoly {
    particles: usize,
    flavors: usize,
    poly: Poly<BigRational>,
}

impl WavePoly {
    pub fn zero(particles: usize, flavors: usize) -> Self {
        WavePoly { particles, flavors, poly: Poly::zero(particles * (flavors + 1)) }
    }

    pub fn one(particles: usize, flavors: usize) -> Self {
        WavePoly { particles, flavors, poly: Poly::one(particles * (flavors + 1)) }
    }

    pub fn from_poly(particles: usize, flavors: usize, poly: Poly<BigRational>) -> Result<Self> {
        if poly.nvars() != particles * (flavors + 1) {
            return Err(Error::LengthMismatch { expected: particles * (flavors + 1), got: poly.nvars() });
        }
        Ok(WavePoly { particles, flavors, poly })
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn flavors(&self) -> usize {
        self.flavors
    }

    pub fn poly(&self) -> &Poly<BigRational> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Index of `x_i` (1-based site).
    pub fn x_var(&self, i: usize) -> usize {
        i - 1
    }

    /// Index of `y^a_i`.
    pub fn y_var(&self, a: usize, i: usize) -> usize {
        self.particles + (i - 1) * self.flavors + (a - 1)
    }

    /// The monomial `x^xs * prod y^{a}_{i}` given as a list of `(a, i)` spin factors.
    pub fn monomial(particles: usize, flavors: usize, xs: &[i32], spins: &[(usize, usize)]) -> Self {
        let mut w = WavePoly::zero(particles, flavors);
        let mut e = vec![0; particles * (flavors + 1)];
        e[..particles].copy_from_slice(xs);
        for &(a, i) in spins {
            e[w.y_var(a, i)] += 1;
        }
        w.poly = Poly::monomial(e, BigRational::one());
        w
    }

    fn with(&self, poly: Poly<BigRational>) -> Self {
        WavePoly { particles: self.particles, flavors: self.flavors, poly }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.with(self.poly.scale(c))
    }

    pub fn mul(&self, other: &WavePoly) -> Self {
        self.with(&self.poly * &other.poly)
    }

    /// Total degree in the x-variables of every term.
    pub fn x_degrees(&self) -> Vec<i32> {
        self.poly.partial_degrees(&(0..self.particles).collect::<Vec<_>>())
    }

    /// Degrees in the spin variables of each site, over all terms.
    pub fn site_spin_degrees(&self, i: usize) -> Vec<i32> {
        let vars: Vec<usize> = (1..=self.flavors).map(|a| self.y_var(a, i)).collect();
        self.poly.partial_degrees(&vars)
    }

    /// Terms of total x-degree `d`.
    pub fn x_slice(&self, d: i32) -> Self {
        let np = self.particles;
        self.with(self.poly.filter(|e| e[..np].iter().sum::<i32>() == d))
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.poly.terms().values().all(|c| c.is_integer())
    }
}

impl Add for &WavePoly {
    type Output = WavePoly;
    fn add(self, rhs: &WavePoly) -> WavePoly {
        self.with(&self.poly + &rhs.poly)
    }
}

impl Sub for &WavePoly {
    type Output = WavePoly;
    fn sub(self, rhs: &WavePoly) -> WavePoly {
        self.with(&self.poly - &rhs.poly)
    }
}

impl fmt::Display for WavePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.poly.nvars())
            .map(|v| {
                if v < self.particles {
                    format!("x{}", v + 1)
                } else {
                    let (i, a) = (v - self.particles).div_rem(&self.flavors);
                    format!("y[{},{}]", a + 1, i + 1)
                }
            })
            .collect();
        let terms = self.poly.terms().iter().rev().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { names[v].clone() } else { format!("{}^{}", names[v], x) })
                .collect();
            (mono.join("*"), c)
        });
        f.write_str(&render_terms(terms))
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut odd = false;
    out.push((p.clone(), odd));
    // Heap's algorithm; every step is one transposition
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            odd = !odd;
            out.push((p.clone(), odd));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `det(x_i^{m_j} y^{a_j}_i)`; `modes` and `colors` list the columns.
pub fn slater(modes: &[i64], colors: &[usize], particles: usize, flavors: usize) -> Result<WavePoly> {
    if modes.len() != particles || colors.len() != particles {
        return Err(Error::LengthMismatch { expected: particles, got: modes.len().min(colors.len()) });
    }
    if colors.iter().any(|&a| a == 0 || a > flavors) {
        return Err(Error::InvalidParams(format!("colors must lie in 1..={}", flavors)));
    }
    let mut out = WavePoly::zero(particles, flavors);
    let nv = particles * (flavors + 1);
    for (perm, odd) in permutations(particles) {
        // row i takes column perm[i]
        let mut e: Exp = vec![0; nv];
        for (i, &col) in perm.iter().enumerate() {
            e[i] += modes[col] as i32;
            e[out.y_var(colors[col], i + 1)] += 1;
        }
        out.poly.add_term(e, if odd { -BigRational::one() } else { BigRational::one() });
    }
    Ok(out)
}

/// `slater(floor((j-1)/n), colors)^k`.
pub fn ground_state(colors: &[usize], particles: usize, flavors: usize, level: u32) -> Result<WavePoly> {
    let modes: Vec<i64> = (0..particles).map(|j| (j / flavors) as i64).collect();
    let s = slater(&modes, colors, particles, flavors)?;
    Ok(s.with(s.poly.pow(level)))
}

/// Product of the Slater determinants of `k` words of `(color, mode)` letters;
/// zero when some word does not have exactly `N` letters.
pub fn product_state(words: &[Vec<(usize, i64)>], particles: usize, flavors: usize) -> Result<WavePoly> {
    let mut out = WavePoly::one(particles, flavors);
    for w in words {
        if w.len() != particles {
            return Ok(WavePoly::zero(particles, flavors));
        }
        let colors: Vec<usize> = w.iter().map(|l| l.0).collect();
        let modes: Vec<i64> = w.iter().map(|l| l.1).collect();
        out = out.mul(&slater(&modes, &colors, particles, flavors)?);
    }
    Ok(out)
}

/// `sum_i x_i^m y^a_i d/dy^b_i`.
pub fn apply_glnz(a: usize, b: usize, m: u32, phi: &WavePoly) -> WavePoly {
    let mut out = WavePoly::zero(phi.particles, phi.flavors);
    for i in 1..=phi.particles {
        let (ya, yb, x) = (phi.y_var(a, i), phi.y_var(b, i), phi.x_var(i));
        for (e, c) in phi.poly.terms() {
            if e[yb] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[yb] -= 1;
            ne[ya] += 1;
            ne[x] += m as i32;
            out.poly.add_term(ne, c * rat(e[yb] as i64));
        }
    }
    out
}

/// `Omega_ij = sum_{a,b} E^a_{b,i} E^b_{a,j}`.
pub fn apply_omega(i: usize, j: usize, phi: &WavePoly) -> WavePoly {
    let mut out = WavePoly::zero(phi.particles, phi.flavors);
    let n = phi.flavors;
    for (e, c) in phi.poly.terms() {
        for a in 1..=n {
            let yaj = phi.y_var(a, j);
            if e[yaj] == 0 {
                continue;
            }
            for b in 1..=n {
                let ybi = phi.y_var(b, i);
                if e[ybi] == 0 {
                    continue;
                }
                let mut ne = e.clone();
                let mut f = e[yaj] as i64;
                ne[yaj] -= 1;
                ne[phi.y_var(b, j)] += 1;
                f *= ne[ybi] as i64;
                ne[ybi] -= 1;
                ne[phi.y_var(a, i)] += 1;
                out.poly.add_term(ne, c * rat(f));
            }
        }
    }
    out
}

fn linear(particles: usize, flavors: usize, i: usize, j: usize) -> Poly<BigRational> {
    let nv = particles * (flavors + 1);
    let mut ei = vec![0; nv];
    ei[i - 1] = 1;
    let mut ej = vec![0; nv];
    ej[j - 1] = 1;
    Poly::from_terms(nv, [(ei, BigRational::one()), (ej, -BigRational::one())])
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(particles: usize, flavors: usize) -> Poly<BigRational> {
    let mut d = Poly::one(particles * (flavors + 1));
    for i in 1..=particles {
        for j in i + 1..=particles {
            d = &d * &linear(particles, flavors, i, j);
        }
    }
    d
}

/// `(k+n) d_i phi prod_{j != i}(x_i - x_j) - sum_{j != i} (Omega_ij + k) phi prod_{l != i,j}(x_i - x_l)`.
pub fn kz_residual(phi: &WavePoly, i: usize, level: i64) -> WavePoly {
    let (np, n) = (phi.particles, phi.flavors);
    let others: Vec<usize> = (1..=np).filter(|&j| j != i).collect();
    let prod_except = |skip: Option<usize>| {
        let mut p = Poly::one(np * (n + 1));
        for &l in &others {
            if Some(l) != skip {
                p = &p * &linear(np, n, i, l);
            }
        }
        p
    };
    let lead = &phi.poly.derivative(i - 1).scale(&rat(level + n as i64)) * &prod_except(None);
    let mut out = phi.with(lead);
    for &j in &others {
        let inner = &apply_omega(i, j, phi).poly + &phi.poly.scale(&rat(level));
        out.poly = &out.poly - &(&inner * &prod_except(Some(j)));
    }
    out
}

fn euler(p: &Poly<BigRational>, var: usize) -> Poly<BigRational> {
    let mut out = Poly::zero(p.nvars());
    for (e, c) in p.terms() {
        if e[var] != 0 {
            out.add_term(e.clone(), c * rat(e[var] as i64));
        }
    }
    out
}

fn divide_by_vandermonde(p: &Poly<BigRational>, particles: usize, times: usize) -> Result<Poly<BigRational>> {
    let mut q = p.clone();
    for _ in 0..times {
        for i in 0..particles {
            for j in i + 1..particles {
                q = q.div_linear(i, j)?;
            }
        }
    }
    Ok(q)
}

/// Higher-spin Calogero–Sutherland Hamiltonian
/// `sum_i D^-1 (x_i d_i)^2 D - 2 sum_{i<j} x_i x_j (Omega_ij + k)/(x_i - x_j)^2
///  - (N-1) sum_i x_i d_i - N(N-1)(2N-1)/6`, with `D` the Vandermonde product.
///
/// Everything is brought over `D^2` and divided back exactly.
pub fn apply_hcs(phi: &WavePoly, level: i64) -> Result<WavePoly> {
    let np = phi.particles;
    let d = vandermonde(np, phi.flavors);
    let dphi = &d * &phi.poly;
    let mut kinetic = Poly::zero(dphi.nvars());
    let mut euler_sum = Poly::zero(dphi.nvars());
    for i in 0..np {
        kinetic = &kinetic + &euler(&euler(&dphi, i), i);
        euler_sum = &euler_sum + &euler(&phi.poly, i);
    }
    let mut total = &kinetic * &d;
    for i in 1..=np {
        for j in i + 1..=np {
            let cof = d.div_linear(i - 1, j - 1)?;
            let inner = &apply_omega(i, j, phi).poly + &phi.poly.scale(&rat(level));
            let mut xx = vec![0; dphi.nvars()];
            xx[i - 1] = 1;
            xx[j - 1] = 1;
            let t = &(&inner.mul_monomial(&xx) * &cof) * &cof;
            total = &total - &t.scale(&rat(2));
        }
    }
    let n = np as i64;
    let rest = &euler_sum.scale(&rat(n - 1)) + &phi.poly.scale(&rat(n * (n - 1) * (2 * n - 1) / 6));
    let d2 = &d * &d;
    total = &total - &(&rest * &d2);
    Ok(phi.with(divide_by_vandermonde(&total, np, 2)?))
}

/// Rational Calogero operator `sum_i D^-1 d_i^2 D - 2 sum_{i<j} (Omega_ij + k)/(x_i - x_j)^2`
/// under the same exact-division scheme; the result may fail to be polynomial.
pub fn apply_calogero(phi: &WavePoly, level: i64) -> Result<WavePoly> {
    let np = phi.particles;
    let d = vandermonde(np, phi.flavors);
    let dphi = &d * &phi.poly;
    let mut kinetic = Poly::zero(dphi.nvars());
    for i in 0..np {
        kinetic = &kinetic + &dphi.derivative(i).derivative(i);
    }
    let mut total = &kinetic * &d;
    for i in 1..=np {
        for j in i + 1..=np {
            let cof = d.div_linear(i - 1, j - 1)?;
            let inner = &apply_omega(i, j, phi).poly + &phi.poly.scale(&rat(level));
            total = &total - &(&(&inner * &cof) * &cof).scale(&rat(2));
        }
    }
    Ok(phi.with(divide_by_vandermonde(&total, np, 2)?))
}

/// If `psi = c * phi` for a rational `c`, returns `c`.
pub fn eigenvalue_of(phi: &WavePoly, psi: &WavePoly) -> Option<BigRational> {
    let (e, c) = phi.poly.terms().iter().next()?;
    let ratio = psi.poly.coeff(e) / c;
    (phi.poly.scale(&ratio) == psi.poly).then_some(ratio)
}

/// Incrementally reduced basis of a span of sparse rational vectors.
///
/// Every basis vector has coefficient one at its pivot and zero at every
/// other pivot, so the coordinates of a vector in the span are its pivot entries.
#[derive(Clone, Debug, Default)]
pub struct SliceBasis {
    rows: Vec<(Exp, BTreeMap<Exp, BigRational>)>,
}

impl SliceBasis {
    pub fn new() -> Self {
        SliceBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &Poly<BigRational>) -> BTreeMap<Exp, BigRational> {
        let mut w: BTreeMap<Exp, BigRational> = v.terms().clone();
        for (p, row) in &self.rows {
            if let Some(c) = w.get(p).cloned() {
                for (e, x) in row {
                    let slot = w.entry(e.clone()).or_insert_with(BigRational::zero);
                    *slot -= &c * x;
                    if slot.is_zero() {
                        w.remove(e);
                    }
                }
            }
        }
        w
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &WavePoly) -> bool {
        let w = self.reduce(&v.poly);
        let Some((p, c)) = w.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        let w: BTreeMap<Exp, BigRational> = w.into_iter().map(|(e, x)| (e, x * &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if let Some(f) = row.get(&p).cloned() {
                for (e, x) in &w {
                    let slot = row.entry(e.clone()).or_insert_with(BigRational::zero);
                    *slot -= &f * x;
                    if slot.is_zero() {
                        row.remove(e);
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &WavePoly) -> Option<Vec<BigRational>> {
        if !self.reduce(&v.poly).is_empty() {
            return None;
        }
        Some(self.rows.iter().map(|(p, _)| v.poly.coeff(p)).collect())
    }

    /// Basis vectors as wave functions of the given shape.
    pub fn vectors(&self, particles: usize, flavors: usize) -> Vec<WavePoly> {
        self.rows
            .iter()
            .map(|(_, row)| WavePoly {
                particles,
                flavors,
                poly: Poly::from_terms(particles * (flavors + 1), row.clone()),
            })
            .collect()
    }
}

/// Rank of the x-degree-`d` slices of `states`.
pub fn span_rank(states: &[WavePoly], d: i32) -> usize {
    let mut basis = SliceBasis::new();
    for s in states {
        basis.insert(&s.x_slice(d));
    }
    basis.rank()
}

/// Integer matrix (one row per state, rows scaled to clear denominators) of the
/// x-degree-`d` slices, as CSV with a header of monomial exponent vectors.
pub fn slice_matrix_csv(states: &[WavePoly], d: i32) -> String {
    let slices: Vec<WavePoly> = states.iter().map(|s| s.x_slice(d)).collect();
    let mut cols: Vec<Exp> = slices.iter().flat_map(|s| s.poly.terms().keys().cloned()).collect();
    cols.sort();
    cols.dedup();
    let mut out = String::new();
    let header: Vec<String> = cols
        .iter()
        .map(|e| format!("\"{}\"", e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for s in &slices {
        let lcm = s.poly.terms().values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let row: Vec<String> = cols
            .iter()
            .map(|e| (s.poly.coeff(e) * BigRational::from_integer(lcm.clone())).to_integer().to_string())
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Words of `N` distinct letters `(color, mode)` with modes `>= 0` summing to `total`.
pub fn words_with_mode_sum(particles: usize, flavors: usize, total: i64) -> Vec<Vec<(usize, i64)>> {
    let mode = |i: usize| (i / flavors) as i64;
    let slots = (total.max(0) as usize + 1) * flavors + particles;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        left: i64,
        cur: &mut Vec<usize>,
        particles: usize,
        slots: usize,
        mode: &dyn Fn(usize) -> i64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let need = particles - cur.len();
        if need == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..slots {
            if (i..i + need).map(mode).sum::<i64>() > left {
                break;
            }
            cur.push(i);
            rec(i + 1, left - mode(i), cur, particles, slots, mode, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, total, &mut cur, particles, slots, &mode, &mut raw);
    for idx in raw {
        out.push(idx.iter().map(|&i| (i % flavors + 1, mode(i))).collect());
    }
    out
}

/// Products of `k` Slater determinants (unordered) of total x-degree `x_degree`.
pub fn spanning_products(particles: usize, flavors: usize, level: usize, x_degree: i64) -> Result<Vec<WavePoly>> {
    let by_sum: Vec<Vec<WavePoly>> = (0..=x_degree.max(0))
        .map(|s| {
            words_with_mode_sum(particles, flavors, s)
                .into_iter()
                .map(|w| product_state(&[w], particles, flavors))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let flat: Vec<(i64, &WavePoly)> = by_sum
        .iter()
        .enumerate()
        .flat_map(|(s, v)| v.iter().map(move |w| (s as i64, w)))
        .collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        left: i64,
        depth: usize,
        idx: &mut Vec<usize>,
        flat: &[(i64, &WavePoly)],
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == 0 {
            if left == 0 {
                out.push(idx.clone());
            }
            return;
        }
        for i in start..flat.len() {
            if flat[i].0 > left {
                continue;
            }
            idx.push(i);
            rec(i, left - flat[i].0, depth - 1, idx, flat, out);
            idx.pop();
        }
    }
    let mut choices = Vec::new();
    if x_degree >= 0 {
        rec(0, x_degree, level, &mut idx, &flat, &mut choices);
    }
    for c in choices {
        let mut p = WavePoly::one(particles, flavors);
        for i in c {
            p = p.mul(flat[i].1);
        }
        if !p.is_zero() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Matrix of a linear operator on the span of `basis` (columns are images),
/// or `None` if some image leaves the span.
pub fn operator_matrix(
    basis: &SliceBasis,
    particles: usize,
    flavors: usize,
    op: impl Fn(&WavePoly) -> Result<WavePoly>,
) -> Result<Option<Vec<Vec<BigRational>>>> {
    let vs = basis.vectors(particles, flavors);
    let dim = vs.len();
    let mut m = vec![vec![BigRational::zero(); dim]; dim];
    for (j, v) in vs.iter().enumerate() {
        let Some(c) = basis.coordinates(&op(v)?) else {
            return Ok(None);
        };
        for (i, x) in c.into_iter().enumerate() {
            m[i][j] = x;
        }
    }
    Ok(Some(m))
}

/// Rank of a dense rational matrix.
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        let pivot: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Sign of the first coefficient, for normalizing states up to sign.
pub fn leading_sign(phi: &WavePoly) -> i32 {
    match phi.poly.terms().values().next_back() {
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(np: usize, n: usize, xs: &[i32], spins: &[(usize, usize)]) -> WavePoly {
        WavePoly::monomial(np, n, xs, spins)
    }

    #[test]
    fn slater_examples() {
        let s = slater(&[0, 1], &[1, 2], 2, 2).unwrap();
        let want = &mono(2, 2, &[0, 1], &[(1, 1), (2, 2)]) - &mono(2, 2, &[1, 0], &[(2, 1), (1, 2)]);
        assert_eq!(s, want);
        assert!(slater(&[1, 1], &[2, 2], 2, 2).unwrap().is_zero());
        assert_eq!(slater(&[0, 2, 3], &[1, 1, 1], 3, 1).unwrap().x_degrees(), vec![5]);
    }

    #[test]
    fn ground_state_examples() {
        let g = ground_state(&[1, 2], 2, 2, 1).unwrap();
        assert_eq!(g, &mono(2, 2, &[0, 0], &[(1, 1), (2, 2)]) - &mono(2, 2, &[0, 0], &[(2, 1), (1, 2)]));
        let g = ground_state(&[1, 2, 3], 3, 3, 2).unwrap();
        assert_eq!(g.x_degrees(), vec![0]);
        // E_0 = 2 for N = 3, n = 2, k = 2
        assert_eq!(ground_state(&[1, 2, 1], 3, 2, 2).unwrap().x_degrees(), vec![2]);
    }

    #[test]
    fn product_examples() {
        let p = product_state(&[vec![(1, 2)], vec![(1, 3)]], 1, 1).unwrap();
        assert_eq!(p, mono(1, 1, &[5], &[(1, 1), (1, 1)]));
        assert!(product_state(&[vec![(1, 2), (1, 0)]], 1, 1).unwrap().is_zero());
        let w = vec![(1, 0), (2, 1)];
        assert_eq!(product_state(&[w], 2, 2).unwrap(), slater(&[0, 1], &[1, 2], 2, 2).unwrap());
    }

    #[test]
    fn glnz_examples() {
        let y = mono(1, 2, &[0], &[(1, 1)]);
        assert_eq!(apply_glnz(1, 1, 1, &y), mono(1, 2, &[1], &[(1, 1)]));
        let s = mono(2, 2, &[0, 0], &[(2, 1), (2, 2)]);
        let want = &mono(2, 2, &[0, 0], &[(1, 1), (2, 2)]) + &mono(2, 2, &[0, 0], &[(2, 1), (1, 2)]);
        assert_eq!(apply_glnz(1, 2, 0, &s), want);
        let g = ground_state(&[1, 2, 1], 3, 2, 2).unwrap();
        let h = apply_glnz(2, 1, 2, &g);
        for i in 1..=3 {
            assert_eq!(h.site_spin_degrees(i), vec![2]);
        }
    }

    #[test]
    fn kz_examples() {
        let g = ground_state(&[1, 2], 2, 2, 1).unwrap();
        assert!(kz_residual(&g, 1, 1).is_zero());
        let g = ground_state(&[1, 2, 1], 3, 2, 1).unwrap();
        for i in 1..=3 {
            assert!(kz_residual(&g, i, 1).is_zero());
        }
        let excited = g.mul(&mono(3, 2, &[1, 0, 0], &[]));
        let r = kz_residual(&excited, 1, 1);
        assert!(!r.is_zero());
        // homogeneous of degree deg + N - 2
        assert_eq!(r.x_degrees(), vec![2 + 3 - 2]);
    }

    #[test]
    fn hcs_examples() {
        let phi = mono(1, 2, &[3], &[(2, 1)]);
        assert_eq!(apply_hcs(&phi, 1).unwrap(), phi.scale(&rat(9)));
        let g = ground_state(&[1, 2], 2, 2, 1).unwrap();
        assert_eq!(eigenvalue_of(&g, &apply_hcs(&g, 1).unwrap()), Some(rat(0)));
        let g = ground_state(&[1, 2, 1], 3, 2, 1).unwrap();
        assert_eq!(eigenvalue_of(&g, &apply_hcs(&g, 1).unwrap()), Some(rat(3)));
    }

    #[test]
    fn span_examples() {
        let g = ground_state(&[1, 2], 2, 2, 1).unwrap();
        assert_eq!(span_rank(&[g.clone()], 0), 1);
        assert_eq!(span_rank(&[g.clone()], 1), 0);
        assert_eq!(span_rank(&[g.clone(), g.scale(&rat(-3)), g], 0), 1);
        let csv = slice_matrix_csv(&[ground_state(&[1, 2], 2, 2, 1).unwrap()], 0);
        assert_eq!(csv.lines().count(), 2);
    }

    #[test]
    fn basis_coordinates() {
        let a = mono(2, 1, &[1, 0], &[]);
        let b = mono(2, 1, &[0, 1], &[]);
        let mut basis = SliceBasis::new();
        assert!(basis.insert(&(&a + &b)));
        assert!(basis.insert(&(&a - &b)));
        assert!(!basis.insert(&a));
        let v = &a.scale(&rat(3)) + &b.scale(&rat(5));
        let coords = basis.coordinates(&v).unwrap();
        let rebuilt = basis
            .vectors(2, 1)
            .iter()
            .zip(&coords)
            .fold(WavePoly::zero(2, 1), |acc, (w, c)| &acc + &w.scale(c));
        assert_eq!(rebuilt, v);
        assert!(basis.coordinates(&mono(2, 1, &[2, 0], &[])).is_none());
    }

    #[test]
    fn spanning_products_small() {
        assert_eq!(words_with_mode_sum(2, 2, 1).len(), 4);
        assert_eq!(words_with_mode_sum(2, 1, 0).len(), 0);
        // N = 1, n = 1, k = 2: x^d y^2 arises from every split of d
        let p = spanning_products(1, 1, 2, 3).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(span_rank(&p, 3), 1);
    }

    #[test]
    fn dense_rank_examples() {
        let m = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(dense_rank(m), 1);
        assert_eq!(dense_rank(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]), 2);
    }

    #[test]
    fn calogero_on_ground_state_is_polynomial() {
        let g = ground_state(&[1, 2, 1], 3, 2, 1).unwrap();
        assert!(apply_calogero(&g, 1).is_ok());
    }
}
