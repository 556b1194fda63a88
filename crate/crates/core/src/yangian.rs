//! Spectral data of the Yangian action: Capelli and quantum-minor eigenvalues,
//! Drinfeld polynomials and the transition identities.
//!
//! Eigenvalues are kept as multisets of linear factors in the spectral
//! parameter `u`, so products, quotients and equality are exact.

use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagrams::{pattern_transition, skew_diagram, top_boxes_of_height, Direction, GTPattern, WeightRow};
use crate::error::{Error, Result};

/// `scalar * prod (u - num_i) / prod (u - den_j)` with common roots cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRational {
    scalar: BigRational,
    num: Vec<BigRational>,
    den: Vec<BigRational>,
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl LinearRational {
    pub fn new(scalar: BigRational, mut num: Vec<BigRational>, mut den: Vec<BigRational>) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::InvalidParams("scalar must be nonzero".into()));
        }
        num.sort();
        den.sort();
        let (mut i, mut j) = (0, 0);
        let (mut n2, mut d2) = (Vec::new(), Vec::new());
        while i < num.len() || j < den.len() {
            if j == den.len() || (i < num.len() && num[i] < den[j]) {
                n2.push(num[i].clone());
                i += 1;
            } else if i == num.len() || den[j] < num[i] {
                d2.push(den[j].clone());
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        Ok(LinearRational { scalar, num: n2, den: d2 })
    }

    pub fn one() -> Self {
        LinearRational { scalar: BigRational::one(), num: Vec::new(), den: Vec::new() }
    }

    /// Monic ratio with integer roots.
    pub fn from_int_roots(num: impl IntoIterator<Item = i64>, den: impl IntoIterator<Item = i64>) -> Self {
        Self::new(BigRational::one(), num.into_iter().map(int).collect(), den.into_iter().map(int).collect())
            .expect("scalar is one")
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn numerator_roots(&self) -> &[BigRational] {
        &self.num
    }

    pub fn denominator_roots(&self) -> &[BigRational] {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.num.is_empty() && self.den.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn has_integer_roots(&self) -> bool {
        self.num.iter().chain(&self.den).all(|r| r.is_integer())
    }

    /// `f(u + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        LinearRational {
            scalar: self.scalar.clone(),
            num: self.num.iter().map(|r| r - c).collect(),
            den: self.den.iter().map(|r| r - c).collect(),
        }
    }

    pub fn shift_int(&self, c: i64) -> Self {
        self.shift(&int(c))
    }

    pub fn inverse(&self) -> Self {
        LinearRational { scalar: self.scalar.recip(), num: self.den.clone(), den: self.num.clone() }
    }
}

impl Mul for &LinearRational {
    type Output = LinearRational;
    fn mul(self, rhs: &LinearRational) -> LinearRational {
        let num = self.num.iter().chain(&rhs.num).cloned().collect();
        let den = self.den.iter().chain(&rhs.den).cloned().collect();
        LinearRational::new(&self.scalar * &rhs.scalar, num, den).expect("nonzero scalars")
    }
}

impl Div for &LinearRational {
    type Output = LinearRational;
    fn div(self, rhs: &LinearRational) -> LinearRational {
        self * &rhs.inverse()
    }
}

fn factor(r: &BigRational) -> String {
    if r.is_zero() {
        "u".into()
    } else if r.is_negative() {
        format!("(u + {})", -r)
    } else {
        format!("(u - {})", r)
    }
}

impl fmt::Display for LinearRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self.num.iter().map(factor).collect();
        let den: Vec<String> = self.den.iter().map(factor).collect();
        let mut s = String::new();
        if !self.scalar.is_one() || num.is_empty() {
            s.push_str(&self.scalar.to_string());
            if !num.is_empty() {
                s.push_str(" * ");
            }
        }
        s.push_str(&num.join("*"));
        if !den.is_empty() {
            s.push_str(" / ");
            s.push_str(&den.join("*"));
        }
        f.write_str(&s)
    }
}

/// Eigenvalue `prod_i (u - mu_i + i + m - n - N)` of the Capelli determinant on
/// the irreducible module of highest weight `mu`.
pub fn capelli_eigenvalue(mu: &[i64], m: usize, n: usize, big_n: usize) -> Result<LinearRational> {
    let len = (n + big_n).checked_sub(m).ok_or_else(|| Error::InvalidParams("m > n + N".into()))?;
    if mu.len() != len {
        return Err(Error::LengthMismatch { expected: len, got: mu.len() });
    }
    let shift = n as i64 + big_n as i64 - m as i64;
    Ok(LinearRational::from_int_roots(
        mu.iter().enumerate().map(|(i, &x)| x - (i as i64 + 1) + shift),
        [],
    ))
}

fn check_minor(p: &GTPattern, m: usize) -> Result<()> {
    if m == 0 || m > p.height() {
        return Err(Error::InvalidParams(format!("need 1 <= m <= {}, got {}", p.height(), m)));
    }
    Ok(())
}

/// Eigenvalue of the quantum minor `A_m(u)` on a finite pattern:
/// `prod_i (u - row_{m+1,i} - N + i) / (u - row_{1,i} - N + i)`.
pub fn minor_eigenvalue(p: &GTPattern, m: usize) -> Result<LinearRational> {
    check_minor(p, m)?;
    let big_n = p.top().len().ok_or(Error::NeedsFinite)?;
    let roots = |row: &WeightRow| -> Vec<i64> {
        (1..=big_n).map(|i| row.get(i) + big_n as i64 - i as i64).collect()
    };
    Ok(LinearRational::from_int_roots(roots(p.row(m + 1)), roots(p.row(1))))
}

/// Gamma-ratio factor of the twisted minors, evaluated at `u - k`:
/// `prod_{j<m} prod_{t<L} (u - (k + j - (n+k)(t+1))) / (u - (j - (n+k)(t+1)))`.
fn twist_factor(m: usize, layers: usize, n: usize, k: i64) -> LinearRational {
    let nk = n as i64 + k;
    let mut num = Vec::new();
    let mut den = Vec::new();
    for j in 0..m as i64 {
        for t in 0..layers as i64 {
            num.push(k + j - nk * (t + 1));
            den.push(j - nk * (t + 1));
        }
    }
    LinearRational::from_int_roots(num, den)
}

/// Eigenvalue of the twisted minor `A~_m(u)` on a finite pattern of length `nL + r`.
pub fn minor_eigenvalue_twisted(
    p: &GTPattern,
    m: usize,
    layers: usize,
    r: usize,
    n: usize,
    k: i64,
) -> Result<LinearRational> {
    check_minor(p, m)?;
    let big_n = p.top().len().ok_or(Error::NeedsFinite)?;
    if big_n != n * layers + r || p.height() != n || r >= n {
        return Err(Error::InvalidParams(format!(
            "pattern of length {} and height {} does not match n={} L={} r={}",
            big_n,
            p.height(),
            n,
            layers,
            r
        )));
    }
    let lift = k * layers as i64;
    let roots = |row: &WeightRow| -> Vec<i64> {
        (1..=big_n).map(|i| row.get(i) - lift + r as i64 - i as i64).collect()
    };
    let plain = LinearRational::from_int_roots(roots(p.row(m + 1)), roots(p.row(1)));
    Ok(&plain * &twist_factor(m, layers, n, k))
}

/// Eigenvalue of `A~_m(u)` on a semi-infinite pattern, regularized against the
/// vacuum pattern.
pub fn minor_eigenvalue_semiinf(p: &GTPattern, m: usize) -> Result<LinearRational> {
    check_minor(p, m)?;
    let t = *p.top().tail().ok_or(Error::NeedsTail)?;
    let (n, k, r) = (t.n, t.k, t.r);
    let vac = |i: usize| WeightRow::vacuum_row(n, k, r, i);
    let (vac1, vacm) = (vac(1), vac(m + 1));
    let span = p.rows().iter().map(|row| row.prefix().len()).max().unwrap_or(0).max(r);
    let root = |x: i64, i: usize| x + r as i64 - i as i64;
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for i in 1..=span {
        num.push(root(p.row(m + 1).get(i), i));
        den.push(root(p.row(1).get(i), i));
        if i > r {
            den.push(root(vacm.get(i), i));
            num.push(root(vac1.get(i), i));
        }
    }
    Ok(LinearRational::from_int_roots(num, den))
}

/// Drinfeld polynomials `P_1..P_{n-1}` of the module with top row `lam`:
/// `P_m(u) = prod (u - s + i - j)` over the top boxes `(i, j)` of height-`m`
/// columns of the skew diagram `lam / (lam - k)`.
///
/// For semi-infinite rows `s = r`; for a finite row of length `nL + r`,
/// `s = r - kL`, matching the twisted minors.
pub fn drinfeld_polynomials(lam: &WeightRow, r: usize, n: usize, k: i64) -> Result<Vec<LinearRational>> {
    let s = match (lam.tail(), lam.len()) {
        (Some(t), _) => {
            if t.n != n || t.k != k || t.r != r || t.offset != 0 {
                return Err(Error::BadTail);
            }
            r as i64
        }
        (None, Some(big_n)) => {
            if big_n % n != r {
                return Err(Error::InvalidParams(format!("length {} is not {} mod {}", big_n, r, n)));
            }
            r as i64 - k * (big_n / n) as i64
        }
        _ => unreachable!(),
    };
    let diagram = skew_diagram(lam, &lam.shift(k, Direction::Down))?;
    Ok((1..n)
        .map(|m| {
            LinearRational::from_int_roots(
                top_boxes_of_height(&diagram, m).into_iter().map(|(i, j)| s - i as i64 + j),
                [],
            )
        })
        .collect())
}

/// `A~_{m-1}(u-1) A~_{m+1}(u) / (A~_m(u-1) A~_m(u))` from a list of minor
/// eigenvalues indexed `1..=n`.
pub fn drinfeld_ratio(minors: &[LinearRational], m: usize) -> LinearRational {
    let get = |i: usize| if i == 0 { LinearRational::one() } else { minors[i - 1].clone() };
    let num = &get(m - 1).shift_int(-1) * &get(m + 1);
    let den = &get(m).shift_int(-1) * &get(m);
    &num / &den
}

/// `P(u-1) / P(u)`.
pub fn polynomial_ratio(p: &LinearRational) -> LinearRational {
    &p.shift_int(-1) / p
}

/// Compares the twisted eigenvalue of a pattern of length `N + n` with that of
/// its image under the transition map; patterns with a non-cuttable top pass.
pub fn verify_transition(p: &GTPattern, m: usize) -> Result<bool> {
    let n = p.height();
    let big = p.top().len().ok_or(Error::NeedsFinite)?;
    if big < n {
        return Err(Error::InvalidParams(format!("length {} is shorter than n={}", big, n)));
    }
    let Some(image) = pattern_transition(p) else {
        return Ok(true);
    };
    let (layers, r) = (big / n - 1, big % n);
    let k = p.level();
    Ok(minor_eigenvalue_twisted(p, m, layers + 1, r, n, k)? == minor_eigenvalue_twisted(&image, m, layers, r, n, k)?)
}

/// The minor/Capelli relation `A_m(u - n) = C_m(u - m) (u-m+1)...(u) / C_0(u)`
/// on a finite pattern, with rows padded by zeros to the Capelli lengths.
pub fn capelli_relation_holds(p: &GTPattern, m: usize) -> Result<bool> {
    let n = p.height();
    let big_n = p.top().len().ok_or(Error::NeedsFinite)?;
    let pad = |row: &WeightRow, len: usize| row.take(len);
    let cm = capelli_eigenvalue(&pad(p.row(m + 1), n + big_n - m), m, n, big_n)?;
    let c0 = capelli_eigenvalue(&pad(p.row(1), n + big_n), 0, n, big_n)?;
    let rising = LinearRational::from_int_roots(0..m as i64, []);
    let rhs = &(&cm.shift_int(-(m as i64)) * &rising) / &c0;
    Ok(minor_eigenvalue(p, m)?.shift_int(-(n as i64)) == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{admissible_rows, enumerate_gt, enumerate_semiinf, highest_weight_pattern};

    fn row(v: &[i64]) -> WeightRow {
        WeightRow::finite(v.to_vec()).unwrap()
    }

    fn pat(rows: &[&[i64]], k: i64) -> GTPattern {
        GTPattern::new(rows.iter().map(|r| row(r)).collect(), k).unwrap()
    }

    #[test]
    fn cancellation_and_rendering() {
        let f = LinearRational::from_int_roots([1, 2, 2], [2, 3]);
        assert_eq!(f, LinearRational::from_int_roots([1, 2], [3]));
        assert_eq!(f.to_string(), "(u - 1)*(u - 2) / (u - 3)");
        assert_eq!(LinearRational::from_int_roots([0, -2], []).to_string(), "(u + 2)*u");
        assert!((&f / &f).is_one());
        assert_eq!(LinearRational::one().to_string(), "1");
    }

    #[test]
    fn capelli_examples() {
        assert_eq!(
            capelli_eigenvalue(&[0, 0, 0], 0, 2, 1).unwrap(),
            LinearRational::from_int_roots([2, 1, 0], [])
        );
        assert_eq!(capelli_eigenvalue(&[1, 0], 0, 1, 1).unwrap(), LinearRational::from_int_roots([2, 0], []));
        assert_eq!(
            capelli_eigenvalue(&[1, 0, 0], 0, 2, 1).unwrap(),
            LinearRational::from_int_roots([3, 1, 0], [])
        );
        assert!(capelli_eigenvalue(&[1, 0], 0, 2, 1).is_err());
    }

    #[test]
    fn minor_examples() {
        let a = pat(&[&[1], &[0], &[0]], 1);
        let b = pat(&[&[1], &[1], &[0]], 1);
        let u_over = LinearRational::from_int_roots([0], [1]);
        assert_eq!(minor_eigenvalue(&a, 1).unwrap(), u_over);
        assert!(minor_eigenvalue(&b, 1).unwrap().is_one());
        assert_eq!(minor_eigenvalue(&a, 2).unwrap(), u_over);
        assert_eq!(minor_eigenvalue(&b, 2).unwrap(), u_over);
        assert!(minor_eigenvalue(&a, 3).is_err());
    }

    #[test]
    fn twisted_examples() {
        let a = pat(&[&[1], &[0], &[0]], 1);
        assert_eq!(minor_eigenvalue_twisted(&a, 1, 0, 1, 2, 1).unwrap(), minor_eigenvalue(&a, 1).unwrap());
        let p = pat(&[&[1, 1], &[1, 0], &[0, 0]], 1);
        let t = minor_eigenvalue_twisted(&p, 1, 1, 0, 2, 1).unwrap();
        assert!(t.numerator_roots().len() + t.denominator_roots().len() <= 3);
        assert_eq!(t.numerator_roots().len(), t.denominator_roots().len());
        assert!(t.has_integer_roots());
    }

    #[test]
    fn transition_example() {
        let p = pat(&[&[2, 2, 1, 1], &[2, 1, 1, 0], &[1, 1, 0, 0]], 1);
        assert!(verify_transition(&p, 1).unwrap());
        assert!(verify_transition(&p, 2).unwrap());
        let q = enumerate_gt(4, 2, 1, &row(&[3, 2, 2, 1])).remove(0);
        assert!(verify_transition(&q, 1).unwrap());
    }

    #[test]
    fn transition_exhaustive() {
        for n in 1..=2 {
            for k in 1..=2 {
                for big in n..=4 {
                    for top in admissible_rows(big, n, k, 3) {
                        for p in enumerate_gt(big, n, k, &top) {
                            for m in 1..=n {
                                assert!(verify_transition(&p, m).unwrap(), "{} m={}", p, m);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn capelli_relation() {
        for (big_n, n, k) in [(1, 2, 1), (2, 2, 1), (2, 3, 2), (3, 2, 2), (3, 3, 1)] {
            for top in admissible_rows(big_n, n, k, 2) {
                for p in enumerate_gt(big_n, n, k, &top) {
                    for m in 1..=n {
                        assert!(capelli_relation_holds(&p, m).unwrap(), "{} m={}", p, m);
                    }
                }
            }
        }
    }

    #[test]
    fn semiinfinite_vacuum_and_stabilization() {
        for (n, k) in [(2, 1), (2, 2), (3, 1)] {
            for r in 0..n {
                for d in 0..=2 {
                    for p in enumerate_semiinf(r, n, k, d).unwrap() {
                        for m in 1..=n {
                            let e = minor_eigenvalue_semiinf(&p, m).unwrap();
                            if d == 0 && r == 0 {
                                assert!(e.is_one(), "vacuum r={} n={} k={} m={}: {}", r, n, k, m, e);
                            }
                            assert_eq!(e.numerator_roots().len(), e.denominator_roots().len());
                            let l0 = p.min_layers().unwrap().max(1);
                            for layers in [l0, l0 + 1, l0 + 3] {
                                let t = p.truncate(layers).unwrap();
                                assert_eq!(
                                    minor_eigenvalue_twisted(&t, m, layers, r, n, k).unwrap(),
                                    e,
                                    "{} m={} L={}",
                                    p,
                                    m,
                                    layers
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn drinfeld_examples() {
        let v = WeightRow::vacuum(2, 1, 0);
        assert!(drinfeld_polynomials(&v, 0, 2, 1).unwrap()[0].is_one());
        let v = WeightRow::vacuum(2, 1, 1);
        assert_eq!(drinfeld_polynomials(&v, 1, 2, 1).unwrap()[0], LinearRational::from_int_roots([1], []));
        let v = WeightRow::vacuum(2, 2, 0);
        assert_eq!(v.take(4), vec![0, 0, -2, -2]);
        assert!(drinfeld_polynomials(&v, 0, 2, 2).unwrap()[0].is_one());
    }

    #[test]
    fn drinfeld_ratio_on_highest_weight() {
        for (big_n, n, k) in [(1, 2, 1), (2, 2, 1), (2, 2, 2), (1, 3, 1), (3, 3, 2), (3, 2, 1)] {
            let (layers, r) = (big_n / n, big_n % n);
            for top in admissible_rows(big_n, n, k, 3) {
                let hw = highest_weight_pattern(&top, big_n, n, k).unwrap();
                let minors: Vec<_> = (1..=n)
                    .map(|m| minor_eigenvalue_twisted(&hw, m, layers, r, n, k).unwrap())
                    .collect();
                let ps = drinfeld_polynomials(&top, r, n, k).unwrap();
                for m in 1..n {
                    assert_eq!(drinfeld_ratio(&minors, m), polynomial_ratio(&ps[m - 1]), "{} m={}", top, m);
                }
            }
        }
    }

    #[test]
    fn drinfeld_ratio_semiinfinite() {
        for (n, k) in [(2, 1), (3, 1), (2, 2)] {
            for r in 0..n {
                for d in 0..=3 {
                    for p in enumerate_semiinf(r, n, k, d).unwrap() {
                        let hw = highest_weight_pattern(p.top(), 0, n, k).unwrap();
                        if hw != p {
                            continue;
                        }
                        let minors: Vec<_> = (1..=n).map(|m| minor_eigenvalue_semiinf(&hw, m).unwrap()).collect();
                        let ps = drinfeld_polynomials(hw.top(), r, n, k).unwrap();
                        for m in 1..n {
                            assert_eq!(drinfeld_ratio(&minors, m), polynomial_ratio(&ps[m - 1]), "{} m={}", p, m);
                        }
                    }
                }
            }
        }
    }
}
