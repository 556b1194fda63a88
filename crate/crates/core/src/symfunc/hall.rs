//! Hall–Littlewood polynomials, Jing operators and Kostka–Foulkes polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{schur, Partition, SymPoly};
use crate::error::{Error, Result};
use crate::poly::{Poly, QPoly};

/// `prod_{i<j} (a_i - q a_j)` in `a_1..a_n, q`.
fn q_vandermonde_numerator(n: usize) -> Poly<BigInt> {
    let mut out = Poly::one(n + 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut ei = vec![0; n + 1];
            ei[i] = 1;
            let mut ej = vec![0; n + 1];
            ej[j] = 1;
            ej[n] = 1;
            let f = Poly::from_terms(n + 1, [(ei, BigInt::one()), (ej, -BigInt::one())]);
            out = &out * &f;
        }
    }
    out
}

/// Schur coefficients of `A(F) / prod_{i<j}(a_i - a_j)` where `A` antisymmetrizes
/// over the a-variables: a term `a^b q^e` with distinct entries contributes
/// `sign * q^e * s_{sort(b) - delta}`.
fn bialternant_quotient(f: &Poly<BigInt>, n: usize) -> BTreeMap<Partition, QPoly> {
    let mut out: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for (e, c) in f.terms() {
        let mut b: Vec<i32> = e[..n].to_vec();
        let mut sign = 1i32;
        for i in 0..n {
            for j in i + 1..n {
                if b[i] == b[j] {
                    sign = 0;
                } else if b[i] < b[j] {
                    sign = -sign;
                }
            }
        }
        if sign == 0 {
            continue;
        }
        b.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<i64> = b
            .iter()
            .enumerate()
            .map(|(i, &x)| x as i64 - (n - 1 - i) as i64)
            .collect();
        let lam = Partition::new(parts).expect("strictly decreasing minus staircase");
        let mut term = QPoly::monomial(e[n] as usize, c.clone());
        if sign < 0 {
            term = -&term;
        }
        let slot = out.entry(lam).or_default();
        *slot = &*slot + &term;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Schur expansion of `P_lam` in `n` variables.
fn hl_p_schur(lam: &Partition, n: usize, base: &Poly<BigInt>) -> Result<BTreeMap<Partition, QPoly>> {
    let mut shift = lam.padded(n).iter().map(|&x| x as i32).collect::<Vec<_>>();
    shift.push(0);
    let f = base.mul_monomial(&shift);
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for x in lam.padded(n) {
        *mult.entry(x).or_default() += 1;
    }
    let mut norm = QPoly::one();
    for &m in mult.values() {
        norm = &norm * &QPoly::q_factorial(m);
    }
    let mut out = BTreeMap::new();
    for (mu, c) in bialternant_quotient(&f, n) {
        out.insert(mu, c.div_exact(&norm)?);
    }
    Ok(out)
}

/// Hall–Littlewood `P_lam(a_1..a_n; q)`.
pub fn hall_littlewood_p(lam: &Partition, n: usize) -> Result<SymPoly> {
    if lam.len() > n {
        return Err(Error::TooManyParts(lam.parts().to_vec(), n));
    }
    let base = q_vandermonde_numerator(n);
    let mut out = SymPoly::zero(n);
    for (mu, c) in hl_p_schur(lam, n, &base)? {
        out = &out + &schur(&mu, n).scale(&c);
    }
    Ok(out)
}

/// Jing operator `S_m` applied to `f`.
pub fn jing(m: i64, f: &SymPoly) -> Result<SymPoly> {
    jing_truncated(m, f, None)
}

/// Jing operator with all powers of q above `qmax` discarded.
///
/// The operator never lowers q-degree, so truncating after each application is exact.
pub fn jing_truncated(m: i64, f: &SymPoly, qmax: Option<usize>) -> Result<SymPoly> {
    let n = f.n();
    let full = f.to_poly();
    let mut num = Poly::zero(n + 1);
    for i in 0..n {
        let sub = full.map_exponents(|e| {
            let mut v = e.to_vec();
            v[n] += v[i];
            v
        });
        let sub = match qmax {
            Some(d) => sub.filter(|e| e[n] as usize <= d),
            None => sub,
        };
        let mut mono = vec![0; n + 1];
        mono[i] = (m + n as i64 - 1) as i32;
        let mut term = sub.mul_monomial(&mono);
        for p in 0..n {
            for q in p + 1..n {
                if p == i || q == i {
                    continue;
                }
                let mut ep = vec![0; n + 1];
                ep[p] = 1;
                let mut eq = vec![0; n + 1];
                eq[q] = 1;
                let lin = Poly::from_terms(n + 1, [(ep, BigInt::one()), (eq, -BigInt::one())]);
                term = &term * &lin;
            }
        }
        num = if i % 2 == 0 { &num + &term } else { &num - &term };
    }
    // clear negative a-exponents with a symmetric monomial before dividing
    let low = num
        .terms()
        .keys()
        .flat_map(|e| e[..n].iter().copied())
        .min()
        .unwrap_or(0)
        .min(0);
    let mut shift = vec![-low; n];
    shift.push(0);
    let mut quo = num.mul_monomial(&shift);
    for p in 0..n {
        for q in p + 1..n {
            quo = quo.div_linear(p, q)?;
        }
    }
    let mut back = vec![low; n];
    back.push(0);
    SymPoly::from_poly(&quo.mul_monomial(&back))
}

/// Transformed Hall–Littlewood `H_mu = S_{mu_1} ... S_{mu_l}(1)`.
pub fn transformed_hl(mu: &Partition, n: usize) -> Result<SymPoly> {
    transformed_hl_truncated(mu, n, None)
}

pub fn transformed_hl_truncated(mu: &Partition, n: usize, qmax: Option<usize>) -> Result<SymPoly> {
    let mut f = SymPoly::one(n);
    for &p in mu.parts().iter().rev() {
        f = jing_truncated(p, &f, qmax)?;
    }
    Ok(f)
}

/// All Kostka–Foulkes polynomials `K_{lam,mu}` with `|lam| = |mu| = size`,
/// from inverting the unitriangular Hall–Littlewood-to-Schur transition.
pub fn kostka_matrix(size: i64) -> Result<BTreeMap<(Partition, Partition), QPoly>> {
    let n = size.max(1) as usize;
    let base = q_vandermonde_numerator(n);
    let parts = Partition::all(size);
    let mut p_in_s = BTreeMap::new();
    for mu in &parts {
        p_in_s.insert(mu.clone(), hl_p_schur(mu, n, &base)?);
    }
    let mut out = BTreeMap::new();
    for lam in &parts {
        let mut rem: BTreeMap<Partition, QPoly> = BTreeMap::new();
        rem.insert(lam.clone(), QPoly::one());
        while let Some((mu, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            for (nu, d) in &p_in_s[&mu] {
                let slot = rem.entry(nu.clone()).or_default();
                *slot = &*slot - &(&c * d);
            }
            rem.retain(|_, v| !v.is_zero());
            out.insert((lam.clone(), mu), c);
        }
        for mu in &parts {
            out.entry((lam.clone(), mu.clone())).or_insert_with(QPoly::zero);
        }
    }
    Ok(out)
}

/// Kostka–Foulkes polynomial `K_{lam,mu}(q)`, defined by `s_lam = sum_mu K_{lam,mu} P_mu`.
pub fn kostka_foulkes(lam: &Partition, mu: &Partition) -> Result<QPoly> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.parts().to_vec(), mu.parts().to_vec()));
    }
    let m = kostka_matrix(lam.size())?;
    Ok(m[&(lam.clone(), mu.clone())].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hl_examples() {
        assert_eq!(hall_littlewood_p(&part(&[1, 1]), 2).unwrap().to_string(), "a1*a2");
        assert_eq!(
            hall_littlewood_p(&part(&[2]), 2).unwrap().to_string(),
            "a1^2 + a1*a2 + a2^2 - q*a1*a2"
        );
        assert_eq!(hall_littlewood_p(&Partition::empty(), 3).unwrap(), SymPoly::one(3));
        assert!(hall_littlewood_p(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn jing_examples() {
        let one = SymPoly::one(2);
        assert_eq!(jing(2, &one).unwrap().to_string(), "a1^2 + a1*a2 + a2^2");
        assert_eq!(jing(0, &one).unwrap(), one);
        let e1 = schur(&part(&[1]), 2);
        assert_eq!(
            jing(1, &e1).unwrap().to_string(),
            "a1*a2 + q*a1^2 + q*a1*a2 + q*a2^2"
        );
    }

    #[test]
    fn transformed_examples() {
        assert_eq!(
            transformed_hl(&part(&[1, 1]), 2).unwrap().schur_expand().unwrap(),
            vec![(part(&[1, 1]), QPoly::one()), (part(&[2]), QPoly::from_i64s(&[0, 1]))]
        );
        for k in 0..4 {
            assert_eq!(transformed_hl(&part(&[k]), 3).unwrap(), schur(&part(&[k]), 3));
        }
    }

    #[test]
    fn kostka_examples() {
        let k = |a: &[i64], b: &[i64]| kostka_foulkes(&part(a), &part(b)).unwrap();
        assert_eq!(k(&[2], &[1, 1]), QPoly::from_i64s(&[0, 1]));
        assert_eq!(k(&[1, 1], &[2]), QPoly::zero());
        assert_eq!(k(&[3, 1], &[3, 1]), QPoly::one());
        // K_{(3),(1,1,1)} = q^3
        assert_eq!(k(&[3], &[1, 1, 1]), QPoly::from_i64s(&[0, 0, 0, 1]));
        // K_{(2,1),(1,1,1)} = q + q^2
        assert_eq!(k(&[2, 1], &[1, 1, 1]), QPoly::from_i64s(&[0, 1, 1]));
        assert!(kostka_foulkes(&part(&[2]), &part(&[1])).is_err());
    }
}
