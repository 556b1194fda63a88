//! Schur and skew Schur polynomials by direct semistandard tableau enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{Partition, SymPoly};
use crate::error::{Error, Result};
use crate::poly::{Exp, QPoly};

struct Cell {
    left: Option<usize>,
    above: Option<usize>,
    below: i32,
}

/// Cells of the skew shape `outer/inner` in row-major order.
fn cells(outer: &[i64], inner: &[i64]) -> Vec<Cell> {
    let inside = |i: usize, j: i64| i < outer.len() && inner[i] < j && j <= outer[i];
    let mut index: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut out = Vec::new();
    for i in 0..outer.len() {
        for j in inner[i] + 1..=outer[i] {
            let left = index.get(&(i, j - 1)).copied();
            let above = if i > 0 { index.get(&(i - 1, j)).copied() } else { None };
            let mut below = 0;
            while inside(i + 1 + below as usize, j) {
                below += 1;
            }
            index.insert((i, j), out.len());
            out.push(Cell { left, above, below });
        }
    }
    out
}

/// Calls `visit` with the content vector of every SSYT of shape `outer/inner`
/// with entries in `1..=n`.
pub(crate) fn for_each_tableau(outer: &[i64], inner: &[i64], n: usize, mut visit: impl FnMut(&[i32])) {
    let cs = cells(outer, inner);
    let mut vals = vec![0i32; cs.len()];
    let mut weight = vec![0i32; n];
    fn rec(
        pos: usize,
        cs: &[Cell],
        n: i32,
        vals: &mut [i32],
        weight: &mut [i32],
        visit: &mut dyn FnMut(&[i32]),
    ) {
        if pos == cs.len() {
            visit(weight);
            return;
        }
        let c = &cs[pos];
        let mut lo = 1;
        if let Some(l) = c.left {
            lo = lo.max(vals[l]);
        }
        if let Some(a) = c.above {
            lo = lo.max(vals[a] + 1);
        }
        let hi = n - c.below;
        for v in lo..=hi {
            vals[pos] = v;
            weight[(v - 1) as usize] += 1;
            rec(pos + 1, cs, n, vals, weight, visit);
            weight[(v - 1) as usize] -= 1;
        }
    }
    rec(0, &cs, n as i32, &mut vals, &mut weight, &mut visit);
}

fn check_rows(outer: &[i64], inner: &[i64]) -> Result<Vec<i64>> {
    let mut inn = inner.to_vec();
    if inn.len() > outer.len() {
        if inn[outer.len()..].iter().any(|&x| x != 0) {
            return Err(Error::NotContained { outer: outer.to_vec(), inner: inner.to_vec() });
        }
        inn.truncate(outer.len());
    }
    inn.resize(outer.len(), 0);
    if outer.iter().zip(&inn).any(|(o, i)| i > o) {
        return Err(Error::NotContained { outer: outer.to_vec(), inner: inner.to_vec() });
    }
    Ok(inn)
}

/// Skew Schur polynomial of the rows `outer/inner` (integer rows, possibly
/// negative, both weakly decreasing) in `n` variables.
pub fn skew_schur_rows(outer: &[i64], inner: &[i64], n: usize) -> Result<SymPoly> {
    let inn = check_rows(outer, inner)?;
    let mut full: BTreeMap<Exp, BigInt> = BTreeMap::new();
    for_each_tableau(outer, &inn, n, |w| {
        *full.entry(w.to_vec()).or_default() += 1;
    });
    SymPoly::from_full_terms(
        n,
        full.into_iter().map(|(e, c)| (e, QPoly::constant(c))).collect(),
    )
}

/// Number of SSYT of shape `outer/inner` with entries in `1..=n`.
pub fn skew_tableau_count(outer: &[i64], inner: &[i64], n: usize) -> Result<u64> {
    let inn = check_rows(outer, inner)?;
    let mut count = 0u64;
    for_each_tableau(outer, &inn, n, |_| count += 1);
    Ok(count)
}

pub fn skew_schur(outer: &Partition, inner: &Partition, n: usize) -> Result<SymPoly> {
    skew_schur_rows(outer.parts(), inner.parts(), n)
}

pub fn schur(lam: &Partition, n: usize) -> SymPoly {
    if lam.len() > n {
        return SymPoly::zero(n);
    }
    // only the dominant representatives are needed
    let mut s = SymPoly::zero(n);
    let mut counts: BTreeMap<Exp, BigInt> = BTreeMap::new();
    for_each_tableau(lam.parts(), &vec![0; lam.len()], n, |w| {
        if w.windows(2).all(|p| p[0] >= p[1]) {
            *counts.entry(w.to_vec()).or_default() += BigInt::one();
        }
    });
    for (e, c) in counts {
        s = &s + &SymPoly::monomial_symmetric(&e, QPoly::constant(c));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schur() {
        assert_eq!(schur(&part(&[1]), 2).to_string(), "a1 + a2");
        assert_eq!(schur(&part(&[2, 1]), 2).to_string(), "a1^2*a2 + a1*a2^2");
        assert!(schur(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn small_skew() {
        let s = skew_schur(&part(&[2, 1]), &part(&[1]), 2).unwrap();
        assert_eq!(s.to_string(), "a1^2 + 2*a1*a2 + a2^2");
        assert_eq!(skew_schur(&part(&[2, 1]), &part(&[2, 1]), 3).unwrap(), SymPoly::one(3));
        // a column of height 3 in two variables
        assert!(skew_schur(&part(&[2, 2, 2]), &part(&[1, 1, 1]), 2).unwrap().is_zero());
        assert!(skew_schur(&part(&[1]), &part(&[2]), 2).is_err());
    }

    #[test]
    fn full_and_dominant_routes_agree() {
        for lam in Partition::all(5) {
            for n in 1..=4 {
                let a = schur(&lam, n);
                let b = skew_schur(&lam, &Partition::empty(), n).unwrap();
                assert_eq!(a, b, "{} n={}", lam, n);
            }
        }
    }
}
