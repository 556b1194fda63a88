//! Self-checks grouped by topic, shared by the command line and the
//! acceptance harness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::{
    character_k1, character_via_decomposition, ground_state_character, hilbert_character, shifted_character,
    ModelParams,
};
use crate::diagrams::{
    admissible_rows, degree, diagram_schur, enumerate_gt, enumerate_semiinf, highest_weight_pattern,
    pattern_character, DegreeMode,
};
use crate::error::Result;
use crate::fock::{
    finite_character, finite_words, fock_transition, gl_action, to_wave, word_degree, WedgeState,
};
use crate::poly::QPoly;
use crate::symfunc::{
    hall_littlewood_p, kostka_matrix, schur, skew_tableau_count, transformed_hl, Partition, SymPoly,
};
use crate::wavefunc::{
    apply_glnz, apply_hcs, dense_rank, eigenvalue_of, ground_state, kz_residual, operator_matrix,
    spanning_products, SliceBasis, WavePoly,
};
use crate::yangian::{
    capelli_relation_holds, drinfeld_polynomials, drinfeld_ratio, minor_eigenvalue, minor_eigenvalue_twisted,
    polynomial_ratio, verify_transition,
};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// Turns a computation into a check; errors count as failures.
    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {}", e)),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name)?;
        if !self.detail.is_empty() {
            write!(f, "  ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Restrictions of a check grid; `None` keeps the default range.
#[derive(Clone, Copy, Debug, Default)]
pub struct Grid {
    pub particles: Option<usize>,
    pub flavors: Option<usize>,
    pub level: Option<i64>,
    pub degree: Option<usize>,
}

impl Grid {
    fn particles(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.particles.map_or_else(|| (lo..=hi).collect(), |x| vec![x])
    }

    fn flavors(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.flavors.map_or_else(|| (lo..=hi).collect(), |x| vec![x])
    }

    fn levels(&self, lo: i64, hi: i64) -> Vec<i64> {
        self.level.map_or_else(|| (lo..=hi).collect(), |x| vec![x])
    }

    fn degree(&self, default: usize) -> usize {
        self.degree.unwrap_or(default)
    }

    fn models(&self, n_max: usize, flavor_max: usize, level_max: i64) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for big_n in self.particles(1, n_max) {
            for n in self.flavors(1, flavor_max) {
                for k in self.levels(1, level_max) {
                    out.push((big_n, n, k));
                }
            }
        }
        out
    }
}

pub const SUITES: [&str; 7] = ["hl", "characters", "gt", "yangian", "fock", "kz", "cs"];

/// Runs a named suite.
pub fn run_suite(name: &str, grid: &Grid) -> Option<Vec<Check>> {
    let out = match name {
        "hl" => hall_littlewood_checks(grid),
        "characters" => [character_identity_checks(grid), ground_state_checks(grid)].concat(),
        "gt" => stabilization_checks(grid),
        "yangian" => gt_yangian_checks(grid),
        "fock" => fock_checks(grid),
        "kz" => kz_checks(grid),
        "cs" => [calogero_sutherland_checks(grid), spanning_checks(grid)].concat(),
        _ => return None,
    };
    Some(out)
}

/// Checks behind acceptance criterion `i` (1-based), on the default grid.
pub fn criterion(i: usize) -> Option<Vec<Check>> {
    let g = Grid::default();
    Some(match i {
        1 => hall_littlewood_checks(&g),
        2 => character_identity_checks(&g),
        3 => ground_state_checks(&g),
        4 => stabilization_checks(&g),
        5 => gt_yangian_checks(&g),
        6 => fock_checks(&g),
        7 => kz_checks(&g),
        8 => calogero_sutherland_checks(&g),
        9 => spanning_checks(&g),
        _ => return None,
    })
}

fn tag(big_n: usize, n: usize, k: i64) -> String {
    format!("N={} n={} k={}", big_n, n, k)
}

/// Hall–Littlewood specializations, Kostka–Foulkes positivity, and the
/// Schur expansion of the transformed polynomials against the Jing operators.
pub fn hall_littlewood_checks(grid: &Grid) -> Vec<Check> {
    let max_size = grid.degree(6) as i64;
    let mut out = Vec::new();
    for n in grid.flavors(1, 4) {
        let r = (|| {
            let mut bad = Vec::new();
            let mut count = 0;
            for size in 0..=max_size {
                for lam in Partition::all(size).into_iter().filter(|l| l.len() <= n) {
                    let p = hall_littlewood_p(&lam, n)?;
                    let e: Vec<i32> = lam.padded(n).iter().map(|&x| x as i32).collect();
                    if p.eval_q(0) != schur(&lam, n) || p.eval_q(1) != SymPoly::monomial_symmetric(&e, QPoly::one()) {
                        bad.push(format!("{:?}", lam.parts()));
                    }
                    count += 1;
                }
            }
            Ok((bad.is_empty(), format!("{} partitions, failures {:?}", count, bad)))
        })();
        out.push(Check::from_result(format!("hl specializations n={}", n), r));
    }
    for size in 1..=max_size {
        let m = match kostka_matrix(size) {
            Ok(m) => m,
            Err(e) => {
                out.push(Check::new(format!("kostka-foulkes |lam|={}", size), false, format!("error: {}", e)));
                continue;
            }
        };
        let bad: Vec<_> = m.iter().filter(|(_, v)| !v.is_nonnegative()).map(|(k, _)| k.clone()).collect();
        out.push(Check::new(
            format!("kostka-foulkes positive |lam|={}", size),
            bad.is_empty(),
            format!("{} entries", m.len()),
        ));
        let r = (|| {
            let n = size as usize;
            let mut bad = Vec::new();
            for mu in Partition::all(size) {
                let jing = transformed_hl(&mu, n)?;
                let mut expand = SymPoly::zero(n);
                for lam in Partition::all(size) {
                    expand = &expand + &schur(&lam, n).scale(&m[&(lam.clone(), mu.clone())]);
                }
                if expand != jing {
                    bad.push(format!("{:?}", mu.parts()));
                }
            }
            Ok((bad.is_empty(), format!("failures {:?}", bad)))
        })();
        out.push(Check::from_result(format!("transformed hl vs jing |mu|={}", size), r));
    }
    out
}

/// Hilbert character, diagram decomposition and the level-one formula agree.
pub fn character_identity_checks(grid: &Grid) -> Vec<Check> {
    let d = grid.degree(8);
    grid.models(4, 3, 2)
        .into_iter()
        .map(|(big_n, n, k)| {
            let r = (|| {
                let p = ModelParams::new(big_n, n, k)?;
                let h = hilbert_character(p, d)?;
                let dec = character_via_decomposition(p, d)?;
                let mut ok = h == dec;
                if k == 1 {
                    ok &= h == character_k1(big_n, n, d)?;
                }
                Ok((ok, format!("dims {:?}", h.dimensions())))
            })();
            Check::from_result(format!("character identity {} D={}", tag(big_n, n, k), d), r)
        })
        .collect()
}

/// The lowest nonzero coefficient sits at `E_0` and equals the ground-state character.
pub fn ground_state_checks(grid: &Grid) -> Vec<Check> {
    grid.models(4, 3, 2)
        .into_iter()
        .map(|(big_n, n, k)| {
            let r = (|| {
                let p = ModelParams::new(big_n, n, k)?;
                let (want, e0) = ground_state_character(p);
                let h = hilbert_character(p, e0 as usize)?;
                let below = (0..e0 as usize).all(|d| h.coeff(d).is_zero());
                Ok((below && *h.coeff(e0 as usize) == want, format!("E0={}", e0)))
            })();
            Check::from_result(format!("ground states {}", tag(big_n, n, k)), r)
        })
        .collect()
}

/// Shifted characters stabilize in `L` and match semi-infinite pattern counts.
pub fn stabilization_checks(grid: &Grid) -> Vec<Check> {
    let d = grid.degree(6);
    let layers = 6;
    let mut out = Vec::new();
    for n in grid.flavors(1, 3) {
        for k in grid.levels(1, 2) {
            for r in 0..n {
                let r_check = (|| {
                    let at = |l: usize| shifted_character(ModelParams::new(n * l + r, n, k)?, d);
                    let (a, b) = (at(layers)?, at(layers + 1)?);
                    let mut semi_ok = true;
                    for deg in 0..=d {
                        let pats = enumerate_semiinf(r, n, k, deg)?;
                        semi_ok &= pattern_character(&pats, n)? == *a.coeff(deg);
                    }
                    Ok((a == b && semi_ok, format!("dims {:?}", a.dimensions())))
                })();
                out.push(Check::from_result(format!("stabilization n={} k={} r={} L={}", n, k, r, layers), r_check));
            }
        }
    }
    out
}

/// Gelfand–Tsetlin counts, simple spectrum, centrality, Capelli relation,
/// transition maps and Drinfeld polynomials.
pub fn gt_yangian_checks(grid: &Grid) -> Vec<Check> {
    let d = grid.degree(3);
    let mut out = Vec::new();
    for (big_n, n, k) in grid.models(3, 3, 2) {
        let r = (|| {
            let (layers, rem) = (big_n / n, big_n % n);
            let mut notes = Vec::new();
            let mut ok = true;
            let mut patterns = 0;
            for top in admissible_rows(big_n, n, k, d) {
                let pats = enumerate_gt(big_n, n, k, &top);
                patterns += pats.len();
                let inner: Vec<i64> = top.prefix().iter().map(|x| x - k).collect();
                if skew_tableau_count(top.prefix(), &inner, n)? != pats.len() as u64 {
                    ok = false;
                    notes.push(format!("count {}", top));
                }
                let mut seen = BTreeSet::new();
                let mut central = BTreeSet::new();
                for p in &pats {
                    let spec: Vec<String> = (1..=n)
                        .map(|m| minor_eigenvalue_twisted(p, m, layers, rem, n, k).map(|e| e.to_string()))
                        .collect::<Result<_>>()?;
                    central.insert(spec[n - 1].clone());
                    if !seen.insert(spec) {
                        ok = false;
                        notes.push(format!("degenerate {}", p));
                    }
                    for m in 1..=n {
                        if !capelli_relation_holds(p, m)? {
                            ok = false;
                            notes.push(format!("capelli {} m={}", p, m));
                        }
                        minor_eigenvalue(p, m)?;
                    }
                }
                if central.len() > 1 {
                    ok = false;
                    notes.push(format!("quantum determinant not central on {}", top));
                }
            }
            notes.insert(0, format!("{} patterns", patterns));
            Ok((ok, notes.join("; ")))
        })();
        out.push(Check::from_result(format!("gt spectrum {}", tag(big_n, n, k)), r));
    }
    for n in grid.flavors(1, 2) {
        for k in grid.levels(1, 2) {
            let r = (|| {
                let mut checked = 0;
                let mut bad = Vec::new();
                for big_n in n..=4 {
                    for top in admissible_rows(big_n, n, k, d) {
                        for p in enumerate_gt(big_n, n, k, &top) {
                            for m in 1..=n {
                                checked += 1;
                                if !verify_transition(&p, m)? {
                                    bad.push(format!("{} m={}", p, m));
                                }
                            }
                        }
                    }
                }
                Ok((bad.is_empty(), format!("{} cases, failures {:?}", checked, bad)))
            })();
            out.push(Check::from_result(format!("transition n={} k={}", n, k), r));
            let r = (|| {
                let mut checked = 0;
                let mut bad = Vec::new();
                for big_n in 1..=4 - n {
                    let (layers, rem) = (big_n / n, big_n % n);
                    for top in admissible_rows(big_n, n, k, d) {
                        let hw = highest_weight_pattern(&top, big_n, n, k)?;
                        let minors = (1..=n)
                            .map(|m| minor_eigenvalue_twisted(&hw, m, layers, rem, n, k))
                            .collect::<Result<Vec<_>>>()?;
                        let ps = drinfeld_polynomials(&top, rem, n, k)?;
                        for m in 1..n {
                            checked += 1;
                            if drinfeld_ratio(&minors, m) != polynomial_ratio(&ps[m - 1]) {
                                bad.push(format!("{} m={}", top, m));
                            }
                        }
                    }
                }
                Ok((bad.is_empty(), format!("{} cases, failures {:?}", checked, bad)))
            })();
            out.push(Check::from_result(format!("drinfeld ratio n={} k={}", n, k), r));
        }
    }
    out
}

fn sample_actions() -> Vec<(usize, usize, i64)> {
    vec![(1, 1, 0), (1, 2, 0), (2, 1, 1), (2, 2, 1), (1, 2, 2), (2, 1, 0), (1, 1, 2)]
}

fn wedge_basis(big_n: usize, n: usize, d: i64) -> Result<Vec<WedgeState>> {
    let floor = (big_n / n) as i64;
    finite_words(big_n, n, d).iter().map(|w| WedgeState::basis(n, floor, w)).collect()
}

/// Level-one fermionic checks.
pub fn fock_checks(grid: &Grid) -> Vec<Check> {
    let d = grid.degree(6);
    let mut out = Vec::new();
    for big_n in grid.particles(1, 6) {
        for n in grid.flavors(1, 3) {
            let r = (|| {
                let want = shifted_character(ModelParams::new(big_n, n, 1)?, d)?;
                let got = finite_character(big_n, n, d)?;
                Ok((got == want.coeffs(), format!("dims {:?}", want.dimensions())))
            })();
            out.push(Check::from_result(format!("fock character N={} n={} D={}", big_n, n, d), r));
        }
    }
    let acts = |n: usize| -> Vec<(usize, usize, i64)> {
        sample_actions().into_iter().filter(|&(a, b, _)| a <= n && b <= n).collect()
    };
    for big_n in grid.particles(1, 4) {
        for n in grid.flavors(1, 2) {
            let r = (|| {
                let floor = (big_n / n) as i64;
                let mut count = 0;
                for deg in 0..=1 {
                    for s in wedge_basis(big_n, n, deg)? {
                        for &(a, b, m) in &acts(n) {
                            for &(c, e, mp) in &acts(n) {
                                if m + mp > 3 {
                                    continue;
                                }
                                count += 1;
                                let lhs = &gl_action(a, b, m, &gl_action(c, e, mp, &s))
                                    - &gl_action(c, e, mp, &gl_action(a, b, m, &s));
                                let mut rhs = WedgeState::zero(n, floor);
                                if c == b {
                                    rhs = &rhs + &gl_action(a, e, m + mp, &s);
                                }
                                if a == e {
                                    rhs = &rhs - &gl_action(c, b, m + mp, &s);
                                }
                                if lhs != rhs {
                                    return Ok((false, format!("bracket fails on {}", s)));
                                }
                            }
                        }
                    }
                }
                Ok((true, format!("{} brackets", count)))
            })();
            out.push(Check::from_result(format!("fock bracket N={} n={}", big_n, n), r));
            let r = (|| {
                let mut count = 0;
                for deg in 0..=3i64 {
                    let mut hit = BTreeSet::new();
                    for s in wedge_basis(big_n + n, n, deg)? {
                        let img = fock_transition(&s);
                        for (w, _) in img.terms() {
                            if word_degree(w, n) != deg {
                                return Ok((false, format!("degree not preserved on {}", s)));
                            }
                            hit.insert(w.clone());
                        }
                        for (a, b, m) in acts(n) {
                            count += 1;
                            if fock_transition(&gl_action(a, b, m, &s)) != gl_action(a, b, m, &img) {
                                return Ok((false, format!("not equivariant on {}", s)));
                            }
                        }
                    }
                    let target: BTreeSet<_> = finite_words(big_n, n, deg).into_iter().collect();
                    if hit != target {
                        return Ok((false, format!("not surjective in degree {}", deg)));
                    }
                }
                Ok((true, format!("{} commutations", count)))
            })();
            out.push(Check::from_result(format!("fock transition N={} n={}", big_n, n), r));
        }
    }
    for big_n in grid.particles(1, 3) {
        for n in grid.flavors(1, 2) {
            let r = (|| {
                let floor = (big_n / n) as i64;
                let mut count = 0;
                for deg in 0..=2 {
                    for s in wedge_basis(big_n, n, deg)? {
                        let phi = to_wave(&s, big_n)?;
                        for (a, b, m) in acts(n) {
                            let lhs = to_wave(&gl_action(a, b, m, &s), big_n)?;
                            let mut rhs = apply_glnz(a, b, m as u32, &phi);
                            if a == b && m == 0 {
                                rhs = &rhs - &phi.scale(&BigRational::from_integer(floor.into()));
                            }
                            count += 1;
                            if lhs != rhs {
                                return Ok((false, format!("wave map fails on {}", s)));
                            }
                        }
                    }
                }
                Ok((true, format!("{} comparisons", count)))
            })();
            out.push(Check::from_result(format!("fock to wave N={} n={}", big_n, n), r));
        }
    }
    out
}

/// Distinct ground states up to sign: full layers in color order, then every
/// subset of colors for the partial layer.
pub fn ground_state_colorings(big_n: usize, n: usize) -> Vec<Vec<usize>> {
    let full: Vec<usize> = (0..big_n / n).flat_map(|_| 1..=n).collect();
    let r = big_n % n;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let mut c = full.clone();
        c.extend((1..=n).filter(|a| mask & (1 << (a - 1)) != 0));
        out.push(c);
    }
    out
}

/// Ground states are flat for the KZ connection; an excited state is not.
pub fn kz_checks(grid: &Grid) -> Vec<Check> {
    let mut out = Vec::new();
    for (big_n, n, k) in grid.models(4, 3, 2) {
        let r = (|| {
            let mut count = 0;
            for colors in ground_state_colorings(big_n, n) {
                let g = ground_state(&colors, big_n, n, k as u32)?;
                for i in 1..=big_n {
                    count += 1;
                    if !kz_residual(&g, i, k).is_zero() {
                        return Ok((false, format!("residual at i={} colors {:?}", i, colors)));
                    }
                }
            }
            Ok((true, format!("{} residuals", count)))
        })();
        out.push(Check::from_result(format!("kz ground states {}", tag(big_n, n, k)), r));
    }
    let r = (|| {
        let g = ground_state(&[1, 2, 1], 3, 2, 1)?;
        let excited = g.mul(&WavePoly::monomial(3, 2, &[1, 0, 0], &[]));
        Ok((!kz_residual(&excited, 1, 1).is_zero(), "x1 times ground state N=3 n=2 k=1".to_string()))
    })();
    out.push(Check::from_result("kz excited witness", r));
    out
}

/// `sum_i (lam_i - k)(lam_i - k + N + 1 - 2i)`.
pub fn cs_eigenvalue(lam: &[i64], k: i64) -> i64 {
    let big_n = lam.len() as i64;
    lam.iter()
        .enumerate()
        .map(|(i, &x)| (x - k) * (x - k + big_n + 1 - 2 * (i as i64 + 1)))
        .sum()
}

/// Predicted Calogero–Sutherland spectrum at absolute degree `e`:
/// eigenvalue to multiplicity.
pub fn cs_spectrum(p: ModelParams, e: i64) -> Result<BTreeMap<i64, BigInt>> {
    let (big_n, n, k) = (p.particles, p.flavors, p.level);
    let shifted = e - p.ground_energy();
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    if shifted < 0 {
        return Ok(out);
    }
    for lam in admissible_rows(big_n, n, k, shifted as usize) {
        if degree(&lam, DegreeMode::Plain { k })? != e {
            continue;
        }
        let mult = diagram_schur(&lam, n, k)?.dimension();
        *out.entry(cs_eigenvalue(lam.prefix(), k)).or_insert_with(BigInt::zero) += mult;
    }
    Ok(out)
}

fn observed_spectrum_matches(p: ModelParams, e: i64) -> Result<(bool, String)> {
    let (big_n, n, k) = (p.particles, p.flavors, p.level);
    let want = cs_spectrum(p, e)?;
    let mut basis = SliceBasis::new();
    for s in spanning_products(big_n, n, k as usize, e)? {
        basis.insert(&s);
    }
    let dim = basis.rank();
    let total: BigInt = want.values().sum();
    if BigInt::from(dim) != total {
        return Ok((false, format!("slice dimension {} but predicted {}", dim, total)));
    }
    let Some(m) = operator_matrix(&basis, big_n, n, |v| apply_hcs(v, k))? else {
        return Ok((false, "Hamiltonian leaves the slice".into()));
    };
    for (ev, mult) in &want {
        let shifted: Vec<Vec<BigRational>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| if i == j { x - BigRational::from_integer((*ev).into()) } else { x.clone() })
                    .collect()
            })
            .collect();
        let nullity = dim - dense_rank(shifted);
        if BigInt::from(nullity) != *mult {
            return Ok((false, format!("eigenvalue {} has multiplicity {} not {}", ev, nullity, mult)));
        }
    }
    Ok((true, format!("dim {} spectrum {:?}", dim, want)))
}

/// Ground-state eigenvalues, the multiplicity-weighted spectrum against the
/// character, and the full spectrum on low slices.
pub fn calogero_sutherland_checks(grid: &Grid) -> Vec<Check> {
    let mut out = Vec::new();
    for (big_n, n, k) in grid.models(4, 3, 2) {
        let r = (|| {
            let lam = crate::diagrams::minimal_admissible(big_n, n, k);
            let want = BigRational::from_integer(cs_eigenvalue(lam.prefix(), k).into());
            for colors in ground_state_colorings(big_n, n) {
                let g = ground_state(&colors, big_n, n, k as u32)?;
                let got = eigenvalue_of(&g, &apply_hcs(&g, k)?);
                if got.as_ref() != Some(&want) {
                    return Ok((false, format!("colors {:?} gave {:?}", colors, got)));
                }
            }
            Ok((true, format!("eigenvalue {}", want)))
        })();
        out.push(Check::from_result(format!("cs ground states {}", tag(big_n, n, k)), r));
        let d = grid.degree(6);
        let r = (|| {
            let p = ModelParams::new(big_n, n, k)?;
            let e0 = p.ground_energy() as usize;
            let h = hilbert_character(p, e0 + d)?;
            for e in e0..=e0 + d {
                let mut total = BigInt::zero();
                for lam in admissible_rows(big_n, n, k, e - e0) {
                    if degree(&lam, DegreeMode::Plain { k })? == e as i64 {
                        total += enumerate_gt(big_n, n, k, &lam).len();
                    }
                }
                if total != h.coeff(e).dimension() {
                    return Ok((false, format!("degree {}: {} vs {}", e, total, h.coeff(e).dimension())));
                }
            }
            Ok((true, format!("degrees {}..={}", e0, e0 + d)))
        })();
        out.push(Check::from_result(format!("cs multiplicities {}", tag(big_n, n, k)), r));
    }
    for (big_n, n, k) in grid.models(3, 2, 2) {
        let d = grid.degree(2);
        let r = (|| {
            let p = ModelParams::new(big_n, n, k)?;
            let e0 = p.ground_energy();
            let mut notes = Vec::new();
            for e in e0..=e0 + d as i64 {
                let (ok, note) = observed_spectrum_matches(p, e)?;
                if !ok {
                    return Ok((false, format!("degree {}: {}", e, note)));
                }
                notes.push(note);
            }
            Ok((true, notes.join("; ")))
        })();
        out.push(Check::from_result(format!("cs spectrum {}", tag(big_n, n, k)), r));
    }
    out
}

/// Products of Slater determinants span every graded piece.
pub fn spanning_checks(grid: &Grid) -> Vec<Check> {
    let d = grid.degree(4);
    grid.models(3, 2, 2)
        .into_iter()
        .map(|(big_n, n, k)| {
            let r = (|| {
                let p = ModelParams::new(big_n, n, k)?;
                let e0 = p.ground_energy() as usize;
                let h = hilbert_character(p, e0 + d)?;
                let mut ranks = Vec::new();
                for e in e0..=e0 + d {
                    let states = spanning_products(big_n, n, k as usize, e as i64)?;
                    let rank = crate::wavefunc::span_rank(&states, e as i32);
                    if BigInt::from(rank) != h.coeff(e).dimension() {
                        return Ok((false, format!("degree {}: rank {} vs {}", e, rank, h.coeff(e).dimension())));
                    }
                    ranks.push(rank);
                }
                Ok((true, format!("ranks {:?}", ranks)))
            })();
            Check::from_result(format!("spanning {} d<={}", tag(big_n, n, k), d), r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_formula() {
        assert_eq!(cs_eigenvalue(&[1, 1], 1), 0);
        assert_eq!(cs_eigenvalue(&[2, 1, 1], 1), 3);
    }

    #[test]
    fn colorings() {
        assert_eq!(ground_state_colorings(3, 2), vec![vec![1, 2, 1], vec![1, 2, 2]]);
        assert_eq!(ground_state_colorings(2, 3).len(), 3);
    }

    #[test]
    fn small_suites_pass() {
        let g = Grid { particles: Some(2), flavors: Some(2), level: Some(1), degree: Some(2) };
        for name in SUITES {
            for c in run_suite(name, &g).unwrap() {
                assert!(c.passed, "{}", c);
            }
        }
        assert!(run_suite("nope", &g).is_none());
    }
}
