//! Fermionic Fock spaces for level one: finite wedges with a mode floor,
//! semi-infinite wedges, the loop algebra action, and the map to wave functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::ModelParams;
use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::symfunc::SymPoly;
use crate::wavefunc::{slater, WavePoly};

/// A fermion mode `psi^color_mode`.
///
/// Letters are ordered by decreasing mode, then increasing color; canonical
/// words are strictly increasing in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub color: usize,
    pub mode: i64,
}

impl Letter {
    pub fn new(color: usize, mode: i64) -> Self {
        Letter { color, mode }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        other.mode.cmp(&self.mode).then(self.color.cmp(&other.color))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ψ[{},{}]", self.color, self.mode)
    }
}

pub type Word = Vec<Letter>;

/// Sorts a wedge word into canonical order, returning the sign of the
/// permutation, or `None` if a letter repeats.
pub fn normalize_wedge(word: &[Letter]) -> Option<(i32, Word)> {
    let mut w = word.to_vec();
    let mut sign = 1;
    for i in 0..w.len() {
        for j in (i + 1..w.len()).rev() {
            match w[j - 1].cmp(&w[j]) {
                Ordering::Greater => {
                    w.swap(j - 1, j);
                    sign = -sign;
                }
                Ordering::Equal => return None,
                Ordering::Less => {}
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((sign, w))
}

fn render_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("^")
}

fn render_sum<'a, K: 'a>(terms: impl Iterator<Item = (&'a K, &'a BigInt)>, show: impl Fn(&K) -> String) -> String {
    let mut out = String::new();
    for (w, c) in terms {
        let body = show(w);
        let mag = c.abs();
        let coef = if mag.is_one() { body } else { format!("{}*{}", mag, body) };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&coef);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn add_into<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    *terms.entry(key).or_insert_with(BigInt::zero) += c;
}

fn prune<K: Ord>(terms: &mut BTreeMap<K, BigInt>) {
    terms.retain(|_, c| !c.is_zero());
}

/// Finite wedge space with modes `>= -floor` (`floor = 0` is the unshifted model).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeState {
    flavors: usize,
    floor: i64,
    terms: BTreeMap<Word, BigInt>,
}

impl WedgeState {
    pub fn zero(flavors: usize, floor: i64) -> Self {
        WedgeState { flavors, floor, terms: BTreeMap::new() }
    }

    /// The wedge of `word` (any order), checked against colors and floor.
    pub fn basis(flavors: usize, floor: i64, word: &[Letter]) -> Result<Self> {
        let mut s = WedgeState::zero(flavors, floor);
        s.add_word(word, BigInt::one())?;
        Ok(s)
    }

    /// Adds `c` times the wedge of `word`.
    pub fn add_word(&mut self, word: &[Letter], c: BigInt) -> Result<()> {
        if let Some(l) = word.iter().find(|l| l.color == 0 || l.color > self.flavors || l.mode < -self.floor) {
            return Err(Error::InvalidParams(format!("letter {} outside the model", l)));
        }
        if let Some((sign, w)) = normalize_wedge(word) {
            add_into(&mut self.terms, w, c * sign);
            prune(&mut self.terms);
        }
        Ok(())
    }

    pub fn flavors(&self) -> usize {
        self.flavors
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|x| *x *= c);
        prune(&mut out.terms);
        out
    }
}

impl Add for &WedgeState {
    type Output = WedgeState;
    fn add(self, rhs: &WedgeState) -> WedgeState {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            add_into(&mut out.terms, w.clone(), c.clone());
        }
        prune(&mut out.terms);
        out
    }
}

impl Sub for &WedgeState {
    type Output = WedgeState;
    fn sub(self, rhs: &WedgeState) -> WedgeState {
        self + &rhs.scale(&-BigInt::one())
    }
}

impl fmt::Display for WedgeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self.terms.iter(), |w: &Word| render_word(w)))
    }
}

/// Replaces letter `p` of a canonical word and re-sorts.
fn substitute(word: &[Letter], p: usize, new: Letter) -> Option<(i32, Word)> {
    let mut w = word.to_vec();
    w[p] = new;
    normalize_wedge(&w)
}

/// Loop algebra action `E^a_b t^m`: every `(b, l)` becomes `(a, l + m)`,
/// with the normal-ordering constant `-floor` on the diagonal at `m = 0`.
pub fn gl_action(a: usize, b: usize, m: i64, s: &WedgeState) -> WedgeState {
    let mut out = WedgeState::zero(s.flavors, s.floor);
    for (w, c) in &s.terms {
        for (p, l) in w.iter().enumerate() {
            if l.color != b {
                continue;
            }
            if let Some((sign, nw)) = substitute(w, p, Letter::new(a, l.mode + m)) {
                add_into(&mut out.terms, nw, c * sign);
            }
        }
        if a == b && m == 0 && s.floor != 0 {
            add_into(&mut out.terms, w.clone(), -c * s.floor);
        }
    }
    prune(&mut out.terms);
    out
}

/// `sum_j floor((j-1)/n)` for `N` letters, the lowest total shifted mode.
pub fn ground_energy(particles: usize, flavors: usize) -> i64 {
    ModelParams::new(particles, flavors, 1).map_or(0, |p| p.ground_energy())
}

/// Energy degree of a word in the model with `L = floor(N/n)`:
/// `sum (m + L) - E_0`.
pub fn word_degree(word: &[Letter], flavors: usize) -> i64 {
    let floor = (word.len() / flavors) as i64;
    word.iter().map(|l| l.mode + floor).sum::<i64>() - ground_energy(word.len(), flavors)
}

/// Flavor weight of a word: color counts minus `L`.
pub fn word_weight(word: &[Letter], flavors: usize, floor: i64) -> Vec<i64> {
    let mut w = vec![-floor; flavors];
    for l in word {
        w[l.color - 1] += 1;
    }
    w
}

/// Canonical words of `N` letters with modes `>= -floor(N/n)` and degree `d`.
pub fn finite_words(particles: usize, flavors: usize, d: i64) -> Vec<Word> {
    let floor = (particles / flavors) as i64;
    let budget = ground_energy(particles, flavors) + d;
    if budget < 0 {
        return Vec::new();
    }
    // slot i has shifted mode i / n and color n - i % n
    let slots = ((budget + 1) as usize) * flavors + particles;
    let energy = |i: usize| (i / flavors) as i64;
    let min_rest = |start: usize, count: usize| (start..start + count).map(energy).sum::<i64>();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(particles);
    fn rec(
        start: usize,
        left: i64,
        chosen: &mut Vec<usize>,
        particles: usize,
        slots: usize,
        energy: &dyn Fn(usize) -> i64,
        min_rest: &dyn Fn(usize, usize) -> i64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let need = particles - chosen.len();
        if need == 0 {
            if left == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        for i in start..slots {
            if min_rest(i, need) > left {
                break;
            }
            chosen.push(i);
            rec(i + 1, left - energy(i), chosen, particles, slots, energy, min_rest, out);
            chosen.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, budget, &mut chosen, particles, slots, &energy, &min_rest, &mut raw);
    for idx in raw {
        let mut w: Word = idx
            .iter()
            .map(|&i| Letter::new(flavors - i % flavors, energy(i) - floor))
            .collect();
        w.sort();
        out.push(w);
    }
    out.sort();
    out
}

/// Graded character of the finite model from its word basis, degrees `0..=max_degree`.
pub fn finite_character(particles: usize, flavors: usize, max_degree: usize) -> Result<Vec<SymPoly>> {
    let floor = (particles / flavors) as i64;
    (0..=max_degree)
        .map(|d| {
            let mut full: BTreeMap<Vec<i32>, QPoly> = BTreeMap::new();
            for w in finite_words(particles, flavors, d as i64) {
                let e = word_weight(&w, flavors, floor).iter().map(|&x| x as i32).collect();
                let slot = full.entry(e).or_default();
                *slot = &*slot + &QPoly::one();
            }
            SymPoly::from_full_terms(flavors, full)
        })
        .collect()
}

/// Transition from the `N + n` letter model (floor `L + 1`) to the `N` letter
/// model (floor `L`): keeps words ending in a full layer at mode `-L-1` and drops it.
pub fn fock_transition(s: &WedgeState) -> WedgeState {
    let n = s.flavors;
    let low = -s.floor;
    let mut out = WedgeState::zero(n, s.floor - 1);
    for (w, c) in &s.terms {
        if w.len() < n {
            continue;
        }
        let (keep, tail) = w.split_at(w.len() - n);
        let full = tail.iter().enumerate().all(|(i, l)| l.color == i + 1 && l.mode == low);
        if full && keep.iter().all(|l| l.mode > low) {
            add_into(&mut out.terms, keep.to_vec(), c.clone());
        }
    }
    prune(&mut out.terms);
    out
}

/// Wave function of a finite state with `N` letters per word: the Slater
/// determinant with columns in word order and exponents shifted by the floor.
pub fn to_wave(s: &WedgeState, particles: usize) -> Result<WavePoly> {
    let mut out = WavePoly::zero(particles, s.flavors);
    for (w, c) in &s.terms {
        if w.len() != particles {
            return Err(Error::LengthMismatch { expected: particles, got: w.len() });
        }
        let modes: Vec<i64> = w.iter().map(|l| l.mode + s.floor).collect();
        let colors: Vec<usize> = w.iter().map(|l| l.color).collect();
        let det = slater(&modes, &colors, particles, s.flavors)?;
        out = &out + &det.scale(&BigRational::from_integer(c.clone()));
    }
    Ok(out)
}

/// A semi-infinite wedge: a finite prefix followed by every letter with mode
/// below `floor`. Canonical when the prefix has no full layer at mode `floor`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiWord {
    prefix: Word,
    floor: i64,
}

impl SemiWord {
    /// Canonicalizes; `None` if the prefix repeats a letter or dips into the sea.
    pub fn new(prefix: &[Letter], floor: i64, flavors: usize) -> Option<(i32, SemiWord)> {
        if prefix.iter().any(|l| l.mode < floor) {
            return None;
        }
        let (sign, mut w) = normalize_wedge(prefix)?;
        let mut floor = floor;
        loop {
            let k = w.len();
            if k < flavors {
                break;
            }
            let full = w[k - flavors..].iter().enumerate().all(|(i, l)| l.color == i + 1 && l.mode == floor);
            if !full {
                break;
            }
            w.truncate(k - flavors);
            floor += 1;
        }
        Some((sign, SemiWord { prefix: w, floor }))
    }

    /// Charge-`r` vacuum: colors `1..=r` at mode 0 over the sea below 0.
    pub fn vacuum(r: usize) -> SemiWord {
        SemiWord { prefix: (1..=r).map(|a| Letter::new(a, 0)).collect(), floor: 0 }
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn charge(&self, flavors: usize) -> i64 {
        self.prefix.len() as i64 + flavors as i64 * self.floor
    }

    /// `sum_j (m_j - floor((r - j)/n))` over the prefix, `r` the charge.
    pub fn degree(&self, flavors: usize) -> i64 {
        let r = self.charge(flavors);
        let n = flavors as i64;
        self.prefix
            .iter()
            .enumerate()
            .map(|(j, l)| l.mode - (r - j as i64 - 1).div_euclid(n))
            .sum()
    }

    /// Flavor weight: prefix color counts plus the floor.
    pub fn weight(&self, flavors: usize) -> Vec<i64> {
        word_weight(&self.prefix, flavors, -self.floor)
    }

    /// Prefix with the sea written out down to mode `low`.
    fn lowered(&self, low: i64, flavors: usize) -> Word {
        let mut w = self.prefix.clone();
        for m in (low..self.floor).rev() {
            w.extend((1..=flavors).map(|a| Letter::new(a, m)));
        }
        w
    }
}

impl fmt::Display for SemiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix.is_empty() {
            write!(f, "sea<{}", self.floor)
        } else {
            write!(f, "{}^sea<{}", render_word(&self.prefix), self.floor)
        }
    }
}

/// Linear combination of semi-infinite wedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiState {
    flavors: usize,
    terms: BTreeMap<SemiWord, BigInt>,
}

impl SemiState {
    pub fn zero(flavors: usize) -> Self {
        SemiState { flavors, terms: BTreeMap::new() }
    }

    pub fn vacuum(r: usize, flavors: usize) -> Result<Self> {
        if r >= flavors {
            return Err(Error::InvalidParams(format!("charge {} needs 0 <= r < {}", r, flavors)));
        }
        let mut s = SemiState::zero(flavors);
        s.terms.insert(SemiWord::vacuum(r), BigInt::one());
        Ok(s)
    }

    pub fn basis(flavors: usize, prefix: &[Letter], floor: i64) -> Result<Self> {
        if prefix.iter().any(|l| l.color == 0 || l.color > flavors) {
            return Err(Error::InvalidParams("color out of range".into()));
        }
        let mut s = SemiState::zero(flavors);
        if let Some((sign, w)) = SemiWord::new(prefix, floor, flavors) {
            s.terms.insert(w, BigInt::from(sign));
        }
        Ok(s)
    }

    pub fn flavors(&self) -> usize {
        self.flavors
    }

    pub fn terms(&self) -> &BTreeMap<SemiWord, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|x| *x *= c);
        prune(&mut out.terms);
        out
    }

    /// Finite state with floor `L` holding the same letters; errors if some
    /// word has its sea above `-L` missing.
    pub fn truncate(&self, layers: i64) -> Result<WedgeState> {
        let mut out = WedgeState::zero(self.flavors, layers);
        for (w, c) in &self.terms {
            if w.floor < -layers {
                return Err(Error::InvalidParams(format!("word {} reaches below floor {}", w, -layers)));
            }
            out.add_word(&w.lowered(-layers, self.flavors), c.clone())?;
        }
        Ok(out)
    }
}

impl Add for &SemiState {
    type Output = SemiState;
    fn add(self, rhs: &SemiState) -> SemiState {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            add_into(&mut out.terms, w.clone(), c.clone());
        }
        prune(&mut out.terms);
        out
    }
}

impl Sub for &SemiState {
    type Output = SemiState;
    fn sub(self, rhs: &SemiState) -> SemiState {
        self + &rhs.scale(&-BigInt::one())
    }
}

impl fmt::Display for SemiState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self.terms.iter(), |w: &SemiWord| w.to_string()))
    }
}

/// Normal-ordered current `J^a_{b,m} = sum_l :psi^a_l psi^{b*}_{l+m}:`, which
/// turns `(b, l + m)` into `(a, l)`.
pub fn current(a: usize, b: usize, m: i64, s: &SemiState) -> SemiState {
    let n = s.flavors;
    let mut out = SemiState::zero(n);
    for (w, c) in &s.terms {
        if a == b && m == 0 {
            let count = w.weight(n)[a - 1];
            add_into(&mut out.terms, w.clone(), c * count);
            continue;
        }
        // below `low` every source lands on an occupied target
        let low = w.floor + m.min(0);
        let word = w.lowered(low, n);
        for (p, l) in word.iter().enumerate() {
            if l.color != b || l.mode - m < low {
                continue;
            }
            let mut nw = word.clone();
            nw[p] = Letter::new(a, l.mode - m);
            if let Some((sign, sw)) = SemiWord::new(&nw, low, n) {
                add_into(&mut out.terms, sw, c * sign);
            }
        }
    }
    prune(&mut out.terms);
    out
}

/// Annihilation mode `J^a_{b,m}` with `m > 0`; lowers degree by `m`.
pub fn affine_annihilate(a: usize, b: usize, m: i64, s: &SemiState) -> Result<SemiState> {
    if m <= 0 {
        return Err(Error::InvalidParams(format!("annihilation needs m > 0, got {}", m)));
    }
    Ok(current(a, b, m, s))
}

/// Loop algebra action `E^a_b t^m` on the semi-infinite space, `J^a_{b,-m}`.
pub fn semi_gl_action(a: usize, b: usize, m: i64, s: &SemiState) -> SemiState {
    current(a, b, -m, s)
}

/// Canonical semi-infinite words of charge `r` and degree `d`.
pub fn semi_words(r: usize, flavors: usize, d: i64) -> Vec<SemiWord> {
    if d < 0 {
        return Vec::new();
    }
    let layers = d + 1;
    let particles = flavors * layers as usize + r;
    let mut out: Vec<SemiWord> = finite_words(particles, flavors, d)
        .into_iter()
        .filter_map(|w| SemiWord::new(&w, -layers, flavors).map(|x| x.1))
        .collect();
    out.sort();
    out
}

/// Graded character of the charge-`r` semi-infinite space.
pub fn semi_character(r: usize, flavors: usize, max_degree: usize) -> Result<Vec<SymPoly>> {
    (0..=max_degree)
        .map(|d| {
            let mut full: BTreeMap<Vec<i32>, QPoly> = BTreeMap::new();
            for w in semi_words(r, flavors, d as i64) {
                let e = w.weight(flavors).iter().map(|&x| x as i32).collect();
                let slot = full.entry(e).or_default();
                *slot = &*slot + &QPoly::one();
            }
            SymPoly::from_full_terms(flavors, full)
        })
        .collect()
}
