//! Weight rows, admissible diagrams and Gelfand–Tsetlin patterns, finite and
//! semi-infinite.
//!
//! Rows are 1-indexed in all public functions that take a position.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::symfunc::{skew_schur_rows, SymPoly};

/// Periodic tail `offset - k * floor((j - 1 - r) / n)` of a semi-infinite row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail {
    pub n: usize,
    pub k: i64,
    pub r: usize,
    pub offset: i64,
}

impl Tail {
    /// Normalizes `r` into `0..n`, absorbing whole periods into the offset.
    pub fn new(n: usize, k: i64, r: i64, offset: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("tail period must be positive".into()));
        }
        let (t, rr) = r.div_mod_floor(&(n as i64));
        Ok(Tail { n, k, r: rr as usize, offset: offset + k * t })
    }

    /// Tail of row `i` (1-based) of the charge-`r` vacuum pattern.
    pub fn vacuum(n: usize, k: i64, r: usize, i: usize) -> Self {
        Tail::new(n, k, r as i64 - i as i64 + 1, 0).expect("n >= 1")
    }

    pub fn entry(&self, j: usize) -> i64 {
        self.offset - self.k * Integer::div_floor(&(j as i64 - 1 - self.r as i64), &(self.n as i64))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Weakly decreasing integer row, finite or with a periodic tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightRow {
    prefix: Vec<i64>,
    tail: Option<Tail>,
}

fn weakly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

impl WeightRow {
    pub fn finite(entries: Vec<i64>) -> Result<Self> {
        if !weakly_decreasing(&entries) {
            return Err(Error::InvalidParams(format!("{:?} is not weakly decreasing", entries)));
        }
        Ok(WeightRow { prefix: entries, tail: None })
    }

    pub fn semi_infinite(prefix: Vec<i64>, tail: Tail) -> Result<Self> {
        let mut row = WeightRow { prefix, tail: Some(tail) };
        let check: Vec<i64> = (1..=row.prefix.len() + tail.n + 1).map(|j| row.get(j)).collect();
        if !weakly_decreasing(&check) || tail.k < 0 {
            return Err(Error::InvalidParams(format!("{:?} is not weakly decreasing", row.prefix)));
        }
        row.canonicalize();
        Ok(row)
    }

    /// Top row of the charge-`r` vacuum pattern.
    pub fn vacuum(n: usize, k: i64, r: usize) -> Self {
        Self::vacuum_row(n, k, r, 1)
    }

    /// Row `i` of the charge-`r` vacuum pattern.
    pub fn vacuum_row(n: usize, k: i64, r: usize, i: usize) -> Self {
        WeightRow { prefix: Vec::new(), tail: Some(Tail::vacuum(n, k, r, i)) }
    }

    fn canonicalize(&mut self) {
        if let Some(t) = self.tail {
            while let Some(&last) = self.prefix.last() {
                if last != t.entry(self.prefix.len()) {
                    break;
                }
                self.prefix.pop();
            }
        }
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn tail(&self) -> Option<&Tail> {
        self.tail.as_ref()
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Length of a finite row; `None` for semi-infinite rows.
    pub fn len(&self) -> Option<usize> {
        self.tail.is_none().then_some(self.prefix.len())
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_none() && self.prefix.is_empty()
    }

    /// Entry `j` (1-based); finite rows read as 0 past their end.
    pub fn get(&self, j: usize) -> i64 {
        if j >= 1 && j <= self.prefix.len() {
            return self.prefix[j - 1];
        }
        match &self.tail {
            Some(t) => t.entry(j),
            None => 0,
        }
    }

    /// First `m` entries.
    pub fn take(&self, m: usize) -> Vec<i64> {
        (1..=m).map(|j| self.get(j)).collect()
    }

    pub fn shift(&self, k: i64, dir: Direction) -> Self {
        let d = match dir {
            Direction::Up => k,
            Direction::Down => -k,
        };
        WeightRow {
            prefix: self.prefix.iter().map(|x| x + d).collect(),
            tail: self.tail.map(|t| Tail { offset: t.offset + d, ..t }),
        }
    }

    pub fn sum(&self) -> Result<i64> {
        match self.tail {
            None => Ok(self.prefix.iter().sum()),
            Some(_) => Err(Error::NeedsFinite),
        }
    }
}

impl fmt::Display for WeightRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.prefix.iter().map(|x| x.to_string()).collect();
        match &self.tail {
            None => write!(f, "[{}]", body.join(",")),
            Some(t) => {
                let more: Vec<String> = (self.prefix.len() + 1..=self.prefix.len() + t.n)
                    .map(|j| t.entry(j).to_string())
                    .collect();
                let all: Vec<String> = body.into_iter().chain(more).collect();
                write!(f, "[{},...]", all.join(","))
            }
        }
    }
}

/// `lam_i >= mu_i >= lam_{i+m}` for every `i`.
pub fn interlace(lam: &WeightRow, mu: &WeightRow, m: usize) -> bool {
    let span = match (lam.tail(), mu.tail()) {
        (None, None) => {
            if lam.prefix.len() != mu.prefix.len() {
                return false;
            }
            lam.prefix.len()
        }
        (Some(a), Some(b)) => {
            if a.n != b.n || a.k != b.k {
                return false;
            }
            lam.prefix.len().max(mu.prefix.len()) + m + a.n
        }
        _ => return false,
    };
    (1..=span).all(|i| lam.get(i) >= mu.get(i) && mu.get(i) >= lam.get(i + m))
}

/// `lam - k >= 0` entrywise and `lam_i >= lam_{i+n} + k`.
pub fn is_admissible(lam: &WeightRow, big_n: usize, n: usize, k: i64) -> bool {
    if lam.len() != Some(big_n) {
        return false;
    }
    let p = lam.prefix();
    p.iter().all(|&x| x >= k) && (0..big_n.saturating_sub(n)).all(|i| p[i] >= p[i + n] + k)
}

/// Admissible and ending in `n` copies of `k`.
pub fn is_cuttable(lam: &WeightRow, big_n: usize, n: usize, k: i64) -> bool {
    big_n >= n && is_admissible(lam, big_n, n, k) && lam.get(big_n - n + 1) == k
}

/// Drops the last `n` entries of a cuttable row.
pub fn cut(lam: &WeightRow, n: usize, k: i64) -> Result<WeightRow> {
    let big_n = lam.len().ok_or(Error::NeedsFinite)?;
    if !is_cuttable(lam, big_n, n, k) {
        return Err(Error::NotCuttable(lam.prefix().to_vec()));
    }
    WeightRow::finite(lam.prefix()[..big_n - n].to_vec())
}

/// `k * floor((N + n - j) / n)`, the unique admissible row of lowest degree.
pub fn minimal_admissible(big_n: usize, n: usize, k: i64) -> WeightRow {
    WeightRow::finite(
        (1..=big_n).map(|j| k * ((big_n + n - j) / n) as i64).collect(),
    )
    .expect("decreasing")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    /// `sum(lam_i - k)`
    Plain { k: i64 },
    /// `sum(lam_j - lam_min_j)`
    Shifted { n: usize, k: i64 },
    /// Degree relative to the vacuum row with the same tail.
    SemiInfinite,
}

pub fn degree(lam: &WeightRow, mode: DegreeMode) -> Result<i64> {
    match mode {
        DegreeMode::Plain { k } => Ok(lam.sum()? - k * lam.prefix().len() as i64),
        DegreeMode::Shifted { n, k } => {
            let big_n = lam.len().ok_or(Error::NeedsFinite)?;
            Ok(lam.sum()? - minimal_admissible(big_n, n, k).sum()?)
        }
        DegreeMode::SemiInfinite => {
            let t = lam.tail().ok_or(Error::NeedsTail)?;
            if t.offset != 0 {
                return Err(Error::BadTail);
            }
            Ok(lam.prefix().iter().enumerate().map(|(j, &x)| x - t.entry(j + 1)).sum())
        }
    }
}

/// Admissible rows of length `N` with shifted degree at most `max_degree`, in
/// increasing lexicographic order.
pub fn admissible_rows(big_n: usize, n: usize, k: i64, max_degree: usize) -> Vec<WeightRow> {
    let base = minimal_admissible(big_n, n, k).prefix().to_vec();
    let mut out = Vec::new();
    let mut cur = vec![0i64; big_n];
    // fill from the bottom; the cheapest completion of the rows above is the
    // greedy one, which bounds the remaining budget
    fn cheapest_above(cur: &mut [i64], j: usize, n: usize, k: i64, base: &[i64]) -> i64 {
        let mut cost = 0;
        let saved: Vec<i64> = cur[..j].to_vec();
        for t in (0..j).rev() {
            let mut v = k.max(cur[t + 1]);
            if t + n < cur.len() {
                v = v.max(cur[t + n] + k);
            }
            cur[t] = v;
            cost += v - base[t];
        }
        cur[..j].copy_from_slice(&saved);
        cost
    }
    fn rec(
        j: usize,
        budget: i64,
        cur: &mut Vec<i64>,
        n: usize,
        k: i64,
        base: &[i64],
        out: &mut Vec<Vec<i64>>,
    ) {
        // j is the number of rows still to fill (rows 0..j)
        if j == 0 {
            out.push(cur.clone());
            return;
        }
        let t = j - 1;
        let mut lo = k;
        if t + 1 < cur.len() {
            lo = lo.max(cur[t + 1]);
        }
        if t + n < cur.len() {
            lo = lo.max(cur[t + n] + k);
        }
        let mut v = lo;
        loop {
            let spent = v - base[t];
            if spent > budget {
                break;
            }
            cur[t] = v;
            if cheapest_above(cur, t, n, k, base) <= budget - spent {
                rec(t, budget - spent, cur, n, k, base, out);
            } else if v > lo {
                break;
            }
            v += 1;
        }
    }
    let mut raw = Vec::new();
    rec(big_n, max_degree as i64, &mut cur, n, k, &base, &mut raw);
    raw.sort();
    for r in raw {
        out.push(WeightRow::finite(r).expect("decreasing by construction"));
    }
    out
}

/// Box set of a skew diagram; columns may be non-positive.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SkewBoxSet {
    boxes: BTreeSet<(usize, i64)>,
}

impl SkewBoxSet {
    pub fn boxes(&self) -> &BTreeSet<(usize, i64)> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn column_heights(&self) -> BTreeMap<i64, usize> {
        let mut h = BTreeMap::new();
        for &(_, j) in &self.boxes {
            *h.entry(j).or_insert(0) += 1;
        }
        h
    }
}

/// Boxes `(i, j)` with `gamma_i < j <= beta_i`.
///
/// For semi-infinite rows only the columns right of `beta_R` are kept, where
/// `R` is the prefix length plus two periods; every deeper column is a full
/// tail column of height `n`.
pub fn skew_diagram(beta: &WeightRow, gamma: &WeightRow) -> Result<SkewBoxSet> {
    let not_contained = || Error::NotContained {
        outer: beta.prefix().to_vec(),
        inner: gamma.prefix().to_vec(),
    };
    let (rows, floor) = match (beta.tail(), gamma.tail()) {
        (None, None) => {
            if beta.len() != gamma.len() {
                return Err(Error::LengthMismatch {
                    expected: beta.prefix().len(),
                    got: gamma.prefix().len(),
                });
            }
            (beta.prefix().len(), i64::MIN)
        }
        (Some(t), Some(_)) => {
            let rows = beta.prefix().len().max(gamma.prefix().len()) + 2 * t.n;
            (rows, beta.get(rows))
        }
        _ => return Err(Error::NeedsTail),
    };
    let mut boxes = BTreeSet::new();
    for i in 1..=rows {
        let (b, g) = (beta.get(i), gamma.get(i));
        if g > b {
            return Err(not_contained());
        }
        for j in (g + 1).max(floor.saturating_add(1))..=b {
            boxes.insert((i, j));
        }
    }
    if beta.tail().is_some() {
        // the tails must be compatible over a full period too
        let p = beta.prefix().len().max(gamma.prefix().len());
        if (p + 1..=rows + beta.tail().map_or(0, |t| t.n)).any(|i| gamma.get(i) > beta.get(i)) {
            return Err(not_contained());
        }
    }
    Ok(SkewBoxSet { boxes })
}

/// Boxes `(i, j)` in columns of height exactly `m` whose upper neighbour is absent.
pub fn top_boxes_of_height(s: &SkewBoxSet, m: usize) -> BTreeSet<(usize, i64)> {
    let heights = s.column_heights();
    s.boxes
        .iter()
        .filter(|&&(i, j)| heights[&j] == m && (i == 1 || !s.boxes.contains(&(i - 1, j))))
        .copied()
        .collect()
}

/// `n + 1` interlacing rows with the last row equal to the first shifted down by `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTPattern {
    rows: Vec<WeightRow>,
    k: i64,
}

impl GTPattern {
    pub fn new(rows: Vec<WeightRow>, k: i64) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::InvalidParams("a pattern needs at least two rows".into()));
        }
        let n = rows.len() - 1;
        let top = &rows[0];
        if rows[n] != top.shift(k, Direction::Down) {
            return Err(Error::InvalidParams("bottom row must be the top row shifted down by k".into()));
        }
        if let Some(t) = top.tail() {
            if t.n != n || t.k != k {
                return Err(Error::BadTail);
            }
            for (i, row) in rows.iter().enumerate() {
                if row.tail() != Some(&Tail::vacuum(n, k, t.r, i + 1)) {
                    return Err(Error::BadTail);
                }
            }
        }
        for w in rows.windows(2) {
            if !interlace(&w[0], &w[1], 1) {
                return Err(Error::InvalidParams(format!("{} does not interlace {}", w[0], w[1])));
            }
        }
        Ok(GTPattern { rows, k })
    }

    pub fn rows(&self) -> &[WeightRow] {
        &self.rows
    }

    pub fn top(&self) -> &WeightRow {
        &self.rows[0]
    }

    /// Height `n` (number of rows minus one).
    pub fn height(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn level(&self) -> i64 {
        self.k
    }

    pub fn is_finite(&self) -> bool {
        self.top().is_finite()
    }

    /// Charge `r` of a semi-infinite pattern.
    pub fn charge(&self) -> Option<usize> {
        self.top().tail().map(|t| t.r)
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> &WeightRow {
        &self.rows[i - 1]
    }

    /// Truncation to length `n L + r` with every entry raised by `k L`.
    pub fn truncate(&self, layers: usize) -> Result<GTPattern> {
        let t = *self.top().tail().ok_or(Error::NeedsTail)?;
        let big_n = t.n * layers + t.r;
        let need = self.rows.iter().map(|r| r.prefix().len()).max().unwrap_or(0);
        if need > big_n {
            return Err(Error::InvalidParams(format!("L = {} is too small to truncate", layers)));
        }
        let lift = self.k * layers as i64;
        let rows = self
            .rows
            .iter()
            .map(|r| WeightRow::finite(r.take(big_n).into_iter().map(|x| x + lift).collect()))
            .collect::<Result<Vec<_>>>()?;
        GTPattern::new(rows, self.k)
    }

    /// Smallest `L` at which [`GTPattern::truncate`] applies.
    pub fn min_layers(&self) -> Result<usize> {
        let t = self.top().tail().ok_or(Error::NeedsTail)?;
        let need = self.rows.iter().map(|r| r.prefix().len()).max().unwrap_or(0);
        Ok((need.saturating_sub(t.r) + t.n - 1) / t.n)
    }

    /// Flavor weight: `a_m` gets `|row m| - |row m+1|`.
    ///
    /// Semi-infinite patterns use the truncation at large `L` with `k L` removed
    /// from every exponent.
    pub fn a_weight(&self) -> Vec<i64> {
        let n = self.height();
        match self.top().tail() {
            None => (0..n)
                .map(|m| self.rows[m].sum().unwrap() - self.rows[m + 1].sum().unwrap())
                .collect(),
            Some(t) => {
                let layers = self.min_layers().unwrap() + 1;
                let big_n = t.n * layers + t.r;
                let lift = self.k * layers as i64;
                (0..n)
                    .map(|m| {
                        let s: i64 = (1..=big_n)
                            .map(|j| self.rows[m].get(j) - self.rows[m + 1].get(j))
                            .sum();
                        s - lift
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", rows.join(","))
    }
}

/// All finite patterns with the given top row, in lexicographic order of the
/// concatenated rows.
pub fn enumerate_gt(big_n: usize, n: usize, k: i64, top: &WeightRow) -> Vec<GTPattern> {
    if n == 0 || !is_admissible(top, big_n, n, k) {
        return Vec::new();
    }
    let lam = top.prefix().to_vec();
    let bottom: Vec<i64> = lam.iter().map(|x| x - k).collect();
    let mut rows: Vec<Vec<i64>> = vec![lam.clone()];
    rows.extend((1..n).map(|_| vec![0; big_n]));
    rows.push(bottom.clone());
    let mut out = Vec::new();
    // fill rows 2..n, each entry bounded by its upper row and by the bottom row
    fn rec(
        i: usize,
        j: usize,
        rows: &mut Vec<Vec<i64>>,
        big_n: usize,
        n: usize,
        k: i64,
        out: &mut Vec<GTPattern>,
    ) {
        if i == n {
            let rs = rows.iter().map(|r| WeightRow::finite(r.clone()).unwrap()).collect();
            out.push(GTPattern { rows: rs, k });
            return;
        }
        if j == big_n {
            rec(i + 1, 0, rows, big_n, n, k, out);
            return;
        }
        let p = n - i;
        let above = &rows[i - 1];
        let bottom = &rows[n];
        let mut hi = above[j];
        if j >= p {
            hi = hi.min(bottom[j - p]);
        }
        let lo = above.get(j + 1).copied().unwrap_or(0).max(bottom[j]);
        for v in lo..=hi {
            rows[i][j] = v;
            rec(i, j + 1, rows, big_n, n, k, out);
        }
    }
    rec(1, 0, &mut rows, big_n, n, k, &mut out);
    out
}

/// The pattern `max(lam_j - k, lam_{j+i-1})`, cut off at the finite boundary.
pub fn highest_weight_pattern(top: &WeightRow, big_n: usize, n: usize, k: i64) -> Result<GTPattern> {
    if let Some(t) = top.tail() {
        if t.n != n || t.k != k {
            return Err(Error::BadTail);
        }
        let r = t.r;
        let span = top.prefix().len() + 2 * n + 2;
        let rows = (1..=n + 1)
            .map(|i| {
                let vals = (1..=span).map(|j| (top.get(j) - k).max(top.get(j + i - 1))).collect();
                WeightRow::semi_infinite(vals, Tail::vacuum(n, k, r, i))
            })
            .collect::<Result<Vec<_>>>()?;
        return GTPattern::new(rows, k);
    }
    if !is_admissible(top, big_n, n, k) {
        return Err(Error::NotAdmissible(top.prefix().to_vec(), big_n, n, k));
    }
    let rows = (1..=n + 1)
        .map(|i| {
            let vals = (1..=big_n)
                .map(|j| {
                    if j + i > big_n + 1 {
                        top.get(j) - k
                    } else {
                        (top.get(j) - k).max(top.get(j + i - 1))
                    }
                })
                .collect();
            WeightRow::finite(vals)
        })
        .collect::<Result<Vec<_>>>()?;
    GTPattern::new(rows, k)
}

/// Cuts every row of a pattern with cuttable top and shifts it down by `k`;
/// `None` when the top is not cuttable.
pub fn pattern_transition(p: &GTPattern) -> Option<GTPattern> {
    let n = p.height();
    let k = p.level();
    let top = p.top();
    let big_n = top.len()?;
    if !is_cuttable(top, big_n, n, k) {
        return None;
    }
    let rows = p
        .rows()
        .iter()
        .map(|r| WeightRow::finite(r.prefix()[..big_n - n].iter().map(|x| x - k).collect()))
        .collect::<Result<Vec<_>>>()
        .ok()?;
    GTPattern::new(rows, k).ok()
}

/// Semi-infinite patterns of charge `r` whose top row has degree `d`.
///
/// Obtained from the finite patterns at `L = d + 1`, whose tops of shifted
/// degree `d` are all cuttable, by removing `k L` and attaching the vacuum tails.
pub fn enumerate_semiinf(r: usize, n: usize, k: i64, d: usize) -> Result<Vec<GTPattern>> {
    if n == 0 || r >= n {
        return Err(Error::InvalidParams(format!("need 0 <= r < n, got r={} n={}", r, n)));
    }
    let layers = d + 1;
    let big_n = n * layers + r;
    let lift = k * layers as i64;
    let mut out = Vec::new();
    for top in admissible_rows(big_n, n, k, d) {
        if degree(&top, DegreeMode::Shifted { n, k })? != d as i64 {
            continue;
        }
        if !is_cuttable(&top, big_n, n, k) {
            return Err(Error::NotCuttable(top.prefix().to_vec()));
        }
        for pat in enumerate_gt(big_n, n, k, &top) {
            let rows = pat
                .rows()
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let vals = row.prefix().iter().map(|x| x - lift).collect();
                    WeightRow::semi_infinite(vals, Tail::vacuum(n, k, r, i + 1))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(GTPattern::new(rows, k)?);
        }
    }
    Ok(out)
}

/// Monomial `a^w` for a GT flavor weight.
pub fn weight_monomial(w: &[i64]) -> Vec<i32> {
    w.iter().map(|&x| x as i32).collect()
}

/// `sum_Lambda a^{weight(Lambda)}` over a list of patterns of common height.
pub fn pattern_character(patterns: &[GTPattern], n: usize) -> Result<SymPoly> {
    let mut full: BTreeMap<Vec<i32>, QPoly> = BTreeMap::new();
    for p in patterns {
        let e = weight_monomial(&p.a_weight());
        let slot = full.entry(e).or_default();
        *slot = &*slot + &QPoly::one();
    }
    SymPoly::from_full_terms(n, full)
}

/// Skew Schur polynomial of `lam / (lam - k)`.
pub fn diagram_schur(lam: &WeightRow, n: usize, k: i64) -> Result<SymPoly> {
    let inner: Vec<i64> = lam.prefix().iter().map(|x| x - k).collect();
    skew_schur_rows(lam.prefix(), &inner, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::skew_tableau_count;

    fn row(v: &[i64]) -> WeightRow {
        WeightRow::finite(v.to_vec()).unwrap()
    }

    #[test]
    fn shifts() {
        assert_eq!(row(&[3, 1]).shift(1, Direction::Down), row(&[2, 0]));
        assert_eq!(row(&[0, 0]).shift(2, Direction::Down), row(&[-2, -2]));
        let l = row(&[4, 2, 2]);
        assert_eq!(l.shift(3, Direction::Down).shift(3, Direction::Up), l);
    }

    #[test]
    fn interlacing() {
        assert!(interlace(&row(&[2, 1]), &row(&[1, 1]), 1));
        assert!(!interlace(&row(&[2, 1]), &row(&[2, 2]), 1));
        assert!(!interlace(&row(&[2, 1]), &row(&[1]), 1));
    }

    #[test]
    fn admissibility() {
        let l = row(&[2, 2, 1, 1]);
        assert!(is_admissible(&l, 4, 2, 1));
        assert!(is_cuttable(&l, 4, 2, 1));
        assert_eq!(cut(&l, 2, 1).unwrap(), row(&[2, 2]));
        assert!(!is_admissible(&row(&[2, 1, 1, 1]), 4, 2, 1));
        assert!(is_admissible(&row(&[3, 3]), 2, 2, 3));
        assert!(!is_admissible(&row(&[3, 3, 3]), 3, 2, 3));
        assert!(cut(&row(&[3, 2, 2, 1]), 2, 1).is_err());
    }

    #[test]
    fn vacuum_rows() {
        let v = WeightRow::vacuum(2, 1, 1);
        assert_eq!(v.take(5), vec![1, 0, 0, -1, -1]);
        assert_eq!(WeightRow::vacuum(2, 2, 0).take(4), vec![0, 0, -2, -2]);
        assert_eq!(degree(&v, DegreeMode::SemiInfinite).unwrap(), 0);
        let bumped = WeightRow::semi_infinite(vec![2], *v.tail().unwrap()).unwrap();
        assert_eq!(degree(&bumped, DegreeMode::SemiInfinite).unwrap(), 1);
        // canonical form trims entries that agree with the tail
        let same = WeightRow::semi_infinite(vec![1, 0, 0], *v.tail().unwrap()).unwrap();
        assert_eq!(same, v);
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&row(&[1, 1]), DegreeMode::Plain { k: 1 }).unwrap(), 0);
        assert_eq!(degree(&row(&[2, 1]), DegreeMode::Plain { k: 1 }).unwrap(), 1);
        assert_eq!(degree(&row(&[4, 2, 2]), DegreeMode::Shifted { n: 2, k: 2 }).unwrap(), 0);
        assert!(degree(&row(&[1]), DegreeMode::SemiInfinite).is_err());
    }

    #[test]
    fn skew_diagrams() {
        let v = WeightRow::vacuum(2, 1, 1);
        let s = skew_diagram(&v, &v.shift(1, Direction::Down)).unwrap();
        let h = s.column_heights();
        assert_eq!(h[&1], 1);
        assert_eq!(h[&0], 2);
        assert!(h.iter().filter(|(&j, _)| j <= 0).all(|(_, &c)| c == 2));
        assert_eq!(top_boxes_of_height(&s, 1), [(1, 1)].into_iter().collect());
        let l = row(&[2, 1]);
        assert!(skew_diagram(&l, &l).unwrap().is_empty());
        assert!(skew_diagram(&row(&[1, 1]), &row(&[2, 0])).is_err());
    }

    #[test]
    fn gt_examples() {
        assert_eq!(enumerate_gt(1, 3, 2, &row(&[2])).len(), 6);
        assert_eq!(enumerate_gt(2, 2, 1, &row(&[1, 1])).len(), 1);
        assert!(enumerate_gt(4, 2, 1, &row(&[2, 1, 1, 1])).is_empty());
        let pats = enumerate_gt(2, 2, 1, &row(&[2, 1]));
        let mut sorted = pats.clone();
        sorted.sort_by_key(|p| p.rows().iter().flat_map(|r| r.prefix().to_vec()).collect::<Vec<_>>());
        assert_eq!(pats, sorted);
    }

    #[test]
    fn gt_counts_match_tableaux() {
        for k in 1..=2 {
            for n in 1..=3 {
                for big_n in 1..=4 {
                    for top in admissible_rows(big_n, n, k, 4) {
                        let inner: Vec<i64> = top.prefix().iter().map(|x| x - k).collect();
                        let count = skew_tableau_count(top.prefix(), &inner, n).unwrap();
                        assert_eq!(enumerate_gt(big_n, n, k, &top).len() as u64, count, "{}", top);
                    }
                }
            }
        }
    }

    #[test]
    fn gt_weights_give_skew_schur() {
        for (big_n, n, k) in [(2, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1)] {
            for top in admissible_rows(big_n, n, k, 3) {
                let pats = enumerate_gt(big_n, n, k, &top);
                assert_eq!(pattern_character(&pats, n).unwrap(), diagram_schur(&top, n, k).unwrap());
            }
        }
    }

    #[test]
    fn admissible_rows_brute_force() {
        for (big_n, n, k, d) in [(3, 2, 1, 4), (4, 2, 2, 3), (4, 3, 1, 4), (2, 1, 1, 5)] {
            let base = minimal_admissible(big_n, n, k);
            let got = admissible_rows(big_n, n, k, d);
            let mut want = Vec::new();
            let hi = base.get(1) + d as i64;
            let mut v = vec![k; big_n];
            loop {
                if let Ok(r) = WeightRow::finite(v.clone()) {
                    if is_admissible(&r, big_n, n, k)
                        && degree(&r, DegreeMode::Shifted { n, k }).unwrap() <= d as i64
                    {
                        want.push(r);
                    }
                }
                let mut i = 0;
                while i < big_n && v[i] == hi {
                    v[i] = k;
                    i += 1;
                }
                if i == big_n {
                    break;
                }
                v[i] += 1;
            }
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn highest_weight_examples() {
        let p = highest_weight_pattern(&row(&[2, 2]), 2, 2, 1).unwrap();
        assert_eq!(p.rows(), &[row(&[2, 2]), row(&[2, 1]), row(&[1, 1])]);
        let p = highest_weight_pattern(&row(&[3]), 1, 2, 3).unwrap();
        assert_eq!(p.rows(), &[row(&[3]), row(&[0]), row(&[0])]);
        assert!(highest_weight_pattern(&row(&[2, 1, 1, 1]), 4, 2, 1).is_err());
    }

    #[test]
    fn transition_example() {
        let p = GTPattern::new(vec![row(&[2, 2, 1, 1]), row(&[2, 1, 1, 0]), row(&[1, 1, 0, 0])], 1)
            .unwrap();
        let t = pattern_transition(&p).unwrap();
        assert_eq!(t.rows(), &[row(&[1, 1]), row(&[1, 0]), row(&[0, 0])]);
        let q = enumerate_gt(4, 2, 1, &row(&[3, 2, 2, 1])).remove(0);
        assert!(pattern_transition(&q).is_none());
    }

    #[test]
    fn transition_is_a_bijection() {
        for (big_n, n, k) in [(1, 2, 1), (2, 2, 1), (2, 2, 2), (1, 3, 1), (2, 1, 2), (3, 2, 1)] {
            let mut image = BTreeSet::new();
            let mut count = 0;
            for top in admissible_rows(big_n + n, n, k, 4) {
                if !is_cuttable(&top, big_n + n, n, k) {
                    continue;
                }
                for p in enumerate_gt(big_n + n, n, k, &top) {
                    image.insert(pattern_transition(&p).expect("cuttable"));
                    count += 1;
                }
            }
            let mut target = BTreeSet::new();
            for top in admissible_rows(big_n, n, k, 4) {
                target.extend(enumerate_gt(big_n, n, k, &top));
            }
            assert_eq!(count, image.len());
            assert_eq!(image, target);
        }
    }

    #[test]
    fn transition_commutes_with_highest_weight() {
        for (big_n, n, k) in [(2, 2, 1), (1, 3, 2), (2, 1, 1)] {
            for top in admissible_rows(big_n + n, n, k, 3) {
                if !is_cuttable(&top, big_n + n, n, k) {
                    continue;
                }
                let hw = highest_weight_pattern(&top, big_n + n, n, k).unwrap();
                let down = cut(&top, n, k).unwrap().shift(k, Direction::Down);
                assert_eq!(
                    pattern_transition(&hw).unwrap(),
                    highest_weight_pattern(&down, big_n, n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn semiinfinite_examples() {
        for n in 1..=3 {
            for r in 0..n {
                let pats = enumerate_semiinf(r, n, 1, 0).unwrap();
                assert!(pats.iter().all(|p| p.top() == &WeightRow::vacuum(n, 1, r)));
            }
        }
        assert_eq!(enumerate_semiinf(0, 2, 1, 1).unwrap().len(), 4);
        let vac = &enumerate_semiinf(1, 2, 1, 0).unwrap()[0];
        for layers in 1..4 {
            let t = vac.truncate(layers).unwrap();
            assert!(is_admissible(t.top(), 2 * layers + 1, 2, 1));
        }
        assert_eq!(vac.a_weight(), vec![1, 0]);
    }

    #[test]
    fn semiinfinite_highest_weight_matches_vacuum() {
        for (n, k) in [(2, 1), (3, 2)] {
            for r in 0..n {
                let vac = WeightRow::vacuum(n, k, r);
                let p = highest_weight_pattern(&vac, 0, n, k).unwrap();
                for (i, row) in p.rows().iter().enumerate() {
                    assert_eq!(row, &WeightRow::vacuum_row(n, k, r, i + 1));
                }
            }
        }
    }
}
