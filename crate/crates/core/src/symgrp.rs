//! Symmetric-group combinatorics: partitions, permutations, class sizes,
//! standard tableaux counts and irreducible characters.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{invalid, Error, Result};

/// A partition of `d`: a weakly decreasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the parts, so the canonical
/// enumeration order of [`partitions_of`] is the *reverse* of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid(format!("partition parts must be positive: {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(invalid(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        Self::from_unsorted(vec![d])
    }

    /// The single-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`; surrounding parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `d` in reverse lexicographic order:
/// `(d), (d-1,1), …, (1^d)`. `d = 0` yields the single empty partition.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `max_parts` parts, in canonical order.
pub fn partitions_with_at_most(d: usize, max_parts: usize) -> Vec<Partition> {
    partitions_of(d)
        .into_iter()
        .filter(|p| p.len() <= max_parts)
        .collect()
}

pub fn factorial(d: usize) -> u64 {
    (1..=d as u64).fold(1u64, |acc, k| {
        acc.checked_mul(k).expect("factorial overflows u64 (d > 20)")
    })
}

/// A permutation of `{1, …, d}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &x in &images {
            if x == 0 || x > d || seen[x] {
                return Err(invalid(format!("not a permutation of 1..={d}: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: usize) -> Self {
        Permutation { images: (1..=d).collect() }
    }

    /// Every permutation of `{1, …, d}`, in lexicographic one-line order.
    pub fn all(d: usize) -> impl Iterator<Item = Permutation> {
        (1..=d)
            .permutations(d)
            .map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the letter `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut lengths = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }
}

pub fn cycle_type(w: &Permutation) -> Partition {
    w.cycle_type()
}

/// Size of the conjugacy class of cycle type `lambda`: `d! / z_λ`.
pub fn class_size(lambda: &Partition) -> u64 {
    factorial(lambda.weight()) / centralizer_order(lambda)
}

/// `z_λ = ∏_k k^{m_k} m_k!`.
pub fn centralizer_order(lambda: &Partition) -> u64 {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Number of standard Young tableaux of shape `lambda` (hook-length formula).
pub fn tableaux_count(lambda: &Partition) -> u64 {
    let hooks: u64 = lambda.hook_lengths().iter().map(|&h| h as u64).product();
    factorial(lambda.weight()) / hooks
}

/// Every standard Young tableau of shape `lambda`, each as its rows.
///
/// Fills `1, …, d` in turn, placing each entry at the end of a row whose
/// extension keeps the filled region a partition.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(next: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > shape.iter().sum::<usize>() {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                rec(next + 1, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, &lambda.parts, &mut vec![Vec::new(); lambda.len()], &mut out);
    out
}

/// Irreducible character `χ_λ(μ)` of `S_d`, by the Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharacterCache::default().value(lambda, mu)
}

/// Memoizing Murnaghan–Nakayama evaluator.
///
/// Keys are `(shape, index into μ)`; one cache serves a fixed `μ` list at a
/// time, so it is reset whenever a different `μ` is queried. Not shared
/// between threads; build one per worker.
#[derive(Debug, Default)]
pub struct CharacterCache {
    mu: Vec<usize>,
    memo: HashMap<(Vec<usize>, usize), i64>,
}

impl CharacterCache {
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.weight() != mu.weight() {
            return Err(invalid(format!(
                "character weights differ: |{lambda}| = {} but |{mu}| = {}",
                lambda.weight(),
                mu.weight()
            )));
        }
        if self.mu != mu.parts {
            self.mu = mu.parts.clone();
            self.memo.clear();
        }
        Ok(self.eval(lambda.parts.clone(), 0))
    }

    fn eval(&mut self, shape: Vec<usize>, idx: usize) -> i64 {
        if idx == self.mu.len() {
            return if shape.is_empty() { 1 } else { 0 };
        }
        if let Some(&v) = self.memo.get(&(shape.clone(), idx)) {
            return v;
        }
        let r = self.mu[idx];
        let mut total = 0;
        for (smaller, height) in remove_rim_hooks(&shape, r) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(smaller, idx + 1);
        }
        self.memo.insert((shape, idx), total);
        total
    }
}

/// All shapes obtained from `shape` by removing a border strip of size `r`,
/// with each strip's height (rows spanned minus one). Uses beta-numbers: a
/// strip removal moves one bead from `b` to an empty position `b - r`.
fn remove_rim_hooks(shape: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(t, &p)| p + len - 1 - t).collect();
    let mut out = Vec::new();
    for (t, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[t] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(s, &x)| x - (len - 1 - s))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

/// Full character table: rows indexed by `λ`, columns by `μ`, both in
/// [`partitions_of`] order.
pub fn character_table(d: usize) -> Vec<Vec<i64>> {
    let parts = partitions_of(d);
    let mut cache = CharacterCache::default();
    let mut table = vec![vec![0; parts.len()]; parts.len()];
    for (c, mu) in parts.iter().enumerate() {
        for (r, lambda) in parts.iter().enumerate() {
            table[r][c] = cache.value(lambda, mu).expect("same weight");
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_in_canonical_order() {
        assert_eq!(partitions_of(1), vec![p("1")]);
        let four: Vec<String> = partitions_of(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(p("(3,1)"), p("3,1"));
        assert_eq!(p("3,2,2").conjugate(), p("3,3,1"));
    }

    #[test]
    fn cycle_types() {
        let w = |v: Vec<usize>| Permutation::new(v).unwrap();
        assert_eq!(w(vec![1, 2, 3, 4]).cycle_type(), p("1,1,1,1"));
        assert_eq!(w(vec![2, 3, 4, 1]).cycle_type(), p("4"));
        assert_eq!(w(vec![2, 1, 4, 3]).cycle_type(), p("2,2"));
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn class_sizes_match_brute_force() {
        assert_eq!(class_size(&p("1,1,1,1")), 1);
        assert_eq!(class_size(&p("4")), 6);
        assert_eq!(class_size(&p("2,1,1")), 6);
        for d in 1..=6 {
            let mut counts: HashMap<Partition, u64> = HashMap::new();
            for w in Permutation::all(d) {
                *counts.entry(w.cycle_type()).or_default() += 1;
            }
            for lambda in partitions_of(d) {
                assert_eq!(counts[&lambda], class_size(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(tableaux_count(&p("5")), 1);
        assert_eq!(tableaux_count(&p("2,2")), 2);
        assert_eq!(tableaux_count(&p("3,1")), 3);
        assert_eq!(tableaux_count(&p("3,2")), 5);
    }

    #[test]
    fn tableaux_enumeration() {
        let t = standard_tableaux(&p("2,2"));
        assert_eq!(t, vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]);
        assert_eq!(standard_tableaux(&p("3,1")).len(), 3);
        assert_eq!(standard_tableaux(&Partition::empty()).len(), 1);
    }

    #[test]
    fn character_examples() {
        for d in 1..=6 {
            for mu in partitions_of(d) {
                assert_eq!(character(&Partition::row(d), &mu).unwrap(), 1);
                let sign = if (d - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column(d), &mu).unwrap(), sign);
            }
        }
        assert_eq!(character(&p("2,2"), &p("2,1,1")).unwrap(), 0);
        assert_eq!(character(&p("3,1"), &p("2,2")).unwrap(), -1);
        assert_eq!(character(&p("2,2"), &p("3,1")).unwrap(), -1);
        assert!(matches!(character(&p("3"), &p("2,1,1")), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn character_table_d4() {
        // Standard S_4 table, rows (4),(3,1),(2,2),(2,1,1),(1^4).
        let expected = vec![
            vec![1, 1, 1, 1, 1],
            vec![-1, 0, -1, 1, 3],
            vec![0, -1, 2, 0, 2],
            vec![1, 0, -1, -1, 3],
            vec![-1, 1, 1, -1, 1],
        ];
        assert_eq!(character_table(4), expected);
    }
}
