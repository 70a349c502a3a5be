//! The ξ_D basis of S(n,d): index matrices, multi-indices, generalized
//! permutations, sparse elements and the action on the tensor space.
//!
//! Orientation: entry `(i, j)` of a [`BasisMatrix`] counts edges from source
//! `j` (first graph row) to destination `i` (second graph row). Accordingly
//! `ξ_D` sends `e_𝐣` to the sum of `e_𝐢` with `D(𝐢, 𝐣) = D`, so the column
//! sums of `D` are the input content and the row sums the output content.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::symgrp::Permutation;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |e: &dyn fmt::Display| Error::Parse(format!("bad rational {s:?}: {e}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| bad(&e))?;
            let q: BigInt = q.trim().parse().map_err(|e| bad(&e))?;
            if q.is_zero() {
                return Err(bad(&"zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|e| bad(&e))?)),
    }
}

/// A word `(i_1, …, i_d)` over the alphabet `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    letters: Vec<usize>,
}

impl MultiIndex {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x > n) {
            return Err(invalid(format!("letter {bad} outside 1..={n}")));
        }
        Ok(MultiIndex { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter multiplicities `(#1, …, #n)`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &x in &self.letters {
            c[x - 1] += 1;
        }
        c
    }

    /// Position action of `S_d`: `(w·𝐢)_k = i_{w(k)}`.
    pub fn permuted(&self, w: &Permutation) -> MultiIndex {
        assert_eq!(w.degree(), self.letters.len(), "degree mismatch");
        MultiIndex {
            letters: w.images().iter().map(|&k| self.letters[k - 1]).collect(),
        }
    }

    /// Position in the base-`n` ordering of `I(n,d)` (first letter most significant).
    pub fn to_index(&self, n: usize) -> usize {
        self.letters.iter().fold(0, |acc, &x| acc * n + (x - 1))
    }

    pub fn from_index(mut index: usize, n: usize, d: usize) -> MultiIndex {
        let mut letters = vec![0; d];
        for slot in letters.iter_mut().rev() {
            *slot = index % n + 1;
            index /= n;
        }
        MultiIndex { letters }
    }

    /// All of `I(n,d)` in index order.
    pub fn all(n: usize, d: usize) -> impl Iterator<Item = MultiIndex> {
        let total = n.pow(d as u32);
        (0..total).map(move |idx| MultiIndex::from_index(idx, n, d))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().join(","))
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(MultiIndex { letters: Vec::new() });
        }
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad letter {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.contains(&0) {
            return Err(Error::Parse("letters are 1-based".into()));
        }
        Ok(MultiIndex { letters })
    }
}

/// An `n × n` nonnegative integer matrix; indexes the basis element `ξ_D`.
///
/// Ordered lexicographically on the row-major entry sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl BasisMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(invalid("matrix must have at least one row"));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(invalid(format!("matrix is not square: row of length {} in a {n}-row matrix", r.len())));
        }
        Ok(BasisMatrix {
            n,
            entries: rows.concat(),
        })
    }

    pub fn from_row_major(n: usize, entries: Vec<u32>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(invalid(format!("expected {} entries for n = {n}", n * n)));
        }
        Ok(BasisMatrix { n, entries })
    }

    /// Diagonal matrix with the given diagonal.
    pub fn diagonal(diag: &[u32]) -> Self {
        let n = diag.len();
        let mut entries = vec![0; n * n];
        for (k, &v) in diag.iter().enumerate() {
            entries[k * n + k] = v;
        }
        BasisMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        BasisMatrix { n, entries: vec![0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry sum.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&x| x as usize).sum()
    }

    /// Entry at 0-based `(row, col)`: edges from source `col+1` to destination `row+1`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n)
    }

    /// Output content: how often each letter occurs in `𝐢`.
    pub fn row_sums(&self) -> Vec<usize> {
        self.rows().map(|r| r.iter().map(|&x| x as usize).sum()).collect()
    }

    /// Input content: how often each letter occurs in `𝐣`.
    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.get(r, c) as usize).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || self.get(r, c) == 0))
    }

    pub fn transpose(&self) -> BasisMatrix {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        BasisMatrix { n, entries }
    }
}

impl fmt::Display for BasisMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rows().map(|r| r.iter().join(",")).join(";"))
    }
}

impl FromStr for BasisMatrix {
    type Err = Error;

    /// Parses `"2,0,0;1,0,2;0,0,0"` (rows split by `;`, entries by `,`).
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(format!("bad matrix entry {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BasisMatrix::from_rows(&rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A two-line array whose columns are sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedPermutation {
    top: MultiIndex,
    bottom: MultiIndex,
}

impl GeneralizedPermutation {
    /// Sorts the columns of an arbitrary two-line array.
    pub fn from_columns(top: &MultiIndex, bottom: &MultiIndex) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(invalid("two-line array rows differ in length"));
        }
        let (t, b): (Vec<usize>, Vec<usize>) = top
            .letters
            .iter()
            .copied()
            .zip(bottom.letters.iter().copied())
            .sorted()
            .unzip();
        Ok(GeneralizedPermutation {
            top: MultiIndex { letters: t },
            bottom: MultiIndex { letters: b },
        })
    }

    pub fn top(&self) -> &MultiIndex {
        &self.top
    }

    pub fn bottom(&self) -> &MultiIndex {
        &self.bottom
    }

    pub fn columns(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top.letters.iter().copied().zip(self.bottom.letters.iter().copied())
    }
}

/// All of `M(n,d)` in lexicographic order of the row-major entries.
pub fn enumerate_basis(n: usize, d: usize) -> Vec<BasisMatrix> {
    fn rec(slot: usize, remaining: u32, cur: &mut Vec<u32>, n: usize, out: &mut Vec<BasisMatrix>) {
        let cells = n * n;
        if slot + 1 == cells {
            cur.push(remaining);
            out.push(BasisMatrix { n, entries: cur.clone() });
            cur.pop();
            return;
        }
        for v in 0..=remaining {
            cur.push(v);
            rec(slot + 1, remaining - v, cur, n, out);
            cur.pop();
        }
    }
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    rec(0, d as u32, &mut Vec::with_capacity(n * n), n, &mut out);
    out
}

/// `binomial(n² + d − 1, d)`, the dimension of S(n,d).
pub fn basis_size(n: usize, d: usize) -> u128 {
    let top = (n * n + d) as u128 - 1;
    (0..d as u128).fold(1u128, |acc, k| acc * (top - k) / (k + 1))
}

/// `D(𝐢, 𝐣)`: entry `(a, b)` counts positions `k` with `(i_k, j_k) = (a, b)`.
pub fn matrix_from_pair(i: &MultiIndex, j: &MultiIndex, n: usize) -> Result<BasisMatrix> {
    if i.len() != j.len() {
        return Err(invalid(format!("multi-index lengths differ: {} vs {}", i.len(), j.len())));
    }
    let mut m = BasisMatrix::zero(n);
    for (&a, &b) in i.letters.iter().zip(&j.letters) {
        if a == 0 || a > n || b == 0 || b > n {
            return Err(invalid(format!("letter outside 1..={n}")));
        }
        m.entries[(a - 1) * n + (b - 1)] += 1;
    }
    Ok(m)
}

/// The unique generalized permutation `(𝐢 over 𝐣)` with `D(𝐢, 𝐣) = D`.
pub fn canonical_pair(m: &BasisMatrix) -> GeneralizedPermutation {
    let mut top = Vec::with_capacity(m.degree());
    let mut bottom = Vec::with_capacity(m.degree());
    for a in 0..m.n {
        for b in 0..m.n {
            for _ in 0..m.get(a, b) {
                top.push(a + 1);
                bottom.push(b + 1);
            }
        }
    }
    GeneralizedPermutation {
        top: MultiIndex { letters: top },
        bottom: MultiIndex { letters: bottom },
    }
}

/// Rearranges `v` into the next lexicographically larger arrangement;
/// returns false (leaving `v` sorted) after the last one. Duplicates are
/// handled, so starting from sorted order visits each distinct arrangement once.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
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

/// Every `𝐢` with `D(𝐢, 𝐣) = D`, sorted.
///
/// The positions carrying letter `b` in `𝐣` must receive, in some order, the
/// destinations listed by column `b` of `D`; candidates are the products of
/// the distinct arrangements of those multisets.
pub fn basis_images(m: &BasisMatrix, j: &MultiIndex) -> Result<Vec<MultiIndex>> {
    let n = m.n;
    if j.len() != m.degree() {
        return Err(invalid(format!("multi-index has length {} but D has degree {}", j.len(), m.degree())));
    }
    if j.letters.iter().any(|&x| x == 0 || x > n) {
        return Err(invalid(format!("multi-index {j} has letters outside 1..={n}")));
    }
    if j.content(n) != m.col_sums() {
        return Ok(Vec::new());
    }
    let groups: Vec<(Vec<usize>, Vec<usize>)> = (0..n)
        .map(|b| {
            let positions = (0..j.len()).filter(|&p| j.letters[p] == b + 1).collect();
            let dests = (0..n)
                .flat_map(|a| std::iter::repeat_n(a + 1, m.get(a, b) as usize))
                .collect();
            (positions, dests)
        })
        .collect();

    fn rec(g: usize, groups: &[(Vec<usize>, Vec<usize>)], cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if g == groups.len() {
            out.push(MultiIndex { letters: cur.clone() });
            return;
        }
        let (positions, dests) = &groups[g];
        let mut arrangement = dests.clone();
        loop {
            for (&p, &a) in positions.iter().zip(&arrangement) {
                cur[p] = a;
            }
            rec(g + 1, groups, cur, out);
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
    }

    let mut out = Vec::new();
    rec(0, &groups, &mut vec![0; j.len()], &mut out);
    out.sort();
    Ok(out)
}

/// `ξ_D e_𝐣` as a mapping `𝐢 ↦ coefficient` (every coefficient is 1).
pub fn apply_basis(m: &BasisMatrix, j: &MultiIndex) -> Result<BTreeMap<MultiIndex, Rational>> {
    Ok(basis_images(m, j)?
        .into_iter()
        .map(|i| (i, Rational::one()))
        .collect())
}

/// A general element `Σ c_D ξ_D` of S(n,d), kept in sparse canonical form
/// (no zero coefficients), so derived equality is exact equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurElement {
    n: usize,
    d: usize,
    terms: BTreeMap<BasisMatrix, Rational>,
}

impl SchurElement {
    pub fn zero(n: usize, d: usize) -> Self {
        SchurElement { n, d, terms: BTreeMap::new() }
    }

    /// The basis element `ξ_D`.
    pub fn basis(m: &BasisMatrix) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m.clone(), Rational::one());
        SchurElement { n: m.n, d: m.degree(), terms }
    }

    /// Builds an element from `(D, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, d: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisMatrix, Rational)>,
    {
        let mut x = SchurElement::zero(n, d);
        for (m, c) in terms {
            x.check_key(&m)?;
            x.add_term(m, c);
        }
        Ok(x)
    }

    fn check_key(&self, m: &BasisMatrix) -> Result<()> {
        if m.n != self.n || m.degree() != self.d {
            return Err(invalid(format!(
                "matrix {m} does not lie in M({}, {})",
                self.n, self.d
            )));
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, m: BasisMatrix, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<BasisMatrix, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&BasisMatrix, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &BasisMatrix) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn check_ambient(&self, other: &SchurElement) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(invalid(format!(
                "ambient mismatch: S({}, {}) vs S({}, {})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurElement) -> Result<SchurElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SchurElement {
        if c.is_zero() {
            return SchurElement::zero(self.n, self.d);
        }
        SchurElement {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }
}

/// `Σ ξ_D` over diagonal `D ∈ M(n,d)`: the unit of S(n,d).
pub fn identity_element(n: usize, d: usize) -> SchurElement {
    let mut x = SchurElement::zero(n, d);
    for m in enumerate_basis(n, d).into_iter().filter(BasisMatrix::is_diagonal) {
        x.add_term(m, Rational::one());
    }
    x
}

impl fmt::Display for SchurElement {
    /// Terms are written largest matrix first, e.g. `6ξ[4,0;0,0] + 2ξ[2,1;1,0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{}", format_rational(&abs))?;
                } else {
                    write!(f, "({})", format_rational(&abs))?;
                }
            }
            write!(f, "ξ[{m}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(s: &str) -> BasisMatrix {
        s.parse().unwrap()
    }

    fn mi(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_basis(1, 5), vec![mat("5")]);
        assert_eq!(enumerate_basis(2, 2).len(), 10);
        for n in 1..=4 {
            for d in 0..=4 {
                assert_eq!(enumerate_basis(n, d).len() as u128, basis_size(n, d));
            }
        }
        let b = enumerate_basis(2, 3);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn worked_example_matrix() {
        let d = matrix_from_pair(&mi("1,1,2,2,2"), &mi("1,1,1,3,3"), 3).unwrap();
        assert_eq!(d, mat("2,0,0;1,0,2;0,0,0"));
        let gp = canonical_pair(&d);
        assert_eq!(gp.top(), &mi("1,1,2,2,2"));
        assert_eq!(gp.bottom(), &mi("1,1,1,3,3"));
        assert!(matrix_from_pair(&mi("1,2"), &mi("1"), 2).is_err());
    }

    #[test]
    fn constant_pair_and_diagonal_pair() {
        let ones = mi("1,1,1,1");
        assert_eq!(matrix_from_pair(&ones, &ones, 3).unwrap(), BasisMatrix::diagonal(&[4, 0, 0]));
        let gp = canonical_pair(&BasisMatrix::diagonal(&[3, 0]));
        assert_eq!(gp.top(), &mi("1,1,1"));
        assert_eq!(gp.bottom(), &mi("1,1,1"));
    }

    #[test]
    fn canonical_pair_round_trip_and_sorted() {
        for n in 1..=3 {
            for d in 0..=3 {
                for m in enumerate_basis(n, d) {
                    let gp = canonical_pair(&m);
                    assert!(gp.columns().tuple_windows().all(|(a, b)| a <= b));
                    assert_eq!(matrix_from_pair(gp.top(), gp.bottom(), n).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn apply_basis_examples() {
        let diag = BasisMatrix::diagonal(&[2, 1]);
        let j = mi("2,1,1");
        let out = apply_basis(&diag, &j).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[&j], Rational::one());
        assert!(apply_basis(&diag, &mi("2,2,1")).unwrap().is_empty());

        let m = mat("0,2;0,0");
        let out = apply_basis(&m, &mi("2,2")).unwrap();
        assert_eq!(out.keys().cloned().collect::<Vec<_>>(), vec![mi("1,1")]);
    }

    #[test]
    fn apply_basis_matches_scan() {
        for (n, d) in [(2, 3), (3, 2), (2, 4), (3, 3)] {
            for m in enumerate_basis(n, d) {
                for j in MultiIndex::all(n, d) {
                    let scanned: Vec<MultiIndex> = MultiIndex::all(n, d)
                        .filter(|i| matrix_from_pair(i, &j, n).unwrap() == m)
                        .collect();
                    assert_eq!(basis_images(&m, &j).unwrap(), scanned, "D = {m}, j = {j}");
                }
            }
        }
    }

    #[test]
    fn element_arithmetic() {
        let x = SchurElement::from_terms(
            2,
            2,
            [(mat("1,1;0,0"), rational(3)), (mat("0,0;0,2"), Rational::new(1.into(), 2.into()))],
        )
        .unwrap();
        let zero = SchurElement::zero(2, 2);
        assert_eq!(x.add(&zero).unwrap(), x);
        assert!(x.add(&x.scale(&rational(-1))).unwrap().is_zero());
        let xi = SchurElement::basis(&mat("1,1;0,0"));
        assert_eq!(xi.scale(&rational(2)), xi.add(&xi).unwrap());
        assert!(x.add(&SchurElement::zero(2, 3)).is_err());
        assert!(SchurElement::from_terms(2, 2, [(mat("1,0;0,0"), rational(1))]).is_err());
        assert_eq!(x.to_string(), "3ξ[1,1;0,0] + (1/2)ξ[0,0;0,2]");
    }

    #[test]
    fn identity_examples() {
        let id = identity_element(2, 4);
        let expected: Vec<BasisMatrix> = ["0,0;0,4", "1,0;0,3", "2,0;0,2", "3,0;0,1", "4,0;0,0"]
            .iter()
            .map(|s| mat(s))
            .collect();
        assert_eq!(id.terms().keys().cloned().collect::<Vec<_>>(), expected);
        assert_eq!(identity_element(1, 3), SchurElement::basis(&mat("3")));
    }

    #[test]
    fn literals() {
        assert_eq!(mat("2,0,0;1,0,2;0,0,0").to_string(), "2,0,0;1,0,2;0,0,0");
        assert!("1,2;3".parse::<BasisMatrix>().is_err());
        assert!("a".parse::<BasisMatrix>().is_err());
        assert!("1,-1".parse::<BasisMatrix>().is_err());
        assert!("0,1".parse::<MultiIndex>().is_err());
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-3").unwrap()), "-3");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn index_encoding() {
        for (idx, i) in MultiIndex::all(3, 3).enumerate() {
            assert_eq!(i.to_index(3), idx);
        }
    }
}
