//! Products in the ξ_D basis via Euler-function classes.
//!
//! An Euler function matches each edge `E` of `Γ_D` with an edge of `Γ_{D'}`
//! whose source is the destination of `E`. Up to relabelling parallel edges
//! in either graph it is determined by the tensor `a[k][i][j]`: how many
//! `j → i` edges of `Γ_D` continue along `i → k` edges of `Γ_{D'}`.
//!
//! Composition order: `ξ_A · ξ_B` acts on the tensor space by applying `ξ_A`
//! first and then `ξ_B`, so paths in the product graph read `A` then `B`.
//! This is the only order under which the graph product is nonzero on the
//! three-vertex worked example (`D = 2,0,0;1,0,2;0,0,0`,
//! `D' = 1,0,0;1,1,0;0,2,0`); the dense oracle confirms it on whole algebras.
//!
//! Each class contributes its product graph with weight
//! `∏_{k,j} E_kj! / ∏_{k,i,j} a[k][i][j]!`, the number of ways the parallel
//! `j → k` edges of the product graph can be routed through the middle
//! vertices as the class prescribes. The weight is 1 whenever no product
//! edge bundle is split across several middle vertices. Counting every class
//! once regardless of splitting gives a non-associative product that
//! disagrees with operator composition.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::basis::{enumerate_basis, BasisMatrix, Rational, SchurElement};
use crate::error::{invalid, Result};
use crate::exec::Exec;

/// One equivalence class of Euler functions `Γ_D → Γ_{D'}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerClass {
    n: usize,
    /// Row-major `a[k][i][j]`.
    tensor: Vec<u32>,
}

impl EulerClass {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `j → i` edges of `Γ_D` sent to `i → k` edges of `Γ_{D'}`
    /// (0-based letters).
    pub fn count(&self, k: usize, i: usize, j: usize) -> u32 {
        let n = self.n;
        self.tensor[(k * n + i) * n + j]
    }

    /// Nonzero entries as 1-based `(k, i, j, count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, u32)> + '_ {
        let n = self.n;
        self.tensor
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(idx, &c)| (idx / (n * n) + 1, (idx / n) % n + 1, idx % n + 1, c))
    }

    /// `Γ_{DfD'}`: entry `(k, j)` counts paths `j → i → k`.
    pub fn product_graph(&self) -> BasisMatrix {
        let n = self.n;
        let entries = (0..n * n)
            .map(|kj| {
                let (k, j) = (kj / n, kj % n);
                (0..n).map(|i| self.count(k, i, j)).sum()
            })
            .collect();
        BasisMatrix::from_row_major(n, entries).expect("n × n")
    }

    /// Number of operator-level contributions this class makes to its
    /// product graph (see the module docs).
    pub fn multiplicity(&self) -> u64 {
        let n = self.n;
        let mut total = 1u64;
        for k in 0..n {
            for j in 0..n {
                total *= multinomial((0..n).map(|i| self.count(k, i, j)));
            }
        }
        total
    }
}

pub fn product_graph(c: &EulerClass) -> BasisMatrix {
    c.product_graph()
}

/// `(Σ parts)! / ∏ parts!`.
pub(crate) fn multinomial(parts: impl IntoIterator<Item = u32>) -> u64 {
    let mut total = 0u64;
    let mut acc = 1u64;
    for p in parts {
        for t in 1..=p as u64 {
            total += 1;
            // acc * total / t stays integral: acc·C(total, t) built incrementally.
            acc = acc * total / t;
        }
    }
    acc
}

/// All nonnegative integer `rows.len() × cols.len()` matrices with the given
/// row and column sums, row-major, in lexicographic order.
pub(crate) fn contingency_tables(rows: &[u32], cols: &[u32]) -> Vec<Vec<u32>> {
    let (r, c) = (rows.len(), cols.len());
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return Vec::new();
    }
    fn rec(
        cell: usize,
        r: usize,
        c: usize,
        row_left: &mut [u32],
        col_left: &mut [u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cell == r * c {
            if row_left.iter().all(|&x| x == 0) && col_left.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let (ri, ci) = (cell / c, cell % c);
        let hi = row_left[ri].min(col_left[ci]);
        // The last cell of a row must absorb the remainder.
        let lo = if ci + 1 == c { row_left[ri] } else { 0 };
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            row_left[ri] -= v;
            col_left[ci] -= v;
            cur.push(v);
            rec(cell + 1, r, c, row_left, col_left, cur, out);
            cur.pop();
            row_left[ri] += v;
            col_left[ci] += v;
        }
    }
    let mut out = Vec::new();
    if r == 0 || c == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(0, r, c, &mut rows.to_vec(), &mut cols.to_vec(), &mut Vec::with_capacity(r * c), &mut out);
    out
}

fn check_same(a: &BasisMatrix, b: &BasisMatrix) -> Result<()> {
    if a.n() != b.n() || a.degree() != b.degree() {
        return Err(invalid(format!(
            "ambient mismatch: {a} in M({}, {}) vs {b} in M({}, {})",
            a.n(),
            a.degree(),
            b.n(),
            b.degree()
        )));
    }
    Ok(())
}

/// `Eul(D, D')` up to equivalence, as marginal-constrained tensors.
///
/// For each middle vertex `i` the slice `a[·][i][·]` is an independent
/// contingency table with margins row `i` of `D` (over sources `j`) and
/// column `i` of `D'` (over destinations `k`).
pub fn euler_classes(first: &BasisMatrix, second: &BasisMatrix) -> Result<Vec<EulerClass>> {
    check_same(first, second)?;
    let n = first.n();
    let mut slices = Vec::with_capacity(n);
    for i in 0..n {
        let sources: Vec<u32> = (0..n).map(|j| first.get(i, j)).collect();
        let dests: Vec<u32> = (0..n).map(|k| second.get(k, i)).collect();
        let tables = contingency_tables(&sources, &dests);
        if tables.is_empty() {
            return Ok(Vec::new());
        }
        slices.push(tables);
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut tensor = vec![0u32; n * n * n];
        for (i, &t) in choice.iter().enumerate() {
            // slice table is indexed [j][k]
            for (jk, &v) in slices[i][t].iter().enumerate() {
                let (j, k) = (jk / n, jk % n);
                tensor[(k * n + i) * n + j] = v;
            }
        }
        out.push(EulerClass { n, tensor });

        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < slices[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// `ξ_A · ξ_B` as a map from product matrix to coefficient.
pub fn basis_product(a: &BasisMatrix, b: &BasisMatrix) -> Result<BTreeMap<BasisMatrix, u64>> {
    let mut out: BTreeMap<BasisMatrix, u64> = BTreeMap::new();
    for class in euler_classes(a, b)? {
        *out.entry(class.product_graph()).or_default() += class.multiplicity();
    }
    Ok(out)
}

/// Bilinear extension of [`basis_product`].
pub fn multiply(x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
    x.check_ambient(y)?;
    let mut out = SchurElement::zero(x.n(), x.d());
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let coeff = ca * cb;
            for (m, mult) in basis_product(a, b)? {
                out.add_term(m, &coeff * Rational::from_integer(BigInt::from(mult)));
            }
        }
    }
    Ok(out)
}

/// Coefficient of `ξ_D` in `ξ_{D'} · ξ_{D''}`, counted directly on `Γ_D`.
///
/// Counts labellings `r` of the (distinguishable) edges of `Γ_D` by a middle
/// letter `k` such that, for an edge from source `j` to destination `i`
/// labelled `k`:
/// the edges `j → k` of `Γ_{D'}` are exactly matched by the `Γ_D` edges out
/// of `j` labelled `k`, and the edges `k → i` of `Γ_{D''}` by the `Γ_D` edges
/// into `i` labelled `k`.
pub fn structure_constant(first: &BasisMatrix, second: &BasisMatrix, target: &BasisMatrix) -> Result<u64> {
    check_same(first, second)?;
    check_same(first, target)?;
    let n = target.n();
    if target.col_sums() != first.col_sums()
        || target.row_sums() != second.row_sums()
        || first.row_sums() != second.col_sums()
    {
        return Ok(0);
    }

    struct State<'a> {
        n: usize,
        target: &'a BasisMatrix,
        // first_left[k][j]: unmatched j → k edges of Γ_{D'}
        first_left: Vec<u32>,
        // second_left[i][k]: unmatched k → i edges of Γ_{D''}
        second_left: Vec<u32>,
    }

    // Distribute the target cell (i, j) over middle letters k, then recurse.
    fn cell(st: &mut State, idx: usize) -> u64 {
        let n = st.n;
        if idx == n * n {
            return u64::from(st.first_left.iter().all(|&x| x == 0) && st.second_left.iter().all(|&x| x == 0));
        }
        let (i, j) = (idx / n, idx % n);
        let total = st.target.get(i, j);
        let mut parts = vec![0u32; n];
        split(st, idx, i, j, 0, total, &mut parts)
    }

    fn split(st: &mut State, idx: usize, i: usize, j: usize, k: usize, left: u32, parts: &mut [u32]) -> u64 {
        let n = st.n;
        if k + 1 == n {
            let v = left;
            if v > st.first_left[k * n + j] || v > st.second_left[i * n + k] {
                return 0;
            }
            parts[k] = v;
            st.first_left[k * n + j] -= v;
            st.second_left[i * n + k] -= v;
            let rest = cell(st, idx + 1);
            st.first_left[k * n + j] += v;
            st.second_left[i * n + k] += v;
            return rest * multinomial(parts.iter().copied());
        }
        let hi = left.min(st.first_left[k * n + j]).min(st.second_left[i * n + k]);
        let mut total = 0;
        for v in 0..=hi {
            parts[k] = v;
            st.first_left[k * n + j] -= v;
            st.second_left[i * n + k] -= v;
            total += split(st, idx, i, j, k + 1, left - v, parts);
            st.first_left[k * n + j] += v;
            st.second_left[i * n + k] += v;
        }
        parts[k] = 0;
        total
    }

    let mut st = State {
        n,
        target,
        first_left: first.entries().to_vec(),
        second_left: second.entries().to_vec(),
    };
    Ok(cell(&mut st, 0))
}

/// Every basis product of S(n,d), indexed by position in [`enumerate_basis`].
#[derive(Debug, Clone)]
pub struct ProductTable {
    basis: Vec<BasisMatrix>,
    index: BTreeMap<BasisMatrix, usize>,
    /// `products[a * len + b]` holds `ξ_a · ξ_b` as `(basis index, coefficient)`.
    products: Vec<Vec<(usize, u64)>>,
}

impl ProductTable {
    pub fn build(n: usize, d: usize, exec: Exec) -> Self {
        let basis = enumerate_basis(n, d);
        let index: BTreeMap<BasisMatrix, usize> =
            basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let len = basis.len();
        let products = exec.map_range(len * len, |ab| {
            let (a, b) = (ab / len, ab % len);
            basis_product(&basis[a], &basis[b])
                .expect("same ambient")
                .into_iter()
                .map(|(m, c)| (index[&m], c))
                .collect()
        });
        ProductTable { basis, index, products }
    }

    pub fn basis(&self) -> &[BasisMatrix] {
        &self.basis
    }

    pub fn index_of(&self, m: &BasisMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, u64)] {
        &self.products[a * self.basis.len() + b]
    }

    pub fn product_element(&self, a: usize, b: usize) -> SchurElement {
        let first = &self.basis[a];
        let mut out = SchurElement::zero(first.n(), first.degree());
        for &(m, c) in self.product(a, b) {
            out.add_term(self.basis[m].clone(), Rational::from_integer(c.into()));
        }
        out
    }

    /// Multiplies arbitrary elements using the cached table.
    pub fn multiply(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        x.check_ambient(y)?;
        let mut dense = vec![Rational::zero(); self.basis.len()];
        for (a, ca) in x.iter() {
            let ia = self.index_of(a).ok_or_else(|| invalid("element outside table ambient"))?;
            for (b, cb) in y.iter() {
                let ib = self.index_of(b).ok_or_else(|| invalid("element outside table ambient"))?;
                let coeff = ca * cb;
                for &(m, c) in self.product(ia, ib) {
                    dense[m] += &coeff * Rational::from_integer(c.into());
                }
            }
        }
        SchurElement::from_terms(
            x.n(),
            x.d(),
            dense.into_iter().enumerate().map(|(k, c)| (self.basis[k].clone(), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::identity_element;

    fn mat(s: &str) -> BasisMatrix {
        s.parse().unwrap()
    }

    const D: &str = "2,0,0;1,0,2;0,0,0";
    const D1: &str = "1,0,0;1,1,0;0,2,0";
    const D2: &str = "1,0,0;2,0,0;0,0,2";
    const D3: &str = "1,0,0;1,0,1;1,0,1";

    #[test]
    fn worked_example_classes() {
        let classes = euler_classes(&mat(D), &mat(D1)).unwrap();
        assert_eq!(classes.len(), 2);
        let mut graphs: Vec<BasisMatrix> = classes.iter().map(product_graph).collect();
        graphs.sort();
        assert_eq!(graphs, vec![mat(D3), mat(D2)]);
    }

    #[test]
    fn worked_example_product() {
        // Operator composition gives 2 on D'' (the 1 → 2 bundle of Γ_{D''}
        // is split over middle vertices 1 and 2) and 1 on D'''.
        let p = basis_product(&mat(D), &mat(D1)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[&mat(D2)], 2);
        assert_eq!(p[&mat(D3)], 1);
        // Reverse order is content-obstructed.
        assert!(basis_product(&mat(D1), &mat(D)).unwrap().is_empty());
    }

    #[test]
    fn structure_constant_examples() {
        assert_eq!(structure_constant(&mat(D), &mat(D1), &mat(D2)).unwrap(), 2);
        assert_eq!(structure_constant(&mat(D), &mat(D1), &mat(D3)).unwrap(), 1);
        assert_eq!(structure_constant(&mat(D1), &mat(D), &mat(D2)).unwrap(), 0);
        assert!(structure_constant(&mat("1,0;0,0"), &mat(D), &mat(D2)).is_err());
    }

    #[test]
    fn diagonal_classes_forced() {
        let mu = BasisMatrix::diagonal(&[2, 1, 1]);
        let classes = euler_classes(&mu, &mu).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].product_graph(), mu);
        assert_eq!(classes[0].multiplicity(), 1);
        let other = BasisMatrix::diagonal(&[1, 2, 1]);
        assert!(euler_classes(&mu, &other).unwrap().is_empty());
        assert!(euler_classes(&mu, &mat("1,0;0,3")).is_err());
    }

    #[test]
    fn weight_projector_is_idempotent() {
        let p = SchurElement::basis(&BasisMatrix::diagonal(&[2, 0]));
        assert_eq!(multiply(&p, &p).unwrap(), p);
    }

    #[test]
    fn symmetrize_then_project_back() {
        // (2,0)-space → (1,1)-space → (2,0)-space picks up both arrangements.
        let up = SchurElement::basis(&mat("1,0;1,0"));
        let down = SchurElement::basis(&mat("1,1;0,0"));
        let p = multiply(&up, &down).unwrap();
        assert_eq!(p.to_string(), "2ξ[2,0;0,0]");
    }

    #[test]
    fn identity_is_neutral() {
        let id = identity_element(2, 3);
        for m in enumerate_basis(2, 3) {
            let x = SchurElement::basis(&m);
            assert_eq!(multiply(&id, &x).unwrap(), x);
            assert_eq!(multiply(&x, &id).unwrap(), x);
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial([2, 1]), 3);
        assert_eq!(multinomial([1, 1, 1]), 6);
        assert_eq!(multinomial([0, 4, 0]), 1);
        assert_eq!(multinomial([3, 3, 2]), 560);
    }

    #[test]
    fn contingency_counts() {
        assert_eq!(contingency_tables(&[2, 1], &[1, 2]).len(), 2);
        assert_eq!(contingency_tables(&[1, 1, 1], &[1, 1, 1]).len(), 6);
        assert!(contingency_tables(&[2], &[1]).is_empty());
        assert_eq!(contingency_tables(&[0, 0], &[0, 0]), vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn table_matches_direct_products() {
        let table = ProductTable::build(2, 3, Exec::Sequential);
        let par = ProductTable::build(2, 3, Exec::Parallel);
        let len = table.basis().len();
        for a in 0..len {
            for b in 0..len {
                let direct = multiply(
                    &SchurElement::basis(&table.basis()[a]),
                    &SchurElement::basis(&table.basis()[b]),
                )
                .unwrap();
                assert_eq!(table.product_element(a, b), direct);
                assert_eq!(par.product(a, b), table.product(a, b));
            }
        }
    }
}
