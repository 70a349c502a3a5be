//! The centre of S(n,d): class-sum images `Z_λ`, centrality, and the
//! primitive central idempotents `ε_λ`.
//!
//! `S_d` acts on positions by `(w·𝐣)_k = j_{w(k)}`, the action of `ρ(w)` on
//! `V^{⊗d}`. Counting with `w⁻¹` instead gives the same coefficients because
//! inversion preserves cycle type.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::basis::{canonical_pair, enumerate_basis, BasisMatrix, Rational, SchurElement};
use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::linalg;
use crate::multiplication::{multiply, ProductTable};
use crate::symgrp::{factorial, partitions_of, tableaux_count, CharacterCache, Partition};

/// `c_{λ,D}` for every `λ ⊢ d` at once, keyed by cycle type (zero entries omitted).
///
/// Enumerates the permutations `w` with `w·𝐣 = 𝐢` for the canonical pair of
/// `D` by placing, position by position, a source position carrying the
/// required letter.
pub fn class_coefficients(m: &BasisMatrix) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if m.row_sums() != m.col_sums() {
        return out;
    }
    let gp = canonical_pair(m);
    let (top, bottom) = (gp.top().letters(), gp.bottom().letters());
    let d = top.len();

    fn rec(k: usize, top: &[usize], bottom: &[usize], w: &mut Vec<usize>, used: &mut [bool], out: &mut BTreeMap<Partition, u64>) {
        if k == top.len() {
            *out.entry(cycle_type_of(w)).or_default() += 1;
            return;
        }
        for p in 0..bottom.len() {
            if !used[p] && bottom[p] == top[k] {
                used[p] = true;
                w.push(p);
                rec(k + 1, top, bottom, w, used, out);
                w.pop();
                used[p] = false;
            }
        }
    }

    rec(0, top, bottom, &mut Vec::with_capacity(d), &mut vec![false; d], &mut out);
    out
}

fn cycle_type_of(w: &[usize]) -> Partition {
    let mut seen = vec![false; w.len()];
    let mut lens = Vec::new();
    for s in 0..w.len() {
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = w[k];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    Partition::from_unsorted(lens)
}

/// `c_{λ,D}`: permutations of cycle type `λ` carrying `𝐣` to `𝐢`, where
/// `(𝐢 over 𝐣)` is the canonical pair of `D`.
pub fn class_coefficient(lambda: &Partition, m: &BasisMatrix) -> Result<u64> {
    if lambda.weight() != m.degree() {
        return Err(invalid(format!(
            "partition {lambda} has weight {} but {m} has degree {}",
            lambda.weight(),
            m.degree()
        )));
    }
    Ok(class_coefficients(m).get(lambda).copied().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentreKind {
    /// `Z_λ`, the image of the class sum `c_λ`.
    ClassSum,
    /// `ε_λ`.
    Idempotent,
}

/// A central element labelled by the partition it is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreElement {
    pub kind: CentreKind,
    pub partition: Partition,
    pub element: SchurElement,
}

impl fmt::Display for CentreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            CentreKind::ClassSum => "Z",
            CentreKind::Idempotent => "ε",
        };
        write!(f, "{name}({}) = {}", self.partition, self.element)
    }
}

/// `Z_λ = Σ_D c_{λ,D} ξ_D`.
pub fn centre_basis_element(lambda: &Partition, n: usize, d: usize) -> Result<CentreElement> {
    if lambda.weight() != d {
        return Err(invalid(format!("partition {lambda} is not a partition of {d}")));
    }
    let mut element = SchurElement::zero(n, d);
    for m in enumerate_basis(n, d) {
        let c = class_coefficient(lambda, &m)?;
        element.add_term(m, Rational::from_integer(BigInt::from(c)));
    }
    Ok(CentreElement { kind: CentreKind::ClassSum, partition: lambda.clone(), element })
}

/// All `Z_λ`, `λ ⊢ d`, in canonical partition order.
pub fn centre_basis(n: usize, d: usize, exec: Exec) -> Vec<CentreElement> {
    let basis = enumerate_basis(n, d);
    let coeffs = exec.map(&basis, class_coefficients);
    partitions_of(d)
        .into_iter()
        .map(|lambda| {
            let mut element = SchurElement::zero(n, d);
            for (m, cs) in basis.iter().zip(&coeffs) {
                if let Some(&c) = cs.get(&lambda) {
                    element.add_term(m.clone(), Rational::from_integer(BigInt::from(c)));
                }
            }
            CentreElement { kind: CentreKind::ClassSum, partition: lambda, element }
        })
        .collect()
}

/// Whether `x` commutes with every `ξ_D`.
pub fn is_central(x: &SchurElement) -> bool {
    is_central_with(x, Exec::default())
}

pub fn is_central_with(x: &SchurElement, exec: Exec) -> bool {
    let basis = enumerate_basis(x.n(), x.d());
    exec.all(&basis, |m| {
        let xi = SchurElement::basis(m);
        multiply(x, &xi).expect("same ambient") == multiply(&xi, x).expect("same ambient")
    })
}

/// A basis element that fails to commute with `x`, if any.
pub fn non_commuting_witness(x: &SchurElement, table: &ProductTable, exec: Exec) -> Option<BasisMatrix> {
    exec.find_map(table.basis(), |m| {
        let xi = SchurElement::basis(m);
        let left = table.multiply(x, &xi).ok()?;
        let right = table.multiply(&xi, x).ok()?;
        (left != right).then(|| m.clone())
    })
}

/// `ε_λ = f_λ/d! · Σ_μ χ_λ(μ) Z_μ` from precomputed `Z_μ` (canonical order).
fn idempotent_from(lambda: &Partition, zs: &[CentreElement], cache: &mut CharacterCache) -> Result<CentreElement> {
    let d = lambda.weight();
    let (n, zd) = zs.first().map(|z| (z.element.n(), z.element.d())).unwrap_or((1, d));
    if zd != d {
        return Err(invalid(format!("partition {lambda} is not a partition of {zd}")));
    }
    let scale = Rational::new(BigInt::from(tableaux_count(lambda)), BigInt::from(factorial(d)));
    let mut element = SchurElement::zero(n, d);
    for z in zs {
        let chi = cache.value(lambda, &z.partition)?;
        if chi != 0 {
            element = element.add(&z.element.scale(&Rational::from_integer(BigInt::from(chi))))?;
        }
    }
    Ok(CentreElement {
        kind: CentreKind::Idempotent,
        partition: lambda.clone(),
        element: element.scale(&scale),
    })
}

/// `ε_λ`. Zero when `λ` has more than `n` parts; this is computed from the
/// formula, not special-cased.
pub fn primitive_idempotent(lambda: &Partition, n: usize, d: usize) -> Result<CentreElement> {
    if lambda.weight() != d {
        return Err(invalid(format!("partition {lambda} is not a partition of {d}")));
    }
    let zs = centre_basis(n, d, Exec::Sequential);
    idempotent_from(lambda, &zs, &mut CharacterCache::default())
}

/// `ε_λ` for every `λ ⊢ d`, in canonical order.
pub fn primitive_idempotents(n: usize, d: usize, exec: Exec) -> Vec<CentreElement> {
    let zs = centre_basis(n, d, exec);
    let lambdas = partitions_of(d);
    exec.map(&lambdas, |lambda| {
        idempotent_from(lambda, &zs, &mut CharacterCache::default()).expect("weights agree")
    })
}

/// Rank of `{Z_λ : λ ⊢ d}` in the ξ basis.
pub fn centre_dimension(n: usize, d: usize) -> usize {
    centre_dimension_with(n, d, Exec::default())
}

pub fn centre_dimension_with(n: usize, d: usize, exec: Exec) -> usize {
    let basis = enumerate_basis(n, d);
    let rows: Vec<Vec<BigInt>> = centre_basis(n, d, exec)
        .iter()
        .map(|z| basis.iter().map(|m| z.element.coefficient(m).to_integer()).collect())
        .collect();
    linalg::rank(&rows)
}

/// Coefficients `a_λ` with `x = Σ a_λ ε_λ`, if `x` lies in their span.
pub fn expand_in(x: &SchurElement, elements: &[CentreElement]) -> Option<Vec<Rational>> {
    let mut keys: Vec<&BasisMatrix> = x.terms().keys().collect();
    for e in elements {
        keys.extend(e.element.terms().keys());
    }
    keys.sort();
    keys.dedup();
    let columns: Vec<Vec<Rational>> = elements
        .iter()
        .map(|e| keys.iter().map(|m| e.element.coefficient(m)).collect())
        .collect();
    let target: Vec<Rational> = keys.iter().map(|m| x.coefficient(m)).collect();
    if columns.is_empty() {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    linalg::solve(&columns, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::identity_element;

    fn mat(s: &str) -> BasisMatrix {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let col = p("1,1,1,1");
        assert_eq!(class_coefficient(&col, &mat("2,0;0,2")).unwrap(), 1);
        assert_eq!(class_coefficient(&col, &mat("2,1;1,0")).unwrap(), 0);
        assert_eq!(class_coefficient(&p("4"), &mat("2,1;1,0")).unwrap(), 2);
        assert_eq!(class_coefficient(&p("2,2"), &mat("2,0;0,2")).unwrap(), 1);
        assert_eq!(class_coefficient(&p("4"), &mat("3,0;1,0")).unwrap(), 0);
        assert!(class_coefficient(&p("3"), &mat("2,0;0,2")).is_err());
    }

    #[test]
    fn z_column_is_identity() {
        let z = centre_basis_element(&Partition::column(4), 2, 4).unwrap();
        assert_eq!(z.element, identity_element(2, 4));
    }

    #[test]
    fn z_four_matches_worked_example() {
        let z = centre_basis_element(&p("4"), 2, 4).unwrap();
        assert_eq!(
            z.to_string(),
            "Z(4) = 6ξ[4,0;0,0] + 2ξ[2,1;1,0] + ξ[1,1;1,1] + 2ξ[0,2;2,0] + 2ξ[0,1;1,2] + 6ξ[0,0;0,4]"
        );
    }

    #[test]
    fn centrality_examples() {
        assert!(is_central(&identity_element(2, 2)));
        let table = ProductTable::build(2, 2, Exec::Sequential);
        let x = SchurElement::basis(&mat("1,1;0,0"));
        assert!(!is_central(&x));
        assert!(non_commuting_witness(&x, &table, Exec::Sequential).is_some());
        let z = centre_basis_element(&p("3,1"), 2, 4).unwrap();
        assert!(is_central(&z.element));
    }

    #[test]
    fn idempotent_examples() {
        let row = primitive_idempotent(&p("4"), 2, 4).unwrap().element;
        assert_eq!(multiply(&row, &row).unwrap(), row);
        assert!(primitive_idempotent(&p("2,1,1"), 2, 4).unwrap().element.is_zero());
        let eps = primitive_idempotents(2, 4, Exec::Sequential);
        let mut sum = SchurElement::zero(2, 4);
        for e in eps.iter().filter(|e| e.partition.len() <= 2) {
            sum = sum.add(&e.element).unwrap();
        }
        assert_eq!(sum, identity_element(2, 4));
    }

    #[test]
    fn dimensions() {
        assert_eq!(centre_dimension(4, 4), 5);
        assert_eq!(centre_dimension(1, 5), 1);
        assert_eq!(centre_dimension(2, 4), 3);
        assert_eq!(centre_dimension(3, 0), 1);
    }

    #[test]
    fn degree_zero() {
        let zs = centre_basis(2, 0, Exec::Sequential);
        assert_eq!(zs.len(), 1);
        assert_eq!(zs[0].element, identity_element(2, 0));
        let eps = primitive_idempotents(2, 0, Exec::Sequential);
        assert_eq!(eps[0].element, identity_element(2, 0));
    }
}
