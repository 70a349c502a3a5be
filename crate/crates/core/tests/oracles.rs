//! Independent brute-force oracles checked against the library's routes.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use schur_core::basis::{basis_images, rational};
use schur_core::symgrp::{partitions_of, standard_tableaux};
use schur_core::*;

fn mat(s: &str) -> BasisMatrix {
    s.parse().unwrap()
}

/// p(d) by the standard "largest part at most k" recurrence.
fn partition_numbers(max: usize) -> Vec<usize> {
    let mut p = vec![0usize; max + 1];
    p[0] = 1;
    for k in 1..=max {
        for m in k..=max {
            p[m] += p[m - k];
        }
    }
    p
}

#[test]
fn partition_counts() {
    let p = partition_numbers(12);
    for d in 0..=12 {
        let parts = partitions_of(d);
        assert_eq!(parts.len(), p[d], "p({d})");
        assert!(parts.iter().all_unique());
        assert!(parts.windows(2).all(|w| w[0] > w[1]), "reverse lexicographic");
    }
}

/// Standard tableaux by filling the shape with every permutation of 1..=d.
fn brute_force_tableaux(lambda: &Partition) -> usize {
    let d = lambda.weight();
    let shape = lambda.parts();
    Permutation::all(d)
        .filter(|w| {
            let mut rows = Vec::new();
            let mut it = w.images().iter().copied();
            for &len in shape {
                rows.push(it.by_ref().take(len).collect::<Vec<_>>());
            }
            let rows_ok = rows.iter().all(|r| r.windows(2).all(|x| x[0] < x[1]));
            let cols_ok = (1..rows.len()).all(|r| (0..rows[r].len()).all(|c| rows[r - 1][c] < rows[r][c]));
            rows_ok && cols_ok
        })
        .count()
}

#[test]
fn hook_lengths_against_brute_force() {
    for d in 0..=6 {
        for lambda in partitions_of(d) {
            let f = brute_force_tableaux(&lambda);
            assert_eq!(tableaux_count(&lambda) as usize, f, "{lambda}");
            assert_eq!(standard_tableaux(&lambda).len(), f, "{lambda}");
        }
    }
}

#[test]
fn cycle_type_conjugation_invariance() {
    for d in 1..=5 {
        let all: Vec<Permutation> = Permutation::all(d).collect();
        for w in &all {
            let t = cycle_type(w);
            assert_eq!(cycle_type(&w.inverse()), t);
            for v in &all {
                assert_eq!(v.compose(w).compose(&v.inverse()).cycle_type(), t);
            }
        }
    }
}

/// Edges of Γ_D as (destination, source) pairs, one per unit.
fn edges(m: &BasisMatrix) -> Vec<(usize, usize)> {
    let n = m.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for _ in 0..m.get(i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Euler functions as explicit bijections, grouped into classes by closing
/// under transpositions of parallel edges on either side.
fn euler_function_classes(a: &BasisMatrix, b: &BasisMatrix) -> usize {
    let (ea, eb) = (edges(a), edges(b));
    let d = ea.len();
    let valid: Vec<Vec<usize>> = (0..d)
        .permutations(d)
        .filter(|f| (0..d).all(|e| eb[f[e]].1 == ea[e].0))
        .collect();
    let index: HashMap<Vec<usize>, usize> = valid.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();
    let mut parent: Vec<usize> = (0..valid.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (k, f) in valid.iter().enumerate() {
        for x in 0..d {
            for y in x + 1..d {
                // relabel two parallel edges of Γ_A: precompose with a swap
                if ea[x] == ea[y] {
                    let mut g = f.clone();
                    g.swap(x, y);
                    let (r1, r2) = (find(&mut parent, k), find(&mut parent, index[&g]));
                    parent[r1] = r2;
                }
                // relabel two parallel edges of Γ_B: postcompose with a swap
                if eb[x] == eb[y] {
                    let g: Vec<usize> = f.iter().map(|&t| if t == x { y } else if t == y { x } else { t }).collect();
                    let (r1, r2) = (find(&mut parent, k), find(&mut parent, index[&g]));
                    parent[r1] = r2;
                }
            }
        }
    }
    (0..valid.len()).filter(|&k| find(&mut parent, k) == k).count()
}

#[test]
fn euler_classes_match_explicit_bijections() {
    let d = mat("2,0,0;1,0,2;0,0,0");
    let d1 = mat("1,0,0;1,1,0;0,2,0");
    assert_eq!(euler_function_classes(&d, &d1), 2);
    assert_eq!(euler_classes(&d, &d1).unwrap().len(), 2);
    for (n, deg) in [(2, 3), (3, 2)] {
        let basis = enumerate_basis(n, deg);
        for a in &basis {
            for b in &basis {
                assert_eq!(euler_function_classes(a, b), euler_classes(a, b).unwrap().len(), "{a} {b}");
            }
        }
    }
}

/// Coefficient of ξ_target in ξ_first·ξ_second by labelling each
/// (distinguishable) edge of Γ_target with a middle letter.
fn labelling_count(first: &BasisMatrix, second: &BasisMatrix, target: &BasisMatrix) -> u64 {
    let n = target.n();
    let es = edges(target);
    let mut count = 0;
    for r in std::iter::repeat_n(0..n, es.len()).multi_cartesian_product() {
        let mut via_first = vec![0u32; n * n];
        let mut via_second = vec![0u32; n * n];
        for (&(i, j), &k) in es.iter().zip(&r) {
            via_first[k * n + j] += 1;
            via_second[i * n + k] += 1;
        }
        if via_first == first.entries() && via_second == second.entries() {
            count += 1;
        }
    }
    if es.is_empty() {
        count = u64::from(first.degree() == 0);
    }
    count
}

#[test]
fn structure_constants_against_labellings() {
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let basis = enumerate_basis(n, d);
        for a in &basis {
            for b in &basis {
                let product = multiply(&SchurElement::basis(a), &SchurElement::basis(b)).unwrap();
                for t in &basis {
                    let brute = labelling_count(a, b, t);
                    assert_eq!(structure_constant(a, b, t).unwrap(), brute, "{a} {b} {t}");
                    assert_eq!(product.coefficient(t), rational(brute as i64));
                }
            }
        }
    }
}

#[test]
fn class_coefficients_against_brute_force() {
    for (n, d) in [(2, 3), (2, 4), (3, 3)] {
        let perms: Vec<Permutation> = Permutation::all(d).collect();
        for m in enumerate_basis(n, d) {
            let gp = canonical_pair(&m);
            let mut brute: BTreeMap<Partition, u64> = BTreeMap::new();
            for w in &perms {
                if &gp.bottom().permuted(w) == gp.top() {
                    *brute.entry(w.cycle_type()).or_default() += 1;
                }
            }
            for lambda in partitions_of(d) {
                assert_eq!(class_coefficient(&lambda, &m).unwrap(), brute.get(&lambda).copied().unwrap_or(0));
            }
        }
    }
}

#[test]
fn apply_basis_equivariance() {
    for (n, d) in [(2, 3), (2, 4), (3, 3)] {
        let perms: Vec<Permutation> = Permutation::all(d).collect();
        for m in enumerate_basis(n, d) {
            for j in MultiIndex::all(n, d) {
                let out = basis_images(&m, &j).unwrap();
                for w in &perms {
                    let mut moved: Vec<MultiIndex> = out.iter().map(|i| i.permuted(w)).collect();
                    moved.sort();
                    assert_eq!(basis_images(&m, &j.permuted(w)).unwrap(), moved);
                }
            }
        }
    }
}

#[test]
fn d_two_example_by_enumeration() {
    // ξ[0,2;0,0] e_(2,2): only (1,1) has D((1,1),(2,2)) = [0,2;0,0].
    let m = mat("0,2;0,0");
    let j: MultiIndex = "2,2".parse().unwrap();
    let hits: Vec<MultiIndex> = MultiIndex::all(2, 2)
        .filter(|i| matrix_from_pair(i, &j, 2).unwrap() == m)
        .collect();
    assert_eq!(hits, vec!["1,1".parse::<MultiIndex>().unwrap()]);
    assert_eq!(apply_basis(&m, &j).unwrap().keys().cloned().collect::<Vec<_>>(), hits);
}

#[test]
fn non_diagonal_basis_element_is_not_central() {
    // exhaustive search for a non-commuting partner
    let basis = enumerate_basis(2, 2);
    for m in basis.iter().filter(|m| !m.is_diagonal()) {
        let x = SchurElement::basis(m);
        let witness = basis.iter().find(|b| {
            let y = SchurElement::basis(b);
            multiply(&x, &y).unwrap() != multiply(&y, &x).unwrap()
        });
        assert!(witness.is_some(), "{m}");
        assert!(!is_central(&x));
    }
}

#[test]
fn character_column_orthogonality_d4() {
    // Σ_μ |C_μ| χ_λ(μ)² = d! for the (2,2) row
    let lambda: Partition = "2,2".parse().unwrap();
    let s: i64 = partitions_of(4)
        .iter()
        .map(|mu| class_size(mu) as i64 * character(&lambda, mu).unwrap().pow(2))
        .sum();
    assert_eq!(s, 24);
}
