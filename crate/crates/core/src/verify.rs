//! The invariant suite behind `schur verify`: every structural law of
//! S(n,d) checked exactly at one `(n, d)`, with oracle-backed checks skipped
//! when the tensor space exceeds the configured guard.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::basis::{
    basis_images, basis_size, canonical_pair, identity_element, matrix_from_pair, MultiIndex,
    Rational, SchurElement,
};
use crate::centre::{
    centre_basis, class_coefficients, expand_in, non_commuting_witness, primitive_idempotents, CentreElement,
};
use crate::exec::Exec;
use crate::linalg;
use crate::multiplication::{structure_constant, ProductTable};
use crate::oracle::{DenseOperator, OracleConfig};
use crate::symgrp::{
    centralizer_order, class_size, factorial, partitions_of, standard_tableaux, tableaux_count, CharacterCache,
    Permutation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub exec: Exec,
    pub oracle: OracleConfig,
    /// Random triples for the associativity check.
    pub associativity_samples: usize,
    pub seed: u64,
    /// Largest basis size for which all `|M|³` structure constants are checked.
    pub max_structure_basis: usize,
    /// Largest `d` for checks that walk all of `S_d` per basis element.
    pub max_symmetric_degree: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exec: Exec::default(),
            oracle: OracleConfig::default(),
            associativity_samples: 200,
            seed: 0x5c4u64,
            max_structure_basis: 60,
            max_symmetric_degree: 6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n: usize,
    pub d: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "status": c.status.as_str(), "detail": c.detail }))
            .collect();
        json!({ "n": self.n, "d": self.d, "passed": self.passed(), "checks": checks })
    }
}

fn outcome(ok: bool, detail: impl Into<String>) -> (Status, String) {
    (if ok { Status::Pass } else { Status::Fail }, detail.into())
}

/// Shared state built once per suite run.
struct Context {
    n: usize,
    d: usize,
    cfg: VerifyConfig,
    table: ProductTable,
    zs: Vec<CentreElement>,
    eps: Vec<CentreElement>,
}

type CheckFn = fn(&Context) -> (Status, String);

pub fn run_suite(n: usize, d: usize, cfg: &VerifyConfig) -> VerifyReport {
    let exec = cfg.exec;
    let ctx = Context {
        n,
        d,
        cfg: cfg.clone(),
        table: ProductTable::build(n, d, exec),
        zs: centre_basis(n, d, exec),
        eps: primitive_idempotents(n, d, exec),
    };
    let checks: [(&'static str, CheckFn); 17] = [
        ("dimension", check_dimension),
        ("canonical-pair-round-trip", check_round_trip),
        ("apply-basis-content", check_content),
        ("apply-basis-equivariance", check_equivariance),
        ("oracle-equivalence", check_oracle_equivalence),
        ("structure-constants", check_structure_constants),
        ("product-content", check_product_content),
        ("identity-neutral", check_identity),
        ("associativity", check_associativity),
        ("centrality", check_centrality),
        ("row-sum-law", check_row_sums),
        ("action-convention", check_action_convention),
        ("class-sum-oracle", check_class_sum_oracle),
        ("idempotents", check_idempotents),
        ("z-reconstruction", check_reconstruction),
        ("centre-dimension", check_centre_dimension),
        ("characters", check_characters),
    ];
    let checks = checks
        .iter()
        .map(|&(name, f)| {
            let start = Instant::now();
            let (status, detail) = f(&ctx);
            Check { name, status, detail, millis: start.elapsed().as_millis() }
        })
        .collect();
    VerifyReport { n, d, checks }
}

fn check_dimension(ctx: &Context) -> (Status, String) {
    let got = ctx.table.basis().len() as u128;
    let want = basis_size(ctx.n, ctx.d);
    outcome(got == want, format!("|M({}, {})| = {got}, binomial = {want}", ctx.n, ctx.d))
}

fn check_round_trip(ctx: &Context) -> (Status, String) {
    let bad = ctx.table.basis().iter().find(|m| {
        let gp = canonical_pair(m);
        matrix_from_pair(gp.top(), gp.bottom(), ctx.n).ok().as_ref() != Some(*m)
    });
    match bad {
        None => outcome(true, format!("{} matrices", ctx.table.basis().len())),
        Some(m) => outcome(false, format!("round trip fails for {m}")),
    }
}

fn oracle_dim(ctx: &Context) -> Option<usize> {
    ctx.cfg.oracle.check(ctx.n, ctx.d).ok()
}

fn skipped_guard(ctx: &Context) -> (Status, String) {
    (
        Status::Skipped,
        format!("n^d exceeds max tensor dim {}", ctx.cfg.oracle.max_tensor_dim),
    )
}

fn check_content(ctx: &Context) -> (Status, String) {
    if oracle_dim(ctx).is_none() {
        return skipped_guard(ctx);
    }
    let n = ctx.n;
    let js: Vec<MultiIndex> = MultiIndex::all(n, ctx.d).collect();
    let bad = ctx.cfg.exec.find_map(ctx.table.basis(), |m| {
        for j in &js {
            let images = basis_images(m, j).ok()?;
            if !images.is_empty() && j.content(n) != m.col_sums() {
                return Some(format!("{m} acts on {j} of the wrong content"));
            }
            if let Some(i) = images.iter().find(|i| i.content(n) != m.row_sums()) {
                return Some(format!("{m}·e_{j} contains e_{i} of the wrong content"));
            }
        }
        None
    });
    match bad {
        None => outcome(true, "input content = column sums, output content = row sums"),
        Some(msg) => outcome(false, msg),
    }
}

fn check_equivariance(ctx: &Context) -> (Status, String) {
    if oracle_dim(ctx).is_none() {
        return skipped_guard(ctx);
    }
    if ctx.d > ctx.cfg.max_symmetric_degree {
        return (Status::Skipped, format!("d > {}", ctx.cfg.max_symmetric_degree));
    }
    let n = ctx.n;
    let perms: Vec<Permutation> = Permutation::all(ctx.d).collect();
    let js: Vec<MultiIndex> = MultiIndex::all(n, ctx.d).collect();
    let bad = ctx.cfg.exec.find_map(ctx.table.basis(), |m| {
        for j in &js {
            let images = basis_images(m, j).ok()?;
            for w in &perms {
                let mut moved: Vec<MultiIndex> = images.iter().map(|i| i.permuted(w)).collect();
                moved.sort();
                if basis_images(m, &j.permuted(w)).ok()? != moved {
                    return Some(format!("{m} at j = {j}, w = {:?}", w.images()));
                }
            }
        }
        None
    });
    match bad {
        None => outcome(true, format!("all {} permutations", perms.len())),
        Some(msg) => outcome(false, format!("ξ_D(w·j) ≠ w·ξ_D(j) for {msg}")),
    }
}

fn check_oracle_equivalence(ctx: &Context) -> (Status, String) {
    if oracle_dim(ctx).is_none() {
        return skipped_guard(ctx);
    }
    let basis = ctx.table.basis();
    let ops: Vec<DenseOperator> = ctx.cfg.exec.map(basis, |m| {
        DenseOperator::from_element(&SchurElement::basis(m), &ctx.cfg.oracle).expect("guard checked")
    });
    let len = basis.len();
    let pairs: Vec<(usize, usize)> = (0..len).flat_map(|a| (0..len).map(move |b| (a, b))).collect();
    let bad = ctx.cfg.exec.find_map(&pairs, |&(a, b)| {
        let via_oracle = ops[b].compose(&ops[a]).and_then(|op| op.to_element());
        match via_oracle {
            Ok(x) if x == ctx.table.product_element(a, b) => None,
            Ok(x) => Some(format!(
                "ξ[{}]·ξ[{}]: graph product {} vs operator {}",
                basis[a],
                basis[b],
                ctx.table.product_element(a, b),
                x
            )),
            Err(e) => Some(e.to_string()),
        }
    });
    match bad {
        None => outcome(true, format!("{} basis pairs agree", pairs.len())),
        Some(msg) => outcome(false, msg),
    }
}

fn check_structure_constants(ctx: &Context) -> (Status, String) {
    let basis = ctx.table.basis();
    if basis.len() > ctx.cfg.max_structure_basis {
        return (Status::Skipped, format!("basis size {} > {}", basis.len(), ctx.cfg.max_structure_basis));
    }
    let len = basis.len();
    let bad = ctx.cfg.exec.map_range(len * len, |ab| {
        let (a, b) = (ab / len, ab % len);
        let product: BTreeMap<usize, u64> = ctx.table.product(a, b).iter().copied().collect();
        (0..len).find_map(|t| {
            let direct = structure_constant(&basis[a], &basis[b], &basis[t]).ok()?;
            let want = product.get(&t).copied().unwrap_or(0);
            (direct != want).then(|| format!("[{}]·[{}] on [{}]: {direct} vs {want}", basis[a], basis[b], basis[t]))
        })
    });
    match bad.into_iter().flatten().next() {
        None => outcome(true, format!("{} triples agree", len * len * len)),
        Some(msg) => outcome(false, msg),
    }
}

fn check_product_content(ctx: &Context) -> (Status, String) {
    let basis = ctx.table.basis();
    let len = basis.len();
    for a in 0..len {
        for b in 0..len {
            for &(m, _) in ctx.table.product(a, b) {
                let m = &basis[m];
                if m.col_sums() != basis[a].col_sums() || m.row_sums() != basis[b].row_sums() {
                    return outcome(false, format!("[{}]·[{}] contains [{m}]", basis[a], basis[b]));
                }
            }
        }
    }
    outcome(true, "products take input content from the first factor, output content from the second")
}

fn check_identity(ctx: &Context) -> (Status, String) {
    let id = identity_element(ctx.n, ctx.d);
    let bad = ctx.table.basis().iter().find(|m| {
        let x = SchurElement::basis(m);
        ctx.table.multiply(&id, &x).ok().as_ref() != Some(&x) || ctx.table.multiply(&x, &id).ok().as_ref() != Some(&x)
    });
    match bad {
        None => outcome(true, "1·ξ = ξ·1 = ξ for every basis element"),
        Some(m) => outcome(false, format!("identity fails on {m}")),
    }
}

fn check_associativity(ctx: &Context) -> (Status, String) {
    let len = ctx.table.basis().len();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.cfg.seed);
    let triples: Vec<(usize, usize, usize)> = (0..ctx.cfg.associativity_samples)
        .map(|_| (rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(0..len)))
        .collect();
    let basis = ctx.table.basis();
    let bad = ctx.cfg.exec.find_map(&triples, |&(a, b, c)| {
        let xc = SchurElement::basis(&basis[c]);
        let xa = SchurElement::basis(&basis[a]);
        let left = ctx.table.multiply(&ctx.table.product_element(a, b), &xc).ok()?;
        let right = ctx.table.multiply(&xa, &ctx.table.product_element(b, c)).ok()?;
        (left != right).then(|| format!("({}, {}, {})", basis[a], basis[b], basis[c]))
    });
    match bad {
        None => outcome(true, format!("{} random triples", triples.len())),
        Some(msg) => outcome(false, format!("(xy)z ≠ x(yz) for {msg}")),
    }
}

fn check_centrality(ctx: &Context) -> (Status, String) {
    for z in &ctx.zs {
        if let Some(m) = non_commuting_witness(&z.element, &ctx.table, ctx.cfg.exec) {
            return outcome(false, format!("Z({}) does not commute with ξ[{m}]", z.partition));
        }
    }
    outcome(true, format!("all {} Z_λ central", ctx.zs.len()))
}

fn check_row_sums(ctx: &Context) -> (Status, String) {
    if oracle_dim(ctx).is_none() {
        return skipped_guard(ctx);
    }
    let n = ctx.n;
    let coeffs: BTreeMap<_, _> = ctx
        .table
        .basis()
        .iter()
        .map(|m| (m.clone(), class_coefficients(m)))
        .collect();
    let all: Vec<MultiIndex> = MultiIndex::all(n, ctx.d).collect();
    let bad = ctx.cfg.exec.find_map(&all, |j| {
        let mut sums: BTreeMap<_, u64> = BTreeMap::new();
        for i in &all {
            let m = matrix_from_pair(i, j, n).ok()?;
            for (lambda, c) in &coeffs[&m] {
                *sums.entry(lambda.clone()).or_default() += c;
            }
        }
        partitions_of(ctx.d).into_iter().find_map(|lambda| {
            let got = sums.get(&lambda).copied().unwrap_or(0);
            (got != class_size(&lambda)).then(|| format!("j = {j}, λ = {lambda}: {got} ≠ {}", class_size(&lambda)))
        })
    });
    let obstruction = coeffs
        .iter()
        .find(|(m, cs)| !cs.is_empty() && m.row_sums() != m.col_sums());
    match (bad, obstruction) {
        (None, None) => outcome(true, format!("Σ_i c_(λ, D(i,j)) = |C_λ| for all {} j", all.len())),
        (Some(msg), _) => outcome(false, msg),
        (_, Some((m, _))) => outcome(false, format!("{m} has c > 0 but unequal row and column sums")),
    }
}

fn check_action_convention(ctx: &Context) -> (Status, String) {
    if ctx.d > ctx.cfg.max_symmetric_degree {
        return (Status::Skipped, format!("d > {}", ctx.cfg.max_symmetric_degree));
    }
    let perms: Vec<Permutation> = Permutation::all(ctx.d).collect();
    let bad = ctx.cfg.exec.find_map(ctx.table.basis(), |m| {
        let gp = canonical_pair(m);
        let (i, j) = (gp.top(), gp.bottom());
        let mut direct: BTreeMap<_, u64> = BTreeMap::new();
        let mut inverse: BTreeMap<_, u64> = BTreeMap::new();
        for w in &perms {
            if &j.permuted(w) == i {
                *direct.entry(w.cycle_type()).or_default() += 1;
            }
            if &j.permuted(&w.inverse()) == i {
                *inverse.entry(w.cycle_type()).or_default() += 1;
            }
        }
        (direct != inverse || direct != class_coefficients(m)).then(|| m.to_string())
    });
    match bad {
        None => outcome(true, "w·j = i and w⁻¹·j = i give identical c_(λ,D)"),
        Some(m) => outcome(false, format!("conventions disagree at {m}")),
    }
}

fn check_class_sum_oracle(ctx: &Context) -> (Status, String) {
    if oracle_dim(ctx).is_none() {
        return skipped_guard(ctx);
    }
    if ctx.d > ctx.cfg.max_symmetric_degree {
        return (Status::Skipped, format!("d > {}", ctx.cfg.max_symmetric_degree));
    }
    let bad = ctx.cfg.exec.find_map(&ctx.zs, |z| {
        let op = DenseOperator::class_sum(&z.partition, ctx.n, &ctx.cfg.oracle).ok()?;
        match op.to_element() {
            Ok(x) if x == z.element => None,
            Ok(x) => Some(format!("Z({}) = {} but Σ ρ(w) = {x}", z.partition, z.element)),
            Err(e) => Some(e.to_string()),
        }
    });
    match bad {
        None => outcome(true, "every Z_λ equals Σ_{ρ(w)=λ} ρ(w) on the tensor space"),
        Some(msg) => outcome(false, msg),
    }
}

fn check_idempotents(ctx: &Context) -> (Status, String) {
    let n = ctx.n;
    let id = identity_element(n, ctx.d);
    let mut sum = SchurElement::zero(n, ctx.d);
    for e in &ctx.eps {
        if e.partition.len() > n {
            if !e.element.is_zero() {
                return outcome(false, format!("ε({}) ≠ 0 despite more than {n} parts", e.partition));
            }
            continue;
        }
        sum = sum.add(&e.element).expect("same ambient");
        for f in &ctx.eps {
            let p = ctx.table.multiply(&e.element, &f.element).expect("same ambient");
            let want = if e.partition == f.partition { &e.element } else { &SchurElement::zero(n, ctx.d) };
            if &p != want {
                return outcome(false, format!("ε({})·ε({}) = {p}", e.partition, f.partition));
            }
        }
        if e.element.is_zero() {
            return outcome(false, format!("ε({}) vanishes", e.partition));
        }
    }
    if sum != id {
        return outcome(false, format!("Σ ε_λ = {sum}"));
    }
    outcome(true, "ε_λ² = ε_λ, ε_λ·ε_μ = 0, Σ ε_λ = 1, ε_λ = 0 beyond n parts")
}

fn check_reconstruction(ctx: &Context) -> (Status, String) {
    let live: Vec<CentreElement> = ctx.eps.iter().filter(|e| !e.element.is_zero()).cloned().collect();
    let mut cache = CharacterCache::default();
    for z in &ctx.zs {
        let Some(coeffs) = expand_in(&z.element, &live) else {
            return outcome(false, format!("Z({}) is not in the span of the ε_λ", z.partition));
        };
        for (e, a) in live.iter().zip(&coeffs) {
            // central character: c_μ acts on the λ-isotypic block by |C_μ| χ_λ(μ) / f_λ
            let chi = cache.value(&e.partition, &z.partition).expect("same weight");
            let want = Rational::new(
                BigInt::from(class_size(&z.partition)) * BigInt::from(chi),
                BigInt::from(tableaux_count(&e.partition)),
            );
            if a != &want {
                return outcome(false, format!("Z({}) has coefficient {a} on ε({}), expected {want}", z.partition, e.partition));
            }
        }
    }
    outcome(true, "Z_μ = Σ_λ |C_μ| χ_λ(μ)/f_λ · ε_λ")
}

fn check_centre_dimension(ctx: &Context) -> (Status, String) {
    let basis = ctx.table.basis();
    let rows: Vec<Vec<BigInt>> = ctx
        .zs
        .iter()
        .map(|z| basis.iter().map(|m| z.element.coefficient(m).to_integer()).collect())
        .collect();
    let rank = linalg::rank(&rows);
    let blocks = partitions_of(ctx.d).iter().filter(|p| p.len() <= ctx.n).count();
    outcome(
        rank == blocks,
        format!("rank{{Z_λ}} = {rank}, partitions with ≤ {} parts = {blocks}, p({}) = {}", ctx.n, ctx.d, ctx.zs.len()),
    )
}

fn check_characters(ctx: &Context) -> (Status, String) {
    let d = ctx.d;
    let parts = partitions_of(d);
    let mut cache = CharacterCache::default();
    let table: Vec<Vec<i64>> = parts
        .iter()
        .map(|l| parts.iter().map(|m| cache.value(l, m).expect("same weight")).collect())
        .collect();
    let total: u64 = parts.iter().map(class_size).sum();
    if total != factorial(d) {
        return outcome(false, format!("class sizes sum to {total}"));
    }
    let column = parts.len() - 1;
    for (r, lambda) in parts.iter().enumerate() {
        let f = tableaux_count(lambda);
        if table[r][column] != f as i64 {
            return outcome(false, format!("χ_{lambda}(1^{d}) = {} but f = {f}", table[r][column]));
        }
        if d <= ctx.cfg.max_symmetric_degree + 2 && standard_tableaux(lambda).len() as u64 != f {
            return outcome(false, format!("hook length and tableau count differ for {lambda}"));
        }
    }
    for a in 0..parts.len() {
        for b in 0..parts.len() {
            let s: i128 = (0..parts.len())
                .map(|c| class_size(&parts[c]) as i128 * (table[a][c] * table[b][c]) as i128)
                .sum();
            let want = if a == b { factorial(d) as i128 } else { 0 };
            if s != want {
                return outcome(false, format!("⟨χ_{}, χ_{}⟩ = {s}", parts[a], parts[b]));
            }
        }
    }
    // second orthogonality as a cross-check of the class sizes
    for c in 0..parts.len() {
        let s: i64 = (0..parts.len()).map(|r| table[r][c] * table[r][c]).sum();
        if s as u64 != centralizer_order(&parts[c]) {
            return outcome(false, format!("column {} has norm {s}", parts[c]));
        }
    }
    outcome(true, format!("{}×{} table orthonormal, χ(1^d) = f_λ", parts.len(), parts.len()))
}
