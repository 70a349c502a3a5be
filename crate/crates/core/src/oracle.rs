//! Dense-operator realization of S(n,d) on `V^{⊗d}`, used as ground truth.
//!
//! Rows and columns are indexed by `I(n,d)` in [`MultiIndex::to_index`]
//! order; the entry at `(𝐢, 𝐣)` is the coefficient of `e_𝐢` in `x·e_𝐣`.

use num_traits::{One, Zero};

use crate::basis::{basis_images, canonical_pair, enumerate_basis, matrix_from_pair, MultiIndex, Rational, SchurElement};
use crate::error::{invalid, Error, Result};
use crate::symgrp::{Partition, Permutation};

pub const DEFAULT_MAX_TENSOR_DIM: usize = 10_000;
pub const MAX_TENSOR_DIM_ENV: &str = "SCHUR_MAX_TENSOR_DIM";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n^d` for which a dense operator may be built.
    pub max_tensor_dim: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_tensor_dim: DEFAULT_MAX_TENSOR_DIM }
    }
}

impl OracleConfig {
    /// Default config, overridden by `SCHUR_MAX_TENSOR_DIM` when it parses.
    pub fn from_env() -> Self {
        let mut cfg = OracleConfig::default();
        if let Some(v) = std::env::var(MAX_TENSOR_DIM_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.max_tensor_dim = v;
        }
        cfg
    }

    pub fn check(&self, n: usize, d: usize) -> Result<usize> {
        let dim = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if dim > self.max_tensor_dim as u128 {
            return Err(Error::Resource {
                what: "n^d",
                requested: dim,
                limit: self.max_tensor_dim as u128,
            });
        }
        Ok(dim as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseOperator {
    n: usize,
    d: usize,
    dim: usize,
    entries: Vec<Rational>,
}

impl DenseOperator {
    pub fn zero(n: usize, d: usize, cfg: &OracleConfig) -> Result<Self> {
        let dim = cfg.check(n, d)?;
        Ok(DenseOperator { n, d, dim, entries: vec![Rational::zero(); dim * dim] })
    }

    pub fn identity(n: usize, d: usize, cfg: &OracleConfig) -> Result<Self> {
        let mut op = Self::zero(n, d, cfg)?;
        for k in 0..op.dim {
            op.entries[k * op.dim + k] = Rational::one();
        }
        Ok(op)
    }

    /// The operator of an element, built column by column from `ξ_D e_𝐣`.
    pub fn from_element(x: &SchurElement, cfg: &OracleConfig) -> Result<Self> {
        let (n, d) = (x.n(), x.d());
        let mut op = Self::zero(n, d, cfg)?;
        for j in MultiIndex::all(n, d) {
            let col = j.to_index(n);
            for (m, c) in x.iter() {
                for i in basis_images(m, &j)? {
                    op.entries[i.to_index(n) * op.dim + col] += c;
                }
            }
        }
        Ok(op)
    }

    /// `ρ(w)`: `e_𝐣 ↦ e_{w·𝐣}`.
    pub fn from_permutation(w: &Permutation, n: usize, cfg: &OracleConfig) -> Result<Self> {
        let d = w.degree();
        let mut op = Self::zero(n, d, cfg)?;
        for j in MultiIndex::all(n, d) {
            let i = j.permuted(w);
            op.entries[i.to_index(n) * op.dim + j.to_index(n)] += Rational::one();
        }
        Ok(op)
    }

    /// `Σ_{ρ(w) = λ} ρ(w)`, summed over an explicit walk of `S_d`.
    pub fn class_sum(lambda: &Partition, n: usize, cfg: &OracleConfig) -> Result<Self> {
        let d = lambda.weight();
        let mut op = Self::zero(n, d, cfg)?;
        for w in Permutation::all(d).filter(|w| &w.cycle_type() == lambda) {
            for j in MultiIndex::all(n, d) {
                let i = j.permuted(&w);
                op.entries[i.to_index(n) * op.dim + j.to_index(n)] += Rational::one();
            }
        }
        Ok(op)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    fn check_same(&self, other: &DenseOperator) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(invalid("operators act on different tensor spaces"));
        }
        Ok(())
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same(other)?;
        let dim = self.dim;
        let other_rows: Vec<Vec<(usize, &Rational)>> = (0..dim)
            .map(|k| {
                (0..dim)
                    .filter_map(|c| {
                        let v = other.get(k, c);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        let mut entries = vec![Rational::zero(); dim * dim];
        for r in 0..dim {
            for (k, row) in other_rows.iter().enumerate() {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for &(c, b) in row {
                    entries[r * dim + c] += a * b;
                }
            }
        }
        Ok(DenseOperator { n: self.n, d: self.d, dim, entries })
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(DenseOperator { entries, ..self.clone() })
    }

    /// Re-expresses the operator in the ξ basis.
    ///
    /// One entry per orbit is read (at the canonical pair); the operator of the
    /// resulting element is then rebuilt and compared entry by entry, so a
    /// non-equivariant operator is rejected.
    pub fn to_element(&self) -> Result<SchurElement> {
        let (n, d) = (self.n, self.d);
        let terms = enumerate_basis(n, d).into_iter().map(|m| {
            let gp = canonical_pair(&m);
            let c = self.get(gp.top().to_index(n), gp.bottom().to_index(n)).clone();
            (m, c)
        });
        let x = SchurElement::from_terms(n, d, terms)?;
        let rebuilt = DenseOperator::from_element(&x, &OracleConfig { max_tensor_dim: self.dim })?;
        if let Some(k) = (0..self.entries.len()).find(|&k| self.entries[k] != rebuilt.entries[k]) {
            let (i, j) = (MultiIndex::from_index(k / self.dim, n, d), MultiIndex::from_index(k % self.dim, n, d));
            let m = matrix_from_pair(&i, &j, n)?;
            return Err(invalid(format!(
                "operator is not S_{d}-equivariant: entry ({i}; {j}) differs from its orbit {m}"
            )));
        }
        Ok(x)
    }
}

/// The product `x · y` computed by composing dense operators: `x` acts first.
pub fn multiply_via_oracle(x: &SchurElement, y: &SchurElement, cfg: &OracleConfig) -> Result<SchurElement> {
    x.check_ambient(y)?;
    let ox = DenseOperator::from_element(x, cfg)?;
    let oy = DenseOperator::from_element(y, cfg)?;
    oy.compose(&ox)?.to_element()
}
