//! Exact computations in the Schur algebra `S(n,d) = End_{S_d}(V^{⊗d})`
//! over the rationals.
//!
//! * [`basis`]: the ξ_D basis indexed by `n × n` matrices with entry sum `d`,
//!   sparse elements, and the action on `V^{⊗d}`.
//! * [`multiplication`]: products via Euler-function classes, plus a direct
//!   structure-constant count.
//! * [`oracle`]: dense `n^d × n^d` operators used as ground truth.
//! * [`centre`]: class-sum images `Z_λ` and primitive central idempotents `ε_λ`.
//! * [`symgrp`]: partitions, cycle types, tableaux and characters of `S_d`.
//! * [`verify`]: the invariant suite run by `schur verify`.
//!
//! Data-parallel sweeps take an [`Exec`]; with the default `parallel` feature
//! they run on rayon, otherwise sequentially.

pub mod basis;
pub mod centre;
pub mod dot;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod multiplication;
pub mod oracle;
pub mod report;
pub mod symgrp;
pub mod verify;

pub use basis::{
    apply_basis, canonical_pair, enumerate_basis, identity_element, matrix_from_pair, BasisMatrix,
    GeneralizedPermutation, MultiIndex, Rational, SchurElement,
};
pub use centre::{
    centre_basis, centre_basis_element, centre_dimension, class_coefficient, is_central, primitive_idempotent,
    primitive_idempotents, CentreElement, CentreKind,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use multiplication::{euler_classes, multiply, product_graph, structure_constant, EulerClass, ProductTable};
pub use oracle::{multiply_via_oracle, DenseOperator, OracleConfig};
pub use symgrp::{character, class_size, cycle_type, partitions_of, tableaux_count, Partition, Permutation};
