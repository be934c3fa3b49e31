//! Exact computations with fermions attached to set partitions.
//!
//! The crate works inside the exterior algebra on `2n` anticommuting
//! generators `θ_1..θ_n, ξ_1..ξ_n` and builds on it:
//!
//! - [`extalg`]: monomials, wedge product, contraction, inner product, the
//!   diagonal `S_n` action.
//! - [`setpart`]: set partitions, noncrossing predicates, enumeration,
//!   segmented permutations, cyclic interval decompositions.
//! - [`fermions`]: block operators and the fermions `F_π`, `f_π`, `G`, `g`,
//!   and their antisymmetrized variants.
//! - [`skein`]: the skein action of `S_n` on noncrossing partitions and the
//!   crossing resolution `p`, computed both algebraically and greedily.
//! - [`quadring`]: the commutative quadratic model `R/(I+J)`.
//! - [`repsym`]: characters of `S_n`, Schur expansions, Kronecker and dual
//!   Pieri products.
//! - [`fdr`]: dimensions and basis checks in the fermionic diagonal
//!   coinvariant ring.
//!
//! Everything is exact: coefficients are arbitrary precision rationals and
//! all ranks come from exact row reduction. The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod extalg;
pub mod fdr;
pub mod fermions;
pub mod linalg;
pub mod numbers;
pub mod perm;
pub mod quadring;
pub mod repsym;
pub mod setpart;
pub mod skein;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use extalg::{Bidegree, Fermion, Generator, Monomial, Rational};
pub use perm::Permutation;
pub use setpart::{SegmentedPermutation, SetPartition};
pub use skein::NcVector;
pub use subset::Subset;

/// Largest ground set supported by the fixed-width subset encoding.
pub const MAX_N: usize = 16;
