//! Cloning systems on families of groups and the Thompson-like groups they
//! generate.
//!
//! A cloning system equips a family of groups `G_n` with inclusions,
//! representation maps to the symmetric groups, and injective cloning maps
//! `G_n -> G_{n+1}` subject to three axioms. Out of such a system one
//! builds a group whose elements are tree-pair triples `[T-, g, T+]`, a
//! projection to Thompson's group V, and a cube complex on which the group
//! acts.
//!
//! This crate provides:
//!
//! * the combinatorial substrate: binary trees and forests ([`forest`]);
//! * the abstract interface ([`system`]) and five built-in instances
//!   ([`instances`]): the trivial family, symmetric groups, signed
//!   symmetric groups, direct powers of a base group, and invertible
//!   upper-triangular rational matrices;
//! * an axiom-verification harness with exhaustive and fixed-seed sampled
//!   modes ([`harness`]);
//! * exact group arithmetic on tree-pair triples ([`thompson`]);
//! * representative-level Stein-Farley complex combinatorics ([`stein`]).

pub mod error;
pub mod forest;
pub mod harness;
pub mod instances;
pub mod perm;
pub mod stein;
pub mod system;
pub mod thompson;

pub use error::{InvalidValue, ParseError};
pub use forest::{Forest, Tree};
pub use perm::Permutation;
pub use system::{CloningSystem, ElemCodec};

#[cfg(test)]
mod concurrency_contract {
    //! Everything is immutable value data, safe to share across threads.

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Tree>();
        assert_send_sync::<crate::Forest>();
        assert_send_sync::<crate::Permutation>();
        assert_send_sync::<crate::instances::signed::SignedPermutation>();
        assert_send_sync::<crate::instances::matrix::UTMatrix>();
        assert_send_sync::<crate::instances::power::PowerElement<u64>>();
        assert_send_sync::<crate::thompson::ThompsonElement<crate::Permutation>>();
        assert_send_sync::<crate::stein::SteinVertex<crate::Permutation>>();
        assert_send_sync::<crate::harness::AxiomReport>();
        assert_send_sync::<crate::instances::SymmetricSystem>();
        assert_send_sync::<crate::instances::SignedSystem>();
        assert_send_sync::<crate::instances::MatrixSystem>();
        assert_send_sync::<crate::instances::TrivialSystem>();
        assert_send_sync::<crate::instances::PowerSystem<crate::instances::CyclicGroup>>();
    }
}
