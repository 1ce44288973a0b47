//! Branching laws for the restriction of SU(2) irreducibles to binary
//! polyhedral subgroups.
//!
//! For each finite subgroup `F*` of SU(2) obtained as the double cover of a
//! finite rotation group, the McKay correspondence attaches a simply-laced
//! Lie algebra of type A (odd rank), D or E. The multiplicity of the irreducible
//! `γ_i` in the `(n+1)`-dimensional representation `π_n` is read off from a
//! generating function `z_i(t) / ((1 - t^a)(1 - t^b))`, and the numerators
//! `z_i(t)` come from the intersection of Coxeter-element orbits on the root
//! system with the set of roots pairing positively with the highest root.
//!
//! The crate computes those numerators from root-system data alone
//! ([`branching`]) and checks them against two independent routes: the
//! Clebsch–Gordan recursion on the extended Dynkin graph ([`mckay`]) and
//! character theory of the explicit quaternion groups ([`binarygroups`]).
//!
//! # Node numbering
//!
//! Simple roots are addressed by a zero-based *simple index* `0..rank`.
//! Nodes of the extended diagram use an *extended index* `0..=rank`, where
//! `0` is the affine node and simple index `s` is extended index `s + 1`.
//! Within each family the diagram is numbered as follows (extended indices):
//!
//! * `A_l`: the path `1 - 2 - ... - l`; the affine node closes the cycle
//!   between `1` and `l`.
//! * `D_l`: the path `1 - 2 - ... - (l-2)`, with the two fork tails `l-1` and
//!   `l` both attached to `l-2`. The affine node hangs off `2`.
//! * `E_l`: the chain `1 - 3 - 4 - ... - l` with node `2` attached to `4`
//!   (Bourbaki). The affine node hangs off `2` (E6), `1` (E7) or `8` (E8).
//!
//! This labeling is versioned by [`NODE_CONVENTION`].

pub mod binarygroups;
pub mod branching;
pub mod coxeter;
pub mod error;
pub mod mckay;
pub mod rootsys;
pub mod seriescalc;
pub mod verify;

pub use branching::{Branching, BranchParams};
pub use error::{Error, Result};
pub use rootsys::{DiagramType, Family, Root, RootSystem};

/// Version tag of the node-labeling convention carried by every JSON record.
pub const NODE_CONVENTION: &str = "bourbaki-ext/1";
