//! Exact combinatorics and verification workbench for Hilbert-transform
//! symbols on Coxeter groups and on groups acting on buildings.
//!
//! The crate solves the Coxeter word problem exactly, classifies how
//! group elements act on the roots of a wall, evaluates the associated
//! two-valued multiplier symbols, and certifies or refutes the Cotlar
//! identity both at the symbol level (brute force over Cayley balls) and
//! at the operator level (exact group-algebra arithmetic). Buildings
//! enter through their Weyl distance: the thin building of a Coxeter
//! system and the right-angled buildings of graph products of groups.

pub mod a2tilde;
pub mod algebra;
pub mod building;
pub mod coxeter;
pub mod descriptor;
pub mod error;
pub mod geometry;
pub mod gp;
pub mod group;
pub mod scalar;
pub mod symbol;
pub mod verify;

pub use coxeter::{CanonicalElement, CoxeterOrder, CoxeterSystem, DescentInfo};
pub use error::{Error, Result};
pub use geometry::{HalfSpaceSide, RootRelation};
pub use group::{Group, SubgroupPredicate};
pub use symbol::Symbol;
pub use verify::{verify_cotlar, CotlarReport};
