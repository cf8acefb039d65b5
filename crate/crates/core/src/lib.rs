//! Multiplicities of irreducible representations in `L^2(G/Γ)` for compact
//! nilmanifolds with a lattice subgroup Γ, computed with exact arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactlin`]: rational/integer matrices, Hermite and Smith forms, lattices.
//! - [`nilpotent`]: nilpotent Lie algebras from structure constants, the
//!   adjoint and coadjoint actions, and the Baker-Campbell-Hausdorff product.
//! - [`lattice_subgroup`]: lattice subgroups, their integral duals and Malcev
//!   bases passing through a rational subalgebra.
//! - [`multiplicity`]: skew forms `B_l`, the matrix `A_l`, the Corwin-Greenleaf
//!   multiplicity and the Moore-formula verdict.
//! - [`orbits`]: Γ-orbit counting on coadjoint orbits, brute-force window
//!   enumeration and the four-dimensional filiform counterexample.

pub mod exactlin;
pub mod fixtures;
pub mod lattice_subgroup;
pub mod multiplicity;
pub mod nilpotent;
pub mod orbits;
pub mod random;
