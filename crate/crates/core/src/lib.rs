//! Persymmetric Jacobi matrices and their orthogonal polynomials.
//!
//! * [`poly`]: dense real polynomial arithmetic and interpolation;
//! * [`jacobi`]: matrix types, three-term recurrences, eigenvalues and
//!   spectral weights;
//! * [`inverse`]: four reconstructions of a persymmetric matrix from its
//!   spectrum, with the supporting moment and sublattice machinery;
//! * [`deform`]: the θ-family of isospectral deformations.

pub mod deform;
pub mod error;
pub mod inverse;
pub mod jacobi;
pub mod poly;

pub use deform::{
    build_involution, deform_closed_form, deform_conjugate, deformed_polynomials, deformed_weights,
    DeformationAngle, DenseInvolution,
};
pub use error::{Error, Result};
pub use inverse::{
    reconstruct, reconstruct_gram_schmidt_full, reconstruct_half_lattice,
    reconstruct_lagrange_euclid, reconstruct_mirror_fold, reconstruct_with, Algorithm,
};
pub use jacobi::{
    eigenvalues, is_persymmetric, mirror_residual, recurrence_polynomials, weights_general,
    weights_persymmetric, MonicJacobi, OrthoPolySystem, Spectrum, SymmetricJacobi, WeightTable,
};
pub use poly::Polynomial;
