//! Suzuki 2-groups, their oriented normal Cayley graphs, and verification
//! that the continuous-time quantum walk on those graphs is uniform mixing
//! at time π/2^{n+1}.
//!
//! The crate is layered: [`gf2n`] does exact GF(2^n) arithmetic, [`group`]
//! builds the group A(n, θ) with its conjugacy classes and connection sets,
//! [`chartable`] computes the irreducible characters over ℤ[i], and [`walk`]
//! checks uniform mixing by three independent routes (exact character
//! identities, spectral reconstruction, dense matrix exponential) and
//! extracts the real Hadamard matrices the walk certifies.

pub mod chartable;
mod dense;
pub mod gaussian;
pub mod gf2n;
pub mod group;
pub mod walk;

pub use chartable::{CharKind, Character, CharacterTable, OrthogonalityReport, Sign};
pub use gaussian::GaussianInt;
pub use gf2n::{FieldCtx, FieldElement, FieldError};
pub use group::{ConjClass, ConnectionSet, GroupElement, GroupError, Hyperplane, Policy, SuzukiGroup};
pub use walk::{
    cartesian_product, dense_spectrum_of_i_s, eigenvalues, evolve_dense, evolve_spectral,
    extract_hadamard, flat_tolerance, hadamard_matches_class_sums, perfect_square_check,
    sign_vector, skew_matrix, verify_um_dense, verify_um_exact, verify_um_spectral,
    HadamardMatrix, Method, MethodDetail, MixingReport, OrientedCayley, SkewMatrix,
    SpectralLine, SpectralOperator, Spectrum, Tau, TauDesc, WalkError,
};
