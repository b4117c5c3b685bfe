//! Exact computations with finite-dimensional Hopf algebras: lazy cocycles,
//! coboundaries, Galois objects, crossed products, Kac-Schauenburg maps and
//! projective representations.

pub mod crossed;
pub mod error;
pub mod families;
pub mod forms;
pub mod galois;
pub mod hopf;
pub mod io;
pub mod kac;
pub mod lazy;
pub mod linalg;
pub mod oracle;
pub mod projrep;
pub mod scalar;
pub mod suite;

pub use error::{HopfError, Result};
pub use forms::{conv_inverse, convolve, BiForm, ConvInverse, Convolve, LinForm, LinMap};
pub use hopf::{dual_hopf, op_cop, tensor_hopf, Algebra, GeneratorData, GeneratorKind, HopfAlgebra, HopfAxiomReport, Verdict};
pub use linalg::Matrix;
pub use scalar::{Field, Scalar};
