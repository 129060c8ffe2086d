//! Exact-arithmetic toolkit for border strips, outside decompositions and
//! the determinantal identities they induce for skew Schur functions.
//!
//! Every outside decomposition of a connected skew shape is encoded by its
//! cutting strip, a single ribbon carrying one direction per diagonal; the
//! determinant built from the strips via the segment operation evaluates to
//! the skew Schur function. Flipping one direction of the cutting strip (a
//! twist) moves between decompositions, and the corresponding determinants
//! are linked by short chains of verified elementary operations. The
//! classical Jacobi-Trudi, dual Jacobi-Trudi, Giambelli and Lascoux-Pragacz
//! determinants are the cutting strips "horizontal", "vertical", "maximal
//! hook" and "outer rim".
//!
//! All arithmetic is exact: sparse integer polynomials referee every
//! identity via a brute-force semistandard-tableau oracle.

pub mod decomp;
pub mod error;
pub mod hgdet;
pub mod poly;
pub mod schur;
pub mod shapes;
pub mod strips;
pub mod twist;

pub use decomp::{
    count_decompositions, enumerate_decompositions, pair_inversions, permutation_inversions,
    OutsideDecomposition, PlacedStrip,
};
pub use error::{Error, Result};
pub use hgdet::{evaluate, hg_matrix, named_identity, sharp, HGMatrix, MatrixForm, NamedIdentity};
pub use poly::{det, Monomial, Polynomial};
pub use schur::{e_elementary, h_complete, schur_oracle, Evaluator, SchurEntry, Tableau};
pub use shapes::{Diagonal, DiagonalType, Partition, Pos, SkewShape};
pub use strips::{parse_word, word_string, BorderStrip, Direction, Segment};
pub use twist::{
    classify_twist, parity_check, twist, twist_trace, ParityReport, TraceEntry, TraceOp,
    TraceStep, TwistClass, TwistTrace,
};
