//! Free Lie superalgebras over graded ordered alphabets with Lyndon bases.

pub mod algebra;
pub mod alphabet;
pub mod expr;
pub mod oracle;

pub use algebra::{multidegrees, BasisKey, Coeff, FreeLie, LieVector};
pub use alphabet::{is_lyndon, lyndon_words, standard_factorization, GradedAlphabet, Word};
pub use expr::{standard_bracketing, BracketExpr};
pub use oracle::{oracle_component, OracleComponent};
