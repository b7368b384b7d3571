pub mod field;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{FieldConfig, FieldKind, Scalar, DEFAULT_PRIME, DEFAULT_SEED, VERIFY_PRIME};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_in, parse_poly};
pub use poly::{Polynomial, Ring, RingRef};
