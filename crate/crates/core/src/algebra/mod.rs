pub mod factor;
pub mod field;
pub mod gcd;
pub mod linalg;
pub mod multipoly;
pub mod parse;
pub mod ratfunc;
pub mod unipoly;
pub mod upoly;

pub use field::{embed, make_field, Elem, Embedding, FieldDesc, FieldElem};
pub use multipoly::{Mono, MultiPoly};
pub use ratfunc::RationalFunc;
pub use unipoly::UniPoly;
pub use upoly::{resultant, resultant_sylvester, FieldOps, Ring, UPoly};
