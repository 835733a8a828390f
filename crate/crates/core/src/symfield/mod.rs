//! Polynomials, rational functions and substitution maps over a [`Field`](crate::scalars::Field).

mod character;
mod gcd;
mod monomial;
mod poly;
mod ratfunc;
mod space;
mod subst;
mod text;

pub use character::{character_check, Character};
pub use gcd::{content_in, gcd, lcm};
pub use monomial::Monomial;
pub use poly::{poly_arith, PolyOp, Polynomial};
pub use ratfunc::{ratfunc_arith, RatOp, RationalFunction};
pub use space::VariableSpace;
pub(crate) use subst::invert_scalar_matrix;
pub use subst::{FixedCheck, MapKind, SubstitutionMap};
pub use text::{format_polynomial, format_rational, parse_polynomial, parse_rational};
