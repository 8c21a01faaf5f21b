//! Presented algebras (quantum matrices, quantum affine spaces and their
//! tensor products), words, and normal forms.

mod algebra;
mod poly;
mod rewrite;
mod word;

pub use algebra::{Algebra, Generator, Shape};
pub use poly::{component_dimension, multiply, normal_form, pbw_basis, specialize_poly, NCPoly, RationalPoly};
pub use rewrite::{Coefficient, Expansion, Reducer, Rule, Strategy};
pub use word::{sorted_words, Letter, Word};
