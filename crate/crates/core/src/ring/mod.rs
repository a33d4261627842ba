//! The Grothendieck ring in the standard basis.

mod groth;
mod jacquet;
mod margin;

pub use groth::{GrothVector, Slots, StandardProduct};
pub use jacquet::{
    diagonal_multiplicity, jac_filter, jacquet, jacquet_vector, l_sup, l_sup_standard, lemme2_jac, linked_pair_class,
    multiplicity, paired_product_class, prop_cons_hypothesis, FilterSide,
};
pub use margin::{margin_matrices, Composition, MarginMatrix};
