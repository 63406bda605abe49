//! Brute-force ground truth: the diagram algebra itself, Specht modules,
//! cell modules with their Gram forms, and exact rank computations over
//! the rationals.  No floating point anywhere in this module.

mod cell;
mod diagram;
mod linalg;
mod specht;

pub use cell::{
    cell_action, cell_dimension, enumerate_half_diagrams, gram_matrix, gram_rank, CellBasis,
    HalfDiagram,
};
pub use diagram::{add_scaled, e_gen, element_from, identity, multiply_elements, sigma_gen, BrauerDiagram, Element};
pub use linalg::{rank_rational, solve_in_span};
pub use specht::{
    apply_permutation, inner_product, polytabloid, specht_matrices, standard_tableaux, SpechtVec,
    Tableau,
};
