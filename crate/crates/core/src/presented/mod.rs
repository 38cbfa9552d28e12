//! The algebra `𝕆[α; ν]` given by generators `A(g)` (`g ∈ S_α`),
//! `Θ_1, …, Θ_α` and relations, over polynomials in `ν`.

mod element;
mod forms;
mod limit;
mod monomial;
mod normalize;
mod poly;
mod table;

pub use element::OElement;
pub use forms::{gram_matrix, i_hom, star_images, star_o, star_word, trace_form_matrix, trace_o};
pub use limit::{rook_product_table, scaled_limit, scaled_limit_table, LimitTable};
pub use monomial::{basis_enumerate, parse_word, Monomial, Token};
pub use normalize::{Normalizer, NormalizerStats, Strategy};
pub use poly::NuPoly;
pub use table::{
    exported_nu, structure_table, structure_table_parallel, EvaluatedTable, StructureTable,
};
