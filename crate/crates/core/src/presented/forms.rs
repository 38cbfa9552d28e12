//! Trace, involution, the homomorphism `I`, and the bilinear forms built
//! from them.

use super::{Monomial, Normalizer, NuPoly, OElement, StructureTable, Token};
use crate::error::Result;

/// Coefficient of the unit `A(1)`.
pub fn trace_o(x: &OElement) -> NuPoly {
    x.coeff(&Monomial::unit(x.alpha()))
}

/// Anti-automorphism with `A(g)* = A(g⁻¹)` and `Θ_j* = Θ_j`.
pub fn star_o(x: &OElement, normalizer: &mut Normalizer) -> Result<OElement> {
    let mut out = OElement::zero(x.alpha());
    for (m, c) in x.terms() {
        let img = normalizer.normalize(&star_word(m))?;
        out.add_scaled(&img, c);
    }
    Ok(out)
}

/// `(A(g)Θ_{i₁}⋯Θ_{i_k})* = Θ_{i_k}⋯Θ_{i₁}A(g⁻¹)`.
pub fn star_word(m: &Monomial) -> Vec<Token> {
    let mut word: Vec<Token> = m.theta().iter().rev().map(|&i| Token::Theta(i as usize)).collect();
    word.push(Token::A(m.g().inverse()));
    word
}

/// `A(g) ↦ 1`, `Θ_j ↦ ν`.
pub fn i_hom(x: &OElement) -> NuPoly {
    let mut out = NuPoly::zero();
    for (m, c) in x.terms() {
        out = &out + &(c * &NuPoly::nu_pow(m.theta_degree()));
    }
    out
}

/// `B[p][q] = Tr(e_p e_q)`.
pub fn trace_form_matrix(table: &StructureTable) -> Vec<Vec<NuPoly>> {
    let unit = table.unit_index();
    (0..table.dim())
        .map(|p| {
            (0..table.dim())
                .map(|q| table.coefficient(p, q, unit))
                .collect()
        })
        .collect()
}

/// Images `e_q*` of all basis elements, as coordinate vectors.
pub fn star_images(table: &StructureTable) -> Result<Vec<Vec<NuPoly>>> {
    let mut normalizer = Normalizer::new(table.alpha());
    table
        .basis()
        .iter()
        .map(|m| {
            let img = star_o(&OElement::monomial(m.clone()), &mut normalizer)?;
            Ok(table.coordinates(&img))
        })
        .collect()
}

/// `G[p][q] = ⟨e_p, e_q⟩ = Tr(e_p e_q*)`.
pub fn gram_matrix(table: &StructureTable) -> Result<Vec<Vec<NuPoly>>> {
    let trace_form = trace_form_matrix(table);
    let stars = star_images(table)?;
    Ok((0..table.dim())
        .map(|p| {
            (0..table.dim())
                .map(|q| {
                    stars[q]
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .fold(NuPoly::zero(), |acc, (s, c)| &acc + &(c * &trace_form[p][s]))
                })
                .collect()
        })
        .collect())
}
