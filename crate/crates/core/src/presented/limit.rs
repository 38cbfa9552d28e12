//! The rescaling `Θ' = Θ/ν` and the limit `ν → ∞`.

use num_traits::{One, Zero};

use super::{NuPoly, StructureTable};
use crate::combinatorics::{rook_enumerate, PartialInjection};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::Q;

/// Multiplication table of the limit algebra: `products[p][q]` is the
/// unique basis index `r` with limit coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitTable {
    pub alpha: usize,
    pub products: Vec<Vec<usize>>,
}

/// `lim_{ν→∞} ν^{-shift} c(ν)`; fails if it diverges.
pub fn scaled_limit(c: &NuPoly, shift: usize) -> Result<Q> {
    match c.degree() {
        None => Ok(Q::zero()),
        Some(d) if d < shift => Ok(Q::zero()),
        Some(d) if d == shift => Ok(c.leading().unwrap().clone()),
        Some(d) => Err(Error::Consistency(format!(
            "coefficient {c} of degree {d} diverges after scaling by ν^-{shift}"
        ))),
    }
}

/// Computes every rescaled limit and checks that each product of basis
/// elements tends to exactly one basis element.
pub fn scaled_limit_table(table: &StructureTable) -> Result<LimitTable> {
    let basis = table.basis();
    let mut products = Vec::with_capacity(basis.len());
    for p in 0..basis.len() {
        let mut row = Vec::with_capacity(basis.len());
        for q in 0..basis.len() {
            let dp = basis[p].theta_degree() + basis[q].theta_degree();
            let mut hit = None;
            for (r, c) in table.entry(p, q) {
                let dr = basis[*r].theta_degree();
                if dr > dp {
                    return Err(Error::Consistency(format!(
                        "({p}, {q}, {r}): theta degree {dr} exceeds {dp}"
                    )));
                }
                let lim = scaled_limit(c, dp - dr)
                    .map_err(|e| Error::Consistency(format!("({p}, {q}, {r}): {e}")))?;
                if lim.is_zero() {
                    continue;
                }
                if !lim.is_one() {
                    return Err(Error::Consistency(format!(
                        "({p}, {q}, {r}): limit {lim} is not 0 or 1"
                    )));
                }
                if let Some(prev) = hit.replace(*r) {
                    return Err(Error::Consistency(format!(
                        "({p}, {q}): limits 1 at both {prev} and {r}"
                    )));
                }
            }
            row.push(hit.ok_or_else(|| {
                Error::Consistency(format!("({p}, {q}): every limit vanishes"))
            })?);
        }
        products.push(row);
    }
    Ok(LimitTable {
        alpha: table.alpha(),
        products,
    })
}

/// Multiplication table of the rook monoid in canonical order.
pub fn rook_product_table(alpha: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let elems = rook_enumerate(alpha, limits)?;
    let index: std::collections::HashMap<&PartialInjection, usize> =
        elems.iter().enumerate().map(|(i, s)| (s, i)).collect();
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| Ok(index[&a.compose(b)?]))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}
