use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::{BiinvariantElement, Ctx};
use crate::combinatorics::{rook_enumerate, PartialInjection};
use crate::error::Result;
use crate::limits::Limits;
use crate::rational::Q;

/// The double-coset algebra with its structure constants in the `e_σ`
/// basis, for dense arithmetic on coordinate vectors.
#[derive(Debug, Clone)]
pub struct OracleAlgebra {
    ctx: Ctx,
    basis: Vec<PartialInjection>,
    index: HashMap<PartialInjection, usize>,
    table: Vec<Vec<Vec<(usize, Q)>>>,
}

impl OracleAlgebra {
    pub fn build(ctx: Ctx, limits: &Limits) -> Result<Self> {
        limits.check_group_degree(ctx.degree())?;
        let basis: Vec<PartialInjection> = rook_enumerate(ctx.alpha, limits)?
            .into_iter()
            .filter(|s| s.rank() + ctx.n >= ctx.alpha)
            .collect();
        let index: HashMap<PartialInjection, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let table = basis
            .par_iter()
            .map(|p| {
                let ep = BiinvariantElement::basis(ctx, p.clone())?;
                basis
                    .iter()
                    .map(|q| {
                        let eq = BiinvariantElement::basis(ctx, q.clone())?;
                        let prod = ep.multiply(&eq)?;
                        Ok(prod
                            .coeffs()
                            .iter()
                            .map(|(s, c)| (index[s], c.clone()))
                            .collect())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OracleAlgebra {
            ctx,
            basis,
            index,
            table,
        })
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn basis(&self) -> &[PartialInjection] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, sigma: &PartialInjection) -> Option<usize> {
        self.index.get(sigma).copied()
    }

    /// Nonzero coefficients of `e_p e_q`.
    pub fn product_entry(&self, p: usize, q: usize) -> &[(usize, Q)] {
        &self.table[p][q]
    }

    pub fn to_dense(&self, x: &BiinvariantElement) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (s, c) in x.coeffs() {
            v[self.index[s]] = c.clone();
        }
        v
    }

    pub fn from_dense(&self, v: &[Q]) -> BiinvariantElement {
        let mut x = BiinvariantElement::zero(self.ctx);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                x.add_term(self.basis[i].clone(), c.clone())
                    .expect("basis element of this context");
            }
        }
        x
    }

    pub fn unit(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[self.index[&PartialInjection::identity(self.ctx.alpha)]] = Q::from_integer(1.into());
        v
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (p, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (r, c) in &self.table[p][q] {
                    out[*r] += &ab * c;
                }
            }
        }
        out
    }
}
