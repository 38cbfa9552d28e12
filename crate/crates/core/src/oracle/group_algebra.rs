use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Ctx;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Sparse element `Σ c_g δ_g` of the group algebra of `S_{α+n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    ctx: Ctx,
    coeffs: BTreeMap<Permutation, Q>,
}

/// `tr`, `ι`, `*` and `⟨x, x⟩` of a group algebra element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaFunctionals {
    pub trace: Q,
    pub iota: Q,
    pub star: GroupAlgebraElement,
    pub norm_sq: Q,
}

impl GroupAlgebraElement {
    pub fn zero(ctx: Ctx) -> Self {
        GroupAlgebraElement {
            ctx,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn delta(ctx: Ctx, g: Permutation) -> Result<Self> {
        let mut x = Self::zero(ctx);
        x.add_term(g, Q::one())?;
        Ok(x)
    }

    /// `δ_K`, the uniform average over the subgroup.
    pub fn delta_k(ctx: Ctx) -> Self {
        let k = ctx.subgroup();
        let w = Q::new(1.into(), k.len().into());
        GroupAlgebraElement {
            ctx,
            coeffs: k.into_iter().map(|g| (g, w.clone())).collect(),
        }
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn coeffs(&self) -> &BTreeMap<Permutation, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, g: &Permutation) -> Q {
        self.coeffs.get(g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, g: Permutation, c: Q) -> Result<()> {
        if g.degree() != self.ctx.degree() {
            return Err(Error::Dimension(format!(
                "permutation of degree {} in S_{}",
                g.degree(),
                self.ctx.degree()
            )));
        }
        add_into(&mut self.coeffs, g, c);
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            add_into(&mut out.coeffs, g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        GroupAlgebraElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of `δ_g δ_h = δ_{gh}`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut coeffs = BTreeMap::new();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                add_into(&mut coeffs, g.compose(h), a * b);
            }
        }
        Ok(GroupAlgebraElement {
            ctx: self.ctx,
            coeffs,
        })
    }

    /// `δ_K · x · δ_K`.
    pub fn project_biinvariant(&self) -> Self {
        let k = self.ctx.subgroup();
        let w = Q::new(1.into(), (k.len() * k.len()).into());
        let mut coeffs = BTreeMap::new();
        for (g, c) in &self.coeffs {
            let cw = c * &w;
            for k1 in &k {
                let k1g = k1.compose(g);
                for k2 in &k {
                    add_into(&mut coeffs, k1g.compose(k2), cw.clone());
                }
            }
        }
        GroupAlgebraElement {
            ctx: self.ctx,
            coeffs,
        }
    }

    /// Coefficient of the identity.
    pub fn trace(&self) -> Q {
        self.coeff(&Permutation::identity(self.ctx.degree()))
    }

    /// Sum of all coefficients.
    pub fn iota(&self) -> Q {
        self.coeffs.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// `Σ c̄_g δ_{g⁻¹}`; coefficients are rational so conjugation is trivial.
    pub fn star(&self) -> Self {
        GroupAlgebraElement {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .iter()
                .map(|(g, c)| (g.inverse(), c.clone()))
                .collect(),
        }
    }

    /// `⟨x, y⟩ = tr(x y*) = Σ x_g y_g`.
    pub fn inner(&self, other: &Self) -> Result<Q> {
        self.ctx.ensure_same(&other.ctx)?;
        Ok(self
            .coeffs
            .iter()
            .filter_map(|(g, a)| other.coeffs.get(g).map(|b| a * b))
            .fold(Q::zero(), |acc, v| acc + v))
    }

    pub fn functionals(&self) -> GaFunctionals {
        GaFunctionals {
            trace: self.trace(),
            iota: self.iota(),
            star: self.star(),
            norm_sq: self.inner(self).expect("same context"),
        }
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Q>, key: K, c: Q) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_frac, q_int};

    #[test]
    fn deltas_multiply_like_group_elements() {
        let ctx = Ctx::new(1, 2);
        let g = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let h = Permutation::transposition(3, 0, 1);
        let prod = GroupAlgebraElement::delta(ctx, g.clone())
            .unwrap()
            .convolve(&GroupAlgebraElement::delta(ctx, h.clone()).unwrap())
            .unwrap();
        assert_eq!(prod, GroupAlgebraElement::delta(ctx, g.compose(&h)).unwrap());

        let e = GroupAlgebraElement::delta(ctx, Permutation::identity(3)).unwrap();
        let x = e.add(&GroupAlgebraElement::delta(ctx, g).unwrap()).unwrap();
        assert_eq!(x.convolve(&e).unwrap(), x);
    }

    #[test]
    fn delta_k_is_idempotent() {
        let ctx = Ctx::new(1, 2);
        let dk = GroupAlgebraElement::delta_k(ctx);
        assert_eq!(dk.convolve(&dk).unwrap(), dk);
    }

    #[test]
    fn projection_of_transposition() {
        let ctx = Ctx::new(1, 2);
        let x = GroupAlgebraElement::delta(ctx, Permutation::transposition(3, 0, 1)).unwrap();
        let p = x.project_biinvariant();
        assert_eq!(p.coeffs().len(), 4);
        for (g, c) in p.coeffs() {
            assert_ne!(g.apply(0), 0);
            assert_eq!(c, &q_frac(1, 4));
        }
        assert_eq!(p.project_biinvariant(), p);

        let e = GroupAlgebraElement::delta(ctx, Permutation::identity(3)).unwrap();
        assert_eq!(e.project_biinvariant(), GroupAlgebraElement::delta_k(ctx));
    }

    #[test]
    fn functionals_examples() {
        let ctx = Ctx::new(1, 1);
        let e = GroupAlgebraElement::delta(ctx, Permutation::identity(2)).unwrap();
        let f = e.functionals();
        assert_eq!(f.trace, q_int(1));
        assert_eq!(f.iota, q_int(1));
        assert_eq!(f.star, e);
        assert_eq!(f.norm_sq, q_int(1));

        let s = GroupAlgebraElement::delta(ctx, Permutation::transposition(2, 0, 1)).unwrap();
        assert_eq!(e.add(&s).unwrap().functionals().norm_sq, q_int(2));
    }

    #[test]
    fn context_mismatch() {
        let a = GroupAlgebraElement::zero(Ctx::new(1, 1));
        let b = GroupAlgebraElement::zero(Ctx::new(1, 2));
        assert!(matches!(a.convolve(&b), Err(Error::Context(_))));
        let mut c = GroupAlgebraElement::zero(Ctx::new(1, 1));
        assert!(c.add_term(Permutation::identity(3), q_int(1)).is_err());
    }
}
