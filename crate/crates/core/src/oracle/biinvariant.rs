use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group_algebra::add_into;
use super::{canonical_completion, coset_enumerate, coset_size, Ctx, GroupAlgebraElement};
use crate::combinatorics::{corner_map, PartialInjection, Permutation};
use crate::error::{Error, Result};
use crate::rational::{factorial, Q};

/// `Σ a_σ e_σ` over double cosets, with `e_σ = (1/n!) Σ_{[h]_α = σ} δ_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiinvariantElement {
    ctx: Ctx,
    coeffs: BTreeMap<PartialInjection, Q>,
}

impl BiinvariantElement {
    pub fn zero(ctx: Ctx) -> Self {
        BiinvariantElement {
            ctx,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `e_σ`.
    pub fn basis(ctx: Ctx, sigma: PartialInjection) -> Result<Self> {
        let mut x = Self::zero(ctx);
        x.add_term(sigma, Q::one())?;
        Ok(x)
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn coeffs(&self) -> &BTreeMap<PartialInjection, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, sigma: &PartialInjection) -> Q {
        self.coeffs.get(sigma).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, sigma: PartialInjection, c: Q) -> Result<()> {
        if sigma.alpha() != self.ctx.alpha {
            return Err(Error::Dimension(format!(
                "corner of size {} in context alpha = {}",
                sigma.alpha(),
                self.ctx.alpha
            )));
        }
        if sigma.rank() + self.ctx.n < self.ctx.alpha {
            return Err(Error::EmptyCoset(format!("{sigma} in {:?}", self.ctx)));
        }
        add_into(&mut self.coeffs, sigma, c);
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            add_into(&mut out.coeffs, s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        BiinvariantElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }

    /// The element of the group algebra this represents.
    pub fn embed(&self) -> Result<GroupAlgebraElement> {
        let w = Q::new(BigInt::one(), factorial(self.ctx.n));
        let mut out = GroupAlgebraElement::zero(self.ctx);
        for (sigma, c) in &self.coeffs {
            let cw = c * &w;
            for u in coset_enumerate(sigma, self.ctx)? {
                out.add_term(u, cw.clone())?;
            }
        }
        Ok(out)
    }

    /// Inverse of [`embed`](Self::embed); fails unless `x` is constant on
    /// every double coset.
    pub fn from_group_element(x: &GroupAlgebraElement) -> Result<Self> {
        let ctx = x.ctx();
        let nf = Q::from_integer(factorial(ctx.n));
        let mut by_corner: BTreeMap<PartialInjection, Q> = BTreeMap::new();
        for u in x.coeffs().keys() {
            let sigma = corner_map(u, ctx.alpha)?;
            by_corner.entry(sigma).or_insert_with(|| x.coeff(u));
        }
        let mut out = Self::zero(ctx);
        for (sigma, c) in by_corner {
            for u in coset_enumerate(&sigma, ctx)? {
                if x.coeff(&u) != c {
                    return Err(Error::Consistency(format!(
                        "not constant on the coset of {sigma}: {u:?}"
                    )));
                }
            }
            out.add_term(sigma, c * &nf)?;
        }
        Ok(out)
    }

    /// Product through the single sum over `k ∈ S_n`:
    /// `e_σ e_τ = Σ_k |c_σ||c_τ| / ((n!)² |c_ρ(k)|) · e_ρ(k)` with
    /// `ρ(k)` the corner of `U_σ (1×k) U_τ`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let ctx = self.ctx;
        let k = ctx.subgroup();
        let sizes: Vec<BigInt> = (0..=ctx.alpha).map(|r| coset_size(ctx, r)).collect();
        let nf = factorial(ctx.n);
        let nf2 = &nf * &nf;
        let mut completions: HashMap<&PartialInjection, Permutation> = HashMap::new();
        for s in self.coeffs.keys().chain(other.coeffs.keys()) {
            if !completions.contains_key(s) {
                completions.insert(s, canonical_completion(s, ctx)?);
            }
        }
        let mut coeffs = BTreeMap::new();
        for (sigma, a) in &self.coeffs {
            let u_sigma = &completions[sigma];
            for (tau, b) in &other.coeffs {
                let u_tau = &completions[tau];
                let weight = a * b * Q::from_integer(&sizes[sigma.rank()] * &sizes[tau.rank()]);
                let mut counts: BTreeMap<PartialInjection, u64> = BTreeMap::new();
                for kk in &k {
                    let v = u_sigma.compose(&kk.compose(u_tau));
                    *counts.entry(corner_map(&v, ctx.alpha)?).or_default() += 1;
                }
                for (rho, count) in counts {
                    let denom = &nf2 * &sizes[rho.rank()];
                    let c = &weight * Q::new(BigInt::from(count), denom);
                    add_into(&mut coeffs, rho, c);
                }
            }
        }
        Ok(BiinvariantElement { ctx, coeffs })
    }

    /// Product computed by full convolution in the group algebra.
    pub fn multiply_by_convolution(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let prod = self.embed()?.convolve(&other.embed()?)?;
        Self::from_group_element(&prod)
    }

    /// `ι` of the embedded element: `Σ a_σ |c_σ| / n!`.
    pub fn iota(&self) -> Q {
        let nf = factorial(self.ctx.n);
        self.coeffs.iter().fold(Q::zero(), |acc, (s, c)| {
            acc + c * Q::new(coset_size(self.ctx, s.rank()), nf.clone())
        })
    }

    /// Trace normalized so that the unit has trace 1; it is `n!` times the
    /// group-algebra trace of the embedding.
    pub fn unit_trace(&self) -> Q {
        self.coeff(&PartialInjection::identity(self.ctx.alpha))
    }

    /// The involution: `e_σ* = e_{σᵀ}`.
    pub fn star(&self) -> Self {
        BiinvariantElement {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (s.transpose(), c.clone()))
                .collect(),
        }
    }
}

/// `a(g) = (1/n!) Σ_{σ ∈ S_n} δ_{g×σ}`, i.e. `e_g`.
pub fn gen_a(g: &Permutation, ctx: Ctx) -> Result<BiinvariantElement> {
    if g.degree() != ctx.alpha {
        return Err(Error::Dimension(format!(
            "A(g) needs degree {}, got {}",
            ctx.alpha,
            g.degree()
        )));
    }
    BiinvariantElement::basis(ctx, PartialInjection::from_permutation(g))
}

/// `θ_i`, the basis element of the coset of the transposition `(i, α+1)`;
/// `i` is 0-based.
pub fn gen_theta(i: usize, ctx: Ctx) -> Result<BiinvariantElement> {
    if i >= ctx.alpha {
        return Err(Error::Argument(format!(
            "theta index {i} outside 0..{}",
            ctx.alpha
        )));
    }
    if ctx.n == 0 {
        return Err(Error::EmptyCoset(format!(
            "theta_{} needs n >= 1",
            i + 1
        )));
    }
    BiinvariantElement::basis(ctx, PartialInjection::idempotent(ctx.alpha, &[i])?)
}
