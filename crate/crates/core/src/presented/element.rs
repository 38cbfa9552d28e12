use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::{Monomial, NuPoly};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A finite combination of basis monomials with `NuPoly` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OElement {
    alpha: usize,
    terms: BTreeMap<Monomial, NuPoly>,
}

impl OElement {
    pub fn zero(alpha: usize) -> Self {
        OElement {
            alpha,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, NuPoly::one())
    }

    pub fn term(m: Monomial, c: NuPoly) -> Self {
        let mut x = Self::zero(m.alpha());
        x.add_term(m, c);
        x
    }

    pub fn unit(alpha: usize) -> Self {
        Self::monomial(Monomial::unit(alpha))
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, NuPoly> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> NuPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: NuPoly) {
        debug_assert_eq!(m.alpha(), self.alpha);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &OElement, c: &NuPoly) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &OElement) -> Result<OElement> {
        self.check_alpha(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &NuPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &OElement) -> Result<OElement> {
        self.check_alpha(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &NuPoly::from_int(-1));
        Ok(out)
    }

    pub fn scale(&self, c: &NuPoly) -> OElement {
        let mut out = OElement::zero(self.alpha);
        out.add_scaled(self, c);
        out
    }

    pub(crate) fn check_alpha(&self, other: &OElement) -> Result<()> {
        if self.alpha != other.alpha {
            Err(Error::Dimension(format!(
                "elements of alpha {} and {}",
                self.alpha, other.alpha
            )))
        } else {
            Ok(())
        }
    }

    /// Largest number of theta factors among stored terms; `None` for zero.
    pub fn theta_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::theta_degree).max()
    }

    /// Largest `ν`-degree among coefficients.
    pub fn nu_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(NuPoly::degree).max()
    }

    /// Substitutes `ν := x`.
    pub fn evaluate_at(&self, x: &Q) -> BTreeMap<Monomial, Q> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.eval(x)))
            .filter(|(_, v)| *v != Q::from_integer(0.into()))
            .collect()
    }
}

impl fmt::Display for OElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let first = idx == 0;
            let (neg, body) = if c.is_monomial() {
                let lead = c.leading().unwrap();
                let k = c.degree().unwrap();
                let abs = NuPoly::nu_pow(k).scale(&lead.abs());
                let text = if abs == NuPoly::one() {
                    m.to_string()
                } else {
                    format!("{abs}·{m}")
                };
                (lead.is_negative(), text)
            } else {
                (false, format!("({c})·{m}"))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OElement[{self}]")
    }
}
