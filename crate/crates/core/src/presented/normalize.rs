//! Rewriting words in `A(g)`, `Θ_i` to combinations of basis monomials.
//!
//! Every word is first brought to the shape `A(g) Θ_{w₁} ⋯ Θ_{w_k}` by
//! `Θ_i A(g) = A(g) Θ_{g⁻¹(i)}`. The theta word is then sorted by adjacent
//! swaps (`Θ_j Θ_i = Θ_i Θ_j + A((ij))Θ_j − A((ij))Θ_i`), repeats collapse
//! (`Θ_j² = (ν−1)Θ_j + ν`), and an inadmissible prefix `A(g)` over a sorted
//! theta set is repaired one adjacent transposition `t = (a b)` at a time
//! with `A(t)Θ_aΘ_b = Θ_aΘ_b + Θ_a − A(t)Θ_a`.
//!
//! Every rewrite yields one term of the same theta length that is strictly
//! closer to sorted or admissible, plus terms of smaller theta length. The
//! measure `(length, inversions)` is checked on every recursive step.

use std::collections::HashMap;

use super::monomial::is_admissible;
use super::{Monomial, NuPoly, OElement, Token};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// Which out-of-order position a rewrite step resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

/// Counts of rewrite rule applications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NormalizerStats {
    pub swaps: u64,
    pub collapses: u64,
    /// Repairs using the quadratic relation with the lower-indexed theta first.
    pub erasures_lower_first: u64,
    /// Repairs using the quadratic relation with the higher-indexed theta
    /// first. The procedure never needs this orientation.
    pub erasures_higher_first: u64,
}

/// Normal-form engine for one `alpha`, memoizing intermediate results.
#[derive(Debug, Clone)]
pub struct Normalizer {
    alpha: usize,
    strategy: Strategy,
    words: HashMap<Vec<u8>, OElement>,
    repairs: HashMap<(Permutation, Vec<u8>), OElement>,
    stats: NormalizerStats,
    nu: NuPoly,
    nu_minus_one: NuPoly,
    minus_one: NuPoly,
}

impl Normalizer {
    pub fn new(alpha: usize) -> Self {
        Self::with_strategy(alpha, Strategy::default())
    }

    pub fn with_strategy(alpha: usize, strategy: Strategy) -> Self {
        Normalizer {
            alpha,
            strategy,
            words: HashMap::new(),
            repairs: HashMap::new(),
            stats: NormalizerStats::default(),
            nu: NuPoly::nu(),
            nu_minus_one: &NuPoly::nu() - &NuPoly::one(),
            minus_one: NuPoly::from_int(-1),
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn stats(&self) -> NormalizerStats {
        self.stats
    }

    /// The element of the algebra equal to the word.
    pub fn normalize(&mut self, word: &[Token]) -> Result<OElement> {
        let mut g = Permutation::identity(self.alpha);
        let mut thetas: Vec<u8> = Vec::with_capacity(word.len());
        for tok in word {
            match tok {
                Token::A(h) => {
                    if h.degree() != self.alpha {
                        return Err(Error::Argument(format!(
                            "A{h} has degree {}, expected {}",
                            h.degree(),
                            self.alpha
                        )));
                    }
                    // W A(h) = A(h) h⁻¹(W)
                    let h_inv = h.inverse();
                    for t in thetas.iter_mut() {
                        *t = h_inv.apply(*t as usize) as u8;
                    }
                    g = g.compose(h);
                }
                Token::Theta(i) => {
                    if *i >= self.alpha {
                        return Err(Error::Argument(format!(
                            "theta index {} outside 1..={}",
                            i + 1,
                            self.alpha
                        )));
                    }
                    thetas.push(*i as u8);
                }
            }
        }
        let reduced = self.reduce_word(&thetas);
        Ok(self.left_mul_a(&g, &reduced))
    }

    /// Product of two elements, bilinear over monomial products.
    pub fn multiply(&mut self, x: &OElement, y: &OElement) -> Result<OElement> {
        x.check_alpha(y)?;
        if x.alpha() != self.alpha {
            return Err(Error::Dimension(format!(
                "normalizer for alpha {} given alpha {}",
                self.alpha,
                x.alpha()
            )));
        }
        let mut out = OElement::zero(self.alpha);
        for (p, a) in x.terms() {
            for (q, b) in y.terms() {
                let prod = self.multiply_monomials(p, q);
                out.add_scaled(&prod, &(a * b));
            }
        }
        Ok(out)
    }

    /// `A(g₁)Θ_{I₁} · A(g₂)Θ_{I₂} = A(g₁g₂) Θ_{g₂⁻¹(I₁)} Θ_{I₂}`.
    pub fn multiply_monomials(&mut self, p: &Monomial, q: &Monomial) -> OElement {
        let g2_inv = q.g().inverse();
        let mut word: Vec<u8> = p
            .theta()
            .iter()
            .map(|&i| g2_inv.apply(i as usize) as u8)
            .collect();
        word.extend_from_slice(q.theta());
        let reduced = self.reduce_word(&word);
        self.left_mul_a(&p.g().compose(q.g()), &reduced)
    }

    /// `A(g) · x`.
    pub fn left_mul_a(&mut self, g: &Permutation, x: &OElement) -> OElement {
        let mut out = OElement::zero(self.alpha);
        for (m, c) in x.terms() {
            let gh = g.compose(m.g());
            let repaired = self.repair(&gh, m.theta());
            out.add_scaled(&repaired, c);
        }
        out
    }

    /// Normal form of the theta word `Θ_{w₁} ⋯ Θ_{w_k}`.
    fn reduce_word(&mut self, word: &[u8]) -> OElement {
        if let Some(hit) = self.words.get(word) {
            return hit.clone();
        }
        let measure = word_measure(word);
        let unsorted: Vec<usize> = (0..word.len().saturating_sub(1))
            .filter(|&p| word[p] >= word[p + 1])
            .collect();
        let pick = match self.strategy {
            Strategy::LeftmostFirst => unsorted.first(),
            Strategy::RightmostFirst => unsorted.last(),
        };
        let result = match pick {
            None => OElement::monomial(Monomial::new_unchecked(
                Permutation::identity(self.alpha),
                word.to_vec(),
            )),
            Some(&p) if word[p] == word[p + 1] => {
                self.stats.collapses += 1;
                let mut once = word.to_vec();
                once.remove(p);
                let mut none = once.clone();
                none.remove(p);
                self.guard(measure, word_measure(&once), word);
                let a = self.reduce_word(&once);
                let b = self.reduce_word(&none);
                let mut out = a.scale(&self.nu_minus_one);
                out.add_scaled(&b, &self.nu.clone());
                out
            }
            Some(&p) => {
                self.stats.swaps += 1;
                let (j, i) = (word[p], word[p + 1]);
                let mut swapped = word.to_vec();
                swapped.swap(p, p + 1);
                self.guard(measure, word_measure(&swapped), word);
                let sorted_part = self.reduce_word(&swapped);

                // L A(t) = A(t) t(L), t = (ij) an involution
                let t = Permutation::transposition(self.alpha, i as usize, j as usize);
                let conj_prefix: Vec<u8> = word[..p]
                    .iter()
                    .map(|&m| t.apply(m as usize) as u8)
                    .collect();
                let mut with_j = conj_prefix.clone();
                with_j.push(j);
                with_j.extend_from_slice(&word[p + 2..]);
                let mut with_i = conj_prefix;
                with_i.push(i);
                with_i.extend_from_slice(&word[p + 2..]);
                let rj = self.reduce_word(&with_j);
                let rj = self.left_mul_a(&t, &rj);
                let ri = self.reduce_word(&with_i);
                let ri = self.left_mul_a(&t, &ri);

                let mut out = sorted_part;
                out.add_scaled(&rj, &NuPoly::one());
                out.add_scaled(&ri, &self.minus_one.clone());
                out
            }
        };
        self.words.insert(word.to_vec(), result.clone());
        result
    }

    /// Normal form of `A(g) Θ_J` for strictly increasing `J`.
    fn repair(&mut self, g: &Permutation, theta: &[u8]) -> OElement {
        let key = (g.clone(), theta.to_vec());
        if let Some(hit) = self.repairs.get(&key) {
            return hit.clone();
        }
        let descents: Vec<usize> = (0..theta.len().saturating_sub(1))
            .filter(|&p| g.apply(theta[p] as usize) > g.apply(theta[p + 1] as usize))
            .collect();
        let pick = match self.strategy {
            Strategy::LeftmostFirst => descents.first(),
            Strategy::RightmostFirst => descents.last(),
        };
        let result = match pick {
            None => {
                debug_assert!(is_admissible(g, theta));
                OElement::monomial(Monomial::new_unchecked(g.clone(), theta.to_vec()))
            }
            Some(&p) => {
                // A(g)Θ_J = A(gt)Θ_J + A(gt)Θ_{J∖b} − A(g)Θ_{J∖b}
                let (a, b) = (theta[p], theta[p + 1]);
                debug_assert!(a < b);
                self.stats.erasures_lower_first += 1;
                let t = Permutation::transposition(self.alpha, a as usize, b as usize);
                let gt = g.compose(&t);
                let before = (theta.len(), inversions_under(g, theta));
                let after = (theta.len(), inversions_under(&gt, theta));
                assert!(
                    after < before,
                    "repair of A{g} over {theta:?} did not decrease its measure"
                );
                let mut shorter = theta.to_vec();
                shorter.remove(p + 1);
                let mut out = self.repair(&gt, theta);
                let x = self.repair(&gt, &shorter);
                out.add_scaled(&x, &NuPoly::one());
                let y = self.repair(g, &shorter);
                out.add_scaled(&y, &self.minus_one.clone());
                out
            }
        };
        self.repairs.insert(key, result.clone());
        result
    }

    fn guard(&self, before: (usize, usize), after: (usize, usize), word: &[u8]) {
        assert!(
            after < before,
            "rewrite of theta word {word:?} did not decrease its measure"
        );
    }
}

/// `(length, strict inversions)`.
fn word_measure(word: &[u8]) -> (usize, usize) {
    let mut inv = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inv += 1;
            }
        }
    }
    (word.len(), inv)
}

fn inversions_under(g: &Permutation, theta: &[u8]) -> usize {
    let images: Vec<u8> = theta.iter().map(|&i| g.apply(i as usize) as u8).collect();
    word_measure(&images).1
}
