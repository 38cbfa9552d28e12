use std::fmt;

use crate::combinatorics::{rook_enumerate, PartialInjection, Permutation};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A basis monomial `A(g) Θ_{i₁} ⋯ Θ_{i_k}` with `i₁ < ⋯ < i_k` and
/// `g(i₁) < ⋯ < g(i_k)`.
///
/// Each one corresponds to the rook monoid element `g · T_{i₁…i_k}`, which is
/// stored alongside and drives the ordering, so basis indices agree with the
/// canonical enumeration of the rook monoid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    rook: PartialInjection,
    g: Permutation,
    theta: Vec<u8>,
}

impl Monomial {
    /// `theta` holds 0-based indices and must be strictly increasing.
    pub fn new(g: Permutation, theta: Vec<u8>) -> Result<Self> {
        let alpha = g.degree();
        if theta.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!(
                "theta indices {theta:?} not strictly increasing"
            )));
        }
        if theta.iter().any(|&i| i as usize >= alpha) {
            return Err(Error::Argument(format!(
                "theta indices {theta:?} outside 0..{alpha}"
            )));
        }
        if !is_admissible(&g, &theta) {
            return Err(Error::Argument(format!(
                "A{g} with theta {theta:?} is not a basis monomial"
            )));
        }
        Ok(Self::new_unchecked(g, theta))
    }

    pub(crate) fn new_unchecked(g: Permutation, theta: Vec<u8>) -> Self {
        let mut target: Vec<Option<u8>> = g.images().iter().map(|&x| Some(x)).collect();
        for &i in &theta {
            target[i as usize] = None;
        }
        Monomial {
            rook: PartialInjection::new(target).expect("restriction of a permutation"),
            g,
            theta,
        }
    }

    pub fn unit(alpha: usize) -> Self {
        Self::new_unchecked(Permutation::identity(alpha), Vec::new())
    }

    /// The unique basis monomial mapped to `sigma`.
    pub fn from_rook(sigma: &PartialInjection) -> Self {
        let theta: Vec<u8> = sigma.undefined_points().iter().map(|&i| i as u8).collect();
        let missing = sigma.missing_images();
        let mut images = vec![0u8; sigma.alpha()];
        for j in 0..sigma.alpha() {
            if let Some(i) = sigma.get(j) {
                images[j] = i as u8;
            }
        }
        for (&i, &row) in theta.iter().zip(&missing) {
            images[i as usize] = row as u8;
        }
        Self::new_unchecked(Permutation::from_images_unchecked(images), theta)
    }

    pub fn alpha(&self) -> usize {
        self.g.degree()
    }

    pub fn g(&self) -> &Permutation {
        &self.g
    }

    pub fn theta(&self) -> &[u8] {
        &self.theta
    }

    pub fn theta_degree(&self) -> usize {
        self.theta.len()
    }

    pub fn rook(&self) -> &PartialInjection {
        &self.rook
    }

    pub fn is_unit(&self) -> bool {
        self.theta.is_empty() && self.g.is_identity()
    }

    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::with_capacity(self.theta.len() + 1);
        if !self.g.is_identity() {
            out.push(Token::A(self.g.clone()));
        }
        out.extend(self.theta.iter().map(|&i| Token::Theta(i as usize)));
        out
    }
}

pub(crate) fn is_admissible(g: &Permutation, theta: &[u8]) -> bool {
    theta
        .windows(2)
        .all(|w| g.apply(w[0] as usize) < g.apply(w[1] as usize))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.g.is_identity() {
            if self.theta.is_empty() {
                return write!(f, "A(1)");
            }
        } else {
            write!(f, "A({})", self.g)?;
        }
        for &i in &self.theta {
            write!(f, "Θ{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A generator in a word: `A(g)` or `Θ_i` (0-based `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Token {
    A(Permutation),
    Theta(usize),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::A(g) if g.is_identity() => write!(f, "A(1)"),
            Token::A(g) => write!(f, "A{g}"),
            Token::Theta(i) => write!(f, "T{}", i + 1),
        }
    }
}

/// Parses words such as `"T1 T1 A(12)"`: `Ti` (or `Θi`) is a theta
/// generator, `A(...)` a permutation in 1-based cycle notation. `A(1)` and
/// `A()` are the identity; `A((12)(34))`, `A(12)(34)` and `A(1,2)` are accepted.
pub fn parse_word(text: &str, alpha: usize) -> Result<Vec<Token>> {
    text.split_whitespace()
        .map(|tok| parse_token(tok, alpha))
        .collect()
}

fn parse_token(tok: &str, alpha: usize) -> Result<Token> {
    let bad = |why: &str| Error::Argument(format!("malformed token {tok:?}: {why}"));
    if let Some(rest) = tok.strip_prefix('T').or_else(|| tok.strip_prefix('Θ')) {
        let i: usize = rest.parse().map_err(|_| bad("expected an index"))?;
        if i == 0 || i > alpha {
            return Err(bad(&format!("index outside 1..={alpha}")));
        }
        return Ok(Token::Theta(i - 1));
    }
    if let Some(rest) = tok.strip_prefix('A') {
        if !rest.starts_with('(') || !rest.ends_with(')') {
            return Err(bad("expected A(...)"));
        }
        let mut cycles = Vec::new();
        let mut current: Option<String> = None;
        for ch in rest.chars() {
            match ch {
                '(' => current = Some(String::new()),
                ')' => {
                    if let Some(body) = current.take() {
                        cycles.push(parse_cycle(&body, alpha).map_err(|e| bad(&e))?);
                    }
                }
                c => match current.as_mut() {
                    Some(body) => body.push(c),
                    None => return Err(bad("text outside parentheses")),
                },
            }
        }
        let cycles: Vec<Vec<usize>> = cycles.into_iter().filter(|c| c.len() > 1).collect();
        let g = Permutation::from_cycles(alpha, &cycles).map_err(|e| bad(&e.to_string()))?;
        return Ok(Token::A(g));
    }
    Err(bad("expected Ti or A(...)"))
}

fn parse_cycle(body: &str, alpha: usize) -> std::result::Result<Vec<usize>, String> {
    let parts: Vec<&str> = if body.contains(',') {
        body.split(',').map(str::trim).collect()
    } else {
        body.char_indices().map(|(i, c)| &body[i..i + c.len_utf8()]).collect()
    };
    let mut out = Vec::new();
    for p in parts.into_iter().filter(|p| !p.is_empty()) {
        let v: usize = p.parse().map_err(|_| format!("bad point {p:?}"))?;
        if v == 0 || v > alpha {
            return Err(format!("point {v} outside 1..={alpha}"));
        }
        out.push(v);
    }
    Ok(out)
}

/// All basis monomials of the presented algebra, in the canonical order of
/// the rook monoid.
pub fn basis_enumerate(alpha: usize, limits: &Limits) -> Result<Vec<Monomial>> {
    limits.check_table_alpha(alpha)?;
    Ok(rook_enumerate(alpha, limits)?
        .iter()
        .map(Monomial::from_rook)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_alpha_one_and_two() {
        let limits = Limits::default();
        let b1: Vec<String> = basis_enumerate(1, &limits)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(b1, vec!["A(1)", "Θ1"]);

        let b2: Vec<String> = basis_enumerate(2, &limits)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        let mut sorted = b2.clone();
        sorted.sort();
        let mut expected = vec![
            "A(1)", "A((12))", "Θ1", "Θ2", "A((12))Θ1", "A((12))Θ2", "Θ1Θ2",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        expected.sort();
        assert_eq!(sorted, expected);
        assert!(!b2.contains(&"A((12))Θ1Θ2".to_string()));
        assert_eq!(basis_enumerate(3, &limits).unwrap().len(), 34);
    }

    #[test]
    fn rook_bijection() {
        let limits = Limits::default();
        for alpha in 0..=4 {
            for sigma in rook_enumerate(alpha, &limits).unwrap() {
                let m = Monomial::from_rook(&sigma);
                assert_eq!(m.rook(), &sigma);
                assert!(is_admissible(m.g(), m.theta()));
                let theta: Vec<usize> = m.theta().iter().map(|&i| i as usize).collect();
                let direct = PartialInjection::from_permutation(m.g())
                    .compose(&PartialInjection::idempotent(alpha, &theta).unwrap())
                    .unwrap();
                assert_eq!(direct, sigma);
            }
        }
    }

    #[test]
    fn rejects_inadmissible() {
        let swap = Permutation::transposition(2, 0, 1);
        assert!(Monomial::new(swap.clone(), vec![0, 1]).is_err());
        assert!(Monomial::new(swap, vec![1]).is_ok());
    }

    #[test]
    fn parse_words() {
        let w = parse_word("T1 T1 A(12)", 2).unwrap();
        assert_eq!(
            w,
            vec![
                Token::Theta(0),
                Token::Theta(0),
                Token::A(Permutation::transposition(2, 0, 1))
            ]
        );
        assert_eq!(parse_word("A(1)", 3).unwrap(), vec![Token::A(Permutation::identity(3))]);
        assert_eq!(
            parse_word("A((12)) Θ2", 2).unwrap(),
            vec![Token::A(Permutation::transposition(2, 0, 1)), Token::Theta(1)]
        );
        assert_eq!(
            parse_word("A(1,3)", 3).unwrap(),
            vec![Token::A(Permutation::transposition(3, 0, 2))]
        );
        assert!(parse_word("T3", 2).is_err());
        assert!(parse_word("T0", 2).is_err());
        assert!(parse_word("B(12)", 2).is_err());
        assert!(parse_word("A(13)", 2).is_err());
        assert!(parse_word("A12", 2).is_err());
    }
}
