use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{display_q, format_q, parse_q, Q};

/// A polynomial in the formal parameter `ν` with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `ν^k`; trailing zeros are never stored,
/// so the zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NuPoly {
    coeffs: Vec<Q>,
}

impl NuPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NuPoly { coeffs }
    }

    pub fn zero() -> Self {
        NuPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Q::from_integer(c.into()))
    }

    /// The indeterminate `ν`.
    pub fn nu() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// `ν^k`.
    pub fn nu_pow(k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = Q::one();
        NuPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Q) -> NuPoly {
        if c.is_zero() {
            return NuPoly::zero();
        }
        NuPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &NuPoly) -> (NuPoly, NuPoly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (NuPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d_deg] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        (NuPoly::new(quot), NuPoly::new(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &NuPoly) -> Result<NuPoly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Consistency(format!(
                "{self} is not divisible by {divisor}"
            )))
        }
    }

    /// Canonical text form: coefficients `p/q`, constant term first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_q).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<NuPoly> {
        let coeffs = items
            .iter()
            .map(|s| parse_q(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let p = NuPoly::new(coeffs);
        if p.coeffs.len() != items.len() {
            return Err(Error::Parse("polynomial has trailing zero coefficients".into()));
        }
        Ok(p)
    }

    /// Whether the polynomial is a single term `c·ν^k` (or zero).
    pub(crate) fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

impl fmt::Display for NuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "ν".to_string(),
                _ => format!("ν^{k}"),
            };
            if k == 0 {
                write!(f, "{}", display_q(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}{var}", display_q(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NuPoly({self})")
    }
}

impl Add for &NuPoly {
    type Output = NuPoly;
    fn add(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &NuPoly {
    type Output = NuPoly;
    fn sub(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &NuPoly {
    type Output = NuPoly;
    fn mul(self, rhs: &NuPoly) -> NuPoly {
        if self.is_zero() || rhs.is_zero() {
            return NuPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NuPoly::new(out)
    }
}

impl Neg for &NuPoly {
    type Output = NuPoly;
    fn neg(self) -> NuPoly {
        NuPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for NuPoly {
    type Output = NuPoly;
    fn add(self, rhs: NuPoly) -> NuPoly {
        &self + &rhs
    }
}

impl Sub for NuPoly {
    type Output = NuPoly;
    fn sub(self, rhs: NuPoly) -> NuPoly {
        &self - &rhs
    }
}

impl Mul for NuPoly {
    type Output = NuPoly;
    fn mul(self, rhs: NuPoly) -> NuPoly {
        &self * &rhs
    }
}

impl Neg for NuPoly {
    type Output = NuPoly;
    fn neg(self) -> NuPoly {
        -&self
    }
}
