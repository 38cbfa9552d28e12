use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A Young diagram given by its weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!(
                "rows {rows:?} are not a weakly decreasing positive sequence"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    fn column_length(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > c).count()
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn irrep_dim(&self) -> u64 {
        // n! / Π hooks, interleaved so intermediates stay exact and small.
        let mut hooks: Vec<u128> = Vec::with_capacity(self.size());
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = self.column_length(c) - r - 1;
                hooks.push((arm + leg + 1) as u128);
            }
        }
        let mut num: u128 = 1;
        for k in 1..=self.size() as u128 {
            num *= k;
            for h in hooks.iter_mut() {
                let g = gcd(num, *h);
                num /= g;
                *h /= g;
            }
        }
        debug_assert!(hooks.iter().all(|&h| h == 1));
        num as u64
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, &mut current, &mut out);
    out
}

fn partitions_rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
    if rest == 0 {
        out.push(YoungDiagram {
            rows: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        partitions_rec(rest - part, part, current, out);
        current.pop();
    }
}

/// Dimensions of the nonzero spaces of fixed vectors: `C(α, t) · dim λ′`
/// over `t = 0..=α` and `|λ′| = α − t`, in that enumeration order.
pub fn sfixed_multiplicities(alpha: usize, limits: &Limits) -> Result<Vec<u64>> {
    limits.check_alpha(alpha)?;
    let mut out = Vec::new();
    for t in 0..=alpha {
        let binom = crate::rational::binomial(alpha, t);
        let binom: u64 = binom.try_into().expect("binomial fits in u64");
        for lambda in partitions(alpha - t) {
            out.push(binom * lambda.irrep_dim());
        }
    }
    Ok(out)
}
