//! Exact linear algebra over `Q` and `Q[ν]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::presented::NuPoly;
use crate::rational::Q;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension(format!(
            "expected a square matrix of size {n}, found a row of length {}",
            row.len()
        )));
    }
    Ok(n)
}

pub fn eval_matrix(m: &[Vec<NuPoly>], x: &Q) -> Vec<Vec<Q>> {
    m.iter()
        .map(|row| row.iter().map(|c| c.eval(x)).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination; every division is exact in `Q[ν]`.
pub fn det_poly(m: &[Vec<NuPoly>]) -> Result<NuPoly> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(NuPoly::one());
    }
    let mut a = m.to_vec();
    let mut sign = false;
    let mut prev = NuPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(NuPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -d } else { d })
}

/// Gaussian elimination over `Q`.
pub fn det_q(m: &[Vec<Q>]) -> Result<Q> {
    let n = check_square(m)?;
    let mut a = m.to_vec();
    let mut det = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Q::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}

pub fn rank_q(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[rank][c];
            for j in c..cols {
                let t = &f * &a[rank][j];
                a[i][j] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of the `LDLᵀ` test for positive definiteness.
#[derive(Debug, Clone, PartialEq)]
pub struct Definiteness {
    pub positive_definite: bool,
    /// Pivots `d_k`; `d_1⋯d_k` is the k-th leading principal minor.
    pub pivots: Vec<Q>,
    /// First index whose pivot is not positive.
    pub failed_at: Option<usize>,
}

/// Unpivoted `LDLᵀ` of a symmetric matrix, stopping at the first
/// non-positive pivot.
pub fn ldl_definiteness(m: &[Vec<Q>]) -> Result<Definiteness> {
    let n = check_square(m)?;
    for i in 0..n {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::Consistency(format!(
                    "matrix is not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let mut a = m.to_vec();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let d = a[k][k].clone();
        if !d.is_positive() {
            pivots.push(d);
            return Ok(Definiteness {
                positive_definite: false,
                pivots,
                failed_at: Some(k),
            });
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k + 1..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
        pivots.push(d);
    }
    Ok(Definiteness {
        positive_definite: true,
        pivots,
        failed_at: None,
    })
}

/// Rational roots with multiplicities, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub roots: Vec<(Q, usize)>,
    /// False when an integer could not be factored and the candidate
    /// search fell back to a bounded range.
    pub complete: bool,
}

const TRIAL_LIMIT: u64 = 1 << 20;
const MAX_CANDIDATES: usize = 1 << 18;
const FALLBACK_RANGE: i64 = 10_000;

/// Prime factorization by trial division; `None` if a cofactor above
/// `TRIAL_LIMIT²` remains.
fn factor(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(out);
    }
    let limit = BigInt::from(TRIAL_LIMIT);
    if n <= &limit * &limit {
        out.push((n, 1));
        Some(out)
    } else {
        None
    }
}

fn divisors(factors: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pw = d.clone();
            for _ in 0..=*e {
                next.push(pw.clone());
                pw *= p;
            }
        }
        out = next;
    }
    out
}

/// Divides out `(x − r)` as often as possible.
fn strip_root(f: &mut NuPoly, r: &Q) -> usize {
    let lin = NuPoly::new(vec![-r.clone(), Q::one()]);
    let mut mult = 0;
    while !f.is_zero() && f.eval(r).is_zero() {
        *f = f.div_exact(&lin).expect("exact by the factor theorem");
        mult += 1;
    }
    mult
}

/// All rational roots of a nonzero polynomial.
pub fn rational_roots(p: &NuPoly) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::Argument("the zero polynomial has every root".into()));
    }
    let mut f = p.clone();
    let mut roots = Vec::new();
    let zero_mult = strip_root(&mut f, &Q::zero());
    if zero_mult > 0 {
        roots.push((Q::zero(), zero_mult));
    }
    if f.degree() == Some(0) {
        return Ok(RootReport {
            roots,
            complete: true,
        });
    }
    let denom_lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Q::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let constant = ints.first().unwrap().clone();
    let lead = ints.last().unwrap().clone();

    let mut candidates: Vec<Q> = Vec::new();
    let mut complete = false;
    if let (Some(fa), Some(fl)) = (factor(&constant), factor(&lead)) {
        let (da, dl) = (divisors(&fa), divisors(&fl));
        if da.len().saturating_mul(dl.len()) <= MAX_CANDIDATES {
            complete = true;
            for a in &da {
                for l in &dl {
                    if a.gcd(l).is_one() {
                        let r = Q::new(a.clone(), l.clone());
                        candidates.push(-r.clone());
                        candidates.push(r);
                    }
                }
            }
        }
    }
    if !complete {
        for k in 1..=FALLBACK_RANGE {
            if (&constant % BigInt::from(k)).is_zero() {
                candidates.push(Q::from_integer(k.into()));
                candidates.push(Q::from_integer((-k).into()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if f.degree().unwrap_or(0) == 0 {
            break;
        }
        let m = strip_root(&mut f, &r);
        if m > 0 {
            roots.push((r, m));
        }
    }
    if f.degree() == Some(1) {
        // A leftover linear factor always has a rational root.
        let c = f.coeffs();
        let r = -&c[0] / &c[1];
        let m = strip_root(&mut f, &r);
        roots.push((r, m));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootReport { roots, complete })
}
