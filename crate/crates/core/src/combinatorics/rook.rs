use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use super::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::factorial;

/// A partial bijection of `{0, .., alpha-1}`: an element of the rook monoid.
///
/// `target[j] = Some(i)` means `j ↦ i`, i.e. matrix entry `(i, j)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    target: Vec<Option<u8>>,
}

impl PartialInjection {
    pub fn new(target: Vec<Option<u8>>) -> Result<Self> {
        let alpha = target.len();
        let mut seen = vec![false; alpha];
        for x in target.iter().flatten() {
            let x = *x as usize;
            if x >= alpha || seen[x] {
                return Err(Error::Argument(format!(
                    "not a partial injection of 0..{alpha}: {target:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(PartialInjection { target })
    }

    pub fn identity(alpha: usize) -> Self {
        PartialInjection {
            target: (0..alpha as u8).map(Some).collect(),
        }
    }

    pub fn from_permutation(g: &Permutation) -> Self {
        PartialInjection {
            target: g.images().iter().map(|&x| Some(x)).collect(),
        }
    }

    /// Reads the exported form: 1-based images, 0 for undefined.
    pub fn from_serialized(values: &[usize]) -> Result<Self> {
        let target = values
            .iter()
            .map(|&v| match v {
                0 => Ok(None),
                v if v <= values.len() => Ok(Some((v - 1) as u8)),
                v => Err(Error::Argument(format!("entry {v} outside 0..={}", values.len()))),
            })
            .collect::<Result<Vec<_>>>()?;
        PartialInjection::new(target)
    }

    pub fn serialize(&self) -> Vec<usize> {
        self.target
            .iter()
            .map(|t| t.map_or(0, |x| x as usize + 1))
            .collect()
    }

    pub fn alpha(&self) -> usize {
        self.target.len()
    }

    pub fn target(&self) -> &[Option<u8>] {
        &self.target
    }

    pub fn get(&self, j: usize) -> Option<usize> {
        self.target[j].map(|x| x as usize)
    }

    pub fn rank(&self) -> usize {
        self.target.iter().filter(|t| t.is_some()).count()
    }

    /// Points where the map is undefined (the empty columns), ascending.
    pub fn undefined_points(&self) -> Vec<usize> {
        (0..self.alpha()).filter(|&j| self.target[j].is_none()).collect()
    }

    /// Points not in the image (the empty rows), ascending.
    pub fn missing_images(&self) -> Vec<usize> {
        let mut hit = vec![false; self.alpha()];
        for x in self.target.iter().flatten() {
            hit[*x as usize] = true;
        }
        (0..self.alpha()).filter(|&i| !hit[i]).collect()
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &PartialInjection) -> Result<PartialInjection> {
        if self.alpha() != other.alpha() {
            return Err(Error::Dimension(format!(
                "rook_compose of alpha {} and {}",
                self.alpha(),
                other.alpha()
            )));
        }
        Ok(PartialInjection {
            target: other
                .target
                .iter()
                .map(|t| t.and_then(|x| self.target[x as usize]))
                .collect(),
        })
    }

    /// Diagonal idempotent undefined exactly on `indices` (0-based, strictly increasing).
    pub fn idempotent(alpha: usize, indices: &[usize]) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!(
                "index set {indices:?} is not strictly increasing"
            )));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= alpha) {
            return Err(Error::Argument(format!("index {bad} outside 0..{alpha}")));
        }
        let mut target: Vec<Option<u8>> = (0..alpha as u8).map(Some).collect();
        for &i in indices {
            target[i] = None;
        }
        Ok(PartialInjection { target })
    }

    /// Inverse partial map; the transposed matrix.
    pub fn transpose(&self) -> PartialInjection {
        let mut target = vec![None; self.alpha()];
        for (j, t) in self.target.iter().enumerate() {
            if let Some(i) = t {
                target[*i as usize] = Some(j as u8);
            }
        }
        PartialInjection { target }
    }

    /// 0/1 matrix, row-major.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.alpha()]; self.alpha()];
        for (j, t) in self.target.iter().enumerate() {
            if let Some(i) = t {
                m[*i as usize][j] = 1;
            }
        }
        m
    }

    fn sort_key(&self) -> impl Iterator<Item = u8> + '_ {
        self.target.iter().map(|t| t.unwrap_or(u8::MAX))
    }
}

impl Ord for PartialInjection {
    /// Canonical order: rank descending, then targets lexicographically
    /// with undefined entries last.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .rank()
            .cmp(&self.rank())
            .then_with(|| self.alpha().cmp(&other.alpha()))
            .then_with(|| self.sort_key().cmp(other.sort_key()))
    }
}

impl PartialOrd for PartialInjection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialInjection{:?}", self.serialize())
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.serialize().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All elements of the rook monoid in canonical order.
pub fn rook_enumerate(alpha: usize, limits: &Limits) -> Result<Vec<PartialInjection>> {
    limits.check_alpha(alpha)?;
    let mut out = Vec::new();
    let mut current = vec![None; alpha];
    let mut used = vec![false; alpha];
    fill(0, &mut current, &mut used, &mut out);
    out.sort();
    Ok(out)
}

fn fill(
    j: usize,
    current: &mut Vec<Option<u8>>,
    used: &mut Vec<bool>,
    out: &mut Vec<PartialInjection>,
) {
    if j == current.len() {
        out.push(PartialInjection {
            target: current.clone(),
        });
        return;
    }
    current[j] = None;
    fill(j + 1, current, used, out);
    for i in 0..current.len() {
        if !used[i] {
            used[i] = true;
            current[j] = Some(i as u8);
            fill(j + 1, current, used, out);
            used[i] = false;
        }
    }
    current[j] = None;
}

/// Closed-form size of the rook monoid: `Σ_r (α!)² / ((α−r)! (r!)²)`.
pub fn rook_count_formula(alpha: usize) -> BigInt {
    let a = factorial(alpha);
    (0..=alpha)
        .map(|r| &a * &a / (factorial(alpha - r) * factorial(r) * factorial(r)))
        .sum()
}

/// Upper-left `alpha × alpha` corner of the permutation matrix of `u`.
pub fn corner_map(u: &Permutation, alpha: usize) -> Result<PartialInjection> {
    if alpha > u.degree() {
        return Err(Error::Argument(format!(
            "corner size {alpha} exceeds permutation degree {}",
            u.degree()
        )));
    }
    Ok(PartialInjection {
        target: (0..alpha)
            .map(|j| {
                let x = u.apply(j);
                (x < alpha).then_some(x as u8)
            })
            .collect(),
    })
}
