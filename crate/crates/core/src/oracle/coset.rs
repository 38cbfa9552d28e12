use num_bigint::BigInt;

use super::Ctx;
use crate::combinatorics::{PartialInjection, Permutation};
use crate::error::{Error, Result};
use crate::rational::factorial;

/// Number of elements in the double coset of a corner of rank `rank`:
/// `(n!)² / (n−r)!` with `r = α − rank`, zero when `r > n`.
pub fn coset_size(ctx: Ctx, rank: usize) -> BigInt {
    let r = ctx.alpha - rank;
    if r > ctx.n {
        return BigInt::from(0);
    }
    let nf = factorial(ctx.n);
    &nf * &nf / factorial(ctx.n - r)
}

/// The closed form `n!·(n−r)!`, which is sometimes quoted for this count.
/// It disagrees with enumeration as soon as `n ≥ 2`; kept only so that
/// reports can show the comparison.
pub fn printed_coset_size(ctx: Ctx, rank: usize) -> BigInt {
    let r = ctx.alpha - rank;
    if r > ctx.n {
        return BigInt::from(0);
    }
    factorial(ctx.n) * factorial(ctx.n - r)
}

fn check_rank(sigma: &PartialInjection, ctx: Ctx) -> Result<()> {
    if sigma.alpha() != ctx.alpha {
        return Err(Error::Dimension(format!(
            "corner of size {} in context alpha = {}",
            sigma.alpha(),
            ctx.alpha
        )));
    }
    if sigma.rank() + ctx.n < ctx.alpha {
        return Err(Error::EmptyCoset(format!(
            "{sigma} has rank {} < alpha - n = {}",
            sigma.rank(),
            ctx.alpha - ctx.n
        )));
    }
    Ok(())
}

/// Fixed representative of the coset of `sigma`: the empty rows take the
/// smallest outside points as preimages, the empty columns are sent to the
/// smallest outside points, and the rest is the identity.
pub fn canonical_completion(sigma: &PartialInjection, ctx: Ctx) -> Result<Permutation> {
    check_rank(sigma, ctx)?;
    let alpha = ctx.alpha;
    let mut images = vec![0u8; ctx.degree()];
    for j in 0..alpha {
        if let Some(i) = sigma.get(j) {
            images[j] = i as u8;
        }
    }
    let rows = sigma.missing_images();
    let cols = sigma.undefined_points();
    for (m, &row) in rows.iter().enumerate() {
        images[alpha + m] = row as u8;
    }
    for (m, &col) in cols.iter().enumerate() {
        images[col] = (alpha + m) as u8;
    }
    for (m, slot) in images.iter_mut().enumerate().skip(alpha + rows.len()) {
        *slot = m as u8;
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// All `U` with corner `sigma`, built by filling the empty rows and columns
/// of the corner directly, in lexicographic order.
pub fn coset_enumerate(sigma: &PartialInjection, ctx: Ctx) -> Result<Vec<Permutation>> {
    check_rank(sigma, ctx)?;
    let alpha = ctx.alpha;
    let outside: Vec<usize> = (alpha..ctx.degree()).collect();
    let rows = sigma.missing_images();
    let cols = sigma.undefined_points();

    let mut out = Vec::new();
    let mut base = vec![u8::MAX; ctx.degree()];
    for j in 0..alpha {
        if let Some(i) = sigma.get(j) {
            base[j] = i as u8;
        }
    }
    for col_images in injections(cols.len(), &outside) {
        for row_sources in injections(rows.len(), &outside) {
            let mut images = base.clone();
            for (&c, &x) in cols.iter().zip(&col_images) {
                images[c] = x as u8;
            }
            for (&r, &s) in rows.iter().zip(&row_sources) {
                images[s] = r as u8;
            }
            let free_sources: Vec<usize> = outside
                .iter()
                .copied()
                .filter(|s| !row_sources.contains(s))
                .collect();
            let free_targets: Vec<usize> = outside
                .iter()
                .copied()
                .filter(|t| !col_images.contains(t))
                .collect();
            for arrangement in injections(free_targets.len(), &free_targets) {
                let mut full = images.clone();
                for (&s, &t) in free_sources.iter().zip(&arrangement) {
                    full[s] = t as u8;
                }
                out.push(Permutation::from_images_unchecked(full));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Ordered `k`-tuples of distinct elements of `pool`.
fn injections(k: usize, pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; pool.len()];
    injections_rec(k, pool, &mut current, &mut used, &mut out);
    out
}

fn injections_rec(
    k: usize,
    pool: &[usize],
    current: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in 0..pool.len() {
        if !used[i] {
            used[i] = true;
            current.push(pool[i]);
            injections_rec(k, pool, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{corner_map, rook_enumerate};
    use crate::limits::Limits;

    fn brute_coset(sigma: &PartialInjection, ctx: Ctx) -> Vec<Permutation> {
        Permutation::all(ctx.degree())
            .into_iter()
            .filter(|u| &corner_map(u, ctx.alpha).unwrap() == sigma)
            .collect()
    }

    #[test]
    fn small_examples() {
        let id1 = PartialInjection::identity(1);
        let t1 = PartialInjection::idempotent(1, &[0]).unwrap();
        assert_eq!(
            coset_enumerate(&id1, Ctx::new(1, 1)).unwrap(),
            vec![Permutation::identity(2)]
        );
        let c = coset_enumerate(&t1, Ctx::new(1, 2)).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|u| u.apply(0) != 0));
        assert_eq!(coset_enumerate(&id1, Ctx::new(1, 2)).unwrap().len(), 2);
    }

    #[test]
    fn direct_enumeration_matches_scan() {
        for alpha in 0..=3 {
            for n in 0..=4 {
                if alpha + n > 7 {
                    continue;
                }
                let ctx = Ctx::new(alpha, n);
                for sigma in rook_enumerate(alpha, &Limits::default()).unwrap() {
                    let brute = brute_coset(&sigma, ctx);
                    match coset_enumerate(&sigma, ctx) {
                        Ok(direct) => {
                            assert_eq!(direct, brute, "{sigma} in {ctx:?}");
                            assert_eq!(BigInt::from(direct.len()), coset_size(ctx, sigma.rank()));
                            let rep = canonical_completion(&sigma, ctx).unwrap();
                            assert_eq!(corner_map(&rep, alpha).unwrap(), sigma);
                        }
                        Err(Error::EmptyCoset(_)) => assert!(brute.is_empty()),
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn completion_examples() {
        assert_eq!(
            canonical_completion(&PartialInjection::identity(2), Ctx::new(2, 3)).unwrap(),
            Permutation::identity(5)
        );
        let t1 = PartialInjection::idempotent(1, &[0]).unwrap();
        assert_eq!(
            canonical_completion(&t1, Ctx::new(1, 1)).unwrap().one_line(),
            vec![2, 1]
        );
        assert_eq!(
            canonical_completion(&t1, Ctx::new(1, 2)).unwrap().one_line(),
            vec![2, 1, 3]
        );
        assert!(matches!(
            canonical_completion(&t1, Ctx::new(1, 0)),
            Err(Error::EmptyCoset(_))
        ));
    }

    #[test]
    fn printed_formula_differs() {
        let ctx = Ctx::new(1, 2);
        assert_eq!(coset_size(ctx, 0), BigInt::from(4));
        assert_eq!(printed_coset_size(ctx, 0), BigInt::from(2));
        // r = 0: the coset of the identity corner is S_n × S_n.
        assert_eq!(coset_size(ctx, 1), BigInt::from(2));
        assert_eq!(printed_coset_size(ctx, 1), BigInt::from(4));
        // The two forms agree only for n <= 1.
        for r in 0..=1 {
            let c = Ctx::new(1, 1);
            assert_eq!(coset_size(c, 1 - r), printed_coset_size(c, 1 - r));
        }
    }
}
