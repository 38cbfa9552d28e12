//! Counting identities, the `ν → ∞` limit, and the bilinear forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::report::{Collector, Counterexample, VerificationReport, VerifyOptions};
use crate::combinatorics::{partitions, rook_count_formula, rook_enumerate, sfixed_multiplicities};
use crate::error::Result;
use crate::linalg::{det_poly, eval_matrix, ldl_definiteness, rational_roots, Definiteness};
use crate::presented::{
    basis_enumerate, gram_matrix, rook_product_table, scaled_limit_table, structure_table_parallel,
    trace_form_matrix, NuPoly, StructureTable,
};
use crate::rational::{display_q, format_q, Q};

fn mismatch(check: &str, location: Value, lhs: impl ToString, rhs: impl ToString) -> Counterexample {
    Counterexample {
        check: check.into(),
        location,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// `|basis| = |Π_α| = Σ_k C(α,k)² k! = Σ d²`; the basis count is skipped
/// above the structure-table limit.
pub fn dimension_suite(alpha: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    opts.limits.check_alpha(alpha)?;
    let mut c = Collector::new("dims", opts);
    c.param("alpha", alpha);
    let enumerated = BigInt::from(rook_enumerate(alpha, &opts.limits)?.len());
    let formula = rook_count_formula(alpha);
    let mults = sfixed_multiplicities(alpha, &opts.limits)?;
    let squares: BigInt = mults.iter().map(|&d| BigInt::from(d) * d).sum();
    c.metric("rook_enumeration", enumerated.to_string());
    c.metric("rook_formula", formula.to_string());
    c.metric("sum_of_squares", squares.to_string());
    c.metric("multiplicities", mults.clone());
    let loc = json!({ "alpha": alpha });
    c.check("enumeration = closed form", enumerated == formula, || {
        mismatch("enumeration = closed form", loc.clone(), &enumerated, &formula)
    });
    c.check("enumeration = Σ d²", enumerated == squares, || {
        mismatch("enumeration = Σ d²", loc.clone(), &enumerated, &squares)
    });
    if opts.limits.check_table_alpha(alpha).is_ok() {
        let basis = BigInt::from(basis_enumerate(alpha, &opts.limits)?.len());
        c.metric("basis", basis.to_string());
        c.check("basis = enumeration", basis == enumerated, || {
            mismatch("basis = enumeration", loc.clone(), &basis, &enumerated)
        });
    } else {
        c.metric("basis", Value::Null);
    }
    Ok(c.finish())
}

/// Block sizes of the limit algebra read off its multiplication table:
/// for each rank `k`, the number of idempotents of rank `k` times the
/// dimension of each irreducible of `S_k`.
fn limit_blocks(table: &StructureTable, products: &[Vec<usize>]) -> Vec<u64> {
    let alpha = table.alpha();
    let mut idempotents: BTreeMap<usize, u64> = BTreeMap::new();
    for (p, m) in table.basis().iter().enumerate() {
        if products[p][p] == p {
            *idempotents.entry(alpha - m.theta_degree()).or_default() += 1;
        }
    }
    let mut out = Vec::new();
    for (k, count) in idempotents.iter().rev() {
        for lambda in partitions(*k) {
            out.push(count * lambda.irrep_dim());
        }
    }
    out
}

pub fn limit_suite(alpha: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let table = structure_table_parallel(alpha, &opts.limits)?;
    let mut c = Collector::new("limit", opts);
    c.param("alpha", alpha);
    let rook = rook_product_table(alpha, &opts.limits)?;
    let products = match scaled_limit_table(&table) {
        Ok(l) => l.products,
        Err(e) => {
            c.check("limits exist in {0, 1}", false, || {
                mismatch("limits exist in {0, 1}", json!({ "alpha": alpha }), e, "a 0/1 limit table")
            });
            return Ok(c.finish());
        }
    };
    c.record("limits exist in {0, 1}", None);
    let basis = table.basis();
    for p in 0..basis.len() {
        for q in 0..basis.len() {
            let (got, want) = (products[p][q], rook[p][q]);
            c.check("limit product = rook product", got == want, || {
                mismatch(
                    "limit product = rook product",
                    json!({ "p": p + 1, "q": q + 1, "basis_p": basis[p].to_string(), "basis_q": basis[q].to_string() }),
                    basis[got].to_string(),
                    basis[want].to_string(),
                )
            });
        }
    }
    let mut from_limit = limit_blocks(&table, &products);
    let mut from_fixed = sfixed_multiplicities(alpha, &opts.limits)?;
    from_limit.sort_unstable();
    from_fixed.sort_unstable();
    c.metric("blocks_limit", from_limit.clone());
    c.metric("blocks_fixed_vectors", from_fixed.clone());
    c.check("block multisets agree", from_limit == from_fixed, || {
        mismatch(
            "block multisets agree",
            json!({ "alpha": alpha }),
            format!("{from_limit:?}"),
            format!("{from_fixed:?}"),
        )
    });
    let squares: u64 = from_limit.iter().map(|d| d * d).sum();
    c.check("Σ d² = dim", squares as usize == basis.len(), || {
        mismatch("Σ d² = dim", json!({ "alpha": alpha }), squares, basis.len())
    });
    Ok(c.finish())
}

/// Determinant of the trace form `Tr(e_p e_q)` and its rational roots.
pub fn semisimplicity_probe(alpha: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let table = structure_table_parallel(alpha, &opts.limits)?;
    let mut c = Collector::new("semisimple", opts);
    c.param("alpha", alpha);
    let det = det_poly(&trace_form_matrix(&table))?;
    c.metric("det_degree", det.degree().map_or(Value::Null, Value::from));
    c.metric("det", det.to_strings());
    let loc = json!({ "alpha": alpha });
    c.check("det ≠ 0", !det.is_zero(), || mismatch("det ≠ 0", loc.clone(), &det, "nonzero"));
    if det.is_zero() {
        return Ok(c.finish());
    }
    let at = Q::from_integer((alpha + 1).into());
    let value = det.eval(&at);
    c.metric("det_at_alpha_plus_one", format_q(&value));
    c.check("det(α+1) ≠ 0", !num_traits::Zero::is_zero(&value), || {
        mismatch("det(α+1) ≠ 0", loc.clone(), format_q(&value), "nonzero")
    });
    if alpha == 1 {
        let ok = det == NuPoly::nu() || det == -NuPoly::nu();
        c.check("det = ±ν at α = 1", ok, || mismatch("det = ±ν at α = 1", loc.clone(), &det, "±ν"));
    }
    let roots = rational_roots(&det)?;
    c.metric(
        "rational_roots",
        roots
            .roots
            .iter()
            .map(|(r, m)| json!({ "root": format_q(r), "multiplicity": m }))
            .collect::<Vec<_>>(),
    );
    c.metric("roots_complete", roots.complete);
    if !roots.roots.is_empty() {
        let list: Vec<String> = roots.roots.iter().map(|(r, _)| display_q(r)).collect();
        c.warn(format!(
            "candidate degenerate values of nu: {}{}",
            list.join(", "),
            if roots.complete { "" } else { " (search incomplete)" }
        ));
    }
    Ok(c.finish())
}

/// Gram matrix at a rational `ν` and its definiteness.
pub fn gram_positivity(table: &StructureTable, nu: &Q) -> Result<(Vec<Vec<Q>>, Definiteness)> {
    let g = eval_matrix(&gram_matrix(table)?, nu);
    let verdict = ldl_definiteness(&g)?;
    Ok((g, verdict))
}

/// Smallest integer `ν ∈ [0, 4α]` at which the Gram matrix is positive
/// definite.
pub fn smallest_positive_definite_nu(table: &StructureTable) -> Result<Option<usize>> {
    let gram = gram_matrix(table)?;
    for nu in 0..=4 * table.alpha() {
        let g = eval_matrix(&gram, &Q::from_integer(nu.into()));
        if ldl_definiteness(&g)?.positive_definite {
            return Ok(Some(nu));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_small() {
        for alpha in 1..=3 {
            let r = dimension_suite(alpha, &VerifyOptions::default()).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
        let r = dimension_suite(2, &VerifyOptions::default()).unwrap();
        assert_eq!(r.metrics["basis"], Value::from("7"));
    }

    #[test]
    fn limit_alpha_two() {
        let r = limit_suite(2, &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.metrics["blocks_limit"], json!([1, 1, 1, 2]));
    }

    #[test]
    fn probe_alpha_one() {
        let r = semisimplicity_probe(1, &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.metrics["rational_roots"], json!([{ "root": "0/1", "multiplicity": 1 }]));
    }

    #[test]
    fn gram_alpha_one() {
        let t = structure_table_parallel(1, &Default::default()).unwrap();
        let (g, v) = gram_positivity(&t, &Q::from_integer(5.into())).unwrap();
        assert_eq!(g[1][1], Q::from_integer(5.into()));
        assert!(v.positive_definite);
        assert_eq!(smallest_positive_definite_nu(&t).unwrap(), Some(1));
    }
}
