use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{basis_enumerate, Monomial, Normalizer, NuPoly, OElement};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_q, parse_q, Q};

/// Structure constants `c^r_{pq}(ν)` of the presented algebra in its
/// canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    alpha: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    constants: Vec<Vec<Vec<(usize, NuPoly)>>>,
}

/// A structure table with `ν` replaced by a rational number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedTable {
    pub alpha: usize,
    pub nu: Q,
    pub basis: Vec<Monomial>,
    pub constants: Vec<Vec<Vec<(usize, Q)>>>,
}

/// Builds the full table by normalizing every product of two basis monomials.
pub fn structure_table(alpha: usize, limits: &Limits) -> Result<StructureTable> {
    let basis = basis_enumerate(alpha, limits)?;
    let mut normalizer = Normalizer::new(alpha);
    let rows = basis
        .iter()
        .map(|p| {
            basis
                .iter()
                .map(|q| normalizer.multiply_monomials(p, q))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(StructureTable::from_products(alpha, basis, rows))
}

/// Same as [`structure_table`], with rows built on the current rayon pool.
pub fn structure_table_parallel(alpha: usize, limits: &Limits) -> Result<StructureTable> {
    let basis = basis_enumerate(alpha, limits)?;
    let rows = basis
        .par_iter()
        .map_init(
            || Normalizer::new(alpha),
            |normalizer, p| {
                basis
                    .iter()
                    .map(|q| normalizer.multiply_monomials(p, q))
                    .collect::<Vec<_>>()
            },
        )
        .collect();
    Ok(StructureTable::from_products(alpha, basis, rows))
}

impl StructureTable {
    fn from_products(alpha: usize, basis: Vec<Monomial>, rows: Vec<Vec<OElement>>) -> Self {
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let constants = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|prod| {
                        let mut terms: Vec<(usize, NuPoly)> = prod
                            .terms()
                            .iter()
                            .map(|(m, c)| (index[m], c.clone()))
                            .collect();
                        terms.sort_by_key(|(r, _)| *r);
                        terms
                    })
                    .collect()
            })
            .collect();
        StructureTable {
            alpha,
            basis,
            index,
            constants,
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn unit_index(&self) -> usize {
        self.index[&Monomial::unit(self.alpha)]
    }

    /// Nonzero `(r, c^r_{pq})`, ascending in `r`.
    pub fn entry(&self, p: usize, q: usize) -> &[(usize, NuPoly)] {
        &self.constants[p][q]
    }

    pub fn coefficient(&self, p: usize, q: usize, r: usize) -> NuPoly {
        self.constants[p][q]
            .iter()
            .find(|(s, _)| *s == r)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn product(&self, p: usize, q: usize) -> OElement {
        let mut out = OElement::zero(self.alpha);
        for (r, c) in &self.constants[p][q] {
            out.add_term(self.basis[r.to_owned()].clone(), c.clone());
        }
        out
    }

    pub fn basis_element(&self, p: usize) -> OElement {
        OElement::monomial(self.basis[p].clone())
    }

    /// Coordinates of `x` in the basis.
    pub fn coordinates(&self, x: &OElement) -> Vec<NuPoly> {
        let mut v = vec![NuPoly::zero(); self.dim()];
        for (m, c) in x.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn multiply(&self, x: &OElement, y: &OElement) -> Result<OElement> {
        x.check_alpha(y)?;
        if x.alpha() != self.alpha {
            return Err(Error::Dimension(format!(
                "table for alpha {} given alpha {}",
                self.alpha,
                x.alpha()
            )));
        }
        let mut out = OElement::zero(self.alpha);
        for (m, a) in x.terms() {
            let p = self.index[m];
            for (n, b) in y.terms() {
                let q = self.index[n];
                let ab = a * b;
                for (r, c) in &self.constants[p][q] {
                    out.add_term(self.basis[*r].clone(), &ab * c);
                }
            }
        }
        Ok(out)
    }

    /// Largest `ν`-degree over all structure constants.
    pub fn max_nu_degree(&self) -> usize {
        self.constants
            .iter()
            .flatten()
            .flatten()
            .filter_map(|(_, c)| c.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate_at(&self, nu: &Q) -> EvaluatedTable {
        EvaluatedTable {
            alpha: self.alpha,
            nu: nu.clone(),
            basis: self.basis.clone(),
            constants: self
                .constants
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|terms| {
                            terms
                                .iter()
                                .map(|(r, c)| (*r, c.eval(nu)))
                                .filter(|(_, v)| *v != Q::from_integer(0.into()))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn json_model(&self) -> TableJson {
        TableJson {
            alpha: self.alpha,
            nu: None,
            basis: basis_json(&self.basis),
            constants: self
                .constants
                .iter()
                .enumerate()
                .flat_map(|(p, row)| {
                    row.iter().enumerate().map(move |(q, terms)| EntryJson {
                        p: p + 1,
                        q: q + 1,
                        terms: terms
                            .iter()
                            .map(|(r, c)| TermJson {
                                r: *r + 1,
                                poly: c.to_strings(),
                            })
                            .collect(),
                    })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.json_model()).expect("serializable") + "\n"
    }

    /// One row per nonzero `(p, q, r)`; the polynomial is `;`-separated,
    /// constant term first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,r,poly\n");
        for (p, row) in self.constants.iter().enumerate() {
            for (q, terms) in row.iter().enumerate() {
                for (r, c) in terms {
                    writeln!(out, "{},{},{},{}", p + 1, q + 1, r + 1, c.to_strings().join(";")).unwrap();
                }
            }
        }
        out
    }

    /// Reads the JSON export. Tables exported with a `nu` value come back with
    /// constant polynomials.
    pub fn from_json(text: &str) -> Result<StructureTable> {
        let model: TableJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let alpha = model.alpha;
        let basis = model
            .basis
            .iter()
            .map(|b| {
                if b.g.len() != alpha {
                    return Err(Error::Parse(format!("basis permutation {:?}", b.g)));
                }
                let g = Permutation::from_one_line(&b.g)?;
                let theta = b
                    .i
                    .iter()
                    .map(|&i| {
                        if i == 0 || i > alpha {
                            Err(Error::Parse(format!("theta index {i}")))
                        } else {
                            Ok((i - 1) as u8)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Monomial::new(g, theta)
            })
            .collect::<Result<Vec<_>>>()?;
        let dim = basis.len();
        let mut constants = vec![vec![Vec::new(); dim]; dim];
        let in_range = |k: usize| (1..=dim).contains(&k);
        let mut seen = vec![vec![false; dim]; dim];
        for e in &model.constants {
            if !in_range(e.p) || !in_range(e.q) {
                return Err(Error::Parse(format!("entry ({}, {}) out of range", e.p, e.q)));
            }
            let (p, q) = (e.p - 1, e.q - 1);
            if std::mem::replace(&mut seen[p][q], true) {
                return Err(Error::Parse(format!("entry ({}, {}) given twice", e.p, e.q)));
            }
            let mut terms = e
                .terms
                .iter()
                .map(|t| {
                    if !in_range(t.r) {
                        return Err(Error::Parse(format!("basis index {} out of range", t.r)));
                    }
                    Ok((t.r - 1, NuPoly::from_strings(&t.poly)?))
                })
                .collect::<Result<Vec<_>>>()?;
            terms.sort_by_key(|(r, _)| *r);
            constants[p][q] = terms;
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(StructureTable {
            alpha,
            basis,
            index,
            constants,
        })
    }
}

impl EvaluatedTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coefficient(&self, p: usize, q: usize, r: usize) -> Q {
        self.constants[p][q]
            .iter()
            .find(|(s, _)| *s == r)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Q::from_integer(0.into()))
    }

    pub fn to_json(&self) -> String {
        let model = TableJson {
            alpha: self.alpha,
            nu: Some(format_q(&self.nu)),
            basis: basis_json(&self.basis),
            constants: self
                .constants
                .iter()
                .enumerate()
                .flat_map(|(p, row)| {
                    row.iter().enumerate().map(move |(q, terms)| EntryJson {
                        p: p + 1,
                        q: q + 1,
                        terms: terms
                            .iter()
                            .map(|(r, c)| TermJson {
                                r: *r + 1,
                                poly: vec![format_q(c)],
                            })
                            .collect(),
                    })
                })
                .collect(),
        };
        serde_json::to_string_pretty(&model).expect("serializable") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,r,value\n");
        for (p, row) in self.constants.iter().enumerate() {
            for (q, terms) in row.iter().enumerate() {
                for (r, c) in terms {
                    writeln!(out, "{},{},{},{}", p + 1, q + 1, r + 1, format_q(c)).unwrap();
                }
            }
        }
        out
    }
}

/// Value of the `nu` field of an exported table, if any.
pub fn exported_nu(text: &str) -> Result<Option<Q>> {
    let model: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    model.nu.as_deref().map(parse_q).transpose()
}

fn basis_json(basis: &[Monomial]) -> Vec<BasisJson> {
    basis
        .iter()
        .map(|m| BasisJson {
            g: m.g().one_line(),
            i: m.theta().iter().map(|&i| i as usize + 1).collect(),
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    alpha: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<String>,
    basis: Vec<BasisJson>,
    constants: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct BasisJson {
    g: Vec<usize>,
    #[serde(rename = "I")]
    i: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    p: usize,
    q: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    r: usize,
    poly: Vec<String>,
}
