use dcoset::combinatorics::Permutation;
use dcoset::presented::{
    basis_enumerate, i_hom, parse_word, star_o, structure_table, structure_table_parallel, Monomial,
    Normalizer, NuPoly, OElement, StructureTable, Strategy as Order, Token,
};
use dcoset::{Limits, Q};
use proptest::prelude::*;

fn table(alpha: usize) -> StructureTable {
    structure_table_parallel(alpha, &Limits::default()).unwrap()
}

fn norm(alpha: usize, word: &str) -> OElement {
    Normalizer::new(alpha).normalize(&parse_word(word, alpha).unwrap()).unwrap()
}

fn word_strategy(alpha: usize, max_len: usize) -> impl Strategy<Value = Vec<Token>> {
    let perms = Permutation::all(alpha);
    let token = prop_oneof![
        (0..alpha).prop_map(Token::Theta),
        (0..perms.len()).prop_map(move |i| Token::A(perms[i].clone())),
    ];
    proptest::collection::vec(token, 0..=max_len)
}

#[test]
fn strategies_agree_on_all_basis_products() {
    for alpha in 1..=3 {
        let t = table(alpha);
        let mut right = Normalizer::with_strategy(alpha, Order::RightmostFirst);
        for (p, x) in t.basis().iter().enumerate() {
            for (q, y) in t.basis().iter().enumerate() {
                assert_eq!(right.multiply_monomials(x, y), t.product(p, q), "{x} · {y}");
            }
        }
    }
}

#[test]
fn sequential_and_parallel_tables_agree() {
    for alpha in 1..=3 {
        assert_eq!(structure_table(alpha, &Limits::default()).unwrap(), table(alpha));
    }
}

#[test]
fn relations_hold_in_normal_form() {
    for alpha in 2..=3 {
        let mut n = Normalizer::new(alpha);
        let mut nf = |w: Vec<Token>| n.normalize(&w).unwrap();
        for i in 0..alpha {
            for j in 0..alpha {
                if i == j {
                    continue;
                }
                let t = Token::A(Permutation::transposition(alpha, i, j));
                let (ti, tj) = (Token::Theta(i), Token::Theta(j));
                // Θ_jΘ_i − Θ_iΘ_j = A((ij))(Θ_j − Θ_i)
                let lhs = nf(vec![tj.clone(), ti.clone()]).sub(&nf(vec![ti.clone(), tj.clone()])).unwrap();
                let rhs = nf(vec![t.clone(), tj.clone()]).sub(&nf(vec![t.clone(), ti.clone()])).unwrap();
                assert_eq!(lhs, rhs);
                // (A((ij)) − 1)Θ_j(Θ_i + 1) = 0, for both orders of (i, j)
                let expanded = nf(vec![t.clone(), tj.clone(), ti.clone()])
                    .add(&nf(vec![t.clone(), tj.clone()]))
                    .unwrap()
                    .sub(&nf(vec![tj.clone(), ti.clone()]))
                    .unwrap()
                    .sub(&nf(vec![tj.clone()]))
                    .unwrap();
                assert!(expanded.is_zero(), "{expanded}");
            }
        }
    }
}

#[test]
fn only_lower_first_erasure_is_used() {
    for alpha in 1..=3 {
        let mut n = Normalizer::new(alpha);
        let basis = basis_enumerate(alpha, &Limits::default()).unwrap();
        for x in &basis {
            for y in &basis {
                n.multiply_monomials(x, y);
            }
        }
        assert_eq!(n.stats().erasures_higher_first, 0);
        if alpha >= 2 {
            assert!(n.stats().erasures_lower_first > 0);
        }
    }
}

#[test]
fn star_is_an_involutive_anti_automorphism() {
    for alpha in 1..=3 {
        let t = table(alpha);
        let mut n = Normalizer::new(alpha);
        let stars: Vec<OElement> = (0..t.dim())
            .map(|p| star_o(&t.basis_element(p), &mut n).unwrap())
            .collect();
        for p in 0..t.dim() {
            assert_eq!(star_o(&stars[p], &mut n).unwrap(), t.basis_element(p));
            for q in 0..t.dim() {
                let lhs = star_o(&t.product(p, q), &mut n).unwrap();
                let rhs = t.multiply(&stars[q], &stars[p]).unwrap();
                assert_eq!(lhs, rhs, "({p}, {q})");
            }
        }
    }
}

#[test]
fn theta_degree_is_submultiplicative() {
    for alpha in 1..=3 {
        let t = table(alpha);
        for p in 0..t.dim() {
            for q in 0..t.dim() {
                let bound = t.basis()[p].theta_degree() + t.basis()[q].theta_degree();
                assert!(t.product(p, q).theta_degree().unwrap_or(0) <= bound);
            }
        }
    }
}

/// `deg_Θ((A(h) − A(1)) Θ_I) < |I|` whenever `h` only moves points of `I`.
#[test]
fn permutations_supported_on_the_theta_set_drop_degree() {
    for alpha in 1..=3 {
        let mut n = Normalizer::new(alpha);
        for mask in 1u32..(1 << alpha) {
            let set: Vec<usize> = (0..alpha).filter(|i| mask >> i & 1 == 1).collect();
            let thetas: Vec<Token> = set.iter().map(|&i| Token::Theta(i)).collect();
            let base = n.normalize(&thetas).unwrap();
            for h in Permutation::all(alpha) {
                if (0..alpha).any(|x| h.apply(x) != x && !set.contains(&x)) {
                    continue;
                }
                let mut word = vec![Token::A(h.clone())];
                word.extend(thetas.iter().cloned());
                let diff = n.normalize(&word).unwrap().sub(&base).unwrap();
                assert!(diff.theta_degree().is_none_or(|d| d < set.len()), "h = {h}, I = {set:?}");
            }
        }
    }
}

#[test]
fn basis_words_are_fixed_points() {
    for alpha in 1..=4 {
        let mut n = Normalizer::new(alpha);
        for m in basis_enumerate(alpha, &Limits::default()).unwrap() {
            assert_eq!(n.normalize(&m.tokens()).unwrap(), OElement::monomial(m.clone()));
            assert_eq!(&Monomial::from_rook(m.rook()), &m);
        }
    }
}

#[test]
fn documented_rewrites() {
    assert_eq!(norm(1, "T1 T1").to_string(), "ν·A(1) + (ν - 1)·Θ1");
    assert_eq!(norm(2, "T1 A(12)").to_string(), "A((12))Θ2");
    assert_eq!(norm(2, "A(12) A(12)"), OElement::unit(2));
    assert_eq!(i_hom(&norm(1, "T1 T1")), NuPoly::nu_pow(2));
    let t = table(1);
    let at3 = t.evaluate_at(&Q::from_integer(3.into()));
    assert_eq!(at3.coefficient(1, 1, 0), Q::from_integer(3.into()));
    assert_eq!(at3.coefficient(1, 1, 1), Q::from_integer(2.into()));
    let at1 = t.evaluate_at(&Q::from_integer(1.into()));
    assert_eq!(at1.coefficient(1, 1, 1), Q::from_integer(0.into()));
    assert!(parse_word("T3", 2).is_err());
    assert!(parse_word("A(13)", 2).is_err());
    assert!(parse_word("B1", 2).is_err());
}

#[test]
fn export_round_trips() {
    for alpha in 1..=2 {
        let t = table(alpha);
        let json = t.to_json();
        assert_eq!(StructureTable::from_json(&json).unwrap(), t);
        assert!(t.to_csv().starts_with("p,q,r,poly\n"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strategies_are_confluent_on_random_words(w in word_strategy(3, 7)) {
        let left = Normalizer::with_strategy(3, Order::LeftmostFirst).normalize(&w).unwrap();
        let right = Normalizer::with_strategy(3, Order::RightmostFirst).normalize(&w).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_form_is_multiplicative_on_words(a in word_strategy(3, 4), b in word_strategy(3, 4)) {
        let mut n = Normalizer::new(3);
        let whole: Vec<Token> = a.iter().chain(&b).cloned().collect();
        let x = n.normalize(&a).unwrap();
        let y = n.normalize(&b).unwrap();
        prop_assert_eq!(n.normalize(&whole).unwrap(), n.multiply(&x, &y).unwrap());
        prop_assert_eq!(i_hom(&n.normalize(&whole).unwrap()), &i_hom(&x) * &i_hom(&y));
    }
}
