mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{all_words, dense_rank, perm, sign as word_sign};
use operad_hopf::cosimplicial::check_cosimplicial;
use operad_hopf::endo::{adams, convolve, lie_bracket, random_endo, unit, GradedEndo};
use operad_hopf::free::{FreeOperad, Presentation, TreeTerm};
use operad_hopf::hopf::{antipode, coproduct, product, ProductKind};
use operad_hopf::linalg::{in_span, row_reduce};
use operad_hopf::operad::{
    check_operad_axioms, partial_compose, total_compose, Ass, Multiplicative, Operad,
};
use operad_hopf::perm::standardize;
use operad_hopf::{LinComb, Perm, Rational};

type Endo = GradedEndo<Perm>;

const KINDS: [ProductKind; 3] = [
    ProductKind::Odot,
    ProductKind::ShuffleUnsigned,
    ProductKind::ShuffleSigned,
];

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn small_int() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn random_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Perm::new(w).unwrap())
}

fn basis_vector(n: usize, entries: &[i64]) -> LinComb<usize> {
    LinComb::from_terms((0..n).map(|j| (j, Rational::from(entries[j]))))
}

fn to_big(r: &[i64]) -> Vec<BigRational> {
    r.iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

fn free_assoc() -> FreeOperad {
    Presentation::assoc().free_operad()
}

fn tree(n: usize) -> impl Strategy<Value = TreeTerm> {
    let basis = free_assoc().basis(n).unwrap();
    (0..basis.len()).prop_map(move |i| basis[i].clone())
}

fn nu_to_mu() -> BTreeMap<String, LinComb<Perm>> {
    BTreeMap::from([("nu".to_string(), LinComb::basis(Perm::identity(2)))])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn rank_ignores_row_order(
        rows in prop::collection::vec(prop::collection::vec(small_int(), 5), 1..7),
        order in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let lcs: Vec<LinComb<usize>> = rows.iter().map(|r| basis_vector(5, r)).collect();
        let permuted: Vec<LinComb<usize>> = order.iter().filter(|&&i| i < lcs.len()).map(|&i| lcs[i].clone()).collect();
        let (r1, _) = row_reduce(&lcs);
        let (r2, _) = row_reduce(&permuted);
        prop_assert_eq!(r1, r2);
        let dense: Vec<Vec<BigRational>> = rows.iter().map(|r| to_big(r)).collect();
        prop_assert_eq!(r1, dense_rank(&dense));
    }

    #[test]
    fn in_span_matches_dense_elimination(
        rows in prop::collection::vec(prop::collection::vec(small_int(), 6), 6),
        coeffs in prop::collection::vec(small_int(), 6),
        noise in prop::collection::vec(-1i64..=1, 6),
        use_noise in any::<bool>(),
    ) {
        // half the time v is built inside the span
        let mut v = vec![0i64; 6];
        for (r, c) in rows.iter().zip(&coeffs) {
            for j in 0..6 {
                v[j] += c * r[j];
            }
        }
        if use_noise {
            for j in 0..6 {
                v[j] += noise[j];
            }
        }
        let lcs: Vec<LinComb<usize>> = rows.iter().map(|r| basis_vector(6, r)).collect();
        let (_, reduced) = row_reduce(&lcs);
        let got = in_span(&basis_vector(6, &v), &reduced);
        let dense: Vec<Vec<BigRational>> = rows.iter().map(|r| to_big(r)).collect();
        let mut extended = dense.clone();
        extended.push(to_big(&v));
        prop_assert_eq!(got, dense_rank(&dense) == dense_rank(&extended));
    }

    #[test]
    fn standardize_is_idempotent(word in prop::collection::vec(1usize..=9, 0..10)) {
        let s = standardize(&word);
        prop_assert_eq!(s.len(), word.len());
        prop_assert_eq!(standardize(s.word()), s.clone());
        prop_assert_eq!(s.word(), &common::st(&word)[..]);
    }

    #[test]
    fn sign_is_multiplicative(n in 0usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || {
            let mut w: Vec<usize> = (1..=n).collect();
            rand::seq::SliceRandom::shuffle(&mut w[..], &mut rng);
            Perm::new(w).unwrap()
        };
        let (a, b) = (pick(), pick());
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
        prop_assert_eq!(a.sign(), word_sign(a.word()));
    }

    #[test]
    fn total_composition_is_order_independent(
        x in (1usize..=3).prop_flat_map(random_perm),
        ys in prop::collection::vec((0usize..=3).prop_flat_map(random_perm), 3),
    ) {
        let n = x.len();
        let ys: Vec<LinComb<Perm>> = ys[..n].iter().cloned().map(LinComb::basis).collect();
        let xv = LinComb::basis(x);
        let total = total_compose(&Ass, &xv, &ys).unwrap();
        // left to right, tracking where input i has moved
        let mut acc = xv;
        let mut offset = 0;
        for y in &ys {
            let a = Ass.arity(y.keys().next().unwrap());
            acc = partial_compose(&Ass, &acc, offset + 1, y).unwrap();
            offset += a;
        }
        prop_assert_eq!(total, acc);
    }

    #[test]
    fn graft_is_associative(
        (t, s, r) in (1usize..=2, 1usize..=2, 1usize..=2).prop_flat_map(|(a, b, c)| (tree(a), tree(b), tree(c))),
        i in 1usize..=2, j in 1usize..=2,
    ) {
        let (n, m) = (t.arity(), s.arity());
        prop_assume!(i <= n && j <= m);
        // sequential
        let left = t.graft(i, &s).unwrap().graft(i + j - 1, &r).unwrap();
        let right = t.graft(i, &s.graft(j, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // parallel, for k > i
        for k in i + 1..=n {
            let a = t.graft(k, &r).unwrap().graft(i, &s).unwrap();
            let b = t.graft(i, &s).unwrap().graft(k + m - 1, &r).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn graft_commutes_with_relabelling(
        (t, s) in (2usize..=3, 1usize..=2).prop_flat_map(|(a, b)| (tree(a), tree(b))),
        sigma_seed in any::<u64>(),
        i in 1usize..=3,
    ) {
        // (t·σ)∘ᵢs = (t∘_{σ(i)}s)·σ' where σ' moves the inserted block with σ
        let n = t.arity();
        prop_assume!(i <= n);
        let mut rng = ChaCha8Rng::seed_from_u64(sigma_seed);
        let mut w: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(&mut w[..], &mut rng);
        let sigma = Perm::new(w).unwrap();
        let lhs = t.act(&sigma).unwrap().graft(i, &s).unwrap();
        let block = sigma.block_compose(i, &Perm::identity(s.arity())).unwrap();
        let rhs = t.graft(sigma.at(i), &s).unwrap().act(&block).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        (t, s) in (1usize..=3, 1usize..=2).prop_flat_map(|(a, b)| (tree(a), tree(b))),
        i in 1usize..=3,
    ) {
        prop_assume!(i <= t.arity());
        let free = free_assoc();
        let assign = nu_to_mu();
        let grafted = free.evaluate(&t.graft(i, &s).unwrap(), &assign, &Ass).unwrap();
        let separately = partial_compose(
            &Ass,
            &free.evaluate(&t, &assign, &Ass).unwrap(),
            i,
            &free.evaluate(&s, &assign, &Ass).unwrap(),
        ).unwrap();
        prop_assert_eq!(grafted, separately);
    }

    #[test]
    fn convolution_is_associative(seed in any::<u64>(), k in 0usize..3) {
        let m = Multiplicative::ass();
        let kind = KINDS[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_endo(&m, 3, &mut rng).unwrap();
        let g = random_endo(&m, 3, &mut rng).unwrap();
        let h = random_endo(&m, 3, &mut rng).unwrap();
        let c = |u: &Endo, v: &Endo| convolve(&m, kind, u, v).unwrap();
        prop_assert_eq!(c(&c(&f, &g), &h), c(&f, &c(&g, &h)));
        let e = unit(&m, 3).unwrap();
        prop_assert_eq!(c(&e, &f), f.clone());
        prop_assert_eq!(c(&f, &e), f.clone());
        let br = |u: &Endo, v: &Endo| lie_bracket(&m, kind, u, v).unwrap();
        let jacobi = br(&br(&f, &g), &h).add(&br(&br(&g, &h), &f)).unwrap().add(&br(&br(&h, &f), &g)).unwrap();
        prop_assert!(jacobi.is_zero());
        prop_assert_eq!(br(&f, &g), br(&g, &f).scale(&Rational::from(-1)));
    }

    #[test]
    fn unit_is_two_sided_at_bound_4(seed in any::<u64>()) {
        let m = Multiplicative::ass();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_endo(&m, 4, &mut rng).unwrap();
        let e = unit(&m, 4).unwrap();
        for kind in KINDS {
            prop_assert_eq!(convolve(&m, kind, &e, &f).unwrap(), f.clone());
            prop_assert_eq!(convolve(&m, kind, &f, &e).unwrap(), f.clone());
        }
    }
}

#[test]
fn block_composition_equals_substitution() {
    for n in 1..=4 {
        for l in 0..=4 {
            for t in all_words(n) {
                for s in all_words(l) {
                    for i in 1..=n {
                        let (t, s) = (perm(&t), perm(&s));
                        assert_eq!(
                            t.block_compose(i, &s).unwrap(),
                            t.substitute(i, &s).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn right_action_law() {
    for n in 0..=4 {
        for x in Perm::all(n) {
            for s in Perm::all(n) {
                for t in Perm::all(n) {
                    let lhs = x.right_act(&s).unwrap().right_act(&t).unwrap();
                    assert_eq!(lhs, x.right_act(&s.compose(&t).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn ass_operad_axioms() {
    assert!(check_operad_axioms(&Ass, 3).unwrap().passed());
}

#[test]
fn cosimplicial_identities() {
    assert!(check_cosimplicial(&Multiplicative::ass(), 4)
        .unwrap()
        .passed());
}

fn basis_triples(total: usize) -> Vec<(Perm, Perm, Perm)> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            let c = total - a - b;
            for x in Perm::all(a) {
                for y in Perm::all(b) {
                    for z in Perm::all(c) {
                        out.push((x.clone(), y.clone(), z));
                    }
                }
            }
        }
    }
    out
}

fn assert_associative_with_unit(kind: ProductKind, max_total: usize) {
    let m = Multiplicative::ass();
    let mul = |x: &LinComb<Perm>, y: &LinComb<Perm>| product(&m, kind, x, y).unwrap();
    let e = LinComb::basis(Perm::empty());
    for total in 0..=max_total {
        for (x, y, z) in basis_triples(total) {
            let (x, y, z) = (LinComb::basis(x), LinComb::basis(y), LinComb::basis(z));
            assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)), "{kind}");
            assert_eq!(mul(&e, &x), x);
            assert_eq!(mul(&x, &e), x);
        }
    }
}

#[test]
fn odot_is_associative_and_unital() {
    assert_associative_with_unit(ProductKind::Odot, 6);
}

#[test]
fn shuffle_products_are_associative_and_unital() {
    assert_associative_with_unit(ProductKind::ShuffleUnsigned, 5);
    assert_associative_with_unit(ProductKind::ShuffleSigned, 5);
}

#[test]
fn left_antipode_identity_for_every_kind() {
    let m = Multiplicative::ass();
    for kind in KINDS {
        for n in 0..=3 {
            for x in Perm::all(n) {
                let d = coproduct(&m, &LinComb::basis(x)).unwrap();
                let mut acc = LinComb::zero();
                for (k, c) in d.iter() {
                    let a = antipode(&m, kind, &LinComb::basis(k.left.clone())).unwrap();
                    acc.add_scaled(
                        c,
                        &product(&m, kind, &a, &LinComb::basis(k.right.clone())).unwrap(),
                    );
                }
                let want = if n == 0 {
                    LinComb::basis(Perm::empty())
                } else {
                    LinComb::zero()
                };
                assert_eq!(acc, want, "{kind} arity {n}");
            }
        }
    }
}

#[test]
fn adams_operations_form_a_monoid() {
    let m = Multiplicative::ass();
    for kind in KINDS {
        let phi: Vec<_> = (0..=4).map(|k| adams(&m, kind, k, 3).unwrap()).collect();
        for r in 0..=4 {
            for s in 0..=4 - r {
                assert_eq!(
                    convolve(&m, kind, &phi[r], &phi[s]).unwrap(),
                    phi[r + s],
                    "{kind} {r} {s}"
                );
            }
        }
    }
}
