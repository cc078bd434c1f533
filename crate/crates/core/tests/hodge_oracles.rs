use mzeta_core::hodge::{
    brute_force_sym_invariants, kunneth_product, pg, pg_sym_formula, psi_h, sym_power,
};
use mzeta_core::integer::binomial;
use mzeta_core::monoid_ring::word_mul;
use mzeta_core::{Alphabet, HodgeVector, IntPolynomial, MonoidWord};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Third oracle: `h^{k,0}` of the symmetric power counts multisets of size
/// `n` drawn from a graded basis (with `h_j` vectors in degree `j`) whose
/// total degree is `k` and in which no odd-degree vector repeats.
fn multiset_count(h: &[u64], n: usize) -> Vec<u64> {
    let basis: Vec<usize> = h
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| std::iter::repeat_n(j, c as usize))
        .collect();
    let d = h.len() - 1;
    let mut out = vec![0u64; d * n + 1];
    // choose a nondecreasing index sequence into `basis`
    fn go(basis: &[usize], start: usize, left: usize, deg: usize, last: Option<usize>, out: &mut [u64]) {
        if left == 0 {
            out[deg] += 1;
            return;
        }
        for i in start..basis.len() {
            if last == Some(i) && basis[i] % 2 == 1 {
                continue;
            }
            go(basis, i, left - 1, deg + basis[i], Some(i), out);
        }
    }
    go(&basis, 0, n, 0, None, &mut out);
    out
}

fn to_u64s(v: &HodgeVector) -> Vec<u64> {
    v.h().iter().map(|x| u64::try_from(x).unwrap()).collect()
}

#[test]
fn binomial_lemma_for_surfaces() {
    for r in 0..=5u64 {
        for q in 0..=3u64 {
            for n in 0..=8usize {
                let s = sym_power(&HodgeVector::surface(q, r), n);
                assert_eq!(s.h()[2 * n], pg_sym_formula(r, n as u64), "q={q} r={r} n={n}");
                if r >= 1 {
                    assert_eq!(s.h()[2 * n], binomial(r + n as u64 - 1, r - 1));
                }
            }
        }
    }
}

#[test]
fn three_oracles_agree_on_small_inputs() {
    for d in 0..=2usize {
        let mut shapes = vec![vec![1u64]];
        for _ in 0..d {
            shapes = shapes
                .into_iter()
                .flat_map(|s| (0..=3).map(move |x| [s.clone(), vec![x]].concat()))
                .collect();
        }
        for h in shapes {
            let v = HodgeVector::from_u64s(&h).unwrap();
            for n in 0..=4 {
                let fast = sym_power(&v, n);
                assert_eq!(fast, brute_force_sym_invariants(&v, n).unwrap(), "{v} n={n}");
                assert_eq!(to_u64s(&fast), multiset_count(&h, n), "{v} n={n}");
            }
        }
    }
}

#[test]
fn curve_symmetric_powers_stabilize() {
    for g in 0..=5u64 {
        let limit = psi_h(&HodgeVector::curve(1)).pow(g);
        for n in 0..=12usize {
            let w = psi_h(&sym_power(&HodgeVector::curve(g), n));
            if n as u64 >= g {
                assert_eq!(w, limit, "g={g} n={n}");
            }
            let expect: Vec<u64> = (0..=n as u64).map(|k| if k <= g { binomial(g, k).try_into().unwrap() } else { 0 }).collect();
            assert_eq!(to_u64s(&sym_power(&HodgeVector::curve(g), n)), expect);
        }
    }
}

fn hodge_vector() -> impl Strategy<Value = HodgeVector> {
    prop::collection::vec(0u64..=4, 0..=3).prop_map(|tail| {
        HodgeVector::from_u64s(&[vec![1], tail].concat()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn psi_is_multiplicative(a in hodge_vector(), b in hodge_vector()) {
        let lhs = psi_h(&kunneth_product(&a, &b));
        let rhs = word_mul(&psi_h(&a), &psi_h(&b), &Alphabet::MonoidC).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projective_factors_are_invisible(a in hodge_vector(), k in 0usize..=6) {
        let prod = kunneth_product(&a, &HodgeVector::projective(k));
        prop_assert_eq!(psi_h(&prod), psi_h(&a));
        prop_assert_eq!(pg(&prod) == BigUint::from(0u32), k > 0 || pg(&a) == BigUint::from(0u32));
    }

    #[test]
    fn psi_word_multiplies_back_to_hodge_polynomial(a in hodge_vector()) {
        let w: MonoidWord = psi_h(&a);
        let p: IntPolynomial = w.to_polynomial().unwrap();
        prop_assert_eq!(p, a.polynomial());
    }
}
