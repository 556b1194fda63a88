use num_bigint::BigInt;
use proptest::prelude::*;

use quiverchar::fock::{normalize_wedge, Letter};
use quiverchar::poly::QPoly;
use quiverchar::symfunc::{hall_littlewood_p, kostka_foulkes, schur, Partition, SymPoly};
use quiverchar::wavefunc::{apply_glnz, slater};

fn partition(max_len: usize, max_part: i64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn word(len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0usize..2, -2i64..3), len)
        .prop_map(|v| v.into_iter().map(|(color, mode)| Letter { color, mode }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hall_littlewood_specializes(lam in partition(3, 3)) {
        let n = 3;
        let p = hall_littlewood_p(&lam, n).unwrap();
        prop_assert_eq!(p.eval_q(0), schur(&lam, n));
        let mono = SymPoly::monomial_symmetric(
            &lam.padded(n).iter().map(|&x| x as i32).collect::<Vec<_>>(),
            QPoly::one(),
        );
        prop_assert_eq!(p.eval_q(1), mono);
    }

    #[test]
    fn kostka_foulkes_positive_and_triangular(lam in partition(4, 3), mu in partition(4, 3)) {
        prop_assume!(lam.size() == mu.size());
        let k = kostka_foulkes(&lam, &mu).unwrap();
        prop_assert!(k.is_nonnegative());
        if !lam.dominates(&mu) {
            prop_assert!(k.is_zero());
        }
        if lam == mu {
            prop_assert_eq!(k, QPoly::one());
        }
    }

    #[test]
    fn schur_products_are_schur_positive(a in partition(2, 2), b in partition(2, 2)) {
        let n = 3;
        let prod = &schur(&a, n) * &schur(&b, n);
        let expansion = prod.schur_expand().unwrap();
        prop_assert!(expansion.iter().all(|(_, c)| c.is_nonnegative()));
        let total: BigInt = expansion.iter().map(|(l, c)| c.eval_one() * schur(l, n).dimension()).sum();
        prop_assert_eq!(total, schur(&a, n).dimension() * schur(&b, n).dimension());
    }

    #[test]
    fn wedge_sign_flips_under_swap(w in word(4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let mut swapped = w.clone();
        swapped.swap(i, j);
        match (normalize_wedge(&w), normalize_wedge(&swapped)) {
            (None, None) => prop_assert!(w.iter().enumerate().any(|(x, l)| w[x + 1..].contains(l))),
            (Some((s1, w1)), Some((s2, w2))) => {
                prop_assert_eq!(w1, w2);
                prop_assert_eq!(s1, -s2);
            }
            _ => prop_assert!(false, "swap changed vanishing"),
        }
    }

    #[test]
    fn mode_raising_adds_degree(
        modes in prop::collection::vec(0i64..3, 2),
        colors in prop::collection::vec(1usize..3, 2),
        a in 1usize..3,
        m in 1u32..3,
    ) {
        let phi = slater(&modes, &colors, 2, 2).unwrap();
        prop_assume!(!phi.is_zero());
        let raised = apply_glnz(a, colors[0], m, &phi);
        let base: i32 = modes.iter().sum::<i64>() as i32;
        for (e, _) in raised.poly().terms() {
            prop_assert_eq!(e[..2].iter().sum::<i32>(), base + m as i32);
        }
    }
}
