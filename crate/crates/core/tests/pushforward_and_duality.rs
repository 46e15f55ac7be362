use igr_core::bbw::ext_terms;
use igr_core::{
    cohomology_expr, pushforward_ifl, serre_duality_check, BundleExpr, BundleTerm, Context,
    GLWeight, PushforwardResult,
};
use proptest::prelude::*;

/// The three-case closed formula for pushforwards from the flag variety,
/// with the boundary cases vanishing.
fn closed_form(j: i64, k: i64, i: i64) -> PushforwardResult {
    let term = |a: i64, b: i64, t: i64, shift| PushforwardResult::Term {
        weight: GLWeight::new(vec![a + t, b + t, t]),
        shift,
    };
    if k + 2 > 1 {
        // Σ^{j+k,k}: shift so the last entry is the twist
        PushforwardResult::Term {
            weight: GLWeight::new(vec![j + k + i, k + i, i]),
            shift: 0,
        }
    } else if j + k + 3 > 1 && 1 > k + 2 {
        term(j - 1, -k - 2, i + k + 1, 1)
    } else if 1 > j + k + 3 {
        term(-k - 3, j, i + k + 1, 2)
    } else {
        PushforwardResult::Zero
    }
}

#[test]
fn flag_pushforward_matches_closed_formula() {
    let mut zeros = 0;
    let mut count = 0;
    for i in 3..=6 {
        for j in 0..=3 {
            for k in -6..=1 {
                let got = pushforward_ifl(j, k, i).unwrap();
                assert_eq!(got, closed_form(j, k, i), "(i,j,k)=({i},{j},{k})");
                zeros += (got == PushforwardResult::Zero) as usize;
                count += 1;
            }
        }
    }
    assert_eq!(count, 128);
    assert!(zeros > 0);
}

fn named_bundles() -> Vec<BundleExpr> {
    let x = Context::IGR_3_8;
    let mut out = vec![];
    for t in 0..6 {
        for w in [[0, 0, 0], [1, 0, 0], [2, 0, 0], [1, 1, 0], [2, 1, 0]] {
            out.push(BundleExpr::sigma(x, &w, t).unwrap());
        }
    }
    for (w, t) in [
        ([2, 1, 0], -1),
        ([3, 1, 0], 0),
        ([3, 1, 0], -2),
        ([3, 2, 0], -3),
        ([3, 3, 0], -4),
        ([2, 2, 0], -3),
        ([4, 2, 0], -3),
        ([0, 0, -1], 0),
    ] {
        out.push(BundleExpr::sigma(x, &w, t).unwrap());
    }
    for s in ["Sigma(0,0,0)(-1)*S^1", "Sigma(2,0,0)(-1)*S^1", "Sigma(2,2,0)(-3)*S^1"] {
        out.push(BundleExpr::parse(x, s).unwrap());
    }
    out
}

#[test]
fn serre_duality_on_named_bundles() {
    let bundles = named_bundles();
    assert!(bundles.len() >= 40);
    for a in &bundles {
        for b in &bundles {
            assert!(serre_duality_check(a, b).unwrap(), "{a} / {b}");
        }
    }
}

/// Classical Serre duality on `Gr(2,4)` and `Gr(1,3)` as an independent anchor.
#[test]
fn serre_duality_on_classical_grassmannians() {
    for (k, n) in [(1, 3), (2, 4), (2, 5)] {
        let ctx = Context::classical(k, n).unwrap();
        let mut weights = vec![];
        for a in -3i64..=3 {
            for b in -3..=a {
                weights.push(if k == 1 { vec![a] } else { vec![a, b] });
            }
        }
        weights.dedup();
        for a in &weights {
            for b in &weights {
                let e = BundleExpr::sigma(ctx, a, 0).unwrap();
                let f = BundleExpr::sigma(ctx, b, 0).unwrap();
                assert!(serre_duality_check(&e, &f).unwrap());
            }
        }
    }
}

#[test]
fn cohomology_of_canonical_bundle_is_top_degree() {
    for ctx in [Context::IGR_3_8, Context::IGR_2_8] {
        let w = vec![0; ctx.k()];
        let e = BundleExpr::sigma(ctx, &w, ctx.canonical_twist()).unwrap();
        let h = cohomology_expr(&e).unwrap();
        assert_eq!(h.degrees(), vec![ctx.variety_dim()]);
        assert_eq!(h.euler_characteristic().abs(), 1);
    }
}

fn dominant3() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 3).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn serre_duality_random_pairs(a in dominant3(), b in dominant3(), sa in 0u32..2, sb in 0u32..2) {
        let x = Context::IGR_3_8;
        let e = BundleExpr::term(x, BundleTerm::new(a, sa)).unwrap();
        let f = BundleExpr::term(x, BundleTerm::new(b, sb)).unwrap();
        prop_assert!(serre_duality_check(&e, &f).unwrap());
    }

    #[test]
    fn euler_pairing_is_twist_invariant(a in dominant3(), b in dominant3(), t in -4i64..5) {
        let x = Context::IGR_3_8;
        let e = BundleTerm::new(a, 0);
        let f = BundleTerm::new(b, 0);
        let chi = ext_terms(x, &e, &f).unwrap().euler_characteristic();
        let chi_t = ext_terms(x, &e.twist(t), &f.twist(t)).unwrap().euler_characteristic();
        prop_assert_eq!(chi, chi_t);
    }
}
