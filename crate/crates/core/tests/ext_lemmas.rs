use igr_core::{ext_groups, BundleExpr, CohomologyResult, Context, GLWeight, RepWeight, SpWeight};

const X: Context = Context::IGR_3_8;

/// The poset interval `[(0,0), (2,1)]`.
const SMALL: [[i64; 3]; 5] = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [2, 0, 0], [2, 1, 0]];

fn sig(w: [i64; 3], t: i64) -> BundleExpr {
    BundleExpr::sigma(X, &w, t).unwrap()
}

fn ext(a: &BundleExpr, b: &BundleExpr) -> CohomologyResult {
    ext_groups(a, b).unwrap()
}

fn weights_at(h: &CohomologyResult, deg: usize) -> Vec<(Vec<i64>, u64)> {
    h.entries()
        .filter(|(d, _, _)| *d == deg)
        .map(|(_, w, m)| (w.entries().to_vec(), m))
        .collect()
}

fn only_trivial_at(h: &CohomologyResult, deg: usize) -> bool {
    h.entries().count() == 1 && weights_at(h, deg) == vec![(vec![0, 0, 0, 0], 1)]
}

fn leq(a: [i64; 3], b: [i64; 3]) -> bool {
    GLWeight::from(a).leq(&GLWeight::from(b)).unwrap()
}

#[test]
fn small_weights_hom_table() {
    for a in SMALL {
        for b in SMALL {
            for k in 0..=5 {
                let h = ext(&sig(a, k), &sig(b, 0));
                assert_eq!(!h.is_zero(), k == 0 && leq(a, b), "{a:?}({k}) -> {b:?}");
                if h.is_zero() {
                    continue;
                }
                assert_eq!(h.degrees(), vec![0]);
                let mut expected: Vec<[i64; 4]> = match (a, b) {
                    _ if a == b => vec![[0, 0, 0, 0]],
                    ([0, 0, 0], [x, y, z]) => vec![[x, y, z, 0]],
                    ([1, 0, 0], [2, 1, 0]) => vec![[2, 0, 0, 0], [1, 1, 0, 0]],
                    _ => vec![[1, 0, 0, 0]],
                };
                expected.sort();
                let mut got: Vec<[i64; 4]> = weights_at(&h, 0)
                    .into_iter()
                    .map(|(w, m)| {
                        assert_eq!(m, 1);
                        w.try_into().unwrap()
                    })
                    .collect();
                got.sort();
                assert_eq!(got, expected, "{a:?} -> {b:?}");
            }
        }
    }
    let hom = |a, b| ext(&sig(a, 0), &sig(b, 0)).total_dimension_at_degree(0);
    assert_eq!(hom([1, 0, 0], [2, 1, 0]), 63);
    assert_eq!(hom([0, 0, 0], [2, 1, 0]), 160);
    assert_eq!(hom([0, 0, 0], [1, 1, 0]), 27);
    assert_eq!(hom([2, 0, 0], [2, 1, 0]), 8);
}

#[test]
fn into_sigma31_from_twisted_small_weights() {
    for a in SMALL {
        for k in 1..=6 {
            let h = ext(&sig(a, k), &sig([3, 1, 0], 0));
            if a == [2, 1, 0] && k == 5 {
                assert!(only_trivial_at(&h, 9));
            } else {
                assert!(h.is_zero(), "{a:?}({k})");
            }
        }
    }
}

#[test]
fn out_of_twisted_sigma31() {
    for a in SMALL {
        for k in 0..=5 {
            let h = ext(&sig([3, 1, 0], k), &sig(a, 0));
            if a == [2, 1, 0] && k == 1 {
                assert!(only_trivial_at(&h, 3));
            } else {
                assert!(h.is_zero(), "(3,1)({k}) -> {a:?}");
            }
        }
    }
}

#[test]
fn hom_into_sigma31() {
    let expected: [([i64; 3], u64, Vec<Vec<i64>>); 5] = [
        ([0, 0, 0], 594, vec![vec![3, 1, 0, 0]]),
        ([1, 0, 0], 280, vec![vec![2, 1, 0, 0], vec![3, 0, 0, 0]]),
        ([1, 1, 0], 36, vec![vec![2, 0, 0, 0]]),
        ([2, 0, 0], 63, vec![vec![1, 1, 0, 0], vec![2, 0, 0, 0]]),
        ([2, 1, 0], 8, vec![vec![1, 0, 0, 0]]),
    ];
    for (a, dim, weights) in expected {
        let h = ext(&sig(a, 0), &sig([3, 1, 0], 0));
        assert_eq!(h.degrees(), vec![0], "{a:?}");
        assert_eq!(h.total_dimension_at_degree(0), dim);
        let got: Vec<Vec<i64>> = weights_at(&h, 0).into_iter().map(|(w, _)| w).collect();
        assert_eq!(got, weights);
    }
}

#[test]
fn sigma31_is_exceptional_and_twist_three_vanishes() {
    assert!(only_trivial_at(&ext(&sig([3, 1, 0], 0), &sig([3, 1, 0], 0)), 0));
    assert!(ext(&sig([3, 1, 0], 3), &sig([3, 1, 0], 0)).is_zero());
}

#[test]
fn left_orthogonals_of_sigma32_twisted() {
    let target = sig([3, 2, 0], -3);
    assert!(only_trivial_at(&ext(&sig([2, 0, 0], 0), &target), 4));
    for (w, t) in [([1, 0, 0], 0), ([0, 0, 0], 0), ([0, 0, 0], -1), ([1, 1, 0], -2)] {
        assert!(ext(&sig(w, t), &target).is_zero(), "{w:?}({t})");
    }
}

#[test]
fn right_orthogonals_of_the_block_without_s2() {
    for src in [[0, 0, 0], [1, 0, 0], [1, 1, 0], [2, 1, 0]] {
        for (w, t) in [([3, 3, 0], -4), ([2, 2, 0], -3), ([3, 2, 0], -3)] {
            assert!(ext(&sig(src, 0), &sig(w, t)).is_zero(), "{src:?} -> {w:?}({t})");
        }
    }
}

#[test]
fn s_twisted_bundle_is_right_orthogonal() {
    let target = BundleExpr::parse(X, "Sigma(2,2,0)(-3)*S^1").unwrap();
    assert!(ext(&sig([2, 1, 0], -1), &target).is_zero());
}

#[test]
fn cohomology_entries_are_sp_weights() {
    let h = ext(&sig([0, 0, 0], 0), &sig([2, 1, 0], 0));
    let (_, w, _) = h.entries().next().unwrap();
    assert_eq!(w, &RepWeight::Sp(SpWeight::new(vec![2, 1, 0, 0]).unwrap()));
}
