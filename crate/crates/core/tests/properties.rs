use gallai::construct::{
    construct_any, construct_balanced, construct_division, construct_k3, construct_k4, extend_by_star,
    max_balanced_colors, merge_classes, peel_reduction, replay_peel,
};
use gallai::format::{from_json, from_text, to_json, to_text};
use gallai::generator::random_gallai;
use gallai::oracle::{search_realizable, Budget};
use gallai::verify::{check_necessary, find_gallai_partition, is_gallai, prefix_bound, top_l_cover};
use gallai::{choose2, Color, Distribution, DivisionParams, VerdictTag};
use proptest::prelude::*;

/// A random `k`-part composition of `C(n, 2)`.
fn distribution(n: usize, k: usize) -> impl Strategy<Value = Distribution> {
    let total = choose2(n);
    proptest::collection::vec(0..total, k - 1).prop_map(move |mut cuts| {
        // distinct cut points in 1..total give positive parts
        cuts.iter_mut().for_each(|c| *c = *c % (total - 1) + 1);
        cuts.sort_unstable();
        cuts.dedup();
        let mut bounds = vec![0];
        bounds.extend(cuts);
        bounds.push(total);
        let sizes: Vec<usize> = bounds.windows(2).map(|w| w[1] - w[0]).collect();
        Distribution::canonicalize(sizes, n).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_colorings_obey_the_prefix_bound(n in 1usize..40, seed: u64, colors in 1usize..8) {
        let g = random_gallai(n, seed, colors);
        let c = &g.coloring;
        prop_assert!(is_gallai(c));
        for ell in 1..=c.k() {
            let cover = top_l_cover(c, ell, true).unwrap();
            prop_assert!(cover.total as i64 >= prefix_bound(n, ell));
        }
        prop_assert!(check_necessary(&c.distribution()).is_ok());
    }

    #[test]
    fn generated_colorings_decompose(n in 2usize..30, seed: u64, colors in 1usize..8) {
        let g = random_gallai(n, seed, colors);
        g.top.as_ref().unwrap().validate(&g.coloring).unwrap();
        let p = find_gallai_partition(&g.coloring).unwrap();
        prop_assert!(p.blocks.len() >= 2 && p.cross_colors.len() <= 2);
        p.validate(&g.coloring).unwrap();
    }

    #[test]
    fn generation_is_reproducible(n in 1usize..25, seed: u64, colors in 1usize..6) {
        prop_assert_eq!(random_gallai(n, seed, colors).coloring, random_gallai(n, seed, colors).coloring);
    }

    #[test]
    fn formats_roundtrip(n in 1usize..20, seed: u64, colors in 1usize..6) {
        let c = random_gallai(n, seed, colors).coloring;
        let text = to_text(&c);
        let back = from_text(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(to_text(&back), text);
        prop_assert_eq!(from_json(&to_json(&c)).unwrap(), c);
    }

    #[test]
    fn three_classes_always_realizable((n, d) in (5usize..40).prop_flat_map(|n| (Just(n), distribution(n, 3)))) {
        prop_assume!(d.k() == 3);
        let c = construct_k3(&d).unwrap();
        prop_assert!(is_gallai(&c));
        prop_assert_eq!(c.distribution(), d);
        let _ = n;
    }

    #[test]
    fn four_classes_always_realizable((n, d) in (8usize..40).prop_flat_map(|n| (Just(n), distribution(n, 4)))) {
        prop_assume!(d.k() == 4);
        let c = construct_k4(&d).unwrap();
        prop_assert!(is_gallai(&c));
        prop_assert_eq!(c.distribution(), d);
        let _ = n;
    }

    #[test]
    fn division_is_special(n in 2usize..60, p_off in 0usize..400, k_pick in 0usize..1000) {
        let total = choose2(n);
        let p = (n - 1 + p_off).min(total).max(1);
        let k = 1 + k_pick % (total / p);
        let q = total - k * p;
        let c = construct_division(&DivisionParams::new(n, k, p, q).unwrap()).unwrap();
        prop_assert!(is_gallai(&c) && c.is_special());
        let at_p = c.counts().iter().filter(|&&e| e == p).count();
        prop_assert!(at_p >= k);
        prop_assert_eq!(c.k(), k + usize::from(q > 0));
    }

    #[test]
    fn balanced_is_balanced(n in 2usize..120, k_pick in 0usize..1000) {
        let k = 1 + k_pick % max_balanced_colors(n);
        let c = construct_balanced(n, k).unwrap();
        prop_assert!(is_gallai(&c));
        prop_assert_eq!(c.k(), k);
        prop_assert!(c.distribution().is_balanced());
    }

    #[test]
    fn peel_replay_is_identity((n, d) in (6usize..30).prop_flat_map(|n| (Just(n), distribution(n, 3)))) {
        prop_assume!(d.k() == 3);
        let (base, log) = peel_reduction(&d, 5).unwrap();
        let c = construct_any(&base).unwrap();
        let full = replay_peel(&c, &log).unwrap();
        prop_assert!(is_gallai(&full));
        prop_assert_eq!(full.distribution(), d);
        let _ = n;
    }

    #[test]
    fn star_extension_stays_gallai(n in 2usize..20, seed: u64, pick: usize) {
        let c = random_gallai(n, seed, 5).coloring;
        let color = (pick % c.k()) as Color + 1;
        let e = extend_by_star(&c, color).unwrap();
        prop_assert!(is_gallai(&e));
        prop_assert_eq!(e.count_of(color), c.count_of(color) + n);
    }

    #[test]
    fn merging_keeps_gallai(n in 2usize..20, seed: u64) {
        let c = random_gallai(n, seed, 6).coloring;
        let grouping: Vec<Vec<Color>> = (1..=c.k() as Color)
            .collect::<Vec<_>>()
            .chunks(2)
            .map(|ch| ch.to_vec())
            .collect();
        let m = merge_classes(&c, &grouping).unwrap();
        prop_assert!(is_gallai(&m));
        prop_assert_eq!(m.k(), grouping.len());
    }
}

#[test]
fn construct_agrees_with_oracle_up_to_seven() {
    for n in 3..=7 {
        for k in 3..=5 {
            for sizes in gallai::partitions(choose2(n), k) {
                let d = Distribution::canonicalize(sizes, n).unwrap();
                let v = search_realizable(&d, Budget::default());
                assert_ne!(v.tag, VerdictTag::Unknown);
                if check_necessary(&d).is_err() {
                    assert_eq!(v.tag, VerdictTag::Infeasible, "{d}");
                }
                match construct_any(&d) {
                    Ok(c) => {
                        assert_eq!(v.tag, VerdictTag::Feasible, "{d}");
                        assert_eq!(c.distribution(), d);
                    }
                    Err(_) => assert_eq!(v.tag, VerdictTag::Infeasible, "{d}"),
                }
            }
        }
    }
}
