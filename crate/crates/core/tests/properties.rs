use proptest::prelude::*;

use webfold::oracle::{enumerate, hook_length_count, Filter};
use webfold::tableau::{
    evacuate, fold, is_domino, is_rotationally_symmetric, promote, promote_inverse, rectify, rectify_with,
    rotate180_complement, unfold,
};
use webfold::web::{PlanarWeb, WebJson};
use webfold::web2::{reflect2, rotate2, tableau_of_web2, web2_of_tableau};
use webfold::web3::{tableau_of_web, web_of_tableau};
use webfold::{Shape, Tableau};

/// A standard tableau of the `rows × cols` rectangle, steered by `choices`.
fn steered(rows: usize, cols: usize, choices: &[u8]) -> Tableau {
    let mut counts = vec![0usize; rows];
    let mut word = String::new();
    for i in 0..rows * cols {
        let allowed: Vec<usize> =
            (0..rows).filter(|&r| counts[r] < cols && (r == 0 || counts[r - 1] > counts[r])).collect();
        let r = allowed[choices[i] as usize % allowed.len()];
        counts[r] += 1;
        word.push(char::from(b'1' + r as u8));
    }
    Tableau::from_word(&word).unwrap()
}

fn rectangle(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Tableau> {
    (1..=max_rows, 1..=max_cols, prop::collection::vec(any::<u8>(), max_rows * max_cols))
        .prop_map(|(r, c, ch)| steered(r, c, &ch))
}

fn three_row(max_cols: usize) -> impl Strategy<Value = Tableau> {
    (1..=max_cols, prop::collection::vec(any::<u8>(), 3 * max_cols)).prop_map(|(c, ch)| steered(3, c, &ch))
}

proptest! {
    #[test]
    fn evacuation_is_an_involution(t in rectangle(4, 6)) {
        let e = evacuate(&t).unwrap();
        prop_assert_eq!(evacuate(&e).unwrap(), t.clone());
        prop_assert_eq!(e, rotate180_complement(&t).unwrap());
    }

    #[test]
    fn promotion_has_order_n(t in rectangle(4, 5)) {
        let mut p = t.clone();
        for _ in 0..t.size() {
            p = promote(&p).unwrap();
        }
        prop_assert_eq!(&p, &t);
        prop_assert_eq!(promote_inverse(&promote(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn fold_and_unfold_are_inverse(t in rectangle(4, 6)) {
        prop_assert_eq!(unfold(&fold(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(fold(&unfold(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(is_rotationally_symmetric(&t).unwrap(), is_domino(&fold(&t).unwrap()));
    }

    #[test]
    fn rectification_ignores_slide_order(t in rectangle(4, 5), k in 0usize..20, pick in any::<u64>()) {
        let k = 1 + k % t.size();
        let skew = t.above(k.min(t.size() - 1).max(1)).unwrap();
        let mut state = pick;
        let random = rectify_with(&skew, |corners| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % corners.len()
        });
        prop_assert_eq!(random, rectify(&skew));
    }

    #[test]
    fn two_webs_follow_the_operators(t in rectangle(2, 10).prop_filter("two rows", |t| t.shape().num_rows() == 2)) {
        let m = web2_of_tableau(&t).unwrap();
        prop_assert_eq!(tableau_of_web2(&m).unwrap(), t.clone());
        prop_assert_eq!(rotate2(&m), web2_of_tableau(&promote(&t).unwrap()).unwrap());
        prop_assert_eq!(reflect2(&m), web2_of_tableau(&evacuate(&t).unwrap()).unwrap());
    }

    #[test]
    fn three_webs_round_trip_and_follow_the_operators(t in three_row(7)) {
        let w = web_of_tableau(&t).unwrap();
        prop_assert!(w.is_3web());
        prop_assert_eq!(tableau_of_web(&w).unwrap(), t.clone());
        prop_assert_eq!(w.rotate(), web_of_tableau(&promote(&t).unwrap()).unwrap());
        prop_assert_eq!(w.reflect(), web_of_tableau(&evacuate(&t).unwrap()).unwrap());
        prop_assert_eq!(tableau_of_web(&w.rotate()).unwrap(), promote(&t).unwrap());
    }

    #[test]
    fn canonical_form_ignores_internal_names(t in three_row(5), seed in any::<u64>()) {
        let w = web_of_tableau(&t).unwrap();
        let mut j = w.to_json();
        let n = j.n;
        let total = n + j.internal;
        // a permutation of the internal ids
        let mut perm: Vec<usize> = (n + 1..=total).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let rename = |v: usize| if v <= n { v } else { perm[v - n - 1] };
        // edge order is part of the dart numbering, so shuffle it too
        j.edges.reverse();
        for e in &mut j.edges {
            e.from = rename(e.from);
            e.to = rename(e.to);
        }
        let m = j.edges.len();
        let redart = |d: usize| {
            let (e, side) = (d / 2, d % 2);
            2 * (m - 1 - e) + side
        };
        j.rotation = j
            .rotation
            .iter()
            .map(|(k, ds)| (rename(k.parse().unwrap()).to_string(), ds.iter().map(|&d| redart(d)).collect()))
            .collect();
        j.coords = None;
        j.paths = None;
        let back = PlanarWeb::from_json(&serde_json::from_value::<WebJson>(serde_json::to_value(&j).unwrap()).unwrap());
        prop_assert_eq!(back.unwrap().canonical(), w.canonical());
    }

    #[test]
    fn enumeration_matches_hook_lengths(parts in prop::collection::vec(1usize..5, 1..4)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let shape = Shape::straight(parts.clone()).unwrap();
        let count = enumerate(&shape, Filter::All).unwrap().count() as u128;
        prop_assert_eq!(Some(count), hook_length_count(&parts));
    }
}
