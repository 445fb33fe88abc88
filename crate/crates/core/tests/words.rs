mod common;

use std::collections::BTreeSet;

use graphprod::fixtures::{random_element, random_graph, random_word, rng};
use graphprod::group::GroupTable;
use graphprod::word::{
    enumerate_normal_forms, is_geodesic_sequence, normal_form, support_query, Word,
};
use graphprod::{DefiningGraph, NormalForm, VertexId};
use proptest::prelude::*;

use common::{raw, Rewriter};

fn s3() -> GroupTable {
    // permutations of three points, composed as functions
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect();
    GroupTable::from_table(&rows).unwrap()
}

#[test]
fn tables_are_associative_and_lagrange_holds() {
    let mut tables: Vec<GroupTable> = (2..=12).map(|n| GroupTable::cyclic(n).unwrap()).collect();
    tables.push(s3());
    for t in &tables {
        let n = t.order() as u32;
        for a in 0..n {
            assert_eq!(t.order() % t.element_order(a), 0);
            assert_eq!(t.mul(a, t.inv(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn nonabelian_vertex_group() {
    let t = std::sync::Arc::new(s3());
    let g = DefiningGraph::new(vec![t.clone(), t], &[]).unwrap();
    let x = NormalForm::parse("0:1 0:4", &g).unwrap();
    let y = NormalForm::parse("0:4 0:1", &g).unwrap();
    assert_eq!(x.len(), 1);
    assert_ne!(x, y);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip(seed in any::<u64>(), len in 0usize..25) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 7, 5);
        let x = normal_form(&random_word(&mut r, &g, len), &g).unwrap();
        prop_assert!(x.mul(&x.inverse(&g), &g).is_identity());
        prop_assert!(x.is_canonical(&g));
    }

    #[test]
    fn product_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 6, 4);
        let (a, b, c) = (
            random_element(&mut r, &g, 8),
            random_element(&mut r, &g, 8),
            random_element(&mut r, &g, 8),
        );
        prop_assert_eq!(a.mul(&b, &g).mul(&c, &g), a.mul(&b.mul(&c, &g), &g));
    }

    #[test]
    fn confluence_and_shuffle_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 6, 4);
        let x = random_element(&mut r, &g, 9);
        let set = enumerate_normal_forms(&x, &g, 100_000);
        prop_assert!(!set.overflow);
        let query = support_query(&x);
        for w in &set.words {
            let y = normal_form(&Word(w.clone()), &g).unwrap();
            prop_assert_eq!(&y, &x);
            prop_assert!(is_geodesic_sequence(w, &g));
            let support: BTreeSet<VertexId> = w.iter().map(|s| s.vertex).collect();
            prop_assert_eq!((support, w.len()), query.clone());
        }
    }

    #[test]
    fn subwords_are_geodesic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 6, 4);
        let x = random_element(&mut r, &g, 12);
        for i in 0..=x.len() {
            for j in i..=x.len() {
                let part = x.subword(i, j);
                prop_assert!(is_geodesic_sequence(part, &g));
                prop_assert_eq!(normal_form(&Word(part.to_vec()), &g).unwrap().len(), j - i);
            }
        }
    }

    #[test]
    fn agrees_with_rewriting_oracle(seed in any::<u64>(), len in 0usize..7) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 4, 3);
        let w = random_word(&mut r, &g, len);
        let x = normal_form(&w, &g).unwrap();
        let rw = Rewriter::new(&g);
        let raw_w: Vec<(u32, u32)> = w.0.iter().map(|s| (s.vertex.0, s.elem)).collect();
        // the oracle's least reachable word has the same length and sits among x's shuffles
        let key = rw.key(&raw_w);
        prop_assert_eq!(key.len(), x.len());
        prop_assert!(rw.shuffles(&raw(&x)).contains(&key));
    }
}
