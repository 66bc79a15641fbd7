mod common;

use common::{oracle_cactus_count, oracle_unicyclic_count};
use signix_core::{canonical_form, enumerate_cacti, enumerate_trees, enumerate_unicyclic, is_cactus, FamilySpec, SimpleGraph};

fn contains(class: &[SimpleGraph], g: &SimpleGraph) -> bool {
    let c = canonical_form(g).unwrap();
    class.iter().any(|h| canonical_form(h).unwrap() == c)
}

#[test]
fn unicyclic_counts_match_oracle() {
    for (k, want) in [(3, 1), (4, 2), (5, 5), (6, 13)] {
        assert_eq!(enumerate_unicyclic(k).unwrap().len(), want, "k = {k}");
        assert_eq!(oracle_unicyclic_count(k), want, "oracle k = {k}");
    }
}

#[test]
fn cactus_counts_match_oracle() {
    for (k, t) in [(3, 0), (4, 0), (5, 0), (3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 2), (9, 3)] {
        assert_eq!(enumerate_cacti(k, t).unwrap().len(), oracle_cactus_count(k, t), "k = {k}, t = {t}");
    }
}

#[test]
fn unicyclic_members_are_well_formed() {
    for k in 3..=8 {
        let class = enumerate_unicyclic(k).unwrap();
        for g in &class {
            assert_eq!(g.order(), k);
            assert_eq!(g.size(), k);
            assert!(g.is_connected());
            assert_eq!(g.cyclomatic_number(), 1);
        }
        let codes: Vec<_> = class.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]), "sorted and distinct at k = {k}");
        assert!(contains(&class, &FamilySpec::U1 { k }.build().unwrap()));
        if k >= 4 {
            assert!(contains(&class, &FamilySpec::Q1 { k }.build().unwrap()));
        }
        for s in 1..k.saturating_sub(4) {
            let qst = FamilySpec::Qst { s, t: k - 4 - s }.build().unwrap();
            assert!(contains(&class, &qst));
        }
    }
}

#[test]
fn nine_vertex_unicyclic_class() {
    let class = enumerate_unicyclic(9).unwrap();
    assert_eq!(class.len(), 240);
    assert!(enumerate_unicyclic(10).is_err());
    assert!(enumerate_unicyclic(2).is_err());
}

#[test]
fn cacti_are_well_formed() {
    for (k, t) in [(6, 2), (7, 2), (9, 3), (8, 1)] {
        let class = enumerate_cacti(k, t).unwrap();
        for g in &class {
            assert_eq!(g.order(), k - t + 1);
            assert_eq!(g.size(), k);
            assert!(g.is_connected());
            assert_eq!(g.cyclomatic_number(), t);
            assert!(is_cactus(g));
        }
        assert!(contains(&class, &FamilySpec::Gt { k, t }.build().unwrap()));
    }
}

#[test]
fn small_classes() {
    let trees = enumerate_cacti(3, 0).unwrap();
    assert_eq!(trees.len(), 2);
    assert_eq!(enumerate_trees(4).unwrap().len(), 2);
    let tri = enumerate_cacti(3, 1).unwrap();
    assert_eq!(tri.len(), 1);
    assert!(contains(&tri, &FamilySpec::Cycle { g: 3 }.build().unwrap()));
    let g0 = FamilySpec::Gt { k: 5, t: 0 }.build().unwrap();
    assert!(contains(&enumerate_cacti(5, 0).unwrap(), &FamilySpec::Star { k: 5 }.build().unwrap()));
    assert!(contains(&enumerate_cacti(5, 0).unwrap(), &g0));
}

#[test]
fn non_cacti_are_rejected() {
    // two triangles sharing an edge
    let diamond = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)]).unwrap();
    assert!(!is_cactus(&diamond));
    let bowtie = FamilySpec::Gt { k: 6, t: 2 }.build().unwrap();
    assert!(is_cactus(&bowtie));
    assert!(enumerate_cacti(10, 0).is_err());
}
