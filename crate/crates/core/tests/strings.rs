use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use strcat_core::homology::isomorphic;
use strcat_core::strings::{add_cohook, add_hook, enumerate_strings, is_string, string_module, Side};
use strcat_core::{Family, FamilyAlgebra, Fp, StringWord};

fn fam(family: Family, m: usize) -> FamilyAlgebra {
    FamilyAlgebra::new(family, m, Fp::default()).unwrap()
}

fn families() -> Vec<(Family, usize)> {
    Family::ALL
        .iter()
        .flat_map(|&f| (f.min_m()..=5).map(move |m| (f, m)))
        .collect()
}

#[test]
fn string_counts() {
    for (family, m) in families() {
        let fa = fam(family, m);
        let n = enumerate_strings(&fa.algebra, family.length_cap(m)).unwrap().len();
        let want = if family == Family::Ae1 { m } else { 4 * m };
        assert_eq!(n, want, "{family} m={m}");
    }
}

/// Every string is linked to a simple module by a chain of hook and cohook
/// additions, followed in either direction.
#[test]
fn hooks_and_cohooks_connect_every_string() {
    for (family, m) in families() {
        let fa = fam(family, m);
        let alg = &fa.algebra;
        let q = alg.quiver();
        let all: BTreeSet<StringWord> = enumerate_strings(alg, family.length_cap(m))
            .unwrap()
            .into_iter()
            .map(|w| w.canonical(q))
            .collect();
        let mut edges = Vec::new();
        for w in &all {
            for side in [Side::Left, Side::Right] {
                for next in [add_hook(alg, w, side), add_cohook(alg, w, side)] {
                    if let Ok(n) = next {
                        assert!(is_string(alg, &n));
                        let n = n.canonical(q);
                        if all.contains(&n) {
                            edges.push((w.clone(), n));
                        }
                    }
                }
            }
        }
        let mut seen: BTreeSet<StringWord> = (0..q.vertex_count())
            .map(StringWord::empty)
            .filter(|w| all.contains(w))
            .collect();
        assert!(!seen.is_empty());
        loop {
            let before = seen.len();
            for (a, b) in &edges {
                if seen.contains(a) || seen.contains(b) {
                    seen.insert(a.clone());
                    seen.insert(b.clone());
                }
            }
            if seen.len() == before {
                break;
            }
        }
        let missing: Vec<String> = all.difference(&seen).map(|w| w.display(q)).collect();
        assert!(missing.is_empty(), "{family} m={m}: {missing:?}");
    }
}

#[test]
fn parse_round_trip() {
    let fa = fam(Family::Ae3, 3);
    let q = fa.algebra.quiver();
    for text in ["b,r~,r~,a", "e1", "r~", "a"] {
        let w = StringWord::parse(q, text).unwrap();
        assert_eq!(StringWord::parse(q, &w.display(q)).unwrap(), w);
    }
    assert!(StringWord::parse(q, "a,a").is_err());
}

#[test]
fn relations_are_not_strings() {
    let fa = fam(Family::Ae3, 3);
    let q = fa.algebra.quiver();
    for text in ["r,a", "b,r", "r,r,r", "a,b", "a,a~"] {
        let w = StringWord::parse(q, text);
        assert!(w.map_or(true, |w| !is_string(&fa.algebra, &w)), "{text}");
    }
}

fn pick(family: u8, m: usize, k: usize) -> (Arc<strcat_core::Algebra>, StringWord) {
    let family = Family::ALL[family as usize];
    let m = m.max(family.min_m());
    let fa = fam(family, m);
    let strings = enumerate_strings(&fa.algebra, family.length_cap(m)).unwrap();
    let w = strings[k % strings.len()].clone();
    (fa.algebra, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_is_length_plus_one(family in 0u8..3, m in 1usize..=5, k in 0usize..64) {
        let (alg, w) = pick(family, m, k);
        prop_assert_eq!(string_module(&alg, &w).unwrap().total_dim(), w.len() + 1);
    }

    #[test]
    fn inverse_gives_isomorphic_module(family in 0u8..3, m in 1usize..=5, k in 0usize..64) {
        let (alg, w) = pick(family, m, k);
        let a = string_module(&alg, &w).unwrap();
        let b = string_module(&alg, &w.inverse(alg.quiver())).unwrap();
        prop_assert!(isomorphic(&a, &b));
    }
}
