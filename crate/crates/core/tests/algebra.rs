mod common;

use proptest::prelude::*;
use strcat_core::quiver::{ae1, ae2, ae3};
use strcat_core::{Algebra, Fp};

fn build(family: u8, m: usize) -> Algebra {
    let f = Fp::default();
    match family {
        1 => ae1(m, f),
        2 => ae2(m, f),
        _ => ae3(m, f),
    }
    .unwrap()
}

#[test]
fn dimensions_match_path_enumeration() {
    for m in 1..=8 {
        assert_eq!(build(1, m).dim(), common::oracle_dim(1, m));
        assert_eq!(build(2, m).dim(), common::oracle_dim(2, m));
        if m >= 2 {
            assert_eq!(build(3, m).dim(), common::oracle_dim(3, m));
        }
    }
}

#[test]
fn closed_form_dimensions() {
    for m in 2..=8 {
        assert_eq!(build(1, m).dim(), m + 1);
        assert_eq!(build(2, m).dim(), 4 * m + 2);
        assert_eq!(build(3, m).dim(), m + 5);
    }
}

#[test]
fn ae3_relation_holds() {
    let alg = build(3, 4);
    let ab = alg.path_element(&["a", "b"]).unwrap();
    let r4 = alg.path_element(&["r", "r", "r", "r"]).unwrap();
    assert_eq!(ab, r4);
    assert!(alg.path_element(&["r", "a"]).unwrap().is_zero());
    assert!(alg.path_element(&["b", "r"]).unwrap().is_zero());
}

/// Reduces `word` by applying completed rules at positions chosen by
/// `choices`, returning `None` for zero or the coefficient and final word.
fn reduce_randomly(alg: &Algebra, word: Vec<usize>, choices: &[usize]) -> Option<(u64, Vec<usize>)> {
    let p = alg.field().modulus();
    let mut coeff = 1u64;
    let mut w = word;
    let mut step = 0;
    loop {
        let mut matches = Vec::new();
        for (ri, r) in alg.rules().iter().enumerate() {
            let lhs = r.lhs.arrows();
            if lhs.len() <= w.len() {
                for at in 0..=w.len() - lhs.len() {
                    if &w[at..at + lhs.len()] == lhs {
                        matches.push((ri, at));
                    }
                }
            }
        }
        if matches.is_empty() {
            return Some((coeff, w));
        }
        let (ri, at) = matches[choices[step % choices.len()] % matches.len()];
        step += 1;
        let rule = &alg.rules()[ri];
        let (c, rhs) = rule.rhs.as_ref()?;
        let n = rule.lhs.len();
        w.splice(at..at + n, rhs.arrows().iter().copied());
        coeff = coeff * c % p;
    }
}

fn random_path(alg: &Algebra, start: usize, steps: &[usize]) -> Vec<usize> {
    let q = alg.quiver();
    let mut v = start % q.vertex_count();
    let mut out = Vec::new();
    for s in steps {
        let outgoing: Vec<usize> = (0..q.arrows().len()).filter(|&a| q.arrow(a).source == v).collect();
        let a = outgoing[s % outgoing.len()];
        out.push(a);
        v = q.arrow(a).target;
    }
    out
}

proptest! {
    #[test]
    fn reduction_is_confluent(
        family in 1u8..=3,
        m in 2usize..=5,
        start in 0usize..2,
        steps in prop::collection::vec(0usize..3, 1..14),
        choices in prop::collection::vec(0usize..16, 1..8),
    ) {
        let alg = build(family, m);
        let word = random_path(&alg, start, &steps);
        let expected = alg.normal_form(&word);
        match reduce_randomly(&alg, word, &choices) {
            None => prop_assert!(expected.is_none()),
            Some((c, w)) => {
                let q = alg.quiver();
                let path = strcat_core::Path::new(q, w).unwrap();
                let i = alg.basis_index(&path);
                prop_assert!(i.is_some());
                prop_assert_eq!(expected, Some((i.unwrap(), c)));
            }
        }
    }
}
