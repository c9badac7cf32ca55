//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

pub const P: u64 = 32003;

/// A relation `Σ c·path` on a quiver given by arrow endpoints.
pub type Relation = Vec<(u64, Vec<usize>)>;

pub struct PathQuiver {
    pub vertices: usize,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
}

fn inv(a: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    r
}

/// Paths of length at most `max_len`, as `(start, arrows)`.
pub fn all_paths(q: &PathQuiver, max_len: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out: Vec<(usize, Vec<usize>)> = (0..q.vertices).map(|v| (v, vec![])).collect();
    let mut layer = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, p) in &layer {
            let end = p.last().map_or(*s, |&a| q.arrows[a].1);
            for (a, &(src, _)) in q.arrows.iter().enumerate() {
                if src == end {
                    let mut w = p.clone();
                    w.push(a);
                    next.push((*s, w));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Dimension of `kQ / (I + J^{L+1})` by linear algebra on all paths of
/// length at most `L`, where `I` is generated by `relations`.
pub fn truncated_dim(q: &PathQuiver, relations: &[Relation], max_len: usize) -> usize {
    let paths = all_paths(q, max_len);
    let index: HashMap<Vec<usize>, usize> = paths
        .iter()
        .enumerate()
        .filter(|(_, (_, p))| !p.is_empty())
        .map(|(i, (_, p))| (p.clone(), i))
        .collect();
    let n = paths.len();
    let to_vec = |rel: &Relation| -> Vec<u64> {
        let mut v = vec![0u64; n];
        for (c, p) in rel {
            if let Some(&i) = index.get(p) {
                v[i] = (v[i] + c) % P;
            }
        }
        v
    };
    // Echelon rows keyed by pivot column.
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |rows: &Vec<(usize, Vec<u64>)>, mut v: Vec<u64>| -> Option<(usize, Vec<u64>)> {
        for (p, r) in rows {
            if v[*p] != 0 {
                let c = v[*p];
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
        let p = v.iter().position(|&x| x != 0)?;
        let s = inv(v[p]);
        for x in v.iter_mut() {
            *x = *x * s % P;
        }
        Some((p, v))
    };
    let mut queue: Vec<Relation> = relations.to_vec();
    while let Some(rel) = queue.pop() {
        let Some((p, v)) = reduce(&rows, to_vec(&rel)) else {
            continue;
        };
        for (_, r) in rows.iter_mut() {
            if r[p] != 0 {
                let c = r[p];
                for (x, y) in r.iter_mut().zip(&v) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
        rows.push((p, v.clone()));
        let as_rel: Relation = v
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (*c, paths[i].1.clone()))
            .collect();
        for a in 0..q.arrows.len() {
            let left: Relation = as_rel
                .iter()
                .filter(|(_, w)| q.arrows[a].1 == q.arrows[w[0]].0)
                .map(|(c, w)| (*c, [vec![a], w.clone()].concat()))
                .collect();
            let right: Relation = as_rel
                .iter()
                .filter(|(_, w)| q.arrows[*w.last().unwrap()].1 == q.arrows[a].0)
                .map(|(c, w)| (*c, [w.clone(), vec![a]].concat()))
                .collect();
            for r in [left, right] {
                if !r.is_empty() {
                    queue.push(r);
                }
            }
        }
    }
    n - rows.len()
}

/// The defining data of the three families as plain relations.
pub fn family_presentation(family: u8, m: usize) -> (PathQuiver, Vec<Relation>) {
    match family {
        1 => (
            PathQuiver {
                vertices: 1,
                arrows: vec![(0, 0)],
            },
            vec![vec![(1, vec![0; m + 1])]],
        ),
        2 => {
            let alt = |first: usize| (0..2 * m + 1).map(|k| (first + k) % 2).collect::<Vec<_>>();
            (
                PathQuiver {
                    vertices: 2,
                    arrows: vec![(0, 1), (1, 0)],
                },
                vec![vec![(1, alt(0))], vec![(1, alt(1))]],
            )
        }
        _ => (
            PathQuiver {
                vertices: 2,
                arrows: vec![(0, 0), (0, 1), (1, 0)],
            },
            vec![
                vec![(1, vec![0, 1])],
                vec![(1, vec![2, 0])],
                vec![(1, vec![1, 2]), (P - 1, vec![0; m])],
            ],
        ),
    }
}

/// Path-enumeration dimension of a family algebra, checked stable one
/// length further.
pub fn oracle_dim(family: u8, m: usize) -> usize {
    let (q, rels) = family_presentation(family, m);
    let l = match family {
        1 => m + 2,
        2 => 2 * m + 2,
        _ => m + 2,
    };
    let d = truncated_dim(&q, &rels, l);
    assert_eq!(d, truncated_dim(&q, &rels, l + 1), "oracle not stable");
    d
}
