//! Canonical homomorphisms between string modules: `M[S] ↠ M[C] ↪ M[T]`
//! for a common substring `C` that is a factor string of `S` and a
//! substring of `T`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homology::ModuleMap;
use crate::linalg::Matrix;
use crate::quiver::Algebra;
use crate::strings::{is_string, walk_module, StringWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalHom {
    pub source: StringWord,
    pub target: StringWord,
    /// The common substring, read in the orientation of `source`.
    pub factor: StringWord,
    /// Walk positions `a..=b` of `source` spanned by the factor.
    pub source_range: (usize, usize),
    /// Walk positions `c..=d` of `target` spanned by the factor.
    pub target_range: (usize, usize),
    /// Whether the factor runs through `target` in the opposite direction.
    pub flipped: bool,
}

impl CanonicalHom {
    /// Image position in `target` of each position in `source_range`.
    pub fn position_pairs(&self) -> Vec<(usize, usize)> {
        let (a, b) = self.source_range;
        let (c, d) = self.target_range;
        (0..=b - a)
            .map(|k| (a + k, if self.flipped { d - k } else { c + k }))
            .collect()
    }
}

/// `[a, b]` is a factor string of `s`: the letters just outside point away.
fn is_factor(s: &StringWord, a: usize, b: usize) -> bool {
    let ls = s.letters();
    (a == 0 || ls[a - 1].inverse) && (b == ls.len() || !ls[b].inverse)
}

/// `[c, d]` is a substring of `t`: the letters just outside point inwards.
fn is_sub(t: &StringWord, c: usize, d: usize) -> bool {
    let ls = t.letters();
    (c == 0 || !ls[c - 1].inverse) && (d == ls.len() || ls[d].inverse)
}

/// All canonical homomorphisms `M[S] → M[T]`, one per distinct map.
pub fn canonical_homs(algebra: &Algebra, s: &StringWord, t: &StringWord) -> Vec<CanonicalHom> {
    let q = algebra.quiver();
    let sp = s.positions(q);
    let tp = t.positions(q);
    let t_inv = t.inverse(q);
    let n = s.len();
    let len = t.len();
    let mut out = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            if !is_factor(s, a, b) {
                continue;
            }
            let piece = &s.letters()[a..b];
            let width = b - a;
            for c in 0..=len.saturating_sub(width) {
                let d = c + width;
                if d > len {
                    continue;
                }
                if is_sub(t, c, d) && t.letters()[c..d] == *piece && tp[c] == sp[a] {
                    out.push(CanonicalHom {
                        source: s.clone(),
                        target: t.clone(),
                        factor: s.slice(q, a, b),
                        source_range: (a, b),
                        target_range: (c, d),
                        flipped: false,
                    });
                }
                // Matching against the reversed target; a length-zero factor
                // was already found above.
                if width == 0 {
                    continue;
                }
                let (ci, di) = (len - d, len - c);
                if is_sub(&t_inv, ci, di) && t_inv.letters()[ci..di] == *piece {
                    out.push(CanonicalHom {
                        source: s.clone(),
                        target: t.clone(),
                        factor: s.slice(q, a, b),
                        source_range: (a, b),
                        target_range: (c, d),
                        flipped: true,
                    });
                }
            }
        }
    }
    out.sort_by_key(|h| h.position_pairs());
    out.dedup_by_key(|h| h.position_pairs());
    out
}

/// The canonical homomorphism as an explicit module map between the string
/// modules.
pub fn realize_canonical(algebra: &Arc<Algebra>, ch: &CanonicalHom) -> Result<ModuleMap> {
    for w in [&ch.source, &ch.target] {
        if !is_string(algebra, w) {
            return Err(Error::NotAString(w.display(algebra.quiver())));
        }
    }
    realize_positions(algebra, &ch.source, &ch.target, &ch.position_pairs())
}

/// The map between walk modules sending the basis vector at each source
/// position to the one at the paired target position.
pub fn realize_positions(
    algebra: &Arc<Algebra>,
    source: &StringWord,
    target: &StringWord,
    pairs: &[(usize, usize)],
) -> Result<ModuleMap> {
    let q = algebra.quiver();
    let ms = walk_module(algebra, source)?;
    let mt = walk_module(algebra, target)?;
    let local = |w: &StringWord| {
        let mut seen = vec![0usize; q.vertex_count()];
        w.positions(q)
            .into_iter()
            .map(|v| {
                seen[v] += 1;
                (v, seen[v] - 1)
            })
            .collect::<Vec<_>>()
    };
    let ls = local(source);
    let lt = local(target);
    let mut maps: Vec<Matrix> = ms
        .dims()
        .iter()
        .zip(mt.dims())
        .map(|(&r, &c)| Matrix::zeros(r, c))
        .collect();
    for &(i, j) in pairs {
        let (v, x) = ls[i];
        let (w, y) = lt[j];
        if v != w {
            return Err(Error::NotIntertwining);
        }
        maps[v][(x, y)] = 1;
    }
    ModuleMap::new(ms, mt, maps)
}
