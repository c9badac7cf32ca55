//! Representations of bound quivers and the linear algebra of their
//! homomorphisms: Hom spaces, projective covers, syzygies, stable Hom, Ext¹
//! and isomorphism testing.
//!
//! A representation assigns to every arrow `a: i → j` a `dim_i × dim_j`
//! matrix acting on row vectors, so a path `a_1 ⋯ a_n` acts by the product
//! `M_{a_1} ⋯ M_{a_n}`. Module maps are per-vertex matrices `f_v` with
//! `M_a f_j = f_i N_a`.

pub mod canonical;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, Fp, Matrix};
use crate::quiver::Algebra;

pub use canonical::{canonical_homs, realize_canonical, realize_positions, CanonicalHom};

/// Default seed for randomized isomorphism tests.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_a1;
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.id() == other.algebra.id()
            && self.dims == other.dims
            && self.arrows == other.arrows
    }
}

impl Representation {
    /// Builds a representation, checking shapes and every completed rule.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || arrows.len() != q.arrows().len() {
            return Err(Error::InvalidParameter(
                "representation does not match the quiver".into(),
            ));
        }
        for (a, m) in q.arrows().iter().zip(&arrows) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::InvalidParameter(format!(
                    "matrix of arrow `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.source],
                    dims[a.target]
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            arrows,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let q = algebra.quiver();
        let dims = vec![0; q.vertex_count()];
        let arrows = q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    fn check_relations(&self) -> Result<()> {
        let alg = &self.algebra;
        let f = alg.field();
        for rule in alg.rules() {
            let lhs = self.path_matrix(rule.lhs.source(), rule.lhs.arrows());
            let ok = match &rule.rhs {
                None => lhs.is_zero(),
                Some((c, p)) => lhs == self.path_matrix(p.source(), p.arrows()).scale(*c, f),
            };
            if !ok {
                return Err(Error::RelationViolated(rule.lhs.display(alg.quiver())));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Fp {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    /// Action of the path starting at `start` with the given arrows.
    pub fn path_matrix(&self, start: usize, arrows: &[usize]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::identity(self.dims[start]);
        for &a in arrows {
            m = m.mul(&self.arrows[a], f);
        }
        m
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        self.algebra.id() == other.algebra.id()
    }

    pub fn direct_sum(algebra: Arc<Algebra>, parts: &[Representation]) -> Representation {
        let q = algebra.quiver();
        let dims: Vec<usize> = (0..q.vertex_count())
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Matrix::zeros(dims[arrow.source], dims[arrow.target]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let block = &p.arrows[a];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m[(r0 + r, c0 + c)] = block[(r, c)];
                        }
                    }
                    r0 += p.dims[arrow.source];
                    c0 += p.dims[arrow.target];
                }
                m
            })
            .collect();
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    /// Per-vertex bases (as rows) of the radical `Σ_a M_a`.
    pub fn radical_bases(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let mut m = Matrix::zeros(0, self.dims[v]);
                for (a, arrow) in q.arrows().iter().enumerate() {
                    if arrow.target == v {
                        m = m.stack(&self.arrows[a]);
                    }
                }
                m.row_space(f)
            })
            .collect()
    }

    /// Multiplicity of each simple in the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.rows())
            .collect()
    }

    /// Multiplicity of each simple in the socle.
    pub fn socle_dims(&self) -> Vec<usize> {
        let f = self.field();
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let mut m = Matrix::zeros(self.dims[v], 0);
                for (a, arrow) in q.arrows().iter().enumerate() {
                    if arrow.source == v {
                        let t = m.transpose().stack(&self.arrows[a].transpose());
                        m = t.transpose();
                    }
                }
                self.dims[v] - m.rank(f)
            })
            .collect()
    }

    /// Dimension vectors of the radical layers `rad^k M / rad^{k+1} M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let rad = cur.radical_bases();
            layers.push(cur.top_dims());
            let (sub, _) = subrepresentation(&cur, rad).expect("radical is a submodule");
            cur = sub;
        }
        layers
    }
}

/// The subrepresentation spanned per vertex by the rows of `bases`, with its
/// inclusion map. Fails if the spaces are not closed under the arrows.
pub fn subrepresentation(
    m: &Representation,
    bases: Vec<Matrix>,
) -> Result<(Representation, ModuleMap)> {
    let f = m.field();
    let q = m.algebra.quiver();
    let dims: Vec<usize> = bases.iter().map(Matrix::rows).collect();
    let mut arrows = Vec::with_capacity(q.arrows().len());
    for (a, arrow) in q.arrows().iter().enumerate() {
        let src = &bases[arrow.source];
        let tgt = &bases[arrow.target];
        let image = src.mul(&m.arrows[a], f);
        let induced = if src.rows() == 0 {
            Matrix::zeros(0, tgt.rows())
        } else if tgt.rows() == 0 {
            if !image.is_zero() {
                return Err(Error::NotIntertwining);
            }
            Matrix::zeros(src.rows(), 0)
        } else {
            tgt.solve_left(&image, f).ok_or(Error::NotIntertwining)?
        };
        arrows.push(induced);
    }
    let sub = Representation {
        algebra: m.algebra.clone(),
        dims,
        arrows,
    };
    let inclusion = ModuleMap {
        source: sub.clone(),
        target: m.clone(),
        maps: bases,
    };
    Ok((sub, inclusion))
}

/// The quotient `m / sub` where `sub` is given by per-vertex row bases,
/// with its projection map.
pub fn quotient_representation(
    m: &Representation,
    sub: &[Matrix],
) -> Result<(Representation, ModuleMap)> {
    let f = m.field();
    let q = m.algebra.quiver();
    // complement bases: extend sub basis by unit vectors
    let mut comps = Vec::new();
    let mut projections = Vec::new();
    for v in 0..q.vertex_count() {
        let d = m.dims[v];
        let mut span = sub[v].clone();
        let mut comp = Matrix::zeros(0, d);
        for k in 0..d {
            let mut e = Matrix::zeros(1, d);
            e[(0, k)] = 1;
            let trial = span.stack(&e);
            if trial.rank(f) > span.rows() {
                span = trial;
                comp = comp.stack(&e);
            }
        }
        // coordinates w.r.t. [sub; comp], keep comp part
        let full = sub[v].stack(&comp);
        let coords = if d == 0 {
            Matrix::zeros(0, 0)
        } else {
            full.solve_left(&Matrix::identity(d), f)
                .expect("basis of the full space")
        };
        let mut proj = Matrix::zeros(d, comp.rows());
        for r in 0..d {
            for c in 0..comp.rows() {
                proj[(r, c)] = coords[(r, sub[v].rows() + c)];
            }
        }
        comps.push(comp);
        projections.push(proj);
    }
    let mut arrows = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let induced = comps[arrow.source]
            .mul(&m.arrows[a], f)
            .mul(&projections[arrow.target], f);
        arrows.push(induced);
    }
    let quot = Representation::new(
        m.algebra.clone(),
        comps.iter().map(Matrix::rows).collect(),
        arrows,
    )?;
    let proj = ModuleMap::new(m.clone(), quot.clone(), projections)?;
    Ok((quot, proj))
}

#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        let m = ModuleMap {
            source,
            target,
            maps,
        };
        if !m.is_intertwining() {
            return Err(Error::NotIntertwining);
        }
        Ok(m)
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn is_intertwining(&self) -> bool {
        let f = self.source.field();
        let q = self.source.algebra.quiver();
        for (v, m) in self.maps.iter().enumerate() {
            if m.rows() != self.source.dims[v] || m.cols() != self.target.dims[v] {
                return false;
            }
        }
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            let left = self.source.arrows[a].mul(&self.maps[arrow.target], f);
            let right = self.maps[arrow.source].mul(&self.target.arrows[a], f);
            left == right
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        let f = self.source.field();
        ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            maps: self
                .maps
                .iter()
                .zip(&next.maps)
                .map(|(a, b)| a.mul(b, f))
                .collect(),
        }
    }

    pub fn power(&self, n: usize) -> ModuleMap {
        let mut out = ModuleMap::identity(&self.source);
        for _ in 0..n {
            out = out.then(self);
        }
        out
    }

    pub fn rank(&self) -> usize {
        let f = self.source.field();
        self.maps.iter().map(|m| m.rank(f)).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn flatten(&self) -> Vec<u64> {
        self.maps
            .iter()
            .flat_map(|m| m.as_slice().iter().copied())
            .collect()
    }

    pub fn linear_combination(
        source: &Representation,
        target: &Representation,
        basis: &[ModuleMap],
        coeffs: &[u64],
    ) -> ModuleMap {
        let f = source.field();
        let mut maps: Vec<Matrix> = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&r, &c)| Matrix::zeros(r, c))
            .collect();
        for (b, &c) in basis.iter().zip(coeffs) {
            for (acc, m) in maps.iter_mut().zip(&b.maps) {
                *acc = acc.add(&m.scale(c, f), f);
            }
        }
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }
}

/// Basis of `Hom(M, N)`, from the null space of the intertwining system.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let q = m.algebra.quiver();
    let mut offsets = Vec::with_capacity(q.vertex_count());
    let mut unknowns = 0;
    for v in 0..q.vertex_count() {
        offsets.push(unknowns);
        unknowns += m.dims[v] * n.dims[v];
    }
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * n.dims[v] + j;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let ma = &m.arrows[a];
        let na = &n.arrows[a];
        // (M_a f_t - f_s N_a)[i, j] = 0
        for i in 0..m.dims[s] {
            for j in 0..n.dims[t] {
                let mut row = vec![0u64; unknowns];
                for k in 0..m.dims[t] {
                    let c = ma[(i, k)];
                    if c != 0 {
                        let x = var(t, k, j);
                        row[x] = f.add(row[x], c);
                    }
                }
                for k in 0..n.dims[s] {
                    let c = na[(k, j)];
                    if c != 0 {
                        let x = var(s, i, k);
                        row[x] = f.sub(row[x], c);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(unknowns, &rows);
    let kernel = system.null_space(f);
    let basis = (0..kernel.rows())
        .map(|r| {
            let sol = kernel.row(r);
            let maps = (0..q.vertex_count())
                .map(|v| {
                    let mut mat = Matrix::zeros(m.dims[v], n.dims[v]);
                    for i in 0..m.dims[v] {
                        for j in 0..n.dims[v] {
                            mat[(i, j)] = sol[var(v, i, j)];
                        }
                    }
                    mat
                })
                .collect();
            ModuleMap {
                source: m.clone(),
                target: n.clone(),
                maps,
            }
        })
        .collect();
    Ok(basis)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Basis paths of `P(v) = e_v Λ`, grouped by their end vertex.
fn projective_layout(algebra: &Algebra, v: usize) -> Vec<Vec<usize>> {
    let q = algebra.quiver();
    let mut per_vertex = vec![Vec::new(); q.vertex_count()];
    for i in algebra.paths_from(v) {
        per_vertex[algebra.basis()[i].target(q)].push(i);
    }
    per_vertex
}

/// The indecomposable projective right module `P(v) = e_v Λ`.
pub fn indecomposable_projective(algebra: &Arc<Algebra>, v: usize) -> Representation {
    let q = algebra.quiver();
    let layout = projective_layout(algebra, v);
    let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
    let arrows = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let mut m = Matrix::zeros(dims[arrow.source], dims[arrow.target]);
            for (r, &i) in layout[arrow.source].iter().enumerate() {
                let mut w = algebra.basis()[i].arrows().to_vec();
                w.push(a);
                if let Some((k, c)) = algebra.normal_form(&w) {
                    let col = layout[arrow.target]
                        .iter()
                        .position(|&x| x == k)
                        .expect("product lands in P(v)");
                    m[(r, col)] = c;
                }
            }
            m
        })
        .collect();
    Representation::new(algebra.clone(), dims, arrows).expect("projective satisfies relations")
}

/// Minimal projective cover `P → M`.
pub fn projective_cover(m: &Representation) -> Result<(Representation, ModuleMap)> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let f = m.field();
    let alg = m.algebra.clone();
    let q = alg.quiver();
    let rad = m.radical_bases();
    let mut summands = Vec::new();
    // (vertex of the projective, top vector)
    let mut tops: Vec<(usize, Vec<u64>)> = Vec::new();
    for v in 0..q.vertex_count() {
        let d = m.dims[v];
        let mut span = rad[v].clone();
        for k in 0..d {
            let mut e = Matrix::zeros(1, d);
            e[(0, k)] = 1;
            let trial = span.stack(&e);
            if trial.rank(f) > span.rows() {
                span = trial;
                tops.push((v, e.row(0).to_vec()));
            }
        }
    }
    let mut blocks: Vec<Vec<Vec<u64>>> = vec![Vec::new(); q.vertex_count()];
    for (v, x) in &tops {
        let p = indecomposable_projective(&alg, *v);
        let layout = projective_layout(&alg, *v);
        for (w, paths) in layout.iter().enumerate() {
            for &i in paths {
                let path = &alg.basis()[i];
                let image = m.path_matrix(*v, path.arrows()).clone();
                let x_mat = Matrix::from_rows(x.len(), &[x.clone()]);
                blocks[w].push(x_mat.mul(&image, f).row(0).to_vec());
            }
        }
        summands.push(p);
    }
    let cover = Representation::direct_sum(alg.clone(), &summands);
    let maps = blocks
        .iter()
        .enumerate()
        .map(|(w, rows)| {
            if rows.is_empty() {
                Matrix::zeros(0, m.dims[w])
            } else {
                Matrix::from_rows(m.dims[w], rows)
            }
        })
        .collect();
    let epi = ModuleMap::new(cover.clone(), m.clone(), maps)?;
    debug_assert!(epi.is_surjective());
    Ok((cover, epi))
}

pub fn kernel_of(map: &ModuleMap) -> Result<(Representation, ModuleMap)> {
    let f = map.source.field();
    let bases = map.maps.iter().map(|m| m.left_null_space(f)).collect();
    subrepresentation(&map.source, bases)
}

pub fn image_of(map: &ModuleMap) -> Result<(Representation, ModuleMap)> {
    let f = map.source.field();
    let bases = map.maps.iter().map(|m| m.row_space(f)).collect();
    subrepresentation(&map.target, bases)
}

/// First syzygy: kernel of the projective cover. `Ω(0) = 0`.
pub fn syzygy(m: &Representation) -> Representation {
    if m.is_zero() {
        return m.clone();
    }
    let (_, epi) = projective_cover(m).expect("nonzero module has a cover");
    kernel_of(&epi).expect("kernel is a submodule").0
}

pub fn omega_power(m: &Representation, n: usize) -> Representation {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = syzygy(&cur);
    }
    cur
}

/// `dim Hom(M,N) − dim P(M,N)`, where `P(M,N)` consists of the maps
/// factoring through the projective cover of `N`.
pub fn stable_hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    let hom = hom_dim(m, n)?;
    if hom == 0 {
        return Ok(0);
    }
    let (cover, epi) = projective_cover(n)?;
    let through: Vec<Vec<u64>> = hom_basis(m, &cover)?
        .iter()
        .map(|g| g.then(&epi).flatten())
        .collect();
    let len = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    Ok(hom - rank_of_vectors(&through, len, m.field()))
}

/// `Ext¹(M, N) ≅ Hom_stable(Ω M, N)` over a self-injective algebra.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    stable_hom_dim(&syzygy(m), n)
}

/// Randomized isomorphism test. A `true` answer is certain; a `false`
/// answer for isomorphic modules has probability at most `(d/p)^trials`.
pub fn is_isomorphic(m: &Representation, n: &Representation, seed: u64, trials: usize) -> bool {
    if !m.same_algebra(n) || m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let Ok(basis) = hom_basis(m, n) else {
        return false;
    };
    if basis.is_empty() {
        return false;
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials.max(1) {
        let coeffs: Vec<u64> = (0..basis.len())
            .map(|_| rng.gen_range(0..f.modulus()))
            .collect();
        let g = ModuleMap::linear_combination(m, n, &basis, &coeffs);
        if g.maps.iter().all(|x| x.is_invertible(f)) {
            return true;
        }
    }
    false
}

/// [`is_isomorphic`] with the default seed and trial count.
pub fn isomorphic(m: &Representation, n: &Representation) -> bool {
    is_isomorphic(m, n, DEFAULT_SEED, DEFAULT_TRIALS)
}

/// A generic element of `Hom(M, N)` (random combination of a basis).
pub fn generic_hom(m: &Representation, n: &Representation, rng: &mut ChaCha8Rng) -> Result<ModuleMap> {
    let basis = hom_basis(m, n)?;
    let f = m.field();
    let coeffs: Vec<u64> = (0..basis.len())
        .map(|_| rng.gen_range(0..f.modulus()))
        .collect();
    Ok(ModuleMap::linear_combination(m, n, &basis, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{ae1, ae2, ae3};
    use crate::strings::{string_module, StringWord};

    fn alg1(m: usize) -> Arc<Algebra> {
        Arc::new(ae1(m, Fp::default()).unwrap())
    }

    fn simple(alg: &Arc<Algebra>, v: usize) -> Representation {
        string_module(alg, &StringWord::empty(v)).unwrap()
    }

    #[test]
    fn projective_dimensions() {
        let f = Fp::default();
        for m in 1..6 {
            let a = Arc::new(ae1(m, f).unwrap());
            let p = indecomposable_projective(&a, 0);
            assert_eq!(p.total_dim(), m + 1);
            assert_eq!(p.radical_layers().len(), m + 1);
            let a2 = Arc::new(ae2(m, f).unwrap());
            assert_eq!(indecomposable_projective(&a2, 1).total_dim(), 2 * m + 1);
        }
        for m in 2..6 {
            let a3 = Arc::new(ae3(m, f).unwrap());
            assert_eq!(indecomposable_projective(&a3, 0).dims(), &[m + 1, 1]);
            let p1 = indecomposable_projective(&a3, 1);
            assert_eq!(p1.radical_layers(), vec![vec![0, 1], vec![1, 0], vec![0, 1]]);
        }
    }

    #[test]
    fn hom_of_simples() {
        let a = Arc::new(ae2(2, Fp::default()).unwrap());
        let s0 = simple(&a, 0);
        let s1 = simple(&a, 1);
        assert_eq!(hom_dim(&s0, &s0).unwrap(), 1);
        assert_eq!(hom_dim(&s0, &s1).unwrap(), 0);
        assert!(!isomorphic(&s0, &s1));
        assert!(isomorphic(&s0, &s0));
    }

    #[test]
    fn cover_and_syzygy_of_projective() {
        let a = alg1(3);
        let p = indecomposable_projective(&a, 0);
        let (cover, epi) = projective_cover(&p).unwrap();
        assert_eq!(cover.total_dim(), p.total_dim());
        assert!(epi.is_surjective());
        assert!(syzygy(&p).is_zero());
        assert_eq!(stable_hom_dim(&p, &p).unwrap(), 0);
        assert!(matches!(
            projective_cover(&Representation::zero(a.clone())),
            Err(Error::ZeroModule)
        ));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let a = alg1(4);
        let p = indecomposable_projective(&a, 0);
        let (k, _) = kernel_of(&ModuleMap::identity(&p)).unwrap();
        assert!(k.is_zero());
        let (im, _) = image_of(&ModuleMap::identity(&p)).unwrap();
        assert!(isomorphic(&im, &p));
    }

    #[test]
    fn quotient_by_radical_is_top() {
        let a = Arc::new(ae3(3, Fp::default()).unwrap());
        let p = indecomposable_projective(&a, 0);
        let rad = p.radical_bases();
        let (top, proj) = quotient_representation(&p, &rad).unwrap();
        assert_eq!(top.dims(), &[1, 0]);
        assert!(proj.is_surjective());
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = alg1(2);
        let b = alg1(2);
        let s = simple(&a, 0);
        let t = simple(&b, 0);
        assert!(matches!(hom_basis(&s, &t), Err(Error::AlgebraMismatch)));
        assert!(matches!(stable_hom_dim(&s, &t), Err(Error::AlgebraMismatch)));
    }
}
