//! Quivers, paths, rewriting completion and finite-dimensional bound quiver
//! algebras.
//!
//! Relations are string-rewriting rules `lhs → c·rhs` or `lhs → 0` on paths.
//! Completion resolves every overlap between left-hand sides until the system
//! is confluent; the irreducible paths then form a basis of the algebra and
//! reducing concatenations gives the multiplication table.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Fp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<V: AsRef<str>>(vertices: &[V], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for &(name, from, to) in arrows {
            if q.arrow_index(name).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            let source = q
                .vertex_index(from)
                .ok_or_else(|| Error::UnknownVertex(from.to_string()))?;
            let target = q
                .vertex_index(to)
                .ok_or_else(|| Error::UnknownVertex(to.to_string()))?;
            q.arrows.push(Arrow {
                name: name.to_string(),
                source,
                target,
            });
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrow indices from names, checking that consecutive arrows compose.
    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let arrows = names
            .iter()
            .map(|n| {
                self.arrow_index(n.as_ref())
                    .ok_or_else(|| Error::UnknownArrow(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::new(self, arrows)
    }
}

/// A path in a quiver: a trivial path `e_v` or a composable arrow sequence,
/// read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            start: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn new(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidRule("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                return Err(Error::InvalidRule(format!(
                    "arrows `{}` and `{}` do not compose",
                    quiver.arrow(w[0]).name,
                    quiver.arrow(w[1]).name
                )));
            }
        }
        Ok(Path {
            start: quiver.arrow(first).source,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.start, |&a| quiver.arrow(a).target)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", quiver.vertex_name(self.start))
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// Length first, then lexicographic in arrow declaration order.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Path,
    /// `None` means the lhs rewrites to zero.
    pub rhs: Option<(u64, Path)>,
}

impl RewriteRule {
    pub fn zero(lhs: Path) -> Self {
        RewriteRule { lhs, rhs: None }
    }

    /// The relation `u = c·v`, oriented so that the larger path is rewritten.
    pub fn binomial(u: Path, c: u64, v: Path, field: Fp) -> Self {
        if u > v {
            RewriteRule {
                lhs: u,
                rhs: Some((c, v)),
            }
        } else {
            RewriteRule {
                lhs: v,
                rhs: Some((field.inv(c), u)),
            }
        }
    }
}

type Word = Vec<usize>;
/// A scalar multiple of a word; `None` is zero.
type Term = Option<(u64, Word)>;

#[derive(Clone, Debug)]
struct WordRule {
    lhs: Word,
    rhs: Term,
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn word_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn normalize(rules: &[WordRule], term: Term, field: Fp) -> Term {
    let (mut c, mut w) = term?;
    'outer: loop {
        for r in rules {
            if let Some(pos) = find_sub(&w, &r.lhs) {
                let (rc, rw) = r.rhs.as_ref()?;
                c = field.mul(c, *rc);
                let mut next = w[..pos].to_vec();
                next.extend_from_slice(rw);
                next.extend_from_slice(&w[pos + r.lhs.len()..]);
                w = next;
                continue 'outer;
            }
        }
        return Some((c, w));
    }
}

/// Turns the equation `x = y` into a rule, or `None` if it is trivial.
fn orient(x: Term, y: Term, field: Fp) -> Option<WordRule> {
    match (x, y) {
        (None, None) => None,
        (Some((_, w)), None) | (None, Some((_, w))) => Some(WordRule { lhs: w, rhs: None }),
        (Some((a, u)), Some((b, v))) => {
            if u == v {
                if a == b {
                    None
                } else {
                    Some(WordRule { lhs: u, rhs: None })
                }
            } else if word_cmp(&u, &v) == Ordering::Greater {
                // a u = b v  ⇒  u = (b/a) v
                Some(WordRule {
                    lhs: u,
                    rhs: Some((field.mul(b, field.inv(a)), v)),
                })
            } else {
                Some(WordRule {
                    lhs: v,
                    rhs: Some((field.mul(a, field.inv(b)), u)),
                })
            }
        }
    }
}

fn append(term: &Term, suffix: &[usize]) -> Term {
    term.as_ref().map(|(c, w)| {
        let mut w = w.clone();
        w.extend_from_slice(suffix);
        (*c, w)
    })
}

fn prepend(prefix: &[usize], term: &Term) -> Term {
    term.as_ref().map(|(c, w)| {
        let mut out = prefix.to_vec();
        out.extend_from_slice(w);
        (*c, out)
    })
}

/// Completes a rule set to confluence. `cap` bounds the number of rules
/// added while resolving equations and overlaps.
fn complete(equations: Vec<(Term, Term)>, cap: usize, field: Fp) -> Result<Vec<WordRule>> {
    let mut rules: Vec<WordRule> = Vec::new();
    let mut pending: VecDeque<(Term, Term)> = equations.into();
    let mut resolutions = 0usize;
    loop {
        while let Some((x, y)) = pending.pop_front() {
            let x = normalize(&rules, x, field);
            let y = normalize(&rules, y, field);
            let Some(rule) = orient(x, y, field) else {
                continue;
            };
            resolutions += 1;
            if resolutions > cap {
                return Err(Error::NonTerminating { cap });
            }
            let (keep, removed): (Vec<_>, Vec<_>) = rules
                .into_iter()
                .partition(|r| find_sub(&r.lhs, &rule.lhs).is_none());
            rules = keep;
            rules.push(rule);
            for r in removed {
                pending.push_back((Some((1, r.lhs)), r.rhs));
            }
            for i in 0..rules.len() {
                let rhs = rules[i].rhs.take();
                rules[i].rhs = normalize(&rules, rhs, field);
            }
        }

        for i in 0..rules.len() {
            for j in 0..rules.len() {
                let (li, lj) = (&rules[i].lhs, &rules[j].lhs);
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] != lj[..k] {
                        continue;
                    }
                    let via_i = append(&rules[i].rhs, &lj[k..]);
                    let via_j = prepend(&li[..li.len() - k], &rules[j].rhs);
                    let a = normalize(&rules, via_i, field);
                    let b = normalize(&rules, via_j, field);
                    if a != b {
                        pending.push_back((a, b));
                    }
                }
            }
        }
        if pending.is_empty() {
            break;
        }
    }
    rules.sort_by(|a, b| word_cmp(&a.lhs, &b.lhs));
    Ok(rules)
}

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional bound quiver algebra over F_p with an explicit basis
/// of irreducible paths.
#[derive(Debug)]
pub struct Algebra {
    id: u64,
    quiver: Quiver,
    field: Fp,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    mult: Vec<Vec<Option<(usize, u64)>>>,
    rules: Vec<RewriteRule>,
    word_rules: Vec<WordRule>,
    quotient_rules: Vec<RewriteRule>,
    socle: Vec<bool>,
}

/// An element of an algebra, as coefficients over its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElem {
    algebra: u64,
    coeffs: Vec<u64>,
}

impl AlgebraElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Algebra {
    /// Completes `rules` and builds basis and multiplication table.
    pub fn complete_rewriting(
        quiver: Quiver,
        rules: Vec<RewriteRule>,
        dim_bound: usize,
        field: Fp,
    ) -> Result<Algebra> {
        if dim_bound == 0 {
            return Err(Error::InvalidParameter("dim_bound must be positive".into()));
        }
        let mut equations = Vec::with_capacity(rules.len());
        for r in &rules {
            if r.lhs.is_trivial() {
                return Err(Error::InvalidRule("lhs must have length ≥ 1".into()));
            }
            let rhs = match &r.rhs {
                None => None,
                Some((c, p)) => {
                    if p.is_trivial() {
                        return Err(Error::InvalidRule(
                            "rhs must be zero or a path of length ≥ 1".into(),
                        ));
                    }
                    if p.source() != r.lhs.source() || p.target(&quiver) != r.lhs.target(&quiver)
                    {
                        return Err(Error::InvalidRule(format!(
                            "`{}` and `{}` have different endpoints",
                            r.lhs.display(&quiver),
                            p.display(&quiver)
                        )));
                    }
                    let c = *c % field.modulus();
                    if c == 0 {
                        None
                    } else {
                        Some((c, p.arrows.clone()))
                    }
                }
            };
            equations.push((Some((1, r.lhs.arrows.clone())), rhs));
        }
        let word_rules = complete(equations, 10 * dim_bound, field)?;

        let basis = enumerate_irreducible(&quiver, &word_rules, dim_bound)?;
        let index: HashMap<Path, usize> =
            basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let to_path = |w: &Word| Path {
            start: quiver.arrow(w[0]).source,
            arrows: w.clone(),
        };
        let rules: Vec<RewriteRule> = word_rules
            .iter()
            .map(|r| RewriteRule {
                lhs: to_path(&r.lhs),
                rhs: r.rhs.as_ref().map(|(c, w)| (*c, to_path(w))),
            })
            .collect();

        let mut alg = Algebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, AtomicOrdering::Relaxed),
            quiver,
            field,
            basis,
            index,
            mult: Vec::new(),
            rules,
            word_rules: word_rules.clone(),
            quotient_rules: Vec::new(),
            socle: Vec::new(),
        };
        let word_rules_ref = &word_rules;
        let n = alg.basis.len();
        let mut mult = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = alg.product_of_paths(word_rules_ref, &alg.basis[i], &alg.basis[j]);
            }
        }
        alg.mult = mult;
        if !alg.is_associative() {
            return Err(Error::InvalidRule(
                "completed multiplication is not associative".into(),
            ));
        }

        alg.socle = (0..n)
            .map(|i| {
                !alg.basis[i].is_trivial()
                    && (0..alg.quiver.arrows.len()).all(|a| {
                        let mut w = alg.basis[i].arrows.clone();
                        if alg.quiver.arrow(a).source != alg.basis[i].target(&alg.quiver) {
                            return true;
                        }
                        w.push(a);
                        normalize(word_rules_ref, Some((1, w)), field).is_none()
                    })
            })
            .collect();
        let mut quotient_rules: Vec<RewriteRule> = alg
            .rules
            .iter()
            .map(|r| RewriteRule::zero(r.lhs.clone()))
            .collect();
        for (i, p) in alg.basis.iter().enumerate() {
            if alg.socle[i] {
                quotient_rules.push(RewriteRule::zero(p.clone()));
            }
        }
        alg.quotient_rules = quotient_rules;
        Ok(alg)
    }

    fn product_of_paths(&self, rules: &[WordRule], a: &Path, b: &Path) -> Option<(usize, u64)> {
        if a.target(&self.quiver) != b.source() {
            return None;
        }
        let mut w = a.arrows.clone();
        w.extend_from_slice(&b.arrows);
        if w.is_empty() {
            return Some((self.index[a], 1));
        }
        let (c, w) = normalize(rules, Some((1, w)), self.field)?;
        let p = Path {
            start: a.start,
            arrows: w,
        };
        Some((self.index[&p], c))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The completed rule set.
    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Monomial rules presenting `Λ/soc(Λ)`.
    pub fn quotient_rules(&self) -> &[RewriteRule] {
        &self.quotient_rules
    }

    pub fn is_socle_basis_element(&self, i: usize) -> bool {
        self.socle[i]
    }

    /// Product of two basis elements.
    pub fn mult_basis(&self, i: usize, j: usize) -> Option<(usize, u64)> {
        self.mult[i][j]
    }

    /// Normal form of an arrow sequence (assumed composable): `None` if it
    /// is zero in the algebra, else `(basis index, coefficient)`.
    pub fn normal_form(&self, arrows: &[usize]) -> Option<(usize, u64)> {
        let (c, w) = normalize(&self.word_rules, Some((1, arrows.to_vec())), self.field)?;
        let p = Path {
            start: self.quiver.arrow(w[0]).source,
            arrows: w,
        };
        Some((self.index[&p], c))
    }

    /// Whether the directed path (nonempty, composable) lies in the ideal
    /// presenting `Λ/soc(Λ)`, i.e. is zero there.
    pub fn in_socle_quotient_ideal(&self, arrows: &[usize]) -> bool {
        match self.normal_form(arrows) {
            None => true,
            Some((i, _)) => self.socle[i],
        }
    }

    pub fn trivial_index(&self, vertex: usize) -> usize {
        self.index[&Path::trivial(vertex)]
    }

    /// Exhaustive associativity check over all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let f = self.field;
        let times = |x: Option<(usize, u64)>, j: usize, left: bool| -> Option<(usize, u64)> {
            let (i, c) = x?;
            let (k, d) = if left {
                self.mult[i][j]?
            } else {
                self.mult[j][i]?
            };
            Some((k, f.mul(c, d)))
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.mult[a][b];
                for c in 0..n {
                    let left = times(ab, c, true);
                    let right = times(self.mult[b][c], a, false);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn element(&self, coeffs: Vec<u64>) -> Result<AlgebraElem> {
        if coeffs.len() != self.dim() {
            return Err(Error::InvalidParameter(format!(
                "element needs {} coefficients",
                self.dim()
            )));
        }
        Ok(AlgebraElem {
            algebra: self.id,
            coeffs: coeffs.into_iter().map(|c| c % self.field.modulus()).collect(),
        })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElem {
        let mut coeffs = vec![0; self.dim()];
        coeffs[i] = 1;
        AlgebraElem {
            algebra: self.id,
            coeffs,
        }
    }

    /// The element represented by a path (arrow names).
    pub fn path_element<S: AsRef<str>>(&self, names: &[S]) -> Result<AlgebraElem> {
        let p = self.quiver.path_from_names(names)?;
        let mut coeffs = vec![0; self.dim()];
        if let Some((i, c)) = self.normal_form(&p.arrows) {
            coeffs[i] = c;
        }
        Ok(AlgebraElem {
            algebra: self.id,
            coeffs,
        })
    }

    pub fn one(&self) -> AlgebraElem {
        let mut coeffs = vec![0; self.dim()];
        for v in 0..self.quiver.vertex_count() {
            coeffs[self.trivial_index(v)] = 1;
        }
        AlgebraElem {
            algebra: self.id,
            coeffs,
        }
    }

    pub fn multiply(&self, a: &AlgebraElem, b: &AlgebraElem) -> Result<AlgebraElem> {
        if a.algebra != self.id || b.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                if let Some((k, c)) = self.mult[i][j] {
                    out[k] = f.add(out[k], f.mul(f.mul(x, y), c));
                }
            }
        }
        Ok(AlgebraElem {
            algebra: self.id,
            coeffs: out,
        })
    }

    /// Basis paths starting at `vertex`, in basis order.
    pub fn paths_from(&self, vertex: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source() == vertex)
            .collect()
    }

    /// Longest basis path length.
    pub fn loewy_bound(&self) -> usize {
        self.basis.iter().map(Path::len).max().unwrap_or(0)
    }
}

fn enumerate_irreducible(quiver: &Quiver, rules: &[WordRule], bound: usize) -> Result<Vec<Path>> {
    let mut basis: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    let mut layer = basis.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for p in &layer {
            let t = p.target(quiver);
            for (a, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != t {
                    continue;
                }
                let mut w = p.arrows.clone();
                w.push(a);
                if rules.iter().any(|r| w.ends_with(&r.lhs)) {
                    continue;
                }
                next.push(Path {
                    start: p.start,
                    arrows: w,
                });
                if basis.len() + next.len() > bound {
                    return Err(Error::DimensionBoundExceeded { bound });
                }
            }
        }
        next.sort();
        basis.extend(next.iter().cloned());
        layer = next;
    }
    Ok(basis)
}

/// `ae1(m)`: one loop `a` with `a^{m+1} = 0`; dimension `m + 1`.
pub fn ae1(m: usize, field: Fp) -> Result<Algebra> {
    if m < 1 {
        return Err(Error::InvalidParameter("ae1 needs m ≥ 1".into()));
    }
    let q = Quiver::new(&["0"], &[("a", "0", "0")])?;
    let rule = RewriteRule::zero(Path::new(&q, vec![0; m + 1])?);
    Algebra::complete_rewriting(q, vec![rule], m + 2, field)
}

/// `ae2(m)`: `a: 0 → 1`, `b: 1 → 0`, `(ab)^m a = (ba)^m b = 0`; dimension `4m + 2`.
pub fn ae2(m: usize, field: Fp) -> Result<Algebra> {
    if m < 1 {
        return Err(Error::InvalidParameter("ae2 needs m ≥ 1".into()));
    }
    let q = Quiver::new(&["0", "1"], &[("a", "0", "1"), ("b", "1", "0")])?;
    let alternating = |first: usize, len: usize| (0..len).map(|k| (first + k) % 2).collect();
    let rules = vec![
        RewriteRule::zero(Path::new(&q, alternating(0, 2 * m + 1))?),
        RewriteRule::zero(Path::new(&q, alternating(1, 2 * m + 1))?),
    ];
    Algebra::complete_rewriting(q, rules, 4 * m + 3, field)
}

/// `ae3(m)`: loop `r` at 0, `a: 0 → 1`, `b: 1 → 0`, `ra = br = 0`,
/// `ab = r^m`; dimension `m + 5`.
pub fn ae3(m: usize, field: Fp) -> Result<Algebra> {
    if m < 2 {
        return Err(Error::InvalidParameter("ae3 needs m ≥ 2".into()));
    }
    let q = Quiver::new(
        &["0", "1"],
        &[("r", "0", "0"), ("a", "0", "1"), ("b", "1", "0")],
    )?;
    let rules = vec![
        RewriteRule::zero(q.path_from_names(&["r", "a"])?),
        RewriteRule::zero(q.path_from_names(&["b", "r"])?),
        RewriteRule::binomial(
            q.path_from_names(&["a", "b"])?,
            1,
            Path::new(&q, vec![0; m])?,
            field,
        ),
    ];
    Algebra::complete_rewriting(q, rules, m + 6, field)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum VertexId {
    Int(i64),
    Name(String),
}

impl VertexId {
    fn name(&self) -> String {
        match self {
            VertexId::Int(i) => i.to_string(),
            VertexId::Name(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: VertexId,
    pub to: VertexId,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RhsSpec {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleSpec {
    pub lhs: Vec<String>,
    pub rhs: Option<RhsSpec>,
}

/// JSON description of an algebra by generators and relations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub vertices: Vec<VertexId>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub rules: Vec<RuleSpec>,
    #[serde(default = "default_prime")]
    pub prime: u64,
    pub dim_bound: usize,
}

fn default_prime() -> u64 {
    Fp::DEFAULT_PRIME
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<Algebra> {
        let field = Fp::new(self.prime)
            .ok_or_else(|| Error::InvalidParameter(format!("{} is not a prime", self.prime)))?;
        let vertices: Vec<String> = self.vertices.iter().map(VertexId::name).collect();
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.from.name(), a.to.name()))
            .collect();
        let arrow_refs: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
            .collect();
        let q = Quiver::new(&vertices, &arrow_refs)?;
        let mut rules = Vec::new();
        for r in &self.rules {
            let lhs = q.path_from_names(&r.lhs)?;
            let rule = match &r.rhs {
                None => RewriteRule::zero(lhs),
                Some(rhs) => {
                    let p = q.path_from_names(&rhs.path)?;
                    let c = field.reduce(rhs.coeff);
                    if c == 0 {
                        RewriteRule::zero(lhs)
                    } else {
                        RewriteRule::binomial(lhs, c, p, field)
                    }
                }
            };
            rules.push(rule);
        }
        Algebra::complete_rewriting(q, rules, self.dim_bound, field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(alg: &Algebra, i: usize) -> String {
        alg.basis()[i].display(alg.quiver())
    }

    #[test]
    fn ae1_basis() {
        let alg = ae1(1, Fp::default()).unwrap();
        assert_eq!(alg.dim(), 2);
        let b: Vec<String> = (0..2).map(|i| names(&alg, i)).collect();
        assert_eq!(b, ["e0", "a"]);
        let alg = ae1(2, Fp::default()).unwrap();
        assert_eq!(alg.dim(), 3);
    }

    #[test]
    fn ae3_completion_adds_overlap_rule() {
        // m = 2 orients ab → rr; the overlap r(ab) = (ra)b forces r^3 → 0.
        let alg = ae3(2, Fp::default()).unwrap();
        let q = alg.quiver();
        let rrr = q.path_from_names(&["r", "r", "r"]).unwrap();
        assert!(alg.rules().iter().any(|r| r.lhs == rrr && r.rhs.is_none()));
        assert_eq!(alg.dim(), 7);
        for m in 2..6 {
            let alg = ae3(m, Fp::default()).unwrap();
            let r_m1 = vec![0; m + 1];
            assert!(alg.normal_form(&r_m1).is_none());
            let ab = alg.normal_form(&[1, 2]).unwrap();
            assert_eq!(alg.normal_form(&vec![0; m]), Some(ab));
        }
    }

    #[test]
    fn cyclic_quiver_without_relations_is_infinite() {
        let q = Quiver::new(&["0", "1"], &[("a", "0", "1"), ("b", "1", "0")]).unwrap();
        let err = Algebra::complete_rewriting(q, vec![], 50, Fp::default()).unwrap_err();
        assert!(matches!(err, Error::DimensionBoundExceeded { bound: 50 }));
    }

    #[test]
    fn multiply_examples() {
        let f = Fp::default();
        let alg = ae3(2, f).unwrap();
        let e0 = alg.basis_element(alg.trivial_index(0));
        assert_eq!(alg.multiply(&e0, &e0).unwrap(), e0);
        let r = alg.path_element(&["r"]).unwrap();
        let r2 = alg.path_element(&["r", "r"]).unwrap();
        assert!(!r2.is_zero());
        assert!(alg.multiply(&r, &r2).unwrap().is_zero());

        let alg2 = ae2(1, f).unwrap();
        let a = alg2.path_element(&["a"]).unwrap();
        let ba = alg2.path_element(&["b", "a"]).unwrap();
        assert!(alg2.multiply(&a, &ba).unwrap().is_zero());
        assert!(matches!(
            alg2.multiply(&a, &r),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn idempotents_sum_to_one() {
        let alg = ae2(2, Fp::default()).unwrap();
        let one = alg.one();
        for i in 0..alg.dim() {
            let b = alg.basis_element(i);
            assert_eq!(alg.multiply(&one, &b).unwrap(), b);
            assert_eq!(alg.multiply(&b, &one).unwrap(), b);
        }
        let e0 = alg.basis_element(alg.trivial_index(0));
        let e1 = alg.basis_element(alg.trivial_index(1));
        assert!(alg.multiply(&e0, &e1).unwrap().is_zero());
    }

    #[test]
    fn spec_file_roundtrip() {
        let text = r#"{"vertices":[0],"arrows":[{"name":"x","from":0,"to":0}],
            "rules":[{"lhs":["x","x","x"],"rhs":null}],"prime":101,"dim_bound":10}"#;
        let alg = AlgebraSpec::from_json(text).unwrap().build().unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.field().modulus(), 101);
    }

    #[test]
    fn socle_quotient_ideal_matches_families() {
        let f = Fp::default();
        let alg = ae3(3, f).unwrap();
        let q = alg.quiver();
        let p = |n: &[&str]| q.path_from_names(n).unwrap().arrows().to_vec();
        assert!(alg.in_socle_quotient_ideal(&p(&["a", "b"])));
        assert!(alg.in_socle_quotient_ideal(&p(&["b", "a"])));
        assert!(alg.in_socle_quotient_ideal(&p(&["r", "r", "r"])));
        assert!(alg.in_socle_quotient_ideal(&p(&["b", "r"])));
        assert!(!alg.in_socle_quotient_ideal(&p(&["r", "r"])));
        assert!(!alg.in_socle_quotient_ideal(&p(&["a"])));
    }
}
