//! Stable Auslander–Reiten quivers of string algebras of finite type.
//!
//! Irreducible maps between string modules are the canonical inclusions
//! into hooks and the canonical projections from co-hooks, so the arrows
//! come from the four hook moves applied to every string. The translate is
//! `Ω²`, matched to nodes by isomorphism tests.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::families::FamilyAlgebra;
use crate::homology::{is_isomorphic, syzygy, Representation, DEFAULT_TRIALS};
use crate::quiver::Algebra;
use crate::strings::{add_cohook, add_hook, enumerate_strings, string_module, Side, StringWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `M[C] ↪ M[C']` with `C'` obtained by adding a hook.
    Hook,
    /// `M[C'] ↠ M[C]` with `C'` obtained by adding a co-hook.
    Cohook,
}

impl EdgeKind {
    pub fn tag(self) -> &'static str {
        match self {
            EdgeKind::Hook => "h",
            EdgeKind::Cohook => "c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug)]
pub struct ArQuiver {
    algebra: Arc<Algebra>,
    nodes: Vec<StringWord>,
    modules: Vec<Representation>,
    labels: Vec<String>,
    arrows: Vec<ArArrow>,
    omega: Vec<usize>,
    tau: Vec<usize>,
}

impl ArQuiver {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn nodes(&self) -> &[StringWord] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn module(&self, node: usize) -> &Representation {
        &self.modules[node]
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrows(&self) -> &[ArArrow] {
        &self.arrows
    }

    /// `Ω` as a permutation of the nodes.
    pub fn omega(&self) -> &[usize] {
        &self.omega
    }

    /// `τ = Ω²` as a permutation of the nodes.
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn node_of(&self, word: &StringWord) -> Option<usize> {
        let c = word.canonical(self.algebra.quiver());
        self.nodes.iter().position(|n| *n == c)
    }

    pub fn node_labelled(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Replaces string literals by the family's module names.
    pub fn label_with_family(&mut self, fa: &FamilyAlgebra) {
        for (label, node) in self.labels.iter_mut().zip(&self.nodes) {
            if let Some(name) = fa.name_of(node) {
                *label = name.to_string();
            }
        }
    }

    /// Labelled arrows `(source, target, kind)`, sorted.
    pub fn labelled_arrows(&self) -> BTreeSet<(String, String, EdgeKind)> {
        self.arrows
            .iter()
            .map(|a| {
                (
                    self.labels[a.source].clone(),
                    self.labels[a.target].clone(),
                    a.kind,
                )
            })
            .collect()
    }

    /// Nodes all of whose incoming arrows have one kind.
    pub fn mouth(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| {
                let kinds: BTreeSet<EdgeKind> = self
                    .arrows
                    .iter()
                    .filter(|a| a.target == v && a.source != v)
                    .map(|a| a.kind)
                    .collect();
                kinds.len() == 1
            })
            .collect()
    }
}

/// Index of the node isomorphic to `m` among `modules`.
fn match_node(modules: &[Representation], m: &Representation, seed: u64) -> Option<usize> {
    modules
        .iter()
        .position(|n| n.dims() == m.dims() && is_isomorphic(n, m, seed, DEFAULT_TRIALS))
}

pub fn build_ar_quiver(algebra: &Arc<Algebra>, length_cap: usize, seed: u64) -> Result<ArQuiver> {
    let q = algebra.quiver();
    let nodes = enumerate_strings(algebra, length_cap)?;
    let find = |w: &StringWord| -> Result<usize> {
        let c = w.canonical(q);
        nodes
            .iter()
            .position(|n| *n == c)
            .ok_or(Error::CapTooSmall { cap: length_cap })
    };
    let mut arrows = BTreeSet::new();
    for (i, c) in nodes.iter().enumerate() {
        for side in [Side::Left, Side::Right] {
            match add_hook(algebra, c, side) {
                Ok(h) => {
                    arrows.insert(ArArrow {
                        source: i,
                        target: find(&h)?,
                        kind: EdgeKind::Hook,
                    });
                }
                Err(Error::OnPeak) => {}
                Err(e) => return Err(e),
            }
            match add_cohook(algebra, c, side) {
                Ok(h) => {
                    arrows.insert(ArArrow {
                        source: find(&h)?,
                        target: i,
                        kind: EdgeKind::Cohook,
                    });
                }
                Err(Error::InDeep) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let modules = nodes
        .iter()
        .map(|w| string_module(algebra, w))
        .collect::<Result<Vec<_>>>()?;
    let omega = modules
        .iter()
        .zip(&nodes)
        .map(|(m, w)| {
            match_node(&modules, &syzygy(m), seed).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "syzygy of {} is not an indecomposable string module",
                    w.display(q)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let tau = omega.iter().map(|&j| omega[j]).collect();
    let labels = nodes.iter().map(|w| w.display(q)).collect();
    Ok(ArQuiver {
        algebra: algebra.clone(),
        nodes,
        modules,
        labels,
        arrows: arrows.into_iter().collect(),
        omega,
        tau,
    })
}

/// The AR quiver of a family algebra, labelled by module names.
pub fn build_family_ar_quiver(fa: &FamilyAlgebra, seed: u64) -> Result<ArQuiver> {
    let mut ar = build_ar_quiver(&fa.algebra, fa.family.length_cap(fa.m), seed)?;
    ar.label_with_family(fa);
    Ok(ar)
}

/// The `Ω`-orbit of a node, starting with the node itself.
pub fn omega_orbit(q: &ArQuiver, node: usize) -> Vec<usize> {
    let mut out = vec![node];
    let mut next = q.omega[node];
    while next != node {
        out.push(next);
        next = q.omega[next];
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering: solid arrows for irreducible maps tagged `h`/`c`, dashed
/// arrows from each node to its translate.
pub fn to_dot(q: &ArQuiver) -> String {
    let mut out = String::from("digraph ar {\n  node [shape=plaintext];\n");
    for (i, l) in q.labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(l));
    }
    for a in &q.arrows {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label={}];",
            a.source,
            a.target,
            quote(a.kind.tag())
        );
    }
    for (i, &t) in q.tau.iter().enumerate() {
        if t != i {
            let _ = writeln!(out, "  n{i} -> n{t} [style=dashed, label=\"tau\"];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::homology::DEFAULT_SEED;
    use crate::linalg::Fp;

    fn ar(family: Family, m: usize) -> ArQuiver {
        let fa = FamilyAlgebra::new(family, m, Fp::default()).unwrap();
        build_family_ar_quiver(&fa, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn tube_of_ae1() {
        let q = ar(Family::Ae1, 3);
        assert_eq!(q.len(), 3);
        assert_eq!(q.arrows().len(), 4);
        assert!(q.tau().iter().enumerate().all(|(i, &t)| i == t));
        let orbit: Vec<&str> = omega_orbit(&q, q.node_labelled("V0").unwrap())
            .into_iter()
            .map(|i| q.label(i))
            .collect();
        assert_eq!(orbit, ["V0", "V2"]);
        let mut mouth: Vec<&str> = q.mouth().into_iter().map(|i| q.label(i)).collect();
        mouth.sort();
        assert_eq!(mouth, ["V0", "V2"]);
    }

    #[test]
    fn single_node() {
        let q = ar(Family::Ae1, 1);
        assert_eq!(q.len(), 1);
        let dot = to_dot(&q);
        assert!(!dot.contains("->"));
    }

    #[test]
    fn ae3_orbit_of_s1() {
        let q = ar(Family::Ae3, 3);
        let orbit: BTreeSet<&str> = omega_orbit(&q, q.node_labelled("U0").unwrap())
            .into_iter()
            .map(|i| q.label(i))
            .collect();
        assert_eq!(orbit, BTreeSet::from(["U0", "V1", "X3", "Y3"]));
    }

    #[test]
    fn dot_is_deterministic() {
        assert_eq!(to_dot(&ar(Family::Ae2, 2)), to_dot(&ar(Family::Ae2, 2)));
    }
}
