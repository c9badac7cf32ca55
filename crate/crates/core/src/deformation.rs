//! Modules with stable endomorphism ring `k`, their tangent spaces and
//! universal deformation rings.
//!
//! A module with `Ext¹(V, V) = 0` has deformation ring `k`. With a
//! one-dimensional tangent space the ring is `k[[x]]/⟨x^{N+1}⟩` once a
//! sequence `V_0 = V, V_1, …, V_N` with monomorphisms `ι_l: V_{l-1} → V_l`
//! and epimorphisms `ε_l: V_l → V_{l-1}` satisfies the kernel and image
//! conditions checked by [`check_anote`]. The ring is constant along
//! `Ω`-orbits.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arquiver::{build_family_ar_quiver, omega_orbit, ArQuiver};
use crate::error::{Error, Result};
use crate::families::{Family, FamilyAlgebra};
use crate::homology::{
    canonical_homs, ext1_dim, generic_hom, hom_dim, image_of, indecomposable_projective,
    is_isomorphic, kernel_of, realize_positions, stable_hom_dim, ModuleMap, Representation,
    DEFAULT_TRIALS,
};
use crate::strings::{walk_module, Letter, StringName, StringWord};

pub const MAXIMALITY_NOTE: &str = "maximality of the sequence assumed";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UdrDescriptor {
    /// `R = k`.
    TrivialRing,
    /// `R = k[[x]]/⟨x^e⟩` with `e ≥ 2`.
    PowerSeriesQuotient(usize),
    Unresolved(String),
}

impl UdrDescriptor {
    /// `k[[x]]/⟨x^e⟩`, with `e ≤ 1` giving `k`.
    pub fn power_series_quotient(e: usize) -> Self {
        if e <= 1 {
            UdrDescriptor::TrivialRing
        } else {
            UdrDescriptor::PowerSeriesQuotient(e)
        }
    }

    pub fn exponent(&self) -> Option<usize> {
        match self {
            UdrDescriptor::TrivialRing => Some(1),
            UdrDescriptor::PowerSeriesQuotient(e) => Some(*e),
            UdrDescriptor::Unresolved(_) => None,
        }
    }
}

impl fmt::Display for UdrDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UdrDescriptor::TrivialRing => f.write_str("k"),
            UdrDescriptor::PowerSeriesQuotient(e) => write!(f, "k[[x]]/<x^{e}>"),
            UdrDescriptor::Unresolved(r) => write!(f, "unresolved ({r})"),
        }
    }
}

impl Serialize for UdrDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            UdrDescriptor::TrivialRing => map.serialize_entry("kind", "k")?,
            UdrDescriptor::PowerSeriesQuotient(e) => {
                map.serialize_entry("kind", "power_series_quotient")?;
                map.serialize_entry("exponent", e)?;
            }
            UdrDescriptor::Unresolved(r) => {
                map.serialize_entry("kind", "unresolved")?;
                map.serialize_entry("reason", r)?;
            }
        }
        map.end()
    }
}

/// `V_0, …, V_N` with `ι_l: V_{l-1} ↪ V_l` and `ε_l: V_l ↠ V_{l-1}`.
#[derive(Clone, Debug)]
pub struct AnoteSequence {
    pub labels: Vec<String>,
    pub modules: Vec<Representation>,
    /// `iotas[l - 1]` is `ι_l`.
    pub iotas: Vec<ModuleMap>,
    /// `epsilons[l - 1]` is `ε_l`.
    pub epsilons: Vec<ModuleMap>,
}

impl AnoteSequence {
    /// `N`, the index of the last module.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// `σ_l = ι_l ∘ ε_l`, an endomorphism of `V_l`.
    pub fn sigma(&self, l: usize) -> ModuleMap {
        self.epsilons[l - 1].then(&self.iotas[l - 1])
    }
}

fn iso(a: &Representation, b: &Representation, seed: u64) -> bool {
    is_isomorphic(a, b, seed, DEFAULT_TRIALS)
}

/// Checks every hypothesis of the finite sequence criterion except
/// maximality and returns `k[[x]]/⟨x^{N+1}⟩`, or names the first failure.
pub fn check_anote(seq: &AnoteSequence, v: &Representation, seed: u64) -> UdrDescriptor {
    let fail = |why: String| UdrDescriptor::Unresolved(why);
    let v0 = &seq.modules[0];
    if !iso(v, v0, seed) {
        return fail("module is not isomorphic to V_0".into());
    }
    for l in 1..=seq.length() {
        if !seq.iotas[l - 1].is_injective() {
            return fail(format!("iota_{l} is not injective"));
        }
        if !seq.epsilons[l - 1].is_surjective() {
            return fail(format!("epsilon_{l} is not surjective"));
        }
        let sigma = seq.sigma(l);
        match kernel_of(&sigma) {
            Ok((k, _)) if iso(&k, v0, seed) => {}
            _ => return fail(format!("ker sigma_{l} is not isomorphic to V_0")),
        }
        match image_of(&sigma.power(l)) {
            Ok((im, _)) if iso(&im, v0, seed) => {}
            _ => return fail(format!("Im sigma_{l}^{l} is not isomorphic to V_0")),
        }
    }
    let vn = &seq.modules[seq.length()];
    let checks = (|| -> Result<Option<String>> {
        if ext1_dim(v, v)? > 1 {
            return Ok(Some("tangent space has dimension above one".into()));
        }
        if hom_dim(vn, v)? != 1 {
            return Ok(Some("dim Hom(V_N, V) is not one".into()));
        }
        if ext1_dim(vn, v)? != 0 {
            return Ok(Some("Ext^1(V_N, V) is nonzero".into()));
        }
        Ok(None)
    })();
    match checks {
        Ok(None) => UdrDescriptor::power_series_quotient(seq.length() + 1),
        Ok(Some(why)) => fail(why),
        Err(e) => fail(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceMode {
    /// The inclusions and projections between the family's named strings.
    Explicit,
    /// Greedy search over indecomposables with generic maps.
    Auto,
}

/// The family's sequence as walks; the last `ae1` walk is `P(0)`.
fn explicit_words(fa: &FamilyAlgebra) -> Result<(Vec<String>, Vec<StringWord>)> {
    let m = fa.m;
    let named = |c: char, i: usize| -> Result<(String, StringWord)> {
        let n = StringName::new(c, i);
        Ok((n.to_string(), fa.string(n)?))
    };
    let pairs: Vec<(String, StringWord)> = match fa.family {
        Family::Ae1 => {
            let mut v: Vec<_> = (0..m).map(|j| named('V', j)).collect::<Result<_>>()?;
            let mut top = StringWord::empty(0);
            for _ in 0..m {
                top = top.appended(Letter::forward(0));
            }
            v.push(("P0".into(), top));
            v
        }
        Family::Ae2 => (0..m).map(|l| named('M', 2 * l + 1)).collect::<Result<_>>()?,
        Family::Ae3 => (1..=m).rev().map(|i| named('V', i)).collect::<Result<_>>()?,
    };
    Ok(pairs.into_iter().unzip())
}

fn covers_all(range: (usize, usize), word: &StringWord) -> bool {
    range.0 == 0 && range.1 == word.len()
}

pub fn build_anote_sequence(fa: &FamilyAlgebra, mode: SequenceMode, seed: u64) -> Result<AnoteSequence> {
    match mode {
        SequenceMode::Explicit => explicit_sequence(fa),
        SequenceMode::Auto => {
            let (labels, words) = explicit_words(fa)?;
            let v0 = walk_module(&fa.algebra, &words[0])?;
            let ar = build_family_ar_quiver(fa, seed)?;
            auto_sequence(&ar, &v0, &labels[0], seed)
        }
    }
}

fn explicit_sequence(fa: &FamilyAlgebra) -> Result<AnoteSequence> {
    let alg = &fa.algebra;
    let (labels, words) = explicit_words(fa)?;
    let modules = words
        .iter()
        .map(|w| walk_module(alg, w))
        .collect::<Result<Vec<_>>>()?;
    let mut iotas = Vec::new();
    let mut epsilons = Vec::new();
    for l in 1..words.len() {
        let (small, big) = (&words[l - 1], &words[l]);
        let no_seq = || Error::NoSequenceFound(labels[0].clone());
        let iota = canonical_homs(alg, small, big)
            .into_iter()
            .filter(|h| covers_all(h.source_range, small))
            .map(|h| realize_positions(alg, small, big, &h.position_pairs()))
            .find(|m| m.as_ref().is_ok_and(ModuleMap::is_injective))
            .ok_or_else(no_seq)??;
        let eps = canonical_homs(alg, big, small)
            .into_iter()
            .filter(|h| covers_all(h.target_range, small))
            .map(|h| realize_positions(alg, big, small, &h.position_pairs()))
            .find(|m| m.as_ref().is_ok_and(ModuleMap::is_surjective))
            .ok_or_else(no_seq)??;
        iotas.push(iota);
        epsilons.push(eps);
    }
    Ok(AnoteSequence {
        labels,
        modules,
        iotas,
        epsilons,
    })
}

/// Greedy search from `v0`: at each step take the first indecomposable (AR
/// node or projective) of dimension `dim V_{l-1} + dim V_0` admitting
/// generic maps that satisfy the kernel and image conditions.
pub fn auto_sequence(ar: &ArQuiver, v0: &Representation, label: &str, seed: u64) -> Result<AnoteSequence> {
    let alg = ar.algebra();
    let mut candidates: Vec<(String, Representation)> = (0..ar.len())
        .map(|i| (ar.label(i).to_string(), ar.module(i).clone()))
        .collect();
    for v in 0..alg.quiver().vertex_count() {
        candidates.push((
            format!("P{}", alg.quiver().vertex_name(v)),
            indecomposable_projective(alg, v),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = AnoteSequence {
        labels: vec![label.to_string()],
        modules: vec![v0.clone()],
        iotas: Vec::new(),
        epsilons: Vec::new(),
    };
    let max_dim = candidates.iter().map(|c| c.1.total_dim()).max().unwrap_or(0);
    loop {
        let l = seq.modules.len();
        let prev = seq.modules[l - 1].clone();
        let want = prev.total_dim() + v0.total_dim();
        if want > max_dim {
            break;
        }
        let mut found = None;
        'cands: for (name, w) in candidates.iter().filter(|c| c.1.total_dim() == want) {
            for _ in 0..3 {
                let iota = generic_hom(&prev, w, &mut rng)?;
                let eps = generic_hom(w, &prev, &mut rng)?;
                if !iota.is_injective() || !eps.is_surjective() {
                    continue;
                }
                let sigma = eps.then(&iota);
                let ker_ok = kernel_of(&sigma).is_ok_and(|(k, _)| iso(&k, v0, seed));
                let im_ok = image_of(&sigma.power(l)).is_ok_and(|(im, _)| iso(&im, v0, seed));
                if ker_ok && im_ok {
                    found = Some((name.clone(), w.clone(), iota, eps));
                    break 'cands;
                }
            }
        }
        match found {
            Some((name, w, iota, eps)) => {
                seq.labels.push(name);
                seq.modules.push(w);
                seq.iotas.push(iota);
                seq.epsilons.push(eps);
            }
            None => break,
        }
    }
    if seq.length() == 0 {
        return Err(Error::NoSequenceFound(label.to_string()));
    }
    Ok(seq)
}

#[derive(Clone, Debug, Serialize)]
pub struct UdrReport {
    pub module: String,
    pub string: String,
    pub stable_endo_dim: usize,
    pub ext1_dim: usize,
    pub udr: UdrDescriptor,
    pub trail: Vec<String>,
}

/// Nodes with stable endomorphism ring of dimension one.
pub fn stable_endo_field_modules(ar: &ArQuiver) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..ar.len() {
        let m = ar.module(i);
        if stable_hom_dim(m, m)? == 1 {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn tangent_dim(m: &Representation) -> Result<usize> {
    ext1_dim(m, m)
}

/// Reports for every module with stable endomorphism ring `k`. With a
/// family the family's own sequence certifies the ring on one orbit
/// member; otherwise the greedy search runs from the first member.
pub fn classify(ar: &ArQuiver, family: Option<&FamilyAlgebra>, seed: u64) -> Result<Vec<UdrReport>> {
    let q = ar.algebra().quiver();
    let chosen = stable_endo_field_modules(ar)?;
    let mut ext = vec![None; ar.len()];
    for &i in &chosen {
        ext[i] = Some(tangent_dim(ar.module(i))?);
    }
    let mut udr: Vec<Option<(UdrDescriptor, Vec<String>)>> = vec![None; ar.len()];
    for &i in &chosen {
        if udr[i].is_some() {
            continue;
        }
        let orbit = omega_orbit(ar, i);
        let e = ext[i].unwrap_or(0);
        if orbit.iter().any(|&j| ext[j] != Some(e)) {
            return Err(Error::InvalidParameter(format!(
                "Ext^1 dimension is not constant on the syzygy orbit of {}",
                ar.label(i)
            )));
        }
        let (rep, desc, trail) = match e {
            0 => (i, UdrDescriptor::TrivialRing, vec!["tangent-zero".to_string()]),
            1 => certify(ar, family, &orbit, seed)?,
            _ => (
                i,
                UdrDescriptor::Unresolved(format!("tangent space of dimension {e}")),
                vec!["tangent dimension above one".to_string()],
            ),
        };
        for &j in &orbit {
            let mut t = trail.clone();
            if j != rep {
                t.push(format!("omega-transport from {}", ar.label(rep)));
            }
            udr[j] = Some((desc.clone(), t));
        }
    }
    let overlap = family.is_some_and(|fa| fa.family == Family::Ae2 && fa.m == 1);
    let order: Vec<usize> = match family {
        Some(fa) => fa
            .names()
            .iter()
            .filter_map(|n| ar.node_labelled(&n.to_string()))
            .filter(|i| chosen.contains(i))
            .collect(),
        None => chosen.clone(),
    };
    Ok(order
        .into_iter()
        .map(|i| {
            let (desc, mut trail) = udr[i].clone().expect("every chosen node is classified");
            if overlap {
                trail.push("index sets {0, 2m-1} and {1, 2m-2} overlap at m = 1".into());
            }
            if family.is_some_and(|fa| fa.family == Family::Ae2) && ar.label(i).starts_with('N') {
                trail.push("N-series treated symmetrically with the M-series".into());
            }
            UdrReport {
                module: ar.label(i).to_string(),
                string: ar.nodes()[i].display(q),
                stable_endo_dim: 1,
                ext1_dim: ext[i].unwrap_or(0),
                udr: desc,
                trail,
            }
        })
        .collect())
}

fn certify(
    ar: &ArQuiver,
    family: Option<&FamilyAlgebra>,
    orbit: &[usize],
    seed: u64,
) -> Result<(usize, UdrDescriptor, Vec<String>)> {
    if let Some(fa) = family {
        let seq = explicit_sequence(fa)?;
        if let Some(&rep) = orbit.iter().find(|&&j| ar.label(j) == seq.labels[0]) {
            let desc = check_anote(&seq, ar.module(rep), seed);
            let trail = vec![
                format!("anote-finite: {}", seq.labels.join(" -> ")),
                MAXIMALITY_NOTE.to_string(),
            ];
            return Ok((rep, desc, trail));
        }
    }
    let rep = orbit[0];
    let found = auto_sequence(ar, ar.module(rep), ar.label(rep), seed);
    Ok(match found {
        Ok(seq) => (
            rep,
            check_anote(&seq, ar.module(rep), seed),
            vec![
                format!("anote-finite (searched): {}", seq.labels.join(" -> ")),
                MAXIMALITY_NOTE.to_string(),
            ],
        ),
        Err(e) => (
            rep,
            UdrDescriptor::Unresolved(e.to_string()),
            vec!["no sequence found".to_string()],
        ),
    })
}

/// The classification expected for a family: module names, `Ext¹`
/// dimension and deformation ring.
pub fn expected_table(family: Family, m: usize) -> Vec<(StringName, usize, UdrDescriptor)> {
    let n = StringName::new;
    let psq = UdrDescriptor::power_series_quotient;
    let k = UdrDescriptor::TrivialRing;
    let mut rows = match family {
        Family::Ae1 => {
            let mut v = vec![(n('V', 0), 1, psq(m + 1))];
            if m > 1 {
                v.push((n('V', m - 1), 1, psq(m + 1)));
            }
            v
        }
        Family::Ae2 if m == 1 => ['M', 'N']
            .iter()
            .flat_map(|&c| [(n(c, 0), 0, k.clone()), (n(c, 1), 0, k.clone())])
            .collect(),
        Family::Ae2 => ['M', 'N']
            .iter()
            .flat_map(|&c| {
                [
                    (n(c, 0), 0, k.clone()),
                    (n(c, 1), 1, psq(m)),
                    (n(c, 2 * m - 2), 1, psq(m)),
                    (n(c, 2 * m - 1), 0, k.clone()),
                ]
            })
            .collect(),
        Family::Ae3 => vec![
            (n('U', 0), 0, k.clone()),
            (n('V', 1), 0, k.clone()),
            (n('X', m), 0, k.clone()),
            (n('Y', m), 0, k.clone()),
            (n('U', m - 1), 1, psq(m)),
            (n('V', m), 1, psq(m)),
            (n('X', 1), 1, psq(m)),
            (n('Y', 1), 1, psq(m)),
        ],
    };
    rows.sort_by_key(|r| r.0);
    rows.dedup_by_key(|r| r.0);
    rows
}

/// Whether reports agree with [`expected_table`] as sets of rows.
pub fn agrees_with_expected(reports: &[UdrReport], family: Family, m: usize) -> bool {
    let mut got: Vec<(String, usize, UdrDescriptor)> = reports
        .iter()
        .map(|r| (r.module.clone(), r.ext1_dim, r.udr.clone()))
        .collect();
    got.sort_by(|a, b| a.0.cmp(&b.0));
    let mut want: Vec<(String, usize, UdrDescriptor)> = expected_table(family, m)
        .into_iter()
        .map(|(n, e, d)| (n.to_string(), e, d))
        .collect();
    want.sort_by(|a, b| a.0.cmp(&b.0));
    got == want
}

pub fn reports_to_json(reports: &[UdrReport]) -> Result<String> {
    Ok(serde_json::to_string_pretty(reports)?)
}

pub fn reports_to_csv(reports: &[UdrReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "module",
        "string",
        "stable_endo_dim",
        "ext1_dim",
        "udr_kind",
        "udr_exponent",
        "trail",
    ])
    .map_err(|e| Error::Parse(e.to_string()))?;
    for r in reports {
        let (kind, exp) = match &r.udr {
            UdrDescriptor::TrivialRing => ("k".to_string(), String::new()),
            UdrDescriptor::PowerSeriesQuotient(e) => ("power_series_quotient".into(), e.to_string()),
            UdrDescriptor::Unresolved(why) => (format!("unresolved: {why}"), String::new()),
        };
        w.write_record([
            r.module.clone(),
            r.string.clone(),
            r.stable_endo_dim.to_string(),
            r.ext1_dim.to_string(),
            kind,
            exp,
            r.trail.join("; "),
        ])
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::DEFAULT_SEED;
    use crate::linalg::Fp;

    fn fa(family: Family, m: usize) -> FamilyAlgebra {
        FamilyAlgebra::new(family, m, Fp::default()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(UdrDescriptor::power_series_quotient(1), UdrDescriptor::TrivialRing);
        assert_eq!(
            serde_json::to_string(&UdrDescriptor::PowerSeriesQuotient(3)).unwrap(),
            r#"{"kind":"power_series_quotient","exponent":3}"#
        );
        assert_eq!(serde_json::to_string(&UdrDescriptor::TrivialRing).unwrap(), r#"{"kind":"k"}"#);
    }

    #[test]
    fn explicit_sequences() {
        let a = fa(Family::Ae1, 3);
        let seq = build_anote_sequence(&a, SequenceMode::Explicit, DEFAULT_SEED).unwrap();
        let dims: Vec<usize> = seq.modules.iter().map(Representation::total_dim).collect();
        assert_eq!(dims, [1, 2, 3, 4]);
        assert_eq!(
            check_anote(&seq, &seq.modules[0], DEFAULT_SEED),
            UdrDescriptor::PowerSeriesQuotient(4)
        );
        for (family, m, e) in [(Family::Ae2, 3, 3), (Family::Ae3, 3, 3), (Family::Ae2, 1, 1)] {
            let a = fa(family, m);
            let seq = build_anote_sequence(&a, SequenceMode::Explicit, DEFAULT_SEED).unwrap();
            assert_eq!(
                check_anote(&seq, &seq.modules[0], DEFAULT_SEED),
                UdrDescriptor::power_series_quotient(e),
                "{family} {m}"
            );
        }
    }

    #[test]
    fn auto_sequences_match_explicit() {
        for (family, m) in [(Family::Ae1, 3), (Family::Ae2, 2), (Family::Ae3, 3)] {
            let a = fa(family, m);
            let auto = build_anote_sequence(&a, SequenceMode::Auto, DEFAULT_SEED).unwrap();
            let explicit = build_anote_sequence(&a, SequenceMode::Explicit, DEFAULT_SEED).unwrap();
            assert_eq!(auto.length(), explicit.length(), "{family} {m}");
            assert_eq!(
                check_anote(&auto, &auto.modules[0], DEFAULT_SEED),
                check_anote(&explicit, &explicit.modules[0], DEFAULT_SEED)
            );
        }
    }

    #[test]
    fn broken_sequence_is_unresolved() {
        let a = fa(Family::Ae1, 3);
        let mut seq = build_anote_sequence(&a, SequenceMode::Explicit, DEFAULT_SEED).unwrap();
        seq.iotas[0] = ModuleMap::linear_combination(
            &seq.modules[0],
            &seq.modules[1],
            &[],
            &[],
        );
        assert!(matches!(
            check_anote(&seq, &seq.modules[0], DEFAULT_SEED),
            UdrDescriptor::Unresolved(_)
        ));
    }

    #[test]
    fn classify_small() {
        let a = fa(Family::Ae3, 2);
        let ar = build_family_ar_quiver(&a, DEFAULT_SEED).unwrap();
        let reports = classify(&ar, Some(&a), DEFAULT_SEED).unwrap();
        assert!(agrees_with_expected(&reports, Family::Ae3, 2));
        let csv = reports_to_csv(&reports).unwrap();
        assert_eq!(csv.lines().count(), 9);
    }
}
