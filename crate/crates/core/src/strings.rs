//! Strings over arrows and formal inverses, their modules, and hooks and
//! co-hooks.
//!
//! A word is read left to right as a walk. Position `k` of the walk carries
//! one basis vector of the string module; a forward letter `a` between
//! positions `k` and `k + 1` sends the vector at `k` to the vector at `k + 1`,
//! an inverse letter `a~` sends the vector at `k + 1` to the one at `k`.
//! Validity is judged against `Λ/soc(Λ)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homology::Representation;
use crate::linalg::Matrix;
use crate::quiver::{Algebra, Quiver};

/// An arrow or its formal inverse. Ordered by arrow, forward before inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn forward(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inverse(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn display(self, q: &Quiver) -> String {
        let name = &q.arrow(self.arrow).name;
        if self.inverse {
            format!("{name}~")
        } else {
            name.clone()
        }
    }
}

/// A walk: the empty word at `start`, or a composable letter sequence
/// beginning at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    start: usize,
    letters: Vec<Letter>,
}

/// Length, then letters, then start vertex.
impl Ord for StringWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl StringWord {
    pub fn empty(vertex: usize) -> Self {
        StringWord {
            start: vertex,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(q: &Quiver, letters: Vec<Letter>) -> Result<Self> {
        let Some(first) = letters.first() else {
            return Err(Error::Parse("use `e<vertex>` for an empty word".into()));
        };
        for l in &letters {
            if l.arrow >= q.arrows().len() {
                return Err(Error::UnknownArrow(format!("#{}", l.arrow)));
            }
        }
        for w in letters.windows(2) {
            if w[0].target(q) != w[1].source(q) {
                return Err(Error::Parse(format!(
                    "letters `{}` and `{}` do not compose",
                    w[0].display(q),
                    w[1].display(q)
                )));
            }
        }
        Ok(StringWord {
            start: first.source(q),
            letters,
        })
    }

    /// Parses `e0`, `a,b` or `r~ r~ a`: arrow names separated by commas or
    /// whitespace, `~` marking a formal inverse.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty string literal".into()));
        }
        if let [t] = tokens[..] {
            if q.arrow_index(t.trim_end_matches('~')).is_none() {
                if let Some(v) = t.strip_prefix('e').and_then(|v| q.vertex_index(v)) {
                    return Ok(StringWord::empty(v));
                }
            }
        }
        let letters = tokens
            .iter()
            .map(|t| {
                let (name, inverse) = match t.strip_suffix('~') {
                    Some(n) => (n, true),
                    None => (*t, false),
                };
                let arrow = q
                    .arrow_index(name)
                    .ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
                Ok(Letter { arrow, inverse })
            })
            .collect::<Result<Vec<_>>>()?;
        StringWord::from_letters(q, letters)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.letters.is_empty() {
            format!("e{}", q.vertex_name(self.start))
        } else {
            self.letters
                .iter()
                .map(|l| l.display(q))
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.letters.last().map_or(self.start, |l| l.target(q))
    }

    pub fn is_directed(&self) -> bool {
        !self.letters.is_empty() && self.letters.iter().all(|l| !l.inverse)
    }

    pub fn inverse(&self, q: &Quiver) -> Self {
        StringWord {
            start: self.target(q),
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// The smaller of the word and its inverse.
    pub fn canonical(&self, q: &Quiver) -> Self {
        let inv = self.inverse(q);
        if inv.letters < self.letters {
            inv
        } else {
            self.clone()
        }
    }

    pub fn equivalent(&self, other: &StringWord, q: &Quiver) -> bool {
        self == other || *self == other.inverse(q)
    }

    /// Vertex visited at each walk position.
    pub fn positions(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.letters.iter().map(|l| l.target(q)));
        out
    }

    /// The subword of letters `from..to`, as a walk starting at position `from`.
    pub fn slice(&self, q: &Quiver, from: usize, to: usize) -> Self {
        StringWord {
            start: self.positions(q)[from],
            letters: self.letters[from..to].to_vec(),
        }
    }

    /// The word with one more letter at the end, unchecked.
    pub fn appended(&self, l: Letter) -> Self {
        self.push(l)
    }

    fn push(&self, l: Letter) -> Self {
        let mut letters = self.letters.clone();
        letters.push(l);
        StringWord {
            start: self.start,
            letters,
        }
    }
}

/// Directed runs of a word, each as an arrow sequence in path order.
fn directed_runs(word: &StringWord) -> Vec<Vec<usize>> {
    let mut runs = Vec::new();
    let mut i = 0;
    let ls = &word.letters;
    while i < ls.len() {
        let inv = ls[i].inverse;
        let mut j = i;
        while j < ls.len() && ls[j].inverse == inv {
            j += 1;
        }
        let mut run: Vec<usize> = ls[i..j].iter().map(|l| l.arrow).collect();
        if inv {
            run.reverse();
        }
        runs.push(run);
        i = j;
    }
    runs
}

/// Whether the word is a string: no letter next to its own inverse, and no
/// directed subword of it or its inverse zero in `Λ/soc(Λ)`.
pub fn is_string(algebra: &Algebra, word: &StringWord) -> bool {
    let q = algebra.quiver();
    if word.start >= q.vertex_count() {
        return false;
    }
    if word.letters.iter().any(|l| l.arrow >= q.arrows().len()) {
        return false;
    }
    for w in word.letters.windows(2) {
        if w[0].target(q) != w[1].source(q) || w[0] == w[1].inverted() {
            return false;
        }
    }
    if word.letters.first().is_some_and(|l| l.source(q) != word.start) {
        return false;
    }
    directed_runs(word)
        .iter()
        .all(|run| !algebra.in_socle_quotient_ideal(run))
}

/// Letters that can be appended to a string keeping it a string.
fn right_extensions(algebra: &Algebra, word: &StringWord) -> Vec<Letter> {
    let q = algebra.quiver();
    let t = word.target(q);
    let mut out = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        for l in [Letter::forward(a), Letter::inverse(a)] {
            let ok = if l.inverse {
                arrow.target == t
            } else {
                arrow.source == t
            };
            if ok && is_string(algebra, &word.push(l)) {
                out.push(l);
            }
        }
    }
    out
}

/// All strings of length at most `length_cap`, one canonical representative
/// per class, sorted.
pub fn enumerate_strings(algebra: &Algebra, length_cap: usize) -> Result<Vec<StringWord>> {
    let q = algebra.quiver();
    let mut layer: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::empty).collect();
    let mut all = layer.clone();
    for _ in 0..length_cap {
        let next: Vec<StringWord> = layer
            .iter()
            .flat_map(|w| {
                right_extensions(algebra, w)
                    .into_iter()
                    .map(move |l| w.push(l))
            })
            .collect();
        all.extend(next.iter().cloned());
        layer = next;
    }
    if layer.iter().any(|w| !right_extensions(algebra, w).is_empty()) {
        return Err(Error::CapTooSmall { cap: length_cap });
    }
    let mut reps: Vec<StringWord> = all.iter().map(|w| w.canonical(q)).collect();
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// Module of a walk, without checking that the walk is a string.
pub fn walk_module(algebra: &Arc<Algebra>, word: &StringWord) -> Result<Representation> {
    let q = algebra.quiver();
    let pos = word.positions(q);
    let mut dims = vec![0; q.vertex_count()];
    let local: Vec<usize> = pos
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut mats: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.source], dims[a.target]))
        .collect();
    for (k, l) in word.letters.iter().enumerate() {
        let (from, to) = if l.inverse { (k + 1, k) } else { (k, k + 1) };
        mats[l.arrow][(local[from], local[to])] = 1;
    }
    Representation::new(algebra.clone(), dims, mats)
}

/// The string module `M[C]`.
pub fn string_module(algebra: &Arc<Algebra>, word: &StringWord) -> Result<Representation> {
    if !is_string(algebra, word) {
        return Err(Error::NotAString(word.display(algebra.quiver())));
    }
    walk_module(algebra, word)
}

/// Directed strings `D` such that no `αD` is a string.
pub fn maximal_directed_strings(algebra: &Algebra) -> Vec<StringWord> {
    let q = algebra.quiver();
    let cap = algebra.loewy_bound() + 1;
    let mut out = Vec::new();
    let mut layer: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::empty).collect();
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &layer {
            for l in right_extensions(algebra, w) {
                if !l.inverse {
                    next.push(w.push(l));
                }
            }
        }
        for d in &next {
            let extendable = right_extensions(algebra, &d.inverse(q))
                .iter()
                .any(|l| l.inverse);
            if !extendable {
                out.push(d.clone());
            }
        }
        layer = next;
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Move {
    Hook,
    Cohook,
}

/// One letter of the requested kind to append; at an empty word with two
/// candidates the right side takes the first and the left side the second.
fn pick(algebra: &Algebra, word: &StringWord, inverse: bool, second: bool) -> Result<Option<Letter>> {
    let cands: Vec<Letter> = right_extensions(algebra, word)
        .into_iter()
        .filter(|l| l.inverse == inverse)
        .collect();
    match cands.len() {
        0 => Ok(None),
        1 => Ok(Some(cands[0])),
        2 if word.is_empty() => Ok(Some(cands[usize::from(second)])),
        _ => Err(Error::NotSpecialBiserial),
    }
}

fn extend_right(algebra: &Algebra, word: &StringWord, mv: Move, second: bool) -> Result<StringWord> {
    let first_inverse = mv == Move::Hook;
    let Some(l) = pick(algebra, word, first_inverse, second)? else {
        return Err(match mv {
            Move::Hook => Error::OnPeak,
            Move::Cohook => Error::InDeep,
        });
    };
    let mut out = word.push(l);
    for _ in 0..=algebra.loewy_bound() {
        match pick(algebra, &out, !first_inverse, false)? {
            Some(l) => out = out.push(l),
            None => return Ok(out),
        }
    }
    Err(Error::NotSpecialBiserial)
}

fn extend(algebra: &Algebra, word: &StringWord, side: Side, mv: Move) -> Result<StringWord> {
    let q = algebra.quiver();
    if !is_string(algebra, word) {
        return Err(Error::NotAString(word.display(q)));
    }
    match side {
        Side::Right => extend_right(algebra, word, mv, false),
        Side::Left => Ok(extend_right(algebra, &word.inverse(q), mv, true)?.inverse(q)),
    }
}

/// Adds a hook: `Cα⁻¹E` on the right, `E⁻¹αC` on the left. `M[C]` embeds
/// in the result.
pub fn add_hook(algebra: &Algebra, word: &StringWord, side: Side) -> Result<StringWord> {
    extend(algebra, word, side, Move::Hook)
}

/// Adds a co-hook: `CαE⁻¹` on the right, `Eα⁻¹C` on the left. The result
/// maps onto `M[C]`.
pub fn add_cohook(algebra: &Algebra, word: &StringWord, side: Side) -> Result<StringWord> {
    extend(algebra, word, side, Move::Cohook)
}

/// A named module in one of the families, e.g. `V2`, `M3`, `U0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringName {
    pub series: char,
    pub index: usize,
}

impl StringName {
    pub fn new(series: char, index: usize) -> Self {
        StringName { series, index }
    }
}

impl fmt::Display for StringName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.index)
    }
}

impl FromStr for StringName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .filter(|c| "VMNUXY".contains(*c))
            .ok_or_else(|| Error::Parse(format!("`{s}` is not a module name")))?;
        let rest = chars.as_str().trim_start_matches('_');
        let index = rest
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not a module name")))?;
        Ok(StringName { series, index })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::quiver::{ae1, ae2, ae3};

    fn word(alg: &Algebra, s: &str) -> StringWord {
        StringWord::parse(alg.quiver(), s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = ae3(3, Fp::default()).unwrap();
        for s in ["e0", "e1", "r~,r~,a", "b,r~", "a"] {
            assert_eq!(word(&a, s).display(a.quiver()), s);
        }
        assert_eq!(word(&a, "r~ r~  a").display(a.quiver()), "r~,r~,a");
        assert!(matches!(
            StringWord::parse(a.quiver(), "z"),
            Err(Error::UnknownArrow(_))
        ));
        assert!(StringWord::parse(a.quiver(), "a,a").is_err());
    }

    #[test]
    fn validity() {
        let a2 = ae2(2, Fp::default()).unwrap();
        assert!(is_string(&a2, &word(&a2, "a,b,a")));
        assert!(!is_string(&a2, &word(&a2, "a,b,a,b")));
        assert!(!is_string(&a2, &word(&a2, "a,a~")));
        let a3 = ae3(3, Fp::default()).unwrap();
        assert!(!is_string(&a3, &word(&a3, "b,r")));
        assert!(is_string(&a3, &word(&a3, "b,r~,r~,a")));
        assert!(!is_string(&a3, &word(&a3, "r~,r~,r~")));
    }

    #[test]
    fn counts() {
        let f = Fp::default();
        for m in 1..6 {
            let a = ae1(m, f).unwrap();
            assert_eq!(enumerate_strings(&a, m + 2).unwrap().len(), m);
            let a = ae2(m, f).unwrap();
            assert_eq!(enumerate_strings(&a, 2 * m + 2).unwrap().len(), 4 * m);
        }
        for m in 2..6 {
            let a = ae3(m, f).unwrap();
            assert_eq!(enumerate_strings(&a, m + 3).unwrap().len(), 4 * m);
        }
        let a = ae1(5, f).unwrap();
        assert!(matches!(
            enumerate_strings(&a, 2),
            Err(Error::CapTooSmall { cap: 2 })
        ));
    }

    #[test]
    fn module_shapes() {
        let a2 = Arc::new(ae2(2, Fp::default()).unwrap());
        let m = string_module(&a2, &word(&a2, "a,b")).unwrap();
        assert_eq!(m.dims(), &[2, 1]);
        let a3 = Arc::new(ae3(2, Fp::default()).unwrap());
        let m = string_module(&a3, &word(&a3, "b")).unwrap();
        assert_eq!(m.top_dims(), vec![0, 1]);
        assert_eq!(m.socle_dims(), vec![1, 0]);
        assert!(matches!(
            string_module(&a3, &word(&a3, "b,r")),
            Err(Error::NotAString(_))
        ));
    }

    #[test]
    fn maximal_directed() {
        let f = Fp::default();
        let a = ae1(4, f).unwrap();
        let ds = maximal_directed_strings(&a);
        assert_eq!(ds, vec![word(&a, "a,a,a")]);
        let a = ae2(2, f).unwrap();
        let ds = maximal_directed_strings(&a);
        assert_eq!(ds, vec![word(&a, "a,b,a"), word(&a, "b,a,b")]);
        let a = ae3(3, f).unwrap();
        assert!(maximal_directed_strings(&a).contains(&word(&a, "r,r")));
    }

    #[test]
    fn hooks_on_the_tube() {
        let a = ae1(4, Fp::default()).unwrap();
        let q = a.quiver();
        let v1 = word(&a, "a");
        assert_eq!(add_hook(&a, &v1, Side::Left).unwrap().canonical(q), word(&a, "a,a"));
        assert!(matches!(add_hook(&a, &v1, Side::Right), Err(Error::OnPeak)));
        assert_eq!(add_cohook(&a, &v1, Side::Right).unwrap(), word(&a, "a,a"));
        assert!(matches!(add_cohook(&a, &v1, Side::Left), Err(Error::InDeep)));
    }

    #[test]
    fn name_parsing() {
        assert_eq!("V2".parse::<StringName>().unwrap(), StringName::new('V', 2));
        assert_eq!("U_0".parse::<StringName>().unwrap().to_string(), "U0");
        assert!("Q1".parse::<StringName>().is_err());
        assert!("V".parse::<StringName>().is_err());
    }
}
