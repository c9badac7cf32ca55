//! The three families and their named modules.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homology::Representation;
use crate::linalg::Fp;
use crate::quiver::{ae1, ae2, ae3, Algebra};
use crate::strings::{string_module, Letter, StringName, StringWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ae1,
    Ae2,
    Ae3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Ae1, Family::Ae2, Family::Ae3];

    pub fn min_m(self) -> usize {
        match self {
            Family::Ae3 => 2,
            _ => 1,
        }
    }

    pub fn build(self, m: usize, field: Fp) -> Result<Algebra> {
        match self {
            Family::Ae1 => ae1(m, field),
            Family::Ae2 => ae2(m, field),
            Family::Ae3 => ae3(m, field),
        }
    }

    /// Series letters with their index ranges, in report order.
    pub fn series(self, m: usize) -> Vec<(char, std::ops::Range<usize>)> {
        match self {
            Family::Ae1 => vec![('V', 0..m)],
            Family::Ae2 => vec![('M', 0..2 * m), ('N', 0..2 * m)],
            Family::Ae3 => vec![('U', 0..m), ('V', 1..m + 1), ('X', 1..m + 1), ('Y', 1..m + 1)],
        }
    }

    pub fn names(self, m: usize) -> Vec<StringName> {
        self.series(m)
            .into_iter()
            .flat_map(|(c, r)| r.map(move |i| StringName::new(c, i)))
            .collect()
    }

    /// Longest string length, used as the enumeration cap.
    pub fn length_cap(self, m: usize) -> usize {
        match self {
            Family::Ae1 => m + 1,
            Family::Ae2 => 2 * m + 1,
            Family::Ae3 => m + 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ae1 => "ae1",
            Family::Ae2 => "ae2",
            Family::Ae3 => "ae3",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ae1" => Ok(Family::Ae1),
            "ae2" => Ok(Family::Ae2),
            "ae3" => Ok(Family::Ae3),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

fn word(start: usize, letters: Vec<Letter>) -> StringWord {
    let mut w = StringWord::empty(start);
    for l in letters {
        w = w.appended(l);
    }
    w
}

/// The named string of a family, in the orientation used by the
/// classification (`V_i = r^{-(m-i)}`, `X_i = r^{-(m-i)}a`, ...).
pub fn named_string(family: Family, m: usize, name: StringName) -> Result<StringWord> {
    let out_of_range = || Error::IndexOutOfRange {
        series: format!("{family} series {}", name.series),
        index: name.index,
    };
    let range = family
        .series(m)
        .into_iter()
        .find(|(c, _)| *c == name.series)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::Parse(format!("{family} has no series {}", name.series)))?;
    if !range.contains(&name.index) {
        return Err(out_of_range());
    }
    let j = name.index;
    let fwd = Letter::forward;
    Ok(match (family, name.series) {
        (Family::Ae1, _) => word(0, vec![fwd(0); j]),
        (Family::Ae2, 'M') => word(0, (0..j).map(|k| fwd(k % 2)).collect()),
        (Family::Ae2, _) => word(1, (0..j).map(|k| fwd((k + 1) % 2)).collect()),
        (Family::Ae3, series) => {
            let (r, a, b) = (0, 1, 2);
            let down = vec![Letter::inverse(r); m - j];
            match series {
                'U' if j == 0 => StringWord::empty(1),
                'U' => word(1, [vec![fwd(b)], down, vec![fwd(a)]].concat()),
                'V' => word(0, down),
                'X' => word(0, [down, vec![fwd(a)]].concat()),
                _ => word(1, [vec![fwd(b)], down].concat()),
            }
        }
    })
}

/// A family algebra together with its parameter.
#[derive(Clone, Debug)]
pub struct FamilyAlgebra {
    pub family: Family,
    pub m: usize,
    pub algebra: Arc<Algebra>,
}

impl FamilyAlgebra {
    pub fn new(family: Family, m: usize, field: Fp) -> Result<Self> {
        Ok(FamilyAlgebra {
            family,
            m,
            algebra: Arc::new(family.build(m, field)?),
        })
    }

    pub fn names(&self) -> Vec<StringName> {
        self.family.names(self.m)
    }

    pub fn string(&self, name: StringName) -> Result<StringWord> {
        named_string(self.family, self.m, name)
    }

    pub fn module(&self, name: StringName) -> Result<Representation> {
        string_module(&self.algebra, &self.string(name)?)
    }

    /// The name whose string is equivalent to `word`, if any.
    pub fn name_of(&self, word: &StringWord) -> Option<StringName> {
        let q = self.algebra.quiver();
        self.names()
            .into_iter()
            .find(|n| self.string(*n).is_ok_and(|w| w.equivalent(word, q)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::{enumerate_strings, is_string};

    #[test]
    fn named_strings_cover_all_strings() {
        let f = Fp::default();
        for family in Family::ALL {
            for m in family.min_m()..6 {
                let fa = FamilyAlgebra::new(family, m, f).unwrap();
                let q = fa.algebra.quiver();
                let all = enumerate_strings(&fa.algebra, family.length_cap(m)).unwrap();
                let mut named: Vec<StringWord> = fa
                    .names()
                    .into_iter()
                    .map(|n| {
                        let w = fa.string(n).unwrap();
                        assert!(is_string(&fa.algebra, &w), "{family} {m} {n}");
                        w.canonical(q)
                    })
                    .collect();
                named.sort();
                assert_eq!(named, all, "{family} m={m}");
            }
        }
    }

    #[test]
    fn examples() {
        let f = Fp::default();
        let a2 = FamilyAlgebra::new(Family::Ae2, 2, f).unwrap();
        let q = a2.algebra.quiver();
        assert_eq!(a2.string(StringName::new('M', 3)).unwrap().display(q), "a,b,a");
        let a3 = FamilyAlgebra::new(Family::Ae3, 3, f).unwrap();
        let q = a3.algebra.quiver();
        assert_eq!(a3.string(StringName::new('U', 0)).unwrap().display(q), "e1");
        assert_eq!(a3.string(StringName::new('X', 1)).unwrap().display(q), "r~,r~,a");
        let a1 = FamilyAlgebra::new(Family::Ae1, 3, f).unwrap();
        assert_eq!(a1.string(StringName::new('V', 0)).unwrap().display(a1.algebra.quiver()), "e0");
        assert!(matches!(
            a1.string(StringName::new('V', 3)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
