//! Points, point sets, and families of point sets over a fixed finite universe.
//!
//! A universe is an ordered list of named points (at most [`MAX_POINTS`]).
//! Subsets are bitmasks with bit `i` standing for point `i`, so every set
//! operation is a couple of word ops and the numeric value of the mask gives
//! a canonical total order on subsets.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Hard cap on universe size so every subset fits comfortably in one word.
pub const MAX_POINTS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniverseError {
    #[error("universe must have between 1 and {MAX_POINTS} points, got {0}")]
    BadSize(usize),
    #[error("duplicate point name {0:?}")]
    DuplicateName(String),
    #[error("invalid point name {0:?} (must be nonempty, no whitespace, no '{{' '}}' ',')")]
    BadName(String),
}

/// Ordered universe of named points. Cloning is cheap; the name table is shared.
#[derive(Clone, Debug, Eq)]
pub struct Universe {
    names: Arc<Vec<String>>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl std::hash::Hash for Universe {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl Universe {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, UniverseError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > MAX_POINTS {
            return Err(UniverseError::BadSize(names.len()));
        }
        for name in &names {
            let bad = name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | ','));
            if bad {
                return Err(UniverseError::BadName(name.clone()));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(UniverseError::DuplicateName(name.clone()));
            }
        }
        Ok(Universe {
            names: Arc::new(names),
        })
    }

    /// Universe named `a, b, c, ...` for quick construction in tests and search.
    pub fn alphabetic(n: usize) -> Result<Self, UniverseError> {
        if n == 0 || n > MAX_POINTS {
            return Err(UniverseError::BadSize(n));
        }
        let names = (0..n)
            .map(|i| {
                if n <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("p{i}")
                }
            })
            .collect();
        Universe::new::<String>(names)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The whole universe as a set.
    pub fn full(&self) -> PointSet {
        PointSet::from_bits(((1u64 << self.n()) - 1) as u32)
    }

    pub fn contains_set(&self, s: PointSet) -> bool {
        s.is_subset_of(self.full())
    }

    /// All `2^n` subsets in canonical (numeric) order.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> {
        (0u32..(1u32 << self.n())).map(PointSet::from_bits)
    }

    pub fn set_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet, String> {
        let mut s = PointSet::EMPTY;
        for name in names {
            match self.index(name.as_ref()) {
                Some(i) => s = s.with(i),
                None => return Err(name.as_ref().to_string()),
            }
        }
        Ok(s)
    }

    /// Renders a set as `{a,c}` with members in point order; the empty set is `{}`.
    pub fn format_set(&self, s: PointSet) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for i in s.iter() {
            if !first {
                out.push(',');
            }
            out.push_str(self.name(i));
            first = false;
        }
        out.push('}');
        out
    }

    /// Parses a `{a,c}` expression. The empty set is written `{}`.
    pub fn parse_set(&self, expr: &str) -> Result<PointSet, SetExprError> {
        let trimmed = expr.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| SetExprError::BadSyntax(expr.to_string()))?;
        let mut s = PointSet::EMPTY;
        if inner.trim().is_empty() {
            return Ok(s);
        }
        for part in inner.split(',') {
            let name = part.trim();
            if name.is_empty() {
                return Err(SetExprError::BadSyntax(expr.to_string()));
            }
            let i = self
                .index(name)
                .ok_or_else(|| SetExprError::UnknownPoint(name.to_string()))?;
            s = s.with(i);
        }
        Ok(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetExprError {
    #[error("set expression {0:?} is not of the form {{a,b}}")]
    BadSyntax(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
}

/// Subset of a universe, stored as a bitmask. Bit `i` is point `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet {
    bits: u32,
}

impl PointSet {
    pub const EMPTY: PointSet = PointSet { bits: 0 };

    pub const fn from_bits(bits: u32) -> Self {
        PointSet { bits }
    }

    pub const fn bits(self) -> u32 {
        self.bits
    }

    pub const fn singleton(i: usize) -> Self {
        PointSet { bits: 1 << i }
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        PointSet {
            bits: self.bits | (1 << i),
        }
    }

    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        PointSet {
            bits: self.bits & !(1 << i),
        }
    }

    pub const fn contains(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub const fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub const fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub const fn is_subset_of(self, other: PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub const fn intersects(self, other: PointSet) -> bool {
        self.bits & other.bits != 0
    }

    /// Complement relative to `full` (the universe mask).
    #[must_use]
    pub const fn complement_in(self, full: PointSet) -> Self {
        PointSet {
            bits: full.bits & !self.bits,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.contains(*i))
    }
}

impl std::ops::BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet::from_bits(self.bits | rhs.bits)
    }
}

impl std::ops::BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet::from_bits(self.bits & rhs.bits)
    }
}

impl std::ops::Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet::from_bits(self.bits & !rhs.bits)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Family of subsets, kept sorted in canonical (numeric) order and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SetFamily {
    members: Vec<PointSet>,
}

impl SetFamily {
    pub fn new(mut members: Vec<PointSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { members }
    }

    pub fn empty() -> Self {
        SetFamily::default()
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|s| other.contains(*s))
    }

    /// Union of all members.
    pub fn union_all(&self) -> PointSet {
        self.members
            .iter()
            .fold(PointSet::EMPTY, |acc, s| acc | *s)
    }
}

impl FromIterator<PointSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = PointSet>>(iter: I) -> Self {
        SetFamily::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = PointSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, PointSet>>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_rejects_bad_input() {
        assert_eq!(
            Universe::new(Vec::<String>::new()).unwrap_err(),
            UniverseError::BadSize(0)
        );
        assert!(Universe::new(vec!["a", "a"]).is_err());
        assert!(Universe::new(vec!["a", "b c"]).is_err());
        assert!(Universe::new(vec!["a", ""]).is_err());
        assert!(Universe::new((0..25).map(|i| format!("p{i}")).collect::<Vec<_>>()).is_err());
        assert!(Universe::new(vec!["x0"; 1]).is_ok());
    }

    #[test]
    fn set_ops_are_bitwise() {
        let a = PointSet::singleton(0) | PointSet::singleton(2);
        let b = PointSet::singleton(2) | PointSet::singleton(3);
        assert_eq!((a & b), PointSet::singleton(2));
        assert_eq!((a | b).len(), 3);
        assert_eq!((a - b), PointSet::singleton(0));
        assert!(PointSet::EMPTY.is_subset_of(a));
        let full = PointSet::from_bits(0b1111);
        assert_eq!(a.complement_in(full), PointSet::from_bits(0b1010));
    }

    #[test]
    fn set_expressions_round_trip() {
        let u = Universe::alphabetic(4).unwrap();
        for s in u.subsets() {
            let text = u.format_set(s);
            assert_eq!(u.parse_set(&text).unwrap(), s);
        }
        assert_eq!(u.parse_set("{}").unwrap(), PointSet::EMPTY);
        assert_eq!(u.parse_set("{a,c}").unwrap(), PointSet::from_bits(0b101));
        assert_eq!(u.parse_set(" { a , c } ").unwrap(), PointSet::from_bits(0b101));
        assert!(matches!(
            u.parse_set("{z}"),
            Err(SetExprError::UnknownPoint(_))
        ));
        assert!(matches!(u.parse_set("a,c"), Err(SetExprError::BadSyntax(_))));
        assert!(matches!(u.parse_set("{a,}"), Err(SetExprError::BadSyntax(_))));
    }

    #[test]
    fn families_sort_and_dedup() {
        let f = SetFamily::new(vec![
            PointSet::from_bits(7),
            PointSet::from_bits(1),
            PointSet::from_bits(1),
            PointSet::EMPTY,
        ]);
        let bits: Vec<u32> = f.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0, 1, 7]);
        assert!(f.contains(PointSet::from_bits(7)));
        assert!(!f.contains(PointSet::from_bits(2)));
        assert_eq!(f.union_all().bits(), 7);
    }
}
