//! Finite topologies, ideals, scope functions, and the combined space type.
//!
//! Constructors validate the full axiom set and report every violation with a
//! witness, not just the first one found, so callers can surface a complete
//! diagnosis of a bad input file in one pass.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::set::{PointSet, SetFamily, Universe};

/// Which component of a space an axiom violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Topology,
    Ideal,
    Scope,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Topology => write!(f, "topology"),
            Component::Ideal => write!(f, "ideal"),
            Component::Scope => write!(f, "scope"),
        }
    }
}

/// One violated axiom, with the witnessing sets or points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    MissingEmpty { component: Component },
    MissingFull,
    NotUnionClosed { component: Component, a: PointSet, b: PointSet },
    NotIntersectionClosed { a: PointSet, b: PointSet },
    NotHereditary { member: PointSet, subset: PointSet },
    OutOfUniverse { component: Component, set: PointSet },
    ScopeMissingSelf { point: usize },
    ScopeValueNotOpen { point: usize, value: PointSet },
    ScopeWrongLength { expected: usize, got: usize },
    UniverseMismatch { component: Component },
}

impl AxiomViolation {
    /// Human-readable rendering with point names resolved against `u`.
    pub fn describe(&self, u: &Universe) -> String {
        let set = |s: PointSet| u.format_set(s);
        match self {
            AxiomViolation::MissingEmpty { component } => {
                format!("{component}: the empty set is missing")
            }
            AxiomViolation::MissingFull => "topology: the full set is missing".to_string(),
            AxiomViolation::NotUnionClosed { component, a, b } => format!(
                "{component}: not closed under union, {} \u{222a} {} = {} is missing",
                set(*a),
                set(*b),
                set(*a | *b)
            ),
            AxiomViolation::NotIntersectionClosed { a, b } => format!(
                "topology: not closed under intersection, {} \u{2229} {} = {} is missing",
                set(*a),
                set(*b),
                set(*a & *b)
            ),
            AxiomViolation::NotHereditary { member, subset } => format!(
                "ideal: not hereditary, {} is a member but its subset {} is not",
                set(*member),
                set(*subset)
            ),
            AxiomViolation::OutOfUniverse { component, set: s } => {
                format!("{component}: set {:?} has bits outside the universe", s)
            }
            AxiomViolation::ScopeMissingSelf { point } => format!(
                "scope: {} is not a member of its own scope set",
                u.name(*point)
            ),
            AxiomViolation::ScopeValueNotOpen { point, value } => format!(
                "scope: value {} at {} is not an open set",
                set(*value),
                u.name(*point)
            ),
            AxiomViolation::ScopeWrongLength { expected, got } => {
                format!("scope: expected {expected} values, got {got}")
            }
            AxiomViolation::UniverseMismatch { component } => {
                format!("{component}: built over a different universe")
            }
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingEmpty { component } => {
                write!(f, "{component}: missing empty set")
            }
            AxiomViolation::MissingFull => write!(f, "topology: missing full set"),
            AxiomViolation::NotUnionClosed { component, a, b } => {
                write!(f, "{component}: union of {a:?} and {b:?} missing")
            }
            AxiomViolation::NotIntersectionClosed { a, b } => {
                write!(f, "topology: intersection of {a:?} and {b:?} missing")
            }
            AxiomViolation::NotHereditary { member, subset } => {
                write!(f, "ideal: member {member:?} lacks subset {subset:?}")
            }
            AxiomViolation::OutOfUniverse { component, set } => {
                write!(f, "{component}: set {set:?} outside universe")
            }
            AxiomViolation::ScopeMissingSelf { point } => {
                write!(f, "scope: point {point} not in its own value")
            }
            AxiomViolation::ScopeValueNotOpen { point, value } => {
                write!(f, "scope: value {value:?} at point {point} not open")
            }
            AxiomViolation::ScopeWrongLength { expected, got } => {
                write!(f, "scope: expected {expected} values, got {got}")
            }
            AxiomViolation::UniverseMismatch { component } => {
                write!(f, "{component}: universe mismatch")
            }
        }
    }
}

/// Validation failure carrying the complete list of violated axioms.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub struct ValidationError {
    pub violations: Vec<AxiomViolation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} axiom violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown point index {0}")]
pub struct UnknownPoint(pub usize);

fn family_violations(
    u: &Universe,
    family: &SetFamily,
    component: Component,
) -> Vec<AxiomViolation> {
    family
        .iter()
        .filter(|s| !u.contains_set(*s))
        .map(|set| AxiomViolation::OutOfUniverse { component, set })
        .collect()
}

pub(crate) fn topology_violations(u: &Universe, opens: &SetFamily) -> Vec<AxiomViolation> {
    let mut v = family_violations(u, opens, Component::Topology);
    if !opens.contains(PointSet::EMPTY) {
        v.push(AxiomViolation::MissingEmpty {
            component: Component::Topology,
        });
    }
    if !opens.contains(u.full()) {
        v.push(AxiomViolation::MissingFull);
    }
    let present: HashSet<u32> = opens.iter().map(|s| s.bits()).collect();
    let members = opens.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !present.contains(&(a | b).bits()) {
                v.push(AxiomViolation::NotUnionClosed {
                    component: Component::Topology,
                    a,
                    b,
                });
            }
            if !present.contains(&(a & b).bits()) {
                v.push(AxiomViolation::NotIntersectionClosed { a, b });
            }
        }
    }
    v
}

pub(crate) fn ideal_violations(u: &Universe, members: &SetFamily) -> Vec<AxiomViolation> {
    let mut v = family_violations(u, members, Component::Ideal);
    if !members.contains(PointSet::EMPTY) {
        v.push(AxiomViolation::MissingEmpty {
            component: Component::Ideal,
        });
    }
    // One-point deletions suffice as hereditary witnesses: if every member
    // keeps all its immediate subsets in the family, induction on cardinality
    // gives full downward closure.
    for a in members.iter() {
        for x in a.iter() {
            let sub = a.without(x);
            if !members.contains(sub) {
                v.push(AxiomViolation::NotHereditary {
                    member: a,
                    subset: sub,
                });
            }
        }
    }
    let present: HashSet<u32> = members.iter().map(|s| s.bits()).collect();
    let ms = members.members();
    for (i, &a) in ms.iter().enumerate() {
        for &b in &ms[i + 1..] {
            if !present.contains(&(a | b).bits()) {
                v.push(AxiomViolation::NotUnionClosed {
                    component: Component::Ideal,
                    a,
                    b,
                });
            }
        }
    }
    v
}

pub(crate) fn scope_violations(
    u: &Universe,
    aura: &[PointSet],
    opens: &SetFamily,
) -> Vec<AxiomViolation> {
    if aura.len() != u.n() {
        return vec![AxiomViolation::ScopeWrongLength {
            expected: u.n(),
            got: aura.len(),
        }];
    }
    let mut v = Vec::new();
    for (x, &value) in aura.iter().enumerate() {
        if !value.contains(x) {
            v.push(AxiomViolation::ScopeMissingSelf { point: x });
        }
        if !opens.contains(value) {
            v.push(AxiomViolation::ScopeValueNotOpen { point: x, value });
        }
    }
    v
}

fn check(violations: Vec<AxiomViolation>) -> Result<(), ValidationError> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationError { violations })
    }
}

/// Topology on a finite universe, stored extensionally.
///
/// Construction validates the axioms (empty and full present, closed under
/// pairwise union and intersection; on a finite universe pairwise closure
/// gives arbitrary unions) and precomputes each point's minimal open
/// neighborhood, the intersection of all opens containing it. Validation is
/// quadratic in the family size; this crate targets small exploratory spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    universe: Universe,
    opens: SetFamily,
    min_nbhd: Vec<PointSet>,
}

impl FiniteTopology {
    pub fn new(universe: Universe, opens: SetFamily) -> Result<Self, ValidationError> {
        check(topology_violations(&universe, &opens))?;
        Ok(Self::new_validated(universe, opens))
    }

    /// Builds without re-running validation. Callers must guarantee the axioms.
    pub(crate) fn new_validated(universe: Universe, opens: SetFamily) -> Self {
        let min_nbhd = (0..universe.n())
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(universe.full(), |acc, o| acc & o)
            })
            .collect();
        FiniteTopology {
            universe,
            opens,
            min_nbhd,
        }
    }

    pub fn discrete(universe: Universe) -> Self {
        let opens = universe.subsets().collect();
        Self::new_validated(universe, opens)
    }

    pub fn indiscrete(universe: Universe) -> Self {
        let opens = SetFamily::new(vec![PointSet::EMPTY, universe.full()]);
        Self::new_validated(universe, opens)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.opens.contains(s)
    }

    /// Minimal open neighborhood of point `x` (well-defined on finite spaces).
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    /// All opens containing `x`.
    pub fn neighborhoods(&self, x: usize) -> Result<SetFamily, UnknownPoint> {
        if x >= self.universe.n() {
            return Err(UnknownPoint(x));
        }
        Ok(self.opens.iter().filter(|o| o.contains(x)).collect())
    }

    /// Standard closure: x lies in cl(A) iff every open neighborhood of x
    /// meets A, equivalently iff the minimal one does.
    pub fn closure(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for x in 0..self.universe.n() {
            if self.min_nbhd[x].intersects(a) {
                out = out.with(x);
            }
        }
        out
    }

    /// Standard interior, dual to `closure`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for x in 0..self.universe.n() {
            if self.min_nbhd[x].is_subset_of(a) {
                out = out.with(x);
            }
        }
        out
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> SetFamily {
        let full = self.universe.full();
        self.opens.iter().map(|o| o.complement_in(full)).collect()
    }
}

/// Ideal on a finite universe: nonempty, hereditary, closed under pairwise
/// union. On a finite universe such a family is exactly the powerset of its
/// largest member, which makes membership a single mask test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    universe: Universe,
    members: SetFamily,
    max: PointSet,
}

impl Ideal {
    pub fn new(universe: Universe, members: SetFamily) -> Result<Self, ValidationError> {
        check(ideal_violations(&universe, &members))?;
        Ok(Self::new_validated(universe, members))
    }

    pub(crate) fn new_validated(universe: Universe, members: SetFamily) -> Self {
        let max = members.union_all();
        Ideal {
            universe,
            members,
            max,
        }
    }

    /// Smallest ideal containing every generator: all subsets of the union of
    /// the generators.
    pub fn from_generators(universe: Universe, gens: &SetFamily) -> Self {
        let max = gens.union_all();
        Self::powerset_of(universe, max)
    }

    /// The ideal `P(m)`, every subset of `m`.
    pub fn powerset_of(universe: Universe, m: PointSet) -> Self {
        let members = universe.subsets().filter(|s| s.is_subset_of(m)).collect();
        Ideal {
            universe,
            members,
            max: m,
        }
    }

    /// `{∅}`.
    pub fn trivial(universe: Universe) -> Self {
        Self::powerset_of(universe, PointSet::EMPTY)
    }

    /// The improper ideal, all of `P(X)`.
    pub fn improper(universe: Universe) -> Self {
        let m = universe.full();
        Self::powerset_of(universe, m)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    /// Union of all members; membership is `s ⊆ max`.
    pub fn max(&self) -> PointSet {
        self.max
    }

    pub fn contains(&self, s: PointSet) -> bool {
        s.is_subset_of(self.max)
    }

    pub fn is_trivial(&self) -> bool {
        self.max.is_empty()
    }

    pub fn is_improper(&self) -> bool {
        self.max == self.universe.full()
    }
}

/// Scope assignment: every point carries one fixed open set containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScopeFunction {
    universe: Universe,
    aura: Vec<PointSet>,
}

impl ScopeFunction {
    pub fn new(
        universe: Universe,
        aura: Vec<PointSet>,
        topology: &FiniteTopology,
    ) -> Result<Self, ValidationError> {
        check(scope_violations(&universe, &aura, topology.opens()))?;
        Ok(ScopeFunction { universe, aura })
    }

    pub(crate) fn new_validated(universe: Universe, aura: Vec<PointSet>) -> Self {
        ScopeFunction { universe, aura }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The scope set of point `x`.
    pub fn value(&self, x: usize) -> PointSet {
        self.aura[x]
    }

    pub fn values(&self) -> &[PointSet] {
        &self.aura
    }

    /// Transitivity: y in a(x) forces a(y) ⊆ a(x).
    pub fn is_transitive(&self) -> bool {
        let n = self.universe.n();
        (0..n).all(|x| {
            self.aura[x]
                .iter()
                .take_while(|y| *y < n)
                .all(|y| self.aura[y].is_subset_of(self.aura[x]))
        })
    }
}

/// A finite topology plus an ideal and a scope function over one universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealAuraSpace {
    topology: FiniteTopology,
    ideal: Ideal,
    scope: ScopeFunction,
}

impl IdealAuraSpace {
    pub fn new(
        topology: FiniteTopology,
        ideal: Ideal,
        scope: ScopeFunction,
    ) -> Result<Self, ValidationError> {
        let mut v = Vec::new();
        if ideal.universe() != topology.universe() {
            v.push(AxiomViolation::UniverseMismatch {
                component: Component::Ideal,
            });
        }
        if scope.universe() != topology.universe() {
            v.push(AxiomViolation::UniverseMismatch {
                component: Component::Scope,
            });
        }
        check(v)?;
        Ok(IdealAuraSpace {
            topology,
            ideal,
            scope,
        })
    }

    /// Validates all three components in one pass and reports every violation
    /// across them, then constructs the space.
    pub fn build(
        universe: Universe,
        opens: SetFamily,
        ideal_members: SetFamily,
        aura: Vec<PointSet>,
    ) -> Result<Self, ValidationError> {
        let mut v = topology_violations(&universe, &opens);
        v.extend(ideal_violations(&universe, &ideal_members));
        v.extend(scope_violations(&universe, &aura, &opens));
        check(v)?;
        Ok(IdealAuraSpace {
            topology: FiniteTopology::new_validated(universe.clone(), opens),
            ideal: Ideal::new_validated(universe.clone(), ideal_members),
            scope: ScopeFunction::new_validated(universe, aura),
        })
    }

    pub fn universe(&self) -> &Universe {
        self.topology.universe()
    }

    pub fn n(&self) -> usize {
        self.universe().n()
    }

    pub fn full(&self) -> PointSet {
        self.universe().full()
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn scope(&self) -> &ScopeFunction {
        &self.scope
    }

    pub fn is_transitive(&self) -> bool {
        self.scope.is_transitive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::alphabetic(3).unwrap()
    }

    fn fam(bits: &[u32]) -> SetFamily {
        bits.iter().copied().map(PointSet::from_bits).collect()
    }

    #[test]
    fn accepts_valid_topology() {
        // {∅,{a},{b},{a,b},X} over three points
        let t = FiniteTopology::new(u3(), fam(&[0, 1, 2, 3, 7])).unwrap();
        assert_eq!(t.min_nbhd(0).bits(), 1);
        assert_eq!(t.min_nbhd(2).bits(), 7);
        assert_eq!(
            t.neighborhoods(2).unwrap().members(),
            &[PointSet::from_bits(7)]
        );
        assert!(t.neighborhoods(3).is_err());
    }

    #[test]
    fn reports_every_topology_violation() {
        // {∅,{a},{b}} misses X, {a}∪{b}
        let err = FiniteTopology::new(u3(), fam(&[0, 1, 2])).unwrap_err();
        assert!(err.violations.contains(&AxiomViolation::MissingFull));
        assert!(err.violations.contains(&AxiomViolation::NotUnionClosed {
            component: Component::Topology,
            a: PointSet::from_bits(1),
            b: PointSet::from_bits(2),
        }));
        assert_eq!(err.violations.len(), 2);
    }

    #[test]
    fn reports_missing_intersection() {
        // {∅,{a,b},{b,c},X}: {a,b} ∩ {b,c} = {b} missing
        let err = FiniteTopology::new(u3(), fam(&[0, 3, 6, 7])).unwrap_err();
        assert_eq!(
            err.violations,
            vec![AxiomViolation::NotIntersectionClosed {
                a: PointSet::from_bits(3),
                b: PointSet::from_bits(6),
            }]
        );
    }

    #[test]
    fn rejects_out_of_universe_sets() {
        let err = FiniteTopology::new(u3(), fam(&[0, 8, 7])).unwrap_err();
        assert!(err.violations.iter().any(|v| matches!(
            v,
            AxiomViolation::OutOfUniverse {
                component: Component::Topology,
                ..
            }
        )));
    }

    #[test]
    fn classical_operators_match_hand_computation() {
        // τ' = {∅,{a},{b,c},{a,b,c},X} over four points: cl({b}) = {b,c,d}
        let u = Universe::alphabetic(4).unwrap();
        let t = FiniteTopology::new(u, fam(&[0, 1, 6, 7, 15])).unwrap();
        assert_eq!(t.closure(PointSet::from_bits(0b0010)).bits(), 0b1110);
        assert_eq!(
            t.closed_sets(),
            fam(&[0b0000, 0b1000, 0b1001, 0b1110, 0b1111])
        );
        assert_eq!(t.interior(PointSet::from_bits(0b0111)).bits(), 0b0111);
        assert_eq!(t.interior(PointSet::from_bits(0b1110)).bits(), 0b0110);
        assert_eq!(t.closure(PointSet::EMPTY), PointSet::EMPTY);
    }

    #[test]
    fn interior_closure_duality_holds_on_discrete() {
        let t = FiniteTopology::discrete(u3());
        for a in t.universe().subsets() {
            assert_eq!(t.closure(a), a);
            assert_eq!(t.interior(a), a);
        }
    }

    #[test]
    fn accepts_valid_ideal_and_derives_max() {
        let i = Ideal::new(u3(), fam(&[0, 4])).unwrap();
        assert_eq!(i.max().bits(), 4);
        assert!(i.contains(PointSet::from_bits(4)));
        assert!(!i.contains(PointSet::from_bits(1)));
    }

    #[test]
    fn reports_every_ideal_violation() {
        // {∅,{a,b}} is not hereditary: both one-point deletions are missing
        let err = Ideal::new(u3(), fam(&[0, 3])).unwrap_err();
        assert_eq!(
            err.violations,
            vec![
                AxiomViolation::NotHereditary {
                    member: PointSet::from_bits(3),
                    subset: PointSet::from_bits(2),
                },
                AxiomViolation::NotHereditary {
                    member: PointSet::from_bits(3),
                    subset: PointSet::from_bits(1),
                },
            ]
        );
        // {∅,{a},{b}} misses the union
        let err = Ideal::new(u3(), fam(&[0, 1, 2])).unwrap_err();
        assert_eq!(
            err.violations,
            vec![AxiomViolation::NotUnionClosed {
                component: Component::Ideal,
                a: PointSet::from_bits(1),
                b: PointSet::from_bits(2),
            }]
        );
        let err = Ideal::new(u3(), SetFamily::empty()).unwrap_err();
        assert_eq!(
            err.violations,
            vec![AxiomViolation::MissingEmpty {
                component: Component::Ideal,
            }]
        );
    }

    #[test]
    fn generators_close_downward_and_under_union() {
        let u = Universe::alphabetic(5).unwrap();
        let gens = fam(&[0b00010, 0b01000]);
        let i = Ideal::from_generators(u, &gens);
        assert_eq!(i.members(), &fam(&[0, 0b00010, 0b01000, 0b01010]));
        let u = u3();
        assert_eq!(
            Ideal::from_generators(u.clone(), &fam(&[4])).members(),
            &fam(&[0, 4])
        );
        assert_eq!(
            Ideal::from_generators(u.clone(), &SetFamily::empty()).members(),
            &fam(&[0])
        );
        assert!(Ideal::new(u, Ideal::improper(u3()).members().clone()).is_ok());
    }

    #[test]
    fn scope_validation_catches_both_axioms() {
        let t = FiniteTopology::new(u3(), fam(&[0, 1, 2, 3, 7])).unwrap();
        let err = ScopeFunction::new(
            u3(),
            vec![
                PointSet::from_bits(2), // a not in {b}
                PointSet::from_bits(6), // {b,c} not open
                PointSet::from_bits(7),
            ],
            &t,
        )
        .unwrap_err();
        assert!(err
            .violations
            .contains(&AxiomViolation::ScopeMissingSelf { point: 0 }));
        assert!(err.violations.contains(&AxiomViolation::ScopeValueNotOpen {
            point: 1,
            value: PointSet::from_bits(6),
        }));
        assert!(ScopeFunction::new(
            u3(),
            vec![PointSet::from_bits(1); 2],
            &t
        )
        .is_err());
    }

    #[test]
    fn transitivity_detection() {
        let t = FiniteTopology::discrete(u3());
        let chain = ScopeFunction::new(
            u3(),
            vec![
                PointSet::from_bits(0b011),
                PointSet::from_bits(0b010),
                PointSet::from_bits(0b100),
            ],
            &t,
        )
        .unwrap();
        assert!(chain.is_transitive());
        let not = ScopeFunction::new(
            u3(),
            vec![
                PointSet::from_bits(0b011),
                PointSet::from_bits(0b110),
                PointSet::from_bits(0b100),
            ],
            &t,
        )
        .unwrap();
        assert!(!not.is_transitive());
    }

    #[test]
    fn build_collects_violations_across_components() {
        let err = IdealAuraSpace::build(
            u3(),
            fam(&[0, 1, 2]),          // topology: no X, no union
            fam(&[0, 3]),             // ideal: not hereditary (two witnesses)
            vec![PointSet::EMPTY; 3], // scope: self-membership and openness fail
        )
        .unwrap_err();
        assert!(err.violations.len() >= 2 + 2 + 3);
        let ok = IdealAuraSpace::build(
            u3(),
            fam(&[0, 1, 2, 3, 7]),
            fam(&[0, 4]),
            vec![
                PointSet::from_bits(1),
                PointSet::from_bits(3),
                PointSet::from_bits(7),
            ],
        );
        assert!(ok.is_ok());
    }
}
