//! Exhaustive and seeded-random streams of spaces over small universes.
//!
//! Exhaustive order is fixed so "first witness" means the same thing on every
//! run: topologies ascending by their family bitmask, then ideal bounds
//! ascending, then scope functions as an odometer over each point's open
//! neighborhoods with the first point moving slowest. Random mode is fully
//! determined by its seed.

use std::collections::HashSet;

use crate::io::serialize_space;
use crate::rng::SeededRng;
use crate::set::{PointSet, SetFamily, Universe};
use crate::space::{FiniteTopology, Ideal, IdealAuraSpace, ScopeFunction};
use thiserror::Error;

/// All-topologies enumeration works by scanning every family of subsets, which
/// is only sane up to four points (`2^(2^4)` candidate families).
pub const MAX_ALL_TOPOLOGIES_POINTS: usize = 4;
/// Hard cap on enumerated/sampled universes (analysis tables pack subset
/// families into one word).
pub const MAX_ENUMERATION_POINTS: usize = 6;
/// Ceiling on random-mode draw budgets.
pub const MAX_RANDOM_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub enum TopologySource {
    /// Every topology on the universe (caps at [`MAX_ALL_TOPOLOGIES_POINTS`]).
    All,
    /// Only the discrete topology; scales to the full point cap.
    DiscreteOnly,
    /// One fixed, already-validated topology.
    Fixed(FiniteTopology),
}

#[derive(Clone, Debug)]
pub enum IdealSource {
    /// Every ideal on the universe. On a finite universe every ideal is the
    /// powerset of its largest member, so this coincides with
    /// [`IdealSource::PrincipalOnly`]; both names are kept so configs can say
    /// which reading they mean.
    All,
    PrincipalOnly,
    Fixed(Ideal),
}

#[derive(Clone, Copy, Debug)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64, budget: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    pub mode: SearchMode,
    pub topologies: TopologySource,
    pub ideals: IdealSource,
    /// When set, the stream is deduplicated up to point relabeling: a space is
    /// kept only in its canonical form (lexicographically minimal canonical
    /// serialization over all relabelings).
    pub canonicalize: bool,
}

impl SearchConfig {
    pub fn exhaustive(n: usize) -> Self {
        SearchConfig {
            n,
            mode: SearchMode::Exhaustive,
            topologies: TopologySource::All,
            ideals: IdealSource::All,
            canonicalize: false,
        }
    }

    pub fn random(n: usize, seed: u64, budget: u64) -> Self {
        SearchConfig {
            n,
            mode: SearchMode::Random { seed, budget },
            topologies: TopologySource::All,
            ideals: IdealSource::All,
            canonicalize: false,
        }
    }

    pub fn discrete_only(mut self) -> Self {
        self.topologies = TopologySource::DiscreteOnly;
        self
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("refusing the requested scale: {reason}")]
    ScaleRefused { reason: String },
    #[error("random budget {budget} is outside 1..={cap}")]
    BudgetExceeded { budget: u64, cap: u64 },
}

fn scale_refused(reason: impl Into<String>) -> SearchError {
    SearchError::ScaleRefused {
        reason: reason.into(),
    }
}

/// Is the family encoded by `mask` (bit `s` = subset `s`) a topology on a
/// universe with `size = 2^n` subsets? Checks ∅, X, and closure under binary
/// union and intersection, which on a finite carrier covers all of them.
pub(crate) fn is_topology_mask(mask: u64, size: usize) -> bool {
    let full = (size - 1) as u32;
    if mask & 1 == 0 || mask & (1u64 << full) == 0 {
        return false;
    }
    let members: Vec<u32> = (0..size as u32).filter(|s| mask >> s & 1 == 1).collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if mask >> (a | b) & 1 == 0 || mask >> (a & b) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Every topology on `u`, ascending by family bitmask.
pub fn all_topologies(u: &Universe) -> Result<Vec<FiniteTopology>, SearchError> {
    let n = u.n();
    if n > MAX_ALL_TOPOLOGIES_POINTS {
        return Err(scale_refused(format!(
            "all-topologies enumeration stops at {MAX_ALL_TOPOLOGIES_POINTS} points, got {n}"
        )));
    }
    let size = 1usize << n;
    let mut out = Vec::new();
    for mask in 0..(1u64 << size) {
        if is_topology_mask(mask, size) {
            let members = (0..size as u32)
                .filter(|s| mask >> s & 1 == 1)
                .map(PointSet::from_bits)
                .collect();
            out.push(FiniteTopology::new(u.clone(), SetFamily::new(members)).expect("checked"));
        }
    }
    Ok(out)
}

/// For each point, the open sets containing it, in canonical order. These are
/// the candidate scope values; their product is the scope-function space.
pub fn scope_choices(top: &FiniteTopology) -> Vec<Vec<PointSet>> {
    (0..top.universe().n())
        .map(|x| top.opens().iter().filter(|o| o.contains(x)).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn relabel_set(s: PointSet, perm: &[usize]) -> PointSet {
    s.iter().fold(PointSet::EMPTY, |acc, i| acc.with(perm[i]))
}

/// The same space with point `i` renamed to point `perm[i]` (names stay tied
/// to positions, so this permutes the structure under fixed names).
pub fn relabel(space: &IdealAuraSpace, perm: &[usize]) -> IdealAuraSpace {
    let u = space.universe().clone();
    let opens = SetFamily::new(
        space
            .topology()
            .opens()
            .iter()
            .map(|s| relabel_set(s, perm))
            .collect(),
    );
    let members = SetFamily::new(
        space
            .ideal()
            .members()
            .iter()
            .map(|s| relabel_set(s, perm))
            .collect(),
    );
    let mut aura = vec![PointSet::EMPTY; u.n()];
    for i in 0..u.n() {
        aura[perm[i]] = relabel_set(space.scope().value(i), perm);
    }
    IdealAuraSpace::build(u, opens, members, aura).expect("relabeling preserves the axioms")
}

/// The lexicographically smallest canonical serialization among all
/// relabelings of `space`, as a space. Predicates are label-free, so this is
/// the representative used for dedup.
pub fn canonical_form(space: &IdealAuraSpace) -> IdealAuraSpace {
    let mut best = space.clone();
    let mut best_text = serialize_space(space);
    for perm in permutations(space.n()) {
        let candidate = relabel(space, &perm);
        let text = serialize_space(&candidate);
        if text < best_text {
            best_text = text;
            best = candidate;
        }
    }
    best
}

pub fn is_canonical(space: &IdealAuraSpace) -> bool {
    let text = serialize_space(space);
    permutations(space.n())
        .into_iter()
        .all(|perm| serialize_space(&relabel(space, &perm)) >= text)
}

fn validate(config: &SearchConfig) -> Result<Universe, SearchError> {
    if config.n == 0 || config.n > MAX_ENUMERATION_POINTS {
        return Err(scale_refused(format!(
            "enumeration handles 1..={MAX_ENUMERATION_POINTS} points, got {}",
            config.n
        )));
    }
    if let SearchMode::Random { budget, .. } = config.mode {
        if budget == 0 || budget > MAX_RANDOM_BUDGET {
            return Err(SearchError::BudgetExceeded {
                budget,
                cap: MAX_RANDOM_BUDGET,
            });
        }
    }
    if matches!(config.mode, SearchMode::Exhaustive)
        && matches!(config.topologies, TopologySource::All)
        && config.n > MAX_ALL_TOPOLOGIES_POINTS
    {
        return Err(scale_refused(format!(
            "exhaustive all-topologies mode stops at {MAX_ALL_TOPOLOGIES_POINTS} points; \
             use the discrete-only or fixed topology source for {} points",
            config.n
        )));
    }
    let u = Universe::alphabetic(config.n).expect("n already range-checked");
    if let TopologySource::Fixed(t) = &config.topologies {
        assert_eq!(t.universe().n(), config.n, "fixed topology universe size");
    }
    if let IdealSource::Fixed(i) = &config.ideals {
        assert_eq!(i.universe().n(), config.n, "fixed ideal universe size");
    }
    Ok(u)
}

fn topology_pool(u: &Universe, source: &TopologySource) -> Result<Vec<FiniteTopology>, SearchError> {
    match source {
        TopologySource::All => all_topologies(u),
        TopologySource::DiscreteOnly => Ok(vec![FiniteTopology::discrete(u.clone())]),
        TopologySource::Fixed(t) => Ok(vec![FiniteTopology::new(
            u.clone(),
            t.opens().clone(),
        )
        .expect("already validated")]),
    }
}

fn ideal_pool(u: &Universe, source: &IdealSource) -> Vec<Ideal> {
    match source {
        IdealSource::All | IdealSource::PrincipalOnly => u
            .subsets()
            .map(|m| Ideal::powerset_of(u.clone(), m))
            .collect(),
        IdealSource::Fixed(i) => vec![Ideal::new(u.clone(), i.members().clone()).expect("valid")],
    }
}

enum StreamInner {
    Exhaustive(ExhaustiveStream),
    Random(RandomStream),
}

/// Iterator over spaces per one [`SearchConfig`].
pub struct SpaceStream {
    inner: StreamInner,
    canonicalize: bool,
    seen: HashSet<String>,
    /// Spaces drawn from the raw stream so far, before canonical dedup.
    drawn: u64,
}

impl SpaceStream {
    pub fn drawn(&self) -> u64 {
        self.drawn
    }
}

impl Iterator for SpaceStream {
    type Item = IdealAuraSpace;

    fn next(&mut self) -> Option<IdealAuraSpace> {
        loop {
            let space = match &mut self.inner {
                StreamInner::Exhaustive(s) => s.next()?,
                StreamInner::Random(s) => s.next()?,
            };
            self.drawn += 1;
            if !self.canonicalize {
                return Some(space);
            }
            match &self.inner {
                // Exhaustive order revisits every class at its canonical
                // member, so keeping exactly those is a full dedup.
                StreamInner::Exhaustive(_) => {
                    if is_canonical(&space) {
                        return Some(space);
                    }
                }
                // Random draws land anywhere in a class; map to the canonical
                // form and drop repeats.
                StreamInner::Random(_) => {
                    let canonical = canonical_form(&space);
                    if self.seen.insert(serialize_space(&canonical)) {
                        return Some(canonical);
                    }
                }
            }
        }
    }
}

struct ExhaustiveStream {
    universe: Universe,
    topologies: Vec<FiniteTopology>,
    ideals: Vec<Ideal>,
    topo_idx: usize,
    ideal_idx: usize,
    choices: Vec<Vec<PointSet>>,
    /// Odometer over `choices`; `None` once the current topology is spent.
    counter: Option<Vec<usize>>,
}

impl ExhaustiveStream {
    fn new(universe: Universe, topologies: Vec<FiniteTopology>, ideals: Vec<Ideal>) -> Self {
        let choices = topologies
            .first()
            .map(scope_choices)
            .unwrap_or_default();
        let counter = topologies
            .first()
            .map(|_| vec![0; universe.n()]);
        ExhaustiveStream {
            universe,
            topologies,
            ideals,
            topo_idx: 0,
            ideal_idx: 0,
            choices,
            counter,
        }
    }

    fn next(&mut self) -> Option<IdealAuraSpace> {
        let counter = self.counter.as_ref()?;
        let topology = &self.topologies[self.topo_idx];
        let ideal = &self.ideals[self.ideal_idx];
        let aura: Vec<PointSet> = counter
            .iter()
            .enumerate()
            .map(|(x, &i)| self.choices[x][i])
            .collect();
        let space = IdealAuraSpace::new(
            topology.clone(),
            ideal.clone(),
            ScopeFunction::new(self.universe.clone(), aura, topology).expect("choices are open"),
        )
        .expect("one universe");
        self.advance();
        Some(space)
    }

    /// Odometer: last point fastest, then ideals, then topologies.
    fn advance(&mut self) {
        let Some(counter) = self.counter.as_mut() else {
            return;
        };
        for x in (0..counter.len()).rev() {
            counter[x] += 1;
            if counter[x] < self.choices[x].len() {
                return;
            }
            counter[x] = 0;
        }
        self.ideal_idx += 1;
        if self.ideal_idx < self.ideals.len() {
            return;
        }
        self.ideal_idx = 0;
        self.topo_idx += 1;
        if self.topo_idx < self.topologies.len() {
            self.choices = scope_choices(&self.topologies[self.topo_idx]);
        } else {
            self.counter = None;
        }
    }
}

struct RandomStream {
    universe: Universe,
    rng: SeededRng,
    remaining: u64,
    fixed_topology: Option<FiniteTopology>,
    fixed_ideal: Option<Ideal>,
    discrete_only: bool,
}

impl RandomStream {
    /// A topology drawn as the closure of a few random generator sets: close
    /// under pairwise intersection, then under pairwise union, then add ∅ and X.
    fn random_topology(&mut self) -> FiniteTopology {
        let n = self.universe.n();
        let size = 1u64 << n;
        let full = (size - 1) as u32;
        let count = 1 + self.rng.below(n as u64 + 2) as usize;
        let mut mask: u64 = (1u64 << full) | 1;
        for _ in 0..count {
            mask |= 1u64 << self.rng.below(size) as u32;
        }
        loop {
            let before = mask;
            let members: Vec<u32> = (0..size as u32).filter(|s| mask >> s & 1 == 1).collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    mask |= 1u64 << (a & b);
                    mask |= 1u64 << (a | b);
                }
            }
            if mask == before {
                break;
            }
        }
        let members = (0..size as u32)
            .filter(|s| mask >> s & 1 == 1)
            .map(PointSet::from_bits)
            .collect();
        FiniteTopology::new(self.universe.clone(), SetFamily::new(members)).expect("closed family")
    }

    fn next(&mut self) -> Option<IdealAuraSpace> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let topology = if let Some(t) = &self.fixed_topology {
            t.clone()
        } else if self.discrete_only {
            FiniteTopology::discrete(self.universe.clone())
        } else {
            self.random_topology()
        };
        let ideal = if let Some(i) = &self.fixed_ideal {
            i.clone()
        } else {
            let max = PointSet::from_bits(self.rng.below(1u64 << self.universe.n()) as u32);
            Ideal::powerset_of(self.universe.clone(), max)
        };
        let aura: Vec<PointSet> = (0..self.universe.n())
            .map(|x| {
                let options: Vec<PointSet> = topology
                    .opens()
                    .iter()
                    .filter(|o| o.contains(x))
                    .collect();
                *self.rng.choose(&options)
            })
            .collect();
        let scope =
            ScopeFunction::new(self.universe.clone(), aura, &topology).expect("options are open");
        Some(IdealAuraSpace::new(topology, ideal, scope).expect("one universe"))
    }
}

/// The configured stream. Exhaustive streams yield every space in canonical
/// enumeration order; random streams draw exactly `budget` samples (fewer
/// spaces surface when canonical dedup is on).
pub fn enumerate_spaces(config: &SearchConfig) -> Result<SpaceStream, SearchError> {
    let universe = validate(config)?;
    let inner = match config.mode {
        SearchMode::Exhaustive => {
            let topologies = topology_pool(&universe, &config.topologies)?;
            let ideals = ideal_pool(&universe, &config.ideals);
            StreamInner::Exhaustive(ExhaustiveStream::new(universe, topologies, ideals))
        }
        SearchMode::Random { seed, budget } => StreamInner::Random(RandomStream {
            universe,
            rng: SeededRng::new(seed),
            remaining: budget,
            fixed_topology: match &config.topologies {
                TopologySource::Fixed(t) => Some(t.clone()),
                _ => None,
            },
            fixed_ideal: match &config.ideals {
                IdealSource::Fixed(i) => Some(i.clone()),
                _ => None,
            },
            discrete_only: matches!(config.topologies, TopologySource::DiscreteOnly),
        }),
    };
    Ok(SpaceStream {
        inner,
        canonicalize: config.canonicalize,
        seen: HashSet::new(),
        drawn: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(config: SearchConfig) -> usize {
        enumerate_spaces(&config).unwrap().count()
    }

    #[test]
    fn topology_counts_match_hand_enumeration_and_oracle() {
        for (n, expected) in [(1usize, 1usize), (2, 4), (3, 29)] {
            let u = Universe::alphabetic(n).unwrap();
            assert_eq!(all_topologies(&u).unwrap().len(), expected, "n={n}");
        }
    }

    #[test]
    fn four_point_topology_count() {
        let u = Universe::alphabetic(4).unwrap();
        assert_eq!(all_topologies(&u).unwrap().len(), 355);
    }

    #[test]
    fn subbasis_closures_reach_every_topology() {
        // Independent generation route: close every family of subsets of a
        // 3-point set under intersections and unions; the distinct results
        // must be exactly the topologies the axiom scan finds.
        let size = 1usize << 3;
        let mut distinct = HashSet::new();
        for family in 0u64..(1 << size) {
            let mut mask = family | 1 | (1 << (size - 1));
            loop {
                let before = mask;
                let members: Vec<u32> =
                    (0..size as u32).filter(|s| mask >> s & 1 == 1).collect();
                for (i, &a) in members.iter().enumerate() {
                    for &b in &members[i + 1..] {
                        mask |= 1u64 << (a & b);
                        mask |= 1u64 << (a | b);
                    }
                }
                if mask == before {
                    break;
                }
            }
            distinct.insert(mask);
        }
        assert_eq!(distinct.len(), 29);
    }

    #[test]
    fn space_counts_match_hand_enumeration() {
        assert_eq!(count(SearchConfig::exhaustive(1)), 2);
        assert_eq!(count(SearchConfig::exhaustive(2)), 36);
        assert_eq!(count(SearchConfig::exhaustive(3)), 2896);
    }

    #[test]
    fn one_point_universe_has_one_topology_two_ideals_one_scope() {
        let spaces: Vec<_> = enumerate_spaces(&SearchConfig::exhaustive(1))
            .unwrap()
            .collect();
        assert_eq!(spaces.len(), 2);
        for s in &spaces {
            assert_eq!(s.topology().opens().len(), 2);
            assert_eq!(s.scope().value(0), s.full());
        }
        assert!(spaces[0].ideal().is_trivial() != spaces[1].ideal().is_trivial());
    }

    #[test]
    fn discrete_two_point_universe_has_four_ideals_and_four_scopes() {
        let spaces: Vec<_> =
            enumerate_spaces(&SearchConfig::exhaustive(2).discrete_only())
                .unwrap()
                .collect();
        assert_eq!(spaces.len(), 16);
        let ideals: HashSet<u32> = spaces.iter().map(|s| s.ideal().max().bits()).collect();
        assert_eq!(ideals.len(), 4);
        let scopes: HashSet<Vec<u32>> = spaces
            .iter()
            .map(|s| s.scope().values().iter().map(|v| v.bits()).collect())
            .collect();
        assert_eq!(scopes.len(), 4);
    }

    #[test]
    fn transitive_space_count_at_three_points() {
        let transitive = enumerate_spaces(&SearchConfig::exhaustive(3))
            .unwrap()
            .filter(|s| s.is_transitive())
            .count();
        assert_eq!(transitive, 1536);
    }

    #[test]
    fn enumerated_spaces_pass_full_validation() {
        for space in enumerate_spaces(&SearchConfig::exhaustive(2)).unwrap() {
            let rebuilt = IdealAuraSpace::build(
                space.universe().clone(),
                space.topology().opens().clone(),
                space.ideal().members().clone(),
                space.scope().values().to_vec(),
            );
            assert!(rebuilt.is_ok());
        }
    }

    #[test]
    fn scale_and_budget_limits_are_enforced() {
        assert!(matches!(
            enumerate_spaces(&SearchConfig::exhaustive(5)),
            Err(SearchError::ScaleRefused { .. })
        ));
        assert!(enumerate_spaces(&SearchConfig::exhaustive(5).discrete_only()).is_ok());
        assert!(matches!(
            enumerate_spaces(&SearchConfig::exhaustive(7).discrete_only()),
            Err(SearchError::ScaleRefused { .. })
        ));
        assert!(matches!(
            enumerate_spaces(&SearchConfig::random(4, 1, 0)),
            Err(SearchError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_spaces(&SearchConfig::random(4, 1, MAX_RANDOM_BUDGET + 1)),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn random_streams_are_seed_deterministic_and_valid() {
        let draw = |seed| -> Vec<String> {
            enumerate_spaces(&SearchConfig::random(4, seed, 25))
                .unwrap()
                .map(|s| serialize_space(&s))
                .collect()
        };
        let a = draw(9);
        assert_eq!(a, draw(9));
        assert_ne!(a, draw(10));
        assert_eq!(a.len(), 25);
        for text in &a {
            assert!(crate::io::parse_space(text).is_ok(), "sampled space validates");
        }
    }

    #[test]
    fn canonical_dedup_keeps_one_space_per_relabeling_class() {
        let all: Vec<_> = enumerate_spaces(&SearchConfig::exhaustive(2))
            .unwrap()
            .collect();
        let mut config = SearchConfig::exhaustive(2);
        config.canonicalize = true;
        let reps: Vec<_> = enumerate_spaces(&config).unwrap().collect();
        assert!(reps.len() < all.len());
        // Every space's canonical form is one of the representatives.
        let rep_texts: HashSet<String> = reps.iter().map(serialize_space).collect();
        for s in &all {
            assert!(rep_texts.contains(&serialize_space(&canonical_form(s))));
        }
        // Representatives are pairwise non-isomorphic: 2 swaps cover n=2.
        for r in &reps {
            let swapped = relabel(r, &[1, 0]);
            let same = serialize_space(&swapped) == serialize_space(r);
            assert!(same || !rep_texts.contains(&serialize_space(&swapped)));
        }
    }

    #[test]
    fn relabeling_preserves_structure_invariants() {
        let spaces: Vec<_> = enumerate_spaces(&SearchConfig::exhaustive(2))
            .unwrap()
            .collect();
        for s in &spaces {
            let r = relabel(s, &[1, 0]);
            assert_eq!(
                s.topology().opens().len(),
                r.topology().opens().len()
            );
            assert_eq!(s.ideal().members().len(), r.ideal().members().len());
            assert_eq!(s.is_transitive(), r.is_transitive());
        }
    }
}
