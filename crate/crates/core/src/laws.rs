//! Executable law suite.
//!
//! Each registered law re-checks one algebraic fact by brute force,
//! quantifying over every subset of every supplied space and, for the
//! continuity laws, over every map into a deduplicated grid of target
//! spaces. Laws come in three kinds: asserted laws are expected to hold and
//! fail the suite when violated; probes record how a statement behaves with
//! a hypothesis dropped or a withdrawn clause restored, and never fail the
//! suite; the corpus law replays the frozen fixture expectations.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{SpaceAnalysis, MAX_ANALYSIS_POINTS};
use crate::enumerate::{enumerate_spaces, is_topology_mask, SearchConfig, SearchError};
use crate::fixtures;
use crate::set::PointSet;
use crate::space::IdealAuraSpace;
use crate::topologies;

/// Largest point count for which a law run will enumerate every space and
/// every map. Full enumeration at four points already yields close to a
/// million spaces; those sizes are covered by sampling instead.
pub const MAX_EXHAUSTIVE_LAW_POINTS: usize = 3;

/// Violations kept verbatim per report; the rest are only counted.
const VIOLATION_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    /// Expected to hold; violations fail the suite.
    Asserted,
    /// Observational; findings are reported but never fail the suite.
    Probe,
    /// Replays the fixture corpus.
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail,
    ProbeOnly,
}

impl std::fmt::Display for LawStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "fail",
            LawStatus::ProbeOnly => "probe-only",
        })
    }
}

/// One recorded law violation (or probe finding).
#[derive(Clone, Debug)]
pub struct Violation {
    /// One-line description of the space the record came from.
    pub space: String,
    /// What went wrong (or what was observed), with the subsets involved.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub law_id: &'static str,
    pub kind: LawKind,
    /// Spaces the law actually evaluated (map laws count source-target-map
    /// triples instead, expanding deduplicated target classes).
    pub spaces_checked: u64,
    /// First few violations, capped at [`VIOLATION_CAP`].
    pub violations: Vec<Violation>,
    /// Total violations, including those beyond the cap.
    pub violation_count: u64,
    pub status: LawStatus,
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn failed(&self) -> bool {
        self.status == LawStatus::Fail
    }

    /// Fixed-width single-line rendering for suite output.
    pub fn one_line(&self) -> String {
        format!(
            "{:<10} {:<42} checked={:<8} violations={}",
            self.status.to_string(),
            self.law_id,
            self.spaces_checked,
            self.violation_count
        )
    }
}

/// Which spaces a law run quantifies over.
#[derive(Clone, Debug)]
pub enum SpaceSource {
    /// The built-in fixture spaces.
    Fixtures,
    /// Every space (all topologies, all ideals, all scope functions) on
    /// 1..=n_max points, with no relabeling dedup.
    Enumerated { n_max: usize },
    /// Seeded random sample: `count_per_n` distinct spaces for each listed
    /// point count.
    Sampled {
        ns: Vec<usize>,
        count_per_n: u64,
        seed: u64,
    },
    /// An explicit list.
    Spaces(Vec<IdealAuraSpace>),
}

#[derive(Debug, Error)]
pub enum LawError {
    #[error("unknown law id {0:?}")]
    UnknownLaw(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// One-line rendering of a space: carrier, opens, ideal, and scope values.
pub fn describe_space(space: &IdealAuraSpace) -> String {
    let u = space.universe();
    let opens = space
        .topology()
        .opens()
        .iter()
        .map(|s| u.format_set(s))
        .collect::<Vec<_>>()
        .join(",");
    let aura = (0..space.n())
        .map(|x| format!("{}↦{}", u.name(x), u.format_set(space.scope().value(x))))
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "X={}; opens={{{}}}; ideal=subsets of {}; aura: {}",
        u.format_set(space.full()),
        opens,
        u.format_set(space.ideal().max()),
        aura
    )
}

/// Materializes the spaces of a source and precomputes their operator tables.
pub fn resolve_spaces(source: &SpaceSource) -> Result<Vec<SpaceAnalysis>, SearchError> {
    let spaces: Vec<IdealAuraSpace> = match source {
        SpaceSource::Fixtures => fixtures::all_fixtures()
            .into_iter()
            .map(|f| f.space)
            .collect(),
        SpaceSource::Enumerated { n_max } => {
            if *n_max == 0 || *n_max > MAX_EXHAUSTIVE_LAW_POINTS {
                return Err(SearchError::ScaleRefused {
                    reason: format!(
                        "exhaustive law sweeps cover 1..={MAX_EXHAUSTIVE_LAW_POINTS} points; \
                         got {n_max}. Larger sizes are meant to be sampled."
                    ),
                });
            }
            let mut out = Vec::new();
            for n in 1..=*n_max {
                out.extend(enumerate_spaces(&SearchConfig::exhaustive(n))?);
            }
            out
        }
        SpaceSource::Sampled {
            ns,
            count_per_n,
            seed,
        } => {
            let mut out = Vec::new();
            for (i, &n) in ns.iter().enumerate() {
                if n == 0 || n > MAX_ANALYSIS_POINTS {
                    return Err(SearchError::ScaleRefused {
                        reason: format!(
                            "sampled law sweeps cover 1..={MAX_ANALYSIS_POINTS} points; got {n}"
                        ),
                    });
                }
                // Distinct-space dedup rejects repeats, so the draw budget
                // carries headroom over the requested count.
                let budget = count_per_n.saturating_mul(8).clamp(1_000, 10_000_000);
                let mut config = SearchConfig::random(n, seed.wrapping_add(i as u64), budget);
                config.canonicalize = true;
                out.extend(enumerate_spaces(&config)?.take(*count_per_n as usize));
            }
            out
        }
        SpaceSource::Spaces(list) => list.clone(),
    };
    Ok(spaces.par_iter().map(SpaceAnalysis::new).collect())
}

/// Collects one space's findings while a law body runs.
#[derive(Default)]
pub(crate) struct Recorder {
    kept: Vec<String>,
    count: u64,
    notes: Vec<(&'static str, String)>,
    inapplicable: bool,
}

impl Recorder {
    fn hit(&mut self, detail: impl FnOnce() -> String) {
        self.count += 1;
        if self.kept.len() < VIOLATION_CAP {
            self.kept.push(detail());
        }
    }

    /// Files a law-level note under a dedup key; the first filing wins.
    fn note(&mut self, key: &'static str, text: impl FnOnce() -> String) {
        if !self.notes.iter().any(|(k, _)| *k == key) {
            self.notes.push((key, text()));
        }
    }

    /// Marks this space as outside the law's hypothesis.
    fn inapplicable(&mut self) {
        self.inapplicable = true;
    }
}

type PerSpaceFn = fn(&SpaceAnalysis, &mut Recorder);

#[derive(Clone, Copy, PartialEq, Eq)]
enum MapLaw {
    /// Continuity grades against the target's single-step derived topology.
    Hierarchy,
    /// Both decomposition equivalences against plain target opens.
    Decomposition,
    /// The two sound comparison implications against plain target opens.
    Comparison,
    /// The withdrawn third comparison implication, probed.
    ComparisonIii,
}

enum LawBody {
    PerSpace(PerSpaceFn),
    Map(MapLaw),
    Corpus,
}

pub struct Law {
    pub id: &'static str,
    pub kind: LawKind,
    /// One-line statement of what the law checks.
    pub summary: &'static str,
    /// Standing note attached to every report of this law.
    note: Option<&'static str>,
    body: LawBody,
}

pub fn registry() -> &'static [Law] {
    LAWS
}

pub fn law_ids() -> Vec<&'static str> {
    LAWS.iter().map(|l| l.id).collect()
}

pub fn law_by_id(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}

/// Runs one law over the spaces of `source`.
pub fn run_law(id: &str, source: &SpaceSource) -> Result<LawReport, LawError> {
    let law = law_by_id(id).ok_or_else(|| LawError::UnknownLaw(id.to_string()))?;
    let analyses = resolve_spaces(source)?;
    Ok(run_resolved(law, &analyses))
}

/// Runs every registered law over the spaces of `source`, in registry order.
pub fn run_all(source: &SpaceSource) -> Result<Vec<LawReport>, SearchError> {
    let analyses = resolve_spaces(source)?;
    Ok(LAWS.iter().map(|law| run_resolved(law, &analyses)).collect())
}

fn run_resolved(law: &Law, analyses: &[SpaceAnalysis]) -> LawReport {
    match law.body {
        LawBody::PerSpace(f) => run_per_space(law, analyses, f),
        LawBody::Map(kind) => run_map_law(law, kind, analyses),
        LawBody::Corpus => run_corpus_law(law),
    }
}

fn finish(
    law: &Law,
    spaces_checked: u64,
    violations: Vec<Violation>,
    violation_count: u64,
    mut notes: Vec<String>,
) -> LawReport {
    let status = match law.kind {
        LawKind::Probe => LawStatus::ProbeOnly,
        _ if violation_count > 0 => LawStatus::Fail,
        _ => LawStatus::Pass,
    };
    if let Some(n) = law.note {
        notes.insert(0, n.to_string());
    }
    if violation_count > violations.len() as u64 {
        notes.push(format!(
            "showing {} of {} records",
            violations.len(),
            violation_count
        ));
    }
    LawReport {
        law_id: law.id,
        kind: law.kind,
        spaces_checked,
        violations,
        violation_count,
        status,
        notes,
    }
}

fn run_per_space(law: &Law, analyses: &[SpaceAnalysis], f: PerSpaceFn) -> LawReport {
    let recorders: Vec<Recorder> = analyses
        .par_iter()
        .map(|an| {
            let mut r = Recorder::default();
            f(an, &mut r);
            r
        })
        .collect();

    let mut violations = Vec::new();
    let mut count = 0u64;
    let mut applicable = 0u64;
    let mut note_keys: Vec<&'static str> = Vec::new();
    let mut notes = Vec::new();
    for (an, rec) in analyses.iter().zip(recorders) {
        if !rec.inapplicable {
            applicable += 1;
        }
        count += rec.count;
        for detail in rec.kept {
            if violations.len() < VIOLATION_CAP {
                violations.push(Violation {
                    space: describe_space(&an.space),
                    detail,
                });
            }
        }
        for (key, text) in rec.notes {
            if !note_keys.contains(&key) {
                note_keys.push(key);
                notes.push(text);
            }
        }
    }
    if applicable < analyses.len() as u64 {
        notes.push(format!(
            "hypothesis held on {applicable} of {} spaces; the rest were skipped",
            analyses.len()
        ));
    }
    finish(law, applicable, violations, count, notes)
}

fn run_corpus_law(law: &Law) -> LawReport {
    let report = fixtures::run_corpus(None);
    let fixture_count = fixtures::all_fixtures().len() as u64;
    let mut violations = Vec::new();
    let mut count = 0u64;
    for entry in &report.entries {
        if !entry.ok {
            count += 1;
            if violations.len() < VIOLATION_CAP {
                violations.push(Violation {
                    space: format!("fixture {}", entry.fixture),
                    detail: format!(
                        "{}: expected {}, got {}",
                        entry.check, entry.expected, entry.got
                    ),
                });
            }
        }
    }
    let notes = vec![format!(
        "{} expectations across {} fixtures",
        report.entries.len(),
        fixture_count
    )];
    finish(law, fixture_count, violations, count, notes)
}

// ---------------------------------------------------------------------------
// Map-law engine
// ---------------------------------------------------------------------------

struct TargetClass {
    /// Index into the analysis slice of the class representative.
    rep: usize,
    /// How many supplied spaces share the representative's read family.
    multiplicity: u64,
}

/// Groups target spaces by the one family a map law reads from them, so each
/// class is evaluated once and counted with its multiplicity.
fn group_targets(
    analyses: &[SpaceAnalysis],
    grid: &[usize],
    key: fn(&SpaceAnalysis) -> u64,
) -> Vec<TargetClass> {
    let mut classes: HashMap<(usize, u64), (usize, u64)> = HashMap::new();
    for &i in grid {
        let an = &analyses[i];
        let entry = classes.entry((an.n, key(an))).or_insert((i, 0));
        entry.1 += 1;
    }
    let mut out: Vec<TargetClass> = classes
        .into_values()
        .map(|(rep, multiplicity)| TargetClass { rep, multiplicity })
        .collect();
    out.sort_by_key(|c| c.rep);
    out
}

/// Writes the digits of `code` in base `target_n` into `map`, one digit per
/// source point.
pub(crate) fn decode_map(mut code: u64, source_n: usize, target_n: usize, map: &mut Vec<usize>) {
    map.clear();
    for _ in 0..source_n {
        map.push((code % target_n as u64) as usize);
        code /= target_n as u64;
    }
}

pub(crate) fn preimage_of(map: &[usize], v: u32) -> usize {
    let mut p = 0usize;
    for (x, &fx) in map.iter().enumerate() {
        if v >> fx & 1 == 1 {
            p |= 1 << x;
        }
    }
    p
}

pub(crate) fn family_members(mask: u64, size: usize) -> impl Iterator<Item = u32> {
    (0..size as u32).filter(move |s| mask >> s & 1 == 1)
}

fn describe_map(src: &IdealAuraSpace, tgt: &IdealAuraSpace, map: &[usize]) -> String {
    let su = src.universe();
    let tu = tgt.universe();
    map.iter()
        .enumerate()
        .map(|(x, &fx)| format!("{}↦{}", su.name(x), tu.name(fx)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Conjunction of the five openness flags over the preimages of the target's
/// single-step derived opens: [ia, semi, pre, alpha, beta].
pub(crate) fn eval_class_profile(
    src: &SpaceAnalysis,
    tgt: &SpaceAnalysis,
    map: &[usize],
) -> [bool; 5] {
    let mut out = [true; 5];
    for v in family_members(tgt.tausa_c, tgt.size) {
        let flags = src.flags[preimage_of(map, v)];
        for (o, f) in out.iter_mut().zip(flags) {
            *o &= f;
        }
    }
    out
}

/// Continuity grades of a map against the target's plain opens.
pub(crate) struct PlainProfile {
    pub aura: bool,
    pub tausa: bool,
    pub star: bool,
    pub tau: bool,
    pub semi: bool,
    pub pre: bool,
    pub alpha: bool,
}

pub(crate) fn eval_plain_profile(
    src: &SpaceAnalysis,
    tgt: &SpaceAnalysis,
    map: &[usize],
) -> PlainProfile {
    let mut p = PlainProfile {
        aura: true,
        tausa: true,
        star: true,
        tau: true,
        semi: true,
        pre: true,
        alpha: true,
    };
    for v in family_members(tgt.tau, tgt.size) {
        let pre_v = preimage_of(map, v);
        let s = PointSet::from_bits(pre_v as u32);
        p.aura &= SpaceAnalysis::in_family(src.tau_aura, s);
        p.tausa &= SpaceAnalysis::in_family(src.tausa, s);
        p.star &= SpaceAnalysis::in_family(src.tau_star, s);
        p.tau &= SpaceAnalysis::in_family(src.tau, s);
        let flags = src.flags[pre_v];
        p.semi &= flags[1];
        p.pre &= flags[2];
        p.alpha &= flags[3];
    }
    p
}

#[derive(Default)]
struct MapFindings {
    checked: u64,
    count: u64,
    kept: Vec<String>,
}

fn run_map_law(law: &Law, kind: MapLaw, analyses: &[SpaceAnalysis]) -> LawReport {
    let mut notes = Vec::new();
    let grid: Vec<usize> = (0..analyses.len())
        .filter(|&i| analyses[i].n <= MAX_EXHAUSTIVE_LAW_POINTS)
        .collect();
    if grid.len() < analyses.len() {
        notes.push(format!(
            "map grid restricted to the {} of {} spaces with at most {MAX_EXHAUSTIVE_LAW_POINTS} points",
            grid.len(),
            analyses.len()
        ));
    }
    let sources: Vec<usize> = grid
        .iter()
        .copied()
        .filter(|&i| kind != MapLaw::Decomposition || analyses[i].transitive)
        .collect();
    if kind == MapLaw::Decomposition && sources.len() < grid.len() {
        notes.push(format!(
            "sources limited to the {} transitive spaces of the grid",
            sources.len()
        ));
    }
    let key: fn(&SpaceAnalysis) -> u64 = match kind {
        MapLaw::Hierarchy => |an| an.tausa_c,
        _ => |an| an.tau,
    };
    let targets = group_targets(analyses, &grid, key);
    if sources.is_empty() || targets.is_empty() {
        notes.push("no spaces inside the map grid range; nothing was paired".to_string());
        return finish(law, 0, Vec::new(), 0, notes);
    }
    notes.push(format!(
        "{} sources × {} target classes (grouped by the family the law reads)",
        sources.len(),
        targets.len()
    ));

    let per_source: Vec<MapFindings> = sources
        .par_iter()
        .map(|&si| {
            let src = &analyses[si];
            let mut findings = MapFindings::default();
            let mut map = Vec::with_capacity(src.n);
            for class in &targets {
                let tgt = &analyses[class.rep];
                let total_maps = (tgt.n as u64).pow(src.n as u32);
                for code in 0..total_maps {
                    decode_map(code, src.n, tgt.n, &mut map);
                    let mut bad: Vec<String> = Vec::new();
                    match kind {
                        MapLaw::Hierarchy => {
                            let [ia, semi, pre, alpha, beta] = eval_class_profile(src, tgt, &map);
                            if ia && !alpha {
                                bad.push("continuous for the single-step family but not alpha continuous".into());
                            }
                            if alpha && !semi {
                                bad.push("alpha continuous but not semi continuous".into());
                            }
                            if alpha && !pre {
                                bad.push("alpha continuous but not pre continuous".into());
                            }
                            if semi && !beta {
                                bad.push("semi continuous but not beta continuous".into());
                            }
                            if pre && !beta {
                                bad.push("pre continuous but not beta continuous".into());
                            }
                        }
                        MapLaw::Decomposition => {
                            let p = eval_plain_profile(src, tgt, &map);
                            if (p.semi && p.pre) != p.tausa {
                                bad.push(format!(
                                    "semi={} pre={} but derived-topology continuity={}",
                                    p.semi, p.pre, p.tausa
                                ));
                            }
                            if p.alpha != p.tausa {
                                bad.push(format!(
                                    "alpha={} but derived-topology continuity={}",
                                    p.alpha, p.tausa
                                ));
                            }
                        }
                        MapLaw::Comparison => {
                            let p = eval_plain_profile(src, tgt, &map);
                            if p.aura && !p.tausa {
                                bad.push(
                                    "scope-topology continuous but not derived-topology continuous"
                                        .into(),
                                );
                            }
                            if p.tausa && !p.star {
                                bad.push(
                                    "derived-topology continuous but not star-topology continuous"
                                        .into(),
                                );
                            }
                        }
                        MapLaw::ComparisonIii => {
                            let p = eval_plain_profile(src, tgt, &map);
                            if p.star && !p.tau {
                                bad.push(
                                    "star-topology continuous but not base-topology continuous"
                                        .into(),
                                );
                            }
                        }
                    }
                    findings.checked += class.multiplicity;
                    if !bad.is_empty() {
                        findings.count += bad.len() as u64 * class.multiplicity;
                        if findings.kept.len() < VIOLATION_CAP {
                            let prefix = format!(
                                "map {} into {}",
                                describe_map(&src.space, &tgt.space, &map),
                                describe_space(&tgt.space)
                            );
                            for b in bad {
                                if findings.kept.len() < VIOLATION_CAP {
                                    findings.kept.push(format!("{prefix}: {b}"));
                                }
                            }
                        }
                    }
                }
            }
            findings
        })
        .collect();

    let mut violations = Vec::new();
    let mut count = 0u64;
    let mut checked = 0u64;
    for (&si, findings) in sources.iter().zip(per_source) {
        checked += findings.checked;
        count += findings.count;
        for detail in findings.kept {
            if violations.len() < VIOLATION_CAP {
                violations.push(Violation {
                    space: describe_space(&analyses[si].space),
                    detail,
                });
            }
        }
    }
    finish(law, checked, violations, count, notes)
}

// ---------------------------------------------------------------------------
// Per-space law bodies
// ---------------------------------------------------------------------------

/// Bitmask of the whole powerset over `size` subset codes.
fn all_family(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

fn scope_bits(an: &SpaceAnalysis) -> Vec<u32> {
    (0..an.n).map(|x| an.space.scope().value(x).bits()).collect()
}

fn law_star_properties(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let st = &an.star;
    let cl = &an.cl_plain;
    for a in 0..an.size {
        let ab = a as u32;
        if an.space.ideal().contains(PointSet::from_bits(ab)) && st[a] != 0 {
            r.hit(|| format!("local image of the ideal member A={} is nonempty", set(ab)));
        }
        if cl[st[a] as usize] != st[a] {
            r.hit(|| format!("local image of A={} is not closed", set(ab)));
        }
        if st[a] & !cl[a] != 0 {
            r.hit(|| format!("local image of A={} escapes the closure of A", set(ab)));
        }
        if st[st[a] as usize] & !st[a] != 0 {
            r.hit(|| format!("second application grew the local image of A={}", set(ab)));
        }
        for b in 0..an.size {
            if st[a | b] != st[a] | st[b] {
                r.hit(|| {
                    format!(
                        "local image is not additive at A={}, B={}",
                        set(ab),
                        set(b as u32)
                    )
                });
            }
        }
    }
}

fn law_star_subset_aura(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.star[a] & !an.aura_local[a] != 0 {
            r.hit(|| format!("local image of A={} escapes the scope-local image", set(a as u32)));
        } else if an.star[a] != an.aura_local[a] {
            r.note("strict", || {
                format!(
                    "the containment is strict at A={} on {}",
                    set(a as u32),
                    describe_space(&an.space)
                )
            });
        }
    }
}

fn law_aura_local_properties(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let al = &an.aura_local;
    let ca = &an.cl_aura;
    let scopes = scope_bits(an);
    let m = an.space.ideal().max().bits();
    if al[0] != 0 {
        r.hit(|| "scope-local image of the empty set is nonempty".to_string());
    }
    for a in 0..an.size {
        let ab = a as u32;
        if al[a] & !ca[a] != 0 {
            r.hit(|| format!("scope-local image of A={} escapes the scope closure", set(ab)));
        }
        for b in 0..an.size {
            if al[a | b] != al[a] | al[b] {
                r.hit(|| {
                    format!(
                        "scope-local image is not additive at A={}, B={}",
                        set(ab),
                        set(b as u32)
                    )
                });
            }
        }
    }
    if an.space.ideal().is_trivial() {
        for a in 0..an.size {
            if al[a] != ca[a] {
                r.hit(|| {
                    format!(
                        "with the trivial ideal the scope-local image of A={} misses the scope closure",
                        set(a as u32)
                    )
                });
            }
        }
    }
    if an.space.ideal().is_improper() {
        for (a, &image) in al.iter().enumerate() {
            if image != 0 {
                r.hit(|| {
                    format!(
                        "with the improper ideal the scope-local image of A={} is nonempty",
                        set(a as u32)
                    )
                });
            }
        }
    }
    if an.transitive {
        // Removing the largest ideal member is the hardest case: for smaller
        // J the set A\J sits between A\max and A, so monotonicity closes the
        // sandwich once the extremes agree.
        for a in 0..an.size {
            if al[(a as u32 & !m) as usize] != al[a] {
                r.hit(|| {
                    format!(
                        "removing the ideal member {} changed the scope-local image of A={}",
                        set(m),
                        set(a as u32)
                    )
                });
            }
        }
    }
    // Antitonicity in the ideal: dropping one generator point at a time
    // reaches every sub-ideal by composing the single-step inclusions.
    for x in PointSet::from_bits(m).iter() {
        let m2 = m & !(1u32 << x);
        for (a, &image) in al.iter().enumerate() {
            let ab = a as u32;
            let smaller: u32 = (0..an.n)
                .filter(|&y| scopes[y] & ab & !m2 != 0)
                .fold(0, |acc, y| acc | 1 << y);
            if image & !smaller != 0 {
                r.hit(|| {
                    format!(
                        "shrinking the ideal to subsets of {} shrank the scope-local image of A={}",
                        set(m2),
                        set(ab)
                    )
                });
            }
        }
    }
}

fn law_aura_local_vs_closure(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let al = &an.aura_local;
    let ca = &an.cl_aura;
    let scopes = scope_bits(an);
    let m = an.space.ideal().max().bits();
    let mut all_equal = true;
    for a in 0..an.size {
        let ab = a as u32;
        if al[a] & !ca[a] != 0 {
            r.hit(|| format!("scope-local image of A={} escapes the scope closure", set(ab)));
        }
        if al[a] != ca[a] {
            all_equal = false;
        }
        if ab & !al[a] == 0 && (ab | al[a]) & !ca[a] != 0 {
            r.hit(|| {
                format!(
                    "A={} grows past the scope closure although A sits inside its own scope-local image",
                    set(ab)
                )
            });
        }
        // Pointwise criterion: the images agree exactly when every scope
        // that meets A meets it outside the ideal.
        let criterion = (0..an.n).all(|x| scopes[x] & ab == 0 || scopes[x] & ab & !m != 0);
        if (al[a] == ca[a]) != criterion {
            r.hit(|| {
                format!(
                    "meets-outside-the-ideal test disagrees with image equality at A={}",
                    set(ab)
                )
            });
        }
    }
    if all_equal != an.space.ideal().is_trivial() {
        r.hit(|| {
            "family-wide agreement with the scope closure must hold exactly for the trivial ideal"
                .to_string()
        });
    }
}

fn law_cech_axioms(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let cl = &an.cl_one;
    if cl[0] != 0 {
        r.hit(|| "single-step closure of the empty set is nonempty".to_string());
    }
    for a in 0..an.size {
        if a as u32 & !cl[a] != 0 {
            r.hit(|| format!("single-step closure does not contain A={}", set(a as u32)));
        }
        for b in 0..an.size {
            if cl[a | b] != cl[a] | cl[b] {
                r.hit(|| {
                    format!(
                        "single-step closure is not additive at A={}, B={}",
                        set(a as u32),
                        set(b as u32)
                    )
                });
            }
        }
    }
}

fn law_iterated_closure_kuratowski(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let cl = &an.cl_iter;
    if cl[0] != 0 {
        r.hit(|| "iterated closure of the empty set is nonempty".to_string());
    }
    for a in 0..an.size {
        if a as u32 & !cl[a] != 0 {
            r.hit(|| format!("iterated closure does not contain A={}", set(a as u32)));
        }
        if cl[cl[a] as usize] != cl[a] {
            r.hit(|| format!("iterated closure is not idempotent at A={}", set(a as u32)));
        }
        for b in 0..an.size {
            if cl[a | b] != cl[a] | cl[b] {
                r.hit(|| {
                    format!(
                        "iterated closure is not additive at A={}, B={}",
                        set(a as u32),
                        set(b as u32)
                    )
                });
            }
        }
    }
}

fn law_stabilization_bound(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        let room = an.n - (a as u32).count_ones() as usize;
        if an.stabilized_at[a] as usize > room {
            r.hit(|| {
                format!(
                    "A={} took {} steps to settle with only {} points of room",
                    set(a as u32),
                    an.stabilized_at[a],
                    room
                )
            });
        }
    }
}

fn law_duality(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let full = an.full_bits();
    let scopes = scope_bits(an);
    for a in 0..an.size {
        let ab = a as u32;
        let comp = (full & !ab) as usize;
        if an.int_one[a] != full & !an.cl_one[comp] {
            r.hit(|| format!("single-step interior is not dual to the closure at A={}", set(ab)));
        }
        if an.psi_aura[a] != full & !an.aura_local[comp] {
            r.hit(|| {
                format!(
                    "co-local operator is not the complement of the scope-local image at A={}",
                    set(ab)
                )
            });
        }
        if an.int_one[a] != ab & an.psi_aura[a] {
            r.hit(|| {
                format!(
                    "single-step interior differs from A meet its co-local image at A={}",
                    set(ab)
                )
            });
        }
        if an.psi_star[a] != full & !an.star[comp] {
            r.hit(|| {
                format!(
                    "classical co-local operator is not the complement of the local image at A={}",
                    set(ab)
                )
            });
        }
        let direct: u32 = (0..an.n)
            .filter(|&x| ab >> x & 1 == 1 && scopes[x] & !ab == 0)
            .fold(0, |acc, x| acc | 1 << x);
        if direct != full & !an.cl_aura[comp] {
            r.hit(|| format!("scope interior is not dual to the scope closure at A={}", set(ab)));
        }
    }
}

fn law_derived_families_are_topologies(an: &SpaceAnalysis, r: &mut Recorder) {
    for (name, mask) in [
        ("scope topology", an.tau_aura),
        ("derived topology", an.tausa),
        ("single-step family", an.tausa_c),
        ("star topology", an.tau_star),
    ] {
        if !is_topology_mask(mask, an.size) {
            r.hit(|| format!("{name} violates the topology axioms"));
        }
    }
}

fn law_topology_chain(an: &SpaceAnalysis, r: &mut Recorder) {
    for (link, lo, hi) in [
        ("scope topology ⊆ derived topology", an.tau_aura, an.tausa),
        ("derived topology ⊆ single-step family", an.tausa, an.tausa_c),
        ("single-step family ⊆ star topology", an.tausa_c, an.tau_star),
    ] {
        if lo & !hi != 0 {
            r.hit(|| format!("chain link broken: {link}"));
        }
    }
}

fn law_chain_tau_containment(an: &SpaceAnalysis, r: &mut Recorder) {
    if an.space.ideal().is_trivial() {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for g in family_members(an.tausa_c & !an.tau, an.size) {
        r.hit(|| format!("G={} is open in the single-step sense but not a base open", set(g)));
    }
}

fn law_chain_special_cases(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let full = an.full_bits();
    let scopes = scope_bits(an);
    let trivial = an.space.ideal().is_trivial();
    let improper = an.space.ideal().is_improper();
    let full_scope = scopes.iter().all(|&s| s == full);
    if !(trivial || improper || full_scope) {
        r.inapplicable();
        return;
    }
    if trivial {
        for a in 0..an.size {
            if an.aura_local[a] != an.cl_aura[a] || an.cl_one[a] != an.cl_aura[a] {
                r.hit(|| {
                    format!(
                        "trivial ideal: operators at A={} do not collapse onto the scope closure",
                        set(a as u32)
                    )
                });
            }
        }
        if an.tausa != an.tau_aura {
            r.hit(|| "trivial ideal: derived topology differs from the scope topology".to_string());
        }
    }
    if improper {
        for a in 0..an.size {
            if an.aura_local[a] != 0 || an.cl_one[a] != a as u32 {
                r.hit(|| {
                    format!(
                        "improper ideal: closure at A={} is not the identity",
                        set(a as u32)
                    )
                });
            }
        }
        if an.tausa != all_family(an.size) {
            r.hit(|| "improper ideal: derived topology is not discrete".to_string());
        }
    }
    if full_scope {
        for a in 0..an.size {
            let expected = if an.space.ideal().contains(PointSet::from_bits(a as u32)) {
                0
            } else {
                full
            };
            if an.aura_local[a] != expected {
                r.hit(|| {
                    format!(
                        "everywhere-full scope: the image of A={} is not all-or-nothing by ideal membership",
                        set(a as u32)
                    )
                });
            }
        }
    }
}

fn law_transitive_idempotency(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.transitive {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.cl_one[an.cl_one[a] as usize] != an.cl_one[a] {
            r.hit(|| format!("single-step closure is not idempotent at A={}", set(a as u32)));
        }
        if an.cl_iter[a] != an.cl_one[a] {
            r.hit(|| format!("iterate exceeds one step at A={}", set(a as u32)));
        }
        if an.stabilized_at[a] > 1 {
            r.hit(|| format!("A={} needed {} growth steps", set(a as u32), an.stabilized_at[a]));
        }
    }
    if an.tausa != an.tausa_c {
        r.hit(|| "derived topology differs from the single-step family".to_string());
    }
}

fn law_trivial_ideal_reduction(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.space.ideal().is_trivial() {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let scopes = scope_bits(an);
    // Scope-only classifier: the same five grades computed from the pure
    // scope closure and its dual interior.
    let int_scope = |a: u32| -> u32 {
        (0..an.n)
            .filter(|&x| a >> x & 1 == 1 && scopes[x] & !a == 0)
            .fold(0, |acc, x| acc | 1 << x)
    };
    for a in 0..an.size {
        let ab = a as u32;
        if an.aura_local[a] != an.cl_aura[a] {
            r.hit(|| format!("image at A={} differs from the scope closure", set(ab)));
        }
        if an.cl_one[a] != an.cl_aura[a] {
            r.hit(|| format!("closure at A={} differs from the scope closure", set(ab)));
        }
        let ia = ab & !int_scope(ab) == 0;
        let semi = ab & !an.cl_aura[int_scope(ab) as usize] == 0;
        let pre = ab & !int_scope(an.cl_aura[a]) == 0;
        let alpha = ab & !int_scope(an.cl_aura[int_scope(ab) as usize]) == 0;
        let beta = ab & !an.cl_aura[int_scope(an.cl_aura[a]) as usize] == 0;
        if an.flags[a] != [ia, semi, pre, alpha, beta] {
            r.hit(|| {
                format!(
                    "class flags at A={} differ from the scope-only classifier",
                    set(ab)
                )
            });
        }
    }
    if an.tausa != an.tau_aura {
        r.hit(|| "derived topology differs from the scope topology".to_string());
    }
}

fn law_finite_ideal_reduction(an: &SpaceAnalysis, r: &mut Recorder) {
    // On a finite carrier every subset is finite, so the finite-subsets
    // ideal is exactly the improper ideal.
    if !an.space.ideal().is_improper() {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.aura_local[a] != 0 {
            r.hit(|| format!("scope-local image of A={} is nonempty", set(a as u32)));
        }
    }
    if an.tausa != all_family(an.size) {
        r.hit(|| "derived topology is not the whole powerset".to_string());
    }
}

fn law_improper_ideal_reduction(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.space.ideal().is_improper() {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.aura_local[a] != 0 {
            r.hit(|| format!("scope-local image of A={} is nonempty", set(a as u32)));
        }
        if an.cl_one[a] != a as u32 || an.cl_iter[a] != a as u32 || an.stabilized_at[a] != 0 {
            r.hit(|| format!("closure is not the identity at A={}", set(a as u32)));
        }
    }
    for (name, mask) in [
        ("derived topology", an.tausa),
        ("single-step family", an.tausa_c),
        ("star topology", an.tau_star),
    ] {
        if mask != all_family(an.size) {
            r.hit(|| format!("{name} is not discrete"));
        }
    }
}

fn law_psi_properties(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let full = an.full_bits();
    let scopes = scope_bits(an);
    let m = an.space.ideal().max().bits();
    let psi = &an.psi_aura;
    if psi[an.size - 1] != full {
        r.hit(|| "co-local image of the carrier is not the carrier".to_string());
    }
    let scope_in_ideal: u32 = (0..an.n)
        .filter(|&x| scopes[x] & !m == 0)
        .fold(0, |acc, x| acc | 1 << x);
    if psi[0] != scope_in_ideal {
        r.hit(|| {
            "co-local image of the empty set must be the points whose scope lies in the ideal"
                .to_string()
        });
    }
    for a in 0..an.size {
        let ab = a as u32;
        for b in 0..an.size {
            if psi[a & b] != psi[a] & psi[b] {
                r.hit(|| {
                    format!(
                        "co-local operator does not distribute over A={} ∩ B={}",
                        set(ab),
                        set(b as u32)
                    )
                });
            }
        }
        if psi[a] & !an.psi_star[a] != 0 {
            r.hit(|| {
                format!(
                    "co-local image of A={} escapes its classical counterpart",
                    set(ab)
                )
            });
        }
        let boundary: u32 = (0..an.n)
            .filter(|&x| ab >> x & 1 == 0 && scopes[x] & !ab & !m == 0)
            .fold(0, |acc, x| acc | 1 << x);
        if psi[a] & !(ab | boundary) != 0 {
            r.hit(|| {
                format!(
                    "co-local image of A={} contains a point outside A whose scope escapes A beyond the ideal",
                    set(ab)
                )
            });
        }
        if an.transitive && psi[(ab | m) as usize] != psi[a] {
            // Absorbing the largest member again covers every smaller J by
            // the monotone sandwich A ⊆ A∪J ⊆ A∪max.
            r.hit(|| {
                format!(
                    "absorbing the ideal member {} changed the co-local image of A={}",
                    set(m),
                    set(ab)
                )
            });
        }
    }
}

fn psi_characterization_holds(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        let ab = a as u32;
        let open = SpaceAnalysis::in_family(an.tausa, PointSet::from_bits(ab));
        let fixed = ab & !an.psi_aura[a] == 0;
        if open != fixed {
            r.hit(|| {
                format!(
                    "A={}: derived-topology membership {} but self-containment under the co-local operator {}",
                    set(ab),
                    open,
                    fixed
                )
            });
        }
    }
}

fn law_psi_characterization(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.transitive {
        r.inapplicable();
        return;
    }
    psi_characterization_holds(an, r);
}

fn law_psi_characterization_nontransitive(an: &SpaceAnalysis, r: &mut Recorder) {
    if an.transitive {
        r.inapplicable();
        return;
    }
    psi_characterization_holds(an, r);
}

fn law_property_vii_nontransitive(an: &SpaceAnalysis, r: &mut Recorder) {
    if an.transitive {
        r.inapplicable();
        return;
    }
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let m = an.space.ideal().max().bits();
    for a in 0..an.size {
        let ab = a as u32;
        if an.aura_local[(ab & !m) as usize] != an.aura_local[a] {
            r.hit(|| {
                format!(
                    "removing the ideal member {} changed the scope-local image of A={}",
                    set(m),
                    set(ab)
                )
            });
        }
        if an.psi_aura[(ab | m) as usize] != an.psi_aura[a] {
            r.hit(|| {
                format!(
                    "absorbing the ideal member {} changed the co-local image of A={}",
                    set(m),
                    set(ab)
                )
            });
        }
    }
}

fn law_basis_generates(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.transitive {
        r.inapplicable();
        return;
    }
    let beta = topologies::gen_basis_beta(&an.space);
    match topologies::topology_from_basis(an.space.universe(), &beta) {
        Ok(top) => {
            if crate::analysis::family_mask(top.opens()) != an.tausa {
                r.hit(|| "the difference basis generates a different topology".to_string());
            }
        }
        Err(e) => r.hit(|| format!("the difference family is not a basis: {e}")),
    }
}

fn law_genopen_hierarchy(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        let [ia, semi, pre, alpha, beta] = an.flags[a];
        for (implication, holds) in [
            ("open in the single-step sense but not alpha", !ia || alpha),
            ("alpha but not semi", !alpha || semi),
            ("alpha but not pre", !alpha || pre),
            ("semi but not beta", !semi || beta),
            ("pre but not beta", !pre || beta),
        ] {
            if !holds {
                r.hit(|| format!("A={} is {implication}", set(a as u32)));
            }
        }
    }
}

fn genopen_decomposition_holds(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        let [_, semi, pre, alpha, _] = an.flags[a];
        if semi && pre && !alpha {
            r.hit(|| format!("A={} is semi and pre but not alpha", set(a as u32)));
        }
    }
}

fn law_genopen_decomposition(an: &SpaceAnalysis, r: &mut Recorder) {
    if !an.transitive {
        r.inapplicable();
        return;
    }
    genopen_decomposition_holds(an, r);
}

fn law_genopen_decomposition_nontransitive(an: &SpaceAnalysis, r: &mut Recorder) {
    if an.transitive {
        r.inapplicable();
        return;
    }
    genopen_decomposition_holds(an, r);
}

fn law_reduction_diagram(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    let ia_mask: u64 = (0..an.size)
        .filter(|&a| an.flags[a][0])
        .fold(0, |acc, a| acc | 1u64 << a);
    if an.tau_aura & !ia_mask != 0 {
        r.hit(|| {
            let g = family_members(an.tau_aura & !ia_mask, an.size).next().unwrap_or(0);
            format!("scope-open G={} is not open in the single-step sense", set(g))
        });
    }
    if an.space.ideal().is_trivial() && ia_mask != an.tau_aura {
        r.hit(|| {
            "with the trivial ideal the single-step class must coincide with the scope topology"
                .to_string()
        });
    }
}

fn law_compat_iopen_vs_iaopen(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        let ab = a as u32;
        let iopen = ab & !an.int_plain[an.cl_star[a] as usize] == 0;
        let iaopen = an.flags[a][0];
        if iopen && !iaopen {
            r.hit(|| {
                format!(
                    "A={} sits inside the interior of its star closure but is not single-step open",
                    set(ab)
                )
            });
        }
        if iaopen && !iopen {
            r.hit(|| {
                format!(
                    "A={} is single-step open but escapes the interior of its star closure",
                    set(ab)
                )
            });
        }
    }
}

fn law_aura_local_not_closed(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.cl_plain[an.aura_local[a] as usize] != an.aura_local[a] {
            r.hit(|| {
                format!(
                    "scope-local image {} of A={} is not closed",
                    set(an.aura_local[a]),
                    set(a as u32)
                )
            });
        }
    }
}

fn law_nonidempotency_witnesses(an: &SpaceAnalysis, r: &mut Recorder) {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    for a in 0..an.size {
        if an.stabilized_at[a] >= 2 {
            r.hit(|| {
                format!(
                    "A={} needs {} growth steps to settle",
                    set(a as u32),
                    an.stabilized_at[a]
                )
            });
        }
    }
}

static LAWS: &[Law] = &[
    Law {
        id: "star_properties",
        kind: LawKind::Asserted,
        summary: "The classical local function is grounded on ideal members, additive, closed, \
                  bounded by the closure, and shrinking under iteration.",
        note: None,
        body: LawBody::PerSpace(law_star_properties),
    },
    Law {
        id: "star_subset_aura",
        kind: LawKind::Asserted,
        summary: "The classical local image always sits inside the scope-local image.",
        note: None,
        body: LawBody::PerSpace(law_star_subset_aura),
    },
    Law {
        id: "aura_local_properties",
        kind: LawKind::Asserted,
        summary: "Groundedness, additivity, the scope-closure bound, both degenerate-ideal \
                  collapses, difference invariance under a transitive scope, and antitonicity \
                  in the ideal.",
        note: None,
        body: LawBody::PerSpace(law_aura_local_properties),
    },
    Law {
        id: "aura_local_vs_closure",
        kind: LawKind::Asserted,
        summary: "Family-wide agreement with the scope closure characterizes the trivial ideal, \
                  and pointwise agreement matches the meets-outside-the-ideal test.",
        note: None,
        body: LawBody::PerSpace(law_aura_local_vs_closure),
    },
    Law {
        id: "aura_local_not_closed",
        kind: LawKind::Probe,
        summary: "How often the scope-local image fails to be closed in the base topology.",
        note: Some(
            "finds are expected: unlike the classical local image, the scope-local image need \
             not be closed",
        ),
        body: LawBody::PerSpace(law_aura_local_not_closed),
    },
    Law {
        id: "cech_axioms",
        kind: LawKind::Asserted,
        summary: "The single-step closure is grounded, extensive, and additive.",
        note: None,
        body: LawBody::PerSpace(law_cech_axioms),
    },
    Law {
        id: "nonidempotency_witnesses",
        kind: LawKind::Probe,
        summary: "How often one closure step fails to reach the fixpoint.",
        note: Some("finds are expected: one step of the closure is not idempotent in general"),
        body: LawBody::PerSpace(law_nonidempotency_witnesses),
    },
    Law {
        id: "iterated_closure_kuratowski",
        kind: LawKind::Asserted,
        summary: "The iterated closure is grounded, extensive, additive, and idempotent.",
        note: None,
        body: LawBody::PerSpace(law_iterated_closure_kuratowski),
    },
    Law {
        id: "stabilization_bound",
        kind: LawKind::Asserted,
        summary: "The closure iteration adds at least one point per step, so it settles within \
                  the co-size of the start set.",
        note: None,
        body: LawBody::PerSpace(law_stabilization_bound),
    },
    Law {
        id: "transitive_idempotency",
        kind: LawKind::Asserted,
        summary: "A transitive scope makes the single-step closure idempotent, collapsing it \
                  onto its iterate.",
        note: None,
        body: LawBody::PerSpace(law_transitive_idempotency),
    },
    Law {
        id: "duality",
        kind: LawKind::Asserted,
        summary: "Every interior operator is the bit-exact complement dual of its closure.",
        note: None,
        body: LawBody::PerSpace(law_duality),
    },
    Law {
        id: "psi_properties",
        kind: LawKind::Asserted,
        summary: "The co-local operator fixes the carrier, is pinned on the empty set by scopes \
                  inside the ideal, distributes over intersections, refines its classical \
                  counterpart, and absorbs ideal members under a transitive scope.",
        note: None,
        body: LawBody::PerSpace(law_psi_properties),
    },
    Law {
        id: "psi_characterization",
        kind: LawKind::Asserted,
        summary: "Under a transitive scope, membership in the derived topology is exactly \
                  self-containment under the co-local operator.",
        note: None,
        body: LawBody::PerSpace(law_psi_characterization),
    },
    Law {
        id: "psi_characterization_nontransitive",
        kind: LawKind::Probe,
        summary: "Whether that characterization also holds once transitivity is dropped.",
        note: Some(
            "no find means no counterexample to dropping the transitivity hypothesis has \
             appeared on the checked spaces",
        ),
        body: LawBody::PerSpace(law_psi_characterization_nontransitive),
    },
    Law {
        id: "property_vii_nontransitive",
        kind: LawKind::Probe,
        summary: "Whether difference invariance and ideal absorption survive without \
                  transitivity.",
        note: Some(
            "no find is expected: heredity and union-closure of the ideal already force both \
             identities",
        ),
        body: LawBody::PerSpace(law_property_vii_nontransitive),
    },
    Law {
        id: "derived_families_are_topologies",
        kind: LawKind::Asserted,
        summary: "All four derived families satisfy the topology axioms.",
        note: None,
        body: LawBody::PerSpace(law_derived_families_are_topologies),
    },
    Law {
        id: "topology_chain",
        kind: LawKind::Asserted,
        summary: "The derived topologies form an inclusion chain from the scope topology up to \
                  the star topology.",
        note: None,
        body: LawBody::PerSpace(law_topology_chain),
    },
    Law {
        id: "chain_tau_containment",
        kind: LawKind::Probe,
        summary: "Whether the single-step family stays inside the base topology when the ideal \
                  is nontrivial.",
        note: Some(
            "finds are expected: the stronger containment does not hold in general, and each \
             record is a member of the single-step family outside the base opens",
        ),
        body: LawBody::PerSpace(law_chain_tau_containment),
    },
    Law {
        id: "chain_special_cases",
        kind: LawKind::Asserted,
        summary: "The degenerate collapses: trivial ideal, improper ideal, and everywhere-full \
                  scope.",
        note: None,
        body: LawBody::PerSpace(law_chain_special_cases),
    },
    Law {
        id: "trivial_ideal_reduction",
        kind: LawKind::Asserted,
        summary: "With the trivial ideal every operator and class reduces to its pure-scope \
                  counterpart.",
        note: None,
        body: LawBody::PerSpace(law_trivial_ideal_reduction),
    },
    Law {
        id: "finite_ideal_reduction",
        kind: LawKind::Asserted,
        summary: "On a finite carrier the finite-subsets ideal is improper, so the scope-local \
                  image vanishes and the derived topology is discrete.",
        note: None,
        body: LawBody::PerSpace(law_finite_ideal_reduction),
    },
    Law {
        id: "improper_ideal_reduction",
        kind: LawKind::Asserted,
        summary: "With the improper ideal the closure is the identity and every derived \
                  topology is discrete.",
        note: None,
        body: LawBody::PerSpace(law_improper_ideal_reduction),
    },
    Law {
        id: "basis_generates",
        kind: LawKind::Asserted,
        summary: "Under a transitive scope the scope-minus-ideal-member family generates \
                  exactly the derived topology.",
        note: None,
        body: LawBody::PerSpace(law_basis_generates),
    },
    Law {
        id: "genopen_hierarchy",
        kind: LawKind::Asserted,
        summary: "Single-step open implies alpha, alpha implies semi and pre, and each of \
                  those implies beta.",
        note: None,
        body: LawBody::PerSpace(law_genopen_hierarchy),
    },
    Law {
        id: "genopen_decomposition",
        kind: LawKind::Asserted,
        summary: "Under a transitive scope, semi plus pre adds up to alpha.",
        note: None,
        body: LawBody::PerSpace(law_genopen_decomposition),
    },
    Law {
        id: "genopen_decomposition_nontransitive",
        kind: LawKind::Probe,
        summary: "How often semi plus pre fails to reach alpha once transitivity is dropped.",
        note: Some(
            "finds are expected: without transitivity a set can be semi and pre without being \
             alpha",
        ),
        body: LawBody::PerSpace(law_genopen_decomposition_nontransitive),
    },
    Law {
        id: "reduction_diagram",
        kind: LawKind::Asserted,
        summary: "Scope-open sets are open in the single-step sense, and with the trivial ideal \
                  the two classes coincide.",
        note: None,
        body: LawBody::PerSpace(law_reduction_diagram),
    },
    Law {
        id: "compat_iopen_vs_iaopen",
        kind: LawKind::Probe,
        summary: "How the interior-of-star-closure class and the single-step class separate in \
                  both directions.",
        note: Some(
            "finds in both directions are expected: the two notions are independent in general",
        ),
        body: LawBody::PerSpace(law_compat_iopen_vs_iaopen),
    },
    Law {
        id: "continuity_hierarchy",
        kind: LawKind::Asserted,
        summary: "Map-level continuity grades inherit the set-level hierarchy preimage by \
                  preimage.",
        note: None,
        body: LawBody::Map(MapLaw::Hierarchy),
    },
    Law {
        id: "continuity_decomposition",
        kind: LawKind::Asserted,
        summary: "For transitive sources, continuity for the derived topology is claimed \
                  equivalent to semi plus pre, and to alpha.",
        note: Some(
            "records are maps whose preimages of base opens are all alpha open (hence semi and \
             pre) yet not all open in the derived topology; only the forward directions of the \
             equivalences hold on this grid",
        ),
        body: LawBody::Map(MapLaw::Decomposition),
    },
    Law {
        id: "comparison_chain",
        kind: LawKind::Asserted,
        summary: "Scope-topology continuity implies derived-topology continuity, which implies \
                  star-topology continuity.",
        note: None,
        body: LawBody::Map(MapLaw::Comparison),
    },
    Law {
        id: "comparison_clause_iii",
        kind: LawKind::Probe,
        summary: "Whether star-topology continuity forces base-topology continuity.",
        note: Some(
            "finds are expected: the topologies include each other the other way around, so \
             star-topology continuity is the weaker property",
        ),
        body: LawBody::Map(MapLaw::ComparisonIii),
    },
    Law {
        id: "fixture_corpus",
        kind: LawKind::Corpus,
        summary: "Every frozen fixture expectation replays bit-exactly.",
        note: None,
        body: LawBody::Corpus,
    },
];
