//! Witness search: scan enumerated or sampled spaces for the first space
//! exhibiting a named phenomenon, and return it as a self-verifying record.
//!
//! In exhaustive mode "first" is first in the fixed enumeration order, so a
//! witness index is stable across runs and machines; in random mode it is the
//! first hit in the seeded draw sequence. Every witness carries enough data
//! for [`Witness::verify`] to re-derive the claim from scratch.

use std::collections::BTreeMap;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::analysis::SpaceAnalysis;
use crate::enumerate::{enumerate_spaces, SearchConfig, SearchError};
use crate::io::{self, ParseError};
use crate::laws::{self, MAX_EXHAUSTIVE_LAW_POINTS};
use crate::set::PointSet;
use crate::space::IdealAuraSpace;

/// A searchable phenomenon. Subset predicates fire on a single subset of one
/// space; the comparison predicate pairs each space with every same-size
/// target space and map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// The classical local image of some subset is strictly smaller than its
    /// scope-local image.
    StrictStarAura,
    /// Some scope-local image is not closed in the base topology.
    AuraLocalNotClosed,
    /// Some subset needs at least `k` closure steps to stabilize.
    NonidempotentK(u8),
    /// The derived topology strictly refines the scope topology.
    TauAuraStrictTausa,
    /// The star topology strictly refines the derived topology.
    TausaStrictTaustar,
    /// The single-step family contains a set outside the base topology.
    TausacNotInTau,
    /// A semi open set that is not alpha open.
    SemiNotAlpha,
    /// A pre open set that is not alpha open.
    PreNotAlpha,
    /// A beta open set that is neither semi nor pre open.
    BetaNotSemiNotPre,
    /// On a non-transitive scope, a set that is semi and pre but not alpha.
    SemiAndPreNotAlphaNontransitive,
    /// On a non-transitive scope, failure of the difference or absorption
    /// identity. Expected never to fire: the ideal axioms alone force both.
    PropertyViiNontransitiveFail,
    /// A set inside the interior of its star closure that is not single-step
    /// open.
    IopenNotIaopen,
    /// A single-step open set that escapes the interior of its star closure.
    IaopenNotIopen,
    /// A map that is star-topology continuous but not base continuous.
    ComparisonIiiFail,
    /// A nontrivial ideal under which the derived topology collapses onto
    /// the scope topology.
    TausaEqTauAura,
}

/// Spellings accepted by [`Predicate::parse`], for help text.
pub const PREDICATE_NAMES: [&str; 15] = [
    "STRICT_STAR_AURA",
    "AURA_LOCAL_NOT_CLOSED",
    "NONIDEMPOTENT_K(k)",
    "TAU_AURA_STRICT_TAUSA",
    "TAUSA_STRICT_TAUSTAR",
    "TAUSAC_NOT_IN_TAU",
    "SEMI_NOT_ALPHA",
    "PRE_NOT_ALPHA",
    "BETA_NOT_SEMI_NOT_PRE",
    "SEMI_AND_PRE_NOT_ALPHA_NONTRANSITIVE",
    "PROPERTY_VII_NONTRANSITIVE_FAIL",
    "IOPEN_NOT_IAOPEN",
    "IAOPEN_NOT_IOPEN",
    "COMPARISON_III_FAIL",
    "TAUSA_EQ_TAU_AURA",
];

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct PredicateParseError(String);

impl Predicate {
    pub fn parse(name: &str) -> Result<Predicate, PredicateParseError> {
        match name {
            "STRICT_STAR_AURA" => return Ok(Predicate::StrictStarAura),
            "AURA_LOCAL_NOT_CLOSED" => return Ok(Predicate::AuraLocalNotClosed),
            "TAU_AURA_STRICT_TAUSA" => return Ok(Predicate::TauAuraStrictTausa),
            "TAUSA_STRICT_TAUSTAR" => return Ok(Predicate::TausaStrictTaustar),
            "TAUSAC_NOT_IN_TAU" => return Ok(Predicate::TausacNotInTau),
            "SEMI_NOT_ALPHA" => return Ok(Predicate::SemiNotAlpha),
            "PRE_NOT_ALPHA" => return Ok(Predicate::PreNotAlpha),
            "BETA_NOT_SEMI_NOT_PRE" => return Ok(Predicate::BetaNotSemiNotPre),
            "SEMI_AND_PRE_NOT_ALPHA_NONTRANSITIVE" => {
                return Ok(Predicate::SemiAndPreNotAlphaNontransitive)
            }
            "PROPERTY_VII_NONTRANSITIVE_FAIL" => {
                return Ok(Predicate::PropertyViiNontransitiveFail)
            }
            "IOPEN_NOT_IAOPEN" => return Ok(Predicate::IopenNotIaopen),
            "IAOPEN_NOT_IOPEN" => return Ok(Predicate::IaopenNotIopen),
            "COMPARISON_III_FAIL" => return Ok(Predicate::ComparisonIiiFail),
            "TAUSA_EQ_TAU_AURA" => return Ok(Predicate::TausaEqTauAura),
            _ => {}
        }
        if let Some(arg) = name
            .strip_prefix("NONIDEMPOTENT_K(")
            .and_then(|rest| rest.strip_suffix(')'))
        {
            let k: u8 = arg.parse().map_err(|_| {
                PredicateParseError(format!(
                    "NONIDEMPOTENT_K takes a small positive integer, not {arg:?}"
                ))
            })?;
            if k == 0 {
                return Err(PredicateParseError(
                    "NONIDEMPOTENT_K(0) holds everywhere; the step count must be at least 1"
                        .to_string(),
                ));
            }
            return Ok(Predicate::NonidempotentK(k));
        }
        Err(PredicateParseError(format!(
            "unknown predicate {name:?}; known predicates: {}",
            PREDICATE_NAMES.join(", ")
        )))
    }
}

// Display spelling matches what `parse` accepts, including the applied step
// count.
impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Predicate::StrictStarAura => f.write_str("STRICT_STAR_AURA"),
            Predicate::AuraLocalNotClosed => f.write_str("AURA_LOCAL_NOT_CLOSED"),
            Predicate::NonidempotentK(k) => write!(f, "NONIDEMPOTENT_K({k})"),
            Predicate::TauAuraStrictTausa => f.write_str("TAU_AURA_STRICT_TAUSA"),
            Predicate::TausaStrictTaustar => f.write_str("TAUSA_STRICT_TAUSTAR"),
            Predicate::TausacNotInTau => f.write_str("TAUSAC_NOT_IN_TAU"),
            Predicate::SemiNotAlpha => f.write_str("SEMI_NOT_ALPHA"),
            Predicate::PreNotAlpha => f.write_str("PRE_NOT_ALPHA"),
            Predicate::BetaNotSemiNotPre => f.write_str("BETA_NOT_SEMI_NOT_PRE"),
            Predicate::SemiAndPreNotAlphaNontransitive => {
                f.write_str("SEMI_AND_PRE_NOT_ALPHA_NONTRANSITIVE")
            }
            Predicate::PropertyViiNontransitiveFail => {
                f.write_str("PROPERTY_VII_NONTRANSITIVE_FAIL")
            }
            Predicate::IopenNotIaopen => f.write_str("IOPEN_NOT_IAOPEN"),
            Predicate::IaopenNotIopen => f.write_str("IAOPEN_NOT_IOPEN"),
            Predicate::ComparisonIiiFail => f.write_str("COMPARISON_III_FAIL"),
            Predicate::TausaEqTauAura => f.write_str("TAUSA_EQ_TAU_AURA"),
        }
    }
}

/// One found phenomenon, carrying everything needed to re-derive it.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub predicate: Predicate,
    /// Position of `space` in the search stream: the fixed enumeration index
    /// in exhaustive mode, the accepted-draw index in random mode.
    pub index: u64,
    pub space: IdealAuraSpace,
    /// The subset the predicate fired on, for subset predicates.
    pub subset: Option<PointSet>,
    /// Target space of the found map, for the comparison predicate.
    pub target: Option<IdealAuraSpace>,
    /// Point map into `target`, indexed by source point.
    pub map: Option<Vec<usize>>,
    /// Human-readable account of what was found.
    pub detail: String,
}

impl Witness {
    /// Re-derives the claim from the stored space(s) alone. False means the
    /// record does not actually witness its predicate.
    pub fn verify(&self) -> bool {
        match self.predicate {
            Predicate::ComparisonIiiFail => {
                let (Some(target), Some(map)) = (&self.target, &self.map) else {
                    return false;
                };
                if self.subset.is_some()
                    || map.len() != self.space.n()
                    || map.iter().any(|&j| j >= target.n())
                {
                    return false;
                }
                let src = SpaceAnalysis::new(&self.space);
                let tgt = SpaceAnalysis::new(target);
                let p = laws::eval_plain_profile(&src, &tgt, map);
                p.star && !p.tau
            }
            p => {
                if self.target.is_some() || self.map.is_some() {
                    return false;
                }
                subset_witnesses(&SpaceAnalysis::new(&self.space), p, self.subset)
            }
        }
    }
}

/// Does `subset` witness `p` on this space? Subset predicates require the
/// firing subset; space-level predicates require `None`.
fn subset_witnesses(an: &SpaceAnalysis, p: Predicate, subset: Option<PointSet>) -> bool {
    if let Predicate::TausaEqTauAura = p {
        return subset.is_none()
            && !an.space.ideal().is_trivial()
            && an.tausa == an.tau_aura;
    }
    let Some(s) = subset else { return false };
    if s.bits() as usize >= an.size {
        return false;
    }
    let a = s.bits() as usize;
    let m = an.space.ideal().max().bits();
    let iopen = |a: usize| a as u32 & !an.int_plain[an.cl_star[a] as usize] == 0;
    match p {
        Predicate::StrictStarAura => an.star[a] != an.aura_local[a],
        Predicate::AuraLocalNotClosed => {
            an.cl_plain[an.aura_local[a] as usize] != an.aura_local[a]
        }
        Predicate::NonidempotentK(k) => an.stabilized_at[a] >= k,
        Predicate::TauAuraStrictTausa => {
            an.tausa >> a & 1 == 1 && an.tau_aura >> a & 1 == 0
        }
        Predicate::TausaStrictTaustar => {
            an.tau_star >> a & 1 == 1 && an.tausa >> a & 1 == 0
        }
        Predicate::TausacNotInTau => an.tausa_c >> a & 1 == 1 && an.tau >> a & 1 == 0,
        Predicate::SemiNotAlpha => an.flags[a][1] && !an.flags[a][3],
        Predicate::PreNotAlpha => an.flags[a][2] && !an.flags[a][3],
        Predicate::BetaNotSemiNotPre => {
            an.flags[a][4] && !an.flags[a][1] && !an.flags[a][2]
        }
        Predicate::SemiAndPreNotAlphaNontransitive => {
            !an.transitive && an.flags[a][1] && an.flags[a][2] && !an.flags[a][3]
        }
        Predicate::PropertyViiNontransitiveFail => {
            !an.transitive
                && (an.aura_local[(a as u32 & !m) as usize] != an.aura_local[a]
                    || an.psi_aura[(a as u32 | m) as usize] != an.psi_aura[a])
        }
        Predicate::IopenNotIaopen => iopen(a) && !an.flags[a][0],
        Predicate::IaopenNotIopen => an.flags[a][0] && !iopen(a),
        Predicate::ComparisonIiiFail | Predicate::TausaEqTauAura => false,
    }
}

/// First subset (in ascending code order) witnessing `p`, with its account.
fn first_find(an: &SpaceAnalysis, p: Predicate) -> Option<(Option<PointSet>, String)> {
    let set = |s: u32| an.space.universe().format_set(PointSet::from_bits(s));
    if let Predicate::TausaEqTauAura = p {
        return subset_witnesses(an, p, None).then(|| {
            (
                None,
                "the derived topology equals the scope topology although the ideal is nontrivial"
                    .to_string(),
            )
        });
    }
    let a = (0..an.size).find(|&a| subset_witnesses(an, p, Some(PointSet::from_bits(a as u32))))?;
    let ab = a as u32;
    let detail = match p {
        Predicate::StrictStarAura => format!(
            "A={}: local image {} is strictly inside the scope-local image {}",
            set(ab),
            set(an.star[a]),
            set(an.aura_local[a])
        ),
        Predicate::AuraLocalNotClosed => format!(
            "A={}: scope-local image {} has closure {}",
            set(ab),
            set(an.aura_local[a]),
            set(an.cl_plain[an.aura_local[a] as usize])
        ),
        Predicate::NonidempotentK(k) => format!(
            "A={} needs {} growth steps to settle (threshold {k})",
            set(ab),
            an.stabilized_at[a]
        ),
        Predicate::TauAuraStrictTausa => {
            format!("G={} is in the derived topology but not scope-open", set(ab))
        }
        Predicate::TausaStrictTaustar => format!(
            "G={} is in the star topology but not in the derived topology",
            set(ab)
        ),
        Predicate::TausacNotInTau => format!(
            "G={} is open in the single-step sense but not a base open",
            set(ab)
        ),
        Predicate::SemiNotAlpha => format!("A={} is semi open but not alpha open", set(ab)),
        Predicate::PreNotAlpha => format!("A={} is pre open but not alpha open", set(ab)),
        Predicate::BetaNotSemiNotPre => format!(
            "A={} is beta open but neither semi nor pre open",
            set(ab)
        ),
        Predicate::SemiAndPreNotAlphaNontransitive => format!(
            "A={} is semi and pre open but not alpha open, and the scope is not transitive",
            set(ab)
        ),
        Predicate::PropertyViiNontransitiveFail => format!(
            "A={}: a difference or absorption identity failed without transitivity",
            set(ab)
        ),
        Predicate::IopenNotIaopen => format!(
            "A={} sits inside the interior of its star closure but is not single-step open",
            set(ab)
        ),
        Predicate::IaopenNotIopen => format!(
            "A={} is single-step open but escapes the interior of its star closure",
            set(ab)
        ),
        Predicate::ComparisonIiiFail | Predicate::TausaEqTauAura => unreachable!(),
    };
    Some((Some(PointSet::from_bits(ab)), detail))
}

/// Finds the first witness of `predicate` in the stream of `config`, or
/// `Ok(None)` when the stream is exhausted without a hit.
pub fn find_witness(
    predicate: Predicate,
    config: &SearchConfig,
) -> Result<Option<Witness>, SearchError> {
    if let Predicate::ComparisonIiiFail = predicate {
        return find_map_witness(config);
    }
    for (index, space) in enumerate_spaces(config)?.enumerate() {
        let an = SpaceAnalysis::new(&space);
        if let Some((subset, detail)) = first_find(&an, predicate) {
            return Ok(Some(Witness {
                predicate,
                index: index as u64,
                space,
                subset,
                target: None,
                map: None,
                detail,
            }));
        }
    }
    Ok(None)
}

/// Comparison search: for each stream space, pair it with every same-size
/// space (in enumeration order) and every map, looking for star-topology
/// continuity without base continuity.
fn find_map_witness(config: &SearchConfig) -> Result<Option<Witness>, SearchError> {
    if config.n > MAX_EXHAUSTIVE_LAW_POINTS {
        return Err(SearchError::ScaleRefused {
            reason: format!(
                "the comparison search pairs every {0}-point target space with every map; \
                 it is capped at {MAX_EXHAUSTIVE_LAW_POINTS} points",
                config.n
            ),
        });
    }
    let targets: Vec<SpaceAnalysis> = enumerate_spaces(&SearchConfig::exhaustive(config.n))?
        .map(|s| SpaceAnalysis::new(&s))
        .collect();
    let mut map = Vec::with_capacity(config.n);
    for (index, space) in enumerate_spaces(config)?.enumerate() {
        let src = SpaceAnalysis::new(&space);
        for tgt in &targets {
            let total = (tgt.n as u64).pow(src.n as u32);
            for code in 0..total {
                laws::decode_map(code, src.n, tgt.n, &mut map);
                let p = laws::eval_plain_profile(&src, tgt, &map);
                if p.star && !p.tau {
                    let broken = laws::family_members(tgt.tau, tgt.size).find(|&v| {
                        let pre = laws::preimage_of(&map, v) as u32;
                        !SpaceAnalysis::in_family(src.tau, PointSet::from_bits(pre))
                    });
                    let detail = match broken {
                        Some(v) => format!(
                            "every target-open preimage is star-open, but the preimage {} of {} \
                             is not a base open",
                            src.space.universe().format_set(PointSet::from_bits(
                                laws::preimage_of(&map, v) as u32
                            )),
                            tgt.space.universe().format_set(PointSet::from_bits(v)),
                        ),
                        None => "star-topology continuous but not base continuous".to_string(),
                    };
                    return Ok(Some(Witness {
                        predicate: Predicate::ComparisonIiiFail,
                        index: index as u64,
                        space,
                        subset: None,
                        target: Some(tgt.space.clone()),
                        map: Some(map.clone()),
                        detail,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Histogram of spaces by the worst stabilization step count of their
/// single-step closure. Asserts the theoretical bound (at most one growth
/// step per point) on every space it visits.
pub fn stabilization_census(config: &SearchConfig) -> Result<BTreeMap<usize, u64>, SearchError> {
    let mut hist = BTreeMap::new();
    for space in enumerate_spaces(config)? {
        let an = SpaceAnalysis::new(&space);
        let worst = an.max_stabilization();
        assert!(
            worst <= an.n,
            "closure iteration exceeded the point count on {}",
            laws::describe_space(&space)
        );
        *hist.entry(worst).or_insert(0u64) += 1;
    }
    Ok(hist)
}

// ---------------------------------------------------------------------------
// Witness files
// ---------------------------------------------------------------------------

/// Canonical JSON value for a witness: the witnessing space's own file shape
/// with a `witness` annotation block carrying the predicate, stream index,
/// and the firing subset or map. The result is a valid space file, so space
/// readers accept witness files unchanged.
pub fn witness_to_json(w: &Witness) -> Value {
    let Value::Object(mut obj) = io::space_to_json(&w.space) else {
        unreachable!("space serialization is an object");
    };
    let mut block = Map::new();
    block.insert("predicate".into(), Value::String(w.predicate.to_string()));
    block.insert("index".into(), Value::Number(w.index.into()));
    if let Some(s) = w.subset {
        block.insert(
            "subset".into(),
            Value::Array(
                io::set_to_names(w.space.universe(), s)
                    .into_iter()
                    .map(Value::String)
                    .collect(),
            ),
        );
    }
    if let (Some(target), Some(map)) = (&w.target, &w.map) {
        block.insert("target".into(), io::space_to_json(target));
        block.insert(
            "map".into(),
            Value::Object(
                map.iter()
                    .enumerate()
                    .map(|(i, &j)| {
                        (
                            w.space.universe().name(i).to_string(),
                            Value::String(target.universe().name(j).to_string()),
                        )
                    })
                    .collect(),
            ),
        );
    }
    block.insert("detail".into(), Value::String(w.detail.clone()));
    obj.insert("witness".into(), Value::Object(block));
    Value::Object(obj)
}

/// Pretty-printed canonical text plus a trailing newline; `parse_witness`
/// followed by `serialize_witness` is the identity on its output.
pub fn serialize_witness(w: &Witness) -> String {
    let mut text = serde_json::to_string_pretty(&witness_to_json(w)).expect("serialization");
    text.push('\n');
    text
}

fn structure(msg: impl Into<String>) -> ParseError {
    ParseError::Structure(msg.into())
}

pub fn parse_witness(text: &str) -> Result<Witness, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let file = value
        .as_object()
        .ok_or_else(|| structure("witness file must be a JSON object"))?;
    let space = io::space_from_object(file)?;
    let obj = file
        .get("witness")
        .and_then(Value::as_object)
        .ok_or_else(|| structure("witness file is missing the \"witness\" block"))?;
    for key in obj.keys() {
        if !["predicate", "index", "subset", "target", "map", "detail"].contains(&key.as_str()) {
            return Err(structure(format!(
                "\"witness\" block has unrecognized key {key:?}"
            )));
        }
    }
    let predicate_name = obj
        .get("predicate")
        .and_then(Value::as_str)
        .ok_or_else(|| structure("\"witness\" block is missing \"predicate\""))?;
    let predicate =
        Predicate::parse(predicate_name).map_err(|e| structure(format!("bad predicate: {e}")))?;
    let index = obj
        .get("index")
        .and_then(Value::as_u64)
        .ok_or_else(|| structure("\"witness\" block needs a numeric \"index\""))?;
    let detail = obj
        .get("detail")
        .and_then(Value::as_str)
        .ok_or_else(|| structure("\"witness\" block is missing \"detail\""))?
        .to_string();

    let subset = match obj.get("subset") {
        None => None,
        Some(v) => {
            let names: Vec<String> = v
                .as_array()
                .ok_or_else(|| structure("\"subset\" must be an array of point names"))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| structure("\"subset\" must contain only strings"))
                })
                .collect::<Result<_, _>>()?;
            Some(
                space
                    .universe()
                    .set_from_names(&names)
                    .map_err(|bad| structure(format!("\"subset\" mentions unknown point {bad:?}")))?,
            )
        }
    };

    let (target, map) = match (obj.get("target"), obj.get("map")) {
        (None, None) => (None, None),
        (Some(tv), Some(mv)) => {
            let target_obj = tv
                .as_object()
                .ok_or_else(|| structure("\"target\" must be a space object"))?;
            let target = io::space_from_object(target_obj)?;
            let map_obj = mv
                .as_object()
                .ok_or_else(|| structure("\"map\" must be an object"))?;
            for key in map_obj.keys() {
                if space.universe().index(key).is_none() {
                    return Err(structure(format!(
                        "\"map\" has unknown source point {key:?}"
                    )));
                }
            }
            let mut table = Vec::with_capacity(space.n());
            for i in 0..space.n() {
                let name = space.universe().name(i);
                let tname = map_obj
                    .get(name)
                    .and_then(Value::as_str)
                    .ok_or_else(|| structure(format!("\"map\" is missing source point {name:?}")))?;
                let j = target.universe().index(tname).ok_or_else(|| {
                    structure(format!(
                        "\"map\".{name:?} names unknown target point {tname:?}"
                    ))
                })?;
                table.push(j);
            }
            (Some(target), Some(table))
        }
        _ => {
            return Err(structure(
                "witness files carry \"target\" and \"map\" together or not at all",
            ))
        }
    };

    Ok(Witness {
        predicate,
        index,
        space,
        subset,
        target,
        map,
        detail,
    })
}
