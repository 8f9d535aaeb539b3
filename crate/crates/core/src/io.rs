//! JSON space files: parsing with exhaustive error reporting, and a canonical
//! serialization, so that parse-then-serialize is the identity on canonical
//! files.
//!
//! A space file looks like:
//!
//! ```json
//! {
//!   "format": "auraspace/1",
//!   "points": ["a", "b", "c"],
//!   "opens": [[], ["a"], ["a", "b", "c"]],
//!   "ideal": { "members": [[], ["c"]] },
//!   "aura": { "a": ["a"], "b": ["a", "b", "c"], "c": ["a", "b", "c"] }
//! }
//! ```
//!
//! Sets are arrays of point names. The ideal is given either by `members`
//! (every member listed) or by `generators` (the ideal is all subsets of the
//! union of the generators); canonical output always lists `members`. The
//! `format` tag may be omitted on input but any other value than
//! `"auraspace/1"` is rejected.
//!
//! An optional top-level `witness` block is allowed and ignored here: search
//! findings are written as ordinary space files annotated with one, so every
//! witness file is readable by anything that reads spaces. The block itself
//! is the search module's business.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::continuity::SpaceMap;
use crate::set::{PointSet, SetFamily, Universe};
use crate::space::{IdealAuraSpace, ValidationError};

pub const FORMAT_TAG: &str = "auraspace/1";

#[derive(Debug, Error)]
pub enum ParseError {
    /// The text is not JSON at all.
    #[error("invalid JSON: {0}")]
    Json(String),
    /// The format tag is present but names a format this parser does not read.
    #[error("unsupported format {found:?} (this reader understands {FORMAT_TAG:?})")]
    Format { found: String },
    /// The JSON is well-formed but not shaped like a space file.
    #[error("{0}")]
    Structure(String),
    /// The file is shaped correctly but the components break the axioms.
    /// Every violation is listed, not just the first.
    #[error(transparent)]
    Axioms(#[from] ValidationError),
}

impl ParseError {
    /// Axiom failures mean "well-formed but not a space"; everything else is
    /// a malformed file. Callers use this to pick exit codes.
    pub fn is_axiom_failure(&self) -> bool {
        matches!(self, ParseError::Axioms(_))
    }
}

fn structure(msg: impl Into<String>) -> ParseError {
    ParseError::Structure(msg.into())
}

pub fn set_to_names(u: &Universe, s: PointSet) -> Vec<String> {
    s.iter().map(|i| u.name(i).to_string()).collect()
}

fn names_value(u: &Universe, s: PointSet) -> Value {
    Value::Array(set_to_names(u, s).into_iter().map(Value::String).collect())
}

fn family_value(u: &Universe, f: &SetFamily) -> Value {
    Value::Array(f.iter().map(|s| names_value(u, s)).collect())
}

fn expect_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, ParseError> {
    v.as_object()
        .ok_or_else(|| structure(format!("{what} must be a JSON object")))
}

fn expect_string_array(v: &Value, what: &str) -> Result<Vec<String>, ParseError> {
    let arr = v
        .as_array()
        .ok_or_else(|| structure(format!("{what} must be an array")))?;
    arr.iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| structure(format!("{what} must contain only strings")))
        })
        .collect()
}

fn parse_named_set(u: &Universe, v: &Value, what: &str) -> Result<PointSet, ParseError> {
    let names = expect_string_array(v, what)?;
    u.set_from_names(&names)
        .map_err(|bad| structure(format!("{what} mentions unknown point {bad:?}")))
}

fn parse_family(u: &Universe, v: &Value, what: &str) -> Result<SetFamily, ParseError> {
    let arr = v
        .as_array()
        .ok_or_else(|| structure(format!("{what} must be an array of sets")))?;
    let mut members = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        members.push(parse_named_set(u, item, &format!("{what}[{i}]"))?);
    }
    Ok(SetFamily::new(members))
}

fn reject_unknown_keys(obj: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<(), ParseError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(structure(format!("{what} has unrecognized key {key:?}")));
        }
    }
    Ok(())
}

pub(crate) fn space_from_object(obj: &Map<String, Value>) -> Result<IdealAuraSpace, ParseError> {
    // "witness" is the annotation block on search findings; space readers
    // skip it.
    reject_unknown_keys(
        obj,
        &["format", "points", "opens", "ideal", "aura", "witness"],
        "space",
    )?;

    if let Some(tag) = obj.get("format") {
        let found = tag.as_str().unwrap_or_default();
        if found != FORMAT_TAG {
            return Err(ParseError::Format {
                found: found.to_string(),
            });
        }
    }

    let points = obj
        .get("points")
        .ok_or_else(|| structure("space is missing \"points\""))?;
    let names = expect_string_array(points, "\"points\"")?;
    let universe =
        Universe::new(names).map_err(|e| structure(format!("bad point list: {e}")))?;

    let opens_v = obj
        .get("opens")
        .ok_or_else(|| structure("space is missing \"opens\""))?;
    let opens = parse_family(&universe, opens_v, "\"opens\"")?;

    let ideal_v = obj
        .get("ideal")
        .ok_or_else(|| structure("space is missing \"ideal\""))?;
    let ideal_obj = expect_object(ideal_v, "\"ideal\"")?;
    reject_unknown_keys(ideal_obj, &["members", "generators"], "\"ideal\"")?;
    let ideal_members = match (ideal_obj.get("members"), ideal_obj.get("generators")) {
        (Some(_), Some(_)) => {
            return Err(structure(
                "\"ideal\" must give either \"members\" or \"generators\", not both",
            ))
        }
        (Some(m), None) => parse_family(&universe, m, "\"ideal\".\"members\"")?,
        (None, Some(g)) => {
            let gens = parse_family(&universe, g, "\"ideal\".\"generators\"")?;
            let mut max = PointSet::EMPTY;
            for s in gens.iter() {
                max = max | s;
            }
            SetFamily::new(
                universe
                    .subsets()
                    .filter(|s| s.is_subset_of(max))
                    .collect::<Vec<_>>(),
            )
        }
        (None, None) => {
            return Err(structure(
                "\"ideal\" must give \"members\" or \"generators\"",
            ))
        }
    };

    let aura_v = obj
        .get("aura")
        .ok_or_else(|| structure("space is missing \"aura\""))?;
    let aura_obj = expect_object(aura_v, "\"aura\"")?;
    for key in aura_obj.keys() {
        if universe.index(key).is_none() {
            return Err(structure(format!("\"aura\" has unknown point {key:?}")));
        }
    }
    let mut aura = Vec::with_capacity(universe.n());
    for i in 0..universe.n() {
        let name = universe.name(i);
        let v = aura_obj
            .get(name)
            .ok_or_else(|| structure(format!("\"aura\" is missing point {name:?}")))?;
        aura.push(parse_named_set(&universe, v, &format!("\"aura\".{name:?}"))?);
    }

    Ok(IdealAuraSpace::build(universe, opens, ideal_members, aura)?)
}

pub fn parse_space(text: &str) -> Result<IdealAuraSpace, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let obj = expect_object(&value, "space file")?;
    space_from_object(obj)
}

/// Canonical JSON value for a space: fixed key order, sets rendered as name
/// arrays in point order, the open family and ideal members in ascending
/// canonical set order, the ideal always spelled out as `members`.
pub fn space_to_json(space: &IdealAuraSpace) -> Value {
    let u = space.universe();
    json!({
        "format": FORMAT_TAG,
        "points": u.names(),
        "opens": family_value(u, space.topology().opens()),
        "ideal": { "members": family_value(u, space.ideal().members()) },
        "aura": Value::Object(
            (0..u.n())
                .map(|i| (u.name(i).to_string(), names_value(u, space.scope().value(i))))
                .collect(),
        ),
    })
}

/// Canonical text form: pretty-printed canonical JSON plus a trailing newline.
/// `parse_space` followed by `serialize_space` is the identity on its output.
pub fn serialize_space(space: &IdealAuraSpace) -> String {
    let mut text = serde_json::to_string_pretty(&space_to_json(space)).expect("serialization");
    text.push('\n');
    text
}

/// A map file names two spaces and a point mapping:
///
/// ```json
/// { "source": { ... }, "target": { ... }, "map": { "a": "x", "b": "y" } }
/// ```
///
/// `source` and `target` are inline space objects or strings, which the
/// `resolve` callback turns into space file text (the command line resolves
/// them as file paths relative to the map file).
pub fn parse_map<F>(text: &str, mut resolve: F) -> Result<SpaceMap, ParseError>
where
    F: FnMut(&str) -> Result<String, String>,
{
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let obj = expect_object(&value, "map file")?;
    reject_unknown_keys(obj, &["source", "target", "map"], "map file")?;

    let mut load_space = |key: &str| -> Result<IdealAuraSpace, ParseError> {
        let v = obj
            .get(key)
            .ok_or_else(|| structure(format!("map file is missing {key:?}")))?;
        match v {
            Value::Object(o) => space_from_object(o),
            Value::String(path) => {
                let text = resolve(path)
                    .map_err(|e| structure(format!("cannot read {key} {path:?}: {e}")))?;
                parse_space(&text)
            }
            _ => Err(structure(format!(
                "{key:?} must be a space object or a file path string"
            ))),
        }
    };

    let source = load_space("source")?;
    let target = load_space("target")?;

    let map_v = obj
        .get("map")
        .ok_or_else(|| structure("map file is missing \"map\""))?;
    let map_obj = expect_object(map_v, "\"map\"")?;
    for key in map_obj.keys() {
        if source.universe().index(key).is_none() {
            return Err(structure(format!(
                "\"map\" has unknown source point {key:?}"
            )));
        }
    }
    let mut table = Vec::with_capacity(source.n());
    for i in 0..source.n() {
        let name = source.universe().name(i);
        let v = map_obj
            .get(name)
            .ok_or_else(|| structure(format!("\"map\" is missing source point {name:?}")))?;
        let target_name = v
            .as_str()
            .ok_or_else(|| structure(format!("\"map\".{name:?} must be a point name")))?;
        let j = target.universe().index(target_name).ok_or_else(|| {
            structure(format!(
                "\"map\".{name:?} names unknown target point {target_name:?}"
            ))
        })?;
        table.push(j);
    }

    SpaceMap::new(source, target, table)
        .map_err(|e| structure(format!("bad point map: {e}")))
}

/// Canonical JSON for a map with both spaces inline.
pub fn map_to_json(map: &SpaceMap) -> Value {
    let su = map.source().universe();
    let tu = map.target().universe();
    json!({
        "source": space_to_json(map.source()),
        "target": space_to_json(map.target()),
        "map": Value::Object(
            (0..su.n())
                .map(|i| {
                    (
                        su.name(i).to_string(),
                        Value::String(tu.name(map.apply(i)).to_string()),
                    )
                })
                .collect(),
        ),
    })
}
