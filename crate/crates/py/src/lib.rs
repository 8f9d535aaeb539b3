//! Python bindings. Sets cross the boundary as lists of point names, spaces
//! as the `Space` class or their JSON text, maps as `{source: target}` name
//! dicts. Axiom and parse failures raise `ValueError`; refused scales raise
//! `RuntimeError`.

use std::collections::HashMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use auraspace::classify::{classify_with, ClosureMode};
use auraspace::continuity::{
    comparison_chain_check, decomposition_check, ia_continuity_profile, SpaceMap,
};
use auraspace::enumerate::SearchConfig;
use auraspace::io;
use auraspace::laws::{self, LawError, LawKind, LawReport, SpaceSource};
use auraspace::ops;
use auraspace::search::{self, Predicate};
use auraspace::set::{PointSet, SetFamily, Universe};
use auraspace::space::IdealAuraSpace;
use auraspace::{fixtures, topologies};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string().trim_end().to_string())
}

fn scale_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn names(u: &Universe, s: PointSet) -> Vec<String> {
    io::set_to_names(u, s)
}

fn family_names(u: &Universe, family: &SetFamily) -> Vec<Vec<String>> {
    family.iter().map(|s| names(u, s)).collect()
}

/// One finite ideal-aura space: a topology, an ideal, and an open scope set
/// around each point.
#[pyclass(frozen, module = "auraspace_py")]
struct Space {
    inner: IdealAuraSpace,
}

impl Space {
    fn pset(&self, subset: &[String]) -> PyResult<PointSet> {
        self.inner
            .universe()
            .set_from_names(subset)
            .map_err(|bad| value_err(format!("unknown point {bad:?}")))
    }

    fn op(&self, f: fn(&IdealAuraSpace, PointSet) -> PointSet, subset: Vec<String>) -> PyResult<Vec<String>> {
        Ok(names(
            self.inner.universe(),
            f(&self.inner, self.pset(&subset)?),
        ))
    }
}

#[pymethods]
impl Space {
    /// Build a space from scratch. `opens` and `ideal` list every member set;
    /// `aura` maps each point to its scope set. All axioms are checked.
    #[new]
    fn new(
        points: Vec<String>,
        opens: Vec<Vec<String>>,
        ideal: Vec<Vec<String>>,
        aura: HashMap<String, Vec<String>>,
    ) -> PyResult<Self> {
        let u = Universe::new(points).map_err(value_err)?;
        let to_family = |sets: &[Vec<String>]| -> PyResult<SetFamily> {
            sets.iter()
                .map(|s| {
                    u.set_from_names(s)
                        .map_err(|bad| value_err(format!("unknown point {bad:?}")))
                })
                .collect()
        };
        let opens = to_family(&opens)?;
        let ideal = to_family(&ideal)?;
        for name in aura.keys() {
            if u.index(name).is_none() {
                return Err(value_err(format!("aura names unknown point {name:?}")));
            }
        }
        let mut scopes = Vec::with_capacity(u.n());
        for i in 0..u.n() {
            let sets = aura
                .get(u.name(i))
                .ok_or_else(|| value_err(format!("aura is missing point {:?}", u.name(i))))?;
            scopes.push(
                u.set_from_names(sets)
                    .map_err(|bad| value_err(format!("unknown point {bad:?}")))?,
            );
        }
        let inner = IdealAuraSpace::build(u, opens, ideal, scopes).map_err(value_err)?;
        Ok(Space { inner })
    }

    /// Parse a space file's text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Space {
            inner: io::parse_space(text).map_err(value_err)?,
        })
    }

    /// Canonical space-file text; `from_json` of the result is the same space.
    fn to_json(&self) -> String {
        io::serialize_space(&self.inner)
    }

    fn describe(&self) -> String {
        laws::describe_space(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("<Space {}>", laws::describe_space(&self.inner))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.inner.universe().names().to_vec()
    }

    #[getter]
    fn is_transitive(&self) -> bool {
        self.inner.is_transitive()
    }

    fn opens(&self) -> Vec<Vec<String>> {
        family_names(self.inner.universe(), self.inner.topology().opens())
    }

    fn ideal_members(&self) -> Vec<Vec<String>> {
        family_names(self.inner.universe(), self.inner.ideal().members())
    }

    fn aura<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        let u = self.inner.universe();
        for i in 0..u.n() {
            d.set_item(u.name(i), names(u, self.inner.scope().value(i)))?;
        }
        Ok(d)
    }

    // The pointwise operators, named as in the command-line interface.

    fn star(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::local_star, subset)
    }

    fn auralocal(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::aura_local, subset)
    }

    fn clstar(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::star_closure, subset)
    }

    fn claura(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::aura_closure, subset)
    }

    fn intaura(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::aura_interior, subset)
    }

    fn clsa(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::ia_closure, subset)
    }

    fn psi(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::psi_aura, subset)
    }

    fn intsa(&self, subset: Vec<String>) -> PyResult<Vec<String>> {
        self.op(ops::ia_interior, subset)
    }

    /// Iterate the single-step closure to its fixpoint; returns the step
    /// chain and the stabilization index.
    fn trace(&self, subset: Vec<String>) -> PyResult<(Vec<Vec<String>>, usize)> {
        let t = ops::ia_closure_trace(&self.inner, self.pset(&subset)?);
        let u = self.inner.universe();
        Ok((
            t.steps().iter().map(|s| names(u, *s)).collect(),
            t.stabilized_at(),
        ))
    }

    // The derived topologies and the basis family.

    fn tau_aura(&self) -> Vec<Vec<String>> {
        family_names(
            self.inner.universe(),
            topologies::gen_tau_aura(&self.inner).opens(),
        )
    }

    fn tau_star(&self) -> Vec<Vec<String>> {
        family_names(
            self.inner.universe(),
            topologies::gen_tau_star(&self.inner).opens(),
        )
    }

    fn tausa(&self) -> Vec<Vec<String>> {
        family_names(
            self.inner.universe(),
            topologies::gen_tausa(&self.inner).opens(),
        )
    }

    fn tausa_c(&self) -> Vec<Vec<String>> {
        family_names(
            self.inner.universe(),
            topologies::gen_tausa_c(&self.inner).opens(),
        )
    }

    fn beta_basis(&self) -> Vec<Vec<String>> {
        family_names(
            self.inner.universe(),
            &topologies::gen_basis_beta(&self.inner),
        )
    }

    /// The six openness flags of one subset.
    #[pyo3(signature = (subset, iterated = false))]
    fn classify<'py>(
        &self,
        py: Python<'py>,
        subset: Vec<String>,
        iterated: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let mode = if iterated {
            ClosureMode::Iterated
        } else {
            ClosureMode::SingleStep
        };
        let p = classify_with(&self.inner, self.pset(&subset)?, mode);
        let d = PyDict::new(py);
        d.set_item("ia_open", p.ia_open)?;
        d.set_item("semi", p.semi)?;
        d.set_item("pre", p.pre)?;
        d.set_item("alpha", p.alpha)?;
        d.set_item("beta", p.beta)?;
        d.set_item("b_set", p.b_set)?;
        Ok(d)
    }
}

fn build_map(source: &Space, target: &Space, mapping: HashMap<String, String>) -> PyResult<SpaceMap> {
    let su = source.inner.universe();
    let tu = target.inner.universe();
    for name in mapping.keys() {
        if su.index(name).is_none() {
            return Err(value_err(format!("map names unknown source point {name:?}")));
        }
    }
    let mut table = Vec::with_capacity(su.n());
    for i in 0..su.n() {
        let name = su.name(i);
        let t = mapping
            .get(name)
            .ok_or_else(|| value_err(format!("map is missing source point {name:?}")))?;
        table.push(
            tu.index(t)
                .ok_or_else(|| value_err(format!("map sends {name:?} to unknown point {t:?}")))?,
        );
    }
    SpaceMap::new(source.inner.clone(), target.inner.clone(), table).map_err(value_err)
}

/// Preimage classes of the target's derived opens: continuity into the
/// derived topology plus the four generalized forms.
#[pyfunction]
fn continuity_profile<'py>(
    py: Python<'py>,
    source: PyRef<'_, Space>,
    target: PyRef<'_, Space>,
    mapping: HashMap<String, String>,
) -> PyResult<Bound<'py, PyDict>> {
    let map = build_map(&source, &target, mapping)?;
    let p = ia_continuity_profile(&map);
    let d = PyDict::new(py);
    d.set_item("continuous", p.continuous)?;
    d.set_item("semi", p.semi)?;
    d.set_item("pre", p.pre)?;
    d.set_item("alpha", p.alpha)?;
    d.set_item("beta", p.beta)?;
    Ok(d)
}

/// The four continuity notions against plain target opens and the three
/// implications between them.
#[pyfunction]
fn comparison_chain<'py>(
    py: Python<'py>,
    source: PyRef<'_, Space>,
    target: PyRef<'_, Space>,
    mapping: HashMap<String, String>,
) -> PyResult<Bound<'py, PyDict>> {
    let map = build_map(&source, &target, mapping)?;
    let c = comparison_chain_check(&map);
    let d = PyDict::new(py);
    d.set_item("aura_continuous", c.aura_continuous)?;
    d.set_item("tausa_continuous", c.tausa_continuous)?;
    d.set_item("star_continuous", c.star_continuous)?;
    d.set_item("tau_continuous", c.tau_continuous)?;
    d.set_item("step_one_holds", c.step_one_holds)?;
    d.set_item("step_two_holds", c.step_two_holds)?;
    d.set_item("step_three_holds", c.step_three_holds)?;
    Ok(d)
}

/// The decomposition equivalences for a map out of a transitive source.
/// Raises `ValueError` when the source scope is not transitive.
#[pyfunction]
fn decomposition<'py>(
    py: Python<'py>,
    source: PyRef<'_, Space>,
    target: PyRef<'_, Space>,
    mapping: HashMap<String, String>,
) -> PyResult<Bound<'py, PyDict>> {
    let map = build_map(&source, &target, mapping)?;
    let r = decomposition_check(&map)
        .map_err(|_| value_err("source scope is not transitive"))?;
    let d = PyDict::new(py);
    d.set_item("tausa_continuous", r.tausa_continuous)?;
    d.set_item("semi_continuous", r.semi_continuous)?;
    d.set_item("pre_continuous", r.pre_continuous)?;
    d.set_item("alpha_continuous", r.alpha_continuous)?;
    d.set_item("semi_pre_equivalence_holds", r.semi_pre_equivalence_holds)?;
    d.set_item("alpha_equivalence_holds", r.alpha_equivalence_holds)?;
    d.set_item(
        "witness",
        r.witness.map(|w| names(map.target().universe(), w)),
    )?;
    Ok(d)
}

/// Scan spaces of size `n` for the first witness of a predicate. Returns the
/// witness file text (a space file with a `witness` block), or None.
#[pyfunction]
#[pyo3(signature = (predicate, n, mode = "exhaustive", seed = 1, budget = 1_000_000, discrete = false, canonical = false))]
#[allow(clippy::too_many_arguments)]
fn find_witness(
    py: Python<'_>,
    predicate: &str,
    n: usize,
    mode: &str,
    seed: u64,
    budget: u64,
    discrete: bool,
    canonical: bool,
) -> PyResult<Option<String>> {
    let p = Predicate::parse(predicate).map_err(value_err)?;
    let mut config = match mode {
        "exhaustive" => SearchConfig::exhaustive(n),
        "random" => SearchConfig::random(n, seed, budget),
        other => return Err(value_err(format!("unknown mode {other:?}"))),
    };
    if discrete {
        config = config.discrete_only();
    }
    config.canonicalize = canonical;
    let found = py
        .detach(|| search::find_witness(p, &config))
        .map_err(scale_err)?;
    Ok(found.map(|w| search::serialize_witness(&w)))
}

/// Histogram of worst-case closure stabilization indices over all spaces of
/// size `n`.
#[pyfunction]
#[pyo3(signature = (n, discrete = false))]
fn stabilization_census(
    py: Python<'_>,
    n: usize,
    discrete: bool,
) -> PyResult<std::collections::BTreeMap<usize, u64>> {
    let mut config = SearchConfig::exhaustive(n);
    if discrete {
        config = config.discrete_only();
    }
    py.detach(|| search::stabilization_census(&config))
        .map_err(scale_err)
}

fn kind_str(kind: LawKind) -> &'static str {
    match kind {
        LawKind::Asserted => "asserted",
        LawKind::Probe => "probe",
        LawKind::Corpus => "corpus",
    }
}

fn report_dict<'py>(py: Python<'py>, r: &LawReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("law", r.law_id)?;
    d.set_item("kind", kind_str(r.kind))?;
    d.set_item("status", r.status.to_string())?;
    d.set_item("spaces_checked", r.spaces_checked)?;
    d.set_item("violation_count", r.violation_count)?;
    let violations: Vec<(String, String)> = r
        .violations
        .iter()
        .map(|v| (v.space.clone(), v.detail.clone()))
        .collect();
    d.set_item("violations", violations)?;
    d.set_item("notes", r.notes.clone())?;
    Ok(d)
}

#[pyfunction]
fn law_ids() -> Vec<&'static str> {
    laws::law_ids()
}

/// Run one law over every space with up to `n_max` points.
#[pyfunction]
#[pyo3(signature = (law_id, n_max = 3))]
fn run_law<'py>(py: Python<'py>, law_id: &str, n_max: usize) -> PyResult<Bound<'py, PyDict>> {
    let source = SpaceSource::Enumerated { n_max };
    let report = py
        .detach(|| laws::run_law(law_id, &source))
        .map_err(|e| match e {
            LawError::UnknownLaw(_) => value_err(e),
            LawError::Search(s) => scale_err(s),
        })?;
    report_dict(py, &report)
}

/// Run the whole law suite over every space with up to `n_max` points.
#[pyfunction]
#[pyo3(signature = (n_max = 3))]
fn run_all_laws<'py>(py: Python<'py>, n_max: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let source = SpaceSource::Enumerated { n_max };
    let reports = py.detach(|| laws::run_all(&source)).map_err(scale_err)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::all_fixtures().iter().map(|f| f.name).collect()
}

/// Load a built-in fixture space by name.
#[pyfunction]
fn fixture(name: &str) -> PyResult<Space> {
    fixtures::fixture(name)
        .map(|f| Space { inner: f.space })
        .ok_or_else(|| {
            value_err(format!(
                "unknown fixture {name:?}; known: {}",
                fixture_names().join(", ")
            ))
        })
}

/// Replay every fixture expectation; rows are
/// (fixture, check, expected, got, ok).
#[pyfunction]
fn run_corpus() -> Vec<(&'static str, String, String, String, bool)> {
    fixtures::run_corpus(None)
        .entries
        .into_iter()
        .map(|e| (e.fixture, e.check, e.expected, e.got, e.ok))
        .collect()
}

#[pymodule]
fn auraspace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_function(wrap_pyfunction!(continuity_profile, m)?)?;
    m.add_function(wrap_pyfunction!(comparison_chain, m)?)?;
    m.add_function(wrap_pyfunction!(decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(find_witness, m)?)?;
    m.add_function(wrap_pyfunction!(stabilization_census, m)?)?;
    m.add_function(wrap_pyfunction!(law_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_law, m)?)?;
    m.add_function(wrap_pyfunction!(run_all_laws, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
