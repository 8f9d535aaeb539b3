//! Point-set operators derived from the ideal and the scope function.
//!
//! Every function is pure: it reads an immutable space and one or two subsets
//! and returns a subset. Operators defined by two provably equal formulas
//! evaluate both and assert agreement in debug builds.

use crate::set::PointSet;
use crate::space::IdealAuraSpace;

/// Local function: points whose every open neighborhood meets `a` outside the
/// ideal. On a finite space the minimal open neighborhood is the hardest test,
/// so quantifying over it alone is equivalent.
pub fn local_star(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut out = PointSet::EMPTY;
    for x in 0..space.n() {
        if !space.ideal().contains(space.topology().min_nbhd(x) & a) {
            out = out.with(x);
        }
    }
    out
}

/// Scope-local function: points whose scope set meets `a` outside the ideal.
pub fn aura_local(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut out = PointSet::EMPTY;
    for x in 0..space.n() {
        if !space.ideal().contains(space.scope().value(x) & a) {
            out = out.with(x);
        }
    }
    out
}

/// `a` together with its local function.
pub fn star_closure(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    a | local_star(space, a)
}

/// Points whose scope set meets `a` at all.
pub fn aura_closure(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut out = PointSet::EMPTY;
    for x in 0..space.n() {
        if space.scope().value(x).intersects(a) {
            out = out.with(x);
        }
    }
    out
}

/// Points of `a` whose whole scope set stays inside `a`.
pub fn aura_interior(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut out = PointSet::EMPTY;
    for x in a.iter() {
        if space.scope().value(x).is_subset_of(a) {
            out = out.with(x);
        }
    }
    debug_assert_eq!(
        out,
        aura_closure(space, a.complement_in(space.full())).complement_in(space.full()),
        "scope interior must be dual to scope closure"
    );
    out
}

/// Single-step closure: `a` together with its scope-local function. Additive
/// and extensive but not idempotent in general.
pub fn ia_closure(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    a | aura_local(space, a)
}

/// The expanding iteration of [`ia_closure`] from a starting set to its first
/// fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    steps: Vec<PointSet>,
    stabilized_at: usize,
}

impl ClosureTrace {
    /// The chain `[a, cl(a), cl²(a), …]`, ending at the first fixpoint.
    pub fn steps(&self) -> &[PointSet] {
        &self.steps
    }

    /// Index of the first fixpoint in `steps` (0 when `a` is already fixed).
    pub fn stabilized_at(&self) -> usize {
        self.stabilized_at
    }

    /// The fixpoint the iteration reached.
    pub fn fixpoint(&self) -> PointSet {
        *self.steps.last().expect("trace holds at least the start set")
    }
}

/// Iterates [`ia_closure`] until it stops growing, recording each step. The
/// chain is strictly increasing before the fixpoint, so it stabilizes after at
/// most `|X| - |a|` steps.
pub fn ia_closure_trace(space: &IdealAuraSpace, a: PointSet) -> ClosureTrace {
    let mut steps = vec![a];
    loop {
        let cur = *steps.last().expect("non-empty by construction");
        let next = ia_closure(space, cur);
        if next == cur {
            break;
        }
        steps.push(next);
    }
    ClosureTrace {
        stabilized_at: steps.len() - 1,
        steps,
    }
}

/// Fixpoint of the iterated [`ia_closure`]; the idempotent completion of the
/// single-step operator. On a finite space the transfinite union collapses to
/// this fixpoint.
pub fn ia_closure_fixpoint(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut cur = a;
    loop {
        let next = ia_closure(space, cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Classical companion of [`psi_aura`]: complement of the local function of
/// the complement.
pub fn psi_star(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let full = space.full();
    local_star(space, a.complement_in(full)).complement_in(full)
}

/// Points whose scope set escapes `a` only within the ideal. Equals the
/// complement of the scope-local function of the complement.
pub fn psi_aura(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let mut out = PointSet::EMPTY;
    for x in 0..space.n() {
        if space.ideal().contains(space.scope().value(x) - a) {
            out = out.with(x);
        }
    }
    debug_assert_eq!(
        out,
        aura_local(space, a.complement_in(space.full())).complement_in(space.full()),
        "the pointwise and complement forms of psi_aura must agree"
    );
    out
}

/// Interior dual to [`ia_closure`]: complement of the closure of the
/// complement, equivalently the part of `a` kept by [`psi_aura`].
pub fn ia_interior(space: &IdealAuraSpace, a: PointSet) -> PointSet {
    let full = space.full();
    let out = ia_closure(space, a.complement_in(full)).complement_in(full);
    debug_assert_eq!(out, a & psi_aura(space, a));
    debug_assert_eq!(out, {
        let mut direct = PointSet::EMPTY;
        for x in a.iter() {
            if space.ideal().contains(space.scope().value(x) - a) {
                direct = direct.with(x);
            }
        }
        direct
    });
    out
}

/// Names accepted by [`op_by_name`], in presentation order. `trace` is listed
/// for completeness but dispatches through [`ia_closure_trace`] because its
/// result is a chain, not a single set.
pub const OP_NAMES: &[&str] = &[
    "star",
    "auralocal",
    "clstar",
    "claura",
    "intaura",
    "clsa",
    "trace",
    "psi",
    "intsa",
];

/// Looks up a set-to-set operator by its command name. Returns `None` for
/// unknown names and for `trace`, whose output is not a single set.
pub fn op_by_name(name: &str) -> Option<fn(&IdealAuraSpace, PointSet) -> PointSet> {
    match name {
        "star" => Some(local_star),
        "auralocal" => Some(aura_local),
        "clstar" => Some(star_closure),
        "claura" => Some(aura_closure),
        "intaura" => Some(aura_interior),
        "clsa" => Some(ia_closure),
        "psi" => Some(psi_aura),
        "intsa" => Some(ia_interior),
        _ => None,
    }
}

/// Renders a step chain as inclusions with its stabilization index, e.g.
/// `{d} ⊂ {c,d} ⊂ {b,c,d} ⊂ {a,b,c,d}  [stabilized at 3]`.
pub fn format_chain(u: &crate::set::Universe, steps: &[PointSet], stabilized_at: usize) -> String {
    let chain = steps
        .iter()
        .map(|s| u.format_set(*s))
        .collect::<Vec<_>>()
        .join(" ⊂ ");
    format!("{chain}  [stabilized at {stabilized_at}]")
}

/// [`format_chain`] applied to a computed trace.
pub fn format_trace(space: &IdealAuraSpace, trace: &ClosureTrace) -> String {
    format_chain(space.universe(), trace.steps(), trace.stabilized_at())
}
