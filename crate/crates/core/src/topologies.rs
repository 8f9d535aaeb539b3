//! The derived topologies and the scope basis.
//!
//! Four refinements are generated from one space: the scope-open family
//! (tau_aura), the fixed sets of the iterated closure (tausa), the fixed sets
//! of the single-step closure (tausa_c), and the classical refinement from the
//! local function (tau_star). Each generator brute-forces the membership test
//! over all 2^n candidate subsets, which is fine at the scale this crate
//! targets.

use thiserror::Error;

use crate::ops;
use crate::set::{PointSet, SetFamily, Universe};
use crate::space::{FiniteTopology, IdealAuraSpace, ValidationError};

fn opens_by<F: FnMut(PointSet) -> bool>(space: &IdealAuraSpace, mut is_open: F) -> SetFamily {
    space.universe().subsets().filter(|a| is_open(*a)).collect()
}

/// Sets that contain the scope set of each of their points. Always a topology
/// coarser than the space's own.
pub fn gen_tau_aura(space: &IdealAuraSpace) -> FiniteTopology {
    let opens = opens_by(space, |a| {
        a.iter().all(|x| space.scope().value(x).is_subset_of(a))
    });
    let t = FiniteTopology::new(space.universe().clone(), opens)
        .expect("scope-open sets are closed under union and intersection");
    debug_assert!(t.opens().is_subfamily_of(space.topology().opens()));
    t
}

/// Complements of the fixed sets of the star closure; refines the original
/// topology.
pub fn gen_tau_star(space: &IdealAuraSpace) -> FiniteTopology {
    let full = space.full();
    let opens = opens_by(space, |a| {
        let f = a.complement_in(full);
        ops::star_closure(space, f) == f
    });
    let t = FiniteTopology::new(space.universe().clone(), opens)
        .expect("fixed sets of an idempotent additive closure form the closed sets of a topology");
    debug_assert!(space.topology().opens().is_subfamily_of(t.opens()));
    t
}

/// Complements of the fixed sets of the iterated scope closure.
pub fn gen_tausa(space: &IdealAuraSpace) -> FiniteTopology {
    let full = space.full();
    let opens = opens_by(space, |a| {
        let f = a.complement_in(full);
        ops::ia_closure_fixpoint(space, f) == f
    });
    FiniteTopology::new(space.universe().clone(), opens)
        .expect("fixed sets of the iterated closure form the closed sets of a topology")
}

/// Complements of the fixed sets of the single-step scope closure. A set is
/// fixed under the iteration exactly when it is fixed under one step, so this
/// family always equals [`gen_tausa`]; both routes are kept and compared as a
/// cross-check.
pub fn gen_tausa_c(space: &IdealAuraSpace) -> FiniteTopology {
    let full = space.full();
    let opens = opens_by(space, |a| {
        let f = a.complement_in(full);
        ops::ia_closure(space, f) == f
    });
    FiniteTopology::new(space.universe().clone(), opens)
        .expect("fixed sets of an additive grounded closure form the closed sets of a topology")
}

/// Every scope set with every ideal member deleted, deduplicated.
pub fn gen_basis_beta(space: &IdealAuraSpace) -> SetFamily {
    let mut out = Vec::new();
    for x in 0..space.n() {
        let v = space.scope().value(x);
        for j in space.ideal().members().iter() {
            out.push(v - j);
        }
    }
    SetFamily::new(out)
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("basis does not cover the universe; missing {missing:?}")]
    NotACover { missing: PointSet },
    #[error("unions of the family violate the topology axioms: {0}")]
    NotABasis(ValidationError),
}

/// The family of all unions of subfamilies of `basis`, as a topology. On a
/// finite universe that family is the closure of `basis ∪ {∅}` under pairwise
/// union; it fails with [`BasisError::NotABasis`] when it is not closed under
/// intersection.
pub fn topology_from_basis(
    universe: &Universe,
    basis: &SetFamily,
) -> Result<FiniteTopology, BasisError> {
    let covered = basis.union_all();
    if covered != universe.full() {
        return Err(BasisError::NotACover {
            missing: covered.complement_in(universe.full()),
        });
    }
    let mut opens: Vec<PointSet> = basis.iter().collect();
    opens.push(PointSet::EMPTY);
    let mut family = SetFamily::new(opens);
    loop {
        let mut next: Vec<PointSet> = family.iter().collect();
        for (i, a) in family.iter().enumerate() {
            for b in family.iter().skip(i + 1) {
                next.push(a | b);
            }
        }
        let grown = SetFamily::new(next);
        if grown.len() == family.len() {
            break;
        }
        family = grown;
    }
    FiniteTopology::new(universe.clone(), family).map_err(BasisError::NotABasis)
}

/// The four derived topologies of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyBundle {
    pub tau_aura: FiniteTopology,
    pub tausa: FiniteTopology,
    pub tausa_c: FiniteTopology,
    pub tau_star: FiniteTopology,
}

/// Generates all four topologies and checks the inclusion chain
/// tau_aura ⊆ tausa ⊆ tausa_c ⊆ tau_star in debug builds.
pub fn bundle(space: &IdealAuraSpace) -> TopologyBundle {
    let b = TopologyBundle {
        tau_aura: gen_tau_aura(space),
        tausa: gen_tausa(space),
        tausa_c: gen_tausa_c(space),
        tau_star: gen_tau_star(space),
    };
    debug_assert!(b.tau_aura.opens().is_subfamily_of(b.tausa.opens()));
    debug_assert!(b.tausa.opens().is_subfamily_of(b.tausa_c.opens()));
    debug_assert!(b.tausa_c.opens().is_subfamily_of(b.tau_star.opens()));
    b
}
