//! Membership tests for the generalized-open classes a space induces.
//!
//! The five classes are the usual interior/closure compositions built from the
//! single-step scope closure and its dual interior. A mode switch substitutes
//! the iterated closure for experiments; the single-step form is the default
//! and is what the laws and the CLI use.

use crate::ops;
use crate::set::{PointSet, SetFamily};
use crate::space::IdealAuraSpace;
use crate::topologies;

/// Which closure the class compositions are built from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureMode {
    /// One application of the scope closure (the defining form).
    #[default]
    SingleStep,
    /// Its idempotent fixpoint.
    Iterated,
}

impl ClosureMode {
    fn cl(self, space: &IdealAuraSpace, a: PointSet) -> PointSet {
        match self {
            ClosureMode::SingleStep => ops::ia_closure(space, a),
            ClosureMode::Iterated => ops::ia_closure_fixpoint(space, a),
        }
    }

    fn int(self, space: &IdealAuraSpace, a: PointSet) -> PointSet {
        let full = space.full();
        self.cl(space, a.complement_in(full)).complement_in(full)
    }
}

/// Class membership of one subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpennessProfile {
    /// A ⊆ int(A)
    pub ia_open: bool,
    /// A ⊆ cl(int(A))
    pub semi: bool,
    /// A ⊆ int(cl(A))
    pub pre: bool,
    /// A ⊆ int(cl(int(A)))
    pub alpha: bool,
    /// A ⊆ cl(int(cl(A)))
    pub beta: bool,
    /// A = U ∩ V for an open U of the derived topology and a V fixed by
    /// cl ∘ int
    pub b_set: bool,
}

/// Evaluates the five containments plus the intersection decomposition for
/// one subset, using the single-step closure.
pub fn classify(space: &IdealAuraSpace, a: PointSet) -> OpennessProfile {
    classify_with(space, a, ClosureMode::SingleStep)
}

/// [`classify`] with an explicit choice of closure.
pub fn classify_with(space: &IdealAuraSpace, a: PointSet, mode: ClosureMode) -> OpennessProfile {
    let [ia_open, semi, pre, alpha, beta] = five_flags(space, a, mode);
    OpennessProfile {
        ia_open,
        semi,
        pre,
        alpha,
        beta,
        b_set: is_b_set(space, a).is_some(),
    }
}

/// The five containment flags in order ia_open, semi, pre, alpha, beta;
/// shared by the per-subset, whole-powerset, and continuity paths.
pub(crate) fn five_flags(space: &IdealAuraSpace, a: PointSet, mode: ClosureMode) -> [bool; 5] {
    let int_a = mode.int(space, a);
    let cl_a = mode.cl(space, a);
    let cl_int_a = mode.cl(space, int_a);
    [
        a.is_subset_of(int_a),
        a.is_subset_of(cl_int_a),
        a.is_subset_of(mode.int(space, cl_a)),
        a.is_subset_of(mode.int(space, cl_int_a)),
        a.is_subset_of(mode.cl(space, mode.int(space, cl_a))),
    ]
}

/// Subsets fixed by cl ∘ int under the single-step operators.
fn regular_family(space: &IdealAuraSpace) -> SetFamily {
    space
        .universe()
        .subsets()
        .filter(|v| ops::ia_closure(space, ops::ia_interior(space, *v)) == *v)
        .collect()
}

/// Searches for a decomposition A = U ∩ V with U open in the derived
/// topology and V fixed by cl ∘ int; returns the first witness pair in
/// canonical order.
pub fn is_b_set(space: &IdealAuraSpace, a: PointSet) -> Option<(PointSet, PointSet)> {
    let opens = topologies::gen_tausa_c(space);
    let regular = regular_family(space);
    for u in opens.opens().iter() {
        if !a.is_subset_of(u) {
            continue;
        }
        for v in regular.iter() {
            if u & v == a {
                return Some((u, v));
            }
        }
    }
    None
}

/// The members of each class, over all subsets of the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFamilies {
    pub ia_open: SetFamily,
    pub semi: SetFamily,
    pub pre: SetFamily,
    pub alpha: SetFamily,
    pub beta: SetFamily,
    pub b_set: SetFamily,
}

impl ClassFamilies {
    pub fn family(&self, class: &str) -> Option<&SetFamily> {
        match class {
            "ia_open" => Some(&self.ia_open),
            "semi" => Some(&self.semi),
            "pre" => Some(&self.pre),
            "alpha" => Some(&self.alpha),
            "beta" => Some(&self.beta),
            "b_set" => Some(&self.b_set),
            _ => None,
        }
    }
}

/// Classifies every subset at once, sharing the derived-topology and
/// regular-family scans across the whole powerset.
pub fn class_families(space: &IdealAuraSpace) -> ClassFamilies {
    let mut ia_open = Vec::new();
    let mut semi = Vec::new();
    let mut pre = Vec::new();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for a in space.universe().subsets() {
        let [f_ia, f_semi, f_pre, f_alpha, f_beta] =
            five_flags(space, a, ClosureMode::SingleStep);
        if f_ia {
            ia_open.push(a);
        }
        if f_semi {
            semi.push(a);
        }
        if f_pre {
            pre.push(a);
        }
        if f_alpha {
            alpha.push(a);
        }
        if f_beta {
            beta.push(a);
        }
    }
    let opens = topologies::gen_tausa_c(space);
    let regular = regular_family(space);
    let mut b_set = Vec::new();
    for u in opens.opens().iter() {
        for v in regular.iter() {
            b_set.push(u & v);
        }
    }
    ClassFamilies {
        ia_open: SetFamily::new(ia_open),
        semi: SetFamily::new(semi),
        pre: SetFamily::new(pre),
        alpha: SetFamily::new(alpha),
        beta: SetFamily::new(beta),
        b_set: SetFamily::new(b_set),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::Universe;

    fn space(n: usize, opens: &[u32], ideal_max: u32, aura: &[u32]) -> IdealAuraSpace {
        let u = Universe::alphabetic(n).unwrap();
        let opens: SetFamily = opens.iter().copied().map(PointSet::from_bits).collect();
        let ideal = u
            .subsets()
            .filter(|s| s.is_subset_of(PointSet::from_bits(ideal_max)))
            .collect();
        let aura = aura.iter().copied().map(PointSet::from_bits).collect();
        IdealAuraSpace::build(u, opens, ideal, aura).unwrap()
    }

    fn discrete(n: usize, ideal_max: u32, aura: &[u32]) -> IdealAuraSpace {
        let all: Vec<u32> = (0..1u32 << n).collect();
        space(n, &all, ideal_max, aura)
    }

    const S: fn(u32) -> PointSet = PointSet::from_bits;

    fn hier() -> IdealAuraSpace {
        discrete(4, 0b1000, &[0b0011, 0b0010, 0b1100, 0b1000])
    }

    #[test]
    fn profile_rejects_every_class_for_isolated_pair() {
        let p = classify(&hier(), S(0b0101));
        assert!(!p.ia_open && !p.semi && !p.pre && !p.alpha && !p.beta && !p.b_set);
    }

    #[test]
    fn open_sets_get_every_flag() {
        let sp = hier();
        for a in [S(0b1110), S(0b1011), PointSet::EMPTY, sp.full()] {
            let p = classify(&sp, a);
            assert!(p.ia_open && p.semi && p.pre && p.alpha && p.beta && p.b_set);
        }
    }

    #[test]
    fn b_set_witnesses_self_verify() {
        let sp = hier();
        let (u, v) = is_b_set(&sp, S(0b1110)).unwrap();
        assert_eq!(u & v, S(0b1110));
        assert!(topologies::gen_tausa_c(&sp).contains(u));
        assert_eq!(ops::ia_closure(&sp, ops::ia_interior(&sp, v)), v);
        assert_eq!(is_b_set(&sp, S(0b1001)), None);
    }

    #[test]
    fn every_class_has_a_proper_member() {
        // semi without alpha
        let p = classify(&space(3, &[0, 1, 2, 3, 7], 0, &[1, 2, 7]), S(0b101));
        assert!(p.semi && p.beta && !p.pre && !p.alpha && !p.ia_open);
        // pre without alpha
        let p = classify(&space(3, &[0, 7], 0, &[7, 7, 7]), S(0b001));
        assert!(p.pre && p.beta && !p.semi && !p.alpha && !p.ia_open);
        // beta alone
        let p = classify(&space(3, &[0, 3, 4, 7], 0, &[3, 7, 4]), S(0b010));
        assert!(p.beta && !p.semi && !p.pre && !p.alpha && !p.ia_open);
    }

    #[test]
    fn families_aggregate_the_pointwise_flags() {
        let sp = hier();
        let fams = class_families(&sp);
        assert!(fams.ia_open.contains(S(0b1110)) && fams.ia_open.contains(S(0b1011)));
        assert_eq!(&fams.b_set, topologies::gen_tausa_c(&sp).opens());
        for a in sp.universe().subsets() {
            let p = classify(&sp, a);
            assert_eq!(fams.ia_open.contains(a), p.ia_open);
            assert_eq!(fams.semi.contains(a), p.semi);
            assert_eq!(fams.pre.contains(a), p.pre);
            assert_eq!(fams.alpha.contains(a), p.alpha);
            assert_eq!(fams.beta.contains(a), p.beta);
            assert_eq!(fams.b_set.contains(a), p.b_set);
        }
    }

    #[test]
    fn improper_ideal_puts_every_subset_in_every_class() {
        let fams = class_families(&discrete(3, 0b111, &[0b011, 0b110, 0b100]));
        assert_eq!(fams.ia_open.len(), 8);
        assert_eq!(fams.beta.len(), 8);
        assert_eq!(fams.b_set.len(), 8);
    }

    #[test]
    fn trivial_ideal_reduces_to_plain_scope_compositions() {
        let sp = discrete(3, 0, &[0b011, 0b010, 0b100]);
        let scope_int = |a: PointSet| ops::aura_interior(&sp, a);
        let scope_cl = |a: PointSet| ops::aura_closure(&sp, a);
        for a in sp.universe().subsets() {
            let p = classify(&sp, a);
            assert_eq!(p.ia_open, a.is_subset_of(scope_int(a)));
            assert_eq!(p.semi, a.is_subset_of(scope_cl(scope_int(a))));
            assert_eq!(p.pre, a.is_subset_of(scope_int(scope_cl(a))));
        }
    }

    #[test]
    fn iterated_mode_can_flip_a_flag() {
        // opens {∅,{a,b},X}, scopes ({a,b},X,X): iterating the closure
        // shrinks the dual interior of {a,b} from {a} to ∅
        let sp = space(3, &[0, 3, 7], 0, &[3, 7, 7]);
        let single = classify_with(&sp, S(0b011), ClosureMode::SingleStep);
        let iterated = classify_with(&sp, S(0b011), ClosureMode::Iterated);
        assert!(single.semi && single.alpha);
        assert!(!iterated.semi && !iterated.alpha);
    }
}
