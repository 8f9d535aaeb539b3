//! Per-space lookup tables for the law suite and the witness search.
//!
//! Checking laws over thousands of enumerated spaces evaluates the same
//! operators on the same subsets many times, so this precomputes every
//! operator over all `2^n` subsets once per space. Families of subsets are
//! packed as bitmasks over subset codes, which caps analyzed spaces at six
//! points; that covers the whole search range while the operators themselves
//! go on working for larger spaces.

use crate::classify::{five_flags, ClosureMode};
use crate::ops;
use crate::set::{PointSet, SetFamily};
use crate::space::IdealAuraSpace;
use crate::topologies;

/// Largest universe the packed tables accept (`2^6` subset codes fit in `u64`).
pub const MAX_ANALYSIS_POINTS: usize = 6;

/// All operator values and derived families of one space, indexed by subset
/// bits. Flag rows follow [`crate::classify::OpennessProfile`] order:
/// ia-open, semi, pre, alpha, beta.
pub struct SpaceAnalysis {
    pub space: IdealAuraSpace,
    pub n: usize,
    /// `2^n`, the number of subsets (and the length of every table).
    pub size: usize,
    pub star: Vec<u32>,
    pub aura_local: Vec<u32>,
    pub cl_star: Vec<u32>,
    pub cl_one: Vec<u32>,
    pub cl_iter: Vec<u32>,
    pub stabilized_at: Vec<u8>,
    pub psi_star: Vec<u32>,
    pub psi_aura: Vec<u32>,
    pub int_one: Vec<u32>,
    pub cl_plain: Vec<u32>,
    pub int_plain: Vec<u32>,
    pub cl_aura: Vec<u32>,
    pub flags: Vec<[bool; 5]>,
    /// Family masks: bit `s` is set iff the subset with bits `s` belongs.
    pub tau: u64,
    pub tau_aura: u64,
    pub tausa: u64,
    pub tausa_c: u64,
    pub tau_star: u64,
    pub transitive: bool,
}

pub fn family_mask(family: &SetFamily) -> u64 {
    family.iter().fold(0u64, |m, s| m | (1u64 << s.bits()))
}

impl SpaceAnalysis {
    pub fn new(space: &IdealAuraSpace) -> Self {
        let n = space.n();
        assert!(
            n <= MAX_ANALYSIS_POINTS,
            "analysis tables are limited to {MAX_ANALYSIS_POINTS} points, got {n}"
        );
        let size = 1usize << n;
        let subsets = || (0..size as u32).map(PointSet::from_bits);

        let star: Vec<u32> = subsets().map(|a| ops::local_star(space, a).bits()).collect();
        let aura_local: Vec<u32> = subsets().map(|a| ops::aura_local(space, a).bits()).collect();
        let cl_star: Vec<u32> = star
            .iter()
            .enumerate()
            .map(|(a, s)| a as u32 | s)
            .collect();
        let cl_one: Vec<u32> = aura_local
            .iter()
            .enumerate()
            .map(|(a, s)| a as u32 | s)
            .collect();
        let mut cl_iter = vec![0u32; size];
        let mut stabilized_at = vec![0u8; size];
        for a in 0..size {
            let trace = ops::ia_closure_trace(space, PointSet::from_bits(a as u32));
            cl_iter[a] = trace.fixpoint().bits();
            stabilized_at[a] = trace.stabilized_at() as u8;
        }
        let psi_star: Vec<u32> = subsets().map(|a| ops::psi_star(space, a).bits()).collect();
        let psi_aura: Vec<u32> = subsets().map(|a| ops::psi_aura(space, a).bits()).collect();
        let int_one: Vec<u32> = subsets().map(|a| ops::ia_interior(space, a).bits()).collect();
        let cl_plain: Vec<u32> = subsets()
            .map(|a| space.topology().closure(a).bits())
            .collect();
        let int_plain: Vec<u32> = subsets()
            .map(|a| space.topology().interior(a).bits())
            .collect();
        let cl_aura: Vec<u32> = subsets().map(|a| ops::aura_closure(space, a).bits()).collect();
        let flags: Vec<[bool; 5]> = subsets()
            .map(|a| five_flags(space, a, ClosureMode::SingleStep))
            .collect();

        let derived = topologies::bundle(space);

        SpaceAnalysis {
            n,
            size,
            star,
            aura_local,
            cl_star,
            cl_one,
            cl_iter,
            stabilized_at,
            psi_star,
            psi_aura,
            int_one,
            cl_plain,
            int_plain,
            cl_aura,
            flags,
            tau: family_mask(space.topology().opens()),
            tau_aura: family_mask(derived.tau_aura.opens()),
            tausa: family_mask(derived.tausa.opens()),
            tausa_c: family_mask(derived.tausa_c.opens()),
            tau_star: family_mask(derived.tau_star.opens()),
            transitive: space.is_transitive(),
            space: space.clone(),
        }
    }

    pub fn in_family(mask: u64, s: PointSet) -> bool {
        mask & (1u64 << s.bits()) != 0
    }

    pub fn full_bits(&self) -> u32 {
        (self.size - 1) as u32
    }

    /// The largest step count at which any subset's iterated closure settles.
    pub fn max_stabilization(&self) -> usize {
        self.stabilized_at.iter().copied().max().unwrap_or(0) as usize
    }
}
