//! Built-in example spaces with pinned expected values.
//!
//! Each fixture is a small space whose operator values, derived families, and
//! classification flags were worked out by hand and are kept here as a
//! regression corpus: if any expectation stops matching, the operators
//! changed meaning. The same spaces ship as JSON files under `fixtures/` in
//! canonical serialization.

use crate::classify::classify;
use crate::ops;
use crate::set::{PointSet, SetFamily, Universe};
use crate::space::IdealAuraSpace;
use crate::topologies;

/// One pinned check against a fixture space.
#[derive(Clone, Debug)]
pub enum Expectation {
    /// A named set-to-set operator applied to `input` must return `expected`.
    Op {
        op: &'static str,
        input: PointSet,
        expected: PointSet,
    },
    /// The closure iteration from `input` must walk exactly `steps` and
    /// stabilize at the given index.
    Trace {
        input: PointSet,
        steps: Vec<PointSet>,
        stabilized_at: usize,
    },
    /// A named derived family must equal `expected` exactly.
    FamilyEquals {
        family: &'static str,
        expected: Vec<PointSet>,
    },
    /// A named derived family must contain (or not contain) `member`.
    FamilyContains {
        family: &'static str,
        member: PointSet,
        expected: bool,
    },
    /// A classification flag of `subset` must have the given value.
    Flag {
        subset: PointSet,
        flag: &'static str,
        expected: bool,
    },
}

fn family_by_name(space: &IdealAuraSpace, name: &str) -> SetFamily {
    match name {
        "tau_aura" => topologies::gen_tau_aura(space).opens().clone(),
        "tausa" => topologies::gen_tausa(space).opens().clone(),
        "tausa_c" => topologies::gen_tausa_c(space).opens().clone(),
        "tau_star" => topologies::gen_tau_star(space).opens().clone(),
        "basis" => topologies::gen_basis_beta(space),
        "closed" => space.topology().closed_sets(),
        other => panic!("fixture names unknown family {other:?}"),
    }
}

fn flag_by_name(space: &IdealAuraSpace, subset: PointSet, name: &str) -> bool {
    let p = classify(space, subset);
    match name {
        "ia_open" => p.ia_open,
        "semi" => p.semi,
        "pre" => p.pre,
        "alpha" => p.alpha,
        "beta" => p.beta,
        "b_set" => p.b_set,
        other => panic!("fixture names unknown flag {other:?}"),
    }
}

fn format_family(u: &Universe, members: &[PointSet]) -> String {
    let parts: Vec<String> = members.iter().map(|s| u.format_set(*s)).collect();
    format!("{{{}}}", parts.join(", "))
}

impl Expectation {
    /// Short description of what is being checked, e.g. `auralocal({a})`.
    pub fn describe(&self, u: &Universe) -> String {
        match self {
            Expectation::Op { op, input, .. } => format!("{op}({})", u.format_set(*input)),
            Expectation::Trace { input, .. } => format!("trace({})", u.format_set(*input)),
            Expectation::FamilyEquals { family, .. } => format!("{family} family"),
            Expectation::FamilyContains { family, member, .. } => {
                format!("{} in {family}", u.format_set(*member))
            }
            Expectation::Flag { subset, flag, .. } => {
                format!("{flag}({})", u.format_set(*subset))
            }
        }
    }

    /// Evaluates the check, returning the expected and actual renderings.
    pub fn run(&self, space: &IdealAuraSpace) -> (String, String, bool) {
        let u = space.universe();
        match self {
            Expectation::Op {
                op,
                input,
                expected,
            } => {
                let f = ops::op_by_name(op).unwrap_or_else(|| panic!("unknown op {op:?}"));
                let got = f(space, *input);
                (
                    u.format_set(*expected),
                    u.format_set(got),
                    got == *expected,
                )
            }
            Expectation::Trace {
                input,
                steps,
                stabilized_at,
            } => {
                let got = ops::ia_closure_trace(space, *input);
                let expected = ops::format_chain(u, steps, *stabilized_at);
                let actual = ops::format_trace(space, &got);
                let ok = got.steps() == steps.as_slice()
                    && got.stabilized_at() == *stabilized_at;
                (expected, actual, ok)
            }
            Expectation::FamilyEquals { family, expected } => {
                let got = family_by_name(space, family);
                let expected_family = SetFamily::new(expected.clone());
                (
                    format_family(u, expected_family.members()),
                    format_family(u, got.members()),
                    got == expected_family,
                )
            }
            Expectation::FamilyContains {
                family,
                member,
                expected,
            } => {
                let got = family_by_name(space, family).contains(*member);
                (expected.to_string(), got.to_string(), got == *expected)
            }
            Expectation::Flag {
                subset,
                flag,
                expected,
            } => {
                let got = flag_by_name(space, *subset, flag);
                (expected.to_string(), got.to_string(), got == *expected)
            }
        }
    }
}

/// A named example space with its pinned checks.
pub struct Fixture {
    /// Stable identifier, also accepted by the command line (`repro --only`).
    pub name: &'static str,
    /// File stem of the JSON copy under `fixtures/`.
    pub file_stem: &'static str,
    /// One line on what the space demonstrates.
    pub note: &'static str,
    pub space: IdealAuraSpace,
    pub expectations: Vec<Expectation>,
}

fn space(n: usize, opens: &[u32], ideal_max: u32, aura: &[u32]) -> IdealAuraSpace {
    let u = Universe::alphabetic(n).expect("small universe");
    let opens = SetFamily::new(opens.iter().copied().map(PointSet::from_bits).collect());
    let ideal = SetFamily::new(
        u.subsets()
            .filter(|s| s.is_subset_of(PointSet::from_bits(ideal_max)))
            .collect::<Vec<_>>(),
    );
    let aura = aura.iter().copied().map(PointSet::from_bits).collect();
    IdealAuraSpace::build(u, opens, ideal, aura).expect("fixture spaces are valid")
}

fn discrete(n: usize, ideal_max: u32, aura: &[u32]) -> IdealAuraSpace {
    let all: Vec<u32> = (0..(1u32 << n)).collect();
    space(n, &all, ideal_max, aura)
}

const S: fn(u32) -> PointSet = PointSet::from_bits;

pub fn all_fixtures() -> Vec<Fixture> {
    use Expectation::*;
    vec![
        Fixture {
            name: "strict-inclusion",
            file_stem: "strict",
            note: "the scope-local set of {a} strictly exceeds its local set",
            space: space(3, &[0, 1, 2, 3, 7], 0b100, &[0b001, 0b011, 0b111]),
            expectations: vec![
                Op { op: "star", input: S(0b001), expected: S(0b101) },
                Op { op: "auralocal", input: S(0b001), expected: S(0b111) },
                Op { op: "clstar", input: S(0b001), expected: S(0b101) },
                Op { op: "clsa", input: S(0b001), expected: S(0b111) },
                Op { op: "auralocal", input: S(0), expected: S(0) },
            ],
        },
        Fixture {
            name: "not-closed-1",
            file_stem: "notclosed1",
            note: "a scope-local set that covers the space (closed, but only by luck)",
            space: space(4, &[0, 1, 3, 7, 15], 0b1000, &[0b0001, 0b0011, 0b0111, 0b1111]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b0001), expected: S(0b1111) },
                FamilyContains { family: "closed", member: S(0b1111), expected: true },
            ],
        },
        Fixture {
            name: "not-closed-2",
            file_stem: "notclosed2",
            note: "the scope-local set of {b} lands on a closed set by accident, not by law",
            space: space(4, &[0, 1, 6, 7, 15], 0b0001, &[0b0001, 0b0110, 0b0110, 0b1111]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b0010), expected: S(0b1110) },
                FamilyEquals {
                    family: "closed",
                    expected: vec![S(0), S(0b1000), S(0b1001), S(0b1110), S(0b1111)],
                },
                FamilyContains { family: "closed", member: S(0b1110), expected: true },
            ],
        },
        Fixture {
            name: "nonidem-3a",
            file_stem: "nonidem3a",
            note: "one growth step, then the single-step closure is already fixed",
            space: discrete(3, 0b010, &[0b011, 0b110, 0b100]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b100), expected: S(0b110) },
                Op { op: "clsa", input: S(0b100), expected: S(0b110) },
                Trace { input: S(0b100), steps: vec![S(0b100), S(0b110)], stabilized_at: 1 },
            ],
        },
        Fixture {
            name: "nonidem-3b",
            file_stem: "nonidem3b",
            note: "the ideal absorbs every intersection: {c} is its own closure",
            space: discrete(3, 0b100, &[0b011, 0b110, 0b100]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b100), expected: S(0) },
                Trace { input: S(0b100), steps: vec![S(0b100)], stabilized_at: 0 },
            ],
        },
        Fixture {
            name: "nonidem-4-blocked",
            file_stem: "nonidem4b",
            note: "a negligible link stops the chain after one step",
            space: discrete(4, 0b0100, &[0b0011, 0b0110, 0b1100, 0b1000]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b1000), expected: S(0b1100) },
                Trace { input: S(0b1000), steps: vec![S(0b1000), S(0b1100)], stabilized_at: 1 },
            ],
        },
        Fixture {
            name: "nonidem-5",
            file_stem: "nonidem5",
            note: "a 5-point linked chain where negligible overlaps stop growth early",
            space: discrete(
                5,
                0b01010,
                &[0b00011, 0b00110, 0b01100, 0b11000, 0b10000],
            ),
            expectations: vec![
                Op { op: "auralocal", input: S(0b10000), expected: S(0b11000) },
                Trace {
                    input: S(0b10000),
                    steps: vec![S(0b10000), S(0b11000)],
                    stabilized_at: 1,
                },
            ],
        },
        Fixture {
            name: "nonidem-4",
            file_stem: "nonidem4",
            note: "an unblocked linked chain: {d} needs three steps to stabilize",
            space: discrete(4, 0b0001, &[0b0011, 0b0110, 0b1100, 0b1000]),
            expectations: vec![
                Trace {
                    input: S(0b1000),
                    steps: vec![S(0b1000), S(0b1100), S(0b1110), S(0b1111)],
                    stabilized_at: 3,
                },
                Op { op: "clsa", input: S(0b1000), expected: S(0b1100) },
                Op { op: "clsa", input: S(0b1100), expected: S(0b1110) },
                Op { op: "clsa", input: S(0b1110), expected: S(0b1111) },
            ],
        },
        Fixture {
            name: "chain-1",
            file_stem: "chain1",
            note: "scope-open family and fixpoint family coincide on this transitive space",
            space: discrete(3, 0b100, &[0b011, 0b010, 0b100]),
            expectations: vec![
                FamilyEquals {
                    family: "tau_aura",
                    expected: vec![S(0), S(0b010), S(0b011), S(0b100), S(0b110), S(0b111)],
                },
                FamilyEquals {
                    family: "tausa",
                    expected: vec![S(0), S(0b010), S(0b011), S(0b100), S(0b110), S(0b111)],
                },
                FamilyEquals {
                    family: "basis",
                    expected: vec![S(0), S(0b010), S(0b011), S(0b100)],
                },
            ],
        },
        Fixture {
            name: "chain-2",
            file_stem: "chain2",
            note: "moving the ideal makes {a} fixpoint-open without being scope-open",
            space: discrete(3, 0b010, &[0b011, 0b010, 0b100]),
            expectations: vec![
                FamilyEquals {
                    family: "tau_aura",
                    expected: vec![S(0), S(0b010), S(0b011), S(0b100), S(0b110), S(0b111)],
                },
                FamilyContains { family: "tausa", member: S(0b001), expected: true },
                FamilyContains { family: "tau_aura", member: S(0b001), expected: false },
                FamilyEquals {
                    family: "tausa",
                    expected: (0..8).map(S).collect(),
                },
                FamilyEquals {
                    family: "tau_star",
                    expected: (0..8).map(S).collect(),
                },
                Op { op: "auralocal", input: S(0b110), expected: S(0b100) },
                Op { op: "star", input: S(0b010), expected: S(0) },
            ],
        },
        Fixture {
            name: "hierarchy",
            file_stem: "hier",
            note: "interior/closure interplay that keeps {a,c} out of every openness class",
            space: discrete(4, 0b1000, &[0b0011, 0b0010, 0b1100, 0b1000]),
            expectations: vec![
                Op { op: "auralocal", input: S(0b0101), expected: S(0b0101) },
                Op { op: "clsa", input: S(0b0101), expected: S(0b0101) },
                Op { op: "psi", input: S(0b0101), expected: S(0b1100) },
                Op { op: "intsa", input: S(0b0101), expected: S(0b0100) },
                Flag { subset: S(0b0101), flag: "semi", expected: false },
                Flag { subset: S(0b0101), flag: "pre", expected: false },
                Flag { subset: S(0b0101), flag: "beta", expected: false },
                Op { op: "intsa", input: S(0b1110), expected: S(0b1110) },
                Flag { subset: S(0b1110), flag: "ia_open", expected: true },
                Op { op: "intsa", input: S(0b1011), expected: S(0b1011) },
                Flag { subset: S(0b1011), flag: "ia_open", expected: true },
                Op { op: "intsa", input: S(0b1001), expected: S(0b1000) },
                Op { op: "clsa", input: S(0b1001), expected: S(0b1001) },
                Flag { subset: S(0b1001), flag: "semi", expected: false },
                Flag { subset: S(0b1001), flag: "pre", expected: false },
            ],
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    all_fixtures().into_iter().find(|f| f.name == name)
}

/// Result of one expectation evaluation within the corpus run.
pub struct CorpusEntry {
    pub fixture: &'static str,
    pub check: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.ok).count()
    }
}

/// Evaluates every expectation of every fixture (or one fixture when `only`
/// is given).
pub fn run_corpus(only: Option<&str>) -> CorpusReport {
    let fixtures = match only {
        Some(name) => fixture(name).into_iter().collect(),
        None => all_fixtures(),
    };
    let mut entries = Vec::new();
    for f in &fixtures {
        for e in &f.expectations {
            let (expected, got, ok) = e.run(&f.space);
            entries.push(CorpusEntry {
                fixture: f.name,
                check: e.describe(f.space.universe()),
                expected,
                got,
                ok,
            });
        }
    }
    CorpusReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_whole_corpus_matches() {
        let report = run_corpus(None);
        for e in &report.entries {
            assert!(
                e.ok,
                "{} / {}: expected {}, got {}",
                e.fixture, e.check, e.expected, e.got
            );
        }
        assert!(report.entries.len() > 40);
    }

    #[test]
    fn fixture_names_and_stems_are_unique() {
        let fixtures = all_fixtures();
        assert_eq!(fixtures.len(), 11);
        let names: std::collections::HashSet<_> = fixtures.iter().map(|f| f.name).collect();
        let stems: std::collections::HashSet<_> = fixtures.iter().map(|f| f.file_stem).collect();
        assert_eq!(names.len(), fixtures.len());
        assert_eq!(stems.len(), fixtures.len());
    }

    #[test]
    fn single_fixture_runs_filter_the_corpus() {
        let report = run_corpus(Some("strict-inclusion"));
        assert!(report.all_ok());
        assert!(report.entries.iter().all(|e| e.fixture == "strict-inclusion"));
        assert_eq!(report.entries.len(), 5);
        assert!(run_corpus(Some("no-such-fixture")).entries.is_empty());
    }

    #[test]
    fn a_corrupted_expectation_turns_red() {
        let f = fixture("nonidem-4").unwrap();
        let bad = Expectation::Op {
            op: "clsa",
            input: S(0b1000),
            expected: S(0b1111),
        };
        let (expected, got, ok) = bad.run(&f.space);
        assert!(!ok);
        assert_eq!(expected, "{a,b,c,d}");
        assert_eq!(got, "{c,d}");
    }
}
