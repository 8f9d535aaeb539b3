#!/usr/bin/env python3
"""Smoke test for the auraspace_py extension module.

Builds nothing itself: run `cargo build -p auraspace-py` first, then
`python3 python/smoke_test.py`. The script locates the compiled cdylib in
target/, copies it under the importable name, and exercises each binding
surface once against values the Rust test suite already pins down.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    # cargo names the cdylib libauraspace_py.so; python wants auraspace_py.so.
    candidates = []
    for profile in ("release", "debug"):
        for stem in ("libauraspace_py", "auraspace_py"):
            for ext in (".so", ".dylib"):
                p = ROOT / "target" / profile / (stem + ext)
                if p.is_file():
                    candidates.append(p)
    if not candidates:
        sys.exit("no compiled extension found; run: cargo build -p auraspace-py")
    newest = max(candidates, key=lambda p: p.stat().st_mtime)
    tmp = Path(tempfile.mkdtemp(prefix="auraspace_py_"))
    shutil.copy2(newest, tmp / "auraspace_py.so")
    sys.path.insert(0, str(tmp))
    import auraspace_py

    return auraspace_py


def main():
    m = load_module()

    # Parsing and the closure trace.
    text = (ROOT / "fixtures" / "nonidem4.json").read_text()
    space = m.Space.from_json(text)
    steps, stabilized = space.trace(["d"])
    assert steps == [["d"], ["c", "d"], ["b", "c", "d"], ["a", "b", "c", "d"]], steps
    assert stabilized == 3, stabilized
    assert m.Space.from_json(space.to_json()).to_json() == space.to_json()

    # Fixtures by name, pointwise operators, the flag table.
    hier = m.fixture("hierarchy")
    assert hier.is_transitive
    assert hier.intsa(["a", "c"]) == ["c"]
    flags = hier.classify(["b", "c", "d"])
    assert flags["ia_open"] is True, flags
    assert set(flags) == {"ia_open", "semi", "pre", "alpha", "beta", "b_set"}

    # Derived topology of a fixture, in canonical order.
    chain2 = m.fixture("chain-2")
    assert chain2.tausa() == [
        [],
        ["a"],
        ["b"],
        ["a", "b"],
        ["c"],
        ["a", "c"],
        ["b", "c"],
        ["a", "b", "c"],
    ]

    # Constructing from raw parts, and the axiom check on bad input.
    built = m.Space(
        points=["a", "b"],
        opens=[[], ["a"], ["a", "b"]],
        ideal=[[]],
        aura={"a": ["a"], "b": ["a", "b"]},
    )
    assert built.n == 2
    assert built.opens() == [[], ["a"], ["a", "b"]]
    try:
        m.Space(points=["a"], opens=[["a"]], ideal=[[]], aura={"a": ["a"]})
    except ValueError as e:
        assert "axiom" in str(e), e
    else:
        raise AssertionError("missing empty open set was accepted")

    # Maps between spaces.
    chain1 = m.fixture("chain-1")
    ident = {"a": "a", "b": "b", "c": "c"}
    prof = m.continuity_profile(chain2, chain1, ident)
    assert prof["continuous"] is True, prof
    chain = m.comparison_chain(chain2, chain1, ident)
    assert chain["tau_continuous"] is True, chain
    dec = m.decomposition(chain2, chain1, ident)
    assert dec["semi_pre_equivalence_holds"] is True, dec

    # The law suite.
    ids = m.law_ids()
    assert len(ids) == 33 and "cech_axioms" in ids, ids
    report = m.run_law("duality", n_max=2)
    assert report["status"] == "pass", report
    assert report["spaces_checked"] == 38, report

    # The fixture corpus.
    rows = m.run_corpus()
    assert len(rows) == 48, len(rows)
    assert all(ok for (_, _, _, _, ok) in rows)

    # Witness search. Found witnesses come back as space-file text with a
    # witness block; exhausted searches come back as None.
    found = m.find_witness("STRICT_STAR_AURA", 3)
    w = json.loads(found)
    assert w["format"] == "auraspace/1", w
    assert w["witness"]["predicate"] == "STRICT_STAR_AURA", w
    assert w["witness"]["index"] == 9, w
    assert m.Space.from_json(found).n == 3
    assert m.find_witness("NONIDEMPOTENT_K(3)", 3) is None

    # The stabilization census covers every space of the size.
    census = m.stabilization_census(2)
    assert sum(census.values()) == 36, census
    assert max(census) <= 2, census

    print("smoke test passed")


if __name__ == "__main__":
    main()
