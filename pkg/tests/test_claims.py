"""Claim registry behavior, payload re-validation, fixtures, and the
forbidden-pattern machinery."""

from __future__ import annotations

import re
from pathlib import Path

import pytest

import korder as K
from korder.claims import (
    CLAIM_IDS,
    HEAWOOD_CYCLE_FIXTURES,
    check_forbidden,
    claim_descriptions,
    distinct_fixture_cycles,
    exit_code,
    expand_fixture_tuples,
    forbidden_completion_host,
    forbidden_pattern,
    heawood_letters_to_ids,
    verify_claims,
)
from korder.graphs import graph_from_edges
from korder.graphio import graph6_decode
from korder.orderedness import find_cycle_through_in_order
from korder.validation import validate_cycle_witness

from conftest import all_simple_cycles, oracle_realizable

EXPECTED_IDS = [
    "thm-2.1", "cor-2.2", "lemma-2.3", "lemma-2.4", "thm-2.5", "prop-2.6",
    "lemma-3.1", "cor-3.2", "thm-3.3", "thm-3.4", "prop-3.5", "prop-3.6",
    "thm-4.1",
]


def test_registry_ids_fixed():
    assert CLAIM_IDS == EXPECTED_IDS
    descriptions = claim_descriptions()
    assert all(descriptions[cid] for cid in CLAIM_IDS)


def test_registry_matches_readme_table():
    readme = Path(__file__).resolve().parent.parent / "README.md"
    text = readme.read_text(encoding="utf-8")
    table_ids = re.findall(r"^\| `([a-z]+-\d+\.\d+)` \|", text, re.MULTILINE)
    assert table_ids == EXPECTED_IDS


def test_selection_and_unknown_ids():
    reports = verify_claims(["lemma-2.4", "lemma-2.3"])
    assert [r.claim_id for r in reports] == ["lemma-2.3", "lemma-2.4"]
    with pytest.raises(ValueError):
        verify_claims(["thm-9.9"])


def test_petersen_claim_payload():
    (report,) = verify_claims(["thm-2.5"])
    assert report.status == "pass"
    assert report.payload["sequences_total"] == 630
    witnesses = report.payload["witnesses"]
    assert len(witnesses) == 630
    g = K.petersen()
    for item in witnesses[::50]:
        ok, why = validate_cycle_witness(g, item["sequence"], item["cycle"])
        assert ok, why


def test_square_free_claim_payload_revalidates():
    (report,) = verify_claims(["thm-2.1"])
    assert report.status == "pass"
    for n in (8, 10):
        block = report.payload[f"n{n}"]
        assert block["with_square"] == block["refuted"]
        for item in block["refutations"][:3]:
            g = graph6_decode(item["graph6"])
            cycles = all_simple_cycles(g)
            assert not oracle_realizable(cycles, tuple(item["failing_sequence"]))
    block12 = report.payload["n12"]
    assert block12["classes"] == 85
    assert block12["with_square"] == block12["refuted"] == 83
    for item in block12["refutations"][:2]:
        g = graph6_decode(item["graph6"])
        out = find_cycle_through_in_order(g, tuple(item["failing_sequence"]))
        assert out.status == "refuted"


def test_generalized_petersen_claim_is_honestly_red():
    """The registered predicate (not 4-ordered for n = 6..10) is refuted by
    exhaustive search at n = 8 and n = 10; the claim must report exactly
    that, with the odd cases and n = 6 still refuting."""
    (report,) = verify_claims(["prop-2.6"])
    assert report.status == "fail"
    payload = report.payload
    assert payload["P(6,2)"]["holds"] is False
    assert payload["P(7,3)"]["holds"] is False
    assert payload["P(9,4)"]["holds"] is False
    assert payload["P(8,3)"]["holds"] is True
    assert payload["P(10,4)"]["holds"] is True
    # keep the refutations honest: re-check one via the oracle
    g = K.generalized_petersen(7, 3)
    cycles = all_simple_cycles(g)
    assert not oracle_realizable(cycles, tuple(payload["P(7,3)"]["failing_sequence"]))


def test_heawood_fixture_rows_validate():
    g = K.heawood()
    tuples = 0
    for case, cycle_letters, slots in HEAWOOD_CYCLE_FIXTURES:
        cycle = heawood_letters_to_ids(cycle_letters)
        assert len(cycle) == 14 and len(set(cycle)) == 14
        for seq in expand_fixture_tuples(slots):
            tuples += 1
            ok, why = validate_cycle_witness(g, seq, cycle, hamiltonian=True)
            assert ok, (case, cycle_letters, seq, why)
    assert tuples >= 90
    assert len(distinct_fixture_cycles()) == 14


def test_heawood_claim_passes():
    (report,) = verify_claims(["thm-3.3"])
    assert report.status == "pass"
    assert report.payload["sequences_total"] == 3003
    assert report.payload["distinct_fixture_cycles"] == 14
    assert len(report.payload["witnesses"]) == 3003


def test_minimality_claim():
    (report,) = verify_claims(["thm-3.4"])
    assert report.status == "pass"
    p = report.payload
    assert p["n8"]["four_ordered_hamiltonian"] == 0
    assert p["n10"]["four_ordered_hamiltonian"] == 0
    assert p["n12"]["four_ordered_hamiltonian"] == 0
    assert p["n10_girth5"] == {"classes": 1, "petersen": True, "hamiltonian": False}
    assert p["n12_girth5"]["classes"] == 2
    assert p["n14_girth6"] == {"classes": 1, "heawood": True,
                               "four_ordered_hamiltonian": True}


def test_forbidden_pattern_shape():
    fp = forbidden_pattern()
    assert fp.pattern.n == 10
    assert fp.pattern.edge_count == 12
    degs = K.degree_sequence(fp.pattern)
    assert degs == sorted([3, 3, 1, 3, 3, 1, 3, 3, 2, 2])
    assert all(fp.pattern.degree(v) == 3 for v in fp.saturated)
    assert set(fp.tuple_) <= set(range(10))
    assert K.is_hamiltonian(fp.pattern)[0] is False
    assert fp.mode == "no-hamiltonian-cycle-through-tuple"


def test_completion_host_is_cubic():
    host = forbidden_completion_host()
    assert host.n == 12
    assert K.is_regular(host, 3)
    assert K.is_connected(host)


def test_check_forbidden_outcomes():
    fp = forbidden_pattern()
    positive = check_forbidden(forbidden_completion_host(), fp)
    assert positive.status == "pass"
    assert positive.tuple_image is not None

    heawood_check = check_forbidden(K.heawood(), fp)
    assert heawood_check.status == "not-applicable"

    # "fail" surfaces when an embedded tuple is realizable: a triangle in K4.
    from korder.claims import ForbiddenPattern

    tri = ForbiddenPattern(
        graph_from_edges(3, [(0, 1), (1, 2), (2, 0)]), frozenset(), (0, 1, 2))
    failing = check_forbidden(K.complete(4), tri)
    assert failing.status == "fail"

    limited = check_forbidden(forbidden_completion_host(), fp, node_limit=1)
    assert limited.status == "inconclusive"


def test_exit_code_contract():
    all_reports = verify_claims(["lemma-2.3", "lemma-2.4"])
    assert exit_code(all_reports) == 0
    (red,) = verify_claims(["prop-2.6"])
    assert exit_code([red]) == 1
    (limited,) = verify_claims(["thm-2.5"], node_limit=2)
    assert limited.status == "inconclusive"
    assert exit_code([limited]) == 2
    assert exit_code([red, limited]) == 1


def test_parallel_claims_match_sequential():
    ids = ["lemma-2.3", "lemma-2.4", "cor-2.2", "cor-3.2"]
    seq = verify_claims(ids)
    par = verify_claims(ids, parallel=True)
    assert [(r.claim_id, r.status, r.payload) for r in seq] == \
        [(r.claim_id, r.status, r.payload) for r in par]


def test_report_json_timing_opt_in():
    (report,) = verify_claims(["lemma-2.3"])
    plain = report.to_json()
    assert set(plain) == {"claim", "status", "payload"}
    timed = report.to_json(timings=True)
    assert "wall_time" in timed
