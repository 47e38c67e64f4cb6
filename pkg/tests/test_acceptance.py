"""Acceptance suite: one test per exit criterion, each printing a verdict line.

Budgets are asserted with the stated caps; the searches actually finish far
below them on current hardware.
"""

import json
import random
import subprocess
import sys
import time
from itertools import combinations

import pytest

from oracles import all_critical_words
from rck.arrowing import (
    CliqueVector,
    arrows,
    extremal_critical_coloring,
    is_critical,
)
from rck.canonical import canonical_form
from rck.cocritical import is_cocritical, is_minimal_cocritical, lemma_suite
from rck.constructions import (
    hanson_toft,
    k6_minus,
    mindeg_bound,
    ramsey_lower_bound,
    sharp_mindeg_bound,
)
from rck.graph6 import parse_graph6, to_graph6
from rck.graphs import complete_graph, empty_graph, from_edges, join
from rck.saturation import check_hajnal, is_saturated

S23 = CliqueVector((2, 3))
S33 = CliqueVector((3, 3))
S34 = CliqueVector((3, 4))


def announce(criterion: int, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS - {detail}")


@pytest.fixture(scope="session")
def cocritical_census(corpus):
    """Every (3,3)-co-critical graph on 6..8 vertices, with scan wall time.

    Graphs are round-tripped through graph6 lines first, exercising the same
    ingestion path a generator-produced corpus file would take.
    """
    census = {}
    t0 = time.perf_counter()
    for n in (6, 7, 8):
        lines = [to_graph6(g) for g in corpus[n]]
        found = []
        for line in lines:
            g = parse_graph6(line)
            if g.is_complete():
                continue
            report = is_cocritical(g, S33)
            if report.is_cocritical:
                found.append((g, report))
        census[n] = found
    census["elapsed"] = time.perf_counter() - t0
    return census


@pytest.fixture(scope="session")
def hanson_toft_34_reports():
    out = {}
    t0 = time.perf_counter()
    for n in (9, 10):
        g = hanson_toft(S34, n)
        out[n] = (g, is_cocritical(g, S34, workers=2))
    out["elapsed"] = time.perf_counter() - t0
    return out


def test_criterion_1_ramsey_base_facts():
    t0 = time.perf_counter()
    assert arrows(complete_graph(6), S33).arrows is True
    t_k6 = time.perf_counter() - t0

    t0 = time.perf_counter()
    verdict5 = arrows(complete_graph(5), S33)
    t_k5 = time.perf_counter() - t0
    assert verdict5.arrows is False
    assert is_critical(complete_graph(5), verdict5.witness, S33)

    assert t_k6 < 1.0 and t_k5 < 1.0

    t0 = time.perf_counter()
    verdict8 = arrows(complete_graph(8), S34)
    t_k8 = time.perf_counter() - t0
    assert verdict8.arrows is False
    assert is_critical(complete_graph(8), verdict8.witness, S34)
    assert t_k8 < 10.0

    t0 = time.perf_counter()
    verdict9 = arrows(complete_graph(9), S34, workers=2)
    t_k9 = time.perf_counter() - t0
    assert verdict9.arrows is True
    assert t_k9 < 1800.0

    announce(1, f"r(3,3)=6 and r(3,4)=9 re-verified "
                f"(K6 {t_k6:.2f}s, K5 {t_k5:.2f}s, K8 {t_k8:.2f}s, K9 {t_k9:.1f}s)")


def test_criterion_2_min_degree_scan(corpus, cocritical_census, tmp_path):
    assert len(corpus[8]) == 12346
    for n in (6, 7, 8):
        found = cocritical_census[n]
        assert found, f"no co-critical graph found at n={n}"
        deltas = [rep.delta for _, rep in found]
        assert all(d >= 4 for d in deltas)
        assert any(d == 4 for d in deltas)  # the join construction realizes it
    assert cocritical_census["elapsed"] < 7200.0

    # The same sweep through the batch front end on the n=8 corpus file.
    corpus_file = tmp_path / "n8.g6"
    corpus_file.write_text("".join(to_graph6(g) + "\n" for g in corpus[8]))
    proc = subprocess.run(
        [sys.executable, "-m", "rck.cli", "scan", "--spec", "3,3",
         "--in", str(corpus_file), "--workers", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    summary = json.loads(proc.stdout)
    assert summary["graphs"] == 12346
    assert summary["cocritical"] == len(cocritical_census[8])
    assert summary["min_delta"] == 4 and summary["delta_ok"] is True
    assert summary["lemma_fail"] == 0

    counts = {n: len(cocritical_census[n]) for n in (6, 7, 8)}
    announce(2, f"every (3,3)-co-critical graph on 6..8 vertices has min degree"
                f" >= 4, sharp at each n; counts {counts}, "
                f"scan {cocritical_census['elapsed']:.1f}s")


def test_criterion_3_sharp_seven_bound(hanson_toft_34_reports):
    for n in (9, 10):
        g, report = hanson_toft_34_reports[n]
        assert report.is_cocritical is True
        assert report.delta == 7
        findings = lemma_suite(g, S34)
        assert findings and all(f.holds for f in findings)
    assert hanson_toft_34_reports["elapsed"] < 7200.0
    announce(3, f"join of K7 with a stable set is (3,4)-co-critical with min "
                f"degree 7 at n=9,10 ({hanson_toft_34_reports['elapsed']:.1f}s); "
                f"structural suite clean")


def test_criterion_4_minimal_cocritical_example():
    t0 = time.perf_counter()
    g = k6_minus()
    report = is_cocritical(g, S33)
    assert report.is_cocritical is True
    assert is_minimal_cocritical(g, S33, report=report) is True
    assert canonical_form(g) == canonical_form(join(complete_graph(4), empty_graph(2)))
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    announce(4, f"K6 minus an edge: co-critical, minimal, isomorphic to the "
                f"join construction ({elapsed:.2f}s)")


def test_criterion_5_lemma_suite_zero_violations(
    corpus, cocritical_census, hanson_toft_34_reports
):
    checked = 0
    failures = []
    for n in (6, 7, 8):
        for g, _ in cocritical_census[n]:
            for finding in lemma_suite(g, S33):
                checked += 1
                if not finding.holds:
                    failures.append((to_graph6(g), finding))
    for n in (9, 10):
        g, _ = hanson_toft_34_reports[n]
        for finding in lemma_suite(g, S34):
            checked += 1
            if not finding.holds:
                failures.append((to_graph6(g), finding))
    g = k6_minus()
    for finding in lemma_suite(g, S33):
        checked += 1
        if not finding.holds:
            failures.append((to_graph6(g), finding))
    assert not failures, failures
    announce(5, f"{checked} structural findings, zero violations")


def test_criterion_5_lemma_d_three_color_instance():
    # No (K_3,K_3,K_3)-co-critical graph exists below 17 vertices: every
    # supergraph extension would have to arrow, yet nothing on fewer than
    # 17 vertices arrows (3,3,3).  The smallest instance is therefore out of
    # the desk budget, so the three-color reduction check is skipped here
    # under the unverified-r flag; its mechanics are covered in
    # test_cocritical.py.
    pytest.skip(
        "lemma 1.5(d) three-color instance skipped: r unverified (cited 17), "
        "smallest instance needs >= 17 vertices"
    )


def test_criterion_6_engine_oracle_equivalence(corpus):
    rng = random.Random(20250811)
    instances = []
    for n in range(1, 6):
        instances.extend(corpus[n])
    while len(instances) < 3400:
        n = rng.randint(2, 7)
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        m = rng.randint(0, min(12, len(pairs)))
        instances.append(from_edges(n, pairs[:m]))

    checked = 0
    for g in instances:
        for spec in (S23, S33, S34):
            words = all_critical_words(g, spec)
            verdict = arrows(g, spec)
            assert verdict.arrows == (not words)
            if verdict.witness is not None:
                assert verdict.witness.colors in set(words)

            got_max = extremal_critical_coloring(g, spec, spec.k, "max")
            got_min = extremal_critical_coloring(g, spec, 1, "min")
            if not words:
                assert got_max is None and got_min is None
            else:
                want_max = max(sum(1 for c in w if c == spec.k) for w in words)
                want_min = min(sum(1 for c in w if c == 1) for w in words)
                assert got_max.class_size(spec.k) == want_max
                assert got_min.class_size(1) == want_min
            checked += 1
    assert checked >= 10000
    announce(6, f"arrows and extremal optima agree with full enumeration on "
                f"{checked} instances")


def test_criterion_7_hajnal_dichotomy(corpus):
    checked = 0
    for n in range(2, 9):
        for g in corpus[n]:
            for t in (3, 4):
                report = is_saturated(g, t)
                if report.is_saturated:
                    assert check_hajnal(g, t)
                    checked += 1
    announce(7, f"degree dichotomy holds for all {checked} saturated "
                f"(graph, t) pairs with n <= 8")


def test_criterion_8_formula_ops():
    assert mindeg_bound(S33) == 4
    assert mindeg_bound(S34) == 6
    assert mindeg_bound(CliqueVector((4, 4))) == 7
    assert ramsey_lower_bound(3, 4) == 9
    assert sharp_mindeg_bound(S34) == 7
    for n in (6, 7, 8):
        assert hanson_toft(S33, n).edge_count == (6 - 2) * (n - 6 + 2) + 6
    for n in (9, 10):
        assert hanson_toft(S34, n).edge_count == (9 - 2) * (n - 9 + 2) + 21
    announce(8, "closed-form degree bounds, Ramsey lower bound, and "
                "construction edge counts all exact")


def test_criterion_9_determinism_and_format(corpus, tmp_path):
    stream = "".join(to_graph6(g) + "\n" for g in corpus[6])
    infile = tmp_path / "n6.g6"
    infile.write_text(stream)

    outputs = []
    for workers in ("1", "1", "1", "4"):
        proc = subprocess.run(
            [sys.executable, "-m", "rck.cli", "scan", "--spec", "3,3",
             "--in", str(infile), "--workers", workers],
            capture_output=True,
            text=True,
            check=True,
        )
        outputs.append(proc.stdout)
    assert len(set(outputs)) == 1
    json.loads(outputs[0])  # schema sanity

    arrow_outputs = []
    for workers in ("1", "4"):
        proc = subprocess.run(
            [sys.executable, "-m", "rck.cli", "arrow", "--spec", "3,3",
             "--in", str(infile), "--workers", workers],
            capture_output=True,
            text=True,
            check=True,
        )
        arrow_outputs.append(proc.stdout)
    assert len(set(arrow_outputs)) == 1

    count = 0
    for n in range(1, 9):
        for g in corpus[n]:
            line = to_graph6(g)
            assert parse_graph6(line) == g
            assert to_graph6(parse_graph6(line)) == line
            count += 1
    announce(9, f"byte-identical output across runs and worker counts; "
                f"graph6 round-trip exact on {count} corpus graphs")
