"""Acceptance gate: every criterion runs at its stated tolerance.

Each test executes one named verification suite (all tolerances are
exact equality except the Monte Carlo bands, which are fixed 3-sigma
intervals) and prints one pass/fail line.  Run with ``pytest -s`` to see
the lines as the criteria execute.
"""

import time

import pytest

from fqtraces import verify

CRITERIA = [
    (1, "hl-schur-identity", "modified Q expands to the charge polynomials"),
    (2, "dimension-squares", "squared dimensions sum to the group order"),
    (3, "branching", "dimensions dominate their branching predecessors"),
    (4, "extension-counts", "brute-force extensions reproduce the counts"),
    (5, "haar-flatness", "geometric rows give constant cylinders"),
    (6, "growth-normalization", "growth chain rows sum to one"),
    (7, "lln", "empirical Jordan frequencies hit the 3-sigma bands"),
    (8, "trace-measure-map", "trace parameters map to measure parameters"),
    (9, "flag-kostka", "flag counts match Kostka-combined characters"),
    (10, "spherical", "fixed-subspace sums match Schur-weighted characters"),
    (11, "biregular", "biregular weights reproduce the regular character"),
    (12, "steinberg", "one-column trace gives the Steinberg values"),
]


@pytest.mark.parametrize(
    "number,suite,description",
    CRITERIA,
    ids=[f"criterion-{n:02d}-{s}" for n, s, _ in CRITERIA],
)
def test_acceptance_criterion(number, suite, description):
    start = time.time()
    result = verify.run_suite(suite)
    elapsed = time.time() - start
    status = "PASS" if result.passed else "FAIL"
    print(
        f"[acceptance] criterion {number:2d} ({suite}): {status} "
        f"({len(result.rows)} checks, {elapsed:.1f}s) -- {description}"
    )
    assert result.passed, [
        (r.instance, r.left, r.right) for r in result.failures()
    ]
