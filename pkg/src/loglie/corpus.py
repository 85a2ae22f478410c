"""Built-in example corpus with expected invariants.

Each entry records the hypersurface and the report values it must produce;
`run_corpus` executes them and returns the mismatches.  This is the
acceptance harness behind the `corpus` subcommand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import run_analyze


@dataclass
class CorpusEntry:
    name: str
    variables: tuple
    f: str
    expect: dict = field(default_factory=dict)
    expect_error_stage: str = None
    expect_flags: tuple = ()


CORPUS = [
    CorpusEntry(
        name="discriminant-quartic",
        variables=("x", "y", "z", "w"),
        f="y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2",
        expect={
            "order": 4, "reduced": True, "product_test": True, "free": True,
            "initial_dim": 4, "solvable": False, "nilpotent": False,
            "levi_dim": 3, "levi_rank": 1, "radical_dim": 1, "kernel_dim": 0,
            "reductive": True,
            "linear_verdict": "linear (reductive free divisor)",
            "rank_l0": 2, "n_D": 0, "s_D": 2,
            "weights": [["-3"], ["-1"], ["1"], ["3"]],
            "multiplicities": [1, 1, 1, 1],
            "M": 1, "sing_dim": 2, "bound": "holds",
            "qh_weights": ["1", "1", "1", "1"],
        }),
    CorpusEntry(
        name="normal-crossing-2",
        variables=("x", "y"), f="x*y",
        expect={"order": 2, "initial_dim": 2, "solvable": True, "nilpotent": True,
                "free": True, "reductive": True, "kernel_dim": 0,
                "levi_dim": 0, "radical_dim": 2, "bound": "vacuous",
                "M": "-inf", "sing_dim": 0, "rank_l0": 2, "n_D": 0, "s_D": 2}),
    CorpusEntry(
        name="normal-crossing-3",
        variables=("x", "y", "z"), f="x*y*z",
        expect={"order": 3, "initial_dim": 3, "solvable": True, "nilpotent": True,
                "free": True, "reductive": True, "kernel_dim": 0,
                "levi_dim": 0, "radical_dim": 3, "bound": "vacuous",
                "M": "-inf", "sing_dim": 1, "rank_l0": 3, "n_D": 0, "s_D": 3}),
    CorpusEntry(
        name="normal-crossing-4",
        variables=("x", "y", "z", "w"), f="x*y*z*w",
        expect={"order": 4, "initial_dim": 4, "solvable": True, "nilpotent": True,
                "free": True, "reductive": True, "kernel_dim": 0,
                "levi_dim": 0, "radical_dim": 4, "bound": "vacuous",
                "M": "-inf", "sing_dim": 2, "rank_l0": 4, "n_D": 0, "s_D": 4}),
    CorpusEntry(
        name="quadric-3",
        variables=("x", "y", "z"), f="x^2 + y^2 + z^2",
        expect={"order": 2, "initial_dim": 4, "solvable": False,
                "free": False, "reductive": True, "kernel_dim": 0,
                "levi_dim": 3, "levi_rank": 1, "radical_dim": 1,
                "bound": "vacuous", "sing_dim": 0},
        expect_flags=("weight diagram unavailable",)),
    CorpusEntry(
        name="quadric-4",
        variables=("x", "y", "z", "w"), f="x^2 + y^2 + z^2 + w^2",
        expect={"order": 2, "initial_dim": 7, "solvable": False,
                "free": False, "reductive": True, "kernel_dim": 0,
                "levi_dim": 6, "levi_rank": 2, "radical_dim": 1,
                "bound": "vacuous", "sing_dim": 0},
        expect_flags=("weight diagram unavailable",)),
    CorpusEntry(
        name="cusp-3-4",
        variables=("x", "y"), f="x^3 + y^4",
        expect={"order": 3, "initial_dim": 2, "solvable": True, "nilpotent": False,
                "free": True, "reductive": False, "kernel_dim": 1,
                "levi_dim": 0, "radical_dim": 2, "bound": "vacuous",
                "M": "-inf", "sing_dim": 0, "rank_l0": 1, "n_D": 0, "s_D": 1,
                "qh_weights": ["4/3", "1"]}),
    CorpusEntry(
        name="cusp-3-5",
        variables=("x", "y"), f="x^3 + y^5",
        expect={"order": 3, "initial_dim": 2, "solvable": True,
                "free": True, "reductive": False, "kernel_dim": 1,
                "levi_dim": 0, "radical_dim": 2, "bound": "vacuous",
                "sing_dim": 0}),
    CorpusEntry(
        name="fermat-3-3",
        variables=("x", "y", "z"), f="x^3 + y^3 + z^3",
        expect={"order": 3, "initial_dim": 4, "solvable": True,
                "free": False, "reductive": False, "kernel_dim": 3,
                "levi_dim": 0, "radical_dim": 4, "bound": "vacuous",
                "sing_dim": 0}),
    CorpusEntry(
        name="fermat-4-3",
        variables=("x", "y", "z"), f="x^4 + y^4 + z^4",
        expect={"order": 4, "initial_dim": 4, "solvable": True,
                "free": False, "reductive": False, "kernel_dim": 3,
                "levi_dim": 0, "radical_dim": 4, "bound": "vacuous",
                "sing_dim": 0}),
    CorpusEntry(
        name="smooth-line",
        variables=("x", "y"), f="x",
        expect={"order": 1, "product_test": False},
        expect_error_stage="product_test"),
    CorpusEntry(
        name="non-quasihomogeneous",
        variables=("x", "y"), f="x^3 + y^3 + x^2*y^2",
        expect={"order": 3, "qh_weights": None, "sing_dim": 0, "reduced": True},
        expect_error_stage="initial",
        expect_flags=("global approximation",)),
]


@dataclass
class CorpusResult:
    entry: CorpusEntry
    report: object
    mismatches: list


def check_entry(entry, budget=100000):
    report = run_analyze(entry.variables, entry.f, budget=budget)
    data = report.to_dict()
    mismatches = []
    for key, expected in entry.expect.items():
        got = data.get(key)
        if got != expected:
            mismatches.append(f"{key}: expected {expected!r}, got {got!r}")
    if entry.expect_error_stage is None:
        if report.error is not None:
            mismatches.append(f"unexpected error: {report.error}")
    else:
        if report.error is None or report.error["stage"] != entry.expect_error_stage:
            mismatches.append(
                f"expected failure at stage {entry.expect_error_stage!r}, "
                f"got {report.error!r}")
    for flag in entry.expect_flags:
        if not any(flag in item for item in report.flags):
            mismatches.append(f"missing flag {flag!r} in {report.flags!r}")
    return CorpusResult(entry=entry, report=report, mismatches=mismatches)


def run_corpus(name_filter=None, budget=100000):
    """Run every (matching) corpus entry; results carry their mismatches."""
    results = []
    for entry in CORPUS:
        if name_filter and name_filter not in entry.name:
            continue
        results.append(check_entry(entry, budget=budget))
    return results
