#!/usr/bin/env python3
"""Smoke test for the infobound_py extension module.

Builds nothing itself: run `cargo build -p infobound-python` (or --release)
first, then `python3 python/smoke_test.py`. The script locates the compiled
cdylib, exposes it under the importable name, and exercises the main types
and operations end to end.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO_ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libinfobound_py.so", "libinfobound_py.dylib", "infobound_py.dll")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("error: build the extension first: cargo build -p infobound-python")
    stage = Path(tempfile.mkdtemp(prefix="infobound-py-"))
    suffix = ".pyd" if built.suffix == ".dll" else ".so"
    shutil.copy2(built, stage / f"infobound_py{suffix}")
    sys.path.insert(0, str(stage))
    import infobound_py

    return infobound_py


def main():
    ib = load_module()
    checks = 0

    def check(condition, label):
        nonlocal checks
        if not condition:
            sys.exit(f"FAIL: {label}")
        checks += 1

    # Entropy arithmetic.
    check(ib.shannon_entropy([1.0]) == 0.0, "certain outcome has zero entropy")
    check(ib.shannon_entropy([0.5, 0.5]) == 1.0, "two outcomes carry one bit")
    check(ib.shannon_entropy([0.125] * 8) == 3.0, "uniform eight outcomes carry three bits")
    check(ib.uniform_entropy(1024) == 10.0, "uniform entropy of 1024 states")
    check(ib.entropy_change(7.0, 0.0) == 7.0, "entropy change to zero")
    check(abs(ib.log2_factorial_exact(5) - math.log2(120)) < 1e-12, "log2(5!)")
    check(ib.stirling_log2_factorial(100) < ib.log2_factorial_exact(100), "Stirling undershoots")
    check(ib.generalized_entropy([0.5, 0.5], 2.0) == 1.0, "base-2 reduction")
    check(abs(ib.generalized_entropy([1 / 6.0] * 6, math.e) - math.log(6)) < 1e-9, "nats")
    check(ib.e_partial_sum(1) == 2.0, "binary base from the series of e")
    try:
        ib.shannon_entropy([0.5, 0.6])
        sys.exit("FAIL: malformed distribution accepted")
    except ValueError:
        checks += 1

    # State models.
    model = ib.build_model("max", 64)
    check(model.entropy_bits == 63.0, "max model entropy")
    check(model.state_count == 2**63, "max model state count is exact")
    check(not model.information_independent, "max result cannot serve as state")
    check(model.zero_type, "max key sequence is 0-type")

    sort_model = ib.build_model("sort", 5)
    check(sort_model.state_count == 120, "5! orderings")
    check(sort_model.information_independent, "sorted order is information independent")

    check(len(ib.enumerate_max_keys(4)) == 8, "2^(n-1) max-key sequences")
    check(len(ib.enumerate_pairwise(3)) == 8, "eight pairwise situations")
    check(ib.count_consistent_orderings(4) == 24, "consistency filter collapses to n!")

    verdict = ib.check_consistency(3, "101")
    check(not verdict.consistent and verdict.witness == (0, 1, 2), "cyclic triple witness")
    check(ib.check_consistency(3, "111").consistent, "transitive chain accepted")

    check(abs(ib.residual_entropy(4, 2) - math.log2(6)) < 1e-12, "residual entropy is log2((n-1)!)")
    pairwise_model = ib.build_model("pairwise", 3)
    check(not ib.zero_type_check(pairwise_model), "pairwise model under a max query is not 0-type")
    check(ib.equiprobability_check(sort_model), "states are equiprobable")
    h, valid = ib.result_as_state_entropy(model)
    check(h == 6.0 and not valid, "log2(n) model flagged invalid for max")

    # Instrumented algorithms.
    best, count = ib.max_scan([3, 1, 2])
    check(best == 3 and count == 2, "max_scan spends n-1 comparisons")
    ordered, count = ib.merge_sort([2, 1])
    check(ordered == [1, 2] and count == 1, "merge sort of a pair")
    ordered, count = ib.bubble_sort([4, 3, 2, 1])
    check(ordered == [1, 2, 3, 4] and count == 6, "bubble sort full budget")
    _, count = ib.insertion_sort([1, 2, 3, 4, 5])
    check(count == 4, "insertion sort of sorted input")
    index, probes = ib.binary_search([2, 4, 6, 8], 6)
    check(index == 2 and probes >= 1, "binary search finds the target")
    check(ib.binary_search_worst_case(1024) == 11, "binary search worst probes")
    trace = ib.trace_comparisons("max_scan", [2, 5, 1])
    check(trace == "0 1 N\n1 2 G\n", "trace dump format")

    measured = ib.worst_case_exhaustive("merge", 4)
    check(measured.worst_case == 5 and measured.trials == 24, "exhaustive merge sweep")
    sampled = ib.measure_sampled("insertion", 16, 32, 7)
    check(sampled.seed == 7 and sampled.best_case <= sampled.worst_case, "sampled measurement")

    # Oracle.
    result = ib.min_comparisons_sort(4)
    check(result.min_worst_case == 5 and result.entropy_floor == 5, "sorting oracle at n=4")
    check(result.bound_met, "entropy ceiling met at n=4")
    check(ib.min_comparisons_max(5).min_worst_case == 4, "max oracle is n-1")
    check(ib.dump_strategy("sort", 2).startswith("cmp 0 1"), "strategy dump")
    try:
        ib.min_comparisons_sort(6)
        sys.exit("FAIL: oracle cap ignored")
    except ValueError:
        checks += 1

    # Reports.
    csv_text = ib.report_csv(2, 5)
    check(csv_text.splitlines()[0].startswith("problem,n,state_count"), "CSV header")
    check("sort,4,24,4.5849625," in csv_text, "report golden value")
    check(csv_text == ib.report_csv(2, 5), "report is deterministic")
    check(ib.report_markdown(2, 2).startswith("| problem | n |"), "Markdown table")

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
