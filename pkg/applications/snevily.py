from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Sequence

import structlog
import sympy

from applications.models import SnevilyReport, SnevilyResult
from core.errors import HypothesisViolation, InvalidRingError

logger = structlog.get_logger("applications")


def is_admissible(p: int, a: Sequence[int], b: Sequence[int], permutation: Sequence[int]) -> bool:
    """Equal sums a_i + b_pi(i) only between equal (a, b) pairs."""
    if sorted(permutation) != list(range(len(a))):
        return False
    seen: dict[int, tuple[int, int]] = {}
    for i, j in enumerate(permutation):
        pair = (a[i] % p, b[j] % p)
        total = (pair[0] + pair[1]) % p
        if seen.setdefault(total, pair) != pair:
            return False
    return True


def _validate(p: int, a: Sequence[int], b: Sequence[int]) -> None:
    if not sympy.isprime(p):
        raise InvalidRingError(f"p = {p} is not prime")
    if len(a) != len(b):
        raise HypothesisViolation("equal_lengths", f"Sequences of lengths {len(a)} and {len(b)}")
    if len(a) > p:
        raise HypothesisViolation("k_at_most_p", f"k = {len(a)} exceeds p = {p}")


def check_snevily_fp(p: int, a: Sequence[int], b: Sequence[int], node_cap: int | None = None) -> SnevilyResult:
    """Backtracking search for a permutation whose colliding sums come from equal pairs."""
    _validate(p, a, b)
    k = len(a)
    a_mod = [value % p for value in a]
    b_mod = [value % p for value in b]
    # indices of b grouped by value; equal b values are interchangeable
    slots: dict[int, list[int]] = {}
    for j, value in enumerate(b_mod):
        slots.setdefault(value, []).append(j)
    remaining = Counter(b_mod)
    order = sorted(range(k), key=lambda i: a_mod[i])

    sums: dict[int, tuple[int, int]] = {}
    sum_refs: Counter[int] = Counter()
    chosen: list[int] = [0] * k
    nodes = 0
    truncated = False

    def place(depth: int) -> bool:
        nonlocal nodes, truncated
        if depth == k:
            return True
        i = order[depth]
        for value in sorted(remaining):
            if remaining[value] == 0:
                continue
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                truncated = True
                return False
            total = (a_mod[i] + value) % p
            pair = (a_mod[i], value)
            if sums.get(total, pair) != pair:
                continue
            sums[total] = pair
            sum_refs[total] += 1
            remaining[value] -= 1
            chosen[i] = value
            if place(depth + 1):
                return True
            remaining[value] += 1
            sum_refs[total] -= 1
            if sum_refs[total] == 0:
                del sums[total]
            if truncated:
                return False
        return False

    full_length = k == p
    if not place(0):
        if truncated:
            logger.warning("snevily_search_truncated", p=p, a=list(a), b=list(b), nodes=nodes)
        elif full_length:
            logger.info("snevily_full_length_unsolvable", p=p, a=list(a), b=list(b))
        else:
            logger.error("snevily_counterexample", p=p, a=list(a), b=list(b))
        return SnevilyResult(permutation=None, nodes=nodes, truncated=truncated, full_length=full_length)

    used: Counter[int] = Counter()
    permutation = []
    for i in range(k):
        value = chosen[i]
        permutation.append(slots[value][used[value]])
        used[value] += 1
    return SnevilyResult(permutation=tuple(permutation), nodes=nodes, full_length=full_length)


def canonical_sequences(p: int, k: int) -> list[tuple[int, ...]]:
    """Sorted sequences containing 0; every sequence is a translate of a permutation of one of these."""
    return [(0, *rest) for rest in itertools.combinations_with_replacement(range(p), k - 1)]


def verify_snevily(p: int, max_k: int | None = None, node_cap: int | None = None) -> SnevilyReport:
    """Exhaustive check over canonical pairs for every k up to max_k.

    Only failures with k < p count against the report; unsolvable instances at k = p
    are collected in `full_length_failures`.
    """
    top = p if max_k is None else max_k
    if top > p:
        raise HypothesisViolation("k_at_most_p", f"k up to {top} exceeds p = {p}")
    instances = 0
    truncated = 0
    counterexamples: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    full_length_failures: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for k in range(1, top + 1):
        sequences = canonical_sequences(p, k)
        # the property is symmetric in (a, b), so unordered pairs suffice
        for first, a in enumerate(sequences):
            for b in sequences[first:]:
                instances += 1
                result = check_snevily_fp(p, a, b, node_cap)
                if result.truncated:
                    truncated += 1
                elif result.found:
                    continue
                elif result.full_length:
                    full_length_failures.append((a, b))
                else:
                    counterexamples.append((a, b))
        logger.debug("snevily_level_checked", p=p, k=k, sequences=len(sequences))
    report = SnevilyReport(
        p=p,
        max_k=top,
        instances=instances,
        counterexamples=counterexamples,
        truncated=truncated,
        full_length_failures=full_length_failures,
    )
    logger.info(
        "snevily_verified",
        p=p,
        max_k=top,
        instances=instances,
        full_length_failures=len(full_length_failures),
        passed=report.passed,
    )
    return report
