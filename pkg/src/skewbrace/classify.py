"""Supersolubility with certificates, Sylow towers, U_p sets, brace reports.

The primary decision procedure is greedy: a nonzero brace is supersoluble
exactly when it has some prime-order ideal whose quotient is supersoluble,
so the search never needs to backtrack.  An exhaustive lattice search is
kept alongside as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .braces import SkewBrace
from .errors import OrderBoundExceeded
from .groups import GroupPredicates, element_orders, group_predicates, _primes_of
from .series import (
    IdealChain,
    chief_series,
    fitting,
    ideal_chain,
    is_centrally_nilpotent,
    is_left_nilpotent,
    is_right_nilpotent,
    is_soluble,
    multipermutation_level,
    preimage,
    quotient_with_map,
)
from .substructure import all_ideals, classify_subset, index, maximal_subbraces, minimal_ideals

__all__ = [
    "SUPERSOLUBLE_ORDER_BOUND",
    "ORACLE_ORDER_BOUND",
    "SupersolubleResult",
    "is_supersoluble",
    "is_supersoluble_oracle",
    "UPResult",
    "u_p",
    "sylow_tower",
    "ClassificationReport",
    "brace_report",
]

SUPERSOLUBLE_ORDER_BOUND = 64
ORACLE_ORDER_BOUND = 32


@dataclass(frozen=True)
class SupersolubleResult:
    """Outcome of the greedy supersolubility decision."""

    supersoluble: bool
    chain: Optional[IdealChain]
    reached: tuple[tuple[int, ...], ...]
    blocking_minimal_orders: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.supersoluble


def is_supersoluble(B: SkewBrace) -> SupersolubleResult:
    """Greedy search for a chain of ideals of B with prime-order factors.

    At each level the quotient's prime-order ideal least under
    (size, elements) is lifted; when no quotient ideal of prime order
    exists the minimal-ideal orders of the stuck quotient are reported.
    """
    if B.order > SUPERSOLUBLE_ORDER_BOUND:
        raise OrderBoundExceeded(
            f"supersolubility decision capped at order {SUPERSOLUBLE_ORDER_BOUND}, got {B.order}"
        )
    key = "supersoluble"
    if key in B.cache:
        return B.cache[key]
    terms = [(0,)]
    result = None
    while result is None:
        current = terms[-1]
        if len(current) == B.order:
            result = SupersolubleResult(True, ideal_chain(B, terms), tuple(terms), ())
            break
        Q, proj = quotient_with_map(B, current)
        minima = minimal_ideals(Q)
        prime_ones = [m for m in minima if _is_prime(len(m))]
        if not prime_ones:
            blocking = tuple(sorted(len(m) for m in minima))
            result = SupersolubleResult(False, None, tuple(terms), blocking)
            break
        chosen = min(prime_ones, key=lambda s: (len(s), s))
        terms.append(preimage(proj, chosen))
    B.cache[key] = result
    return result


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_supersoluble_oracle(B: SkewBrace) -> bool:
    """Exhaustive check: depth-first over the whole ideal lattice.

    Independent of the greedy route: explores every chain of ideals of B
    and succeeds when one climbs from {0} to B through prime index steps.
    """
    if B.order > ORACLE_ORDER_BOUND:
        raise OrderBoundExceeded(
            f"supersolubility oracle capped at order {ORACLE_ORDER_BOUND}, got {B.order}"
        )
    ideals = all_ideals(B)
    full = tuple(range(B.order))
    reachable = {(0,)}
    frontier = [(0,)]
    by_key = {i: set(i) for i in ideals}
    while frontier:
        current = frontier.pop()
        if current == full:
            return True
        size = len(current)
        cur = by_key[current]
        for cand in ideals:
            if cand in reachable or len(cand) % size or not _is_prime(len(cand) // size):
                continue
            if cur < by_key[cand]:
                reachable.add(cand)
                frontier.append(cand)
    return full in reachable


@dataclass(frozen=True)
class UPResult:
    """Elements whose additive resp. multiplicative order avoids primes <= p."""

    prime: int
    additive: tuple[int, ...]
    multiplicative: tuple[int, ...]
    equal: bool
    is_ideal: bool


def u_p(B: SkewBrace, p: int) -> UPResult:
    """Both U_p sets, whether they agree, and the ideal flag of the additive one."""
    add_ord = element_orders(B.add_group)
    mul_ord = element_orders(B.mul_group)

    def keeps(order: int) -> bool:
        return all(q > p for q in _primes_of(order))

    additive = tuple(x for x in range(B.order) if keeps(add_ord[x]))
    multiplicative = tuple(x for x in range(B.order) if keeps(mul_ord[x]))
    return UPResult(
        prime=p,
        additive=additive,
        multiplicative=multiplicative,
        equal=additive == multiplicative,
        is_ideal=classify_subset(B, additive).is_ideal,
    )


def sylow_tower(B: SkewBrace) -> Optional[IdealChain]:
    """A chain of prime-order factors grouped by descending odd primes, 2 last.

    Only supersoluble braces carry one; the builder climbs section by
    section, each section exhausted through prime-order quotient ideals
    before the next prime starts.
    """
    if not is_supersoluble(B).supersoluble:
        return None
    add_ord = element_orders(B.add_group)
    primes = sorted(_primes_of(B.order), reverse=True)
    if 2 in primes:
        primes.remove(2)
        primes.append(2)
    terms = [(0,)]
    allowed: set[int] = set()
    for q in primes:
        allowed.add(q)
        target = {x for x in range(B.order) if set(_primes_of(add_ord[x])) <= allowed}
        while set(terms[-1]) != target:
            Q, proj = quotient_with_map(B, terms[-1])
            image = {proj[x] for x in target}
            inside = [m for m in minimal_ideals(Q) if len(m) == q and set(m) <= image]
            chosen = min(inside, key=lambda s: s)
            terms.append(preimage(proj, chosen))
    return ideal_chain(B, terms)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the analyzers know about one brace, in a fixed field order."""

    name: str
    order: int
    additive: GroupPredicates
    multiplicative: GroupPredicates
    supersoluble: bool
    certificate_orders: Optional[tuple[int, ...]]
    blocking_minimal_orders: tuple[int, ...]
    centrally_nilpotent: bool
    left_nilpotent: bool
    right_nilpotent: bool
    soluble: bool
    mp_level: Optional[int]
    u_p_by_prime: tuple[UPResult, ...]
    fitting_order: int
    fitting_is_ideal: bool
    chief_factor_orders: tuple[int, ...]
    maximal_subbrace_indices: tuple[int, ...]
    ideal_count: int
    is_trivial: bool = field(default=False)


def brace_report(B: SkewBrace, name: str = "") -> ClassificationReport:
    """Aggregate series, substructure and classification data for one brace."""
    ss = is_supersoluble(B)
    fit = fitting(B)
    chain = chief_series(B)
    primes = sorted(_primes_of(B.order))
    return ClassificationReport(
        name=name or B.name,
        order=B.order,
        additive=group_predicates(B.add_group),
        multiplicative=group_predicates(B.mul_group),
        supersoluble=ss.supersoluble,
        certificate_orders=ss.chain.orders() if ss.chain is not None else None,
        blocking_minimal_orders=ss.blocking_minimal_orders,
        centrally_nilpotent=is_centrally_nilpotent(B),
        left_nilpotent=is_left_nilpotent(B),
        right_nilpotent=is_right_nilpotent(B),
        soluble=is_soluble(B)[0],
        mp_level=multipermutation_level(B),
        u_p_by_prime=tuple(u_p(B, p) for p in primes),
        fitting_order=len(fit.elements),
        fitting_is_ideal=fit.is_ideal,
        chief_factor_orders=chain.factor_orders(),
        maximal_subbrace_indices=tuple(index(B, s) for s in maximal_subbraces(B)),
        ideal_count=len(all_ideals(B)),
        is_trivial=B.is_trivial(),
    )
