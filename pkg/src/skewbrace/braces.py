"""Skew left braces on a shared 0-based carrier.

A brace holds two group tables on the same element set: an additive one
(written a + b, inverse -a) and a multiplicative one (written ab, inverse
a^-1), sharing 0 as identity and tied together by a(b + c) = ab - a + ac.
The derived maps lam_a(b) = -a + ab and a*b = lam_a(b) - b are materialized
as full tables at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    ActionNotHomomorphism,
    BraceInvalid,
    CocycleIdentityViolation,
    DeltaNotBijective,
    DistributivityViolation,
    IdentityMismatch,
    MissingZero,
    NotAnIdeal,
    NotClosed,
    TranscriptionInvalid,
)
from .groups import FiniteGroup, direct_product, make_group, _find_identity, _relabel

__all__ = [
    "SkewBrace",
    "CocycleSpec",
    "make_brace",
    "trivial_brace",
    "brace_from_cocycle",
    "quotient_brace",
    "sub_brace",
    "semidirect_group",
    "direct_product_braces",
    "check_brace_invariants",
]

EXHAUSTIVE_TRIPLE_BOUND = 64


class SkewBrace:
    """A finite skew left brace; construct through make_brace."""

    __slots__ = ("order", "add_group", "mul_group", "lam_table", "star_table",
                 "name", "cache")

    def __init__(self, add_group: FiniteGroup, mul_group: FiniteGroup,
                 lam_table: tuple[tuple[int, ...], ...],
                 star_table: tuple[tuple[int, ...], ...],
                 name: Optional[str] = None):
        self.order = add_group.order
        self.add_group = add_group
        self.mul_group = mul_group
        self.lam_table = lam_table
        self.star_table = star_table
        self.name = name
        self.cache: dict = {}

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_group.table[a][b]

    def neg(self, a: int) -> int:
        return self.add_group.inverse[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_group.table[a][b]

    def inv(self, a: int) -> int:
        return self.mul_group.inverse[a]

    def lam(self, a: int, b: int) -> int:
        return self.lam_table[a][b]

    def star(self, a: int, b: int) -> int:
        return self.star_table[a][b]

    def add_power(self, a: int, k: int) -> int:
        """k-fold additive multiple of a; negative k uses -a."""
        base = a if k >= 0 else self.neg(a)
        x = 0
        for _ in range(abs(k)):
            x = self.add(x, base)
        return x

    def mul_power(self, a: int, k: int) -> int:
        """k-fold multiplicative power of a; negative k uses a^-1."""
        base = a if k >= 0 else self.inv(a)
        x = 0
        for _ in range(abs(k)):
            x = self.mul(x, base)
        return x

    def is_trivial(self) -> bool:
        """Whether ab = a + b everywhere, i.e. the star product vanishes."""
        zero_row = tuple(0 for _ in range(self.order))
        return all(row == zero_row for row in self.star_table)

    def is_abelian(self) -> bool:
        return self.is_trivial() and self.add_group.is_abelian()

    def tables(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        return self.add_group.table, self.mul_group.table

    def __repr__(self) -> str:
        label = self.name or "brace"
        return f"SkewBrace({label}, order={self.order})"


def _triple_ranges(n: int) -> tuple[range, bool]:
    if n <= EXHAUSTIVE_TRIPLE_BOUND:
        return range(n), True
    step = max(1, n // EXHAUSTIVE_TRIPLE_BOUND)
    return range(0, n, step), False


def _validate_pair(add: FiniteGroup, mul: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Check the skew brace axioms and return the lambda table."""
    n = add.order
    if mul.order != n:
        raise BraceInvalid(f"table sizes differ: {n} vs {mul.order}")
    ta, tm = add.table, mul.table
    neg = add.inverse

    lam = tuple(tuple(ta[neg[a]][tm[a][b]] for b in range(n)) for a in range(n))

    idx, exhaustive = _triple_ranges(n)
    for a in idx:
        tma = tm[a]
        na = neg[a]
        for b in idx:
            left_part = ta[tma[b]][na]
            for c in idx:
                if tm[a][ta[b][c]] != ta[left_part][tma[c]]:
                    raise DistributivityViolation(
                        f"{a}({b}+{c}) != {a}{b} - {a} + {a}{c}")

    full = range(n)
    for a in full:
        la = lam[a]
        if len(set(la)) != n:
            raise BraceInvalid(f"lambda of {a} is not a bijection")
        for b in idx:
            lab = la[b]
            for c in idx:
                if la[ta[b][c]] != ta[lab][la[c]]:
                    raise BraceInvalid(
                        f"lambda of {a} is not additive at ({b}, {c})")
    for a in full:
        la = lam[a]
        for b in full:
            lb = lam[b]
            composed = tuple(la[lb[c]] for c in range(n))
            if lam[tm[a][b]] != composed:
                raise BraceInvalid(
                    f"lambda of {a}{b} differs from composing lambdas")

    star = tuple(tuple(ta[lam[a][b]][neg[b]] for b in range(n)) for a in range(n))
    for a in full:
        for b in full:
            if tm[a][b] != ta[ta[a][star[a][b]]][b]:
                raise BraceInvalid(f"{a}{b} != {a} + {a}*{b} + {b}")
    for a in idx:
        sa = star[a]
        for b in idx:
            sb = star[b]
            ab = tm[a][b]
            for c in idx:
                bc = sb[c]
                rhs = ta[ta[sa[bc]][bc]][sa[c]]
                if star[ab][c] != rhs:
                    raise BraceInvalid(
                        f"({a}{b})*{c} != {a}*({b}*{c}) + {b}*{c} + {a}*{c}")
                rhs3 = ta[ta[ta[sa[b]][b]][sa[c]]][neg[b]]
                if sa[ta[b][c]] != rhs3:
                    raise BraceInvalid(
                        f"{a}*({b}+{c}) != {a}*{b} + {b} + {a}*{c} - {b}")
    return lam


def make_brace(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]],
               name: Optional[str] = None) -> SkewBrace:
    """Validate a pair of Cayley tables as a skew brace."""
    if len(add_table) != len(mul_table):
        raise BraceInvalid(
            f"table sizes differ: {len(add_table)} vs {len(mul_table)}")
    n = len(add_table)
    add_rows = tuple(tuple(row) for row in add_table)
    mul_rows = tuple(tuple(row) for row in mul_table)
    e_add = _find_identity(add_rows)
    e_mul = _find_identity(mul_rows)
    if e_add != e_mul:
        raise IdentityMismatch(
            f"additive identity is {e_add}, multiplicative identity is {e_mul}")
    if e_add != 0:
        perm = list(range(n))
        perm[0], perm[e_add] = e_add, 0
        add_rows = _relabel(add_rows, perm)
        mul_rows = _relabel(mul_rows, perm)
    add = make_group(add_rows, name and f"{name}+")
    mul = make_group(mul_rows, name and f"{name}*")
    lam = _validate_pair(add, mul)
    neg = add.inverse
    star = tuple(
        tuple(add.table[lam[a][b]][neg[b]] for b in range(n)) for a in range(n)
    )
    return SkewBrace(add, mul, lam, star, name)


def check_brace_invariants(brace: SkewBrace) -> bool:
    """Re-run the full construction suite on an existing brace."""
    rebuilt = make_brace(brace.add_group.table, brace.mul_group.table, brace.name)
    return (rebuilt.add_group.table == brace.add_group.table
            and rebuilt.mul_group.table == brace.mul_group.table
            and rebuilt.lam_table == brace.lam_table
            and rebuilt.star_table == brace.star_table)


def trivial_brace(G: FiniteGroup, name: Optional[str] = None) -> SkewBrace:
    """The brace with both operations equal to the group operation."""
    return make_brace(G.table, G.table, name or (G.name and f"triv({G.name})"))


@dataclass(frozen=True)
class CocycleSpec:
    """A bijective 1-cocycle presentation of a brace.

    `acting` maps each multiplicative element c to a permutation of the
    additive elements, and `delta` is the cocycle itself:
    delta(cd) = delta(c) + acting[c](delta(d)).
    """

    additive: FiniteGroup
    multiplicative: FiniteGroup
    acting: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]


def brace_from_cocycle(spec: CocycleSpec, name: Optional[str] = None) -> SkewBrace:
    """Build the brace a.b = delta(delta^-1(a) delta^-1(b)) and validate it."""
    add = spec.additive
    mul = spec.multiplicative
    n = add.order
    if mul.order != n:
        raise TranscriptionInvalid(
            f"group orders differ: {n} additive vs {mul.order} multiplicative")
    if len(spec.delta) != n or len(spec.acting) != n:
        raise TranscriptionInvalid("acting or delta table has the wrong length")
    if sorted(spec.delta) != list(range(n)):
        raise DeltaNotBijective("delta is not a bijection onto the additive carrier")
    if spec.delta[0] != 0:
        raise TranscriptionInvalid(
            f"delta must send the identity to 0, got {spec.delta[0]}")
    ta = add.table
    for c, p in enumerate(spec.acting):
        if len(set(p)) != n:
            raise TranscriptionInvalid(f"acting map of element {c} is not a bijection")
        for x in range(n):
            for y in range(n):
                if p[ta[x][y]] != ta[p[x]][p[y]]:
                    raise TranscriptionInvalid(
                        f"acting map of element {c} is not additive at ({x}, {y})")
    tm = mul.table
    for c in range(n):
        pc = spec.acting[c]
        for d in range(n):
            composed = tuple(pc[spec.acting[d][x]] for x in range(n))
            if spec.acting[tm[c][d]] != composed:
                raise ActionNotHomomorphism(
                    f"acting map of {c}{d} differs from composing the maps")
    for c in range(n):
        dc = spec.delta[c]
        pc = spec.acting[c]
        for d in range(n):
            if spec.delta[tm[c][d]] != ta[dc][pc[spec.delta[d]]]:
                raise CocycleIdentityViolation(
                    f"delta({c}{d}) != delta({c}) + lambda({c})(delta({d}))")
    inv_delta = [0] * n
    for c, v in enumerate(spec.delta):
        inv_delta[v] = c
    mul_table = tuple(
        tuple(spec.delta[tm[inv_delta[a]][inv_delta[b]]] for b in range(n))
        for a in range(n)
    )
    return make_brace(add.table, mul_table, name)


def quotient_brace(B: SkewBrace, ideal_elems: Sequence[int],
                   name: Optional[str] = None) -> tuple[SkewBrace, list[int]]:
    """Quotient by an ideal; returns the brace and the coset index map.

    Multiplicative cosets must coincide with additive cosets elementwise,
    which is what makes the quotient tables well defined.
    """
    elems = tuple(sorted(set(ideal_elems)))
    if not elems or elems[0] != 0:
        raise MissingZero("an ideal must contain 0")
    n = B.order
    ta, tm = B.add_group.table, B.mul_group.table
    inside = set(elems)
    neg, inv = B.add_group.inverse, B.mul_group.inverse
    for a in elems:
        for b in elems:
            if ta[a][b] not in inside:
                raise NotAnIdeal(f"subset not closed under addition at ({a}, {b})")
            if tm[a][b] not in inside:
                raise NotAnIdeal(f"subset not closed under multiplication at ({a}, {b})")
    for b in range(n):
        lb = B.lam_table[b]
        for i in elems:
            if lb[i] not in inside:
                raise NotAnIdeal(f"subset not invariant under lambda of {b}")
            if ta[ta[b][i]][neg[b]] not in inside:
                raise NotAnIdeal(f"subset not additively normal, conjugate by {b} escapes")
            if tm[tm[b][i]][inv[b]] not in inside:
                raise NotAnIdeal(f"subset not multiplicatively normal, conjugate by {b} escapes")
    for b in range(n):
        additive = {ta[b][i] for i in elems}
        multiplicative = {tm[b][i] for i in elems}
        if additive != multiplicative:
            raise NotAnIdeal(
                f"multiplicative coset of {b} differs from its additive coset")
    coset_of = [-1] * n
    reps: list[int] = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for i in elems:
            coset_of[ta[g][i]] = idx
    m = len(reps)
    q_add = [[coset_of[ta[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    q_mul = [[coset_of[tm[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    return make_brace(q_add, q_mul, name), coset_of


def sub_brace(B: SkewBrace, elements: Sequence[int],
              name: Optional[str] = None) -> SkewBrace:
    """The brace induced on a subset closed under both operations.

    Elements are relabeled in ascending order, so position k of the sorted
    subset becomes element k.
    """
    elems = tuple(sorted(set(elements)))
    if not elems or elems[0] != 0:
        raise MissingZero("a subbrace must contain 0")
    pos = {x: i for i, x in enumerate(elems)}
    ta, tm = B.add_group.table, B.mul_group.table
    for a in elems:
        for b in elems:
            if ta[a][b] not in pos:
                raise NotClosed(f"subset not closed under addition at ({a}, {b})")
            if tm[a][b] not in pos:
                raise NotClosed(f"subset not closed under multiplication at ({a}, {b})")
    k = len(elems)
    s_add = [[pos[ta[elems[i]][elems[j]]] for j in range(k)] for i in range(k)]
    s_mul = [[pos[tm[elems[i]][elems[j]]] for j in range(k)] for i in range(k)]
    return make_brace(s_add, s_mul, name)


def semidirect_group(B: SkewBrace, name: Optional[str] = None) -> FiniteGroup:
    """The group on pairs (x, g) with (x1,g1)(x2,g2) = (x1 + lam_g1(x2), g1 g2).

    The additive group is twisted by the lambda action of the multiplicative
    group; pairs flatten as index = x * order + g.
    """
    n = B.order
    ta, tm, lam = B.add_group.table, B.mul_group.table, B.lam_table
    size = n * n
    table = []
    for p in range(size):
        x, g = divmod(p, n)
        row_add = ta[x]
        row_lam = lam[g]
        row_mul = tm[g]
        table.append(tuple(
            row_add[row_lam[q // n]] * n + row_mul[q % n] for q in range(size)
        ))
    label = name or (B.name and f"semi({B.name})")
    return make_group(tuple(table), label)


def direct_product_braces(B1: SkewBrace, B2: SkewBrace,
                          name: Optional[str] = None) -> SkewBrace:
    """Componentwise brace on pairs, flattened like the group product."""
    add = direct_product(B1.add_group, B2.add_group)
    mul = direct_product(B1.mul_group, B2.mul_group)
    return make_brace(add.table, mul.table, name)
