"""Enumeration of braces of small order over each additive group.

The primary route walks regular families f: A -> Aut(A) (equivalently,
regular subgroups of the holomorph of A) by backtracking with closure
propagation, then keeps one representative per relabeling orbit.  An
independent oracle recounts everything through the other door: group
actions lambda paired with bijective cocycles delta, deduplicated at the
multiplication-table level.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .braces import SkewBrace, make_brace
from .errors import OrderBoundExceeded, SkewBraceError
from .groups import (
    FiniteGroup,
    automorphism_perms,
    cyclic_group,
    direct_product,
    element_order,
    element_orders,
    generating_set,
    group_isomorphism,
    make_group,
    semidirect_product,
)

__all__ = [
    "ENUMERATION_ORDER_BOUND",
    "EXTENDED_ORDER_BOUND",
    "ORACLE_BOUND",
    "group_catalog",
    "quaternion_group",
    "braces_with_additive_group",
    "CensusEntry",
    "BraceCensus",
    "census",
    "brace_isomorphic",
    "census_oracle",
]

ENUMERATION_ORDER_BOUND = 12
EXTENDED_ORDER_BOUND = 16
ORACLE_BOUND = 8


def quaternion_group() -> FiniteGroup:
    """The order-8 group of quaternion units, identity first."""
    unit_mul = (
        ((0, 0), (0, 1), (0, 2), (0, 3)),
        ((0, 1), (1, 0), (0, 3), (1, 2)),
        ((0, 2), (1, 3), (1, 0), (0, 1)),
        ((0, 3), (0, 2), (1, 1), (1, 0)),
    )
    table = []
    for idx1 in range(8):
        u1, s1 = divmod(idx1, 2)
        row = []
        for idx2 in range(8):
            u2, s2 = divmod(idx2, 2)
            extra, unit = unit_mul[u1][u2]
            row.append(2 * unit + (s1 ^ s2 ^ extra))
        table.append(tuple(row))
    return make_group(tuple(table), name="Q8")


def _dihedral(m: int, name: str) -> FiniteGroup:
    rot = cyclic_group(m)
    return semidirect_product(
        rot, cyclic_group(2),
        [tuple(range(m)), tuple((-x) % m for x in range(m))],
        name=name,
    )


def group_catalog(n: int) -> list[tuple[str, FiniteGroup]]:
    """All isomorphism types of groups of order n, for n <= 16 minus 16."""
    if n < 1:
        raise SkewBraceError(f"group order must be positive, got {n}")
    if n > 15:
        raise OrderBoundExceeded(f"group catalog covers orders up to 15, got {n}")
    c = cyclic_group
    out: list[tuple[str, FiniteGroup]] = [(f"C{n}", c(n))]
    if n == 4:
        out.append(("C2xC2", direct_product(c(2), c(2), name="C2xC2")))
    elif n == 6:
        out.append(("S3", _dihedral(3, "S3")))
    elif n == 8:
        out.append(("C4xC2", direct_product(c(4), c(2), name="C4xC2")))
        v4 = direct_product(c(2), c(2))
        out.append(("C2xC2xC2", direct_product(v4, c(2), name="C2xC2xC2")))
        out.append(("D8", _dihedral(4, "D8")))
        out.append(("Q8", quaternion_group()))
    elif n == 9:
        out.append(("C3xC3", direct_product(c(3), c(3), name="C3xC3")))
    elif n == 10:
        out.append(("D10", _dihedral(5, "D10")))
    elif n == 12:
        out.append(("C6xC2", direct_product(c(6), c(2), name="C6xC2")))
        out.append(("D12", _dihedral(6, "D12")))
        out.append(("Dic3", semidirect_product(
            c(3), c(4), [(0, 1, 2), (0, 2, 1), (0, 1, 2), (0, 2, 1)], name="Dic3")))
        v4 = direct_product(c(2), c(2))
        out.append(("A4", semidirect_product(
            v4, c(3), [(0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)], name="A4")))
    elif n == 14:
        out.append(("D14", _dihedral(7, "D14")))
    return out


def _perm_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    total = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        if length > 1:
            g = _gcd(total, length)
            total = total // g * length
    return total


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[q[t]] for t in range(len(q)))


def _hol_order(A: FiniteGroup, v: int, phi: Sequence[int]) -> int:
    """Order of the pair (translate by v, twist by phi) in the holomorph."""
    ident = tuple(range(A.order))
    w, psi = v, tuple(phi)
    k = 1
    while w != 0 or psi != ident:
        w, psi = A.table[w][psi[v]], _compose(psi, phi)
        k += 1
    return k


def _regular_families(A: FiniteGroup) -> list[tuple[tuple[int, ...], ...]]:
    """All families f with f_0 = id and f_{a + f_a(b)} = f_a f_b."""
    n = A.order
    ta = A.table
    ident = tuple(range(n))
    auts = automorphism_perms(A)
    usable = {
        a: [phi for phi in auts if n % _hol_order(A, a, phi) == 0]
        for a in range(1, n)
    }
    results: list[tuple[tuple[int, ...], ...]] = []

    def close(assign: dict[int, tuple[int, ...]], fresh: list[int]) -> bool:
        while fresh:
            e = fresh.pop()
            fe = assign[e]
            for x in list(assign):
                fx = assign[x]
                for left, fl, right, fr in ((x, fx, e, fe), (e, fe, x, fx)):
                    z = ta[left][fl[right]]
                    fz = _compose(fl, fr)
                    known = assign.get(z)
                    if known is None:
                        assign[z] = fz
                        fresh.append(z)
                    elif known != fz:
                        return False
        return n % len(assign) == 0

    def search(assign: dict[int, tuple[int, ...]]) -> None:
        if len(assign) == n:
            results.append(tuple(assign[a] for a in range(n)))
            return
        a = min(x for x in range(n) if x not in assign)
        for phi in usable[a]:
            trial = dict(assign)
            trial[a] = phi
            if close(trial, [a]):
                search(trial)

    search({0: ident})
    return results


def _transport_family(family, theta, theta_inv):
    """Relabel a family by an additive automorphism theta."""
    n = len(theta)
    return tuple(
        tuple(theta[family[theta_inv[a]][theta_inv[b]]] for b in range(n))
        for a in range(n)
    )


def _invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _orbit_representatives(items, transports) -> list:
    """First-seen lex-minimal representative of each relabeling orbit.

    Every transported item must already be in the input set; a miss means
    the generator lost part of an orbit and is reported loudly.
    """
    pool = set(items)
    covered = set()
    reps = []
    for item in sorted(pool):
        if item in covered:
            continue
        reps.append(item)
        for move in transports:
            moved = move(item)
            if moved not in pool:
                raise SkewBraceError(
                    "enumeration dropped a relabeling of one of its own results"
                )
            covered.add(moved)
    return reps


def braces_with_additive_group(
    A: FiniteGroup, order_bound: int = ENUMERATION_ORDER_BOUND
) -> list[SkewBrace]:
    """One validated brace per isomorphism class with additive group A."""
    if order_bound > EXTENDED_ORDER_BOUND:
        raise OrderBoundExceeded(
            f"enumeration bound cannot exceed {EXTENDED_ORDER_BOUND}"
        )
    if A.order > order_bound:
        raise OrderBoundExceeded(
            f"enumeration capped at order {order_bound}, got {A.order}"
        )
    n = A.order
    ta = A.table
    auts = automorphism_perms(A)
    moves = [
        (lambda fam, t=theta, ti=_invert_perm(theta): _transport_family(fam, t, ti))
        for theta in auts
    ]
    reps = _orbit_representatives(_regular_families(A), moves)
    braces = []
    for family in reps:
        mul = tuple(
            tuple(ta[a][family[a][b]] for b in range(n))
            for a in range(n)
        )
        braces.append(make_brace(ta, mul, name=f"{A.name or 'A'}#{len(braces)}"))
    return braces


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class of braces in a census."""

    brace: SkewBrace
    additive_label: str
    multiplicative_label: str


@dataclass(frozen=True)
class BraceCensus:
    """All braces of one order up to isomorphism."""

    order: int
    entries: tuple[CensusEntry, ...]

    def count(self) -> int:
        return len(self.entries)

    def count_by_additive(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            out[e.additive_label] = out.get(e.additive_label, 0) + 1
        return out


def _label_group(G: FiniteGroup, catalog) -> str:
    for label, H in catalog:
        if group_isomorphism(G, H) is not None:
            return label
    raise SkewBraceError(f"no catalog group matches one of order {G.order}")


def census(n: int, order_bound: int = ENUMERATION_ORDER_BOUND) -> BraceCensus:
    """Every brace of order n up to isomorphism, labeled and sorted."""
    if n > order_bound:
        raise OrderBoundExceeded(
            f"census capped at order {order_bound}, got {n}"
        )
    catalog = group_catalog(n)
    entries = []
    for label, A in catalog:
        for B in braces_with_additive_group(A, order_bound):
            entries.append(CensusEntry(
                brace=B,
                additive_label=label,
                multiplicative_label=_label_group(B.mul_group, catalog),
            ))
    entries.sort(key=lambda e: (e.additive_label, e.multiplicative_label,
                                e.brace.mul_group.table))
    return BraceCensus(order=n, entries=tuple(entries))


def brace_isomorphic(B1: SkewBrace, B2: SkewBrace) -> Optional[list[int]]:
    """A bijection preserving both operations, or None.

    Searches images of an additive generating set, pruned by element order
    pairs and extended by closure under both tables.
    """
    if B1.order != B2.order:
        return None
    n = B1.order
    pair_inv1 = _order_pairs(B1)
    pair_inv2 = _order_pairs(B2)
    if sorted(pair_inv1) != sorted(pair_inv2):
        return None
    t1a, t1m = B1.add_group.table, B1.mul_group.table
    t2a, t2m = B2.add_group.table, B2.mul_group.table
    gens = generating_set(B1.add_group)
    fwd = [-1] * n
    bwd = [-1] * n
    fwd[0] = 0
    bwd[0] = 0

    def close(queue: list[int], trail: list[int]) -> bool:
        while queue:
            x = queue.pop()
            for y in range(n):
                if fwd[y] < 0:
                    continue
                for (s1, s2) in ((t1a, t2a), (t1m, t2m)):
                    for u, v in ((x, y), (y, x)):
                        z = s1[u][v]
                        w = s2[fwd[u]][fwd[v]]
                        if fwd[z] < 0 and bwd[w] < 0:
                            fwd[z] = w
                            bwd[w] = z
                            trail.append(z)
                            queue.append(z)
                        elif fwd[z] != w:
                            return False
        return True

    def undo(trail: list[int]) -> None:
        for z in trail:
            bwd[fwd[z]] = -1
            fwd[z] = -1

    def assign(k: int) -> bool:
        if k == len(gens):
            return all(v >= 0 for v in fwd)
        g = gens[k]
        if fwd[g] >= 0:
            return assign(k + 1)
        for target in range(n):
            if bwd[target] >= 0 or pair_inv1[g] != pair_inv2[target]:
                continue
            fwd[g] = target
            bwd[target] = g
            trail = [g]
            if close([g], trail) and assign(k + 1):
                return True
            undo(trail)
        return False

    if assign(0):
        return list(fwd)
    return None


def _order_pairs(B: SkewBrace) -> list[tuple[int, int]]:
    add = element_orders(B.add_group)
    mul = element_orders(B.mul_group)
    return [(add[x], mul[x]) for x in range(B.order)]


def _bfs_edges(C: FiniteGroup, gens: Sequence[int]):
    """Edges (x, g, xg) reaching every element from the identity."""
    seen = [False] * C.order
    seen[0] = True
    frontier = [0]
    edges = []
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = C.table[x][g]
                if not seen[y]:
                    seen[y] = True
                    edges.append((x, g, y))
                    nxt.append(y)
        frontier = nxt
    return edges


def _action_homs(C: FiniteGroup, A: FiniteGroup, auts):
    """All homomorphisms from C into the additive automorphisms of A."""
    gens = generating_set(C)
    edges = _bfs_edges(C, gens)
    ident = tuple(range(A.order))
    aut_order = {phi: _perm_order(phi) for phi in auts}
    gen_orders = [element_order(C, g) for g in gens]
    candidates = [
        [phi for phi in auts if gen_orders[i] % aut_order[phi] == 0]
        for i in range(len(gens))
    ]
    out = []
    for images in product(*candidates):
        lam = [None] * C.order
        lam[0] = ident
        for i, g in enumerate(gens):
            lam[g] = images[i]
        ok = True
        for x, g, y in edges:
            if lam[x] is None or lam[g] is None:
                ok = False
                break
            lam[y] = _compose(lam[x], lam[g])
        if not ok or any(v is None for v in lam):
            continue
        if all(
            _compose(lam[a], lam[b]) == lam[C.table[a][b]]
            for a in range(C.order) for b in range(C.order)
        ):
            out.append(tuple(lam))
    return out


def _bijective_cocycles(C: FiniteGroup, A: FiniteGroup, lam):
    """All bijections delta with delta(xy) = delta(x) + lam_x(delta(y))."""
    gens = generating_set(C)
    edges = _bfs_edges(C, gens)
    n = C.order
    candidates = []
    for g in gens:
        want = element_order(C, g)
        candidates.append([
            v for v in range(n) if _hol_order(A, v, lam[g]) == want
        ])
    out = []
    for images in product(*candidates):
        delta = [-1] * n
        delta[0] = 0
        for i, g in enumerate(gens):
            delta[g] = images[i]
        for x, g, y in edges:
            delta[y] = A.table[delta[x]][lam[x][delta[g]]]
        if len(set(delta)) != n:
            continue
        if all(
            delta[C.table[a][b]] == A.table[delta[a]][lam[a][delta[b]]]
            for a in range(n) for b in range(n)
        ):
            out.append(tuple(delta))
    return out


def _relabel_table(table, theta):
    n = len(theta)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        ra = table[a]
        ta = theta[a]
        for b in range(n):
            out[ta][theta[b]] = theta[ra[b]]
    return tuple(tuple(row) for row in out)


def _oracle_counts(n: int) -> dict[str, int]:
    """Brace counts per additive group via the cocycle parametrization."""
    counts: dict[str, int] = {}
    catalog = group_catalog(n)
    for label, A in catalog:
        auts = automorphism_perms(A)
        tables = set()
        for _clabel, C in catalog:
            for lam in _action_homs(C, A, auts):
                for delta in _bijective_cocycles(C, A, lam):
                    inv = _invert_perm(delta)
                    tables.add(tuple(
                        tuple(delta[C.table[inv[a]][inv[b]]] for b in range(n))
                        for a in range(n)
                    ))
        moves = [(lambda t, th=theta: _relabel_table(t, th)) for theta in auts]
        counts[label] = len(_orbit_representatives(tables, moves))
    return counts


def census_oracle(n: int) -> int:
    """Independent recount of census(n) through actions and cocycles."""
    if n > ORACLE_BOUND:
        raise OrderBoundExceeded(
            f"census oracle capped at order {ORACLE_BOUND}, got {n}"
        )
    return sum(_oracle_counts(n).values())
