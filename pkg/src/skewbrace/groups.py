"""Finite groups on dense Cayley tables with 0-based element indices.

Elements of a group of order n are the integers 0..n-1 and the identity is
always normalized to index 0.  Tables above the exhaustive-check size are
validated through a generating set: if (s, x, y) associates for every s in a
generating set and all x, y, associativity propagates to the whole table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    ActionNotHomomorphism,
    MissingInverse,
    NoIdentity,
    NonAssociative,
    NotClosed,
    OrderBoundExceeded,
)

__all__ = [
    "FiniteGroup",
    "GroupMap",
    "GroupPredicates",
    "make_group",
    "cyclic_group",
    "direct_product",
    "semidirect_product",
    "closure",
    "subgroups",
    "is_subgroup",
    "is_normal",
    "center",
    "element_order",
    "element_orders",
    "quotient_group",
    "conjugacy_class_sizes",
    "derived_subgroup",
    "is_nilpotent_group",
    "is_supersoluble_group",
    "group_predicates",
    "group_isomorphism",
    "automorphisms",
    "automorphism_perms",
    "aut_group",
    "holomorph",
    "generating_set",
]

EXHAUSTIVE_ASSOC_BOUND = 64
SUBGROUP_ORDER_BOUND = 64
HOLOMORPH_ORDER_BOUND = 12


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    __slots__ = ("order", "table", "inverse", "name")

    def __init__(self, table: tuple[tuple[int, ...], ...], inverse: tuple[int, ...],
                 name: Optional[str] = None):
        self.order = len(table)
        self.table = table
        self.inverse = inverse
        self.name = name

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"FiniteGroup({label}, order={self.order})"


def _check_closure(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    for a, row in enumerate(table):
        if len(row) != n:
            raise NotClosed(f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotClosed(f"entry at ({a}, {b}) is {v!r}, outside 0..{n - 1}")


def _find_identity(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise NoIdentity("no element acts as a two-sided identity")


def _relabel(table: Sequence[Sequence[int]], perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Return the table of the same group with element x renamed perm[x]."""
    n = len(table)
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(
        tuple(perm[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


def _latin_check(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    for a in range(n):
        if len(set(table[a])) != n:
            raise MissingInverse(f"row {a} repeats a value, cancellation fails")
    for b in range(n):
        col = {table[a][b] for a in range(n)}
        if len(col) != n:
            raise MissingInverse(f"column {b} repeats a value, cancellation fails")


def _assoc_exhaustive(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tab = table[ab]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise NonAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")


def _assoc_generators(table: Sequence[Sequence[int]]) -> None:
    """Associativity for large tables, proven from a generating set.

    The set of elements a with (a*x)*y == a*(x*y) for all x, y contains the
    identity and is closed under products, so checking it on a generating
    set covers the whole group.
    """
    n = len(table)
    _latin_check(table)
    gens = _generating_set_of_table(table)
    for s in gens:
        ts = table[s]
        for x in range(n):
            sx = ts[x]
            tsx = table[sx]
            tx = table[x]
            for y in range(n):
                if tsx[y] != ts[tx[y]]:
                    raise NonAssociative(f"({s}*{x})*{y} != {s}*({x}*{y})")


def _generating_set_of_table(table: Sequence[Sequence[int]]) -> list[int]:
    n = len(table)
    gens: list[int] = []
    reached = {0}
    while len(reached) < n:
        g = min(x for x in range(n) if x not in reached)
        gens.append(g)
        work = [g]
        reached.add(g)
        while work:
            x = work.pop()
            for y in tuple(reached):
                for z in (table[x][y], table[y][x]):
                    if z not in reached:
                        reached.add(z)
                        work.append(z)
    return gens


def make_group(table: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteGroup:
    """Validate a Cayley table and return the group, identity moved to 0."""
    n = len(table)
    if n == 0:
        raise NoIdentity("empty table has no identity")
    _check_closure(table)
    e = _find_identity(table)
    rows = tuple(tuple(row) for row in table)
    if e != 0:
        perm = list(range(n))
        perm[0], perm[e] = e, 0
        rows = _relabel(rows, perm)
    if n <= EXHAUSTIVE_ASSOC_BOUND:
        _assoc_exhaustive(rows)
    else:
        _assoc_generators(rows)
    inverse = [-1] * n
    for a in range(n):
        for b in range(n):
            if rows[a][b] == 0 and rows[b][a] == 0:
                inverse[a] = b
                break
        if inverse[a] < 0:
            raise MissingInverse(f"element {a} has no two-sided inverse")
    return FiniteGroup(rows, tuple(inverse), name)


def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group of order n, written additively mod n."""
    if n < 1:
        raise NoIdentity(f"cyclic group order must be positive, got {n}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inverse = tuple((-a) % n for a in range(n))
    return FiniteGroup(table, inverse, f"C{n}")


def direct_product(left: FiniteGroup, right: FiniteGroup,
                   name: Optional[str] = None) -> FiniteGroup:
    """Direct product on pairs, flattened as index = left_part * |right| + right_part."""
    nl, nr = left.order, right.order
    tl, tr = left.table, right.table
    n = nl * nr
    table = tuple(
        tuple(tl[a // nr][b // nr] * nr + tr[a % nr][b % nr] for b in range(n))
        for a in range(n)
    )
    inverse = tuple(left.inverse[a // nr] * nr + right.inverse[a % nr] for a in range(n))
    label = name or f"{left.name or '?'}x{right.name or '?'}"
    return FiniteGroup(table, inverse, label)


def _is_automorphism_perm(G: FiniteGroup, perm: Sequence[int]) -> bool:
    n = G.order
    if sorted(perm) != list(range(n)):
        return False
    t = G.table
    return all(perm[t[a][b]] == t[perm[a]][perm[b]] for a in range(n) for b in range(n))


def semidirect_product(normal: FiniteGroup, acting: FiniteGroup,
                       action: Sequence[Sequence[int]],
                       name: Optional[str] = None) -> FiniteGroup:
    """Semidirect product with `acting` twisting `normal`.

    action[h] is the permutation of normal's elements applied by h; it must
    land in Aut(normal) and h -> action[h] must respect multiplication.
    Pairs (n, h) flatten as index = n * |acting| + h.
    """
    if len(action) != acting.order:
        raise ActionNotHomomorphism(
            f"action has {len(action)} entries for a group of order {acting.order}")
    perms = [tuple(p) for p in action]
    for h, p in enumerate(perms):
        if not _is_automorphism_perm(normal, p):
            raise ActionNotHomomorphism(f"action of element {h} is not an automorphism")
    for h1 in acting.elements():
        for h2 in acting.elements():
            composed = tuple(perms[h1][perms[h2][x]] for x in normal.elements())
            if perms[acting.mul(h1, h2)] != composed:
                raise ActionNotHomomorphism(
                    f"action of {h1}*{h2} differs from composing the actions")
    nh = acting.order
    n = normal.order * nh
    tn, th = normal.table, acting.table
    table = []
    for a in range(n):
        x, g = divmod(a, nh)
        px = perms[g]
        tx = tn[x]
        tg = th[g]
        table.append(tuple(tx[px[b // nh]] * nh + tg[b % nh] for b in range(n)))
    return make_group(tuple(table), name)


def closure(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """The subgroup generated by `seed`, as a sorted element tuple."""
    t = G.table
    elems = {0}
    work = []
    for s in seed:
        if s not in elems:
            elems.add(s)
            work.append(s)
    while work:
        x = work.pop()
        for y in tuple(elems):
            for z in (t[x][y], t[y][x]):
                if z not in elems:
                    elems.add(z)
                    work.append(z)
    return tuple(sorted(elems))


def is_subgroup(G: FiniteGroup, elems: Sequence[int]) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    t = G.table
    return all(t[a][b] in s for a in s for b in s)


def is_normal(G: FiniteGroup, elems: Sequence[int]) -> bool:
    s = set(elems)
    t = G.table
    inv = G.inverse
    return all(t[t[g][h]][inv[g]] in s for g in G.elements() for h in s)


def subgroups(G: FiniteGroup, bound: int = SUBGROUP_ORDER_BOUND) -> list[tuple[int, ...]]:
    """Every subgroup, found by extending known subgroups one generator at a time."""
    n = G.order
    if n > bound:
        raise OrderBoundExceeded(f"subgroup enumeration capped at order {bound}, got {n}")
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        base = frontier.pop()
        inside = set(base)
        for g in range(1, n):
            if g in inside:
                continue
            ext = closure(G, base + (g,))
            if ext not in found:
                found.add(ext)
                frontier.append(ext)
    return sorted(found, key=lambda s: (len(s), s))


def center(G: FiniteGroup) -> tuple[int, ...]:
    t = G.table
    n = G.order
    return tuple(a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n)))


def element_order(G: FiniteGroup, a: int) -> int:
    t = G.table
    k, x = 1, a
    while x != 0:
        x = t[x][a]
        k += 1
    return k


def element_orders(G: FiniteGroup) -> tuple[int, ...]:
    return tuple(element_order(G, a) for a in G.elements())


def conjugacy_class_sizes(G: FiniteGroup) -> tuple[int, ...]:
    """Size of the conjugacy class of each element, indexed by element."""
    t = G.table
    inv = G.inverse
    n = G.order
    sizes = [0] * n
    seen = [False] * n
    for a in range(n):
        if seen[a]:
            continue
        cls = {t[t[g][a]][inv[g]] for g in range(n)}
        for x in cls:
            seen[x] = True
            sizes[x] = len(cls)
    return tuple(sizes)


def derived_subgroup(G: FiniteGroup) -> tuple[int, ...]:
    t = G.table
    inv = G.inverse
    n = G.order
    comms = {t[t[inv[a]][inv[b]]][t[a][b]] for a in range(n) for b in range(n)}
    return closure(G, comms)


def quotient_group(G: FiniteGroup, normal_elems: Sequence[int],
                   name: Optional[str] = None) -> tuple[FiniteGroup, list[int]]:
    """Quotient by a normal subgroup; returns the group and the coset index map."""
    n = G.order
    t = G.table
    coset_of = [-1] * n
    reps: list[int] = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for h in normal_elems:
            coset_of[t[g][h]] = idx
    m = len(reps)
    table = tuple(tuple(coset_of[t[reps[i]][reps[j]]] for j in range(m)) for i in range(m))
    return make_group(table, name), coset_of


def _primes_of(n: int) -> tuple[int, ...]:
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return tuple(ps)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_nilpotent_group(G: FiniteGroup) -> bool:
    """Whether the ascending central series reaches the whole group."""
    while G.order > 1:
        z = center(G)
        if len(z) == 1:
            return False
        G, _ = quotient_group(G, z)
    return True


def _prime_order_normal_generator(G: FiniteGroup) -> Optional[int]:
    """An element generating a normal subgroup of prime order, if any."""
    n = G.order
    orders = element_orders(G)
    central = set(center(G))
    candidates = [a for a in range(1, n) if _is_prime(orders[a])]
    for a in candidates:
        if a in central:
            return a
    t = G.table
    inv = G.inverse
    for a in candidates:
        cyc = set(closure(G, (a,)))
        if all(t[t[g][a]][inv[g]] in cyc for g in range(n)):
            return a
    return None


def is_supersoluble_group(G: FiniteGroup) -> bool:
    """Whether some chain of normal subgroups climbs to G by prime steps.

    A normal subgroup of prime order can always be taken first when one
    exists, and the group is supersoluble exactly when the quotient is.
    """
    while G.order > 1:
        a = _prime_order_normal_generator(G)
        if a is None:
            return False
        G, _ = quotient_group(G, closure(G, (a,)))
    return True


@dataclass(frozen=True)
class GroupPredicates:
    order: int
    abelian: bool
    nilpotent: bool
    supersoluble: bool
    element_orders: tuple[int, ...]
    primes: tuple[int, ...]


def group_predicates(G: FiniteGroup) -> GroupPredicates:
    return GroupPredicates(
        order=G.order,
        abelian=G.is_abelian(),
        nilpotent=is_nilpotent_group(G),
        supersoluble=is_supersoluble_group(G),
        element_orders=tuple(sorted(element_orders(G))),
        primes=_primes_of(G.order),
    )


@dataclass(frozen=True)
class GroupMap:
    """A map between groups recorded by the image of every element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_bijective(self) -> bool:
        return sorted(self.images) == list(range(self.target.order))

    def is_homomorphism(self) -> bool:
        ts, tt = self.source.table, self.target.table
        im = self.images
        n = self.source.order
        return all(im[ts[a][b]] == tt[im[a]][im[b]] for a in range(n) for b in range(n))


def generating_set(G: FiniteGroup) -> list[int]:
    """A small generating set, grown greedily by ascending element index."""
    return _generating_set_of_table(G.table)


def _element_invariants(G: FiniteGroup) -> list[tuple[int, int]]:
    orders = element_orders(G)
    classes = conjugacy_class_sizes(G)
    return [(orders[a], classes[a]) for a in G.elements()]


def _isomorphism_search(G: FiniteGroup, H: FiniteGroup, want_all: bool) -> list[tuple[int, ...]]:
    """Bijective table maps G -> H found by mapping a generating set.

    Partial maps are closed under products as soon as a generator image is
    chosen, so inconsistent branches die early.
    """
    n = G.order
    if H.order != n:
        return []
    inv_g = _element_invariants(G)
    inv_h = _element_invariants(H)
    if sorted(inv_g) != sorted(inv_h):
        return []
    tg, th = G.table, H.table
    gens = generating_set(G)
    results: list[tuple[int, ...]] = []
    fwd = [-1] * n
    bwd = [-1] * n
    fwd[0] = 0
    bwd[0] = 0
    known = [0]

    def close_over(start: int) -> tuple[bool, list[int]]:
        added: list[int] = []
        i = start
        while i < len(known):
            x = known[i]
            i += 1
            for y in known[: i]:
                for a, b in ((x, y), (y, x)):
                    z = tg[a][b]
                    w = th[fwd[a]][fwd[b]]
                    if fwd[z] >= 0:
                        if fwd[z] != w:
                            return False, added
                    elif bwd[w] >= 0:
                        return False, added
                    else:
                        fwd[z] = w
                        bwd[w] = z
                        known.append(z)
                        added.append(z)
        return True, added

    def undo(added: list[int]) -> None:
        for x in added:
            bwd[fwd[x]] = -1
            fwd[x] = -1
            known.pop()

    def assign(gen_pos: int) -> bool:
        if gen_pos == len(gens):
            if len(known) == n:
                results.append(tuple(fwd))
                return not want_all
            return False
        g = gens[gen_pos]
        if fwd[g] >= 0:
            return assign(gen_pos + 1)
        for h in range(n):
            if bwd[h] >= 0 or inv_h[h] != inv_g[g]:
                continue
            fwd[g] = h
            bwd[h] = g
            known.append(g)
            mark = len(known) - 1
            ok, added = close_over(mark)
            if ok and assign(gen_pos + 1):
                return True
            undo(added)
            bwd[h] = -1
            fwd[g] = -1
            known.pop()
        return False

    assign(0)
    return results


def group_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[GroupMap]:
    """An isomorphism G -> H, or None when the groups are not isomorphic."""
    found = _isomorphism_search(G, H, want_all=False)
    if not found:
        return None
    return GroupMap(G, H, found[0])


def automorphism_perms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms as element permutations, identity first."""
    perms = _isomorphism_search(G, G, want_all=True)
    ident = tuple(range(G.order))
    perms.sort(key=lambda p: (p != ident, p))
    return perms


def automorphisms(G: FiniteGroup) -> list[GroupMap]:
    """All automorphisms of G as maps, identity first."""
    return [GroupMap(G, G, p) for p in automorphism_perms(G)]


def aut_group(G: FiniteGroup) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """The automorphism group under composition, with its permutation list."""
    perms = automorphism_perms(G)
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in G.elements())] for q in perms) for p in perms
    )
    return make_group(table, f"Aut({G.name or '?'})"), perms


def holomorph(G: FiniteGroup, bound: int = HOLOMORPH_ORDER_BOUND) -> tuple[FiniteGroup, GroupMap]:
    """The holomorph G x Aut(G), with the left-translation embedding of G."""
    if G.order > bound:
        raise OrderBoundExceeded(f"holomorph capped at order {bound}, got {G.order}")
    auts, perms = aut_group(G)
    hol = semidirect_product(G, auts, perms, name=f"Hol({G.name or '?'})")
    na = auts.order
    embedding = GroupMap(G, hol, tuple(a * na for a in G.elements()))
    return hol, embedding
