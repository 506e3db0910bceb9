"""Set-theoretic Yang-Baxter solutions attached to braces, with retraction.

A brace yields r(x,y) = (lam_x(y), lam_x(y)^-1 x y) on its carrier; the
construction refuses to hand back anything that fails the braid relation,
pair bijectivity, or either non-degeneracy check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .braces import SkewBrace
from .errors import RetractNotWellDefined, SolutionInvalid

__all__ = [
    "SolutionChecks",
    "Solution",
    "verify_solution",
    "solution_from_brace",
    "retract",
    "retraction_level",
]


@dataclass(frozen=True)
class SolutionChecks:
    """Outcome of the three exhaustive solution checks."""

    braid: bool
    bijective: bool
    nondegenerate: bool

    def all_ok(self) -> bool:
        return self.braid and self.bijective and self.nondegenerate


@dataclass(frozen=True)
class Solution:
    """A candidate map r(x,y) = (r1[x][y], r2[x][y]) on {0..n-1}^2."""

    size: int
    r1: tuple[tuple[int, ...], ...]
    r2: tuple[tuple[int, ...], ...]
    checks: SolutionChecks

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.r1[x][y], self.r2[x][y]


def _is_perm(seq) -> bool:
    n = len(seq)
    return sorted(seq) == list(range(n))


def verify_solution(size: int, r1, r2) -> SolutionChecks:
    """Check braid relation, pair bijectivity and both non-degeneracies."""
    n = size
    pairs = {(r1[x][y], r2[x][y]) for x in range(n) for y in range(n)}
    bijective = len(pairs) == n * n
    left = all(_is_perm(r1[x]) for x in range(n))
    right = all(_is_perm([r2[x][y] for x in range(n)]) for y in range(n))
    braid = True
    for x in range(n):
        r1x = r1[x]
        r2x = r2[x]
        for y in range(n):
            for z in range(n):
                # left side: (r x id)(id x r)(r x id)
                a, b = r1x[y], r2x[y]
                p, q = r1[b][z], r2[b][z]
                u, v = r1[a][p], r2[a][p]
                lhs = (u, v, q)
                # right side: (id x r)(r x id)(id x r)
                c, d = r1[y][z], r2[y][z]
                s, t = r1x[c], r2x[c]
                w, e = r1[t][d], r2[t][d]
                rhs = (s, w, e)
                if lhs != rhs:
                    braid = False
                    break
            if not braid:
                break
        if not braid:
            break
    return SolutionChecks(braid=braid, bijective=bijective, nondegenerate=left and right)


def solution_from_brace(B: SkewBrace) -> Solution:
    """The solution r(x,y) = (lam_x(y), lam_x(y)^-1 x y) of the brace carrier."""
    n = B.order
    lam = B.lam_table
    mul = B.mul_group.table
    inv = B.mul_group.inverse
    r1 = tuple(lam[x] for x in range(n))
    r2 = tuple(
        tuple(mul[inv[lam[x][y]]][mul[x][y]] for y in range(n))
        for x in range(n)
    )
    for x in range(n):
        for y in range(n):
            if mul[r1[x][y]][r2[x][y]] != mul[x][y]:
                raise SolutionInvalid(
                    f"product compatibility broken at pair ({x},{y})"
                )
    checks = verify_solution(n, r1, r2)
    if not checks.all_ok():
        raise SolutionInvalid(
            f"brace solution failed verification: braid={checks.braid} "
            f"bijective={checks.bijective} nondegenerate={checks.nondegenerate}"
        )
    return Solution(size=n, r1=r1, r2=r2, checks=checks)


def retract(S: Solution) -> tuple[Solution, list[int]]:
    """Identify points with equal left-action row and right-action column."""
    n = S.size
    signature = [
        (S.r1[x], tuple(S.r2[z][x] for z in range(n)))
        for x in range(n)
    ]
    reps: dict[tuple, int] = {}
    class_of = [0] * n
    for x in range(n):
        sig = signature[x]
        if sig not in reps:
            reps[sig] = len(reps)
        class_of[x] = reps[sig]
    m = len(reps)
    member = [0] * m
    for x in range(n - 1, -1, -1):
        member[class_of[x]] = x
    new_r1 = [[0] * m for _ in range(m)]
    new_r2 = [[0] * m for _ in range(m)]
    for c in range(m):
        for d in range(m):
            x, y = member[c], member[d]
            new_r1[c][d] = class_of[S.r1[x][y]]
            new_r2[c][d] = class_of[S.r2[x][y]]
    for x in range(n):
        for y in range(n):
            c, d = class_of[x], class_of[y]
            if (new_r1[c][d] != class_of[S.r1[x][y]]
                    or new_r2[c][d] != class_of[S.r2[x][y]]):
                raise RetractNotWellDefined(
                    f"pair ({x},{y}) disagrees with the class representatives"
                )
    r1 = tuple(tuple(row) for row in new_r1)
    r2 = tuple(tuple(row) for row in new_r2)
    return Solution(m, r1, r2, verify_solution(m, r1, r2)), class_of


def retraction_level(S: Solution) -> Optional[int]:
    """Retractions needed to reach one point, or None if the size stalls."""
    level = 0
    current = S
    while current.size > 1:
        shrunk, _ = retract(current)
        if shrunk.size == current.size:
            return None
        current = shrunk
        level += 1
    return level
