"""Brute-force generators and counters: the ground truth everything else is
checked against.

The path engine walks every admissible step sequence under per-position
floor/ceiling bounds, an optional final ordinate, and start/end step-kind
filters.  Down-steps are capped either by the floor or, when the walk may
go arbitrarily deep, by the requirement that the remaining steps (each
gaining at most one level) can still reach the target ordinate; a spec with
neither cap describes an infinite family and is rejected.

Enumeration output is ordered lexicographically by step sequence with
U < D1 < D2 < ...; counting uses the same transitions with memoization on
(position, ordinate, just-descended) and never materializes paths.  Memo
tables are per call, so everything here is safe to run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleSpec
from .paths import EMPTY, UD, UP, LatticePath, classify, flat, sharp

PATH_KINDS = ("gdap", "dap", "prime", "prefix_gdap")
KINDS = PATH_KINDS + (
    "special_h", "motzkin_avoid", "composition_alt", "composition_alt_odd_even")


@dataclass(frozen=True)
class FamilySpec:
    """A path family: which kind, plus optional window and endpoint filters.

    min_y / max_y bound the whole profile; end_ordinate pins the final
    height (kinds other than prefix_gdap force 0); start_step / end_step
    ("up" or "down") filter the first and last step kind.
    """

    kind: str
    min_y: int | None = None
    max_y: int | None = None
    end_ordinate: int | None = None
    end_step: str | None = None
    start_step: str | None = None


def lex_key(path: LatticePath) -> tuple[int, ...]:
    """Sort key realizing the step order U < D1 < D2 < ..."""
    return tuple(0 if s == UP else -s for s in path.steps)


def _check_spec(n: int, spec: FamilySpec):
    if n < 0:
        raise ValueError("length must be nonnegative")
    if spec.kind not in KINDS:
        raise ValueError(f"unknown family kind {spec.kind!r}")
    for field in ("start_step", "end_step"):
        v = getattr(spec, field)
        if v not in (None, "up", "down"):
            raise ValueError(f"{field} must be 'up', 'down', or None")
    if spec.min_y is not None and spec.min_y > 0:
        raise InfeasibleSpec("every path starts at ordinate 0, below min_y")
    if spec.max_y is not None and spec.max_y < 0:
        raise InfeasibleSpec("every path starts at ordinate 0, above max_y")
    if spec.kind in ("gdap", "dap", "prime"):
        if spec.end_ordinate not in (None, 0):
            raise InfeasibleSpec(
                f"{spec.kind} paths end on the axis, not at {spec.end_ordinate}")
    if spec.kind == "prefix_gdap":
        if spec.min_y is None and spec.end_ordinate is None:
            raise InfeasibleSpec(
                "prefix family with no floor and free end is infinite")
    if spec.end_ordinate is not None:
        if spec.end_ordinate > n:
            raise InfeasibleSpec(f"cannot reach ordinate {spec.end_ordinate} "
                                 f"in {n} steps")
        if spec.min_y is not None and spec.end_ordinate < spec.min_y:
            raise InfeasibleSpec("end_ordinate lies below min_y")
    if spec.kind == "special_h":
        if any(getattr(spec, f) is not None for f in
               ("min_y", "max_y", "end_ordinate", "end_step", "start_step")):
            raise InfeasibleSpec(
                "the special-height family takes no extra constraints")
    if spec.kind in ("motzkin_avoid",
                     "composition_alt", "composition_alt_odd_even"):
        raise InfeasibleSpec(
            f"{spec.kind} members are not lattice paths here; use "
            "enum_motzkin_avoiding or enum_compositions")


def _bounds(n: int, spec: FamilySpec):
    """Per-index floors and ceilings plus the target final ordinate."""
    lo: list[int | None]
    hi: list[int | None] = [spec.max_y] * (n + 1)
    if spec.kind == "prime":
        # interior strictly above the axis, entered from height >= 2
        lo = [0] + [1] * (n - 2) + [2, 0]
        target = 0
    elif spec.kind == "dap":
        floor = 0 if spec.min_y is None else max(spec.min_y, 0)
        lo = [floor] * (n + 1)
        target = 0
    elif spec.kind == "gdap":
        lo = [spec.min_y] * (n + 1)
        target = 0
    else:  # prefix_gdap
        lo = [spec.min_y] * (n + 1)
        target = spec.end_ordinate
    return lo, hi, target


def _moves(n, lo, hi, target, start_req, end_req):
    """Yield-admissible-steps helper shared by the walker and the counter."""

    def moves(i, h, last_down):
        rem = n - i
        first, last = i == 0, i == n - 1
        if not (first and start_req == "down") and \
           not (last and end_req == "down"):
            h2 = h + 1
            if (hi[i + 1] is None or h2 <= hi[i + 1]) and \
               (lo[i + 1] is None or h2 >= lo[i + 1]) and \
               not (target is not None and h2 + rem - 1 < target):
                yield UP, h2
        if last_down or (first and start_req == "up") or \
           (last and end_req == "up"):
            return
        kmax = None
        if lo[i + 1] is not None:
            kmax = h - lo[i + 1]
        if target is not None:
            cap = h - target + rem - 1
            kmax = cap if kmax is None else min(kmax, cap)
        for k in range(1, kmax + 1):
            yield -k, h - k

    return moves


def enum_paths(n: int, spec: FamilySpec) -> list[LatticePath]:
    """All length-n members of the family, in lexicographic step order."""
    _check_spec(n, spec)
    if spec.kind == "special_h":
        return enum_h(n)
    if spec.kind == "prime" and n < 3:
        return []  # the shortest axis-avoiding arch with a deep drop is UUD2
    if n == 0:
        empty_ok = (spec.end_ordinate in (None, 0)
                    and spec.start_step is None and spec.end_step is None
                    and spec.kind in ("gdap", "prefix_gdap"))
        return [EMPTY] if empty_ok else []
    lo, hi, target = _bounds(n, spec)
    moves = _moves(n, lo, hi, target, spec.start_step, spec.end_step)
    out: list[LatticePath] = []
    steps: list[int] = []

    def walk(i, h, last_down):
        if i == n:
            if target is None or h == target:
                out.append(LatticePath(tuple(steps)))
            return
        for step, h2 in moves(i, h, last_down):
            steps.append(step)
            walk(i + 1, h2, step < 0)
            steps.pop()

    walk(0, 0, False)
    return out


def count_paths(n: int, spec: FamilySpec) -> int:
    """|enum_paths(n, spec)| by memoized recursion, without materializing."""
    _check_spec(n, spec)
    if spec.kind == "special_h":
        return len(enum_h(n))
    if (spec.kind == "prime" and n < 3) or n == 0:
        return len(enum_paths(n, spec))
    lo, hi, target = _bounds(n, spec)
    moves = _moves(n, lo, hi, target, spec.start_step, spec.end_step)
    memo: dict[tuple[int, int, bool], int] = {}

    def tally(i, h, last_down):
        if i == n:
            return 1 if (target is None or h == target) else 0
        key = (i, h, last_down)
        got = memo.get(key)
        if got is None:
            got = sum(tally(i + 1, h2, step < 0)
                      for step, h2 in moves(i, h, last_down))
            memo[key] = got
        return got

    return tally(0, 0, False)


# ---------- the special-height family ----------

def _height(path: LatticePath) -> int:
    return max(path.profile)

def enum_h(n: int) -> list[LatticePath]:
    """Daps whose every first-return factor is at least as high as the rest.

    Built from the grammar: the empty path belongs; otherwise the path is
    arch + body where the arch is UD or the raise of a shorter nonempty
    member, the body is a member, and height(arch) >= height(body).
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    table: list[list[LatticePath]] = [[EMPTY]] + [[] for _ in range(n)]
    for m in range(2, n + 1):
        members = []
        for j in range(2, m + 1):
            arches = [UD] if j == 2 else \
                [sharp(g) for g in table[j - 1] if not g.is_empty]
            for arch in arches:
                ha = _height(arch)
                members.extend(arch + body for body in table[m - j]
                               if ha >= _height(body))
        members.sort(key=lex_key)
        table[m] = members
    return table[n]


def is_special_height(path: LatticePath) -> bool:
    """Membership test by peeling first-return arches; ε belongs."""
    if path.is_empty:
        return True
    if not classify(path).is_dap:
        return False
    prof = path.profile
    cut = next(i for i in range(1, len(path) + 1) if prof[i] == 0)
    arch = LatticePath(path.steps[:cut])
    body = LatticePath(path.steps[cut:])
    if arch != UD:
        if not classify(arch).is_prime or not is_special_height(flat(arch)):
            return False
    return _height(arch) >= _height(body) and is_special_height(body)


# ---------- Motzkin paths with isolated, descent-anchored flat steps ----------

def _motzkin_moves(h, last):
    if last != "H":
        yield "U", h + 1
        if h > 0:
            yield "D", h - 1
    elif h > 0:
        yield "D", h - 1
    if last == "D":
        yield "H", h


def enum_motzkin_avoiding(n: int) -> list[str]:
    """Motzkin paths whose flat steps each follow a down-step and precede a
    down-step or the end.

    Equivalently: no factor UH, HU, or HH, and no leading flat step (the
    leading-H clause only matters at length 1, where HU/HH cannot bite).
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    out: list[str] = []
    word: list[str] = []

    def walk(i, h, last):
        if h > n - i:  # cannot come back down in time
            return
        if i == n:
            if h == 0:
                out.append("".join(word))
            return
        for step, h2 in _motzkin_moves(h, last):
            word.append(step)
            walk(i + 1, h2, step)
            word.pop()

    walk(0, 0, "")
    return out


def count_motzkin_avoiding(n: int) -> int:
    if n < 0:
        raise ValueError("length must be nonnegative")
    memo: dict[tuple[int, int, str], int] = {}

    def tally(i, h, last):
        if h > n - i:
            return 0
        if i == n:
            return 1 if h == 0 else 0
        key = (i, h, last)
        got = memo.get(key)
        if got is None:
            got = sum(tally(i + 1, h2, step)
                      for step, h2 in _motzkin_moves(h, last))
            memo[key] = got
        return got

    return tally(0, 0, "")


# ---------- compositions with parity constraints ----------

def enum_compositions(n: int, kind: str) -> list[tuple[int, ...]]:
    """Compositions of n with no two consecutive parts of equal parity.

    kind "alt": that condition alone (n = 0 gives the empty composition);
    kind "alt_odd_even": additionally the first part is odd and the last
    part is even (empty at n = 0).
    """
    if n < 0:
        raise ValueError("composition target must be nonnegative")
    if kind not in ("alt", "alt_odd_even"):
        raise ValueError(f"unknown composition kind {kind!r}")
    if n == 0:
        return [()] if kind == "alt" else []
    first_parity = 1 if kind == "alt_odd_even" else None
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def extend(remaining, parity):
        if remaining == 0:
            if kind != "alt_odd_even" or acc[-1] % 2 == 0:
                out.append(tuple(acc))
            return
        for part in range(1, remaining + 1):
            if parity is not None and part % 2 != parity:
                continue
            acc.append(part)
            extend(remaining - part, 1 - part % 2)
            acc.pop()

    extend(n, first_parity)
    out.sort()
    return out
