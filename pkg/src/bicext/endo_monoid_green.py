"""Green's relations on the endomorphism monoid.

The preserving endomorphisms form a cancellative submonoid, the collapsing
ones a two-sided ideal, and all five Green relations (R, L, H, D, J)
degenerate to equality.  green_symbolic answers from that closed form;
green_bounded_search proves membership the hard way, by scanning factor
candidates with k up to a bound, so the two can be played against each
other by the verification suites.
"""

from dataclasses import dataclass
from functools import lru_cache

from .endomorphisms import InjEndo, Kind, UNIT, _compose_raw, compose, enumerate_endos

RELATIONS = ("R", "L", "H", "D", "J")


@dataclass(frozen=True)
class GreenQuery:
    """One relation query; kmax bounds candidate factors, never products."""

    relation: str
    left: InjEndo
    right: InjEndo
    kmax: int = 8

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {', '.join(RELATIONS)}")
        if self.kmax < 1:
            raise ValueError("kmax must be >= 1")


@dataclass(frozen=True)
class WitnessSearchResult:
    """Outcome of a bounded divisibility search.

    related implies witnesses is nonempty; for this monoid every relation is
    equality, so witnesses always deduplicate to the unit."""

    related: bool
    witnesses: tuple[InjEndo, ...]
    exhausted_bound: int


def green_symbolic(q: GreenQuery) -> bool:
    """Closed form: every Green relation on this monoid is equality."""
    return q.left == q.right


@lru_cache(maxsize=None)
def _candidates(kmax: int) -> tuple:
    # candidate factors paired with their raw (kind, k, p) triples
    return tuple((e, (e.kind, e.k, e.p)) for e in enumerate_endos(kmax))


def _right_factor(a, b, raws):
    # factor e with a == b e; the adjoined-unit (no factor) case goes first
    if a == b:
        return UNIT
    ra = (a.kind, a.k, a.p)
    rb = (b.kind, b.k, b.p)
    for e, re in raws:
        if _compose_raw(*rb, *re) == ra:
            return e
    return None


def _left_factor(a, b, raws):
    # factor e with a == e b
    if a == b:
        return UNIT
    ra = (a.kind, a.k, a.p)
    rb = (b.kind, b.k, b.p)
    for e, re in raws:
        if _compose_raw(*re, *rb) == ra:
            return e
    return None


def _r_related(x, y, raws):
    # witnesses (e1, e2) with x == y e1 and y == x e2, or None
    e1 = _right_factor(x, y, raws)
    if e1 is None:
        return None
    e2 = _right_factor(y, x, raws)
    if e2 is None:
        return None
    return e1, e2


def _l_related(x, y, raws):
    e1 = _left_factor(x, y, raws)
    if e1 is None:
        return None
    e2 = _left_factor(y, x, raws)
    if e2 is None:
        return None
    return e1, e2


def _two_sided_factors(a, b, raws):
    # pair (u, v) with a == u b v; the unit sits among the candidates, so the
    # double scan also covers the one-sided and no-factor cases
    if a == b:
        return UNIT, UNIT
    ra = (a.kind, a.k, a.p)
    rb = (b.kind, b.k, b.p)
    for u, ru in raws:
        left = _compose_raw(*ru, *rb)
        for v, rv in raws:
            if _compose_raw(*left, *rv) == ra:
                return u, v
    return None


def _d_search(a, b, raws, l_first: bool):
    # D as a relational composition: some c with a L c and c R b (or the
    # mirrored order).  c ranges over both endpoints and every candidate;
    # the endpoint case is the one that can actually fire here.
    seen = set()
    for c in (a, b, *(e for e, _ in raws)):
        if c in seen:
            continue
        seen.add(c)
        if l_first:
            lw = _l_related(a, c, raws)
            if lw is None:
                continue
            rw = _r_related(c, b, raws)
            if rw is None:
                continue
        else:
            rw = _r_related(a, c, raws)
            if rw is None:
                continue
            lw = _l_related(c, b, raws)
            if lw is None:
                continue
        return [*lw, *rw]
    return None


def green_bounded_search(q: GreenQuery) -> WitnessSearchResult:
    """Brute-force divisibility search with factor k bounded by q.kmax.

    Products are compared structurally and may exceed the bound.  For D both
    composition orders are computed and asserted to agree.
    """
    raws = _candidates(q.kmax)
    a, b, rel = q.left, q.right, q.relation
    wits: list[InjEndo] = []
    if rel == "R":
        found = _r_related(a, b, raws)
        related = found is not None
        if related:
            wits = list(found)
    elif rel == "L":
        found = _l_related(a, b, raws)
        related = found is not None
        if related:
            wits = list(found)
    elif rel == "H":
        fr = _r_related(a, b, raws)
        fl = _l_related(a, b, raws) if fr is not None else None
        related = fr is not None and fl is not None
        if related:
            wits = [*fr, *fl]
    elif rel == "D":
        lr = _d_search(a, b, raws, l_first=True)
        rl = _d_search(a, b, raws, l_first=False)
        assert (lr is None) == (rl is None), "the two D compositions disagree"
        related = lr is not None
        if related:
            wits = lr
    else:  # J
        f1 = _two_sided_factors(a, b, raws)
        f2 = _two_sided_factors(b, a, raws) if f1 is not None else None
        related = f1 is not None and f2 is not None
        if related:
            wits = [*f1, *f2]
    uniq = tuple(dict.fromkeys(wits)) if related else ()
    return WitnessSearchResult(related, uniq, q.kmax)


def in_preserving_class(e: InjEndo) -> bool:
    """Membership in the cancellative submonoid of preserving endomorphisms."""
    return e.kind is Kind.PRESERVING


def in_collapsing_class(e: InjEndo) -> bool:
    """Membership in the two-sided ideal of collapsing endomorphisms."""
    return e.kind is Kind.COLLAPSING


def find_idempotents(kmax: int) -> list[InjEndo]:
    """Idempotent endomorphisms with k <= kmax; the unit is the only one."""
    return [e for e in enumerate_endos(kmax) if compose(e, e) == e]


def preserving_class_cancellative(kmax: int) -> bool:
    """Two-sided cancellativity of the preserving class, checked for k <= kmax."""
    endos = [e for e in enumerate_endos(kmax) if in_preserving_class(e)]
    for a in endos:
        for x in endos:
            for y in endos:
                if x == y:
                    continue
                if compose(a, x) == compose(a, y) or compose(x, a) == compose(y, a):
                    return False
    return True


def collapsing_class_ideal(kmax: int) -> bool:
    """The collapsing class absorbs products from both sides, for k <= kmax."""
    endos = enumerate_endos(kmax)
    coll = [b for b in endos if in_collapsing_class(b)]
    for e in endos:
        for b in coll:
            if not (in_collapsing_class(compose(e, b)) and in_collapsing_class(compose(b, e))):
                return False
    return True
