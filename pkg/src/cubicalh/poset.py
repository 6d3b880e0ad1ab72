"""Finite posets given by cover relations.

The order relation is stored as one Python-int bitset per element (``below``
and ``above`` masks, each containing the element itself), which keeps
interval and ideal queries cheap for a few thousand elements.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    CycleError,
    NotComparableError,
    NotGradedError,
    PosetError,
    RedundantEdgeError,
)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Interval:
    bottom: Hashable
    top: Hashable
    members: frozenset


class Poset:
    """Immutable finite poset built from its Hasse diagram."""

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple]):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("element ids are not distinct")
        n = len(self.elements)
        self._down: list[list[int]] = [[] for _ in range(n)]
        self._up: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for lo, hi in covers:
            if lo not in self.index or hi not in self.index:
                raise PosetError(f"cover ({lo!r}, {hi!r}) mentions an unknown element")
            a, b = self.index[lo], self.index[hi]
            if a == b:
                raise CycleError(f"self-loop at {lo!r}")
            if (a, b) in seen:
                continue
            seen.add((a, b))
            self._down[b].append(a)
            self._up[a].append(b)
        self._topo = self._toposort()
        self._below = [0] * n
        for i in self._topo:
            m = 1 << i
            for j in self._down[i]:
                m |= self._below[j]
            self._below[i] = m
        self._above = [0] * n
        for i in reversed(self._topo):
            m = 1 << i
            for j in self._up[i]:
                m |= self._above[j]
            self._above[i] = m
        for b in range(n):
            lows = self._down[b]
            if len(lows) < 2:
                continue
            for a in lows:
                for c in lows:
                    if c != a and (self._below[c] >> a) & 1:
                        raise RedundantEdgeError(
                            f"edge ({self.elements[a]!r}, {self.elements[b]!r}) is implied "
                            f"through {self.elements[c]!r}"
                        )
        # chain lengths from minimal elements, used for ranks
        self._minlen = [0] * n
        self._maxlen = [0] * n
        for i in self._topo:
            if self._down[i]:
                self._minlen[i] = 1 + min(self._minlen[j] for j in self._down[i])
                self._maxlen[i] = 1 + max(self._maxlen[j] for j in self._down[i])
        self._lock = threading.Lock()
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._span_rows: dict[int, tuple[dict[int, int], dict[int, int]]] = {}

    @classmethod
    def from_covers(cls, elements, covers) -> "Poset":
        return cls(elements, covers)

    @classmethod
    def from_order(cls, elements: Sequence[Hashable], leq) -> "Poset":
        """Build from a predicate ``leq(a, b)``; the Hasse diagram is derived."""
        elements = list(elements)
        n = len(elements)
        below = [0] * n
        for j, b in enumerate(elements):
            for i, a in enumerate(elements):
                if i == j or leq(a, b):
                    below[j] |= 1 << i
        covers = []
        for j in range(n):
            strict = below[j] & ~(1 << j)
            inner = 0
            for i in _bits(strict):
                inner |= below[i] & ~(1 << i)
            for i in _bits(strict & ~inner):
                covers.append((elements[i], elements[j]))
        return cls(elements, covers)

    def _toposort(self) -> list[int]:
        n = len(self.elements)
        indeg = [len(d) for d in self._down]
        order = [i for i in range(n) if indeg[i] == 0]
        k = 0
        while k < len(order):
            i = order[k]
            k += 1
            for j in self._up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order.append(j)
        if len(order) != n:
            raise CycleError("cover relation contains a cycle")
        return order

    # basic queries

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.index

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers())} covers)"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and set(self.covers()) == set(
            other.covers()
        )

    def __hash__(self):
        return hash((frozenset(self.elements), frozenset(self.covers())))

    def _i(self, e) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise PosetError(f"{e!r} is not an element") from None

    def covers(self) -> list[tuple]:
        el = self.elements
        return [(el[a], el[b]) for b in range(len(el)) for a in self._down[b]]

    def lower_covers(self, t) -> list:
        return [self.elements[j] for j in self._down[self._i(t)]]

    def upper_covers(self, t) -> list:
        return [self.elements[j] for j in self._up[self._i(t)]]

    def leq(self, s, t) -> bool:
        return bool((self._below[self._i(t)] >> self._i(s)) & 1)

    def lt(self, s, t) -> bool:
        return s != t and self.leq(s, t)

    def topological_order(self) -> list:
        return [self.elements[i] for i in self._topo]

    def mask(self, members: Iterable) -> int:
        m = 0
        for e in members:
            m |= 1 << self._i(e)
        return m

    def members(self, mask: int) -> list:
        return [self.elements[i] for i in _bits(mask)]

    def below_mask(self, t) -> int:
        return self._below[self._i(t)]

    def above_mask(self, t) -> int:
        return self._above[self._i(t)]

    def down_set(self, t) -> list:
        return self.members(self._below[self._i(t)])

    def up_set(self, t) -> list:
        return self.members(self._above[self._i(t)])

    def interval(self, s, t) -> Interval:
        if not self.leq(s, t):
            raise NotComparableError(f"{s!r} is not below {t!r}")
        m = self._above[self._i(s)] & self._below[self._i(t)]
        return Interval(s, t, frozenset(self.members(m)))

    def intervals(self) -> Iterator[tuple]:
        """All pairs ``(s, t)`` with ``s <= t``, ``s`` in topological order."""
        el = self.elements
        for i in self._topo:
            for j in _bits(self._above[i]):
                yield el[i], el[j]

    def minimals(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self._down[i]]

    def maximals(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self._up[i]]

    def minimum(self):
        m = self.minimals()
        return m[0] if len(m) == 1 else None

    def maximum(self):
        m = self.maximals()
        return m[0] if len(m) == 1 else None

    # grading

    def rank(self, t) -> int:
        i = self._i(t)
        if self._minlen[i] != self._maxlen[i]:
            raise NotGradedError(f"principal ideal below {t!r} is not graded")
        return self._maxlen[i]

    def is_lower_graded(self) -> bool:
        return self._minlen == self._maxlen

    def length(self) -> int:
        """Maximum length of a chain (-1 for the empty poset)."""
        return max(self._maxlen, default=-1)

    def _spans(self, i: int) -> tuple[dict[int, int], dict[int, int]]:
        row = self._span_rows.get(i)
        if row is not None:
            return row
        up = self._above[i]
        lo, hi = {i: 0}, {i: 0}
        for j in self._topo:
            if j == i or not (up >> j) & 1:
                continue
            ds = [k for k in self._down[j] if (up >> k) & 1]
            lo[j] = 1 + min(lo[k] for k in ds)
            hi[j] = 1 + max(hi[k] for k in ds)
        with self._lock:
            self._span_rows[i] = (lo, hi)
        return lo, hi

    def interval_rank(self, s, t) -> int:
        """Common length of maximal chains of ``[s, t]``."""
        if not self.leq(s, t):
            raise NotComparableError(f"{s!r} is not below {t!r}")
        i, j = self._i(s), self._i(t)
        if self._minlen[j] == self._maxlen[j]:
            return self._maxlen[j] - self._maxlen[i]
        lo, hi = self._spans(i)
        if lo[j] != hi[j]:
            raise NotGradedError(f"interval [{s!r}, {t!r}] is not graded")
        return hi[j]

    def is_locally_graded(self) -> bool:
        if self.is_lower_graded():
            return True
        for i in range(len(self)):
            lo, hi = self._spans(i)
            if lo != hi:
                return False
        return True

    # Möbius function and Eulerian tests

    def _mobius_row(self, i: int) -> dict[int, int]:
        row = self._mobius_rows.get(i)
        if row is not None:
            return row
        up = self._above[i]
        row = {i: 1}
        for j in self._topo:
            if j == i or not (up >> j) & 1:
                continue
            strict = self._below[j] & up & ~(1 << j)
            row[j] = -sum(row[k] for k in _bits(strict))
        with self._lock:
            self._mobius_rows[i] = row
        return row

    def mobius(self, s, t) -> int:
        if not self.leq(s, t):
            raise NotComparableError(f"{s!r} is not below {t!r}")
        return self._mobius_row(self._i(s))[self._i(t)]

    def is_eulerian_interval(self, s, t) -> bool:
        """True if every subinterval ``[a, b]`` of ``[s, t]`` has ``mu = (-1)^rank``."""
        box = self._above[self._i(s)] & self._below[self._i(t)]
        for a in _bits(box):
            row = self._mobius_row(a)
            ea = self.elements[a]
            for b in _bits(box & self._above[a]):
                if row[b] != (-1) ** self.interval_rank(ea, self.elements[b]):
                    return False
        return True

    def is_locally_eulerian(self) -> bool:
        for a in range(len(self)):
            row = self._mobius_row(a)
            ea = self.elements[a]
            for b in _bits(self._above[a]):
                if row[b] != (-1) ** self.interval_rank(ea, self.elements[b]):
                    return False
        return True

    def is_boolean_interval(self, s, t) -> bool:
        """Boolean-lattice test by atom-set labeling."""
        if not self.leq(s, t):
            raise NotComparableError(f"{s!r} is not below {t!r}")
        i, j = self._i(s), self._i(t)
        box = self._above[i] & self._below[j]
        atoms = [k for k in self._up[i] if (box >> k) & 1]
        r = len(atoms)
        if bin(box).count("1") != 1 << r:
            return False
        coatoms = [k for k in self._down[j] if (box >> k) & 1]
        if len(coatoms) != r and not (r == 0 and i == j):
            return False
        amask = 0
        for k in atoms:
            amask |= 1 << k
        label = {}
        for k in _bits(box):
            lab = self._below[k] & amask
            label[k] = lab
        if len(set(label.values())) != 1 << r:
            return False
        for k in _bits(box):
            for c in self._down[k]:
                if (box >> c) & 1:
                    # a cover must add exactly one atom
                    if label[c] & ~label[k] or bin(label[k] ^ label[c]).count("1") != 1:
                        return False
        return True

    # derived posets

    def induced(self, members: Iterable) -> "Poset":
        """Induced subposet on ``members`` (Hasse diagram recomputed)."""
        keep = [e for e in self.elements if e in set(members)] if not isinstance(
            members, (set, frozenset)
        ) else [e for e in self.elements if e in members]
        smask = self.mask(keep)
        covers = []
        for e in keep:
            j = self.index[e]
            cand = self._below[j] & smask & ~(1 << j)
            if not cand:
                continue
            inner = 0
            for k in _bits(cand):
                inner |= self._below[k] & ~(1 << k)
            for k in _bits(cand & ~inner):
                covers.append((self.elements[k], e))
        return Poset(keep, covers)

    def principal_ideal(self, t) -> "Poset":
        return self.induced(set(self.down_set(t)))

    def subposet_above(self, u) -> "Poset":
        return self.induced(set(self.up_set(u)))

    def interval_poset(self, s, t) -> "Poset":
        return self.induced(self.interval(s, t).members)

    def relabel(self, mapping) -> "Poset":
        return Poset([mapping[e] for e in self.elements],
                     [(mapping[a], mapping[b]) for a, b in self.covers()])

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls(data["elements"], [tuple(c) for c in data["covers"]])


def product(P: Poset, Q: Poset) -> Poset:
    """Direct product with componentwise order; elements are pairs."""
    elements = [(p, q) for p in P.elements for q in Q.elements]
    covers = []
    for p in P.elements:
        for q in Q.elements:
            for p2 in P.upper_covers(p):
                covers.append(((p, q), (p2, q)))
            for q2 in Q.upper_covers(q):
                covers.append(((p, q), (p, q2)))
    return Poset(elements, covers)


def chain(n: int) -> Poset:
    """Chain ``0 < 1 < ... < n`` (length ``n``)."""
    return Poset(list(range(n + 1)), [(i, i + 1) for i in range(n)])


def boolean_lattice(n: int) -> Poset:
    """Subsets of ``{0..n-1}`` as frozensets."""
    from itertools import combinations

    elements = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    covers = [(s, s | {i}) for s in elements for i in range(n) if i not in s]
    return Poset(elements, covers)
