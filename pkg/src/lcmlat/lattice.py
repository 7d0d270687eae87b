"""Finite lattices and lcm-lattices: construction, tables, products, isomorphism.

A FiniteLattice stores the full order relation plus join/meet index tables
as numpy arrays; everything downstream (property checks, audits) works off
those tables. An LcmLattice additionally remembers its monomial elements
and which indices are the ideal's generators (the atoms).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .monomials import (
    MonomialIdeal,
    divides,
    lcm,
    monomial_str,
    total_degree,
    unit,
)

DEFAULT_MAX_GENERATORS = 16
DEFAULT_MAX_ELEMENTS = 65536
DEFAULT_MAX_PRODUCT = 250000


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A finite bounded lattice given by its leq / join / meet tables."""

    leq: np.ndarray         # bool (n, n)
    join_table: np.ndarray  # int32 (n, n)
    meet_table: np.ndarray  # int32 (n, n)
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(str(i) for i in range(self.size))
            )
        for arr in (self.leq, self.join_table, self.meet_table):
            arr.setflags(write=False)

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    @property
    def bottom(self) -> int:
        return int(np.nonzero(self.leq.all(axis=1))[0][0])

    @property
    def top(self) -> int:
        return int(np.nonzero(self.leq.all(axis=0))[0][0])

    def join(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return int(self.join_table[a, b])

    def meet(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return int(self.meet_table[a, b])

    def _check_index(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise IndexError(f"element index {a} out of range for size {self.size}")

    def index_of_label(self, label: str) -> int:
        return self.labels.index(label)

    @classmethod
    def from_leq(cls, leq, labels=()) -> "FiniteLattice":
        """Build tables from an order matrix; raises if some lub/glb is missing."""
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        join = np.full((n, n), -1, dtype=np.int32)
        meet = np.full((n, n), -1, dtype=np.int32)
        for a in range(n):
            for b in range(a, n):
                ub = np.nonzero(leq[a] & leq[b])[0]
                least = ub[leq[np.ix_(ub, ub)].all(axis=1)]
                if len(least) != 1:
                    raise ValueError(f"no unique least upper bound for ({a}, {b})")
                join[a, b] = join[b, a] = least[0]
                lb = np.nonzero(leq[:, a] & leq[:, b])[0]
                greatest = lb[leq[np.ix_(lb, lb)].all(axis=0)]
                if len(greatest) != 1:
                    raise ValueError(f"no unique greatest lower bound for ({a}, {b})")
                meet[a, b] = meet[b, a] = greatest[0]
        return cls(leq, join, meet, tuple(labels))

    @classmethod
    def from_covers(cls, n: int, covers, labels=()) -> "FiniteLattice":
        """Build from Hasse edges (a, b) meaning a is covered by b."""
        leq = np.eye(n, dtype=bool)
        adj = [[] for _ in range(n)]
        for a, b in covers:
            adj[a].append(b)
        for start in range(n):
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if not leq[start, w]:
                        leq[start, w] = True
                        stack.append(w)
        return cls.from_leq(leq, labels)

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.labels),
            "atoms": atoms_of(self),
            "covers": [list(e) for e in hasse_edges(self)],
        }


@dataclass(frozen=True, eq=False)
class LcmLattice:
    """The lcm-lattice of a monomial ideal, keeping the monomial behind each element."""

    ideal: MonomialIdeal
    elements: tuple                 # monomials; index 0 is the unit (0-hat)
    atom_indices: tuple             # indices of the minimal generators
    lattice: FiniteLattice

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def atom_count(self) -> int:
        return len(self.atom_indices)


def _element_sort_key(m):
    return (total_degree(m), m)


def build_lcm_lattice(
    I: MonomialIdeal,
    max_generators: int = DEFAULT_MAX_GENERATORS,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> LcmLattice:
    """Join-closure of the generators plus the unit, with all tables filled.

    Elements come out as: unit first, then sorted by (total degree,
    lexicographic exponents), so indices are stable across runs.
    """
    m = len(I.generators)
    if m > max_generators:
        raise SizeLimitError(
            f"ideal has {m} generators; the cap is {max_generators} "
            "(raise it via max_generators)"
        )
    n = I.ring_dimension
    closure = set(I.generators)
    frontier = list(I.generators)
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(closure):
                j = lcm(g, h)
                if j not in closure:
                    closure.add(j)
                    nxt.append(j)
        frontier = nxt
        if len(closure) + 1 > max_elements:
            raise SizeLimitError(
                f"lattice exceeds the element cap {max_elements}"
            )
    elements = [unit(n)] + sorted(closure, key=_element_sort_key)
    index = {mono: i for i, mono in enumerate(elements)}
    size = len(elements)

    exps = np.array(elements, dtype=np.int64)
    # leq by divisibility, chunked over rows to bound memory
    leq = np.zeros((size, size), dtype=bool)
    for a in range(size):
        leq[a] = (exps[a][None, :] <= exps).all(axis=1)

    join = np.zeros((size, size), dtype=np.int32)
    for a in range(size):
        ea = elements[a]
        row = join[a]
        for b in range(a, size):
            row[b] = join[b, a] = index[lcm(ea, elements[b])]

    # meet(a, b) = unique maximal common lower bound; since common lower
    # bounds are join-closed, it is the one of largest total degree.
    degrees = exps.sum(axis=1)
    meet = np.zeros((size, size), dtype=np.int32)
    for a in range(size):
        common = leq[:, [a]] & leq            # [d, b]: d <= a and d <= b
        scores = np.where(common, degrees[:, None], -1)
        meet[a] = scores.argmax(axis=0)

    labels = tuple(monomial_str(e) for e in elements)
    lat = FiniteLattice(leq, join, meet, labels)
    atom_indices = tuple(index[g] for g in I.generators)
    return LcmLattice(I, tuple(elements), atom_indices, lat)


def enumerate_subset_lcms(I: MonomialIdeal):
    """Oracle: lcms of all 2^m generator subsets (lcm of the empty set = 1).

    Returns the deduplicated element list in the same canonical order as
    build_lcm_lattice; kept independent of the join-closure path.
    """
    n = I.ring_dimension
    gens = I.generators
    seen = {unit(n)}
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            acc = subset[0]
            for g in subset[1:]:
                acc = tuple(max(x, y) for x, y in zip(acc, g))
            seen.add(acc)
    nonunit = sorted(seen - {unit(n)}, key=_element_sort_key)
    return [unit(n)] + nonunit


def join_of(L: LcmLattice, a: int, b: int) -> int:
    return L.lattice.join(a, b)


def meet_of(L: LcmLattice, a: int, b: int) -> int:
    return L.lattice.meet(a, b)


def interval(L: FiniteLattice, x: int, y: int):
    """The sublattice [x, y], plus the original indices of its elements."""
    L._check_index(x)
    L._check_index(y)
    if not L.leq[x, y]:
        raise ValueError(f"interval requires x <= y; got {x} and {y}")
    idx = np.nonzero(L.leq[x] & L.leq[:, y])[0]
    remap = np.full(L.size, -1, dtype=np.int32)
    remap[idx] = np.arange(len(idx), dtype=np.int32)
    sub = FiniteLattice(
        L.leq[np.ix_(idx, idx)].copy(),
        remap[L.join_table[np.ix_(idx, idx)]],
        remap[L.meet_table[np.ix_(idx, idx)]],
        tuple(L.labels[i] for i in idx),
    )
    return sub, [int(i) for i in idx]


def product(
    L1: FiniteLattice, L2: FiniteLattice, max_size: int = DEFAULT_MAX_PRODUCT
) -> FiniteLattice:
    """Componentwise product; element (i, j) lives at index i*|L2| + j."""
    n1, n2 = L1.size, L2.size
    if n1 * n2 > max_size:
        raise SizeLimitError(
            f"product size {n1 * n2} exceeds the cap {max_size}"
        )
    leq = (
        np.logical_and.outer(L1.leq, L2.leq)
        .transpose(0, 2, 1, 3)
        .reshape(n1 * n2, n1 * n2)
    )
    join = (
        np.add.outer(L1.join_table.astype(np.int64) * n2, L2.join_table)
        .transpose(0, 2, 1, 3)
        .reshape(n1 * n2, n1 * n2)
        .astype(np.int32)
    )
    meet = (
        np.add.outer(L1.meet_table.astype(np.int64) * n2, L2.meet_table)
        .transpose(0, 2, 1, 3)
        .reshape(n1 * n2, n1 * n2)
        .astype(np.int32)
    )
    labels = tuple(
        f"({a},{b})" for a in L1.labels for b in L2.labels
    )
    return FiniteLattice(leq, join, meet, labels)


def boolean_lattice(r: int, max_rank: int = DEFAULT_MAX_GENERATORS) -> FiniteLattice:
    """Subsets of {1..r} ordered by inclusion; join = union, meet = intersection."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    if r > max_rank:
        raise SizeLimitError(f"rank {r} exceeds the cap {max_rank}")
    masks = np.arange(1 << r, dtype=np.int64)
    leq = (masks[:, None] & masks[None, :]) == masks[:, None]
    join = np.bitwise_or.outer(masks, masks).astype(np.int32)
    meet = np.bitwise_and.outer(masks, masks).astype(np.int32)
    labels = tuple(
        "{" + ",".join(str(i + 1) for i in range(r) if mask >> i & 1) + "}"
        for mask in masks
    )
    return FiniteLattice(leq, join, meet, labels)


def chain_lattice(n: int) -> FiniteLattice:
    """A total order on n elements."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    idx = np.arange(n)
    leq = idx[:, None] <= idx[None, :]
    join = np.maximum.outer(idx, idx).astype(np.int32)
    meet = np.minimum.outer(idx, idx).astype(np.int32)
    return FiniteLattice(leq, join, meet, tuple(str(i) for i in range(n)))


def pentagon_lattice() -> FiniteLattice:
    """N5: bottom 0, chain 1 < 2 opposite 3, top 4."""
    return FiniteLattice.from_covers(
        5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        labels=("0", "x", "y", "a", "1"),
    )


def diamond_lattice() -> FiniteLattice:
    """M3: bottom 0, three incomparable middles 1, 2, 3, top 4."""
    return FiniteLattice.from_covers(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        labels=("0", "a", "b", "c", "1"),
    )


def atoms_of(L: FiniteLattice) -> list:
    """Indices covering the bottom element."""
    bot = L.bottom
    return [b for a, b in hasse_edges(L) if a == bot]


def hasse_edges(L: FiniteLattice):
    """Cover pairs (a, b): a < b with nothing strictly between."""
    strict = L.leq & ~np.eye(L.size, dtype=bool)
    through = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
    covers = strict & ~through
    return [(int(a), int(b)) for a, b in np.argwhere(covers)]


def _refine_invariants(L: FiniteLattice):
    """Iterated neighborhood refinement; isomorphism-invariant color per element."""
    strict = L.leq & ~np.eye(L.size, dtype=bool)
    covers = strict & ~((strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0)
    color = [
        (
            int(strict[i].sum()),
            int(strict[:, i].sum()),
            int(covers[i].sum()),
            int(covers[:, i].sum()),
        )
        for i in range(L.size)
    ]
    for _ in range(L.size):
        nxt = [
            (
                color[i],
                tuple(sorted(color[j] for j in np.nonzero(covers[i])[0])),
                tuple(sorted(color[j] for j in np.nonzero(covers[:, i])[0])),
            )
            for i in range(L.size)
        ]
        if len(set(nxt)) == len(set(color)):
            break
        color = nxt
    # collapse to small ints for cheap comparisons
    canon = {c: k for k, c in enumerate(sorted(set(color)))}
    return [canon[c] for c in color]


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice):
    """A join/meet-preserving bijection (as a list L1-index -> L2-index), or None.

    Invariant refinement prunes the candidate sets; backtracking tries
    candidates in ascending index order, so the result is deterministic.
    """
    if L1.size != L2.size:
        return None
    n = L1.size
    c1 = _refine_invariants(L1)
    c2 = _refine_invariants(L2)
    if sorted(c1) != sorted(c2):
        return None
    candidates = [
        [j for j in range(n) if c2[j] == c1[i]] for i in range(n)
    ]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    mapping = [-1] * n
    used = [False] * n

    def consistent(i, j, placed):
        for k in placed:
            mk = mapping[k]
            if L1.leq[i, k] != L2.leq[j, mk] or L1.leq[k, i] != L2.leq[mk, j]:
                return False
            ji = mapping[L1.join_table[i, k]]
            if ji != -1 and ji != L2.join_table[j, mk]:
                return False
            mi = mapping[L1.meet_table[i, k]]
            if mi != -1 and mi != L2.meet_table[j, mk]:
                return False
        return True

    def backtrack(pos, placed):
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j] or not consistent(i, j, placed):
                continue
            mapping[i] = j
            used[j] = True
            if backtrack(pos + 1, placed + [i]):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    if not backtrack(0, []):
        return None
    # final sanity pass over the full tables
    perm = np.array(mapping)
    if not (
        np.array_equal(L1.leq, L2.leq[np.ix_(perm, perm)])
        and np.array_equal(perm[L1.join_table], L2.join_table[np.ix_(perm, perm)])
        and np.array_equal(perm[L1.meet_table], L2.meet_table[np.ix_(perm, perm)])
    ):
        return None
    return mapping


# --- exports ----------------------------------------------------------------

def lattice_json(L: FiniteLattice) -> str:
    return json.dumps(L.to_json_dict(), sort_keys=True)


def lattice_dot(L: LcmLattice) -> str:
    """DOT export: nodes labeled by monomial, ranked by total degree."""
    lines = ["digraph lcmlattice {", "  rankdir=BT;"]
    by_degree = {}
    for i, m in enumerate(L.elements):
        label = "0̂" if i == 0 else monomial_str(m)
        lines.append(f'  "{L.lattice.labels[i]}" [label="{label}"];')
        by_degree.setdefault(total_degree(m), []).append(i)
    for _, group in sorted(by_degree.items()):
        names = " ".join(f'"{L.lattice.labels[i]}"' for i in group)
        lines.append(f"  {{ rank=same; {names} }}")
    for a, b in hasse_edges(L.lattice):
        lines.append(f'  "{L.lattice.labels[a]}" -> "{L.lattice.labels[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
