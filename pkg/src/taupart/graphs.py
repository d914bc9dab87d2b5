"""Partition graphs ``G(lam)`` and their automorphisms.

``G(lam)`` is the functional digraph of a permutation of cycle type ``lam``:
one directed cycle per part of size at least 2 and one loop per part 1.
Its automorphisms are the permutations commuting with that permutation,
and there are ``z_lam`` of them.

Vertices are labelled ``1..n`` in the public API. Adjacency matrices are
numpy ``uint8`` arrays indexed from 0.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import islice, permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from .partitions import Partition

__all__ = [
    "BRUTE_FORCE_CUTOFF",
    "DirectedGraph",
    "Permutation",
    "build_graph",
    "permute_graph",
    "is_automorphism",
    "automorphisms",
    "brute_force_aut_count",
    "structural_aut_count",
    "symmetry_number",
    "export_dot",
    "cycle_type_count",
]

BRUTE_FORCE_CUTOFF = 9


class DirectedGraph:
    """A directed graph on vertices ``1..n`` given by a 0/1 adjacency matrix."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency) -> None:
        adj = np.array(adjacency, dtype=np.uint8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.size and adj.max() > 1:
            raise ValueError("adjacency entries must be 0 or 1")
        adj.setflags(write=False)
        self._adj = adj

    @property
    def size(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with 1-based labels, in row-major order."""
        rows, cols = np.nonzero(self._adj)
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    def components(self) -> list[list[int]]:
        """Weakly connected components as sorted 1-based vertex lists."""
        n = self.size
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for i, j in zip(*np.nonzero(self._adj)):
            nbrs[i].append(int(j))
            nbrs[j].append(int(i))
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v + 1)
                for w in nbrs[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_dict(self) -> dict:
        return {"n": self.size, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DirectedGraph):
            return self._adj.shape == other._adj.shape and bool(
                np.array_equal(self._adj, other._adj)
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.size, self._adj.tobytes()))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.size}, edges={self.edges()})"


class Permutation:
    """A bijection of ``{1..n}`` given by its images ``(rho(1), ..., rho(n))``."""

    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int]) -> None:
        img = tuple(int(v) for v in images)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")
        self._img = img

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(img)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(img)

    @property
    def size(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, i: int) -> int:
        return self._img[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if other.size != self.size:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self._img[j - 1] for j in other._img)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self._img, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def cycle_type(self) -> Partition:
        seen = [False] * self.size
        lengths = []
        for start in range(self.size):
            length = 0
            v = start
            while not seen[v]:
                seen[v] = True
                v = self._img[v] - 1
                length += 1
            if length:
                lengths.append(length)
        return Partition(*lengths)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self._img == other._img
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._img)

    def __repr__(self) -> str:
        return f"Permutation({self._img})"


def build_graph(lam: Partition) -> DirectedGraph:
    """Construct ``G(lam)``.

    Components follow the canonical part order on consecutive vertex
    blocks. A block ``v..v+m-1`` with ``m >= 2`` gets ``v -> v+1 -> ...
    -> v+m-1`` above the diagonal and the closing edge ``v+m-1 -> v`` as
    its only entry below it; a part 1 becomes a loop.
    """
    n = lam.content
    if n < 1:
        raise ValueError("G(lam) needs a non-empty partition")
    adj = np.zeros((n, n), dtype=np.uint8)
    v = 0
    for m in lam.parts:
        for i in range(m - 1):
            adj[v + i, v + i + 1] = 1
        adj[v + m - 1, v] = 1
        v += m
    return DirectedGraph(adj)


def _check_sizes(rho: Permutation, g: DirectedGraph) -> None:
    if rho.size != g.size:
        raise ValueError(f"permutation of size {rho.size} cannot act on a graph of size {g.size}")


def permute_graph(rho: Permutation, g: DirectedGraph) -> DirectedGraph:
    """The graph with adjacency ``M'[i, j] = M[rho(i), rho(j)]``."""
    _check_sizes(rho, g)
    idx = np.asarray(rho.images, dtype=np.intp) - 1
    return DirectedGraph(g.adjacency[np.ix_(idx, idx)])


def is_automorphism(rho: Permutation, g: DirectedGraph) -> bool:
    return permute_graph(rho, g) == g


def _count_chunk(adj: np.ndarray, chunk: list[tuple[int, ...]]) -> int:
    P = np.array(chunk, dtype=np.intp)
    permuted = adj[P[:, :, None], P[:, None, :]]
    return int(np.count_nonzero((permuted == adj).all(axis=(1, 2))))


def _chunks(n: int, size: int = 20000) -> Iterator[list[tuple[int, ...]]]:
    it = permutations(range(n))
    return iter(lambda: list(islice(it, size)), [])


def brute_force_aut_count(
    g: DirectedGraph, cutoff: int = BRUTE_FORCE_CUTOFF, threads: int = 1
) -> int:
    """Count automorphisms by testing every permutation of the vertices.

    Raises ``ValueError`` when ``g`` has more than ``cutoff`` vertices;
    use :func:`structural_aut_count` for those.
    """
    n = g.size
    if n > cutoff:
        raise ValueError(
            f"graph has {n} vertices, above the brute-force cutoff {cutoff}; "
            "use structural_aut_count instead"
        )
    adj = g.adjacency
    if threads <= 1:
        return sum(_count_chunk(adj, c) for c in _chunks(n))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda c: _count_chunk(adj, c), _chunks(n)))


def automorphisms(g: DirectedGraph, cutoff: int = BRUTE_FORCE_CUTOFF) -> list[Permutation]:
    """All automorphisms of ``g`` found by exhaustive search."""
    if g.size > cutoff:
        raise ValueError(f"graph has {g.size} vertices, above the cutoff {cutoff}")
    adj = g.adjacency
    found = []
    for chunk in _chunks(g.size):
        P = np.array(chunk, dtype=np.intp)
        hits = (adj[P[:, :, None], P[:, None, :]] == adj).all(axis=(1, 2))
        found.extend(Permutation(row + 1) for row in P[hits])
    return found


def structural_aut_count(lam: Partition) -> int:
    """Automorphism count of ``G(lam)`` from its component census.

    The components of the built graph are grouped by size; each of the
    ``m`` components of size ``k`` admits ``k`` rotations and the group
    can be permuted in ``m!`` ways.
    """
    if lam.content == 0:
        return 1
    census: dict[int, int] = {}
    for comp in build_graph(lam).components():
        census[len(comp)] = census.get(len(comp), 0) + 1
    count = 1
    for k, m in census.items():
        count *= factorial(m)
        for _ in range(m):
            count *= k
    return count


def symmetry_number(lam: Partition) -> Fraction:
    return Fraction(1, structural_aut_count(lam))


def export_dot(g: DirectedGraph) -> str:
    """Render ``g`` as Graphviz text, edges in row-major order.

    >>> print(export_dot(build_graph(Partition(2))), end="")
    digraph G {
      1 -> 2;
      2 -> 1;
    }
    """
    lines = ["digraph G {"]
    lines.extend(f"  {i} -> {j};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def cycle_type_count(lam: Partition) -> int:
    """Number of permutations of ``1..|lam|`` with cycle type ``lam``, by enumeration."""
    n = lam.content
    return sum(
        1 for img in permutations(range(1, n + 1)) if Permutation(img).cycle_type() == lam
    )
