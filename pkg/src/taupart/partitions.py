"""Integer partitions, their enumeration, and the centralizer order ``z``."""
from __future__ import annotations

import json
from collections import Counter
from math import factorial
from typing import Callable, Iterator

__all__ = [
    "Partition",
    "parse_partition",
    "enumerate_partitions",
    "z",
    "apply_to_function",
]


class Partition:
    """A partition stored as non-increasing positive parts.

    Zero parts are accepted on construction and dropped, so every
    partition has exactly one representation.

    >>> Partition(2, 1, 2, 0)
    Partition(2, 2, 1)
    """

    __slots__ = ("_parts",)

    def __init__(self, *parts: int) -> None:
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be ints, got {p!r}")
            if p < 0:
                raise ValueError(f"parts must be non-negative, got {p}")
        self._parts = tuple(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def _from_sorted(cls, parts: tuple[int, ...]) -> "Partition":
        obj = cls.__new__(cls)
        obj._parts = parts
        return obj

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def content(self) -> int:
        """``|lambda|``, the number being partitioned."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self._parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map from part size ``k`` to its multiplicity, largest ``k`` first."""
        return dict(Counter(self._parts))

    def union(self, other: "Partition") -> "Partition":
        """Multiset union of the parts of two partitions."""
        return Partition(*self._parts, *other._parts)

    def to_json(self) -> str:
        return json.dumps(list(self._parts))

    def __str__(self) -> str:
        return ",".join(map(str, self._parts))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self._parts))})"

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"k1,k2,..."`` (any order) into a canonical partition.

    Raises ``ValueError`` on empty input, non-numeric tokens or parts < 1.
    """
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in tokens):
        raise ValueError(f"malformed partition text: {text!r}")
    parts = []
    for t in tokens:
        try:
            v = int(t)
        except ValueError:
            raise ValueError(f"non-numeric part {t!r} in {text!r}") from None
        if v <= 0:
            raise ValueError(f"parts must be positive, got {v}")
        parts.append(v)
    return Partition(*parts)


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    Partitions are generated one at a time, so memory stays proportional
    to ``n`` no matter how many there are. ``max_part`` restricts the size
    of the largest part. ``n == 0`` yields only the empty partition.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield Partition._from_sorted(())
        return
    top = n if max_part is None else min(n, max_part)
    if top <= 0:
        return
    # Greedy first partition: as many copies of ``top`` as fit, then the rest.
    q, r = divmod(n, top)
    a = [top] * q + ([r] if r else [])
    while True:
        yield Partition._from_sorted(tuple(a))
        # Strip trailing ones; they are re-spread after the decrement.
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        k = a.pop() - 1
        rest = ones + 1
        a.append(k)
        q, r = divmod(rest, k)
        a.extend([k] * q)
        if r:
            a.append(r)


def z(lam: Partition) -> int:
    """Return ``prod_k k**m_k * m_k!`` over the distinct parts ``k``.

    >>> z(Partition(2, 2, 1))
    8
    """
    result = 1
    for k, m in lam.multiplicities.items():
        result *= k**m * factorial(m)
    return result


def apply_to_function(lam: Partition, F: Callable[[int], int]) -> int:
    """Return ``prod_i F(lambda_i)``; the empty partition gives 1."""
    result = 1
    for k, m in lam.multiplicities.items():
        result *= F(k) ** m
    return result
