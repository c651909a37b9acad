"""Integer partitions, skew shapes and the horizontal-strip (Pieri) expansion.

Partitions may carry explicit trailing zeros, so the shapes used for strip
generating functions can be written out with one part per kernel root, e.g.
``(w, ..., w, u, 0, ..., 0)``. Equality and hashing ignore trailing zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError


def positive_part(x: int) -> int:
    return x if x > 0 else 0


@dataclass(frozen=True, eq=False)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise DomainError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def trimmed(self) -> tuple:
        p = self.parts
        n = len(p)
        while n and not p[n - 1]:
            n -= 1
        return p[:n]

    def padded(self, n: int) -> tuple:
        """Parts extended with zeros to length ``n`` (never truncated)."""
        p = self.trimmed()
        if len(p) > n:
            raise DomainError(f"{p} has more than {n} nonzero parts")
        return p + (0,) * (n - len(p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.trimmed())

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        n = max(len(self.parts), len(other.parts))
        return all(self[i] >= other[i] for i in range(n))

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.trimmed() == other.trimmed()
        if isinstance(other, tuple):
            return self.trimmed() == Partition(other).trimmed()
        return NotImplemented

    def __hash__(self):
        return hash(self.trimmed())

    def __repr__(self):
        return f"Partition{self.parts}"

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer = self.outer if isinstance(self.outer, Partition) else Partition(tuple(self.outer))
        inner = self.inner if isinstance(self.inner, Partition) else Partition(tuple(self.inner))
        if not outer.contains(inner):
            raise DomainError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> set:
        """(row, col) cells of outer minus inner."""
        return {(i, j) for i, row in enumerate(self.outer.parts)
                for j in range(self.inner[i], row)}

    def __str__(self):
        return f"{self.outer}/{self.inner}"


def conjugate(p: Partition) -> Partition:
    parts = p.trimmed()
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1)))


def is_horizontal_strip(s: SkewShape) -> bool:
    """No two cells of the skew diagram share a column."""
    outer, inner = s.outer, s.inner
    n = max(len(outer), len(inner))
    return all(outer[i + 1] <= inner[i] for i in range(n))


def _sub_partitions(bound: Sequence[int], size: int) -> Iterator[tuple]:
    """All weakly decreasing mu with mu_i <= bound_i and |mu| == size, lex-decreasing."""
    n = len(bound)
    # cap[i] = max cells placeable in rows i.. (ignoring monotonicity among them)
    room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        room[i] = room[i + 1] + bound[i]

    def rec(i: int, prev: int, left: int, acc: list):
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        hi = min(bound[i], prev, left)
        for x in range(hi, -1, -1):
            if left - x > min(room[i + 1], x * (n - i - 1)):
                break
            acc.append(x)
            yield from rec(i + 1, x, left - x, acc)
            acc.pop()

    first = bound[0] if n else 0
    yield from rec(0, first, size, [])


def pieri_expand(lam: Partition, v: int) -> list[Partition]:
    """Every mu inside lam with lam/mu a horizontal strip of v cells.

    Enumerates all sub-diagrams of the right size and filters on the strip
    condition, so it is independent of the closed form in lemma3_mu_list.
    Output is in lexicographically decreasing order, same length as ``lam``.
    """
    if v < 0:
        return []
    bound = lam.parts
    target = lam.size - v
    if target < 0:
        return []
    out = []
    for mu in _sub_partitions(bound, target):
        m = Partition(mu)
        if is_horizontal_strip(SkewShape(lam, m)):
            out.append(m)
    return out


def strip_shape(w: int, alpha: int, beta: int, u: int) -> Partition:
    """The outer shape (w^alpha, u, 0^(beta-1))."""
    return Partition((w,) * alpha + (u,) + (0,) * (beta - 1))


def endpoint_shape(v: int, alpha: int, beta: int) -> Partition:
    """The inner shape (v, 0^(alpha+beta-1))."""
    return Partition((v,) + (0,) * (alpha + beta - 1))


def denominator_shape(w: int, alpha: int, beta: int) -> Partition:
    """The rectangle ((w+1)^alpha, 0^beta)."""
    return Partition((w + 1,) * alpha + (0,) * beta)


def _check_strip_args(w: int, alpha: int, beta: int, u: int, v: int) -> None:
    if alpha < 1 or beta < 1:
        raise DomainError(f"alpha and beta must be >= 1, got alpha={alpha}, beta={beta}")
    if w < 1:
        raise DomainError(f"strip width must be >= 1, got w={w}")
    if not (0 <= u <= w and 0 <= v <= w):
        raise DomainError(f"heights must lie in [0, {w}], got u={u}, v={v}")


def lemma3_mu_list(w: int, alpha: int, beta: int, u: int, v: int) -> list[Partition]:
    """Closed-form list of shapes mu in s_{lam/(v)} = sum_mu s_mu, lam = (w^alpha, u, 0^(beta-1)).

    mu_l = (w^(alpha-1), w - (v-u)_+ - l, (u-v)_+ + l, 0^(beta-1)) for l = 0..r,
    r = min(u, v, w-u, w-v).
    """
    _check_strip_args(w, alpha, beta, u, v)
    r = min(u, v, w - u, w - v)
    top = w - positive_part(v - u)
    bottom = positive_part(u - v)
    return [Partition((w,) * (alpha - 1) + (top - l, bottom + l) + (0,) * (beta - 1))
            for l in range(r + 1)]
