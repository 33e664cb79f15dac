"""Exact permutation algebra on the symbols {1..M}, with cycle-notation text I/O.

Everything downstream (filling-pair validation, relabeling groups, surgery,
census) is built on the `Permutation` class defined here.  Symbols are always
1-based; composition is right-to-left: ``(p * q)(e) == p(q(e))``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class CycleParseError(ValueError):
    """Bad cycle-notation input; `position` is the 0-based offset in the text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Permutation:
    """An immutable bijection on {1..M}."""

    __slots__ = ("_imgs",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        m = len(imgs)
        seen = bytearray(m + 1)
        for v in imgs:
            if not isinstance(v, int) or not 1 <= v <= m or seen[v]:
                raise ValueError(f"not a bijection on 1..{m}: images {imgs!r}")
            seen[v] = 1
        self._imgs = imgs

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        if size < 0:
            raise ValueError("size must be nonnegative")
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int) -> "Permutation":
        """Product of cycles, leftmost cycle applied first.

        Cycles need not be disjoint; for disjoint cycles the order is
        immaterial.  Entries must be distinct within each cycle and lie in
        {1..size}.
        """
        imgs = list(range(size + 1))  # identity; index 0 unused
        for cycle in cycles:
            cyc = list(cycle)
            if not cyc:
                continue
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated symbol in cycle {cyc!r}")
            step = list(range(size + 1))
            for idx, s in enumerate(cyc):
                if not 1 <= s <= size:
                    raise ValueError(f"symbol {s} out of range 1..{size}")
                step[s] = cyc[(idx + 1) % len(cyc)]
            # leftmost-first: the new cycle acts after what we already have
            imgs = [0] + [step[imgs[e]] for e in range(1, size + 1)]
        return cls(imgs[1:])

    @classmethod
    def from_cycle_string(cls, text: str, size: int) -> "Permutation":
        return cls.from_cycles(parse_cycle_text(text, size), size)

    @property
    def size(self) -> int:
        return len(self._imgs)

    def __call__(self, e: int) -> int:
        if not 1 <= e <= len(self._imgs):
            raise ValueError(f"symbol {e} out of range 1..{len(self._imgs)}")
        return self._imgs[e - 1]

    def one_line(self) -> tuple[int, ...]:
        """Images of 1..M in order."""
        return self._imgs

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(e) == self(other(e))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        s = self._imgs
        return Permutation(tuple(s[v - 1] for v in other._imgs))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for e, v in enumerate(self._imgs, start=1):
            inv[v - 1] = e
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        """k-fold composition; negative k gives powers of the inverse."""
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.size)
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def conjugated_by(self, t: "Permutation") -> "Permutation":
        """Return t * self * t^{-1} (relabeling of self by t)."""
        if t.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {t.size}")
        timg = t._imgs
        out = [0] * self.size
        for e, v in enumerate(self._imgs, start=1):
            out[timg[e - 1] - 1] = timg[v - 1]
        return Permutation(out)

    def cycles(self) -> list[list[int]]:
        """Disjoint cycles covering {1..M}, min-rotated, sorted by minimum.

        Fixed points are included as singleton cycles.
        """
        seen = bytearray(self.size + 1)
        out = []
        for start in range(1, self.size + 1):
            if seen[start]:
                continue
            cyc = []
            e = start
            while not seen[e]:
                seen[e] = 1
                cyc.append(e)
                e = self._imgs[e - 1]
            out.append(cyc)
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def num_cycles(self) -> int:
        return len(self.cycles())

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(v == e for e, v in enumerate(self._imgs, start=1))

    def cycle_string(self) -> str:
        """Canonical cycle notation; fixed points omitted, identity is "()"."""
        parts = [
            "(" + ",".join(str(s) for s in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        ]
        return "".join(parts) if parts else "()"

    def to_record(self) -> dict:
        """Structured form {"size": M, "cycles": [[...], ...]} used by file I/O."""
        return {"size": self.size, "cycles": [c for c in self.cycles() if len(c) > 1]}

    @classmethod
    def from_record(cls, record: dict) -> "Permutation":
        return cls.from_cycles(record["cycles"], record["size"])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._imgs == other._imgs

    def __hash__(self) -> int:
        return hash(self._imgs)

    def __repr__(self) -> str:
        return f"Permutation.from_cycle_string({self.cycle_string()!r}, {self.size})"


def parse_cycle_text(text: str, size: int) -> list[list[int]]:
    """Parse "(1,2,3)(4,5)" into [[1,2,3],[4,5]], validating symbols against size.

    Whitespace is tolerated anywhere.  Empty input and "()" denote the empty
    product.  Errors report the offending position in the input text.
    """
    cycles: list[list[int]] = []
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    while i < n:
        if text[i] != "(":
            raise CycleParseError(f"expected '(' but found {text[i]!r}", i)
        i = skip_ws(i + 1)
        cycle: list[int] = []
        if i < n and text[i] == ")":
            cycles.append(cycle)
            i = skip_ws(i + 1)
            continue
        while True:
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == start:
                found = text[i] if i < n else "end of input"
                raise CycleParseError(f"expected a symbol but found {found!r}", start)
            sym = int(text[start:i])
            if not 1 <= sym <= size:
                raise CycleParseError(f"symbol {sym} out of range 1..{size}", start)
            if sym in cycle:
                raise CycleParseError(f"repeated symbol {sym} in cycle", start)
            cycle.append(sym)
            i = skip_ws(i)
            if i < n and text[i] == ",":
                i = skip_ws(i + 1)
                continue
            if i < n and text[i] == ")":
                i = skip_ws(i + 1)
                break
            found = text[i] if i < n else "end of input"
            raise CycleParseError(f"expected ',' or ')' but found {found!r}", i)
        cycles.append(cycle)
    return cycles


def parse_cycles(text: str, size: int) -> Permutation:
    """Cycle-notation string to Permutation; see `parse_cycle_text`."""
    return Permutation.from_cycle_string(text, size)


def format_cycles(p: Permutation) -> str:
    return p.cycle_string()
