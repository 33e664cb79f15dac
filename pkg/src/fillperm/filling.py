"""Filling-pair permutations on closed orientable surfaces.

A pair of curves crossing n times cuts its surface into polygons whose 4n
oriented edge labels live in {1..4n}: label 2i-1 is the i-th arc of the first
curve, 2i the i-th arc of the second, and adding 2n marks the reversed copy of
an arc.  A permutation listing each polygon's edges clockwise is a *filling
permutation*; it is characterised by alternating odd/even entries together
with the crossing equation sigma(Q^N(sigma(e))) = tau(e), where Q is the full
forward shift on labels, N = 2n, and tau advances every label along its own
curve (forward on plain labels, backward on reversed ones).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .perm import Permutation


class FillingError(ValueError):
    """A permutation failed one of the filling conditions."""


class SizeNotMultipleOf4(FillingError):
    def __init__(self, size: int):
        super().__init__(f"permutation size {size} is not a multiple of 4")
        self.size = size


class AlternationViolation(FillingError):
    def __init__(self, symbol: int):
        super().__init__(f"cycle entries do not alternate parity at symbol {symbol}")
        self.symbol = symbol


class EquationViolation(FillingError):
    def __init__(self, symbol: int):
        super().__init__(f"crossing equation fails at symbol {symbol}")
        self.symbol = symbol


def big_q(n: int) -> Permutation:
    """The 4n-cycle shifting every label forward by one."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 4 * n
    return Permutation(tuple(e % m + 1 for e in range(1, m + 1)))


def tau(n: int) -> Permutation:
    """Advance each label along its curve: positives forward, negatives backward."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 4 * n
    return Permutation.from_cycles(
        [
            list(range(1, 2 * n, 2)),
            list(range(2, 2 * n + 1, 2)),
            list(range(m - 1, 2 * n, -2)),
            list(range(m, 2 * n + 1, -2)),
        ],
        m,
    )


def opposite(e: int, n: int) -> int:
    """The reversed copy of the same arc: shift by 2n mod 4n.  An involution."""
    m = 4 * n
    if not 1 <= e <= m:
        raise ValueError(f"symbol {e} out of range 1..{m}")
    return (e + 2 * n - 1) % m + 1


@dataclass(frozen=True)
class EdgeInfo:
    """Decoded label: which curve, which arc, and its orientation."""

    curve: str  # "alpha" or "beta"
    index: int  # arc number in 1..n
    positive: bool


def edge_info(e: int, n: int) -> EdgeInfo:
    m = 4 * n
    if not 1 <= e <= m:
        raise ValueError(f"symbol {e} out of range 1..{m}")
    positive = e <= 2 * n
    base = e if positive else e - 2 * n
    if base % 2 == 1:
        return EdgeInfo("alpha", (base + 1) // 2, positive)
    return EdgeInfo("beta", base // 2, positive)


def edge_number(info: EdgeInfo, n: int) -> int:
    if info.curve not in ("alpha", "beta"):
        raise ValueError(f"unknown curve {info.curve!r}")
    if not 1 <= info.index <= n:
        raise ValueError(f"arc index {info.index} out of range 1..{n}")
    base = 2 * info.index - 1 if info.curve == "alpha" else 2 * info.index
    return base if info.positive else base + 2 * n


@dataclass(frozen=True)
class ZType:
    """Region sizes of an attachable piece, in cyclic order around its green vertex.

    Stored in the lexicographically least rotation; reflections are distinct.
    """

    quad: tuple[int, int, int, int]

    def __post_init__(self):
        q = tuple(self.quad)
        if len(q) != 4 or any(r % 2 or r < 4 for r in q):
            raise ValueError(f"type entries must be even and >= 4: {q}")
        object.__setattr__(self, "quad", min(q[i:] + q[:i] for i in range(4)))

    def matches(self, quad: tuple[int, int, int, int]) -> bool:
        """True if `quad` is a cyclic rotation of this type."""
        return ZType(tuple(quad)).quad == self.quad


@dataclass(frozen=True)
class SurfaceInfo:
    genus: int
    region_count: int
    regions: tuple[tuple[int, ...], ...]
    vertices: tuple[tuple[int, ...], ...]
    green_vertices: tuple[tuple[int, ...], ...]


class FillingPermutation:
    """A validated filling permutation together with its crossing count n.

    Construct through `validate`; instances are immutable and hashable.
    """

    def __init__(self, sigma: Permutation, n: int, _checked: bool = False):
        if not _checked:
            checked = validate(sigma, n)
            sigma, n = checked.sigma, checked.n
        self._sigma = sigma
        self._n = n

    @property
    def sigma(self) -> Permutation:
        return self._sigma

    @property
    def n(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return 4 * self._n

    @cached_property
    def regions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c) for c in self._sigma.cycles())

    @property
    def region_count(self) -> int:
        return len(self.regions)

    def genus(self) -> int:
        n, c = self._n, self.region_count
        assert (n - c) % 2 == 0, "parity of region count is forced by validity"
        return 1 + (n - c) // 2

    def is_minimal(self) -> bool:
        """True when the complement is a single polygon (n = 2g-1)."""
        return self.region_count == 1

    def vertex_orbit(self, e: int) -> tuple[int, ...]:
        """The four left edges of the crossing at e, in traversal order."""
        q_n = 2 * self._n
        m = 4 * self._n
        orbit = []
        x = e
        while True:
            orbit.append(x)
            x = (self._sigma(x) + q_n - 1) % m + 1
            if x == e:
                return tuple(orbit)

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """All crossings as 4-element left-edge orbits, sorted by minimum."""
        seen = set()
        out = []
        for e in range(1, self.size + 1):
            if e in seen:
                continue
            orbit = self.vertex_orbit(e)
            seen.update(orbit)
            out.append(tuple(sorted(orbit)))
        return tuple(out)

    @cached_property
    def green_vertices(self) -> tuple[tuple[int, ...], ...]:
        """Crossings adjacent to every region."""
        region_of = {}
        for idx, region in enumerate(self.regions):
            for sym in region:
                region_of[sym] = idx
        all_regions = set(range(self.region_count))
        return tuple(
            v for v in self.vertices if {region_of[s] for s in v} == all_regions
        )

    def surface_info(self) -> SurfaceInfo:
        return SurfaceInfo(
            genus=self.genus(),
            region_count=self.region_count,
            regions=self.regions,
            vertices=self.vertices,
            green_vertices=self.green_vertices,
        )

    def green_normalized(self) -> bool:
        """True when the crossing at label 2n-1 has left edges {2n-1..2n+2}.

        This is the labeling convention in which both curves begin and end at
        a green vertex; piece assembly requires it.
        """
        n = self._n
        want = {2 * n - 1, 2 * n, 2 * n + 1, 2 * n + 2}
        orbit = set(self.vertex_orbit(2 * n - 1))
        return orbit == want and tuple(sorted(orbit)) in self.green_vertices

    def is_z_piece(self, k: int) -> bool:
        """True for an attachable genus-k piece: n = 2k+2, four regions, a green vertex."""
        return (
            self._n == 2 * k + 2
            and self.genus() == k
            and self.region_count == 4
            and len(self.green_vertices) > 0
        )

    def z_type(self) -> ZType:
        """Region sizes in the cyclic order seen from a green vertex."""
        if not self.green_vertices:
            raise FillingError("no vertex is adjacent to every region")
        n = self._n
        normalized = tuple(sorted(self.vertex_orbit(2 * n - 1)))
        anchor = normalized if normalized in self.green_vertices else self.green_vertices[0]
        region_size = {}
        for region in self.regions:
            for sym in region:
                region_size[sym] = len(region)
        orbit = self.vertex_orbit(min(anchor))
        return ZType(tuple(region_size[s] for s in orbit))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FillingPermutation)
            and self._n == other._n
            and self._sigma == other._sigma
        )

    def __hash__(self) -> int:
        return hash((self._n, self._sigma))

    def __repr__(self) -> str:
        return f"<FillingPermutation n={self._n} c={self.region_count} {self._sigma.cycle_string()}>"


def validate(sigma: Permutation, n: int | None = None) -> FillingPermutation:
    """Check the two filling conditions and wrap sigma.

    Raises SizeNotMultipleOf4, AlternationViolation (first offending symbol),
    or EquationViolation (first symbol where the crossing equation fails).
    """
    m = sigma.size
    if m % 4 != 0 or m == 0:
        raise SizeNotMultipleOf4(m)
    inferred = m // 4
    if n is None:
        n = inferred
    elif n != inferred:
        raise FillingError(f"n={n} inconsistent with permutation size {m}")
    imgs = sigma.one_line()
    for e in range(1, m + 1):
        if (imgs[e - 1] - e) % 2 == 0:
            raise AlternationViolation(e)
    t = tau(n).one_line()
    two_n = 2 * n
    for e in range(1, m + 1):
        opp = (imgs[e - 1] + two_n - 1) % m + 1
        if imgs[opp - 1] != t[e - 1]:
            raise EquationViolation(e)
    return FillingPermutation(sigma, n, _checked=True)


def is_valid(sigma: Permutation, n: int | None = None) -> bool:
    try:
        validate(sigma, n)
        return True
    except FillingError:
        return False
