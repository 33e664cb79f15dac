"""Connected-sum surgery on filling permutations.

Assembly splices an attachable genus-k piece (a Z piece: 2k+2 crossings, four
regions, a green vertex) into a minimal host at a chosen crossing, producing a
minimal filling permutation of the summed genus.  Decomposition runs the other
way: a minimal filling permutation of genus g splits as (genus l) + (genus k
piece) exactly when four anchor edges x, a, y, b satisfy six equations tying
sigma, the opposite-edge shift, and the arc-order rotation together, plus a
non-nesting side condition.  Both directions work purely on labels, via the
explicit case-defined relabeling maps `AssemblyMap`, `DisassemblyMap` and
`DecoratedDisassemblyMap`.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .filling import FillingPermutation, ZType, opposite, tau, validate
from .perm import Permutation
from .twist import generators

Entry = tuple[int, bool]  # (symbol, decorated); decoration marks duplicate anchor copies


class SurgeryError(ValueError):
    pass


class NotAVertexAnchor(SurgeryError):
    pass


class ArrangementImpossible(SurgeryError):
    pass


class ChordsCross(SurgeryError):
    pass


class NoConjugacyFound(SurgeryError):
    pass


class CaseGap(RuntimeError):
    """A relabeling case list failed to cover a symbol; internal consistency bug."""


@dataclass(frozen=True)
class AttachmentSite:
    """The positive odd (i) and positive even (j) edges pointing into a crossing."""

    i: int
    j: int


def attachment_site(host: FillingPermutation, i: int) -> AttachmentSite:
    """Resolve the crossing entered by positive odd edge i on a minimal host."""
    if not host.is_minimal():
        raise NotAVertexAnchor("host must be minimal (a single complementary region)")
    n = host.n
    if not (1 <= i <= 2 * n and i % 2 == 1):
        raise NotAVertexAnchor(f"{i} is not a positive odd edge for n={n}")
    orbit = host.vertex_orbit(i)
    pos_evens = [s for s in orbit if s % 2 == 0 and s <= 2 * n]
    if len(pos_evens) != 1:
        raise NotAVertexAnchor(f"crossing at {i} lacks a unique positive even edge")
    j = pos_evens[0]
    next_i = i + 2 if i + 2 <= 2 * n else i + 2 - 2 * n
    next_j = j + 2 if j + 2 <= 2 * n else j + 2 - 2 * n
    if set(orbit) != {i, j, opposite(next_i, n), opposite(next_j, n)}:
        raise NotAVertexAnchor(f"left edges {sorted(orbit)} do not match the crossing at {i}")
    return AttachmentSite(i, j)


class AssemblyMap:
    """Relabels host (genus l) and piece (genus k) symbols into {1..8(k+l)-4}.

    Host orientations are preserved and piece orientations reversed,
    reflecting the opposite orientations the two sides inherit from the curve
    along which they are glued.  When l = 1, or when the site sits at the last
    positive edges (i = 4l-3 or j = 4l-2), images past the top label wrap
    around modulo 8(k+l)-4.
    """

    def __init__(self, k: int, l: int, i: int, j: int):
        if k < 1 or l < 1:
            raise SurgeryError("both genera must be >= 1")
        if l == 1 and (i, j) != (1, 2):
            raise SurgeryError("a genus-1 host admits only the site (1, 2)")
        self.k, self.l, self.i, self.j = k, l, i, j
        self.result_size = 8 * (k + l) - 4

    def _reduce(self, x: int) -> int:
        return (x - 1) % self.result_size + 1

    def host(self, v: int) -> int:
        k, l, i, j = self.k, self.l, self.i, self.j
        if not 1 <= v <= 8 * l - 4:
            raise CaseGap(f"host symbol {v} out of range")
        if v > 4 * l - 2:
            return self.host(v - (4 * l - 2)) + (4 * (k + l) - 2)
        if v % 2 == 1:
            if v <= i:
                return v
            if i + 2 <= v <= 4 * l - 3:
                return v + 4 * k
        else:
            if v <= j:
                return v
            if j + 2 <= v <= 4 * l - 2:
                return v + 4 * k
        raise CaseGap(f"host symbol {v} matched no case")

    def piece(self, w: int) -> int:
        k, l, i, j = self.k, self.l, self.i, self.j
        m4 = 4 * (k + l)
        if not 1 <= w <= 8 * k + 8:
            raise CaseGap(f"piece symbol {w} out of range")
        if w % 2 == 1:
            if w <= 4 * k + 3:
                if l == 1 and w == 4 * k + 3:
                    return m4 - 1
                return self._reduce(w + i + m4 - 3)
            if l == 1 and w == 8 * k + 7:
                return 1
            return w + i - 4 * k - 5
        if w <= 4 * k + 4:
            if l == 1 and w == 4 * k + 4:
                return m4
            return self._reduce(w + j + m4 - 4)
        if l == 1 and w == 8 * k + 8:
            return 2
        return w + j - 4 * k - 6


def assembly_map(k: int, l: int, i: int, j: int) -> AssemblyMap:
    return AssemblyMap(k, l, i, j)


def arrange_piece_cycles(piece: FillingPermutation) -> list[list[int]]:
    """Cycles of the piece's inverse, chained for splicing.

    The piece's own region cycles are ordered so the first starts at 1 and
    each next one starts at the opposite of the previous cycle's last entry;
    each is then reversed to present the inverse permutation.  Requires the
    green-normalized labeling; otherwise the chain cannot be completed.
    """
    if not piece.green_normalized():
        raise ArrangementImpossible("piece labeling is not green-normalized")
    cycles = [list(c) for c in piece.sigma.cycles()]
    if len(cycles) != 4:
        raise ArrangementImpossible(f"expected four regions, found {len(cycles)}")
    n = piece.n
    owner = {sym: idx for idx, c in enumerate(cycles) for sym in c}
    arranged: list[list[int]] = []
    used: set[int] = set()
    start = 1
    for _ in range(4):
        ci = owner.get(start)
        if ci is None or ci in used:
            raise ArrangementImpossible(f"no unused cycle available to start at {start}")
        used.add(ci)
        cyc = cycles[ci]
        at = cyc.index(start)
        rotated = cyc[at:] + cyc[:at]
        arranged.append(rotated)
        start = opposite(rotated[-1], n)
    if start != 1:
        raise ArrangementImpossible("cycle chain does not close back at 1")
    return [list(reversed(c)) for c in arranged]


def _crossing_turns_to_even_in(fp: FillingPermutation, odd_in: int, even_in: int) -> bool:
    """Chirality of a crossing: does the left-edge orbit step from the odd
    in-edge directly to the even in-edge (rather than to its opposite pair)?"""
    return fp.vertex_orbit(odd_in)[1] == even_in


def assemble(
    host: FillingPermutation, piece: FillingPermutation, site: AttachmentSite
) -> FillingPermutation:
    """Connected sum of a minimal genus-l host and a genus-k piece at `site`.

    Both crossings are drilled out and the label maps are built from the arc
    merges this induces: the host's in-arcs fuse with the piece's first arcs
    and its out-arcs with the piece's last arcs, with all piece labels taking
    the reversed orientation.  Every surviving region adjacency of either side
    carries over; the opened corners reconnect through the merged arcs.  When
    the two crossings have opposite chirality the piece's second curve is
    traversed backward instead (the same surface with one curve re-oriented),
    which flips which ends fuse; a genus-1 host is chirality-neutral and takes
    the forward gluing.
    """
    l = host.genus()
    k = piece.genus()
    if not host.is_minimal():
        raise SurgeryError("host must be minimal")
    if not piece.is_z_piece(k):
        raise SurgeryError("piece is not an attachable (Z) piece")
    if not piece.green_normalized():
        raise ArrangementImpossible("piece labeling is not green-normalized")
    checked = attachment_site(host, site.i)
    if checked.j != site.j:
        raise NotAVertexAnchor(
            f"edge {site.j} is not the positive even edge at the crossing of {site.i}"
        )

    n_h, n_p = host.n, piece.n
    n_res = n_h + n_p - 2
    result_size = 4 * n_res
    a_i, b_j = (site.i + 1) // 2, site.j // 2
    orbit = set(host.vertex_orbit(site.i))
    green = set(piece.vertex_orbit(2 * n_p - 1))
    beta_forward = n_h == 1 or (
        _crossing_turns_to_even_in(host, site.i, site.j)
        == _crossing_turns_to_even_in(piece, 2 * n_p - 1, 2 * n_p)
    )

    def host_label(e: int) -> int:
        negative = e > 2 * n_h
        base = e - 2 * n_h if negative else e
        if base % 2:
            arc = (base + 1) // 2
            idx = arc if arc <= a_i else arc + n_p - 2
            lab = 2 * ((idx - 1) % n_res + 1) - 1
        else:
            arc = base // 2
            idx = arc if arc <= b_j else arc + n_p - 2
            lab = 2 * ((idx - 1) % n_res + 1)
        return lab + 2 * n_res if negative else lab

    def piece_label(w: int) -> int:
        negative = w > 2 * n_p
        base = w - 2 * n_p if negative else w
        if base % 2:
            arc = (base + 1) // 2
            idx = a_i + arc - 1
            lab = 2 * ((idx - 1) % n_res + 1) - 1
            flipped = True
        else:
            arc = base // 2
            idx = b_j + (arc - 1 if beta_forward else n_p - arc)
            lab = 2 * ((idx - 1) % n_res + 1)
            flipped = beta_forward
        positive = negative if flipped else not negative
        return lab if positive else lab + 2 * n_res

    merged: dict[int, int] = {}
    sigma_h, sigma_p = host.sigma, piece.sigma
    for e in range(1, host.size + 1):
        if e not in orbit:
            merged[host_label(e)] = host_label(sigma_h(e))
    for u in range(1, piece.size + 1):
        if u not in green:
            merged[piece_label(sigma_p(u))] = piece_label(u)

    if len(merged) != result_size:
        raise CaseGap(f"splice covered {len(merged)} of {result_size} labels")
    try:
        sigma = Permutation([merged[e] for e in range(1, result_size + 1)])
        result = validate(sigma)
    except ValueError as exc:
        raise CaseGap(f"spliced permutation is not a filling permutation: {exc}") from exc
    if not result.is_minimal() or result.genus() != k + l:
        raise CaseGap("spliced permutation has the wrong region or genus count")
    return result


@dataclass(frozen=True)
class Decomposition:
    """A witness that a minimal genus-g pair splits off a genus-k piece.

    The anchors x, a, y, b are the four edges the separating curve crosses, in
    traversal order; `type` lists the sizes of the four piece regions the
    curve cordons off, aligned with the anchors.  Canonical rotation puts the
    lexicographically greatest type first (ties broken by the smallest leading
    anchor).
    """

    k: int
    l: int
    x: int
    a: int
    y: int
    b: int
    type: tuple[int, int, int, int]

    @property
    def anchors(self) -> tuple[int, int, int, int]:
        return (self.x, self.a, self.y, self.b)

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "x": self.x,
            "a": self.a,
            "y": self.y,
            "b": self.b,
            "type": list(self.type),
        }


def _canonical_decomposition(k: int, l: int, anchors: tuple[int, ...], quad: tuple[int, ...]) -> Decomposition:
    best = None
    for r in range(4):
        rot_anchors = anchors[r:] + anchors[:r]
        rot_quad = quad[r:] + quad[:r]
        key = (rot_quad, -rot_anchors[0])
        if best is None or key > best[0]:
            best = (key, rot_anchors, rot_quad)
    _, (x, a, y, b), rq = best
    return Decomposition(k=k, l=l, x=x, a=a, y=y, b=b, type=tuple(rq))


def _site_labels(anchors: tuple[int, int, int, int], n: int) -> tuple[int, int]:
    """The positive odd and positive even anchors (i, j)."""
    i = j = None
    for sym in anchors:
        if sym <= 2 * n:
            if sym % 2 == 1:
                i = sym
            else:
                j = sym
    if i is None or j is None:
        raise SurgeryError(f"anchors {anchors} lack a positive odd/even pair")
    return i, j


class _CyclePositions:
    """O(1) powers of a single-cycle permutation via position lookup."""

    def __init__(self, fp: FillingPermutation):
        if not fp.is_minimal():
            raise SurgeryError("decomposition requires a minimal filling permutation")
        self.cycle = list(fp.regions[0])
        self.length = len(self.cycle)
        self.pos = {sym: idx for idx, sym in enumerate(self.cycle)}

    def power(self, e: int, m: int) -> int:
        return self.cycle[(self.pos[e] + m) % self.length]

    def distance(self, e: int, f: int) -> int:
        return (self.pos[f] - self.pos[e]) % self.length


def _quad_ok(quad, k) -> bool:
    return (
        len(quad) == 4
        and all(isinstance(r, int) and r >= 4 and r % 2 == 0 for r in quad)
        and sum(quad) == 8 * k + 8
    )


def _condition2(cp: _CyclePositions, anchors, quad) -> bool:
    """No anchor span may start inside another unless it nests strictly within it."""
    pairs = list(zip(anchors, quad))
    for v, p in pairs:
        for w, q in pairs:
            if w == v:
                continue
            if cp.distance(v, w) < p - 1:
                end_of_v = cp.power(v, p - 1)
                if not cp.distance(w, end_of_v) > q - 1:
                    return False
    return True


def check_decomposition(
    fp: FillingPermutation,
    x: int,
    a: int,
    y: int,
    b: int,
    k: int,
    quad: tuple[int, int, int, int],
) -> bool:
    """Test the six anchor equations plus the non-nesting condition."""
    g = fp.genus()
    if g < 2 or not 1 <= k <= g - 1:
        raise SurgeryError(f"piece genus {k} out of range for genus {g}")
    quad = tuple(quad)
    if not _quad_ok(quad, k):
        raise SurgeryError(f"malformed type {quad} for piece genus {k}")
    cp = _CyclePositions(fp)
    n = fp.n
    r, s, t, u = quad
    t_power = tau(n) ** (2 * k + 1)
    eqs = (
        opposite(cp.power(x, r - 1), n) == a
        and opposite(cp.power(a, s - 1), n) == y
        and opposite(cp.power(y, t - 1), n) == b
        and opposite(cp.power(b, u - 1), n) == x
        and opposite(t_power(x), n) == y
        and opposite(t_power(a), n) == b
    )
    if not eqs:
        return False
    if k == g - 1:
        return True
    return _condition2(cp, (x, a, y, b), quad)


def _even_quads(total: int):
    for r in range(4, total - 11, 2):
        for s in range(4, total - r - 7, 2):
            for t in range(4, total - r - s - 3, 2):
                u = total - r - s - t
                if u >= 4:
                    yield (r, s, t, u)


def find_decompositions(fp: FillingPermutation, k: int | None = None) -> list[Decomposition]:
    """Exhaustive search for all single-step splittings of a minimal pair.

    Anchors a, y, b are forced from x by the span equations, so the search
    runs over piece genus, type, and x only.  Results are deduplicated by
    canonical rotation and each is confirmed by the separating-curve check.
    """
    g = fp.genus()
    if g <= 1:
        return []
    cp = _CyclePositions(fp)
    n = fp.n
    length = cp.length
    t_full = tau(n)
    found: dict[tuple, Decomposition] = {}
    piece_genera = range(1, g) if k is None else [k]
    for kk in piece_genera:
        if not 1 <= kk <= g - 1:
            raise SurgeryError(f"piece genus {kk} out of range for genus {g}")
        t_power = t_full ** (2 * kk + 1)
        for quad in _even_quads(8 * kk + 8):
            r, s, t, u = quad
            for x in range(1, length + 1):
                a = opposite(cp.power(x, r - 1), n)
                y = opposite(cp.power(a, s - 1), n)
                if opposite(t_power(x), n) != y:
                    continue
                b = opposite(cp.power(y, t - 1), n)
                if opposite(cp.power(b, u - 1), n) != x:
                    continue
                if opposite(t_power(a), n) != b:
                    continue
                if kk < g - 1 and not _condition2(cp, (x, a, y, b), quad):
                    continue
                dec = _canonical_decomposition(kk, g - kk, (x, a, y, b), quad)
                found.setdefault((dec.k, dec.anchors, dec.type), dec)
    results = [d for d in found.values() if verify_separating(fp, d)]
    results.sort(key=lambda d: (d.k, d.type, d.x))
    return results


def verify_separating(fp: FillingPermutation, dec: Decomposition) -> bool:
    """Direct geometric check that the anchor chords cut off the piece.

    The complementary polygon's boundary is cut at the chord attachment
    points; the four chords split the disk into five faces; opposite edge
    halves are then reglued with reversed orientation.  The witness is good
    exactly when two connected components remain and one of them consists of
    the four cordoned faces.
    """
    n = fp.n
    g = fp.genus()
    cp = _CyclePositions(fp)
    anchors = dec.anchors
    shared = dec.k == g - 1  # each anchor edge carries two chord attachments

    # chord c: from anchors[c] to opposite(anchors[c+1]); coordinates scale
    # each edge to width 6 so attachment points land on integers.
    points: list[tuple[int, int]] = []  # (coord, chord)
    chord_init_coord: list[int] = []
    for c in range(4):
        init_edge = anchors[c]
        term_edge = opposite(anchors[(c + 1) % 4], n)
        init_coord = 6 * cp.pos[init_edge] + (4 if shared else 3)
        term_coord = 6 * cp.pos[term_edge] + (2 if shared else 3)
        if any(coord in (init_coord, term_coord) for coord, _ in points):
            raise ChordsCross("chord attachment points collide")
        points.append((init_coord, c))
        points.append((term_coord, c))
        chord_init_coord.append(init_coord)
    points.sort()

    # walk the circle once; non-crossing chords nest like parentheses
    face_of_arc: list[int] = []  # arc idx -> face; arc idx starts at points[idx]
    opened_at: dict[int, int] = {}  # chord -> face it opened
    parent_of: dict[int, int] = {}
    current = 0
    next_face = 1
    stack: list[int] = []
    for coord, chord in points:
        if chord not in opened_at:
            stack.append(current)
            opened_at[chord] = next_face
            parent_of[next_face] = current
            current = next_face
            next_face += 1
        else:
            if opened_at[chord] != current:
                raise ChordsCross("anchor chords cross inside the polygon")
            current = stack.pop()
        face_of_arc.append(current)
    if stack or current != 0:
        raise ChordsCross("unbalanced chord endpoints")
    num_faces = next_face  # root face 0 plus one per chord

    coords = [coord for coord, _ in points]
    circumference = 6 * cp.length

    def face_at(coord2x: int) -> int:
        # locate by doubled coordinate to keep interval midpoints integral
        idx = bisect_right(coords, coord2x / 2) - 1
        return face_of_arc[idx if idx >= 0 else len(coords) - 1]

    cordon_faces = [face_at(2 * c + 1) for c in chord_init_coord]

    # glue: edge pieces (split at attachment coords) pair reversed with the
    # opposite edge's pieces
    parent = list(range(num_faces))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    cuts_of_edge: dict[int, list[int]] = {}
    for coord, _ in points:
        cuts_of_edge.setdefault(coord // 6, []).append(coord)
    for sym in range(1, 4 * n + 1):
        opp = opposite(sym, n)
        if sym > opp:
            continue
        p1, p2 = cp.pos[sym], cp.pos[opp]
        cuts1 = sorted(cuts_of_edge.get(p1, []))
        cuts2 = sorted(cuts_of_edge.get(p2, []))
        if len(cuts1) != len(cuts2):
            raise ChordsCross("attachment points are not mirrored on opposite edges")
        bounds1 = [6 * p1] + cuts1 + [6 * p1 + 6]
        bounds2 = [6 * p2] + cuts2 + [6 * p2 + 6]
        m = len(bounds1) - 1
        for piece_idx in range(m):
            f1 = face_at(bounds1[piece_idx] + bounds1[piece_idx + 1])
            f2 = face_at(bounds2[m - 1 - piece_idx] + bounds2[m - piece_idx])
            union(f1, f2)

    components = {find(f) for f in range(num_faces)}
    if len(components) != 2:
        return False
    cordon_roots = {find(f) for f in cordon_faces}
    if len(set(cordon_faces)) != 4 or len(cordon_roots) != 1:
        return False
    other = [f for f in range(num_faces) if f not in set(cordon_faces)]
    return all(find(f) not in cordon_roots for f in other)


def extract(
    fp: FillingPermutation, dec: Decomposition
) -> tuple[list[list[Entry]], list[int]]:
    """Split sigma into the piece-side cycles and the remainder cycle.

    Returns (cut_cycles, remainder_cycle).  The four cut cycles run from each
    anchor to the opposite of the next anchor and are arranged so the first
    ends at the odd edge not on the positive odd anchor's arc, each subsequent
    cycle starting at the opposite of the previous last entry.  When the piece
    takes all but a torus (k = g-1) the anchors each serve as both first and
    last entries, so their extra copies are decorated: a positive edge's copy
    is decorated where it appears as a terminal entry, a negative edge's where
    it appears as an initial entry.  The remainder cycle is sigma with the cut
    cycles' interior entries deleted; for k = g-1 it is [1, 2, 3, 4].
    """
    g = fp.genus()
    n = fp.n
    sigma = fp.sigma
    anchors = dec.anchors
    decorated = dec.k == g - 1

    runs: list[list[int]] = []
    for idx in range(4):
        run = [anchors[idx]]
        cur = anchors[idx]
        for _ in range(dec.type[idx] - 1):
            cur = sigma(cur)
            run.append(cur)
        if run[-1] != opposite(anchors[(idx + 1) % 4], n):
            raise SurgeryError("anchors do not satisfy the span equations")
        runs.append(run)

    def entries(run: list[int]) -> list[Entry]:
        out = []
        last = len(run) - 1
        for at, sym in enumerate(run):
            positive = sym <= 2 * n
            flag = decorated and (
                (positive and at == last) or (not positive and at == 0)
            )
            out.append((sym, flag))
        return out

    i, _ = _site_labels(anchors, n)
    first_candidates = [ci for ci in range(4) if runs[ci][-1] % 2 == 1 and runs[ci][-1] != i]
    if len(first_candidates) > 1:
        opp_i = opposite(i, n)
        first_candidates = [ci for ci in first_candidates if runs[ci][-1] != opp_i]
    if len(first_candidates) != 1:
        raise SurgeryError("cannot identify the leading cut cycle")
    order = first_candidates
    while len(order) < 4:
        need = opposite(runs[order[-1]][-1], n)
        nxt = [ci for ci in range(4) if ci not in order and runs[ci][0] == need]
        if len(nxt) != 1:
            raise SurgeryError("cut cycles do not chain")
        order.append(nxt[0])
    cut_cycles = [entries(runs[ci]) for ci in order]

    if decorated:
        return cut_cycles, [1, 2, 3, 4]
    interior: set[int] = set()
    for run in runs:
        interior.update(run[1:-1])
    full = list(fp.regions[0])
    surviving = [s for s in full if s not in interior]
    at_min = surviving.index(min(surviving))
    return cut_cycles, surviving[at_min:] + surviving[:at_min]


class DisassemblyMap:
    """Inverse relabeling for k < g-1: remainder symbols to genus-l labels and
    piece-side symbols to piece labels (with orientation reversal built into
    the splitting convention, so the piece permutation is the inverse of the
    relabeled cut cycles)."""

    def __init__(self, k: int, g: int, i: int, j: int):
        if not 1 <= k < g - 1:
            raise SurgeryError(f"map defined for 1 <= k < g-1, got k={k}, g={g}")
        self.k, self.g, self.i, self.j = k, g, i, j
        self.l = g - k

    def host(self, v: int) -> int:
        k, g, l, i, j = self.k, self.g, self.l, self.i, self.j
        if not 1 <= v <= 8 * g - 4:
            raise CaseGap(f"symbol {v} out of range")
        if v > 4 * g - 2:
            return self.host(v - (4 * g - 2)) + (4 * l - 2)
        if v % 2 == 1:
            if max(1, i - 4 * l + 4) <= v <= i:
                return v - max(0, i - 4 * l + 3)
            if i + 4 * k + 2 <= v <= 4 * g - 3:
                return v - 4 * k
        else:
            if max(2, j - 4 * l + 4) <= v <= j:
                return v - max(0, j - 4 * l + 2)
            if j + 4 * k + 2 <= v <= 4 * g - 2:
                return v - 4 * k
        raise CaseGap(f"remainder symbol {v} matched no case")

    def piece(self, w: int) -> int:
        k, g, l, i, j = self.k, self.g, self.l, self.i, self.j
        if not 1 <= w <= 8 * g - 4:
            raise CaseGap(f"symbol {w} out of range")
        if w > 4 * g - 2:
            return self.piece(w - (4 * g - 2)) - (4 * k + 4)
        if w % 2 == 1:
            if i <= w <= min(i + 4 * k + 2, 4 * g - 3):
                return w - i + 4 * k + 5
            if 1 <= w <= i - 4 * l + 4:
                return w - i + 4 * (k + g) + 3
        else:
            if j <= w <= min(j + 4 * k + 2, 4 * g - 2):
                return w - j + 4 * k + 6
            if 2 <= w <= j - 4 * l + 4:
                return w - j + 4 * (k + g) + 4
        raise CaseGap(f"piece symbol {w} matched no case")


class DecoratedDisassemblyMap:
    """Relabeling for k = g-1, defined on symbols plus decorated anchor copies."""

    def __init__(self, k: int, i: int, j: int):
        if k < 1:
            raise SurgeryError("piece genus must be >= 1")
        self.k, self.i, self.j = k, i, j
        self.n_host = 2 * k + 1  # host crossing count at genus g = k+1

    def piece(self, entry: Entry) -> int:
        k, i, j = self.k, self.i, self.j
        sym, flag = entry
        if flag:
            if sym == i:
                return 8 * k + 7
            if sym == j:
                return 8 * k + 8
            if sym == opposite(i, self.n_host):
                return 4 * k + 3
            if sym == opposite(j, self.n_host):
                return 4 * k + 4
            raise CaseGap(f"unexpected decorated symbol {sym}")
        if sym % 2 == 1:
            if i <= sym <= 4 * k + 1:
                return sym - i + 4 * k + 5
            if 1 <= sym <= i - 2:
                return sym - i + 8 * k + 7
            if i + 4 * k + 2 <= sym <= 8 * k + 3:
                return sym - i - 4 * k - 1
            if 4 * k + 3 <= sym <= i + 4 * k:
                return sym - i + 1
        else:
            if j <= sym <= 4 * k + 2:
                return sym - j + 4 * k + 6
            if 2 <= sym <= j - 2:
                return sym - j + 8 * k + 8
            if j + 4 * k + 2 <= sym <= 8 * k + 4:
                return sym - j - 4 * k
            if 4 * k + 4 <= sym <= j + 4 * k:
                return sym - j + 2
        raise CaseGap(f"piece symbol {sym} matched no case")


def disassembly_map(k: int, g: int, i: int, j: int) -> DisassemblyMap:
    return DisassemblyMap(k, g, i, j)


def decorated_disassembly_map(k: int, i: int, j: int) -> DecoratedDisassemblyMap:
    return DecoratedDisassemblyMap(k, i, j)


def disassemble(
    fp: FillingPermutation, dec: Decomposition
) -> tuple[FillingPermutation, FillingPermutation]:
    """Recover (piece, remainder) filling permutations from a decomposition."""
    g = fp.genus()
    n = fp.n
    cut_cycles, remainder_cycle = extract(fp, dec)
    i, j = _site_labels(dec.anchors, n)
    k, l = dec.k, dec.l
    if k == g - 1:
        dmap = DecoratedDisassemblyMap(k, i, j)
        piece_cycles = [[dmap.piece(e) for e in cyc] for cyc in cut_cycles]
        remainder_perm = Permutation.from_cycles([[1, 2, 3, 4]], 4)
    else:
        hmap = DisassemblyMap(k, g, i, j)
        piece_cycles = [[hmap.piece(sym) for sym, _ in cyc] for cyc in cut_cycles]
        remainder_perm = Permutation.from_cycles(
            [[hmap.host(v) for v in remainder_cycle]], 8 * l - 4
        )
    piece_perm = Permutation.from_cycles(piece_cycles, 8 * k + 8).inverse()
    piece = validate(piece_perm, 2 * k + 2)
    remainder = validate(remainder_perm, 2 * l - 1)
    if not piece.is_z_piece(k):
        raise SurgeryError("recovered piece is not an attachable piece")
    if not piece.z_type().matches(dec.type):
        raise SurgeryError(
            f"recovered piece type {piece.z_type().quad} does not match {dec.type}"
        )
    if not remainder.is_minimal() or remainder.genus() != l:
        raise SurgeryError("recovered remainder is not a minimal pair of the right genus")
    return piece, remainder


@dataclass(frozen=True)
class RoundTripReport:
    """Relabeling powers (p, q) with kappa^p delta^q carrying the reassembled
    permutation back to the original by conjugation."""

    p: int
    q: int
    reassembled: FillingPermutation

    @property
    def exact(self) -> bool:
        return self.p == 0 and self.q == 0


def round_trip_check(fp: FillingPermutation, dec: Decomposition) -> RoundTripReport:
    """Disassemble, reassemble at the induced site, and locate the conjugacy.

    Reassembly at a genus-1 remainder is forced to site (1, 2), which may
    differ from the even anchor used during disassembly; the result is then
    only conjugate to the original by label cycling.  Searches kappa^p delta^q
    with 0 <= p, q < 2g-1 for t with t^{-1} * sigma' * t == sigma.
    """
    g = fp.genus()
    n = fp.n
    piece, remainder = disassemble(fp, dec)
    i, j = _site_labels(dec.anchors, n)
    if dec.k == g - 1:
        site = AttachmentSite(1, 2)
    else:
        hmap = DisassemblyMap(dec.k, g, i, j)
        site = AttachmentSite(hmap.host(i), hmap.host(j))
    reassembled = assemble(remainder, piece, site)
    kappa, delta, _, _ = generators(n)
    target = fp.sigma
    sigma_prime = reassembled.sigma
    for p in range(n):
        kp = kappa**p
        for q in range(n):
            t = kp * delta**q
            if sigma_prime.conjugated_by(t.inverse()) == target:
                return RoundTripReport(p=p, q=q, reassembled=reassembled)
    raise NoConjugacyFound("no label-cycling conjugacy carries the rebuild to the original")
