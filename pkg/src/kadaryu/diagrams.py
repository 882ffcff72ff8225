"""Brauer pair partitions, composition with loop counting, the flip
involution, and enumeration of bounded-height diagram bases.

Points of a diagram with n top and m bottom points are labelled 1..n (top)
and -1..-m (bottom, negative).  A diagram is a perfect matching stored as a
sorted tuple of sorted pairs, so equality is plain tuple equality.

Height is treated operationally: the height-<= l diagrams on n strands are
exactly the products of the cup-cap generators e_1..e_{n-1} and the
transpositions s_1..s_{l+1}.  This closure is what `basis_by_closure`
enumerates, and its cardinalities are cross-checked elsewhere against
walk counts on the corresponding branching graphs.
"""

from __future__ import annotations

from functools import lru_cache


def _canon(pairs) -> tuple[tuple[int, int], ...]:
    out = []
    for a, b in pairs:
        if a > b:
            a, b = b, a
        out.append((a, b))
    out.sort()
    return tuple(out)


class PairPartition:
    """A Brauer diagram: perfect pair matching of n top + m bottom points."""

    __slots__ = ("n_top", "n_bottom", "pairs")

    def __init__(self, n_top: int, n_bottom: int, pairs):
        self.n_top = n_top
        self.n_bottom = n_bottom
        self.pairs = _canon(pairs)
        if (n_top + n_bottom) % 2:
            raise ValueError("odd total point count")
        seen = set()
        for a, b in self.pairs:
            seen.add(a)
            seen.add(b)
        expect = set(range(1, n_top + 1)) | set(range(-n_bottom, 0))
        if seen != expect or 2 * len(self.pairs) != len(expect):
            raise ValueError("pairs are not a perfect matching of the points")

    def __eq__(self, other):
        return (isinstance(other, PairPartition)
                and self.n_top == other.n_top
                and self.n_bottom == other.n_bottom
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.n_top, self.n_bottom, self.pairs))

    def __lt__(self, other):
        # canonical order: more propagating lines first, then pair lists
        return (-self.propagating_count(), self.pairs) < (-other.propagating_count(), other.pairs)

    def propagating_count(self) -> int:
        return sum(1 for a, b in self.pairs if a < 0 < b)

    def is_permutation(self) -> bool:
        return (self.n_top == self.n_bottom
                and self.propagating_count() == self.n_top)

    def as_permutation_image(self) -> tuple[int, ...]:
        """For a permutation diagram: image[i-1] = bottom point of top i."""
        if not self.is_permutation():
            raise ValueError("not a permutation diagram")
        img = [0] * self.n_top
        for a, b in self.pairs:
            img[b - 1] = -a
        return tuple(img)

    def encode(self) -> str:
        """Text encoding "n,m:[(a,b),(c,d'),...]" with primes for bottom points."""
        def pt(x):
            return f"{-x}'" if x < 0 else str(x)
        body = ",".join(f"({pt(a)},{pt(b)})" for a, b in self.pairs)
        return f"{self.n_top},{self.n_bottom}:[{body}]"

    @staticmethod
    def decode(s: str) -> "PairPartition":
        head, body = s.split(":", 1)
        n, m = (int(x) for x in head.split(","))
        body = body.strip()[1:-1]
        pairs = []
        if body:
            for chunk in body.split("),("):
                chunk = chunk.strip("()")
                a, b = chunk.split(",")
                def val(t):
                    t = t.strip()
                    return -int(t[:-1]) if t.endswith("'") else int(t)
                pairs.append((val(a), val(b)))
        return PairPartition(n, m, pairs)

    def __repr__(self):
        return f"PairPartition({self.encode()})"


def identity(n: int) -> PairPartition:
    return PairPartition(n, n, [(i, -i) for i in range(1, n + 1)])


def permutation_diagram(image: tuple[int, ...]) -> PairPartition:
    """Diagram of a permutation: top i joined to bottom image[i-1]."""
    n = len(image)
    return PairPartition(n, n, [(i, -image[i - 1]) for i in range(1, n + 1)])


def e_gen(i: int, n: int) -> PairPartition:
    """Temperley-Lieb cup-cap generator e_i on n strands."""
    pairs = [(i, i + 1), (-i, -(i + 1))]
    pairs += [(j, -j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return PairPartition(n, n, pairs)


def s_gen(j: int, n: int) -> PairPartition:
    """Elementary transposition diagram s_j on n strands."""
    pairs = [(j, -(j + 1)), (j + 1, -j)]
    pairs += [(k, -k) for k in range(1, n + 1) if k not in (j, j + 1)]
    return PairPartition(n, n, pairs)


def u_cup(j: int, k: int, n: int) -> PairPartition:
    """One-cup half diagram u_{jk} in B(n, n-2): cup at top points j < k,
    remaining top points joined order-preservingly to the bottom."""
    if not (1 <= j < k <= n):
        raise ValueError("need 1 <= j < k <= n")
    pairs = [(j, k)]
    slot = 0
    for t in range(1, n + 1):
        if t in (j, k):
            continue
        slot += 1
        pairs.append((t, -slot))
    return PairPartition(n, n - 2, pairs)


def compose(p1: PairPartition, p2: PairPartition) -> tuple[PairPartition, int]:
    """p1 stacked on top of p2 (p1's bottom glued to p2's top).

    Returns (result diagram, number of closed loops removed).
    """
    if p1.n_bottom != p2.n_top:
        raise ValueError(f"size mismatch: {p1.n_bottom} vs {p2.n_top}")
    n, m, k = p1.n_top, p1.n_bottom, p2.n_bottom
    # nodes: ('t', i) top of p1, ('m', i) glued middle, ('b', i) bottom of p2
    adj: dict[tuple, list] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for a, b in p1.pairs:
        na = ("t", a) if a > 0 else ("m", -a)
        nb = ("t", b) if b > 0 else ("m", -b)
        link(na, nb)
    for a, b in p2.pairs:
        na = ("m", a) if a > 0 else ("b", -a)
        nb = ("m", b) if b > 0 else ("b", -b)
        link(na, nb)
    ends = [("t", i) for i in range(1, n + 1)] + [("b", i) for i in range(1, k + 1)]
    seen = set()
    pairs = []
    for start in ends:
        if start in seen:
            continue
        seen.add(start)
        prev, cur = start, adj[start][0]
        while cur[0] == "m":
            seen.add(cur)
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:  # degenerate single-node path cannot happen
                break
            # a middle node has exactly two incident edges; when both go to
            # the same neighbour (double edge) the walk must still alternate
            if len(adj[cur]) == 2 and adj[cur][0] == adj[cur][1]:
                nxt = [adj[cur][0]]
            prev, cur = cur, nxt[0]
        seen.add(cur)
        a = start[1] if start[0] == "t" else -start[1]
        b = cur[1] if cur[0] == "t" else -cur[1]
        pairs.append((a, b))
    loops = 0
    for i in range(1, m + 1):
        node = ("m", i)
        if node in seen or node not in adj:
            continue
        # walk the cycle
        loops += 1
        prev, cur = node, adj[node][0]
        seen.add(node)
        while cur != node:
            seen.add(cur)
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
    return PairPartition(n, k, pairs), loops


def flip(p: PairPartition) -> PairPartition:
    """Vertical flip B(n,m) -> B(m,n); an involutive antihomomorphism."""
    return PairPartition(p.n_bottom, p.n_top, [(-a, -b) for a, b in p.pairs])


# ---------------------------------------------------------------------------
# bounded-height bases
# ---------------------------------------------------------------------------

def generators(l: int, n: int) -> list[PairPartition]:
    gens = [e_gen(i, n) for i in range(1, n)]
    gens += [s_gen(j, n) for j in range(1, min(l + 1, n - 1) + 1)]
    return gens


@lru_cache(maxsize=None)
def basis_by_closure(l: int, n: int) -> frozenset[PairPartition]:
    """All diagrams expressible as products of the height-<= l generators.

    BFS over right multiplication starting from the identity; loop scalars
    are discarded.  For l = -1 this is the Temperley-Lieb basis (Catalan
    many), for l >= n-2 the full Brauer basis ((2n-1)!! many).
    """
    if n == 0:
        return frozenset({PairPartition(0, 0, [])})
    gens = generators(l, n)
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for g in gens:
                r, _ = compose(d, g)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def half_normalize(w: PairPartition) -> tuple[PairPartition, tuple[int, ...]]:
    """Split w in B(n,p) with p propagating lines as u' composed with a
    permutation of the p outputs; u' has order-preserving propagating lines.

    Returns (u', perm image) where perm maps output slot -> bottom point.
    """
    p = w.n_bottom
    if w.propagating_count() != p:
        raise ValueError("not full propagating count")
    tt = [(a, b) for a, b in w.pairs if a > 0 and b > 0]
    prop = sorted((b, -a) for a, b in w.pairs if a < 0 < b)  # (top, bottom)
    pairs = list(tt)
    image = []
    for slot, (top, bot) in enumerate(prop, start=1):
        pairs.append((top, -slot))
        image.append(bot)
    return PairPartition(w.n_top, p, pairs), tuple(image)


@lru_cache(maxsize=None)
def half_basis(l: int, n: int, p: int) -> tuple[PairPartition, ...]:
    """Half diagrams of height <= l in B(n, p), sorted canonically.

    Computed as the closure of the right-nested cup diagram under the
    algebra generators, discarding the residual output permutation and any
    terms with fewer than p propagating lines (the cell-module quotient).
    """
    if p > n or (n - p) % 2:
        raise ValueError("parity violation")
    if n == p:
        return (identity(n),)
    start = PairPartition(
        n, p,
        [(i, -i) for i in range(1, p + 1)] + [(q, q + 1) for q in range(p + 1, n, 2)])
    gens = generators(l, n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                w, _ = compose(g, u)
                if w.propagating_count() < p:
                    continue
                u2, _ = half_normalize(w)
                if u2 not in seen:
                    seen.add(u2)
                    nxt.append(u2)
        frontier = nxt
    return tuple(sorted(seen, key=lambda d: d.pairs))


def _project_pairs(d: PairPartition, p: int):
    """Keep the top half of an n->n diagram with p propagating lines,
    reading its bottom connections in increasing order."""
    tt = [(a, b) for a, b in d.pairs if a > 0 and b > 0]
    prop = sorted((b, a) for a, b in d.pairs if a < 0 < b)  # by top point
    out = list(tt)
    for slot, (top, _bot) in enumerate(prop, start=1):
        out.append((top, -slot))
    return out


def one_cup_basis(l: int, n: int) -> tuple[PairPartition, ...]:
    """The distinguished one-cup half-diagram list, ordered by (j, k).

    Adjacent cups u_{12}..u_{n-1,n} plus u_{jk} for 3 <= k <= min(n, l+3),
    j <= k-2.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    idx = {(j, j + 1) for j in range(1, n)}
    for k in range(3, min(n, l + 3) + 1):
        for j in range(1, k - 1):
            idx.add((j, k))
    return tuple(u_cup(j, k, n) for j, k in sorted(idx))


def one_cup_index(l: int, n: int) -> tuple[tuple[int, int], ...]:
    """The (j,k) index list matching one_cup_basis ordering."""
    idx = {(j, j + 1) for j in range(1, n)}
    for k in range(3, min(n, l + 3) + 1):
        for j in range(1, k - 1):
            idx.add((j, k))
    return tuple(sorted(idx))


def brauer_basis(n: int, m: int) -> list[PairPartition]:
    """All pair partitions of n top and m bottom points (small sizes only)."""
    pts = list(range(1, n + 1)) + list(range(-m, 0))

    def rec(rem):
        if not rem:
            yield []
            return
        a = rem[0]
        for i in range(1, len(rem)):
            b = rem[i]
            rest = rem[1:i] + rem[i + 1:]
            for tail in rec(rest):
                yield [(a, b)] + tail

    return [PairPartition(n, m, ps) for ps in rec(pts)]
