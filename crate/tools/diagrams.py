"""Combinatorial link-diagram toolkit used to generate the bundled PD tables.

A tangle is a planar 4-valent graph fragment with four boundary ports
(NW, NE, SE, SW).  Each crossing has four slots in counterclockwise
order; slots 0 and 2 always carry the under strand.  Arcs form a perfect
matching on nodes (= crossing slots and boundary ports).

The two mirror-image crossing types differ by which diagonal carries the
under strand:
  kind 'a': slot0=SW, slot1=SE, slot2=NE, slot3=NW  (under runs SW-NE)
  kind 'b': slot0=SE, slot1=NE, slot2=NW, slot3=SW  (under runs SE-NW)
"""

import itertools
from fractions import Fraction

_fresh = itertools.count()


def port():
    return ('p', next(_fresh))


class Tangle:
    def __init__(self, ncross, match, ports, loops=0):
        self.ncross = ncross
        self.match = match          # node -> node perfect matching (arcs)
        self.ports = ports          # [nw, ne, se, sw]
        self.loops = loops          # closed crossing-free circles

    def copy(self):
        return Tangle(self.ncross, dict(self.match), list(self.ports), self.loops)

    def shifted(self, dc):
        f = lambda n: ('c', n[1] + dc, n[2]) if n[0] == 'c' else n
        return Tangle(self.ncross,
                      {f(k): f(v) for k, v in self.match.items()},
                      [f(p) for p in self.ports], self.loops)


def zero_tangle():
    nw, ne, se, sw = port(), port(), port(), port()
    return Tangle(0, {nw: ne, ne: nw, sw: se, se: sw}, [nw, ne, se, sw])


def inf_tangle():
    nw, ne, se, sw = port(), port(), port(), port()
    return Tangle(0, {nw: sw, sw: nw, ne: se, se: ne}, [nw, ne, se, sw])


def crossing_tangle(kind):
    nw, ne, se, sw = port(), port(), port(), port()
    c = lambda s: ('c', 0, s)
    if kind == 'a':
        pairs = [(sw, c(0)), (se, c(1)), (ne, c(2)), (nw, c(3))]
    else:
        pairs = [(se, c(0)), (ne, c(1)), (nw, c(2)), (sw, c(3))]
    match = {}
    for u, v in pairs:
        match[u] = v
        match[v] = u
    return Tangle(1, match, [nw, ne, se, sw])


def _glue(t, p, q):
    """Connect ports p and q of tangle t, removing both from the matching."""
    x = t.match.pop(p)
    if x == q:
        del t.match[q]
        t.loops += 1
        return
    y = t.match.pop(q)
    del t.match[x]
    del t.match[y]
    t.match[x] = y
    t.match[y] = x


def tangle_sum(t1, t2):
    """Horizontal sum: t1 left of t2; glue t1.NE-t2.NW and t1.SE-t2.SW."""
    t2 = t2.shifted(t1.ncross)
    t = Tangle(t1.ncross + t2.ncross, {**t1.match, **t2.match},
               [t1.ports[0], t2.ports[1], t2.ports[2], t1.ports[3]],
               t1.loops + t2.loops)
    _glue(t, t1.ports[1], t2.ports[0])
    _glue(t, t1.ports[2], t2.ports[3])
    return t


def tangle_mul(t1, t2):
    """Vertical stack: t1 above t2; glue t1.SW-t2.NW and t1.SE-t2.NE."""
    t2 = t2.shifted(t1.ncross)
    t = Tangle(t1.ncross + t2.ncross, {**t1.match, **t2.match},
               [t1.ports[0], t1.ports[1], t2.ports[2], t2.ports[3]],
               t1.loops + t2.loops)
    _glue(t, t1.ports[3], t2.ports[0])
    _glue(t, t1.ports[2], t2.ports[1])
    return t


def htwists(n, pos='a', neg='b'):
    """|n| horizontal twist crossings in a row; sign picks the mirror."""
    t = zero_tangle()
    kind = pos if n >= 0 else neg
    for _ in range(abs(n)):
        t = tangle_sum(t, crossing_tangle(kind))
    return t


def vtwists(n, pos='a', neg='b'):
    t = inf_tangle()
    kind = pos if n >= 0 else neg
    for _ in range(abs(n)):
        t = tangle_mul(t, crossing_tangle(kind))
    return t


def rational_tangle(vec):
    """Conway twist vector [a1, a2, ..., an]: the last group is horizontal,
    groups alternate horizontal/vertical going backwards.  Fraction
    [a1..an] -> an + 1/(a(n-1) + 1/(...))."""
    n = len(vec)
    t = None
    for i, a in enumerate(vec):
        horizontal = (n - 1 - i) % 2 == 0
        piece = htwists(a) if horizontal else vtwists(a)
        if t is None:
            t = piece
        elif horizontal:
            t = tangle_sum(t, piece)
        else:
            t = tangle_mul(t, piece)
    return t


def cf_fraction(vec):
    f = Fraction(vec[0])
    for a in vec[1:]:
        f = a + 1 / f
    return f


def numerator_closure(t):
    """Close NW-NE and SW-SE."""
    t = t.copy()
    _glue(t, t.ports[0], t.ports[1])
    _glue(t, t.ports[3], t.ports[2])
    return Diagram(t.ncross, t.match, t.loops)


def tangle_mirror(t):
    """Swap over/under at every crossing (slot relabel by -1 mod 4)."""
    f = lambda n: ('c', n[1], (n[2] - 1) % 4) if n[0] == 'c' else n
    return Tangle(t.ncross, {f(k): f(v) for k, v in t.match.items()},
                  [f(p) for p in t.ports], t.loops)


def vertical_slot(vec):
    """Rational tangle rotated into 'pretzel column' position: the slot
    tangle used by Conway's comma notation (integer n -> n vertical
    twists).  The mirror after rotation keeps slot handedness consistent
    with the integer-slot convention."""
    if len(vec) == 1:
        return vtwists(vec[0])
    t = tangle_mirror(rational_tangle(vec))
    nw, ne, se, sw = t.ports
    t = t.copy()
    t.ports = [ne, se, sw, nw]
    return t


def montesinos(slots):
    """Conway comma notation: each slot a twist vector."""
    t = None
    for vec in slots:
        piece = vertical_slot(vec)
        t = piece if t is None else tangle_sum(t, piece)
    return numerator_closure(t)


def pretzel(*ints):
    return montesinos([[n] for n in ints])


class Diagram:
    """Closed unoriented diagram: crossings + perfect matching on slots."""

    def __init__(self, ncross, match, loops=0):
        self.ncross = ncross
        self.match = match
        self.loops = loops

    def mirror(self):
        """Swap over/under everywhere: rotate each crossing's slot labels
        by one so the old over strand (slots 1,3) becomes slots 0,2."""
        f = lambda n: ('c', n[1], (n[2] - 1) % 4) if n[0] == 'c' else n
        return Diagram(self.ncross,
                       {f(k): f(v) for k, v in self.match.items()}, self.loops)


def splice(d1, d2, arc1=0, arc2=0, swap=False):
    """Connected sum: cut one arc in each diagram and cross-join the ends."""
    d2s = Diagram(d2.ncross, {}, d2.loops)
    f = lambda n: ('c', n[1] + d1.ncross, n[2])
    d2s.match = {f(k): f(v) for k, v in d2.match.items()}
    arcs1 = sorted((min(a, b), max(a, b)) for a, b in d1.match.items())[::2]
    arcs2 = sorted((min(a, b), max(a, b)) for a, b in d2s.match.items())[::2]
    u1, v1 = arcs1[arc1 % len(arcs1)]
    u2, v2 = arcs2[arc2 % len(arcs2)]
    match = {**d1.match, **d2s.match}
    del match[u1], match[v1], match[u2], match[v2]
    if swap:
        u2, v2 = v2, u2
    match[u1] = u2
    match[u2] = u1
    match[v1] = v2
    match[v2] = v1
    return Diagram(d1.ncross + d2.ncross, match, d1.loops + d2.loops)


def split_union(d1, d2):
    """Disjoint (split) union."""
    f = lambda n: ('c', n[1] + d1.ncross, n[2])
    match = dict(d1.match)
    match.update({f(k): f(v) for k, v in d2.match.items()})
    return Diagram(d1.ncross + d2.ncross, match, d1.loops + d2.loops)


def with_extra_circle(d):
    return Diagram(d.ncross, dict(d.match), d.loops + 1)


def braid_closure(strands, word):
    """Closure of a braid word (nonzero ints, |i| < strands).  Positive
    generator i: the strand at position i passes over strand i+1.  All
    strands run upward."""
    match = {}
    ncross = 0
    wires = [('b', p) for p in range(strands)]
    for letter in word:
        i = abs(letter) - 1
        assert 1 <= abs(letter) < strands
        c = ncross
        ncross += 1
        # Geometry: BL, BR, TR, TL corner slots; ccw order is BR,TR,TL,BL.
        # positive: under strand BR->TL: slots 0,2 = BR,TL; ccw from BR:
        #   BR=0, TR=1, TL=2, BL=3.
        # negative: under strand BL->TR: BL=0, BR=1, TR=2, TL=3.
        if letter > 0:
            br, tr, tl, bl = ('c', c, 0), ('c', c, 1), ('c', c, 2), ('c', c, 3)
        else:
            bl, br, tr, tl = ('c', c, 0), ('c', c, 1), ('c', c, 2), ('c', c, 3)
        for node, prev in ((bl, wires[i]), (br, wires[i + 1])):
            match[node] = prev
            match[prev] = node
        wires[i], wires[i + 1] = tl, tr
    loops = 0
    for p in range(strands):
        top, bot = wires[p], ('b', p)
        if top == bot:
            loops += 1
            continue
        # top is a dangling crossing slot; bot is a token matched to the
        # lowest crossing slot in this column.
        s = match.pop(bot)
        del match[s]
        match[top] = s
        match[s] = top
    d = Diagram(ncross, match, loops)
    d.braid_up = True
    return d


def components_of(diag):
    """Deterministic list of components; each is a list of (out_slot, in_slot)
    arc traversals in travel order.  For braid-built diagrams the travel
    direction is 'up'; otherwise the lowest slot starts as outgoing."""
    visited = set()
    comps = []
    slots = sorted(k for k in diag.match if k[0] == 'c')
    up = getattr(diag, 'braid_up', False)
    starts = [s for s in slots if s[2] in (2, 3)] if up else slots
    for start in starts:
        if start in visited:
            continue
        walk = []
        out = start
        while out not in visited:
            visited.add(out)
            inn = diag.match[out]
            visited.add(inn)
            walk.append((out, inn))
            out = ('c', inn[1], (inn[2] + 2) % 4)
        comps.append(walk)
    assert len(visited) == 4 * diag.ncross
    return comps


def oriented_pd(diag, flips=()):
    """Emit a normalized oriented PD code.

    Returns (pd, signs, ncomps): pd is a list of 4-tuples of 1-based edge
    labels, counterclockwise from the incoming under edge; labels run
    consecutively along each component.  flips reverses the orientation
    of the given component indices.
    """
    comps = components_of(diag)
    nc = diag.ncross
    role = [[None] * 4 for _ in range(nc)]
    label = 1
    for ci, walk in enumerate(comps):
        if ci in flips:
            walk = [(inn, out) for (out, inn) in reversed(walk)]
        for out, inn in walk:
            role[out[1]][out[2]] = ('out', label)
            role[inn[1]][inn[2]] = ('in', label)
            label += 1
    pd = []
    signs = []
    for c in range(nc):
        r = role[c]
        if r[0][0] == 'in':
            rot = 0
        else:
            assert r[2][0] == 'in', "under strand lacks an incoming end"
            rot = 2
        tup = tuple(r[(rot + k) % 4][1] for k in range(4))
        # over strand occupies rotated slots 1,3; positive crossing iff the
        # over strand comes in on the ccw-last position (position 3).
        signs.append(1 if r[(rot + 3) % 4][0] == 'in' else -1)
        pd.append(tup)
    return pd, signs, len(comps)


def crossing_components(diag):
    """Per crossing, the (under_component, over_component) indices."""
    comps = components_of(diag)
    slot_comp = {}
    for ci, walk in enumerate(comps):
        for out, inn in walk:
            slot_comp[out] = ci
            slot_comp[inn] = ci
    out = []
    for c in range(diag.ncross):
        out.append((slot_comp[('c', c, 0)], slot_comp[('c', c, 1)]))
    return out


# ---------------------------------------------------------------------------
# Kauffman bracket and derived certificates
# ---------------------------------------------------------------------------

class _DSU:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb
            return 1
        return 0


def bracket(diag):
    """Kauffman bracket as {A-exponent: coeff}, unnormalized
    (a single unknot contributes delta^0 = 1)."""
    n = diag.ncross
    idx = {}
    for c in range(n):
        for s in range(4):
            idx[('c', c, s)] = len(idx)
    arcs = []
    seen = set()
    for a, b in diag.match.items():
        if a in seen:
            continue
        seen.add(a)
        seen.add(b)
        arcs.append((idx[a], idx[b]))
    poly = {}
    for state in range(1 << n):
        dsu = _DSU(4 * n)
        merges = 0
        for (u, v) in arcs:
            merges += dsu.union(u, v)
        asm = 0
        for c in range(n):
            base = 4 * c
            if (state >> c) & 1 == 0:
                # A-smoothing: rotate under (slot0->slot2 direction) ccw:
                # join slots (0,1) and (2,3)
                asm += 1
                merges += dsu.union(base + 0, base + 1)
                merges += dsu.union(base + 2, base + 3)
            else:
                merges += dsu.union(base + 0, base + 3)
                merges += dsu.union(base + 1, base + 2)
        loops = (4 * n - merges) + diag.loops
        # contribution: A^(asm - (n-asm)) * delta^(loops-1), delta=-A^2-A^-2
        e = asm - (n - asm)
        coeffs = {0: 1}
        for _ in range(loops - 1):
            nxt = {}
            for k, v in coeffs.items():
                nxt[k + 2] = nxt.get(k + 2, 0) - v
                nxt[k - 2] = nxt.get(k - 2, 0) - v
            coeffs = nxt
        for k, v in coeffs.items():
            poly[k + e] = poly.get(k + e, 0) + v
    return {k: v for k, v in poly.items() if v != 0}


def bracket_span(poly):
    if not poly:
        return 0
    return max(poly) - min(poly)


def determinant(diag):
    """|bracket evaluated at a primitive 8th root of unity| = link
    determinant.  Exact arithmetic in Z[zeta_8] (A^4 = -1)."""
    poly = bracket(diag)
    z = [0, 0, 0, 0]
    for e, c in poly.items():
        q, r = divmod(e, 4)
        z[r] += c * (-1) ** (q % 2)
    # |x|^2 for x = sum z_r zeta^r, zeta = exp(i pi/4):
    # conj(zeta^r) = zeta^{-r} = (-1)*zeta^{4-r} pattern; compute via complex
    # embedding exactly: zeta = (s + s i) with s = sqrt(2)/2 -> work in
    # Q(sqrt2): x = (a + b*sqrt2)/2 + i(c + d*sqrt2)/2 form.  Simpler: compute
    # x*conj(x) symbolically in Z[zeta]: conj maps zeta -> zeta^7.
    def mul(u, v):
        out = [0] * 4
        for i2 in range(4):
            for j in range(4):
                k, r = divmod(i2 + j, 4)
                out[r] += u[i2] * v[j] * (-1) ** (k % 2)
        return out

    conj = [0] * 4
    # conj(zeta^r) = zeta^{8-r}: r=0->0; r->(8-r)%8 with zeta^4=-1
    conj[0] += z[0]
    for r in range(1, 4):
        # zeta^{8-r} = zeta^{4 + (4-r)} = -zeta^{4-r}
        conj[(4 - r) % 4] -= z[r]
    m = mul(z, conj)
    assert m[1] == 0 and m[2] == 0 and m[3] == 0, (poly, m)
    v = m[0]
    assert v >= 0
    import math
    r = math.isqrt(v)
    assert r * r == v, (v,)
    return r


def writhe(diag, flips=()):
    _, signs, _ = oriented_pd(diag, flips)
    return sum(signs)


def invariant_key(diag):
    """Orientation- and mirror-insensitive dedupe key."""
    comps = components_of(diag)
    k = len(comps)
    variants = []
    for d in (diag, diag.mirror()):
        b = bracket(d)
        for mask in range(1 << k):
            flips = tuple(i for i in range(k) if (mask >> i) & 1)
            w = writhe(d, flips)
            # normalized invariant: (-A)^{-3w} * bracket  -> shift exponents
            shifted = tuple(sorted((e - 3 * w, c * (-1) ** (3 * w % 2))
                                   for e, c in b.items()))
            variants.append(shifted)
    return (k + diag.loops, determinant(diag), min(variants))


def pd_string(pd):
    return "PD[" + ", ".join("X(%d,%d,%d,%d)" % t for t in pd) + "]"
