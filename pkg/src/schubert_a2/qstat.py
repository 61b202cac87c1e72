"""The Carrell-Peterson statistic q and the non-rationally-smooth locus.

For x <= w, n(w, x) counts the reflections r with r*x <= w, and
q(w, x) = n(w, x) - l(w).  Two independent routes are implemented:

* q_brute counts reflections directly by walking the three root strings
  through x inside the hull of w;
* q_structured evaluates the closed-form description: four base-case
  profiles, fixed values on the 0-, 1- and 2-shells by chamber parity and
  type, and the translation recursion q(t(a)w, x) = q(w, x) + 2 elsewhere.

For a non-spiral w the point x is non-rationally-smooth (nrs) in the
Schubert variety of w exactly when q(w, x) > 0; for spiral w the nrs test
is the existential scan over the upper interval.
"""

from __future__ import annotations

from typing import NamedTuple

from .alcove import (
    E,
    POSITIVE_ROOTS,
    SIMPLES,
    SpiralInputError,
    ascents,
    chamber_of,
    chamber_parity,
    descent_group,
    descents,
    element_from_center,
    is_spiral,
    is_twisted_spiral,
    length,
    orientation,
    pairing,
    translate_out_of_chamber,
    type_of,
)
from .bruhat import (
    hexagon,
    hull_of,
    interval,
    leq,
    shell_index,
    special_segment,
    string_step,
    trans,
)


class NotComparableError(ValueError):
    """x <= w was required but does not hold."""


_HEX_CACHE = {}


def hexagon_of(w):
    h = _HEX_CACHE.get(w)
    if h is None:
        h = hexagon(w)
        _HEX_CACHE[w] = h
    return h


def reflection_partners(w, x):
    """Centers y = r(x) inside the hull of w, per positive root direction.

    A reflection r = s_{d,k} carries x to the center y on the d-string
    through x with scaled pairings summing to 6k; those are exactly the
    centers of opposite orientation class mod 6 on the string.
    """
    h = hull_of(w)
    cx = x.center()
    out = []
    for d in POSITIVE_ROOTS:
        px = pairing(cx, d)
        for sign in (1, -1):
            cur = cx
            while True:
                cur = string_step(cur, d, sign)
                if not h.contains(cur):
                    break
                if (pairing(cur, d) + px) % 6 == 0:
                    out.append((d, cur))
    return out


def n_brute(w, x):
    """Number of reflections r with r*x <= w."""
    if not leq(x, w):
        raise NotComparableError("%s is not below %s" % (x, w))
    return len(reflection_partners(w, x))


def q_brute(w, x):
    return n_brute(w, x) - length(w)


def reflections_over(w, x):
    """Elements r*x <= w with r*x > x (one reflection step up inside w)."""
    lx = length(x)
    out = []
    for _, c in reflection_partners(w, x):
        y = element_from_center(c)
        if length(y) > lx:
            out.append(y)
    return out


def is_base_case(w):
    """Non-spiral w not obtained by translation into its chamber."""
    w2 = translate_out_of_chamber(w)
    return is_spiral(w2) or chamber_of(w2) != chamber_of(w)


def _orbit_centers(w, x):
    return {(x * u).center() for u in descent_group(w, "right")}


def _segments(hx):
    return [special_segment(hx, e) for e in ((1, 2), (4, 5))]


def _orbit_meets_special(w, hx, x):
    orbit = _orbit_centers(w, x)
    for seg in _segments(hx):
        if orbit.intersection(seg):
            return True
    return False


def _special_edge_direction(hx):
    a = hx.vertices[1].center()
    b = hx.vertices[2].center()
    from .bruhat import string_direction

    return string_direction(a, b)


def _outer_shell_value(w, hx, x, k):
    """Value of q on the 0-, 1- or 2-shell, by chamber parity and type."""
    t = type_of(w)
    if hx.parity == "even":
        if t == 1:
            return 0
        return 0 if k <= 1 else 1
    if t == 1 or k <= 1:
        return 1 if _orbit_meets_special(w, hx, x) else 0
    # type 2, odd chamber, 2-shell: 2 on the 2-shell edges two strings in
    # from a special edge, 1 elsewhere.
    d = _special_edge_direction(hx)
    lo, hi = hull_of(w).bounds[POSITIVE_ROOTS.index(d)]
    tx = trans(x.center(), d)
    return 2 if tx in (lo + 6, hi - 6) else 1


# ---------------------------------------------------------------------------
# Base cases.  In any chamber the alcove of a base-case element shares an
# edge (type 1) or a vertex (type 2) with a fundamental strip.

def _solve_lines(d1, t1, d2, t2):
    """Tripled coordinates of the point with trans(d1) = t1, trans(d2) = t2."""
    coeff = {(1, 0): (1, 2), (0, 1): (2, 1), (1, 1): (1, -1)}
    (a, b), (c, d) = coeff[d1], coeff[d2]
    det = a * d - b * c
    x3 = 3 * (d * t1 - b * t2)
    y3 = 3 * (a * t2 - c * t1)
    assert x3 % det == 0 and y3 % det == 0
    return (x3 // det, y3 // det)


class _Base4Geometry(NamedTuple):
    lines: dict  # u-index -> (direction, trans value)
    red_ref3: tuple  # tripled coordinates of a red-triangle interior reference
    blue: dict  # (direction, value) -> list of segment centers (shell >= 2)


def _base4_geometry(w, hx):
    segs = _segments(hx)
    nonempty = [i for i, s in enumerate(segs) if s]
    assert len(nonempty) == 1, "base case 4 has one special segment"
    if nonempty[0] == 0:
        order = list(range(6))  # u_i = w_i (special edge is vertices 1-2)
    else:
        order = [0, 5, 4, 3, 2, 1]  # u_i = w_{6-i} (special edge is 4-5)
    from .bruhat import diagonal_direction

    lines = {}
    for ui, oi in enumerate(order):
        d = diagonal_direction(hx, oi)
        lines[ui] = (d, trans(hx.vertices[oi].center(), d))
    assert lines[0] == lines[3]
    assert lines[1][0] == lines[4][0] and lines[2][0] == lines[5][0]

    # Red triangle bounded by the lines of D0, D4, D5.
    tri = [lines[0], lines[4], lines[5]]
    corners = [
        _solve_lines(*tri[1], *tri[2]),
        _solve_lines(*tri[0], *tri[2]),
        _solve_lines(*tri[0], *tri[1]),
    ]
    ref3 = (
        sum(c[0] for c in corners),
        sum(c[1] for c in corners),
    )  # 3 * centroid * 3 = 9 * centroid; only the side signs matter
    h = hull_of(w)

    def segment_on(d, value):
        out = []
        for x in interval(w):
            c = x.center()
            if trans(c, d) == value and shell_index(h, x) >= 2:
                out.append(c)
        out.sort(key=lambda c: pairing(c, d))
        return out

    blue = {}
    for i, j in ((1, 4), (2, 5)):
        d = lines[i][0]
        a, b = sorted((lines[i][1], lines[j][1]))
        assert b - a == 9, "parallel diagonals are three strings apart"
        for v in (a + 3, a + 6):
            blue[(d, v)] = segment_on(d, v)
    return _Base4Geometry(lines, ref3, blue)


_BASE4_CACHE = {}


def _in_red_triangle(geom, c):
    tri = [geom.lines[0], geom.lines[4], geom.lines[5]]
    for d, t in tri:
        sx = trans(c, d) - t
        sref = trans(geom.red_ref3, d) - 9 * t
        if sref == 0:
            # the triangle degenerates to the common point of the three lines
            if sx != 0:
                return False
        elif sx != 0 and (sx > 0) != (sref > 0):
            return False
    return True


def _base4_interior_value(w, hx, x):
    geom = _BASE4_CACHE.get(w)
    if geom is None:
        geom = _base4_geometry(w, hx)
        _BASE4_CACHE[w] = geom
    c = x.center()
    if _in_red_triangle(geom, c):
        return 2
    for i in (1, 2):
        d, t = geom.lines[i]
        if trans(c, d) == t:
            return 1
    for (d, t), seg in geom.blue.items():
        if trans(c, d) == t:
            assert c in seg
            end = orientation(seg[0])
            assert orientation(seg[-1]) == end, "blue segment ends differ"
            return 2 if orientation(c) == end else 1
    raise AssertionError(
        "interior alcove %s of %s not in the red/green/blue partition" % (x, w)
    )


def _base_case_value(w, hx, x, k):
    t = type_of(w)
    n = length(w)
    if hx.parity == "even":
        if t == 1:
            # twisted spiral: rationally smooth everywhere
            return 0
        if n == 4:
            return 0
        return 0 if k <= 1 else 1
    if t == 1:
        if n == 4:
            return 0
        if k <= 2:
            return 1 if _orbit_meets_special(w, hx, x) else 0
        return 1
    if n == 5:
        return 0 if k <= 1 else 2
    if k <= 1:
        return 1 if _orbit_meets_special(w, hx, x) else 0
    return _base4_interior_value(w, hx, x)


def q_structured(w, x):
    """Closed-form q(w, x) for non-spiral w: base cases, outer shells, and
    the +2 translation recursion."""
    if is_spiral(w):
        raise SpiralInputError("q_structured needs a non-spiral element: %s" % (w,))
    if not leq(x, w):
        raise NotComparableError("%s is not below %s" % (x, w))
    return _q_structured(w, x)


def _q_structured(w, x):
    hx = hexagon_of(w)
    k = shell_index(hull_of(w), x)
    if is_base_case(w):
        return _base_case_value(w, hx, x, k)
    if k <= 2:
        return _outer_shell_value(w, hx, x, k)
    return _q_structured(translate_out_of_chamber(w), x) + 2


def q_value(w, x):
    """q(w, x) by the structured route off the strips, brute on them."""
    if is_spiral(w):
        return q_brute(w, x)
    return q_structured(w, x)


class QTable(NamedTuple):
    """All q-values over the interval of one owner, with provenance tags."""

    owner: object
    entries: dict  # x -> (q, tag)

    def q(self, x):
        return self.entries[x][0]

    def to_dict(self):
        from .alcove import format_word

        items = sorted(
            self.entries.items(), key=lambda kv: (length(kv[0]), format_word(kv[0]))
        )
        return {
            "owner": format_word(self.owner),
            "entries": [
                {"x": format_word(x), "q": q, "tag": tag} for x, (q, tag) in items
            ],
        }


def q_table(w):
    entries = {}
    if is_spiral(w):
        for x in interval(w):
            entries[x] = (q_brute(w, x), "brute")
        return QTable(w, entries)
    hx = hexagon_of(w)
    base = is_base_case(w)
    h = hull_of(w)
    for x in interval(w):
        k = shell_index(h, x)
        if base:
            entries[x] = (_base_case_value(w, hx, x, k), "base-case")
        elif k <= 2:
            entries[x] = (_outer_shell_value(w, hx, x, k), "outer-shell")
        else:
            entries[x] = (_q_structured(translate_out_of_chamber(w), x) + 2, "translation")
    return QTable(w, entries)


# ---------------------------------------------------------------------------
# The nrs locus.

def nrs(w, x):
    """Is x non-rationally-smooth in the Schubert variety of w?"""
    if not leq(x, w):
        raise NotComparableError("%s is not below %s" % (x, w))
    if not is_spiral(w):
        return q_structured(w, x) > 0
    return any(q_brute(w, y) > 0 for y in interval(w) if leq(x, y))


def nrs_set(w):
    """All x <= w that are nrs in the Schubert variety of w."""
    members = interval(w)
    positive = [y for y in members if q_value(w, y) > 0]
    if not is_spiral(w):
        return set(positive)
    return {x for x in members if any(leq(x, y) for y in positive)}


def bruhat_maximal(elements):
    """Maximal elements of a finite set under the Bruhat order."""
    elements = list(elements)
    return {
        x
        for x in elements
        if not any(y != x and leq(x, y) for y in elements)
    }


def is_rationally_smooth(w):
    """Whether the Schubert variety of w is rationally smooth everywhere."""
    n = length(w)
    if n <= 3:
        return True
    if is_spiral(w):
        return False
    if n == 4:
        return True  # both length-4 base-case families
    return is_twisted_spiral(w)


def maximal_nrs_generic(w):
    return bruhat_maximal(nrs_set(w))


def _special_endpoints_near_w(hx):
    """Special segment endpoints closest to the vertices adjacent to w."""
    out = []
    alcs = hx.edge(1)
    if len(alcs) >= 6:
        out.append(element_from_center(alcs[2]))  # two in from vertex 1
    alcs = hx.edge(4)
    if len(alcs) >= 6:
        out.append(element_from_center(alcs[-3]))  # two in from vertex 5
    return out


def _z_pair(w):
    """wstu and wsut for the unique right descent s and ascents t < u."""
    s = SIMPLES[next(iter(descents(w, "right")))]
    t, u = (SIMPLES[i] for i in sorted(ascents(w, "right")))
    return (w * s * t * u, w * s * u * t)


def _split_in_chamber(w, pair):
    ch = chamber_of(w)
    inside = [z for z in pair if not is_spiral(z) and chamber_of(z) == ch]
    outside = [z for z in pair if z not in inside]
    assert len(inside) == 1 and len(outside) == 1
    return inside[0], outside[0]


def _reflect_across_other_wall(w, hx, z2):
    """Mirror z2 across the chamber wall not bounding the strip containing it."""
    walls = hx.hyperplanes[:2]
    in_strip = [r for r in walls if pairing(z2.center(), r.root) in (1, 2)]
    assert len(in_strip) == 1
    other = walls[0] if walls[1] == in_strip[0] else walls[1]
    return other.element() * z2


def maximal_nrs(w):
    """The Bruhat-maximal nrs points below w.

    Closed form for non-spiral w of length at least 6 (the four cases by
    chamber parity and type, with base-case adjustments), the length-5
    exception for odd chambers, and the generic scan for spiral w.
    """
    if w == E:
        return set()
    if is_spiral(w):
        return maximal_nrs_generic(w)
    if is_rationally_smooth(w):
        return set()
    n = length(w)
    hx = hexagon_of(w)
    t = type_of(w)
    if n < 6:
        assert n == 5 and hx.parity == "odd" and t == 2
        return {translate_out_of_chamber(w)}
    if hx.parity == "even":
        if t == 1:
            return {translate_out_of_chamber(w)}
        pair = _z_pair(w)
        if is_base_case(w):
            return {_split_in_chamber(w, pair)[0]}
        return set(pair)
    ps = _special_endpoints_near_w(hx)
    if t == 1:
        return set(ps)
    pair = _z_pair(w)
    if is_base_case(w):
        z1, z2 = _split_in_chamber(w, pair)
        assert len(ps) == 1
        return {z1, _reflect_across_other_wall(w, hx, z2)} | set(ps)
    return set(pair) | set(ps)


def nrs_codimension(w):
    """Codimension of the nrs locus, or None when rationally smooth."""
    points = maximal_nrs(w)
    if not points:
        return None
    return length(w) - max(length(z) for z in points)


def shell_profile_consistent(w):
    """Optional consistency assertion for even-chamber owners.

    Away from the central triangle cut out by the three main diagonals, q
    should equal 2*(k//3) on the k-shell for a type 1 owner, with an extra
    +1 on shells k = 2 mod 3 for type 2.  Checked against the structured
    values; brute counting stays authoritative on any discrepancy.
    """
    from .bruhat import diagonal_direction

    if is_spiral(w) or chamber_parity(w) != "even":
        raise ValueError("even-chamber non-spiral owner required: %s" % (w,))
    hx = hexagon_of(w)
    lines = []
    for i in (0, 1, 2):
        d = diagonal_direction(hx, i)
        lines.append((d, trans(hx.vertices[i].center(), d)))
    corners = []
    for a in range(3):
        (d1, t1), (d2, t2) = lines[(a + 1) % 3], lines[(a + 2) % 3]
        corners.append(_solve_lines(d1, t1, d2, t2))
    ref9 = (sum(p[0] for p in corners), sum(p[1] for p in corners))

    def in_triangle(c):
        for d, t in lines:
            sx = trans(c, d) - t
            sr = trans(ref9, d) - 9 * t
            if sr == 0:
                if sx != 0:
                    return False
            elif sx != 0 and (sx > 0) != (sr > 0):
                return False
        return True

    t = type_of(w)
    h = hull_of(w)
    rw = descent_group(w, "right")
    tab = q_table(w)
    for x in tab.entries:
        if any(in_triangle((x * u).center()) for u in rw):
            continue
        k = shell_index(h, x)
        expect = 2 * (k // 3) + (1 if (t == 2 and k % 3 == 2) else 0)
        if tab.q(x) != expect:
            return False
    return True


def lookup_holds(w):
    """One-step reflection lookup detects nrs at every x <= w."""
    members = interval(w)
    qmap = {x: q_brute(w, x) for x in members}
    positive = {x for x in members if qmap[x] > 0}
    for x in members:
        truly_nrs = any(leq(x, y) for y in positive)
        witnessed = qmap[x] > 0 or any(
            y in positive for y in reflections_over(w, x)
        )
        if truly_nrs != witnessed:
            return False
    return True
