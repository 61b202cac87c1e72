"""Sparse exact arithmetic for the rational functions of the smoothness test.

Polynomials live in three variables b0, b1, b2 with integer coefficients,
stored as maps from exponent triples to coefficients.  A RationalNF is a
polynomial numerator over a multiset of integer linear forms (one per
denominator factor), kept fully cancelled: no denominator form divides the
numerator.  Distinct forms are non-associate primes in Z[b0,b1,b2], so this
normal form is unique; equality is nevertheless decided by exact
cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

ZERO_EXP = (0, 0, 0)


def p_const(c):
    return {ZERO_EXP: c} if c else {}

def p_is_zero(p):
    return not p


def p_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def p_neg(a):
    return {e: -c for e, c in a.items()}


def p_scale(a, k):
    if k == 0:
        return {}
    return {e: c * k for e, c in a.items()}


def p_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def form_poly(form):
    """The linear form c0*b0 + c1*b1 + c2*b2 as a polynomial."""
    p = {}
    for i, c in enumerate(form):
        if c:
            e = [0, 0, 0]
            e[i] = 1
            p[tuple(e)] = c
    return p


def p_mul_form(a, form):
    out = {}
    for e, c in a.items():
        for i, k in enumerate(form):
            if k:
                e2 = list(e)
                e2[i] += 1
                e2 = tuple(e2)
                s = out.get(e2, 0) + c * k
                if s:
                    out[e2] = s
                else:
                    out.pop(e2, None)
    return out


def p_div_form(a, form):
    """Exact quotient a / form, or None when the form does not divide a.

    Linear forms coming from real roots are primitive, so an exact rational
    quotient is automatically integral.
    """
    if not a:
        return {}
    pivot = None
    for i, c in enumerate(form):
        if c in (1, -1):
            pivot = i
            break
    if pivot is None:
        pivot = next(i for i, c in enumerate(form) if c)
    cp = form[pivot]
    rest = [(i, c) for i, c in enumerate(form) if c and i != pivot]
    work = {e: Fraction(c) for e, c in a.items()}
    quot = {}
    while True:
        # reducing degree m can create degree m-1 terms, so rescan each round
        m = max((e[pivot] for e, c in work.items() if c), default=0)
        if m == 0:
            break
        for e in [e for e, c in work.items() if e[pivot] == m and c]:
            c = work.pop(e)
            qe = list(e)
            qe[pivot] -= 1
            qe = tuple(qe)
            qc = c / cp
            quot[qe] = quot.get(qe, 0) + qc
            # subtract qc * b^qe * (form - cp*b_pivot)
            for i, k in rest:
                e2 = list(qe)
                e2[i] += 1
                e2 = tuple(e2)
                work[e2] = work.get(e2, 0) - qc * k
    if any(work.values()):
        return None
    out = {}
    for e, c in quot.items():
        if c:
            assert c.denominator == 1, "non-integral quotient by primitive form"
            out[e] = int(c)
    return out


def _term_key(e):
    return (e[0] + e[1] + e[2], e)


def p_str(p, names=("b0", "b1", "b2")):
    if not p:
        return "0"
    parts = []
    for e in sorted(p, key=_term_key, reverse=True):
        c = p[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append("%s^%d" % (name, k))
        body = "*".join(factors)
        if body:
            if c == 1:
                term = body
            elif c == -1:
                term = "-" + body
            else:
                term = "%d*%s" % (c, body)
        else:
            term = str(c)
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


class RationalNF:
    """Numerator polynomial over a multiset of positive linear forms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(), normalize=True):
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def zero():
        return RationalNF({}, (), normalize=False)

    @staticmethod
    def integer(c):
        return RationalNF(p_const(c), (), normalize=False)

    @staticmethod
    def reciprocal(form):
        """1/form, with the sign pulled into the numerator so the stored
        form is a positive root."""
        form, sign = _positive_form(form)
        return RationalNF(p_const(sign), (form,), normalize=False)

    def is_zero(self):
        return p_is_zero(self.num)

    def __neg__(self):
        return RationalNF(p_neg(self.num), self.den, normalize=False)

    def __add__(self, other):
        den = _multiset_union(self.den, other.den)
        a = self.num
        for f in _multiset_diff(den, self.den):
            a = p_mul_form(a, f)
        b = other.num
        for f in _multiset_diff(den, other.den):
            b = p_mul_form(b, f)
        return RationalNF(p_add(a, b), den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalNF(
            p_mul(self.num, other.num),
            tuple(sorted(self.den + other.den)),
        )

    def divided_by_form(self, form):
        form, sign = _positive_form(form)
        return RationalNF(
            p_scale(self.num, sign), tuple(sorted(self.den + (form,)))
        )

    def __eq__(self, other):
        if not isinstance(other, RationalNF):
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        a = self.num
        for f in _multiset_diff(other.den, self.den):
            a = p_mul_form(a, f)
        b = other.num
        for f in _multiset_diff(self.den, other.den):
            b = p_mul_form(b, f)
        return a == b

    def __hash__(self):
        raise TypeError("RationalNF is unhashable")

    def substituted(self, images):
        """Apply a linear change of variables b_i -> images[i] (linear forms).

        Denominator factors map to signed forms; signs move to the numerator.
        """
        num = {}
        for e, c in self.num.items():
            term = p_const(c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = p_mul_form(term, images[i])
            num = p_add(num, term)
        sign = 1
        den = []
        for f in self.den:
            img = tuple(
                sum(f[i] * images[i][j] for i in range(3)) for j in range(3)
            )
            img, s = _positive_form(img)
            sign *= s
            den.append(img)
        return RationalNF(p_scale(num, sign), tuple(sorted(den)))

    def __str__(self):
        if not self.den:
            return p_str(self.num)
        dens = "".join(
            "(%s)" % p_str(form_poly(f)) for f in sorted(self.den)
        )
        return "(%s) / %s" % (p_str(self.num), dens)

    __repr__ = __str__


def _positive_form(form):
    if all(c >= 0 for c in form) and any(form):
        return tuple(form), 1
    if all(c <= 0 for c in form) and any(form):
        return tuple(-c for c in form), -1
    raise ValueError("mixed-sign linear form %r is not a real root" % (form,))


def _multiset_union(a, b):
    out = {}
    for f in set(a) | set(b):
        out[f] = max(a.count(f), b.count(f))
    return tuple(sorted(f for f, n in out.items() for _ in range(n)))


def _multiset_diff(a, b):
    out = list(a)
    for f in b:
        out.remove(f)
    return tuple(out)


def _normalize(num, den):
    if p_is_zero(num):
        return {}, ()
    den = list(den)
    changed = True
    while changed:
        changed = False
        for f in sorted(set(den)):
            q = p_div_form(num, f)
            if q is not None:
                num = q
                den.remove(f)
                changed = True
    return num, tuple(sorted(den))
