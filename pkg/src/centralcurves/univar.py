"""Exact univariate real-root machinery.

Sturm sequences over primitive integer remainder chains, root counting on
half-open intervals (lo, hi] with infinite endpoints, root isolation with
exact reporting of rational roots, squarefree parts, Sylvester resultants
over multivariate coefficients, and the tangent-line count of a real binary
form.

Rational roots are detected without integer factorization: a rational root
of a primitive integer polynomial has denominator dividing the leading
coefficient L, so an isolating interval refined below width 1/(2L) contains
at most one candidate multiple of 1/L, which is then tested exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError
from .mpoly import MPoly, det_bareiss

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UPoly:
    """Dense univariate polynomial over Q, coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly instances are immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        if self.is_zero:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other):
        if other.is_zero:
            raise InputError("division by zero polynomial")
        rem = list(self.coeffs)
        dn = other.degree()
        lc = other.leading()
        quot = [_ZERO] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and rem:
            k = len(rem) - 1 - dn
            factor = rem[-1] / lc
            quot[k] = factor
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return UPoly(quot), UPoly(rem)

    def rem(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero:
            return self
        lc = self.leading()
        return self if lc == 1 else UPoly([c / lc for c in self.coeffs])

    def content_scaled(self):
        """Scale by a positive rational to integer coprime coefficients;
        the sign pattern is preserved (safe inside Sturm chains)."""
        if self.is_zero:
            return self
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        scale = Fraction(den, num)
        return UPoly([c * scale for c in self.coeffs])

    def primitive(self):
        """Integer coprime coefficients, positive leading coefficient."""
        if self.is_zero:
            return self
        scaled = self.content_scaled()
        return -scaled if scaled.leading() < 0 else scaled

    def shift_pow(self, k):
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UPoly((_ZERO,) * k + self.coeffs)


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm with primitive normalization."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero:
        a, b = b, a.rem(b).primitive()
    return a.monic()


def squarefree_part(p):
    """p / gcd(p, p'), made monic."""
    if p.is_zero:
        raise InputError("zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return p.monic()
    return p.divmod(g)[0].monic()


# -- Sturm chains ----------------------------------------------------------


def sturm_chain(p):
    """Signed remainder chain of (p, p'), content-normalized per step.

    Content removal uses a positive scale only: flipping a sign anywhere
    would corrupt the variation counts.
    """
    chain = [p.content_scaled()]
    d = p.derivative()
    if not d.is_zero:
        chain.append(d.content_scaled())
        while True:
            r = chain[-2].rem(chain[-1])
            if r.is_zero:
                break
            chain.append((-r).content_scaled())
    return chain


def _sign(x):
    return (x > 0) - (x < 0)


def _sign_at(poly, x):
    # x is a Fraction, or None meaning -infinity, or the string "+inf".
    if poly.is_zero:
        return 0
    if x is None:
        return _sign(poly.leading()) * (-1 if poly.degree() % 2 else 1)
    if x == "+inf":
        return _sign(poly.leading())
    return _sign(poly.evaluate(x))


def _variations(chain, x):
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(p, lo=None, hi=None):
    """Number of distinct real roots of p in (lo, hi].

    `lo=None` means -infinity and `hi=None` means +infinity.  Multiple
    roots are counted once (the chain is built on the squarefree part).
    """
    if p.is_zero:
        raise InputError("cannot count roots of the zero polynomial")
    if p.degree() == 0:
        return 0
    if lo is not None and hi is not None and not Fraction(lo) < Fraction(hi):
        raise InputError("need lo < hi")
    s = squarefree_part(p)
    chain = sturm_chain(s)
    at_lo = None if lo is None else Fraction(lo)
    at_hi = "+inf" if hi is None else Fraction(hi)
    return _variations(chain, at_lo) - _variations(chain, at_hi)


def _count_open(chain, s, lo, hi):
    # Distinct roots of squarefree s strictly between lo and hi; tolerates
    # roots at either endpoint.
    count = _variations(chain, lo) - _variations(chain, hi)
    if s.evaluate(hi) == 0:
        count -= 1
    return count


def root_bound(p):
    """Cauchy bound: every real root lies in (-B, B)."""
    lc = abs(p.leading())
    b = _ONE + max(abs(c) for c in p.coeffs) / lc
    return b


# -- root isolation ----------------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    """One real root: exact rational value, or an open interval (lo, hi)
    containing exactly one root."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    def midpoint(self):
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2


@dataclass(frozen=True)
class RootIsolation:
    """All real roots of a polynomial, pairwise separated."""

    intervals: tuple[RootInterval, ...]

    def count(self):
        return len(self.intervals)

    def rational_roots(self):
        return [r.exact for r in self.intervals if r.exact is not None]


def _refine_once(chain, s, lo, hi):
    """Halve an isolating interval of s; returns (lo, hi) or an exact root."""
    mid = (lo + hi) / 2
    if s.evaluate(mid) == 0:
        return mid
    if _count_open(chain, s, lo, mid) == 1:
        return lo, mid
    return mid, hi


def isolate_roots(p):
    """Isolate all real roots of p; rational roots are reported exactly."""
    if p.is_zero:
        raise InputError("cannot isolate roots of the zero polynomial")
    if p.degree() == 0:
        return RootIsolation(())
    s = squarefree_part(p).primitive()
    chain = sturm_chain(s)
    big = root_bound(s)
    denom_bound = s.leading()  # integer after primitive()
    results = []

    def emit_exact(value):
        results.append(RootInterval(value, value, value))

    def search(lo, hi):
        count = _count_open(chain, s, lo, hi)
        if count == 0:
            return
        mid = (lo + hi) / 2
        if s.evaluate(mid) == 0:
            emit_exact(mid)
            count -= 1
        if count == 0:
            return
        if count == 1 and s.evaluate(mid) != 0:
            side = (lo, mid) if _count_open(chain, s, lo, mid) == 1 else (mid, hi)
            resolve(*side)
            return
        search(lo, mid)
        search(mid, hi)

    def resolve(lo, hi):
        # Shrink until the single candidate rational m/L can be tested.
        scale = int(denom_bound)
        width_goal = Fraction(1, 2 * scale)
        while hi - lo > width_goal:
            step = _refine_once(chain, s, lo, hi)
            if isinstance(step, Fraction):
                emit_exact(step)
                return
            lo, hi = step
        lo_scaled = lo * scale
        m = lo_scaled.numerator // lo_scaled.denominator + 1
        candidate = Fraction(m, scale)
        if lo < candidate < hi and s.evaluate(candidate) == 0:
            emit_exact(candidate)
        else:
            results.append(RootInterval(lo, hi, None))

    search(-big, big)
    results.sort(key=lambda r: r.midpoint())
    return RootIsolation(tuple(results))


def refine_interval(p, interval, times=1):
    """Bisect an isolating interval of p `times` times (on demand)."""
    if interval.exact is not None:
        return interval
    s = squarefree_part(p).primitive()
    chain = sturm_chain(s)
    lo, hi = interval.lo, interval.hi
    for _ in range(times):
        step = _refine_once(chain, s, lo, hi)
        if isinstance(step, Fraction):
            return RootInterval(step, step, step)
        lo, hi = step
    return RootInterval(lo, hi, None)


# -- bridges to the multivariate world ---------------------------------------


def upoly_from_mpoly(p, var=None):
    """Convert an MPoly using at most one variable to a UPoly."""
    if p.is_zero:
        return UPoly.zero()
    if var is None:
        used = [v for i, v in enumerate(p.vars) if any(e[i] for e in p.terms)]
        if len(used) > 1:
            raise InputError(f"polynomial is not univariate: uses {used}")
        var = used[0] if used else (p.vars[0] if p.vars else None)
    if var is None:
        return UPoly((p.constant_value(),))
    idx = p.vars.index(var)
    coeffs = [_ZERO] * (p.degree_in(var) + 1)
    for exp, coeff in p.terms.items():
        if any(e and i != idx for i, e in enumerate(exp)):
            raise InputError("polynomial is not univariate")
        coeffs[exp[idx]] += coeff
    return UPoly(coeffs)


def mpoly_coeffs_in(p, var):
    """Dense coefficient list of p seen as a polynomial in `var`, low to
    high; entries are MPolys in the full variable tuple."""
    idx = p.vars.index(var)
    degree = p.degree_in(var)
    buckets = [dict() for _ in range(degree + 1)]
    for exp, coeff in p.terms.items():
        reduced = exp[:idx] + (0,) + exp[idx + 1 :]
        buckets[exp[idx]][reduced] = coeff
    return [MPoly(p.vars, b) for b in buckets]


def resultant(p, q, var):
    """Sylvester resultant in `var`, rows of the first argument on top.

    The sign is pinned by that row convention; fixtures compare exactly
    against it.
    """
    from .mpoly import align_all

    p, q = align_all([p, q])
    if p.is_zero or q.is_zero:
        return MPoly.zero(p.vars)
    if p.degree_in(var) < 1 and q.degree_in(var) < 1:
        raise InputError("resultant needs positive degree in the variable")
    pc = mpoly_coeffs_in(p, var)
    qc = mpoly_coeffs_in(q, var)
    m = len(pc) - 1
    n = len(qc) - 1
    size = m + n
    zero = MPoly.zero(p.vars)
    rows = []
    for shift in range(n):
        row = [zero] * size
        for i, c in enumerate(reversed(pc)):
            row[shift + i] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for i, c in enumerate(reversed(qc)):
            row[shift + i] = c
        rows.append(row)
    return det_bareiss(rows)


def discriminant(p, var):
    """Resultant of p and its derivative in var (no leading-coeff scaling)."""
    return resultant(p, p.partial_derivative(var), var)


# -- binary forms -------------------------------------------------------------


def binary_form_lines(form):
    """Count the distinct and the real linear factors of a real binary form.

    The form must be a nonzero homogeneous MPoly in exactly two variables.
    Dehomogenizing at first-variable = 1 gives a univariate polynomial whose
    distinct (resp. real) roots are the lines other than first-var = 0; that
    last line contributes when it divides the form.
    """
    if form.is_zero:
        raise InputError("zero form")
    if len(form.vars) != 2:
        raise InputError("binary form must live in exactly two variables")
    degrees = {sum(exp) for exp in form.terms}
    if len(degrees) != 1:
        raise InputError("form is not homogeneous")
    k = degrees.pop()
    if k < 1:
        raise InputError("form must have degree at least 1")
    first = form.vars[0]
    g = upoly_from_mpoly(form.subs({first: 1}))
    # x divides the form exactly when the dehomogenization drops degree.
    extra_line = 1 if g.degree() < k else 0
    sf = squarefree_part(g) if g.degree() >= 1 else None
    if sf is None:
        distinct = extra_line
        real = extra_line
    else:
        distinct = sf.degree() + extra_line
        real = sturm_count(sf) + extra_line
    return distinct, real


def interval_eval(p, lo, hi):
    """Exact range enclosure of p over [lo, hi] by interval Horner."""
    lo, hi = Fraction(lo), Fraction(hi)
    alo, ahi = _ZERO, _ZERO
    for c in reversed(p.coeffs):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi
