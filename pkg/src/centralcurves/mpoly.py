"""Sparse multivariate polynomials over Q with named variables.

A polynomial is a map from exponent tuples to nonzero rational coefficients
(`fractions.Fraction`), together with an ordered tuple of variable names;
exponent position i belongs to vars[i], and position 0 is the most
significant variable under every monomial order.  The zero polynomial has an
empty term map.

Values are immutable after construction and safe to share between threads.
Operands over different variable tuples combine by aligning both sides to
the sorted union of their names, so rings grown by adjoining fresh variables
(t, s, u, ...) compose without explicit coercions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import (
    ExactDivisionError,
    InputError,
    UnknownVariableError,
    UnsupportedSizeError,
)

# Exponents above this no longer fit a machine word; pow refuses them.
_WORD_MAX = 2**63

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _grevlex_key(exps):
    # Higher total degree wins; ties broken by reverse lexicographic
    # comparison on negated exponents read from the last variable.
    return (sum(exps),) + tuple(-exps[i] for i in range(len(exps) - 1, -1, -1))


class MonomialOrder:
    """Total, multiplicative, well-founded order on exponent tuples.

    Kinds: "lex", "grevlex", and "block" (lex between the two blocks split
    at index `block_split`, grevlex within each block).  Keys returned by
    `key` compare like the order: bigger key means bigger monomial.
    """

    __slots__ = ("kind", "block_split")

    def __init__(self, kind, block_split=0):
        if kind not in ("lex", "grevlex", "block"):
            raise InputError(f"unknown monomial order kind: {kind!r}")
        self.kind = kind
        self.block_split = block_split

    def key(self, exps):
        if self.kind == "grevlex":
            return _grevlex_key(exps)
        if self.kind == "lex":
            return exps
        k = self.block_split
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.block_split == other.block_split
        )

    def __hash__(self):
        return hash((self.kind, self.block_split))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', {self.block_split})"
        return f"MonomialOrder({self.kind!r})"


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(split):
    """Elimination order: variables before `split` are eliminated first."""
    return MonomialOrder("block", split)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """Return a/b as an exponent tuple, or None if not divisible."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        return None
    return q


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        vars = tuple(vars)
        clean = {}
        for exp, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exp = tuple(exp)
            if len(exp) != len(vars):
                raise InputError(
                    f"exponent {exp} does not match variable count {len(vars)}"
                )
            clean[exp] = coeff
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly instances are immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def constant(cls, value, vars=()):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(value)})

    @classmethod
    def variable(cls, name, vars):
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariableError(f"unknown variable {name!r}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exp: _ONE})

    # -- basic queries ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self):
        if self.is_zero:
            return _ZERO
        if not self.is_constant():
            raise InputError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if self.is_zero:
            raise InputError("zero polynomial has no degree")
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, name):
        idx = self._index(name)
        if self.is_zero:
            return -1
        return max(exp[idx] for exp in self.terms)

    def leading(self, order=GREVLEX):
        """Return (exponent, coefficient) of the leading term."""
        if self.is_zero:
            raise InputError("zero polynomial has no leading term")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def sorted_terms(self, order=GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def _index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    # -- ring structure --------------------------------------------------

    def extend(self, vars):
        """Reinterpret in a ring whose variables include all of self's."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        positions = []
        for v in self.vars:
            if v not in vars:
                raise UnknownVariableError(
                    f"cannot extend: variable {v!r} missing from target ring"
                )
            positions.append(vars.index(v))
        n = len(vars)
        terms = {}
        for exp, coeff in self.terms.items():
            new = [0] * n
            for pos, e in zip(positions, exp):
                new[pos] = e
            terms[tuple(new)] = coeff
        return MPoly(vars, terms)

    def shrink_vars(self, keep=()):
        """Drop variables that occur in no term (those in `keep` stay)."""
        used = set(keep)
        for i, v in enumerate(self.vars):
            if any(exp[i] for exp in self.terms):
                used.add(v)
        return self.drop_to(tuple(v for v in self.vars if v in used))

    def drop_to(self, vars):
        """Restrict to a smaller variable tuple; absent variables must not
        occur in any term."""
        vars = tuple(vars)
        keep = [self.vars.index(v) for v in vars]
        dropped = [i for i in range(len(self.vars)) if self.vars[i] not in vars]
        terms = {}
        for exp, coeff in self.terms.items():
            if any(exp[i] != 0 for i in dropped):
                raise InputError(
                    f"term uses a variable outside {vars}; cannot restrict"
                )
            terms[tuple(exp[i] for i in keep)] = coeff
        return MPoly(vars, terms)

    def _aligned(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.vars)
        if self.vars == other.vars:
            return self, other
        union = tuple(sorted(set(self.vars) | set(other.vars)))
        return self.extend(union), other.extend(union)

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            terms[exp] = terms.get(exp, _ZERO) + coeff
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            terms[exp] = terms.get(exp, _ZERO) - coeff
        return MPoly(a.vars, terms)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        a, b = self._aligned(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = monomial_mul(e1, e2)
                acc = terms.get(exp)
                terms[exp] = c1 * c2 if acc is None else acc + c1 * c2
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InputError("exponent must be a non-negative integer")
        if n >= _WORD_MAX:
            raise UnsupportedSizeError(f"exponent {n} exceeds supported size")
        result = MPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        from .parsing import format_poly

        return f"MPoly({format_poly(self)!r}, vars={self.vars})"

    # -- calculus and geometry helpers ------------------------------------

    def partial_derivative(self, name):
        idx = self._index(name)
        terms = {}
        for exp, coeff in self.terms.items():
            e = exp[idx]
            if e == 0:
                continue
            new = exp[:idx] + (e - 1,) + exp[idx + 1 :]
            terms[new] = terms.get(new, _ZERO) + coeff * e
        return MPoly(self.vars, terms)

    def evaluate(self, point):
        point = [Fraction(c) for c in point]
        if len(point) != len(self.vars):
            raise InputError("point length does not match variable count")
        total = _ZERO
        for exp, coeff in self.terms.items():
            value = coeff
            for c, e in zip(point, exp):
                if e:
                    value *= c**e
            total += value
        return total

    def subs(self, mapping):
        """Substitute variables by polynomials or constants.

        Unmapped variables stay themselves; the result lives in the sorted
        union of the remaining and the substituted-in variables.
        """
        for name in mapping:
            self._index(name)
        target = set()
        images = {}
        for name in self.vars:
            if name in mapping:
                img = mapping[name]
                if isinstance(img, (int, Fraction)):
                    img = MPoly.constant(img)
                images[name] = img
                target.update(img.vars)
            else:
                target.add(name)
        vars = tuple(sorted(target))
        for name, img in images.items():
            images[name] = img.extend(vars)
        result = MPoly.zero(vars)
        powers = {name: {0: MPoly.constant(1, vars)} for name in self.vars}

        def power_of(name, e):
            cache = powers[name]
            if e not in cache:
                base = images.get(name)
                if base is None:
                    base = MPoly.variable(name, vars)
                cache[e] = base**e
            return cache[e]

        for exp, coeff in self.terms.items():
            term = MPoly.constant(coeff, vars)
            for name, e in zip(self.vars, exp):
                if e:
                    term = term * power_of(name, e)
            result = result + term
        return result

    def translate(self, point):
        """Return p(x + a), expanded exactly."""
        point = [Fraction(c) for c in point]
        if len(point) != len(self.vars):
            raise InputError("point length does not match variable count")
        mapping = {}
        for name, a in zip(self.vars, point):
            if a != 0:
                mapping[name] = MPoly.variable(name, self.vars) + a
        if not mapping:
            return self
        return self.subs(mapping).extend(self.vars)

    def homogeneous_components(self):
        """Map total degree -> sum of the terms of that degree."""
        parts = {}
        for exp, coeff in self.terms.items():
            parts.setdefault(sum(exp), {})[exp] = coeff
        return {d: MPoly(self.vars, t) for d, t in sorted(parts.items())}

    def lowest_form(self):
        """Return (k, form): the minimal total degree and its term sum."""
        if self.is_zero:
            raise InputError("zero polynomial has no lowest form")
        k = min(sum(exp) for exp in self.terms)
        terms = {e: c for e, c in self.terms.items() if sum(e) == k}
        return k, MPoly(self.vars, terms)

    # -- division ----------------------------------------------------------

    def div_exact(self, divisor, order=GREVLEX):
        """Exact division; raises ExactDivisionError on a nonzero remainder."""
        a, d = self._aligned(divisor)
        if d.is_zero:
            raise ExactDivisionError("division by zero polynomial")
        dl, dc = d.leading(order)
        quotient = {}
        rem = dict(a.terms)
        while rem:
            exp = max(rem, key=order.key)
            q = monomial_div(exp, dl)
            if q is None:
                raise ExactDivisionError("polynomials do not divide exactly")
            coeff = rem[exp] / dc
            quotient[q] = quotient.get(q, _ZERO) + coeff
            for de, dcoef in d.terms.items():
                target = monomial_mul(q, de)
                new = rem.get(target, _ZERO) - coeff * dcoef
                if new == 0:
                    rem.pop(target, None)
                else:
                    rem[target] = new
        return MPoly(a.vars, quotient)

    # -- normalization -----------------------------------------------------

    def monic(self, order=GREVLEX):
        if self.is_zero:
            return self
        _, lc = self.leading(order)
        if lc == 1:
            return self
        return MPoly(self.vars, {e: c / lc for e, c in self.terms.items()})

    def primitive(self, order=GREVLEX):
        """Scale by a positive rational to integer coprime coefficients with
        positive leading coefficient."""
        if self.is_zero:
            return self
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        scale = Fraction(den, num)
        _, lc = self.leading(order)
        if lc < 0:
            scale = -scale
        return MPoly(self.vars, {e: c * scale for e, c in self.terms.items()})


def align_all(polys):
    """Extend a collection of polynomials to their common variable union."""
    polys = list(polys)
    if not polys:
        return []
    names = set()
    for p in polys:
        names.update(p.vars)
    vars = tuple(sorted(names))
    return [p.extend(vars) for p in polys]


def jacobian(polys, vars):
    """Rows = polynomials, columns = partials with respect to vars."""
    return [[p.partial_derivative(v) for v in vars] for p in polys]


def det_bareiss(matrix):
    """Exact determinant of a square MPoly matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        raise InputError("empty matrix has no determinant")
    m = [row[:] for row in matrix]
    vars = m[0][0].vars
    sign = 1
    prev = MPoly.constant(1, vars)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot_row = next(
                (i for i in range(k + 1, n) if not m[i][k].is_zero), None
            )
            if pivot_row is None:
                return MPoly.zero(vars)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.div_exact(prev)
            m[i][k] = MPoly.zero(vars)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def minors(matrix, size):
    """All size x size minors of a rectangular MPoly matrix."""
    from itertools import combinations

    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    out = []
    for ri in combinations(range(rows), size):
        for ci in combinations(range(cols), size):
            sub = [[matrix[i][j] for j in ci] for i in ri]
            out.append(det_bareiss(sub))
    return out
