"""Ideal arithmetic: reduced Groebner bases, normal forms, elimination,
saturation, radical membership, and zero-dimensional solving.

Buchberger's algorithm with the normal selection strategy and the
Gebauer-Moeller pair update (product and chain criteria).  Intermediate
polynomials are kept content-free over the integers; only the final reduced
basis is made monic.  All outputs are deterministic for a fixed input,
variable tuple, and order.

Zero-dimensional solving radicalizes the ideal with the squarefree parts of
the per-variable eliminants, then brings it into shape position with respect
to the last variable, adjoining a seeded pseudo-random separating linear
form when necessary.  Real points come out of the shape eliminant: rational
roots give exact rational points, irrational ones give certified isolating
boxes per coordinate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .errors import (
    InputError,
    NotZeroDimensionalError,
    ResourceLimitError,
    ShapePositionError,
)
from .mpoly import (
    GREVLEX,
    LEX,
    MPoly,
    MonomialOrder,
    align_all,
    block_order,
    monomial_div,
    monomial_lcm,
    monomial_mul,
)
from .univar import (
    RootInterval,
    UPoly,
    interval_eval,
    isolate_roots,
    refine_interval,
    squarefree_part,
    sturm_count,
)

DEFAULT_MAX_STEPS = 5_000_000
DEFAULT_SEED = 271828


def set_default_seed(seed):
    """Set the seed used for separating-form coordinate changes whenever a
    caller does not pass one explicitly."""
    global DEFAULT_SEED
    DEFAULT_SEED = int(seed)

_ZERO = Fraction(0)


class Budget:
    """Mutable step counter; exhausting it raises ResourceLimitError."""

    __slots__ = ("limit", "used")

    def __init__(self, limit=DEFAULT_MAX_STEPS):
        self.limit = limit
        self.used = 0

    def spend(self, amount=1):
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise ResourceLimitError(
                f"step budget of {self.limit} exhausted"
            )


def _ensure_budget(budget):
    return budget if budget is not None else Budget()


class Ideal:
    """Finitely generated ideal with a cached reduced Groebner basis."""

    __slots__ = ("generators", "vars", "order", "_gb_cache")

    def __init__(self, generators, vars=None, order=GREVLEX):
        gens = [g for g in generators if not g.is_zero]
        if vars is None:
            names = set()
            for g in gens:
                names.update(g.vars)
            vars = tuple(sorted(names))
        else:
            vars = tuple(vars)
        self.generators = tuple(g.extend(vars) for g in gens)
        self.vars = vars
        self.order = order
        self._gb_cache = {}

    def __repr__(self):
        return f"Ideal({len(self.generators)} gens, vars={self.vars})"

    def with_order(self, order):
        clone = Ideal(self.generators, self.vars, order)
        clone._gb_cache = self._gb_cache
        return clone

    def groebner(self, budget=None, order=None):
        order = order or self.order
        cached = self._gb_cache.get(order)
        if cached is None:
            cached = buchberger(self, budget=budget, order=order)
            self._gb_cache[order] = cached
        return cached


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic, interreduced, deterministic element order."""

    elements: tuple
    vars: tuple
    order: MonomialOrder

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def leading_exponents(self):
        return [g.leading(self.order)[0] for g in self.elements]


def _lt(poly, order):
    return poly.leading(order)[0]


def s_polynomial(f, g, order):
    lf, cf = f.leading(order)
    lg, cg = g.leading(order)
    lcm = monomial_lcm(lf, lg)
    mf = MPoly(f.vars, {monomial_div(lcm, lf): cg})
    mg = MPoly(g.vars, {monomial_div(lcm, lg): cf})
    return mf * f - mg * g


def _reduce_full(poly, basis, order, budget):
    """Full normal form of poly against [(g, lt, lc), ...]."""
    vars = poly.vars
    work = dict(poly.terms)
    remainder = {}
    while work:
        exp = max(work, key=order.key)
        coeff = work.pop(exp)
        for g, ltg, lcg in basis:
            quot = monomial_div(exp, ltg)
            if quot is None:
                continue
            budget.spend()
            factor = coeff / lcg
            for ge, gc in g.terms.items():
                if ge == ltg:
                    continue
                target = monomial_mul(quot, ge)
                value = work.get(target, _ZERO) - factor * gc
                if value == 0:
                    work.pop(target, None)
                else:
                    work[target] = value
            break
        else:
            remainder[exp] = coeff
    return MPoly(vars, remainder)


def _gm_update(entries, pairs, candidate, order):
    """Gebauer-Moeller pair update: add `candidate` and prune with the
    product and chain criteria.  Returns the new pair set."""
    t = len(entries)
    lt_new = candidate[1]
    kept = set()
    for i, j in pairs:
        lij = monomial_lcm(entries[i][1], entries[j][1])
        if (
            monomial_div(lij, lt_new) is None
            or monomial_lcm(entries[i][1], lt_new) == lij
            or monomial_lcm(entries[j][1], lt_new) == lij
        ):
            kept.add((i, j))
    lcm_groups = {}
    for i in range(t):
        lcm_groups.setdefault(monomial_lcm(entries[i][1], lt_new), []).append(i)
    minimal = []
    for lcm in sorted(lcm_groups, key=order.key):
        if all(monomial_div(lcm, other) is None for other in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        members = lcm_groups[lcm]
        coprime = any(
            monomial_lcm(entries[i][1], lt_new)
            == monomial_mul(entries[i][1], lt_new)
            for i in members
        )
        if not coprime:
            kept.add((min(members), t))
    return kept


def buchberger(ideal, budget=None, order=None):
    """Reduced Groebner basis of the ideal under the given order."""
    budget = _ensure_budget(budget)
    order = order or ideal.order
    vars = ideal.vars
    entries = []  # (poly primitive, lt exponent)
    pairs = set()
    for g in ideal.generators:
        g = g.primitive(order)
        pairs = _gm_update(entries, pairs, (g, _lt(g, order)), order)
        entries.append((g, _lt(g, order)))
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                sum(monomial_lcm(entries[p[0]][1], entries[p[1]][1])),
                order.key(monomial_lcm(entries[p[0]][1], entries[p[1]][1])),
                p,
            ),
        )
        pairs.discard((i, j))
        budget.spend()
        spoly = s_polynomial(entries[i][0], entries[j][0], order)
        reduced = _reduce_full(
            spoly,
            [(g, lt, g.terms[lt]) for g, lt in entries],
            order,
            budget,
        )
        if reduced.is_zero:
            continue
        reduced = reduced.primitive(order)
        pairs = _gm_update(entries, pairs, (reduced, _lt(reduced, order)), order)
        entries.append((reduced, _lt(reduced, order)))
    return _reduce_basis([g for g, _ in entries], vars, order, budget)


def _reduce_basis(polys, vars, order, budget):
    # Minimalize: drop any element whose leading monomial is divisible by
    # another's, preferring to keep the smaller leading monomial.
    polys = sorted(polys, key=lambda g: order.key(_lt(g, order)))
    minimal = []
    for g in polys:
        lt = _lt(g, order)
        if all(monomial_div(lt, _lt(h, order)) is None for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = [
            (h, _lt(h, order), h.leading(order)[1])
            for k, h in enumerate(minimal)
            if k != idx
        ]
        nf = _reduce_full(g, others, order, budget)
        if not nf.is_zero:
            reduced.append(nf.monic(order))
    reduced.sort(key=lambda g: order.key(_lt(g, order)))
    return GroebnerBasis(tuple(reduced), vars, order)


def normal_form(poly, gb, budget=None):
    """Unique remainder of poly modulo the (reduced) basis."""
    budget = _ensure_budget(budget)
    if poly.vars != gb.vars:
        if set(poly.vars) - set(gb.vars):
            raise InputError("polynomial uses variables outside the ideal ring")
        poly = poly.extend(gb.vars)
    basis = [(g, _lt(g, gb.order), g.leading(gb.order)[1]) for g in gb.elements]
    return _reduce_full(poly, basis, gb.order, budget)


def ideal_member(poly, ideal, budget=None):
    """True exactly when the normal form vanishes."""
    if poly.is_zero:
        return True
    return normal_form(poly, ideal.groebner(budget), budget).is_zero


def ideals_equal(a, b, budget=None):
    """Equality of ideals via equality of reduced Groebner bases."""
    if set(a.vars) != set(b.vars):
        return False
    if a.vars != b.vars:
        b = Ideal(b.generators, a.vars, a.order)
    ga = a.groebner(budget, order=a.order)
    gb_ = b.groebner(budget, order=a.order)
    return ga.elements == gb_.elements


def eliminate(ideal, keep, budget=None):
    """Contraction to Q[keep], via a block order with the eliminated
    variables in front."""
    keep = list(keep)
    unknown = [v for v in keep if v not in ideal.vars]
    if unknown:
        raise InputError(f"cannot keep unknown variables {unknown}")
    kept = tuple(v for v in ideal.vars if v in keep)
    elim = tuple(v for v in ideal.vars if v not in keep)
    if not elim:
        gb = ideal.groebner(budget)
        return Ideal(gb.elements, ideal.vars, GREVLEX)
    reordered = elim + kept
    shuffled = Ideal(
        [g.extend(reordered) for g in ideal.generators],
        reordered,
        block_order(len(elim)),
    )
    gb = shuffled.groebner(budget)
    elim_idx = range(len(elim))
    survivors = []
    for g in gb.elements:
        if all(all(exp[i] == 0 for i in elim_idx) for exp in g.terms):
            survivors.append(g.drop_to(kept))
    return Ideal(survivors, kept, GREVLEX)


def _fresh_name(existing, stem="u"):
    if stem not in existing:
        return stem
    k = 0
    while f"{stem}{k}" in existing:
        k += 1
    return f"{stem}{k}"


def saturate(ideal, q, budget=None):
    """I : q^infinity by the Rabinowitsch construction."""
    if q.is_zero:
        raise InputError("cannot saturate by the zero polynomial")
    u = _fresh_name(set(ideal.vars) | set(q.vars))
    vars2 = tuple(sorted(set(ideal.vars) | set(q.vars) | {u}))
    uq = MPoly.variable(u, vars2) * q.extend(vars2)
    one = MPoly.constant(1, vars2)
    extended = Ideal(
        [g.extend(vars2) for g in ideal.generators] + [one - uq],
        vars2,
        GREVLEX,
    )
    return eliminate(extended, ideal.vars, budget)


def radical_member(poly, ideal, budget=None):
    """Rabinowitsch trick: p in sqrt(I) iff 1 in I + (1 - u*p)."""
    if poly.is_zero:
        return True
    u = _fresh_name(set(ideal.vars) | set(poly.vars))
    vars2 = tuple(sorted(set(ideal.vars) | set(poly.vars) | {u}))
    up = MPoly.variable(u, vars2) * poly.extend(vars2)
    one = MPoly.constant(1, vars2)
    extended = Ideal(
        [g.extend(vars2) for g in ideal.generators] + [one - up],
        vars2,
        GREVLEX,
    )
    return extended.groebner(budget).is_unit()


def is_zero_dimensional(ideal, budget=None):
    """True iff every variable has a pure power among the leading terms."""
    gb = ideal.groebner(budget)
    if gb.is_unit():
        return True
    if not gb.elements:
        return len(ideal.vars) == 0
    leading = gb.leading_exponents()
    for i in range(len(ideal.vars)):
        if not any(
            exp[i] > 0 and all(e == 0 for k, e in enumerate(exp) if k != i)
            for exp in leading
        ):
            return False
    return True


def standard_monomials(ideal, budget=None):
    """Monomials outside the leading-term ideal, sorted ascending."""
    if not is_zero_dimensional(ideal, budget):
        raise NotZeroDimensionalError("ideal is not zero-dimensional")
    gb = ideal.groebner(budget)
    if gb.is_unit():
        return []
    leading = gb.leading_exponents()
    n = len(ideal.vars)
    bounds = []
    for i in range(n):
        power = min(
            exp[i]
            for exp in leading
            if exp[i] > 0 and all(e == 0 for k, e in enumerate(exp) if k != i)
        )
        bounds.append(power)
    out = []
    for exp in iter_product(*[range(b) for b in bounds]):
        if all(monomial_div(exp, lt) is None for lt in leading):
            out.append(exp)
    out.sort(key=ideal.order.key)
    return out


def standard_monomial_count(ideal, budget=None):
    return len(standard_monomials(ideal, budget))


def minimal_polynomial(poly, ideal, budget=None):
    """Monic generator of the kernel of Q[s] -> Q[vars]/I, s -> poly.

    Requires a zero-dimensional ideal; computed by linear algebra over the
    standard monomial basis.
    """
    budget = _ensure_budget(budget)
    gb = ideal.groebner(budget)
    if gb.is_unit():
        return UPoly((1,))
    basis = standard_monomials(ideal, budget)
    index = {exp: i for i, exp in enumerate(basis)}
    dim = len(basis)

    def vectorize(p):
        vec = [_ZERO] * dim
        for exp, coeff in p.terms.items():
            vec[index[exp]] = coeff
        return vec

    poly = poly.extend(gb.vars) if poly.vars != gb.vars else poly
    echelon = []  # (pivot, vector, combination)
    power = normal_form(MPoly.constant(1, gb.vars), gb, budget)
    for k in range(dim + 1):
        vec = vectorize(power)
        combo = [_ZERO] * (k + 1)
        combo[k] = Fraction(1)
        for pivot, row, row_combo in echelon:
            factor = vec[pivot]
            if factor == 0:
                continue
            vec = [a - factor * b for a, b in zip(vec, row)]
            for i, c in enumerate(row_combo):
                combo[i] -= factor * c
        nz = next((i for i, a in enumerate(vec) if a != 0), None)
        if nz is None:
            return UPoly(combo).monic()
        inv = vec[nz]
        vec = [a / inv for a in vec]
        combo = [c / inv for c in combo]
        # Rows are created at earlier iterations, so every stored combination
        # is no longer than the current one.
        echelon.append((nz, vec, combo))
        echelon.sort(key=lambda r: r[0])
        power = normal_form(power * poly, gb, budget)
    raise InputError("no dependency found; quotient not finite-dimensional?")


# -- zero-dimensional solving -------------------------------------------------


@dataclass(frozen=True)
class SolvedPoint:
    """A real solution; every coordinate is exact or an isolating box."""

    coords: tuple

    @property
    def is_rational(self):
        return all(c.exact is not None for c in self.coords)

    def rational_coords(self):
        if not self.is_rational:
            raise InputError("point has irrational coordinates")
        return tuple(c.exact for c in self.coords)

    def midpoints(self):
        return tuple(c.midpoint() for c in self.coords)


@dataclass(frozen=True)
class ZeroDimSolution:
    real_points: tuple
    nonreal_count: int
    complex_count: int
    eliminants: dict
    separating: dict = field(default_factory=dict)

    @property
    def real_count(self):
        return len(self.real_points)


def radical_zero_dim(ideal, budget=None):
    """Radical of a zero-dimensional ideal (Seidenberg: adjoin the
    squarefree part of each variable's eliminant)."""
    return _radicalized(ideal, _ensure_budget(budget))[0]


def _radicalized(ideal, budget):
    """Ideal with the same zero set, made radical via squarefree
    per-variable eliminants (Seidenberg); also returns the eliminants."""
    eliminants = {}
    extra = []
    for name in ideal.vars:
        var_poly = MPoly.variable(name, ideal.vars)
        e = minimal_polynomial(var_poly, ideal, budget)
        s = squarefree_part(e)
        eliminants[name] = s
        extra.append(_upoly_to_mpoly(s, name, ideal.vars))
    radical = Ideal(list(ideal.generators) + extra, ideal.vars, ideal.order)
    return radical, eliminants


def _upoly_to_mpoly(upoly, name, vars):
    idx = vars.index(name)
    terms = {}
    for e, c in enumerate(upoly.coeffs):
        if c != 0:
            exp = [0] * len(vars)
            exp[idx] = e
            terms[tuple(exp)] = c
    return MPoly(vars, terms)


def _shape_view(gb):
    """Recognize a shape-position lex basis with the last variable as the
    parameter: returns (h, {var_index: f}) or None."""
    vars = gb.vars
    n = len(vars)
    last = n - 1
    if len(gb.elements) != n:
        return None
    h = None
    lin = {}
    for g in gb.elements:
        used = sorted(
            {i for exp in g.terms for i, e in enumerate(exp) if e}
        )
        if used in ([], [last]):
            if h is not None:
                return None
            h = upoly_of_last(g, last)
            continue
        lt, _ = g.leading(LEX)
        head = [i for i, e in enumerate(lt) if e]
        if head != [used[0]] or lt[used[0]] != 1 or used[0] in lin:
            return None
        if any(i not in (used[0], last) for i in used):
            return None
        tail = g - MPoly.variable(vars[used[0]], vars)
        lin[used[0]] = upoly_of_last(-tail, last)
    if h is None or set(lin) != set(range(last)):
        return None
    return h, lin


def upoly_of_last(poly, last):
    coeffs = {}
    for exp, c in poly.terms.items():
        coeffs[exp[last]] = c
    if not coeffs:
        return UPoly.zero()
    out = [_ZERO] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return UPoly(out)


def solve_zero_dim(
    ideal,
    budget=None,
    seed=None,
    max_changes=6,
    with_boxes=True,
):
    """Exact real solutions of a zero-dimensional system.

    Returns all real points (exact rational points, isolating boxes for
    irrational ones) plus the count of non-real solutions, both without
    multiplicity.
    """
    budget = _ensure_budget(budget)
    if seed is None:
        seed = DEFAULT_SEED
    gb = ideal.groebner(budget)
    if gb.is_unit():
        return ZeroDimSolution((), 0, 0, {})
    if not is_zero_dimensional(ideal, budget):
        raise NotZeroDimensionalError("system is not zero-dimensional")
    radical, eliminants = _radicalized(ideal, budget)

    attempts = []
    lex_ideal = Ideal(radical.generators, radical.vars, LEX)
    attempts.append((lex_ideal, radical.vars, None))
    rng = random.Random(seed)
    for k in range(max_changes):
        coeffs = tuple(
            rng.randint(1, 5 + k) for _ in range(len(radical.vars) - 1)
        )
        u = _fresh_name(set(radical.vars))
        vars2 = radical.vars + (u,)
        form = MPoly.variable(u, vars2) - MPoly.variable(
            radical.vars[-1], vars2
        )
        for c, name in zip(coeffs, radical.vars[:-1]):
            form = form - c * MPoly.variable(name, vars2)
        ext = Ideal(
            [g.extend(vars2) for g in radical.generators] + [form],
            vars2,
            LEX,
        )
        attempts.append((ext, radical.vars, {"coefficients": coeffs, "seed": seed}))

    shape = None
    separating = {}
    for attempt_no, (cand, orig_vars, info) in enumerate(attempts):
        view = _shape_view(cand.groebner(budget))
        if view is not None:
            shape = view
            separating = {"attempt": attempt_no}
            if info:
                separating.update(info)
            solve_vars = cand.vars
            break
    if shape is None:
        raise ShapePositionError(
            f"no separating form found in {max_changes} coordinate changes"
        )

    h, lin = shape
    h = squarefree_part(h)
    complex_count = h.degree()
    isolation = isolate_roots(h)
    real_roots = isolation.intervals
    nonreal = complex_count - len(real_roots)

    n_orig = len(ideal.vars)
    extended = len(solve_vars) > n_orig

    def coords_for(root):
        coords = []
        for i in range(n_orig):
            if not extended and i == n_orig - 1:
                coords.append(("root", None))
            else:
                coords.append(("poly", lin[i]))
        return coords

    points = []
    for root in real_roots:
        plan = coords_for(root)
        if root.exact is not None:
            coords = tuple(
                RootInterval(root.exact, root.exact, root.exact)
                if kind == "root"
                else _exact_box(f.evaluate(root.exact))
                for kind, f in plan
            )
            points.append(SolvedPoint(coords))
            continue
        if not with_boxes:
            points.append(None)
            continue
        points.append(
            _boxed_point(root, plan, h, ideal.vars, eliminants)
        )
    if with_boxes:
        points.sort(key=lambda p: p.midpoints())
        for p in points:
            if p.is_rational:
                values = p.rational_coords()
                for g in ideal.generators:
                    if g.evaluate(values) != 0:
                        raise InputError(
                            "internal: rational point fails a generator"
                        )
        return ZeroDimSolution(
            tuple(points), nonreal, complex_count, eliminants, separating
        )
    rational = tuple(p for p in points if p is not None)
    return ZeroDimSolution(
        rational, nonreal, complex_count, eliminants, separating
    )


def _exact_box(value):
    return RootInterval(value, value, value)


def _boxed_point(root, plan, h, var_names, eliminants, max_rounds=220):
    """Certified coordinate boxes: each box contains the coordinate (by
    interval evaluation) and exactly one root of that coordinate's
    squarefree eliminant (sign-consistency certificate)."""
    current = root
    for round_no in range(max_rounds):
        slack = Fraction(1, 2 ** (round_no + 1))
        boxes = []
        ok = True
        for (kind, f), name in zip(plan, var_names):
            if kind == "root":
                lo, hi = current.lo, current.hi
            else:
                lo, hi = interval_eval(f, current.lo, current.hi)
            s = eliminants[name]
            if sturm_count(s, lo - slack, hi) != 1:
                ok = False
                break
            boxes.append(RootInterval(lo, hi, None))
        if ok:
            return SolvedPoint(tuple(boxes))
        current = refine_interval(h, current, 1)
        if current.exact is not None:
            # The separating value turned out rational after refinement.
            coords = tuple(
                RootInterval(current.exact, current.exact, current.exact)
                if kind == "root"
                else _exact_box(f.evaluate(current.exact))
                for kind, f in plan
            )
            return SolvedPoint(coords)
    raise InputError("internal: failed to certify isolating boxes")


def count_real_solutions(ideal, budget=None, seed=None):
    solution = solve_zero_dim(ideal, budget, seed=seed, with_boxes=False)
    if solution.complex_count == 0:
        return 0
    return solution.complex_count - solution.nonreal_count
