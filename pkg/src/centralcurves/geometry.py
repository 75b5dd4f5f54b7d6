"""Geometry of a presented real affine set: singular locus, multiplicity and
tangent cone at a point, smoothness of the complexification, and the exact
isolated-real-point probe for curves.

The probe is a complete decision procedure: an isolated real point of a real
curve is always a singular point of the complexification, and a sphere of
certified radius (strictly below the least positive critical value of the
squared distance) meets the real locus exactly when the point is not
isolated.  Tangent-cone heuristics are not used, because the tangent cone is
inconclusive; for example (y - x^2)^2 + x^6 has real tangent cone y^2 but an
isolated real point at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateInputError,
    InputError,
    PointNotOnVarietyError,
    UnsupportedIrrationalError,
)
from .groebner import (
    Budget,
    Ideal,
    SolvedPoint,
    count_real_solutions,
    is_zero_dimensional,
    minimal_polynomial,
    solve_zero_dim,
)
from .mpoly import MPoly, jacobian, minors
from .univar import binary_form_lines, isolate_roots, refine_interval

PLANE_CURVE = "plane-curve"
SPACE_CURVE = "space-curve"
SURFACE = "surface"

_DIMENSION = {PLANE_CURVE: 1, SPACE_CURVE: 1, SURFACE: 2}


@dataclass(frozen=True)
class Assertions:
    """User-supplied hypotheses the tool does not recompute."""

    irreducible: bool = False
    squarefree_checked: bool = False
    has_smooth_real_point: bool = False


@dataclass(frozen=True)
class AffinePresentation:
    """A real affine set given by an ideal with a role tag."""

    ideal: Ideal
    kind: str
    asserted: Assertions = field(default_factory=Assertions)

    def __post_init__(self):
        if self.kind not in _DIMENSION:
            raise InputError(f"unknown presentation kind {self.kind!r}")
        if self.kind == PLANE_CURVE:
            if len(self.ideal.vars) != 2:
                raise InputError("a plane curve needs exactly two variables")
            if len(self.ideal.generators) != 1:
                raise InputError("a plane curve needs a principal ideal")

    @property
    def vars(self):
        return self.ideal.vars

    @property
    def ambient_dim(self):
        return len(self.ideal.vars)

    @property
    def dimension(self):
        return _DIMENSION[self.kind]

    @property
    def codimension(self):
        return self.ambient_dim - self.dimension

    def is_curve(self):
        return self.kind in (PLANE_CURVE, SPACE_CURVE)

    def generator(self):
        if self.kind != PLANE_CURVE:
            raise InputError("generator() is for plane curves")
        return self.ideal.generators[0]

    def contains(self, point):
        point = tuple(Fraction(c) for c in point)
        if len(point) != self.ambient_dim:
            raise InputError("point length does not match the ambient space")
        return all(g.evaluate(point) == 0 for g in self.ideal.generators)

    def require_point(self, point):
        if not self.contains(point):
            raise PointNotOnVarietyError(
                f"point {tuple(str(Fraction(c)) for c in point)} is not on the variety"
            )


def plane_curve(poly, asserted=None, budget=None):
    """Build a plane-curve presentation, enforcing squarefreeness.

    The generator is squarefree exactly when the singular scheme
    (f, f_x, f_y) is zero-dimensional or empty; a repeated factor would put a
    whole curve inside it.
    """
    if poly.is_zero:
        raise InputError("the zero polynomial does not define a curve")
    if len(poly.vars) != 2:
        raise InputError("a plane curve lives in two variables")
    x, y = poly.vars
    sing = Ideal(
        [poly, poly.partial_derivative(x), poly.partial_derivative(y)],
        poly.vars,
    )
    if not is_zero_dimensional(sing, budget):
        raise DegenerateInputError(
            "generator is not squarefree: the singular scheme has positive dimension"
        )
    asserted = asserted or Assertions()
    asserted = Assertions(
        irreducible=asserted.irreducible,
        squarefree_checked=True,
        has_smooth_real_point=asserted.has_smooth_real_point,
    )
    return AffinePresentation(Ideal([poly], poly.vars), PLANE_CURVE, asserted)


def singular_scheme(presentation, budget=None):
    """Ideal of the singular locus of the complexification.

    Jacobian criterion: points where the Jacobian of the generators drops
    below the codimension rank.
    """
    ideal = presentation.ideal
    c = presentation.codimension
    jac = jacobian(ideal.generators, ideal.vars)
    if c <= 0:
        raise InputError("presentation has no positive codimension")
    dets = minors(jac, c) if jac else []
    return Ideal(list(ideal.generators) + dets, ideal.vars)


def singular_points(presentation, budget=None, seed=None):
    """All real singular points plus the non-real singular count.

    Raises DegenerateInputError when the singular scheme is not
    zero-dimensional (non-reduced or degenerate input).
    """
    if not presentation.is_curve():
        raise InputError("singular_points expects a curve presentation")
    scheme = singular_scheme(presentation, budget)
    if not is_zero_dimensional(scheme, budget):
        raise DegenerateInputError("singular scheme is not zero-dimensional")
    kwargs = {} if seed is None else {"seed": seed}
    solution = solve_zero_dim(scheme, budget, **kwargs)
    return list(solution.real_points), solution.nonreal_count


def is_smooth(presentation, budget=None):
    """True iff the singular scheme of the complexification is empty."""
    scheme = singular_scheme(presentation, budget)
    return scheme.groebner(budget).is_unit()


@dataclass(frozen=True)
class SingularityReport:
    """Multiplicity and tangent-cone data of a curve point."""

    point: tuple
    multiplicity: int
    tangent_cone: MPoly | None
    distinct_tangents: int
    real_tangents: int
    classification: str  # smooth | real-node | complex-node | non-ordinary
    #                     | unsupported-irrational


def classify_singularity(presentation, point, budget=None):
    """Classify a rational point of a plane curve by its tangent cone."""
    if presentation.kind != PLANE_CURVE:
        raise InputError("classification is implemented for plane curves")
    point = tuple(Fraction(c) for c in point)
    presentation.require_point(point)
    shifted = presentation.generator().translate(point)
    k, form = shifted.lowest_form()
    if k == 1:
        return SingularityReport(point, 1, form, 1, 1, "smooth")
    distinct, real = binary_form_lines(form)
    if k == 2 and distinct == 2:
        label = "real-node" if real == 2 else "complex-node"
    else:
        label = "non-ordinary"
    return SingularityReport(point, k, form, distinct, real, label)


@dataclass(frozen=True)
class ProbeResult:
    isolated: bool
    eps_squared: Fraction
    circle_count: int
    min_positive_critical: object  # Fraction, RootInterval bound, or None


@dataclass(frozen=True)
class CentralityReport:
    isolated_points: tuple
    is_central: bool
    probe_radii: tuple  # ((point, eps_squared), ...)
    singular_real: tuple
    singular_nonreal_count: int


def _distance_squared(vars, point):
    total = MPoly.zero(vars)
    for name, a in zip(vars, point):
        d = MPoly.variable(name, vars) - a
        total = total + d * d
    return total


def distance_critical_ideal(presentation, point):
    """Defining ideal of the distance-critical points seen from `point`.

    The generators' Jacobian is stacked over the row (x - p); for a curve the
    expected corank is c = n - 1 and the rank condition is the vanishing of
    all (c+1) x (c+1) minors.  Every singular point of the curve satisfies
    it, as does every smooth critical point of the distance function.
    """
    ideal = presentation.ideal
    vars = ideal.vars
    n = len(vars)
    jac = jacobian(ideal.generators, vars)
    row = [
        MPoly.variable(name, vars) - a for name, a in zip(vars, point)
    ]
    stacked = jac + [row]
    dets = minors(stacked, n)
    return Ideal(list(ideal.generators) + dets, vars)


def certified_probe_radius(presentation, point, budget=None):
    """A rational eps^2 strictly below every positive critical value of the
    squared distance from `point` attained on the real locus.

    Uses the minimal polynomial of the squared distance over the
    distance-critical ideal; positive real roots of that eliminant cover all
    positive real critical values, so any rational below their minimum is
    certified.  Returns (eps2, bound_evidence).
    """
    critical = distance_critical_ideal(presentation, point)
    if not is_zero_dimensional(critical, budget):
        raise DegenerateInputError(
            "distance-critical system is not zero-dimensional "
            "(sphere-concentric component or degenerate input)"
        )
    dist2 = _distance_squared(presentation.vars, point)
    eliminant = minimal_polynomial(dist2, critical, budget)
    positive = [
        r
        for r in isolate_roots(eliminant).intervals
        if (r.exact is not None and r.exact > 0) or (r.exact is None and r.hi > 0)
    ]
    # An interval root with hi > 0 might still be negative; keep only the
    # certainly-positive ones after refinement.
    cleaned = []
    for r in positive:
        if r.exact is not None:
            cleaned.append(r)
            continue
        while r.exact is None and r.lo <= 0:
            if r.hi <= 0:
                break
            r = refine_interval(eliminant, r, 1)
        if r.exact is not None:
            if r.exact > 0:
                cleaned.append(r)
        elif r.lo > 0:
            cleaned.append(r)
    if not cleaned:
        return Fraction(1), None
    smallest = min(cleaned, key=lambda r: r.midpoint())
    if smallest.exact is not None:
        return smallest.exact / 2, smallest.exact
    r = smallest
    while r.exact is None and r.lo <= 0:
        r = refine_interval(eliminant, r, 1)
    if r.exact is not None:
        return r.exact / 2, r.exact
    return r.lo, r


def circle_section_count(presentation, point, eps2, budget=None, seed=None):
    """Number of real points of the variety at squared distance eps2."""
    vars = presentation.vars
    dist2 = _distance_squared(vars, point)
    sphere = Ideal(
        list(presentation.ideal.generators) + [dist2 - eps2], vars
    )
    kwargs = {} if seed is None else {"seed": seed}
    return count_real_solutions(sphere, budget, **kwargs)


def isolated_point_probe(presentation, point, budget=None, eps2=None):
    """Decide whether a rational real point of a curve is isolated in the
    real locus.

    Stage 1 certifies a probe radius below the least positive critical
    distance; stage 2 counts real intersections with the sphere of that
    radius.  The point is isolated exactly when the count is zero.  A caller
    may re-run with a smaller eps2 (still below the certified radius); the
    verdict does not depend on that choice.
    """
    if not presentation.is_curve():
        raise InputError("the isolation probe is for curves")
    point = tuple(Fraction(c) for c in point)
    presentation.require_point(point)
    bound = None
    if eps2 is None:
        eps2, bound = certified_probe_radius(presentation, point, budget)
    else:
        eps2 = Fraction(eps2)
        if eps2 <= 0:
            raise InputError("eps^2 must be positive")
    count = circle_section_count(presentation, point, eps2, budget)
    return ProbeResult(count == 0, eps2, count, bound)


def centrality_report(presentation, budget=None):
    """Locate the isolated real points of a curve.

    Every real singular point must be rational (exact classification only);
    the curve is central exactly when no singular point is isolated, since
    regular real points of a curve are never isolated and the central locus
    is the closure of the regular ones.
    """
    if not presentation.is_curve():
        raise InputError("centrality_report expects a curve presentation")
    real_points, nonreal = singular_points(presentation, budget)
    rational_points = []
    for sp in real_points:
        if not sp.is_rational:
            raise UnsupportedIrrationalError(
                "a real singular point has irrational coordinates"
            )
        rational_points.append(sp.rational_coords())
    isolated = []
    radii = []
    for p in rational_points:
        probe = isolated_point_probe(presentation, p, budget)
        radii.append((p, probe.eps_squared))
        if probe.isolated:
            isolated.append(p)
    return CentralityReport(
        isolated_points=tuple(isolated),
        is_central=not isolated,
        probe_radii=tuple(radii),
        singular_real=tuple(rational_points),
        singular_nonreal_count=nonreal,
    )


def central_singular_points(presentation, budget=None):
    """Rational real singular points that are not isolated."""
    report = centrality_report(presentation, budget)
    return [p for p in report.singular_real if p not in report.isolated_points]
