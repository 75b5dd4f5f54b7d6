"""Finite birational ring extensions built by adjoining integral rational
functions.

Adjoining f = p/q with a monic integral relation m(t) presents the enlarged
coordinate ring as a quotient of the base ring with one fresh variable per
adjoined function.  The defining ideal is the kernel of evaluation at p/q,
computed as (I + (q*t - p, m(t))) saturated by q; contracting back to the
base variables must recover the base ideal, which is checked.

On top of the presentation sit the decision procedures: exact fibers over
rational points, the central-bijectivity test (a finite check over the
central singular points, since the map is an isomorphism wherever the local
rings are already integrally closed), the continuity decision for an
integral rational function on the central locus, the fixed-point search for
the maximal continuous sub-extension of a candidate catalog, and the
residue-field degree test along a subvariety by generic specialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateInputError,
    InputError,
    NonGenericSpecializationError,
    RelationError,
)
from .geometry import (
    PLANE_CURVE,
    SPACE_CURVE,
    SURFACE,
    AffinePresentation,
    Assertions,
    central_singular_points,
    is_smooth,
    isolated_point_probe,
)
from .groebner import (
    Ideal,
    eliminate,
    ideal_member,
    ideals_equal,
    is_zero_dimensional,
    radical_zero_dim,
    saturate,
    solve_zero_dim,
    standard_monomial_count,
)
from .mpoly import MPoly
from .univar import mpoly_coeffs_in

SEARCH_SEED = 90377


@dataclass(frozen=True)
class RationalFunction:
    """p/q with polynomial numerator and denominator."""

    numerator: MPoly
    denominator: MPoly

    def __post_init__(self):
        if self.denominator.is_zero:
            raise InputError("zero denominator")

    def names(self):
        return set(self.numerator.vars) | set(self.denominator.vars)


@dataclass(frozen=True)
class IntegralElement:
    """A rational function together with its monic integral relation.

    The relation is a polynomial in the base variables plus the fresh name;
    monic in the name.  Its degree bounds the fiber size of the adjunction.
    """

    name: str
    function: RationalFunction
    relation: MPoly

    def __post_init__(self):
        if self.name not in self.relation.vars:
            raise RelationError(
                f"relation does not mention the adjoined name {self.name!r}"
            )
        coeffs = mpoly_coeffs_in(self.relation, self.name)
        if len(coeffs) < 2:
            raise RelationError("relation must have positive degree")
        lead = coeffs[-1]
        if not (lead.is_constant() and lead.constant_value() == 1):
            raise RelationError("relation must be monic in the adjoined name")

    def degree(self):
        return self.relation.degree_in(self.name)

    def needed_names(self):
        used = self.function.names()
        used.update(v for v in self.relation.vars if v != self.name)
        # Only variables actually occurring matter for deferral decisions.
        occur = set()
        for poly in (
            self.function.numerator,
            self.function.denominator,
            self.relation,
        ):
            for i, v in enumerate(poly.vars):
                if v == self.name:
                    continue
                if any(exp[i] for exp in poly.terms):
                    occur.add(v)
        return occur


def _cleared_relation(element, vars):
    """q^d * m(p/q) with denominators cleared, in the given ring."""
    p = element.function.numerator.extend(vars)
    q = element.function.denominator.extend(vars)
    relation = element.relation.extend(
        tuple(sorted(set(vars) | {element.name}))
    )
    coeffs = mpoly_coeffs_in(relation, element.name)
    d = len(coeffs) - 1
    total = MPoly.zero(vars)
    for j, c in enumerate(coeffs):
        c = c.drop_to(tuple(v for v in c.vars if v != element.name)).extend(vars)
        total = total + c * p**j * q ** (d - j)
    return total


def verify_integral_relation(ideal, element, budget=None):
    """True iff clearing denominators lands the relation in the ideal."""
    extra = element.needed_names() - set(ideal.vars)
    if extra:
        raise RelationError(
            f"relation references variables outside the coordinate ring: {sorted(extra)}"
        )
    vars = ideal.vars
    q = element.function.denominator.extend(vars)
    if ideal_member(q, ideal, budget):
        raise RelationError("denominator vanishes on the variety")
    cleared = _cleared_relation(element, vars)
    return ideal_member(cleared, ideal, budget)


@dataclass(frozen=True)
class ExtensionPresentation:
    """Pol(base)[f_1, ..., f_k] presented in an enlarged polynomial ring."""

    base: AffinePresentation
    adjoined: tuple
    ideal: Ideal

    @property
    def x_vars(self):
        return self.base.ideal.vars

    @property
    def t_vars(self):
        return tuple(e.name for e in self.adjoined)

    def variety(self):
        kind = SURFACE if self.base.kind == SURFACE else SPACE_CURVE
        if not self.adjoined:
            kind = self.base.kind
        asserted = Assertions(
            irreducible=self.base.asserted.irreducible,
            squarefree_checked=False,
            has_smooth_real_point=self.base.asserted.has_smooth_real_point,
        )
        return AffinePresentation(self.ideal, kind, asserted)


def trivial_extension(base):
    return ExtensionPresentation(base, (), base.ideal)


def extend_with(current, element, budget=None, check_contraction=True):
    """One adjunction step on top of an existing presentation."""
    ring = set(current.ideal.vars)
    if element.name in ring:
        raise RelationError(
            f"adjoined name {element.name!r} collides with an existing variable"
        )
    missing = element.needed_names() - ring
    if missing:
        raise RelationError(
            f"candidate references unknown variables {sorted(missing)}"
        )
    if not verify_integral_relation(current.ideal, element, budget):
        raise RelationError(
            f"integral relation for {element.name!r} fails on the variety"
        )
    vars2 = tuple(sorted(ring | {element.name}))
    t = MPoly.variable(element.name, vars2)
    p = element.function.numerator.extend(vars2)
    q = element.function.denominator.extend(vars2)
    gens = [g.extend(vars2) for g in current.ideal.generators]
    gens.append(q * t - p)
    gens.append(element.relation.extend(vars2))
    extended = saturate(Ideal(gens, vars2), q, budget)
    result = ExtensionPresentation(
        current.base, current.adjoined + (element,), extended
    )
    if check_contraction and not contraction_holds(result, budget):
        raise DegenerateInputError(
            "contraction does not recover the base ideal; the denominators "
            "vanish on a component of the base"
        )
    return result


def adjoin(base, elements, budget=None):
    """Present Pol(base)[f_1, ..., f_k]; relations are verified in order and
    may involve previously adjoined names."""
    current = trivial_extension(base)
    for element in elements:
        current = extend_with(current, element, budget, check_contraction=False)
    if elements and not contraction_holds(current, budget):
        raise DegenerateInputError(
            "contraction does not recover the base ideal; the denominators "
            "vanish on a component of the base"
        )
    return current


def contraction_holds(extension, budget=None):
    contracted = eliminate(extension.ideal, extension.x_vars, budget)
    return ideals_equal(contracted, extension.base.ideal, budget)


def fiber_over_point(extension, point, budget=None, seed=None):
    """Solved fiber of the projection over a rational point of the base."""
    point = tuple(Fraction(c) for c in point)
    extension.base.require_point(point)
    vars = extension.ideal.vars
    gens = list(extension.ideal.generators)
    for name, value in zip(extension.x_vars, point):
        gens.append(MPoly.variable(name, vars) - value)
    fiber = Ideal(gens, vars)
    kwargs = {} if seed is None else {"seed": seed}
    solution = solve_zero_dim(fiber, budget, **kwargs)
    return list(solution.real_points), solution.nonreal_count


METHOD_SMOOTH = "smooth-shortcut"
METHOD_PROBE = "probe"
METHOD_ASSERTED = "asserted"
METHOD_UNDECIDED = "undecided"


@dataclass(frozen=True)
class FiberPointStatus:
    point: object  # SolvedPoint
    method: str
    central: bool | None


@dataclass(frozen=True)
class FiberCheck:
    base_point: tuple
    statuses: tuple
    nonreal_count: int

    @property
    def central_fiber_size(self):
        return sum(1 for s in self.statuses if s.central)

    @property
    def has_undecided(self):
        return any(s.central is None for s in self.statuses)


@dataclass(frozen=True)
class BijectivityCertificate:
    """Is the restriction to central loci a bijection over the test points?

    verdict True requires every checked central point to carry exactly one
    central fiber point; None means some fiber point's centrality could not
    be certified (never guessed).
    """

    checked: tuple
    verdict: bool | None


def central_bijectivity_check(
    extension, test_points, budget=None, asserted_fiber_central=()
):
    y = extension.variety()
    smooth = is_smooth(y, budget)
    asserted = {tuple(Fraction(c) for c in p) for p in asserted_fiber_central}
    checks = []
    failed = False
    undecided = False
    for point in test_points:
        real_fiber, nonreal = fiber_over_point(extension, point, budget)
        statuses = []
        for fp in real_fiber:
            if smooth:
                statuses.append(FiberPointStatus(fp, METHOD_SMOOTH, True))
            elif fp.is_rational and fp.rational_coords() in asserted:
                statuses.append(FiberPointStatus(fp, METHOD_ASSERTED, True))
            elif y.is_curve() and fp.is_rational:
                probe = isolated_point_probe(y, fp.rational_coords(), budget)
                statuses.append(
                    FiberPointStatus(fp, METHOD_PROBE, not probe.isolated)
                )
            else:
                statuses.append(FiberPointStatus(fp, METHOD_UNDECIDED, None))
        check = FiberCheck(tuple(point), tuple(statuses), nonreal)
        checks.append(check)
        known = check.central_fiber_size
        unknown = sum(1 for s in check.statuses if s.central is None)
        if known >= 2 or (known == 0 and unknown == 0):
            failed = True
        elif unknown > 0:
            undecided = True
    verdict = False if failed else (None if undecided else True)
    return BijectivityCertificate(tuple(checks), verdict)


def continuity_decision(base, element, budget=None):
    """Does the integral rational function extend continuously to the
    central locus?  Decided through central bijectivity of the adjunction
    over the central singular points of the base."""
    if not base.is_curve():
        raise InputError("the continuity decision is for curves")
    points = central_singular_points(base, budget)
    extension = adjoin(base, [element], budget)
    certificate = central_bijectivity_check(extension, points, budget)
    if certificate.verdict is None:
        raise DegenerateInputError(
            "could not certify centrality of a fiber point"
        )
    return certificate.verdict


@dataclass(frozen=True)
class CandidateOutcome:
    name: str
    status: str  # accepted | rejected | deferred | invalid
    round_no: int
    certificate: BijectivityCertificate | None = None
    reason: str | None = None


@dataclass(frozen=True)
class SearchCertificate:
    accepted: tuple
    outcomes: tuple
    final_smooth: bool
    claim: str
    final_centrality: bool | None
    rounds: int


@dataclass(frozen=True)
class SearchResult:
    presentation: ExtensionPresentation
    certificate: SearchCertificate


CLAIM_FULL = (
    "result is smooth, hence equals the normalization and the weak "
    "normalization relative to the central locus"
)
CLAIM_PARTIAL = "result is the continuous closure of the supplied catalog"


def wc_normalization_search(base, catalog, budget=None):
    """Greatest sub-extension of the catalog whose functions all extend
    continuously to the central locus of the base.

    Iterates adjoin-and-test to a fixed point; acceptance of a candidate
    does not depend on the state (previously accepted functions are already
    continuous), so the result is independent of catalog order.  Candidates
    whose expression needs a not-yet-adjoined name are deferred to a later
    round.
    """
    if not base.is_curve():
        raise InputError("the normalization search is for curves")
    test_points = central_singular_points(base, budget)
    current = trivial_extension(base)
    accepted = []
    outcomes = []
    pending = list(catalog)
    round_no = 0
    while pending:
        round_no += 1
        progress = False
        still = []
        for element in pending:
            known = set(current.ideal.vars)
            if element.name in known:
                outcomes.append(
                    CandidateOutcome(
                        element.name, "invalid", round_no,
                        reason="name collides with an existing variable",
                    )
                )
                progress = True
                continue
            if element.needed_names() - known:
                outcomes.append(
                    CandidateOutcome(
                        element.name, "deferred", round_no,
                        reason="uses names not adjoined yet",
                    )
                )
                still.append(element)
                continue
            try:
                trial = extend_with(current, element, budget)
            except RelationError as err:
                outcomes.append(
                    CandidateOutcome(
                        element.name, "invalid", round_no, reason=str(err)
                    )
                )
                progress = True
                continue
            certificate = central_bijectivity_check(trial, test_points, budget)
            if certificate.verdict is True:
                current = trial
                accepted.append(element)
                outcomes.append(
                    CandidateOutcome(
                        element.name, "accepted", round_no, certificate
                    )
                )
                progress = True
            else:
                outcomes.append(
                    CandidateOutcome(
                        element.name, "rejected", round_no, certificate
                    )
                )
                still.append(element)
        if not progress:
            break
        pending = still
    final = current.variety()
    smooth = is_smooth(final, budget)
    centrality = None
    if smooth:
        centrality = True
    elif final.is_curve():
        try:
            from .geometry import centrality_report

            centrality = centrality_report(final, budget).is_central
        except Exception:
            centrality = None
    certificate = SearchCertificate(
        accepted=tuple(e.name for e in accepted),
        outcomes=tuple(outcomes),
        final_smooth=smooth,
        claim=CLAIM_FULL if smooth else CLAIM_PARTIAL,
        final_centrality=centrality,
        rounds=round_no,
    )
    return SearchResult(current, certificate)


def hereditary_birational_check(
    extension,
    w_generators,
    parameter,
    pinned_value,
    budget=None,
    seed=SEARCH_SEED,
):
    """Residue-field degree of a subvariety W of the extension over its
    image V, by specializing a parameter of V at a pinned generic rational
    value plus two seeded random ones.

    degree = number of distinct complex points of the specialized fiber
    (standard monomial count of its radical); birational exactly when the
    degree is 1.  Disagreement across the three samples raises.
    """
    vars = extension.ideal.vars
    w_ideal = Ideal(
        list(extension.ideal.generators)
        + [g.extend(vars) for g in w_generators],
        vars,
    )
    contracted = eliminate(w_ideal, extension.x_vars, budget)
    if contracted.groebner(budget).is_unit():
        raise InputError("W contracts to the empty set")
    if is_zero_dimensional(contracted, budget):
        raise InputError(
            "W contracts to a zero-dimensional set; need positive dimension"
        )
    if parameter not in extension.x_vars:
        raise InputError("parameter must be a base variable")
    pinned = Fraction(pinned_value)
    rng = random.Random(seed)
    values = [pinned]
    while len(values) < 3:
        candidate = Fraction(rng.randint(2, 41))
        if candidate not in values:
            values.append(candidate)
    degrees = []
    for value in values:
        gens = list(w_ideal.generators)
        gens.append(MPoly.variable(parameter, vars) - value)
        fiber = Ideal(gens, vars)
        if not is_zero_dimensional(fiber, budget):
            raise NonGenericSpecializationError(
                f"specialization {parameter} = {value} is not finite"
            )
        degrees.append(standard_monomial_count(radical_zero_dim(fiber, budget), budget))
    if len(set(degrees)) != 1:
        raise NonGenericSpecializationError(
            f"degree samples disagree: {degrees} at {list(map(str, values))}"
        )
    return degrees[0], degrees[0] == 1
