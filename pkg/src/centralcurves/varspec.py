"""Line-oriented input documents describing a presented variety.

A document is a sequence of sections introduced by keywords; '#' starts a
comment and blank lines are ignored:

    VARS x y                  declared variables, most significant first
    KIND plane-curve          plane-curve | space-curve | surface
    GENERATORS                one polynomial per line
    y^2 - x^4*(x+1)
    ASSERT irreducible        repeatable: irreducible | smooth-real-point
    ASSERT smooth-real-point
    CENTRAL-POINTS            asserted central points, one per line
    (0, 0, 1)
    CANDIDATES                name = num / den : monic relation in name
    t = y / x : t^2 - x^2*(x+1)
    WPRIME                    generators of a prime on the extension
    y
    PARAM z = 1               designated parameter and pinned value

Candidate numerators, denominators, and relations may mention the names of
other candidates (chained adjunctions); the fraction slash is any '/' not
inside a rational literal.  The canonical printer emits sections in the
order above, so parse(print(spec)) is the identity on canonical forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .extension import IntegralElement, RationalFunction
from .geometry import (
    PLANE_CURVE,
    SPACE_CURVE,
    SURFACE,
    AffinePresentation,
    Assertions,
    plane_curve,
)
from .groebner import Ideal
from .mpoly import MPoly
from .parsing import format_poly, parse_point, parse_poly

_KEYWORDS = {
    "VARS",
    "KIND",
    "GENERATORS",
    "ASSERT",
    "CENTRAL-POINTS",
    "CANDIDATES",
    "WPRIME",
    "PARAM",
}

_KINDS = {PLANE_CURVE, SPACE_CURVE, SURFACE}

_ASSERT_FLAGS = {"irreducible", "smooth-real-point"}

# A slash acting as the fraction bar: not between two digits.
_FRACTION_SLASH = re.compile(r"(?<!\d)/|/(?!\d)")


@dataclass(frozen=True)
class VarietySpec:
    vars: tuple
    kind: str
    generators: tuple
    assertions: Assertions = field(default_factory=Assertions)
    central_points: tuple = ()
    candidates: tuple = ()
    wprime: tuple = ()
    param: tuple | None = None  # (variable, pinned value)

    def presentation(self, budget=None):
        if self.kind == PLANE_CURVE:
            if len(self.generators) != 1:
                raise ParseError("a plane curve needs exactly one generator")
            return plane_curve(self.generators[0], self.assertions, budget)
        return AffinePresentation(
            Ideal(list(self.generators), self.vars), self.kind, self.assertions
        )


def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_spec(text):
    vars = None
    kind = None
    generators = []
    flags = set()
    central = []
    candidate_lines = []
    wprime_lines = []
    param = None
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head = line.split(None, 1)[0]
        if head in _KEYWORDS:
            rest = line[len(head) :].strip()
            if head == "VARS":
                names = tuple(rest.split())
                if not names:
                    raise ParseError(f"line {lineno}: VARS needs names")
                for name in names:
                    if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9_]*", name):
                        raise ParseError(f"line {lineno}: bad variable name {name!r}")
                if len(set(names)) != len(names):
                    raise ParseError(f"line {lineno}: duplicate variable")
                vars = names
                section = None
            elif head == "KIND":
                if rest not in _KINDS:
                    raise ParseError(
                        f"line {lineno}: kind must be one of {sorted(_KINDS)}"
                    )
                kind = rest
                section = None
            elif head == "ASSERT":
                if rest not in _ASSERT_FLAGS:
                    raise ParseError(
                        f"line {lineno}: assertion must be one of {sorted(_ASSERT_FLAGS)}"
                    )
                flags.add(rest)
                section = None
            elif head == "PARAM":
                m = re.fullmatch(r"([a-zA-Z][a-zA-Z0-9_]*)\s*=\s*(-?\d+(?:/\d+)?)", rest)
                if not m:
                    raise ParseError(f"line {lineno}: PARAM wants 'name = rational'")
                param = (m.group(1), Fraction(m.group(2)))
                section = None
            else:
                if rest:
                    raise ParseError(
                        f"line {lineno}: {head} takes no inline argument"
                    )
                section = head
            continue
        if section == "GENERATORS":
            generators.append((lineno, line))
        elif section == "CENTRAL-POINTS":
            central.append((lineno, line))
        elif section == "CANDIDATES":
            candidate_lines.append((lineno, line))
        elif section == "WPRIME":
            wprime_lines.append((lineno, line))
        else:
            raise ParseError(f"line {lineno}: content outside any section")
    if vars is None:
        raise ParseError("missing VARS")
    if kind is None:
        raise ParseError("missing KIND")
    if not generators:
        raise ParseError("missing GENERATORS")

    gens = tuple(_parse_line(parse_poly, line, vars, no) for no, line in generators)
    points = tuple(
        _parse_line(parse_point, line, len(vars), no) for no, line in central
    )
    names = []
    for no, line in candidate_lines:
        if "=" not in line:
            raise ParseError(f"line {no}: candidate wants 'name = num / den : relation'")
        names.append(line.split("=", 1)[0].strip())
    ring_names = tuple(vars) + tuple(names)
    candidates = tuple(
        _parse_candidate(line, vars, ring_names, no) for no, line in candidate_lines
    )
    wprime = tuple(
        _parse_line(parse_poly, line, ring_names, no).shrink_vars()
        for no, line in wprime_lines
    )
    assertions = Assertions(
        irreducible="irreducible" in flags,
        has_smooth_real_point="smooth-real-point" in flags,
    )
    if param is not None and param[0] not in vars:
        raise ParseError(f"PARAM variable {param[0]!r} is not declared")
    return VarietySpec(
        vars=vars,
        kind=kind,
        generators=gens,
        assertions=assertions,
        central_points=points,
        candidates=candidates,
        wprime=wprime,
        param=param,
    )


def _parse_line(fn, line, arg, lineno):
    try:
        return fn(line, arg)
    except ParseError as err:
        raise ParseError(f"line {lineno}: {err}") from None


def _parse_candidate(line, base_vars, ring_names, lineno):
    name_part, rest = line.split("=", 1)
    name = name_part.strip()
    if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9_]*", name):
        raise ParseError(f"line {lineno}: bad candidate name {name!r}")
    if name in base_vars:
        raise ParseError(f"line {lineno}: candidate name shadows a variable")
    if ":" not in rest:
        raise ParseError(f"line {lineno}: candidate needs ': relation'")
    frac_part, rel_part = rest.split(":", 1)
    m = _FRACTION_SLASH.search(frac_part)
    if m:
        num_text = frac_part[: m.start()]
        den_text = frac_part[m.end() :]
    else:
        num_text, den_text = frac_part, "1"
    other_names = tuple(n for n in ring_names if n != name)
    try:
        num = parse_poly(num_text.strip(), other_names)
        den = parse_poly(den_text.strip(), other_names)
        rel = parse_poly(rel_part.strip(), ring_names)
    except ParseError as err:
        raise ParseError(f"line {lineno}: {err}") from None
    # Keep only the variables each polynomial actually uses, so chained
    # candidates extend cleanly into whatever ring is current.
    return IntegralElement(
        name,
        RationalFunction(num.shrink_vars(), den.shrink_vars()),
        rel.shrink_vars(keep=(name,)),
    )


def print_spec(spec):
    """Canonical text form; parse_spec inverts it."""
    lines = ["VARS " + " ".join(spec.vars), f"KIND {spec.kind}", "GENERATORS"]
    lines.extend(format_poly(g) for g in spec.generators)
    if spec.assertions.irreducible:
        lines.append("ASSERT irreducible")
    if spec.assertions.has_smooth_real_point:
        lines.append("ASSERT smooth-real-point")
    if spec.central_points:
        lines.append("CENTRAL-POINTS")
        lines.extend(
            "(" + ", ".join(str(c) for c in p) + ")" for p in spec.central_points
        )
    if spec.candidates:
        lines.append("CANDIDATES")
        for cand in spec.candidates:
            lines.append(
                f"{cand.name} = {format_poly(cand.function.numerator)}"
                f" / {format_poly(cand.function.denominator)}"
                f" : {format_poly(cand.relation)}"
            )
    if spec.wprime:
        lines.append("WPRIME")
        lines.extend(format_poly(g) for g in spec.wprime)
    if spec.param is not None:
        lines.append(f"PARAM {spec.param[0]} = {spec.param[1]}")
    return "\n".join(lines) + "\n"
