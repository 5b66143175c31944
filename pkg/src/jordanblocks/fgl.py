"""One-dimensional formal group laws and generalized two-variable laws.

A law is a truncated two-variable series F(u, v) with invertible linear part
xi_1 u + xi_2 v.  A *formal group law* additionally has xi_1 = xi_2 = 1 and
passes the unit, commutativity and associativity axioms up to its truncation;
:func:`validate_fgl` reports each axiom separately, since the tensor
constructions downstream only need the invertible linear part.

The built-in laws (additive u+v, multiplicative u+v+uv and its scaled
variant) are exact: their coefficient support is finite, so they can be used
at any truncation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidLaw, TruncationTooShort
from .fields import Field
from .series import TruncatedPoly


class GeneralizedLaw:
    """Two-variable series with invertible linear part, degree-truncated."""

    __slots__ = ("field", "degree", "coeffs", "exact", "name")

    def __init__(self, field: Field, degree: int, coeffs: dict, exact: bool = False,
                 name: str | None = None):
        self.field = field
        self.degree = int(degree)
        self.exact = exact
        self.name = name
        clean = {}
        for (a, b), c in coeffs.items():
            if a < 0 or b < 0 or a + b > self.degree:
                raise InvalidLaw(f"coefficient ({a},{b}) outside degree bound {self.degree}")
            if c != 0:
                clean[(a, b)] = c
        if clean.get((0, 0)):
            raise InvalidLaw("law has a nonzero constant term")
        if not clean.get((1, 0)) or not clean.get((0, 1)):
            raise InvalidLaw("linear part must be invertible (xi_1, xi_2 nonzero)")
        self.coeffs = clean

    @property
    def xi1(self):
        return self.coeffs[(1, 0)]

    @property
    def xi2(self):
        return self.coeffs[(0, 1)]

    def coefficient(self, a: int, b: int):
        return self.coeffs.get((a, b), self.field.zero)

    def has_unit_linear_part(self) -> bool:
        return self.xi1 == self.field.one and self.xi2 == self.field.one

    def fingerprint(self):
        """Hashable identity used for memoization keys."""
        return (self.field.p, self.degree, self.exact,
                frozenset((k, v) for k, v in self.coeffs.items()))

    def __eq__(self, other):
        if not isinstance(other, GeneralizedLaw):
            return NotImplemented
        return self.fingerprint() == other.fingerprint()

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        if self.name:
            return f"<law {self.name} over {self.field}>"
        return f"<law deg<={self.degree} over {self.field}>"

    def require_degree(self, d: int) -> None:
        if not self.exact and self.degree < d:
            raise TruncationTooShort(
                f"law truncated at degree {self.degree} but degree {d} is needed")

    def as_poly(self, trunc: Sequence[int]) -> TruncatedPoly:
        """The series as an element of k[u,v]/(u^{r_1}, v^{r_2})."""
        if len(trunc) != 2:
            raise ValueError("a law is a two-variable series")
        self.require_degree(trunc[0] + trunc[1] - 2)
        coeffs = {(a, b): c for (a, b), c in self.coeffs.items()
                  if a < trunc[0] and b < trunc[1]}
        return TruncatedPoly(self.field, tuple(trunc), coeffs)

    def eval(self, g: TruncatedPoly, h: TruncatedPoly,
             degree_cap: int | None = None) -> TruncatedPoly:
        """F(g, h) for two series with zero constant term in a common algebra.

        With ``degree_cap`` set, only terms of total degree <= cap are kept;
        those are fully determined by the law's coefficients up to the cap.
        """
        g._check_shape(h)
        needed = sum(r - 1 for r in g.trunc)
        if degree_cap is not None:
            needed = min(needed, degree_cap)
        self.require_degree(needed)
        field, trunc = g.field, g.trunc
        out = TruncatedPoly.zero(field, trunc)
        gpow = {0: TruncatedPoly.constant(field, trunc, field.one)}
        hpow = {0: TruncatedPoly.constant(field, trunc, field.one)}

        def power(cache, base, k):
            if k not in cache:
                cache[k] = power(cache, base, k - 1) * base
            return cache[k]

        for (a, b), c in sorted(self.coeffs.items(), key=lambda kv: sum(kv[0])):
            if a + b > needed:
                continue
            term = power(gpow, g, a) * power(hpow, h, b)
            out = out + term.scale(c)
        if degree_cap is not None:
            out = out.truncate_degree(degree_cap)
        return out


def additive(field: Field) -> GeneralizedLaw:
    one = field.one
    return GeneralizedLaw(field, 2, {(1, 0): one, (0, 1): one}, exact=True, name="additive")


def multiplicative(field: Field) -> GeneralizedLaw:
    one = field.one
    return GeneralizedLaw(field, 2, {(1, 0): one, (0, 1): one, (1, 1): one},
                          exact=True, name="multiplicative")


def scaled_multiplicative(field: Field, c) -> GeneralizedLaw:
    """u + v + c uv; a formal group law for any c (c = 0 degenerates to additive)."""
    one = field.one
    coeffs = {(1, 0): one, (0, 1): one}
    c = field(c)
    if c != 0:
        coeffs[(1, 1)] = c
    return GeneralizedLaw(field, 2, coeffs, exact=True, name=f"u+v+{c}uv")


@dataclass(frozen=True)
class LawReport:
    """Axiom-by-axiom validation result for a candidate formal group law."""

    unit: bool
    commutative: bool
    associative: bool
    degree: int

    @property
    def ok(self) -> bool:
        return self.unit and self.commutative and self.associative


def validate_fgl(law: GeneralizedLaw, degree: int | None = None) -> LawReport:
    """Check F(u,0)=u, F(0,v)=v, symmetry and associativity up to a degree.

    Associativity compares F(F(u,v),w) with F(u,F(v,w)) coefficient-wise on
    all terms of total degree <= degree; higher terms are not determined by a
    truncated law and are ignored.
    """
    field = law.field
    if degree is None:
        degree = max(law.degree, 6) if law.exact else law.degree
    unit = law.has_unit_linear_part()
    for (a, b), _ in law.coeffs.items():
        if a + b > degree:
            continue
        if (b == 0 and a != 1) or (a == 0 and b != 1):
            unit = False
    commutative = all(law.coefficient(b, a) == c for (a, b), c in law.coeffs.items()
                      if a + b <= degree)

    trunc = (degree + 1, degree + 1, degree + 1)
    u = TruncatedPoly.variable(field, trunc, 0)
    v = TruncatedPoly.variable(field, trunc, 1)
    w = TruncatedPoly.variable(field, trunc, 2)
    left = law.eval(law.eval(u, v, degree_cap=degree), w, degree_cap=degree)
    right = law.eval(u, law.eval(v, w, degree_cap=degree), degree_cap=degree)
    return LawReport(unit=unit, commutative=commutative, associative=left == right,
                     degree=degree)


def random_generalized_law(seed: int, degree: int, field: Field,
                           unit_linear: bool = False) -> GeneralizedLaw:
    """Seed-deterministic random law: random coefficients for a+b >= 2."""
    import random

    rng = random.Random(f"law:{seed}:{degree}:{field.p}")
    one = field.one
    coeffs = {}
    if unit_linear:
        coeffs[(1, 0)] = one
        coeffs[(0, 1)] = one
    else:
        coeffs[(1, 0)] = field.random_nonzero(rng)
        coeffs[(0, 1)] = field.random_nonzero(rng)
    for total in range(2, degree + 1):
        for a in range(total + 1):
            c = field.random_element(rng)
            if c != 0:
                coeffs[(a, total - a)] = c
    return GeneralizedLaw(field, degree, coeffs, exact=False, name=f"random#{seed}")


def random_fgl(seed: int, degree: int, field: Field) -> GeneralizedLaw:
    """Seeded valid formal group law: the additive law transported along a
    random invertible series g, i.e. F(u, v) = g(g^{-1}(u) + g^{-1}(v)).

    Unit, commutativity and associativity hold by construction, so these are
    honest formal group laws in every characteristic.
    """
    import random

    from .series import compose_inverse

    rng = random.Random(f"fgl:{seed}:{degree}:{field.p}")
    r = degree + 1
    g_coeffs = [field.zero, field.one] + [field.random_element(rng) for _ in range(2, r)]
    g = TruncatedPoly.univariate(field, r, g_coeffs)
    g_inv = compose_inverse(g)

    trunc = (r, r)
    u = TruncatedPoly.variable(field, trunc, 0)
    v = TruncatedPoly.variable(field, trunc, 1)
    inner = g_inv.substitute([u]) + g_inv.substitute([v])
    series = g.substitute([inner]).truncate_degree(degree)
    coeffs = {exp: c for exp, c in series.coeffs.items()}
    return GeneralizedLaw(field, degree, coeffs, exact=False, name=f"transported#{seed}")


def iterated_tensor_series(law: GeneralizedLaw, m: int, trunc: Sequence[int]) -> TruncatedPoly:
    """The m-fold tensor series: Y_1 for m=1, then F(previous, Y_m).

    For a valid formal group law the result is symmetric in the variables and
    congruent to Y_1 + ... + Y_m modulo degree 2.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(trunc) != m:
        raise ValueError("truncation vector must have one entry per factor")
    field = law.field
    out = TruncatedPoly.variable(field, trunc, 0)
    for i in range(1, m):
        out = law.eval(out, TruncatedPoly.variable(field, trunc, i))
    return out


# -- law files ------------------------------------------------------------------

def law_to_json(law: GeneralizedLaw) -> dict:
    coeffs = [{"a": a, "b": b, "c": law.field.to_string(c)}
              for (a, b), c in sorted(law.coeffs.items())]
    return {"p": law.field.p, "trunc": law.degree, "coeffs": coeffs}


def law_from_json(data: dict) -> GeneralizedLaw:
    try:
        field = Field(int(data["p"]))
        degree = int(data["trunc"])
        coeffs = {}
        for entry in data["coeffs"]:
            coeffs[(int(entry["a"]), int(entry["b"]))] = field(entry["c"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidLaw(f"malformed law data: {exc}") from exc
    # the linear part defaults to u + v unless overridden explicitly
    coeffs.setdefault((1, 0), field.one)
    coeffs.setdefault((0, 1), field.one)
    return GeneralizedLaw(field, max(degree, 2), coeffs, exact=False, name="file")


def load_law(path: str) -> GeneralizedLaw:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidLaw(f"{path}: not valid JSON ({exc})") from exc
    return law_from_json(data)
