"""Adjoint Jordan partitions for the classical groups GL, Sp and SO.

The adjoint module is V (x) V* for GL, Sym^2 V for Sp and wedge^2 V for SO.
The nilpotent side is computed with the additive law, the unipotent side with
the multiplicative law (group conjugation), and in good characteristic the
two partitions agree.  The dual X* only matters up to similarity, so it is
realized as the plain transpose.  In bad characteristic (p = 2 for Sp/SO) the
same formulas are still evaluated; they are then the Sym^2/wedge^2 model
rather than a certified identification with the honest adjoint action, and
reports carry a flag saying so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharTwo
from .fields import Field
from .fgl import additive, multiplicative
from .linalg import (
    Matrix,
    Partition,
    jordan_partition,
    nilpotent_from_partition,
    unipotent_partition,
)
from .repring import induced_quotient_operator, tensor_operator
from .series import TruncatedPoly

KINDS = ("GL", "Sp", "SO")


def validate_classical_partition(kind: str, lam) -> bool:
    """Whether lam occurs as the partition of a nilpotent in the Lie algebra.

    GL: everything.  Sp: odd parts have even multiplicity.  SO: even parts
    have even multiplicity.  (Good-characteristic classification.)
    """
    lam = Partition(lam)
    if kind == "GL":
        return True
    if kind == "Sp":
        return all(lam.multiplicity(x) % 2 == 0 for x in set(lam) if x % 2 == 1)
    if kind == "SO":
        return all(lam.multiplicity(x) % 2 == 0 for x in set(lam) if x % 2 == 0)
    raise ValueError(f"unknown classical kind {kind!r}")


def is_good_prime(kind: str, p: int) -> bool:
    """p = 2 is bad for Sp and SO; every characteristic is fine for GL."""
    if kind not in KINDS:
        raise ValueError(f"unknown classical kind {kind!r}")
    return kind == "GL" or p != 2


def _require_valid(kind: str, lam) -> Partition:
    lam = Partition(lam)
    if not validate_classical_partition(kind, lam):
        raise ValueError(f"{tuple(lam)} is not a nilpotent partition for {kind}")
    return lam


def nilpotent_adjoint_partition(kind: str, lam, field: Field) -> Partition:
    """Partition of ad(X) for X nilpotent of type lam.

    GL: X (x) 1 + 1 (x) X^T; Sp: Sym^2 of X; SO: wedge^2 of X, all with the
    additive law.
    """
    lam = _require_valid(kind, lam)
    x = nilpotent_from_partition(field, lam)
    law = additive(field)
    if kind == "GL":
        return jordan_partition(tensor_operator(x, x.T, law))
    top = tensor_operator(x, x, law)
    shape = "sym" if kind == "Sp" else "wedge"
    return jordan_partition(induced_quotient_operator(top, lam.dim, 2, shape))


def unipotent_adjoint_partition(kind: str, lam, field: Field) -> Partition:
    """Partition of Ad(u) for u unipotent of type lam.

    GL: (1+X) (x) (1+X^T) minus the identity; Sp/SO: the multiplicative-law
    Sym^2/wedge^2 of X, whose unit shift is exactly Ad(u) - 1.
    """
    lam = _require_valid(kind, lam)
    x = nilpotent_from_partition(field, lam)
    if kind == "GL":
        eye = Matrix.identity(field, lam.dim)
        return unipotent_partition((eye + x).kron((eye + x.T)))
    top = tensor_operator(x, x, multiplicative(field))
    shape = "sym" if kind == "Sp" else "wedge"
    return jordan_partition(induced_quotient_operator(top, lam.dim, 2, shape))


def cayley_series(trunc: int, field: Field) -> TruncatedPoly:
    """(1-t)(1+t)^{-1} - 1 = 2 sum (-1)^i t^i, truncated; needs p != 2."""
    if field.p == 2:
        raise CharTwo("the Cayley transform needs 2 invertible")
    two = field(2)
    coeffs = [field.zero]
    for i in range(1, trunc):
        c = two if i % 2 == 0 else field.neg(two)
        coeffs.append(c)
    return TruncatedPoly.univariate(field, trunc, coeffs)


def springer_image(eps: TruncatedPoly, x: Matrix) -> Matrix:
    """1 + eps(X): a unipotent with the same partition as X when eps has a
    nonzero linear coefficient."""
    from .linalg import apply_series

    coeffs = eps.univariate_coeffs()
    if len(coeffs) < 2 or coeffs[1] == 0:
        raise ValueError("Springer series needs a nonzero linear coefficient")
    return Matrix.identity(x.field, x.nrows) + apply_series(eps, x)


@dataclass(frozen=True)
class AdjointReport:
    """Both adjoint partitions for one (kind, lambda, p) with the equality flag."""

    kind: str
    lam: tuple
    p: int
    nilpotent: Partition
    unipotent: Partition
    equal: bool
    good_characteristic: bool

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "lambda": list(self.lam),
            "p": self.p,
            "ad": self.nilpotent.to_json(),
            "Ad": self.unipotent.to_json(),
            "equal": self.equal,
            "good_characteristic": self.good_characteristic,
        }


def good_char_report(kind: str, lam, p: int) -> AdjointReport:
    field = Field(p)
    nil = nilpotent_adjoint_partition(kind, lam, field)
    uni = unipotent_adjoint_partition(kind, lam, field)
    return AdjointReport(
        kind=kind,
        lam=tuple(Partition(lam)),
        p=p,
        nilpotent=nil,
        unipotent=uni,
        equal=nil == uni,
        good_characteristic=is_good_prime(kind, p),
    )
