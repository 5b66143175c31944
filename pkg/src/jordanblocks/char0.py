"""Characteristic-0 predictor: Weyl-group exponents vs adjoint Jordan blocks.

For a distinguished nilpotent whose even grading reaches top degree 2n, the
eigenvalue bookkeeping on a regular semisimple element pins r adjoint block
sizes: each exponent e contributes a block of size 2f+1 where f is the unique
representative of -e in 1..n modulo n+1.  The adjoint partitions themselves
are computed by an exact Clebsch-Gordan oracle: cross terms from the closed
formula for J_n (x) J_m, diagonal wedge/sym terms from the straightening
machinery at a prime larger than every block involved (which is exact for
these partition questions).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import (
    BlocksNotAllOdd,
    ExponentDivisible,
    NotDistinguished,
    UnknownType,
)
from .fields import Field, is_prime
from .fgl import additive
from .linalg import Partition
from .repring import RingElement, cg_tensor, sym_partition, wedge_partition

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")

_EXCEPTIONAL_EXPONENTS = {
    "G2": (1, 5),
    "F4": (1, 5, 7, 11),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
}

_EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}


@dataclass(frozen=True)
class WeylTypeData:
    family: str
    rank: int
    exponents: tuple

    @property
    def dim_lie_algebra(self) -> int:
        return sum(2 * e + 1 for e in self.exponents)


def positive_root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}[family]


def weyl_group_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}[family]


def lie_algebra_dim(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 2)
    if family in ("B", "C"):
        return rank * (2 * rank + 1)
    if family == "D":
        return rank * (2 * rank - 1)
    return {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}[family]


def exponents(family: str, rank: int | None = None) -> WeylTypeData:
    """Built-in exponent lists, validated against |W| and the root count."""
    if family not in FAMILIES:
        raise UnknownType(f"unknown family {family!r}")
    if family in _EXCEPTIONAL_EXPONENTS:
        expected_rank = _EXCEPTIONAL_RANK[family]
        if rank not in (None, expected_rank):
            raise UnknownType(f"{family} has rank {expected_rank}")
        rank = expected_rank
        exps = _EXCEPTIONAL_EXPONENTS[family]
    else:
        if rank is None or rank < 0:
            raise UnknownType("classical families need a non-negative rank")
        if family == "A":
            exps = tuple(range(1, rank + 1))
        elif family in ("B", "C"):
            exps = tuple(range(1, 2 * rank, 2))
        else:
            if rank < 2:
                raise UnknownType("type D starts at rank 2")
            exps = tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    data = WeylTypeData(family=family, rank=rank, exponents=exps)
    assert sum(exps) == positive_root_count(family, rank)
    assert prod(e + 1 for e in exps) == weyl_group_order(family, rank)
    assert data.dim_lie_algebra == lie_algebra_dim(family, rank)
    return data


# -- exact Clebsch-Gordan adjoint oracle -----------------------------------------

def _next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


def _pair_power_char0(n: int, shape: str) -> RingElement:
    """wedge^2 or Sym^2 of a single block in characteristic 0.

    Computed over F_p for a prime p > 2n, where the answer agrees with the
    rational one.
    """
    p = _next_prime(max(2 * n, 2))
    field = Field(p)
    law = additive(field)
    part = (wedge_partition if shape == "wedge" else sym_partition)((n,), 2, law, field)
    return RingElement.from_partition(part)


def ad_partition_char0(kind: str, lam) -> Partition:
    """Adjoint partition over Q: GL on V (x) V*, Sp on Sym^2 V, SO on wedge^2 V."""
    lam = Partition(lam)
    if kind == "GL":
        out = RingElement()
        for a in lam:
            for b in lam:
                out = out + cg_tensor(a, b)
        assert out.dim() == lam.dim**2
        return out.to_partition()
    if kind not in ("Sp", "SO"):
        raise ValueError(f"unknown classical kind {kind!r}")
    shape = "sym" if kind == "Sp" else "wedge"
    out = RingElement()
    parts = tuple(lam)
    for i, a in enumerate(parts):
        out = out + _pair_power_char0(a, shape)
        for b in parts[i + 1:]:
            out = out + cg_tensor(a, b)
    d = lam.dim
    assert out.dim() == (d * (d + 1) // 2 if kind == "Sp" else d * (d - 1) // 2)
    return out.to_partition()


# -- the predictor ----------------------------------------------------------------

def springer_condition(ad) -> bool:
    """Sufficiency gate: dim g(4) = dim g(2) - 1, i.e. exactly one block of size 3.

    Only meaningful for adjoint partitions of distinguished nilpotents, where
    every block is odd; a non-odd block is an error, not a False.
    """
    ad = Partition(ad)
    if any(x % 2 == 0 for x in ad):
        raise BlocksNotAllOdd(f"{tuple(ad)} has an even block")
    return ad.multiplicity(3) == 1


def predict_blocks(data, n: int) -> Partition:
    """Block sizes 2f_i + 1 with f_i = -e_i mod (n+1), each in 1..n."""
    exps = data.exponents if isinstance(data, WeylTypeData) else tuple(data)
    modulus = n + 1
    blocks = []
    for e in exps:
        if e % modulus == 0:
            raise ExponentDivisible(
                f"exponent {e} is divisible by {modulus}; the torus would have a fixed vector")
        f = (-e) % modulus
        blocks.append(2 * f + 1)
    return Partition(sorted(blocks, reverse=True))


def is_distinguished(kind: str, lam) -> bool:
    """GL: one part; Sp: distinct even parts; SO: distinct odd parts."""
    lam = Partition(lam)
    parts = tuple(lam)
    if kind == "GL":
        return len(parts) == 1
    if kind == "Sp":
        return len(set(parts)) == len(parts) and all(x % 2 == 0 for x in parts)
    if kind == "SO":
        return len(set(parts)) == len(parts) and all(x % 2 == 1 for x in parts)
    raise ValueError(f"unknown classical kind {kind!r}")


def _weyl_family(kind: str, dim: int):
    if kind == "GL":
        return "A", dim - 1
    if kind == "Sp":
        return "C", dim // 2
    return ("B", (dim - 1) // 2) if dim % 2 else ("D", dim // 2)


def _multiset_contained(small: Partition, big: Partition) -> bool:
    from .errors import NotContained

    try:
        big.difference(small)
    except NotContained:
        return False
    return True


@dataclass(frozen=True)
class PredictorReport:
    kind: str
    lam: tuple
    family: str
    rank: int
    n: int
    gate: bool
    predicted: Partition | None
    ad: Partition
    contained: bool

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "lambda": list(self.lam),
            "family": self.family,
            "rank": self.rank,
            "n": self.n,
            "gate": self.gate,
            "predicted": None if self.predicted is None else self.predicted.to_json(),
            "ad": self.ad.to_json(),
            "contained": self.contained,
        }


def check_theorem(kind: str, lam) -> PredictorReport:
    """Full predictor pipeline for a distinguished classical nilpotent.

    GL is taken traceless: the adjoint partition drops the central J_1.  When
    the sufficiency gate holds the predicted multiset must embed in the
    adjoint partition; that containment is asserted, everything else is data.
    """
    lam = Partition(lam)
    if not is_distinguished(kind, lam):
        raise NotDistinguished(f"{tuple(lam)} is not distinguished for {kind}")
    ad = ad_partition_char0(kind, lam)
    if kind == "GL":
        ad = ad.difference(Partition((1,)))
    family, rank = _weyl_family(kind, lam.dim)
    data = exponents(family, rank)
    n = (max(ad) - 1) // 2 if len(ad) else 0
    gate = springer_condition(ad)
    try:
        predicted = predict_blocks(data, n)
        contained = _multiset_contained(predicted, ad)
    except ExponentDivisible:
        if gate:
            raise
        predicted = None
        contained = False
    if gate and not contained:
        raise AssertionError(
            f"gate passed but prediction {tuple(predicted)} not contained in {tuple(ad)}")
    return PredictorReport(kind=kind, lam=tuple(lam), family=family, rank=rank,
                           n=n, gate=gate, predicted=predicted, ad=ad,
                           contained=contained)
