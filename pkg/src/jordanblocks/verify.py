"""Verification suites: every published value and identity, re-derived.

Each suite re-computes one family of claims from scratch and reports a
:class:`CheckResult`.  The suites are deterministic given the seed; they are
run by the ``verify paper`` CLI subcommand and, with pinned expectations, by
the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .classical import good_char_report, validate_classical_partition
from .char0 import check_theorem, exponents, predict_blocks
from .fields import GF, Field
from .fgl import (
    GeneralizedLaw,
    additive,
    iterated_tensor_series,
    multiplicative,
    random_fgl,
    random_generalized_law,
    scaled_multiplicative,
)
from .g2 import expected_adjoint, g2_table
from .linalg import (
    Matrix,
    Partition,
    jordan_partition,
    nilpotent_from_partition,
    unipotent_partition,
)
from .repring import (
    build_intertwiner_pair,
    build_symmetric_intertwiner,
    sigma_matrices,
    structure_constants,
    sym_partition,
    tensor_partition,
    wedge_partition,
)
from .series import TruncatedPoly, elementary_symmetric, mult_matrix


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _timed(name):
    def wrap(fn):
        def run(seed: int = 0) -> CheckResult:
            t0 = time.perf_counter()
            ok, detail = fn(seed)
            return CheckResult(name=name, ok=ok, detail=detail,
                               seconds=time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# -- 1. the char-2 computer table ------------------------------------------------

CHAR2_TABLE = {
    # n, law -> (tensor^2, wedge^2, Sym^2) partitions at p = 2
    (4, "m"): ((4, 4, 4, 4), (4, 2), (4, 4, 2)),
    (4, "a"): ((4, 4, 4, 4), (3, 3), (4, 4, 1, 1)),
    (5, "m"): ((8, 8, 4, 4, 1), (7, 3), (8, 4, 3)),
    (5, "a"): ((8, 8, 4, 4, 1), (7, 3), (8, 4, 1, 1, 1)),
    (6, "m"): ((8, 8, 8, 8, 2, 2), (8, 6, 1), (8, 8, 4, 1)),
    (6, "a"): ((8, 8, 8, 8, 2, 2), (7, 7, 1), (8, 8, 2, 1, 1, 1)),
    (7, "m"): ((8, 8, 8, 8, 8, 8, 1), (8, 8, 5), (8, 8, 8, 4)),
    (7, "a"): ((8, 8, 8, 8, 8, 8, 1), (7, 7, 7), (8, 8, 8, 1, 1, 1, 1)),
}


@_timed("char2-table")
def suite_char2_table(seed=0):
    """All 24 cells of the char-2 tensor/wedge/sym table for J_4..J_7."""
    field = GF(2)
    laws = {"a": additive(field), "m": multiplicative(field)}
    bad = []
    for (n, which), expected in CHAR2_TABLE.items():
        law = laws[which]
        got = (tensor_partition((n,), (n,), law, field),
               wedge_partition((n,), 2, law, field),
               sym_partition((n,), 2, law, field))
        for cell, (g, e) in enumerate(zip(got, expected)):
            if g != e:
                bad.append(f"n={n} {which} cell{cell}: {tuple(g)} != {e}")
    total = 3 * len(CHAR2_TABLE)
    detail = f"{total - len(bad)}/{total} cells match" + ("; " + "; ".join(bad) if bad else "")
    return not bad, detail


# -- 2. independence of the law ---------------------------------------------------

@_timed("law-independence")
def suite_law_independence(seed=0):
    """Structure constants agree across every law, n,m <= 9, p in {2,3,5}."""
    mismatches = 0
    checked = 0
    for p in (2, 3, 5):
        field = GF(p)
        laws = [multiplicative(field)]
        laws += [scaled_multiplicative(field, c) for c in range(1, p)]
        laws += [random_generalized_law(seed * 100 + s, 16, field, unit_linear=True)
                 for s in range(20)]
        base = additive(field)
        for n in range(1, 10):
            for m in range(1, 10):
                reference = structure_constants(n, m, base, field)
                for law in laws:
                    checked += 1
                    if structure_constants(n, m, law, field) != reference:
                        mismatches += 1
    return mismatches == 0, f"{checked} comparisons, {mismatches} mismatches"


# -- 3. the cyclic-group oracle -----------------------------------------------------

@_timed("cyclic-oracle")
def suite_cyclic_oracle(seed=0):
    """Multiplicative-law constants match unipotent (1+J_n)(x)(1+J_m) directly."""
    bad = []
    for p in (2, 3):
        field = GF(p)
        law = multiplicative(field)
        for n in range(1, p * p + 1):
            for m in range(1, p * p + 1):
                phi = nilpotent_from_partition(field, (n,))
                psi = nilpotent_from_partition(field, (m,))
                eye_n = Matrix.identity(field, n)
                eye_m = Matrix.identity(field, m)
                oracle = unipotent_partition((eye_n + phi).kron(eye_m + psi))
                viaring = structure_constants(n, m, law, field).to_partition()
                if oracle != viaring:
                    bad.append((p, n, m))
    return not bad, f"p in (2,3), all n,m <= p^2; {len(bad)} mismatches"


# -- 4. the printed wedge-square identities ------------------------------------------

@_timed("ring-calcs")
def suite_ring_calcs(seed=0):
    """The four wedge-square identities at p in {5,7,11}.

    Items (1) and (3) as printed.  Item (2) is printed with dimension 19 and
    item (4) with dimension 14 in the source; the dimension-consistent values
    (2J4+2J3+2J2+3J1 and J11+J7+J3 / 3J7) are what brute force returns and
    what the verification asserts; the discrepancy is reported in the detail.
    """
    bad = []
    for p in (5, 7, 11):
        field = GF(p)
        law = additive(field)
        cases = [
            ((3, 3, 1), (5, 3, 3, 3, 3, 3, 1)),
            ((3, 2, 2), (4, 4, 3, 3, 2, 2, 1, 1, 1)),
            ((2, 2, 1, 1, 1), (3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1)),
            ((7,), (7, 7, 7) if p == 7 else (11, 7, 3)),
        ]
        for lam, expected in cases:
            got = wedge_partition(lam, 2, law, field)
            if got != expected:
                bad.append((p, lam, tuple(got)))
    note = ("printed values for wedge^2(J3+2J2) and wedge^2(J7) are dimension-"
            "inconsistent; asserted against the brute-force values instead")
    return not bad, ("all identities hold; " + note) if not bad else f"mismatches: {bad}"


# -- 5. good characteristic: ad and Ad agree ------------------------------------------

_GOOD_PRIMES = {"GL": (2, 3, 5, 7, 11, 13), "Sp": (3, 5, 7, 11, 13), "SO": (3, 5, 7, 11, 13)}


def sample_classical_case(rng) -> tuple:
    """Random (kind, lambda, good p) with parts <= 8 and a small total dimension."""
    kind = rng.choice(("GL", "Sp", "SO"))
    p = rng.choice(_GOOD_PRIMES[kind])
    parts: list = []
    budget = rng.randint(4, 12)
    while sum(parts) < budget and len(parts) < 4:
        x = rng.randint(1, 8)
        if kind == "Sp" and x % 2 == 1:
            parts += [x, x]
        elif kind == "SO" and x % 2 == 0:
            parts += [x, x]
        else:
            parts.append(x)
    lam = Partition(sorted(parts, reverse=True))
    assert validate_classical_partition(kind, lam)
    return kind, lam, p


@_timed("classical-good")
def suite_classical_good(seed=0):
    """200 seeded (kind, lambda, good p): nilpotent and unipotent sides agree."""
    rng = random.Random(f"classical:{seed}")
    bad = []
    for _ in range(200):
        kind, lam, p = sample_classical_case(rng)
        report = good_char_report(kind, lam, p)
        assert report.good_characteristic
        if not report.equal:
            bad.append((kind, tuple(lam), p))
    return not bad, f"200 cases, {len(bad)} disagreements"


# -- 6. bad characteristic splits ------------------------------------------------------

@_timed("classical-bad")
def suite_classical_bad(seed=0):
    """The p = 2 counterexamples: Sp_4 regular and O_7 regular."""
    sp = good_char_report("Sp", (4,), 2)
    so = good_char_report("SO", (7,), 2)
    ok = (sp.nilpotent == (4, 4, 1, 1) and sp.unipotent == (4, 4, 2) and not sp.equal
          and so.nilpotent == (7, 7, 7) and so.unipotent == (8, 8, 5) and not so.equal)
    detail = (f"Sp(4): ad={sp.nilpotent} Ad={sp.unipotent}; "
              f"SO(7): ad={so.nilpotent} Ad={so.unipotent}")
    return ok, detail


# -- 7. the exceptional table ----------------------------------------------------------

@_timed("g2-table")
def suite_g2(seed=0):
    """All four orbits at p in {5,7,11,13}: both modes, both routes, table values."""
    bad = []
    for p in (5, 7, 11, 13):
        for row in g2_table(p):
            if not (row.matches_table and row.routes_agree
                    and row.adjoint_nilpotent == row.adjoint_unipotent):
                bad.append((p, row.orbit))
    return not bad, f"16 orbit rows checked, {len(bad)} failures"


# -- 8. tensoring with J_p gives free modules -------------------------------------------

@_timed("free-jp")
def suite_free_jp(seed=0):
    """J_a (x) J_p at characteristic p is a J_p multiple, both laws, a <= p."""
    bad = []
    for p in (3, 5, 7):
        field = GF(p)
        for law in (additive(field), multiplicative(field)):
            for a in range(1, p + 1):
                got = tensor_partition((a,), (p,), law, field)
                if got != (p,) * a:
                    bad.append((p, a, law.name))
    return not bad, f"p in (3,5,7), all cofactors, both laws; {len(bad)} failures"


# -- 9. intertwiners ---------------------------------------------------------------------

def _check_pair_intertwiner(n: int, m: int, law: GeneralizedLaw) -> bool:
    field = law.field
    lam = build_intertwiner_pair(n, m, law)
    y_plus_z = TruncatedPoly(field, (n, m), {(1, 0): field.one, (0, 1): field.one})
    left = lam @ mult_matrix(y_plus_z)
    right = mult_matrix(law.as_poly((n, m))) @ lam
    return left == right and lam.rank() == n * m


def _check_symmetric_intertwiner(n: int, m: int, law: GeneralizedLaw) -> bool:
    field = law.field
    lam = build_symmetric_intertwiner(n, m, law)
    trunc = (n,) * m
    s1 = elementary_symmetric(field, trunc, 1)
    series = iterated_tensor_series(law, m, trunc)
    if (lam @ mult_matrix(s1)) != (mult_matrix(series) @ lam):
        return False
    if lam.rank() != n**m:
        return False
    return all((lam @ s) == (s @ lam) for s in sigma_matrices(m, n, field))


@_timed("intertwiners")
def suite_intertwiners(seed=0):
    """50 seeded pair intertwiners and 50 seeded symmetric intertwiners."""
    rng = random.Random(f"intertwiners:{seed}")
    pair_bad = 0
    for i in range(50):
        field = Field(rng.choice((2, 3, 5, 7, 0)))
        n, m = rng.randint(2, 5), rng.randint(2, 5)
        law = random_generalized_law(seed * 1000 + i, n + m, field,
                                     unit_linear=rng.random() < 0.5)
        if not _check_pair_intertwiner(n, m, law):
            pair_bad += 1
    sym_bad = 0
    for i in range(50):
        m = rng.choice((2, 3))
        n = rng.randint(2, 4 if m == 2 else 3)
        field = Field(rng.choice((5, 7, 0) if m == 3 else (3, 5, 7, 0)))
        if rng.random() < 0.5:
            law = scaled_multiplicative(field, field.random_nonzero(rng))
        else:
            law = random_fgl(seed * 1000 + i, m * (n - 1) + 1, field)
        if not _check_symmetric_intertwiner(n, m, law):
            sym_bad += 1
    ok = pair_bad == 0 and sym_bad == 0
    return ok, f"pair: 50 cases {pair_bad} bad; symmetric: 50 cases {sym_bad} bad"


# -- 10. the characteristic-0 predictor ----------------------------------------------------

REGULAR_CASES = (
    [("GL", (r + 1,), "A", r) for r in range(1, 7)]
    + [("SO", (2 * r + 1,), "B", r) for r in range(2, 6)]
    + [("Sp", (2 * r,), "C", r) for r in range(1, 6)]
    + [("SO", (2 * r - 1, 1), "D", r) for r in range(2, 6)]
)


@_timed("char0-predictor")
def suite_char0(seed=0):
    """Regular nilpotents in the classical families plus the rank-2 exceptional point."""
    bad = []
    for kind, lam, family, rank in REGULAR_CASES:
        report = check_theorem(kind, lam)
        data = exponents(family, rank)
        want = Partition(sorted((2 * e + 1 for e in data.exponents), reverse=True))
        if not (report.contained and report.predicted == want and report.ad == want):
            bad.append((kind, lam))
    g2_pred = predict_blocks(exponents("G2"), 5)
    if g2_pred != (11, 3) or g2_pred != expected_adjoint("G2reg", 5):
        bad.append(("G2", "regular"))
    return not bad, f"{len(REGULAR_CASES) + 1} regular cases, {len(bad)} failures"


# -- 11. property suite ----------------------------------------------------------------------

def random_series_with_unit(rng, field: Field, trunc: int) -> TruncatedPoly:
    coeffs = [field.zero, field.random_nonzero(rng)]
    coeffs += [field.random_element(rng) for _ in range(trunc - 2)]
    return TruncatedPoly.univariate(field, trunc, coeffs)


@_timed("properties")
def suite_properties(seed=0):
    """Series-conjugation invariance, dimension conservation, multilinear independence."""
    from .linalg import apply_series

    rng = random.Random(f"properties:{seed}")
    failures = []

    # partition invariance under f with invertible linear coefficient
    for i in range(100):
        field = Field(rng.choice((2, 3, 5, 7, 13)))
        lam = Partition(sorted((rng.randint(1, 6) for _ in range(rng.randint(1, 4))),
                               reverse=True))
        x = nilpotent_from_partition(field, lam)
        f = random_series_with_unit(rng, field, max(lam) + 1)
        if jordan_partition(apply_series(f, x)) != lam:
            failures.append(("series-conj", i))

    # dimension conservation across the partition-producing operations
    for i in range(20):
        field = Field(rng.choice((2, 3, 5)))
        law = rng.choice((additive(field), multiplicative(field)))
        a = Partition(sorted((rng.randint(1, 5) for _ in range(rng.randint(1, 2))), reverse=True))
        b = Partition(sorted((rng.randint(1, 5) for _ in range(rng.randint(1, 2))), reverse=True))
        if tensor_partition(a, b, law, field).dim != a.dim * b.dim:
            failures.append(("tensor-dim", i))
        d = a.dim
        if wedge_partition(a, 2, law, field).dim != d * (d - 1) // 2:
            failures.append(("wedge-dim", i))
        if sym_partition(a, 2, law, field).dim != d * (d + 1) // 2:
            failures.append(("sym-dim", i))

    # wedge/sym do not depend on the law when m! is invertible
    for i in range(50):
        p = (5, 7)[i % 2]
        m = (2, 3)[(i // 2) % 2]
        field = GF(p)
        lam = Partition(sorted((rng.randint(1, 4) for _ in range(rng.randint(1, 2))),
                               reverse=True))
        degree = m * (max(lam) - 1) + 1 if max(lam) > 1 else 2
        if rng.random() < 0.5:
            law = random_fgl(seed * 500 + i, max(degree, 2), field)
        else:
            law = scaled_multiplicative(field, field.random_nonzero(rng))
        base = additive(field)
        if wedge_partition(lam, m, law, field) != wedge_partition(lam, m, base, field):
            failures.append(("wedge-independence", i))
        if sym_partition(lam, m, law, field) != sym_partition(lam, m, base, field):
            failures.append(("sym-independence", i))

    return not failures, f"100 conjugation + 20 dimension + 50 multilinear cases, " \
                         f"{len(failures)} failures"


SUITES = {
    "char2-table": suite_char2_table,
    "law-independence": suite_law_independence,
    "cyclic-oracle": suite_cyclic_oracle,
    "ring-calcs": suite_ring_calcs,
    "classical-good": suite_classical_good,
    "classical-bad": suite_classical_bad,
    "g2-table": suite_g2,
    "free-jp": suite_free_jp,
    "intertwiners": suite_intertwiners,
    "char0-predictor": suite_char0,
    "properties": suite_properties,
}


def verify_paper(only: str | None = None, seed: int = 0) -> list:
    """Run all (or one) verification suites; raises on unknown suite names."""
    if only is not None and only not in SUITES:
        raise KeyError(f"unknown suite {only!r}; choose from {', '.join(SUITES)}")
    names = [only] if only else list(SUITES)
    return [SUITES[name](seed=seed) for name in names]
