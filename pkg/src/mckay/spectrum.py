"""Dirac spectrum of the round odd sphere S^(2n-1) from highest-weight families.

The eigenspaces are irreducible representations of the double cover of U(n):

* family 1: weight (a + 1/2, 1/2, ..., 1/2), eigenvalue (-1)^n (2n - 1 + 2a) / 2
* family 2: weight (-1/2, ..., -1/2, -b - 1/2), eigenvalue (2n - 1 + 2b) / 2
* family 3: weight (a + 1/2, 1/2, ..., 1/2, -1/2 (r times), -b - 1/2), with the
  two eigenvalues ((-1)^(n+r) +- 2(n + a + b)) / 2

with a, b >= 0.  Multiplicities come from the Weyl dimension formula.  Family 3
takes r = 0, ..., n - 2; r = 0 is needed for the totals to match the known
sphere multiplicities 2^(n-1) C(k + 2n - 2, k).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .errors import SemanticError

__all__ = ["HighestWeight", "SpectrumEntry", "weyl_dim", "dirac_spectrum", "aggregate",
           "spectrum_symmetry", "sphere_multiplicity"]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HighestWeight:
    mu: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", tuple(Fraction(x) for x in self.mu))
        if len(self.mu) < 1:
            raise ValueError("empty weight")

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def is_spinor(self) -> bool:
        return all(x.denominator == 2 for x in self.mu)


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: Fraction
    multiplicity: int
    family: int
    params: tuple[int, ...]  # (a,) / (b,) / (a, b, r)
    weight: HighestWeight


def weyl_dim(w: HighestWeight) -> int:
    mu = w.mu
    n = len(mu)
    if any(mu[i] < mu[i + 1] for i in range(n - 1)):
        raise SemanticError("not dominant")
    num = prod((mu[i] - mu[j] + j - i for i in range(n) for j in range(i + 1, n)), start=Fraction(1))
    den = prod((j - i for i in range(n) for j in range(i + 1, n)), start=1)
    value = num / den
    if value.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(value)


def _family_weights(n: int, cutoff: Fraction):
    """Yield (family, params, weight, eigenvalues) with some eigenvalue inside the cutoff."""
    base = Fraction(2 * n - 1, 2)
    top = int(cutoff - base)  # largest a (or b, or a + b) that can stay inside
    sign_n = (-1) ** n
    for a in range(top + 1):
        mu = (a + HALF,) + (HALF,) * (n - 1)
        yield 1, (a,), mu, (sign_n * (base + a),)
    for b in range(top + 1):
        mu = (-HALF,) * (n - 1) + (-b - HALF,)
        yield 2, (b,), mu, (base + b,)
    for r in range(0, n - 1):
        sign = (-1) ** (n + r)
        for total in range(top + 1):
            for a in range(total + 1):
                b = total - a
                mu = (a + HALF,) + (HALF,) * (n - 2 - r) + (-HALF,) * r + (-b - HALF,)
                s = n + a + b
                yield 3, (a, b, r), mu, (Fraction(sign + 2 * s, 2), Fraction(sign - 2 * s, 2))


def dirac_spectrum(n: int, cutoff) -> list[SpectrumEntry]:
    """All eigenspaces with |eigenvalue| <= cutoff, one entry per (weight, eigenvalue)."""
    cutoff = Fraction(cutoff)
    if n < 2:
        raise SemanticError("n must be at least 2")
    if cutoff < Fraction(2 * n - 1, 2):
        raise SemanticError("cutoff below the spectral gap")
    seen: set[tuple[tuple[Fraction, ...], Fraction]] = set()
    out: list[SpectrumEntry] = []
    for family, params, mu, eigenvalues in _family_weights(n, cutoff):
        weight = HighestWeight(mu)
        dim = None
        for ev in eigenvalues:
            if abs(ev) > cutoff or (mu, ev) in seen:
                continue
            seen.add((mu, ev))
            if dim is None:
                dim = weyl_dim(weight)
            out.append(SpectrumEntry(ev, dim, family, params, weight))
    out.sort(key=lambda e: (e.eigenvalue, e.family, e.params))
    return out


def aggregate(entries) -> dict[Fraction, int]:
    totals: dict[Fraction, int] = defaultdict(int)
    for e in entries:
        totals[e.eigenvalue] += e.multiplicity
    return dict(sorted(totals.items()))


def spectrum_symmetry(n: int, cutoff) -> bool:
    totals = aggregate(dirac_spectrum(n, cutoff))
    return all(totals.get(-ev) == m for ev, m in totals.items())


def sphere_multiplicity(n: int, k: int) -> int:
    """Known multiplicity of +-((2n - 1)/2 + k) on S^(2n-1): 2^(n-1) C(k + 2n - 2, k)."""
    return 2 ** (n - 1) * comb(k + 2 * n - 2, k)
