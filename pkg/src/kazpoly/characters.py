"""Oracle-grade character computations: weight systems, tensor spectra, PRV.

Weight multiplicities come from the Freudenthal recursion; tensor products
from signed reflection of rho-shifted weights (points landing on a chamber
wall contribute nothing).  Both carry built-in consistency asserts (total
dimension, W-invariance) because this module exists to check theorems, not
to be fast.  Results are memoized per (root system, weight) and must be
treated as read-only after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .geometry import lattice_points
from .linalg import solve
from .rootdata import (
    RootSystem,
    WeightSet,
    dominant_representative,
    is_dominant,
    moment_polytope,
    pairing,
    simple_reflect,
    weyl_dim,
    weyl_orbit,
)

Weight = Tuple[int, ...]

DESK_DIM_LIMIT = 10 ** 6


@dataclass(frozen=True)
class CharacterElement:
    """Torus character of a representation: weight -> multiplicity."""

    rd: RootSystem
    weights: tuple  # sorted ((weight, mult), ...)

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.weights)

    def dimension(self) -> int:
        return sum(m for _, m in self.weights)


@dataclass(frozen=True)
class SpectrumSet:
    """Dominant support of a representation, multiplicities retained.

    Spectral comparisons ignore the multiplicities; they are kept because the
    tensor dimension identity is the best implementation check available.
    """

    rd: RootSystem
    dominant_weights: tuple  # sorted ((weight, mult), ...)

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.dominant_weights)

    def support(self) -> frozenset:
        return frozenset(w for w, _ in self.dominant_weights)


def _root_lattice_coeffs(rd: RootSystem, v: Weight) -> Optional[tuple]:
    """Integer coefficients of v in the simple-root basis, or None."""
    simples = rd.simple_roots
    if not simples:
        return () if all(x == 0 for x in v) else None
    k = len(simples)
    gram = [[sum(a * b for a, b in zip(simples[i], simples[j])) for j in range(k)]
            for i in range(k)]
    rhs = [sum(a * b for a, b in zip(simples[i], v)) for i in range(k)]
    coeffs = solve(gram, rhs)
    if coeffs is None:
        return None
    # verify v really is in the span, and integrally so
    recon = [sum(c * root[t] for c, root in zip(coeffs, simples)) for t in range(rd.rank)]
    if any(r != x for r, x in zip(recon, v)):
        return None
    if any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


@lru_cache(maxsize=None)
def _dominant_multiplicities(rd: RootSystem, lam: Weight) -> tuple:
    """Freudenthal recursion: multiplicities at the dominant weights of V_lam.

    Candidates are the lattice points of the moment polytope of lam whose
    difference from lam lies in the root lattice, processed by increasing
    height so that every m(mu + k*alpha) lookup is already available.
    """
    dim = weyl_dim(rd, lam)
    if dim > DESK_DIM_LIMIT:
        raise ValueError(f"dim V_lambda = {dim} exceeds the desk-scale guard")
    candidates = []
    for pt in lattice_points(moment_polytope(WeightSet(rd, [lam]))):
        coeffs = _root_lattice_coeffs(rd, tuple(a - b for a, b in zip(lam, pt)))
        if coeffs is not None:
            candidates.append((sum(coeffs), pt))
    candidates.sort()
    rho = rd.rho_int
    lam_rho = tuple(a + r for a, r in zip(lam, rho))
    mult: Dict[Weight, int] = {}
    for height, mu in candidates:
        if height == 0:
            assert mu == lam
            mult[lam] = 1
            continue
        acc = Fraction(0)
        for alpha in rd.positive_roots:
            k = 1
            while True:
                nu = tuple(x + k * a for x, a in zip(mu, alpha))
                rep = dominant_representative(rd, nu)
                m = mult.get(rep)
                if m is None:
                    break
                acc += m * rd.inner_product(nu, alpha)
                k += 1
        mu_rho = tuple(a + r for a, r in zip(mu, rho))
        denom = rd.inner_product(
            tuple(a + b for a, b in zip(lam_rho, mu_rho)),
            tuple(a - b for a, b in zip(lam_rho, mu_rho)),
        )
        assert denom > 0, "Freudenthal denominator must be positive"
        value = 2 * acc / denom
        assert value.denominator == 1 and value > 0, "non-integral multiplicity"
        mult[mu] = int(value)
    return tuple(sorted(mult.items()))


def weight_multiplicities(rd: RootSystem, lam) -> CharacterElement:
    """Full weight system of the irreducible with highest weight lam."""
    lam = tuple(int(x) for x in lam)
    if not is_dominant(rd, lam):
        raise ValueError("highest weight must be dominant")
    full: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(rd, lam):
        for w in weyl_orbit(rd, mu):
            full[w] = m
    total = sum(full.values())
    expected = weyl_dim(rd, lam)
    assert total == expected, f"weight system sums to {total}, expected {expected}"
    return CharacterElement(rd, tuple(sorted(full.items())))


@lru_cache(maxsize=None)
def _tensor_dominant(rd: RootSystem, lam: Weight, mu: Weight) -> tuple:
    # run the reflections over the smaller weight system
    if weyl_dim(rd, mu) > weyl_dim(rd, lam):
        lam, mu = mu, lam
    rho = rd.rho_int
    nsimple = len(rd.simple_pairings)
    out: Dict[Weight, int] = {}
    for nu, m in weight_multiplicities(rd, mu).weights:
        xi = tuple(a + b + r for a, b, r in zip(lam, nu, rho))
        sign = 1
        while True:
            neg = next(
                (i for i in range(nsimple) if pairing(rd.simple_pairings[i], xi) < 0),
                None,
            )
            if neg is None:
                break
            xi = simple_reflect(rd, neg, xi)
            sign = -sign
        if any(pairing(rd.simple_pairings[i], xi) == 0 for i in range(nsimple)):
            continue  # on a chamber wall: stabilizer kills the term
        kappa = tuple(a - r for a, r in zip(xi, rho))
        out[kappa] = out.get(kappa, 0) + sign * m
    result = {w: m for w, m in out.items() if m != 0}
    assert all(m > 0 for m in result.values()), "negative tensor multiplicity"
    total = sum(m * weyl_dim(rd, w) for w, m in result.items())
    expected = weyl_dim(rd, lam) * weyl_dim(rd, mu)
    assert total == expected, (
        f"tensor dimension check failed: {total} != {expected}"
    )
    return tuple(sorted(result.items()))


def tensor_spectrum(rd: RootSystem, lam, mu) -> SpectrumSet:
    """Decomposition of V_lam (x) V_mu into dominant weights with multiplicity."""
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if not (is_dominant(rd, lam) and is_dominant(rd, mu)):
        raise ValueError("tensor factors must have dominant highest weights")
    return SpectrumSet(rd, _tensor_dominant(rd, lam, mu))


def spec_w(rd: RootSystem, spectrum: SpectrumSet) -> WeightSet:
    """Union of the Weyl orbits of the spectrum, multiplicities dropped."""
    pts = set()
    for w, _ in spectrum.dominant_weights:
        pts |= weyl_orbit(rd, w)
    return WeightSet(rd, pts)


def irreducible_spectrum(rd: RootSystem, lam) -> SpectrumSet:
    lam = tuple(int(x) for x in lam)
    if not is_dominant(rd, lam):
        raise ValueError("highest weight must be dominant")
    return SpectrumSet(rd, ((lam, 1),))


def check_prv(rd: RootSystem, lam, mu) -> tuple:
    """Orbit-sum inclusion into the tensor spectrum's orbit set.

    Returns (holds, witness): a witness is a sum point missing from the
    tensor side, which the underlying theorem says cannot exist — seeing one
    means an implementation bug.
    """
    a = spec_w(rd, irreducible_spectrum(rd, lam)).points
    b = spec_w(rd, irreducible_spectrum(rd, mu)).points
    target = set(spec_w(rd, tensor_spectrum(rd, lam, mu)).points)
    for x in a:
        for y in b:
            s = tuple(p + q for p, q in zip(x, y))
            if s not in target:
                return False, s
    return True, None


def check_weight_polytope_additivity(rd: RootSystem, lam, mu) -> bool:
    """Minkowski sum of weight polytopes vs weight polytope of the tensor."""
    from .geometry import minkowski_sum
    from .rootdata import weight_polytope

    lhs = minkowski_sum(
        weight_polytope(WeightSet(rd, [lam])),
        weight_polytope(WeightSet(rd, [mu])),
    )
    keys = [w for w, _ in tensor_spectrum(rd, lam, mu).dominant_weights]
    rhs = weight_polytope(WeightSet(rd, keys))
    return lhs == rhs
