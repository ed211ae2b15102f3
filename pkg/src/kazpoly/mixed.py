"""Mixed volume and mixed integral via finite-difference polarization.

polarize evaluates the unique symmetric multilinear form attached to a
degree-k homogeneous functional on convex bodies:

    B(P_1, ..., P_k) = (1/k!) sum_{0 != S subseteq [k]} (-1)^(k-|S|) f(sum_S P_i),

where sum_S is the Minkowski sum.  Subset sums are built once per call by
extending smaller ones (keyed by bitmask), so a k-body call performs 2^k - 1
functional evaluations.  Evaluations are independent and could run
concurrently; everything here is pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .geometry import Polytope, minkowski_sum, volume
from .polynomials import Polynomial, integrate_over_polytope


def _subset_sums(bodies: Sequence[Polytope]) -> dict:
    k = len(bodies)
    sums = {}
    for mask in range(1, 1 << k):
        low = mask & (-mask)
        rest = mask ^ low
        body = bodies[low.bit_length() - 1]
        sums[mask] = body if rest == 0 else minkowski_sum(sums[rest], body)
    return sums


def polarize(
    f: Callable[[Polytope], Fraction], bodies: Sequence[Polytope], k: int
) -> Fraction:
    """Finite-difference polarization of f at the given k bodies."""
    if len(bodies) != k:
        raise ValueError(f"polarization of degree {k} needs exactly {k} bodies")
    sums = _subset_sums(bodies)
    total = Fraction(0)
    for mask, body in sums.items():
        sign = 1 if (k - bin(mask).count("1")) % 2 == 0 else -1
        total += sign * f(body)
    return total / math.factorial(k)


def mixed_volume(bodies: Sequence[Polytope]) -> Fraction:
    """Polarization of the volume functional; diagonal gives volume back."""
    if not bodies:
        raise ValueError("need at least one body")
    n = bodies[0].ambient_dim
    if any(b.ambient_dim != n for b in bodies):
        raise ValueError("bodies live in different ambient dimensions")
    if len(bodies) != n:
        raise ValueError(
            f"mixed volume in dimension {n} takes {n} bodies, got {len(bodies)}"
        )
    return polarize(volume, bodies, n)


def mixed_integral(f: Polynomial, bodies: Sequence[Polytope]) -> Fraction:
    """Polarization of P -> int_P f for homogeneous f, over n+deg(f) bodies."""
    if not f.is_homogeneous():
        raise ValueError("mixed integral requires a homogeneous polynomial")
    if not bodies:
        raise ValueError("need at least one body")
    n = bodies[0].ambient_dim
    if any(b.ambient_dim != n for b in bodies):
        raise ValueError("bodies live in different ambient dimensions")
    if f.num_vars != n:
        raise ValueError("polynomial/body dimension mismatch")
    k = n + f.total_degree()
    if len(bodies) != k:
        raise ValueError(
            f"mixed integral of degree {f.total_degree()} in dimension {n} "
            f"takes {k} bodies, got {len(bodies)}"
        )
    return polarize(lambda p: integrate_over_polytope(f, p), bodies, k)
