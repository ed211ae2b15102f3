"""Exact multivariate polynomials and polynomial integration over polytopes.

Integration over a simplex goes through the barycentric substitution
x = sum_i t_i v_i followed by termwise Dirichlet integration
    int_S t^a dV = vol(S) * (prod a_i!) * d! / (sum a_i + d)!,
so every integral is an exact rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .geometry import Polytope, Simplex, simplex_lattice_volume, triangulate

Exponent = Tuple[int, ...]


class Polynomial:
    """Sparse exact-rational polynomial in a fixed number of variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Dict[Exponent, Fraction]):
        clean = {e: Fraction(c) for e, c in terms.items() if c != 0}
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def constant(c, num_vars: int) -> "Polynomial":
        zero = (0,) * num_vars
        return Polynomial(num_vars, {zero: Fraction(c)})

    @staticmethod
    def linear(coeffs: Sequence, const=0) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = tuple(int(j == i) for j in range(n))
            terms[e] = Fraction(c)
        terms[(0,) * n] = Fraction(const)
        return Polynomial(n, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if self.is_zero:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def evaluate(self, point: Sequence) -> Fraction:
        p = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for x, k in zip(p, e):
                if k:
                    val *= x ** k
            total += val
        return total

    def _binop(self, other, sign):
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + sign * c
        return Polynomial(self.num_vars, terms)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.num_vars, {e: c * other for e, c in self.terms.items()}
            )
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.num_vars)
        for _ in range(k):
            result = result * self
        return result

    def substitute_linear(self, forms: Sequence[Sequence]) -> "Polynomial":
        """Replace variable j by the linear form forms[j] over fresh variables."""
        if len(forms) != self.num_vars:
            raise ValueError("need one substitution form per variable")
        new_nv = len(forms[0]) if forms else 0
        linears = [Polynomial.linear(f) for f in forms]
        power_cache: Dict[Tuple[int, int], Polynomial] = {}

        def power(j, k):
            key = (j, k)
            if key not in power_cache:
                power_cache[key] = linears[j] ** k
            return power_cache[key]

        out = Polynomial(new_nv, {})
        for e, c in self.terms.items():
            piece = Polynomial.constant(c, new_nv)
            for j, k in enumerate(e):
                if k:
                    piece = piece * power(j, k)
            out = out + piece
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        bits = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(
                f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(bits) + ")"


def product_of_linear_forms(
    forms: Sequence[tuple], num_vars: Optional[int] = None
) -> Polynomial:
    """Exact expansion of prod(<v, x> + c); the empty product is 1."""
    if not forms:
        if num_vars is None:
            raise ValueError("num_vars required for an empty product")
        return Polynomial.constant(1, num_vars)
    nv = len(forms[0][0])
    if num_vars is not None and num_vars != nv:
        raise ValueError("num_vars disagrees with the forms")
    result = Polynomial.constant(1, nv)
    for vec, const in forms:
        if len(vec) != nv:
            raise ValueError("forms have mixed variable counts")
        result = result * Polynomial.linear(vec, const)
    return result


def homogeneous_top(f: Polynomial) -> Polynomial:
    """Highest-total-degree homogeneous component."""
    if f.is_zero:
        raise ValueError("zero polynomial has no top component")
    top = f.total_degree()
    return Polynomial(
        f.num_vars, {e: c for e, c in f.terms.items() if sum(e) == top}
    )


def integrate_over_simplex(f: Polynomial, s: Simplex) -> Fraction:
    """Exact integral against the lattice-normalized measure on aff(s)."""
    n = len(s.vertices[0])
    if f.num_vars != n:
        raise ValueError("polynomial/simplex dimension mismatch")
    d = s.intrinsic_dim
    vol = simplex_lattice_volume(s)
    if d == 0:
        return Fraction(0)
    # x_j = sum_i t_i * v_i[j] over barycentric variables t_0..t_d
    forms = [tuple(v[j] for v in s.vertices) for j in range(n)]
    g = f.substitute_linear(forms)
    fact_d = math.factorial(d)
    total = Fraction(0)
    for e, c in g.terms.items():
        num = fact_d
        for a in e:
            num *= math.factorial(a)
        total += c * Fraction(num, math.factorial(sum(e) + d))
    return vol * total


def integrate_over_polytope(f: Polynomial, p: Polytope) -> Fraction:
    """Integral of f over p against the ambient lattice-normalized measure.

    Polytopes below ambient dimension have measure zero, hence integral 0.
    """
    if f.num_vars != p.ambient_dim:
        raise ValueError("polynomial/polytope dimension mismatch")
    if p.is_empty or p.intrinsic_dim < p.ambient_dim:
        return Fraction(0)
    return sum(
        (integrate_over_simplex(f, cell) for cell in triangulate(p)),
        Fraction(0),
    )
