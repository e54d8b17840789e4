"""Phi-adic Newton polygons over a prime p.

Given a monic polynomial F and a monic lift phi of an irreducible
factor of F mod p, the digits of the phi-adic expansion of F carry a
lower convex hull whose positive-slope part bounds the p-valuation of
the index [O_K : Z[theta]].  Each positive edge has a residual
polynomial over the residue field F_{p^(deg phi)}; when every residual
polynomial of every repeated factor is squarefree the bound is exact.

Points are indexed from the leading digit: point i has height equal to
the p-valuation of digit number (n - i), so the hull starts at (0, 0)
and climbs to (n, v_p(digit 0)) with increasing slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import INF, InternalError, is_prime, vp_fraction
from .poly import (
    ExtField,
    ModPoly,
    Poly,
    PrimeField,
    X,
    factor_mod_p,
    fp_deriv,
    fp_gcd,
    gauss_valuation,
    phi_expansion,
    reduce_poly,
)


@dataclass(frozen=True)
class Edge:
    """One hull edge from (x0, y0) to (x1, y1), x1 > x0, integer heights."""

    x0: int
    y0: int
    x1: int
    y1: int

    @property
    def run(self) -> int:
        return self.x1 - self.x0

    @property
    def rise(self) -> int:
        return self.y1 - self.y0

    @property
    def slope(self) -> Fraction:
        return Fraction(self.rise, self.run)

    @property
    def segments(self) -> int:
        """Number of minimal lattice segments on the edge (= deg of the
        residual polynomial)."""
        return math.gcd(self.run, abs(self.rise)) if self.rise else self.run

    @property
    def step(self):
        """(dx, dy) of one minimal lattice segment."""
        t = self.segments
        return self.run // t, self.rise // t


@dataclass(frozen=True)
class ResidualPoly:
    """Residual polynomial of a positive edge, monic, over F_{p^r}.

    `coeffs` is ascending in the auxiliary variable; entries are ints
    for r = 1 and int tuples for r >= 2.
    """

    edge: Edge
    p: int
    modulus: tuple  # phi mod p, ascending; () means prime-field residue
    coeffs: tuple

    def field(self):
        if not self.modulus:
            return PrimeField(self.p)
        return ExtField(self.p, self.modulus)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_squarefree(self) -> bool:
        if self.degree <= 1:
            return True
        K = self.field()
        d = fp_deriv(K, list(self.coeffs))
        if not d:
            return False
        g = fp_gcd(K, list(self.coeffs), d)
        return len(g) - 1 == 0


@dataclass(frozen=True)
class NewtonPolygon:
    p: int
    phi: Poly
    digits: tuple  # phi-adic digits of F, ascending
    points: tuple  # (x, y) with y an int or +inf
    vertices: tuple  # subset of points forming the lower hull
    edges: tuple

    @property
    def length(self) -> int:
        return self.points[-1][0]

    def hull_height(self, x) -> Fraction:
        """Height of the hull above abscissa x, 0 <= x <= length."""
        if not 0 <= x <= self.length:
            raise ValueError("abscissa outside the polygon")
        for e in self.edges:
            if e.x0 <= x <= e.x1:
                return Fraction(e.y0) + e.slope * (x - e.x0)
        # no edges: single-vertex polygon cannot happen (length >= 1)
        raise InternalError("hull interpolation found no edge")

    def positive_edges(self):
        return tuple(e for e in self.edges if e.slope > 0)

    def index_contribution(self) -> int:
        """deg(phi) times the lattice points under the hull.

        Counts integer points (x, y) with 0 < x < length and
        0 < y <= hull(x); multiplying by deg phi gives this factor's
        share of the Ore lower bound for v_p of the index.
        """
        n = self.length
        count = sum(math.floor(self.hull_height(xx)) for xx in range(1, n))
        return count * self.phi.degree

    def residual_polynomials(self):
        return tuple(
            residual_polynomial(self, e) for e in self.positive_edges()
        )


def build_polygon(F: Poly, phi: Poly, p: int) -> NewtonPolygon:
    """Newton polygon of F with respect to the base phi at the prime p.

    F must be monic with p-integral coefficients and not divisible by
    phi; phi must be monic, p-integral, and irreducible modulo p.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not F.is_monic():
        raise ValueError("F must be monic")
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of positive degree")
    if phi.degree > 1:
        _, facs = factor_mod_p(phi, p)
        if len(facs) != 1 or facs[0][1] != 1 or facs[0][0].degree != phi.degree:
            raise ValueError("phi must be irreducible modulo p")
    digits = phi_expansion(F, phi)
    n = len(digits) - 1
    if n < 1:
        raise ValueError("degenerate polygon: F has a single phi-adic digit")
    vals = [gauss_valuation(d, p) for d in digits]
    if vals[0] == INF:
        raise ValueError("phi divides F")
    if vals[n] != 0:
        raise InternalError("leading digit of a monic expansion must be a p-unit")
    points = tuple((i, vals[n - i]) for i in range(n + 1))

    vertices = [points[0]]
    cur = 0
    while cur < n:
        best = None
        best_slope = None
        for j in range(cur + 1, n + 1):
            y = points[j][1]
            if y == INF:
                continue
            slope = Fraction(y - points[cur][1], j - cur)
            if best_slope is None or slope < best_slope or (
                slope == best_slope and j > best
            ):
                best, best_slope = j, slope
        if best is None:
            raise InternalError("hull ran out of finite points")
        vertices.append(points[best])
        cur = best

    edges = tuple(
        Edge(x0, y0, x1, y1)
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:])
    )
    return NewtonPolygon(
        p=p,
        phi=phi,
        digits=tuple(digits),
        points=points,
        vertices=tuple(vertices),
        edges=edges,
    )


def residual_polynomial(polygon: NewtonPolygon, edge: Edge) -> ResidualPoly:
    """Monic residual polynomial attached to a positive-slope edge.

    Coefficient j (from the leading end) is the residue of
    digit(n - (x0 + e*j)) / p^(y0 + d*j) in F_p[x]/(phi mod p), and is
    zero exactly when that lattice point lies strictly below the digit's
    valuation.  The result is normalized monic.
    """
    if edge.slope <= 0:
        raise ValueError("residual polynomials only attach to positive edges")
    p = polygon.p
    n = polygon.length
    r = polygon.phi.degree
    e, d = edge.step
    t = edge.segments
    if r == 1:
        field = PrimeField(p)
        modulus = ()
    else:
        modulus = reduce_poly(polygon.phi, p).coeffs
        field = ExtField(p, modulus)

    cs = []  # by j = 0 .. t, i.e. descending in the auxiliary variable
    for j in range(t + 1):
        xj = edge.x0 + e * j
        yj = edge.y0 + d * j
        digit = polygon.digits[n - xj]
        v = gauss_valuation(digit, p)
        if v > yj:
            cs.append(field.zero)
            continue
        if v < yj:
            raise InternalError("digit valuation dips below the hull")
        scaled = [Fraction(c) / p ** yj for c in digit.coeffs]
        if r == 1:
            cs.append(field.from_int(_residue_of_fraction(scaled[0], p)))
        else:
            cs.append(
                field.from_coeffs([_residue_of_fraction(c, p) for c in scaled])
            )
    if field.is_zero(cs[0]) or field.is_zero(cs[-1]):
        raise InternalError("edge endpoints must give nonzero residues")
    inv = field.inv(cs[0])
    cs = [field.mul(inv, c) for c in cs]
    return ResidualPoly(
        edge=edge, p=p, modulus=tuple(modulus), coeffs=tuple(reversed(cs))
    )


def _residue_of_fraction(c, p: int) -> int:
    c = Fraction(c)
    if c.denominator % p == 0:
        raise InternalError("non p-integral residue")
    return c.numerator * pow(c.denominator, -1, p) % p


def is_p_regular(F: Poly, p: int):
    """Squarefreeness of every residual polynomial of every repeated factor.

    Uses the plain lifts of the irreducible factors of F mod p.  Returns
    (flag, report) where report lists, per repeated factor, the polygon
    and its residual polynomials with their squarefreeness.
    """
    _, facs = factor_mod_p(F, p)
    flag = True
    report = []
    for phibar, mult in facs:
        if mult < 2:
            continue
        polygon = build_polygon(F, phibar.lift(), p)
        residuals = polygon.residual_polynomials()
        ok = all(rp.is_squarefree() for rp in residuals)
        flag = flag and ok
        report.append((phibar, polygon, residuals, ok))
    return flag, report


def ore_index(F: Poly, p: int, translations=()):
    """(lower bound for v_p of the index of Z[x]/F, attained?) via polygons.

    `translations` is a sequence of p-integral rationals; when a
    repeated linear factor x - r of F mod p matches one of them mod p,
    the lift x - beta is used in place of x - r, which can deepen the
    polygon.  The bound is exact when every residual polynomial produced
    along the way is squarefree.
    """
    _, facs = factor_mod_p(F, p)
    total = 0
    attained = True
    for phibar, mult in facs:
        if mult < 2:
            continue
        lift = phibar.lift()
        if phibar.degree == 1:
            root = (-phibar.coeffs[0]) % p
            for beta in translations:
                if vp_fraction(Fraction(beta) - root, p) >= 1:
                    lift = X - Fraction(beta)
                    break
        polygon = build_polygon(F, lift, p)
        total += polygon.index_contribution()
        for rp in polygon.residual_polynomials():
            if not rp.is_squarefree():
                attained = False
    return total, attained


def integral_quotients(polygon: NewtonPolygon):
    """Denominator exponents for the partial quotients of F by phi.

    For j = 1 .. n the element q_j = sum_{i >= j} digit_i * phi^(i-j)
    evaluated at a root of F, divided by p^floor(hull(n - j)), is an
    algebraic integer.  Returns ((q_j, exponent), ...) ascending in j.
    """
    n = polygon.length
    out = []
    for j in range(1, n + 1):
        q = Poly(())
        for i in range(j, n + 1):
            q = q + polygon.digits[i] * polygon.phi ** (i - j)
        exponent = math.floor(polygon.hull_height(n - j))
        out.append((q, exponent))
    return tuple(out)
