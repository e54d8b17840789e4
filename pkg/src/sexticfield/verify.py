"""Independent certification of computed orders.

Nothing here reuses the case analysis that produced a basis: elements
are checked through characteristic polynomials, p-maximality of the
power order through the classical gcd criterion, and p-maximality of an
arbitrary order through the radical/multiplier-ring test.  Agreement
between these oracles and the table-driven pipeline is what the test
suite leans on.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .exact import InternalError, hnf, mat_det, mat_inv
from .poly import Poly, factor_mod_p, poly_gcd_mod_p
from .poly import is_integral as _char_poly_integral

__all__ = [
    "OrderPresentation",
    "is_integral",
    "lattice_index",
    "dedekind_maximal_at_p",
    "maximality_test",
]


def is_integral(g: Poly, t: int, f: Poly) -> bool:
    """Is g(theta)/t an algebraic integer, theta a root of monic f?"""
    return _char_poly_integral(g, t, f)


def _vec_times_mat(v, M):
    n = len(M[0])
    return tuple(sum(v[i] * M[i][j] for i in range(len(v))) for j in range(n))


@dataclasses.dataclass(frozen=True)
class OrderPresentation:
    """A multiplicatively closed lattice between Z[theta] and the maximal order.

    `matrix` holds the basis elements as rational coordinate rows over
    the powers of theta; `mult_table[i][j]` gives the integer
    coordinates of the product of basis elements i and j back in the
    order basis.  The table is computed eagerly at construction and the
    constructor refuses lattices that are not closed under
    multiplication, so holding an OrderPresentation is itself the
    certificate that the lattice is a ring.
    """

    matrix: tuple
    denominator: int
    f: Poly
    mult_table: tuple

    @classmethod
    def from_triangular(cls, rows, denominators, f: Poly) -> "OrderPresentation":
        """Build from triangular rows (c_i0, ..., c_i,i-1) over theta-powers.

        Raises ValueError if the spanned lattice is not closed under
        multiplication (then it is not an order and no presentation
        exists).
        """
        n = f.degree
        if n != 6 or len(rows) != 6 or len(denominators) != 6:
            raise ValueError("expected a sextic with six triangular rows")
        if denominators[0] != 1:
            raise ValueError("the first basis element must be 1")
        mat = []
        den = 1
        for i in range(6):
            t = denominators[i]
            row = [Fraction(rows[i][j], t) for j in range(i)]
            row.append(Fraction(1, t))
            row.extend([Fraction(0)] * (5 - i))
            mat.append(tuple(row))
            den = math.lcm(den, t)
        minv = mat_inv(tuple(mat))
        for r in minv:
            for x in r:
                if x.denominator != 1:
                    raise InternalError("triangular basis failed to contain 1, theta, ...")

        polys = [Poly(tuple(rows[i]) + (1,)) for i in range(6)]
        table = []
        for i in range(6):
            line = []
            for j in range(6):
                prod = (polys[i] * polys[j]).divmod_by(f)[1]
                coords = [
                    Fraction(prod[k], denominators[i] * denominators[j])
                    for k in range(6)
                ]
                expressed = _vec_times_mat(coords, minv)
                if any(x.denominator != 1 for x in expressed):
                    raise ValueError(
                        "lattice is not closed under multiplication"
                    )
                line.append(tuple(int(x) for x in expressed))
            table.append(tuple(line))
        return cls(
            matrix=tuple(mat),
            denominator=den,
            f=f,
            mult_table=tuple(table),
        )

    def multiply(self, u, v):
        """Product of two elements given by integer coordinate vectors."""
        out = [0] * 6
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = self.mult_table[i][j]
                for k in range(6):
                    out[k] += ui * vj * w[k]
        return tuple(out)


def lattice_index(basis) -> int:
    """Index of the power-basis lattice inside the one spanned by `basis`.

    Computed as the reciprocal of the transition determinant, so it is
    an oracle independent of the denominators' bookkeeping.  Accepts
    anything with element(i) -> (numerator Poly, denominator).
    """
    mat = []
    for i in range(6):
        g, t = basis.element(i)
        mat.append(tuple(Fraction(g[j], t) for j in range(6)))
    det = mat_det(tuple(mat))
    if det == 0:
        raise ValueError("degenerate basis")
    recip = 1 / abs(det)
    if recip.denominator != 1:
        raise InternalError("transition determinant is not a unit fraction")
    return int(recip)


def dedekind_maximal_at_p(f: Poly, p: int) -> bool:
    """Does p avoid the index of Z[theta] in the maximal order?

    The classical criterion: with f = prod(g_i^e_i) mod p, put
    g = prod(g_i), h = prod(g_i^(e_i - 1)), T = (g*h - f)/p; the power
    order is p-maximal iff gcd(T, g, h) = 1 mod p.
    """
    _, factors = factor_mod_p(f, p)
    g = Poly((1,))
    h = Poly((1,))
    for gbar, e in factors:
        lift = gbar.lift()
        g = g * lift
        for _ in range(e - 1):
            h = h * lift
    diff = g * h - f
    T = []
    for c in diff.coeffs:
        if c % p:
            raise InternalError("lifted factorization does not match mod p")
        T.append(c // p)
    d = poly_gcd_mod_p(g, h, p)
    d = poly_gcd_mod_p(d.lift(), Poly(T), p)
    return d.degree == 0


def _kernel_mod_p(rows, p):
    """Basis of {x : A x = 0} over F_p, A given by rows."""
    m = len(rows)
    n = len(rows[0])
    work = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [(a - factor * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for c in free:
        vec = [0] * n
        vec[c] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-work[i][c]) % p
        basis.append(tuple(vec))
    return basis


def _frobenius_power_rows(order: OrderPresentation, p: int, r: int):
    """Matrix of x -> x^(p^r) on O/pO; row j is the image of basis j."""
    rows = []
    for j in range(6):
        vec = tuple(1 if i == j else 0 for i in range(6))
        acc = tuple(1 if i == 0 else 0 for i in range(6))
        base, e = vec, p
        while e:
            if e & 1:
                acc = tuple(x % p for x in order.multiply(acc, base))
            base = tuple(x % p for x in order.multiply(base, base))
            e >>= 1
        rows.append(list(acc))
    mat = rows
    for _ in range(r - 1):
        mat = [
            [sum(mat[j][i] * rows[i][k] for i in range(6)) % p for k in range(6)]
            for j in range(6)
        ]
    return mat


def maximality_test(order: OrderPresentation, p: int) -> bool:
    """Is the order p-maximal?  Radical and multiplier ring, exactly.

    The radical of pO is the kernel of the iterated p-power map on O/pO
    (iterated until p^r >= 6, which kills every nilpotent); the order is
    p-maximal iff the multiplier ring of that radical is O itself.
    """
    r = 1
    while p ** r < 6:
        r += 1
    frob = _frobenius_power_rows(order, p, r)
    # left kernel: x with x * frob = 0, i.e. ordinary kernel of the transpose
    transpose = [[frob[j][i] for j in range(6)] for i in range(6)]
    nilpotents = _kernel_mod_p(transpose, p)

    gens = [[p if i == j else 0 for j in range(6)] for i in range(6)]
    gens.extend(list(v) for v in nilpotents)
    BI, den = hnf(gens)
    if den != 1:
        raise InternalError("radical lattice has a denominator")

    BIinv = mat_inv(tuple(tuple(Fraction(x) for x in row) for row in BI))
    columns = []
    for g in BI:
        # multiplication by g, rows = images of the basis vectors
        R = [order.multiply(g, tuple(1 if i == j else 0 for i in range(6)))
             for j in range(6)]
        P = [_vec_times_mat(R[j], BIinv) for j in range(6)]
        for k in range(6):
            columns.append(tuple(P[j][k] for j in range(6)))
    H, cden = hnf(columns)
    dual_rows = mat_inv(tuple(tuple(Fraction(x) for x in row) for row in H))
    # multiplier lattice = rows of cden * inverse-transpose of H
    for i in range(6):
        for j in range(6):
            if (cden * dual_rows[j][i]).denominator != 1:
                return False
    return True
