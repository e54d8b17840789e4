"""Polynomials over Z/Q and over small finite fields.

The `Poly` class stores coefficients ascending (coeffs[i] is the
coefficient of x^i) as ints or Fractions.  On top of it sit the
phi-adic expansion used by the Newton-polygon machinery, a subresultant
PRS resultant, characteristic polynomials of algebraic numbers given in
root-power coordinates, and complete factorization modulo a prime.

Finite-field arithmetic is written generically against a small "field
object" protocol (PrimeField / ExtField) so the same gcd and power-mod
code serves both F_p and F_{p^r}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import INF, InternalError, vp_fraction


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Dense univariate polynomial with int/Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integer(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        r = Poly((1,))
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return _norm_coeff(v) if isinstance(v, Fraction) else v

    def divmod_by(self, divisor: "Poly"):
        """Euclidean division self = q*divisor + r with deg r < deg divisor."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        d = divisor.degree
        if self.degree < d:
            return Poly(()), self
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        q = [0] * (self.degree - d + 1)
        for i in range(self.degree - d, -1, -1):
            top = rem[i + d]
            if top == 0:
                continue
            c = top if lead == 1 else Fraction(top) / lead
            q[i] = c
            for j in range(d + 1):
                rem[i + j] -= c * divisor.coeffs[j]
        return Poly(q), Poly(rem[:d])

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs[1:], start=1)))

    def content_and_primitive(self):
        """(content, primitive part) for integer polynomials; content > 0."""
        if not self.is_integer():
            raise ValueError("content is only defined here for integer polys")
        if self.is_zero():
            return 0, self
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g, Poly(tuple(c // g for c in self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "Poly(" + " + ".join(parts) + ")"


X = Poly((0, 1))


def trinomial(a, b) -> Poly:
    """x^6 + a*x + b."""
    return Poly((b, a, 0, 0, 0, 0, 1))


def phi_expansion(F: Poly, phi: Poly):
    """Digits of F in base phi, ascending: F = sum digits[i] * phi^i.

    phi must be monic of degree >= 1; every digit has degree < deg phi.
    """
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of positive degree")
    digits = []
    cur = F
    while not cur.is_zero():
        cur, r = cur.divmod_by(phi)
        digits.append(r)
    if not digits:
        digits = [Poly(())]
    return digits


def gauss_valuation(F: Poly, p: int):
    """min_i v_p(coefficient i); +infinity for the zero polynomial."""
    return min((vp_fraction(c, p) for c in F.coeffs), default=INF)


# ---------------------------------------------------------------------------
# finite fields


class PrimeField:
    """F_p with elements represented as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        self.p = p

    zero = 0
    one = 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    @property
    def order(self):
        return self.p


class ExtField:
    """F_{p^r} = F_p[x]/(modulus); elements are length-r int tuples."""

    __slots__ = ("p", "modulus", "r", "zero", "one")

    def __init__(self, p: int, modulus):
        # modulus: ascending int coefficients of a monic irreducible over F_p
        mod = tuple(c % p for c in modulus)
        if not mod or mod[-1] != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.modulus = mod
        self.r = len(mod) - 1
        self.zero = (0,) * self.r
        self.one = (1,) + (0,) * (self.r - 1)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.r - 1)

    def from_coeffs(self, cs):
        """Reduce an arbitrary-length int coefficient list into the field."""
        K = PrimeField(self.p)
        red = fp_rem(K, [c % self.p for c in cs], list(self.modulus))
        red = red + [0] * (self.r - len(red))
        return tuple(red)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        out = [0] * (2 * self.r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        K = PrimeField(self.p)
        red = fp_rem(K, [c % self.p for c in out], list(self.modulus))
        red = red + [0] * (self.r - len(red))
        return tuple(red)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0")
        K = PrimeField(self.p)
        # extended Euclid in F_p[x] between a and the modulus, tracking
        # s with s * a = r (mod modulus)
        r0, r1 = list(self.modulus), _fp_strip(K, [x % self.p for x in a])
        s0, s1 = [], [K.one]
        while fp_deg(r1) > 0:
            q, r = fp_divmod(K, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, fp_sub(K, s0, fp_mul(K, q, s1))
        if not r1:
            raise ZeroDivisionError("element not invertible (modulus not irreducible?)")
        c = K.inv(r1[0])
        res = fp_rem(K, [K.mul(c, x) for x in s1], list(self.modulus))
        return tuple(res + [0] * (self.r - len(res)))

    def is_zero(self, a):
        return all(x % self.p == 0 for x in a)

    @property
    def order(self):
        return self.p ** self.r


# polynomials over a field object: plain lists, ascending, trimmed


def fp_deg(cs):
    return len(cs) - 1


def fp_add(K, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.add(x, y))
    return _fp_strip(K, out)


def fp_sub(K, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.sub(x, y))
    return _fp_strip(K, out)


def _fp_strip(K, cs):
    while cs and K.is_zero(cs[-1]):
        cs.pop()
    return cs


def fp_mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not K.is_zero(x):
            for j, y in enumerate(b):
                out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _fp_strip(K, out)


def fp_divmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lead = fp_deg(b), b[-1]
    if fp_deg(a) < db:
        return [], _fp_strip(K, a)
    inv_lead = K.inv(lead)
    q = [K.zero] * (fp_deg(a) - db + 1)
    for i in range(fp_deg(a) - db, -1, -1):
        top = a[i + db]
        if K.is_zero(top):
            continue
        c = K.mul(top, inv_lead)
        q[i] = c
        for j in range(db + 1):
            a[i + j] = K.sub(a[i + j], K.mul(c, b[j]))
    return _fp_strip(K, q), _fp_strip(K, a[:db])


def fp_rem(K, a, b):
    return fp_divmod(K, a, b)[1]


def fp_monic(K, a):
    if not a:
        return []
    c = K.inv(a[-1])
    return [K.mul(c, x) for x in a]


def fp_gcd(K, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_rem(K, a, b)
    return fp_monic(K, a)


def fp_deriv(K, a):
    return _fp_strip(
        K, [K.mul(K.from_int(i), c) for i, c in enumerate(a[1:], start=1)]
    )


def fp_eval(K, a, x):
    v = K.zero
    for c in reversed(a):
        v = K.add(K.mul(v, x), c)
    return v


def fp_pow_mod(K, base, e: int, mod):
    result = [K.one]
    base = fp_rem(K, list(base), mod)
    while e:
        if e & 1:
            result = fp_rem(K, fp_mul(K, result, base), mod)
        base = fp_rem(K, fp_mul(K, base, base), mod)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# reduction of Q-polynomials mod p, and ModPoly values


def residue_int(c, p: int) -> int:
    """Image of a p-integral rational in Z/p."""
    if isinstance(c, int):
        return c % p
    c = Fraction(c)
    if c.denominator % p == 0:
        raise ValueError(f"{c} is not p-integral at p={p}")
    return c.numerator * pow(c.denominator, -1, p) % p


@dataclass(frozen=True)
class ModPoly:
    """A polynomial over F_p, canonical coefficients in [0, p)."""

    p: int
    coeffs: tuple  # ascending ints, trimmed

    @staticmethod
    def make(p: int, coeffs) -> "ModPoly":
        cs = [residue_int(c, p) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return ModPoly(p, tuple(cs))

    @staticmethod
    def from_poly(F: Poly, p: int) -> "ModPoly":
        return ModPoly.make(p, F.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lift(self) -> Poly:
        return Poly(self.coeffs)

    def sort_key(self):
        return (self.degree, self.coeffs)


def reduce_poly(F: Poly, p: int) -> ModPoly:
    return ModPoly.from_poly(F, p)


# ---------------------------------------------------------------------------
# factorization over F_p


@lru_cache(maxsize=None)
def _small_irreducibles(p: int, d: int):
    """All monic irreducible polynomials of degree d over F_p, d <= 3.

    A cubic or quadratic over F_p is reducible iff it has a root, so a
    root scan is an exact test here.
    """
    assert d <= 3
    out = []
    for tail in itertools.product(range(p), repeat=d):
        cs = tail + (1,)
        if d == 1:
            out.append(cs)
            continue
        if any(fp_eval(PrimeField(p), list(cs), x) == 0 for x in range(p)):
            continue
        out.append(cs)
    return tuple(out)


def _factor_small_p(K: PrimeField, f):
    """Exhaustive trial division; correct for deg f <= 7."""
    p = K.p
    if fp_deg(f) > 7:
        raise InternalError("small-p factorizer limited to degree <= 7")
    out = []
    for d in (1, 2, 3):
        if fp_deg(f) < d:
            break
        for cs in _small_irreducibles(p, d):
            g = list(cs)
            e = 0
            while True:
                q, r = fp_divmod(K, f, g)
                if r:
                    break
                f = q
                e += 1
            if e:
                out.append((tuple(g), e))
            if fp_deg(f) == 0:
                break
    if fp_deg(f) >= 1:
        # no factor of degree <= 3 remains, so what is left (degree 4..7)
        # admits no proper splitting at all
        out.append((tuple(f), 1))
    return out


def _yun_squarefree(K, f):
    """Yun decomposition [(g_i, i)] with f = prod g_i^i; needs p > deg f."""
    df = fp_deriv(K, f)
    u = fp_gcd(K, f, df)
    v, _ = fp_divmod(K, f, u)
    w, _ = fp_divmod(K, df, u)
    out = []
    i = 1
    while fp_deg(v) > 0:
        wv = fp_sub(K, w, fp_deriv(K, v))
        h = fp_gcd(K, v, wv)
        if fp_deg(h) > 0:
            out.append((h, i))
        v, _ = fp_divmod(K, v, h)
        w, _ = fp_divmod(K, wv, h)
        i += 1
    return out


def _ddf(K, f):
    """Distinct-degree splitting of a squarefree monic f over F_p."""
    p = K.p
    out = []
    w = [0, 1]  # x
    d = 0
    while fp_deg(f) >= 1:
        d += 1
        if 2 * d > fp_deg(f):
            out.append((f, fp_deg(f)))
            break
        w = fp_pow_mod(K, w, p, f)
        g = fp_gcd(K, fp_sub(K, w, [0, 1]), f)
        if fp_deg(g) > 0:
            out.append((g, d))
            f, _ = fp_divmod(K, f, g)
            w = fp_rem(K, w, f)
    return out


def _candidate_split_polys(p: int):
    """Deterministic, inexhaustible supply of split candidates over F_p."""
    for c in range(p):
        yield [c, 1]
    for deg in itertools.count(2):
        for tail in itertools.product(range(p), repeat=deg):
            yield list(tail) + [1]


def _edf(K, f, d):
    """Split a product of distinct degree-d irreducibles; p odd, > 13."""
    if fp_deg(f) == d:
        return [f]
    p = K.p
    e = (p ** d - 1) // 2
    for u in _candidate_split_polys(p):
        g = fp_gcd(K, u, f)
        if 0 < fp_deg(g) < fp_deg(f):
            rest, _ = fp_divmod(K, f, g)
            return _edf(K, g, d) + _edf(K, rest, d)
        s = fp_pow_mod(K, u, e, f)
        g = fp_gcd(K, fp_sub(K, s, [1]), f)
        if 0 < fp_deg(g) < fp_deg(f):
            rest, _ = fp_divmod(K, f, g)
            return _edf(K, g, d) + _edf(K, rest, d)
    raise InternalError("equal-degree splitting ran out of candidates")


def factor_mod_p(F, p: int):
    """Complete factorization of F modulo p.

    F may be a Poly (p-integral coefficients) or a ModPoly.  Returns
    (unit, factors) where unit is in [1, p) and factors is a tuple of
    (monic irreducible ModPoly, multiplicity) sorted by degree then by
    coefficient tuple.  Degree of F mod p must be <= 7 when p <= 13.
    """
    fb = F if isinstance(F, ModPoly) else ModPoly.from_poly(F, p)
    if not fb.coeffs:
        raise ValueError("cannot factor the zero polynomial")
    K = PrimeField(p)
    f = list(fb.coeffs)
    unit = f[-1]
    f = fp_monic(K, f)
    if fp_deg(f) == 0:
        return unit, ()
    found = {}
    if p <= 13:
        for g, e in _factor_small_p(K, f):
            found[g] = found.get(g, 0) + e
    else:
        for g, mult in _yun_squarefree(K, f):
            for h, d in _ddf(K, g):
                for irr in _edf(K, h, d):
                    key = tuple(irr)
                    found[key] = found.get(key, 0) + mult
    factors = tuple(
        sorted(
            ((ModPoly(p, cs), e) for cs, e in found.items()),
            key=lambda t: t[0].sort_key(),
        )
    )
    return unit, factors


def poly_gcd_mod_p(A: Poly, B: Poly, p: int) -> ModPoly:
    K = PrimeField(p)
    a = list(ModPoly.from_poly(A, p).coeffs)
    b = list(ModPoly.from_poly(B, p).coeffs)
    return ModPoly(p, tuple(fp_gcd(K, a, b)))


# ---------------------------------------------------------------------------
# resultants and characteristic polynomials


def _prem(A: Poly, B: Poly):
    """Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R."""
    d = A.degree - B.degree
    lead = B.leading
    R = A * (lead ** (d + 1))
    rem = list(R.coeffs)
    for i in range(d, -1, -1):
        top = rem[i + B.degree]
        if top == 0:
            continue
        c = top // lead
        if c * lead != top:
            raise InternalError("pseudo-division failed to stay integral")
        for j in range(B.degree + 1):
            rem[i + j] -= c * B.coeffs[j]
    return Poly(rem[: B.degree])


def resultant(A: Poly, B: Poly) -> int:
    """Res(A, B) over Z by the subresultant PRS."""
    if not (A.is_integer() and B.is_integer()):
        raise ValueError("resultant requires integer coefficients")
    if A.is_zero() or B.is_zero():
        return 0
    ca, A = A.content_and_primitive()
    cb, B = B.content_and_primitive()
    s = 1
    t = ca ** B.degree * cb ** A.degree
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        A, B = B, A
    g = h = 1
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        R = _prem(A, B)
        A, B = B, R
        denom = g * h ** delta
        B = Poly(tuple(c // denom for c in B.coeffs))
        g = A.leading
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
    if B.is_zero():
        return 0
    lead = B.leading
    if A.degree == 0:
        res = 1
    else:
        res = lead ** A.degree // h ** (A.degree - 1)
    return s * t * res


def discriminant(F: Poly) -> int:
    """disc(F) for monic integer F: (-1)^(n(n-1)/2) Res(F, F')."""
    if not F.is_monic():
        raise ValueError("monic polynomial expected")
    n = F.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(F, F.derivative())


def char_poly_of_element(g: Poly, t: int, f: Poly) -> Poly:
    """Characteristic polynomial of g(theta)/t over Q, theta a root of f.

    f must be monic of degree n with integer coefficients, g an integer
    polynomial of degree < n, t a positive integer.  The result is the
    monic degree-n polynomial whose roots are g(theta_i)/t over all
    conjugates; computed by integer resultant evaluation at n+1 points
    and exact Lagrange interpolation.
    """
    if t <= 0:
        raise ValueError("denominator must be positive")
    if not (f.is_monic() and f.is_integer() and g.is_integer()):
        raise ValueError("integer monic f and integer g expected")
    n = f.degree
    if g.degree >= n:
        g = g.divmod_by(f)[1]
    if g.degree <= 0:
        # scalar: (y - g0/t)^n
        c = Fraction(g[0], t)
        return (X - c) ** n
    # C(y) = Res_x(f(x), y - g(x)) = prod (y - g(theta_i)), degree n in y
    ys = list(range(n + 1))
    vals = [resultant(f, Poly((y0,)) - g) for y0 in ys]
    C = Poly(())
    for i, y0 in enumerate(ys):
        num = Poly((1,))
        den = 1
        for j, y1 in enumerate(ys):
            if j != i:
                num = num * (X - y1)
                den *= y0 - y1
        C = C + num * Fraction(vals[i], den)
    if not all(isinstance(c, int) for c in C.coeffs) or not C.is_monic():
        raise InternalError("characteristic polynomial interpolation failed")
    # roots scaled by 1/t: coefficient of y^k picks up t^(n-k) in C(t*y)/t^n
    return Poly(tuple(Fraction(c, t ** (n - k)) for k, c in enumerate(C.coeffs)))


def is_integral(g: Poly, t: int, f: Poly) -> bool:
    """Is g(theta)/t an algebraic integer (theta a root of monic f)?"""
    return char_poly_of_element(g, t, f).is_integer()
