"""Exact coefficient fields: rationals, rational functions in s (q = s^2),
and cyclotomic quotients Q[q]/Phi_n(q).

All arithmetic is exact and all values are kept in a unique canonical form,
so equality of scalars is structural equality.  Rationals are plain
``fractions.Fraction``; the other two field types are implemented here.

Polynomials in s are stored sparsely as tuples of (exponent, coefficient)
with ascending exponents and nonzero integer coefficients.  Rational
functions are reduced fractions num/den of such polynomials with den having
positive leading coefficient and gcd(num, den) = 1.  Monomial denominators
(the common case for Laurent-polynomial values like q^-3) take fast paths
that avoid polynomial gcds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class DivisionByZero(ZeroDivisionError):
    pass


class FieldMismatch(TypeError):
    pass


class UnsupportedField(TypeError):
    pass


# ---------------------------------------------------------------------------
# sparse integer polynomials: tuple of (exp, coeff), exps ascending


def _ptrim(pairs):
    return tuple((e, c) for e, c in pairs if c)


def _pconst(c: int):
    return ((0, c),) if c else ()


def _padd(a, b):
    out = dict(a)
    for e, c in b:
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return tuple(sorted(out.items()))


def _pneg(a):
    return tuple((e, -c) for e, c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return tuple(sorted(out.items()))


def _pshift(a, k):
    return tuple((e + k, c) for e, c in a)


def _pcontent(a):
    g = 0
    for _, c in a:
        g = gcd(g, abs(c))
    return g


def _pscale_down(a, g):
    return tuple((e, c // g) for e, c in a)


def _pdeg(a):
    return a[-1][0] if a else -1


def _pminexp(a):
    return a[0][0] if a else 0


def _plead(a):
    return a[-1][1] if a else 0


def _is_monomial(a):
    return len(a) == 1


def _pdivmod_q(a, b):
    """Division with remainder over Q; returns (quo, rem) with Fraction coeffs."""
    quo = {}
    rem = {e: Fraction(c) for e, c in a}
    db, lb = _pdeg(b), b[-1][1]
    while rem:
        da = max(rem)
        if da < db:
            break
        f = rem[da] / lb
        quo[da - db] = f
        for e, c in b:
            v = rem.get(e + da - db, Fraction(0)) - f * c
            if v:
                rem[e + da - db] = v
            else:
                rem.pop(e + da - db, None)
    return quo, rem


def _pgcd(a, b):
    """Primitive gcd in Z[s], positive leading coefficient."""
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    ka, kb = _pminexp(a), _pminexp(b)
    k = min(ka, kb)
    a, b = _pshift(a, -ka), _pshift(b, -kb)
    ca, cb = _pcontent(a), _pcontent(b)
    g = gcd(ca, cb)
    if _is_monomial(a) or _is_monomial(b):
        return _pshift(_pconst(g), k)
    a, b = _pscale_down(a, ca), _pscale_down(b, cb)
    # Euclid over Q on primitive parts, re-primitivized each step.
    while b:
        _, rem = _pdivmod_q(a, b)
        if not rem:
            a = b
            break
        den = 1
        for c in rem.values():
            den = den * c.denominator // gcd(den, c.denominator)
        rint = _ptrim(sorted((e, int(c * den)) for e, c in rem.items()))
        rint = _pscale_down(rint, _pcontent(rint))
        a, b = b, rint
    else:
        a = _pconst(1) if not a else a
    a = _pscale_down(a, _pcontent(a))
    return _pshift(_normalize_sign(a), k) if g == 1 else _pmul(_pshift(_normalize_sign(a), k), _pconst(g))


def _normalize_sign(a):
    return _pneg(a) if _plead(a) < 0 else a


def _pdiv_exact(a, b):
    """Exact division a/b in Z[s]; b must divide a."""
    if not a:
        return ()
    quo, rem = _pdivmod_q(a, b)
    assert not rem, "inexact polynomial division"
    return _ptrim(sorted((e, int(c)) for e, c in quo.items()))


def _pstr(a, var="s"):
    if not a:
        return "0"
    parts = []
    for e, c in reversed(a):
        if e == 0:
            parts.append(f"{c:+d}")
        else:
            v = var if e == 1 else f"{var}^{e}"
            if c == 1:
                parts.append(f"+{v}")
            elif c == -1:
                parts.append(f"-{v}")
            else:
                parts.append(f"{c:+d}*{v}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------


class RatFun:
    """Reduced fraction of integer polynomials in s, with q = s^2."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, int):
            num = _pconst(num)
        if isinstance(num, Fraction):
            den = _pmul(den or _pconst(1), _pconst(num.denominator))
            num = _pconst(num.numerator)
        if den is None:
            den = _pconst(1)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        self.num, self.den = _reduce(num, den)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(_padd(self.num, o.num), self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return RatFun(num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-reduce first: keeps intermediates small
        n1, d2 = _reduce(self.num, o.den)
        n2, d1 = _reduce(o.num, self.den)
        return RatFun(_pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero rational function")
        return self * RatFun(o.den, o.num)

    def __rtruediv__(self, other):
        if not self.num:
            raise DivisionByZero("division by zero rational function")
        return RatFun(self.den, self.num) * other

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(1) / self ** (-k)
        out = RatFun(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparisons / misc --------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == _pconst(1):
            if not self.num:
                return hash(0)
            if len(self.num) == 1 and self.num[0][0] == 0:
                return hash(self.num[0][1])
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == _pconst(1):
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    def subs_one(self) -> Fraction:
        """Evaluate at s = 1 (useful for sanity checks only)."""
        n = sum(c for _, c in self.num)
        d = sum(c for _, c in self.den)
        return Fraction(n, d)


def _reduce(num, den):
    if not num:
        return (), _pconst(1)
    k = min(_pminexp(num), _pminexp(den))
    if k:
        num, den = _pshift(num, -k), _pshift(den, -k)
    if _is_monomial(num) or _is_monomial(den):
        e = min(_pminexp(num), _pminexp(den))
        if e:
            num, den = _pshift(num, -e), _pshift(den, -e)
        g = gcd(_pcontent(num), _pcontent(den))
    else:
        g0 = _pgcd(num, den)
        if _pdeg(g0) > 0 or _pminexp(g0) > 0:
            num, den = _pdiv_exact(num, g0), _pdiv_exact(den, g0)
        g = gcd(_pcontent(num), _pcontent(den))
    if g > 1:
        num, den = _pscale_down(num, g), _pscale_down(den, g)
    if _plead(den) < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


# ---------------------------------------------------------------------------


def cyclotomic_poly(n: int):
    """Coefficient list (dense, ascending) of the n-th cyclotomic polynomial."""
    # divide q^n - 1 by Phi_d for all proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = cyclotomic_poly(d)
        poly = _dense_divexact(poly, phi_d)
    return poly


def _dense_divexact(a, b):
    a = list(a)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        out[i - db] = c
        if c:
            for j, bc in enumerate(b):
                a[i - db + j] -= c * bc
    assert not any(a[:db]), "inexact cyclotomic division"
    return out


class Cyc:
    """Element of Q[q]/(Phi_n(q)): coefficient vector of length deg Phi_n."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "CyclotomicField", coeffs):
        self.field = field
        d = field.degree
        coeffs = list(coeffs) + [Fraction(0)] * (d - len(coeffs))
        self.coeffs = tuple(Fraction(c) for c in coeffs[:d])

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.n != self.field.n:
                raise FieldMismatch("cyclotomic elements from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc(self.field, [Fraction(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        red = self.field._reduction
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                prod[i] = Fraction(0)
                for j, r in enumerate(red[i - d]):
                    prod[j] += c * r
        return Cyc(self.field, prod[:d])

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def inverse(self):
        """Inverse modulo Phi_n by extended Euclid over Q[q]."""
        if not self:
            raise DivisionByZero("inverse of zero cyclotomic element")
        mod = [Fraction(c) for c in self.field.modulus]
        a = list(self.coeffs)
        # extended euclid: r0 = mod, r1 = a
        r0, r1 = mod, a
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _dense_divmod(r0, r1)
            t = _dense_sub(t0, _dense_mul(q, t1))
            r0, r1, t0, t1 = r1, r, t1, t
        lead = next(c for c in reversed(r0) if c)
        inv = [c / lead for c in t0]
        return Cyc(self.field, inv)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        if other.field.n != self.field.n:
            raise FieldMismatch("cyclotomic elements from different fields")
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(f"q^{e}" if e > 1 else "q")
            else:
                parts.append(f"{c}*q^{e}" if e > 1 else f"{c}*q")
        return " + ".join(parts)


def _dense_divmod(a, b):
    a = [Fraction(c) for c in a]
    db = max(i for i, c in enumerate(b) if c)
    out = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            c = a[i] / b[db]
            out[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return out, a[:db] if db else [Fraction(0)]


def _dense_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _dense_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, c in enumerate(b):
        a[i] -= c
    return a


# ---------------------------------------------------------------------------
# field contexts


class RationalField:
    name = "rational"
    has_q = False

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def __repr__(self):
        return "QQ"


class RatFunField:
    """Q(s) with the convention q = s^2, so q^(1/2) exists."""

    name = "ratfun"
    has_q = True

    def __init__(self):
        self.zero = RatFun(0)
        self.one = RatFun(1)
        self.s = RatFun(((1, 1),))
        self.q = self.s * self.s

    def from_int(self, n: int):
        return RatFun(n)

    def q_power(self, e) -> RatFun:
        """q^e for integer or half-integer e."""
        e2 = Fraction(e) * 2
        if e2.denominator != 1:
            raise UnsupportedField(f"q^{e} is not a half-integer power")
        k = int(e2)
        if k >= 0:
            return RatFun(((k, 1),))
        return RatFun(_pconst(1), ((-k, 1),))

    def __repr__(self):
        return "QQ(s)"


class CyclotomicField:
    """Q[q]/(Phi_n(q)); q is a primitive n-th root of unity."""

    name = "cyclotomic"
    has_q = True

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_poly(n)
        self.degree = len(self.modulus) - 1
        # reduction table: q^(degree+i) as a vector, i = 0..degree-2
        red = []
        base = [Fraction(-c, self.modulus[-1]) for c in self.modulus[:-1]]
        cur = list(base)
        for _ in range(self.degree - 1):
            red.append(list(cur))
            cur = [Fraction(0)] + cur
            overflow = cur[self.degree] if len(cur) > self.degree else Fraction(0)
            cur = cur[: self.degree]
            if overflow:
                cur = [c + overflow * b for c, b in zip(cur, base)]
        self._reduction = red
        self.zero = Cyc(self, [])
        self.one = Cyc(self, [Fraction(1)])
        self.q = Cyc(self, [Fraction(0), Fraction(1)])

    def from_int(self, n: int):
        return Cyc(self, [Fraction(n)])

    def q_power(self, e) -> Cyc:
        e = Fraction(e)
        if e.denominator != 1:
            raise UnsupportedField("half-integer q-powers need the ratfun field")
        k = int(e) % self.n
        return self.q ** k

    def __repr__(self):
        return f"QQ[q]/Phi_{self.n}"


# ---------------------------------------------------------------------------
# named q-constants


def q_lambda(ctx):
    """lambda = 1 - q^-2."""
    _require_q(ctx)
    return ctx.one - ctx.q_power(-2)


def sym_int(ctx, n):
    """Symmetric q-integer (n)_q = (q^n - q^-n)/(q - q^-1); n may be a half-integer."""
    _require_q(ctx)
    n = Fraction(n)
    num = ctx.q_power(n) - ctx.q_power(-n)
    den = ctx.q_power(1) - ctx.q_power(-1)
    return num / den


def q_int(ctx, n: int):
    """One-sided q-integer [n, q] = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1)."""
    _require_q(ctx)
    out = ctx.zero
    for k in range(n):
        out = out + ctx.q_power(k)
    return out


def q_factorial(ctx, n: int):
    out = ctx.one
    for k in range(2, n + 1):
        out = out * q_int(ctx, k)
    return out


def _require_q(ctx):
    if not ctx.has_q:
        raise UnsupportedField("this field has no distinguished q")


# ---------------------------------------------------------------------------
# serialization


def scalar_to_json(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, RatFun):
        dn = _pdeg(x.num)
        dd = _pdeg(x.den)
        num = [0] * (dn + 1)
        for e, c in x.num:
            num[e] = c
        den = [0] * (dd + 1)
        for e, c in x.den:
            den[e] = c
        return {"num": num, "den": den}
    if isinstance(x, Cyc):
        return {
            "mod_index": x.field.n,
            "coeffs": [scalar_to_json(c) for c in x.coeffs],
        }
    raise TypeError(f"not a scalar: {x!r}")


def scalar_from_json(ctx, obj):
    if isinstance(obj, str):
        if "/" in obj:
            p, q = obj.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(obj))
    if isinstance(obj, int):
        return ctx.from_int(obj)
    if "coeffs" in obj:
        if not isinstance(ctx, CyclotomicField) or ctx.n != obj["mod_index"]:
            raise FieldMismatch("cyclotomic scalar for a different field")
        return Cyc(ctx, [scalar_from_json(RationalField(), c) for c in obj["coeffs"]])
    num = _ptrim(enumerate(obj["num"]))
    den = _ptrim(enumerate(obj["den"]))
    return RatFun(num, den)


def scalar_to_str(x) -> str:
    """Compact human-readable form used by the text tables."""
    if isinstance(x, Fraction):
        return scalar_to_json(x)
    return repr(x)
