"""Exact sparse linear algebra over a field context.

Maps are stored column-major (column j = image of the j-th basis vector) as
dicts of dicts, vectors as dicts index -> scalar.  Subspaces are kept in
reduced row echelon form so that recomputation yields identical matrices.

Quotient sections use a reversed column order during elimination: pivots sit
at the lexicographically largest basis labels, so the surviving (non-pivot)
labels are the lexicographically smallest representatives.  This matches the
printed bases of all the worked examples downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .scalars import FieldMismatch  # noqa: F401  (re-exported)


class ShapeMismatch(ValueError):
    pass


class NotAnnihilated(ValueError):
    pass


@dataclass(frozen=True)
class Space:
    dim: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.labels is not None:
            assert len(self.labels) == self.dim
            assert len(set(self.labels)) == self.dim

    def label(self, i):
        return self.labels[i] if self.labels is not None else i

    def index(self, label):
        return self.labels.index(label)


def tensor_space(*spaces: Space) -> Space:
    """Product space with tuple labels, row-major index order."""
    dim = 1
    for sp in spaces:
        dim *= sp.dim
    labels = None
    if all(sp.labels is not None for sp in spaces):
        labels = [()]
        for sp in spaces:
            labels = [
                lb + (x if isinstance(x, tuple) else (x,))
                for lb in labels
                for x in sp.labels
            ]
        labels = tuple(labels)
    return Space(dim, labels)


def power_space(v: Space, n: int) -> Space:
    if n == 0:
        return Space(1, ((),) if v.labels is not None else None)
    return tensor_space(*([v] * n))


# ---------------------------------------------------------------------------
# vectors: dict index -> scalar (zero entries never stored)


def vec_add(a, b):
    out = dict(a)
    for i, c in b.items():
        v = out.get(i)
        v = c if v is None else v + c
        if v:
            out[i] = v
        else:
            out.pop(i, None)
    return out


def vec_scale(a, c):
    if not c:
        return {}
    return {i: c * v for i, v in a.items()}


def vec_sub(a, b):
    out = dict(a)
    for i, c in b.items():
        v = out.get(i)
        v = -c if v is None else v - c
        if v:
            out[i] = v
        else:
            out.pop(i, None)
    return out


class LinMap:
    """Exact linear map between Spaces, sparse column-major storage."""

    __slots__ = ("domain", "codomain", "cols", "ctx")

    def __init__(self, domain: Space, codomain: Space, cols, ctx):
        self.domain = domain
        self.codomain = codomain
        self.cols = {j: dict(col) for j, col in cols.items() if col}
        self.ctx = ctx

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, space: Space, ctx):
        return cls(space, space, {j: {j: ctx.one} for j in range(space.dim)}, ctx)

    @classmethod
    def zero(cls, domain: Space, codomain: Space, ctx):
        return cls(domain, codomain, {}, ctx)

    @classmethod
    def from_entries(cls, domain, codomain, entries, ctx):
        """entries: iterable of (row, col, scalar)."""
        cols = {}
        for i, j, c in entries:
            if c:
                cols.setdefault(j, {})[i] = c
        return cls(domain, codomain, cols, ctx)

    # -- basic algebra -------------------------------------------------------

    def apply(self, vec):
        out = {}
        for j, c in vec.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, a in col.items():
                v = out.get(i)
                v = a * c if v is None else v + a * c
                if v:
                    out[i] = v
                else:
                    del out[i]
        return out

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other (matrix product self @ other)."""
        if other.codomain.dim != self.domain.dim:
            raise ShapeMismatch("compose: inner dimensions differ")
        cols = {}
        for j, col in other.cols.items():
            out = self.apply(col)
            if out:
                cols[j] = out
        return LinMap(other.domain, self.codomain, cols, self.ctx)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        if (other.domain.dim, other.codomain.dim) != (self.domain.dim, self.codomain.dim):
            raise ShapeMismatch("add: shapes differ")
        cols = dict(self.cols)
        for j, col in other.cols.items():
            cols[j] = vec_add(cols.get(j, {}), col)
        return LinMap(self.domain, self.codomain, cols, self.ctx)

    def __sub__(self, other):
        return self + other.scale(-self.ctx.one)

    def scale(self, c):
        return LinMap(
            self.domain, self.codomain,
            {j: vec_scale(col, c) for j, col in self.cols.items()},
            self.ctx,
        )

    def __neg__(self):
        return self.scale(-self.ctx.one)

    def tensor(self, other: "LinMap") -> "LinMap":
        """Kronecker product acting blockwise on concatenated index tuples."""
        dom = tensor_space(self.domain, other.domain)
        cod = tensor_space(self.codomain, other.codomain)
        dD, dC = other.domain.dim, other.codomain.dim
        cols = {}
        for j1, col1 in self.cols.items():
            for j2, col2 in other.cols.items():
                col = {}
                for i1, c1 in col1.items():
                    for i2, c2 in col2.items():
                        col[i1 * dC + i2] = c1 * c2
                cols[j1 * dD + j2] = col
        return LinMap(dom, cod, cols, self.ctx)

    def transpose(self):
        cols = {}
        for j, col in self.cols.items():
            for i, c in col.items():
                cols.setdefault(i, {})[j] = c
        return LinMap(self.codomain, self.domain, cols, self.ctx)

    def entry(self, i, j):
        return self.cols.get(j, {}).get(i, self.ctx.zero)

    def entries(self):
        for j in sorted(self.cols):
            for i in sorted(self.cols[j]):
                yield i, j, self.cols[j][i]

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self - other).is_zero()

    def nnz(self):
        return sum(len(c) for c in self.cols.values())

    def __repr__(self):
        return f"LinMap({self.codomain.dim}x{self.domain.dim}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# echelon forms and subspaces


def rref(rows, ncols, col_order=None):
    """Reduced row echelon form of sparse rows; returns (rows, pivot_cols).

    ``col_order`` gives the elimination priority (default: natural order).
    Rows come back sorted by pivot priority and fully reduced; this form is
    canonical for the given span and order.
    """
    if col_order is None:
        priority = None
        key = lambda c: c
    else:
        priority = {c: k for k, c in enumerate(col_order)}
        key = lambda c: priority[c]
    work = [dict(r) for r in rows if r]
    done = []  # (pivot, row)
    pivots = []
    while work:
        # pick the row whose leading column has highest priority
        best, best_i = None, None
        for i, r in enumerate(work):
            lead = min(r, key=key)
            if best is None or key(lead) < key(best):
                best, best_i = lead, i
        row = work.pop(best_i)
        piv = best
        inv = row[piv]
        row = {c: v / inv for c, v in row.items()}
        nxt = []
        for r in work:
            v = r.get(piv)
            if v:
                r = vec_sub(r, vec_scale(row, v))
            if r:
                nxt.append(r)
        work = nxt
        for k in range(len(done)):
            p, r = done[k]
            v = r.get(piv)
            if v:
                done[k] = (p, vec_sub(r, vec_scale(row, v)))
        done.append((piv, row))
        pivots.append(piv)
    done.sort(key=lambda pr: key(pr[0]))
    return [r for _, r in done], sorted(pivots, key=key)


class Subspace:
    """Row-reduced subspace of an ambient labeled Space."""

    __slots__ = ("ambient", "rows", "pivots", "ctx")

    def __init__(self, ambient: Space, rows, ctx, col_order=None):
        self.ambient = ambient
        self.rows, self.pivots = rref(rows, ambient.dim, col_order)
        self.ctx = ctx

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def reduce(self, vec):
        """Remainder of vec modulo the subspace (w.r.t. stored pivots)."""
        out = dict(vec)
        for piv, row in zip(self.pivots, self.rows):
            v = out.get(piv)
            if v:
                out = vec_sub(out, vec_scale(row, v))
        return out

    def coordinates(self, vec):
        """Coefficients of vec in the echelon basis; None if not contained."""
        out = dict(vec)
        coords = {}
        for k, (piv, row) in enumerate(zip(self.pivots, self.rows)):
            v = out.get(piv)
            if v:
                coords[k] = v
                out = vec_sub(out, vec_scale(row, v))
        return coords if not out else None

    def basis_vectors(self):
        return [dict(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(other.contains(r) for r in self.rows) and all(
            self.contains(r) for r in other.rows
        )


def kernel(f: LinMap) -> Subspace:
    """Exact null space of f."""
    # eliminate on the transpose-free row form: rows are matrix rows
    rows = {}
    for j, col in f.cols.items():
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    rrows, pivots = rref(list(rows.values()), f.domain.dim)
    pivset = set(pivots)
    free = [j for j in range(f.domain.dim) if j not in pivset]
    basis = []
    for j in free:
        vec = {j: f.ctx.one}
        for piv, row in zip(pivots, rrows):
            v = row.get(j)
            if v:
                vec[piv] = -v
        basis.append(vec)
    return Subspace(f.domain, basis, f.ctx)


def image(f: LinMap) -> Subspace:
    return Subspace(f.codomain, [dict(col) for col in f.cols.values()], f.ctx)


def rank(f: LinMap) -> int:
    return image(f).dim


def section_mod(k: Subspace):
    """Section and projector for ambient/k.

    Re-reduces k with reversed column order so pivots are the lexicographically
    largest labels; the surviving non-pivot labels (returned in ascending label
    order) are the lexicographically smallest representatives of the quotient.
    Returns (labels, section, projector) with projector @ section = id.
    """
    n = k.ambient.dim
    order = list(range(n - 1, -1, -1))
    rows, pivots = rref(k.rows, n, col_order=order)
    pivset = set(pivots)
    surv = [j for j in range(n) if j not in pivset]
    ctx = k.ctx
    qspace = Space(
        len(surv),
        tuple(k.ambient.labels[j] for j in surv) if k.ambient.labels is not None else None,
    )
    pos = {j: a for a, j in enumerate(surv)}
    section = LinMap.from_entries(
        qspace, k.ambient, [(j, a, ctx.one) for a, j in enumerate(surv)], ctx
    )
    # projector: surviving labels map to themselves, pivot labels expand
    cols = {j: {pos[j]: ctx.one} for j in surv}
    for piv, row in zip(pivots, rows):
        col = {}
        for j, c in row.items():
            if j != piv:
                col[pos[j]] = -c
        cols[piv] = col
    projector = LinMap(k.ambient, qspace, cols, ctx)
    return qspace, section, projector


def invert(f: LinMap) -> LinMap:
    """Inverse of a square invertible map."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise ShapeMismatch("invert: not square")
    # augmented rows [A | I] in row form
    rows = {}
    for j, col in f.cols.items():
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    aug = []
    for i in range(n):
        r = dict(rows.get(i, {}))
        r[n + i] = f.ctx.one
        aug.append(r)
    rrows, pivots = rref(aug, 2 * n, col_order=list(range(2 * n)))
    if [p for p in pivots if p < n] != list(range(n)):
        raise ShapeMismatch("invert: singular matrix")
    cols = {}
    for piv, row in zip(pivots, rrows):
        for j, c in row.items():
            if j >= n:
                cols.setdefault(j - n, {})[piv] = c
    return LinMap(f.codomain, f.domain, cols, f.ctx)


def annihilator_spectrum(f: LinMap, roots):
    """Multiplicity of each candidate eigenvalue, after checking that
    prod (f - r) = 0 exactly.  Raises NotAnnihilated otherwise."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise ShapeMismatch("annihilator_spectrum: not square")
    ident = LinMap.identity(f.domain, f.ctx)
    prod = ident
    for r in roots:
        prod = (f - ident.scale(r)) @ prod
    if not prod.is_zero():
        raise NotAnnihilated("candidate roots do not annihilate the operator")
    mults = {}
    total = 0
    for r in roots:
        d = kernel(f - ident.scale(r)).dim
        mults[r] = d
        total += d
    if total != n:
        raise NotAnnihilated("multiplicities do not fill the space")
    return mults
