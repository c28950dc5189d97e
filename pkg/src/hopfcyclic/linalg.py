"""Exact linear algebra over the rationals on based vector spaces.

Everything is a matrix of exact rationals.  Internally a matrix is an integer
numpy array together with one positive common denominator, kept gcd-reduced;
products and sums run on int64 whenever an exact overflow bound allows and
fall back to Python-int object arrays otherwise, so no result is ever rounded.

Conventions, used everywhere downstream:
  * a LinearMap stores a (target.dim x source.dim) matrix acting on column
    coordinate vectors;
  * the basis of V (x) W is row-major: index of (i, j) is i*dim(W) + j;
  * eliminations scan columns left to right and pick the first nonzero row,
    so kernels, cokernels and solutions are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

Rational = Fraction

_INT64_SAFE = 2**62


class LinAlgError(ValueError):
    """Shape mismatch or an unsatisfiable exact-arithmetic request."""


class MembershipError(LinAlgError):
    """A vector claimed to lie in a subspace (or image) does not."""


@dataclass(frozen=True)
class VectorSpace:
    """A finite-dimensional Q-vector space with a fixed ordered basis."""

    dim: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.dim != len(self.labels):
            raise LinAlgError("dim does not match number of labels")
        if len(set(self.labels)) != self.dim:
            raise LinAlgError("basis labels must be unique")

    @staticmethod
    def make(dim: int, prefix: str = "e") -> "VectorSpace":
        return VectorSpace(dim, tuple(f"{prefix}{i}" for i in range(dim)))

    @staticmethod
    def ground() -> "VectorSpace":
        """The ground field Q as a one-dimensional based space."""
        return VectorSpace(1, ("1",))

    def __repr__(self):
        return f"VectorSpace(dim={self.dim})"


def dual_space(v: VectorSpace) -> VectorSpace:
    return VectorSpace(v.dim, tuple(f"{l}*" for l in v.labels))


def tensor_space(v: VectorSpace, w: VectorSpace) -> VectorSpace:
    labels = tuple(f"{a}⊗{b}" for a in v.labels for b in w.labels)
    return VectorSpace(v.dim * w.dim, labels)


def tensor_spaces(spaces: Sequence[VectorSpace]) -> VectorSpace:
    if not spaces:
        return VectorSpace.ground()
    out = spaces[0]
    for s in spaces[1:]:
        out = tensor_space(out, s)
    return out


def _coerce_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise LinAlgError(f"not an exact rational: {x!r}")


def _gcd_of_array(num: np.ndarray, seed: int) -> int:
    g = abs(seed)
    if num.size == 0:
        return g if g else 1
    if num.dtype == np.int64:
        g = math.gcd(g, int(np.gcd.reduce(np.abs(num), axis=None)))
    else:
        for v in num.flat:
            g = math.gcd(g, abs(int(v)))
            if g == 1:
                break
    return g


def _canonical(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    """gcd-reduce and downcast to int64 when entries fit."""
    if den <= 0:
        raise LinAlgError("denominator must be positive")
    g = _gcd_of_array(num, den)
    if g > 1:
        if num.dtype == np.int64:
            num = num // np.int64(g)
        else:
            num = np.array([[int(x) // g for x in row] for row in num], dtype=object).reshape(num.shape)
        den //= g
    if num.dtype == object:
        m = _max_abs(num)
        if m < 2**62:
            num = num.astype(np.int64)
    num = np.ascontiguousarray(num)
    num.setflags(write=False)
    return num, den


def _max_abs(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == np.int64:
        return int(np.max(np.abs(num)))
    return max(abs(int(x)) for x in num.flat)


def _to_object(num: np.ndarray) -> np.ndarray:
    if num.dtype == object:
        return num
    return np.array([[int(x) for x in row] for row in num], dtype=object).reshape(num.shape)


def _num_den_from_rows(rows) -> tuple[np.ndarray, int]:
    fr = [[_coerce_fraction(x) for x in row] for row in rows]
    den = 1
    for row in fr:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    num = np.array(
        [[int(x.numerator * (den // x.denominator)) for x in row] for row in fr],
        dtype=object,
    )
    if not fr or not fr[0]:
        num = num.reshape(len(fr), len(fr[0]) if fr else 0)
    return num, den


@dataclass(frozen=True)
class LinearMap:
    """An exact linear map between based spaces, stored as scaled integers.

    Composition is valid whenever the inner dimensions agree; labels are
    bookkeeping only.
    """

    source: VectorSpace
    target: VectorSpace
    _num: np.ndarray = field(repr=False)
    _den: int = field(repr=False)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rows(source: VectorSpace, target: VectorSpace, rows) -> "LinearMap":
        num, den = _num_den_from_rows(rows)
        if num.shape != (target.dim, source.dim):
            raise LinAlgError(
                f"matrix shape {num.shape} does not match ({target.dim}, {source.dim})"
            )
        num, den = _canonical(num, den)
        return LinearMap(source, target, num, den)

    @staticmethod
    def from_entries(
        source: VectorSpace,
        target: VectorSpace,
        entries: Iterable[tuple[int, int, Fraction]],
    ) -> "LinearMap":
        """Sparse constructor from (target_index, source_index, value)."""
        rows = [[Fraction(0)] * source.dim for _ in range(target.dim)]
        for i, j, v in entries:
            rows[i][j] += _coerce_fraction(v)
        return LinearMap.from_rows(source, target, rows)

    @staticmethod
    def zero(source: VectorSpace, target: VectorSpace) -> "LinearMap":
        num = np.zeros((target.dim, source.dim), dtype=np.int64)
        num.setflags(write=False)
        return LinearMap(source, target, num, 1)

    @staticmethod
    def identity(space: VectorSpace) -> "LinearMap":
        num = np.eye(space.dim, dtype=np.int64)
        num.setflags(write=False)
        return LinearMap(space, space, num, 1)

    @staticmethod
    def scalar(space: VectorSpace, c) -> "LinearMap":
        c = _coerce_fraction(c)
        num = np.eye(space.dim, dtype=np.int64) * np.int64(c.numerator)
        return LinearMap(space, space, *_canonical(num, c.denominator))

    # -- views --------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    def fractions(self) -> np.ndarray:
        """Dense matrix of Fractions (fresh object array)."""
        out = np.empty(self._num.shape, dtype=object)
        d = self._den
        for i in range(self._num.shape[0]):
            for j in range(self._num.shape[1]):
                out[i, j] = Fraction(int(self._num[i, j]), d)
        return out

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self._num[i, j]), self._den)

    def is_zero(self) -> bool:
        if self._num.dtype == np.int64:
            return not self._num.any()
        return all(int(x) == 0 for x in self._num.flat)

    def first_nonzero(self) -> Optional[tuple[int, int, Fraction]]:
        """Row-major first nonzero entry, for deterministic failure reports."""
        nz = np.nonzero(self._num) if self._num.dtype == np.int64 else np.nonzero(
            np.array([[int(x) != 0 for x in row] for row in self._num], dtype=bool).reshape(self._num.shape)
        )
        if len(nz[0]) == 0:
            return None
        i, j = int(nz[0][0]), int(nz[1][0])
        return i, j, self.entry(i, j)

    # -- exact arithmetic ---------------------------------------------

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.source.dim != other.target.dim:
            raise LinAlgError(
                f"cannot compose: inner dims {self.source.dim} != {other.target.dim}"
            )
        a, b = self._num, other._num
        k = a.shape[1]
        if a.dtype == np.int64 and b.dtype == np.int64:
            bound = k * _max_abs(a) * _max_abs(b)
            if bound < _INT64_SAFE:
                prod = a @ b
            else:
                prod = np.dot(_to_object(a), _to_object(b))
        else:
            prod = np.dot(_to_object(a), _to_object(b))
        num, den = _canonical(prod, self._den * other._den)
        return LinearMap(other.source, self.target, num, den)

    def _add_sub(self, other: "LinearMap", sign: int) -> "LinearMap":
        if self.shape != other.shape:
            raise LinAlgError("cannot add maps of different shapes")
        da, db = self._den, other._den
        L = da * db // math.gcd(da, db)
        fa, fb = L // da, L // db
        a, b = self._num, other._num
        if a.dtype == np.int64 and b.dtype == np.int64:
            if _max_abs(a) * fa + _max_abs(b) * fb < _INT64_SAFE:
                s = a * np.int64(fa) + np.int64(sign) * b * np.int64(fb)
            else:
                s = _to_object(a) * fa + sign * _to_object(b) * fb
        else:
            s = _to_object(a) * fa + sign * _to_object(b) * fb
        num, den = _canonical(s, L)
        return LinearMap(self.source, self.target, num, den)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return self._add_sub(other, 1)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self._add_sub(other, -1)

    def __neg__(self) -> "LinearMap":
        num = self._num if self._num.dtype == object else self._num.copy()
        return LinearMap(self.source, self.target, *_canonical(-num, self._den))

    def scale(self, c) -> "LinearMap":
        c = _coerce_fraction(c)
        a = self._num
        if a.dtype == np.int64 and abs(c.numerator) * _max_abs(a) < _INT64_SAFE:
            num = a * np.int64(c.numerator)
        else:
            num = _to_object(a) * c.numerator
        num, den = _canonical(num, self._den * c.denominator)
        return LinearMap(self.source, self.target, num, den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.shape != other.shape or self._den != other._den:
            return False
        return bool(np.array_equal(self._num, other._num))

    def equal_matrix(self, other: "LinearMap") -> bool:
        """Entrywise equality ignoring space labels."""
        return self == other

    # -- vectors ------------------------------------------------------

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """Apply to a column vector of Fractions; returns Fractions."""
        if len(vec) != self.source.dim:
            raise LinAlgError("vector length mismatch")
        col = np.array([_coerce_fraction(x) for x in vec], dtype=object)
        out = np.dot(_to_object(self._num), col)
        d = self._den
        return np.array([Fraction(x, 1) / d for x in out], dtype=object)

    def column(self, j: int) -> np.ndarray:
        return np.array(
            [Fraction(int(self._num[i, j]), self._den) for i in range(self.target.dim)],
            dtype=object,
        )

    # -- structure ----------------------------------------------------

    def transpose(self) -> "LinearMap":
        """The dual map between dual spaces."""
        num = self._num.T
        return LinearMap(
            dual_space(self.target), dual_space(self.source), *_canonical(np.ascontiguousarray(num), self._den)
        )

    def rank(self) -> int:
        _, piv = rref(self.fractions())
        return len(piv)

    def kernel(self) -> list[np.ndarray]:
        """Deterministic kernel basis; first nonzero entry of each vector positive."""
        return kernel_basis(self.fractions(), sign_normalize=True)

    def inverse(self) -> "LinearMap":
        if self.source.dim != self.target.dim:
            raise LinAlgError("only square maps can be inverted")
        n = self.source.dim
        aug = np.empty((n, 2 * n), dtype=object)
        aug[:, :n] = self.fractions()
        for i in range(n):
            for j in range(n):
                aug[i, n + j] = Fraction(1 if i == j else 0)
        r, piv = rref(aug)
        if piv != list(range(n)):
            raise LinAlgError("map is not invertible")
        return LinearMap.from_rows(self.target, self.source, r[:, n:])


def insert_vector(space: VectorSpace, vec) -> LinearMap:
    """The map Q -> space sending 1 to the given vector."""
    return LinearMap.from_rows(VectorSpace.ground(), space, [[x] for x in vec])


def evaluation_pairing(v: VectorSpace) -> LinearMap:
    """The canonical pairing V (x) V* -> Q."""
    src = tensor_space(v, dual_space(v))
    return LinearMap.from_entries(
        src, VectorSpace.ground(), [(0, i * v.dim + i, Fraction(1)) for i in range(v.dim)]
    )


def zero_vector(space: VectorSpace) -> np.ndarray:
    return np.array([Fraction(0)] * space.dim, dtype=object)


def basis_vector(space: VectorSpace, i: int) -> np.ndarray:
    v = zero_vector(space)
    v[i] = Fraction(1)
    return v


def vector_from(entries) -> np.ndarray:
    return np.array([_coerce_fraction(x) for x in entries], dtype=object)


def vectors_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return len(a) == len(b) and all(Fraction(x) == Fraction(y) for x, y in zip(a, b))


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product matching the row-major tensor basis convention."""
    a, b = f._num, g._num
    if a.dtype == np.int64 and b.dtype == np.int64 and _max_abs(a) * _max_abs(b) < _INT64_SAFE:
        num = np.kron(a, b)
    else:
        num = np.kron(_to_object(a), _to_object(b))
    num, den = _canonical(num, f._den * g._den)
    return LinearMap(tensor_space(f.source, g.source), tensor_space(f.target, g.target), num, den)


def tensor_maps(maps: Sequence[LinearMap]) -> LinearMap:
    if not maps:
        return LinearMap.identity(VectorSpace.ground())
    out = maps[0]
    for m in maps[1:]:
        out = tensor_map(out, m)
    return out


def tensor_power_map(f: LinearMap, k: int) -> LinearMap:
    return tensor_maps([f] * k)


def tensor_permutation(spaces: Sequence[VectorSpace], perm: Sequence[int]) -> LinearMap:
    """Permutation of tensor factors: output factor i is input factor perm[i]."""
    if sorted(perm) != list(range(len(spaces))):
        raise LinAlgError("perm must be a permutation of the factor indices")
    dims = [s.dim for s in spaces]
    src = tensor_spaces(spaces)
    tgt = tensor_spaces([spaces[p] for p in perm])
    n = src.dim
    idx = np.arange(n)
    multi = np.array(np.unravel_index(idx, dims))  # factor x flat
    out_dims = [dims[p] for p in perm]
    strides = np.ones(len(perm), dtype=np.int64)
    for i in range(len(perm) - 2, -1, -1):
        strides[i] = strides[i + 1] * out_dims[i + 1]
    out_idx = np.zeros(n, dtype=np.int64)
    for i, p in enumerate(perm):
        out_idx += multi[p] * strides[i]
    num = np.zeros((n, n), dtype=np.int64)
    num[out_idx, idx] = 1
    num.setflags(write=False)
    return LinearMap(src, tgt, num, 1)


# -- elimination -----------------------------------------------------


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Fractions.

    Pivot choice is the first nonzero row in column order, so the result is
    the same on every run.
    """
    m = np.array([[Fraction(x) for x in row] for row in mat], dtype=object)
    if m.ndim != 2:
        m = m.reshape(mat.shape)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = None
        for i in range(r, rows):
            if m[i, c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            tmp = m[pr].copy()
            m[pr] = m[r]
            m[r] = tmp
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_basis(mat: np.ndarray, sign_normalize: bool = True) -> list[np.ndarray]:
    rows, cols = np.shape(mat)
    r, piv = rref(mat)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = np.array([Fraction(0)] * cols, dtype=object)
        v[f] = Fraction(1)
        for ri, c in enumerate(piv):
            v[c] = -r[ri, f]
        if sign_normalize:
            for x in v:
                if x != 0:
                    if x < 0:
                        v = -v
                    break
        basis.append(v)
    return basis


def solve(mat: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """One deterministic solution of mat x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    rows, cols = np.shape(mat)
    aug = np.empty((rows, cols + 1), dtype=object)
    for i in range(rows):
        for j in range(cols):
            aug[i, j] = Fraction(mat[i][j])
        aug[i, cols] = Fraction(rhs[i])
    r, piv = rref(aug)
    if cols in piv:
        return None
    x = np.array([Fraction(0)] * cols, dtype=object)
    for ri, c in enumerate(piv):
        x[c] = r[ri, cols]
    return x


# -- subspaces and quotients ----------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace with a basis whose support rows form an identity block.

    `basis` maps the abstract subspace into the ambient space; coordinates of
    an ambient vector known to lie in the subspace are read off the support
    rows, and membership is always re-verified exactly.
    """

    ambient: VectorSpace
    space: VectorSpace
    basis: LinearMap
    supports: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords_matrix(self) -> LinearMap:
        """The left inverse of `basis` given by slicing the support rows."""
        num = np.zeros((self.dim, self.ambient.dim), dtype=np.int64)
        for k, s in enumerate(self.supports):
            num[k, s] = 1
        num.setflags(write=False)
        return LinearMap(self.ambient, self.space, num, 1)

    def coords(self, vec: np.ndarray) -> np.ndarray:
        c = np.array([Fraction(vec[s]) for s in self.supports], dtype=object)
        if not vectors_equal(self.basis.apply(c), [Fraction(x) for x in vec]):
            raise MembershipError("vector does not lie in the subspace")
        return c

    def restrict_from(self, op: LinearMap, source: "Subspace") -> LinearMap:
        """The induced map source -> self of an ambient operator, verified."""
        image = op @ source.basis
        coords = self.coords_matrix() @ image
        if self.basis @ coords != image:
            raise MembershipError("operator does not preserve the subspace")
        return coords

    def contains_map_image(self, op: LinearMap) -> bool:
        coords = self.coords_matrix() @ op
        return self.basis @ coords == op


def subspace_from_kernel(mat: LinearMap, prefix: str = "k") -> Subspace:
    vecs = kernel_basis(mat.fractions(), sign_normalize=False)
    return subspace_from_basis(mat.source, vecs, prefix)


def subspace_from_basis(ambient: VectorSpace, vecs: list[np.ndarray], prefix: str = "k") -> Subspace:
    """Wrap kernel-style vectors (identity on their support rows) as a Subspace."""
    space = VectorSpace.make(len(vecs), prefix)
    if not vecs:
        return Subspace(ambient, space, LinearMap.zero(space, ambient), ())
    cols = [[Fraction(v[i]) for v in vecs] for i in range(ambient.dim)]
    basis = LinearMap.from_rows(space, ambient, cols)
    supports = []
    for j, v in enumerate(vecs):
        sup = None
        for i in range(ambient.dim):
            if v[i] != 0:
                ok = v[i] == 1 and all(Fraction(w[i]) == 0 for k, w in enumerate(vecs) if k != j)
                if ok:
                    sup = i
                    break
        if sup is None:
            raise LinAlgError("basis lacks an identity support row")
        supports.append(sup)
    return Subspace(ambient, space, basis, tuple(supports))


def solve_constrained_subspace(
    space: VectorSpace, constraints: Sequence[LinearMap], prefix: str = "k"
) -> Subspace:
    """Joint kernel of a family of operators defined on one space."""
    mats = [c for c in constraints if c.source.dim == space.dim]
    if len(mats) != len(constraints):
        raise LinAlgError("constraint source does not match the common space")
    if not mats:
        vecs = [basis_vector(space, i) for i in range(space.dim)]
        return subspace_from_basis(space, vecs, prefix)
    stacked = stack_vertical(mats)
    return subspace_from_kernel(stacked, prefix)


@dataclass(frozen=True)
class Quotient:
    """ambient / im(relation), with deterministic representative section."""

    ambient: VectorSpace
    space: VectorSpace
    projection: LinearMap
    section: LinearMap


def cokernel(f: LinearMap, prefix: Optional[str] = None) -> Quotient:
    """Quotient of f.target by im(f).

    The quotient basis is the complement of the image's pivot coordinates,
    ascending; representatives are those basis vectors themselves.
    """
    W = f.target
    r, piv = rref(f.fractions().T)
    piv_rows = [r[k] for k in range(len(piv))]
    non_piv = [j for j in range(W.dim) if j not in piv]
    labels = tuple(f"[{W.labels[j]}]" for j in non_piv)
    if prefix is not None:
        q_space = VectorSpace.make(len(non_piv), prefix)
    else:
        q_space = VectorSpace(len(non_piv), labels)
    proj_rows = []
    for j in non_piv:
        row = [Fraction(0)] * W.dim
        row[j] = Fraction(1)
        for k, p in enumerate(piv):
            row[p] -= piv_rows[k][j]
        proj_rows.append(row)
    if proj_rows:
        projection = LinearMap.from_rows(W, q_space, proj_rows)
    else:
        projection = LinearMap.zero(W, q_space)
    sect_rows = [[Fraction(1) if non_piv[a] == i else Fraction(0) for a in range(len(non_piv))] for i in range(W.dim)]
    section = LinearMap.from_rows(q_space, W, sect_rows)
    return Quotient(W, q_space, projection, section)


# -- block assembly --------------------------------------------------


def stack_vertical(maps: Sequence[LinearMap]) -> LinearMap:
    """Stack maps with a common source into one map to the direct sum."""
    if not maps:
        raise LinAlgError("nothing to stack")
    src = maps[0].source
    rows = []
    for m in maps:
        if m.source.dim != src.dim:
            raise LinAlgError("stacked maps must share their source")
        rows.extend(list(m.fractions()))
    tgt = VectorSpace.make(sum(m.target.dim for m in maps), "s")
    if tgt.dim == 0:
        return LinearMap.zero(src, tgt)
    return LinearMap.from_rows(src, tgt, rows)


def direct_sum_space(spaces: Sequence[VectorSpace], tag: str = "c") -> VectorSpace:
    labels = []
    for k, s in enumerate(spaces):
        labels.extend(f"{tag}{k}:{l}" for l in s.labels)
    return VectorSpace(sum(s.dim for s in spaces), tuple(labels))


def from_blocks(
    sources: Sequence[VectorSpace],
    targets: Sequence[VectorSpace],
    blocks: dict[tuple[int, int], LinearMap],
    source_space: Optional[VectorSpace] = None,
    target_space: Optional[VectorSpace] = None,
) -> LinearMap:
    """Assemble a map between direct sums from sparse blocks (ti, sj) -> map."""
    src = source_space or direct_sum_space(sources)
    tgt = target_space or direct_sum_space(targets)
    if src.dim == 0 or tgt.dim == 0:
        return LinearMap.zero(src, tgt)
    s_off = np.cumsum([0] + [s.dim for s in sources])
    t_off = np.cumsum([0] + [t.dim for t in targets])
    rows = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
    for (ti, sj), m in blocks.items():
        if m.shape != (targets[ti].dim, sources[sj].dim):
            raise LinAlgError("block shape mismatch")
        fr = m.fractions()
        for i in range(m.target.dim):
            for j in range(m.source.dim):
                if fr[i, j]:
                    rows[t_off[ti] + i][s_off[sj] + j] = fr[i, j]
    return LinearMap.from_rows(src, tgt, rows)


# -- map-space (Hom) coordinates ------------------------------------
#
# Hom(X, Y) is coordinatized by flat index i*dim(Y) + u for the map sending
# x_i to y_u; this matches vec-by-columns of the (dim Y x dim X) matrix, so
# pre/post composition are Kronecker products.


def hom_space(x: VectorSpace, y: VectorSpace, prefix: str = "f") -> VectorSpace:
    if y.dim == 1:
        return VectorSpace(x.dim, tuple(f"{l}*" for l in x.labels))
    return VectorSpace(
        x.dim * y.dim,
        tuple(f"{lx}↦{ly}" for lx in x.labels for ly in y.labels),
    )


def hom_precompose(p: LinearMap, y: VectorSpace) -> LinearMap:
    """Hom(X, Y) -> Hom(X', Y), phi -> phi o p, for p: X' -> X."""
    m = tensor_map(p.transpose(), LinearMap.identity(y))
    return LinearMap(hom_space(p.target, y), hom_space(p.source, y), m._num, m._den)


def hom_postcompose(x: VectorSpace, q: LinearMap) -> LinearMap:
    """Hom(X, Y) -> Hom(X, Y'), phi -> q o phi, for q: Y -> Y'."""
    ix = LinearMap.identity(x)
    m = tensor_map(ix, q)
    return LinearMap(hom_space(x, q.source), hom_space(x, q.target), m._num, m._den)


def map_to_hom_vector(m: LinearMap) -> np.ndarray:
    """Coordinates of a concrete map inside hom_space(source, target)."""
    fr = m.fractions()
    out = []
    for i in range(m.source.dim):
        for u in range(m.target.dim):
            out.append(fr[u, i])
    return np.array(out, dtype=object)


def hom_vector_to_map(vec: np.ndarray, x: VectorSpace, y: VectorSpace) -> LinearMap:
    rows = [[Fraction(vec[i * y.dim + u]) for i in range(x.dim)] for u in range(y.dim)]
    return LinearMap.from_rows(x, y, rows)


def relabel(m: LinearMap, source: Optional[VectorSpace] = None,
            target: Optional[VectorSpace] = None) -> LinearMap:
    """The same matrix viewed between differently labelled spaces of equal dims."""
    src = m.source if source is None else source
    tgt = m.target if target is None else target
    if src.dim != m.source.dim or tgt.dim != m.target.dim:
        raise LinAlgError(
            f"relabel dimension mismatch: map is {m.target.dim}x{m.source.dim}, "
            f"requested {tgt.dim}x{src.dim}"
        )
    return LinearMap(src, tgt, m._num, m._den)


def hom_tensor_left(factor: VectorSpace, x: VectorSpace, y: VectorSpace) -> LinearMap:
    """Hom(X, Y) -> Hom(F (x) X, F (x) Y), phi -> id_F (x) phi."""
    src = hom_space(x, y)
    tgt = hom_space(tensor_space(factor, x), tensor_space(factor, y))
    entries = []
    for r in range(factor.dim):
        for p in range(x.dim):
            for u in range(y.dim):
                row = (r * x.dim + p) * (factor.dim * y.dim) + (r * y.dim + u)
                entries.append((row, p * y.dim + u, Fraction(1)))
    return LinearMap.from_entries(src, tgt, entries)
