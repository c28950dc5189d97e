"""Cup products on cyclic cochains via bicocyclic tensor products.

Ingredients, all realized as exact rational matrices:

  * `tensor_bicocyclic`: the bigraded tensor product of two cocyclic modules,
    with vertical operators acting on the first factor and horizontal
    operators on the second;
  * `diagonal` and `total_complex`: the diagonal cocyclic module and the
    normalized total mixed complex of a bicocyclic module;
  * `aw_map`: the comparison chain map from the total complex to the
    diagonal, assembled blockwise per total degree;
  * `psi_matrix` / `phi_matrix` (and their contratensor-valued variants):
    the cyclic comparison maps from the diagonal into plain cochains of a
    convolution algebra respectively a crossed product algebra;
  * `cyclic_complete`: upgrade a closed top cochain to a full (b, B)-cocycle
    by one exact linear solve, with an explicit obstruction on failure;
  * `cup_ac`, `cup_aa`, `cup_ac_general`, `cup_aa_general`: the four product
    pipelines, with input validation, exact closure checks, and verified
    (b, B)-cocycle outputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .coefficients import (
    CompatiblePair,
    Contratensor,
    SaydContramodule,
    SaydModule,
    check_compatible_pair,
    check_sayd_contramodule,
    check_sayd_module,
    collapse_map,
    contratensor,
)
from .cocyclic import (
    CocyclicModule,
    HomCochainComplex,
    QuotientCochainComplex,
    algebra_contra_cocyclic,
    coalgebra_cocyclic,
    comodule_algebra_cocyclic,
    full_B,
    full_b,
    normalization_projector,
    plain_algebra_cocyclic,
)
from .hopf import (
    Algebra,
    CoalgebraAction,
    ComoduleAlgebra,
    ConvolutionAlgebra,
    HopfAlgebra,
    ModuleAlgebra,
    ModuleCoalgebra,
    convolution_algebra,
    crossed_product,
    iota,
)
from .linalg import (
    LinAlgError,
    LinearMap,
    MembershipError,
    Subspace,
    VectorSpace,
    direct_sum_space,
    from_blocks,
    hom_postcompose,
    hom_precompose,
    hom_space,
    map_to_hom_vector,
    relabel,
    solve,
    solve_constrained_subspace,
    stack_vertical,
    tensor_map,
    tensor_maps,
    tensor_power_map,
    tensor_space,
    tensor_spaces,
    vectors_equal,
)
from .reporting import Report, require

DEFAULT_DEGREE_CAP = 4


def _power(space: VectorSpace, k: int) -> VectorSpace:
    return tensor_spaces([space] * k)


def _as_vector(vec, dim: int, label: str) -> np.ndarray:
    out = np.array([Fraction(x) for x in vec], dtype=object)
    if len(out) != dim:
        raise LinAlgError(f"{label} has length {len(out)}, expected {dim}")
    return out


def _vector_is_zero(vec) -> bool:
    return all(x == 0 for x in vec)


def _vector_entry(report: Report, name: str, vec, space: VectorSpace) -> None:
    for i, x in enumerate(vec):
        if x != 0:
            report.add(name, False,
                       f"first residual {x} at coordinate {space.labels[i]!r}")
            return
    report.add(name, True)


# --------------------------------------------------------------------------
# bicocyclic tensor products


@dataclass(frozen=True)
class BicocyclicModule:
    """C^{p,q} = X^p (x) Y^q with vertical ops from X and horizontal from Y."""

    degree_cap: int
    vertical_factor: CocyclicModule
    horizontal_factor: CocyclicModule

    def space(self, p: int, q: int) -> VectorSpace:
        return tensor_space(self.vertical_factor.spaces[p],
                            self.horizontal_factor.spaces[q])

    def vertical_face(self, p: int, q: int, i: int) -> LinearMap:
        return tensor_map(self.vertical_factor.face(p, i),
                          LinearMap.identity(self.horizontal_factor.spaces[q]))

    def vertical_degeneracy(self, p: int, q: int, j: int) -> LinearMap:
        return tensor_map(self.vertical_factor.degeneracy(p, j),
                          LinearMap.identity(self.horizontal_factor.spaces[q]))

    def vertical_tau(self, p: int, q: int) -> LinearMap:
        return tensor_map(self.vertical_factor.tau(p),
                          LinearMap.identity(self.horizontal_factor.spaces[q]))

    def horizontal_face(self, p: int, q: int, i: int) -> LinearMap:
        return tensor_map(LinearMap.identity(self.vertical_factor.spaces[p]),
                          self.horizontal_factor.face(q, i))

    def horizontal_degeneracy(self, p: int, q: int, j: int) -> LinearMap:
        return tensor_map(LinearMap.identity(self.vertical_factor.spaces[p]),
                          self.horizontal_factor.degeneracy(q, j))

    def horizontal_tau(self, p: int, q: int) -> LinearMap:
        return tensor_map(LinearMap.identity(self.vertical_factor.spaces[p]),
                          self.horizontal_factor.tau(q))

    def vertical_b(self, p: int, q: int) -> LinearMap:
        out = self.vertical_face(p, q, 0)
        for i in range(1, p + 2):
            term = self.vertical_face(p, q, i)
            out = out + term if i % 2 == 0 else out - term
        return out

    def horizontal_b(self, p: int, q: int) -> LinearMap:
        out = self.horizontal_face(p, q, 0)
        for i in range(1, q + 2):
            term = self.horizontal_face(p, q, i)
            out = out + term if i % 2 == 0 else out - term
        return out

    def vertical_connes(self, p: int, q: int) -> LinearMap:
        base = self.vertical_degeneracy(p, q, p - 1) @ self.vertical_tau(p, q)
        acc = base
        power = base
        for i in range(1, p):
            power = self.vertical_tau(p - 1, q) @ power
            acc = acc + power if ((p - 1) * i) % 2 == 0 else acc - power
        return acc

    def horizontal_connes(self, p: int, q: int) -> LinearMap:
        base = self.horizontal_degeneracy(p, q, q - 1) @ self.horizontal_tau(p, q)
        acc = base
        power = base
        for i in range(1, q):
            power = self.horizontal_tau(p, q - 1) @ power
            acc = acc + power if ((q - 1) * i) % 2 == 0 else acc - power
        return acc


def tensor_bicocyclic(x: CocyclicModule, y: CocyclicModule) -> BicocyclicModule:
    if x.degree_cap != y.degree_cap:
        raise LinAlgError("tensor factors must share one degree cap")
    return BicocyclicModule(x.degree_cap, x, y)


def check_bicocyclic(module: BicocyclicModule,
                     name: str = "bicocyclic module") -> Report:
    """Row/column cocyclic identities plus all cross-direction commutations."""
    from .cocyclic import verify_cocyclic

    rep = Report(name)
    cap = module.degree_cap
    for q in range(cap + 1):
        tower = CocyclicModule(
            cap,
            tuple(module.space(p, q) for p in range(cap + 1)),
            tuple(tuple(module.vertical_face(p, q, i) for i in range(p + 2))
                  for p in range(cap)),
            tuple(tuple(module.vertical_degeneracy(p, q, j) for j in range(p))
                  for p in range(cap + 1)),
            tuple(module.vertical_tau(p, q) for p in range(cap + 1)))
        rep.extend(verify_cocyclic(tower), f"vertical tower q={q}: ")
    for p in range(cap + 1):
        tower = CocyclicModule(
            cap,
            tuple(module.space(p, q) for q in range(cap + 1)),
            tuple(tuple(module.horizontal_face(p, q, i) for i in range(q + 2))
                  for q in range(cap)),
            tuple(tuple(module.horizontal_degeneracy(p, q, j) for j in range(q))
                  for q in range(cap + 1)),
            tuple(module.horizontal_tau(p, q) for q in range(cap + 1)))
        rep.extend(verify_cocyclic(tower), f"horizontal tower p={p}: ")

    for p in range(cap + 1):
        for q in range(cap + 1):
            vertical = []
            if p < cap:
                vertical += [(f"d{i}", 1,
                              lambda pp, qq, i=i: module.vertical_face(pp, qq, i))
                             for i in range(p + 2)]
            vertical += [(f"s{j}", -1,
                          lambda pp, qq, j=j: module.vertical_degeneracy(pp, qq, j))
                         for j in range(p)]
            vertical.append(("t", 0, lambda pp, qq: module.vertical_tau(pp, qq)))
            horizontal = []
            if q < cap:
                horizontal += [(f"d{i}", 1,
                                lambda pp, qq, i=i: module.horizontal_face(pp, qq, i))
                               for i in range(q + 2)]
            horizontal += [(f"s{j}", -1,
                            lambda pp, qq, j=j: module.horizontal_degeneracy(pp, qq, j))
                           for j in range(q)]
            horizontal.append(("t", 0, lambda pp, qq: module.horizontal_tau(pp, qq)))
            for vname, dp, vop in vertical:
                for hname, dq, hop in horizontal:
                    rep.check_equal(
                        f"vertical {vname} commutes with horizontal {hname} "
                        f"(bidegree ({p},{q}))",
                        vop(p, q + dq) @ hop(p, q),
                        hop(p + dp, q) @ vop(p, q))
    return rep


# --------------------------------------------------------------------------
# diagonal and total complexes


def diagonal(module: BicocyclicModule) -> CocyclicModule:
    """The cocyclic module with degree-n space C^{n,n} and coupled operators."""
    cap = module.degree_cap
    spaces = tuple(module.space(n, n) for n in range(cap + 1))
    faces = tuple(
        tuple(module.horizontal_face(n + 1, n, i) @ module.vertical_face(n, n, i)
              for i in range(n + 2))
        for n in range(cap))
    degeneracies = tuple(
        tuple(module.horizontal_degeneracy(n - 1, n, j) @ module.vertical_degeneracy(n, n, j)
              for j in range(n))
        for n in range(cap + 1))
    cyclic = tuple(
        module.horizontal_tau(n, n) @ module.vertical_tau(n, n)
        for n in range(cap + 1))
    return CocyclicModule(cap, spaces, faces, degeneracies, cyclic)


@dataclass(frozen=True)
class TotalMixedComplex:
    """Degreewise direct sum of the normalized bidegree blocks.

    The degree-n space is the sum of N^{p,q} over p+q = n with p ascending,
    where N^{p,q} is the joint kernel of all codegeneracies in both
    directions.  The vertical summand of each differential is weighted by
    (-1)^q so that the two directions anticommute.
    """

    underlying: BicocyclicModule
    block_subspaces: tuple[tuple[Subspace, ...], ...]
    spaces: tuple[VectorSpace, ...]
    b: tuple[LinearMap, ...]
    B: tuple[Optional[LinearMap], ...]

    def blocks(self, n: int) -> list[tuple[int, int]]:
        return [(p, n - p) for p in range(n + 1)]


def _restricted(op: LinearMap, source: Subspace, target: Subspace, what: str) -> LinearMap:
    try:
        return target.restrict_from(op, source)
    except MembershipError as exc:
        raise LinAlgError(f"{what} leaves the normalized complex") from exc


def total_complex(module: BicocyclicModule) -> TotalMixedComplex:
    cap = module.degree_cap
    subs = tuple(
        tuple(
            solve_constrained_subspace(
                module.space(p, q),
                [module.vertical_degeneracy(p, q, j) for j in range(p)]
                + [module.horizontal_degeneracy(p, q, j) for j in range(q)],
                prefix="n")
            for q in range(cap + 1))
        for p in range(cap + 1))
    spaces = tuple(
        direct_sum_space([subs[p][n - p].space for p in range(n + 1)])
        for n in range(cap + 1))

    b_ops = []
    for n in range(cap):
        sources = [subs[p][n - p].space for p in range(n + 1)]
        targets = [subs[p][n + 1 - p].space for p in range(n + 2)]
        blocks = {}
        for p in range(n + 1):
            q = n - p
            vertical = _restricted(module.vertical_b(p, q), subs[p][q], subs[p + 1][q],
                                   f"the vertical coboundary at bidegree ({p},{q})")
            horizontal = _restricted(module.horizontal_b(p, q), subs[p][q], subs[p][q + 1],
                                     f"the horizontal coboundary at bidegree ({p},{q})")
            blocks[(p + 1, p)] = vertical.scale(Fraction((-1) ** q))
            blocks[(p, p)] = horizontal
        b_ops.append(from_blocks(sources, targets, blocks,
                                 source_space=spaces[n], target_space=spaces[n + 1]))

    big_b: list[Optional[LinearMap]] = [None]
    for n in range(1, cap + 1):
        sources = [subs[p][n - p].space for p in range(n + 1)]
        targets = [subs[p][n - 1 - p].space for p in range(n)]
        blocks = {}
        for p in range(n + 1):
            q = n - p
            if p >= 1:
                vertical = _restricted(
                    module.vertical_connes(p, q), subs[p][q], subs[p - 1][q],
                    f"the vertical cyclic boundary at bidegree ({p},{q})")
                blocks[(p - 1, p)] = vertical.scale(Fraction((-1) ** q))
            if q >= 1:
                horizontal = _restricted(
                    module.horizontal_connes(p, q), subs[p][q], subs[p][q - 1],
                    f"the horizontal cyclic boundary at bidegree ({p},{q})")
                blocks[(p, p)] = horizontal
        big_b.append(from_blocks(sources, targets, blocks,
                                 source_space=spaces[n], target_space=spaces[n - 1]))

    return TotalMixedComplex(module, subs, spaces, tuple(b_ops), tuple(big_b))


def check_total_mixed_complex(total: TotalMixedComplex,
                              name: str = "total mixed complex") -> Report:
    rep = Report(name)
    cap = total.underlying.degree_cap
    for n in range(cap - 1):
        rep.check_zero(f"b b = 0 (degree {n})", total.b[n + 1] @ total.b[n])
    for n in range(2, cap + 1):
        rep.check_zero(f"B B = 0 (degree {n})", total.B[n - 1] @ total.B[n])
    for n in range(1, cap):
        rep.check_zero(f"b B + B b = 0 (degree {n})",
                       total.b[n - 1] @ total.B[n] + total.B[n + 1] @ total.b[n])
    return rep


# --------------------------------------------------------------------------
# the comparison map from the total complex to the diagonal


def aw_map(module: BicocyclicModule, p: int, q: int) -> LinearMap:
    """C^{p,q} -> C^{p+q,p+q}: front horizontal cofaces, then vertical d0's."""
    if p + q > module.degree_cap:
        raise LinAlgError(f"bidegree ({p},{q}) exceeds the cap {module.degree_cap}")
    n = p + q
    out = LinearMap.identity(module.space(p, q))
    for k in range(p):
        out = module.horizontal_face(p, q + k, q + 1 + k) @ out
    for k in range(q):
        out = module.vertical_face(p + k, n, 0) @ out
    return out


def assembled_aw(total: TotalMixedComplex, diagonal_normalized: Subspace,
                 n: int) -> LinearMap:
    """Tot^n -> normalized Diag^n, blockwise; verified to preserve normalization."""
    module = total.underlying
    sources = [total.block_subspaces[p][n - p].space for p in range(n + 1)]
    blocks = {}
    for p in range(n + 1):
        q = n - p
        ambient = aw_map(module, p, q) @ total.block_subspaces[p][q].basis
        coords = diagonal_normalized.coords_matrix() @ ambient
        if diagonal_normalized.basis @ coords != ambient:
            raise LinAlgError(
                f"the comparison map does not preserve normalization at bidegree ({p},{q})")
        blocks[(0, p)] = coords
    return from_blocks(sources, [diagonal_normalized.space], blocks,
                       source_space=total.spaces[n],
                       target_space=diagonal_normalized.space)


def check_aw_chain_map(total: TotalMixedComplex, diagonal_module: CocyclicModule,
                       name: str = "comparison chain map") -> Report:
    """b_D o AW = AW o b_T per total degree, on the normalized complexes."""
    from .cocyclic import mixed_complex

    rep = Report(name)
    view = mixed_complex(diagonal_module)
    cap = total.underlying.degree_cap
    aw = [assembled_aw(total, view.normalized[n], n) for n in range(cap + 1)]
    for n in range(cap):
        rep.check_equal(f"diagonal b after comparison = comparison after total b (degree {n})",
                        view.b[n] @ aw[n], aw[n + 1] @ total.b[n])
    return rep


# --------------------------------------------------------------------------
# (b, B)-cocycles and cyclic completion


class CompletionObstruction(LinAlgError):
    """Raised when no (b, B)-completion of a closed cochain exists."""

    def __init__(self, degree: int, residual):
        self.degree = degree
        self.residual = tuple(residual)
        super().__init__(
            f"cyclic completion is infeasible: obstruction at component degree "
            f"{degree}, residual {[str(x) for x in residual]}")


@dataclass(frozen=True)
class BBcocycle:
    """Components in degrees n, n-2, ... down to 1 or 0."""

    degree: int
    components: tuple[tuple[Fraction, ...], ...]

    def component_degrees(self) -> list[int]:
        return [self.degree - 2 * k for k in range(len(self.components))]


def check_bb_cocycle(module: CocyclicModule, cocycle: BBcocycle,
                     name: str = "(b, B) cocycle") -> Report:
    rep = Report(name)
    degrees = cocycle.component_degrees()
    rep.add("components reach degree 0 or 1", degrees[-1] in (0, 1),
            "" if degrees[-1] in (0, 1) else f"bottom degree is {degrees[-1]}")
    comps = [np.array([Fraction(x) for x in c], dtype=object)
             for c in cocycle.components]
    n = cocycle.degree
    if n <= module.degree_cap - 1:
        _vector_entry(rep, "b y0 = 0", full_b(module, n).apply(comps[0]),
                      module.spaces[n + 1])
    for k in range(len(comps) - 1):
        d = degrees[k]
        vec = full_B(module, d).apply(comps[k]) + full_b(module, d - 2).apply(comps[k + 1])
        _vector_entry(rep, f"B y{k} + b y{k + 1} = 0 (into degree {d - 1})",
                      vec, module.spaces[d - 1])
    if degrees[-1] == 1:
        _vector_entry(rep, "B of the bottom component = 0",
                      full_B(module, 1).apply(comps[-1]), module.spaces[0])
    return rep


def cyclic_complete(module: CocyclicModule, degree: int, top) -> BBcocycle:
    """Extend a b-closed top cochain to a full (b, B)-cocycle.

    All lower components are solved for in one exact linear system (they are
    constrained to the normalized subspaces, which pins the solution), so the
    result is deterministic.  An infeasible system raises
    `CompletionObstruction` carrying the first obstructed component degree and
    a residual witness.
    """
    y0 = _as_vector(top, module.spaces[degree].dim, "top component")
    if degree <= module.degree_cap - 1:
        residual = full_b(module, degree).apply(y0)
        if not _vector_is_zero(residual):
            raise LinAlgError(
                "the top component is not closed under the Hochschild coboundary")

    tail_degrees = []
    d = degree - 2
    while d >= 0:
        tail_degrees.append(d)
        d -= 2
    if not tail_degrees:
        if degree == 1:
            residual = full_B(module, 1).apply(y0)
            if not _vector_is_zero(residual):
                raise CompletionObstruction(0, residual)
        return BBcocycle(degree, (tuple(Fraction(x) for x in y0),))

    dims = [module.spaces[d].dim for d in tail_degrees]
    offsets = np.concatenate([[0], np.cumsum(dims)])
    total_cols = int(offsets[-1])

    def build_system(parts: int, include_bottom: bool):
        rows = []
        rhs = []

        def add_block(row_dim, fill):
            block = np.zeros((row_dim, total_cols), dtype=object)
            block[...] = Fraction(0)
            r = np.array([Fraction(0)] * row_dim, dtype=object)
            fill(block, r)
            rows.append(block)
            rhs.append(r)

        for k in range(1, parts + 1):
            dk = tail_degrees[k - 1]
            b_mat = full_b(module, dk).fractions()

            def fill(block, r, k=k, dk=dk, b_mat=b_mat):
                block[:, offsets[k - 1]:offsets[k]] = b_mat
                if k == 1:
                    bvec = full_B(module, degree).apply(y0)
                    r[:] = [-x for x in bvec]
                else:
                    prev = full_B(module, dk + 2).fractions()
                    block[:, offsets[k - 2]:offsets[k - 1]] = prev

            add_block(module.spaces[dk + 1].dim, fill)
        if include_bottom and tail_degrees[parts - 1] == 1:
            def fill(block, r, parts=parts):
                block[:, offsets[parts - 1]:offsets[parts]] = full_B(module, 1).fractions()

            add_block(module.spaces[0].dim, fill)
        for k in range(1, parts + 1):
            dk = tail_degrees[k - 1]
            for j in range(dk):
                s_mat = module.degeneracy(dk, j).fractions()

                def fill(block, r, k=k, s_mat=s_mat):
                    block[:, offsets[k - 1]:offsets[k]] = s_mat

                add_block(module.spaces[dk - 1].dim, fill)
        return np.concatenate(rows, axis=0), np.concatenate(rhs)

    mat, rhs = build_system(len(tail_degrees), True)
    sol = solve(mat, rhs)
    if sol is None:
        for t in range(1, len(tail_degrees) + 1):
            mat_t, rhs_t = build_system(t, False)
            sol_t = solve(mat_t, rhs_t)
            if sol_t is None:
                if t == 1:
                    witness = full_B(module, degree).apply(y0)
                else:
                    prev_mat, prev_rhs = build_system(t - 1, False)
                    prev_sol = solve(prev_mat, prev_rhs)
                    u_prev = prev_sol[offsets[t - 2]:offsets[t - 1]]
                    witness = full_B(module, tail_degrees[t - 2]).apply(u_prev)
                raise CompletionObstruction(tail_degrees[t - 1], witness)
        bottom = full_B(module, 1)
        u_last = solve(*build_system(len(tail_degrees), False))
        witness = bottom.apply(u_last[offsets[-2]:offsets[-1]])
        raise CompletionObstruction(0, witness)

    components = [tuple(Fraction(x) for x in y0)]
    for k in range(len(tail_degrees)):
        components.append(tuple(Fraction(x)
                                for x in sol[offsets[k]:offsets[k + 1]]))
    return BBcocycle(degree, tuple(components))


def bb_cohomologous(module: CocyclicModule, first: BBcocycle,
                    second: BBcocycle) -> bool:
    """Whether two (b, B)-cocycles of equal degree differ by a (b+B)-coboundary."""
    if first.degree != second.degree:
        raise LinAlgError("cannot compare cocycles of different degrees")
    n = first.degree
    degrees = first.component_degrees()
    deltas = [
        np.array([Fraction(a) - Fraction(b) for a, b in zip(c2, c1)], dtype=object)
        for c1, c2 in zip(first.components, second.components)]

    hom_degrees = [n - 1 - 2 * k for k in range(len(degrees)) if n - 1 - 2 * k >= 0]
    if not hom_degrees:
        return all(_vector_is_zero(d) for d in deltas)
    dims = [module.spaces[d].dim for d in hom_degrees]
    offsets = np.concatenate([[0], np.cumsum(dims)])
    total_cols = int(offsets[-1])

    rows = []
    rhs = []
    for k, dk in enumerate(degrees):
        block = np.zeros((module.spaces[dk].dim, total_cols), dtype=object)
        block[...] = Fraction(0)
        if k < len(hom_degrees):
            block[:, offsets[k]:offsets[k + 1]] = full_b(module, dk - 1).fractions()
        if k >= 1:
            block[:, offsets[k - 1]:offsets[k]] = full_B(module, dk + 1).fractions()
        rows.append(block)
        rhs.append(deltas[k])
    return solve(np.concatenate(rows, axis=0), np.concatenate(rhs)) is not None


def cyclic_cocycle_subspace(module: CocyclicModule, degree: int) -> Subspace:
    """Normalized cochains killed by b with cyclic eigenvalue (-1)^degree."""
    if degree > module.degree_cap - 1:
        raise LinAlgError(
            f"degree {degree} has no coboundary under cap {module.degree_cap}")
    lam = module.tau(degree).scale(Fraction((-1) ** degree))
    constraints = [full_b(module, degree),
                   LinearMap.identity(module.spaces[degree]) - lam]
    constraints += list(module.degeneracies[degree])
    return solve_constrained_subspace(module.spaces[degree], constraints, prefix="z")


# --------------------------------------------------------------------------
# cup-product setups


Coefficients = Union[CompatiblePair, tuple[SaydModule, SaydContramodule]]


def _split_coefficients(coefficients: Coefficients):
    if isinstance(coefficients, CompatiblePair):
        return coefficients.module, coefficients.contramodule, coefficients
    module, contra = coefficients
    return module, contra, None


@dataclass(frozen=True)
class ConvolutionCupSetup:
    """Everything needed to cup contramodule-valued algebra cochains with
    module-coefficient coalgebra cochains through the convolution algebra."""

    algebra: ModuleAlgebra
    coalgebra: ModuleCoalgebra
    action: CoalgebraAction
    module: SaydModule
    contramodule: SaydContramodule
    pair: Optional[CompatiblePair]
    degree_cap: int
    convolution: ConvolutionAlgebra
    embedding: LinearMap
    algebra_cochains: HomCochainComplex
    coalgebra_cochains: QuotientCochainComplex
    bicomplex: BicocyclicModule
    diagonal_module: CocyclicModule
    tensor_values: Contratensor
    pair_collapse: Optional[LinearMap]
    scalar_target: CocyclicModule
    tensor_target: CocyclicModule
    scalar_convolution_target: CocyclicModule
    tensor_convolution_target: CocyclicModule


def ac_cup_setup(algebra: ModuleAlgebra, coalgebra: ModuleCoalgebra,
                 action: CoalgebraAction, coefficients: Coefficients,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> ConvolutionCupSetup:
    module, contra, pair = _split_coefficients(coefficients)
    require(check_sayd_module(module), "module coefficients")
    require(check_sayd_contramodule(contra), "contramodule coefficients")
    if action.coalgebra.space != coalgebra.space or action.algebra.space != algebra.space:
        raise LinAlgError("the coalgebra action does not match the given algebra "
                          "and coalgebra")
    conv = convolution_algebra(action)
    embedding = iota(action, conv)
    x = algebra_contra_cocyclic(algebra, contra, degree_cap)
    y = coalgebra_cocyclic(coalgebra, module, degree_cap)
    bicomplex = tensor_bicocyclic(x.module, y.module)
    diag = diagonal(bicomplex)
    tensor_values = contratensor(module, contra)
    pair_collapse = None
    if pair is not None:
        require(check_compatible_pair(pair), "coefficient pair")
        pair_collapse = collapse_map(pair, tensor_values)
    plain_base = algebra.algebra
    conv_base = conv.algebra
    return ConvolutionCupSetup(
        algebra, coalgebra, action, module, contra, pair, degree_cap,
        conv, embedding, x, y, bicomplex, diag, tensor_values, pair_collapse,
        plain_algebra_cocyclic(plain_base, None, degree_cap),
        plain_algebra_cocyclic(plain_base, tensor_values.space, degree_cap),
        plain_algebra_cocyclic(conv_base, None, degree_cap),
        plain_algebra_cocyclic(conv_base, tensor_values.space, degree_cap))


@dataclass(frozen=True)
class CrossedProductCupSetup:
    """Everything needed to cup colinear comodule-algebra cochains with
    contramodule-valued algebra cochains on the crossed product algebra."""

    algebra: ModuleAlgebra
    comodule_algebra: ComoduleAlgebra
    module: SaydModule
    contramodule: SaydContramodule
    pair: Optional[CompatiblePair]
    degree_cap: int
    crossed: Algebra
    comodule_cochains: HomCochainComplex
    algebra_cochains: HomCochainComplex
    bicomplex: BicocyclicModule
    diagonal_module: CocyclicModule
    tensor_values: Contratensor
    pair_collapse: Optional[LinearMap]
    scalar_target: CocyclicModule
    tensor_target: CocyclicModule


def aa_cup_setup(algebra: ModuleAlgebra, comodule_algebra: ComoduleAlgebra,
                 coefficients: Coefficients,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> CrossedProductCupSetup:
    module, contra, pair = _split_coefficients(coefficients)
    require(check_sayd_module(module), "module coefficients")
    require(check_sayd_contramodule(contra), "contramodule coefficients")
    if algebra.hopf != comodule_algebra.hopf:
        raise LinAlgError("the two algebras live over different Hopf algebras")
    crossed = crossed_product(algebra, comodule_algebra)
    x = comodule_algebra_cocyclic(comodule_algebra, module, degree_cap)
    y = algebra_contra_cocyclic(algebra, contra, degree_cap)
    bicomplex = tensor_bicocyclic(x.module, y.module)
    diag = diagonal(bicomplex)
    tensor_values = contratensor(module, contra)
    pair_collapse = None
    if pair is not None:
        require(check_compatible_pair(pair), "coefficient pair")
        pair_collapse = collapse_map(pair, tensor_values)
    return CrossedProductCupSetup(
        algebra, comodule_algebra, module, contra, pair, degree_cap,
        crossed, x, y, bicomplex, diag, tensor_values, pair_collapse,
        plain_algebra_cocyclic(crossed, None, degree_cap),
        plain_algebra_cocyclic(crossed, tensor_values.space, degree_cap))


# --------------------------------------------------------------------------
# the convolution-algebra comparison map


def _psi_blocks(setup: ConvolutionCupSetup, q: int, collapse: LinearMap,
                values: VectorSpace):
    """Per algebra-cochain basis map, the matrix N (x) C^{(q+1)} -> Hom(B^{(q+1)}, V)."""
    x = setup.algebra_cochains
    y = setup.coalgebra_cochains
    conv = setup.convolution
    n_space = setup.module.space
    id_n = LinearMap.identity(n_space)
    target = hom_space(_power(conv.algebra.space, q + 1), values)
    blocks = []
    for i in range(x.module.spaces[q].dim):
        phi = x.basis_map(q, i)
        pieces = []
        for u in itertools.product(range(conv.dim), repeat=q + 1):
            f_u = conv.basis_maps[u[0]]
            for k in range(1, q + 1):
                f_u = tensor_map(f_u, conv.basis_maps[u[k]])
            pieces.append(collapse @ tensor_map(id_n, phi @ f_u))
        blocks.append(relabel(stack_vertical(pieces), y.ambients[q], target))
    return blocks, target


def _assemble_psi(setup: ConvolutionCupSetup, q: int, blocks, target) -> LinearMap:
    y = setup.coalgebra_cochains
    source = setup.diagonal_module.spaces[q]
    cols = [(block @ y.quotients[q].section).fractions() for block in blocks]
    if not cols:
        return LinearMap.zero(source, target)
    matrix = np.concatenate(cols, axis=1) if len(cols) > 1 else cols[0]
    return LinearMap.from_rows(source, target, matrix)


def psi_matrix(setup: ConvolutionCupSetup, q: int, collapse: LinearMap,
               values: VectorSpace) -> LinearMap:
    """Diagonal degree-q space -> Hom(B^{(q+1)}, V), B the convolution algebra.

    Well-definedness on the coalgebra-side quotient is verified: every block
    must annihilate the balancing relation, else the map would depend on the
    chosen representatives.
    """
    y = setup.coalgebra_cochains
    blocks, target = _psi_blocks(setup, q, collapse, values)
    for i, block in enumerate(blocks):
        if not (block @ y.relations[q]).is_zero():
            raise LinAlgError(
                f"the comparison map is not well defined on the quotient at "
                f"degree {q} (basis map {i})")
    return _assemble_psi(setup, q, blocks, target)


def psi_scalar(setup: ConvolutionCupSetup, q: int) -> LinearMap:
    if setup.pair_collapse is None:
        raise LinAlgError("no compatible pairing was provided; "
                          "use the contratensor-valued variant")
    return psi_matrix(setup, q, setup.pair.pairing, VectorSpace.ground())


def psi_tensor(setup: ConvolutionCupSetup, q: int) -> LinearMap:
    return psi_matrix(setup, q, setup.tensor_values.projection,
                      setup.tensor_values.space)


# --------------------------------------------------------------------------
# the crossed-product comparison map


def _iterated_coactions(comodule_algebra: ComoduleAlgebra, count: int):
    h = comodule_algebra.hopf
    b = comodule_algebra.space
    mats = [comodule_algebra.coaction]
    for k in range(1, count):
        step = tensor_map(LinearMap.identity(_power(h.space, k)),
                          comodule_algebra.coaction) @ mats[-1]
        mats.append(relabel(step, b, tensor_space(_power(h.space, k + 1), b)))
    return mats


def _phi_transformer(setup: CrossedProductCupSetup, n: int) -> LinearMap:
    """(A x B)^{(n+1)} -> B^{(n+1)} (x) A^{(n+1)}.

    Expands each crossed-product leg by iterated coactions, multiplies the
    matching coaction legs into one Hopf element per slot, and lets its
    inverse antipode act on the algebra leg.  Built sparsely column by
    column, so the cost scales with the support of the coactions.
    """
    a_alg = setup.algebra
    b_alg = setup.comodule_algebra
    h = a_alg.hopf
    da, db, dh = a_alg.space.dim, b_alg.space.dim, h.space.dim
    source = _power(setup.crossed.space, n + 1)
    target = tensor_space(_power(b_alg.space, n + 1), _power(a_alg.space, n + 1))

    iter_mats = _iterated_coactions(b_alg, n + 1)
    expansions_by_basis = []
    for k in range(n + 1):
        mat = iter_mats[k]
        dims = [dh] * (k + 1) + [db]
        per_basis = []
        for u in range(db):
            column = mat.column(u)
            support = []
            for flat, value in enumerate(column):
                if value != 0:
                    decoded = np.unravel_index(flat, dims)
                    support.append((tuple(int(t) for t in decoded[:-1]),
                                    int(decoded[-1]), value))
            per_basis.append(support)
        expansions_by_basis.append(per_basis)

    mul_fr = h.mul.fractions()
    sinv_fr = h.antipode_inv.fractions()
    act_fr = a_alg.action.fractions()

    entries: dict[tuple[int, int], Fraction] = {}
    source_dims = [da, db] * (n + 1)
    a_strides = [da ** (n - j) for j in range(n + 1)]
    b_strides = [db ** (n - j) for j in range(n + 1)]
    for col in range(source.dim):
        decoded = np.unravel_index(col, source_dims)
        a_idx = [int(x) for x in decoded[0::2]]
        b_idx = [int(x) for x in decoded[1::2]]
        for combo in itertools.product(
                *[expansions_by_basis[k][b_idx[k]] for k in range(n + 1)]):
            coeff = Fraction(1)
            for _, _, value in combo:
                coeff *= value
            legs = [c[0] for c in combo]
            bodies_flat = sum(c[1] * b_strides[k] for k, c in enumerate(combo))
            slot_vectors = []
            for j in range(n + 1):
                p = np.array([Fraction(0)] * dh, dtype=object)
                p[legs[j][0]] = Fraction(1)
                for k in range(j + 1, n + 1):
                    m = legs[k][k - j]
                    p = np.array(
                        [sum(p[s] * mul_fr[t, s * dh + m] for s in range(dh))
                         for t in range(dh)], dtype=object)
                s_vec = np.dot(sinv_fr, p)
                acted = np.array(
                    [sum(s_vec[s] * act_fr[t, s * da + a_idx[j]] for s in range(dh))
                     for t in range(da)], dtype=object)
                slot_vectors.append(
                    [(t, v) for t, v in enumerate(acted) if v != 0])
            for picks in itertools.product(*slot_vectors):
                value = coeff
                a_flat = 0
                for j, (t, v) in enumerate(picks):
                    value *= v
                    a_flat += t * a_strides[j]
                row = bodies_flat * (da ** (n + 1)) + a_flat
                key = (row, col)
                entries[key] = entries.get(key, Fraction(0)) + value
    items = [(r, c, v) for (r, c), v in entries.items() if v != 0]
    return LinearMap.from_entries(source, target, items)


def phi_matrix(setup: CrossedProductCupSetup, n: int, collapse: LinearMap,
               values: VectorSpace) -> LinearMap:
    """Diagonal degree-n space -> Hom((A x B)^{(n+1)}, V)."""
    transformer = _phi_transformer(setup, n)
    x = setup.comodule_cochains
    y = setup.algebra_cochains
    target = hom_space(_power(setup.crossed.space, n + 1), values)
    source = setup.diagonal_module.spaces[n]
    cols = []
    for r in range(x.module.spaces[n].dim):
        psi_r = x.basis_map(n, r)
        for i in range(y.module.spaces[n].dim):
            phi_i = y.basis_map(n, i)
            composite = collapse @ tensor_map(psi_r, phi_i) @ transformer
            cols.append(map_to_hom_vector(composite))
    if not cols:
        return LinearMap.zero(source, target)
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(target.dim)]
    return LinearMap.from_rows(source, target, rows)


def phi_scalar(setup: CrossedProductCupSetup, n: int) -> LinearMap:
    if setup.pair_collapse is None:
        raise LinAlgError("no compatible pairing was provided; "
                          "use the contratensor-valued variant")
    return phi_matrix(setup, n, setup.pair.pairing, VectorSpace.ground())


def phi_tensor(setup: CrossedProductCupSetup, n: int) -> LinearMap:
    return phi_matrix(setup, n, setup.tensor_values.projection,
                      setup.tensor_values.space)


# --------------------------------------------------------------------------
# structural checks for the comparison maps


def _check_cyclic_map(rep: Report, source: CocyclicModule, target: CocyclicModule,
                      maps: dict[int, LinearMap]) -> None:
    cap = source.degree_cap
    for q in range(cap):
        rep.check_equal(f"commutes with d0 (degree {q})",
                        maps[q + 1] @ source.face(q, 0),
                        target.face(q, 0) @ maps[q])
    for q in range(1, cap + 1):
        rep.check_equal(f"commutes with s{q - 1} (degree {q})",
                        maps[q - 1] @ source.degeneracy(q, q - 1),
                        target.degeneracy(q, q - 1) @ maps[q])
    for q in range(cap + 1):
        rep.check_equal(f"commutes with t (degree {q})",
                        maps[q] @ source.tau(q), target.tau(q) @ maps[q])


def check_psi(setup: ConvolutionCupSetup, tensor_valued: bool = False,
              name: Optional[str] = None) -> Report:
    """Well-definedness and generator commutation of the convolution comparison map."""
    if tensor_valued:
        collapse = setup.tensor_values.projection
        values = setup.tensor_values.space
        target = setup.tensor_convolution_target
        title = name or "contratensor-valued convolution comparison map"
    else:
        if setup.pair_collapse is None:
            raise LinAlgError("no compatible pairing was provided; "
                              "use the contratensor-valued variant")
        collapse = setup.pair.pairing
        values = VectorSpace.ground()
        target = setup.scalar_convolution_target
        title = name or "convolution comparison map"
    rep = Report(title)
    y = setup.coalgebra_cochains
    cap = setup.degree_cap
    maps = {}
    for q in range(cap + 1):
        blocks, target_space = _psi_blocks(setup, q, collapse, values)
        bad = [i for i, block in enumerate(blocks)
               if not (block @ y.relations[q]).is_zero()]
        rep.add(f"well defined on the relation subspace (degree {q})",
                not bad, "" if not bad else f"basis maps {bad} see the relations")
        maps[q] = _assemble_psi(setup, q, blocks, target_space)
    _check_cyclic_map(rep, setup.diagonal_module, target, maps)
    return rep


def check_phi(setup: CrossedProductCupSetup, tensor_valued: bool = False,
              name: Optional[str] = None) -> Report:
    """Generator commutation of the crossed-product comparison map."""
    if tensor_valued:
        collapse = setup.tensor_values.projection
        values = setup.tensor_values.space
        target = setup.tensor_target
        title = name or "contratensor-valued crossed-product comparison map"
    else:
        if setup.pair_collapse is None:
            raise LinAlgError("no compatible pairing was provided; "
                              "use the contratensor-valued variant")
        collapse = setup.pair.pairing
        values = VectorSpace.ground()
        target = setup.scalar_target
        title = name or "crossed-product comparison map"
    rep = Report(title)
    cap = setup.degree_cap
    maps = {n: phi_matrix(setup, n, collapse, values) for n in range(cap + 1)}
    _check_cyclic_map(rep, setup.diagonal_module, target, maps)
    return rep


def check_collapse_factorization(setup, name: str = "collapse factorization") -> Report:
    """Post-composing the contratensor-valued map with the pairing collapse
    recovers the scalar map, degree by degree."""
    if setup.pair_collapse is None:
        raise LinAlgError("no compatible pairing was provided")
    rep = Report(name)
    cap = setup.degree_cap
    if isinstance(setup, ConvolutionCupSetup):
        base = setup.convolution.algebra.space
        scalar, tensor = psi_scalar, psi_tensor
    else:
        base = setup.crossed.space
        scalar, tensor = phi_scalar, phi_tensor
    for q in range(cap + 1):
        post = hom_postcompose(_power(base, q + 1), setup.pair_collapse)
        rep.check_equal(f"collapse of the tensor-valued map (degree {q})",
                        post @ tensor(setup, q), scalar(setup, q))
    return rep


# --------------------------------------------------------------------------
# the four pipelines


def _validated_cocycle(module: CocyclicModule, degree: int, vec, label: str) -> np.ndarray:
    v = _as_vector(vec, module.spaces[degree].dim, label)
    if degree > module.degree_cap - 1:
        raise LinAlgError(f"{label} sits at degree {degree}, too high to validate "
                          f"under cap {module.degree_cap}")
    if not _vector_is_zero(full_b(module, degree).apply(v)):
        raise LinAlgError(f"{label} is not closed under the Hochschild coboundary")
    sign = Fraction((-1) ** degree)
    if not vectors_equal(module.tau(degree).apply(v), [sign * x for x in v]):
        raise LinAlgError(f"{label} is not cyclic: the cyclic operator does not "
                          f"act on it by {sign}")
    degenerate = any(not _vector_is_zero(module.degeneracy(degree, j).apply(v))
                     for j in range(degree))
    if degenerate:
        v = normalization_projector(module, degree).apply(v)
        if not _vector_is_zero(full_b(module, degree).apply(v)):
            raise LinAlgError(f"{label} cannot be normalized without losing closure")
        if not vectors_equal(module.tau(degree).apply(v), [sign * x for x in v]):
            raise LinAlgError(f"{label} cannot be normalized without losing cyclicity")
    return v


def _finish(target: CocyclicModule, degree: int, top_vec: np.ndarray) -> BBcocycle:
    if not _vector_is_zero(full_b(target, degree).apply(top_vec)):
        raise LinAlgError("the product cochain is not closed under the "
                          "Hochschild coboundary")
    cocycle = cyclic_complete(target, degree, top_vec)
    require(check_bb_cocycle(target, cocycle), "cup product output")
    return cocycle


def _require_total_degree(setup, p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise LinAlgError("degrees must be nonnegative")
    if p + q > setup.degree_cap - 1:
        raise LinAlgError(
            f"the product degree {p + q} must stay below the tower cap "
            f"{setup.degree_cap}")


def _cup_convolution(setup: ConvolutionCupSetup, p: int, q: int, left, right,
                     collapse: LinearMap, values: VectorSpace,
                     target: CocyclicModule) -> BBcocycle:
    _require_total_degree(setup, p, q)
    phi = _validated_cocycle(setup.algebra_cochains.module, p, left,
                             "the algebra-side cochain")
    omega = _validated_cocycle(setup.coalgebra_cochains.module, q, right,
                               "the coalgebra-side cochain")
    n = p + q
    x_vec = np.kron(phi, omega)
    y_vec = aw_map(setup.bicomplex, p, q).apply(x_vec)
    z_conv = psi_matrix(setup, n, collapse, values).apply(y_vec)
    pullback = hom_precompose(tensor_power_map(setup.embedding, n + 1), values)
    z = relabel(pullback, None, target.spaces[n]).apply(z_conv)
    return _finish(target, n, z)


def cup_ac(setup: ConvolutionCupSetup, p: int, q: int, left, right) -> BBcocycle:
    """Cup a degree-p algebra cochain with a degree-q coalgebra cochain into a
    (b, B)-cocycle on plain cochains of the algebra (scalar values)."""
    if setup.pair_collapse is None:
        raise LinAlgError("no compatible pairing was provided; use cup_ac_general")
    return _cup_convolution(setup, p, q, left, right, setup.pair.pairing,
                            VectorSpace.ground(), setup.scalar_target)


def cup_ac_general(setup: ConvolutionCupSetup, p: int, q: int, left, right) -> BBcocycle:
    """The contratensor-valued variant: no pairing needed, values in L."""
    return _cup_convolution(setup, p, q, left, right,
                            setup.tensor_values.projection,
                            setup.tensor_values.space, setup.tensor_target)


def _cup_crossed(setup: CrossedProductCupSetup, psi_degree: int, phi_degree: int,
                 left, right, collapse: LinearMap, values: VectorSpace,
                 target: CocyclicModule) -> BBcocycle:
    _require_total_degree(setup, psi_degree, phi_degree)
    psi_vec = _validated_cocycle(setup.comodule_cochains.module, psi_degree, left,
                                 "the comodule-side cochain")
    phi_vec = _validated_cocycle(setup.algebra_cochains.module, phi_degree, right,
                                 "the algebra-side cochain")
    n = psi_degree + phi_degree
    x_vec = np.kron(psi_vec, phi_vec)
    y_vec = aw_map(setup.bicomplex, psi_degree, phi_degree).apply(x_vec)
    z = phi_matrix(setup, n, collapse, values).apply(y_vec)
    return _finish(target, n, z)


def cup_aa(setup: CrossedProductCupSetup, psi_degree: int, phi_degree: int,
           left, right) -> BBcocycle:
    """Cup a comodule-algebra cochain with an algebra cochain into a
    (b, B)-cocycle on plain cochains of the crossed product (scalar values)."""
    if setup.pair_collapse is None:
        raise LinAlgError("no compatible pairing was provided; use cup_aa_general")
    return _cup_crossed(setup, psi_degree, phi_degree, left, right,
                        setup.pair.pairing, VectorSpace.ground(),
                        setup.scalar_target)


def cup_aa_general(setup: CrossedProductCupSetup, psi_degree: int, phi_degree: int,
                   left, right) -> BBcocycle:
    """The contratensor-valued variant on the crossed product."""
    return _cup_crossed(setup, psi_degree, phi_degree, left, right,
                        setup.tensor_values.projection,
                        setup.tensor_values.space, setup.tensor_target)


def collapse_bb(cocycle: BBcocycle, base_space: VectorSpace,
                collapse: LinearMap) -> BBcocycle:
    """Push an L-valued (b, B)-cocycle to scalars along a collapse map L -> Q."""
    out = []
    for k, comp in enumerate(cocycle.components):
        d = cocycle.degree - 2 * k
        post = hom_postcompose(_power(base_space, d + 1), collapse)
        vec = post.apply(np.array([Fraction(x) for x in comp], dtype=object))
        out.append(tuple(Fraction(x) for x in vec))
    return BBcocycle(cocycle.degree, tuple(out))
