"""Tests for bicocyclic towers, total complexes, comparison maps and cups."""

from fractions import Fraction

import numpy as np
import pytest

from hopfcyclic.coefficients import (
    SaydModule,
    grouplike_coefficients,
    trivial_coefficients,
)
from hopfcyclic.cocyclic import (
    CocyclicModule,
    cyclic_cohomology,
    full_b,
    plain_algebra_cocyclic,
    verify_cocyclic,
)
from hopfcyclic.cup import (
    BBcocycle,
    CompletionObstruction,
    aa_cup_setup,
    ac_cup_setup,
    aw_map,
    bb_cohomologous,
    check_aw_chain_map,
    check_bb_cocycle,
    check_bicocyclic,
    check_collapse_factorization,
    check_phi,
    check_psi,
    check_total_mixed_complex,
    collapse_bb,
    cup_aa,
    cup_aa_general,
    cup_ac,
    cup_ac_general,
    cyclic_cocycle_subspace,
    cyclic_complete,
    diagonal,
    tensor_bicocyclic,
    total_complex,
)
from hopfcyclic.hopf import (
    CoalgebraAction,
    ComoduleAlgebra,
    ModuleAlgebra,
    ModuleCoalgebra,
    cyclic_group_table,
    group_algebra,
    left_regular_action,
    regular_coaction,
    symmetric_group_table,
    trivial_action,
    trivial_hopf,
)
from hopfcyclic.linalg import (
    LinAlgError,
    LinearMap,
    VectorSpace,
    tensor_space,
)


def failures(report):
    return [e.name for e in report.entries if not e.passed]


def basis_cocycle(module, degree):
    """First basis vector of the normalized cyclic cocycles, or zero."""
    sub = cyclic_cocycle_subspace(module, degree)
    mat = sub.basis.fractions()
    if mat.shape[1]:
        return [x for x in mat[:, 0]]
    return [0] * module.spaces[degree].dim


@pytest.fixture(scope="module")
def triv():
    return trivial_hopf()


@pytest.fixture(scope="module")
def z2():
    return group_algebra(cyclic_group_table(2), labels=["1", "g"])


@pytest.fixture(scope="module")
def sign_action(z2):
    return LinearMap.from_rows(
        tensor_space(z2.space, z2.space), z2.space,
        [[1, 0, 1, 0], [0, 1, 0, -1]])


@pytest.fixture(scope="module")
def z2_convolution_data(z2, sign_action):
    """Module algebra (sign action), module coalgebra (regular action) and
    the intertwining coalgebra action used by the convolution-side cups."""
    algebra = ModuleAlgebra(z2, z2.space, z2.mul, z2.unit, sign_action)
    coalgebra = ModuleCoalgebra(z2, z2.space, z2.comul, z2.counit,
                                left_regular_action(z2))
    action = CoalgebraAction(coalgebra, algebra, sign_action)
    return algebra, coalgebra, action


@pytest.fixture(scope="module")
def setup_ac_trivial(z2, z2_convolution_data):
    algebra, coalgebra, action = z2_convolution_data
    return ac_cup_setup(algebra, coalgebra, action, trivial_coefficients(z2),
                        degree_cap=3)


@pytest.fixture(scope="module")
def setup_ac_grouplike(z2, z2_convolution_data):
    algebra, coalgebra, action = z2_convolution_data
    return ac_cup_setup(algebra, coalgebra, action,
                        grouplike_coefficients(z2, 1), degree_cap=3)


@pytest.fixture(scope="module")
def setup_aa_trivial(z2, sign_action):
    algebra = ModuleAlgebra(z2, z2.space, z2.mul, z2.unit, sign_action)
    comodule = ComoduleAlgebra(z2, z2.space, z2.mul, z2.unit,
                               regular_coaction(z2))
    return aa_cup_setup(algebra, comodule, trivial_coefficients(z2),
                        degree_cap=3)


@pytest.fixture(scope="module")
def setup_aa_grouplike(z2, sign_action):
    algebra = ModuleAlgebra(z2, z2.space, z2.mul, z2.unit, sign_action)
    comodule = ComoduleAlgebra(z2, z2.space, z2.mul, z2.unit,
                               regular_coaction(z2))
    return aa_cup_setup(algebra, comodule, grouplike_coefficients(z2, 1),
                        degree_cap=3)


@pytest.fixture(scope="module")
def setup_ac_unpaired(z2, z2_convolution_data):
    """Coefficients given as a separate module and contramodule with no
    pairing: the two-dimensional carrier with the counit right action and
    the comultiplication coaction, against the grouplike contramodule."""
    algebra, coalgebra, action = z2_convolution_data
    eps_action = LinearMap.from_rows(
        tensor_space(z2.space, z2.space), z2.space,
        [[1, 1, 0, 0], [0, 0, 1, 1]])
    module = SaydModule(z2, z2.space, eps_action, z2.comul)
    contramodule = grouplike_coefficients(z2, 1).contramodule
    return ac_cup_setup(algebra, coalgebra, action, (module, contramodule),
                        degree_cap=3)


@pytest.fixture(scope="module")
def s3_setups(triv):
    """Cup setups over the trivial Hopf algebra with the group algebra of S3
    as the only interesting factor; used for unit-class transport tests."""
    s3 = group_algebra(symmetric_group_table(3))
    algebra = ModuleAlgebra(triv, s3.space, s3.mul, s3.unit,
                            trivial_action(triv, s3.space))
    coalgebra = ModuleCoalgebra(triv, triv.space, triv.comul, triv.counit,
                                trivial_action(triv, triv.space))
    action = CoalgebraAction(coalgebra, algebra,
                             trivial_action(triv, s3.space))
    comodule = ComoduleAlgebra(triv, triv.space, triv.mul, triv.unit,
                               regular_coaction(triv))
    ac = ac_cup_setup(algebra, coalgebra, action, trivial_coefficients(triv),
                      degree_cap=2)
    aa = aa_cup_setup(algebra, comodule, trivial_coefficients(triv),
                      degree_cap=2)
    return ac, aa


@pytest.fixture(scope="module")
def point_bicomplex(triv):
    tower = plain_algebra_cocyclic(triv.algebra, degree_cap=3)
    return tensor_bicocyclic(tower, tower)


# ------------------------------------------------------- bicocyclic structure


def test_point_bicomplex_structure(point_bicomplex):
    report = check_bicocyclic(point_bicomplex, "point bicomplex")
    assert report.passed, failures(report)
    diag = diagonal(point_bicomplex)
    report = verify_cocyclic(diag, "point diagonal")
    assert report.passed, failures(report)


def test_point_total_complex(point_bicomplex):
    total = total_complex(point_bicomplex)
    assert [s.dim for s in total.spaces] == [1, 0, 0, 0]
    report = check_total_mixed_complex(total, "point total")
    assert report.passed, failures(report)
    report = check_aw_chain_map(total, diagonal(point_bicomplex), "point")
    assert report.passed, failures(report)


def test_point_comparison_map_is_identity(point_bicomplex):
    aw = aw_map(point_bicomplex, 0, 0)
    assert aw.fractions().tolist() == [[Fraction(1)]]


def test_comparison_map_degree_guard(point_bicomplex):
    with pytest.raises(LinAlgError):
        aw_map(point_bicomplex, 2, 2)


def test_tensor_bicocyclic_cap_mismatch(triv):
    three = plain_algebra_cocyclic(triv.algebra, degree_cap=3)
    two = plain_algebra_cocyclic(triv.algebra, degree_cap=2)
    with pytest.raises(LinAlgError, match="share one degree cap"):
        tensor_bicocyclic(three, two)


@pytest.mark.parametrize("which", ["ac", "aa"])
def test_bicocyclic_invariants(which, setup_ac_trivial, setup_aa_trivial):
    setup = setup_ac_trivial if which == "ac" else setup_aa_trivial
    report = check_bicocyclic(setup.bicomplex, f"{which} bicomplex")
    assert report.passed, failures(report)
    report = verify_cocyclic(setup.diagonal_module, f"{which} diagonal")
    assert report.passed, failures(report)


@pytest.mark.parametrize("which", ["ac trivial", "ac grouplike",
                                   "aa trivial", "aa grouplike"])
def test_total_and_comparison(which, setup_ac_trivial, setup_ac_grouplike,
                              setup_aa_trivial, setup_aa_grouplike):
    setup = {"ac trivial": setup_ac_trivial,
             "ac grouplike": setup_ac_grouplike,
             "aa trivial": setup_aa_trivial,
             "aa grouplike": setup_aa_grouplike}[which]
    total = total_complex(setup.bicomplex)
    report = check_total_mixed_complex(total, which)
    assert report.passed, failures(report)
    report = check_aw_chain_map(total, setup.diagonal_module, which)
    assert report.passed, failures(report)


# --------------------------------------------------------- cyclic comparison


def test_convolution_comparison_scalar(setup_ac_grouplike):
    report = check_psi(setup_ac_grouplike)
    assert report.passed, failures(report)


def test_convolution_comparison_tensor(setup_ac_grouplike):
    report = check_psi(setup_ac_grouplike, tensor_valued=True)
    assert report.passed, failures(report)


def test_convolution_comparison_unpaired(setup_ac_unpaired):
    report = check_psi(setup_ac_unpaired, tensor_valued=True)
    assert report.passed, failures(report)


def test_crossed_comparison_scalar(setup_aa_grouplike):
    report = check_phi(setup_aa_grouplike)
    assert report.passed, failures(report)


def test_crossed_comparison_tensor(setup_aa_grouplike):
    report = check_phi(setup_aa_grouplike, tensor_valued=True)
    assert report.passed, failures(report)


def test_collapse_factorization(setup_ac_grouplike, setup_aa_grouplike):
    for setup in (setup_ac_grouplike, setup_aa_grouplike):
        report = check_collapse_factorization(setup)
        assert report.passed, failures(report)


# ------------------------------------------------------------- cup pipelines


def test_cup_convolution_grouplike(setup_ac_grouplike):
    phi = basis_cocycle(setup_ac_grouplike.algebra_cochains.module, 1)
    omega = basis_cocycle(setup_ac_grouplike.coalgebra_cochains.module, 1)
    assert phi == [0, 1]
    assert omega == [-1, 1]
    out = cup_ac(setup_ac_grouplike, 1, 1, phi, omega)
    assert out.degree == 2
    assert list(out.components[0]) == [0, 0, 0, -2, 0, 0, 0, 0]
    assert list(out.components[1]) == [0, 0]
    report = check_bb_cocycle(setup_ac_grouplike.scalar_target, out)
    assert report.passed, failures(report)


def test_cup_convolution_coboundary_stability(setup_ac_grouplike):
    """Shifting either input by a coboundary moves the output by one."""
    target = setup_ac_grouplike.scalar_target
    phi = [0, 1]
    omega = [-1, 1]
    out = cup_ac(setup_ac_grouplike, 1, 1, phi, omega)
    shifted = cup_ac(setup_ac_grouplike, 1, 1, [0, 3], [-2, 2])
    assert bb_cohomologous(target, shifted, out)


def test_cup_crossed_grouplike(setup_aa_grouplike):
    psi = basis_cocycle(setup_aa_grouplike.comodule_cochains.module, 0)
    phi = basis_cocycle(setup_aa_grouplike.algebra_cochains.module, 1)
    assert psi == [1]
    assert phi == [0, 1]
    out = cup_aa(setup_aa_grouplike, 0, 1, psi, phi)
    assert out.degree == 1
    expected = [0] * 16
    expected[11] = 1
    expected[14] = -1
    assert list(out.components[0]) == expected
    report = check_bb_cocycle(setup_aa_grouplike.scalar_target, out)
    assert report.passed, failures(report)


def test_cup_crossed_zero_input(setup_aa_grouplike):
    phi = basis_cocycle(setup_aa_grouplike.algebra_cochains.module, 1)
    zero = [0] * setup_aa_grouplike.comodule_cochains.module.spaces[1].dim
    out = cup_aa(setup_aa_grouplike, 1, 1, zero, phi)
    assert all(all(v == 0 for v in comp) for comp in out.components)


def test_cup_unpaired_general(setup_ac_unpaired):
    assert setup_ac_unpaired.tensor_values.space.dim == 1
    left = basis_cocycle(setup_ac_unpaired.algebra_cochains.module, 1)
    right = basis_cocycle(setup_ac_unpaired.coalgebra_cochains.module, 1)
    assert left == [0, 1]
    assert right == [0, 0, -1, 1]
    out = cup_ac_general(setup_ac_unpaired, 1, 1, left, right)
    assert list(out.components[0]) == [0, 0, 0, -2, 0, 0, 0, 0]
    assert list(out.components[1]) == [0, 0]


def test_cup_unpaired_scalar_refused(setup_ac_unpaired):
    with pytest.raises(LinAlgError, match="no compatible pairing"):
        cup_ac(setup_ac_unpaired, 1, 1, [0, 1], [0, 0, -1, 1])


def test_unit_class_transport_convolution(s3_setups):
    """Over the trivial Hopf algebra the convolution cup against the unit
    class returns the input cochain on the nose."""
    ac, _ = s3_setups
    unit = [Fraction(1)]
    phi1 = basis_cocycle(ac.algebra_cochains.module, 1)
    assert any(v != 0 for v in phi1)
    out = cup_ac(ac, 1, 0, phi1, unit)
    assert list(out.components[0]) == list(phi1)
    assert len(out.components) == 1
    phi0 = basis_cocycle(ac.algebra_cochains.module, 0)
    out0 = cup_ac(ac, 0, 0, phi0, unit)
    assert list(out0.components[0]) == list(phi0)


def test_unit_class_transport_crossed(s3_setups):
    """Over the trivial Hopf algebra the crossed-product cup is the plain
    product of the two functionals."""
    _, aa = s3_setups
    psi0 = basis_cocycle(aa.comodule_cochains.module, 0)
    phi1 = basis_cocycle(aa.algebra_cochains.module, 1)
    assert any(v != 0 for v in phi1)
    out = cup_aa(aa, 0, 1, psi0, phi1)
    da = 6
    db = 1
    expected = []
    for i0 in range(da):
        for _ in range(db):
            for i1 in range(da):
                for _ in range(db):
                    expected.append(psi0[0] * Fraction(phi1[i0 * da + i1]))
    assert list(out.components[0]) == expected


def test_collapse_matches_scalar_pipeline(setup_ac_trivial, setup_aa_trivial):
    """With a compatible pairing, collapsing the contratensor-valued output
    reproduces the scalar pipeline in every component."""
    cases = [
        (setup_ac_trivial, cup_ac, cup_ac_general,
         setup_ac_trivial.algebra_cochains.module,
         setup_ac_trivial.coalgebra_cochains.module,
         setup_ac_trivial.algebra.space),
        (setup_aa_trivial, cup_aa, cup_aa_general,
         setup_aa_trivial.comodule_cochains.module,
         setup_aa_trivial.algebra_cochains.module,
         setup_aa_trivial.crossed.space),
    ]
    saw_nonzero = False
    for setup, scalar_cup, general_cup, xmod, ymod, base in cases:
        for p in (0, 1):
            for q in (0, 1):
                left = basis_cocycle(xmod, p)
                right = basis_cocycle(ymod, q)
                s_out = scalar_cup(setup, p, q, left, right)
                g_out = general_cup(setup, p, q, left, right)
                collapsed = collapse_bb(g_out, base, setup.pair_collapse)
                assert collapsed.components == s_out.components, (p, q)
                if any(any(v != 0 for v in c) for c in s_out.components):
                    saw_nonzero = True
    assert saw_nonzero


# ------------------------------------------------- completion and coboundaries


def _rigged_module(cap, degeneracy_values, tau_values):
    """All spaces are one-dimensional with zero cofaces; the codegeneracy and
    cyclic scalars are prescribed so completion obstructions can be forced."""
    line = VectorSpace.ground()
    spaces = tuple(line for _ in range(cap + 1))
    faces = tuple(tuple(LinearMap.zero(line, line) for _ in range(n + 2))
                  for n in range(cap))
    degeneracies = tuple(
        tuple(LinearMap.scalar(line, degeneracy_values[n][j])
              for j in range(n))
        for n in range(cap + 1))
    cyclic = tuple(LinearMap.scalar(line, tau_values[n])
                   for n in range(cap + 1))
    return CocyclicModule(cap, spaces, faces, degeneracies, cyclic)


def test_completion_obstruction_without_tail():
    module = _rigged_module(1, [[], [1]], [1, 1])
    with pytest.raises(CompletionObstruction) as err:
        cyclic_complete(module, 1, [1])
    assert err.value.degree == 0
    assert err.value.residual == (Fraction(1),)


def test_completion_obstruction_in_tail():
    module = _rigged_module(2, [[], [0], [0, 1]], [1, -1, 1])
    with pytest.raises(CompletionObstruction) as err:
        cyclic_complete(module, 2, [1])
    assert err.value.degree == 0
    assert err.value.residual == (Fraction(2),)


def test_completion_of_generator(triv):
    module = plain_algebra_cocyclic(triv.algebra, degree_cap=3)
    generator = cyclic_cohomology(module, 2).representatives[0]
    cocycle = cyclic_complete(module, 2, generator)
    assert cocycle.components == ((Fraction(1),), (Fraction(0),))
    report = check_bb_cocycle(module, cocycle)
    assert report.passed, failures(report)


def test_cohomologous_controls(triv):
    module = plain_algebra_cocyclic(triv.algebra, degree_cap=3)
    generator = cyclic_cohomology(module, 2).representatives[0]
    one = cyclic_complete(module, 2, generator)
    double = cyclic_complete(module, 2, [2 * x for x in generator])
    zero = BBcocycle(2, ((Fraction(0),), (Fraction(0),)))
    assert bb_cohomologous(module, one, one)
    assert not bb_cohomologous(module, one, zero)
    assert not bb_cohomologous(module, one, double)


def test_cocycle_subspace_dimensions(setup_ac_grouplike, setup_aa_grouplike):
    xmod = setup_ac_grouplike.algebra_cochains.module
    ymod = setup_ac_grouplike.coalgebra_cochains.module
    assert [cyclic_cocycle_subspace(xmod, d).basis.fractions().shape[1]
            for d in range(3)] == [0, 1, 0]
    assert [cyclic_cocycle_subspace(ymod, d).basis.fractions().shape[1]
            for d in range(3)] == [0, 1, 0]
    pmod = setup_aa_grouplike.comodule_cochains.module
    assert [cyclic_cocycle_subspace(pmod, d).basis.fractions().shape[1]
            for d in range(3)] == [1, 0, 1]
    with pytest.raises(LinAlgError):
        cyclic_cocycle_subspace(xmod, 3)


# ----------------------------------------------------------- input validation


def test_cup_rejects_non_cocycle(setup_ac_grouplike):
    with pytest.raises(LinAlgError, match="not closed under the Hochschild"):
        cup_ac(setup_ac_grouplike, 1, 1, [1, 0], [-1, 1])
    with pytest.raises(LinAlgError, match="not closed under the Hochschild"):
        cup_ac(setup_ac_grouplike, 1, 1, [0, 1], [1, 1])


def test_cup_rejects_wrong_length(setup_ac_grouplike):
    with pytest.raises(LinAlgError, match="has length 3, expected 2"):
        cup_ac(setup_ac_grouplike, 1, 1, [1, 0, 0], [-1, 1])


def test_cup_rejects_excessive_degree(setup_ac_grouplike):
    top_dim = setup_ac_grouplike.algebra_cochains.module.spaces[2].dim
    with pytest.raises(LinAlgError, match="must stay below the tower cap"):
        cup_ac(setup_ac_grouplike, 2, 1, [0] * top_dim, [-1, 1])
