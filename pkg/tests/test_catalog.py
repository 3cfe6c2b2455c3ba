import pytest

from fusionsys import (ValidationError, alternating, builtin_group, cyclic,
                       dicyclic, dihedral, direct_product,
                       elementary_abelian, frobenius21, heisenberg,
                       normal_subgroups, psl2, structure_flags, symmetric)


def test_cyclic():
    assert cyclic(1).order == 1
    assert cyclic(7).order == 7
    assert structure_flags(cyclic(12)).cyclic


def test_dihedral_named_by_order():
    assert dihedral(4).order == 4           # the Klein four-group
    assert structure_flags(dihedral(4)).elementary_abelian
    for n in (6, 8, 10, 16):
        G = dihedral(n)
        assert G.order == n
        assert not structure_flags(G).abelian
    with pytest.raises(ValidationError):
        dihedral(7)
    with pytest.raises(ValidationError):
        dihedral(2)


def test_dicyclic():
    Q8 = dicyclic(8)
    assert Q8.order == 8
    # the quaternion group has a unique involution
    assert structure_flags(Q8).involutions == 1
    assert len(normal_subgroups(Q8)) == 6   # every subgroup is normal
    D12 = dicyclic(12)
    assert D12.order == 12
    assert structure_flags(D12).involutions == 1
    with pytest.raises(ValidationError):
        dicyclic(10)
    with pytest.raises(ValidationError):
        dicyclic(4)


def test_symmetric_alternating():
    assert symmetric(3).order == 6
    assert symmetric(4).order == 24
    assert alternating(3).order == 3
    assert alternating(4).order == 12
    assert alternating(5).order == 60


def test_elementary_abelian():
    G = elementary_abelian(3, 2)
    assert G.order == 9
    flags = structure_flags(G)
    assert flags.elementary_abelian and flags.exponent == 3
    with pytest.raises(ValidationError):
        elementary_abelian(4, 2)


def test_heisenberg():
    H = heisenberg(3)
    assert H.order == 27
    flags = structure_flags(H)
    assert not flags.abelian
    assert flags.exponent == 3


def test_frobenius21():
    F = frobenius21()
    assert F.order == 21
    assert not structure_flags(F).abelian


def test_psl2_orders():
    assert psl2(5).order == 60
    assert psl2(7).order == 168
    assert psl2(9).order == 360
    with pytest.raises(ValidationError):
        psl2(6)


def test_psl2_7_is_simple():
    G = psl2(7)
    assert sorted(N.order for N in normal_subgroups(G)) == [1, 168]


def test_direct_product():
    G = direct_product(symmetric(3), cyclic(3))
    assert G.order == 18
    assert G.degree == 6


def test_builtin_group_parser():
    assert builtin_group("dihedral(8)").order == 8
    assert builtin_group("direct_product(symmetric(3), cyclic(3))").order == 18
    with pytest.raises(ValidationError):
        builtin_group("nosuch(3)")
    with pytest.raises(ValidationError):
        builtin_group("dihedral(8) trailing")
    with pytest.raises(ValidationError):
        builtin_group("dihedral(two)")
    with pytest.raises(ValidationError):
        builtin_group("dihedral()")
