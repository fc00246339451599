import pytest

from hopfkit.errors import (
    BoundExceeded,
    InvalidAction,
    InvalidGroupTable,
    UnknownGroup,
)
from hopfkit.groups import (
    GroupTable,
    cyclic,
    dihedral4,
    group_by_name,
    idempotent_endos,
    quaternion8,
    semidirect_group,
    symmetric3,
)


def test_cyclic_tables():
    g = cyclic(4)
    assert g.order == 4
    assert g.mul(1, 3) == 0
    assert g.inverse == (0, 3, 2, 1)
    assert g.identity == 0


def test_symmetric3_is_nonabelian_order_6():
    g = symmetric3()
    assert g.order == 6
    assert any(g.mul(a, b) != g.mul(b, a)
               for a in range(6) for b in range(6))
    # every element times its inverse is the identity
    assert all(g.mul(x, g.inverse[x]) == g.identity for x in range(6))


def test_dihedral4_relations():
    g = dihedral4()
    names = g.names
    r = names.index("r")
    s = names.index("s")
    # s r s = r^-1
    assert g.mul(g.mul(s, r), s) == g.inverse[r]
    assert g.mul(r, g.mul(r, g.mul(r, r))) == g.identity


def test_quaternion8_relations():
    g = quaternion8()
    i = g.names.index("i")
    j = g.names.index("j")
    k = g.names.index("k")
    m1 = g.names.index("-1")
    assert g.mul(i, i) == m1
    assert g.mul(j, j) == m1
    assert g.mul(i, j) == k
    assert g.mul(j, i) == g.names.index("-k")


def test_invalid_table_rejected():
    with pytest.raises(InvalidGroupTable):
        GroupTable([[0, 1], [1, 1]])  # 1 has no inverse
    with pytest.raises(InvalidGroupTable):
        GroupTable([[0, 1], [1, 0], [0, 1]])  # not square


def test_catalog():
    for name in ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                 "S3", "D4", "Q8"):
        g = group_by_name(name)
        assert g.order == (6 if name == "S3" else
                           8 if name in ("D4", "Q8") else int(name[1]))
    with pytest.raises(UnknownGroup):
        group_by_name("M11")


def test_semidirect_trivial_action_is_direct_product():
    c3, c2 = cyclic(3), cyclic(2)
    action = {0: (0, 1, 2), 1: (0, 1, 2)}
    g = semidirect_group(c3, c2, action)
    assert g.order == 6
    # abelian, hence isomorphic to C6
    assert all(g.mul(a, b) == g.mul(b, a) for a in range(6) for b in range(6))


def test_semidirect_inversion_action_is_symmetric3():
    c3, c2 = cyclic(3), cyclic(2)
    action = {0: (0, 1, 2), 1: (0, 2, 1)}  # the reflection inverts rotations
    g = semidirect_group(c3, c2, action)
    assert g.order == 6
    assert any(g.mul(a, b) != g.mul(b, a) for a in range(6) for b in range(6))
    # same multiset of element orders as S3: 1, three 2s, two 3s
    def order_of(g, x):
        n, y = 1, x
        while y != g.identity:
            y = g.mul(y, x)
            n += 1
        return n
    s3 = symmetric3()
    assert sorted(order_of(g, x) for x in range(6)) == \
        sorted(order_of(s3, x) for x in range(6))


def test_semidirect_invalid_action():
    c3, c2 = cyclic(3), cyclic(2)
    with pytest.raises(InvalidAction):
        semidirect_group(c3, c2, {0: (0, 1, 2), 1: (1, 0, 2)})  # not an autom.
    with pytest.raises(InvalidAction):
        # valid automorphism but not a homomorphism from C2 (order 3 element)
        c3b = cyclic(3)
        semidirect_group(c3b, cyclic(3), {0: (0, 1, 2), 1: (0, 2, 1),
                                          2: (0, 1, 2)})


IDEMPOTENT_COUNTS = {
    "C1": 1, "C2": 2, "C3": 2, "C4": 2, "C5": 2, "C6": 4, "C7": 2, "C8": 2,
    "S3": 5, "D4": 10, "Q8": 2,
}


def test_idempotent_endo_counts():
    for name, expected in IDEMPOTENT_COUNTS.items():
        endos = idempotent_endos(group_by_name(name))
        assert len(endos) == expected, name


def test_idempotent_endos_s3_explicit():
    endos = idempotent_endos(symmetric3())
    assert endos == [
        (0, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 0, 1),
        (0, 1, 2, 3, 4, 5),
        (0, 2, 2, 0, 0, 2),
        (0, 5, 5, 0, 0, 5),
    ]
    # each really is an idempotent homomorphism
    g = symmetric3()
    for images in endos:
        for a in range(6):
            assert images[images[a]] == images[a]
            for b in range(6):
                assert images[g.mul(a, b)] == g.mul(images[a], images[b])


def test_idempotent_endos_bound():
    with pytest.raises(BoundExceeded):
        idempotent_endos(quaternion8(), bound=4)
