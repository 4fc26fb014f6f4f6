"""Construction, element orders, exponents, and abelian invariants."""

import numpy as np
import pytest

from grouptotient import (
    AbelianType,
    Group,
    GroupSpec,
    IndexOutOfRangeError,
    InvalidParameterError,
    NotAbelianError,
    OrderOverflowError,
    construct,
    direct_product,
    parse_spec,
    validate_table,
)
from naive_oracles import naive_orders

ALL_FAMILY_SPECS = [
    "cyclic:1",
    "cyclic:6",
    "cyclic:12",
    "abelian:2,2",
    "abelian:2,4",
    "abelian:2,4,8",
    "abelian:3,9",
    "dihedral:2",
    "dihedral:3",
    "dihedral:6",
    "dihedral:8",
    "quaternion:8",
    "quaternion:16",
    "semidihedral:16",
    "semidihedral:32",
    "modular:2,4",
    "modular:3,3",
    "modular:5,3",
    "heisenberg:3",
    "sdp:7,3,2",
    "sdp:5,2,4",
    "product:(cyclic:4)x(cyclic:9)",
    "product:(dihedral:3)x(cyclic:5)",
]


@pytest.mark.parametrize("spec", ALL_FAMILY_SPECS)
def test_constructors_satisfy_group_axioms(spec):
    G = construct(spec)
    validate_table(np.asarray(G.table, dtype=np.int64))


def test_cyclic_table_is_addition_mod_n():
    G = construct("cyclic:6")
    expected = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    assert G.table.tolist() == expected


def test_dihedral3_order_count():
    G = construct("dihedral:3")
    assert G.order == 6
    assert not G.is_abelian()
    assert naive_orders(G.table.tolist()).count(2) == 3


def test_quaternion8_unique_involution():
    G = construct("quaternion:8")
    orders = naive_orders(G.table.tolist())
    assert orders.count(2) == 1
    non_central = [a for a in range(1, 8) if orders[a] == 4]
    assert len(non_central) == 6
    assert all(G.element_order(a) == 4 for a in non_central)


def test_pq_group_is_nonabelian_order_21():
    G = construct("sdp:7,3,2")
    assert G.order == 21
    assert not G.is_abelian()


def test_element_order_examples():
    Z12 = construct("cyclic:12")
    assert Z12.element_order(0) == 1
    assert Z12.element_order(4) == 3
    D6 = construct("dihedral:3")
    assert D6.element_order(0) == 1


def test_element_order_matches_naive_oracle():
    for spec in ("dihedral:6", "quaternion:16", "heisenberg:3", "sdp:7,3,2"):
        G = construct(spec)
        assert G.element_orders().tolist() == naive_orders(G.table.tolist())


def test_element_order_divides_group_order():
    for spec in ALL_FAMILY_SPECS:
        G = construct(spec)
        assert all(G.order % int(o) == 0 for o in G.element_orders())


def test_element_order_index_error():
    G = construct("cyclic:6")
    with pytest.raises(IndexOutOfRangeError):
        G.element_order(6)
    with pytest.raises(IndexOutOfRangeError):
        G.element_order(-1)


def test_exponent_examples():
    assert construct("cyclic:15").exponent() == 15
    assert construct("abelian:2,2").exponent() == 2
    D6 = construct("dihedral:3")
    assert D6.exponent() == 6
    assert 6 not in D6.element_orders()


def test_is_cyclic_examples():
    assert construct("cyclic:6").is_cyclic()
    assert not construct("abelian:2,2").is_cyclic()
    # exponent equals the order here, yet no element of order 6 exists
    assert not construct("dihedral:3").is_cyclic()


def test_is_abelian_examples():
    assert construct("cyclic:8").is_abelian()
    assert not construct("dihedral:4").is_abelian()
    H = construct("heisenberg:3")
    assert not H.is_abelian()
    # the two generating translations do not commute
    x, y = 9, 3  # (a,b,c) = (1,0,0) and (0,1,0) at p = 3
    assert H.mult(x, y) != H.mult(y, x)


def test_abelian_invariants_examples():
    assert construct("cyclic:12").abelian_invariants().parts == (3, 4)
    K = construct("abelian:2,2")
    t = K.abelian_invariants()
    assert t.parts == (2, 2)
    assert t.rank(2) == 2
    assert construct("abelian:2,4,8").abelian_invariants().parts == (2, 4, 8)


@pytest.mark.parametrize(
    "parts",
    [(2,), (4,), (2, 2), (2, 4), (8, 8), (2, 2, 2, 4), (3, 3), (9, 27), (2, 3), (4, 3, 5), (2, 2, 9)],
)
def test_abelian_invariants_round_trip(parts):
    spec = GroupSpec("abelian", tuple(parts))
    G = construct(spec)
    assert G.abelian_invariants().parts == tuple(sorted(parts))


def test_abelian_invariants_rejects_nonabelian():
    with pytest.raises(NotAbelianError):
        construct("dihedral:3").abelian_invariants()


def test_direct_product_identity_factor():
    G = construct("dihedral:3")
    P = direct_product([construct("cyclic:1"), G])
    assert P.order == G.order
    assert P.table.tolist() == G.table.tolist()


def test_direct_product_klein():
    P = direct_product([construct("cyclic:2"), construct("cyclic:2")])
    assert P.order == 4
    assert P.exponent() == 2


def test_direct_product_coprime_cyclic_is_cyclic():
    P = direct_product([construct("cyclic:4"), construct("cyclic:9")])
    assert P.order == 36
    assert P.is_cyclic()
    assert P.exponent() == 36


def test_direct_product_empty_rejected():
    with pytest.raises(InvalidParameterError):
        direct_product([])


def test_order_cap_enforced():
    with pytest.raises(OrderOverflowError):
        construct("cyclic:100", max_order=99)
    with pytest.raises(OrderOverflowError):
        direct_product([construct("cyclic:50"), construct("cyclic:50")], max_order=100)


@pytest.mark.parametrize(
    "bad",
    [
        "dihedral:1",
        "quaternion:4",
        "quaternion:12",
        "semidihedral:8",
        "modular:2,3",  # coincides with the order-8 dihedral group: excluded
        "modular:4,3",
        "heisenberg:2",
        "heisenberg:4",
        "sdp:6,2,5",  # gcd(n, p) != 1
        "sdp:7,3,3",  # t**p != 1 mod n
        "sdp:7,3,1",  # trivial action
        "abelian:6",  # 6 is not a prime power
        "cyclic:0",
    ],
)
def test_invalid_parameters_rejected(bad):
    with pytest.raises(InvalidParameterError):
        construct(bad)


def test_spec_string_round_trip():
    for text in ALL_FAMILY_SPECS:
        spec = parse_spec(text)
        assert parse_spec(str(spec)) == spec
        assert construct(spec).order == spec.order()


def test_spec_string_canonicalizes_abelian_parts():
    assert str(parse_spec("abelian:4,2,2")) == "abelian:2,2,4"


def test_nested_product_spec():
    spec = parse_spec("product:(product:(cyclic:2)x(cyclic:3))x(cyclic:5)")
    assert construct(spec).order == 30


@pytest.mark.parametrize("bad", ["nosuch:3", "cyclic", "cyclic:x", "product:(cyclic:2", "product:"])
def test_malformed_specs_rejected(bad):
    with pytest.raises(InvalidParameterError):
        parse_spec(bad)


def test_order_count_divisible_by_integer_totient():
    from grouptotient import euler_phi

    for spec in ("cyclic:24", "dihedral:9", "quaternion:16", "sdp:7,3,2", "heisenberg:3"):
        G = construct(spec)
        orders = G.element_orders().tolist()
        for d in set(orders):
            assert orders.count(d) % euler_phi(d) == 0


def test_dihedral_coincides_with_inverting_semidirect_action():
    """For odd n the dihedral group is the semidirect product of its
    rotation subgroup by the inverting involution, with identical
    canonical indexing."""
    for n in (3, 9, 15):
        A = construct(f"sdp:{n},2,{n - 1}")
        B = construct(f"dihedral:{n}")
        assert A.table.tolist() == B.table.tolist()


def test_group_rejects_non_square_table():
    with pytest.raises(InvalidParameterError):
        Group(np.zeros((2, 3), dtype=np.int64))


def test_abelian_type_validation():
    with pytest.raises(InvalidParameterError):
        AbelianType((6,))
    t = AbelianType((9, 2, 3))
    assert t.parts == (2, 3, 9)
    assert t.order() == 54
    assert t.rank(3) == 2
    assert not t.is_cyclic()
    assert AbelianType((2, 3)).is_cyclic()


def test_power_including_negative_exponents():
    G = construct("dihedral:6")
    for a in range(G.order):
        o = G.element_order(a)
        assert G.power(a, 0) == 0
        assert G.power(a, o) == 0
        assert G.power(a, 5) == G.power(a, 5 % o) if o <= 5 else True
        assert G.mult(G.power(a, -1), a) == 0
        assert G.power(a, -3) == G.power(G.inverse(a), 3)
