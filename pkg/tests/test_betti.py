import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverideal import (
    BettiTable,
    Graph,
    IdealError,
    MonomialIdeal,
    betti_table,
    betti_table_hochster,
    componentwise_linear_witness,
    cover_ideal,
    from_strings,
    has_linear_resolution,
    is_componentwise_linear,
    linear_resolution_witness,
    minimalize,
    power,
    regularity,
    symbolic_power_cover,
)
from coverideal.complex import ComplexError
from coverideal.ideal import alexander_dual
from coverideal.verify import load_instance

from test_complex import RP2

R3 = ("x1", "x2", "x3")


def test_path_ideal_table():
    t = betti_table(from_strings(R3, ["x1*x2", "x2*x3"]))
    assert t.entries == {(0, 2): 2, (1, 3): 1}
    assert t.render() == "       0 1\ntotal: 2 1\n    2: 2 1\n"
    assert t.projective_dimension == 1 and t.regularity() == 2


def test_square_of_maximal_ideal_is_linear():
    m2 = power(from_strings(R3, ["x1", "x2", "x3"]), 2)
    t = betti_table(m2, 3)
    assert t.entries == {(0, 2): 6, (1, 3): 8, (2, 4): 3}
    assert has_linear_resolution(m2)


def test_variables_have_regularity_one():
    assert regularity(from_strings(R3, ["x1", "x2"])) == 1


def test_triangle_with_pendant_pairs():
    g = load_instance("triangle_pendant_pairs")
    for p in (2, 3):
        t = betti_table(cover_ideal(g), p)
        assert t.entries == {(0, 3): 1, (0, 4): 3, (1, 5): 3}
        assert regularity(symbolic_power_cover(g, 2), p) == 9


def rp2_ideal():
    ring = tuple(f"v{i}" for i in range(1, 7))
    complements = [sum(1 << (v - 1) for v in range(1, 7) if v not in f) for f in RP2]
    return alexander_dual(MonomialIdeal.from_masks(ring, complements))


def test_characteristic_sensitive_ideal():
    ideal = rp2_ideal()
    two, three = betti_table(ideal, 2), betti_table(ideal, 3)
    assert two != three
    assert betti_table_hochster(ideal, 2) == two
    assert betti_table_hochster(ideal, 3) == three
    # top homology over F_2 sits at beta_{2,6}; otherwise the resolution is linear
    assert regularity(ideal, 2) == 4 and regularity(ideal, 3) == 3
    assert has_linear_resolution(ideal, 3) and not has_linear_resolution(ideal, 2)


@st.composite
def small_ideals(draw, top=2):
    n = draw(st.integers(1, 4))
    gens = draw(st.lists(st.tuples(*[st.integers(0, top)] * n), min_size=1, max_size=5))
    return minimalize([f"y{i}" for i in range(n)], gens)


@given(small_ideals(), st.sampled_from([2, 3]))
def test_koszul_matches_hochster_after_polarization(ideal, p):
    assert betti_table(ideal, p) == betti_table(ideal, p, method="hochster")


@settings(max_examples=15)
@given(small_ideals(top=1))
def test_process_pool_matches_serial(ideal):
    assert betti_table(ideal, n_jobs=2) == betti_table(ideal)


def test_process_pool_on_a_large_lattice():
    g = load_instance("square_two_triangles")
    ideal = symbolic_power_cover(g, 2)
    assert betti_table(ideal, n_jobs=2) == betti_table(ideal)


def test_linear_resolution_witness():
    ci = from_strings(R3, ["x1*x2", "x3^2"])
    assert linear_resolution_witness(ci) == (1, 4)
    mixed = from_strings(R3, ["x1", "x2*x3"])
    assert linear_resolution_witness(mixed) == (0, 2)
    assert is_componentwise_linear(mixed)


def test_componentwise_linear_examples(c4):
    assert componentwise_linear_witness(cover_ideal(c4)) == 2
    tree = Graph.from_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("b", "d")])
    assert is_componentwise_linear(cover_ideal(tree))


def test_table_json_and_edge_cases():
    t = BettiTable({(0, 2): 2, (1, 3): 1, (2, 5): 0}, 3)
    assert (2, 5) not in t.entries
    assert BettiTable.from_json(t.to_json()) == t
    assert betti_table(MonomialIdeal.zero(R3)).entries == {}
    assert betti_table_hochster(MonomialIdeal.unit(R3)).entries == {(0, 0): 1}
    with pytest.raises(IdealError):
        regularity(MonomialIdeal.zero(R3))
    with pytest.raises(IdealError):
        betti_table_hochster(from_strings(R3, ["x1^2"]))
    with pytest.raises(ComplexError):
        betti_table(from_strings(R3, ["x1"]), 6)
    with pytest.raises(ValueError):
        betti_table(from_strings(R3, ["x1"]), method="nope")
