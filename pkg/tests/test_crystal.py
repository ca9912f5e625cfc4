import pytest

from crystal import (
    a_highest_weight_vertices,
    classical_component_hw,
    crystal_dot,
    e_set,
    enumerate_highest_weight,
    flatten,
    highest_weight_vertices,
    hw_alphabet,
    in_hat,
    letter_crystal,
    letter_str,
    parse_letter,
    parse_vertex,
    tensor_crystal,
    theta,
    theta_by_rewriting,
    theta_row,
    weight_multiplicity,
    word_str,
)
from models import CrystalStructureError, InvalidInputError


def _coroot_pairing(family, n, wt, i):
    """⟨h_i, wt⟩ for the standard A and C simple coroots."""
    if i < n:
        return wt[i - 1] - wt[i]
    return wt[n - 1]


# ================================================================
# Letters
# ================================================================

def test_letter_parsing_and_rendering():
    assert parse_letter("3~") == -3
    assert parse_letter(" 2 ") == 2
    assert letter_str(-3) == "3~"
    assert letter_str(1) == "1"
    with pytest.raises(InvalidInputError):
        parse_letter("x")


def test_type_c_chain():
    lc = letter_crystal("C", 2)
    assert lc.f[1][1] == 2
    assert lc.f[2][2] == -2
    assert lc.f[1][-2] == -1
    assert lc.letters == (1, 2, -2, -1)


def test_type_a_has_a_path_graph():
    lc = letter_crystal("A", 3)
    arrows = [(src, dst) for c in lc.colors for src, dst in lc.f[c].items()]
    assert sorted(arrows) == [(1, 2), (2, 3)]


def test_dagger_color_zero_arrows():
    lc = letter_crystal("D", 3)
    assert lc.f[0] == {-2: 1, -1: 2}
    assert lc.highest_letter == -3
    assert lc.colors == (0, 1, 2)


def test_dagger_order_leaves_one_and_one_bar_incomparable():
    lc = letter_crystal("D", 3)
    assert not lc.geq(1, -1)
    assert not lc.geq(-1, 1)
    assert lc.geq(3, 2) and lc.geq(1, -2) and lc.geq(-2, -3)
    assert (1, -1) not in lc.row_words(2)


@pytest.mark.parametrize("family,n,s,count", [("A", 3, 2, 6), ("C", 2, 2, 10), ("D", 3, 2, 20), ("C", 3, 3, 56)])
def test_row_word_counts(family, n, s, count):
    assert len(letter_crystal(family, n).row_words(s)) == count


def test_letter_crystal_rejects_bad_types():
    with pytest.raises(InvalidInputError):
        letter_crystal("B", 2)
    with pytest.raises(InvalidInputError):
        letter_crystal("D", 2)


# ================================================================
# Tensor products
# ================================================================

def test_word_string_format():
    b = ((1, 1, 2), (-3, 1))
    assert word_str(b) == "1 1 2|3~ 1"
    assert parse_vertex("1 1 2|3~ 1") == b
    with pytest.raises(InvalidInputError):
        parse_vertex("1||2")


def test_signature_rule_on_two_letters():
    crystal = tensor_crystal("A", 2)
    # f̃ acts on the leftmost free '+'
    assert crystal.f(((1,), (1,)), 1) == ((2,), (1,))
    assert crystal.f(((2,), (1,)), 1) == ((2,), (2,))
    assert crystal.e(((2,), (1,)), 1) == ((1,), (1,))
    assert crystal.e(((1,), (2,)), 1) is None
    assert crystal.f(((1,), (2,)), 1) is None


def test_operators_reject_unknown_colors():
    with pytest.raises(InvalidInputError):
        tensor_crystal("C", 2).f(((1,),), 3)


def test_phi_minus_epsilon_is_the_coroot_pairing():
    crystal = tensor_crystal("C", 2)
    for b in crystal.vertices((2, 1)):
        wt = crystal.weight(b)
        for i in crystal.colors:
            assert crystal.phi(b, i) - crystal.epsilon(b, i) == _coroot_pairing("C", 2, wt, i)


def test_e_and_f_are_inverse():
    crystal = tensor_crystal("D", 3)
    for b in crystal.vertices((1, 2)):
        for i in crystal.colors:
            down = crystal.f(b, i)
            if down is not None:
                assert crystal.e(down, i) == b


def test_component_of_one_box_is_the_whole_crystal():
    crystal = tensor_crystal("C", 3)
    assert len(crystal.component(((1,),))) == 6


@pytest.mark.parametrize("family,n,s", [("A", 3, 3), ("C", 2, 3), ("C", 3, 2), ("D", 3, 3), ("D", 4, 2)])
def test_row_crystal_is_the_component_of_the_top_row(family, n, s):
    crystal = tensor_crystal(family, n)
    top = ((crystal.letters.highest_letter,) * s,)
    assert crystal.component(top) == {(w,) for w in crystal.letters.row_words(s)}



# ================================================================
# Highest weight vertices
# ================================================================

def test_highest_weight_vertices_of_two_boxes_type_c():
    found = enumerate_highest_weight(tensor_crystal("C", 2), (1, 1))
    assert set(found) == {((1,), (1,)), ((1,), (2,)), ((1,), (-1,))}


def test_highest_weight_vertices_with_weight():
    assert highest_weight_vertices((1, 1), (), "C", 2) == [((1,), (-1,))]
    assert highest_weight_vertices((3,), (3,), "C", 3) == [((1, 1, 1),)]
    assert len(highest_weight_vertices((1, 1, 1), (2, 1), "A", 3)) == 2


def test_highest_weight_vertices_rank_check():
    with pytest.raises(InvalidInputError):
        highest_weight_vertices((1, 1, 1), (1, 1, 1), "A", 2)
    with pytest.raises(InvalidInputError):
        highest_weight_vertices((), (), "A", 2)


def test_hw_alphabet_of_short_tensors():
    assert hw_alphabet(2, 3) == frozenset({1, 2, -1})
    assert hw_alphabet(1, 3) == frozenset({1})


@pytest.mark.parametrize("mu,n", [((1, 1, 1), 3), ((2, 1), 3), ((2, 2), 3), ((1, 1, 1), 4), ((2, 1, 1), 4), ((3, 2), 2)])
def test_highest_weight_vertices_stay_in_the_small_alphabet(mu, n):
    allowed = hw_alphabet(len(mu), n)
    found = enumerate_highest_weight(tensor_crystal("C", n), mu)
    assert found
    for b in found:
        assert set(flatten(b)) <= allowed, word_str(b)


@pytest.mark.parametrize("mu", [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 2), (2, 1, 1)])
def test_highest_weight_vertices_do_not_depend_on_rank(mu):
    m = max(len(mu), 2)
    found = [set(enumerate_highest_weight(tensor_crystal("C", n), mu)) for n in (m, m + 1, m + 2)]
    assert found[0] == found[1] == found[2]



def test_classical_component_hw():
    hw, path = classical_component_hw(((2,), (1,)), "A", 3)
    assert hw == ((1,), (1,))
    assert path == (1,)
    assert classical_component_hw(((1,), (-1,)), "C", 2) == (((1,), (-1,)), ())


def test_a_highest_weight_vertices_are_unbarred():
    found = a_highest_weight_vertices((2, 1), 3)
    assert found
    assert all(x > 0 for b in found for w in b for x in w)


def test_e_set_for_two_boxes():
    members, parts = e_set((1, 1), (), 4)
    assert len(members) == 1
    assert sum(len(v) for v in parts.values()) == 1


def test_e_set_has_the_size_of_f():
    for lam in [(3,), (2, 1), (1,)]:
        members, _ = e_set((2, 1), lam, 4)
        assert len(members) == len(highest_weight_vertices((2, 1), lam, "C", 4))


def test_e_set_needs_rank_above_length():
    with pytest.raises(InvalidInputError):
        e_set((1, 1, 1), (), 3)


def test_weight_multiplicity_type_c():
    # V(1,1) of C2 is five dimensional with a one dimensional zero weight space
    assert weight_multiplicity((1, 1), (0, 0), 2) == 1
    assert weight_multiplicity((2, 0), (0, 0), 2) == 2
    assert weight_multiplicity((1, 0), (1, 0), 2) == 1
    assert weight_multiplicity((), (), 2) == 1


# ================================================================
# θ
# ================================================================

def test_theta_on_highest_weight_rows():
    assert theta_row((-3, 1, 1), 3) == (1, 1, -3)
    assert theta_row((-3, -3), 3) == (-3, -3)


def test_theta_moves_unbarred_letters_left():
    assert theta_row((-1, 1), 3) == (2, -2)
    assert theta_row((-2, 2), 3) == (3, -3)
    assert theta_row((-2, -3, 2, 1), 3) == (3, 1, -3, -3)
    assert theta_row((-1, -2, 2, 1), 3) == (3, 2, -2, -3)


def test_theta_is_identity_on_unbarred_and_single_letters():
    assert theta_row((3, 2, 1), 3) == (3, 2, 1)
    assert theta_row((-2,), 3) == (-2,)
    b = ((2, 1), (-1,), (3,))
    assert theta(b, 3) == b


def test_theta_agrees_with_rewriting_rules():
    lc = letter_crystal("C", 3)
    for s in (1, 2, 3, 4):
        for row in lc.row_words(s):
            if in_hat(row, 3):
                assert theta_row(row, 3) == theta_by_rewriting(row, 3)


def test_rewriting_raises_when_it_does_not_end_in_a_row(monkeypatch):
    d_letters = tensor_crystal("D", 3).letters
    monkeypatch.setattr(d_letters, "is_row_word", lambda word: False)
    with pytest.raises(CrystalStructureError):
        theta_by_rewriting((2, 1), 3)


@pytest.mark.parametrize("shape,n", [((2,), 3), ((1, 1), 3), ((2, 1), 3), ((1, 2), 3), ((3,), 4)])
def test_theta_commutes_with_a_operators(shape, n):
    c_crystal, d_crystal = tensor_crystal("C", n), tensor_crystal("D", n)
    for b in c_crystal.vertices(shape):
        if not all(in_hat(row, n) for row in b):
            continue
        image = theta(b, n)
        for i in c_crystal.a_colors:
            for c_op, d_op in ((c_crystal.f, d_crystal.f), (c_crystal.e, d_crystal.e)):
                moved = c_op(b, i)
                if moved is None:
                    assert d_op(image, i) is None, (word_str(b), i)
                else:
                    assert theta(moved, n) == d_op(image, i), (word_str(b), i)


def test_theta_refuses_rows_outside_the_subcrystal():

    assert not in_hat((-3, 3), 3)
    with pytest.raises(CrystalStructureError):
        theta_row((-3, 3), 3)
    with pytest.raises(CrystalStructureError):
        theta_by_rewriting((-3, 3), 3)


# ================================================================
# DOT export
# ================================================================

def test_dot_export_counts():
    dot = crystal_dot("C", 2, (1, 1))
    vertex_lines = [l for l in dot.splitlines() if l.strip().endswith('";') and "->" not in l]
    assert len(vertex_lines) == 16
    assert dot.startswith('digraph "B_1,1^C2" {')
    assert '"1|1" -> "2|1" [label="1"];' in dot


def test_dot_export_restricted_colors():
    dot = crystal_dot("A", 3, (1,), colors=[2])
    assert '"2" -> "3" [label="2"];' in dot
    assert "label=\"1\"" not in dot
    with pytest.raises(InvalidInputError):
        crystal_dot("A", 3, (1,), colors=[5])
