import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleybott.bott import cohomology
from cayleybott.collection import (
    BundleNameError,
    BundleRef,
    bundle_name,
    ext_groups,
    format_decomposition,
    hom_bundle,
    is_exceptional,
    named,
    parse_bundle,
    read_collection,
    schubert_rank,
    theorem2_collection,
    verify_collection,
)
from cayleybott.parabolic import UnsupportedParabolicError, parse_space
from cayleybott.reptheory import Decomposition

THEOREM2 = (
    "O S O(1) S(1) O(2) S(2) O(3) S(3) O(4) S2(3) S(4) S3(3) O(5) S2(4) S(5) S3(4) "
    "O(6) S2(5) S(6) O(7) S(7) O(8) S(8) O(9) S(9) O(10) O(11)"
).split()


def _bundles(names):
    return [parse_bundle(n) for n in names]


@pytest.mark.parametrize(
    "text, weight",
    [
        ("O", (0, 0, 0, 0, 0, 0)),
        ("O(-12)", (-12, 0, 0, 0, 0, 0)),
        ("S", (0, 0, 0, 0, 0, 1)),
        ("S2(3)", (3, 0, 0, 0, 0, 2)),
        ("S3(−3)", (-3, 0, 0, 0, 0, 3)),
        ("T", (0, 1, 0, 0, 0, 0)),
        ("Om", (-2, 0, 1, 0, 0, 0)),
        ("Om(2)", (0, 0, 1, 0, 0, 0)),
        ("E[-2,0,1,0,0,0]", (-2, 0, 1, 0, 0, 0)),
        ("E[0,0,0,0,1,0](-1)", (-1, 0, 0, 0, 1, 0)),
        ("E_{ω5+2ω6}(-2)", (-2, 0, 0, 0, 1, 2)),
        ("E_{w2+w3-2w1}", (-2, 1, 1, 0, 0, 0)),
    ],
)
def test_parse_bundle(text, weight):
    assert parse_bundle(text).weight == weight


@pytest.mark.parametrize("text", ["", "Q", "S(", "E[1,2]", "E[0,-1,0,0,0,0]", "E_{w9}", "S4(1)"])
def test_parse_bundle_errors(text):
    with pytest.raises(BundleNameError):
        parse_bundle(text)


def test_named_bundles_only_on_the_cayley_plane():
    P = parse_space("A3/P1")
    assert parse_bundle("O(2)", P).weight == (2, 0, 0)
    with pytest.raises(BundleNameError):
        parse_bundle("S", P)


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.integers(-15, 15), *[st.integers(0, 3) for _ in range(5)]))
def test_printed_names_parse_back(w):
    P = parse_space("E6/P1")
    assert parse_bundle(bundle_name(P, w), P).weight == w
    assert parse_bundle(bundle_name(P, w, ascii_only=True), P).weight == w


def test_bundle_names(P):
    assert bundle_name(P, (0,) * 6) == "O"
    assert bundle_name(P, (-13, 0, 0, 0, 0, 1)) == "S(−13)"
    assert bundle_name(P, (-13, 0, 0, 0, 0, 1), ascii_only=True) == "S(-13)"
    assert bundle_name(P, (-2, 0, 0, 0, 1, 2)) == "E_{ω5+2ω6}(−2)"
    assert bundle_name(P, (-2, 0, 1, 0, 0, 0)) == "E_{ω3}(−2)"


def test_hom_decompositions(P):
    S, S2 = named("S"), named("S2")
    assert hom_bundle(S, S) == Decomposition({(-1, 0, 0, 0, 1, 0): 1, (0,) * 6: 1, (-1, 0, 0, 0, 0, 2): 1})
    assert format_decomposition(P, hom_bundle(S, S)) == "E_{ω5}(−1) ⊕ S2(−1) ⊕ O"
    end_s2 = hom_bundle(S2, S2)
    assert end_s2 == Decomposition(
        {
            (-2, 0, 0, 0, 0, 4): 1,
            (-2, 0, 0, 0, 1, 2): 1,
            (-2, 0, 0, 0, 2, 0): 1,
            (-1, 0, 0, 0, 0, 2): 1,
            (-1, 0, 0, 0, 1, 0): 1,
            (0,) * 6: 1,
        }
    )
    assert hom_bundle(named("O"), named("O")) == Decomposition({(0,) * 6: 1})


def test_ext_examples():
    assert ext_groups(named("S"), named("S")).dimensions() == {0: 1}
    assert ext_groups(named("O"), named("S", -13)).dimensions() == {16: 27}
    assert ext_groups(named("O", 12), named("O")).dimensions() == {16: 1}


@pytest.mark.parametrize("name", ["O", "S", "S2", "S3", "O(7)", "S3(-4)"])
def test_exceptional_bundles(name):
    ok, witnesses = is_exceptional(parse_bundle(name))
    assert ok and witnesses == []


def test_wedge2_s_is_not_exceptional():
    ok, witnesses = is_exceptional(parse_bundle("E[0,0,0,0,1,0]"))
    assert not ok
    assert [(w.summand, w.degree, w.dim) for w in witnesses] == [((-2, 1, 1, 0, 0, 0), 1, 78)]


def test_theorem2_collection_data():
    c = theorem2_collection()
    assert [b.name for b in c] == THEOREM2
    assert len(c) == 27
    assert c[9].name == "S2(3)" and c[0].name == "O"


def test_theorem2_is_strongly_exceptional():
    rep = verify_collection(theorem2_collection(), strong=True)
    assert rep.passed and rep.witnesses == []
    assert (rep.members, rep.pair_count, rep.mode) == (27, 729, "strong")


def test_line_bundle_sequence():
    assert verify_collection(_bundles([f"O({k})" for k in range(12)]), strong=True).passed


def test_o_and_o12():
    rep = verify_collection(_bundles(["O", "O(12)"]), strong=False)
    assert rep.verdict == "FAIL"
    (w,) = rep.witnesses
    assert (w.i, w.j, w.degree, w.dim, w.direction) == (2, 1, 16, 1, "backward")
    assert w.summand == (-12, 0, 0, 0, 0, 0)


def _swap(names, a, b):
    out = list(names)
    i, j = out.index(a), out.index(b)
    out[i], out[j] = out[j], out[i]
    return out


@pytest.mark.parametrize(
    "names",
    [
        _swap(THEOREM2, "S3(3)", "S(9)"),
        _swap(THEOREM2, "O(2)", "S2(3)"),
        THEOREM2[:10] + ["S3(4)"] + [n for n in THEOREM2[10:] if n != "S3(4)"],
    ],
    ids=["S3-after-its-window", "S2-before-O", "S3-too-early"],
)
def test_mutated_orderings_fail(names):
    rep = verify_collection(_bundles(names), strong=True)
    assert rep.verdict == "FAIL" and rep.witnesses


def test_witnesses_are_sorted_and_exhaustive():
    rep = verify_collection(_bundles(["O(12)", "S", "O"]), strong=True)
    keys = [(w.i, w.j, w.degree, w.summand) for w in rep.witnesses]
    assert keys == sorted(keys)
    assert {(w.i, w.j) for w in rep.witnesses} == {(1, 3), (2, 1), (3, 1), (3, 2)}


def test_reversal_mirrors_every_witness():
    # a witness at (i, j) is a nonzero Ext between the same two bundles, which
    # sits at the mirrored pair of the reversed list with the opposite direction
    bundles = _bundles(["O", "S(2)", "O(12)", "S3(-1)"])
    n = len(bundles)
    rev = bundles[::-1]
    for w in verify_collection(bundles, strong=True).witnesses:
        i, j = n + 1 - w.i, n + 1 - w.j
        assert ext_groups(rev[i - 1], rev[j - 1]).dimensions() == ext_groups(bundles[w.i - 1], bundles[w.j - 1]).dimensions()
        swapped = {"forward": "backward", "backward": "forward", "self": "self"}[w.direction]
        assert swapped == ("self" if i == j else "forward" if i < j else "backward")


def test_strong_closure_on_theorem2(P):
    c = theorem2_collection()
    for i, a in enumerate(c):
        for b in c[i:]:
            for w, _ in hom_bundle(a, b):
                res = cohomology(P, w)
                assert not res.nonzero or res.degree == 0


def test_verify_rejects_empty():
    with pytest.raises(ValueError):
        verify_collection([], strong=True)


def test_read_collection(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# header\nO\n\nS(1)  # twisted\nE[0,0,0,0,1,0]\n", encoding="utf-8")
    assert [b.weight for b in read_collection(f)] == [(0,) * 6, (1, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0)]
    f.write_text("O\nS(\n", encoding="utf-8")
    with pytest.raises(BundleNameError, match="line 2"):
        read_collection(f)


def test_schubert_rank():
    assert schubert_rank(parse_space("E6/P1")) == 27
    for n in range(1, 7):
        assert schubert_rank(parse_space(f"A{n}/P1")) == n + 1
    assert schubert_rank(parse_space("D5/P1")) == 10
    # Grassmannian G(2, 5)
    assert schubert_rank(parse_space("A4/P2")) == 10
    with pytest.raises(UnsupportedParabolicError):
        schubert_rank(parse_space("E6/P1,6"))


def test_bundle_ref_is_a_value():
    assert BundleRef("S", (0, 0, 0, 0, 0, 1)) == parse_bundle("S")
