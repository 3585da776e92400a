from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hakenlab.coverhomology import (
    GaloisModule,
    LinkRecord,
    SeifertMatrix,
    cover_module,
    cp_cohomology_dims,
    cyclic_cover_homology,
    double_cover_homology,
    fox_order,
    redei_check,
    record_from_json,
    smith,
    structure_check,
)
from hakenlab.coverhomology.cover import MAX_PRIME, cyclic_cover_presentation
from hakenlab.errors import InfiniteModule, MissingData, ParseError, WrongComponentCount

from test_alexander import FIGURE8, TREFOIL, block_sum, seifert_matrices

# orders from Fox's formula, groups from the literature on small covers
GROUPS = {
    ("trefoil", 2): "Z/3",
    ("trefoil", 3): "Z/2 ⊕ Z/2",
    ("trefoil", 5): "0",
    ("trefoil", 7): "0",
    ("figure-8", 2): "Z/5",
    ("figure-8", 3): "Z/4 ⊕ Z/4",
    ("figure-8", 5): "Z/11 ⊕ Z/11",
    ("figure-8", 7): "Z/29 ⊕ Z/29",
    ("unknot", 3): "0",
    ("hopf", 2): "Z/2",
    ("T(2,4)", 2): "Z/4",
    ("T(2,6)", 2): "Z/6",
    ("whitehead", 2): "Z/8",
    ("split-unlink", 2): "Z",
}


@pytest.mark.parametrize("name,p", sorted(GROUPS))
def test_cover_groups(corpus, name, p):
    assert str(cover_module(corpus[name], p).group) == GROUPS[name, p]


def test_presentation_shape():
    M, Z = cyclic_cover_presentation(TREFOIL, 3)
    assert len(M) == len(Z) == 6
    assert all(sum(r) == 1 for r in Z)


@given(seifert_matrices(), st.sampled_from([2, 3, 5]))
def test_block_presentation_order_is_fox(V, p):
    # cyclic_cover_homology raises PresentationMismatch on disagreement
    W = cyclic_cover_homology(V, p)
    assert W.group.order == fox_order(V, p)


@given(seifert_matrices())
def test_two_presentations_of_double_cover_agree(V):
    sym = [[a + b for a, b in zip(r, c)] for r, c in zip(V.rows(), V.transpose())]
    assert cyclic_cover_homology(V, 2).group == smith(sym)


@given(seifert_matrices(), st.sampled_from([2, 3, 5, 7]))
def test_module_axioms(V, p):
    W = cyclic_cover_homology(V, p)
    assert W.descends()
    assert W.order_divides_p()
    assert W.norm_is_zero()
    # a knot cover has no p-torsion and trivial Tate cohomology
    assert W.group.primary_part(p) == ()
    assert cp_cohomology_dims(W) == (0, 0, 0)


def test_connected_sum_is_direct_sum():
    V = block_sum(TREFOIL, FIGURE8)
    assert str(cyclic_cover_homology(V, 2).group) == "Z/15"
    assert str(cyclic_cover_homology(V, 3).group) == "Z/2 ⊕ Z/2 ⊕ Z/4 ⊕ Z/4"


def test_prime_range():
    with pytest.raises(ValueError):
        cyclic_cover_homology(TREFOIL, 4)
    with pytest.raises(ValueError):
        cyclic_cover_homology(TREFOIL, 17)
    assert MAX_PRIME == 13
    assert cyclic_cover_homology(TREFOIL, 13).group.order == fox_order(TREFOIL, 13)


def test_hopf_cohomology(corpus):
    W = cover_module(corpus["hopf"], 2)
    assert cp_cohomology_dims(W) == (1, 1, 1)


def test_infinite_module_has_no_finite_cohomology(corpus):
    with pytest.raises(InfiniteModule):
        cp_cohomology_dims(cover_module(corpus["split-unlink"], 2))


def test_cohomology_of_trivial_action():
    # Z/2 with trivial C_2 action: H^1 = Hom(C_2, Z/2), H^2 = Z/2
    W = GaloisModule([[2]], [[1]], 2, kappa=2)
    assert cp_cohomology_dims(W) == (1, 1, 1)
    # Z/3 with trivial C_3 action
    W = GaloisModule([[3]], [[1]], 3, kappa=2)
    assert cp_cohomology_dims(W) == (1, 1, 1)


def test_cohomology_of_free_module():
    # Z[C_2] / 3 is induced, so all Tate groups vanish
    W = GaloisModule([[3, 0], [0, 3]], [[0, 1], [1, 0]], 2)
    assert cp_cohomology_dims(W)[1:] == (0, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_structure_on_corpus(corpus, p):
    for rec in corpus.values():
        try:
            report = structure_check(rec, p)
        except MissingData:
            assert not rec.is_knot and p != 2
            continue
        assert report.status in ("PASS", "SKIP"), (rec.name, report.reasons)
        if report.status == "SKIP":
            assert not report.group.is_finite
        else:
            assert report.h == (rec.kappa - 1,) * 3
            assert report.norm_zero


def test_structure_fail_is_reported():
    # two-component record with kappa 1 contradicts h = kappa - 1
    rec = LinkRecord("hopf-bad-kappa", 2, ((0, 1), (1, 0)), goeritz=((2,),), kappa=1)
    report = structure_check(rec, 2)
    assert report.status == "FAIL"
    assert any("kappa" in r for r in report.reasons)


def test_knots_have_odd_double_covers(corpus):
    for rec in corpus.values():
        if rec.is_knot:
            assert double_cover_homology(rec).order % 2 == 1


REDEI = {
    "hopf": "ConsistentA",
    "T(2,4)": "ConsistentB",
    "T(2,6)": "ConsistentA",
    "whitehead": "ConsistentB",
    "split-unlink": "ConsistentB",
}


@pytest.mark.parametrize("name", sorted(REDEI))
def test_redei(corpus, name):
    assert redei_check(corpus[name]).verdict == REDEI[name]


def test_redei_violation_and_component_count(corpus):
    rec = LinkRecord("bad", 2, ((0, 1), (1, 0)), goeritz=((3,),))
    assert redei_check(rec).verdict == "VIOLATION"
    with pytest.raises(WrongComponentCount):
        redei_check(corpus["trefoil"])


def test_record_validation():
    with pytest.raises(MissingData):
        LinkRecord("x", 1, ((0,),))
    with pytest.raises(ValueError):
        LinkRecord("x", 2, ((0, 1), (2, 0)), goeritz=((2,),))
    with pytest.raises(ValueError):
        LinkRecord("x", 2, ((0, 1), (1, 0)), seifert=TREFOIL)
    with pytest.raises(ValueError):
        LinkRecord("x", 2, ((0, 3), (3, 0)), goeritz=((2,),), P=1)
    with pytest.raises(ParseError):
        record_from_json({"name": "x", "components": 1})
    with pytest.raises(ParseError):
        record_from_json({"name": "x", "components": 1, "linking": [[0]], "goeritz": [["a"]]})


def test_record_round_trip(corpus):
    for rec in corpus.values():
        assert record_from_json(rec.to_json()) == rec


def test_seifert_record(corpus):
    assert corpus["trefoil"].seifert == SeifertMatrix(((-1, 1), (0, -1)))
