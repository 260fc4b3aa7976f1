"""The sixty-class catalogue, membership, HS-closure, the classifier,
the closure-rule audit, and AP verdicts."""

import pytest

from resichain import (
    TRIVIAL,
    CanonicalClass,
    ChainClass,
    HasAP,
    NoAP,
    NotHSClosed,
    OMEGA,
    Refuted,
    all_sixty,
    ap_verdict,
    canonical_signature,
    class_members,
    class_signatures,
    classify,
    closure_rule_violations,
    decompose,
    enumerate_chains,
    hs_closure,
    is_embedding,
    iso_equal,
    member_of,
    parse_class,
    sig_in_class,
)
from resichain.constructors import com, go, nested_sum


def sig_keys(chains):
    return {canonical_signature(c) for c in chains}


# --- the catalogue -------------------------------------------------------


def test_the_catalogue_has_sixty_distinct_entries():
    classes = all_sixty()
    assert len(classes) == 60
    assert len(set(classes)) == 60
    by_family = {}
    for cls in classes:
        by_family[cls.family] = by_family.get(cls.family, 0) + 1
    assert by_family == {"e": 3, "fin": 18, "inf": 18, "fin+e": 15, "inf+e": 6}


def test_class_text_round_trips_through_parse():
    for cls in all_sixty():
        assert parse_class(cls.text()) == cls


def test_parse_rejects_malformed_class_text():
    for text in (
        "fin:1,0",
        "fin:1,1,0+e:1",
        "e:2",
        "inf:1,0,0+e:1",
        "blob:0",
        "fin:0,0,0+e:0",
    ):
        with pytest.raises(ValueError):
            parse_class(text)


def test_class_parameters_are_validated():
    with pytest.raises(ValueError):
        CanonicalClass("fin", m=OMEGA, n=0, p=0)  # p below m
    with pytest.raises(ValueError):
        CanonicalClass("e", m=0, p=0)  # stray parameter
    with pytest.raises(ValueError):
        CanonicalClass("fin+e", m=0, n=0, p=0)  # union tail needs p >= 1
    with pytest.raises(ValueError):
        CanonicalClass("fin", m=2, n=0, p=2)  # parameters live in {0,1,w}


def test_finite_classes_know_their_largest_member():
    cls = parse_class("fin:1,1,1")
    assert cls.is_finite and cls.max_member_size == 6
    assert not parse_class("inf:0,0,0").is_finite
    assert parse_class("e:1").max_member_size == 2


# --- membership ----------------------------------------------------------


def test_membership_frozen_examples():
    stacked_tail, _ = nested_sum([com(1, 0), go(2)])
    assert member_of(stacked_tail, parse_class("fin:1,w,0"))
    double, _ = nested_sum([com(0, 0), com(0, 0)])
    assert not member_of(double, parse_class("fin:w,w,w"))
    tower, _ = nested_sum([com(0, 0), com(0, 0), go(1)])
    assert member_of(tower, parse_class("inf:0,1,0"))


def test_sig_in_class_matches_member_of_on_small_chains():
    pool = []
    for n in range(1, 6):
        pool.extend(enumerate_chains(n, ("commutative", "idempotent")))
    for cls in all_sixty():
        for chain in pool:
            assert sig_in_class(decompose(chain), cls) == member_of(chain, cls)


def test_class_members_agree_with_a_direct_membership_scan():
    for text in ("fin:1,1,1", "e:w", "fin:0,0,1+e:1", "inf:0,1,0"):
        cls = parse_class(text)
        listed = sig_keys(class_members(cls, 6))
        scanned = set()
        for n in range(1, 7):
            for chain in enumerate_chains(n, ("commutative", "idempotent")):
                if member_of(chain, cls):
                    scanned.add(canonical_signature(chain))
        assert listed == scanned


# --- HS-closure ----------------------------------------------------------


def decomposed(chains):
    return frozenset(decompose(c) for c in chains)


def test_hs_closure_frozen_examples():
    got = hs_closure([com(1, 1)])
    want = [TRIVIAL, go(1), com(0, 0), com(1, 0), com(0, 1), com(1, 1)]
    assert got.signatures() == decomposed(want)
    assert hs_closure([go(2)]).signatures() == decomposed([TRIVIAL, go(1), go(2)])
    assert hs_closure([TRIVIAL]).signatures() == decomposed([TRIVIAL])


def test_hs_closure_is_idempotent():
    first = hs_closure([com(1, 1), go(2)])
    again = hs_closure(first.members)
    assert again.signatures() == first.signatures()
    assert first.is_hs_closed


def test_every_canonical_class_is_hs_closed_at_bounded_scale():
    for cls in all_sixty():
        assert ChainClass.from_chains(class_members(cls, 8)).is_hs_closed


def test_the_sixty_signature_sets_at_size_nine_are_distinct():
    sigs = [frozenset(class_signatures(cls, 9)) for cls in all_sixty()]
    assert len(set(sigs)) == 60


def test_smallest_fin_class_has_exactly_two_signatures():
    got = {
        (s.pairs, s.p) for s in class_signatures(parse_class("fin:0,0,0"), 9)
    }
    assert got == {((), 0), (((0, 0),), 0)}


# --- the classifier ------------------------------------------------------


def test_classifier_fixed_points():
    assert classify(hs_closure([com(0, 0)])) == parse_class("fin:0,0,0")
    assert classify(hs_closure([com(1, 1)])) == parse_class("fin:1,0,1+e:1")
    assert classify(hs_closure([go(2)])) is None


def test_classifier_accepts_every_finite_canonical_class():
    for cls in all_sixty():
        if not cls.is_finite:
            continue
        K = ChainClass.from_chains(class_members(cls, cls.max_member_size))
        assert classify(K) == cls


def test_classifier_requires_a_closed_input():
    with pytest.raises(NotHSClosed):
        classify(ChainClass.from_chains([com(1, 1)]))
    with pytest.raises(NotHSClosed):
        ap_verdict(ChainClass.from_chains([go(2), TRIVIAL]))


# --- closure-rule audit --------------------------------------------------


def test_rule_audit_flags_the_capped_upper_side():
    violations = closure_rule_violations(hs_closure([com(0, 2)]))
    hits = [v for v in violations if v.rule == "iv"]
    assert hits and hits[0].missing.text() == "C(0,3)"
    blob = hits[0].as_dict()
    assert set(blob) == {"rule", "statement", "premises", "missing"}
    assert blob["missing"] == "C(0,3)"
    assert any("C(0,2)" in p for p in blob["premises"])


def test_rule_audit_flags_the_short_tail():
    violations = closure_rule_violations(hs_closure([go(2)]))
    assert violations[0].rule == "i"
    assert violations[0].missing.text() == "Go_3"


def test_rule_audit_is_clean_on_every_canonical_class():
    for cls in all_sixty():
        K = ChainClass.from_chains(class_members(cls, 9))
        assert closure_rule_violations(K, 9) == ()


# --- AP verdicts ---------------------------------------------------------


def test_verdict_reports_the_class_when_it_classifies():
    verdict = ap_verdict(hs_closure([com(1, 1)]))
    assert isinstance(verdict, HasAP)
    assert verdict.as_dict() == {"ap": True, "class": "fin:1,0,1+e:1"}


def test_verdict_refutes_the_short_goedel_class_with_a_span():
    verdict = ap_verdict(hs_closure([go(2)]))
    assert isinstance(verdict, NoAP)
    assert verdict.refutation == Refuted(checked=3)
    span = verdict.witness
    assert iso_equal(span.A, go(1))
    assert iso_equal(span.B, go(2)) and iso_equal(span.C, go(2))
    assert span.i_B.image == (0, 2) and span.i_C.image == (1, 2)
    blob = verdict.as_dict()
    assert blob["ap"] is False and blob["witness_complete"] is True
    assert any(v["rule"] == "i" for v in blob["audit"])


def test_verdict_refutes_the_capped_upper_side_class():
    verdict = ap_verdict(hs_closure([com(0, 2)]))
    assert isinstance(verdict, NoAP)
    assert any(v.rule == "iv" for v in verdict.audit)
    assert verdict.witness is not None
    assert isinstance(verdict.refutation, Refuted)
