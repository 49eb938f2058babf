from fractions import Fraction

import pytest

from slopelab.arith import INF, ExtendedRational
from slopelab.newton import MonomialValuation
from slopelab.poly import Ring
from slopelab.samuel import (
    CertificateRejected,
    InexactNubar,
    LocalRingPresentation,
    NotALambdaSequence,
    NotApplicable,
    ValuationCertificate,
    check_reduction_by_d,
    graded_piece_member,
    kernel_lambda,
    kernel_lambda_at_prime,
    nu,
    nubar,
    samuel_slope,
    validate_lambda_sequence,
)


def cusp_ring(char=0):
    ring = Ring(("x", "y"), char=char)
    return ring, LocalRingPresentation(ring, [ring.parse("x^2 - y^3")])


def test_nu_basic_values_on_the_cusp():
    ring, A = cusp_ring()
    assert nu(A, ring.parse("x")).value == ExtendedRational(1)
    assert nu(A, ring.parse("y")).value == ExtendedRational(1)
    # x^2 falls into m^3 through the relation x^2 = y^3
    v = nu(A, ring.parse("x^2"))
    assert v.value == ExtendedRational(3) and not v.at_least
    assert nu(A, ring.parse("x^2 - y^3")).value == INF
    assert nu(A, ring.parse("0")).value == INF
    assert nu(A, ring.one()).value == ExtendedRational(0)


def test_nu_matches_plain_adic_order_without_relations():
    ring = Ring(("x", "y"))
    A = LocalRingPresentation(ring, [])
    for text, want in [("x", 1), ("x*y", 2), ("x^2 + y^5", 2), ("3", 0)]:
        assert nu(A, ring.parse(text)).value == ExtendedRational(want)


def test_nu_powers_of_x_on_the_cusp_follow_the_known_pattern():
    # nu(x^{2k}) = 3k and nu(x^{2k+1}) = 3k+1, worked out by replacing
    # x^2 with y^3 as often as possible
    ring, A = cusp_ring()
    x = ring.parse("x")
    for n, want in [(1, 1), (2, 3), (3, 4), (4, 6), (5, 7), (6, 9)]:
        assert nu(A, x ** n).value == ExtendedRational(want), n


def test_nubar_of_x_on_the_cusp_certificate_route():
    ring, A = cusp_ring()
    w = MonomialValuation.from_dict(ring, {"x": 3, "y": 2})
    cert = ValuationCertificate([(w, 2)])
    result = nubar(A, ring.parse("x"), certificate=cert)
    assert result.status == "exact"
    assert result.value == ExtendedRational(Fraction(3, 2))


def test_nubar_limit_route_reaches_the_same_value_from_below():
    ring, A = cusp_ring()
    result = nubar(A, ring.parse("x"), strategy="limit", max_n=6)
    assert result.status == "lower-bound"
    assert result.value == ExtendedRational(Fraction(3, 2))
    # the envelope never overshoots the limit
    for n, v in result.samples:
        assert v / n <= ExtendedRational(Fraction(3, 2))


def test_certificate_rejected_when_claimed_ideal_value_is_wrong():
    ring, A = cusp_ring()
    w = MonomialValuation.from_dict(ring, {"x": 3, "y": 2})
    with pytest.raises(CertificateRejected):
        nubar(A, ring.parse("x"),
              certificate=ValuationCertificate([(w, 3)]))


def test_nubar_monomial_route_agrees_with_newton_polyhedron():
    ring = Ring(("x", "y"))
    A = LocalRingPresentation(ring, [])
    from slopelab.groebner import IdealPresentation
    ideal = IdealPresentation(ring, [ring.parse("x^2"), ring.parse("y^3")])
    result = nubar(A, ring.parse("x*y"), ideal=ideal)
    assert result.status == "exact"
    assert result.value == ExtendedRational(Fraction(5, 6))


def test_nubar_detects_nilpotents_exactly():
    ring = Ring(("x", "y"), char=2)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
    result = nubar(A, ring.parse("x + y"), strategy="limit", max_n=4)
    assert result.status == "exact"
    assert result.value == INF


def test_graded_piece_membership_and_inexactness_guard():
    ring, A = cusp_ring()
    w = MonomialValuation.from_dict(ring, {"x": 3, "y": 2})
    cert = ValuationCertificate([(w, 2)])
    assert graded_piece_member(A, ring.parse("x"), Fraction(3, 2),
                               certificate=cert)
    assert not graded_piece_member(A, ring.parse("x"), Fraction(3, 2),
                                   strict=True, certificate=cert)
    with pytest.raises(InexactNubar):
        graded_piece_member(A, ring.parse("x"), 1, strategy="limit")


def test_kernel_on_the_cusp_is_x_in_any_characteristic():
    for char in (0, 2):
        ring, A = cusp_ring(char)
        report = kernel_lambda(A)
        assert report.method in ("factorization", "monomial")
        assert [g.canonical_string() for g in report.basis] == ["x"]
        assert report.t == 1
        assert report.classification == "extremal"


def test_kernel_of_the_node_is_zero_away_from_char_two():
    for char in (0, 3):
        ring = Ring(("x", "y"), char=char)
        A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
        report = kernel_lambda(A)
        assert report.r == 0
        assert report.classification == "non-extremal"


def test_kernel_of_the_node_in_char_two_is_the_diagonal():
    ring = Ring(("x", "y"), char=2)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
    report = kernel_lambda(A)
    assert [g.canonical_string() for g in report.basis] == ["x + y"]
    assert report.classification == "extremal"


def test_enumeration_route_agrees_with_factorization_on_small_fields():
    for char, relation in [(3, "x^2 - y^2"), (2, "x^2 - y^3"),
                           (5, "x^2 - y^2")]:
        ring = Ring(("x", "y"), char=char)
        A = LocalRingPresentation(ring, [ring.parse(relation)])
        via_fact = kernel_lambda(A, method="factorization")
        via_enum = kernel_lambda(A, method="enumeration")
        assert via_fact.r == via_enum.r
        assert sorted(g.canonical_string() for g in via_fact.basis) \
            == sorted(g.canonical_string() for g in via_enum.basis)


def test_kernel_bound_by_excess():
    cases = [
        (0, ("x", "y"), ["x^2 - y^3"]),
        (2, ("x", "y"), ["x^2 - y^2"]),
        (0, ("z", "u", "w"), ["z^2 - z*u"]),
        (0, ("x", "y"), []),
    ]
    for char, names, rels in cases:
        ring = Ring(names, char=char)
        A = LocalRingPresentation(ring, [ring.parse(r) for r in rels])
        report = kernel_lambda(A)
        assert 0 <= report.r <= report.t


def test_dimension_and_excess_of_fixtures():
    ring, A = cusp_ring()
    assert A.embedding_dimension() == 2
    assert A.dimension() == 1
    assert A.excess() == 1

    ring3 = Ring(("z", "u", "w"))
    B = LocalRingPresentation(ring3, [ring3.parse("z^2 - z*u")])
    assert B.dimension() == 2
    assert B.excess() == 1

    # a relation with a linear part drops the embedding dimension
    ring2 = Ring(("x", "y"))
    C = LocalRingPresentation(ring2, [ring2.parse("x + x^2 - y^3")])
    assert C.embedding_dimension() == 1


def test_slope_is_one_in_the_non_extremal_case():
    ring = Ring(("x", "y"), char=3)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
    result = samuel_slope(A)
    assert result.classification == "non-extremal"
    assert result.lower_bound == ExtendedRational(1)
    assert result.exact


def test_slope_lower_bound_on_the_cusp():
    ring, A = cusp_ring(char=2)
    result = samuel_slope(A, max_n=6)
    assert result.classification == "extremal"
    assert result.lower_bound == ExtendedRational(Fraction(3, 2))
    assert not result.exact
    assert len(result.witness) == 1


def test_slope_infinite_when_a_kernel_element_dies():
    ring = Ring(("x", "y"), char=2)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
    result = samuel_slope(A, max_n=4)
    assert result.lower_bound == INF
    assert result.exact


def test_slope_not_applicable_for_a_regular_presentation():
    ring = Ring(("x", "y"))
    A = LocalRingPresentation(ring, [])
    with pytest.raises(NotApplicable):
        samuel_slope(A)


def test_user_candidate_sequences_are_validated():
    ring, A = cusp_ring(char=2)
    kernel = kernel_lambda(A)
    validate_lambda_sequence(A, kernel, [ring.parse("x + y^2")])
    with pytest.raises(NotALambdaSequence):
        validate_lambda_sequence(A, kernel, [ring.parse("y")])
    with pytest.raises(NotALambdaSequence):
        validate_lambda_sequence(A, kernel, [ring.parse("x + 1")])
    with pytest.raises(NotALambdaSequence):
        validate_lambda_sequence(A, kernel, [])


def test_user_candidates_feed_the_slope_search():
    ring, A = cusp_ring(char=2)
    result = samuel_slope(A, candidates=[[ring.parse("x + y^2")]],
                          max_n=6, search=False)
    assert result.lower_bound == ExtendedRational(Fraction(3, 2))


def test_reduction_check_on_the_cusp():
    ring, A = cusp_ring()
    assert check_reduction_by_d(A, [ring.parse("y")])
    assert not check_reduction_by_d(A, [ring.parse("x")])
    with pytest.raises(ValueError):
        check_reduction_by_d(A, [ring.parse("x"), ring.parse("y")])


def test_reduction_check_on_the_node():
    ring = Ring(("x", "y"))
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y^2")])
    assert check_reduction_by_d(A, [ring.parse("y")])


def test_kernel_at_a_coordinate_prime_whitney_shape():
    for p in (2, 3, 5):
        ring = Ring(("x", "y1", "y2"), char=p)
        A = LocalRingPresentation(
            ring, [ring.parse("x^%d - y1^%d*y2" % (p, p))])
        report = kernel_lambda_at_prime(A, ("x", "y1"))
        assert report.method == "frobenius-form"
        assert report.r == 0
        assert report.t == 1
        assert report.classification == "non-extremal"


def test_kernel_at_a_coordinate_prime_detects_actual_powers():
    # x^2 - y1^2*y2^2 has initial form (x + y1*y2)^2 along (x, y1)
    ring = Ring(("x", "y1", "y2"), char=2)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y1^2*y2^2")])
    report = kernel_lambda_at_prime(A, ("x", "y1"))
    assert report.r == 1
    assert report.classification == "extremal"


def test_kernel_at_prime_rejects_points_off_the_hypersurface():
    ring = Ring(("x", "y1", "y2"), char=2)
    A = LocalRingPresentation(ring, [ring.parse("x^2 - y1^2*y2")])
    with pytest.raises(ValueError):
        kernel_lambda_at_prime(A, ("y1", "y2"))


def test_relations_must_vanish_at_the_origin():
    ring = Ring(("x", "y"))
    with pytest.raises(ValueError):
        LocalRingPresentation(ring, [ring.parse("x^2 + 1")])
