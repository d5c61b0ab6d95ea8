#!/usr/bin/env python3
"""
Test 4: Search, Parameters and Bounds
Tests pointlessness verification, parameter selection, the prime factor
check, genus bounds and the conductor search driver
"""

import json
import logging
import math
import random
from fractions import Fraction

import pytest
from sympy import isprime, primerange

from src.exceptions import ParameterSelectionError
from src.gfpoly import FieldSpec
from src.rayclass import GeometricExtension, enumerate_extensions, ray_class_group
from src.search import (
    SearchConfig,
    bounds,
    conductors,
    euler_lemma_check,
    farey_neighbor,
    load_table,
    satisfies_inequality,
    search_pointless,
    select_parameters,
    to_json,
    verify_pointless,
    weil_floor,
)
from src.unitgroup import Modulus

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

F2 = FieldSpec(2)


# ------------------------------------------------------------ verification

def test_infinity_is_scanned_first():
    """The untwisted full ray class field splits infinity"""
    group = ray_class_group(Modulus.parse(F2, "x^3+x+1"))
    extension = GeometricExtension.create(group, group.relations, group.identity)
    report = verify_pointless(extension, 2)
    assert not report.verdict
    assert report.witness.place.is_infinite
    assert report.witness.f == 1
    assert report.places_scanned == 1
    assert report.tallies == {}


def test_verdict_is_monotone_in_n():
    logger.info("🧪 Checking that pointless for n implies pointless for smaller n")
    group = ray_class_group(Modulus.parse(F2, "(x^3+x^2+1,x^3+x+1)"))
    for extension in enumerate_extensions(group, 7):
        verdicts = []
        for n in range(1, 7):
            report = verify_pointless(extension, n, compute_genus=False)
            verdicts.append(report.verdict)
            if report.verdict:
                assert all(best >= n for best in report.tallies.values())
            else:
                assert report.witness.residue_degree < n
                assert all(t < report.witness.degree for t in report.tallies)
        assert verdicts[0]
        assert verdicts == sorted(verdicts, reverse=True)


def test_parallel_scan_matches_serial():
    group = ray_class_group(Modulus.parse(F2, "(x^3+x^2+1,x^3+x+1)"))
    for extension in list(enumerate_extensions(group, 49))[:5]:
        serial = verify_pointless(extension, 8)
        parallel = verify_pointless(extension, 8, threads=2)
        assert serial.to_dict() == parallel.to_dict()


def test_verify_rejects_bad_n():
    group = ray_class_group(Modulus.parse(F2, "x^3+x+1"))
    extension = GeometricExtension.create(group, group.relations, group.identity)
    with pytest.raises(ValueError):
        verify_pointless(extension, 0)


# ------------------------------------------------------- parameter choice

def test_farey_neighbor():
    assert farey_neighbor(2, 3) == (1, 2)
    assert farey_neighbor(5, 7) == (2, 3)

    rng = random.Random(7)
    primes = list(primerange(3, 200))
    for _ in range(50):
        l, m = sorted(rng.sample(primes, 2))
        h, k = farey_neighbor(l, m)
        assert k * l - h * m == 1
        assert 0 < k < m

    with pytest.raises(ValueError):
        farey_neighbor(2, 4)
    with pytest.raises(ValueError):
        farey_neighbor(3, 2)


def test_select_parameters_n50():
    selection = select_parameters(SearchConfig(F2, 50))
    assert (selection.l, selection.m, selection.alpha, selection.beta) == (7, 13, 1, 5)
    assert selection.method == "determinant"
    assert satisfies_inequality(2, 50, 13, 7, 1, 5)
    assert selection.d == (2 ** 13 - 1) * (2 ** 7 - 1) ** 5


@pytest.mark.parametrize("q", [2, 3])
def test_select_parameters_range(q):
    """Every n in [50, 200] gets primes l < m < 2l and exponents passing the exact check"""
    logger.info(f"🧪 Selecting parameters for q={q}, n = 50..200")
    field_spec = FieldSpec(q)
    for n in range(50, 201):
        selection = select_parameters(SearchConfig(field_spec, n))
        l, m = selection.l, selection.m
        assert isprime(l) and isprime(m)
        assert l < m < 2 * l
        assert l > math.log(n, q)
        assert selection.alpha >= 0 and selection.beta >= 0
        assert selection.alpha + selection.beta > 0
        assert satisfies_inequality(q, n, m, l, selection.alpha, selection.beta), (q, n)
        assert selection.count_condition_ok, (q, n)
        if selection.method == "farey":
            assert selection.step_bound is None or selection.steps < selection.step_bound


def test_genus_bound_for_n100():
    selection = select_parameters(SearchConfig(F2, 100))
    assert selection.genus_bound_ok
    assert selection.genus_bound == Fraction(
        (selection.m * selection.alpha + selection.l * selection.beta) * selection.d, 2
    )


def test_parameter_selection_errors():
    with pytest.raises(ParameterSelectionError):
        select_parameters(SearchConfig(F2, 1))
    # a window too narrow to hold two primes
    with pytest.raises(ParameterSelectionError):
        select_parameters(SearchConfig(F2, 50, window_low=Fraction(4), window_high=Fraction(9, 2)))


def test_count_condition_uses_c2():
    """n*d lies in (4q q^n, 4q^2 q^n), so C2 = 1/2 always clears the count and C2 = 1/4 never does over F_2"""
    assert select_parameters(SearchConfig(F2, 50)).count_condition_ok
    selection = select_parameters(SearchConfig(F2, 50, c2=Fraction(1, 4)))
    assert selection.c2 == Fraction(1, 4)
    assert not selection.count_condition_ok
    assert selection.to_dict()["count_condition_ok"] is False


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(F2, 50, c2=Fraction(1))
    with pytest.raises(ValueError):
        SearchConfig(F2, 50, window_low=Fraction(12), window_high=Fraction(3))
    with pytest.raises(ValueError):
        SearchConfig(F2, 0)


def test_inequality_check():
    assert not satisfies_inequality(2, 2, 3, 2, 0, 0)
    assert not satisfies_inequality(2, 50, 13, 7, -1, 5)
    assert not satisfies_inequality(2, 50, 13, 7, 1, 6)


# ----------------------------------------------------------- prime factors

@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_prime_factor_congruence(q):
    """Primes of (q^m - 1)/(q - 1) outside q - 1 are 1 mod 2m"""
    field_spec = FieldSpec.from_order(q)
    for m in primerange(3, 32):
        report = euler_lemma_check(field_spec, m)
        assert report.holds, (q, m, report.factors)
        product = 1
        for s, e in report.factors.items():
            product *= s ** e
        assert product == report.value


def test_prime_factor_examples():
    report = euler_lemma_check(F2, 11)
    assert report.factors == {23: 1, 89: 1}
    assert report.multipliers == {23: 1, 89: 4}

    assert euler_lemma_check(F2, 7).multipliers == {127: 9}
    assert euler_lemma_check(F2, 5).multipliers == {31: 3}

    # (4^3 - 1)/3 = 21 and 3 divides q - 1
    report = euler_lemma_check(FieldSpec(2, 2), 3)
    assert report.factors == {3: 1, 7: 1}
    assert report.exempt == [3]
    assert report.holds


@pytest.mark.parametrize("m", [2, 9, 1])
def test_prime_factor_check_needs_odd_prime(m):
    with pytest.raises(ValueError):
        euler_lemma_check(F2, m)


# ----------------------------------------------------------------- bounds

def test_weil_floor():
    assert weil_floor(2, 0) == 0
    assert weil_floor(2, 18) == 256
    assert bounds(F2, 1, 0).weil_ok

    report = bounds(F2, 19, 100)
    assert report.weil_floor == 256
    assert not report.weil_ok


def test_table_genera_within_bounds():
    for entry in load_table():
        report = bounds(F2, entry.n, entry.g)
        assert report.weil_ok, entry.n
        assert report.desk_ok, entry.n


def test_bounds_report_json_is_stable():
    first = to_json(bounds(F2, 19, 95886).to_dict())
    second = to_json(bounds(F2, 19, 95886).to_dict())
    assert first == second
    assert list(json.loads(first)) == sorted(json.loads(first))


# ------------------------------------------------------------------ driver

def test_conductors_skip_repeated_places():
    cfg = SearchConfig(F2, 8)
    found = list(conductors(cfg, 3, 3, 1, 1))
    assert [m.to_text() for m in found] == ["(x^3+x+1,x^3+x^2+1)"]

    found = list(conductors(SearchConfig(F2, 2, max_conductors=1), 3, 3, 1, 0))
    assert [m.to_text() for m in found] == ["(x^3+x+1)"]

    with pytest.raises(ValueError):
        list(conductors(cfg, 3, 3, 0, 0))


def test_search_finds_degree_seven_curve():
    logger.info("🧪 Searching twists mod x^3+x+1 for n=2")
    result = search_pointless(SearchConfig(F2, 2), 3, 3, 1, 0)
    assert result.found
    assert result.report.degree == 7
    assert result.report.genus == 3
    assert result.extensions_tried <= 7
    assert result.to_dict()["found"]

    # only the degree actually used is checked; 2^3 - 1 = 7 = 2*1*3 + 1
    [check] = result.prime_factor_checks
    assert (check.m, check.factors, check.holds) == (3, {7: 1}, True)
    assert check.count_checked
    assert result.to_dict()["prime_factor_checks"][0]["factors"] == {"7": 1}


def test_search_passes_c_q_and_seed():
    cfg = SearchConfig(F2, 2, c_q=5, seed=5)
    result = search_pointless(cfg, 3, 3, 1, 0)
    assert not result.prime_factor_checks[0].count_checked
    assert result.found and result.report.degree == 7
    group = result.report.extension.group
    assert group is ray_class_group(group.modulus, 5)
    assert group.units.seed == 5


def test_ray_class_group_cache_is_per_seed():
    field_spec = FieldSpec(3)
    m = Modulus.parse(field_spec, "(x)^2,x^2+1")
    first, second = ray_class_group(m, 1), ray_class_group(m, 2)
    assert first is ray_class_group(m, 1)
    assert first is not second
    assert (first.units.seed, second.units.seed) == (1, 2)
    assert first.order == second.order == 24


def test_search_two_cubics():
    """Twists mod two cubics reach n=7 but never n=8: H = C7 x C7 caps f(inf) at 7"""
    result = search_pointless(SearchConfig(F2, 7), 3, 3, 1, 1)
    assert result.found
    assert result.report.degree == 49
    assert result.report.genus == 78

    result = search_pointless(SearchConfig(F2, 8), 3, 3, 1, 1)
    assert not result.found
    assert result.extensions_tried == 49
    assert len(result.conductors_tried) == 1


def test_search_reports_exhausted_budget():
    """The ramified cubic has f = 1, so no twist is pointless for n=4"""
    result = search_pointless(SearchConfig(F2, 4, max_extensions=3), 3, 3, 1, 0)
    assert not result.found
    assert result.extensions_tried == 3
    assert len(result.conductors_tried) == 1
    assert result.to_dict()["extension"] is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
