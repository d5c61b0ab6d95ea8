#!/usr/bin/env python3
"""
Test 3: Ray Class Groups and Extensions
Tests the class group presentation, extension enumeration, inertia, genus and the split census
"""

import logging
from fractions import Fraction

import pytest

from src.exceptions import NotCyclicError, PlaceInModulusError, TableInputError
from src.gfpoly import FieldSpec, Place, monic_irreducibles, parse_poly
from src.rayclass import (
    GeometricExtension,
    SplitPlaceSpec,
    character_conductors,
    compositum_constant_degree,
    compositum_genus_bound,
    conductor_degree,
    enumerate_extensions,
    full_rayclass_degree,
    genus,
    genus_from_characters,
    genus_full_rayclass,
    genus_full_rayclass_literal,
    inertia_degree,
    ray_class_group,
    restrict_modulus,
    split_count_census,
)
from src.search import find_table_extension, verify_pointless
from src.unitgroup import Modulus

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def moduli_up_to(field, max_degree):
    """Every non-trivial modulus of degree <= max_degree"""
    places = [p for t in range(1, max_degree + 1) for p in monic_irreducibles(field, t)]

    def build(start, budget):
        yield ()
        for i in range(start, len(places)):
            p = places[i]
            for e in range(1, budget // p.degree + 1):
                for rest in build(i + 1, budget - e * p.degree):
                    yield ((p, e),) + rest

    for factors in build(0, max_degree):
        if factors:
            yield Modulus.from_factors(field, factors, check=False)


def brute_order(lattice, v):
    k = 1
    while not lattice.contains([k * x for x in v]):
        k += 1
    return k


def test_class_group_orders():
    """Test |H| = |(F_q[x]/m)^*| / (q - 1)"""
    assert ray_class_group(Modulus.parse(F2, "x^3+x+1")).order == 7
    assert ray_class_group(Modulus.parse(F2, "(x^3+x+1)^2")).order == 56
    assert ray_class_group(Modulus.parse(F3, "x^2+1")).order == 4
    assert ray_class_group(Modulus.parse(F3, "(x)^2,x+1")).order == 6


def test_artin_classes():
    m = Modulus.parse(F2, "x^3+x+1")
    group = ray_class_group(m)
    inf = group.artin_class(Place.infinity(F2))
    assert inf.h == group.identity and inf.deg == 1
    with pytest.raises(PlaceInModulusError):
        group.artin_class(Place.finite(parse_poly(F2, "x^3+x+1")))

    # the class of a polynomial is multiplicative
    a, b = parse_poly(F2, "x+1"), parse_poly(F2, "x^2+x+1")
    ha, hb, hab = group.class_of(a), group.class_of(b), group.class_of(a * b)
    assert group.reduce([x + y for x, y in zip(ha, hb)]) == hab


def test_constants_are_trivial_over_f3():
    group = ray_class_group(Modulus.parse(F3, "x^2+1"))
    assert group.class_of(parse_poly(F3, "2")) == group.identity
    assert group.class_of(parse_poly(F3, "2*x+2")) == group.class_of(parse_poly(F3, "x+1"))


@pytest.mark.parametrize("field,max_degree", [(F2, 5), (F3, 5)])
def test_extension_count_equals_class_number(field, max_degree):
    """Exactly |H| extensions of degree |H| for every small modulus"""
    for m in moduli_up_to(field, max_degree):
        group = ray_class_group(m)
        extensions = list(enumerate_extensions(group, group.order))
        assert len(extensions) == group.order
        assert len(set(extensions)) == group.order
        assert all(e.constant_field_degree() == 1 for e in extensions)


def subgroup_counts(group):
    """Subgroups of H by index, by closing sets of elements under addition"""
    elements = [group.reduce(v) for v in group.relations.coset_representatives()]

    def span(generators):
        seen = {group.identity}
        frontier = [group.identity]
        while frontier:
            v = frontier.pop()
            for g in generators:
                w = group.reduce([a + b for a, b in zip(v, g)])
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    subgroups = {span([])}
    frontier = list(subgroups)
    while frontier:
        s = frontier.pop()
        for g in elements:
            if g not in s:
                t = span(list(s) + [g])
                if t not in subgroups:
                    subgroups.add(t)
                    frontier.append(t)
    counts = {}
    for s in subgroups:
        index = group.order // len(s)
        counts[index] = counts.get(index, 0) + 1
    return counts


def test_extension_count_per_divisor():
    """For every d | |H|: d extensions per subgroup of index d"""
    logger.info("🧪 Counting extensions against brute-force subgroup counts")
    for m in moduli_up_to(F2, 5):
        group = ray_class_group(m)
        counts = subgroup_counts(group)
        assert sum(counts.values()) >= 1
        for d in range(1, group.order + 1):
            if group.order % d:
                continue
            assert len(list(group.relations.superlattices(d))) == counts[d], (str(m), d)
            assert len(list(enumerate_extensions(group, d))) == counts[d] * d, (str(m), d)


def test_inertia_and_split_search_on_every_small_modulus():
    """inertia_degree and find_table_extension against brute force for deg m <= 5 over F_2"""
    logger.info("🧪 Inertia and split-place oracles over small F_2 moduli")
    for m in moduli_up_to(F2, 5):
        group = ray_class_group(m)
        splits = [Place.infinity(F2)] + [
            Place.finite(p)
            for t in (1, 2)
            for p in monic_irreducibles(F2, t)
            if not m.contains_place(p)
        ]
        for d in range(1, group.order + 1):
            if group.order % d:
                continue
            extensions = list(enumerate_extensions(group, d))
            for extension in extensions[:20]:
                assert inertia_degree(extension, Place.infinity(F2)) == brute_order(
                    extension.subgroup, [-x for x in extension.u]
                )
                for t in (1, 2, 3):
                    for poly, h in group.place_classes(t):
                        if h is None:
                            continue
                        v = [a - t * b for a, b in zip(h, extension.u)]
                        assert inertia_degree(extension, Place.finite(poly)) == brute_order(extension.subgroup, v)
            for split in splits:
                expected = {e for e in extensions if inertia_degree(e, split) == 1}
                try:
                    found = set(find_table_extension(m, d, split))
                except TableInputError:
                    found = set()
                assert found == expected, (str(m), d, str(split))


def test_enumerate_rejects_bad_degree():
    with pytest.raises(ValueError):
        enumerate_extensions(Modulus.parse(F2, "x^3+x+1"), 3)


def test_row_two_extension():
    """A single degree-7 extension mod x^3+x+1 splits x^4+x+1, and it is pointless for n=2"""
    m = Modulus.parse(F2, "x^3+x+1")
    found = find_table_extension(m, 7, Place.finite(parse_poly(F2, "x^4+x+1")))
    assert len(found) == 1
    extension = found[0]
    assert extension.degree == 7
    assert genus(extension) == 3
    assert verify_pointless(extension, 2).verdict


def test_find_table_extension_matches_brute_force():
    """Candidates are exactly the (B0, u) with f(S) = 1"""
    m = Modulus.parse(F2, "(x^3+x+1)^2")
    split = Place.finite(parse_poly(F2, "x^4+x+1"))
    group = ray_class_group(m)
    for d in (1, 2, 4, 7, 8, 14, 28, 56):
        expected = {e for e in enumerate_extensions(group, d) if inertia_degree(e, split) == 1}
        try:
            found = set(find_table_extension(m, d, split))
        except TableInputError:
            found = set()
        assert found == expected, d


def test_inertia_degree_matches_brute_force():
    m = Modulus.parse(F2, "(x^3+x^2+1,x^3+x+1)")
    group = ray_class_group(m)
    for extension in enumerate_extensions(group, 7):
        for poly, h in group.place_classes(4):
            v = [a - 4 * b for a, b in zip(h, extension.u)]
            assert inertia_degree(extension, Place.finite(poly)) == brute_order(extension.subgroup, v)
        assert inertia_degree(extension, Place.infinity(F2)) == brute_order(
            extension.subgroup, [-x for x in extension.u]
        )


def test_ramified_place_uses_restriction():
    m = Modulus.parse(F2, "(x^3+x^2+1,x^3+x+1)")
    group = ray_class_group(m)
    ramified = Place.finite(parse_poly(F2, "x^3+x+1"))
    for extension in list(enumerate_extensions(group, 49))[:10]:
        restricted = restrict_modulus(extension, ramified)
        assert restricted.modulus.to_text() == "(x^3+x^2+1)"
        assert restricted.degree == 7
        h = restricted.group.class_of(ramified.poly)
        assert inertia_degree(extension, ramified) == restricted.frobenius_order(h, 3)

    with pytest.raises(PlaceInModulusError):
        restrict_modulus(next(iter(enumerate_extensions(group, 49))), Place.finite(parse_poly(F2, "x")))


def test_compositum_constant_degree():
    group = ray_class_group(Modulus.parse(F2, "x^3+x+1"))
    subgroup = group.relations
    first = GeometricExtension.create(group, subgroup, (1,))
    second = GeometricExtension.create(group, subgroup, (4,))
    assert compositum_constant_degree(first, second) == 7
    assert compositum_constant_degree(first, first) == 1


def test_full_rayclass_genus_formula():
    """Closed form against the conductor-discriminant genus of the extension with S split"""
    logger.info("🧪 Comparing the closed-form genus with conductor sums")
    for field, max_degree in ((F2, 6), (F3, 3)):
        places = [Place.infinity(field)] + [Place.finite(p) for p in monic_irreducibles(field, 1)]
        for m in moduli_up_to(field, max_degree):
            group = ray_class_group(m)
            for place in places:
                if not place.is_infinite and m.contains_place(place.poly):
                    continue
                split = SplitPlaceSpec(place)
                extensions = find_table_extension(m, group.order, place)
                assert len(extensions) == 1
                value = genus_full_rayclass(m, split)
                assert genus(extensions[0]) == value, (m, place)
                assert full_rayclass_degree(m, split) == group.order
                if field == F2 and all(e == 1 for _, e in m.factors):
                    assert genus_full_rayclass_literal(m, split) == value, m


def test_genus_examples():
    m = Modulus.parse(F2, "x^3+x+1")
    assert genus_full_rayclass(m, SplitPlaceSpec(Place.finite(parse_poly(F2, "x")))) == 3

    square = Modulus.parse(F2, "(x^3+x+1)^2")
    split = SplitPlaceSpec(Place.finite(parse_poly(F2, "x^3+x^2+1")))
    assert genus_full_rayclass(square, split) == 101
    assert full_rayclass_degree(square, split) == 3 * 56
    # the printed closed form undercounts wild ramification
    assert genus_full_rayclass_literal(square, split) == 3

    with pytest.raises(PlaceInModulusError):
        genus_full_rayclass(m, SplitPlaceSpec(Place.finite(parse_poly(F2, "x^3+x+1"))))


def test_genus_from_characters_agrees():
    for text in ("(x^3+x+1)^2", "(x)^3,x^2+x+1", "(x^3+x^2+1,x^3+x+1)"):
        group = ray_class_group(Modulus.parse(F2, text))
        for d in (2, 4, 7):
            if group.order % d:
                continue
            for extension in list(enumerate_extensions(group, d))[:20]:
                assert genus_from_characters(extension) == genus(extension)
                conductors = character_conductors(extension)
                assert len(conductors) == d
                places = group.modulus.factors
                per_place = [max(c.exponents[i] for c in conductors) for i in range(len(places))]
                assert sum(p.degree * e for (p, _), e in zip(places, per_place)) == conductor_degree(extension)


def test_compositum_genus_bound():
    assert compositum_genus_bound([3, 3], [7, 7]) == Fraction(147)


@pytest.mark.parametrize("text", ["x^3+x+1", "x^4+x+1", "x^5+x^2+1", "(x)^3,x^2+x+1"])
def test_split_census_bounds(text):
    """At most gcd(d, deg P) extensions split P completely"""
    m = Modulus.parse(F2, text)
    group = ray_class_group(m)
    if not group.is_cyclic():
        pytest.skip(f"H is not cyclic for {text}")
    for degree in range(1, 8):
        record = split_count_census(m, degree)
        assert record.holds, (text, degree)
        assert record.max_split <= record.d


@pytest.mark.deep
def test_split_census_exhaustive():
    """Every cyclic H of order <= 200 from moduli of degree <= 5, place degrees <= 8"""
    logger.info("🧪 Exhaustive split census")
    for m in moduli_up_to(F2, 5):
        group = ray_class_group(m)
        if not group.is_cyclic() or group.order > 200:
            continue
        for degree in range(1, 9):
            record = split_count_census(group, degree)
            assert record.holds, (str(m), degree)


def test_split_census_needs_cyclic_group():
    with pytest.raises(NotCyclicError):
        split_count_census(Modulus.parse(F2, "(x^3+x+1)^2"), 2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
