#!/usr/bin/env python3
"""
Test 2: Unit Group Structure
Tests lattices, moduli, local unit groups and (F_q[x]/m)^* against brute force
"""

import itertools
import logging

import pytest

from config import Config
from src.exceptions import FactorizationError, ModulusError, NotCoprimeError, NotIrreducibleError
from src.gfpoly import FieldSpec, Poly, monic_irreducibles, parse_poly
from src.unitgroup import Lattice, LocalUnitGroup, Modulus, UnitGroupStructure, build_unit_group, factor_integer

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)


def units_of(structure):
    """Every residue coprime to the modulus, by brute force"""
    m = structure.modulus_poly
    q = structure.field.q
    for value in range(q ** m.degree):
        poly = Poly.from_int(structure.field, value)
        if not poly.is_zero() and poly.gcd(m).is_one():
            yield structure.reduce(poly)


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


def brute_order(a):
    k, power = 1, a
    while not power.is_identity():
        power = power * a
        k += 1
    return k


def subgroups_by_order(orders):
    """Subgroups of prod Z/orders[i] generated by at most two elements (enough for rank 2)"""
    elements = list(itertools.product(*(range(o) for o in orders)))

    def span(gens):
        seen = {tuple(0 for _ in orders)}
        frontier = list(seen)
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = tuple((a + b) % o for a, b, o in zip(v, g, orders))
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    subgroups = {span([a, b]) for a in elements for b in elements}
    counts = {}
    for s in subgroups:
        counts[len(s)] = counts.get(len(s), 0) + 1
    return counts


# ---------------------------------------------------------------- integers

def test_factor_integer():
    assert factor_integer(2 ** 11 - 1) == {23: 1, 89: 1}
    assert factor_integer(127) == {127: 1}
    assert factor_integer(1) == {}

    n = 1000003 * 10000019
    with pytest.raises(FactorizationError) as info:
        factor_integer(n, trial_bound=100, fallback=False)
    assert info.value.cofactor == n
    assert factor_integer(n, trial_bound=100, fallback=True) == {1000003: 1, 10000019: 1}


# ---------------------------------------------------------------- lattices

def test_lattice_canonical_form():
    """Test that the Hermite form does not depend on the generating set"""
    a = Lattice(2, 12, [(4, 6), (6, 0)])
    b = Lattice(2, 12, [(6, 0), (10, 6), (4, 6)])
    assert a == b
    assert hash(a) == hash(b)
    assert a.index == len({a.reduce(v) for v in itertools.product(range(12), range(12))})


def test_lattice_order_of_matches_brute_force():
    lattice = Lattice.diagonal([4, 6])
    assert lattice.index == 24
    assert lattice.order_of((1, 1)) == 12
    for v in itertools.product(range(4), range(6)):
        k = 1
        while not lattice.contains([k * x for x in v]):
            k += 1
        assert lattice.order_of(v) == k


def test_lattice_solve_multiple_matches_brute_force():
    lattice = Lattice(2, 12, [(4, 0), (1, 6)])
    reps = list(lattice.coset_representatives())
    assert len(reps) == lattice.index
    for k in (1, 2, 3, 4, 6):
        for c in reps:
            expected = {
                x for x in reps
                if lattice.contains([k * a - b for a, b in zip(x, c)])
            }
            assert set(lattice.solve_multiple(k, c)) == expected, (k, c)


def test_superlattices_count_subgroups():
    """Superlattices of index i are the subgroups of order |G|/i"""
    logger.info("🧪 Counting subgroups of Z/4 x Z/6 through superlattices")
    lattice = Lattice.diagonal([4, 6])
    counts = subgroups_by_order([4, 6])
    for index in (1, 2, 3, 4, 6, 8, 12, 24):
        found = list(lattice.superlattices(index))
        assert len(found) == len(set(found))
        assert all(lattice.is_sublattice_of(s) and s.index == index for s in found)
        assert len(found) == counts.get(24 // index, 0)
    assert list(lattice.superlattices(5)) == []


def test_cyclic_quotient():
    assert Lattice.diagonal([3, 4]).is_cyclic_quotient()
    assert not Lattice.diagonal([4, 6]).is_cyclic_quotient()
    assert Lattice.diagonal([4, 6]).exponent_of_quotient() == 12


# ----------------------------------------------------------------- moduli

def test_modulus_parsing():
    m = Modulus.parse(F2, "(x^3+x+1)^2")
    assert m.degree == 6
    assert m.multiplicity(parse_poly(F2, "x^3+x+1")) == 2
    assert m.to_text() == "(x^3+x+1)^2"

    pair = Modulus.parse(F2, "(x^3+x^2+1,x^3+x+1)")
    assert len(pair.places) == 2 and pair.degree == 6
    assert pair.to_text() == "(x^3+x^2+1,x^3+x+1)"
    assert pair.poly == parse_poly(F2, "x^3+x^2+1") * parse_poly(F2, "x^3+x+1")
    assert pair.without(parse_poly(F2, "x^3+x+1")).to_text() == "(x^3+x^2+1)"

    merged = Modulus.parse(F2, "x+1, x+1")
    assert merged.factors == ((parse_poly(F2, "x+1"), 2),)
    assert Modulus.parse(F2, "1").is_trivial


def test_modulus_errors():
    with pytest.raises(NotIrreducibleError):
        Modulus.parse(F2, "x^2+1")
    with pytest.raises(ModulusError):
        Modulus.parse(F2, "x^3+q")
    with pytest.raises(ModulusError):
        Modulus.parse(F3, "2*x+1")
    with pytest.raises(ModulusError):
        Modulus.parse(F2, "x^3+x+1").without(parse_poly(F2, "x"))


# ------------------------------------------------------------ local groups

@pytest.mark.parametrize("field,place,mult,one_unit_orders", [
    (F2, "x^3+x+1", 2, [2, 2, 2]),
    (F2, "x+1", 4, [2, 4]),
    (F3, "x^2+1", 2, [3, 3]),
    (F4, "x", 2, [2, 2]),
])
def test_local_group_structure(field, place, mult, one_unit_orders):
    local = LocalUnitGroup(parse_poly(field, place), mult)
    q, n = field.q, local.n
    assert local.order == (q ** n - 1) * q ** ((mult - 1) * n)
    assert sorted(o for _, o in local.one_unit_basis) == one_unit_orders

    total = 1
    for o in local.coordinate_orders:
        total *= o
    assert total == local.order

    # dlog is a bijection onto the coordinate box and inverts from_coordinates
    seen = set()
    for coords in itertools.product(*(range(o) for o in local.coordinate_orders)):
        unit = local.from_coordinates(coords)
        assert local.dlog(unit) == coords
        seen.add(unit.to_int())
    assert len(seen) == local.order


def test_local_filtration_orders():
    local = LocalUnitGroup(parse_poly(F2, "x+1"), 4)
    relations = Lattice.diagonal(local.coordinate_orders)
    for j in range(5):
        image = relations.extend(local.filtration_generators(j))
        assert image.index * local.filtration_order(j) == local.order, j


def test_pohlig_hellman_matches_table(monkeypatch):
    """Test the baby-step/giant-step path against the log table"""
    for place in ("x^6+x+1", "x^5+x^2+1"):
        table_group = LocalUnitGroup(parse_poly(F2, place), 1)
        monkeypatch.setattr(Config, "DLOG_TABLE_LIMIT", 1)
        ph_group = LocalUnitGroup(parse_poly(F2, place), 1)
        for k in range(table_group.residue_order):
            a = table_group.generator.pow_mod(k, table_group.place)
            assert ph_group.residue_log(a) == k
        monkeypatch.undo()


# -------------------------------------------------------------- structure

@pytest.mark.parametrize("field,text", [
    (F2, "(x^3+x^2+1,x^3+x+1)"),
    (F2, "(x)^3,x^2+x+1"),
    (F3, "(x)^2,x+1"),
])
def test_unit_group_against_brute_force(field, text):
    logger.info(f"🧪 Unit group oracle for {text} over {field}")
    structure = UnitGroupStructure(Modulus.parse(field, text))
    units = list(units_of(structure))
    assert len(units) == structure.total_order

    lattice = structure.coordinate_lattice()
    for a in units:
        coords = structure.dlog(a)
        assert structure.from_coordinates(coords) == a
        assert structure.element_order(a) == brute_order(a)
        assert lattice.order_of(coords) == brute_order(a)

    for k in (2, 3):
        for s in units:
            expected = frozenset(u for u in units if u ** k == s)
            assert structure.kth_roots(s, k) == expected


def test_unit_group_oracles_every_small_modulus():
    """element_order and kth_roots (k <= 12) for every modulus of degree <= 5 over F_2"""
    logger.info("🧪 Unit group oracles over every F_2 modulus of degree <= 5")
    checked = 0
    for m in moduli_up_to(F2, 5):
        structure = UnitGroupStructure(m)
        units = list(units_of(structure))
        assert len(units) == structure.total_order, m
        for a in units:
            assert structure.element_order(a) == brute_order(a), (m, a)
        for k in range(1, 13):
            roots = {}
            for u in units:
                roots.setdefault(u ** k, set()).add(u)
            for s in units:
                assert structure.kth_roots(s, k) == frozenset(roots.get(s, ())), (m, k)
        checked += 1
    assert checked > 50


def test_crt_round_trip_every_small_modulus():
    """split/combine and dlog/from_coordinates invert each other for deg m <= 6 over F_2"""
    for m in moduli_up_to(F2, 6):
        structure = UnitGroupStructure(m)
        for a in units_of(structure):
            assert structure.combine(structure.split(a)) == a, m
            assert structure.from_coordinates(structure.dlog(a)) == a, m


def test_unit_group_crt_and_restriction():
    m = Modulus.parse(F2, "(x^3+x+1)^2,x^2+x+1")
    structure = build_unit_group(m)
    assert structure.total_order == 56 * 3
    assert build_unit_group(m) is structure

    a = structure.reduce(parse_poly(F2, "x^4+x+1"))
    assert structure.combine(structure.split(a)) == a

    place = parse_poly(F2, "x^2+x+1")
    restricted = structure.restrict(place)
    assert restricted.total_order == 56
    image = structure.project(structure.dlog(a), place)
    assert restricted.from_coordinates(image) == restricted.reduce(a.residue)

    with pytest.raises(NotCoprimeError):
        structure.reduce(parse_poly(F2, "x^3+x+1"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
