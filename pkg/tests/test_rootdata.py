"""Tests for Cartan data, root systems and absolute root data."""

import pytest

from schubert_normality.exceptions import InvalidCoweight, InvalidLattice, InvalidType, NotComparable
from schubert_normality.lattice.normalforms import QuotientLattice, invariant_factors, row_basis, saturation_index
from schubert_normality.rootdata.cartan import RootSystem, SimpleType, cartan_matrix
from schubert_normality.rootdata.datum import (
    IsogenyLattice,
    abs_leq,
    build_root_datum,
    fundamental_coweights,
    is_dominant_abs,
    omega_coords,
    parse_coweight,
    product_datum,
    schubert_dimension,
)

ALL_TYPES = [("A", 1), ("A", 4), ("B", 3), ("C", 4), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


class TestSimpleType:

    @pytest.mark.parametrize("letter,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
    def test_invalid_pairs(self, letter, rank):
        with pytest.raises(InvalidType):
            SimpleType(letter, rank)

    def test_lowercase_letter(self):
        assert SimpleType("d", 4).letter == "D"

    @pytest.mark.parametrize("letter,rank,expected", [
        ("A", 1, 2), ("A", 6, 7), ("B", 5, 2), ("C", 3, 2), ("D", 6, 4),
        ("E", 6, 3), ("E", 7, 2), ("E", 8, 1), ("F", 4, 1), ("G", 2, 1),
    ])
    def test_connection_index(self, letter, rank, expected):
        assert SimpleType(letter, rank).connection_index == expected

    @pytest.mark.parametrize("letter,rank", ALL_TYPES)
    def test_connection_index_is_cartan_determinant(self, letter, rank):
        t = SimpleType(letter, rank)
        assert RootSystem(cartan_matrix(t)).determinant == t.connection_index


class TestRootSystem:

    @pytest.mark.parametrize("letter,rank,count", [
        ("A", 2, 3), ("B", 2, 4), ("G", 2, 6), ("D", 4, 12), ("F", 4, 24), ("E", 6, 36), ("E", 8, 120),
    ])
    def test_positive_root_count(self, letter, rank, count):
        assert len(RootSystem(cartan_matrix(SimpleType(letter, rank))).positive_roots) == count

    def test_g2_highest_root(self):
        rs = RootSystem(cartan_matrix(SimpleType("G", 2)))
        assert rs.highest_roots[0].root == (3, 2)

    def test_components_of_product(self):
        rs = RootSystem([[2, 0], [0, 2]])
        assert rs.components() == [[0], [1]]
        assert len(rs.highest_roots) == 2


class TestNormalForms:

    def test_invariant_factors(self):
        assert invariant_factors([[2, 0], [0, 3]], 2) == [1, 6]

    def test_saturation_index(self):
        assert saturation_index([[2, -1], [-1, 2]], 2) == 3
        assert saturation_index([[1, 0, 0]], 3) == 1

    def test_row_basis_spans_same_lattice(self):
        rows = [[2, 4], [4, 8], [0, 2]]
        basis = row_basis(rows, 2)
        assert len(basis) == 2
        assert saturation_index(basis, 2) == saturation_index(rows, 2)

    def test_quotient_lattice(self):
        q = QuotientLattice(2, [(2, -1), (-1, 2)])
        assert q.torsion_invariants == (3,)
        assert q.order == 3
        assert len(list(q.elements())) == 3
        assert q.is_relation((2, -1))
        assert not q.is_relation((1, 0))


class TestRootDatum:

    @pytest.mark.parametrize("letter,rank,name,index", [
        ("A", 2, "sc", 1), ("A", 2, "ad", 3), ("D", 4, "SO", 2), ("D", 4, "half_spin", 2), ("D", 4, "ad", 4),
        ("E", 6, "ad", 3), ("C", 3, "ad", 2),
    ])
    def test_index_over_coroots(self, letter, rank, name, index):
        d = build_root_datum(SimpleType(letter, rank), IsogenyLattice(name))
        assert d.index_over_coroots == index

    def test_unknown_lattice(self):
        with pytest.raises(InvalidLattice):
            IsogenyLattice("weird")

    def test_so_lattice_outside_type_d(self):
        with pytest.raises(InvalidLattice):
            build_root_datum(SimpleType("B", 3), IsogenyLattice("SO"))

    def test_half_spin_needs_even_rank(self):
        with pytest.raises(InvalidLattice):
            build_root_datum(SimpleType("D", 5), IsogenyLattice("half_spin"))

    def test_basis_must_contain_coroots(self):
        with pytest.raises(InvalidLattice):
            build_root_datum(SimpleType("A", 1), IsogenyLattice(basis=((3,),)))

    def test_gl_datum(self):
        d = build_root_datum(SimpleType("A", 2), IsogenyLattice("gl"))
        assert d.cochar_rank == 3
        assert d.central_rank == 1

    def test_shared_basis(self):
        a1 = build_root_datum(SimpleType("A", 1), IsogenyLattice("sc"))
        d = product_datum([a1, a1], [[1, 1], [0, 2]])
        assert d.coroots == ((2, -1), (0, 1))
        assert d.index_over_coroots == 2

    def test_fundamental_coweights(self):
        sc = build_root_datum(SimpleType("A", 2), IsogenyLattice("sc"))
        ad = build_root_datum(SimpleType("A", 2), IsogenyLattice("ad"))
        assert not any(w.in_lattice for w in fundamental_coweights(sc))
        assert all(w.in_lattice for w in fundamental_coweights(ad))


class TestCoweights:

    def test_parse_fundamental_terms(self):
        d = build_root_datum(SimpleType("A", 3), IsogenyLattice("ad"))
        assert parse_coweight(d, "w1+2*w3") == (1, 0, 2)
        assert parse_coweight(d, "w1+2w3") == (1, 0, 2)
        assert parse_coweight(d, "0") == (0, 0, 0)

    def test_parse_epsilon(self):
        d = build_root_datum(SimpleType("A", 2), IsogenyLattice("ad"))
        assert parse_coweight(d, "1,0,-1") == (1, 1)
        assert parse_coweight(d, [1, 1]) == (1, 1)

    def test_parse_outside_lattice(self):
        d = build_root_datum(SimpleType("A", 2), IsogenyLattice("sc"))
        with pytest.raises(InvalidCoweight):
            parse_coweight(d, "w1")

    def test_parse_garbage(self):
        d = build_root_datum(SimpleType("A", 2), IsogenyLattice("ad"))
        with pytest.raises(InvalidCoweight):
            parse_coweight(d, "w1+x")
        with pytest.raises(InvalidCoweight):
            parse_coweight(d, "w5")

    def test_dominance_and_dimension(self):
        d = build_root_datum(SimpleType("A", 2), IsogenyLattice("ad"))
        assert is_dominant_abs(d, (1, 1))
        assert not is_dominant_abs(d, (2, -1))
        assert omega_coords(d, (1, 1)) == (1, 1)
        assert abs_leq(d, (0, 0), (1, 1))
        assert not abs_leq(d, (1, 0), (1, 1))
        assert schubert_dimension(d, (0, 0), (1, 1)) == 4
        with pytest.raises(NotComparable):
            schubert_dimension(d, (1, 0), (1, 1))
