import random

import pytest

import relcomplex as rc

import oracles
from conftest import corpus_cases


def snf_matrix(rows):
    return rc.smith_normal_form(rc.IntegerMatrix.from_rows(rows))


class TestBoundaryMatrices:
    def test_single_edge_column(self):
        edge = rc.complex_from_facets("ab", [("a", "b")])
        (d1,) = rc.boundary_matrices(edge)
        assert (d1.rows, d1.cols) == (2, 1)
        assert d1.entries == ((-1,), (1,))

    def test_triangle_boundary_rank(self, boundary2):
        (d1,) = rc.boundary_matrices(boundary2)
        assert (d1.rows, d1.cols) == (3, 3)
        assert oracles.rational_rank(d1.entries) == 2

    def test_point_has_no_matrices(self):
        assert rc.boundary_matrices(rc.full_complex("a")) == []

    @pytest.mark.parametrize("k", corpus_cases())
    def test_boundary_of_boundary_is_zero(self, k):
        mats = rc.boundary_matrices(k)
        for low, high in zip(mats, mats[1:]):
            assert rc.matrix_product(low, high).is_zero()


class TestSmithNormalForm:
    def test_identity(self):
        assert snf_matrix([[1, 0], [0, 1]]) == (1, 1)

    def test_known_two_by_two(self):
        # d1 = gcd of entries = 2, d1*d2 = |det| = 8
        assert snf_matrix([[2, 4], [6, 8]]) == (2, 4)

    def test_zero_matrix(self):
        assert snf_matrix([[0, 0], [0, 0]]) == ()
        assert rc.smith_normal_form(rc.IntegerMatrix(0, 3, ())) == ()

    def test_idempotent_on_chain_diagonals(self):
        assert snf_matrix([[1, 0, 0], [0, 2, 0], [0, 0, 6]]) == (1, 2, 6)

    def test_divisibility_chain_and_minor_gcds(self):
        rng = random.Random(20250810)
        for _ in range(250):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            diag = snf_matrix(mat)
            assert all(d > 0 for d in diag)
            assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
            assert len(diag) == oracles.rational_rank(mat)
            # product of the first k entries = gcd of k x k minors
            prod = 1
            for k, d in enumerate(diag[:3], start=1):
                prod *= d
                assert prod == oracles.gcd_of_k_minors(mat, k)
            # idempotence: reducing the reduced diagonal changes nothing
            chain = [
                [diag[i] if i == j else 0 for j in range(len(diag))]
                for i in range(len(diag))
            ]
            if chain:
                assert snf_matrix(chain) == diag


class TestHomology:
    def test_point(self):
        assert rc.homology(rc.full_complex("a")) == rc.HomologyProfile((1,), ((),))

    def test_triangle_boundary_is_a_circle(self, boundary2):
        assert rc.homology(boundary2) == rc.HomologyProfile((1, 1), ((), ()))

    def test_empty_profile(self):
        assert rc.homology(rc.SimplicialComplex(rc.Universe("a"), [])) == \
            rc.HomologyProfile((), ())

    def test_projective_plane_torsion(self):
        rp2 = oracles.projective_plane()
        profile = rc.homology(rp2)
        assert profile == rc.HomologyProfile((1, 0, 0), ((), (2,), ()))
        # independent checks: Betti over Q, and the 2-torsion via field ranks
        assert oracles.oracle_betti(rp2) == (1, 0, 0)
        d1, d2 = rc.boundary_matrices(rp2)
        b1_gf2 = 15 - oracles.gf_rank(d1.entries, 2) - oracles.gf_rank(d2.entries, 2)
        b1_gf3 = 15 - oracles.gf_rank(d1.entries, 3) - oracles.gf_rank(d2.entries, 3)
        b1_q = 15 - oracles.rational_rank(d1.entries) - oracles.rational_rank(d2.entries)
        assert (b1_q, b1_gf3, b1_gf2) == (0, 0, 1)

    def test_sphere_boundaries(self):
        for n, labels in ((1, "abc"), (2, "abcd"), (3, "abcde")):
            profile = rc.homology(oracles.boundary_simplex(labels))
            expected_betti = tuple(
                1 if i in (0, n) else 0 for i in range(n + 1)
            )
            assert profile.betti == expected_betti
            assert all(t == () for t in profile.torsion)

    @pytest.mark.parametrize("k", corpus_cases())
    def test_betti_matches_rational_rank_oracle(self, k):
        assert rc.homology(k).betti == oracles.oracle_betti(k)

    @pytest.mark.parametrize("k", corpus_cases())
    def test_euler_consistency(self, k):
        profile = rc.homology(k)
        assert k.euler_characteristic() == sum(
            (-1) ** n * b for n, b in enumerate(profile.betti)
        )

    def test_relabeling_invariance(self):
        rng = random.Random(4)
        for _ in range(25):
            k = oracles.random_complex(rng, "abcde")
            perm = dict(zip("abcde", rng.sample("ABCDE", 5)))
            relabeled = rc.complex_from_facets(
                [perm[l] for l in "abcde"],
                [tuple(perm[l] for l in facet) for facet in k.facet_labels()],
            )
            assert rc.homology(k) == rc.homology(relabeled)


class TestSameHomology:
    def test_circle4_k_and_l(self, circle4):
        assert rc.same_homology(
            rc.poset_dowker_complex(circle4, False, "k"),
            rc.poset_dowker_complex(circle4, False, "l"),
        )

    def test_chain_complex_differs_from_k(self, circle4):
        assert not rc.same_homology(
            rc.order_complex(circle4), rc.poset_dowker_complex(circle4, False, "k")
        )

    def test_crown_relation_k_complexes_differ(self, circle4, circle6):
        assert not rc.same_homology(
            rc.poset_dowker_complex(circle4, False, "k"),
            rc.poset_dowker_complex(circle6, False, "k"),
        )

    def test_padding_across_dimensions(self):
        point = rc.full_complex("a")
        edge = rc.complex_from_facets("ab", [("a", "b")])
        assert rc.same_homology(point, edge)

    def test_dowker_sample(self):
        rng = random.Random(31)
        for _ in range(80):
            r = oracles.random_covered_relation(rng, "abcd", "uvwz")
            assert rc.same_homology(rc.k_complex(r), rc.l_complex(r))


class TestIntegerMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            rc.IntegerMatrix(2, 2, ((1, 2),))
        with pytest.raises(ValueError):
            rc.matrix_product(
                rc.IntegerMatrix.from_rows([[1, 2]]),
                rc.IntegerMatrix.from_rows([[1, 2]]),
            )

    def test_product(self):
        a = rc.IntegerMatrix.from_rows([[1, 2], [3, 4]])
        b = rc.IntegerMatrix.from_rows([[0, 1], [1, 0]])
        assert rc.matrix_product(a, b).entries == ((2, 1), (4, 3))
