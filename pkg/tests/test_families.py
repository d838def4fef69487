"""The explicit ideal families: minors, generator chains, monomial sets,
index automorphisms, matrix specializations."""

import pytest

from detlink.families import (IndexPermutation, M_ideal, M_set, apply_permutation,
                              chain_g, delta, g_generator, gens_a,
                              generic_residual, link_ideal, m_ij, m_ij_range,
                              minor_list, minor_pair, minors_ideal, phi_permutation,
                              chain_link, set_G, standard_ring, sub_a,
                              sum_links_ideal, symbolic_matrix, xyz_monomial)
from detlink.groebner import Ideal, ideal_equal, member
from detlink.idealops import height, quotient
from detlink.rings import multidegree, substitute


class TestDelta:
    def test_pinned(self):
        R = standard_ring(4)
        assert delta(1, 2, 4) == R.x(1) * R.y(2) - R.x(2) * R.y(1)
        assert delta(3, 3, 4) == R.zero
        assert delta(2, 1, 4) == -delta(1, 2, 4)
        assert multidegree(delta(1, 2, 4)) == (1, 1, 0)

    def test_range_checked(self):
        with pytest.raises(ValueError):
            delta(0, 2, 4)
        with pytest.raises(ValueError):
            delta(1, 5, 4)


class TestMinors:
    def test_counts(self):
        assert len(minors_ideal(4).gens) == 6
        assert len(minors_ideal(5).gens) == 10

    def test_height_is_n_minus_1(self):
        assert height(minors_ideal(4)) == 3

    def test_minors_minimally_generate(self):
        from detlink.groebner import minimal_generators
        assert len(minimal_generators(minors_ideal(5))) == 10


class TestGeneratorFamily:
    def test_pinned_g2(self):
        R = standard_ring(4)
        assert g_generator(4, 2) == R.z(2) * (R.x(3) * R.y(1) - R.x(1) * R.y(3))

    def test_leading_monomials(self):
        # z_i * x_{i+1} * y_{i-1} for middle indices.
        for n in (4, 5):
            R = standard_ring(n)
            for i in range(2, n):
                lead = (R.z(i) * R.x(i + 1) * R.y(i - 1)).terms[0].mono
                assert g_generator(n, i).terms[0].mono == lead

    def test_sub_family_size(self):
        for i in range(1, 6):
            assert len(sub_a(5, i).gens) == 4

    def test_contained_in_minors(self):
        I = minors_ideal(4)
        assert all(member(g, I) for g in gens_a(4).gens)

    def test_width_floor(self):
        with pytest.raises(ValueError):
            gens_a(3)


class TestMonomialFamilies:
    def test_pinned_m_ij(self):
        R = standard_ring(4)
        assert m_ij(4, 1, 3) == xyz_monomial(R, ys=[3, 4], zs=[2, 3, 4])
        assert m_ij(4, 4, 2) == xyz_monomial(R, xs=[1], ys=[2], zs=[1, 2, 3])
        assert multidegree(R.from_monomial(m_ij(4, 1, 4))) == (1, 1, 3)

    def test_pinned_M_set(self):
        R = standard_ring(4)
        zpart = [1, 3, 4]
        expected = {xyz_monomial(R, ys=[2, 4], zs=zpart),
                    xyz_monomial(R, xs=[2], ys=[4], zs=zpart),
                    xyz_monomial(R, xs=[4], ys=[2], zs=zpart),
                    xyz_monomial(R, xs=[2, 4], zs=zpart)}
        assert set(M_set(4, 2)) == expected

    def test_sizes_and_squarefree(self):
        for n in (4, 5, 6):
            for i in range(1, n + 1):
                ms = M_set(n, i)
                assert len(ms) == 2 ** (n - 2)
                assert all(m.is_squarefree() for m in ms)

    def test_index_coincidences(self):
        for n in (4, 5, 6):
            for i in range(2, n):
                assert m_ij(n, i, i) == m_ij(n, i, i - 1)
                assert m_ij(n, i, i + 1) == m_ij(n, i, i + 2)

    def test_every_m_ij_in_M_set(self):
        for n in (4, 5):
            for i in range(1, n + 1):
                ms = set(M_set(n, i))
                distinct = {m_ij(n, i, j) for j in m_ij_range(n, i)}
                assert distinct <= ms
                assert len(distinct) == n - 1

    def test_range_validation(self):
        with pytest.raises(ValueError):
            m_ij(4, 1, 2)
        with pytest.raises(ValueError):
            m_ij(4, 4, 4)
        with pytest.raises(ValueError):
            m_ij(4, 2, 6)


class TestChains:
    def test_pinned_values(self):
        R = standard_ring(4)
        first, second = chain_g(4)
        assert first[2] == R.x(1) * R.z(1) * R.z(2) * delta(3, 2, 4)
        assert second[3] == R.y(4) * R.z(3) * R.z(4) * delta(3, 2, 4)

    def test_end_coincidences(self):
        for n in (4, 5, 6):
            first, second = chain_g(n)
            assert first[1] == g_generator(n, 1)
            assert second[n] == g_generator(n, n)

    def test_set_G_size(self):
        for n in (4, 5, 6, 7):
            assert len(set_G(n)) == 3 * n - 4
        assert len(set(p.terms for p in set_G(5))) == 11  # all distinct


class TestSection2:
    def test_pinned_chain_and_monomials(self):
        R = standard_ring(4)
        chain, link = chain_link(4)
        assert list(chain.gens) == [delta(1, 2, 4), delta(2, 3, 4), delta(3, 4, 4)]
        extras = [g for g in link.gens if g not in chain.gens]
        assert extras == [R.y(2) * R.y(3), R.x(2) * R.y(3), R.x(2) * R.x(3)]

    def test_monomial_bidegrees_distinct(self):
        for n in (4, 5, 6):
            _, link = chain_link(n)
            extras = [g for g in link.gens if len(g.terms) == 1]
            bidegs = [multidegree(g)[:2] for g in extras]
            assert len(set(bidegs)) == n - 1

    def test_colon_equals_link(self):
        chain, link = chain_link(4)
        assert ideal_equal(quotient(chain, minors_ideal(4)), link)


class TestAutomorphisms:
    def test_pinned_case_n5(self):
        perm = phi_permutation(5, 5)
        assert perm.image == (3, 2, 4, 1, 5)
        image = apply_permutation(perm, delta(2, 1, 5))
        assert image == delta(2, 3, 5)  # consecutive minor at m-1, m for m=3

    def test_identity_application(self):
        R = standard_ring(4)
        f = gens_a(4).gens[1] * R.x(1) + R.y(2) ** 3
        assert apply_permutation(IndexPermutation.identity(4), f) == f

    def test_pinned_case_n4_first(self):
        perm = phi_permutation(4, 1)
        images = {apply_permutation(perm, delta(*minor_pair(4, k), 4)).monic()
                  for k in (2, 3, 4)}
        chain = {delta(t, t + 1, 4).monic() for t in (1, 2, 3)}
        assert images == chain

    def test_all_cases_cover_chain(self):
        for n in range(4, 9):
            chain = {delta(t, t + 1, n).monic().terms for t in range(1, n)}
            for case_i in range(1, n + 1):
                perm = phi_permutation(n, case_i)
                images = {
                    apply_permutation(perm, delta(*minor_pair(n, k), n)).monic().terms
                    for k in range(1, n + 1) if k != case_i}
                assert images == chain, (n, case_i)

    def test_z_variables_fixed(self):
        R = standard_ring(5)
        perm = phi_permutation(5, 3)
        f = R.z(2) * R.x(1)
        image = apply_permutation(perm, f)
        assert image == R.z(2) * R.x(perm(1))

    def test_bad_case_rejected(self):
        with pytest.raises(ValueError):
            phi_permutation(5, 0)
        with pytest.raises(ValueError):
            IndexPermutation(3, (1, 1, 2))

    def test_subfamilies_are_regular_sequences_after_z_one(self):
        # Setting every z to 1 turns each omitted-index family into n-1
        # minors of height n-1 (a regular sequence of that length).
        for n in (4, 5):
            R = standard_ring(n)
            images = {name: R.var(name) for name in R.names}
            images.update({f"z{i}": R.one for i in range(1, n + 1)})
            for i in range(1, n + 1):
                minors = [substitute(g, images) for g in sub_a(n, i).gens]
                assert height(Ideal(R, minors)) == n - 1


class TestChainRecurrences:
    def test_pinned_instance(self):
        # n=4, i=1: x2*z1*g_2 - z2*x3*g_{1,1} equals x1*z1*z2*delta(3,2),
        # which is g_{1,2}.
        R = standard_ring(4)
        first, _ = chain_g(4)
        lhs = (R.x(2) * R.z(1) * g_generator(4, 2)
               - R.z(2) * R.x(3) * first[1])
        assert lhs == R.x(1) * R.z(1) * R.z(2) * delta(3, 2, 4)
        assert lhs == first[2]

    def test_second_family_pinned_instance(self):
        # n=4, j=3: y2*y4*z3*z4*g_2 - z2*y1*g_{3,4} = g_{2,4}.
        R = standard_ring(4)
        _, second = chain_g(4)
        lhs = (R.y(2) * R.y(4) * R.z(3) * R.z(4) * g_generator(4, 2)
               - R.z(2) * R.y(1) * second[3])
        assert lhs == second[2]


class TestGenericResidual:
    def test_identity_pattern_recovers_family(self):
        R = standard_ring(4)
        B = [[1 if i == j else 0 for j in range(4)] for i in range(6)]
        aB, I = generic_residual(4, B)
        images = {name: R.var(name) for name in R.names}
        images.update({f"z{i}": R.one for i in range(1, 5)})
        expected = [substitute(g, images) for g in gens_a(4).gens]
        assert list(aB.gens) == expected
        assert ideal_equal(I, minors_ideal(4))

    def test_zero_matrix(self):
        # Degenerate specialization: the zero ideal, rejected downstream by
        # its height.
        aB, _ = generic_residual(4, [[0] * 4 for _ in range(6)])
        assert aB.gens == ()
        assert height(aB) == 0

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            generic_residual(4, [[1] * 4 for _ in range(5)])

    def test_minor_order_documented(self):
        # First n entries follow the generator family; the rest are the
        # unused pairs sorted lexicographically, larger index first.
        R = standard_ring(4)
        gs = minor_list(4)
        assert gs[:4] == [delta(2, 1, 4), delta(3, 1, 4), delta(4, 2, 4),
                          delta(4, 3, 4)]
        assert gs[4:] == [delta(4, 1, 4), delta(3, 2, 4)]
        assert all(g.terms[0].coeff == 1 for g in gs)

    def test_symbolic_specialization_recovers_g(self):
        ring, B = symbolic_matrix(4)
        aS, _ = generic_residual(4, B)
        R = standard_ring(4)
        images = {}
        for name in ring.names:
            if name.startswith("t"):
                k = int(name[1:]) - 1
                i, j = divmod(k, 4)
                images[name] = R.z(j + 1) if i == j else R.zero
            else:
                images[name] = R.var(name)
        for j in range(4):
            assert substitute(aS.gens[j], images, into=R) == g_generator(4, j + 1)


class TestLinkIdeals:
    def test_link_ideal_gens(self):
        L = link_ideal(4, 2)
        assert len(L.gens) == 3 + 4

    def test_sum_links_gens(self):
        S = sum_links_ideal(4)
        assert len(S.gens) == 4 + 16

    def test_M_ideal_matches_set(self):
        assert len(M_ideal(4, 1).gens) == 4
