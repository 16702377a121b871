import json
import random
from fractions import Fraction as Q

import pytest

from supersym.exprparse import parse_poly
from supersym.geometry import (
    AffineSubspace,
    IsotropicRoot,
    NonConvergenceError,
    SuperalgebraicSet,
    atypical_roots,
    closure,
    graded_basis_through,
    is_superalgebraic,
    isotropic_roots,
    make_point,
    member,
    nullstellensatz_check,
    pairing,
    point_from_json,
    point_ideal_basis,
    point_to_json,
    positive_isotropic_roots,
    root_hyperplane,
    vanishing_basis,
)
from supersym.membership import graded_basis, is_supersymmetric_additive, power_sum
from supersym.poly import POLYNOMIAL, Signature

from oracles import (
    affine_rank,
    orbit_bfs,
    permute_point,
    random_point,
    same_span,
)
from supersym.symmetry import all_elements

SIG11 = Signature(1, 1)
SIG21 = Signature(2, 1)


def pt(*coords):
    return make_point(list(coords))


def singleton(sig, point):
    return SuperalgebraicSet.from_points(sig, [point])


class TestPairing:
    def test_even_block_is_plus_one(self):
        e1 = pt(1, 0)
        assert pairing(SIG11, e1, e1) == 1

    def test_isotropic_root_pairs_to_zero_with_itself(self):
        alpha = IsotropicRoot(1, 1).vector(SIG11)
        assert pairing(SIG11, alpha, alpha) == 0
        for sig in [SIG21, Signature(2, 2)]:
            for root in isotropic_roots(sig):
                v = root.vector(sig)
                assert pairing(sig, v, v) == 0

    def test_pairing_with_root_adds_coordinates(self):
        lam = pt(1, -1)
        alpha = IsotropicRoot(1, 1).vector(SIG11)
        assert pairing(SIG11, lam, alpha) == Q(1) + Q(-1)
        mu = pt(2, 5, 7)
        assert pairing(SIG21, mu, IsotropicRoot(2, 1).vector(SIG21)) == Q(5) + Q(7)

    def test_symmetric(self):
        rng = random.Random(3)
        sig = Signature(2, 2)
        for _ in range(10):
            a, b = random_point(rng, sig), random_point(rng, sig)
            assert pairing(sig, a, b) == pairing(sig, b, a)

    def test_invariant_under_block_permutations(self):
        rng = random.Random(5)
        sig = Signature(2, 2)
        for _ in range(10):
            a, b = random_point(rng, sig), random_point(rng, sig)
            for w in all_elements(sig):
                wa, wb = permute_point(w, a, sig), permute_point(w, b, sig)
                assert pairing(sig, wa, wb) == pairing(sig, a, b)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            pairing(SIG11, pt(1), pt(1, 2))


class TestRoots:
    def test_counts(self):
        assert len(isotropic_roots(SIG11)) == 2
        assert len(isotropic_roots(SIG21)) == 4
        assert isotropic_roots(Signature(3, 0)) == []

    def test_atypical_point_on_the_wall(self):
        assert atypical_roots(SIG11, pt(1, -1)) == [IsotropicRoot(1, 1)]

    def test_typical_point(self):
        assert atypical_roots(SIG11, pt(1, 0)) == []

    def test_partially_atypical_in_2_1(self):
        assert atypical_roots(SIG21, pt(1, 0, -1)) == [IsotropicRoot(1, 1)]

    def test_bad_sign_rejected(self):
        with pytest.raises(ValueError, match="sign"):
            IsotropicRoot(1, 1, 2)


class TestHyperplane:
    def test_1_1_wall_is_a_line(self):
        wall = root_hyperplane(SIG11, IsotropicRoot(1, 1))
        assert wall.dim == 1
        assert wall.contains_point(pt(5, -5))
        assert not wall.contains_point(pt(1, 1))

    def test_2_1_wall_is_a_plane(self):
        wall = root_hyperplane(SIG21, IsotropicRoot(1, 1))
        assert wall.dim == 2
        assert wall.contains_point(pt(3, 7, -3))
        assert not wall.contains_point(pt(3, 7, 0))

    def test_same_wall_for_both_signs(self):
        plus = root_hyperplane(SIG21, IsotropicRoot(1, 1, 1))
        minus = root_hyperplane(SIG21, IsotropicRoot(1, 1, -1))
        assert plus == minus

    def test_wall_membership_matches_atypicality(self):
        rng = random.Random(7)
        sig = Signature(2, 2)
        for _ in range(20):
            p = random_point(rng, sig)
            for root in positive_isotropic_roots(sig):
                on_wall = root_hyperplane(sig, root).contains_point(p)
                assert on_wall == (root in atypical_roots(sig, p))


class TestAffineSubspace:
    def test_canonical_form_is_parametrization_independent(self):
        a = AffineSubspace.canonical(pt(1, 0, -1), [pt(1, 0, -1)])
        b = AffineSubspace.canonical(pt(0, 0, 0), [pt(2, 0, -2)])
        c = AffineSubspace.canonical(pt(-3, 0, 3), [pt(1, 0, -1), pt(-1, 0, 1)])
        assert a == b == c
        assert a.base == pt(0, 0, 0)
        assert a.dim == 1

    def test_base_point_has_zero_pivot_coordinates(self):
        s = AffineSubspace.canonical(pt(2, 5), [pt(1, 1)])
        assert s.base[s.pivots()[0]] == 0

    def test_contains_subspace(self):
        plane = AffineSubspace.canonical(pt(0, 0, 0), [pt(1, 0, 0), pt(0, 1, 0)])
        line = AffineSubspace.canonical(pt(1, 2, 0), [pt(1, 1, 0)])
        off_plane = AffineSubspace.canonical(pt(0, 0, 1), [pt(1, 1, 0)])
        assert plane.contains_subspace(line)
        assert not plane.contains_subspace(off_plane)
        assert not line.contains_subspace(plane)

    def test_zero_dimensional_subspace(self):
        point = AffineSubspace.canonical(pt(1, 2))
        assert point.dim == 0
        assert point.contains_point(pt(1, 2))
        assert not point.contains_point(pt(1, 3))

    def test_ragged_directions_rejected(self):
        with pytest.raises(ValueError, match="length"):
            AffineSubspace.canonical(pt(1, 2), [pt(1, 2, 3)])


class TestSuperalgebraicSet:
    def test_irredundant_union(self):
        line = AffineSubspace.canonical(pt(0, 0), [pt(1, -1)])
        inside = AffineSubspace.canonical(pt(2, -2))
        s = SuperalgebraicSet.from_subspaces(SIG11, [inside, line])
        assert s.subspaces == (line,)

    def test_deterministic_order(self):
        a = AffineSubspace.canonical(pt(0, 0, 0), [pt(1, 0, -1)])
        b = AffineSubspace.canonical(pt(0, 0, 0), [pt(0, 1, -1)])
        point = AffineSubspace.canonical(pt(5, 5, 5))
        one = SuperalgebraicSet.from_subspaces(SIG21, [a, b, point])
        two = SuperalgebraicSet.from_subspaces(SIG21, [point, b, a])
        assert one == two
        assert [s.dim for s in one.subspaces] == [0, 1, 1]

    def test_membership_is_disjunction_over_subspaces(self):
        line = AffineSubspace.canonical(pt(0, 0), [pt(1, -1)])
        dot = AffineSubspace.canonical(pt(1, 1))
        s = SuperalgebraicSet.from_subspaces(SIG11, [line, dot])
        assert member(s, pt(5, -5))
        assert member(s, pt(1, 1))
        assert not member(s, pt(1, 2))

    def test_member_signature_mismatch(self):
        s = SuperalgebraicSet.from_points(SIG11, [pt(1, 0)])
        with pytest.raises(ValueError, match="signature"):
            member(s, pt(1, 0, 0))


class TestClosure:
    def test_typical_point_is_already_closed(self):
        s = closure(singleton(SIG11, pt(1, 0)), include_weyl=False)
        assert s == SuperalgebraicSet.from_points(SIG11, [pt(1, 0)])

    def test_atypical_point_sweeps_its_line(self):
        s = closure(singleton(SIG11, pt(1, -1)), include_weyl=False)
        expected = SuperalgebraicSet.from_subspaces(
            SIG11, [AffineSubspace.canonical(pt(0, 0), [pt(1, -1)])]
        )
        assert s == expected

    def test_2_1_example_set_equality_with_specified_lines(self):
        # the three parametrized lines: (1+t, 0, -1-t), (0, t, -t), (t, 0, -t);
        # the first and third coincide (the first passes through the origin),
        # so the canonical irredundant union has two components
        start = singleton(SIG21, pt(1, 0, -1))
        l1 = AffineSubspace.canonical(pt(1, 0, -1), [pt(1, 0, -1)])
        l2 = AffineSubspace.canonical(pt(0, 0, 0), [pt(0, 1, -1)])
        l3 = AffineSubspace.canonical(pt(0, 0, 0), [pt(1, 0, -1)])
        assert l1 == l3
        no_weyl = closure(start, include_weyl=False)
        assert no_weyl == SuperalgebraicSet.from_subspaces(SIG21, [l1, l2, l3])
        assert len(no_weyl.subspaces) == 2

        l1_swapped = AffineSubspace.canonical(pt(0, 1, -1), [pt(0, 1, -1)])
        assert l1_swapped == l2
        with_weyl = closure(start, include_weyl=True)
        assert with_weyl == SuperalgebraicSet.from_subspaces(
            SIG21, [l1, l1_swapped, l2, l3]
        )
        assert len(with_weyl.subspaces) == 2

    def test_closure_output_is_superalgebraic(self):
        for include_weyl in (False, True):
            s = closure(singleton(SIG21, pt(1, 0, -1)), include_weyl=include_weyl)
            assert is_superalgebraic(s, include_weyl=include_weyl)

    def test_atypical_singleton_is_not_superalgebraic(self):
        assert not is_superalgebraic(singleton(SIG11, pt(1, -1)), include_weyl=False)

    def test_weyl_flag_distinguishes_permutation_saturation(self):
        sig = Signature(2, 0)
        s = singleton(sig, pt(1, 2))
        assert is_superalgebraic(s, include_weyl=False)
        assert not is_superalgebraic(s, include_weyl=True)

    def test_empty_set_is_closed(self):
        empty = SuperalgebraicSet(SIG11, ())
        assert is_superalgebraic(empty)
        assert closure(empty) == empty

    def test_extensive_and_idempotent_on_seeded_points(self):
        rng = random.Random(101)
        for m in range(3):
            for n in range(3):
                if m + n == 0:
                    continue
                sig = Signature(m, n)
                for _ in range(6):
                    p = random_point(rng, sig)
                    s = closure(singleton(sig, p))
                    assert member(s, p)
                    assert closure(s) == s

    def test_monotone_on_point_unions(self):
        rng = random.Random(103)
        sig = Signature(2, 1)
        for _ in range(8):
            p, q = random_point(rng, sig), random_point(rng, sig)
            small = closure(singleton(sig, p))
            big = closure(SuperalgebraicSet.from_points(sig, [p, q]))
            for component in small.subspaces:
                assert any(outer.contains_subspace(component) for outer in big.subspaces)

    def test_bfs_points_stay_inside_closure(self):
        rng = random.Random(107)
        for sig in [SIG11, SIG21, Signature(2, 2)]:
            for _ in range(5):
                p = random_point(rng, sig, height=2)
                for include_weyl in (False, True):
                    c = closure(singleton(sig, p), include_weyl=include_weyl)
                    for q in orbit_bfs(sig, p, 3, include_weyl):
                        assert member(c, q)

    def test_bfs_covers_each_component_affinely(self):
        # minimality evidence: BFS points inside each component span it
        cases = [
            (SIG11, pt(1, -1), 3),
            (SIG21, pt(1, 0, -1), 4),
            (Signature(2, 2), pt(0, 0, 0, 0), 4),
        ]
        for sig, p, depth in cases:
            c = closure(singleton(sig, p), include_weyl=False)
            samples = orbit_bfs(sig, p, depth, include_weyl=False)
            for component in c.subspaces:
                inside = [q for q in samples if component.contains_point(q)]
                assert affine_rank(inside) == component.dim + 1

    def test_weyl_images_join_the_closure(self):
        sig = Signature(2, 0)
        s = closure(singleton(sig, pt(1, 2)), include_weyl=True)
        assert member(s, pt(2, 1))
        assert len(s.subspaces) == 2

    def test_result_is_presentation_independent(self):
        # same point set, different generating presentations and orders
        p = pt(1, 0, -1)
        line = AffineSubspace.canonical(p, [pt(1, 0, -1)])
        redundant_inputs = [
            SuperalgebraicSet.from_points(SIG21, [p]),
            SuperalgebraicSet.from_subspaces(SIG21, [line]),
            SuperalgebraicSet.from_subspaces(
                SIG21, [AffineSubspace.canonical(pt(2, 0, -2)), line, AffineSubspace.canonical(p)]
            ),
        ]
        results = {closure(s, include_weyl=False) for s in redundant_inputs}
        assert len(results) == 1

    def test_nonconvergence_is_a_distinct_error(self):
        with pytest.raises(NonConvergenceError, match="did not converge"):
            closure(singleton(SIG21, pt(1, 0, -1)), include_weyl=False, max_subspaces=1)

    def test_cap_smaller_than_input_rejected(self):
        s = SuperalgebraicSet.from_points(SIG11, [pt(0, 1), pt(1, 0)])
        with pytest.raises(ValueError, match="max_subspaces"):
            closure(s, max_subspaces=1)

    def test_invariants_are_constant_on_closures(self):
        rng = random.Random(109)
        basis = []
        sig = Signature(2, 1)
        for d in range(4):
            basis.extend(graded_basis(sig, d))
        for _ in range(6):
            p = random_point(rng, sig, height=2)
            for q in orbit_bfs(sig, p, 3, include_weyl=True):
                for f in basis:
                    assert f.evaluate(q) == f.evaluate(p)


class TestVanishingIdeals:
    def test_line_ideal_through_degree_two(self):
        line = AffineSubspace.canonical(pt(0, 0), [pt(1, -1)])
        s = SuperalgebraicSet.from_subspaces(SIG11, [line])
        basis = vanishing_basis(s, 2)
        assert len(basis) == 3
        p1 = power_sum(1, SIG11, POLYNOMIAL)
        p2 = power_sum(2, SIG11, POLYNOMIAL)
        assert same_span(basis, [p1, p1 * p1, p2])
        for f in basis:
            assert is_supersymmetric_additive(f).member

    def test_point_ideal_has_codimension_one(self):
        s = singleton(SIG11, pt(1, 0))
        total = graded_basis_through(SIG11, 2)
        basis = vanishing_basis(s, 2)
        assert len(total) == 4
        assert len(basis) == 3

    def test_whole_space_has_zero_ideal(self):
        whole = SuperalgebraicSet.from_subspaces(
            SIG11,
            [AffineSubspace.canonical(pt(0, 0), [pt(1, 0), pt(0, 1)])],
        )
        assert vanishing_basis(whole, 3) == []

    def test_elements_vanish_at_random_subspace_points(self):
        rng = random.Random(113)
        line = AffineSubspace.canonical(pt(0, 0, 0), [pt(1, 0, -1)])
        dot = AffineSubspace.canonical(pt(2, 2, 2))
        s = SuperalgebraicSet.from_subspaces(SIG21, [line, dot])
        for f in vanishing_basis(s, 3):
            for _ in range(10):
                t = Q(rng.randint(-9, 9), rng.randint(1, 4))
                on_line = tuple(b + t * d for b, d in zip(line.base, line.dirs[0]))
                assert f.evaluate(on_line) == 0
            assert f.evaluate(pt(2, 2, 2)) == 0

    def test_point_ideal_matches_closure_ideal_at_atypical_point(self):
        # supersymmetric functions cannot separate the point from its line
        lam = pt(1, -1)
        from_point = point_ideal_basis(SIG11, lam, 2)
        from_closure = vanishing_basis(closure(singleton(SIG11, lam)), 2)
        assert same_span(from_point, from_closure)

    def test_origin_ideal_degree_one_is_first_power_sum(self):
        basis = point_ideal_basis(SIG11, pt(0, 0), 1)
        assert same_span(basis, [power_sum(1, SIG11, POLYNOMIAL)])


class TestNullstellensatz:
    def test_closure_membership_forces_vanishing(self):
        report = nullstellensatz_check(SIG11, pt(1, -1), 3, [pt(2, -2)])
        (entry,) = report.entries
        assert entry.vanishes and entry.in_closure and entry.theorem_ok
        assert report.violations == 0

    def test_point_outside_closure_is_separated(self):
        report = nullstellensatz_check(SIG11, pt(1, -1), 3, [pt(1, 1)])
        (entry,) = report.entries
        assert not entry.vanishes and not entry.in_closure

    def test_base_point_itself(self):
        report = nullstellensatz_check(SIG11, pt(1, 0), 2, [pt(1, 0)])
        (entry,) = report.entries
        assert entry.vanishes and entry.in_closure

    def test_report_json_counts(self):
        report = nullstellensatz_check(SIG11, pt(1, -1), 2, [pt(2, -2), pt(0, 1)])
        data = report.to_json()
        assert data["violations"] == 0
        assert len(data["entries"]) == 2


class TestJsonSchema:
    def test_point_round_trip(self):
        p = pt(Q(1), Q(-1, 2))
        data = point_to_json(p)
        assert data == {"coords": ["1", "-1/2"]}
        assert point_from_json(data, SIG11) == p

    def test_point_length_validated(self):
        with pytest.raises(ValueError, match="coordinates"):
            point_from_json({"coords": ["1"]}, SIG11)

    def test_subspace_round_trip(self):
        s = AffineSubspace.canonical(pt(1, 0, -1), [pt(1, 0, -1)])
        again = AffineSubspace.from_json(s.to_json())
        assert again == s

    def test_set_round_trip_through_text(self):
        s = closure(singleton(SIG21, pt(1, 0, -1)))
        text = json.dumps(s.to_json())
        again = SuperalgebraicSet.from_json(json.loads(text))
        assert again == s

    def test_non_canonical_input_is_canonicalized(self):
        data = {"base": ["1", "0", "-1"], "dirs": [["2", "0", "-2"]]}
        s = AffineSubspace.from_json(data)
        assert s.base == pt(0, 0, 0)
        assert s.dirs == (pt(1, 0, -1),)
