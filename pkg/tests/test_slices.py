"""Coefficient norms, circle sampling, composition, slice construction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybohr import (
    DomainError,
    PolydiscSlice,
    PreconditionError,
    coefficient_norms,
    eval_series,
    mobius_series,
    random_equimodular_slice,
    schwarz_compose,
    schwarz_pick_bound,
    slice_tail_bound,
    sup_modulus,
    tail_bound,
)


def identity_slice(n_terms=16, m=1):
    return PolydiscSlice.from_components([mobius_series(0.0, "plus", n_terms)] * m)


class TestConstruction:
    def test_requires_shared_truncation_order(self):
        with pytest.raises(DomainError):
            PolydiscSlice.from_components([mobius_series(0.1, "plus", 4), mobius_series(0.1, "plus", 5)])

    def test_requires_nonempty(self):
        with pytest.raises(DomainError):
            PolydiscSlice.from_components([])

    def test_equimodular_flag_validated(self):
        comps = (mobius_series(0.2, "plus", 4), mobius_series(0.8, "plus", 4))
        with pytest.raises(PreconditionError):
            PolydiscSlice(components=comps, equimodular=True)

    def test_from_components_detects_equimodularity(self):
        same = PolydiscSlice.from_components(
            [mobius_series(0.4, "plus", 8), mobius_series(0.4, "minus", 8)]
        )
        assert same.equimodular
        mixed = PolydiscSlice.from_components(
            [mobius_series(0.4, "plus", 8), mobius_series(0.5, "plus", 8)]
        )
        assert not mixed.equimodular

    def test_certified_property(self):
        assert identity_slice().certified


class TestCoefficientNorms:
    def test_single_identity_component(self):
        norms = coefficient_norms(identity_slice(4))
        assert norms.a_norm == 0.0
        assert np.allclose(norms.q, [1.0, 0.0, 0.0, 0.0])

    def test_mirrored_mobius_pair(self):
        s = PolydiscSlice.from_components(
            [mobius_series(0.6, "plus", 10), mobius_series(0.6, "minus", 10)]
        )
        norms = coefficient_norms(s)
        n = np.arange(1, 11)
        assert norms.a_norm == pytest.approx(0.6)
        assert np.allclose(norms.q, (1.0 - 0.36) * 0.6 ** (n - 1), atol=1e-15)

    @given(st.integers(min_value=0, max_value=300))
    @settings(max_examples=50, deadline=None)
    def test_norms_bounded_for_equimodular_certified_slices(self, seed):
        s = random_equimodular_slice(seed, n_terms=24)
        norms = coefficient_norms(s)
        assert np.all(norms.q <= 1.0 - norms.a_norm**2 + 1e-12)

    def test_crossover_between_components(self):
        # Unequal moduli: the small-a component dominates early orders, the
        # large-a component dominates the tail.
        s = PolydiscSlice(
            components=(mobius_series(0.6, "plus", 40), mobius_series(0.95, "plus", 40)),
            equimodular=False,
        )
        norms = coefficient_norms(s)
        assert norms.a_norm == pytest.approx(0.95)
        assert norms.q[0] == pytest.approx(1.0 - 0.36)  # component 1 dominates n=1
        # argmax switches once (1-a^2) a^(n-1) curves cross
        expected = np.maximum(
            0.64 * 0.6 ** np.arange(40), (1.0 - 0.95**2) * 0.95 ** np.arange(40)
        )
        assert np.allclose(norms.q, expected, atol=1e-15)
        assert norms.q[30] == pytest.approx((1.0 - 0.95**2) * 0.95**30)


class TestSupModulus:
    def test_identity_slice(self):
        assert sup_modulus(identity_slice(), 0.5, 16) == pytest.approx(0.5)

    def test_mobius_attains_growth_bound(self):
        # Positive real axis is in the phase grid, where the plus family peaks.
        for lam in (0.3, 0.7):
            s = PolydiscSlice.from_components([mobius_series(lam, "plus", 64)])
            r = 0.5
            sampled = sup_modulus(s, r, 64)
            bound = schwarz_pick_bound(lam, r)
            budget = tail_bound(s.components[0], r, "modulus").value
            assert sampled <= bound + budget + 1e-12
            assert sampled >= bound - budget - 1e-12

    def test_zero_radius_gives_a_norm(self):
        s = PolydiscSlice.from_components([mobius_series(0.45, "plus", 8)])
        assert sup_modulus(s, 0.0, 8) == pytest.approx(0.45)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            sup_modulus(identity_slice(), 1.0, 8)
        with pytest.raises(DomainError):
            sup_modulus(identity_slice(), 0.5, 0)

    def test_nondecreasing_in_radius_on_matching_grids(self):
        # Sampled sup inherits monotonicity when the phase grid is dense
        # enough relative to the polynomial degree.
        for seed in range(5):
            s = random_equimodular_slice(seed, n_terms=32)
            values = [sup_modulus(s, r, 256) for r in np.linspace(0.05, 0.9, 12)]
            diffs = np.diff(values)
            assert np.all(diffs >= -1e-9)


class TestSchwarzCompose:
    def test_order_one_is_identity(self):
        s = identity_slice(8)
        assert schwarz_compose(s, 1) is s

    def test_identity_series_squares(self):
        out = schwarz_compose(identity_slice(8), 2)
        coeffs = out.components[0].coeffs
        assert coeffs[1] == 1.0
        assert np.sum(np.abs(coeffs)) == 1.0

    def test_closed_form_evaluation(self):
        # g(t^2) for the plus family at t = 0.4: (0.5 + 0.16)/(1 + 0.08).
        s = PolydiscSlice.from_components([mobius_series(0.5, "plus", 64)])
        composed = schwarz_compose(s, 2)
        value = eval_series(composed.components[0], 0.4)
        assert value == pytest.approx(0.611111111111111, abs=1e-12)

    def test_order_past_truncation_keeps_only_constant(self):
        s = PolydiscSlice.from_components([mobius_series(0.5, "plus", 8)])
        out = schwarz_compose(s, 9)
        assert np.max(np.abs(out.components[0].coeffs)) == 0.0
        assert out.components[0].a0 == pytest.approx(0.5)

    def test_certification_and_equimodularity_preserved(self):
        s = random_equimodular_slice(2, m=2, n_terms=16)
        out = schwarz_compose(s, 3)
        assert out.certified and out.equimodular

    def test_rejects_nonpositive_order(self):
        with pytest.raises(DomainError):
            schwarz_compose(identity_slice(), 0)

    @given(k=st.integers(min_value=1, max_value=6), seed=st.integers(min_value=0, max_value=50))
    @settings(max_examples=30, deadline=None)
    def test_composed_growth_bound(self, k, seed):
        # max_i |g_i(t^k)| at |t| = r obeys the composed growth bound.
        s = random_equimodular_slice(seed, n_terms=32)
        r = 0.6
        composed = schwarz_compose(s, k)
        sampled = sup_modulus(composed, r, 32)
        a = coefficient_norms(s).a_norm
        budget = slice_tail_bound(composed, r, "modulus").value
        assert sampled <= schwarz_pick_bound(a, r**k) + budget + 1e-10


class TestSliceTailBound:
    def test_worst_component_governs(self):
        s = PolydiscSlice(
            components=(mobius_series(0.2, "plus", 8), mobius_series(0.9, "plus", 8)),
            equimodular=False,
        )
        b = slice_tail_bound(s, 0.5, "linear_sum")
        assert b.value == pytest.approx(tail_bound(s.components[0], 0.5, "linear_sum").value)


class TestRandomEquimodularSlice:
    def test_reproducible_and_certified(self):
        a = random_equimodular_slice(9)
        b = random_equimodular_slice(9)
        assert a.m == b.m
        assert all(
            np.array_equal(x.coeffs, y.coeffs) for x, y in zip(a.components, b.components)
        )
        assert a.certified and a.equimodular

    def test_component_count_control(self):
        assert random_equimodular_slice(0, m=3).m == 3

    def test_mixed_component_counts(self):
        counts = {random_equimodular_slice(seed).m for seed in range(30)}
        assert counts == {1, 2, 3}

    def test_initial_moduli_agree(self):
        s = random_equimodular_slice(4, m=3)
        moduli = [abs(c.a0) for c in s.components]
        assert max(moduli) - min(moduli) <= 1e-14
