from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cswhit.errors import NotDominant, NotSemisimple, SearchExhausted
from cswhit.repcombinat import (
    MINUSCULE,
    QUASI_MINUSCULE,
    character,
    classify_minimal,
    decompose_into_M,
    hom_multiplicity,
    in_omega,
    minimal_kind,
    minimal_set,
    omega_set,
    tensor_decomposition,
    tensor_multiplicity,
    weight_multiplicity,
    weyl_dimension,
)
from cswhit.rootdata import RootDatum, dominant_coweights, fixture, weyl_group, weyl_orbit

from conftest import FIXTURE_KEYS
from oracles import demazure_character, greedy_decompose, saturation

SL2, PGL2, A2 = fixture("SL2"), fixture("PGL2"), fixture("A2adj")


class TestOmega:
    def test_examples(self):
        assert omega_set(SL2, (0,)) == [(0,)]
        assert omega_set(SL2, (1,)) == [(1,), (0,), (-1,)]
        assert len(omega_set(A2, (1, 1))) == 7 and (0, 0) in omega_set(A2, (1, 1))

    def test_not_dominant(self):
        with pytest.raises(NotDominant):
            omega_set(SL2, (-1,))

    def test_saturation_oracle(self, rd):
        for lam in dominant_coweights(rd, 8):
            assert set(omega_set(rd, lam)) == saturation(rd, lam)

    def test_minimal_dichotomy(self, rd):
        for lam in minimal_set(rd):
            orbit = set(weyl_orbit(rd, lam))
            if minimal_kind(rd, lam) == MINUSCULE:
                assert set(omega_set(rd, lam)) == orbit
            else:
                assert set(omega_set(rd, lam)) == orbit | {rd.zero()}

    def test_in_omega(self):
        assert in_omega(SL2, (1,), (-1,)) and not in_omega(SL2, (1,), (2,))


class TestMultiplicities:
    def test_examples(self):
        assert weight_multiplicity(SL2, (1,), (1,)) == 1
        assert weight_multiplicity(SL2, (1,), (0,)) == 1
        assert weight_multiplicity(A2, (1, 1), (0, 0)) == 2
        assert weight_multiplicity(SL2, (1,), (5,)) == 0

    def test_demazure_oracle(self, rd):
        for lam in dominant_coweights(rd, 8):
            assert character(rd, lam) == demazure_character(rd, lam)

    def test_weyl_dimension(self, rd):
        for lam in dominant_coweights(rd, 10):
            assert sum(character(rd, lam).values()) == weyl_dimension(rd, lam)

    def test_highest_weight_simple(self, rd):
        assert all(weight_multiplicity(rd, lam, lam) == 1 for lam in dominant_coweights(rd, 10))

    def test_w_invariance(self, rd):
        for lam in dominant_coweights(rd, 6):
            chars = character(rd, lam)
            for mu in chars:
                for w in weyl_group(rd):
                    assert weight_multiplicity(rd, lam, w.act(mu)) == chars[mu]

    @pytest.mark.parametrize("key,lam,dim", [
        ("SL2", (2,), 5), ("PGL2", (3,), 4), ("A2adj", (2, 2), 27),
        ("B2", (1, 1), 5), ("B2", (2, 1), 10), ("C2", (0, 1), 4), ("C2", (1, 0), 5),
        ("G2", (1, 2), 7), ("G2", (2, 3), 14),
    ])
    def test_frozen_dimensions(self, key, lam, dim):
        assert weyl_dimension(fixture(key), lam) == dim


class TestTensor:
    def test_examples(self):
        assert tensor_multiplicity(SL2, [(1,)], (1,)) == 1
        assert tensor_multiplicity(SL2, [(1,), (1,)], (0,)) == 1
        assert tensor_multiplicity(SL2, [(1,), (1,)], (1,)) == 1
        assert dict(tensor_decomposition(SL2, [(1,), (1,)])) == {(2,): 1, (1,): 1, (0,): 1}

    def test_hom(self):
        assert hom_multiplicity(SL2, (1,), (0,), (1,)) == 1
        assert hom_multiplicity(A2, (1, 1), (1, 1), (1, 1)) == 2
        assert hom_multiplicity(SL2, (1,), (1,), (3,)) == 0

    @pytest.mark.parametrize("key,seq,expected", [
        ("PGL2", [(1,), (1,)], {(0,): 1, (2,): 1}),
        ("A2adj", [(1, 1), (1, 1)], {(0, 0): 1, (1, 1): 2, (1, 2): 1, (2, 1): 1, (2, 2): 1}),
        ("B2", [(1, 1), (1, 1)], {(0, 0): 1, (2, 1): 1, (2, 2): 1}),
        ("C2", [(0, 1), (1, 0)], {(0, 1): 1, (1, 1): 1}),
        ("G2", [(1, 2), (1, 2)], {(0, 0): 1, (1, 2): 1, (2, 3): 1, (2, 4): 1}),
    ])
    def test_frozen_products(self, key, seq, expected):
        assert dict(tensor_decomposition(fixture(key), seq)) == expected

    def test_greedy_oracle_over_M(self, rd):
        M = minimal_set(rd)
        for n in (1, 2, 3):
            for seq in product(M, repeat=n):
                assert dict(tensor_decomposition(rd, seq)) == greedy_decompose(rd, seq)

    def test_greedy_oracle_small_pairs(self, rd):
        box = dominant_coweights(rd, 6)
        for a, b in product(box, repeat=2):
            assert dict(tensor_decomposition(rd, [a, b])) == greedy_decompose(rd, [a, b])

    def test_missing_key_is_zero(self):
        assert tensor_decomposition(SL2, [(1,)])[(7,)] == 0


class TestMinimal:
    def test_examples(self):
        assert [(m.value, m.kind) for m in classify_minimal(SL2)] == [((1,), QUASI_MINUSCULE)]
        assert classify_minimal(SL2)[0].coroot_root.vector == (2,)
        assert [(m.value, m.kind) for m in classify_minimal(A2)] == [((1, 1), QUASI_MINUSCULE)]

    def test_pgl2_has_both_kinds(self):
        # alpha^vee = 2 mu0 is minimal too: mu0 is not below it (different coset)
        assert [(m.value, m.kind) for m in classify_minimal(PGL2)] == [
            ((1,), MINUSCULE), ((2,), QUASI_MINUSCULE)]

    @pytest.mark.parametrize("key,expected", [
        ("B2", [((1, 1), QUASI_MINUSCULE)]),
        ("C2", [((0, 1), MINUSCULE), ((1, 0), QUASI_MINUSCULE)]),
        ("G2", [((1, 2), QUASI_MINUSCULE)]),
    ])
    def test_frozen(self, key, expected):
        assert [(m.value, m.kind) for m in classify_minimal(fixture(key))] == expected

    def test_really_minimal(self, rd):
        from cswhit.rootdata import dominance_leq

        M = minimal_set(rd)
        for v in dominant_coweights(rd, 12):
            if any(v):
                below = [m for m in M if dominance_leq(rd, m, v)]
                assert below, f"{v} has no element of M below it"
                if v not in M:
                    assert all(not dominance_leq(rd, v, m) for m in M)

    def test_classification_invariants(self, rd):
        from cswhit.rootdata import roots

        for m in classify_minimal(rd):
            pairings = [sum(a * b for a, b in zip(r.vector, m.value)) for r in roots(rd)]
            if m.kind == MINUSCULE:
                assert set(pairings) <= {-1, 0, 1}
            else:
                big = [r for r, p in zip(roots(rd), pairings) if p >= 2]
                assert big == [m.coroot_root] and m.coroot_root.coroot == m.value

    def test_non_semisimple(self):
        with pytest.raises(NotSemisimple):
            classify_minimal(RootDatum(((1, -1),), ((1, -1),)))


class TestDecompose:
    def test_examples(self):
        assert decompose_into_M(SL2, (1,)) == [(1,)]
        assert decompose_into_M(SL2, (2,)) == [(1,), (1,)]

    def test_pgl2_prefers_shortest(self):
        # 2 mu0 is itself in M, so the shortest sequence has length one
        assert decompose_into_M(PGL2, (2,)) == [(2,)]
        assert decompose_into_M(PGL2, (3,)) == [(1,), (2,)]

    def test_contract(self, rd):
        for lam in dominant_coweights(rd, 12)[1:]:
            seq = decompose_into_M(rd, lam)
            assert all(x in minimal_set(rd) for x in seq)
            assert tensor_multiplicity(rd, seq, lam) > 0

    def test_search_exhausted(self):
        with pytest.raises(SearchExhausted):
            decompose_into_M(SL2, (3,), max_length=2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            decompose_into_M(SL2, (0,))


@pytest.mark.parametrize("key", FIXTURE_KEYS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_tensor_is_commutative_and_associative(key, data):
    rd = fixture(key)
    box = dominant_coweights(rd, 5)
    a, b, c = (data.draw(st.sampled_from(box)) for _ in range(3))
    assert tensor_decomposition(rd, [a, b]) == tensor_decomposition(rd, [b, a])
    assert tensor_decomposition(rd, [a, b, c]) == tensor_decomposition(rd, [c, a, b])
