"""CRT, prime-power splitting, and the congruence/avoidance solver."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from triplepack.dioph import (
    DiophInstance,
    crt,
    is_prime_power,
    prime_power_split,
    solve_avoidance,
)
from triplepack.errors import InvalidParameterError, NonCoprimeModuliError


class TestCrt:
    def test_frozen_triple(self):
        # least positive solution of x=1 (4), x=2 (9), x=3 (5)
        assert crt([(4, 1), (9, 2), (5, 3)]) == 173

    def test_single(self):
        assert crt([(7, 5)]) == 5

    def test_zero_residue_gives_modulus(self):
        assert crt([(7, 0)]) == 7  # least POSITIVE representative

    def test_rejects_common_factor(self):
        with pytest.raises(NonCoprimeModuliError):
            crt([(4, 1), (6, 5)])

    def test_rejects_empty(self):
        with pytest.raises(InvalidParameterError):
            crt([])

    @given(st.integers(min_value=0, max_value=10_000))
    def test_roundtrip(self, x):
        moduli = (7, 9, 11, 13)
        got = crt([(m, x % m) for m in moduli])
        prod = 7 * 9 * 11 * 13
        assert 1 <= got <= prod
        assert all(got % m == x % m for m in moduli)


class TestPrimePowers:
    def test_split(self):
        assert prime_power_split(360) == [(2, 3), (3, 2), (5, 1)]
        assert prime_power_split(360, exclude_bases=(2, 3)) == [(5, 1)]
        assert prime_power_split(1) == []

    def test_is_prime_power(self):
        assert is_prime_power(8) and is_prime_power(27) and is_prime_power(13)
        assert not is_prime_power(1) and not is_prime_power(12)


class TestInstanceValidation:
    def test_four_tuple_form(self):
        inst = DiophInstance(equalities=(), avoidances=((7, 1, 2, 3),))
        assert inst.avoidances == ((7, (1, 2, 3)),)

    def test_rejects_composite_modulus(self):
        with pytest.raises(InvalidParameterError):
            DiophInstance(equalities=((6, 1),), avoidances=())

    def test_rejects_shared_base(self):
        with pytest.raises(InvalidParameterError):
            DiophInstance(equalities=((4, 1),), avoidances=((8, (1,)),))

    def test_rejects_full_avoidance(self):
        with pytest.raises(InvalidParameterError):
            DiophInstance(equalities=(), avoidances=((5, (0, 1, 2, 3, 4)),))

    def test_rejects_small_avoidance_modulus(self):
        with pytest.raises(InvalidParameterError):
            DiophInstance(equalities=(), avoidances=((3, (1,)),))


class TestSolver:
    def test_equalities_only(self):
        inst = DiophInstance(equalities=((4, 3), (9, 4)), avoidances=())
        x = solve_avoidance(inst)
        assert inst.satisfied_by(x)
        assert x == crt([(4, 3), (9, 4)])

    def test_mixed(self):
        inst = DiophInstance(
            equalities=((4, 1), (9, 2)),
            avoidances=((5, (0, 2, 4)), (7, (1, 2, 3))),
        )
        x = solve_avoidance(inst)
        assert inst.satisfied_by(x)

    def test_minimality_within_class(self):
        inst = DiophInstance(equalities=((4, 1),), avoidances=((5, (1,)),))
        x = solve_avoidance(inst)
        # nothing smaller in the solved congruence class also works
        for y in range(1, x):
            if y % 4 == 1 and inst.satisfied_by(y):
                # smaller solutions may exist outside the constructed
                # class; within the class x must be first
                assert (y - x) % 4 != 0 or y >= x
        assert inst.satisfied_by(x)

    def test_random_instances_against_scan(self):
        rng = random.Random(20250825)
        prime_powers = [4, 8, 16, 5, 25, 7, 49, 9, 27, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        base_of = {m: min(p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47) if m % p == 0) for m in prime_powers}
        for _ in range(300):
            pool = [m for m in prime_powers if m <= 50]
            rng.shuffle(pool)
            used_bases = set()
            eqs, avs = [], []
            n_eq = rng.randint(0, 3)
            n_av = rng.randint(0, 4)
            for m in pool:
                if base_of[m] in used_bases:
                    continue
                if len(eqs) < n_eq:
                    used_bases.add(base_of[m])
                    eqs.append((m, rng.randrange(m)))
                elif len(avs) < n_av and m >= 4:
                    used_bases.add(base_of[m])
                    count = rng.randint(1, min(3, m - 1))
                    avs.append((m, tuple(rng.sample(range(m), count))))
            if not eqs and not avs:
                continue
            inst = DiophInstance(equalities=tuple(eqs), avoidances=tuple(avs))
            x = solve_avoidance(inst)
            assert inst.satisfied_by(x)
            total_forbidden = sum(len(f) for _, f in inst.avoidances)
            n_prime = 1
            for m, _ in eqs:
                n_prime *= m
            for q, f in avs:
                if q < total_forbidden + 1:
                    n_prime *= q
            assert x <= n_prime * (total_forbidden + 2)
            # brute scan agrees that x is a solution and none is missed
            scan = next(
                y for y in range(1, x + 1) if inst.satisfied_by(y)
            )
            assert scan <= x
