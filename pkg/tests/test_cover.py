import pytest

from chaincover.core import InternalInconsistency, dual, induced
from chaincover.cover import (max_antichain, max_antichain_bruteforce,
                              min_chain_cover, verify_dilworth)
from chaincover.generators import (antichain, chain, grid_upper, lex_sum,
                                   random_poset)

import oracles


class TestMinChainCover:
    def test_grid4_width_two(self):
        g = grid_upper(4)
        cc = min_chain_cover(g)
        assert cc.width == 2
        assert cc.width == oracles.brute_min_chain_partition(g)

    def test_antichain_singleton_chains(self):
        cc = min_chain_cover(antichain(5))
        assert cc.width == 5
        assert sorted(cc.chains) == [(0,), (1,), (2,), (3,), (4,)]

    def test_grid6_width_three(self):
        assert min_chain_cover(grid_upper(6)).width == 3

    def test_empty(self):
        cc = min_chain_cover(antichain(0))
        assert cc.width == 0 and cc.chains == () and cc.certificate == frozenset()

    def test_chains_partition_and_are_chains(self):
        for seed in range(25):
            p = random_poset(15, 0.2, seed)
            cc = min_chain_cover(p)
            seen = set()
            for c in cc.chains:
                for i, x in enumerate(c):
                    assert x not in seen
                    seen.add(x)
                    if i:
                        assert p.lt(c[i - 1], x)
            assert seen == set(range(p.n))

    def test_deterministic(self):
        p = random_poset(20, 0.2, 7)
        assert min_chain_cover(p) == min_chain_cover(p)

    def test_matches_chain_partition_oracle(self):
        for seed in range(20):
            p = random_poset(8, 0.3, seed)
            assert min_chain_cover(p).width == oracles.brute_min_chain_partition(p)


class TestMaxAntichain:
    def test_chain_gives_singleton(self):
        assert len(max_antichain(chain(7))) == 1

    def test_grid6(self):
        got = max_antichain(grid_upper(6))
        assert len(got) == 3
        assert oracles.is_antichain(grid_upper(6), got)
        assert got == max_antichain_bruteforce(grid_upper(6))

    def test_lexsum_antichain_sits_in_widest_part(self):
        p = lex_sum([antichain(2), antichain(3)])
        got = max_antichain(p)
        assert got == {2, 3, 4}

    def test_certificate_matches_enumeration(self):
        for seed in range(25):
            p = random_poset(12, 0.25, seed)
            assert len(max_antichain(p)) == oracles.brute_max_antichain_size(p)


class TestDilworth:
    def test_grid_formula_small(self):
        for n in range(2, 9):
            g = grid_upper(n)
            rep = verify_dilworth(g)
            assert rep.width == n // 2
            assert len(max_antichain_bruteforce(g)) == n // 2

    def test_chain(self):
        rep = verify_dilworth(chain(4))
        assert rep.width == 1 == len(rep.antichain)

    def test_random_equality(self):
        for seed in range(60):
            p = random_poset(14, (0.1, 0.3, 0.6)[seed % 3], seed)
            rep = verify_dilworth(p)
            assert rep.consistent
            assert rep.width == len(rep.antichain)
            assert rep.width == oracles.brute_max_antichain_size(p)


class TestCovLaws:
    def test_duality(self):
        for seed in range(30):
            p = random_poset(15, 0.2, seed)
            assert min_chain_cover(p).width == min_chain_cover(dual(p)).width

    def test_monotone_under_induced(self):
        for seed in range(15):
            p = random_poset(12, 0.3, seed)
            w = min_chain_cover(p).width
            sub, _ = induced(p, range(0, p.n, 2))
            assert min_chain_cover(sub).width <= w

    def test_subadditive_over_element_split(self):
        for seed in range(10):
            p = random_poset(10, 0.3, seed)
            w = min_chain_cover(p).width
            for x in range(p.n):
                parts = [p.up[x] | (1 << x), p.down[x], p.inc_mask(x)]
                total = 0
                for mask in parts:
                    sub, _ = induced(p, (i for i in range(p.n) if mask >> i & 1))
                    total += min_chain_cover(sub).width
                assert w <= total


def test_bruteforce_guard():
    with pytest.raises(ValueError):
        max_antichain_bruteforce(antichain(40))


def test_internal_inconsistency_is_runtime_error():
    assert issubclass(InternalInconsistency, RuntimeError)
