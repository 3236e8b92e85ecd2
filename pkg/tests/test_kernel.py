from fractions import Fraction

import pytest

from oracles import alpha_enumerate, petersen
from tightkernel.catalog import TightKind, complete_graph
from tightkernel.decompose import decompose
from tightkernel.exact import ExactLimitError
from tightkernel.generators import GenSpec, gen_mixed, gen_tight_union
from tightkernel.graph import disjoint_union
from tightkernel.kernel import Branch, approximate_excess, decide_atlb, kernelize, parse_rational

RUNNING = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 10}, extra_vertices=3, seed=1))


def test_excess_k4_union():
    g = disjoint_union([complete_graph(4)] * 10)
    ex = approximate_excess(decompose(g, 4), g.n, 4)
    assert ex.k_lower == 0 == ex.k_upper


def test_excess_running_example():
    ex = approximate_excess(decompose(RUNNING, 4), RUNNING.n, 4)
    assert ex.k_lower == Fraction(3, 544) and ex.k_upper == 3
    true = 13 - Fraction(43, 4)
    assert true == Fraction(9, 4) and ex.k_lower <= true <= ex.k_upper


def test_excess_petersen():
    ex = approximate_excess(decompose(petersen(), 3), 10, 3)
    assert ex.k_lower == Fraction(10, 306)
    assert ex.k_upper == 34 * 9 * ex.k_lower
    assert ex.k_lower <= Fraction(2, 3) <= ex.k_upper


def test_kernel_running_example_k1():
    kr = kernelize(RUNNING, decompose(RUNNING, 4), 4, 1)
    assert kr.branch is Branch.RESIDUAL and kr.n0 == 3 and kr.g0.m == 0
    assert kr.mapping == (40, 41, 42) and not kr.guaranteed_yes


def test_kernel_k0_is_empty_yes():
    for g, d in [(RUNNING, 4), (petersen(), 3), (gen_mixed(5, 50, 2), 5)]:
        kr = kernelize(g, decompose(g, d), d, 0)
        assert kr.branch is Branch.NIBBLE and kr.n0 == 0 and kr.guaranteed_yes


def test_kernel_clique_union_k1():
    g = disjoint_union([complete_graph(5)] * 4)
    kr = kernelize(g, decompose(g, 5), 5, 1)
    assert kr.branch is Branch.RESIDUAL and kr.n0 == 0
    assert not decide_atlb(g, 5, 1).answer


def test_kernel_rejects_negative_k():
    with pytest.raises(ValueError):
        kernelize(RUNNING, decompose(RUNNING, 4), 4, Fraction(-1, 2))


def test_floats_rejected():
    with pytest.raises(TypeError):
        parse_rational(0.5)
    assert parse_rational("3/4") == Fraction(3, 4)


def test_nibble_branch_with_d_prefix():
    # threshold 34·9·k = 10 equals |D| for Petersen
    kr = kernelize(petersen(), decompose(petersen(), 3), 3, Fraction(10, 306))
    assert kr.branch is Branch.NIBBLE and kr.n0 == 10 and kr.guaranteed_yes
    kr = kernelize(petersen(), decompose(petersen(), 3), 3, Fraction(5, 306))
    assert kr.mapping == (0, 1, 2, 3, 4)


def test_nibble_branch_with_nibbles():
    g = gen_mixed(4, 200, 3)
    dec = decompose(g, 4)
    assert dec.nibbles
    kr = kernelize(g, dec, 4, Fraction(1, 544))
    assert kr.branch is Branch.NIBBLE and set(kr.mapping) == set(dec.nibbles[0])


def test_decide_examples():
    yes = decide_atlb(RUNNING, 4, 2)
    assert yes.answer and len(yes.certificate) == 13
    assert not decide_atlb(RUNNING, 4, 3).answer
    assert decide_atlb(petersen(), 3, 0).answer


def test_decide_matches_exact_small():
    for seed in range(40):
        for d in (3, 4):
            g = gen_mixed(d, 20, seed)
            alpha = alpha_enumerate(g)
            for k in (0, Fraction(1, 2), 1, 2, 3):
                want = alpha >= Fraction(g.n, d) + k
                got = decide_atlb(g, d, k)
                assert got.answer == want
                if want:
                    assert len(got.certificate) == alpha


def test_decide_over_limit():
    g = gen_mixed(3, 120, 1)
    dec = decompose(g, 3)
    big_k = Fraction(len(dec.C) + len(dec.D) + 1, 34 * 9)
    if len(dec.residual) > 10:
        with pytest.raises(ExactLimitError):
            decide_atlb(g, 3, big_k, limit=10)


@pytest.mark.parametrize("delta", [3, 4])
def test_prefix_of_d_is_a_yes_instance(delta):
    from tightkernel.exact import max_independent_set
    for seed in range(30):
        g = gen_mixed(delta, 60, seed)
        dec = decompose(g, delta)
        for t in range(1, len(dec.C) + len(dec.D) + 1):
            k = Fraction(t, 34 * delta * delta)
            kr = kernelize(g, dec, delta, k)
            assert kr.branch is Branch.NIBBLE and kr.guaranteed_yes
            assert max_independent_set(kr.g0)[0] >= Fraction(kr.n0, delta) + k
