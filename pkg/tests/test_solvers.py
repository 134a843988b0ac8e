import random
from collections import Counter

import pytest

from propcolor import (
    Graph,
    PreconditionError,
    UsageClass,
    VerifyMode,
    assignment_potential,
    build_assignment,
    build_family,
    classify_usage,
    color_without_excess,
    component_profiles,
    decide_proportional_k_choosability,
    disjoint_union,
    exists_proportional_coloring,
    lift_monotone,
    proportional_labelling_via_huing,
    repair_deficiencies,
    solve_components,
    solve_order_bound,
    solve_smallorder,
    solve_star,
    verify,
)

from helpers import (
    brute_force_no_excess,
    brute_force_proportional,
    random_assignment,
    random_graph,
    spanning_subgraphs,
)


def ok(g, L, f) -> bool:
    return verify(g, L, f, VerifyMode.PROPORTIONAL_COLORING).ok


# ---------------------------------------------------------------------------
# huing pipeline
# ---------------------------------------------------------------------------

def test_via_huing_forced_instance():
    g = build_family("complete", [2])
    L = build_assignment(g, [[1, 2]] * 2)
    f = proportional_labelling_via_huing(g, L)
    assert sorted(f) == [1, 2]
    assert proportional_labelling_via_huing(g, L, anchor=(0, 2)) == [2, 1]
    with pytest.raises(PreconditionError):
        proportional_labelling_via_huing(g, L, anchor=(0, 9))


def test_via_huing_always_proportional_labelling():
    g = build_family("star", [4])
    rng = random.Random(51)
    for _ in range(150):
        L = random_assignment(rng, g, 3, pool=rng.randint(3, 9))
        f = proportional_labelling_via_huing(g, L)
        assert verify(g, L, f, VerifyMode.PROPORTIONAL_LABELLING).ok
        v0 = rng.randrange(g.n)
        c0 = rng.choice(L.lists[v0])
        f = proportional_labelling_via_huing(g, L, anchor=(v0, c0))
        assert f[v0] == c0
        assert verify(g, L, f, VerifyMode.PROPORTIONAL_LABELLING).ok


def test_lift_monotone():
    rng = random.Random(53)
    star = build_family("star", [4])
    for _ in range(60):
        L = random_assignment(rng, star, 4, pool=rng.randint(4, 10))
        f = lift_monotone(star, L, lambda g, sub: solve_star(4, sub))
        assert ok(star, L, f)
    k3 = build_family("complete", [3])
    for _ in range(60):
        L = random_assignment(rng, k3, 4, pool=rng.randint(4, 10))
        f = lift_monotone(k3, L, solve_order_bound)
        assert ok(k3, L, f)
    # constant lists are a special case of the same route
    L = build_assignment(k3, [[1, 2, 3, 4]] * 3)
    assert ok(k3, L, lift_monotone(k3, L, solve_order_bound))


def test_lift_monotone_class_sizes():
    rng = random.Random(59)
    g = build_family("star", [4])
    for _ in range(40):
        L = random_assignment(rng, g, 4)
        f = lift_monotone(g, L, lambda gg, sub: solve_star(4, sub))
        counts = Counter(f)
        for c in L.palette:
            q = L.profiles[c].q
            assert q <= counts.get(c, 0) <= q + 1 or L.profiles[c].r == 0


# ---------------------------------------------------------------------------
# repair
# ---------------------------------------------------------------------------

def test_repair_already_proportional():
    g = build_family("complete", [3])
    L = build_assignment(g, [[1, 2, 3]] * 3)
    assert repair_deficiencies(g, L, [1, 2, 3], t=0) == [1, 2, 3]


def test_repair_shift_example():
    g = Graph(3, [])
    L = build_assignment(g, [[1, 2], [1, 2], [1, 3]])
    f = repair_deficiencies(g, L, [2, 2, 3], t=1)
    assert f == [1, 2, 3]
    classes = classify_usage(L, f)
    assert UsageClass.EXCESSIVE not in classes.values()
    assert UsageClass.DEFICIENT not in classes.values()


def test_repair_precondition_errors():
    g = Graph(3, [])
    L = build_assignment(g, [[1, 2], [1, 2], [1, 3]])
    with pytest.raises(PreconditionError):
        repair_deficiencies(g, L, [2, 2, 3], t=0)  # one excessive over budget
    with pytest.raises(PreconditionError):
        repair_deficiencies(g, L, [3, 2, 3], t=1)  # not even list-respecting
    big = Graph(4, [])
    L4 = build_assignment(big, [[1, 2]] * 4)  # eta = 4 = 2k
    with pytest.raises(PreconditionError):
        repair_deficiencies(big, L4, [1, 1, 2, 2], t=0)


def test_repair_random_against_oracle():
    rng = random.Random(61)
    done = 0
    while done < 150:
        n = rng.randint(1, 6)
        k = rng.randint(min(4, n // 2 + 1), 4)  # keeps every eta <= n < 2k
        g = random_graph(rng, n)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 2 * k))
        start = brute_force_no_excess(g, L)
        if start is None:
            continue
        f = repair_deficiencies(g, L, start, t=0)
        assert ok(g, L, f)
        done += 1


# ---------------------------------------------------------------------------
# proper colorings without excess
# ---------------------------------------------------------------------------

def test_color_without_excess_single_vertex():
    g = Graph(1, [])
    L = build_assignment(g, [[1, 2, 3, 4]])
    f = color_without_excess(g, L, 2)
    assert f[0] in L.lists[0]


def test_color_without_excess_cycle():
    g = build_family("cycle", [4])
    rng = random.Random(67)
    for _ in range(150):
        L = random_assignment(rng, g, 4, pool=rng.randint(4, 10))
        f = color_without_excess(g, L, 2)
        assert verify(g, L, f, VerifyMode.PROPER).ok
        assert UsageClass.EXCESSIVE not in classify_usage(L, f).values()


def test_color_without_excess_theorem_slack():
    # the instantiation used by the half-order bound: l = 1 + n/(2*max_degree)
    from fractions import Fraction

    rng = random.Random(71)
    done = 0
    while done < 80:
        n = rng.randint(3, 8)
        g = random_graph(rng, n)
        d = g.max_degree
        if d < 1 or n <= 2 * d:
            continue
        k = d + -(-n // 2)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 2 * k))
        f = color_without_excess(g, L, 1 + Fraction(n, 2 * d))
        assert verify(g, L, f, VerifyMode.PROPER).ok
        assert UsageClass.EXCESSIVE not in classify_usage(L, f).values()
        done += 1


def test_color_without_excess_precondition():
    g = build_family("complete", [4])
    L = build_assignment(g, [[1, 2, 3]] * 4)
    with pytest.raises(PreconditionError):
        color_without_excess(g, L, 2)  # k = 3 < l * max_degree = 6
    with pytest.raises(PreconditionError):
        color_without_excess(g, build_assignment(g, [[1, 2, 3, 4, 5, 6]] * 4), 1.5)


# ---------------------------------------------------------------------------
# complete solvers
# ---------------------------------------------------------------------------

def test_solve_order_bound_examples():
    k3 = build_family("complete", [3])
    L = build_assignment(k3, [[1, 2, 3]] * 3)
    assert solve_order_bound(k3, L) == [1, 2, 3]
    p3 = build_family("path", [3])
    L = build_assignment(p3, [[1, 2]] * 3)
    f = solve_order_bound(p3, L)
    assert f[0] == f[2] != f[1]  # endpoints share, middle differs


def test_solve_order_bound_sunflower():
    p3 = build_family("path", [3])
    L = build_assignment(p3, [[2, 3], [1, 3], [1, 2]])
    f = solve_order_bound(p3, L)
    assert ok(p3, L, f)


def test_solve_order_bound_swap_branch():
    # leftover lists collapse to the common set {5}: forces the swap
    p4 = build_family("path", [4])
    L = build_assignment(p4, [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 5]])
    f = solve_order_bound(p4, L)
    assert ok(p4, L, f)


def test_solve_order_bound_random():
    rng = random.Random(73)
    p3 = build_family("path", [3])
    for _ in range(200):
        L = random_assignment(rng, p3, 2, pool=rng.randint(2, 6))
        f = solve_order_bound(p3, L)
        assert ok(p3, L, f)
        assert exists_proportional_coloring(p3, L)[0]
    for _ in range(150):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        k = rng.randint(n, n + 2)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 2 * k))
        assert ok(g, L, solve_order_bound(g, L))


def test_solve_order_bound_precondition():
    k3 = build_family("complete", [3])
    with pytest.raises(PreconditionError):
        solve_order_bound(k3, build_assignment(k3, [[1, 2]] * 3))


def test_solve_star_examples():
    L = build_assignment(build_family("star", [4]), [[1, 2, 3]] * 5)
    f = solve_star(4, L)
    assert f == [1, 2, 2, 3, 3]
    g = build_family("star", [4])
    assert ok(g, L, f)
    with pytest.raises(PreconditionError):
        solve_star(4, build_assignment(g, [[1, 2]] * 5))  # k = 2 < 3


def test_solve_star_random():
    rng = random.Random(79)
    for m in (2, 3, 4, 5, 6):
        g = build_family("star", [m])
        k = 1 + -(-m // 2)
        for _ in range(120):
            L = random_assignment(rng, g, k, pool=rng.randint(k, 3 * k))
            f = solve_star(m, L)
            assert ok(g, L, f)
            if m <= 4:
                assert exists_proportional_coloring(g, L)[0]


def test_solve_star_adversarial():
    g = build_family("star", [6])
    # every center color plentiful: the double-use construction plus repair
    rows = [[1, 2, 3, 4]] + [[1, 2, 3, 4]] * 6
    L = build_assignment(g, rows)
    assert ok(g, L, solve_star(6, L))
    # one scarce center color: the anchored matching pipeline
    rows = [[1, 2, 3, 9]] + [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5],
                             [2, 3, 4, 5], [1, 3, 4, 5], [1, 2, 3, 5]]
    L = build_assignment(g, rows)
    f = solve_star(6, L)
    assert ok(g, L, f)


def test_solve_components_examples():
    rng = random.Random(83)
    g = disjoint_union([build_family("complete", [2]), Graph(1)])
    for _ in range(120):
        L = random_assignment(rng, g, 2, pool=rng.randint(2, 6))
        assert ok(g, L, solve_components(g, L))
    cliques = build_family("clique_union", [3, 2, 1])
    for _ in range(120):
        L = random_assignment(rng, cliques, 3, pool=rng.randint(3, 9))
        assert ok(cliques, L, solve_components(cliques, L))
    kk = build_family("complete", [3])
    L = build_assignment(kk, [[1, 2, 3]] * 3)
    f = solve_components(kk, L)
    assert sorted(f) == [1, 2, 3]  # constant lists force a bijection


def test_solve_components_augmentation_path():
    # K_2 with k = 3: every color has one nontrivial support component and no
    # isolated vertices, so the potential is positive and augmentation runs
    g = build_family("complete", [2])
    L = build_assignment(g, [[1, 2, 3]] * 2)
    assert assignment_potential(g, L) > 0
    f = solve_components(g, L)
    assert ok(g, L, f)


def test_solve_components_precondition():
    g = build_family("complete", [3])
    with pytest.raises(PreconditionError):
        solve_components(g, build_assignment(g, [[1, 2]] * 3))


def test_component_profiles_mass_identity():
    rng = random.Random(89)
    for _ in range(150):
        n = rng.randint(1, 7)
        k = rng.randint(1, 4)
        g = random_graph(rng, n)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 3 * k))
        for p in component_profiles(g, L):
            assert sum(j * a for j, a in p.counts.items()) == L.eta(p.color)


def test_solve_smallorder():
    rng = random.Random(97)
    p3 = build_family("path", [3])
    for _ in range(80):
        L = random_assignment(rng, p3, 4, pool=rng.randint(4, 10))
        assert ok(p3, L, solve_smallorder(p3, L))
    k2 = build_family("complete", [2])
    L = build_assignment(k2, [[1, 2]] * 2)
    assert ok(k2, L, solve_smallorder(k2, L))  # n <= k branch
    done = 0
    while done < 80:
        n = rng.randint(2, 10)
        g = random_graph(rng, n)
        if g.max_degree < 1:
            continue
        k = g.max_degree + -(-n // 2)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 2 * k))
        assert ok(g, L, solve_smallorder(g, L))
        done += 1


def test_solve_smallorder_precondition():
    g = build_family("path", [4])
    with pytest.raises(PreconditionError):
        solve_smallorder(g, build_assignment(g, [[1, 2, 3]] * 4))  # k < 2 + 2
    with pytest.raises(PreconditionError):
        solve_smallorder(Graph(2), build_assignment(Graph(2), [[1, 2]] * 2))


def test_subgraph_monotonicity_via_padding():
    # a positive verdict for a graph transfers to all its spanning subgraphs:
    # pad any assignment of the subgraph with fresh constant lists
    g = build_family("path", [3])
    k = 2
    assert decide_proportional_k_choosability(g, k).decision
    for h in spanning_subgraphs(g):
        assert decide_proportional_k_choosability(h, k).decision
    rng = random.Random(101)
    for _ in range(40):
        sub_keep = rng.sample(range(3), rng.randint(1, 3))
        from propcolor import induced_subgraph, restrict_assignment

        h, _ = induced_subgraph(g, sub_keep)
        Lh = random_assignment(rng, h, k, pool=rng.randint(k, 3 * k))
        fresh = max(Lh.palette) + 1
        rows = [list(r) for r in Lh.lists]
        pad_row = list(range(fresh, fresh + k))
        full_rows = []
        j = 0
        keep_sorted = sorted(sub_keep)
        for v in range(3):
            if v in keep_sorted:
                full_rows.append(rows[keep_sorted.index(v)])
            else:
                full_rows.append(pad_row)
        L = build_assignment(g, full_rows, k=k)
        found, coloring = exists_proportional_coloring(g, L)
        assert found
        restricted = [coloring[v] for v in keep_sorted]
        assert verify(h, Lh, restricted, VerifyMode.PROPORTIONAL_COLORING).ok
        j += 1


def test_solver_success_always_confirmed_by_oracle():
    rng = random.Random(103)
    for _ in range(60):
        n = rng.randint(2, 5)
        g = random_graph(rng, n)
        k = rng.randint(n, n + 1)
        L = random_assignment(rng, g, k, pool=rng.randint(k, 2 * k))
        f = solve_order_bound(g, L)
        assert ok(g, L, f)
        assert exists_proportional_coloring(g, L)[0]
