import pytest
from hypothesis import given, strategies as st

from parakit.bridge import (
    EMPTY_WORD,
    DFProblem,
    FGProblem,
    df_to_fg,
    fg_to_df,
    fpt_to_fptprime,
    fptred_to_su,
    pad,
    param_equiv,
    slice_union,
    unpad,
)
from parakit.families import verify_strongly_uniform, verify_uniform
from parakit.graphlab.algorithms import vc_branch
from parakit.graphlab.graph import complete, path
from parakit.graphlab.params import arboricity, degeneracy, vc_number
from parakit.graphlab.problems import (
    CLIQUE,
    IS,
    VC,
    decode_graph_instance,
    graph_instance,
    graph_parameter,
    graph_truncation,
    pair_instance,
    pair_truncation,
    read_pair,
    solution_size,
)
from parakit.graphlab.translations import PAIRS, complement_translation, pair_parameterization
from parakit.kernel import Instance, Language, Parameter, Parameterization, ParameterizedProblem
from parakit.promise import PromiseProblem, Solver, check_solves
from parakit.reductions import verify_su_reduction
from parakit.report import FAIL, INCONCLUSIVE, PASS
from strategies import graphs

VC_PAIRS = DFProblem("VC-pairs", lambda x, k: vc_number(x.value) <= k, decode_graph_instance)
DEG = graph_parameter("degeneracy", degeneracy)
ARB = graph_parameter("arboricity", arboricity)


def vc_exact() -> Solver:
    def decide(x):
        g, k = read_pair(x)
        return vc_branch(g, k)

    return Solver("vc-exact", decide)


def test_p3_example():
    F = df_to_fg(VC_PAIRS)
    w = pad(graph_instance(path(3)), 1)
    assert w.encoding == "Bg#1"
    assert F.language(w)
    assert F.kappa(w) == 1


@pytest.mark.parametrize("word", ["##", "", "Bg", "Bg#12", "zz#1"])
def test_malformed_words(word):
    F = df_to_fg(VC_PAIRS)
    assert F.kappa(Instance(word)) == 1
    assert not F.language(Instance(word))


def test_pad_rejects_negative():
    with pytest.raises(ValueError):
        pad(graph_instance(path(2)), -1)


@given(graphs(max_n=7), st.integers(0, 6))
def test_df_round_trip(g, k):
    x = graph_instance(g)
    w = pad(x, k)
    back = unpad(w.encoding, decode_graph_instance)
    assert back is not None and back[0] == x and back[1] == k
    D2 = fg_to_df(df_to_fg(VC_PAIRS))
    F = df_to_fg(VC_PAIRS)
    assert F.language(w) == VC_PAIRS(x, k)
    assert D2(w, k) == VC_PAIRS(x, k)
    assert not D2(w, k + 1)


def test_fg_to_df_definition():
    L = Language("even-order", lambda x: x.value.n % 2 == 0)
    two = Parameter.constant(2, "two")
    D = fg_to_df(FGProblem(L, two, decode_graph_instance))
    x = graph_instance(path(4))
    assert D(x, 2) and not D(x, 3)
    y = graph_instance(path(3))
    assert not any(D(y, k) for k in range(5))


def test_fg_df_fg_preserves_membership():
    F = FGProblem(Language("has-edge", lambda x: x.value.m > 0), DEG, decode_graph_instance)
    F2 = df_to_fg(fg_to_df(F))
    for x in graph_truncation(5):
        for k in range(4):
            w = pad(x, k)
            assert F2.language(w) == (F.language(x) and k == F.kappa(x))
            assert F2.kappa(w) == k


def test_second_formalization_of_vc():
    D = fg_to_df(FGProblem(VC, solution_size(), lambda w: Instance(w)))
    for x in pair_truncation(4, 3):
        g, k = x.value
        assert D(x, max(1, k)) == (vc_number(g) <= k)


# -- slice union -------------------------------------------------------------


def slice_solver(i):
    def decide(x):
        g, k = read_pair(x)
        return max(1, k) == i and vc_branch(g, k)

    return Solver(f"s{i}", decide)


def kappa_at_most(c):
    return Language(f"k<={c}", lambda x: solution_size()(x) <= c)


@pytest.fixture(scope="module")
def pairs6():
    return pair_truncation(6, 4)


def test_slice_union_c0_rejects_everything(pairs6):
    F = FGProblem(VC, solution_size(), lambda w: Instance(w))
    union = slice_union(F, 0, slice_solver)
    assert not any(union(x) for x in pairs6)
    report = check_solves(union, PromiseProblem(VC, Language("none", lambda x: False)), pairs6)
    assert report.status == PASS and report.tables["checked"] == 0


def test_slice_union_c2(pairs6):
    F = FGProblem(VC, solution_size(), lambda w: Instance(w))
    union = slice_union(F, 2, {1: slice_solver(1), 2: slice_solver(2)})
    assert check_solves(union, PromiseProblem(VC, kappa_at_most(2)), pairs6).status == PASS
    # outside the promise the union is unconstrained; here it rejects k = 3 yes-instances
    assert check_solves(union, PromiseProblem(VC, kappa_at_most(3)), pairs6).status == FAIL


# -- fpt to fpt' -------------------------------------------------------------


def test_fpt_to_fptprime_vc(pairs6):
    W = fpt_to_fptprime(vc_exact(), solution_size(), lambda k: 2 ** (k + 1) + 1, c=2, d=1)
    report = verify_strongly_uniform(VC, Parameterization(solution_size()), W, None, pairs6, 4)
    assert report.status == PASS


def test_over_budget_solver_still_uniform(pairs6):
    W = fpt_to_fptprime(vc_exact(), solution_size(), lambda k: 0, c=0, d=0)
    assert verify_uniform(VC, Parameterization(solution_size()), W, pairs6, 4).status == PASS
    assert verify_strongly_uniform(VC, Parameterization(solution_size()), W, None, pairs6, 4).status == FAIL


def test_guard_rejects_beyond_index():
    x = pair_instance(path(7), 3)
    W = fpt_to_fptprime(vc_exact(), solution_size(), lambda k: 1, c=1)
    assert [W.family[i](x) for i in (1, 2, 3)] == [False, False, True]
    report = verify_uniform(VC, Parameterization(solution_size()), W, [x], 2)
    assert report.tables["unresolved"] == [x.encoding]
    no = pair_instance(complete(5), 3)  # vc(K5) = 4
    assert verify_uniform(VC, Parameterization(solution_size()), W, [no], 2).tables["unresolved"] == []


# -- fpt-reduction to strongly uniform ----------------------------------------


def test_fptred_to_su_complement():
    pairs = pair_truncation(5, 4)
    rep = pair_parameterization().representative
    R = fptred_to_su(complement_translation(), rep, lambda k: 1, lambda i: i, 2, PAIRS, PAIRS)
    src = ParameterizedProblem(CLIQUE, pair_parameterization())
    tgt = ParameterizedProblem(IS, pair_parameterization())
    report = verify_su_reduction(R, src, tgt, pairs, 4)
    assert report.status == PASS
    assert all(row["j"] <= row["i"] for row in report.tables["image_slices"])
    assert R.bound(3) == 2
    big = pair_instance(path(3), 4)
    assert R[2](big) == EMPTY_WORD
    assert R[5](big) == R[rep(big)](big)


# -- equivalence -------------------------------------------------------------


def test_degeneracy_arboricity_equivalent():
    trunc = graph_truncation(6)
    report = param_equiv(DEG, ARB, trunc, 6)
    assert report.status == PASS
    forward = [row["f"] for row in report.tables["forward"]["rows"]]
    backward = [row["f"] for row in report.tables["backward"]["rows"]]
    assert all(f <= max(0, 2 * a - 1) for a, f in enumerate(forward))
    assert all(f <= d for d, f in enumerate(backward))


def test_rescaled_parameter_equivalent():
    trunc = graph_truncation(6)
    assert param_equiv(DEG, DEG.then(lambda v: 2**v, "2^deg"), trunc, 32).status == PASS


def test_degeneracy_not_equivalent_to_constant():
    trunc = graph_truncation(6)
    report = param_equiv(DEG, Parameter.constant(1), trunc, 6)
    assert report.status == INCONCLUSIVE
    assert report.tables["backward"]["trend"] is False
    assert report.tables["forward"]["trend"] is True
