import pytest
from hypothesis import given, settings, strategies as st

from parakit.families import UniformWitness, verify_strongly_uniform, verify_uniform
from parakit.graphlab.algorithms import vc_family
from parakit.graphlab.graph import Graph
from parakit.graphlab.problems import CLIQUE, IS, VC, graph_of, k_of, pair_instance, pair_truncation, pair_universe, solution_size
from parakit.graphlab.translations import PAIRS, complement_reduction, complement_translation, pair_parameterization
from parakit.kernel import Instance, Language, Parameter, Parameterization, ParameterizedProblem
from parakit.meter import tick
from parakit.promise import PromiseReductionFn, TranslationError
from parakit.reductions import (
    UniformReduction,
    UniverseMismatch,
    compose,
    constant_family,
    identity_reduction,
    pullback_solver,
    verify_su_reduction,
    verify_uniform_reduction,
)
from parakit.report import FAIL, PASS
from parakit.suites import coherence_breaking_fixture, is_witness, toy_trials
from parakit.toy import toy_world

REP = pair_parameterization().representative
CLQ = ParameterizedProblem(CLIQUE, pair_parameterization())
IND = ParameterizedProblem(IS, pair_parameterization())
VCP = ParameterizedProblem(VC, pair_parameterization())


@pytest.fixture(scope="module")
def pairs5():
    return pair_truncation(5, 4)


def test_identity_reduction_passes(pairs5):
    report = verify_uniform_reduction(identity_reduction(PAIRS, REP), VCP, VCP, pairs5, 4)
    assert report.status == PASS


def test_complement_reduction_image_table(pairs5):
    report = verify_uniform_reduction(complement_reduction(), CLQ, IND, pairs5, 4)
    assert report.status == PASS
    assert [(row["i"], row["j"]) for row in report.tables["image_slices"]] == [(i, i) for i in range(1, 5)]


def test_image_cap_violation(pairs5):
    report = verify_uniform_reduction(complement_reduction(), CLQ, IND, pairs5, 4, image_cap=lambda i: i - 1)
    assert report.status == FAIL
    assert report.witnesses[0] == {"condition": "image-slice", "index": 1, "found": 1, "image_cap": 0}


def test_membership_failure(pairs5):
    yes = pair_instance(Graph(1), 1)
    const = constant_family("const", PromiseReductionFn("yes", lambda x: yes), REP, PAIRS, PAIRS)
    report = verify_uniform_reduction(const, CLQ, IND, pairs5, 4)
    assert report.status == FAIL
    assert report.witnesses[0]["condition"] == "membership"


def test_coherence_fixture_fails_condition_3(pairs5):
    report = verify_uniform_reduction(coherence_breaking_fixture(), VCP, VCP, pairs5, 4)
    assert report.status == FAIL
    w = report.witnesses[0]
    assert w["condition"] == "coherence"
    assert w["selector"] == 1 and w["index"] == 2
    assert w["expected"] != w["image"]


def test_out_of_universe_image_raises(pairs5):
    bad = constant_family("bad", PromiseReductionFn("bad", lambda x: Instance("###")), REP, PAIRS, PAIRS)
    with pytest.raises(TranslationError):
        verify_uniform_reduction(bad, VCP, VCP, pairs5, 2, target_universe=pair_universe([Graph(1)], 3))


def test_compose_identities(pairs5):
    ident = identity_reduction(PAIRS, REP)
    both = compose(ident, ident)
    for x in pairs5:
        assert both.selector(x) == REP(x)
        assert all(both[i](x) == x for i in range(1, 5))


def test_double_complement_is_pointwise_identity(pairs5):
    there, back = complement_reduction("c->i"), complement_reduction("i->c")
    both = compose(there, back)
    assert verify_uniform_reduction(both, CLQ, CLQ, pairs5, 4).status == PASS
    for x in pairs5:
        assert both.selector(x) == max(REP(x), REP(there[REP(x)](x)))
        y = both[3](x)
        assert graph_of(y) == graph_of(x) and k_of(y) == k_of(x)


def test_compose_checks_universes():
    a = identity_reduction("A", REP)
    b = identity_reduction("B", REP)
    with pytest.raises(UniverseMismatch):
        compose(a, b)


def test_indices_start_at_one():
    with pytest.raises(IndexError):
        complement_reduction()[0]


def test_hundred_toy_compositions():
    report = toy_trials(0, 100)
    assert report.status == PASS
    assert report.tables["trials"] == 100


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_toy_composition_property(seed):
    w = toy_world(seed)
    ua, ub, uc = w.universes
    pa, pb, pc = w.problems
    ta, tb = ua.truncation(ua.size), ub.truncation(ub.size)
    assert verify_uniform_reduction(w.first, pa, pb, ta, 4, target_universe=ub).ok
    assert verify_uniform_reduction(w.second, pb, pc, tb, 4, target_universe=uc).ok
    both = compose(w.first, w.second)
    assert verify_uniform_reduction(both, pa, pc, ta, 4, target_universe=uc).ok


def test_first_selector_alone_is_not_enough():
    # dropping the second selector from the composite breaks some worlds
    broken = 0
    for seed in range(100):
        w = toy_world(seed)
        ua, _, uc = w.universes
        pa, _, pc = w.problems
        good = compose(w.first, w.second)
        naive = UniformReduction("naive", good.family, w.first.selector, good.source, good.target)
        report = verify_uniform_reduction(naive, pa, pc, ua.truncation(ua.size), 4, target_universe=uc)
        broken += report.status == FAIL
    assert broken > 0


# -- strongly uniform --------------------------------------------------------


def test_complement_is_strongly_uniform(pairs5):
    report = verify_su_reduction(complement_reduction(), CLQ, IND, pairs5, 4)
    assert report.status == PASS
    assert report.tables["budget"]["exponent"] == 2


def test_zero_bound_fails(pairs5):
    r = constant_family("c", complement_translation(), REP, PAIRS, PAIRS, bound=lambda k: 0, exponent=2)
    report = verify_su_reduction(r, CLQ, IND, pairs5, 4)
    assert report.status == FAIL
    assert report.witnesses[-1]["condition"] == "budget"


def test_missing_budget_rejected(pairs5):
    with pytest.raises(ValueError):
        verify_su_reduction(identity_reduction(PAIRS, REP), VCP, VCP, pairs5, 2)


def copies_reduction() -> UniformReduction:
    """r_k writes min(k, kappa(x)) copies of x separated by '|'; one unit per symbol copied."""

    def member(k):
        def translate(x):
            m = min(k, REP(x))
            tick(m * x.length)
            return Instance("|".join([x.encoding] * m))

        return PromiseReductionFn(f"copy{k}", translate)

    return UniformReduction("copies", member, REP, PAIRS, "copies", bound=lambda k: k, exponent=1)


def test_padded_copies_budget_f_k(pairs5):
    def first(w):
        return Instance(w.encoding.split("|")[0])

    target = ParameterizedProblem(
        Language("copies[VC]", lambda w: VC(first(w))),
        Parameterization(Parameter("copies", lambda w: w.encoding.count("|") + 1)),
    )
    report = verify_su_reduction(copies_reduction(), VCP, target, pairs5, 4)
    assert report.status == PASS
    assert [row["measured_max"] for row in report.tables["budget"]["per_index"]][:2] == [
        max(x.length for x in pairs5),
        max(min(2, REP(x)) * x.length for x in pairs5),
    ]


# -- pullback ----------------------------------------------------------------


def test_pullback_through_complement(pairs5):
    R, W = complement_reduction(), is_witness()
    P = pullback_solver(R, W)
    assert verify_uniform(CLIQUE, pair_parameterization(), P, pairs5, 4).status == PASS
    assert [P.bound(k) for k in range(1, 5)] == [R.bound(k) * W.bound(k) for k in range(1, 5)]
    assert P.budget.exponent == R.exponent + W.budget.exponent == 4
    assert verify_strongly_uniform(CLIQUE, pair_parameterization(), P, None, pairs5, 4).status == PASS


def test_pullback_cost_decomposes(pairs5):
    R, W = complement_reduction(), is_witness()
    P = pullback_solver(R, W)
    for x in list(pairs5)[::5]:
        for k in (1, 3):
            y, c_r = R[k].measure(x)
            _, c_m = W.family[k].measure(y)
            assert P.family[k].measure(x)[1] == c_r + c_m + 1


def test_pullback_through_identity(pairs5):
    base = UniformWitness(vc_family(), solution_size())
    pulled = pullback_solver(identity_reduction(PAIRS, solution_size()), base)
    for x in pairs5:
        assert pulled.selector(x) == base.selector(x)
        assert pulled.family[2](x) == base.family[2](x)
    assert pulled.bound is None and pulled.budget is None
