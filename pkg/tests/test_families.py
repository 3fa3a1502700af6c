import pytest

from parakit.families import (
    AlgorithmFamily,
    UniformWitness,
    check_one_sided,
    check_strong_monotone,
    or_combine,
    selector,
    verify_strongly_uniform,
    verify_uniform,
)
from parakit.graphlab.algorithms import ds_family, ds_member, vc_family
from parakit.graphlab.graph import path
from parakit.graphlab.params import vc_number
from parakit.graphlab.problems import DS, VC, pair_instance, pair_truncation
from parakit.graphlab.translations import pair_parameterization
from parakit.kernel import Parameter, Parameterization, StepBudget, finite_universe, full_language
from parakit.meter import tick
from parakit.promise import Solver, in_class_nonuniform
from parakit.report import FAIL, PASS

ALL = full_language()


@pytest.fixture(scope="module")
def words():
    u = finite_universe("w", [f"w{i}" for i in range(12)])
    return u, list(u.truncation(12))


def lookup_family(u):
    def member(k):
        def decide(x):
            tick(x.length)
            return u.index_of(x) <= k

        return Solver(f"M{k}", decide)

    return AlgorithmFamily("lookup", member)


@pytest.fixture(scope="module")
def pairs6():
    return pair_truncation(6, 4)


def test_lookup_selector_is_index(words):
    u, xs = words
    table = selector(lookup_family(u), ALL, xs, 12)
    assert [table[x] for x in xs] == list(range(1, 13))
    assert table.unresolved == ()


def test_vc_selector_examples():
    fam = vc_family()
    p3, p7 = pair_instance(path(3), 1), pair_instance(path(7), 3)
    table = selector(fam, VC, [p3, p7], 4)
    assert table[p3] == 1
    assert table[p7] == 3
    assert [fam[k](p7) for k in (1, 2, 3)] == [False, False, True]


def test_selector_lists_unresolved():
    x = pair_instance(path(7), 3)
    table = selector(vc_family(), VC, [x], 2)
    assert table.unresolved == (x,)
    assert table.values == {}


def test_strong_monotone(words, pairs6):
    u, xs = words
    assert check_strong_monotone(lookup_family(u), ALL, xs, 12).status == PASS
    assert check_strong_monotone(vc_family(), VC, pairs6, 4).status == PASS


def test_alternating_family_breaks_monotonicity(words):
    _, xs = words
    fam = AlgorithmFamily("even", lambda k: Solver(f"E{k}", lambda x, k=k: k % 2 == 0))
    report = check_strong_monotone(fam, ALL, xs, 4)
    assert report.status == FAIL
    assert report.witnesses[0]["index"] == 3


def test_or_combine_on_monotone_family_changes_nothing(words):
    u, xs = words
    fam = lookup_family(u)
    combined = or_combine(fam)
    for k in range(1, 13):
        assert [combined[k](x) for x in xs] == [fam[k](x) for x in xs]


def test_or_combined_ds_family_is_strongly_monotone(pairs6):
    fam = ds_family()
    assert check_one_sided(fam, DS, pairs6, 4).status == PASS
    assert check_strong_monotone(or_combine(fam), DS, pairs6, 4).status == PASS


def test_or_combine_cost_is_sum_plus_overhead(pairs6):
    fam = ds_family()
    combined = or_combine(fam)
    for x in list(pairs6)[::7]:
        parts = sum(fam[i].measure(x)[1] for i in range(1, 4))
        assert combined[3].measure(x)[1] <= parts + 3


def test_one_sided_detects_false_yes(words):
    _, xs = words
    fam = AlgorithmFamily("yes", lambda k: Solver("Y", lambda x: True))
    from parakit.kernel import Language

    none = Language("none", lambda x: False)
    assert check_one_sided(fam, none, xs, 2).status == FAIL


def test_vc_uniform_with_lemma_selector(pairs6):
    table = selector(vc_family(), VC, pairs6, 4)
    witness = UniformWitness(vc_family(), table.parameter)
    report = verify_uniform(VC, pair_parameterization(), witness, pairs6, 4)
    assert report.status == PASS
    assert report.tables["unresolved"] == []


def test_constant_selector_with_wrong_first_member_fails(pairs6):
    witness = UniformWitness(vc_family(), Parameter.constant(1))
    report = verify_uniform(VC, pair_parameterization(), witness, pairs6, 4)
    assert report.status == FAIL
    assert report.witnesses[0]["condition"] == "slice-agreement"


def test_single_exact_algorithm(pairs6):
    exact = Solver("exact", lambda x: vc_number(x.value[0]) <= x.value[1])
    witness = UniformWitness(AlgorithmFamily("one", lambda k: exact), Parameter.constant(1))
    assert verify_uniform(VC, pair_parameterization(), witness, pairs6, 4).status == PASS


def test_unbounded_selector_is_inconclusive():
    from parakit.graphlab.problems import graph_parameter, graph_truncation
    from parakit.graphlab.params import degeneracy

    trunc = graph_truncation(6)
    exact = Solver("yes", lambda x: True)
    witness = UniformWitness(AlgorithmFamily("one", lambda k: exact), graph_parameter("deg", lambda g: max(1, degeneracy(g))))
    report = verify_uniform(ALL, Parameterization(Parameter.constant(1)), witness, trunc, 6)
    assert report.status == "inconclusive"
    assert report.witnesses == []


def test_zero_budget_fails_first_instance(words):
    u, xs = words
    witness = UniformWitness(lookup_family(u), Parameter("index", u.index_of), lambda k: k)
    report = verify_strongly_uniform(ALL, Parameterization(Parameter("index", u.index_of)), witness, StepBudget(lambda f, n: 0), xs, 3)
    assert report.status == FAIL
    budget = report.witnesses[-1]
    assert budget["condition"] == "budget" and budget["index"] == 1 and budget["instance"] == xs[0].encoding


def test_lookup_family_linear_budget(words):
    u, xs = words
    idx = Parameter("index", u.index_of)
    witness = UniformWitness(lookup_family(u), idx, lambda k: len(xs))
    report = verify_strongly_uniform(ALL, Parameterization(idx), witness, StepBudget(lambda f, n: f * n), xs, 12)
    assert report.status == PASS
    assert report.tables["budget"]["per_index"][0] == {"k": 1, "f": 12, "measured_max": 3}


def test_missing_budget_rejected(words):
    u, xs = words
    with pytest.raises(ValueError):
        verify_strongly_uniform(ALL, Parameterization(Parameter.constant(1)), UniformWitness(lookup_family(u), Parameter.constant(1)), None, xs, 2)


def test_uniform_pass_implies_nonuniform_pass(pairs6):
    table = selector(vc_family(), VC, pairs6, 4)
    witness = UniformWitness(vc_family(), table.parameter)
    assert verify_uniform(VC, pair_parameterization(), witness, pairs6, 4).passed
    catalog = [witness.family[i] for i in range(1, 5)]
    report = in_class_nonuniform(VC, pair_parameterization(), catalog, pairs6, 4)
    assert report.status == PASS


def test_family_indices_start_at_one():
    with pytest.raises(IndexError):
        vc_family()[0]


def test_ds_member_star_example():
    from parakit.graphlab.graph import star

    assert ds_member(2)(pair_instance(star(4), 1))
