"""Named verification suites over a graph corpus.

A suite is a list of named checks; each check builds one
:class:`VerificationReport`. Checks are independent and may run in
parallel, but reports always come back in declaration order.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .bridge import DFProblem, FGProblem, df_to_fg, fg_to_df, fpt_to_fptprime, fptred_to_su, pad, param_equiv, slice_union, unpad
from .budget import ds_budget
from .families import UniformWitness, check_strong_monotone, selector, verify_strongly_uniform, verify_uniform
from .graphlab.algorithms import ds_member, is_family, vc_branch, vc_family, vc_member
from .graphlab.canon import graphs_of_order
from .graphlab.graph import Graph, decode_graph6, encode_graph6
from .graphlab.oracles import is_planar, oracle_hamiltonian, oracle_iso
from .graphlab.params import arboricity, degeneracy, ds_number, hadwiger, kij_index, treewidth
from .graphlab.problems import (
    CLIQUE,
    IS,
    VC,
    decode_graph_instance,
    graph_of,
    graph_parameter,
    graph_universe,
    graphs_as_truncation,
    k_of,
    pair_instance,
    pairs_as_truncation,
    read_pair,
    solution_size,
)
from .graphlab.translations import PAIRS, complement_reduction, complement_translation, pair_parameterization
from .graphlab.wl import refines, stable_coloring
from .kernel import (
    Instance,
    Language,
    Parameter,
    Parameterization,
    ParameterizedProblem,
    canonical_all,
    canonical_fin,
    combine,
    join,
    meet,
    param_leq,
    param_slice,
    poly_budget,
)
from .promise import PromiseProblem, PromiseReductionFn, Solver, check_solves, in_class_nonuniform
from .reductions import UniformReduction, compose, identity_reduction, pullback_solver, verify_su_reduction, verify_uniform_reduction
from .report import FAIL, PASS, VerificationReport, combine_status, stopwatch
from .toy import toy_world

MAX_WITNESSES = 20

# unlabelled graphs per order, 0..8
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)

Check = tuple[str, Callable[[], VerificationReport]]


@dataclass(frozen=True)
class RunConfig:
    """Truncation caps and run options.

    ``max_n`` bounds graph order, ``max_param`` the parameter value tables
    run to, ``max_index`` the family index. ``slack=None`` lets budget checks
    calibrate their own slack.
    """

    graphs: tuple[Graph, ...] = ()
    max_n: int = 7
    max_param: int = 6
    max_index: int = 4
    slack: float | None = None
    seed: int = 0
    trials: int = 100
    inject_fault: bool = False
    jobs: int = 1
    extra: dict = field(default_factory=dict, compare=False)

    def upto(self, n: int) -> list[Graph]:
        limit = min(n, self.max_n)
        return [g for g in self.graphs if g.n <= limit]


def _report(check_id: str, violations: Sequence[dict], tables: dict | None = None) -> VerificationReport:
    tables = dict(tables or {})
    tables["violations"] = len(violations)
    return VerificationReport(check_id, FAIL if violations else PASS, list(violations[:MAX_WITNESSES]), tables)


def run_checks(checks: Sequence[Check], jobs: int = 1) -> list[VerificationReport]:
    def run(check: Check) -> VerificationReport:
        name, fn = check
        with stopwatch() as clock:
            report = fn()
        report.id = name
        report.millis = clock[0]
        return report

    if jobs <= 1:
        return [run(c) for c in checks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, checks))


# ---------------------------------------------------------------------------
# parameters on graph instances

HAMILTONIAN = Language("Hamiltonian", lambda x: oracle_hamiltonian(graph_of(x)), oracle=True)

DEG = graph_parameter("degeneracy", degeneracy)
TW = graph_parameter("treewidth", treewidth)
ARB = graph_parameter("arboricity", arboricity)
KIJ = graph_parameter("kij", kij_index)
HAD = graph_parameter("hadwiger", hadwiger)

CLAIMED_BOUNDS: tuple[tuple[Parameter, Parameter, Callable[[int], int], str], ...] = (
    (DEG, TW, lambda i: i, "i"),
    (KIJ, DEG, lambda i: i + 1, "i+1"),
    (ARB, DEG, lambda i: i, "i"),
)

COMBINATION_BOUNDS = {
    ("sum", "max"): (lambda i: 2 * i, "2i"),
    ("max", "sum"): (lambda i: i, "i"),
    ("product", "max"): (lambda i: i * i, "i^2"),
    ("max", "product"): (lambda i: i, "i"),
    ("sum", "product"): (lambda i: 2 * i, "2i"),
    ("product", "sum"): (lambda i: i * i, "i^2"),
}


def brute_maxima(kappa: Parameter, tau: Parameter, instances: Iterable[Instance], cap: int) -> list[int | None]:
    """``max{kappa(x) : tau(x) <= i}`` for i = 0..cap by direct scan, no stage bookkeeping."""
    pairs = [(tau(x), kappa(x)) for x in instances]
    return [max((k for t, k in pairs if t <= i), default=None) for i in range(cap + 1)]


def leq_check(kappa: Parameter, tau: Parameter, instances, cap: int, bound: Callable[[int], int], label: str) -> VerificationReport:
    table = param_leq(kappa, tau, instances, cap)
    expected = brute_maxima(kappa, tau, instances, cap)
    violations: list[dict] = []
    if table.trend:
        violations.append({"condition": "growth-trend", "levels": list(table.growing)})
    for i, (got, want) in enumerate(zip(table.rows, expected)):
        if got != want:
            violations.append({"condition": "table-mismatch", "i": i, "table": got, "brute_force": want})
    for i, v, b in table.violations(bound):
        violations.append({"condition": "claimed-bound", "i": i, "value": v, "bound": b})
    return _report("", violations, {"bound": label, "table": table.as_dict()})


# ---------------------------------------------------------------------------
# facts


def _vc_exact() -> Solver:
    def decide(x: Instance) -> bool:
        g, k = read_pair(x)
        return vc_branch(g, k)

    return Solver("vc-exact", decide)


def _vc_slice_solver(i: int) -> Solver:
    def decide(x: Instance) -> bool:
        g, k = read_pair(x)
        return max(1, k) == i and vc_branch(g, k)

    return Solver(f"vc-slice{i}", decide)


def facts_checks(cfg: RunConfig) -> list[Check]:
    cap = cfg.max_param
    g6 = graphs_as_truncation(cfg.upto(6))
    g5 = graphs_as_truncation(cfg.upto(5))
    checks: list[Check] = []

    for kappa, tau, bound, label in CLAIMED_BOUNDS:
        checks.append((f"facts:leq:{kappa.name}<={tau.name}", lambda k=kappa, t=tau, b=bound, l=label: leq_check(k, t, g6, cap, b, l)))

    modes = {m: combine(DEG, TW, m) for m in ("sum", "product", "max")}
    for (a, b), (bound, label) in COMBINATION_BOUNDS.items():
        checks.append((f"facts:combination:{a}<={b}", lambda a=a, b=b, f=bound, l=label: leq_check(modes[a], modes[b], g5, cap, f, l)))

    checks.append(("facts:equiv:degeneracy~arboricity", lambda: param_equiv(DEG, ARB, g6, cap)))
    checks.append(("facts:equiv:degeneracy~2^degeneracy", lambda: param_equiv(DEG, DEG.then(lambda v: 2**v, "2^degeneracy"), g6, 2**cap)))
    checks.append(("facts:non-equiv:degeneracy~const1", lambda: _non_equiv(DEG, Parameter.constant(1), g6, cap)))

    checks.append(("facts:bridge:round-trip", lambda: _round_trips(cfg)))
    checks.append(("facts:bridge:graph6", lambda: _graph6_round_trip(cfg)))
    checks.append(("facts:bridge:fpt-to-fptprime", lambda: _fpt_to_fptprime_vc(cfg)))
    checks.append(("facts:bridge:slice-union", lambda: _slice_union_vc(cfg)))
    checks.append(("facts:bridge:fptred-to-su", lambda: _fptred_to_su(cfg)))
    return checks


def _non_equiv(kappa: Parameter, tau: Parameter, instances, cap: int) -> VerificationReport:
    """Expected shape: tau bounded by kappa, kappa trending against tau."""
    rep = param_equiv(kappa, tau, instances, cap)
    forward = rep.tables["forward"]
    backward = rep.tables["backward"]
    violations = []
    if backward["trend"]:
        violations.append({"condition": "unexpected-trend", "kappa": tau.name, "tau": kappa.name})
    if not forward["trend"]:
        violations.append({"condition": "missing-trend", "kappa": kappa.name, "tau": tau.name})
    return _report("", violations, rep.tables)


def _round_trips(cfg: RunConfig) -> VerificationReport:
    graphs = cfg.upto(cfg.max_n)
    pairs = list(pairs_as_truncation(graphs, cfg.max_index))[:1000]
    D = DFProblem("VC-pairs", lambda x, k: VC(pair_instance(graph_of(x), k)), decode_graph_instance)
    F = df_to_fg(D)
    D2 = fg_to_df(F)
    violations = []
    for p in pairs:
        g, k = graph_of(p), k_of(p)
        x = Instance(encode_graph6(g), g)
        w = pad(x, k)
        back = unpad(w.encoding, decode_graph_instance)
        if w.encoding != p.encoding or back is None or back[0].encoding != x.encoding or back[1] != k:
            violations.append({"condition": "encoding", "instance": p.encoding})
        elif D(x, k) != D2(w, k) or D(x, k) != F.language(w) or F.kappa(w) != k:
            violations.append({"condition": "df-fg-df", "instance": p.encoding})

    H = FGProblem(HAMILTONIAN, DEG, decode_graph_instance)
    H2 = df_to_fg(fg_to_df(H))
    checked = 0
    for g in graphs[: max(1, len(pairs) // (cfg.max_index + 1))]:
        x = Instance(encode_graph6(g), g)
        for k in range(cfg.max_index + 1):
            checked += 1
            w = pad(x, k)
            if H2.language(w) != (H.language(x) and k == H.kappa(x)) or H2.kappa(w) != k:
                violations.append({"condition": "fg-df-fg", "instance": w.encoding})
    return _report("", violations, {"pairs": len(pairs), "fg_pairs": checked})


def _graph6_round_trip(cfg: RunConfig) -> VerificationReport:
    violations = []
    by_order = Counter(g.n for g in cfg.graphs)
    for g in cfg.graphs:
        w = encode_graph6(g)
        if decode_graph6(w) != g or encode_graph6(decode_graph6(w)) != w:
            violations.append({"condition": "round-trip", "instance": w})
    counts = []
    for n in range(1, cfg.max_n + 1):
        enumerated = len(graphs_of_order(n))
        known = KNOWN_COUNTS[n] if n < len(KNOWN_COUNTS) else None
        counts.append({"n": n, "corpus": by_order.get(n, 0), "enumerated": enumerated, "known": known})
        if by_order.get(n, 0) != enumerated or (known is not None and enumerated != known):
            violations.append({"condition": "count", "n": n, "corpus": by_order.get(n, 0), "enumerated": enumerated, "known": known})
    return _report("", violations, {"graphs": len(cfg.graphs), "counts": counts})


def _fpt_to_fptprime_vc(cfg: RunConfig) -> VerificationReport:
    pairs = pairs_as_truncation(cfg.upto(6), cfg.max_index)
    # the branching tree has fewer than 2^(k+1) nodes, each scanning at most n <= |x|^2 vertices
    W = fpt_to_fptprime(_vc_exact(), solution_size(), lambda k: 2 ** (k + 1) + 1, c=2, d=1, slack=cfg.slack or 1.0)
    return verify_strongly_uniform(VC, Parameterization(solution_size()), W, None, pairs, cfg.max_index)


def _slice_union_vc(cfg: RunConfig) -> VerificationReport:
    pairs = pairs_as_truncation(cfg.upto(6), cfg.max_index)
    F = FGProblem(VC, solution_size(), lambda w: Instance(w))
    reports = []
    for c in (0, 1, 2):
        union = slice_union(F, c, _vc_slice_solver)
        promise = PromiseProblem(VC, _kappa_at_most(solution_size(), c))
        reports.append(check_solves(union, promise, pairs, f"slice-union:c={c}"))
    # a slice solver decides its slice as a plain language, hence also the promise problem
    for i in (1, 2):
        promise = PromiseProblem(_slice_language(i), _kappa_at_most(solution_size(), i))
        reports.append(check_solves(_vc_slice_solver(i), promise, pairs, f"slice-solver:{i}"))
    witnesses = [w for r in reports for w in r.witnesses]
    return VerificationReport("", combine_status(*(r.status for r in reports)), witnesses, {"parts": [{"id": r.id, "status": r.status, "checked": r.tables["checked"]} for r in reports]})


def _kappa_at_most(kappa: Parameter, c: int) -> Language:
    return Language(f"{kappa.name}<={c}", lambda x: kappa(x) <= c)


def _slice_language(i: int) -> Language:
    return Language(f"VC-slice{i}", lambda x: VC(x) and max(1, k_of(x)) == i, oracle=True)


def _fptred_to_su(cfg: RunConfig) -> VerificationReport:
    pairs = pairs_as_truncation(cfg.upto(5), cfg.max_index)
    rep = pair_parameterization().representative
    R = fptred_to_su(complement_translation(), rep, lambda k: 1, lambda i: i, 2, PAIRS, PAIRS, slack=cfg.slack or 1.0)
    src = ParameterizedProblem(CLIQUE, pair_parameterization())
    tgt = ParameterizedProblem(IS, pair_parameterization())
    return verify_su_reduction(R, src, tgt, pairs, cfg.max_index)


# ---------------------------------------------------------------------------
# selectors from families (suite "lemma1")


def lemma1_checks(cfg: RunConfig) -> list[Check]:
    cap = cfg.max_index
    pairs = pairs_as_truncation(cfg.upto(6), cap)
    fam = vc_family()
    param = Parameterization(solution_size())
    state: dict = {}

    def table():
        if "sel" not in state:
            state["sel"] = selector(fam, VC, pairs, cap)
        return state["sel"]

    def minimal() -> VerificationReport:
        sel = table()
        violations = [{"condition": "unresolved", "instance": x.encoding} for x in sel.unresolved]
        members = {i: fam[i] for i in range(1, cap + 1)}
        dist = Counter()
        for x, s in sel.values.items():
            dist[s] += 1
            truth = VC(x)
            if members[s](x) != truth:
                violations.append({"condition": "selected-wrong", "instance": x.encoding, "index": s})
            for i in range(1, s):
                if members[i](x) == truth:
                    violations.append({"condition": "not-minimal", "instance": x.encoding, "index": i, "selected": s})
                    break
        return _report("", violations, {"selector_values": [{"k": k, "count": dist[k]} for k in sorted(dist)]})

    def agreement() -> VerificationReport:
        sel = table()
        return verify_uniform(VC, param, UniformWitness(fam, sel.parameter), pairs, cap)

    return [
        ("lemma1:selector-minimal", minimal),
        ("lemma1:slice-agreement", agreement),
        ("lemma1:strong-monotone", lambda: check_strong_monotone(fam, VC, pairs, cap)),
        ("lemma1:nonuniform", lambda: in_class_nonuniform(VC, param, [vc_member(i) for i in range(1, cap + 1)], pairs, cap)),
    ]


# ---------------------------------------------------------------------------
# composition of reductions (suite "lemma2")


def coherence_breaking_fixture() -> UniformReduction:
    """Identity on VC pairs except that r_i for i >= 2 reverses vertex labels."""

    def member(i: int) -> PromiseReductionFn:
        if i == 1:
            return PromiseReductionFn("id", lambda x: x)

        def flip(x: Instance) -> Instance:
            g, k = graph_of(x), k_of(x)
            return pair_instance(g.relabel(list(reversed(range(g.n)))), k)

        return PromiseReductionFn(f"reverse{i}", flip)

    return UniformReduction("coherence-break", member, pair_parameterization().representative, PAIRS, PAIRS)


def toy_trials(seed: int, trials: int, cap: int = 4) -> VerificationReport:
    violations = []
    for s in range(seed, seed + trials):
        w = toy_world(s, cap=cap)
        ua, ub, uc = w.universes
        pa, pb, pc = w.problems
        ta, tb = ua.truncation(ua.size), ub.truncation(ub.size)
        r1 = verify_uniform_reduction(w.first, pa, pb, ta, cap, target_universe=ub)
        r2 = verify_uniform_reduction(w.second, pb, pc, tb, cap, target_universe=uc)
        rc = verify_uniform_reduction(compose(w.first, w.second), pa, pc, ta, cap, target_universe=uc)
        if not (r1.ok and r2.ok and rc.ok):
            violations.append({"seed": s, "first": r1.status, "second": r2.status, "composite": rc.status, "witnesses": rc.witnesses[:1]})
    return _report("", violations, {"seeds": [seed, seed + trials - 1], "trials": trials})


def lemma2_checks(cfg: RunConfig) -> list[Check]:
    cap = cfg.max_index
    pairs = pairs_as_truncation(cfg.upto(5), cap)
    clique = ParameterizedProblem(CLIQUE, pair_parameterization())
    indep = ParameterizedProblem(IS, pair_parameterization())
    there = complement_reduction("clique->is")
    back = complement_reduction("is->clique")
    both = compose(there, back)

    def identity_check() -> VerificationReport:
        violations = []
        for x in pairs:
            k1 = there.selector(x)
            expect = max(k1, back.selector(there[max(1, k1)](x)))
            if both.selector(x) != expect:
                violations.append({"condition": "selector", "instance": x.encoding})
            for i in range(1, cap + 1):
                y = both[i](x)
                if graph_of(y) != graph_of(x) or k_of(y) != k_of(x):
                    violations.append({"condition": "not-identity", "instance": x.encoding, "index": i, "image": y.encoding})
                    break
        return _report("", violations, {"instances": len(pairs)})

    checks: list[Check] = [
        ("lemma2:clique->is", lambda: verify_uniform_reduction(there, clique, indep, pairs, cap)),
        ("lemma2:is->clique", lambda: verify_uniform_reduction(back, indep, clique, pairs, cap)),
        ("lemma2:composite", lambda: verify_uniform_reduction(both, clique, clique, pairs, cap)),
        ("lemma2:composite-identity", identity_check),
        ("lemma2:toy-composition", lambda: toy_trials(cfg.seed, cfg.trials)),
    ]
    if cfg.inject_fault:
        vc = ParameterizedProblem(VC, pair_parameterization())
        checks.append(("lemma2:fixture:coherence-break", lambda: verify_uniform_reduction(coherence_breaking_fixture(), vc, vc, pairs, cap)))
    return checks


# ---------------------------------------------------------------------------
# closure under reductions (suite "closure")


def is_witness() -> UniformWitness:
    """B_k with selector max(1, k'); budget k * |x|^2, calibrated at desk scale."""
    return UniformWitness(is_family(), solution_size(), lambda k: k, poly_budget(2))


def closure_checks(cfg: RunConfig) -> list[Check]:
    cap = cfg.max_index
    pairs = pairs_as_truncation(cfg.upto(5), cap)
    clique = ParameterizedProblem(CLIQUE, pair_parameterization())
    indep = ParameterizedProblem(IS, pair_parameterization())
    R = complement_reduction("clique->is")
    W = is_witness()
    P = pullback_solver(R, W)

    def cost_split() -> VerificationReport:
        violations = []
        for x in pairs:
            for k in range(1, cap + 1):
                y, c_r = R[k].measure(x)
                _, c_m = W.family[k].measure(y)
                _, total = P.family[k].measure(x)
                if total != c_r + c_m + 1:
                    violations.append({"instance": x.encoding, "index": k, "total": total, "reduction": c_r, "solver": c_m})
        return _report("", violations, {"overhead": 1})

    def identity_pullback() -> VerificationReport:
        vc_pairs = pairs_as_truncation(cfg.upto(5), cap)
        base = UniformWitness(vc_family(), solution_size())
        pulled = pullback_solver(identity_reduction(PAIRS, solution_size()), base)
        violations = []
        for x in vc_pairs:
            if pulled.selector(x) != base.selector(x):
                violations.append({"condition": "selector", "instance": x.encoding})
            for k in range(1, cap + 1):
                if pulled.family[k](x) != base.family[k](x):
                    violations.append({"condition": "answer", "instance": x.encoding, "index": k})
        return _report("", violations)

    return [
        ("closure:is-witness", lambda: verify_strongly_uniform(IS, pair_parameterization(), W, None, pairs, cap)),
        ("closure:complement-su", lambda: verify_su_reduction(R, clique, indep, pairs, cap)),
        ("closure:pullback-uniform", lambda: verify_uniform(CLIQUE, pair_parameterization(), P, pairs, cap)),
        ("closure:pullback-strongly-uniform", lambda: verify_strongly_uniform(CLIQUE, pair_parameterization(), P, None, pairs, cap)),
        ("closure:cost-decomposition", cost_split),
        ("closure:identity-pullback", identity_pullback),
    ]


# ---------------------------------------------------------------------------
# lattice


def lattice_parameters(cfg: RunConfig) -> list[Parameter]:
    graphs = cfg.upto(5)
    index = {encode_graph6(g): i for i, g in enumerate(graphs, 1)}
    return [DEG, TW, ARB, KIJ, HAD, Parameter.constant(1, "const1"), Parameter("index", lambda x: index[x.encoding])]


def _values(params: Sequence[Parameter], instances: Sequence[Instance]) -> dict[str, list[int]]:
    return {p.name: [p(x) for x in instances] for p in params}


def lattice_checks(cfg: RunConfig) -> list[Check]:
    cap = cfg.max_param
    graphs = cfg.upto(5)
    trunc = graphs_as_truncation(graphs)
    params = lattice_parameters(cfg)
    ps = [Parameterization(p) for p in params]

    def laws(kind: str) -> VerificationReport:
        reports = []
        for i, p in enumerate(ps):
            if kind == "idempotence":
                reports.append(param_equiv(meet(p, p).representative, p.representative, trunc, cap))
                reports.append(param_equiv(join(p, p).representative, p.representative, trunc, cap))
                continue
            for q in ps[i:] if kind == "commutativity" else ps:
                if kind == "absorption":
                    reports.append(param_equiv(meet(p, join(p, q)).representative, p.representative, trunc, cap))
                    reports.append(param_equiv(join(p, meet(p, q)).representative, p.representative, trunc, cap))
                else:
                    reports.append(param_equiv(meet(p, q).representative, meet(q, p).representative, trunc, cap))
                    reports.append(param_equiv(join(p, q).representative, join(q, p).representative, trunc, cap))
        violations = [{"condition": kind, "check": r.id, "witnesses": r.witnesses} for r in reports if not r.passed]
        return _report("", violations, {"equivalences": len(reports)})

    def slices() -> VerificationReport:
        violations = []
        for p in params:
            prev: set = set()
            for c in range(cap + 1):
                cur = set(param_slice(p, c, trunc))
                if not prev <= cur:
                    violations.append({"condition": "monotone", "parameter": p.name, "c": c})
                prev = cur
        for a, b in combinations(params, 2):
            hi, lo = combine(a, b, "max"), combine(a, b, "min")
            for c in range(cap + 1):
                sa, sb = set(param_slice(a, c, trunc)), set(param_slice(b, c, trunc))
                if set(param_slice(hi, c, trunc)) != sa & sb:
                    violations.append({"condition": "max-is-intersection", "pair": [a.name, b.name], "c": c})
                if set(param_slice(lo, c, trunc)) != sa | sb:
                    violations.append({"condition": "min-is-union", "pair": [a.name, b.name], "c": c})
        return _report("", violations)

    def sublanguages() -> VerificationReport:
        xs = list(trunc)
        vals = _values(params, xs)
        langs = [s for size in (1, 2, 3) for s in combinations(range(len(xs)), size)]
        violations = []
        for a, b in combinations(params, 2):
            va, vb = vals[a.name], vals[b.name]
            for lang in langs:
                ba = max(va[i] for i in lang)
                bb = max(vb[i] for i in lang)
                b_meet = max(max(va[i], vb[i]) for i in lang)
                b_join = max(min(va[i], vb[i]) for i in lang)
                if b_meet != max(ba, bb):
                    violations.append({"condition": "meet-is-intersection", "pair": [a.name, b.name], "language": [xs[i].encoding for i in lang]})
                if b_join > min(ba, bb):
                    violations.append({"condition": "join-contains-union", "pair": [a.name, b.name], "language": [xs[i].encoding for i in lang]})
        return _report("", violations, {"languages": len(langs), "pairs": len(params) * (len(params) - 1) // 2})

    def order_inclusion() -> VerificationReport:
        """kappa below tau (bounded table f) sends every tau-bounded language into kappa slice f(c)."""
        xs = list(trunc)
        vals = _values(params, xs)
        langs = [s for size in (1, 2) for s in combinations(range(len(xs)), size)]
        violations = []
        checked = 0
        for a in params:
            for b in params:
                if a is b:
                    continue
                table = param_leq(a, b, trunc, cap)
                if table.trend:
                    continue
                checked += 1
                va, vb = vals[a.name], vals[b.name]
                for lang in langs:
                    c = max(vb[i] for i in lang)
                    if c > cap:
                        continue
                    f = table.rows[c]
                    if f is not None and max(va[i] for i in lang) > f:
                        violations.append({"kappa": a.name, "tau": b.name, "language": [xs[i].encoding for i in lang]})
        return _report("", violations, {"bounded_pairs": checked})

    def canonical() -> VerificationReport:
        everything = canonical_all()
        fin = canonical_fin_over(graphs)
        xs = list(trunc)
        violations = []
        for size in (1, 2, 3):
            for lang in combinations(xs, size):
                if everything.bound(lang) != 1:
                    violations.append({"condition": "all", "language": [x.encoding for x in lang]})
                if fin.bound(lang) != max(xs.index(x) + 1 for x in lang):
                    violations.append({"condition": "fin", "language": [x.encoding for x in lang]})
                if len(violations) > MAX_WITNESSES:
                    break
        return _report("", violations)

    return [
        ("lattice:idempotence", lambda: laws("idempotence")),
        ("lattice:commutativity", lambda: laws("commutativity")),
        ("lattice:absorption", lambda: laws("absorption")),
        ("lattice:slices", slices),
        ("lattice:meet-intersection", sublanguages),
        ("lattice:order-inclusion", order_inclusion),
        ("lattice:canonical", canonical),
    ]


def canonical_fin_over(graphs: Sequence[Graph]) -> Parameterization:
    return canonical_fin(graph_universe(max((g.n for g in graphs), default=0), graphs))


# ---------------------------------------------------------------------------
# graph chain, dominating set and WL


def degree_groups(graphs: Sequence[Graph]) -> list[list[Graph]]:
    groups: dict[tuple, list[Graph]] = defaultdict(list)
    for g in graphs:
        groups[(g.n, tuple(sorted(g.degrees())))].append(g)
    return [grp for grp in groups.values() if len(grp) > 1]


def _relabeled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def graph_chain_checks(cfg: RunConfig) -> list[Check]:
    graphs = cfg.upto(cfg.max_n)
    trunc = graphs_as_truncation(graphs)
    cap = cfg.max_param

    def chain(kappa, tau, bound, label) -> VerificationReport:
        table = param_leq(kappa, tau, trunc, cap)
        violations = [{"condition": "growth-trend", "levels": list(table.growing)}] if table.trend else []
        per = [{"instance": x.encoding, kappa.name: kappa(x), tau.name: tau(x)} for x in trunc if kappa(x) > bound(tau(x))]
        violations += per
        return _report("", violations, {"bound": label, "table": table.as_dict()})

    def deg_arb() -> VerificationReport:
        violations = []
        for g in graphs:
            if g.m == 0:
                continue
            d, a = degeneracy(g), arboricity(g)
            if not (a <= d <= 2 * a - 1):
                violations.append({"instance": encode_graph6(g), "degeneracy": d, "arboricity": a})
        return _report("", violations)

    def sparse() -> VerificationReport:
        violations = [{"instance": encode_graph6(g), "m": g.m, "bound": degeneracy(g) * g.n} for g in graphs if g.m > degeneracy(g) * g.n]
        return _report("", violations)

    def hadwiger_chain() -> VerificationReport:
        table = param_leq(DEG, HAD, trunc, cap)
        violations = [{"condition": "growth-trend", "levels": list(table.growing)}] if table.trend else []
        return _report("", violations, {"table": table.as_dict()})

    return [
        ("graph-chain:degeneracy<=hadwiger", hadwiger_chain),
        ("graph-chain:kij<=degeneracy+1", lambda: chain(KIJ, DEG, lambda d: d + 1, "d+1")),
        ("graph-chain:degeneracy<=treewidth", lambda: chain(DEG, TW, lambda t: t, "t")),
        ("graph-chain:arboricity<=degeneracy<=2a-1", deg_arb),
        ("graph-chain:sparse", sparse),
        ("graph-chain:ds-family", lambda: ds_family_check(cfg)),
        ("graph-chain:ds-budget", lambda: ds_budget_check(cfg)),
        ("graph-chain:wl-monotone", lambda: wl_monotone_check(cfg)),
        ("graph-chain:wl-soundness", lambda: wl_soundness_check(cfg)),
        ("graph-chain:wl-planar-levels", lambda: wl_planar_check(cfg)),
    ]


def ds_family_check(cfg: RunConfig) -> VerificationReport:
    max_j = min(3, cfg.max_index)
    violations = []
    checked = 0
    for g in cfg.upto(cfg.max_n):
        d = degeneracy(g)
        for j in range(max(1, d), max_j + 1):
            m = ds_member(j)
            for k in range(j + 1):
                checked += 1
                x = pair_instance(g, k)
                if m(x) != (ds_number(g) <= k):
                    violations.append({"instance": x.encoding, "j": j, "answer": m(x)})
    return _report("", violations, {"max_j": max_j, "checked": checked})


def ds_budget_check(cfg: RunConfig) -> VerificationReport:
    result = ds_budget(cfg.upto(cfg.max_n), min(3, cfg.max_index), slack=cfg.slack)
    violations = [{"index": r.k, "size": r.size, "n": r.n, "measured": r.cost} for r in result.violations]
    return _report("", violations, {
        "rule": result.label, "c": result.exponent, "slack": result.slack, "calibration_prefix": result.prefix,
        "rows": [{"k": r.k, "n": r.n, "measured_max": r.measured_max, "allowed": r.allowed} for r in result.rows],
    })


def _wl_pairs(cfg: RunConfig, graphs: Sequence[Graph]) -> list[tuple[Graph, Graph]]:
    rng = random.Random(cfg.seed)
    pairs = [(a, b) for grp in degree_groups(graphs) for a, b in combinations(grp, 2)]
    pairs += [(g, _relabeled(g, rng)) for g in graphs]
    return pairs


def _wl_verdict(k: int, g: Graph, h: Graph) -> bool:
    return stable_coloring(g, k).fingerprint != stable_coloring(h, k).fingerprint


def wl_monotone_check(cfg: RunConfig) -> VerificationReport:
    graphs = cfg.upto(cfg.max_n)
    violations = []
    for g in graphs:
        for k in (1, 2):
            if not refines(stable_coloring(g, k + 1).vertex_partition(), stable_coloring(g, k).vertex_partition()):
                violations.append({"condition": "partition", "instance": encode_graph6(g), "level": k})
    pairs = _wl_pairs(cfg, graphs)
    for g, h in pairs:
        for k in (1, 2):
            if _wl_verdict(k, g, h) and not _wl_verdict(k + 1, g, h):
                violations.append({"condition": "distinguishing", "pair": [encode_graph6(g), encode_graph6(h)], "level": k})
    return _report("", violations, {"graphs": len(graphs), "pairs": len(pairs)})


def wl_soundness_check(cfg: RunConfig) -> VerificationReport:
    graphs = cfg.upto(cfg.max_n)
    pairs = _wl_pairs(cfg, graphs)
    violations = []
    distinguished = Counter()
    for g, h in pairs:
        iso = None
        for k in (1, 2, 3):
            if _wl_verdict(k, g, h):
                distinguished[k] += 1
                iso = oracle_iso(g, h) if iso is None else iso
                if iso:
                    violations.append({"pair": [encode_graph6(g), encode_graph6(h)], "level": k})
    return _report("", violations, {"pairs": len(pairs), "distinguished": [{"k": k, "count": distinguished[k]} for k in (1, 2, 3)]})


def wl_planar_check(cfg: RunConfig) -> VerificationReport:
    planar = [g for g in cfg.upto(cfg.max_n) if is_planar(g)]
    pairs = _wl_pairs(cfg, planar)
    levels = Counter()
    violations = []
    for g, h in pairs:
        iso = oracle_iso(g, h)
        level = next((k for k in (1, 2, 3) if _wl_verdict(k, g, h) != iso), None)
        if level is None:
            violations.append({"pair": [encode_graph6(g), encode_graph6(h)], "isomorphic": iso})
        else:
            levels[level] += 1
    return _report("", violations, {
        "planar_graphs": len(planar), "pairs": len(pairs),
        "minimal_level": [{"k": k, "pairs": levels[k]} for k in (1, 2, 3)],
    })


# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[[RunConfig], list[Check]]] = {
    "lemma1": lemma1_checks,
    "lemma2": lemma2_checks,
    "closure": closure_checks,
    "facts": facts_checks,
    "lattice": lattice_checks,
    "graph-chain": graph_chain_checks,
}


def suite_checks(name: str, cfg: RunConfig) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(cfg)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](cfg)


def run_suite(name: str, cfg: RunConfig) -> list[VerificationReport]:
    return run_checks(suite_checks(name, cfg), cfg.jobs)
