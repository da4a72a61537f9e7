"""Command-line front end.

Modes:
  expand        basis coefficients of the set-coloring series (or its omega
                image) of a graph, as JSON
  qexpand       same for the q-refined series of a unit-interval graph
  verify        run named invariant checks and report pass/fail per check
  lyndon        Lyndon heap counts and canonical words up to a size
  independence  the induced-subgraph independence-polynomial multiset

Exit status: 0 success, 1 failed verification (or failed computation),
2 configuration error.
"""

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import BUNDLED_GRAPHS, BUNDLED_MODELS, bundled_graph, bundled_model
from .core import (brute_force_kromatic, chromatic_p_expansion_oracles,
                   exponent_a, exponent_b, exponent_c, exponent_d,
                   independence_multiset, kromatic, kromatic_from_multiset,
                   omega_kromatic, omega_pbar_coefficients_via_subsets,
                   recover_signed_exponent_multiset, signed_exponent_family,
                   theorem_coefficient, theorem_coefficient_subsets,
                   verify_factorization)
from .graphs import (acyclic_orientations, chromatic_polynomial,
                     graph_from_json, model_from_json,
                     natural_unit_interval_model, unit_interval_graph)
from .heaps import (enumerate_lyndon, heap_from_word, is_lyndon,
                    lyndon_count, lyndon_mobius_check, rotation_class,
                    word_str)
from .numbers import QPoly, divisors, mu_hat, partitions_up_to
from .quasisym import (kromatic_q, kromatic_q_vectors, kromatic_q_via_clans,
                       power_sum_coefficient_q, pyramid_p_expansion_q,
                       specialize_q)
from .symfunc import extract, omega, verify_omega_basis_identities

DISPLAY = {"k1": "K1", "k2": "K2", "k3": "K3", "p3": "P3", "p4": "P4",
           "c4": "C4", "paw": "paw"}


def _load_graph(spec):
    """Bundled name or path to a graph JSON file."""
    key = spec.lower()
    if key in BUNDLED_GRAPHS:
        return DISPLAY[key], bundled_graph(key)
    path = Path(spec)
    data = json.loads(path.read_text())
    return path.stem, graph_from_json(data)


def _load_model(spec):
    key = spec.lower()
    if key in BUNDLED_MODELS:
        return key, bundled_model(key)
    path = Path(spec)
    return path.stem, model_from_json(json.loads(path.read_text()))


def _coeff_json(c):
    """Scalars as strings; q-polynomials as coefficient arrays by q-power
    (array entries are ints, or strings for the fractional coefficients that
    genuinely occur in q-extractions)."""
    if isinstance(c, QPoly):
        return [x if isinstance(x, int) else str(x) for x in c.c]
    return str(c)


def _expansion_json(exp, name, M, omega_applied, q_value=None):
    terms = []
    for lam, c in exp.items_sorted():
        if q_value is not None and isinstance(c, QPoly):
            c = c(q_value)
            if not c:
                continue
        terms.append({"partition": list(lam), "coeff": _coeff_json(c)})
    out = {"graph": name, "basis": exp.basis, "N": exp.N, "M": M,
           "omega": omega_applied, "terms": terms}
    if q_value is not None:
        out["q"] = str(q_value)
    return out


def _emit(obj, out_path):
    text = json.dumps(obj, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# modes

def run_expand(args, parser):
    name, g = _load_graph(args.graph)
    N, M = args.degree, args.vars or args.degree
    F = omega_kromatic(g, N, M) if args.omega else kromatic(g, N, M)
    exp = extract(F, args.basis)
    _emit(_expansion_json(exp, name, M, args.omega), args.out)
    return 0


def run_qexpand(args, parser):
    if args.model:
        name, model = _load_model(args.model)
        g = unit_interval_graph(model)
    else:
        name, g = _load_graph(args.graph)
        if natural_unit_interval_model(g) is None:
            parser.error(f"graph {name} has no natural unit-interval model; "
                         "its q-refined series is not symmetric")
    N, M = args.degree, args.vars or args.degree
    F = kromatic_q(g, N, M)
    if args.omega:
        F = omega(F)
    exp = extract(F, args.basis)
    q_value = Fraction(args.q) if args.q is not None else None
    _emit(_expansion_json(exp, name, M, args.omega, q_value), args.out)
    return 0


def run_lyndon(args, parser):
    name, g = _load_graph(args.graph)
    sizes = {}
    counts = {}
    for n in range(1, args.degree + 1):
        words = [word_str(h.word) for h in enumerate_lyndon(g, n)]
        counts[str(n)] = len(words)
        sizes[str(n)] = words
    _emit({"graph": name, "degree": args.degree, "counts": counts,
           "words": sizes}, args.out)
    return 0


def run_independence(args, parser):
    name, g = _load_graph(args.graph)
    ms = independence_multiset(g)
    entries = [{"independence": list(poly), "size": size}
               for poly, size in ms.entries]
    _emit({"graph": name, "n": g.n, "entries": entries}, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify

def _lambda_tag(lam):
    if any(p >= 10 for p in lam):
        return "-".join(str(p) for p in lam)
    return "".join(str(p) for p in lam)


def _invariant_word_shuffles(g):
    rng = random.Random(97 + 131 * g.n + len(g.edges))
    for _ in range(40):
        word = [rng.randint(1, g.n) for _ in range(rng.randint(1, 7))]
        h = heap_from_word(g, word)
        w = list(word)
        for _ in range(15):
            if len(w) < 2:
                break
            i = rng.randrange(len(w) - 1)
            a, b = w[i], w[i + 1]
            if a != b and not g.adjacent(a, b):
                w[i], w[i + 1] = b, a
        if heap_from_word(g, w) != h:
            return False
    return True


def build_checks(named_graphs, N, suites):
    """List of (suite, check-name, thunk).  Thunks return truthy on pass."""
    checks = []

    def add(suite, name, fn):
        if "all" in suites or suite in suites:
            checks.append((suite, name, fn))

    K2 = bundled_graph("k2")
    P3 = bundled_graph("p3")

    # --- numbers ---------------------------------------------------------
    def dirichlet():
        for n in range(1, 65):
            want = 1 if n == 1 else 0
            if sum(mu_hat(d) * (-1) ** (n // d + 1)
                   for d in divisors(n)) != want:
                return False
        return True

    add("numbers", "dirichlet-inverse-64", dirichlet)
    add("numbers", "omega-basis-rules-k4",
        lambda: all(verify_omega_basis_identities(k, 6, 6)
                    for k in range(1, 5)))

    # --- heaps -----------------------------------------------------------
    def rotation_example():
        h = heap_from_word(P3, (2, 3, 1, 1))
        cls = rotation_class(h)
        words = sorted(word_str(x.word) for x in cls)
        if words != ["1123", "1231", "2311", "3211"]:
            return False
        reps = [word_str(x.word) for x in cls if is_lyndon(x)]
        return reps == ["1123"]

    add("heaps", "rotation-example-P3-2311", rotation_example)
    add("heaps", "lyndon-counts-K2",
        lambda: [lyndon_count(K2, n) for n in range(1, 6)] == [2, 1, 2, 3, 6])
    for name, g in named_graphs:
        add("heaps", f"lyndon-mobius-{name}",
            lambda g=g: all(lhs == rhs for lhs, rhs in
                            (lyndon_mobius_check(g, n) for n in range(1, 6))))
        add("heaps", f"canonical-invariance-{name}",
            lambda g=g: _invariant_word_shuffles(g))

    # --- factorization ---------------------------------------------------
    for name, g in named_graphs:
        for variant in "abcd":
            add("factorization", f"claim-{variant}-{name}-N{N}",
                lambda g=g, v=variant: verify_factorization(g, v, N, N))

    def exponent_spots():
        return ([exponent_d(K2, k) for k in range(1, 6)] == [2, 1, 2, 3, 6]
                and [exponent_b(K2, k) for k in range(1, 6)] == [2, 3, 2, 6, 6]
                and exponent_c(K2, 2) == -3
                and [exponent_a(K2, k) for k in range(1, 6)]
                == [2, -1, 2, -4, 6])

    add("factorization", "exponents-K2", exponent_spots)

    # --- theorems --------------------------------------------------------
    targets = {}

    def theorem_targets(name, g):
        if name not in targets:
            X = kromatic(g, N, N)
            W = omega_kromatic(g, N, N)
            targets[name] = {"1.2": extract(X, "pbar"),
                             "1.3": extract(W, "pbar"),
                             "1.4": extract(X, "pbarprime"),
                             "1.5": extract(W, "pbarprime")}
        return targets[name]

    def theorem_check(name, g, lam, rule):
        count = theorem_coefficient(g, lam, rule)
        if count < 0 or count != theorem_coefficient_subsets(g, lam, rule):
            return False
        got = theorem_targets(name, g)[rule].coeff(lam)
        if rule in ("1.2", "1.4") and (sum(lam) - len(lam)) % 2:
            got = -got
        return count == got

    for name, g in named_graphs:
        for lam in partitions_up_to(N):
            if not lam:
                continue
            for rule in ("1.2", "1.3", "1.4", "1.5"):
                add("theorems",
                    f"thm-{rule}-{name}-lambda-{_lambda_tag(lam)}",
                    lambda name=name, g=g, lam=lam, rule=rule:
                    theorem_check(name, g, lam, rule))

    # --- classical -------------------------------------------------------
    def classical_reduction(g):
        n = g.n
        E = extract(kromatic(g, n, n), "pbar")
        by_edges, by_orientations = chromatic_p_expansion_oracles(g)
        if by_edges.coeffs != by_orientations.coeffs:
            return False
        return all(E.coeff(lam) == by_edges.coeff(lam)
                   for lam in partitions_up_to(n) if sum(lam) == n)

    for name, g in named_graphs:
        add("classical", f"classical-reduction-{name}",
            lambda g=g: classical_reduction(g))
        add("classical", f"orientation-count-{name}",
            lambda g=g: len(acyclic_orientations(g))
            == abs(sum(c * (-1) ** i
                       for i, c in enumerate(chromatic_polynomial(g)))))

    # --- recovery --------------------------------------------------------
    for name, g in named_graphs:
        def roundtrip(g=g):
            ms = independence_multiset(g)
            return (kromatic_from_multiset(ms, 4, 4) == kromatic(g, 4, 4)
                    and kromatic_from_multiset(ms, 4, 4, image="omega")
                    == omega_kromatic(g, 4, 4))

        add("recovery", f"multiset-roundtrip-{name}", roundtrip)

    add("recovery", "recover-K2-honest",
        lambda: recover_signed_exponent_multiset(
            omega_kromatic(K2, 8, 8), 2, (2, 3))
        == signed_exponent_family(K2, 2))
    add("recovery", "recover-P3-honest",
        lambda: recover_signed_exponent_multiset(
            omega_kromatic(P3, 13, 13), 2, (3, 5))
        == signed_exponent_family(P3, 2))

    def recover_k4(g):
        import itertools
        caps = tuple(exponent_b(g, k) for k in range(1, 5))
        box = list(itertools.product(*(range(c + 1) for c in caps)))
        exp = omega_pbar_coefficients_via_subsets(g, box)
        return (recover_signed_exponent_multiset(exp, 4, caps)
                == signed_exponent_family(g, 4))

    add("recovery", "recover-K2-k4", lambda: recover_k4(K2))
    add("recovery", "recover-P3-k4", lambda: recover_k4(P3))

    # --- q ---------------------------------------------------------------
    for name, g in named_graphs:
        add("q", f"clans-vs-brute-{name}",
            lambda g=g: kromatic_q_via_clans(g, 4, 3)
            == kromatic_q_vectors(g, 4, 3))
        if natural_unit_interval_model(g) is not None:
            add("q", f"pyramid-expansion-{name}",
                lambda g=g: pyramid_p_expansion_q(g, g.n + 1, g.n + 1)
                == omega(kromatic_q(g, g.n + 1, g.n + 1)))
            add("q", f"q1-collapse-{name}",
                lambda g=g: specialize_q(kromatic_q(g, 4, 4), 1)
                == kromatic(g, 4, 4))

    q_targets = {}

    def q_extraction(name, g):
        if name not in q_targets:
            X = kromatic_q(g, 4, 4)
            W = omega(X)
            q_targets[name] = {"5.1": extract(W, "pbarprime"),
                               "5.2": extract(X, "pbarprime"),
                               "5.3": extract(W, "pbar"),
                               "5.4": extract(X, "pbar")}
        return q_targets[name]

    for name, g in (("K2", K2), ("P3", P3)):
        for lam in partitions_up_to(4):
            if not lam:
                continue
            for rule in ("5.1", "5.2", "5.3", "5.4"):
                add("q", f"prop-{rule}-{name}-lambda-{_lambda_tag(lam)}",
                    lambda name=name, g=g, lam=lam, rule=rule:
                    power_sum_coefficient_q(g, lam, rule)
                    == q_extraction(name, g)[rule].coeff(lam))

    return checks


SUITES = ("numbers", "heaps", "factorization", "theorems", "classical",
          "recovery", "q")


def run_verify(args, parser):
    if args.graph:
        named = [_load_graph(args.graph)]
    else:
        named = [(DISPLAY[k], bundled_graph(k)) for k in BUNDLED_GRAPHS]
    suites = {args.suite}
    checks = build_checks(named, args.degree, suites)
    if not checks:
        parser.error(f"no checks selected for suite {args.suite!r}")
    failed = 0
    report = []
    for suite, name, fn in checks:
        try:
            ok = bool(fn())
            detail = ""
        except Exception as e:  # a crashed check is a failed check
            ok = False
            detail = f" ({type(e).__name__}: {e})"
        status = "PASS" if ok else "FAIL"
        if not ok:
            failed += 1
        print(f"{status} {name}{detail}")
        report.append({"suite": suite, "name": name, "ok": ok})
    total = len(checks)
    print(f"{total - failed}/{total} checks passed")
    if args.out:
        _emit({"degree": args.degree, "suite": args.suite,
               "graphs": [n for n, _ in named],
               "passed": total - failed, "failed": failed,
               "checks": report}, args.out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------

def make_parser():
    parser = argparse.ArgumentParser(
        prog="kromatic",
        description="Exact expansions and verification for set-coloring "
                    "symmetric functions.")
    sub = parser.add_subparsers(dest="mode", required=True)

    def common(p, graph=True, model=False, basis=None, q=False):
        if graph:
            p.add_argument("--graph", help="bundled graph name "
                           f"({', '.join(BUNDLED_GRAPHS)}) or JSON path")
        if model:
            p.add_argument("--model", help="bundled unit-interval model name "
                           f"({', '.join(BUNDLED_MODELS)}) or JSON path")
        if basis:
            p.add_argument("--basis", choices=("p", "pbar", "pbarprime"),
                           default=basis)
            p.add_argument("--omega", action="store_true",
                           help="expand the omega image instead")
            p.add_argument("--vars", type=int, default=None,
                           help="number of variables M (default: degree)")
        if q:
            p.add_argument("--q", default=None,
                           help="evaluate q-polynomials at this rational")
        p.add_argument("--degree", type=int, default=5,
                       help="truncation degree N (default 5)")
        p.add_argument("--out", default=None, help="write JSON here "
                       "instead of stdout")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallelism hint (accepted; runs sequentially)")

    pe = sub.add_parser("expand", help="basis coefficients of the series")
    common(pe, basis="pbar")

    pq = sub.add_parser("qexpand", help="basis coefficients, q-refined")
    common(pq, model=True, basis="pbarprime", q=True)

    pv = sub.add_parser("verify", help="run named invariant checks")
    pv.add_argument("--graph", help="restrict to one graph (bundled name or "
                    "JSON path); default: all bundled graphs")
    pv.add_argument("--suite", choices=("all",) + SUITES, default="all")
    pv.add_argument("--degree", type=int, default=5)
    pv.add_argument("--out", default=None)
    pv.add_argument("--jobs", type=int, default=1,
                    help="parallelism hint (accepted; runs sequentially)")

    pl = sub.add_parser("lyndon", help="Lyndon heap counts and words")
    common(pl)

    pi = sub.add_parser("independence", help="independence multiset dump")
    common(pi)
    return parser


RUNNERS = {"expand": run_expand, "qexpand": run_qexpand,
           "verify": run_verify, "lyndon": run_lyndon,
           "independence": run_independence}


def validate(args, parser):
    if args.mode in ("expand", "qexpand", "lyndon", "independence"):
        if args.degree < 1:
            parser.error("--degree must be at least 1")
    if getattr(args, "vars", None) is not None and args.vars < args.degree:
        parser.error("--vars must be at least --degree for faithful "
                     "extraction")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    if args.mode in ("expand", "lyndon", "independence") and not args.graph:
        parser.error("--graph is required")
    if args.mode == "qexpand" and not (args.graph or args.model):
        parser.error("qexpand needs --graph or --model")
    if getattr(args, "q", None) is not None:
        try:
            Fraction(args.q)
        except (ValueError, ZeroDivisionError):
            parser.error(f"--q must be a rational, got {args.q!r}")


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    validate(args, parser)
    try:
        return RUNNERS[args.mode](args, parser)
    except FileNotFoundError as e:
        parser.error(f"cannot read input: {e}")
    except (KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
