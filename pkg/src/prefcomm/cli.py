"""Command-line interface.

Exit codes: 0 true / success, 1 false / counterexample found, 2 input or
budget error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import axioms, generators, oracles
from .functions import (
    MajorityRule,
    cliq_g_family,
    is_clique,
    is_cliq_g,
    is_harmon,
    is_harmonious_lambda,
)
from .grow import clique_growing, enumerate_communities
from .io import ParseError, format_communities, format_network, parse_id_list, parse_order, read_network
from .model import DomainError
from .stability import in_scomp, is_sa_prime, is_strongly_group_stable

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

CHECK_KINDS = ("clique", "sgs", "sa-prime", "scomp", "harmon", "harmonious", "cliq-g")
ORACLE_KINDS = ("gs", "sa", "sgs", "cliques")


class InputError(Exception):
    pass


def _one_based(s):
    return [u + 1 for u in sorted(s)]


def _emit(args, text: str, record: dict) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_check(args) -> int:
    net = read_network(args.network)
    s = parse_id_list(args.set, net.n)
    record = {"kind": args.kind, "set": _one_based(s)}
    witness_text = ""
    if args.kind == "clique":
        result = is_clique(net, s)
    elif args.kind == "sgs":
        trace = is_strongly_group_stable(net, s)
        result = trace.outcome
        if trace.witness is not None:
            seed, frozen = trace.witness
            record["witness"] = {"seed": seed + 1, "frozen": _one_based(frozen)}
            witness_text = f"  witness: seed {seed + 1}, frozen {{{' '.join(map(str, _one_based(frozen)))}}}"
    elif args.kind == "sa-prime":
        result = is_sa_prime(net, s)
    elif args.kind == "scomp":
        result = in_scomp(net, s)
    elif args.kind == "harmon":
        record["rule"] = args.rule
        result = is_harmon(net, s, MajorityRule(args.rule))
    elif args.kind == "harmonious":
        record["lambda"] = args.lam
        result = is_harmonious_lambda(net, s, args.lam)
    else:
        record["g"] = args.g
        result = is_cliq_g(net, s, cliq_g_family(args.g))
    record["result"] = result
    _emit(args, ("true" if result else "false") + witness_text, record)
    return EXIT_TRUE if result else EXIT_FALSE


def cmd_grow(args) -> int:
    net = read_network(args.network)
    rule = MajorityRule(args.rule)
    if args.filter_scomp:
        communities = enumerate_communities(net, rule)
    else:
        communities = clique_growing(net, rule).canonical()
    if args.sample is not None:
        # same draw as grow.sample_uniform when filtering
        communities = [random.Random(args.sample).choice(communities)]
    if args.json:
        for c in communities:
            print(json.dumps({"community": _one_based(c)}))
    else:
        sys.stdout.write(format_communities(communities))
    return EXIT_TRUE


def cmd_generate(args) -> int:
    if args.size < 1:
        raise InputError("size must be at least 1")
    if args.kind == "get-profile":
        sigma = None
        if args.sigma:
            with open(args.sigma, encoding="utf-8") as fh:
                sigma = parse_order(fh.read(), args.size)
        net = generators.get_profile(args.size, sigma)
    elif args.kind == "hero-sidekick":
        net = generators.hero_sidekick(args.size)
    else:
        net = generators.uniform_random(args.size, args.seed)
    sys.stdout.write(format_network(net))
    return EXIT_TRUE


def cmd_oracle(args) -> int:
    net = read_network(args.network)
    budget = oracles.OracleBudget(max_n=args.max_n)
    if args.kind == "cliques":
        sys.stdout.write(format_communities(oracles.brute_cliques(net, budget)))
        return EXIT_TRUE
    if args.set is None:
        raise InputError(f"oracle {args.kind} needs --set")
    s = parse_id_list(args.set, net.n)
    fn = {
        "gs": oracles.brute_group_stable,
        "sa": oracles.brute_self_approving,
        "sgs": oracles.brute_strongly_group_stable,
    }[args.kind]
    result = fn(net, s, budget)
    _emit(args, "true" if result else "false", {"oracle": args.kind, "set": _one_based(s), "result": result})
    return EXIT_TRUE if result else EXIT_FALSE


DEFAULT_CORPUS = {
    "seed": 0,
    "sizes": [1, 2, 3, 4, 5],
    "per_size": 40,
    "extra_sizes": [6],
    "per_extra": 10,
    "trials": 2,
    "max_n": 8,
    "group_prefers_cases": 2000,
}


def _resolve_functions(names: str) -> dict:
    table = dict(axioms.CONSISTENT)
    table.update({k: fn for k, (fn, _) in axioms.PLANTED.items()})
    table["grow_scomp_weak"] = axioms.grow_scomp_handle(MajorityRule.WEAK)
    if names == "all":
        return dict(axioms.CONSISTENT)
    chosen = {}
    for name in names.split(","):
        name = name.strip()
        if name not in table:
            raise InputError(f"unknown function {name!r}; known: {', '.join(sorted(table))}")
        chosen[name] = table[name]
    return chosen


def cmd_validate(args) -> int:
    config = dict(DEFAULT_CORPUS)
    if args.corpus:
        with open(args.corpus, encoding="utf-8") as fh:
            try:
                config.update(json.load(fh))
            except json.JSONDecodeError as exc:
                raise InputError(f"{args.corpus}: {exc}") from None
    budget = oracles.OracleBudget(max_n=int(config["max_n"]))
    biggest = max(list(config["sizes"]) + list(config["extra_sizes"]))
    budget.check_n(biggest)
    functions = _resolve_functions(args.functions)
    corpus = axioms.standard_corpus(
        seed=config["seed"],
        sizes=config["sizes"],
        per_size=config["per_size"],
        extra_sizes=config["extra_sizes"],
        per_extra=config["per_extra"],
    )
    corpus = [net for net in corpus if net.n <= biggest]
    report = {"networks": len(corpus), "oracles": [], "functions": {}}
    if not args.skip_oracles:
        checks = [
            oracles.compare_group_prefers(config["group_prefers_cases"], seed=config["seed"], budget=budget),
            oracles.compare_sgs(corpus, budget),
            oracles.compare_cliques(corpus, budget),
            oracles.check_implications(corpus, budget),
        ]
        report["oracles"] = [c.to_dict() for c in checks]
    failed = any(not c["ok"] for c in report["oracles"])
    for name, fn in functions.items():
        verdicts = axioms.run_axioms(fn, corpus, trials=config["trials"], seed=config["seed"], budget=budget)
        report["functions"][name] = {a: v.to_dict() for a, v in verdicts.items()}
        failed = failed or any(not v.passed for v in verdicts.values())
    report["ok"] = not failed
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_FALSE if failed else EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prefcomm", description="Community detection in preference networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide membership of a set")
    p.add_argument("kind", choices=CHECK_KINDS)
    p.add_argument("network")
    p.add_argument("--set", required=True, help="1-based ids, e.g. 1,2,3")
    p.add_argument("--rule", choices=[r.value for r in MajorityRule], default="strict")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--g", default="0", help="slack family: constant c, const:c or linear:alpha")
    p.add_argument("--json", action="store_true", help="emit a JSON line")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("grow", help="grow cliques into communities")
    p.add_argument("network")
    p.add_argument("--rule", choices=[r.value for r in MajorityRule], default="strict")
    p.add_argument("--filter-scomp", action="store_true")
    p.add_argument("--sample", type=int, metavar="SEED", help="print one uniformly drawn community")
    p.add_argument("--enumerate", action="store_true", help="list all communities in canonical order (default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("generate", help="write a generated network")
    p.add_argument("kind", choices=("get-profile", "hero-sidekick", "random"))
    p.add_argument("size", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma", help="file holding the base order for get-profile")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exhaustive reference decisions (budgeted)")
    p.add_argument("kind", choices=ORACLE_KINDS)
    p.add_argument("network")
    p.add_argument("--set")
    p.add_argument("--max-n", type=int, default=oracles.DEFAULT_BUDGET.max_n)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", help="oracle agreement and axiom falsification")
    p.add_argument("--corpus", help="JSON corpus configuration")
    p.add_argument("--functions", default="all", help="comma-separated handle names, or all")
    p.add_argument("--skip-oracles", action="store_true")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{getattr(args, 'network', '')}: {exc}", file=sys.stderr)
    except (DomainError, InputError, oracles.BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
