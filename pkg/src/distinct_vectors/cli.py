"""``dv`` command-line front end.

Exit codes: 0 yes / success, 1 definite no, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .errors import DVError, RefusalError
from .generators import (
    RNG_ALGORITHM,
    from_graph_d3is,
    gen_random_profile,
    gen_sunflower,
    load_graph,
    pad_case1,
    pad_case2,
    random_graph,
)
from .hitting_set import (
    dv_to_hitting_set,
    format_hs,
    greedy_factor_h,
    hs_kernelize,
    hitting_set_to_dv,
    trivial_no_instance,
)
from .matrix import (
    Instance,
    Matrix,
    distance_profile,
    format_matrix,
    format_solution,
    is_distinguishing,
    parse_matrix,
    parse_solution,
)
from .reductions import (
    dominance_reduction,
    identity_report,
    inessential_reduction,
    kernelize_sigma_k,
    preprocess_binary,
)
from .solvers import STRATEGIES, classify, solve

RULES = ("preprocess", "inessential", "dominance")


class _Run:
    """Collects what a subcommand reports, for either output mode."""

    def __init__(self, command: str, digest: str | None):
        self.doc: dict = {"command": command, "input_digest": digest, "result": None}
        self.lines: list[str] = []
        self.code = 0

    def say(self, text: str) -> None:
        self.lines.append(text)


def _read_input(path: str) -> tuple[Matrix, str]:
    data = Path(path).read_bytes()
    return parse_matrix(data.decode("utf-8")), hashlib.sha256(data).hexdigest()


def _describe(run: _Run, m: Matrix) -> None:
    if m.n < 2:
        run.doc["profile"] = None
        run.doc["regime"] = None
        return
    p = distance_profile(m)
    run.doc["profile"] = {"h": p.min_distance, "H": p.max_distance}
    run.doc["regime"] = classify(p, len(m.alphabet)).tag.value


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    _describe(run, m)
    res = solve(Instance(m, args.k), args.algo)
    run.doc["path"] = res.path
    if res.solution is None:
        run.code = 1
        run.doc["result"] = "no"
        run.doc["solution"] = None
        run.say(f"no: no solution with at most {args.k} columns")
    else:
        run.doc["result"] = "yes"
        run.doc["solution"] = list(res.solution.columns)
        run.say(f"yes: {format_solution(res.solution)}")
    run.say(f"path: {' -> '.join(res.path)}")


def cmd_classify(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    if m.n < 2:
        raise DVError("classification needs at least two rows")
    regime = classify(distance_profile(m), len(m.alphabet))
    _describe(run, m)
    run.doc["result"] = regime.tag.value
    run.doc["reason"] = regime.reason
    run.say(regime.headline())
    if args.explain:
        run.say(regime.reason)


def cmd_reduce(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    rules = [r.strip() for r in args.rules.split(",") if r.strip()]
    for r in rules:
        if r not in RULES:
            raise DVError(f"unknown rule {r!r}; choose from {', '.join(RULES)}")
    report = identity_report(m)
    out = m
    for r in rules:
        if r == "preprocess":
            out, step = preprocess_binary(out)
        elif r == "inessential":
            out, step = inessential_reduction(out)
        else:
            out, step = dominance_reduction(out)
        report = report.then(step)
        run.say(f"{r}: {step.deleted} column(s) deleted")
    _describe(run, out)
    run.doc["result"] = "ok"
    run.doc["kept_columns"] = list(report.kept)
    run.doc["shape"] = [out.n, out.d]
    run.say(f"kept original columns: {format_solution(report.kept) or '(none)'}")
    if args.output:
        _write(args.output, format_matrix(out))
    else:
        run.say(format_matrix(out).rstrip("\n"))


def cmd_kernel(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    inst = Instance(m, args.k)
    if args.param == "sigma-k":
        kernel = kernelize_sigma_k(inst)
    else:
        hs = hs_kernelize(dv_to_hitting_set(inst))
        if args.hs_output and hs is not None:
            _write(args.hs_output, format_hs(hs))
        kernel = None if hs is None else hitting_set_to_dv(hs)
    if kernel is None:
        run.code = 1
        run.doc["result"] = "no"
        run.say("no: definite no-instance")
        if args.param == "h-k":
            kernel = trivial_no_instance(args.k)
        else:
            return
    else:
        run.doc["result"] = "kernel"
    km = kernel.matrix
    _describe(run, km)
    run.doc["shape"] = [km.n, km.d]
    run.doc["k"] = kernel.k
    run.say(f"kernel: {km.n} x {km.d}, k = {kernel.k}")
    if args.output:
        _write(args.output, format_matrix(km))
    else:
        run.say(format_matrix(km).rstrip("\n"))


def cmd_approx(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    _describe(run, m)
    sol = greedy_factor_h(Instance(m, m.d))
    run.doc["result"] = "ok"
    run.doc["solution"] = list(sol.columns)
    run.say(f"{len(sol)} column(s): {format_solution(sol)}")


def _generate(args) -> tuple[Instance, dict]:
    meta: dict = {"kind": args.kind, "seed": args.seed, "rng": RNG_ALGORITHM}
    if args.kind == "d3is":
        if args.graph:
            g = load_graph(args.graph)
        else:
            g = random_graph(args.vertices, args.p, args.seed)
        if args.k is None:
            raise DVError("--k (independent set size) is required for d3is")
        inst = from_graph_d3is(g, args.k)
        meta["claimed_profile"] = [2, 4]
    elif args.kind in ("pad1", "pad2"):
        if not args.input or args.k is None:
            raise DVError("padding needs --input and --k of a (2,4) instance")
        base = Instance(_read_input(args.input)[0], args.k)
        if args.kind == "pad1":
            inst = pad_case1(base, args.b)
            meta["claimed_profile"] = [1, 4 + args.b]
        else:
            inst = pad_case2(base, args.a, args.b)
            meta["claimed_profile"] = [2 + args.a, 4 + 2 * ((args.a + 1) // 2) + args.b]
    elif args.kind == "sunflower":
        petals = [int(x) for x in args.petals.split(",") if x.strip()]
        m = gen_sunflower(petals, args.core, args.seed)
        inst = Instance(m, m.d if args.k is None else args.k)
        meta["petals"] = petals
        meta["core"] = args.core
    else:
        m = gen_random_profile(args.n, args.d, args.alpha, args.beta, args.seed, args.attempts)
        if m is None:
            raise DVError("sampler exhausted its attempts; retry with another seed")
        inst = Instance(m, m.d if args.k is None else args.k)
        meta["claimed_profile"] = [args.alpha, args.beta]
    meta["budget"] = inst.k
    return inst, meta


def cmd_generate(args, run: _Run) -> None:
    try:
        inst, meta = _generate(args)
    except RefusalError as exc:
        verdict = {True: "yes", False: "no", None: "undetermined"}[exc.verdict]
        raise DVError(f"{exc} (direct answer: {verdict})") from None
    _describe(run, inst.matrix)
    run.doc["result"] = "ok"
    run.doc["metadata"] = meta
    text = format_matrix(inst.matrix)
    if args.output:
        _write(args.output, text)
        _write(args.output + ".json", json.dumps(meta, indent=2) + "\n")
        run.say(f"wrote {args.output} ({inst.matrix.n} x {inst.matrix.d}, k = {inst.k})")
    else:
        run.say(text.rstrip("\n"))


def cmd_verify(args, run: _Run) -> None:
    m, _ = _read_input(args.input)
    sol = parse_solution(args.columns)
    _describe(run, m)
    ok = is_distinguishing(m, sol)
    if ok and args.k is not None and len(sol) > args.k:
        ok = False
        run.say(f"{len(sol)} columns exceed the budget {args.k}")
    run.doc["solution"] = list(sol.columns)
    run.doc["result"] = "yes" if ok else "no"
    run.code = 0 if ok else 1
    run.say("valid" if ok else "invalid: some rows coincide")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON document")
    parser = argparse.ArgumentParser(prog="dv", description="Distinct Vectors toolkit")
    parser.add_argument("--json", action="store_true", help="print one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="minimum solution within budget")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=STRATEGIES, default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", parents=[common], help="complexity regime of the profile")
    p.add_argument("--input", required=True)
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", parents=[common], help="apply data reduction rules")
    p.add_argument("--input", required=True)
    p.add_argument("--rules", default=",".join(RULES))
    p.add_argument("--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("kernel", parents=[common], help="problem kernel")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--param", choices=("h-k", "sigma-k"), default="h-k")
    p.add_argument("--output")
    p.add_argument("--hs-output")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("approx", parents=[common], help="greedy factor-H solution")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("generate", parents=[common], help="generate an instance")
    p.add_argument("--kind", choices=("d3is", "pad1", "pad2", "sunflower", "random"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.add_argument("--input", help="base (2,4) instance for padding")
    p.add_argument("--graph", help="graph file for d3is")
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--p", type=float, default=0.4, help="edge probability of a random graph")
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--petals", default="1,1,1")
    p.add_argument("--core", type=int, default=1)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--d", type=int, default=8)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--attempts", type=int, default=200)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="check a column set")
    p.add_argument("--input", required=True)
    p.add_argument("--columns", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    digest = None
    if getattr(args, "input", None):
        try:
            digest = hashlib.sha256(Path(args.input).read_bytes()).hexdigest()
        except OSError as exc:
            print(f"dv: error: {exc.strerror}: {args.input}", file=sys.stderr)
            return 2
    job = _Run(args.command, digest)
    start = time.perf_counter()
    try:
        args.func(args, job)
    except (DVError, ValueError, OSError) as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        print(f"dv: error: {msg}", file=sys.stderr)
        return 2
    job.doc["timings"] = {"total_ms": round((time.perf_counter() - start) * 1000, 3)}
    if args.json:
        print(json.dumps(job.doc, sort_keys=True))
    else:
        for line in job.lines:
            print(line)
    return job.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
