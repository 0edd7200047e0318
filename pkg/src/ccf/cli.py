"""``ccf`` command line: solve, verify, kernelize, generate, bench."""

from __future__ import annotations

import argparse
import contextlib
import os
import signal
import sys
import time
from pathlib import Path

from . import gen
from .core import (Instance, ParseError, PreconditionError, SolveResult, nash_deviation, read_instance,
                   read_partition, validate, value, write_instance, write_result)
from .dp_tw import solve_tw
from .kernel import kernel_size_certificate, kernelize
from .oracle import ORACLE_LIMIT, solve_exact
from .vc_solver import min_vertex_cover, solve_vc
from .vi_solver import solve_vi

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION, EXIT_TIMEOUT = 0, 1, 2, 3, 4

AUTO_ORACLE_MAX_N = 10
AUTO_COVER_MAX = 10
AUTO_COVER_BUDGET = 20000


class SolverTimeout(Exception):
    pass


@contextlib.contextmanager
def deadline(ms):
    if not ms:
        yield
        return

    def fire(signum, frame):
        raise SolverTimeout()

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, ms / 1000.0)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _err(msg):
    print(f"ccf: {msg}", file=sys.stderr)


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return read_instance(text)


def read_cover(path) -> list[int]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    cover = []
    for line in text.splitlines():
        if line.strip().startswith("c"):
            continue
        try:
            cover.extend(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"malformed cover line {line!r}") from None
    return cover


def run_solver(inst: Instance, algo: str, cover=None, literal: bool = False) -> SolveResult:
    if algo == "auto":
        if inst.n <= AUTO_ORACLE_MAX_N:
            algo = "oracle"
        else:
            found = cover if cover is not None else min_vertex_cover(inst.graph, budget=AUTO_COVER_BUDGET)
            if found is not None and len(found) <= AUTO_COVER_MAX:
                algo, cover = "vc", found
            else:
                algo = "tw"
    if algo == "oracle":
        return solve_exact(inst)
    if algo == "tw":
        return solve_tw(inst, canonical=not literal)
    if algo == "vc":
        try:
            return solve_vc(inst, cover)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    if algo == "vi":
        return solve_vi(inst, literal=literal)
    raise ValueError(f"unknown algorithm {algo}")


def cmd_solve(args) -> int:
    try:
        inst = load_instance(args.instance)
        cover = read_cover(args.cover) if args.cover else None
    except ParseError as exc:
        _err(exc)
        return EXIT_PARSE
    try:
        with deadline(args.timeout_ms):
            res = run_solver(inst, args.algo, cover, args.literal)
    except SolverTimeout:
        _err(f"timed out after {args.timeout_ms} ms")
        return EXIT_TIMEOUT
    except PreconditionError as exc:
        _err(exc)
        return EXIT_PRECONDITION
    out = write_result(res, timing=not args.no_timing)
    print(out)
    if args.output:
        Path(args.output).write_text(out + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst = load_instance(args.instance)
        try:
            text = Path(args.partition).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.partition}: {exc.strerror}") from None
        part = read_partition(text)
    except ParseError as exc:
        _err(exc)
        return EXIT_PARSE
    problem = validate(inst, part)
    if problem:
        print(f"invalid: {problem}")
        return EXIT_FAIL
    if args.nash:
        dev = nash_deviation(inst, part)
        if dev is not None:
            v, j = dev
            target = "a new coalition" if j < 0 else f"coalition {sorted(part.coalitions[j])}"
            print(f"not Nash-stable: vertex {v} gains by moving to {target}")
            return EXIT_FAIL
    print(f"ok: value {value(inst, part)}")
    return EXIT_OK


def cmd_kernelize(args) -> int:
    try:
        inst = load_instance(args.input)
    except ParseError as exc:
        _err(exc)
        return EXIT_PARSE
    try:
        reduced, removed = kernelize(inst)
    except PreconditionError as exc:
        _err(exc)
        return EXIT_PRECONDITION
    report = kernel_size_certificate(inst, reduced)
    text = write_instance(reduced, [f"removed: {' '.join(map(str, removed))}".rstrip()])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    _err(f"kernel: {inst.n} -> {reduced.n} vertices (bound {report.bound}, vc {report.vc})")
    return EXIT_OK


def _seed(args) -> int:
    env = os.environ.get("CCF_SEED")
    return int(env) if env not in (None, "") else args.seed


def cmd_generate(args) -> int:
    if args.kind == "random":
        inst = gen.gen_random(args.n, args.p, args.wmax, args.capacity, _seed(args))
        text = write_instance(inst, [f"random n={args.n} p={args.p} wmax={args.wmax} seed={_seed(args)}"])
    else:
        try:
            items = tuple(int(x) for x in args.items.split(",") if x.strip())
            bp = gen.BinPackingInstance(items, args.bin_size, args.bins)
        except ValueError as exc:
            _err(f"bad bin packing instance: {exc}")
            return EXIT_PARSE
        inst, cert = gen.from_bin_packing(bp)
        text = write_instance(inst, [f"certificate {cert}"])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        _err(f"not a directory: {root}")
        return EXIT_PARSE
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    status = EXIT_OK
    print(f"{'instance':<28} {'solver':<7} {'value':>8} {'elapsed_ms':>11}")
    for path in sorted(root.glob("*.ccf")):
        try:
            inst = read_instance(path.read_text())
        except (ParseError, OSError) as exc:
            _err(f"{path.name}: {exc}")
            status = max(status, EXIT_PARSE)
            continue
        values = {}
        for algo in algos:
            if algo in ("oracle", "vi") and inst.n > ORACLE_LIMIT:
                print(f"{path.name:<28} {algo:<7} {'skip':>8} {'-':>11}")
                continue
            t0 = time.perf_counter()
            try:
                with deadline(args.timeout_ms):
                    res = run_solver(inst, algo, literal=args.literal)
            except SolverTimeout:
                print(f"{path.name:<28} {algo:<7} {'timeout':>8} {args.timeout_ms:>11}")
                continue
            except PreconditionError:
                print(f"{path.name:<28} {algo:<7} {'skip':>8} {'-':>11}")
                continue
            ms = int(round((time.perf_counter() - t0) * 1000))
            values[algo] = res.value
            print(f"{path.name:<28} {algo:<7} {res.value:>8} {ms:>11}")
        if len(set(values.values())) > 1:
            _err(f"{path.name}: solvers disagree {values}")
            status = max(status, EXIT_FAIL)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ccf", description="Capacitated coalition formation solvers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance and print the JSON result")
    p.add_argument("instance")
    p.add_argument("--algo", choices=["auto", "oracle", "tw", "vc", "vi"], default="auto")
    p.add_argument("--cover", help="file listing vertex cover vertices (for --algo vc)")
    p.add_argument("--timeout-ms", type=int, default=0)
    p.add_argument("--output", help="also write the JSON result here")
    p.add_argument("--literal", action="store_true",
                   help="uncanonicalised DP colours and vector labels (slower)")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition (result JSON) against an instance")
    p.add_argument("instance")
    p.add_argument("partition")
    p.add_argument("--nash", action="store_true", help="also require Nash stability")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernelize", help="reduce an unweighted instance")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("generate", help="emit an instance")
    gsub = p.add_subparsers(dest="kind", required=True)
    r = gsub.add_parser("random")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--p", type=float, default=0.5)
    r.add_argument("--wmax", type=int, default=1)
    r.add_argument("--capacity", "-C", type=int, default=2)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--output")
    b = gsub.add_parser("binpack")
    b.add_argument("--items", required=True, help="comma-separated item sizes")
    b.add_argument("--bin-size", "-B", type=int, required=True)
    b.add_argument("--bins", "-k", type=int, required=True)
    b.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run several solvers over a directory of .ccf files")
    p.add_argument("directory")
    p.add_argument("--algos", default="oracle,tw,vc,vi")
    p.add_argument("--timeout-ms", type=int, default=0)
    p.add_argument("--literal", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
