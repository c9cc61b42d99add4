"""Command-line interface.

Exit codes: 0 success/accept, 1 reject or violation found, 2 invalid input,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import colouring
from .bfs import OddCycleCertificate
from .bounds import compute_bounds
from .descent import MODES, descend, dumps_trace, extract_theorem1, extract_theorem2, loads_trace
from .errors import BudgetExceeded, FormatError
from .graph import loads_graph
from .oracle import efrs_check, find_mono_odd_cycle, verify_certificate
from .trace_check import verify_trace

EPILOG = (
    "The Erdos-Graham quantity L(k) (shortest odd cycle in k-colourings of "
    "K_{2^k+1}) has no command: the short-cycle bound is trivial in that regime."
)


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, newline="\n")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def cmd_gen(args) -> int:
    if args.kind == "doubling":
        ec = colouring.generate_doubling(args.l, args.k)
    else:
        ec = colouring.generate_random(args.n, args.k, args.seed)
    _write(args.out, colouring.dumps(ec))
    return 0


def cmd_bounds(args) -> int:
    report = compute_bounds(args.k, args.l, args.b, args.chi)
    print(report.as_text())
    print()
    print(report.as_kv())
    return 0


def cmd_descend(args) -> int:
    ec = colouring.loads(_read(args.input))
    trace = descend(ec, args.l, args.chi, args.mode)
    _write(args.trace, dumps_trace(trace))
    if trace.completed:
        print(f"completed steps={len(trace.steps)} k={trace.k} l={trace.l} chi={trace.chi}")
        return 0
    v = trace.outcome
    print(f"violation {v.kind} v={v.v} c={v.c} i={v.i} j={v.j} steps={len(trace.steps)}")
    return 1


def cmd_extract(args) -> int:
    ec = colouring.loads(_read(args.input))
    if args.b is not None:
        cert = extract_theorem2(ec, args.b)
        if ec.locality() == 1:
            print("note: k = 1 is the degenerate regime; certificate uses l = 1", file=sys.stderr)
    else:
        cert = extract_theorem1(ec, args.l)
    _write(args.cert, cert.to_line() + "\n")
    print(cert.to_line())
    return 0


def cmd_verify(args) -> int:
    ec = colouring.loads(_read(args.input))
    if args.what == "cert":
        cert = OddCycleCertificate.from_line(_read(args.cert).strip())
        ok = verify_certificate(ec, cert)
        print("accept" if ok else "reject")
        return 0 if ok else 1
    check = verify_trace(loads_trace(_read(args.trace)), ec)
    if check:
        print("accept")
        return 0
    print(f"reject step={check.step} reason={check.reason}")
    return 1


def cmd_oracle(args) -> int:
    if args.what == "odd-cycle":
        ec = colouring.loads(_read(args.input))
        cert = find_mono_odd_cycle(ec, args.max_len)
        if cert is None:
            print("none")
            return 0
        print(cert.to_line())
        return 1
    report = efrs_check(loads_graph(_read(args.graph)), args.l)
    if report:
        print("accept")
        return 0
    v, i, chi = report.counterexample
    print(f"counterexample v={v} i={i} chi={chi}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramsey-descent", epilog=EPILOG)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a colouring file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("doubling", help="lower-bound colouring on l*2^k vertices")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out", required=True)
    g = gsub.add_parser("random", help="uniform random colouring")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    b = sub.add_parser("bounds", help="evaluate the closed-form bounds", epilog=EPILOG)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--b", help="base > 2, e.g. 2.5, 5/2 or sqrt(7)")
    b.add_argument("--chi", type=int)
    b.set_defaults(func=cmd_bounds)

    d = sub.add_parser("descend", help="run the weight descent and write a trace")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--mode", choices=MODES, default="generic")
    d.add_argument("--chi", type=int)
    d.add_argument("--trace", required=True)
    d.set_defaults(func=cmd_descend)

    e = sub.add_parser("extract", help="extract a monochromatic odd cycle certificate")
    e.add_argument("--in", dest="input", required=True)
    grp = e.add_mutually_exclusive_group(required=True)
    grp.add_argument("--b", help="short-cycle mode, base > 2")
    grp.add_argument("--l", type=int, help="exact length 2l+1 mode")
    e.add_argument("--cert", required=True)
    e.set_defaults(func=cmd_extract)

    v = sub.add_parser("verify", help="check a certificate or a trace")
    vsub = v.add_subparsers(dest="what", required=True)
    vc = vsub.add_parser("cert")
    vc.add_argument("--in", dest="input", required=True)
    vc.add_argument("--cert", required=True)
    vt = vsub.add_parser("trace")
    vt.add_argument("--in", dest="input", required=True)
    vt.add_argument("--trace", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force oracles")
    osub = o.add_subparsers(dest="what", required=True)
    oc = osub.add_parser("odd-cycle")
    oc.add_argument("--in", dest="input", required=True)
    oc.add_argument("--max-len", type=int, required=True)
    oe = osub.add_parser("efrs")
    oe.add_argument("--graph", required=True)
    oe.add_argument("--l", type=int, required=True)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (FormatError, ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
