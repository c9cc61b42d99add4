"""Run the generic descent on random colourings and tabulate outcomes."""
import argparse
import collections
import random

from ramsey_descent import colouring as col
from ramsey_descent.descent import descend
from ramsey_descent.trace_check import verify_trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=24)
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--mode", default="generic", choices=["generic", "t1", "t2"])
    ap.add_argument("--chi", type=int, default=3, help="colour cap for generic mode")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    outcomes = collections.Counter()
    rejected = 0
    steps = []
    for _ in range(args.trials):
        ec = col.generate_random(rng.randint(2, args.max_n), rng.randint(1, 3), rng.randrange(10**9))
        trace = descend(ec, args.l, args.chi if args.mode == "generic" else None, args.mode)
        rejected += not verify_trace(trace, ec)
        outcomes["completed" if trace.completed else trace.outcome.kind] += 1
        steps.append(len(trace.steps))
    for kind, count in sorted(outcomes.items()):
        print(f"{kind:20s} {count}")
    print(f"mean steps {sum(steps) / len(steps):.2f}, traces rejected {rejected}")


if __name__ == "__main__":
    main()
