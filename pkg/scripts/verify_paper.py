#!/usr/bin/env python3
"""Run the named check suite and print the row table.

Same behavior as `arl verify-paper`, kept as a script so the suite can be
run straight from a checkout without installing the entry point:

    python3 scripts/verify_paper.py [--only GROUP] [--seed N]
                                    [--budget-nodes N] [--budget-secs S]

Exit code 0 when every row passes, 1 otherwise.
"""

import argparse
import sys

from arl.search import SearchBudget
from arl.verify import DEFAULT_SEED, suite_counts, suite_to_text, verify_paper_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", default=None, help="run only matching check groups")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--budget-nodes", type=int, default=None)
    ap.add_argument("--budget-secs", type=float, default=None)
    args = ap.parse_args()

    budget = None
    if args.budget_nodes is not None or args.budget_secs is not None:
        budget = SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_secs)

    rows = verify_paper_suite(budget, seed=args.seed, only=args.only)
    if args.only and not rows:
        print(f"error: --only {args.only!r} matches no check group", file=sys.stderr)
        return 2
    sys.stdout.write(suite_to_text(rows))
    _, nfail, _ = suite_counts(rows)
    return 1 if nfail else 0


if __name__ == "__main__":
    raise SystemExit(main())
