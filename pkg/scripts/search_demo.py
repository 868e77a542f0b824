#!/usr/bin/env python3
"""Search demo: small Q*-scripts that succeed, then the bounded P -> Q search that must fail."""

import logging
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.data.catalog import P0, Q
from src.groups.grammar import parse_word
from src.presentations.moves import Conjugate, Invert, Mult, apply_script
from src.presentations.search import SearchBounds, explore

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")
logger = logging.getLogger(__name__)


def main():
    print(f"\n{'='*60}")
    print("WINDLAB - Q*-move search demo")
    print(f"{'='*60}\n")

    hidden = [Mult(2, 1), Conjugate(2, parse_word("xy^-1")), Invert(1)]
    goal = apply_script(P0, hidden)
    print(f"--- {P0} -> {goal} ---")
    report = explore(P0, goal, SearchBounds(max_moves=4, max_conjugator_len=2))
    for move in report.script or []:
        print(f"  {move}")
    print(report.stats().to_string(index=False))

    print(f"\n--- {P0} -> Q ---")
    bounds = SearchBounds(max_moves=6, max_conjugator_len=2)
    started = time.perf_counter()
    report = explore(P0, Q, bounds)
    elapsed = time.perf_counter() - started
    print(f"script: {report.script}")
    print(f"states seen: {report.states_seen} in {elapsed:.1f}s")
    print(report.stats().to_string(index=False))


if __name__ == "__main__":
    main()
