#!/usr/bin/env python3
"""Replay the checkable computations: winding values, Lambda, Evans matrix, Fox matrices, certificate."""

import logging
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.analysis.replay import run_verify_paper
from src.delivery.report import format_check_lines, format_table

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")
logger = logging.getLogger(__name__)


def main() -> int:
    logger.info("=== WINDLAB replay ===")
    report = run_verify_paper()
    print("\n" + format_table(report))
    print("\n" + format_check_lines(report))
    if not report.passed:
        logger.error(f"{len(report.failures())} check(s) failed")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
