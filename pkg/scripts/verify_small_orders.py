"""
Exhaustive verification run over every small order.

Audits all isomorphism classes of each order, checks the class counts against
the known sequence, compares the empirical c_n with the prior constant 0.4 and
writes one summary row per order plus the equality cases.
"""

import argparse
import logging
import sys
from pathlib import Path

import pandas as pd

sys.path.insert(0, str(Path(__file__).parent.parent))

from spreadcheck.config import DEFAULT_TOLERANCES, PRIOR_MINMAX_CONSTANT  # noqa: E402
from spreadcheck.enumeration import exhaustive_audit  # noqa: E402

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(
        description="Audit every graph up to a given order and tabulate the results"
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=8,
        help="Largest order to enumerate (default: 8; 9 and 10 need --long)"
    )
    parser.add_argument(
        "--long",
        action="store_true",
        help="Allow orders 9 and 10 (hours of CPU time)"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="Worker processes (default: 1)"
    )
    parser.add_argument(
        "--output-dir",
        default="results",
        help="Directory for the summary CSV and equality lists (default: results)"
    )

    args = parser.parse_args()
    output_dir = Path(args.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    logger.info("=" * 60)
    logger.info("Small-order verification")
    logger.info("=" * 60)
    logger.info(f"Orders 2..{args.max_order}, {args.workers} worker(s)")
    logger.info(f"Audit tolerance: {DEFAULT_TOLERANCES.audit}")

    rows = []
    failed = []
    orders = range(2, args.max_order + 1)
    for step, n in enumerate(orders, start=1):
        logger.info(f"\n[{step}/{len(orders)}] Order {n}...")
        report = exhaustive_audit(n, workers=args.workers, allow_long=args.long, progress=True)
        rows.append(report.summary_frame().assign(wall_time=report.wall_time))

        equality_file = output_dir / f"equality_n{n}.g6"
        equality_file.write_text("".join(f"{code}\n" for code in report.equality_cases))
        logger.info(f"  {report.headline()}")
        logger.info(f"  Equality cases: {len(report.equality_cases)} -> {equality_file}")

        if not report.passed:
            logger.error(f"  ✗ Order {n}: {len(report.violations)} violations, "
                         f"{len(report.equality_mismatches)} equality mismatches")
            failed.append(n)
        if report.c_n < PRIOR_MINMAX_CONSTANT:
            logger.error(f"  ✗ Order {n}: c_n = {report.c_n!r} below {PRIOR_MINMAX_CONSTANT}")
            failed.append(n)

    summary = pd.concat(rows, ignore_index=True)
    summary_file = output_dir / "summary.csv"
    summary.to_csv(summary_file, index=False, float_format="%.17g")
    logger.info(f"\nSummary saved to: {summary_file}")
    logger.info("\n" + summary.to_string(index=False))

    logger.info("\n" + "=" * 60)
    if failed:
        logger.error(f"✗ Verification failed for orders {sorted(set(failed))}")
        return 1
    logger.info("✓ All orders verified")
    logger.info("=" * 60)
    return 0


if __name__ == "__main__":
    exit(main())
