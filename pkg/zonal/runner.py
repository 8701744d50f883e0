"""Runner: orchestrates verification suites.

This is the main entry point that coordinates:
1. Resolving the requested suites from the registry
2. Running every check (exact, numeric and Monte-Carlo)
3. Optionally recording the run in the report store
"""

import logging

from .config import SETTINGS_ERROR, settings
from .models import Base, ComparisonRecord, VerificationRun, utc_now
from .verify.checks import RunContext
from .verify.suites import SUITES, SuiteResult, run_suite


# Set root logger to INFO to suppress verbose third-party logs
logging.basicConfig(
    level=logging.INFO,
    format="[%(levelname)s] %(asctime)s | %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

logger = logging.getLogger(__name__)
log_level = logging.DEBUG if settings.DEBUG else logging.INFO
logging.getLogger("zonal").setLevel(log_level)

# Suppress verbose logs from third-party libraries
logging.getLogger("sqlalchemy").setLevel(logging.WARNING)
logging.getLogger("matplotlib").setLevel(logging.WARNING)


def record_run(result: SuiteResult, ctx: RunContext, session_factory=None) -> str:
    """Store a finished run and its reports; returns the run id."""
    if session_factory is None:
        from .db import SessionLocal, engine

        Base.metadata.create_all(bind=engine)
        session_factory = SessionLocal
    with session_factory() as session:
        run = VerificationRun(
            suite=result.name,
            n_samples=ctx.n_samples,
            seed=ctx.seed,
            jobs=ctx.jobs,
            status="failed" if result.failed else "passed",
            finished_at=utc_now(),
            meta={"quad_order": ctx.quad_order, "discrepancies": [d.item for d in result.discrepancies if d.flagged]},
        )
        for r in result.reports:
            est = r.estimate
            run.records.append(
                ComparisonRecord(
                    quantity=r.id,
                    closed=r.closed,
                    mean=est.mean if est else None,
                    mean_imag=est.mean_imag if est else None,
                    stderr=est.stderr if est else None,
                    n_samples=est.n_samples if est else None,
                    z=r.z if r.z is None or r.z != float("inf") else None,
                    verdict=r.verdict,
                    note=r.note,
                )
            )
        session.add(run)
        session.commit()
        logger.debug(f"✓ Recorded run {run.id[:8]}... ({len(result.reports)} reports)")
        return run.id


def run_verification(suite: str, ctx: RunContext | None = None, record: bool | None = None) -> SuiteResult:
    """Run one suite (or ``all``) with banners and per-step progress."""
    ctx = ctx or RunContext()
    record = settings.RECORD_RUNS if record is None else record
    names = [s["name"] for s in SUITES] if suite == "all" else [suite]

    logger.info("=" * 70)
    logger.info(f"STARTING: verification suite '{suite}' (n={ctx.n_samples}, seed={ctx.seed}, jobs={ctx.jobs})")
    logger.info("=" * 70)

    result = SuiteResult(suite)
    for idx, name in enumerate(names, 1):
        logger.info(f"\n[STEP {idx}/{len(names)}] {name.upper()}")
        logger.info("-" * 70)
        part = run_suite(name, ctx)
        failed = sum(r.failed for r in part.reports)
        logger.info(f"  {'✗' if failed else '✓'} {len(part.reports)} reports, {failed} failed")
        result.extend(part)

    if record:
        try:
            record_run(result, ctx)
        except Exception as e:
            logger.error(f"✗ Could not record run: {str(e)[:80]}")

    logger.info("\n" + "=" * 70)
    if result.failed:
        logger.info("✗ Verification finished with failures")
    else:
        logger.info("✓ Verification completed successfully!")
    logger.info("=" * 70 + "\n")
    return result


if __name__ == "__main__":
    if SETTINGS_ERROR is not None:
        logger.critical(f"FATAL ERROR: {SETTINGS_ERROR}")
        raise SystemExit(2)
    try:
        outcome = run_verification("all")
        raise SystemExit(1 if outcome.failed else 0)
    except SystemExit:
        raise
    except Exception as e:
        logger.critical(f"FATAL ERROR: {e}", exc_info=True)
        raise
