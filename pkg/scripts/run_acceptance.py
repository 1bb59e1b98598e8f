import argparse
import logging
import os
import sys

from tqdm import tqdm

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import get_settings  # noqa: E402
from logic.profiles import PROFILE_NAMES, LogicProfile  # noqa: E402
from logic.search import SearchBudget  # noqa: E402
from services.corpus import CHECKS, CheckOptions, run_checks, sequent_corpus  # noqa: E402


def run_acceptance(profile: LogicProfile, max_connectives: int, max_context: int, names) -> dict:
    settings = get_settings()
    opts = CheckOptions(
        budget=SearchBudget(
            max_connectives=settings.max_connectives,
            node_cap=settings.node_cap,
            result_cap=settings.result_cap,
        ),
        oracle_max_connectives=settings.oracle_max_connectives,
        oracle_class_cap=settings.oracle_class_cap,
        rewrite_step_cap=settings.rewrite_step_cap,
        max_exchanges=min(settings.max_exchanges, 1),
    )
    sequents = list(sequent_corpus(("X", "Y"), max_connectives, max_context, profile))
    print(f"{len(sequents)} sequents, profile {profile.name}")

    return run_checks(sequents, profile, opts, names, progress=tqdm)


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the acceptance properties over the small-sequent corpus")
    parser.add_argument("--profile", choices=PROFILE_NAMES, default="base")
    parser.add_argument("--max-connectives", type=int, default=4)
    parser.add_argument("--max-context", type=int, default=2)
    parser.add_argument("--check", action="append", choices=sorted(CHECKS), help="run only these checks")
    args = parser.parse_args()

    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    reports = run_acceptance(
        LogicProfile.parse(args.profile), args.max_connectives, args.max_context, args.check or list(CHECKS)
    )

    print(f"\n{'check':<20}{'checked':>10}{'skipped':>10}{'caveats':>10}{'failures':>10}")
    failed = False
    for name, report in reports.items():
        print(f"{name:<20}{report.checked:>10}{report.skipped:>10}{len(report.caveats):>10}{len(report.failures):>10}")
        for msg in report.failures[:5]:
            print(f"    {msg}")
        failed = failed or not report.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
