import logging
import sys

from pydantic import ValidationError

from config.settings import get_settings
from controllers.cli_controller import run


def configure_logging() -> None:
    try:
        level = get_settings().log_level
    except ValidationError:
        # reported by run() with exit code 2
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main() -> int:
    configure_logging()
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
