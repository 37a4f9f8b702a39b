"""Classification and solving of real cubics through the Tusi form."""

from ._tusi import *  # noqa: F401,F403
from ._tusi import __doc__, run_cli  # noqa: F401


def main() -> int:
    import sys

    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
