"""
Main script for the rueppel-lab command line. Installed as the `rueppel-lab`
console script; can also be run directly.

Configuration is done via environment variables or a rueppel-lab.toml file
in the working directory. The most used keys are:

RUEPPEL_LAB_HANKEL_DEPTH_INT    Largest Hankel order for integer checks (40).

RUEPPEL_LAB_HANKEL_DEPTH_POLY   Largest Hankel order over Poly2 (10).

RUEPPEL_LAB_JOBS                Worker processes (1).

OEIS_OFFLINE                    Never touch the network when set to 1.

"""
import sys

from rueppel_lab.cli import main


def run():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
