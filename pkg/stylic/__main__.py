import sys

from stylic.cli import main

if __name__ == "__main__":
    sys.exit(main())
