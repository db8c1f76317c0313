import sys

from superspecial.verifier_cli import main

if __name__ == '__main__':
    sys.exit(main())
