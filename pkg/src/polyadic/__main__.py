import sys

from polyadic.cli import main

sys.exit(main())
