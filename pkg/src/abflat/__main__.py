"""Run the abflat command line with ``python -m abflat``."""

import sys

from abflat.harness import main

sys.exit(main())
