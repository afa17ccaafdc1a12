import sys

from brokenset.cli import main

sys.exit(main())
