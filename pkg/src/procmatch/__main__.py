import sys

from procmatch.cli import main

sys.exit(main())
