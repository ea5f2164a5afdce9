import sys

from chaincalc.cli import main

sys.exit(main())
