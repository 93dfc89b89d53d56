import sys

from genphi.cli import main

sys.exit(main())
