import sys

from masabimod.cli import main

sys.exit(main())
