import sys

from cosmetic.cli import main

sys.exit(main())
