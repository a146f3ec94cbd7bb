import sys

from motivec.cli import main

sys.exit(main())
