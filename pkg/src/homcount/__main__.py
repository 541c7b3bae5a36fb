import sys

from homcount.cli import main

sys.exit(main())
