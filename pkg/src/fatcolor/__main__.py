import sys

from fatcolor.cli import main

sys.exit(main())
