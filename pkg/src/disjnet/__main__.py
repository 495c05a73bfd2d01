import sys

from disjnet.cli import main

sys.exit(main())
