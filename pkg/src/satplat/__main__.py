import sys

from satplat.cli import main

sys.exit(main())
