import sys

from fibperm.cli import main

sys.exit(main())
