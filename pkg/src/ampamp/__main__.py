import sys

from ampamp.cli.main import main

sys.exit(main())
