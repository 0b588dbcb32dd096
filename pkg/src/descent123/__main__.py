import sys

from descent123.cli import main

sys.exit(main())
