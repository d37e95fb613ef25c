import sys

from lambdadl.cli.main import main

sys.exit(main())
