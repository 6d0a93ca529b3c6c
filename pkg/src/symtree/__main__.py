import sys

from symtree.cli import main

sys.exit(main())
