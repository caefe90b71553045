import sys

from ldseq.main import main

sys.exit(main())
