import sys

from kernelkit.main import main

sys.exit(main())
