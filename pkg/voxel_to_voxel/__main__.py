# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import sys

from .cli import main

sys.exit(main())
