"""Entry point for ``python -m relchar``."""

import sys

from .cli import main

sys.exit(main())
