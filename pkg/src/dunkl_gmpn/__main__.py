"""Allow ``python -m dunkl_gmpn``."""
import sys

from .cli import main

sys.exit(main())
