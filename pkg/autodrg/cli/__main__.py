""" python -m autodrg.cli
"""
import sys
from autodrg.cli import main


sys.exit(main())
