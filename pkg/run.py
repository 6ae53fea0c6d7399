#!/usr/bin/env python3
"""
Start the SRG toolkit command line
"""

import sys

from dotenv import load_dotenv

load_dotenv()

from app.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
