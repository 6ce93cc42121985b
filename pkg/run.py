"""
Application entry point.
Run the DNA strand codec command line.
"""

import sys

from dotenv import load_dotenv

# Load environment variables from .env file before the config classes read them
load_dotenv()

from app.cli import run  # noqa: E402


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
