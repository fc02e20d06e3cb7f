import os
import sys

# Add project root to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from strongce.cli import main

if __name__ == "__main__":
    sys.exit(main())
