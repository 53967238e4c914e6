import os
import sys

# Add the project root to sys.path to ensure modules can be imported
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from cli.runner import main

if __name__ == "__main__":
    sys.exit(main())
