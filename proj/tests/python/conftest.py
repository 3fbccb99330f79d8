import os
import sys

build = os.environ.get("PADIC_HENON_PYTHON_DIR")
if build:
    sys.path.insert(0, build)
