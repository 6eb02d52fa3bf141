"""
__init__.py for sampledeval
"""
import os
import tempfile

# sampledeval package version. When merging changes to master:
# - increment 2nd digit for new features
# - increment 3rd digit for bug fixes
__version__ = "0.1.0"

# Cross-platform temporary directory
if os.name == "posix":
    TMPDIR = "/tmp/"
else:
    TMPDIR = tempfile.gettempdir()
