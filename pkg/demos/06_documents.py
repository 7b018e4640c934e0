"""
JSON documents and the command line
===================================

The same documents the ``semispace`` command reads and writes.
"""

import json
import subprocess
import sys
import tempfile

from semispace.core import sierpinski
from semispace.documents import classification_report, decode_space, dumps, encode_space

doc = encode_space(sierpinski(), ["open", "closed"])
print(dumps(doc, compact=True))
space, names = decode_space(doc)
print("round trip:", space == sierpinski(), names)

report = classification_report(space, names)
print("profile:", report["profile"])

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(doc, fh)
proc = subprocess.run([sys.executable, "-m", "semispace", "classify", fh.name, "--trace"],
                      capture_output=True, text=True)
print("exit", proc.returncode)
print(proc.stderr)
