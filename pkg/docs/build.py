#!/usr/bin/env python3
"""Render the API reference into a single docs/index.html."""
import os
import shutil
import subprocess

os.chdir(os.path.abspath(os.path.dirname(__file__)))

subprocess.run(["sphinx-build", "-E", "-b", "singlehtml", ".", "build"], check=True)

shutil.move("build/index.html", "index.html")
shutil.rmtree("build")
