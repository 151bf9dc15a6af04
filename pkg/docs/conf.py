import os
import sys

sys.path.insert(0, os.path.abspath(".."))

project = "bignet"
master_doc = "index"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]

autodoc_member_order = "bysource"
napoleon_google_docstring = True

html_theme_options = {
    "show_powered_by": False,
}
html_show_copyright = False
html_show_sourcelink = False
html_sidebars = {
    "**": []
}
