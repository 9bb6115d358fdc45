# vequil documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from vequil import __VERSION__  # noqa: E402

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = {".rst": "restructuredtext"}
master_doc = "index"

project = u"vequil"
copyright = u"2026, The vequil developers"
author = u"The vequil developers"

# The short X.Y version.
version = ".".join(__VERSION__.split(".")[:2])
# The full version, including alpha/beta/rc tags.
release = __VERSION__

language = "en"
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"
html_theme_options = {
    "logo_name": "vequil",
    "description": "exact verification of weak vector equilibrium problems",
}
htmlhelp_basename = "vequildoc"

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "vequil", u"vequil Documentation", [author], 1)]
