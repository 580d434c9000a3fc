# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('../../src/'))

# -- Project information -----------------------------------------------------

project = 'humbertkit'
copyright = '2026, rjm263'
author = 'rjm263'
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax'
]

templates_path = ['_templates']
exclude_patterns = []

add_module_names = False                        # PointCounter instead of humbertkit.counting.base.PointCounter
toc_object_entries_show_parents = "hide"
autodoc_class_signature = "separated"
autoclass_content = 'class'

# the package documents its own dataclass fields in the class docstrings
autodoc_default_options = {
    'members': True,
    'exclude-members': '__weakref__, __init__, __post_init__'
}

master_doc = "index"

# -- Napoleon settings -------------------------------------------------------

napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True

# -- Options for HTML output -------------------------------------------------

html_theme = 'furo'
html_theme_options = {
    "sidebar_hide_name": True,
}
