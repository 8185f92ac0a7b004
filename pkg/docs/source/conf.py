# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath('../../'))

# -- Project information -----------------------------------------------------

project = 'locochrome'
copyright = '2026-present, locochrome contributors'
author = 'locochrome contributors'

version = ''
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
source_parsers = {
    '.md': 'recommonmark.parser.CommonMarkParser',
}
master_doc = 'index'
exclude_patterns = []
pygments_style = 'sphinx'

# autodoc imports the package; skip the PyPI lookup while building
os.environ.setdefault('LOCOCHROME_NO_VERSION_CHECK', '1')

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'locochromedoc'

# -- Options for LaTeX, manual page and Texinfo output ------------------------

latex_documents = [
    (master_doc, 'locochrome.tex', 'locochrome Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'locochrome', 'locochrome Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'locochrome', 'locochrome Documentation', author, 'locochrome',
     'Exact local chromatic numbers of graphs and digraphs.', 'Miscellaneous'),
]
