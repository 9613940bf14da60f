#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# mlvlab documentation build configuration file.

import sys
import os

# Insert the project root dir as the first element in the PYTHONPATH so that
# the source package is imported with its version.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)
sys.path.insert(0, project_root)

import mlvlab  # noqa E402

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'mlvlab'
copyright = u'mlvlab contributors'

version = mlvlab.__version__
release = mlvlab.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'mlvlabdoc'

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'mlvlab', u'mlvlab Documentation', [u'mlvlab contributors'], 1)
]
