# -*- coding: utf-8 -*-
#
# qprocess documentation build configuration file.
#
# project, version and release are set from setup.py by build_sphinx.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'overridden in setup.py'
author = u'The qprocess authors'
copyright = u'2026, The qprocess authors'
version = 'overridden in setup.py'
release = 'overridden in setup.py'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'qprocessdoc'

man_pages = [
    ('index', 'qprocess', u'qprocess Documentation', [author], 1)
]
