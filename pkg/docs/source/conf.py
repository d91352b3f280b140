# -*- coding: utf-8 -*-
#
# cog-hierarchy documentation build configuration file
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

from cog_hierarchy import __version__  # pylint: disable=wrong-import-position

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon']

templates_path = []
source_suffix = '.rst'
master_doc = 'index'

project = u'cog-hierarchy'
copyright = u''
author = u''

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

htmlhelp_basename = 'coghierarchydoc'

latex_documents = [
    (master_doc, 'coghierarchy.tex', u'cog-hierarchy Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'coghierarchy', u'cog-hierarchy Documentation', [author], 1)
]
