# -*- coding: utf-8 -*-
#
# django-cosmetic documentation build configuration file.

import sys, os
sys.path.insert(0, os.path.abspath('..'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cosmetic.settings')

import django
django.setup()

from cosmetic import __version__

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'django-cosmetic'
copyright = u'2026, the django-cosmetic developers'

version = '.'.join(__version__.split('.')[:2])
release = __version__

exclude_trees = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'django-cosmeticdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'django-cosmetic.tex', u'django-cosmetic Documentation',
   u'the django-cosmetic developers', 'manual'),
]
