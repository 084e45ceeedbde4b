import os
import sys

sys.path.insert(0, os.path.abspath('../../src'))

extensions = ['sphinx.ext.mathjax', 'sphinx.ext.autodoc', 'sphinx.ext.autosummary',
              'sphinx_automodapi.automodapi', 'sphinx.ext.napoleon']

add_module_names = False

autosummary_generate = True

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'PlanTuran'
copyright = 'PlanTuran developers'
author = 'PlanTuran developers'

exec(open(os.path.abspath('../../src/planturan/version.py')).read())
version = release = ptr_version

exclude_patterns = []
pygments_style = 'sphinx'
html_static_path = []
html_theme = 'sphinx_rtd_theme'
html_title = 'PlanTuran'

html_domain_indices = True
html_use_index = True
html_split_index = False
html_show_sourcelink = False
html_show_sphinx = False
html_show_copyright = True

primary_domain = 'py'
