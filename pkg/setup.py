from setuptools import find_packages, setup
exec(open('radio_metrics/_version.py').read())
setup(
  name = 'radio_metrics',
  packages = find_packages(exclude=['tests']),
  version=__version__,
  description = 'LTE radio metric prediction from propagation estimates and a learned correction network.',
  long_description = open('README.md').read(),
  long_description_content_type = 'text/markdown',
  python_requires = '>=3.8',
  install_requires = [
    'numpy>=1.20',
    'matplotlib',
    'pandas>=1.5',
    'shapely>=2.0',
    'simplekml',
    'rasterio>=1.3',
    'geojson>=3.0',
  ],
  extras_require = {'test': ['pytest']},
  entry_points = {'console_scripts': ['radio-metrics=radio_metrics.cli:main']},
  keywords = ['LTE', 'RSRP', 'RSRQ', 'RSSI', 'path loss', 'ray tracing', 'radio propagation'],
  classifiers = [],
)
