from setuptools import setup
from codecs import open
from os import path
from cohomdet import __version__

# to update
# python setup.py sdist bdist_wheel
# twine upload --skip-existing dist/*


here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

# get the dependencies and installs
with open(path.join(here, 'requirements.txt'), encoding='utf-8') as f:
    all_reqs = f.read().split('\n')

install_requires = [x.strip() for x in all_reqs if x.strip() and not x.startswith('#') and 'git+' not in x]
dependency_links = [x.strip().replace('git+', '') for x in all_reqs if x.startswith('git+')]

setup(
    name='cohomdet',
    version=__version__,

    description='Exact cohomology determinants of 3-manifold cup product and Massey forms',
    long_description=long_description,
    long_description_content_type="text/markdown",

    install_requires=install_requires,
    dependency_links=dependency_links,

    author='The cohomdet Developers',

    entry_points={
        'console_scripts': ['cohomdet=cohomdet.client:main']
    },
    packages=['cohomdet',
              'cohomdet.core',
              'cohomdet.utils',
              'cohomdet.schema',
              'cohomdet.corpus',
              'cohomdet.test'],
    package_data={
        '': ['*.json', 'data/*.json'],
    },
    include_package_data=True,

    license='Apache 2.0',
    classifiers=[
      'Development Status :: 3 - Alpha',
      'Programming Language :: Python :: 3.8',
      'Programming Language :: Python :: 3.9',
      'Programming Language :: Python :: 3.10',
    ],
    keywords=[
        'topology',
        '3-manifold',
        'cohomology',
        'cup product',
        'massey product',
        'alexander polynomial',
        'determinant'
    ]
)
