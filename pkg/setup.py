from setuptools import setup, find_packages
import os

here = os.path.abspath(os.path.dirname(__file__))
README = open(os.path.join(here, 'README.txt')).read()

version = {}
exec(open(os.path.join(here, 'cosmetic', '__init__.py')).read(), version)

setup(name='django-cosmetic',
      version=version['__version__'],
      description="Exact arithmetic for Dehn fillings, lens spaces and cosmetic surgery candidates.",
      long_description=README,
      classifiers=[
          'Development Status :: 4 - Beta',
          'Environment :: Console',
          'Framework :: Django',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Operating System :: OS Independent',
          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
        ],
      keywords='django dehn surgery lens spaces slopes braids',
      license='BSD',
      packages=find_packages(exclude=['ez_setup', 'examples', 'examples.*']),
      namespace_packages=[],
      include_package_data=True,
      zip_safe=False,
      python_requires='>=3.8',
      install_requires=[
          'setuptools',
          'Django>=3.2',
          'django-appconf',
      ],
      extras_require={
          'test': ['pytest', 'pytest-django'],
          'docs': ['sphinx'],
      },
      entry_points="""
      # -*- Entry points: -*-
      [console_scripts]
      cosmetic = cosmetic.cli:main
      """,
      )
