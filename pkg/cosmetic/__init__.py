# django-cosmetic: Dehn filling invariants on torus boundaries and the
# search for cosmetic filling pairs, packaged as a reusable Django app.

__version__ = '1.0.0'
