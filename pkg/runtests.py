#!/usr/bin/env python
# Runs the test suite with the standalone settings: ``python runtests.py
# [test labels]``.
import os
import sys

import django
from django.conf import settings
from django.test.utils import get_runner


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cosmetic.settings')
    django.setup()
    runner = get_runner(settings)()
    failures = runner.run_tests(argv or ['cosmetic'])
    return 1 if failures else 0


if __name__ == '__main__':
    sys.exit(main())
