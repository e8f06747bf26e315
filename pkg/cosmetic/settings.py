# Standalone settings for the ``cosmetic`` console script and the test
# runner. Projects embedding the app use their own settings module.

SECRET_KEY = 'cosmetic-standalone'

INSTALLED_APPS = [
    'cosmetic',
]

DATABASES = {}

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'cosmetic': {
            'handlers': ['stderr'],
            'level': 'WARNING',
        },
    },
}
