"""
Configurações do Django para o projeto Arcmot.
Verificação exata das integrais motívicas sobre arcos planos e das
identidades das séries geradoras.
"""

import os
from pathlib import Path
import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Environment variables
env = environ.Env(
    DEBUG=(bool, False)
)
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

# Só o Django usa a chave; não há sessões nem formulários
SECRET_KEY = env('SECRET_KEY', default='arcmot-dev-only')

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Django apps
    'django.contrib.contenttypes',

    # Local apps
    'kernel.apps.KernelConfig',
    'numtheory.apps.NumtheoryConfig',
    'integrals.apps.IntegralsConfig',
    'deformed.apps.DeformedConfig',
    'series.apps.SeriesConfig',
    'reports.apps.ReportsConfig',
]


# Database (execuções registradas com verify --record)
# https://docs.djangoproject.com/en/4.2/ref/settings/#databases

DATABASES = {
    'default': env.db('DATABASE_URL', default='sqlite:///db.sqlite3')
}


# Internationalization

LANGUAGE_CODE = 'pt-br'

TIME_ZONE = 'America/Sao_Paulo'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/4.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Verification Settings
ARCMOT_MAX_ORDER = env.int('ARCMOT_MAX_ORDER', default=10)  # N padrão dos comandos
ARCMOT_MODE = env('ARCMOT_MODE', default='exact')  # exact | modp | both
ARCMOT_SEED = env.int('ARCMOT_SEED', default=20240601)
ARCMOT_MODP_PRIME = env.int('ARCMOT_MODP_PRIME', default=2**61 - 1)
ARCMOT_MODP_TRIALS = env.int('ARCMOT_MODP_TRIALS', default=20)
ARCMOT_S_LEMMA_MAX = env.int('ARCMOT_S_LEMMA_MAX', default=0)  # 0: usa a ordem máxima
ARCMOT_REPORT_TIMINGS = env.bool('ARCMOT_REPORT_TIMINGS', default=False)
ARCMOT_LOG_LEVEL = env('ARCMOT_LOG_LEVEL', default='WARNING')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': ARCMOT_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('kernel', 'numtheory', 'integrals', 'deformed', 'series', 'reports')
    },
}
