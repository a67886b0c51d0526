"""
Django settings for bicrank_lab project.

El proyecto no expone HTTP ni usa base de datos: se maneja completamente a
través de comandos de gestión (``python manage.py expand|verify|threshold``).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-bicrank-lab-local-key')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = os.getenv('ALLOWED_HOSTS', 'localhost,127.0.0.1').split(',')


# Application definition

INSTALLED_APPS = [
    # Third party apps
    "rest_framework",

    # Local apps
    "bicrank",
]

# Sin base de datos: todo el cálculo es en memoria
DATABASES = {}

LANGUAGE_CODE = "es-cl"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# REST Framework settings (solo se usan serializers y renderers)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# Configuración del laboratorio
BICRANK_LAB = {
    'DEFAULT_PRECISION': int(os.getenv('BICRANK_DEFAULT_PRECISION', '192')),
    'MAX_PRECISION': int(os.getenv('BICRANK_MAX_PRECISION', '4096')),
    'TABLE_MAX_ORDER': int(os.getenv('BICRANK_TABLE_MAX_ORDER', '400')),
    'IDENTITY_ORDER': int(os.getenv('BICRANK_IDENTITY_ORDER', '600')),
    'P_CROSSCHECK_ORDER': int(os.getenv('BICRANK_P_CROSSCHECK_ORDER', '300')),
    'REPORT_SCHEMA_VERSION': 1,
}

# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'bicrank': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
