"""
Django settings for the c1_fusion project.

The project has no web surface and no database: the apps are exact-arithmetic
computations driven from management commands.
Reference:
- https://docs.djangoproject.com/en/5.2/topics/settings/
- https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
import environ

# ==============================================================================
# BASE & ENVIRONMENT CONFIGURATION
# ==============================================================================

# --- Base directory ---
BASE_DIR = Path(__file__).resolve().parent.parent

# --- Initialize environment handling ---
env = environ.Env(
    DEBUG=(bool, False)
)

# --- Determine which .env file to load ---
DJANGO_ENV = os.environ.get("DJANGO_ENV", "dev")  # default to 'dev'

env_file = BASE_DIR / f".env.{DJANGO_ENV}"

if env_file.exists():
    environ.Env.read_env(env_file)

# --- Core Django settings ---
SECRET_KEY = env("SECRET_KEY", default="c1-fusion-local-key")
DEBUG = env.bool("DEBUG", default=False)
ALLOWED_HOSTS = []

# ==============================================================================
# APPLICATION DEFINITION
# ==============================================================================

INSTALLED_APPS = [
    # 1. Django core apps
    "django.contrib.contenttypes",
    "django.contrib.auth",

    # 2. Third-party apps
    "rest_framework",

    # 3. Local apps
    "exactlin.apps.ExactlinConfig",
    "virasoro.apps.VirasoroConfig",
    "zhu.apps.ZhuConfig",
    "qseries.apps.QseriesConfig",
    "griess.apps.GriessConfig",
    "core.apps.CoreConfig",
]

# ==============================================================================
# DATABASE CONFIGURATION
# (pure computation, nothing is persisted)
# ==============================================================================

DATABASES = {}

# ==============================================================================
# INTERNATIONALIZATION / LOCALIZATION
# ==============================================================================

LANGUAGE_CODE = "en"
TIME_ZONE = "UTC"
USE_I18N = True
USE_TZ = True

# ==============================================================================
# ALGEBRA CONFIGURATION (overridable per run with --config FILE)
# ==============================================================================

ALGEBRA = {
    "MAX_LEVEL": env.int("ALGEBRA_MAX_LEVEL", default=8),
    "SERIES_ORDER": env.int("ALGEBRA_SERIES_ORDER", default=50),
    "OUTPUT_FORMAT": env.str("ALGEBRA_OUTPUT_FORMAT", default="text"),
    # the nilpotent-case replay never leaves weight <= 6
    "WEIGHT_CAP": env.int("ALGEBRA_WEIGHT_CAP", default=6),
    "REWRITE_BUDGET": env.int("ALGEBRA_REWRITE_BUDGET", default=20000),
    "GROWTH_WINDOW": (
        env.int("ALGEBRA_GROWTH_WINDOW_START", default=50),
        env.int("ALGEBRA_GROWTH_WINDOW_END", default=200),
    ),
}

# ==============================================================================
# LOGGING CONFIGURATION
# ==============================================================================

LOG_LEVEL = env.str("LOG_LEVEL", default="WARNING")
LOG_FORMAT = env.str("LOG_FORMAT", default="verbose")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "[{asctime}] [{levelname}] {name}: {message}",
            "style": "{",
        },
        "simple": {"format": "{levelname} {message}", "style": "{"},
        "json": {
            "()": "pythonjsonlogger.json.JsonFormatter",
            "fmt": "%(asctime)s %(levelname)s %(name)s %(message)s",
        },
    },
    "handlers": {
        # stderr keeps command stdout byte-stable
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": LOG_FORMAT,
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
        },
        "exactlin": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "virasoro": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "zhu": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "qseries": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "griess": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "core": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "audit": {
            "handlers": ["console"],
            "level": env.str("AUDIT_LOG_LEVEL", default="INFO"),
            "propagate": False,
        },
    },
}
