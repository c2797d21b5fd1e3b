from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class ExactlinConfig(AppConfig):
    """
    Exact rational arithmetic and dense linear algebra shared by all apps.
    """

    name = "exactlin"
    verbose_name = _("Exact Linear Algebra")
