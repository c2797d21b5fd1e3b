from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class QseriesConfig(AppConfig):
    name = "qseries"
    verbose_name = _("Characters and q-Series")
