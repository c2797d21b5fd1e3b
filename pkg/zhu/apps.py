from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class ZhuConfig(AppConfig):
    name = "zhu"
    verbose_name = _("Zhu Algebra and Fusion Rules")
