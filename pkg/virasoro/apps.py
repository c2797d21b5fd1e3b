from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class VirasoroConfig(AppConfig):
    """
    Verma modules for the Virasoro algebra: PBW bases, Gram forms and
    singular vectors.
    """

    name = "virasoro"
    verbose_name = _("Virasoro Verma Modules")
