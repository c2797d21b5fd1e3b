from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CoreConfig(AppConfig):
    """
    Configuration for the 'core' application: the management commands,
    their shared configuration loader and the output renderers.
    """

    name = "core"
    verbose_name = _("Command Line Front End")
