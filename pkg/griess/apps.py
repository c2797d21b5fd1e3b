from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class GriessConfig(AppConfig):
    """
    Mode calculus on the weight-2 subspace: commutators, invariant form and
    the highest-weight argument for a nilpotent element.
    """

    name = "griess"
    verbose_name = _("Weight-Two Mode Calculus")
