from core.management.algebra_command import AlgebraCommand
from exactlin.matrix import format_rational
from qseries.characters import lattice_decomposition_check


def coefficients(series) -> list[str]:
    return [format_rational(v) for v in series.coeffs]


class Command(AlgebraCommand):
    help = "Checks eta * sum_m (2m + 1) ch L(1, m^2) against the theta series of the rank-one lattice."
    kind = "decomp-check"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--order", type=int, default=None)

    def compute(self, config, **options):
        order = config.series_order if options["order"] is None else options["order"]
        check = lattice_decomposition_check(order)
        return {
            "order": order,
            "holds": check.holds,
            "virasoro_side": coefficients(check.virasoro_side),
            "theta": coefficients(check.theta),
            "residual": coefficients(check.residual),
            "ok": check.holds,
        }
