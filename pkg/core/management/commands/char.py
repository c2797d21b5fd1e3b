from core.management.algebra_command import AlgebraCommand, rational_argument
from exactlin.matrix import format_rational
from qseries.characters import irr_character_c1, verma_character
from qseries.series import eta_series, theta_series

KINDS = ("verma", "irr", "eta", "theta")


def series_payload(series) -> dict:
    return {
        "offset": format_rational(series.offset),
        "order": series.order,
        "coefficients": [format_rational(v) for v in series.coeffs],
        "text": str(series),
    }


class Command(AlgebraCommand):
    help = "q-character of a Verma or irreducible module at c = 1, or the eta and theta series."
    kind = "char"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--kind", choices=KINDS, required=True)
        parser.add_argument("--c", type=rational_argument, default=None, help="central charge for --kind verma (default 1)")
        parser.add_argument("--h", type=rational_argument, default=None)
        parser.add_argument("--order", type=int, default=None)

    def compute(self, config, **options):
        kind = options["kind"]
        order = config.series_order if options["order"] is None else options["order"]
        c, h = None, None
        if kind in ("verma", "irr"):
            if options["h"] is None:
                self.usage_error(f"--kind {kind} needs --h")
            h = options["h"]
            c = 1 if options["c"] is None or kind == "irr" else options["c"]
            series = verma_character(c, h, order) if kind == "verma" else irr_character_c1(h, order)
        elif kind == "eta":
            series = eta_series(order)
        else:
            series = theta_series(order)
        return {
            "kind": kind,
            "c": None if c is None else format_rational(c),
            "h": None if h is None else format_rational(h),
            "series": series_payload(series),
        }
