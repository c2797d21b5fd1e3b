from core.management.algebra_command import AlgebraCommand
from qseries.characters import lattice_character, partition_gap_series
from qseries.growth import growth_report
from qseries.series import eta_series

# lemma52 is the older name of partition-gap
SERIES = ("lattice", "partition-gap", "lemma52")


class Command(AlgebraCommand):
    help = (
        "Scans eta * ch for polynomially bounded or superpolynomial coefficient "
        "growth: the lattice algebra, or (1 - q) / prod_(n >= 2) (1 - q^n)."
    )
    kind = "growth"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--series", choices=SERIES, required=True)
        parser.add_argument("--window", type=int, nargs=2, metavar=("START", "END"), default=None)
        parser.add_argument("--order", type=int, default=None)
        parser.add_argument("--kmax", type=int, default=3)

    def compute(self, config, **options):
        start, end = options["window"] or config.growth_window
        order = end if options["order"] is None else options["order"]
        if options["series"] == "lattice":
            series = eta_series(order) * lattice_character(order)
        else:
            series = partition_gap_series(order)
        report = growth_report(series, (start, end), range(1, options["kmax"] + 1))
        return {
            "series": options["series"],
            "order": order,
            "window": [start, end],
            "witnesses": [{"exponent": k, "witness": report.witnesses[k]} for k in report.exponents],
            "verdict": report.verdict,
        }
