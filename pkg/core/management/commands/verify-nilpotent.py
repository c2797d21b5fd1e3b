from core.management.algebra_command import VerificationCommand
from griess.verification import CHECK_STEPS


class Command(VerificationCommand):
    help = (
        "Replays the nilpotent-case computations: the u-products from the quadratic "
        "relations, the norm (u, u), the weight-4 highest-weight vector and (y_3 v, u), "
        "and the vanishing of x_i v."
    )

    def add_step_argument(self, parser):
        parser.add_argument("--step", choices=CHECK_STEPS + ("all",), default="all")

    def selected_steps(self, options):
        return CHECK_STEPS if options["step"] == "all" else (options["step"],)
