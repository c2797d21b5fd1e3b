from core.management.algebra_command import VerificationCommand
from griess.verification import CHECK_STEPS

# lemma numbers in the order of CHECK_STEPS
LEMMAS = dict(zip(("5.4", "5.5", "5.6", "5.7"), CHECK_STEPS))


class Command(VerificationCommand):
    help = "verify-nilpotent addressed by lemma number: 5.4 u-products, 5.5 u-norm, 5.6 hw-vector, 5.7 annihilation."

    def add_step_argument(self, parser):
        parser.add_argument("--lemma", choices=tuple(LEMMAS) + ("all",), default="all")

    def selected_steps(self, options):
        return CHECK_STEPS if options["lemma"] == "all" else (LEMMAS[options["lemma"]],)
