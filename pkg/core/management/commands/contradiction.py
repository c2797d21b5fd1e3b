from core.management.algebra_command import AlgebraCommand, configured_engine
from griess.verification import CONTRADICTION, contradiction_report


class Command(AlgebraCommand):
    help = "Chains the nilpotent-case results with the fusion rules and reports the verdict."
    kind = "contradiction"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--max-n", type=int, default=10, help="fusion checks for n = 1..MAX_N")
        parser.add_argument("--assume", action="store_true")

    def compute(self, config, **options):
        if options["max_n"] < 1:
            self.usage_error("--max-n must be >= 1")
        report = contradiction_report(
            range(1, options["max_n"] + 1), configured_engine(config, options["assume"])
        )
        return {
            "steps": [{"claim": s.claim, "value": s.value, "holds": s.holds} for s in report.steps],
            "verdict": report.verdict,
            "ok": report.verdict == CONTRADICTION,
        }
