from core.management.algebra_command import AlgebraCommand
from zhu.fusion import fusion_dim_generic, fusion_dim_squares


class Command(AlgebraCommand):
    help = (
        "Fusion rule L(1, m^2) x L(1, n^2) -> L(1, k^2). With --generic, n and k "
        "are weights and n must not be a perfect square."
    )
    kind = "fusion"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--generic", action="store_true")

    def compute(self, config, **options):
        m, n, k, generic = options["m"], options["n"], options["k"], options["generic"]
        if generic:
            dim = fusion_dim_generic(m, n, k)
            rule = "1 iff k = n for n not a perfect square"
        else:
            dim = fusion_dim_squares(m, n, k)
            rule = "1 iff |m - n| <= k <= m + n"
        return {"m": m, "n": n, "k": k, "generic": generic, "dim": dim, "rule": rule}
