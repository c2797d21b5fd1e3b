from core.management.algebra_command import AlgebraCommand
from zhu.fusion import fusion_table


class Command(AlgebraCommand):
    help = "Grid of fusion rules for L(1, m^2) x L(1, n^2) -> L(1, k^2)."
    kind = "fusion-table"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--max-m", type=int, default=3)
        parser.add_argument("--max-n", type=int, default=3)
        parser.add_argument("--max-k", type=int, default=8)

    def compute(self, config, **options):
        max_m, max_n, max_k = options["max_m"], options["max_n"], options["max_k"]
        entries = fusion_table(max_m, max_n, max_k)
        return {
            "max_m": max_m,
            "max_n": max_n,
            "max_k": max_k,
            "entries": [{"m": e.m, "n": e.n, "k": e.k, "dim": e.dim} for e in entries],
        }
