from core.management.algebra_command import AlgebraCommand, check_level, partition_word, rational_argument
from exactlin.matrix import det, format_rational, rank
from virasoro.verma import VermaParams, gram_matrix, partitions


class Command(AlgebraCommand):
    help = "Gram matrix of V(c, h) at one level, with its determinant and rank."
    kind = "gram"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--c", type=rational_argument, required=True)
        parser.add_argument("--h", type=rational_argument, required=True)
        parser.add_argument("--level", type=int, required=True)

    def compute(self, config, **options):
        check_level(options["level"], config)
        params = VermaParams(options["c"], options["h"])
        matrix = gram_matrix(params, options["level"])
        return {
            "c": format_rational(params.c),
            "h": format_rational(params.h),
            "level": options["level"],
            "basis": [partition_word(p) for p in partitions(options["level"])],
            "matrix": [[format_rational(v) for v in matrix.row(i)] for i in range(matrix.rows)],
            "det": format_rational(det(matrix)),
            "rank": rank(matrix),
        }
