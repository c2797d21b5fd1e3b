from core.management.algebra_command import AlgebraCommand, check_level, partition_word, rational_argument
from exactlin.matrix import format_rational
from virasoro.verma import VermaParams, partitions, singular_vectors


class Command(AlgebraCommand):
    help = "Singular vector of V(c, h) at one level, or none."
    kind = "singvec"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--c", type=rational_argument, required=True)
        parser.add_argument("--h", type=rational_argument, required=True)
        parser.add_argument("--level", type=int, required=True)

    def compute(self, config, **options):
        level = options["level"]
        check_level(level, config)
        params = VermaParams(options["c"], options["h"])
        vectors = singular_vectors(params, level) if level >= 1 else []
        terms = []
        if vectors:
            vector = vectors[0]
            terms = [
                {"word": partition_word(p), "coefficient": format_rational(vector.coefficient(p))}
                for p in partitions(level)
                if vector.coefficient(p) != 0
            ]
        return {
            "c": format_rational(params.c),
            "h": format_rational(params.h),
            "level": level,
            "found": bool(vectors),
            "kernel_dimension": len(vectors),
            "terms": terms,
        }
