from core.management.algebra_command import AlgebraCommand
from exactlin.matrix import format_rational
from zhu.generators import (
    closed_form_generator,
    normalized_by_vandermonde,
    normalized_from_singular_vector,
    product_generator,
)

ROUTES = ("closed", "singular", "vandermonde")


class Command(AlgebraCommand):
    help = "Generator f_r(x, y) of the bimodule A(L(1, r^2)), computed along one route."
    kind = "bimodule"

    def add_algebra_arguments(self, parser):
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--route", choices=ROUTES, default="closed")

    def compute(self, config, **options):
        r, route = options["r"], options["route"]
        if route == "closed":
            polynomial = closed_form_generator(r)
            scalar = product_generator(r).normalize_monic_x()[1]
        else:
            build = normalized_from_singular_vector if route == "singular" else normalized_by_vandermonde
            normalized = build(r)
            polynomial, scalar = normalized.polynomial, normalized.scalar
        return {
            "r": r,
            "route": route,
            "polynomial": str(polynomial),
            "monomials": polynomial.to_payload(),
            "scalar": format_rational(scalar),
        }
