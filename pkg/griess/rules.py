# griess/rules.py

"""
Rewrite rules with their provenance. The engine only uses a rule family when
the configured RuleSet contains it, and a RuleSet never accepts a rule whose
citation is empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import InsufficientRulesError, UncitedRuleError


@dataclass(frozen=True)
class Rule:
    name: str
    citation: str
    description: str

    def render(self) -> str:
        return f"{self.name:<4} [{self.citation}] {self.description}"


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[Rule, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for rule in self.rules:
            if not rule.citation or not rule.citation.strip():
                raise UncitedRuleError(f"rule {rule.name!r} has no citation")
            if rule.name in seen:
                raise ValueError(f"duplicate rule name {rule.name!r}")
            seen.add(rule.name)

    def __contains__(self, name: str) -> bool:
        return any(rule.name == name for rule in self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def get(self, name: str) -> Rule:
        for rule in self.rules:
            if rule.name == name:
                return rule
        raise KeyError(name)

    def require(self, name: str, purpose: str):
        if name not in self:
            raise InsufficientRulesError(f"rule {name} is needed for {purpose} but not configured")

    def extended(self, *rules: Rule) -> "RuleSet":
        return RuleSet(self.rules + tuple(rules))

    def without(self, *names: str) -> "RuleSet":
        return RuleSet(tuple(r for r in self.rules if r.name not in names))

    def dump(self) -> str:
        """Human-readable audit listing, one rule per line."""
        return "\n".join(rule.render() for rule in self.rules) + "\n"


# ==============================================================================
# Rule catalog
# ==============================================================================

PRIMARY_COMMUTATOR = Rule(
    "R1",
    "weight-2 primary field",
    "[L(m), g_n] = (m - n + 1) g_(m+n) for g in {x, y, u}",
)
VIRASORO_BRACKET = Rule(
    "R2",
    "Virasoro bracket, c = 1",
    "[L(m), L(n)] = (m - n) L(m+n) + (m^3 - m)/12 delta(m+n, 0)",
)
FIELD_COMMUTATOR = Rule(
    "R3",
    "Borcherds commutator formula",
    "[a_m, b_n] = sum_j binom(m, j) (a_j b)_(m+n-j); [u_m, x_n] = 5(n - m) x_(m+n-1) once u_0 x, u_1 x are known",
)
HIGHEST_WEIGHT = Rule(
    "R4",
    "highest-weight and grading structure",
    "L(n) g = 0 (n > 0), L(0) g = 2g; V_n = 0 for n < 0; V_0 = C1; V_1 = 0",
)
PRODUCTS = Rule(
    "R5",
    "weight-2 products and invariant form",
    "x_1 y from the configuration, x_3 y = (x, y) 1 = 1, x_2 y = 0, x_1 x = 0",
)
QUADRATIC = Rule(
    "R6",
    "normal-ordered square Y(x, z)^2 = Y(x_-1 x, z) = 0",
    "x_1 x_1 y + 2 sum_(i>=1) x_(1-i) x_(1+i) y = 0 and sum_(i>=0) x_(-i) x_(i+1) y = 0",
)
SKEW_SYMMETRY = Rule(
    "R7",
    "skew symmetry Y(b, z) a = exp(z L(-1)) Y(a, -z) b",
    "b_n a = sum_i (-1)^(n+i+1) L(-1)^i a_(n+i) b / i!",
)
VACUUM_CREATION = Rule(
    "R8",
    "vacuum axiom",
    "g_(-k-1) 1 = L(-1)^k g / k!, g_n 1 = 0 for n >= 0",
)
ADJUNCTION = Rule(
    "R9",
    "invariant bilinear form",
    "(L(n) a, b) = (a, L(-n) b), (g_n a, b) = (a, g_(2-n) b) for quasi-primary weight-2 g, (1, 1) = 1",
)
NILPOTENT = Rule(
    "H1",
    "nilpotent hypothesis",
    "x_-1 x = 0, hence x_1 x = 0",
)

STANDARD_RULES = RuleSet(
    (
        PRIMARY_COMMUTATOR,
        VIRASORO_BRACKET,
        FIELD_COMMUTATOR,
        HIGHEST_WEIGHT,
        PRODUCTS,
        QUADRATIC,
        SKEW_SYMMETRY,
        VACUUM_CREATION,
        ADJUNCTION,
        NILPOTENT,
    )
)
