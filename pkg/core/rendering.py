# core/rendering.py

"""
Text and JSON renderings of command payloads. Both are produced from the
validated payload, so a JSON document parsed back and rendered as text gives
the same text as the original run.
"""

from __future__ import annotations

import json
import logging

from prettytable import PrettyTable
from rest_framework.renderers import JSONRenderer

from . import serializers

logger = logging.getLogger(__name__)

SERIALIZERS = {
    "gram": serializers.GramSerializer,
    "singvec": serializers.SingularVectorSerializer,
    "bimodule": serializers.BimoduleSerializer,
    "fusion": serializers.FusionSerializer,
    "fusion-table": serializers.FusionTableSerializer,
    "char": serializers.CharacterSerializer,
    "decomp-check": serializers.DecompositionSerializer,
    "growth": serializers.GrowthSerializer,
    "verify": serializers.VerificationSerializer,
    "contradiction": serializers.ContradictionSerializer,
}


def validate(kind: str, payload: dict) -> dict:
    serializer = SERIALIZERS[kind](data=payload)
    serializer.is_valid(raise_exception=True)
    # plain dicts and lists, as json.loads would give back
    return json.loads(json.dumps(serializer.validated_data))


def render(kind: str, payload: dict, output_format: str) -> str:
    data = validate(kind, payload)
    logger.debug(f"rendering {kind} payload as {output_format}")
    if output_format == "json":
        return JSONRenderer().render(data).decode() + "\n"
    return render_text(kind, data)


def _table(field_names, rows, align=None) -> str:
    table = PrettyTable(field_names)
    for name, side in (align or {}).items():
        table.align[name] = side
    for row in rows:
        table.add_row(row)
    return table.get_string()


# ==============================================================================
# Text renderers
# ==============================================================================

def _gram(data: dict) -> str:
    header = f"Gram matrix of V(c={data['c']}, h={data['h']}) at level {data['level']}"
    rows = [[word] + entries for word, entries in zip(data["basis"], data["matrix"])]
    lines = [header]
    if rows:
        lines.append(_table([""] + data["basis"], rows))
    lines.append(f"det = {data['det']}")
    lines.append(f"rank = {data['rank']}")
    return "\n".join(lines) + "\n"


def _singvec(data: dict) -> str:
    header = f"V(c={data['c']}, h={data['h']}) at level {data['level']}"
    if not data["found"]:
        return f"{header}: none (kernel dimension {data['kernel_dimension']})\n"
    body = _table(
        ["word", "coefficient"],
        [[t["word"], t["coefficient"]] for t in data["terms"]],
        align={"word": "l", "coefficient": "r"},
    )
    return f"{header}: singular vector (kernel dimension {data['kernel_dimension']})\n{body}\n"


def _bimodule(data: dict) -> str:
    lines = [f"f_{data['r']} via {data['route']} route:", data["polynomial"]]
    if data["scalar"] is not None:
        lines.append(f"normalization scalar = {data['scalar']}")
    return "\n".join(lines) + "\n"


def _fusion(data: dict) -> str:
    second = f"L(1,{data['n']})" if data["generic"] else f"L(1,{data['n']}^2)"
    third = f"L(1,{data['k']})" if data["generic"] else f"L(1,{data['k']}^2)"
    return (
        f"fusion L(1,{data['m']}^2) x {second} -> {third}: dim = {data['dim']}\n"
        f"rule: {data['rule']}\n"
    )


def _fusion_table(data: dict) -> str:
    ks = list(range(data["max_k"] + 1))
    cells = {(e["m"], e["n"], e["k"]): e["dim"] for e in data["entries"]}
    rows = [
        [f"({m},{n})"] + [cells[(m, n, k)] for k in ks]
        for m in range(data["max_m"] + 1)
        for n in range(data["max_n"] + 1)
    ]
    return _table(["(m,n) \\ k"] + [str(k) for k in ks], rows) + "\n"


def _char(data: dict) -> str:
    series = data["series"]
    label = data["kind"] if data["h"] is None else f"{data['kind']} (c={data['c']}, h={data['h']})"
    rows = [[n, coefficient] for n, coefficient in enumerate(series["coefficients"])]
    body = _table(["n", "coefficient"], rows, align={"coefficient": "r"})
    return f"{label}: q^({series['offset']}) * sum_n a_n q^n through n = {series['order']}\n{body}\n"


def _decomp_check(data: dict) -> str:
    verdict = "holds" if data["holds"] else "FAILS"
    rows = [
        [n, lhs, rhs, res]
        for n, (lhs, rhs, res) in enumerate(zip(data["virasoro_side"], data["theta"], data["residual"]))
        if lhs != "0" or rhs != "0" or res != "0"
    ]
    body = _table(["n", "virasoro side", "theta", "residual"], rows)
    return f"lattice decomposition through q^{data['order']}: {verdict}\n{body}\n"


def _growth(data: dict) -> str:
    start, end = data["window"]
    rows = [
        [w["exponent"], "-" if w["witness"] is None else w["witness"]] for w in data["witnesses"]
    ]
    body = _table(["k", "first n with |a_n| > n^k"], rows)
    return f"growth of {data['series']} on [{start}, {end}]: {data['verdict']}\n{body}\n"


def _verify(data: dict) -> str:
    lines = []
    for step in data["steps"]:
        lines.append(f"[{step['step']}]")
        for check in step["checks"]:
            status = "OK" if check["ok"] else "FAILED"
            lines.append(f"  {check['name']} = {check['value']} (expected {check['expected']}) {status}")
    lines.append("OK" if data["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def _contradiction(data: dict) -> str:
    rows = [["OK" if s["holds"] else "FAIL", s["claim"], s["value"]] for s in data["steps"]]
    body = _table(["", "claim", "value"], rows, align={"claim": "l", "value": "l"})
    return f"{body}\nverdict: {data['verdict']}\n"


_TEXT = {
    "gram": _gram,
    "singvec": _singvec,
    "bimodule": _bimodule,
    "fusion": _fusion,
    "fusion-table": _fusion_table,
    "char": _char,
    "decomp-check": _decomp_check,
    "growth": _growth,
    "verify": _verify,
    "contradiction": _contradiction,
}


def render_text(kind: str, data: dict) -> str:
    return _TEXT[kind](data)
