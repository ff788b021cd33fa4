"""Regenerate the frozen contraction table and its audit listing.

Run from the repository root:  python3 scripts/generate_table.py
"""

from pathlib import Path

from crosscountry.sparsity import contraction_plan, format_table, generate_table

ROOT = Path(__file__).resolve().parent.parent


def render_module() -> str:
    lines = [
        '"""Contraction table generated by scripts/generate_table.py; do not edit by hand.',
        "",
        "Maps (code_a, code_b) to (result_code, multiplication rule).",
        '"""',
        "",
        "TABLE = {",
    ]
    for (ca, cb), rc in sorted(generate_table().items()):
        lines.append(f"    ({ca}, {cb}): ({rc}, {contraction_plan(ca, cb).describe()!r}),")
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    (ROOT / "src" / "crosscountry" / "contraction_table.py").write_text(render_module())
    (ROOT / "docs" / "contraction_table.txt").write_text(format_table())
    print("wrote src/crosscountry/contraction_table.py and docs/contraction_table.txt")
