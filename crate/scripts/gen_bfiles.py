#!/usr/bin/env python3
"""Generate OEIS-format b-file fixtures and the table golden file.

Every value here is computed from the defining recurrence alone, in Python
native integers, with no help from the Rust crate — so the fixtures are an
independent route to the same numbers the crate must reproduce.

Writes crates/lucas-sums-cli/tests/fixtures/b*.txt (500 entries each) and
table2_golden.txt (the expected byte-exact output of `lucas-sums table`).
"""

from pathlib import Path

ENTRIES = 500
TERMS_IN_TABLE = 10

# (name, symbol, p, q, kind, oeis id)
FAMILIES = [
    ("fibonacci", "F", 1, -1, "U", "A000045"),
    ("lucas", "L", 1, -1, "V", "A000032"),
    ("pell", "P", 2, -1, "U", "A000129"),
    ("companion_pell", "Q", 2, -1, "V", "A002203"),
    ("balancing", "B", 6, 1, "U", "A001109"),
    ("double_lucas_balancing", "Ĉ", 6, 1, "V", "A001541"),
    ("jacobsthal", "J", 1, -2, "U", "A001045"),
    ("jacobsthal_lucas", "j", 1, -2, "V", "A014551"),
    ("mersenne", "M", 3, 2, "U", "A000225"),
    ("mersenne_lucas", "m", 3, 2, "V", "A000051"),
]


def terms(p, q, kind, count):
    """First `count` terms of T_n = p*T_{n-1} - q*T_{n-2} with U/V seeds."""
    a, b = (0, 1) if kind == "U" else (2, p)
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, p * b - q * a
    return out


def main():
    root = Path(__file__).resolve().parent.parent
    fixtures = root / "crates" / "lucas-sums-cli" / "tests" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)

    for name, _symbol, p, q, kind, oeis in FAMILIES:
        values = terms(p, q, kind, ENTRIES)
        header = [
            f"# {oeis} ({name}): generated locally for offline conformance checks",
            f"# recurrence a(n) = {p}*a(n-1) - ({q})*a(n-2), {kind}-kind seeds",
        ]
        if name == "double_lucas_balancing":
            header.append(
                "# convention: V_n(6, 1), i.e. twice the classically catalogued values"
            )
        lines = header + [f"{n} {v}" for n, v in enumerate(values)]
        (fixtures / f"b{oeis[1:]}.txt").write_text(
            "\n".join(lines) + "\n", encoding="ascii"
        )

    rows = []
    for name, symbol, p, q, kind, oeis in FAMILIES:
        row = " ".join(str(v) for v in terms(p, q, kind, TERMS_IN_TABLE))
        rows.append(f"{name:<24}{symbol:<3}{row}  {oeis}")
    (fixtures / "table2_golden.txt").write_text(
        "\n".join(rows) + "\n", encoding="utf-8"
    )

    print(f"wrote {len(FAMILIES)} b-files and table2_golden.txt to {fixtures}")


if __name__ == "__main__":
    main()
