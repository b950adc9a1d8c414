"""One-off: turn the LaTeX orbit tables in a source document into golden CSVs.

Usage: python3 tools/transcribe_tables.py SOURCE.md OUTDIR

Each table becomes tableNN.csv (NN = 01..16 in document order) with
columns ``block,set``.  Rows keep the printed order; sets are written
as ``s:t`` pairs joined by ``;``.  Known misprints are patched through
FIXES below and reported on stderr.
"""

import csv
import re
import sys
from pathlib import Path

TABLE_RE = re.compile(r"\\begin\{table\*\}(.*?)\\end\{table\*\}", re.S)
LABEL_RE = re.compile(r"\\label\{(tab[\d.]+)\}")
SET_RE = re.compile(r"\\\{((?:\(\d+,\d+\),?)+)\\\}")
PAIR_RE = re.compile(r"\((\d+),(\d+)\)")
BLOCK_RE = re.compile(r"^\$?\\mathcal\{UC\}")

# Sets named by symbol instead of being spelled out.
NAMED = {r"$\mathcal{K}$": "{(0,0),(0,2),(2,0),(2,2)}"}

# (table label, printed set) -> corrected set
FIXES = {
    ("tab4.5", "{(0,0),(4,2),(5,0),(5,0)}"): "{(0,0),(4,2),(5,0),(5,1)}",
}


def block_name(cell):
    """``\\mathcal{UC}((\\Gamma^{2}_{30})_{1})`` -> ``UC(G230_1)``."""
    body = cell.strip().strip("$")
    body = body[len(r"\mathcal{UC}"):]
    body = re.sub(r"\\mathcal\{(\w)\}", r"\1", body)
    body = re.sub(r"\\Gamma\^\{(\d)\}_\{(\d+)\}", r"G\1\2", body)
    body = re.sub(r"\^\{(\d+)\}", r"\1", body)
    body = re.sub(r"\(\(?(\w+)\)?_\{(\d+)\}\)", r"(\1_\2)", body)
    return "UC" + body


def parse_table(label, text):
    """Rows of one table; blocks are the segments between ``\\hline`` rules."""
    segments = text.split(r"\hline")[1:]
    header, body = segments[0], segments[1:]
    numbered = header.strip().startswith("No.")
    rows = []
    for seg in body:
        lines = [ln.strip() for ln in seg.splitlines() if ln.strip()]
        if not lines or lines[0].startswith(r"\end"):
            continue
        if numbered:
            cell = header.split("&", 1)[1].split(" (")[0]
        else:
            cells = [ln.split("&")[0] for ln in lines if BLOCK_RE.match(ln)]
            if len(cells) != 1:
                raise ValueError(f"{label}: expected one block label, got {cells}")
            cell = cells[0]
        block = block_name(cell)
        for ln in lines:
            for sym, spelled in NAMED.items():
                if ln.split("&", 1)[-1].rstrip("\\ ") == sym:
                    rows.append((block, spelled))
            for m in SET_RE.finditer(ln):
                printed = "{" + m.group(1) + "}"
                fixed = FIXES.get((label, printed), printed)
                if fixed != printed:
                    print(f"{label}: {printed} -> {fixed}", file=sys.stderr)
                rows.append((block, fixed))
    return rows


def main(argv):
    src, out = Path(argv[1]), Path(argv[2])
    out.mkdir(parents=True, exist_ok=True)
    tables = TABLE_RE.findall(src.read_text())
    for k, text in enumerate(tables, 1):
        label = LABEL_RE.search(text).group(1)
        rows = parse_table(label, text)
        path = out / f"table{k:02d}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["block", "set"])
            for block, s in rows:
                pairs = PAIR_RE.findall(s)
                w.writerow([block, ";".join(f"{a}:{b}" for a, b in pairs)])
        print(f"{path.name} {label} {len(rows)} rows", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv)
