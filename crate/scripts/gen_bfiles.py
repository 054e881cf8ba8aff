#!/usr/bin/env python3
"""Generate the bundled reference b-files from each sequence's textbook recurrence.

Standalone on purpose: it shares no code with the Rust crates, so the files it
writes are an independent reference for `genseq oeis`.
"""
import pathlib

TERMS = 60

SEQUENCES = {
    # file stem: (OEIS id, description, initial terms at offset 0, recurrence)
    "fibonacci": ("A000045", "Fibonacci numbers", [0, 1], lambda a, n: a[n - 1] + a[n - 2]),
    "lucas": ("A000032", "Lucas numbers", [2, 1], lambda a, n: a[n - 1] + a[n - 2]),
    "pell": ("A000129", "Pell numbers", [0, 1], lambda a, n: 2 * a[n - 1] + a[n - 2]),
    "jacobsthal": ("A001045", "Jacobsthal numbers", [0, 1], lambda a, n: a[n - 1] + 2 * a[n - 2]),
    "padovan": ("A000931", "Padovan sequence", [1, 0, 0], lambda a, n: a[n - 2] + a[n - 3]),
    "narayana": ("A000930", "Narayana's cows sequence", [1, 1, 1], lambda a, n: a[n - 1] + a[n - 3]),
    "a003269": ("A003269", "a(n) = a(n-1) + a(n-4)", [0, 1, 1, 1], lambda a, n: a[n - 1] + a[n - 4]),
}


def terms(init, step):
    a = list(init)
    while len(a) < TERMS:
        a.append(step(a, len(a)))
    return a


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data"
    out.mkdir(exist_ok=True)
    for stem, (oeis, desc, init, step) in SEQUENCES.items():
        lines = [f"# {oeis} {desc}", "# generated by scripts/gen_bfiles.py"]
        lines += [f"{n} {v}" for n, v in enumerate(terms(init, step))]
        (out / f"{stem}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
