#!/usr/bin/env python3
"""Writes the b-file fixtures used by the validation tests.

Each sequence is computed from its textbook definition with sympy or plain
Python, independently of the C++ generators. Re-run to regenerate:

    python3 tests/fixtures/make_bfiles.py tests/fixtures
"""
import sys
from pathlib import Path

import sympy

TERMS = 1000


def primes():
    return list(sympy.primerange(2, sympy.prime(TERMS) + 1))


def sprimes():
    return [(p - 1) // 2 for p in sympy.primerange(3, sympy.prime(TERMS + 1) + 1)]


def fibonacci():
    out = [0, 1]
    while len(out) < 120:  # runs well past 2^64
        out.append(out[-1] + out[-2])
    return out


def padovan_variant():
    out = [1, 1, 1]
    while len(out) < 150:
        out.append(out[-2] + out[-3])
    return out


def padovan_a000931():
    out = [1, 0, 0]
    while len(out) < 150:
        out.append(out[-2] + out[-3])
    return out


def happy():
    def is_happy(n):
        seen = set()
        while n != 1 and n not in seen:
            seen.add(n)
            n = sum(int(d) ** 2 for d in str(n))
        return n == 1

    out, n = [], 1
    while len(out) < TERMS:
        if is_happy(n):
            out.append(n)
        n += 1
    return out


def lucky():
    xs = list(range(1, 200000, 2))
    i = 1
    while i < len(xs) and xs[i] <= len(xs):
        step = xs[i]
        del xs[step - 1 :: step]
        i += 1
    return xs[:TERMS]


def abundant():
    out, n = [], 1
    while len(out) < TERMS:
        if sympy.divisor_sigma(n) > 2 * n:
            out.append(n)
        n += 1
    return out


def triangular():
    return [m * (m + 1) // 2 for m in range(TERMS)]


def lazy():
    return [m * (m + 1) // 2 + 1 for m in range(TERMS)]


def harshad():
    out, n = [], 1
    while len(out) < TERMS:
        if n % sum(int(d) for d in str(n)) == 0:
            out.append(n)
        n += 1
    return out


def multiples_of_3():
    return [3 * m for m in range(TERMS)]


def s_worked_example():
    return [0, 2, 3, 12, 13, 14, 15, 48, 49, 50, 51, 60, 61, 63]


FIXTURES = [
    ("b000040.txt", "A000040 primes", 1, primes),
    ("b005097.txt", "A005097 (p-1)/2 over odd primes", 1, sprimes),
    ("b000045.txt", "A000045 Fibonacci", 0, fibonacci),
    ("padovan_variant.txt", "Padovan variant P(0)=P(1)=P(2)=1, P(m)=P(m-2)+P(m-3)", 0, padovan_variant),
    ("b000931.txt", "A000931 Padovan, canonical offset", 0, padovan_a000931),
    ("b007770.txt", "A007770 happy numbers", 1, happy),
    ("b000959.txt", "A000959 lucky numbers", 1, lucky),
    ("b005101.txt", "A005101 abundant numbers", 1, abundant),
    ("b000217.txt", "A000217 triangular numbers", 0, triangular),
    ("b000124.txt", "A000124 lazy caterer", 0, lazy),
    ("b005349.txt", "A005349 Harshad numbers", 1, harshad),
    ("b008585.txt", "A008585 multiples of 3", 0, multiples_of_3),
    ("s_oscillating_k6.txt", "S sequence after the k = 2..5 steps", 1, s_worked_example),
]


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
    for name, title, offset, fn in FIXTURES:
        values = fn()
        lines = [f"# {title}", "# generated by make_bfiles.py"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (out_dir / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
