"""Side-by-side benchmark of trial division and KNJ over a modulus corpus."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Union

from .errors import InvalidNatural
from .factorizer import Outcome, knj_factorize, trial_division
from .natnum import format_natural, parse_natural

CSV_HEADER = ("digits", "n", "trial_iterations", "knj_iterations", "trial_ns", "knj_ns", "p", "q")
MARKDOWN_HEADER = (
    "No. of digits in N",
    "N",
    "Iterations (Trial-Division)",
    "Iterations (KNJ Method)",
    "Trial time (ns)",
    "KNJ time (ns)",
    "p",
    "q",
)
FORMATS = ("csv", "json", "md")


@dataclass(frozen=True)
class BenchRecord:
    digits: int
    n: int
    trial_iterations: int
    knj_iterations: int
    trial_elapsed: int
    knj_elapsed: int
    p: int
    q: int

    def without_timing(self) -> BenchRecord:
        return replace(self, trial_elapsed=0, knj_elapsed=0)


@dataclass(frozen=True)
class BenchError:
    n: int
    message: str


BenchRow = Union[BenchRecord, BenchError]


def bench_one(n: int) -> BenchRow:
    if n < 3 or n % 2 == 0:
        return BenchError(n, "input must be odd and at least 3")

    started = time.perf_counter_ns()
    trial = trial_division(n)
    trial_ns = time.perf_counter_ns() - started

    started = time.perf_counter_ns()
    knj = knj_factorize(n)
    knj_ns = time.perf_counter_ns() - started

    if trial.outcome is Outcome.PRIME and knj.outcome is Outcome.PRIME:
        return BenchError(n, "input is prime")
    if not (trial.factored and knj.factored) or {trial.p, trial.q} != {knj.p, knj.q}:
        return BenchError(
            n,
            f"engines disagree: trial {trial.outcome.value} ({trial.p}, {trial.q}), "
            f"knj {knj.outcome.value} ({knj.p}, {knj.q})",
        )
    return BenchRecord(
        len(format_natural(n)), n, trial.iterations, knj.iterations, trial_ns, knj_ns, knj.p, knj.q
    )


def run_benchmark(inputs: Sequence[int], serial: bool = False, workers: int | None = None) -> list[BenchRow]:
    """Benchmark every input, returning rows in input order.

    Rows are spread across worker processes unless ``serial`` is set; the
    two engine calls for one row always run back to back in one process.
    """
    inputs = list(inputs)
    if serial or len(inputs) < 2:
        return [bench_one(n) for n in inputs]
    workers = workers or min(len(inputs), os.cpu_count() or 1)
    if workers < 2:
        return [bench_one(n) for n in inputs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(bench_one, inputs))


def read_corpus(text: str) -> list[int]:
    """One decimal modulus per line; blank lines and ``#`` comments ignored."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(parse_natural(line))
        except InvalidNatural:
            raise InvalidNatural(f"line {lineno}: not a decimal modulus: {line!r}") from None
    return values


def _cells(record: BenchRecord) -> list[str]:
    return [
        str(record.digits),
        format_natural(record.n),
        str(record.trial_iterations),
        str(record.knj_iterations),
        str(record.trial_elapsed),
        str(record.knj_elapsed),
        format_natural(record.p),
        format_natural(record.q),
    ]


def render(records: Iterable[BenchRecord], fmt: str = "csv", timing: bool = True) -> str:
    records = [r if timing else r.without_timing() for r in records]
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(_cells(r) for r in records)
        return out.getvalue()
    if fmt == "json":
        # naturals travel as decimal strings so no reader rounds them
        rows = [dict(zip(CSV_HEADER, _cells(r))) for r in records]
        for row in rows:
            for key in ("digits", "trial_iterations", "knj_iterations", "trial_ns", "knj_ns"):
                row[key] = int(row[key])
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "md":
        lines = ["| " + " | ".join(MARKDOWN_HEADER) + " |", "|" + "---|" * len(MARKDOWN_HEADER)]
        lines += ["| " + " | ".join(_cells(r)) + " |" for r in records]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def parse_csv(text: str) -> list[BenchRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    records = []
    for row in reader:
        if not row:
            continue
        digits, n, ti, ki, tns, kns, p, q = row
        records.append(
            BenchRecord(
                int(digits), parse_natural(n), int(ti), int(ki), int(tns), int(kns),
                parse_natural(p), parse_natural(q),
            )
        )
    return records
