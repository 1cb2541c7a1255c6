"""Run labelled fragments through pyright and report one line per case."""

from __future__ import annotations

import argparse
import ast
import contextlib
import io
import json
import os
import re
import runpy
import shutil
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .. import lattice

CASES_DIR = Path(__file__).with_name("cases")
PACKAGE_ROOT = Path(__file__).resolve().parents[2]

ACCEPT = "accept"
REJECT = "reject"
RUN_ERROR = "run-error"

GENERATIVE_OPS = frozenset({"of_int_dyn", "of_cols_dyn", "loadvec", "loadmat"})
_ESCAPED = re.compile(r"_Fresh\w*@")
_REVEALED = re.compile(r'^Type of ".*" is "(.*)"$', re.S)


@dataclass(frozen=True)
class StaticCase:
    id: str
    fragment: str
    expectation: str
    citation: str


@dataclass
class CaseResult:
    case: StaticCase
    observed: str
    diagnostics: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.observed == self.case.expectation

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.case.id} {self.case.expectation} {self.observed} {verdict}"


# Case collection


def _parse_header(text: str, path: Path) -> tuple[str, str, str]:
    meta: dict[str, str] = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        key, sep, value = line[1:].partition(":")
        if sep:
            meta[key.strip()] = value.strip()
    try:
        expect = meta["expect"]
        if expect not in (ACCEPT, REJECT):
            raise ValueError(f"{path.name}: expect must be accept or reject")
        return meta["case"], expect, meta.get("cite", "")
    except KeyError as e:
        raise ValueError(f"{path.name}: missing '# {e.args[0]}:' header") from None


def file_cases(directory: Optional[Path] = None) -> list[StaticCase]:
    """Cases stored as files with ``# case:``, ``# expect:`` and ``# cite:`` headers."""
    out = []
    for path in sorted((directory or CASES_DIR).glob("*.py")):
        text = path.read_text()
        cid, expect, cite = _parse_header(text, path)
        out.append(StaticCase(cid, text, expect, cite))
    return out


def lattice_cases() -> list[StaticCase]:
    """Producer/consumer pairs of the six-type hierarchy, list cases, bottom form."""
    out = []
    names = lattice.NAMES
    for x in names:
        for y in names:
            ok = lattice.includes(x, y)
            src = (
                f"from sizedla.lattice import make_{x.lower()}, use_as_{y.lower()}\n\n"
                f"use_as_{y.lower()}(make_{x.lower()}())\n"
            )
            out.append(StaticCase(f"LAT-{x}-{y}", src, ACCEPT if ok else REJECT,
                                  f"S_{x} subset of S_{y}: {ok}"))
    for y in ("A", "B", "C"):
        ok = lattice.includes("E", y) and lattice.includes("F", y)
        src = (
            f"from sizedla.lattice import make_e, make_f, use_list_{y.lower()}\n\n"
            f"use_list_{y.lower()}([make_e(), make_f()])\n"
        )
        out.append(StaticCase(f"LAT-list-EF-{y}", src, ACCEPT if ok else REJECT,
                              f"E and F both below {y}: {ok}"))
    for x in names:
        for y in names:
            ok = lattice.includes(x, y)
            exp = ACCEPT if ok else REJECT
            pos = (
                f"from sizedla.lattice import Pos{x}, Pos{y}\n\n\n"
                f"def up(u: Pos{x}) -> Pos{y}:\n    return u\n"
            )
            neg = (
                f"from sizedla.lattice import Neg{x}, Neg{y}\n\n\n"
                f"def down(t: Neg{y}) -> Neg{x}:\n    return t\n"
            )
            out.append(StaticCase(f"BOT-pos-{x}-{y}", pos, exp, f"Pos{x} <: Pos{y} iff {x} <: {y}"))
            out.append(StaticCase(f"BOT-neg-{x}-{y}", neg, exp, f"Neg{y} <: Neg{x} iff {x} <: {y}"))
    return out


def all_cases() -> list[StaticCase]:
    return file_cases() + lattice_cases()


# Escape probes


def _callee(node: ast.Call) -> Optional[str]:
    f = node.func
    return f.id if isinstance(f, ast.Name) else f.attr if isinstance(f, ast.Attribute) else None


class _WrapGenerative(ast.NodeTransformer):
    def __init__(self) -> None:
        self.count = 0

    def visit_Call(self, node: ast.Call) -> ast.AST:
        self.generic_visit(node)
        if _callee(node) in GENERATIVE_OPS:
            self.count += 1
            return ast.Call(ast.Name("reveal_type", ast.Load()), [node], [])
        return node


def lambda_bodies(source: str) -> list[int]:
    """Lines where a lambda is passed to a generative operation.

    pyright solves generic calls inside such a lambda with ``Unknown`` in place
    of the fresh brand, so its body is not brand-checked at all.  Bodies must be
    ``def`` functions; a lambda counts as a type error.
    """
    lines = []
    for node in ast.walk(ast.parse(source)):
        if isinstance(node, ast.Call) and _callee(node) in GENERATIVE_OPS:
            args = list(node.args) + [k.value for k in node.keywords]
            lines += [a.lineno for a in args if isinstance(a, ast.Lambda)]
    return lines


def escape_probe(source: str) -> Optional[str]:
    """Copy of ``source`` with generative calls revealed, or None if there are none."""
    tree = ast.parse(source)
    wrap = _WrapGenerative()
    tree = ast.fix_missing_locations(wrap.visit(tree))
    return ast.unparse(tree) + "\n" if wrap.count else None


# Type checking


def _pyright_command() -> list[str]:
    exe = shutil.which("pyright")
    return [exe] if exe else [sys.executable, "-m", "pyright"]


def typecheck(cases: Sequence[StaticCase], workdir: Path) -> dict[str, list[str]]:
    """Check every case in one pyright run; returns the type errors per case id."""
    files: dict[str, str] = {}
    for i, case in enumerate(cases):
        name = f"case_{i:04d}.py"
        (workdir / name).write_text(case.fragment)
        files[name] = case.id
        probe = escape_probe(case.fragment)
        if probe is not None:
            pname = f"probe_{i:04d}.py"
            (workdir / pname).write_text(probe)
            files[pname] = case.id
    config = {
        "extraPaths": [str(PACKAGE_ROOT)],
        "pythonVersion": "3.10",
        "typeCheckingMode": "standard",
        "reportInvalidTypeVarUse": False,
    }
    (workdir / "pyrightconfig.json").write_text(json.dumps(config))
    proc = subprocess.run(
        _pyright_command() + ["--outputjson", "-p", str(workdir / "pyrightconfig.json")],
        cwd=workdir, capture_output=True, text=True,
    )
    try:
        report = json.loads(proc.stdout)
    except json.JSONDecodeError:
        raise RuntimeError(f"pyright did not produce a report:\n{proc.stdout}\n{proc.stderr}")
    errors: dict[str, list[str]] = {
        c.id: [f"{ln}: lambda body of a generative operation is not brand-checked"
               for ln in lambda_bodies(c.fragment)]
        for c in cases
    }
    for d in report.get("generalDiagnostics", []):
        fname = os.path.basename(d.get("file", ""))
        cid = files.get(fname)
        if cid is None:
            continue
        msg = d.get("message", "")
        line = d.get("range", {}).get("start", {}).get("line", -1) + 1
        if fname.startswith("case_") and d.get("severity") == "error":
            errors[cid].append(f"{line}: {msg}")
        elif fname.startswith("probe_"):
            m = _REVEALED.match(msg)
            if m and _ESCAPED.search(m.group(1)):
                errors[cid].append(f"brand escapes its scope: {m.group(1)}")
    return errors


def _execute(case: StaticCase, workdir: Path) -> Optional[str]:
    path = workdir / ("run_" + re.sub(r"\W", "_", case.id) + ".py")
    path.write_text(case.fragment)
    cwd = os.getcwd()
    try:
        os.chdir(workdir)
        with contextlib.redirect_stdout(io.StringIO()):
            runpy.run_path(str(path), run_name="__static_case__")
    except Exception as e:  # noqa: BLE001 - any failure of an accept fragment
        return f"{type(e).__name__}: {e}"
    finally:
        os.chdir(cwd)
    return None


def run_suite(cases: Optional[Iterable[StaticCase]] = None, *, execute: bool = True) -> list[CaseResult]:
    """Type-check all cases, then run the ones that were accepted as expected."""
    todo = list(all_cases() if cases is None else cases)
    ids = [c.id for c in todo]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate case ids")
    with tempfile.TemporaryDirectory(prefix="sizedla-static-") as tmp:
        workdir = Path(tmp)
        errors = typecheck(todo, workdir)
        results = []
        for case in todo:
            errs = errors[case.id]
            observed = REJECT if errs else ACCEPT
            if observed == ACCEPT and execute:
                failure = _execute(case, workdir)
                if failure is not None:
                    observed = RUN_ERROR
                    errs = [failure]
            results.append(CaseResult(case, observed, errs))
    return results


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m sizedla.static",
                                     description="Run the static acceptance/rejection suite.")
    parser.add_argument("-k", dest="pattern", help="only cases whose id contains this text")
    parser.add_argument("-v", "--verbose", action="store_true", help="show diagnostics")
    parser.add_argument("--no-run", action="store_true", help="skip executing accept cases")
    args = parser.parse_args(argv)
    cases = [c for c in all_cases() if not args.pattern or args.pattern in c.id]
    t0 = time.perf_counter()
    results = run_suite(cases, execute=not args.no_run)
    for r in results:
        print(r.line())
        if args.verbose:
            for d in r.diagnostics:
                print("    " + d.splitlines()[0])
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} cases passed in {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0
