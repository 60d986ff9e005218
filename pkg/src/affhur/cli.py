"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 limits exceeded (inconclusive/not found within limits). Text output is
human-oriented; ``--format json`` is the stable interface.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import __version__
from .hurwitz import ReflectionTuple, connect, orbit
from .intlattice import connection_index
from .literals import (braid_word_to_json, certificate_to_json, format_group,
                       format_root, format_tuple, parse_group,
                       parse_reflection_args, parse_tuple_literal,
                       reflection_to_json, tuple_to_json)
from .quasicox import (FactorizationQuery, PipelineExhausted,
                       absolute_length_affine, connect_reduced,
                       enumerate_factorizations, fiber, generates_affine,
                       is_quasi_coxeter_affine)
from .rootsys import RootSystemError, coroot
from .weyl_aff import as_element, product_of_reflections
from .weyl_fin import absolute_length, reflection_element
from . import verify as verify_mod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMITS = 3


def _node_limit() -> int:
    return int(os.environ.get("AFFHUR_NODE_LIMIT", 10 ** 6))


def _usage_error(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_USAGE)


def _emit(fmt: str, payload: dict, text_lines):
    if fmt == "json":
        payload = {"tool": "affhur", "version": __version__, **payload}
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


fmt_option = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                          default="text", show_default=True,
                          help="Output format; json is the stable interface.")


def _parse_group_or_exit(group: str):
    try:
        return parse_group(group)
    except (RootSystemError, ValueError) as exc:
        _usage_error(str(exc))


def _parse_refs_or_exit(rs, refs, affine):
    try:
        return parse_reflection_args(rs, refs, affine)
    except (RootSystemError, ValueError) as exc:
        _usage_error(str(exc))


@click.group()
@click.version_option(__version__, prog_name="affhur")
def main():
    """Exact reflection-factorization computations in finite and affine
    Weyl groups."""


@main.command("roots")
@click.argument("group")
@fmt_option
def cmd_roots(group, fmt):
    """List roots, coroots, highest root and connection index of GROUP."""
    rs, _affine = _parse_group_or_exit(group)
    payload = {
        "command": "roots",
        "group": f"{rs.family}{rs.rank}",
        "roots": [list(r.coords) for r in rs.roots],
        "positive_roots": [list(r.coords) for r in rs.positive_roots],
        "coroots": [list(coroot(rs, r).coords) for r in rs.roots],
        "highest_root": list(rs.highest_root.coords),
        "connection_index": connection_index(rs),
        "cartan_matrix": [list(row) for row in rs.cartan],
    }
    lines = [f"group {rs.family}{rs.rank}: {len(rs.roots)} roots, "
             f"{len(rs.positive_roots)} positive",
             f"highest root: {format_root(rs.highest_root)}",
             f"connection index: {connection_index(rs)}",
             "positive roots: "
             + " ".join(format_root(r) for r in rs.positive_roots)]
    _emit(fmt, payload, lines)


@main.command("check-qc")
@click.argument("group")
@click.argument("reflections", nargs=-1, required=True)
@click.option("-K", "--level-bound", default=2, show_default=True,
              help="Level bound for the witness search.")
@fmt_option
def cmd_check_qc(group, reflections, level_bound, fmt):
    """Decide quasi-Coxeter status of the product of the given reflections."""
    rs, affine = _parse_group_or_exit(group)
    if not affine:
        _usage_error("check-qc needs an affine group spec like 'affine:A2'")
    refs = _parse_refs_or_exit(rs, reflections, affine)
    w = product_of_reflections(rs, refs)
    res = is_quasi_coxeter_affine(rs, w, level_cap=level_bound)
    length = absolute_length_affine(rs, w)
    detail = res.detail
    if length > rs.rank + 1:
        detail += (f"; absolute length {length} exceeds {rs.rank + 1}, "
                   "outside the quasi-Coxeter length range")
    cert = None
    if res.witness is not None:
        cert = certificate_to_json(generates_affine(rs, res.witness).certificate)
    payload = {
        "command": "check-qc",
        "group": format_group(rs, affine),
        "verdict": res.is_quasi_coxeter,
        "conclusive": res.conclusive,
        "absolute_length": length,
        "witness": None if res.witness is None else tuple_to_json(res.witness),
        "certificate": cert,
        "detail": detail,
        "limits": {"level_bound": level_bound},
    }
    lines = [f"quasi-Coxeter: {res.is_quasi_coxeter} "
             f"({'conclusive' if res.conclusive else 'within level bound only'})",
             f"absolute length: {length}",
             f"detail: {detail}"]
    if res.witness is not None:
        lines.append(f"witness: {format_tuple(res.witness)}")
    _emit(fmt, payload, lines)
    sys.exit(EXIT_OK if res.conclusive else EXIT_LIMITS)


@main.command("factorize")
@click.argument("group")
@click.argument("reflections", nargs=-1, required=True)
@click.option("--length", "length", type=int, default=None,
              help="Factorization length; defaults to the absolute length.")
@click.option("-K", "--level-bound", default=2, show_default=True)
@fmt_option
def cmd_factorize(group, reflections, length, level_bound, fmt):
    """Enumerate reflection factorizations of the product of REFLECTIONS."""
    rs, affine = _parse_group_or_exit(group)
    if not affine:
        _usage_error("factorize needs an affine group spec like 'affine:A2'")
    refs = _parse_refs_or_exit(rs, reflections, affine)
    w = product_of_reflections(rs, refs)
    if length is None:
        length = absolute_length_affine(rs, w)
    facs = enumerate_factorizations(rs, FactorizationQuery(w, length, level_bound))
    payload = {
        "command": "factorize",
        "group": format_group(rs, affine),
        "length": length,
        "limits": {"level_bound": level_bound},
        "count": len(facs),
        "factorizations": [tuple_to_json(f) for f in facs],
    }
    lines = [f"{len(facs)} factorizations of length {length} "
             f"with levels in [-{level_bound}, {level_bound}]"]
    lines += [format_tuple(f) for f in facs]
    _emit(fmt, payload, lines)


@main.command("length")
@click.argument("group")
@click.argument("reflections", nargs=-1, required=True)
@fmt_option
def cmd_length(group, reflections, fmt):
    """Absolute (reflection) length of the product of REFLECTIONS."""
    rs, affine = _parse_group_or_exit(group)
    refs = _parse_refs_or_exit(rs, reflections, affine)
    if affine:
        w = product_of_reflections(rs, refs)
        length = absolute_length_affine(rs, w)
    else:
        prod = None
        for r in refs:
            e = reflection_element(rs, r.root)
            prod = e if prod is None else prod * e
        length = absolute_length(prod)
    payload = {"command": "length", "group": format_group(rs, affine),
               "absolute_length": length}
    _emit(fmt, payload, [f"absolute length: {length}"])


@main.command("orbit")
@click.argument("group")
@click.argument("reflections", nargs=-1, required=True)
@click.option("--depth", type=int, default=None, help="Depth cap (default none).")
@fmt_option
def cmd_orbit(group, reflections, depth, fmt):
    """Hurwitz orbit of the given reflection tuple."""
    rs, affine = _parse_group_or_exit(group)
    refs = _parse_refs_or_exit(rs, reflections, affine)
    if affine:
        t = ReflectionTuple(tuple(as_element(rs, r) for r in refs))
    else:
        t = ReflectionTuple(tuple(reflection_element(rs, r.root) for r in refs))
    res = orbit(t, node_limit=_node_limit(), depth_limit=depth)
    payload = {"command": "orbit", "group": format_group(rs, affine),
               "size": len(res.parents), "exhausted": res.exhausted,
               "limits": {"node_limit": _node_limit(), "depth": depth}}
    _emit(fmt, payload,
          [f"orbit size: {len(res.parents)} "
           f"({'exhausted' if res.exhausted else 'truncated at limits'})"])
    sys.exit(EXIT_OK if res.exhausted else EXIT_LIMITS)


@main.command("connect")
@click.argument("group")
@click.argument("tuple1")
@click.argument("tuple2")
@click.option("--depth", type=int, default=16, show_default=True)
@fmt_option
def cmd_connect(group, tuple1, tuple2, depth, fmt):
    """Braid word sending TUPLE1 to TUPLE2 (semicolon-separated literals)."""
    rs, affine = _parse_group_or_exit(group)
    try:
        t1 = parse_tuple_literal(rs, tuple1)
        t2 = parse_tuple_literal(rs, tuple2)
    except (RootSystemError, ValueError) as exc:
        _usage_error(str(exc))
    if len(t1) != len(t2):
        _usage_error("tuples have different lengths")
    if affine:
        e1 = ReflectionTuple(tuple(as_element(rs, r) for r in t1))
        e2 = ReflectionTuple(tuple(as_element(rs, r) for r in t2))
    else:
        e1 = ReflectionTuple(tuple(reflection_element(rs, r.root) for r in t1))
        e2 = ReflectionTuple(tuple(reflection_element(rs, r.root) for r in t2))
    if e1.product() != e2.product():
        _usage_error("tuple products differ; no braid word can exist")
    word = None
    if affine and len(t1) == rs.rank + 1:
        try:
            word = connect_reduced(rs, e1.product(), t1, t2,
                                   depth_limit=depth, node_limit=_node_limit())
        except (PipelineExhausted, ValueError):
            word = None
    if word is None:
        word = connect(e1, e2, depth_limit=depth, node_limit=_node_limit())
    payload = {"command": "connect", "group": format_group(rs, affine),
               "braid_word": braid_word_to_json(word),
               "limits": {"depth": depth, "node_limit": _node_limit()}}
    if word is None:
        _emit(fmt, payload, ["no braid word found within limits"])
        sys.exit(EXIT_LIMITS)
    _emit(fmt, payload, [f"braid word: {list(word.letters)}"])


@main.command("fiber")
@click.argument("group")
@click.argument("reflections", nargs=-1, required=True)
@click.option("-K", "--shift-bound", default=2, show_default=True)
@fmt_option
def cmd_fiber(group, reflections, shift_bound, fmt):
    """Members of the sigma_n-fiber through a repeated-root-tail tuple."""
    rs, affine = _parse_group_or_exit(group)
    if not affine:
        _usage_error("fiber needs an affine group spec like 'affine:A2'")
    refs = _parse_refs_or_exit(rs, reflections, affine)
    try:
        members = fiber(rs, refs, shift_bound)
    except ValueError as exc:
        _usage_error(str(exc))
    payload = {"command": "fiber", "group": format_group(rs, affine),
               "limits": {"shift_bound": shift_bound},
               "members": [tuple_to_json(m) for m in members]}
    _emit(fmt, payload,
          [f"{len(members)} fiber members"] + [format_tuple(m) for m in members])


@main.command("verify")
@click.argument("suites", nargs=-1)
@click.option("--group", "groups", multiple=True,
              help="Groups to run the suite over (suite defaults if omitted).")
@click.option("--seed", type=int, default=verify_mod.DEFAULT_SEED,
              show_default=True)
@click.option("--samples", type=int, default=None,
              help="Sample count for randomized suites.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker cap; 1 gives fully deterministic ordering.")
@fmt_option
def cmd_verify(suites, groups, seed, samples, threads, fmt):
    """Run verification suites (default: all)."""
    names = list(suites) if suites else list(verify_mod.SUITES)
    for name in names:
        if name not in verify_mod.SUITES:
            _usage_error(f"unknown suite {name!r}; known: {', '.join(verify_mod.SUITES)}")
    group_list = list(groups) or None

    def run(name):
        return verify_mod.run_suite(name, groups=group_list, seed=seed,
                                    samples=samples)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            all_results = list(pool.map(run, names))
    else:
        all_results = [run(name) for name in names]
    checks = []
    lines = []
    ok_all = True
    for name, results in zip(names, all_results):
        if not results:
            lines.append(f"[{name}] WARNING: no checks ran (empty group list)")
        for c in results:
            ok_all &= c.ok
            checks.append({"suite": name, "name": c.name, "ok": c.ok,
                           "seconds": round(c.seconds, 4), "detail": c.detail})
            status = "PASS" if c.ok else "FAIL"
            lines.append(f"[{name}] {status} {c.name} ({c.seconds:.2f}s) {c.detail}")
    lines.append("all checks passed" if ok_all else "FAILURES present")
    payload = {"command": "verify", "seed": seed, "suites": names,
               "checks": checks, "ok": ok_all}
    _emit(fmt, payload, lines)
    sys.exit(EXIT_OK if ok_all else EXIT_FAIL)


if __name__ == "__main__":
    main()
