"""
Command-line verification front end.

Every subcommand prints a report with the keys ``command``, ``config``,
``items`` and ``pass``.  The exit status is 0 when every item passes, 1 when
any residual exceeds the tolerance and 2 on a usage error.

    clifford-bargmann gram --m 2 --lmax 2 --kmax 1 --tol 1e-10
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import bargmann as sb
from .clifford import norm0
from .hermite import (
    BasisIndex,
    basis_indices,
    gamma,
    gram_matrix,
    l2_inner,
    phi,
    random_combination,
)
from .monogenics import build_basis, monogenic_dimension, sphere_pairing
from .polynomial import CliffordPolynomial, dirac
from .quadrature import MAX_NODES, tensor_rule

OUT_DIR_ENV = "CLIFFORD_BARGMANN_OUT"

# default tolerance per command
TOLERANCES = {
    "gamma": 1e-10,
    "monogenics": 1e-12,
    "hermite": 1e-10,
    "gram": 1e-10,
    "transform": 1e-9,
    "stft-check": 1e-9,
    "isometry": 1e-9,
    "fock-norm": 1e-10,
    "dictionary": 1e-9,
    "kernel-check": 1e-6,
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# sampling helpers


def _cube(rng, n, d):
    return rng.uniform(-1.0, 1.0, size=(n, d))


def _complex_points(rng, n, m, unit_ball=False):
    z = _cube(rng, n, m) + 1j * _cube(rng, n, m)
    if unit_ball:
        r = np.sqrt(np.sum(np.abs(z) ** 2, axis=1))
        z = z / np.maximum(r, 1.0)[:, None]
    return z


def _rel(a, b):
    return norm0(a - b) / max(norm0(b), 1e-300)


def _quad_rule(cfg, degree, d):
    if cfg.quad_order == "auto":
        return None
    n = int(cfg.quad_order)
    if 2 * n - 1 < degree:
        raise UsageError(f"--quad-order {n} cannot integrate degree {degree} exactly")
    return tensor_rule(n, d)


# ---------------------------------------------------------------------------
# commands; each returns a list of item dicts with a "pass" key


def cmd_gamma(cfg, rng):
    items = []
    for l in range(cfg.lmax + 1):
        for k in range(cfg.kmax + 1):
            value = gamma(l, k, cfg.m)
            # quadrature route: ||H_l P_k exp(-|x|^2/4)||^2 with P_k sphere-normalised
            h = phi(BasisIndex(l, k, 1), cfg.m)
            measured = float(np.real(l2_inner(h, h).scalar_part())) * value
            res = abs(measured - value) / value
            items.append({"l": l, "k": k, "gamma": value, "gamma_over_pi": value / math.pi,
                          "quadrature": measured, "residual": res, "pass": res <= cfg.tol})
    return items


def cmd_monogenics(cfg, rng):
    items = []
    for k in range(cfg.kmax + 1):
        basis = build_basis(cfg.m, k)
        expected = monogenic_dimension(cfg.m, k)
        exact_ok = basis.dirac_exact_zero()
        float_dirac = max((float(np.max(np.abs(c.coeffs))) for P in basis for _, c in dirac(P).items()),
                          default=0.0)
        worst = float_dirac
        for i, P in enumerate(basis, 1):
            for j, Q in enumerate(basis, 1):
                target = 1.0 if i == j else 0.0
                c = sphere_pairing(P, Q)
                worst = max(worst, norm0(c - target))
        ok = len(basis) == expected and exact_ok and worst <= cfg.tol
        items.append({"k": k, "count": len(basis), "expected": expected, "dirac_exact_zero": exact_ok,
                      "float_dirac": float_dirac, "residual": worst, "pass": ok})
    return items


def cmd_hermite(cfg, rng):
    items = []
    for idx in basis_indices(cfg.m, cfg.lmax, cfg.kmax):
        f = phi(idx, cfg.m)
        norm_sq = float(np.real(l2_inner(f, f).scalar_part()))
        res = abs(norm_sq - 1.0)
        items.append({"index": idx.label(), "degree": f.poly.degree, "norm_sq": norm_sq,
                      "residual": res, "pass": res <= cfg.tol})
    return items


def cmd_gram(cfg, rng):
    indices, G = gram_matrix(cfg.m, cfg.lmax, cfg.kmax)
    res = float(np.max(np.abs(G - np.eye(len(indices)))))
    return [{"size": len(indices), "max_abs_deviation": res, "residual": res, "pass": res <= cfg.tol}]


def cmd_transform(cfg, rng):
    items = []
    for idx in basis_indices(cfg.m, cfg.lmax, cfg.kmax):
        f = phi(idx, cfg.m)
        exact = sb.transform_exact(idx, cfg.m)
        rule = _quad_rule(cfg, f.poly.degree, cfg.m)
        worst = 0.0
        for z in _complex_points(rng, cfg.points, cfg.m):
            worst = max(worst, _rel(sb.transform_numeric(f, z, rule), exact(z)))
        items.append({"index": idx.label(), "points": cfg.points, "residual": worst, "pass": worst <= cfg.tol})
    return items


def cmd_stft_check(cfg, rng):
    f = random_combination(cfg.m, cfg.lmax, cfg.kmax, rng)
    items = []
    for t, w in zip(_cube(rng, cfg.points, cfg.m), _cube(rng, cfg.points, cfg.m)):
        lhs, rhs, res = sb.stft_bargmann_check(f, t, w)
        items.append({"t": t.tolist(), "omega": w.tolist(), "residual": res, "pass": res <= cfg.tol})
    return items


def cmd_isometry(cfg, rng):
    items = []
    for i in range(cfg.points):
        f = random_combination(cfg.m, cfg.lmax, cfg.kmax, rng)
        g = random_combination(cfg.m, cfg.lmax, cfg.kmax, rng)
        fock_side, l2_side, res = sb.isometry_check(f, g)
        items.append({"pair": i, "l2_scalar": float(np.real(l2_side.scalar_part())),
                      "residual": res, "pass": res <= cfg.tol})
    return items


def cmd_fock_norm(cfg, rng):
    items = []
    zvec = CliffordPolynomial.vector_variable(cfg.m, "z", exact=False)
    for idx in basis_indices(cfg.m, cfg.lmax, cfg.kmax):
        l, k, j = idx
        P = zvec ** l * build_basis(cfg.m, k)[j].with_kind("z")
        value = sb.fock_norm_homogeneous(P)
        target = gamma(l, k, cfg.m) * (2 * math.pi) ** (-cfg.m / 2)
        res = abs(value - target) / target
        items.append({"index": idx.label(), "norm_sq": value, "expected": target,
                      "residual": res, "pass": res <= cfg.tol})
    return items


def cmd_dictionary(cfg, rng):
    f = random_combination(cfg.m, cfg.lmax, cfg.kmax, rng)
    exp = sb.expand(f, cfg.lmax, cfg.kmax, threads=cfg.threads)
    items = []
    for z in _complex_points(rng, cfg.points, cfg.m):
        series = exp(z)
        direct = sb.transform_numeric(f, z)
        res = _rel(series, direct)
        bound = exp.tail_bound(z)
        ok = res <= cfg.tol and norm0(series) <= bound
        items.append({"z_abs": float(np.linalg.norm(z)), "value_norm": norm0(series), "tail_bound": bound,
                      "residual": res, "pass": ok})
    return items


def cmd_kernel_check(cfg, rng):
    items = []
    xs = _cube(rng, cfg.points, cfg.m)
    zs = _complex_points(rng, cfg.points, cfg.m, unit_ball=True)
    for x, z in zip(xs, zs):
        closed = sb.kernel_closed(x, z)
        series = sb.kernel_series(x, z, cfg.lmax, cfg.kmax, max_total=cfg.max_total)
        res = norm0(series - closed)
        items.append({"x": x.tolist(), "z_abs": float(np.linalg.norm(z)), "closed_abs": abs(closed),
                      "residual": res, "pass": res <= cfg.tol})
    return items


COMMANDS = {
    "gamma": (cmd_gamma, "gamma_{l,k} table with a quadrature cross-check"),
    "monogenics": (cmd_monogenics, "build orthonormal inner spherical monogenic bases"),
    "hermite": (cmd_hermite, "norms of the Hermite basis functions"),
    "gram": (cmd_gram, "Gram matrix of the L2 basis against the identity"),
    "transform": (cmd_transform, "numeric transform of basis functions vs exact images"),
    "stft-check": (cmd_stft_check, "STFT / transform identity at random (t, omega)"),
    "isometry": (cmd_isometry, "isometry constant on random basis combinations"),
    "fock-norm": (cmd_fock_norm, "module norms of z^l P_k"),
    "dictionary": (cmd_dictionary, "dictionary expansion vs direct transform, with tail bound"),
    "kernel-check": (cmd_kernel_check, "truncated kernel series vs closed form"),
}


# ---------------------------------------------------------------------------
# output


def _fmt_float(x):
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def to_json(obj, indent=0):
    """JSON with floats written to 17 significant digits (byte-stable)."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{pad}{to_json(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        body = ",\n".join(pad + to_json(v, indent + 1) for v in obj)
        return "[\n" + body + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_csv(report):
    buf = io.StringIO()
    items = report["items"]
    fields = ["command"]
    for it in items:
        fields += [k for k in it if k not in fields]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for it in items:
        row = {"command": report["command"]}
        for k, v in it.items():
            if isinstance(v, float):
                v = _fmt_float(v)
            elif isinstance(v, list):
                v = " ".join(_fmt_float(float(a)) for a in v)
            row[k] = v
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------


def _quad_order(text):
    if text == "auto":
        return text
    n = int(text)
    if not 1 <= n <= MAX_NODES:
        raise argparse.ArgumentTypeError(f"quad order must be auto or 1..{MAX_NODES}")
    return n


def build_parser():
    parser = argparse.ArgumentParser(prog="clifford-bargmann", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--m", type=int, default=2, help="dimension (2..6)")
        p.add_argument("--lmax", type=int, default=2)
        p.add_argument("--kmax", type=int, default=1)
        p.add_argument("--tol", type=float, default=TOLERANCES[name])
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--points", type=int, default=10, help="random samples per item")
        p.add_argument("--quad-order", type=_quad_order, default="auto")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--out", type=Path, default=None, help="also write the report here")
        p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-stability)")
        if name == "kernel-check":
            p.add_argument("--max-total", type=int, default=None, help="also truncate at l + k <= N")
    return parser


def _validate(cfg):
    if not 2 <= cfg.m <= 6:
        raise UsageError("--m must be in 2..6")
    if cfg.lmax < 0 or cfg.kmax < 0:
        raise UsageError("--lmax and --kmax must be nonnegative")
    top = cfg.lmax + cfg.kmax
    if getattr(cfg, "max_total", None) is not None:
        top = min(top, cfg.max_total)
    if top > 12:
        raise UsageError("lmax + kmax exceeds the degree cap 12")
    if not cfg.tol > 0:
        raise UsageError("--tol must be positive")
    if cfg.points < 1 or cfg.threads < 1:
        raise UsageError("--points and --threads must be positive")


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        cfg = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _validate(cfg)
        rng = np.random.default_rng(cfg.seed)
        start = time.perf_counter()
        items = COMMANDS[cfg.command][0](cfg, rng)
        elapsed = time.perf_counter() - start
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    config = {
        "m": cfg.m, "lmax": cfg.lmax, "kmax": cfg.kmax, "tol": cfg.tol, "seed": cfg.seed,
        "points": cfg.points, "quad_order": cfg.quad_order, "format": cfg.format, "threads": cfg.threads,
    }
    if cfg.command == "kernel-check":
        config["max_total"] = cfg.max_total
    report = {"command": cfg.command, "config": config, "items": items,
              "pass": all(it["pass"] for it in items)}
    if cfg.timing:
        report["wall_time"] = elapsed
    text = to_json(report) + "\n" if cfg.format == "json" else to_csv(report)
    stdout.write(text)

    out = cfg.out
    if out is None and os.environ.get(OUT_DIR_ENV):
        out = Path(os.environ[OUT_DIR_ENV]) / f"{cfg.command}.{cfg.format}"
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    return 0 if report["pass"] else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
