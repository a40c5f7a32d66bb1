"""Command line front end.

    sympchar scp examples.json
    sympchar similar a.json b.json --json

Input files are JSON objects ``{"dim": 2n, "matrix": [[...]], "form": [[...]]}``
with entries written as strings ``"p"`` or ``"p/q"`` (JSON integers are also
accepted).  Exit status is 0 on success, 1 on a domain error and 2 on a parse
error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import diagonalization, eigenstructure, matrix, symplectic
from .errors import IrrationalSpectrum, ParseError, SymplecticError
from .matrix import Matrix, inverse
from .pfaffian import pfaffian_field
from .scp import psi, scp, scp_factor_pairs

__all__ = ["MatrixFile", "parse_matrix_file", "render_matrix_file", "load_matrix_file", "run", "main"]

_ENTRY = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_entry(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"entry {x!r} is not an exact rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _ENTRY.match(x)
        if m:
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den > 0:
                return Fraction(int(m.group(1)), den)
    raise ParseError(f"entry {x!r} is not of the form 'p' or 'p/q'")


def render_entry(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_square(rows, dim: int, what: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != dim:
        raise ParseError(f"{what} must be a list of {dim} rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != dim:
            raise ParseError(f"every row of {what} must have {dim} entries")
        out.append([parse_entry(x) for x in r])
    return Matrix(out)


@dataclass(frozen=True)
class MatrixFile:
    dim: int
    matrix: Matrix
    form: Matrix | None = None

    def symplectic_form(self) -> symplectic.SymplecticForm:
        if self.form is None:
            return symplectic.standard_form(self.dim // 2)
        return symplectic.SymplecticForm(self.form)


def parse_matrix_file(text: str) -> MatrixFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "matrix" not in data:
        raise ParseError("expected an object with a 'matrix' key")
    dim = data.get("dim", len(data["matrix"]) if isinstance(data["matrix"], list) else None)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0 or dim % 2:
        raise ParseError("'dim' must be an even positive integer")
    M = _parse_square(data["matrix"], dim, "matrix")
    form = None
    if data.get("form") is not None:
        form = _parse_square(data["form"], dim, "form")
        try:
            symplectic.SymplecticForm(form)
        except SymplecticError as exc:
            raise ParseError(f"form is not symplectic: {exc}") from exc
    return MatrixFile(dim, M, form)


def _rows(M: Matrix) -> list[list[str]]:
    return [[render_entry(x) for x in r] for r in M.rows]


def render_matrix_file(mf: MatrixFile) -> str:
    data: dict[str, Any] = {"dim": mf.dim, "matrix": _rows(mf.matrix)}
    if mf.form is not None:
        data["form"] = _rows(mf.form)
    return json.dumps(data)


def load_matrix_file(path: str | Path) -> MatrixFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_matrix_file(text)


def _load_form(path: str, dim: int) -> Matrix:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read form file {path}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("form", data.get("matrix"))
    G = _parse_square(data, dim, "form")
    try:
        symplectic.SymplecticForm(G)
    except SymplecticError as exc:
        raise ParseError(f"form is not symplectic: {exc}") from exc
    return G


# rendering of kernel values into plain JSON-able data
def _vec(v) -> list[str]:
    return [render_entry(x) for x in v]


def _pairs(pairs) -> list[list[str]]:
    return [[render_entry(lam), render_entry(mu)] for lam, mu in pairs]


def _factors(factors) -> list[dict]:
    return [
        {"lambda": render_entry(lam), "mu": render_entry(mu), "multiplicity": m}
        for lam, mu, m in factors
    ]


# command handlers: each returns one dict used for both output styles
def _cmd_check(mf: MatrixFile, args) -> dict:
    M, form = mf.matrix, mf.symplectic_form()
    try:
        diag: Any = matrix.is_diagonalizable(M)
    except IrrationalSpectrum:
        diag = "irrational-spectrum"
    adj = symplectic.adjoint(M, form)
    normal = M @ adj == adj @ M
    out = {
        "symplectically_normal": normal,
        "diagonalizable": diag,
        "symplectically_diagonalizable": normal and diag is True,
        "symplectic_map": symplectic.is_symplectic_map(M, form),
        "self_adjoint": adj == M,
        "anti_self_adjoint": adj == -M,
    }
    if args.seed is not None:
        # random element of Sp(form): conjugate a standard one into the form's frame
        B = symplectic.symplectic_basis(form).matrix
        P = B @ symplectic.random_symplectic(form.n, args.seed) @ inverse(B)
        chi = scp(M, form)
        out["seed"] = args.seed
        out["scp_invariant_under_random_conjugation"] = (
            scp(inverse(P) @ M @ P, form) == chi
        )
    return out


def _cmd_adjoint(mf, args) -> dict:
    return {"result": _rows(symplectic.adjoint(mf.matrix, mf.symplectic_form()))}


def _cmd_charpoly(mf, args) -> dict:
    return {"result": str(matrix.charpoly(mf.matrix))}


def _cmd_pfaffian(mf, args) -> dict:
    return {"result": render_entry(pfaffian_field(mf.matrix))}


def _cmd_psi(mf, args) -> dict:
    return {"result": str(psi(mf.matrix, mf.symplectic_form()))}


def _cmd_scp(mf, args) -> dict:
    return {"result": str(scp(mf.matrix, mf.symplectic_form()))}


def _cmd_factor(mf, args) -> dict:
    fac = scp_factor_pairs(scp(mf.matrix, mf.symplectic_form()))
    return {"result": str(fac), "factors": _factors(fac.factors)}


def _cmd_decompose(mf, args) -> dict:
    M, form = mf.matrix, mf.symplectic_form()
    d = eigenstructure.sympl_pair_decomposition(M, form)
    out: dict[str, Any] = {
        "factors": _factors(d.pairs),
        "spaces": [[_vec(v) for v in W.basis] for W in d.spaces],
        "projections": [_rows(P) for P in d.projections],
    }
    if M.nrows <= args.max_ratfun_dim:
        Q = eigenstructure.ratfun_projections(
            M, symplectic.adjoint(M, form), max_dim=args.max_ratfun_dim
        )
        out["ratfun_projections_agree"] = all(
            q.to_kind("rational") == p for q, p in zip(Q, d.projections)
        )
    else:
        out["ratfun_projections_agree"] = "skipped"
    return out


def _cmd_diagonalize(mf, args) -> dict:
    d = diagonalization.symplectic_diagonalize(mf.matrix, mf.symplectic_form())
    return {"pairs": _pairs(d.pairs), "basis": _rows(d.P)}


def _cmd_similar(mf, args, other: MatrixFile) -> dict:
    if other.dim != mf.dim:
        raise ParseError("the two files have different dimensions")
    verdict, P = diagonalization.symplectically_similar(
        mf.matrix, other.matrix, mf.symplectic_form()
    )
    out: dict[str, Any] = {
        "result": "symplectically-similar" if verdict else "not-symplectically-similar"
    }
    if P is not None:
        out["witness"] = _rows(P)
    return out


_COMMANDS = {
    "check": _cmd_check,
    "adjoint": _cmd_adjoint,
    "charpoly": _cmd_charpoly,
    "pfaffian": _cmd_pfaffian,
    "psi": _cmd_psi,
    "scp": _cmd_scp,
    "factor": _cmd_factor,
    "decompose": _cmd_decompose,
    "diagonalize": _cmd_diagonalize,
    "similar": _cmd_similar,
}


def _render_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list) and value and isinstance(value[0], list):
        if value[0] and isinstance(value[0][0], list):
            return "\n  --\n".join(_render_text(v) for v in value)
        return "\n".join("  " + _render_text(v) for v in value)
    if isinstance(value, list):
        return "[" + ", ".join(_render_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_render_text(v)}" for k, v in value.items())
    return str(value)


def render_text(out: dict) -> str:
    lines = []
    for key, value in out.items():
        text = _render_text(value)
        if key == "result" and "\n" not in text:
            lines.append(text)
        elif "\n" in text:
            lines.append(f"{key}:\n{text}")
        else:
            lines.append(f"{key}: {text}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympchar",
        description="Symplectic characteristic polynomials and symplectic similarity.",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("files", nargs="+", help="matrix file(s); 'similar' takes two")
    parser.add_argument("--json", action="store_true", help="structured output")
    parser.add_argument("--form", help="JSON file with an external Gram matrix")
    parser.add_argument("--seed", type=int, help="seed for randomized self-checks")
    parser.add_argument(
        "--max-ratfun-dim",
        type=int,
        default=eigenstructure.MAX_RATFUN_DIM,
        help="largest dimension for computations over Q(s)",
    )
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    expected = 2 if args.command == "similar" else 1
    try:
        if len(args.files) != expected:
            raise ParseError(f"'{args.command}' takes {expected} file argument(s)")
        files = [load_matrix_file(p) for p in args.files]
        if args.form:
            G = _load_form(args.form, files[0].dim)
            files = [MatrixFile(f.dim, f.matrix, G) for f in files]
        handler = _COMMANDS[args.command]
        out = handler(files[0], args, *files[1:])
    except ParseError as exc:
        _emit_error(exc, args.json, stdout, stderr)
        return 2
    except SymplecticError as exc:
        _emit_error(exc, args.json, stdout, stderr)
        return 1
    if args.json:
        print(json.dumps(out), file=stdout)
    else:
        print(render_text(out), file=stdout)
    return 0


def _emit_error(exc: SymplecticError, as_json: bool, stdout, stderr) -> None:
    if as_json:
        print(json.dumps({"error": exc.token, "message": str(exc)}), file=stdout)
    else:
        print(f"{exc.token}: {exc}", file=stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
