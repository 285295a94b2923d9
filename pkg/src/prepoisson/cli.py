"""Command-line front end: file parsing, command dispatch, report emission.

The input format is line oriented.  '#' starts a comment, indices are
1-based, scalars are exact rationals like '7', '-3' or '-3/4'.  Blocks:

  algebra NAME            tensor NAME on ALG       form NAME on ALG
    dim N                   entry i j q              entry i j q
    succ i j k q            end                      end
    prec i j k q
    ast i j k q           map NAME from SPACE to SPACE   (SPACE = ALG | ALG.dual)
    end                     entry i j q
                            end
  rep NAME on ALG dim M
    lsucc x i j q  (likewise rsucc, lprec, rprec, last, rast)
    end
  comult NAME on ALG
    dsucc i j k q  (likewise dprec, dast)
    end

Product lines mean e_i o e_j += q * e_k; map entries mean T(e_j) += q * f_i;
comultiplication lines mean D(e_i) += q * e_j (x) e_k.  Form entries fix
omega(e_i, e_j) = q with the skew mirror applied automatically.

Reports are machine readable key=value lines; construct/convert commands
emit reparseable blocks with the report carried on '#' comment lines.
Exit codes: 0 all checks pass, 1 a check failed, 2 input or usage error.
"""

import sys

from .exact import rat, scalar_str, zeros_mat, zeros2
from .algebra import (
    CheckReport,
    STRUCTURE_LEVELS,
    TriAlgebra,
    check_structure,
    fmt_value,
    zero_cube,
)
from .reps import REP_LEVELS, SixRep, check_six_rep, dualize_rep, regular_rep, semidirect
from .ybe import (
    OperatorSpec,
    RMatrix,
    check_invariance,
    check_relative_rb,
    eval_ybe,
    lift_operator,
    operator_characterization,
    search_ybe,
)
from .bialgebra import CoTriple, check_bialgebra, classify_r, cobound, double, dual_algebra, factorize
from .quadratic import (
    FORM_LEVELS,
    RBSpec,
    SkewForm,
    check_form,
    check_manin,
    check_quadratic_rb,
    fact_to_rb,
    phase_space,
    rb_to_fact,
)

CONVENTION_LINES = (
    "convention.contraction=shared slot multiplies first-listed leg on the left",
    "convention.dual=plain adjoint actions; T-map of a tensor is its transpose",
)


class CliError(Exception):
    """Input or usage error; maps to exit code 2."""


# ---------------------------------------------------------------------------
# workspace and parsing


class Workspace:
    """Named store of parsed objects, one dict per kind, insertion ordered."""

    def __init__(self):
        self.algebras = {}
        self.tensors = {}
        self.forms = {}
        self.maps = {}
        self.reps = {}
        self.comults = {}

    def _kind(self, kind):
        return {
            "algebra": self.algebras,
            "tensor": self.tensors,
            "form": self.forms,
            "map": self.maps,
            "rep": self.reps,
            "comult": self.comults,
        }[kind]

    def add(self, kind, name, value):
        store = self._kind(kind)
        if name in store:
            raise CliError("duplicate %s name %r" % (kind, name))
        store[name] = value

    def first(self, kind):
        store = self._kind(kind)
        if not store:
            raise CliError("no %s block was loaded" % kind)
        name = next(iter(store))
        return name, store[name]

    def algebra(self, name):
        if name not in self.algebras:
            raise CliError("unknown algebra %r" % name)
        return self.algebras[name]


def _scalar(token, lineno):
    try:
        return rat(token)
    except ValueError as exc:
        raise CliError("line %d: malformed rational %r (%s)" % (lineno, token, exc))


def _index(token, bound, lineno):
    try:
        value = int(token)
    except ValueError:
        raise CliError("line %d: bad index %r" % (lineno, token))
    if not 1 <= value <= bound:
        raise CliError("line %d: index %d out of range 1..%d" % (lineno, value, bound))
    return value - 1


def parse_lines(lines, ws):
    """Parse the block grammar into the workspace; raises CliError."""
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            rows.append((lineno, text.split()))
    pos = 0
    while pos < len(rows):
        lineno, head = rows[pos]
        kind = head[0]
        body = []
        end = pos + 1
        while end < len(rows) and rows[end][1] != ["end"]:
            body.append(rows[end])
            end += 1
        if end == len(rows):
            raise CliError("line %d: block %r has no matching 'end'" % (lineno, kind))
        if kind == "algebra":
            _parse_algebra(head, lineno, body, ws)
        elif kind == "tensor":
            _parse_tensor(head, lineno, body, ws)
        elif kind == "form":
            _parse_form(head, lineno, body, ws)
        elif kind == "map":
            _parse_map(head, lineno, body, ws)
        elif kind == "rep":
            _parse_rep(head, lineno, body, ws)
        elif kind == "comult":
            _parse_comult(head, lineno, body, ws)
        else:
            raise CliError("line %d: unknown block kind %r" % (lineno, kind))
        pos = end + 1
    return ws


def parse_file(path, ws):
    try:
        with open(path) as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc))
    return parse_lines(lines, ws)


def _parse_algebra(head, lineno, body, ws):
    if len(head) != 2:
        raise CliError("line %d: expected 'algebra NAME'" % lineno)
    name = head[1]
    if not body or body[0][1][0] != "dim":
        raise CliError("line %d: algebra block must start with 'dim N'" % lineno)
    dln, dtok = body[0]
    if len(dtok) != 2:
        raise CliError("line %d: expected 'dim N'" % dln)
    try:
        n = int(dtok[1])
    except ValueError:
        raise CliError("line %d: bad dimension %r" % (dln, dtok[1]))
    if n < 1:
        raise CliError("line %d: dimension must be positive" % dln)
    cubes = {"succ": zero_cube(n), "prec": zero_cube(n), "ast": zero_cube(n)}
    seen = set()
    for bln, tok in body[1:]:
        if tok[0] not in cubes or len(tok) != 5:
            raise CliError("line %d: expected 'succ|prec|ast i j k q'" % bln)
        i = _index(tok[1], n, bln)
        j = _index(tok[2], n, bln)
        k = _index(tok[3], n, bln)
        key = (tok[0], i, j, k)
        if key in seen:
            raise CliError("line %d: duplicate entry %s %s %s %s"
                           % (bln, tok[0], tok[1], tok[2], tok[3]))
        seen.add(key)
        cubes[tok[0]][i][j][k] = _scalar(tok[4], bln)
    ws.add("algebra", name, TriAlgebra(n, cubes["succ"], cubes["prec"], cubes["ast"]))


def _parse_tensor(head, lineno, body, ws):
    if len(head) != 4 or head[2] != "on":
        raise CliError("line %d: expected 'tensor NAME on ALG'" % lineno)
    name, on = head[1], head[3]
    alg = ws.algebra(on)
    grid = zeros2(alg.dim)
    seen = set()
    for bln, tok in body:
        if tok[0] != "entry" or len(tok) != 4:
            raise CliError("line %d: expected 'entry i j q'" % bln)
        i = _index(tok[1], alg.dim, bln)
        j = _index(tok[2], alg.dim, bln)
        if (i, j) in seen:
            raise CliError("line %d: duplicate entry %s %s" % (bln, tok[1], tok[2]))
        seen.add((i, j))
        grid[i][j] = _scalar(tok[3], bln)
    ws.add("tensor", name, {"on": on, "grid": grid})


def _parse_form(head, lineno, body, ws):
    if len(head) != 4 or head[2] != "on":
        raise CliError("line %d: expected 'form NAME on ALG'" % lineno)
    name, on = head[1], head[3]
    alg = ws.algebra(on)
    n = alg.dim
    omega = zeros_mat(n)
    fixed = {}
    for bln, tok in body:
        if tok[0] != "entry" or len(tok) != 4:
            raise CliError("line %d: expected 'entry i j q'" % bln)
        i = _index(tok[1], n, bln)
        j = _index(tok[2], n, bln)
        q = _scalar(tok[3], bln)
        if i == j and q != 0:
            raise CliError("line %d: diagonal form entry must be zero" % bln)
        for key, val in (((i, j), q), ((j, i), -q)):
            if key in fixed and fixed[key] != val:
                raise CliError("line %d: conflicting form entry %s %s"
                               % (bln, tok[1], tok[2]))
            fixed[key] = val
        omega[i][j] = q
        omega[j][i] = -q
    try:
        form = SkewForm(omega)
    except ValueError as exc:
        raise CliError("line %d: invalid form %r: %s" % (lineno, name, exc))
    ws.add("form", name, {"on": on, "form": form})


def _parse_map(head, lineno, body, ws):
    if len(head) != 6 or head[2] != "from" or head[4] != "to":
        raise CliError("line %d: expected 'map NAME from SPACE to SPACE'" % lineno)
    name, src, dst = head[1], head[3], head[5]
    dims = []
    for space in (src, dst):
        base = space[: -len(".dual")] if space.endswith(".dual") else space
        dims.append(ws.algebra(base).dim)
    dom, cod = dims
    mat = zeros_mat(cod, dom)
    seen = set()
    for bln, tok in body:
        if tok[0] != "entry" or len(tok) != 4:
            raise CliError("line %d: expected 'entry i j q'" % bln)
        i = _index(tok[1], cod, bln)
        j = _index(tok[2], dom, bln)
        if (i, j) in seen:
            raise CliError("line %d: duplicate entry %s %s" % (bln, tok[1], tok[2]))
        seen.add((i, j))
        mat[i][j] = _scalar(tok[3], bln)
    ws.add("map", name, {"from": src, "to": dst, "mat": mat})


_REP_FAMILIES = ("lsucc", "rsucc", "lprec", "rprec", "last", "rast")


def _parse_rep(head, lineno, body, ws):
    if len(head) != 6 or head[2] != "on" or head[4] != "dim":
        raise CliError("line %d: expected 'rep NAME on ALG dim M'" % lineno)
    name, on = head[1], head[3]
    alg = ws.algebra(on)
    try:
        m = int(head[5])
    except ValueError:
        raise CliError("line %d: bad carrier dimension %r" % (lineno, head[5]))
    if m < 1:
        raise CliError("line %d: carrier dimension must be positive" % lineno)
    fams = {f: [zeros_mat(m) for _ in range(alg.dim)] for f in _REP_FAMILIES}
    seen = set()
    for bln, tok in body:
        if tok[0] not in fams or len(tok) != 5:
            raise CliError("line %d: expected 'lsucc|rsucc|lprec|rprec|last|rast"
                           " x i j q'" % bln)
        x = _index(tok[1], alg.dim, bln)
        i = _index(tok[2], m, bln)
        j = _index(tok[3], m, bln)
        key = (tok[0], x, i, j)
        if key in seen:
            raise CliError("line %d: duplicate entry" % bln)
        seen.add(key)
        fams[tok[0]][x][i][j] = _scalar(tok[4], bln)
    rep = SixRep(alg.dim, m, fams["lsucc"], fams["rsucc"], fams["lprec"],
                 fams["rprec"], fams["last"], fams["rast"])
    ws.add("rep", name, {"on": on, "rep": rep})


def _parse_comult(head, lineno, body, ws):
    if len(head) != 4 or head[2] != "on":
        raise CliError("line %d: expected 'comult NAME on ALG'" % lineno)
    name, on = head[1], head[3]
    alg = ws.algebra(on)
    n = alg.dim
    cubes = {"dsucc": zero_cube(n), "dprec": zero_cube(n), "dast": zero_cube(n)}
    seen = set()
    for bln, tok in body:
        if tok[0] not in cubes or len(tok) != 5:
            raise CliError("line %d: expected 'dsucc|dprec|dast i j k q'" % bln)
        i = _index(tok[1], n, bln)
        j = _index(tok[2], n, bln)
        k = _index(tok[3], n, bln)
        key = (tok[0], i, j, k)
        if key in seen:
            raise CliError("line %d: duplicate entry" % bln)
        seen.add(key)
        cubes[tok[0]][i][j][k] = _scalar(tok[4], bln)
    ct = CoTriple(n, cubes["dsucc"], cubes["dprec"], cubes["dast"])
    ws.add("comult", name, {"on": on, "ct": ct})


# ---------------------------------------------------------------------------
# emission


def emit_algebra(name, alg):
    lines = ["algebra %s" % name, "dim %d" % alg.dim]
    for op in ("succ", "prec", "ast"):
        cube = alg.cube(op)
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    if cube[i][j][k]:
                        lines.append("%s %d %d %d %s"
                                     % (op, i + 1, j + 1, k + 1,
                                        scalar_str(cube[i][j][k])))
    lines.append("end")
    return lines


def emit_tensor(name, on, grid):
    lines = ["tensor %s on %s" % (name, on)]
    for i, row in enumerate(grid):
        for j, q in enumerate(row):
            if q:
                lines.append("entry %d %d %s" % (i + 1, j + 1, scalar_str(q)))
    lines.append("end")
    return lines


def emit_form(name, on, form):
    lines = ["form %s on %s" % (name, on)]
    for i in range(form.dim):
        for j in range(i + 1, form.dim):
            if form.omega[i][j]:
                lines.append("entry %d %d %s"
                             % (i + 1, j + 1, scalar_str(form.omega[i][j])))
    lines.append("end")
    return lines


def emit_map(name, src, dst, mat):
    lines = ["map %s from %s to %s" % (name, src, dst)]
    for i, row in enumerate(mat):
        for j, q in enumerate(row):
            if q:
                lines.append("entry %d %d %s" % (i + 1, j + 1, scalar_str(q)))
    lines.append("end")
    return lines


def emit_rep(name, on, rep):
    lines = ["rep %s on %s dim %d" % (name, on, rep.carrier_dim)]
    for fam_name, fam in zip(_REP_FAMILIES, (rep.l_succ, rep.r_succ, rep.l_prec,
                                             rep.r_prec, rep.l_ast, rep.r_ast)):
        for x, mat in enumerate(fam):
            for i, row in enumerate(mat):
                for j, q in enumerate(row):
                    if q:
                        lines.append("%s %d %d %d %s"
                                     % (fam_name, x + 1, i + 1, j + 1,
                                        scalar_str(q)))
    lines.append("end")
    return lines


def emit_comult(name, on, ct):
    lines = ["comult %s on %s" % (name, on)]
    for op, cube in (("dsucc", ct.d_succ), ("dprec", ct.d_prec),
                     ("dast", ct.d_ast)):
        for i in range(ct.dim):
            for j in range(ct.dim):
                for k in range(ct.dim):
                    if cube[i][j][k]:
                        lines.append("%s %d %d %d %s"
                                     % (op, i + 1, j + 1, k + 1,
                                        scalar_str(cube[i][j][k])))
    lines.append("end")
    return lines


def emit_workspace(ws):
    """Canonical text for a workspace; reparses to an identical workspace."""
    lines = []
    for name in sorted(ws.algebras):
        lines.extend(emit_algebra(name, ws.algebras[name]))
    for name in sorted(ws.tensors):
        item = ws.tensors[name]
        lines.extend(emit_tensor(name, item["on"], item["grid"]))
    for name in sorted(ws.forms):
        item = ws.forms[name]
        lines.extend(emit_form(name, item["on"], item["form"]))
    for name in sorted(ws.maps):
        item = ws.maps[name]
        lines.extend(emit_map(name, item["from"], item["to"], item["mat"]))
    for name in sorted(ws.reps):
        item = ws.reps[name]
        lines.extend(emit_rep(name, item["on"], item["rep"]))
    for name in sorted(ws.comults):
        item = ws.comults[name]
        lines.extend(emit_comult(name, item["on"], item["ct"]))
    return lines


# ---------------------------------------------------------------------------
# reports


def report_lines(echo, report=None, extra=None):
    lines = ["command=%s" % echo]
    lines.extend(CONVENTION_LINES)
    if extra:
        lines.extend(extra)
    if report is not None:
        lines.append("verdict=%s" % report.verdict)
        for k, f in enumerate(report.failures):
            idx = ",".join(str(i + 1) for i in f["indices"])
            lines.append("witness.%d.identity=%s" % (k, f["identity"]))
            lines.append("witness.%d.indices=%s" % (k, idx))
            lines.append("witness.%d.lhs=%s" % (k, fmt_value(f["lhs"])))
            lines.append("witness.%d.rhs=%s" % (k, fmt_value(f["rhs"])))
        for note in report.notes:
            lines.append("note=%s" % note)
    return lines


def _flag(value):
    return "yes" if value else "no"


# ---------------------------------------------------------------------------
# command dispatch


_VALUE_FLAGS = ("--level", "--weight", "--coeffs", "--expect", "--jobs",
                "--split", "--element")
_BOOL_FLAGS = ("--symmetric", "--strict", "--dual")


def _parse_args(argv):
    flags = {}
    positional = []
    k = 0
    while k < len(argv):
        token = argv[k]
        if token in _VALUE_FLAGS:
            if k + 1 >= len(argv):
                raise CliError("flag %s needs a value" % token)
            flags[token[2:]] = argv[k + 1]
            k += 2
        elif token in _BOOL_FLAGS:
            flags[token[2:]] = True
            k += 1
        elif token.startswith("--"):
            raise CliError("unknown flag %r" % token)
        else:
            positional.append(token)
            k += 1
    return positional, flags


def _load(files):
    ws = Workspace()
    for path in files:
        parse_file(path, ws)
    return ws


def _tensor_context(ws):
    name, item = ws.first("tensor")
    alg = ws.algebra(item["on"])
    return name, item, alg


def _weight(flags, default=0):
    if "weight" not in flags:
        return default
    try:
        return rat(flags["weight"])
    except ValueError as exc:
        raise CliError("bad --weight value: %s" % exc)


def run(command, target, files, flags, echo):
    """Dispatch one command; returns (exit_code, output_lines)."""
    ws = _load(files)
    handler = _HANDLERS.get((command, target))
    if handler is None:
        raise CliError("unknown command %r %r" % (command, target))
    report, extra, payload = handler(ws, flags)
    code = 0
    if report is not None and not report.ok:
        code = 1
    if "expect" in flags:
        expected = flags["expect"]
        if expected not in ("pass", "fail"):
            raise CliError("--expect takes 'pass' or 'fail'")
        actual = "pass" if code == 0 else "fail"
        mismatch = actual != expected
        extra = list(extra or [])
        extra.append("expect=%s" % expected)
        extra.append("discrepancy=%s" % _flag(mismatch))
        if mismatch and flags.get("strict"):
            code = 1
    lines = report_lines(echo, report, extra)
    if payload:
        lines = ["# " + text for text in lines] + payload
    return code, lines


def _cmd_check_algebra(ws, flags):
    level = flags.get("level", "coherent")
    if level not in STRUCTURE_LEVELS:
        raise CliError("unknown structure level %r" % level)
    _, alg = ws.first("algebra")
    return check_structure(alg, level), ["level=%s" % level], None


def _cmd_check_rep(ws, flags):
    level = flags.get("level", "full")
    if level not in REP_LEVELS:
        raise CliError("unknown representation level %r" % level)
    _, item = ws.first("rep")
    alg = ws.algebra(item["on"])
    return check_six_rep(alg, item["rep"], level), ["level=%s" % level], None


def _cmd_check_ybe(ws, flags):
    _, item, alg = _tensor_context(ws)
    rm = RMatrix(alg, item["grid"])
    ev = eval_ybe(alg, rm)
    chars = operator_characterization(alg, rm)
    report = CheckReport()
    from .exact import t3_is_zero

    for key in ("D", "S", "D1", "D2", "D3", "S1"):
        report.record("tensor-" + key, (0,),
                      "zero" if t3_is_zero(ev[key]) else "nonzero", "zero")
    extra = [
        "is_symmetric=%s" % _flag(ev["is_symmetric"]),
        "is_coherent=%s" % _flag(ev["is_coherent"]),
        "is_solution=%s" % _flag(ev["is_solution"]),
        "operator.poisson=%s" % _flag(chars["poisson_O"]),
        "operator.npp=%s" % _flag(chars["npp_O"]),
        "operator.weight-minus1=%s" % (
            "n/a" if chars["weight_minus1"] is None
            else _flag(chars["weight_minus1"])),
        "operator.consistency=%s" % _flag(chars["consistency"]),
    ]
    return report, extra, None


def _cmd_check_invariance(ws, flags):
    _, item, alg = _tensor_context(ws)
    return check_invariance(alg, item["grid"]), None, None


def _cmd_check_bialgebra(ws, flags):
    _, item = ws.first("comult")
    alg = ws.algebra(item["on"])
    return check_bialgebra(alg, item["ct"]), None, None


def _cmd_check_operator(ws, flags):
    _, item = ws.first("map")
    src, dst = item["from"], item["to"]
    if dst.endswith(".dual"):
        raise CliError("operator target must be an algebra, not a dual space")
    alg = ws.algebra(dst)
    if ws.reps:
        _, rep_item = ws.first("rep")
        if rep_item["on"] != dst:
            raise CliError("representation is not on the operator's target")
        rep = rep_item["rep"]
    elif src.endswith(".dual"):
        rep = dualize_rep(alg, regular_rep(alg))
    else:
        rep = regular_rep(alg)
    weight = _weight(flags)
    v_products = None
    if weight != 0 and not src.endswith(".dual"):
        v_products = ws.algebra(src)
    spec = OperatorSpec(alg, rep, item["mat"], weight=weight,
                        v_products=v_products)
    return check_relative_rb(spec), ["weight=%s" % scalar_str(weight)], None


def _cmd_check_form(ws, flags):
    level = flags.get("level", "quadratic-npp")
    if level not in FORM_LEVELS:
        raise CliError("unknown form level %r" % level)
    _, item = ws.first("form")
    alg = ws.algebra(item["on"])
    return check_form(alg, item["form"], level), ["level=%s" % level], None


def _parse_split(text, dim):
    parts = text.split("|")
    if len(parts) != 2:
        raise CliError("--split needs two '|'-separated index lists")
    split = []
    for part in parts:
        try:
            ids = [int(tok) - 1 for tok in part.split(",") if tok]
        except ValueError:
            raise CliError("bad --split value %r" % text)
        for i in ids:
            if not 0 <= i < dim:
                raise CliError("split index %d out of range" % (i + 1))
        split.append(ids)
    return split


def _cmd_check_manin(ws, flags):
    if "split" not in flags:
        raise CliError("check manin needs --split")
    _, item = ws.first("form")
    alg = ws.algebra(item["on"])
    split = _parse_split(flags["split"], alg.dim)
    return check_manin(alg, item["form"], split), ["split=%s" % flags["split"]], None


def _cmd_check_quadratic_rb(ws, flags):
    _, form_item = ws.first("form")
    _, map_item = ws.first("map")
    alg = ws.algebra(form_item["on"])
    weight = _weight(flags)
    spec = RBSpec(alg, map_item["mat"], weight, form_item["form"])
    return check_quadratic_rb(spec), ["weight=%s" % scalar_str(weight)], None


def _cmd_construct_cobound(ws, flags):
    name, item, alg = _tensor_context(ws)
    ct = cobound(alg, RMatrix(alg, item["grid"]))
    payload = emit_comult(name + "_cobound", item["on"], ct)
    return None, None, payload


def _cmd_construct_dual(ws, flags):
    name, item = ws.first("comult")
    dual = dual_algebra(item["ct"])
    return None, None, emit_algebra(name + "_dual", dual)


def _cmd_construct_double(ws, flags):
    name, item = ws.first("comult")
    alg = ws.algebra(item["on"])
    combined, rm = double(alg, item["ct"])
    payload = emit_algebra(name + "_double", combined)
    payload += emit_tensor(name + "_double_r", name + "_double", rm.r)
    return None, None, payload


def _cmd_construct_semidirect(ws, flags):
    name, item = ws.first("rep")
    alg = ws.algebra(item["on"])
    ext = semidirect(alg, item["rep"], use_dual=bool(flags.get("dual")))
    return None, None, emit_algebra(name + "_semidirect", ext)


def _cmd_construct_phase_space(ws, flags):
    name, alg = ws.first("algebra")
    pair, form = phase_space(alg)
    extra = []
    for op, cube in (("dot", pair.c_dot), ("bracket", pair.c_bracket)):
        for i in range(pair.dim):
            for j in range(pair.dim):
                for k in range(pair.dim):
                    if cube[i][j][k]:
                        extra.append("%s.%d.%d.%d=%s"
                                     % (op, i + 1, j + 1, k + 1,
                                        scalar_str(cube[i][j][k])))
    for i in range(form.dim):
        for j in range(i + 1, form.dim):
            if form.omega[i][j]:
                extra.append("form.%d.%d=%s"
                             % (i + 1, j + 1, scalar_str(form.omega[i][j])))
    report = check_form(pair, form, "symplectic-poisson")
    return report, extra, None


def _cmd_construct_lift(ws, flags):
    map_name, map_item = ws.first("map")
    if map_item["to"].endswith(".dual"):
        raise CliError("lift target must be an algebra, not a dual space")
    alg = ws.algebra(map_item["to"])
    if ws.reps:
        _, rep_item = ws.first("rep")
        if rep_item["on"] != map_item["to"]:
            raise CliError("representation is not on the operator's target")
        rep = rep_item["rep"]
    else:
        rep = regular_rep(alg)
    ext, rm, report = lift_operator(alg, rep, map_item["mat"])
    payload = emit_algebra(map_name + "_lift", ext)
    payload += emit_tensor(map_name + "_lift_r", map_name + "_lift", rm.r)
    return report, None, payload


def _cmd_convert_fact_to_rb(ws, flags):
    name, item, alg = _tensor_context(ws)
    weight = _weight(flags, default=1)
    try:
        spec = fact_to_rb(alg, RMatrix(alg, item["grid"]), weight)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = emit_map(name + "_P", item["on"], item["on"], spec.P)
    payload += emit_form(name + "_omega", item["on"], spec.form)
    extra = ["weight=%s" % scalar_str(weight)]
    return check_quadratic_rb(spec), extra, payload


def _cmd_convert_rb_to_fact(ws, flags):
    map_name, map_item = ws.first("map")
    _, form_item = ws.first("form")
    alg = ws.algebra(form_item["on"])
    weight = _weight(flags)
    spec = RBSpec(alg, map_item["mat"], weight, form_item["form"])
    try:
        rm = rb_to_fact(spec)
    except ValueError as exc:
        raise CliError(str(exc))
    cls = classify_r(alg, rm)
    extra = ["weight=%s" % scalar_str(weight),
             "classification=%s" % cls.verdict]
    if weight == 0:
        extra.append("note=weight-0 branch uses the opposite operator sign"
                     " from the nonzero-weight branch")
    payload = emit_tensor(map_name + "_r", form_item["on"], rm.r)
    return None, extra, payload


def _cmd_classify(ws, flags):
    _, item, alg = _tensor_context(ws)
    cls = classify_r(alg, item["grid"])
    return None, ["classification=%s" % cls.verdict], None


def _cmd_search_ybe(ws, flags):
    if "coeffs" not in flags:
        raise CliError("search ybe needs --coeffs")
    try:
        coeffs = [rat(tok) for tok in flags["coeffs"].split(",")]
    except ValueError as exc:
        raise CliError("bad --coeffs value: %s" % exc)
    jobs = None
    if "jobs" in flags:
        try:
            jobs = int(flags["jobs"])
        except ValueError:
            raise CliError("bad --jobs value %r" % flags["jobs"])
    _, alg = ws.first("algebra")
    symmetric = bool(flags.get("symmetric"))
    hits = search_ybe(alg, coeffs, symmetric_only=symmetric, jobs=jobs)
    n = alg.dim
    positions = n * (n + 1) // 2 if symmetric else n * n
    extra = [
        "coeffs=%s" % ",".join(scalar_str(c) for c in coeffs),
        "symmetric=%s" % _flag(symmetric),
        "candidates=%d" % len(coeffs) ** positions,
        "solutions=%d" % len(hits),
    ]
    for k, rm in enumerate(hits):
        parts = []
        for i in range(n):
            for j in range(n):
                if rm.r[i][j]:
                    parts.append("%d,%d,%s" % (i + 1, j + 1,
                                               scalar_str(rm.r[i][j])))
        extra.append("solution.%d=%s" % (k, ";".join(parts) if parts else "0"))
    return None, extra, None


def _cmd_factorize(ws, flags):
    if "element" not in flags:
        raise CliError("factorize needs --element")
    _, item, alg = _tensor_context(ws)
    try:
        x = [rat(tok) for tok in flags["element"].split(",")]
    except ValueError as exc:
        raise CliError("bad --element value: %s" % exc)
    if len(x) != alg.dim:
        raise CliError("element has %d coordinates, algebra has dimension %d"
                       % (len(x), alg.dim))
    try:
        x1, x2 = factorize(alg, item["grid"], x)
    except ValueError as exc:
        raise CliError(str(exc))
    extra = ["x1=%s" % fmt_value(x1), "x2=%s" % fmt_value(x2)]
    return None, extra, None


def _cmd_emit(ws, flags):
    return None, None, emit_workspace(ws)


_HANDLERS = {
    ("check", "algebra"): _cmd_check_algebra,
    ("check", "rep"): _cmd_check_rep,
    ("check", "ybe"): _cmd_check_ybe,
    ("check", "invariance"): _cmd_check_invariance,
    ("check", "bialgebra"): _cmd_check_bialgebra,
    ("check", "operator"): _cmd_check_operator,
    ("check", "form"): _cmd_check_form,
    ("check", "manin"): _cmd_check_manin,
    ("check", "quadratic-rb"): _cmd_check_quadratic_rb,
    ("construct", "cobound"): _cmd_construct_cobound,
    ("construct", "dual"): _cmd_construct_dual,
    ("construct", "double"): _cmd_construct_double,
    ("construct", "semidirect"): _cmd_construct_semidirect,
    ("construct", "phase-space"): _cmd_construct_phase_space,
    ("construct", "lift"): _cmd_construct_lift,
    ("convert", "fact-to-rb"): _cmd_convert_fact_to_rb,
    ("convert", "rb-to-fact"): _cmd_convert_rb_to_fact,
    ("classify", None): _cmd_classify,
    ("search", "ybe"): _cmd_search_ybe,
    ("factorize", None): _cmd_factorize,
    ("emit", None): _cmd_emit,
}

_ONE_WORD = ("classify", "factorize", "emit")


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    echo = " ".join(argv)
    try:
        positional, flags = _parse_args(argv)
        if not positional:
            raise CliError("usage: COMMAND [TARGET] FILES... [flags]")
        command = positional[0]
        if command in _ONE_WORD:
            target, files = None, positional[1:]
        else:
            if len(positional) < 2:
                raise CliError("command %r needs a target" % command)
            target, files = positional[1], positional[2:]
        code, lines = run(command, target, files, flags, echo)
    except CliError as exc:
        sys.stdout.write("command=%s\nerror=%s\n" % (echo, exc))
        return 2
    sys.stdout.write("\n".join(lines) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
