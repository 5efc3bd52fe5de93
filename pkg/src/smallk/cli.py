"""Command-line interface: ``smallk <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (for example type C) and
2 on a usage error.  ``--json`` emits canonical JSON (sorted keys, rationals
as "p/q" strings).  ``PXI_DIM_CAP`` overrides the dimension cap.
"""

from __future__ import annotations

import argparse
import cmath
import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import analysis, oracle, pxi, reps, small_k
from .errors import DomainError
from .exact import Gaussian, fmt, parse_rationals
from .rank_one import SHIFTED, UNSHIFTED, translate_factor
from .roots import FUND, LieType, Weight, build


@dataclass(frozen=True)
class Config:
    output_format: str = "text"
    dimension_cap: int = reps.DEFAULT_CAP
    rho_shift_mode: str = SHIFTED
    out: str | None = None

    def __post_init__(self):
        if self.dimension_cap <= 0:
            raise ValueError("dimension cap must be positive")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _lie_type(args) -> LieType:
    t = args.type.strip().upper()
    rank = args.rank
    if len(t) > 1:
        return LieType.parse(t, rank)
    if rank is None:
        raise UsageError(f"--rank is required for series {t}")
    return LieType.parse(t, rank)


def _rationals(text: str, what: str):
    try:
        return parse_rationals(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {what} {text!r} as comma-separated rationals") from None


def _nu(args, rs) -> analysis.NuParameter:
    re_ = _rationals(args.nu_re, "--nu-re") if args.nu_re else None
    im_ = _rationals(args.nu_im, "--nu-im") if args.nu_im else None
    dim = rs.rank if args.basis == "fund" else rs.ambient_dim
    re_ = re_ or (Fraction(0),) * dim
    im_ = im_ or (Fraction(0),) * dim
    if len(re_) != dim or len(im_) != dim:
        raise UsageError(f"nu needs {dim} coordinates in the {args.basis} basis")
    if args.basis == "fund":
        re_ = rs.from_fundamental(Weight(re_, FUND)).coords
        im_ = rs.from_fundamental(Weight(im_, FUND)).coords
    return analysis.NuParameter(Weight(re_), Weight(im_))


# -- subcommands ---------------------------------------------------------------


def cmd_roots(args, cfg):
    rs = build(_lie_type(args))
    d = rs.to_dict()
    if cfg.output_format == "json":
        return d
    lines = [f"type {d['type']}", "simple roots:"]
    lines += [f"  ({', '.join(v)})" for v in d["simple_roots"]]
    lines.append(f"positive roots ({len(d['positive_roots'])}):")
    lines += [f"  ({', '.join(r['coords'])})  {r['length']}  {r['simple']}" for r in d["positive_roots"]]
    lines.append(f"rho = ({', '.join(d['rho'])})")
    lines.append("cartan matrix:")
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in d["cartan_matrix"]]
    return "\n".join(lines)


def cmd_small_k(args, cfg):
    if args.cover:
        if args.n is None:
            raise UsageError("--cover needs --n")
        types = small_k.classify_cover(args.cover, args.n)
    else:
        if not args.type:
            raise UsageError("--type or --cover is required")
        types = small_k.classify(_lie_type(args))
    d = [t.to_dict() for t in types]
    if cfg.output_format == "json":
        return d
    out = []
    for t in d:
        extra = f" t_short={t['t_short']}" if t["t_short"] is not None else ""
        notes = f"  [{'; '.join(t['notes'])}]" if t["notes"] else ""
        out.append(f"{t['type']} {t['label']}: K={t['K']} dim={t['dim']} t_long={t['t_long']}{extra}{notes}")
    return "\n".join(out)


def cmd_branch(args, cfg):
    if args.group.lower() != "spin":
        raise UsageError("only --group spin is supported")
    irrep = reps.spin(args.n, _rationals(args.weight, "--weight"))
    js = reps.branch_to_spin3(irrep)
    d = {"group": f"Spin({args.n})", "weight": [fmt(c) for c in irrep.highest_weight.coords], "j": js, "m_xi": len(js)}
    if args.check:
        d["character_check"] = reps.branch_to_spin3_character(irrep, cfg.dimension_cap) == js
    return d if cfg.output_format == "json" else dumps(d)


def _pxi_dict(p, cfg):
    d = p.to_dict()
    d["mode"] = cfg.rho_shift_mode
    if cfg.rho_shift_mode == UNSHIFTED:
        rs = p.root_system
        for f, (i, c, _) in zip(d["factors"], p.factors):
            f["shift"] = fmt(translate_factor([c], rs.positive_roots[i], rs, UNSHIFTED)[0])
    d["degree"] = p.degree
    return d


def cmd_pxi(args, cfg):
    lt = _lie_type(args)
    if lt.series != "A":
        raise DomainError("the automatic p_xi pipeline covers type A only")
    n = lt.rank + 1
    p = pxi.pxi_type_a(n, _rationals(args.xi, "--xi"))
    d = _pxi_dict(p, cfg)
    if args.expand:
        d["expanded"] = repr(p.expand())
    if cfg.output_format == "json":
        return d
    rs = p.root_system
    parts = []
    for i, c, m in p.factors:
        shift = translate_factor([c], rs.positive_roots[i], rs, cfg.rho_shift_mode)[0]
        sign = "+" if shift >= 0 else "-"
        term = f"(<nu,a{list(rs.positive_roots[i].coeffs)}> {sign} {fmt(abs(shift))})"
        parts.append(term + (f"^{m}" if m > 1 else ""))
    text = f"p_xi = {fmt(p.scalar)}" + ("" if not parts else " * " + " * ".join(parts))
    text += f"\ndegree {p.degree}"
    if args.expand:
        text += f"\nexpanded: {d['expanded']}"
    return text


def _tau(args, lt):
    if not args.tau:
        types = small_k.classify(lt)
        if len(types) != 1:
            raise UsageError(f"--tau is required for {lt}: choose from {[t.label for t in types]}")
        return types[0]
    return small_k.find(lt, args.tau)


def cmd_cyclicity(args, cfg):
    lt = _lie_type(args)
    tau = _tau(args, lt)
    v = analysis.cyclicity(lt, tau, _nu(args, build(lt)))
    d = v.to_dict()
    if cfg.output_format == "json":
        return d
    if v.cyclic:
        return "cyclic"
    return "not cyclic: " + ", ".join(f"{r['root']} ({r['condition']})" for r in d["violated_roots"])


def cmd_irreducible(args, cfg):
    lt = _lie_type(args)
    tau = _tau(args, lt)
    ok, wit = analysis.unitary_irreducible(lt, tau, _nu(args, build(lt)))
    d = {"irreducible": ok, "witnesses": [list(r.coeffs) for r in wit]}
    if cfg.output_format == "json":
        return d
    return "irreducible" if ok else "reducible: " + ", ".join(str(w) for w in d["witnesses"])


def cmd_langlands(args, cfg):
    lt = _lie_type(args)
    tau = _tau(args, lt)
    d = analysis.langlands_parameters(lt, tau, _nu(args, build(lt))).to_dict()
    if cfg.output_format == "json":
        return d
    if d["tempered"]:
        head = "tempered"
    else:
        head = f"(P_F, sigma_F, mu) with F = {d['F']}, mu = ({', '.join(d['mu']['re'])})"
        if any(x != "0" for x in d["mu"]["im"]):
            head += f" + i({', '.join(d['mu']['im'])})"
    return "\n".join([head, "discrete series: no"] + d["notes"])


def _complex_list(text: str):
    try:
        return [complex(part.strip().replace("i", "j")) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse --nu {text!r} as comma-separated complex numbers") from None


def cmd_intertwine(args, cfg):
    lt = _lie_type(args)
    if lt.series != "A":
        raise DomainError("intertwining determinants are implemented for type A")
    n = lt.rank + 1
    xi = _rationals(args.xi, "--xi")
    g = analysis.intertwining_det(n, xi)
    d = {"exponent": fmt(g.exponent), "gamma_factors": len(g.factors)}
    if args.symbolic:
        rf = g.reduce()
        rs = g.root_system
        d["reduced"] = {
            "scalar": fmt(rf.scalar),
            "factors": [
                {"root": list(rs.positive_roots[i].coeffs), "shift": fmt(b), "power": k}
                for (i, b), k in sorted(rf.powers.items())
            ],
        }
        d["identity_holds"] = analysis.check_intertwining_identity(n, xi)
    if args.nu:
        nu = _complex_list(args.nu)
        lz = analysis.numeric_gamma_log(g, nu)
        d["log_value"] = {"re": repr(lz.real), "im": repr(lz.imag)}
        try:
            z = cmath.exp(lz)
            d["value"] = {"re": repr(z.real), "im": repr(z.imag)}
        except OverflowError:
            d["value"] = None
    return d if cfg.output_format == "json" else dumps(d)


def cmd_verify(args, cfg):
    if args.suite != "sl3":
        raise UsageError("only --suite sl3 is available")
    if args.p_max < 1 or args.p_max % 2 == 0:
        raise UsageError("--p-max must be odd and positive")
    reports = oracle.run_suite(args.p_max)
    assembly = all(oracle.rank_one_assembly(p) == pxi.q_factors(p) for p in range(1, args.p_max + 1, 2))
    d = {r.name: {"pass": r.ok, "failures": [getattr(e, "p", None) for e in r.failures()]} for r in reports}
    d["rank_one_assembly"] = {"pass": assembly, "failures": []}
    d["all_pass"] = all(v["pass"] for k, v in d.items() if k != "all_pass")
    if cfg.output_format == "json":
        return d
    lines = [f"{k}: {'PASS' if v['pass'] else 'FAIL'}" for k, v in d.items() if k != "all_pass"]
    lines.append("all pass" if d["all_pass"] else "FAILURES PRESENT")
    return "\n".join(lines)


def _grid(text: str) -> list[Fraction]:
    try:
        start, stop, step = (Fraction(x) for x in text.split(":"))
    except ValueError:
        raise UsageError("--grid must be start:stop:step with rationals") from None
    if step <= 0 or stop < start:
        raise UsageError("--grid needs step > 0 and stop >= start")
    out = []
    x = start
    while x <= stop:
        out.append(x)
        x += step
    return out


def _sweep_point(lt, tau, rs, coeffs, imaginary: bool, p):
    w = rs.from_fundamental(Weight(coeffs, FUND))
    zero = Weight((Fraction(0),) * rs.ambient_dim)
    nu = analysis.NuParameter(zero, w) if imaginary else analysis.NuParameter(w, zero)
    v = analysis.cyclicity(lt, tau, nu)
    rec = {
        "nu_fund": [fmt(c) for c in coeffs],
        "cyclic": v.cyclic,
        "loci": [{"root": list(r.coeffs), "condition": c} for r, c in v.violated_roots],
    }
    if imaginary:
        rec["irreducible"] = analysis.unitary_irreducible(lt, tau, nu)[0]
    if p is not None:
        nu_c = [Gaussian(0, c) if imaginary else Gaussian(c) for c in w.coords]
        rec["pxi_zeros"] = [
            {"root": list(rs.positive_roots[i].coeffs), "shift": fmt(c)} for i, c in p.vanishing_factors(nu_c)
        ]
    return rec


def cmd_sweep(args, cfg):
    lt = _lie_type(args)
    tau = _tau(args, lt)
    rs = build(lt)
    axis = _grid(args.grid)
    p = None
    if args.xi:
        if lt.series != "A":
            raise DomainError("--xi is only available for type A")
        p = pxi.pxi_type_a(lt.rank + 1, _rationals(args.xi, "--xi"))
    points = list(itertools.product(axis, repeat=rs.rank))
    with ThreadPoolExecutor(max_workers=args.workers) as ex:
        results = list(ex.map(lambda c: _sweep_point(lt, tau, rs, c, args.imaginary, p), points))
    d = {"type": str(lt), "tau": tau.label, "imaginary": args.imaginary, "points": results}
    if cfg.output_format == "json":
        return d
    lines = []
    for r in results:
        status = "cyclic" if r["cyclic"] else "NOT cyclic " + str([x["root"] for x in r["loci"]])
        lines.append(f"({', '.join(r['nu_fund'])}): {status}")
    return "\n".join(lines)


# -- parser ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--out", help="also write the output to this file")
    common.add_argument("--cap", type=int, default=None, help="dimension cap (default: PXI_DIM_CAP or 100000)")
    common.add_argument("--mode", choices=[SHIFTED, UNSHIFTED], default=SHIFTED, help="rho-shift convention")

    p = _Parser(prog="smallk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def typed(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--type", required=True, help="series letter or full name such as E8")
        sp.add_argument("--rank", type=int)
        return sp

    typed("roots", "root system data")
    sk = sub.add_parser("small-k", parents=[common], help="classify genuine small K types")
    sk.add_argument("--type")
    sk.add_argument("--rank", type=int)
    sk.add_argument("--cover", choices=list(small_k.COVERS))
    sk.add_argument("--n", type=int)

    br = sub.add_parser("branch", parents=[common], help="branch a Spin(n) irrep to Spin(3)")
    br.add_argument("--group", default="spin")
    br.add_argument("--n", type=int, required=True)
    br.add_argument("--weight", required=True, help="comma-separated rationals, e.g. 3/2,1/2")
    br.add_argument("--check", action="store_true", help="cross-check against the character")

    px = typed("pxi", "factored p_xi for type A")
    px.add_argument("--xi", required=True)
    px.add_argument("--expand", action="store_true")

    nu_help = "Re nu = 0 means every coordinate is exactly zero"
    for name, help_ in (
        ("cyclicity", "cyclicity in the closed Langlands chamber"),
        ("irreducible", "irreducibility of the unitary principal series"),
        ("langlands", "Langlands parameters"),
    ):
        sp = typed(name, help_)
        sp.add_argument("--tau", help="small K type label, e.g. s.p1 or C2p2")
        sp.add_argument("--nu-re", default="", help="real part of nu")
        sp.add_argument("--nu-im", default="", help="imaginary part of nu; " + nu_help)
        sp.add_argument("--basis", choices=["eps", "fund"], default="eps")

    it = typed("intertwine", "intertwining determinant as Gamma ratios (type A)")
    it.add_argument("--xi", required=True)
    it.add_argument("--nu", help="comma-separated complex coordinates, e.g. 0.5+1j,0,-0.5-1j")
    it.add_argument("--symbolic", action="store_true")

    ve = sub.add_parser("verify", parents=[common], help="rank-one oracle suite")
    ve.add_argument("--suite", default="sl3")
    ve.add_argument("--p-max", type=int, default=21)

    sw = typed("sweep", "cyclicity over a grid of nu in fundamental coordinates")
    sw.add_argument("--tau")
    sw.add_argument("--grid", required=True, help="start:stop:step, applied to each coordinate")
    sw.add_argument("--imaginary", action="store_true", help="sweep i*nu (unitary axis)")
    sw.add_argument("--xi", help="type A: also report vanishing factors of p_xi")
    sw.add_argument("--workers", type=int, default=4)
    return p


COMMANDS = {
    "roots": cmd_roots,
    "small-k": cmd_small_k,
    "branch": cmd_branch,
    "pxi": cmd_pxi,
    "cyclicity": cmd_cyclicity,
    "irreducible": cmd_irreducible,
    "langlands": cmd_langlands,
    "intertwine": cmd_intertwine,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def dispatch(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cap = args.cap if args.cap is not None else reps.default_cap()
        cfg = Config("json" if args.json else "text", cap, args.mode, args.out)
        result = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        print(f"smallk {args.command}: error: {e}", file=stderr)
        return 2
    except DomainError as e:
        print(f"smallk {args.command}: {e}", file=stderr)
        return 1
    text = result if isinstance(result, str) else dumps(result)
    print(text, file=stdout)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0


def main(argv=None) -> int:
    return dispatch(argv)
