"""Command-line front end.

Exit codes: 0 for success, Equal or true; 1 for NotEqual, false or not
legitimate; 2 for OutsideFragment; 3 for bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import decide as dc
from . import formulae as fm
from . import legitimacy as lg
from . import semantics as se
from . import strict as st
from . import terms as tm

OK, NO, OUTSIDE, BAD_INPUT = 0, 1, 2, 3
DEFAULT_SEED = 20240611
DEFAULT_TRIALS = 100


class UsageError(Exception):
    pass


class _Finished(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        raise _Finished(self.format_help())

    def exit(self, status=0, message=None):
        if status == 0:
            raise _Finished(message or "")
        raise UsageError(message or "")


def _formula(text):
    return fm.parse_formula(text)


def _sequence(text):
    return st.strictify(fm.parse_formula(text))


def _arrow(text):
    return tm.parse_arrow(text)


def _one(values, flag):
    if not values:
        raise UsageError(f"{flag} is required")
    if len(values) != 1:
        raise UsageError(f"{flag} given {len(values)} times, expected once")
    return values[0]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intermute", description="Free categories with intermutation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, *flags):
        c = sub.add_parser(name, help=help_)
        c.add_argument("--json", action="store_true", help="structured output")
        for f in flags:
            if f == "f":
                c.add_argument("-f", dest="formula", help="a formula")
            elif f == "a":
                c.add_argument("-a", dest="arrow", action="append", default=[], help="an arrow term")
            elif f == "xy":
                c.add_argument("-x", dest="x", required=True, help="source")
                c.add_argument("-y", dest="y", required=True, help="target")
            elif f == "theory":
                c.add_argument("--theory", required=True, choices=sorted(tm.THEORIES))
            elif f == "typing":
                c.add_argument("--typing", default=tm.SYNTACTIC,
                               choices=(tm.SYNTACTIC, tm.ASSOC, tm.SYM),
                               help="how objects are compared when composing")
        return c

    cmd("parse", "parse and print a formula or an arrow term", "f", "a")
    cmd("nf", "normal form of a formula", "f")
    g = cmd("grid", "rectangular grid of a formula", "f")
    g.add_argument("--style", choices=("ascii", "svg"), default="ascii")
    cmd("tblr", "top, bottom, left and right sequences", "f")
    cmd("legit", "legitimacy of a pair of form sequences", "xy")
    cmd("synth", "an arrow for a legitimate pair", "xy")
    cmd("exists", "existence of an arrow in a theory", "xy", "theory")
    cmd("equal", "equality of two arrow terms in a theory", "a", "theory")
    e = cmd("eval", "relation or matrix of an arrow term", "a", "typing")
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--rel", dest="model", action="store_const", const="rel")
    mode.add_argument("--mat", dest="model", action="store_const", const="mat")
    cmd("develop", "developed factors of an arrow term, one per line", "a", "typing")
    ax = cmd("axioms", "check equation schemas on random instances", "theory")
    ax.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    ax.add_argument("--seed", type=int, default=DEFAULT_SEED)
    cmd("reduce-lattice", "remove lattice generators from a bijective term", "a")
    r = cmd("restrict", "restriction of a strict symmetric term", "a")
    r.add_argument("-P", dest="letters", required=True, help="comma separated letters")
    return p


# ----------------------------------------------------------------- commands

def _parse(args):
    if bool(args.formula) == bool(args.arrow):
        raise UsageError("parse needs exactly one of -f and -a")
    if args.formula:
        a = _formula(args.formula)
        return OK, {"formula": fm.to_str(a)} if args.json else fm.to_str(a)
    t = _arrow(_one(args.arrow, "-a"))
    return OK, {"arrow": tm.to_str(t)} if args.json else tm.to_str(t)


def _need_formula(args):
    if not args.formula:
        raise UsageError("-f is required")
    return _formula(args.formula)


def _nf(args):
    out = fm.to_str(fm.normal_form(_need_formula(args)))
    return OK, {"normal_form": out} if args.json else out


def _grid(args):
    g = st.grid(st.strictify(_need_formula(args)))
    if args.json:
        return OK, g.to_json()
    return OK, st.render_grid(g, args.style)


def _tblr(args):
    names = ("T", "B", "L", "R")
    seqs = st.tblr(st.strictify(_need_formula(args)))
    if args.json:
        return OK, {n: list(s) for n, s in zip(names, seqs)}
    return OK, "\n".join(f"{n}: {' '.join(s)}" for n, s in zip(names, seqs))


def _witness_json(w):
    return {"merge": {str(k): str(v) for k, v in w.merge.items()},
            "split": {str(k): str(v) for k, v in w.split.items()}}


def _legit(args):
    x, y = _sequence(args.x), _sequence(args.y)
    w, reason = lg.legitimacy_report(x, y)
    if args.json:
        return (OK if w else NO), {"legitimate": w is not None, "reason": reason,
                                   "witness": _witness_json(w) if w else None}
    if w is None:
        return NO, f"not legitimate: {reason}"
    lines = ["legitimate"]
    lines += [f"merge {k} -> {v}" for k, v in w.merge.items()]
    lines += [f"split {k} -> {v}" for k, v in w.split.items()]
    return OK, "\n".join(lines)


def _synth(args):
    x, y = _sequence(args.x), _sequence(args.y)
    try:
        t = lg.synthesize(x, y)
    except lg.NotLegitimate as e:
        return NO, {"error": str(e)} if args.json else f"not legitimate: {e}"
    return OK, {"arrow": tm.to_str(t)} if args.json else tm.to_str(t)


def _exists(args):
    ans = dc.decide_exists(_formula(args.x), _formula(args.y), args.theory)
    code = OUTSIDE if ans.value is None else (OK if ans.value else NO)
    if args.json:
        return code, ans.to_json()
    word = {None: "OutsideFragment", True: "true", False: "false"}[ans.value]
    return code, f"{word}: {ans.reason}"


def _equal(args):
    if len(args.arrow) != 2:
        raise UsageError("equal needs -a twice")
    f, g = (_arrow(a) for a in args.arrow)
    v = dc.decide_equal(f, g, args.theory)
    code = {dc.EQUAL: OK, dc.NOT_EQUAL: NO, dc.OUTSIDE: OUTSIDE}[v.tag]
    if args.json:
        return code, v.to_json()
    return code, f"{v.tag}: {v.reason}"


def _eval(args):
    t = _arrow(_one(args.arrow, "-a"))
    if args.model == "mat":
        m = se.eval_mat(t, args.typing)
        return OK, m.to_json() if args.json else str(m)
    r = se.eval_rel(t, args.typing)
    return OK, r.to_json() if args.json else str(r)


def _develop(args):
    t = _arrow(_one(args.arrow, "-a"))
    dev = tm.develop(t, args.typing)
    factors = [tm.to_str(f) for f in dev.factors]
    if args.json:
        return OK, {"source": fm.to_str(dev.source), "target": fm.to_str(dev.target),
                    "factors": factors}
    if not factors:
        return OK, f"id{{{fm.to_str(dev.source)}}}"
    return OK, "\n".join(factors)


def _axioms(args):
    from .equations import random_instance, schemas_for
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    rng = random.Random(args.seed)
    results = []
    for schema in schemas_for(args.theory):
        failure = None
        for _ in range(args.trials):
            env, (lhs, rhs) = random_instance(schema, rng)
            if not se.same_image(lhs, rhs):
                failure = {k: fm.to_str(v) for k, v in env.items()}
                break
        results.append((schema.name, failure))
    code = OK if all(f is None for _, f in results) else NO
    if args.json:
        return code, {"seed": args.seed, "trials": args.trials,
                      "schemas": [{"name": n, "pass": f is None, "counterexample": f}
                                  for n, f in results]}
    lines = []
    for name, failure in results:
        if failure is None:
            lines.append(f"pass {name}")
        else:
            at = ", ".join(f"{k}={v}" for k, v in failure.items())
            lines.append(f"FAIL {name} at {at}")
    lines.append(f"{sum(f is None for _, f in results)}/{len(results)} schemas pass "
                 f"({args.trials} trials, seed {args.seed})")
    return code, "\n".join(lines)


def _reduce(args):
    t = _arrow(_one(args.arrow, "-a"))
    out = se.lattice_reduce(t)
    if out is None:
        msg = "the term does not denote a bijection"
        return NO, {"reduced": None, "reason": msg} if args.json else msg
    return OK, {"reduced": tm.to_str(out)} if args.json else tm.to_str(out)


def _restrict(args):
    t = _arrow(_one(args.arrow, "-a"))
    letters = frozenset(p.strip() for p in args.letters.split(",") if p.strip())
    out = tm.restrict_arrow(t, letters)
    return OK, {"restricted": tm.to_str(out)} if args.json else tm.to_str(out)


COMMANDS = {
    "parse": _parse, "nf": _nf, "grid": _grid, "tblr": _tblr, "legit": _legit,
    "synth": _synth, "exists": _exists, "equal": _equal, "eval": _eval,
    "develop": _develop, "axioms": _axioms, "reduce-lattice": _reduce,
    "restrict": _restrict,
}


def run(argv) -> tuple:
    """Run one command.  Returns (exit code, output text)."""
    try:
        args = build_parser().parse_args(list(argv))
        code, out = COMMANDS[args.command](args)
    except _Finished as e:
        return OK, str(e).strip()
    except UsageError as e:
        return BAD_INPUT, str(e).strip()
    except (ValueError, KeyError) as e:
        # parse errors, ill-typed terms, theory violations, preconditions
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        return BAD_INPUT, f"error: {msg}"
    if not isinstance(out, str):
        out = json.dumps(out, indent=2, ensure_ascii=False)
    return code, out


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        stream = sys.stderr if code == BAD_INPUT else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
