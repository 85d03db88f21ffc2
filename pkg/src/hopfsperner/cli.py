"""Command-line front end.

Every verb prints one JSON document on stdout (sorted keys) and exits with
0 on success, 1 when a checked property fails, 2 on invalid input.  A short
human summary goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bounds import check_mu_bound, mu_bounds
from .constructions import (
    connected_sum,
    load_reference,
    mirror,
    random_labeled_disc,
    subdivide_labeled,
)
from .degree import check_index_bound, sphere_map_degree
from .errors import HopfSpernerError
from .homology import homology_all
from .hopf import hopf_consistency, hopf_invariant
from .io import digest, dumps, load_triangulation, triangulation_to_dict
from .labeling import LabeledTriangulation, boundary_labeling
from .preimage import preimage_summary

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _alphabet(args) -> tuple[str, ...] | None:
    if getattr(args, "labels", None):
        return tuple(x.strip() for x in args.labels.split(",") if x.strip())
    return None


def _load(args, path=None) -> LabeledTriangulation:
    return load_triangulation(path or args.file, _alphabet(args))


def _source(spec: str, args) -> LabeledTriangulation:
    """An asset name (h1, h2, hd3, optionally prefixed 'mirror:') or a file."""
    flip = spec.startswith("mirror:")
    name = spec.split(":", 1)[1] if flip else spec
    if Path(name).exists():
        lt = load_triangulation(name, _alphabet(args))
    else:
        lt = load_reference(name).triangulation
    return mirror(lt) if flip else lt


# ---------------------------------------------------------------------------
# verbs


def cmd_validate(args):
    lt = _load(args)
    c = lt.complex
    out = {
        "name": lt.name,
        "dimension": c.dimension,
        "pure": c.is_pure,
        "pseudomanifold": c.is_pseudomanifold,
        "closed": c.is_closed,
        "strongly_connected": c.is_strongly_connected,
        "oriented": c.oriented and c.is_coherent(),
        "alphabet": list(lt.alphabet),
    }
    ok = out["pure"] and out["pseudomanifold"] and out["strongly_connected"]
    return out, EXIT_OK if ok else EXIT_VIOLATION


def cmd_info(args):
    lt = _load(args)
    c = lt.complex
    return {
        "name": lt.name,
        "dimension": c.dimension,
        "vertex_count": c.vertex_count,
        "f_vector": list(c.f_vector),
        "euler_characteristic": c.euler_characteristic(),
        "homology": [str(g) for g in homology_all(c)],
        "alphabet": list(lt.alphabet),
        "label_counts": {a: sum(1 for v in c.vertices if lt.labels[v] == a) for a in lt.alphabet},
    }, EXIT_OK


def cmd_degree(args):
    lt = _load(args)
    rep = sphere_map_degree(lt if lt.complex.is_closed else boundary_labeling(lt))
    return rep.to_dict(), EXIT_OK if rep.consistent else EXIT_VIOLATION


def cmd_hopf(args):
    lt = _load(args)
    if args.diagnostics:
        diag = hopf_consistency(lt)
        out = hopf_invariant(lt).to_dict()
        out["diagnostics"] = diag
        ok = all(diag["flags"].values()) and diag["H_oracle"] == out["H"]
        return out, EXIT_OK if ok else EXIT_VIOLATION
    return hopf_invariant(lt).to_dict(), EXIT_OK


def cmd_preimage(args):
    lt = _load(args)
    return preimage_summary(lt, args.facet), EXIT_OK


def cmd_mu(args):
    return mu_bounds(args.d).to_dict(), EXIT_OK


def cmd_mu_bound(args):
    rep = check_mu_bound(_load(args), strict=False)
    return rep.to_dict(), EXIT_OK if rep.passes else EXIT_VIOLATION


def cmd_index_bound(args):
    rep = check_index_bound(_load(args))
    ok = rep.passes and rep.details["signed_count_equals_degree"]
    return rep.to_dict(), EXIT_OK if ok else EXIT_VIOLATION


def cmd_generate(args):
    kind = args.kind
    if kind in ("h1", "h2"):
        lt = load_reference(kind).triangulation
    elif kind == "hd":
        if args.d is None:
            raise UsageError("generate hd needs --d")
        lt = load_reference("hd", args.d).triangulation
    elif kind == "consum":
        if not (args.left and args.right):
            raise UsageError("generate consum needs --left and --right")
        lt = connected_sum(_source(args.left, args), _source(args.right, args))
    elif kind == "randdisc":
        if not args.boundary:
            raise UsageError("generate randdisc needs --boundary")
        lt = random_labeled_disc(1, args.boundary, seed=args.seed, steps=args.steps)
    else:
        raise UsageError(f"unknown generator {kind!r}")
    out = triangulation_to_dict(lt)
    if kind == "randdisc":
        out["seed"] = args.seed
        out["steps"] = args.steps
    return out, EXIT_OK


def cmd_subdivide(args):
    lt = _load(args)
    return triangulation_to_dict(subdivide_labeled(lt, args.rounds)), EXIT_OK


def cmd_acceptance(args):
    from .acceptance import SEED, run_all

    numbers = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_all(numbers)
    for r in results:
        print(r.line(), file=sys.stderr)
    out = {
        "criteria": [r.to_dict() for r in results],
        "passed": sum(r.passed for r in results),
        "total": len(results),
        "manifest": {"command": ["acceptance"] + (["--only", args.only] if args.only else []), "seeds": [SEED], "version": __version__},
    }
    return out, EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfsperner", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this path instead of stdout")
    common.add_argument("--manifest", help="also write a run manifest (inputs, seeds, output digests)")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_file(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("file")
        sp.add_argument("--labels", help="declared alphabet, e.g. A,B,C,D")
        sp.set_defaults(fn=fn)
        return sp

    with_file("validate", cmd_validate, "check manifold and orientation structure")
    with_file("info", cmd_info, "face counts, Euler characteristic and homology")
    with_file("degree", cmd_degree, "degree of the boundary labeling")
    sp = with_file("hopf", cmd_hopf, "Hopf invariant of a labeled 3-sphere")
    sp.add_argument("--diagnostics", action="store_true")
    sp = with_file("preimage", cmd_preimage, "preimage of a facet: mu, components, words")
    sp.add_argument("--facet", required=True)
    with_file("theorem1", cmd_mu_bound, "fully labeled tetrahedra of a labeled 4-disc")
    with_file("theoremA", cmd_index_bound, "fully labeled top simplices versus boundary degree")
    sp = with_file("subdivide", cmd_subdivide, "label-inheriting barycentric subdivision")
    sp.add_argument("--rounds", type=int, default=1)

    sp = sub.add_parser("mu", help="bounds on mu(d)", parents=[common])
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(fn=cmd_mu)

    sp = sub.add_parser("generate", help="reference, connected-sum or random triangulations", parents=[common])
    sp.add_argument("kind", choices=["h1", "h2", "hd", "consum", "randdisc"])
    sp.add_argument("--d", type=int)
    sp.add_argument("--left")
    sp.add_argument("--right")
    sp.add_argument("--boundary")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--steps", type=int, default=0)
    sp.add_argument("--labels")
    sp.set_defaults(fn=cmd_generate)

    sp = sub.add_parser("acceptance", help="run the acceptance criteria", parents=[common])
    sp.add_argument("--only", help="comma-separated criterion numbers")
    sp.set_defaults(fn=cmd_acceptance)
    return p


def _inputs(args) -> dict[str, str]:
    out = {}
    for key in ("file", "left", "right"):
        val = getattr(args, key, None)
        if val and Path(val.split(":", 1)[-1]).exists():
            path = val.split(":", 1)[-1]
            out[path] = digest(path)
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = args.fn(args)
    except UsageError as exc:
        print(dumps({"error": str(exc), "kind": "usage"}), end="")
        return EXIT_INVALID
    except HopfSpernerError as exc:
        print(dumps({"error": str(exc), "kind": type(exc).__name__}), end="")
        return EXIT_INVALID
    text = dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    if args.manifest:
        manifest = {
            "command": argv,
            "seeds": [getattr(args, "seed")] if getattr(args, "seed", None) is not None else [],
            "inputs": _inputs(args),
            "version": __version__,
            "outputs": {args.out or "<stdout>": _sha(text)},
        }
        Path(args.manifest).write_text(dumps(manifest))
    print(f"{args.verb}: exit {code}", file=sys.stderr)
    return code


def _sha(text: str) -> str:
    import hashlib

    return hashlib.sha256(text.encode()).hexdigest()


if __name__ == "__main__":
    sys.exit(main())
