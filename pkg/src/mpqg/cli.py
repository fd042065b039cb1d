"""Batch verification harness and report emitter.

Subcommands
    verify g2         curated triple-bond suite, bar transfers, dual basis
    verify serre      graded dimensions against the partition count
    verify pairing    PBW orthogonality and Gram nondegeneracy
    verify lusztig    word independence, inverses, omega equivariance
    verify aform      divided-power integrality, brackets, triangular form
    dump relations    straightening table as text

Reports are deterministic (two runs differ only in the wall-time line);
--out writes the text report plus a versioned JSON companion at
<out>.json.  Exit codes: 0 all checks pass, 1 some check failed,
2 usage or resource errors.  The environment variable MPQG_MEMORY_MB
imposes an address-space ceiling; exceeding it is a clean refusal.
"""

import argparse
import json
import os
import sys
import time

SCHEMA_VERSION = 1

TYPES = ("A1", "A2", "B2", "G2")


def _algebra(name):
    from .lattice import build_bicharacter, parse_cartan_type
    from .ualg import Algebra

    datum = parse_cartan_type(name)
    ring, chi = build_bicharacter(datum)
    return Algebra.get(chi)


def _weights(rank, maxht):
    out = []

    def rec(i, rest, acc):
        if i == rank:
            if any(acc):
                out.append(tuple(acc))
            return
        for v in range(rest + 1):
            rec(i + 1, rest - v, acc + [v])

    rec(0, maxht, [])
    out.sort(key=lambda m: (sum(m), m))
    return out


def _longest_word(datum):
    from .weyl import RootSystem

    return RootSystem(datum).lex_min_reduced_word()


# ---------------------------------------------------------------------------
# suites: each yields (check id, thunk) in a fixed order

def _suite_g2(args):
    alg = _algebra("G2")
    from . import g2suite
    from .lusztig import g2_bar_vector_check
    from .pairing import g2_dual_basis_check

    checks = []
    for section in g2suite.SECTIONS:
        rows = g2suite.rows(alg, (section,))[section]
        for idx, (display, lhs, rhs) in enumerate(rows, 1):
            checks.append(
                (
                    f"g2/table/{section}/{idx:02d}",
                    (lambda l, r: lambda: l == r)(lhs, rhs),
                    display,
                )
            )
    checks.append(
        ("g2/bar-transfer", lambda: g2_bar_vector_check(alg), "Keyeq closed forms")
    )
    checks.append(
        (
            "g2/dual-basis",
            lambda: g2_dual_basis_check(alg, 2),
            "pairing of Q1 against transferred Q2",
        )
    )
    return checks


def _suite_serre(args):
    alg = _algebra(args.type)
    from .weyl import kostant_dim

    height = args.height if args.height is not None else 6
    checks = []
    for mu in _weights(alg.datum.rank, height):
        checks.append(
            (
                "serre/dim/" + "-".join(map(str, mu)),
                (
                    lambda m: lambda: alg.dim_plus(m)
                    == kostant_dim(alg.datum, m)
                )(mu),
                f"normal words at {mu} vs partition count",
            )
        )
    return checks


def _suite_pairing(args):
    alg = _algebra(args.type)
    from .pairing import gram_nondegeneracy, pbw_orthogonality_check

    bound = args.bound if args.bound is not None else (2 if args.type == "G2" else 3)
    word = _longest_word(alg.datum)
    checks = [
        (
            f"pairing/orthogonality/bound-{bound}",
            lambda: pbw_orthogonality_check(alg, word, bound),
            "PBW monomials pair diagonally with q-factorial values",
        )
    ]
    for mu in _weights(alg.datum.rank, 4):
        checks.append(
            (
                "pairing/gram/" + "-".join(map(str, mu)),
                (lambda m: lambda: gram_nondegeneracy(alg, m))(mu),
                f"Gram determinant at {mu} nonzero",
            )
        )
    return checks


def _suite_lusztig(args):
    alg = _algebra(args.type)
    from .lusztig import (
        inverse_identity_check,
        omega_equivariance_check,
        word_independence_check,
    )
    from .weyl import RootSystem

    w1, w2 = RootSystem(alg.datum).longest_words_pair()
    checks = [
        (
            "lusztig/word-independence",
            lambda: word_independence_check(alg, w1, w2),
            f"composites along {w1} and {w2} agree",
        )
    ]
    for i in range(alg.datum.rank):
        checks.append(
            (
                f"lusztig/inverse/{i}",
                (lambda j: lambda: inverse_identity_check(alg, j))(i),
                "gamma-conjugate of the opposite map inverts T_i",
            )
        )
    for i in range(alg.datum.rank):
        checks.append(
            (
                f"lusztig/omega-equivariance/{i}",
                (lambda j: lambda: omega_equivariance_check(alg, j))(i),
                "omega intertwines T_i",
            )
        )
    return checks


def _suite_aform(args):
    alg = _algebra(args.type)
    from .aform import (
        a_integral_straightening_check,
        bracket_difference_check,
        bracket_product_check,
        triangular_a_check,
        u0a_basis_check,
    )

    bound = args.bound if args.bound is not None else 2
    word = _longest_word(alg.datum)
    words = [word]
    rev = tuple(reversed(word))
    if rev != word:
        words.append(rev)
    checks = []
    for w in words:
        for side in ("plus", "minus"):
            checks.append(
                (
                    f"aform/straighten/{'-'.join(map(str, w))}/{side}",
                    (
                        lambda ww, ss: lambda: a_integral_straightening_check(
                            alg, ww, ss, min(bound, 2)
                        )
                    )(w, side),
                    "divided-power products re-expand over the unit lattice",
                )
            )
    for i in range(alg.datum.rank):
        checks.append(
            (
                f"aform/bracket-difference/{i}",
                (
                    lambda j: lambda: all(
                        bracket_difference_check(alg, j, l, p)
                        for l in range(-2, 3)
                        for p in range(1, 5)
                    )
                )(i),
                "[l; p] - [l+1; p] recursion",
            )
        )
        checks.append(
            (
                f"aform/bracket-product/{i}",
                (
                    lambda j: lambda: all(
                        bracket_product_check(alg, j, l, p)
                        for l in range(5)
                        for p in range(5)
                    )
                )(i),
                "[0; l][-l; p] against the q-binomial",
            )
        )
    u0b = 1 if alg.datum.rank > 1 else min(bound, 2)
    checks.append(
        (
            f"aform/u0-basis/bound-{u0b}",
            lambda: u0a_basis_check(alg, u0b),
            "torus basis independence and product integrality",
        )
    )
    tb = min(bound, 3)
    checks.append(
        (
            f"aform/triangular/bound-{tb}",
            lambda: triangular_a_check(alg, tb),
            "F.torus.E triple independence and integral re-expansion",
        )
    )
    return checks


_SUITES = {
    "g2": _suite_g2,
    "serre": _suite_serre,
    "pairing": _suite_pairing,
    "lusztig": _suite_lusztig,
    "aform": _suite_aform,
}


# ---------------------------------------------------------------------------
# relation dumps

def _generic_relation_lines(alg, word):
    from .aform import pbw_context

    ctx = pbw_context(alg, word)
    lines = [
        "== straightening table for the longest word "
        + "".join(str(i + 1) for i in word)
        + " ==",
        "(letters E_t are the word's root vectors, ascending order)",
    ]

    def mono(exps):
        return "".join(
            f"E_{t + 1}" + (f"^{x}" if x > 1 else "")
            for t, x in enumerate(exps)
            if x
        )

    for s in range(ctx.k):
        for t in range(s):
            swap, middle = ctx.rule(s, t)
            rhs = f"({swap}) E_{t + 1}E_{s + 1}"
            for mexps in sorted(middle):
                rhs += f" + ({middle[mexps]}) {mono(mexps)}"
            lines.append(f"E_{s + 1}E_{t + 1} = {rhs}")
    return lines


def _dump_relations(args):
    if args.type == "G2":
        from . import g2suite

        return g2suite.relation_lines()
    alg = _algebra(args.type)
    return _generic_relation_lines(alg, _longest_word(alg.datum))


# ---------------------------------------------------------------------------
# report plumbing

def _run_checks(checks, jobs):
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(thunk) for _, thunk, _ in checks]
            results = [f.result() for f in futures]
    else:
        results = [thunk() for _, thunk, _ in checks]
    records = []
    for (cid, _, witness), ok in zip(checks, results):
        records.append(
            {
                "id": cid,
                "status": "pass" if ok else "fail",
                "witness": None if ok else witness,
            }
        )
    return records


def _emit(report, out):
    lines = [
        f"mpqg verification report (schema {SCHEMA_VERSION})",
        f"suite: {report['suite']}",
        f"type: {report['type']}",
        "params: "
        + " ".join(f"{k}={v}" for k, v in sorted(report["params"].items())),
    ]
    npass = 0
    for rec in report["checks"]:
        line = f"check: {rec['id']} | {rec['status']}"
        if rec["witness"] is not None:
            line += f" | {rec['witness']}"
        lines.append(line)
        npass += rec["status"] == "pass"
    total = len(report["checks"])
    lines.append(f"result: {report['result']} ({npass}/{total})")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    sys.stdout.write(f"wall-time: {report['wall_time_s']:.1f}s\n")
    if out:
        with open(out, "w") as fh:
            fh.write(text)
            fh.write(f"wall-time: {report['wall_time_s']:.1f}s\n")
        with open(out + ".json", "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _apply_memory_ceiling():
    mb = os.environ.get("MPQG_MEMORY_MB")
    if not mb:
        return
    try:
        limit = int(mb) << 20
    except ValueError:
        raise SystemExit(2)
    try:
        import resource

        soft, hard = resource.getrlimit(resource.RLIMIT_AS)
        resource.setrlimit(resource.RLIMIT_AS, (limit, hard))
    except (ImportError, ValueError):
        pass


def _parser():
    p = argparse.ArgumentParser(
        prog="mpqg", description="exact verification suites"
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(_SUITES))
    v.add_argument("--type", choices=TYPES, default="G2")
    v.add_argument("--height", type=int, default=None)
    v.add_argument("--bound", type=int, default=None)
    v.add_argument("--out", default=None)
    v.add_argument("--jobs", type=int, default=1)

    d = sub.add_parser("dump", help="print generated tables")
    d.add_argument("what", choices=["relations"])
    d.add_argument("--type", choices=TYPES, default="G2")
    d.add_argument("--out", default=None)
    return p


def main(argv=None):
    _apply_memory_ceiling()
    args = _parser().parse_args(argv)
    try:
        if args.command == "dump":
            text = "\n".join(_dump_relations(args)) + "\n"
            sys.stdout.write(text)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            return 0
        suite = _SUITES[args.suite]
        if args.jobs < 1:
            raise SystemExit(2)
        t0 = time.time()
        checks = suite(args)
        records = _run_checks(checks, args.jobs)
        ok = all(r["status"] == "pass" for r in records)
        params = {"jobs": args.jobs}
        if getattr(args, "height", None) is not None:
            params["height"] = args.height
        if getattr(args, "bound", None) is not None:
            params["bound"] = args.bound
        report = {
            "schema": SCHEMA_VERSION,
            "suite": args.suite,
            "type": args.type if args.suite != "g2" else "G2",
            "params": params,
            "checks": records,
            "result": "pass" if ok else "fail",
            "wall_time_s": time.time() - t0,
        }
        _emit(report, args.out)
        return 0 if ok else 1
    except MemoryError:
        sys.stderr.write("error: memory ceiling exceeded (MPQG_MEMORY_MB)\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
