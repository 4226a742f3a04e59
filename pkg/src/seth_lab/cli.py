"""Command-line front end.

Exit codes: 0 success, 1 domain failure (failed verification, refused
output, band exceeded), 2 usage or I/O error, 3 threshold-gap diagnostic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as bench_mod
from . import editdist, ov, pat, verify
from .gadgets import check_params, params_desk, params_paper
from .reduction import TheoremViolation, build_sequences, decide_ov_via_edit, decide_ov_via_pat

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_GAP = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_sequence_file(path: str) -> str:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read sequence file {path}: {exc}")
    return text.rstrip("\n")


def _get_pair(args) -> tuple:
    def one(inline, file, name):
        if inline is not None and file is not None:
            raise CliError(f"give --{name} or --{name}-file, not both")
        if inline is not None:
            return inline
        if file is not None:
            return _read_sequence_file(file)
        raise CliError(f"missing --{name} or --{name}-file")

    return one(args.a, args.a_file, "a"), one(args.b, args.b_file, "b")


def _add_pair_args(sub):
    sub.add_argument("--a", help="first sequence, inline")
    sub.add_argument("--b", help="second sequence, inline")
    sub.add_argument("--a-file", help="first sequence, from file")
    sub.add_argument("--b-file", help="second sequence, from file")


def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("true", "1", "yes"):
        return True
    if v in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {s!r}")


def cmd_ed(args) -> int:
    x, y = _get_pair(args)
    if args.engine == "banded":
        d = editdist.edit_distance_banded(x, y, args.k)
        if d is None:
            print(f">{args.k}")
            return EXIT_DOMAIN
    elif args.engine == "bitparallel":
        d = editdist.edit_distance_bitparallel(x, y)
    else:
        d = editdist.edit_distance_dp(x, y)
    print(d)
    if args.trace:
        trace = editdist.edit_alignment(x, y)
        for op in trace.ops:
            if op.kind == "delete":
                print(f"{op.kind} i={op.i}")
            elif op.kind == "insert":
                print(f"{op.kind} j={op.j} symbol={op.symbol}")
            else:
                print(f"{op.kind} i={op.i} j={op.j}")
    return EXIT_OK


def cmd_pat(args) -> int:
    p1, p2 = _get_pair(args)
    print(pat.pat_distance(p1, p2))
    return EXIT_OK


def cmd_gen_ov(args) -> int:
    try:
        inst = ov.gen_ov(
            args.na, args.nb, args.d, args.planted, args.density, args.seed
        )
    except ov.GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        ov.save(inst, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}")
    found, witness = ov.solve_ov_bruteforce(inst)
    print(f"# brute force: found={found} witness={witness}", file=sys.stderr)
    return EXIT_OK


def _profile_params(profile: str, d: int):
    return params_paper(d) if profile == "paper" else params_desk(d)


def cmd_reduce(args) -> int:
    try:
        inst = ov.load(args.instance)
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"bad instance file {args.instance}: {exc}")
    p = _profile_params(args.profile, inst.d)
    if args.profile == "paper" and not args.force:
        n_a, n_b = sorted((len(inst.A), len(inst.B)))
        len_p2 = (n_b + 2 * (n_a - 1)) * (2 * p.T + p.ag2_len)
        len_p1 = n_a * (2 * p.T + p.ag1_len)
        len_p1_prime = len_p1 + 2 * len_p2
        print("refusing to materialize paper-profile sequences (use --force)")
        print(f"predicted |P1'| = {len_p1_prime}")
        print(f"predicted |P2'| = {len_p2}")
        return EXIT_DOMAIN
    out = build_sequences(inst, p)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "p1_prime.seq").write_text(out.p1_prime, encoding="ascii")
        (out_dir / "p2_prime.seq").write_text(out.p2_prime, encoding="ascii")
        (out_dir / "instance.json").write_text(
            ov.to_json(out.normalized_instance), encoding="ascii"
        )
        meta = {
            "X": out.X,
            "Y": out.Y,
            "E_s": p.e_s,
            "E_u": p.e_u,
            "d": p.d,
            "profile": p.profile_name,
            "params": {"l0": p.l0, "l1": p.l1, "l2": p.l2, "T": p.T},
        }
        (out_dir / "meta.json").write_text(
            json.dumps(meta, indent=2) + "\n", encoding="ascii"
        )
    except OSError as exc:
        raise CliError(f"cannot write outputs to {out_dir}: {exc}")
    print(f"wrote p1_prime.seq, p2_prime.seq, instance.json, meta.json to {out_dir}")
    return EXIT_OK


def cmd_solve_ov(args) -> int:
    try:
        inst = ov.load(args.instance)
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"bad instance file {args.instance}: {exc}")
    if args.method == "brute":
        found, witness = ov.solve_ov_bruteforce(inst)
        print("ORTHOGONAL-PAIR" if found else "NO-PAIR")
        if found:
            print(f"witness: A[{witness[0]}], B[{witness[1]}]")
        return EXIT_OK
    p = _profile_params(args.profile, inst.d)
    try:
        if args.method == "pat":
            found = decide_ov_via_pat(inst, p)
        else:
            found = decide_ov_via_edit(inst, p)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_GAP
    print("ORTHOGONAL-PAIR" if found else "NO-PAIR")
    return EXIT_OK


def cmd_verify(args) -> int:
    p = params_desk(args.d)
    report = verify.Report(())
    cp = check_params(p)
    report = report.merged(
        verify.Report(
            (
                verify.CheckResult(
                    check="param-constraints",
                    inputs=f"desk profile d={args.d}",
                    expected="0 violations",
                    actual=str(len(cp.violations)) + " violations",
                    passed=cp.ok,
                ),
            )
        )
    )
    report = report.merged(verify.verify_coordinate_table(p))
    if args.mode == "exhaustive":
        report = report.merged(verify.verify_vector_lemmas(p, mode="exhaustive"))
    else:
        report = report.merged(
            verify.verify_vector_lemmas(p, mode=("sampled", args.samples, args.seed))
        )
    report = report.merged(
        verify.verify_theorems(
            n_instances=args.instances, d=args.d, n_max=2, seed=args.seed
        )
    )
    report = report.merged(verify.verify_facts(samples=args.samples, seed=args.seed))
    print(report.format_text())
    if args.json:
        try:
            Path(args.json).write_text(report.to_json(), encoding="ascii")
        except OSError as exc:
            raise CliError(f"cannot write {args.json}: {exc}")
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _parse_int_list(raw: str):
    try:
        values = [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise CliError(f"malformed integer list: {raw!r}")
    if not values:
        raise CliError(f"empty integer list: {raw!r}")
    return values


def cmd_bench(args) -> int:
    if args.selftest:
        sizes = [1000, 2000, 4000, 8000, 16000]
        fit = bench_mod.fit_scaling(
            bench_mod.synthetic_records("dp", sizes, exponent=2.0)
        )
        print(json.dumps({"engine": "synthetic", "exponent": fit.exponent}))
        return EXIT_OK
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in bench_mod.ENGINES:
            raise CliError(f"unknown engine {e!r}")
    sizes = _parse_int_list(args.sizes)
    all_records = []
    fits = {}
    for engine in engines:
        records = bench_mod.run_scaling_bench(engine, sizes, args.trials, args.seed)
        all_records.extend(records)
        if len(sizes) >= 4:
            fit = bench_mod.fit_scaling(records)
            fits[engine] = {"exponent": fit.exponent, "r_squared": fit.r_squared}
    try:
        bench_mod.write_csv(all_records, args.out)
        fit_path = Path(args.out).with_suffix(".fit.json")
        fit_path.write_text(json.dumps(fits, indent=2) + "\n", encoding="ascii")
    except OSError as exc:
        raise CliError(f"cannot write bench output: {exc}")
    print(json.dumps(fits, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seth-lab",
        description="edit-distance engines, orthogonal-vectors reduction "
        "and its empirical verification harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ed = sub.add_parser("ed", help="edit distance between two sequences")
    _add_pair_args(ed)
    ed.add_argument("--engine", choices=("dp", "banded", "bitparallel"), default="dp")
    ed.add_argument("--k", type=int, default=0, help="band width for --engine banded")
    ed.add_argument("--trace", action="store_true", help="print one optimal trace")
    ed.set_defaults(fn=cmd_ed)

    patp = sub.add_parser("pat", help="pattern distance of --a against --b")
    _add_pair_args(patp)
    patp.set_defaults(fn=cmd_pat)

    gen = sub.add_parser("gen-ov", help="generate an orthogonal-vectors instance")
    gen.add_argument("--na", type=int, required=True)
    gen.add_argument("--nb", type=int, required=True)
    gen.add_argument("--d", type=int, required=True)
    gen.add_argument("--planted", type=_parse_bool, required=True)
    gen.add_argument("--density", type=float, default=ov.DEFAULT_ONE_DENSITY)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(fn=cmd_gen_ov)

    red = sub.add_parser("reduce", help="build the reduction sequences")
    red.add_argument("--instance", required=True)
    red.add_argument("--profile", choices=("paper", "desk"), default="desk")
    red.add_argument("--out-dir", required=True)
    red.add_argument("--force", action="store_true")
    red.set_defaults(fn=cmd_reduce)

    solve = sub.add_parser("solve-ov", help="decide an instance")
    solve.add_argument("--instance", required=True)
    solve.add_argument("--method", choices=("brute", "pat", "edit"), default="brute")
    solve.add_argument("--profile", choices=("desk",), default="desk")
    solve.set_defaults(fn=cmd_solve_ov)

    ver = sub.add_parser("verify", help="run the verification harness")
    ver.add_argument("--d", type=int, default=2)
    ver.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    ver.add_argument("--samples", type=int, default=200)
    ver.add_argument("--instances", type=int, default=6)
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--json", help="also write the report as JSON")
    ver.set_defaults(fn=cmd_verify)

    ben = sub.add_parser("bench", help="engine scaling measurements")
    ben.add_argument("--engines", default="dp")
    ben.add_argument("--sizes", default="1000,2000,4000,8000")
    ben.add_argument("--trials", type=int, default=3)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--out", default="bench.csv")
    ben.add_argument("--selftest", action="store_true")
    ben.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
