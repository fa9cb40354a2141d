"""Command-line front end.

Input documents are JSON: {"m": <int>, "complement": [[...], ...]} or
{"m": <int>, "facets": [[...], ...]}, vertices 1-indexed.  Every
subcommand takes --json for a machine-readable rendering of the same
data.  Exit codes: 0 success, 2 parse/usage error, 3 capability error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .bitsets import mask_of, popcount, set_str, sort_key, vertices
from .complexes import (
    Complement,
    SimplicialComplex,
    complement_from_complex,
    complex_from_complement,
    compress,
    full_subcomplex,
    link,
    star,
)
from .hochster import CochainComplex
from .linalg import QQ, ZZ, CapabilityError, CoefficientSpec, PrimeField
from .moment_angle import PairSpec, maz_cohomology
from .polynomials import pstr, psorted, ptotal
from .sampling import random_complement
from .taylor import taylor_complex
from .tor import TorRing, tor_bigraded, zk_poincare

MAX_INPUT_AMBIENT = 24


class InputError(Exception):
    """Malformed or out-of-range input document."""


def _thread_count() -> int:
    raw = os.environ.get("FACE_TOR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    items = list(items)
    workers = _thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from exc


def _vertex_lists(doc, field: str, m: int) -> list[list[int]]:
    lists = doc[field]
    if not isinstance(lists, list):
        raise InputError(f"{field}: expected a list of vertex lists")
    out = []
    for i, entry in enumerate(lists):
        if not isinstance(entry, list):
            raise InputError(f"{field}[{i}]: expected a vertex list")
        for j, v in enumerate(entry):
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
                raise InputError(f"{field}[{i}][{j}]: vertex {v!r} out of range 1..{m}")
        out.append(entry)
    return out


def load_input(path: str) -> Complement:
    """Parse an input document down to a complement (facets are
    converted through their minimal non-faces)."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "m" not in doc:
        raise InputError("m: missing")
    m = doc["m"]
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= MAX_INPUT_AMBIENT:
        raise InputError(f"m: expected an integer in 1..{MAX_INPUT_AMBIENT}, got {m!r}")
    has_c = "complement" in doc
    has_f = "facets" in doc
    if has_c == has_f:
        raise InputError("expected exactly one of 'complement' or 'facets'")
    if has_c:
        return Complement(m, tuple(mask_of(vs, m) for vs in _vertex_lists(doc, "complement", m)))
    K = SimplicialComplex(m, tuple(mask_of(vs, m) for vs in _vertex_lists(doc, "facets", m)))
    return complement_from_complex(K)


def load_pairs(path: str, m: int) -> PairSpec:
    doc = _load_json(path)
    if not isinstance(doc, list):
        raise InputError(f"{path}: expected a JSON list of {{'X': ..., 'A': ...}} entries")
    if len(doc) != m:
        raise InputError(f"pairs: expected {m} entries, got {len(doc)}")
    xs, ans = [], []
    for i, entry in enumerate(doc):
        if not isinstance(entry, dict) or set(entry) - {"X", "A"}:
            raise InputError(f"pairs[{i}]: expected an object with keys 'X' and 'A'")
        side_out = []
        for key in ("X", "A"):
            pairs = entry.get(key, [])
            if not isinstance(pairs, list):
                raise InputError(f"pairs[{i}].{key}: expected a list of [degree, rank]")
            parsed = []
            for j, dr in enumerate(pairs):
                if (
                    not isinstance(dr, list)
                    or len(dr) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in dr)
                ):
                    raise InputError(f"pairs[{i}].{key}[{j}]: expected [degree, rank]")
                deg, rank = dr
                if deg < 1:
                    raise InputError(f"pairs[{i}].{key}[{j}]: degree {deg} must be >= 1")
                if rank < 0:
                    raise InputError(f"pairs[{i}].{key}[{j}]: rank {rank} must be >= 0")
                parsed.append((deg, rank))
            side_out.append(tuple(parsed))
        xs.append(side_out[0])
        ans.append(side_out[1])
    return PairSpec(tuple(xs), tuple(ans))


def _parse_coeff(text: str) -> CoefficientSpec:
    if text == "q":
        return QQ
    if text == "z":
        return ZZ
    if text.startswith("f:"):
        try:
            return PrimeField(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad coefficient field {text!r}: {exc}")
    raise argparse.ArgumentTypeError(f"bad coefficient spec {text!r} (use q, z, or f:<p>)")


def _parse_field_coeff(text: str) -> CoefficientSpec:
    coeff = _parse_coeff(text)
    if coeff == ZZ:
        raise argparse.ArgumentTypeError("this command needs field coefficients (q or f:<p>)")
    return coeff


def _parse_omega(text: str, m: int) -> int:
    try:
        verts = [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise InputError(f"omega: {exc}")
    try:
        return mask_of(verts, m)
    except ValueError as exc:
        raise InputError(f"omega: {exc}")


def _series_json(series) -> list[list[int]]:
    return [[d, c] for d, c in psorted(series)]


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _tor_payload(tor) -> dict:
    blocks = []
    for (q, sigma), group in tor.blocks():
        blocks.append(
            {
                "q": q,
                "sigma": list(vertices(sigma)),
                "deg": 2 * popcount(sigma) - q,
                "rank": group.rank,
                "torsion": list(group.torsion),
            }
        )
    return {"blocks": blocks, "total_rank": tor.total_rank()}


def _tor_lines(tor) -> list[str]:
    lines = []
    for (q, sigma), group in tor.blocks():
        line = f"q={q} sigma={set_str(sigma)} deg={2 * popcount(sigma) - q} rank={group.rank}"
        if group.torsion:
            line += " torsion=" + ",".join(str(t) for t in group.torsion)
        lines.append(line)
    lines.append(f"total rank {tor.total_rank()}")
    return lines


def _cmd_tor(args) -> int:
    P = load_input(args.input)
    tor = tor_bigraded(P, args.coeff)
    payload = {"command": "tor", "m": P.m, "coeff": str(args.coeff)}
    payload.update(_tor_payload(tor))
    _emit(payload, args.json, _tor_lines(tor))
    return 0


def _cmd_zk(args) -> int:
    P = load_input(args.input)
    series = zk_poincare(P, QQ)
    payload = {
        "command": "zk",
        "m": P.m,
        "series": _series_json(series),
        "total": ptotal(series),
    }
    _emit(payload, args.json, [f"{pstr(series)} (total {ptotal(series)})"])
    return 0


def _cmd_ring(args) -> int:
    P = load_input(args.input)
    ring = TorRing(P, args.coeff)
    table = ring.multiplication_table()
    basis_payload = []
    basis_lines = [f"basis (rank {len(ring.basis)}):"]
    for name, tc in ring.basis:
        deg = 2 * popcount(tc.sigma) - tc.q
        basis_payload.append(
            {"name": name, "q": tc.q, "sigma": list(vertices(tc.sigma)), "deg": deg}
        )
        basis_lines.append(f"  [{name}] q={tc.q} sigma={set_str(tc.sigma)} deg={deg}")
    prod_payload = []
    prod_lines = ["nonzero products (positive-degree pairs):"]
    count = 0
    for entry in table:
        left = ring.class_by_name(entry["left"])
        if left.q == 0 or ring.class_by_name(entry["right"]).q == 0:
            continue
        if entry["terms"]:
            count += 1
            combo = " + ".join(
                (name if c == 1 else f"{c}*{name}") for name, c in entry["terms"]
            )
            prod_payload.append(
                {
                    "left": entry["left"],
                    "right": entry["right"],
                    "terms": [[name, str(c)] for name, c in entry["terms"]],
                }
            )
            prod_lines.append(f"  [{entry['left']}] * [{entry['right']}] = {combo}")
    if count == 0:
        prod_lines.append("  (none)")
    payload = {
        "command": "ring",
        "m": P.m,
        "coeff": str(args.coeff),
        "basis": basis_payload,
        "products": prod_payload,
    }
    _emit(payload, args.json, basis_lines + prod_lines)
    return 0


def _subcomplex_payload(L: SimplicialComplex) -> dict:
    return {"void": L.is_void, "facets": L.facet_vertex_lists()}


def _cmd_star_link(args, which: str) -> int:
    P = load_input(args.input)
    omega = _parse_omega(args.omega, P.m)
    K = complex_from_complement(P)
    if K.is_void:
        raise CapabilityError("the void complex has no star or link")
    result = star(K, omega) if which == "star" else link(K, omega)
    if which == "star":
        tor = tor_bigraded(compress(P, omega), args.coeff)
    else:
        if result.is_void:
            tor = tor_bigraded(Complement(P.m, (0,)), args.coeff)
        else:
            tor = tor_bigraded(complement_from_complex(result), args.coeff)
    payload = {
        "command": which,
        "m": P.m,
        "omega": list(vertices(omega)),
        "coeff": str(args.coeff),
    }
    payload.update(_subcomplex_payload(result))
    payload["tor"] = _tor_payload(tor)
    lines = []
    if result.is_void:
        lines.append(f"{which} of {set_str(omega)}: void complex")
    else:
        facets = ", ".join(set_str(f) for f in result.facets)
        lines.append(f"{which} of {set_str(omega)}: facets {facets}")
    lines.extend(_tor_lines(tor))
    _emit(payload, args.json, lines)
    return 0


def _cmd_maz(args) -> int:
    P = load_input(args.input)
    if args.preset and args.pairs:
        raise InputError("use either --pairs or --preset, not both")
    if args.preset == "s2s1":
        pairs = PairSpec.spheres_s2_s1(P.m)
    elif args.preset == "d2s1":
        pairs = PairSpec.disks_d2_s1(P.m)
    elif args.pairs:
        pairs = load_pairs(args.pairs, P.m)
    else:
        raise InputError("one of --pairs or --preset is required")
    series = maz_cohomology(P, pairs, QQ)
    payload = {
        "command": "maz",
        "m": P.m,
        "series": _series_json(series),
        "total": ptotal(series),
    }
    _emit(payload, args.json, [f"{pstr(series)} (total {ptotal(series)})"])
    return 0


def _cmd_compress(args) -> int:
    P = load_input(args.input)
    omega = _parse_omega(args.omega, P.m)
    out = compress(P, omega)
    print(json.dumps({"m": out.m, "complement": out.member_vertex_lists()}))
    return 0


VERIFY_COEFFS: tuple[CoefficientSpec, ...] = (QQ, PrimeField(2), ZZ)


def _verify_complement(P: Complement, all_sigma: bool):
    """Compare Taylor block homology against full-subcomplex cohomology
    for every (q, sigma); returns per-block results."""
    tc = taylor_complex(P)
    K = complex_from_complement(P)
    if all_sigma:
        sigmas = list(range(1 << P.m))
        sigmas.sort(key=sort_key)
    else:
        sigmas = tc.supports()

    def check_sigma(sigma):
        results = []
        if K.is_void:
            oracle = None
        else:
            oracle = CochainComplex(full_subcomplex(K, sigma))
        qmax = max(tc.max_degree(sigma), popcount(sigma))
        for q in range(0, qmax + 1):
            groups = {}
            ok = True
            for coeff in VERIFY_COEFFS:
                left = tc.block_homology(sigma, q, coeff)
                if oracle is None:
                    right_sig = (0, ())
                else:
                    right_sig = oracle.cohomology(popcount(sigma) - q - 1, coeff).signature
                groups[str(coeff)] = {
                    "left": left.signature,
                    "right": right_sig,
                }
                ok = ok and left.signature == right_sig
            results.append((q, sigma, groups, ok))
        return results

    out = []
    for chunk in _map_ordered(check_sigma, sigmas):
        out.extend(chunk)
    return out


def _group_str(sig) -> str:
    rank, torsion = sig
    parts = ([f"Z^{rank}"] if rank else []) + [f"Z/{t}" for t in torsion]
    return "+".join(parts) if parts else "0"


def _render_verify_results(results, as_json: bool, header: dict) -> int:
    failed = [r for r in results if not r[3]]
    interesting = [
        r
        for r in results
        if not r[3]
        or any(g["left"] != (0, ()) or g["right"] != (0, ()) for g in r[2].values())
    ]
    if as_json:
        blocks = []
        for q, sigma, groups, ok in interesting:
            blocks.append(
                {
                    "q": q,
                    "sigma": list(vertices(sigma)),
                    "groups": {
                        name: {
                            "left": {"rank": sig["left"][0], "torsion": list(sig["left"][1])},
                            "right": {"rank": sig["right"][0], "torsion": list(sig["right"][1])},
                        }
                        for name, sig in groups.items()
                    },
                    "ok": ok,
                }
            )
        payload = dict(header)
        payload.update(
            {
                "coeffs": [str(c) for c in VERIFY_COEFFS],
                "blocks": blocks,
                "checked": len(results),
                "failed": len(failed),
            }
        )
        print(json.dumps(payload, indent=2))
    else:
        for q, sigma, groups, ok in interesting:
            tag = "PASS" if ok else "FAIL"
            detail = ", ".join(
                f"{name}:{_group_str(sig['left'])}"
                + ("" if ok else f"|oracle:{_group_str(sig['right'])}")
                for name, sig in groups.items()
            )
            print(f"{tag} q={q} sigma={set_str(sigma)} [{detail}]")
        print(
            f"checked {len(results)} (q, sigma) blocks over "
            + ", ".join(str(c) for c in VERIFY_COEFFS)
            + f": {len(results) - len(failed)} passed, {len(failed)} failed"
        )
    return 4 if failed else 0


def _cmd_verify(args) -> int:
    if args.random:
        rng = random.Random(args.seed)
        all_results = []
        failed_trials = 0
        for trial in range(args.trials):
            P = random_complement(rng, args.max_m, args.max_s)
            results = _verify_complement(P, all_sigma=False)
            bad = [r for r in results if not r[3]]
            all_results.extend(results)
            if bad:
                failed_trials += 1
            if not args.json:
                status = "PASS" if not bad else "FAIL"
                print(
                    f"trial {trial}: m={P.m} s={P.s} P={P} "
                    f"{len(results)} blocks {status}"
                )
        failed = [r for r in all_results if not r[3]]
        if args.json:
            print(
                json.dumps(
                    {
                        "command": "verify",
                        "mode": "random",
                        "trials": args.trials,
                        "seed": args.seed,
                        "checked": len(all_results),
                        "failed": len(failed),
                    },
                    indent=2,
                )
            )
        else:
            print(
                f"random sweep: {args.trials} trials, {len(all_results)} blocks, "
                f"{len(failed)} failures"
            )
        return 4 if failed else 0
    if not args.input:
        raise InputError("an input file is required unless --random is given")
    P = load_input(args.input)
    results = _verify_complement(P, all_sigma=args.all_sigma)
    return _render_verify_results(
        results, args.json, {"command": "verify", "mode": "file", "m": P.m}
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facetor",
        description="Exact bigraded Tor of face rings from simplicial complements, "
        "with moment-angle cohomology and an independent cohomological cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, coeff_default=None, coeff_parser=_parse_coeff):
        p.add_argument("input", help="JSON input document")
        if coeff_default is not None:
            p.add_argument(
                "--coeff",
                type=coeff_parser,
                default=coeff_parser(coeff_default),
                help="coefficients: q (rationals), z (integers), f:<p> (prime field)",
            )
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_tor = sub.add_parser("tor", help="bigraded Tor table")
    add_common(p_tor, "q")
    p_tor.set_defaults(fn=_cmd_tor)

    p_zk = sub.add_parser("zk", help="Poincare polynomial of the moment-angle complex")
    add_common(p_zk)
    p_zk.set_defaults(fn=_cmd_zk)

    p_ring = sub.add_parser("ring", help="Tor basis and nonzero products")
    add_common(p_ring, "q", _parse_field_coeff)
    p_ring.set_defaults(fn=_cmd_ring)

    for which in ("star", "link"):
        p_sl = sub.add_parser(which, help=f"{which} of a face, with its Tor table")
        add_common(p_sl, "q")
        p_sl.add_argument("--omega", required=True, help="comma-separated vertices, e.g. 1,3")
        p_sl.set_defaults(fn=lambda args, w=which: _cmd_star_link(args, w))

    p_maz = sub.add_parser("maz", help="graded dimensions of a generalized moment-angle complex")
    add_common(p_maz)
    p_maz.add_argument("--pairs", help="JSON pair-spec document")
    p_maz.add_argument("--preset", choices=["s2s1", "d2s1"], help="built-in pair spec")
    p_maz.set_defaults(fn=_cmd_maz)

    p_comp = sub.add_parser("compress", help="remove a subset from every member")
    p_comp.add_argument("input", help="JSON input document")
    p_comp.add_argument("--omega", required=True, help="comma-separated vertices")
    p_comp.set_defaults(fn=_cmd_compress)

    p_ver = sub.add_parser("verify", help="cross-check Tor blocks against the cohomology oracle")
    p_ver.add_argument("input", nargs="?", help="JSON input document")
    p_ver.add_argument("--json", action="store_true", help="machine-readable output")
    p_ver.add_argument("--all-sigma", action="store_true", help="sweep every subset, not just supports")
    p_ver.add_argument("--random", action="store_true", help="randomized sweep instead of a file")
    p_ver.add_argument("--trials", type=int, default=50)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-m", type=int, default=6)
    p_ver.add_argument("--max-s", type=int, default=4)
    p_ver.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
