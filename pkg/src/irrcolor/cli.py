"""Command-line front end.

Subcommands:
  invariants  compute invariants for graphs read from a file or stdin
  gen         build a named family instance and write it plus a claims sidecar
  verify      run the data-driven verification suites
  scan        stream graphs through inequality / conjecture / equivalence checks

Exit codes: 0 success or no findings, 2 findings recorded (scan), 64 input
error, 65 parameter error.  Reports are deterministic for fixed input and
flags; wall-clock timings live in their own field so byte comparisons can
drop them.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib.resources import files as resource_files
from itertools import product
from typing import Optional

from . import families
from .budget import Deadline
from .characterize import bipartite_two_family, find_anchor_edge, find_near_twin_pair, is_star
from .coloring import (
    chromatic_number,
    dominator_chromatic_number,
    gamma_chromatic_number,
    global_dominator_chromatic_number,
    irredundance_chromatic_number,
)
from .errors import FormatError, ParameterError, SearchCancelled, SizeCapError
from .graphs import (
    Graph,
    bipartition,
    bits,
    connectivity_profile,
    format_edge_list,
    from_edge_list,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .irc import irc_chromatic_number, irc_colorability, irc_with_k_colors, is_irc_coloring
from .irredundance import (
    gamma_number,
    ir_number,
    ir_verify,
    is_maximal_irredundant,
    maximal_irredundant_sets,
    minimal_dominating_sets,
)
from .oracle import DEFAULT_SIZE_CAP, irc_partition_exists, oracle_invariant

SCHEMA = "irrcolor-report/1"

ALL_INVARIANTS = (
    "chi",
    "ir",
    "gamma",
    "chi_i",
    "chi_gamma",
    "chi_d",
    "chi_gd",
    "irc_colorable",
    "chi_irc",
)
DEFAULT_INVARIANTS = ("chi", "ir", "gamma", "chi_i", "chi_gamma", "irc_colorable")

# per-invariant size caps for the exponential solvers
CAPS = {
    "chi": 60,
    "ir": 20,
    "gamma": 20,
    "chi_i": 16,
    "chi_gamma": 16,
    "chi_d": 12,
    "chi_gd": 12,
    "irc_colorable": 12,
    "chi_irc": 10,
}
CONJECTURE_CAP = 40


def _set_witness(mask) -> list[int]:
    return list(bits(mask))


def _compute_invariant(g: Graph, name: str, token=None):
    """Returns (status, value, witness); status in ok / absent / skipped(cap)."""
    if name in ("ir", "chi_i", "chi_gamma", "chi_d") and g.n < 1:
        return "absent", None, None
    if name == "chi_gd" and g.n < 2:
        return "absent", None, None
    if g.n > CAPS[name]:
        if name == "irc_colorable":
            from .irc import _cheap_obstruction

            if _cheap_obstruction(g):
                return "ok", False, None
        return "skipped(cap)", None, None
    if name == "chi":
        k, col = chromatic_number(g, token)
        return "ok", k, {"coloring": list(col.color_of)}
    if name == "ir":
        k, witness = ir_number(g, token)
        return "ok", k, {"set": _set_witness(witness)}
    if name == "gamma":
        k, witness = gamma_number(g, token)
        return "ok", k, {"set": _set_witness(witness)}
    if name == "chi_i":
        k, cert = irredundance_chromatic_number(g, token)
        return "ok", k, {
            "coloring": list(cert.coloring.color_of),
            "set": _set_witness(cert.rainbow_set),
        }
    if name == "chi_gamma":
        k, cert = gamma_chromatic_number(g, token)
        return "ok", k, {
            "coloring": list(cert.coloring.color_of),
            "set": _set_witness(cert.rainbow_set),
        }
    if name == "chi_d":
        k, col = dominator_chromatic_number(g, token)
        return "ok", k, {"coloring": list(col.color_of)}
    if name == "chi_gd":
        res = global_dominator_chromatic_number(g, token)
        if res is None:
            return "absent", None, None
        return "ok", res[0], {"coloring": list(res[1].color_of)}
    if name == "irc_colorable":
        col = irc_colorability(g, token)
        witness = {"coloring": list(col.color_of)} if col is not None else None
        return "ok", col is not None, witness
    if name == "chi_irc":
        res = irc_chromatic_number(g, token)
        if res is None:
            return "absent", None, None
        return "ok", res[0], {"coloring": list(res[1].color_of)}
    raise ParameterError(f"unknown invariant {name!r}")


def _graph_record(idx: int, g: Graph, names, token=None, witnesses=False) -> dict:
    record = {
        "id": idx,
        "n": g.n,
        "m": g.m,
        "graph6": to_graph6(g).decode("ascii") if g.n <= 62 else None,
        "invariants": {},
        "timings": {},
    }
    if witnesses:
        record["witnesses"] = {}
    for name in names:
        t0 = time.perf_counter()
        try:
            status, value, witness = _compute_invariant(g, name, token)
        except SearchCancelled:
            status, value, witness = "skipped(budget)", None, None
        record["invariants"][name] = {"status": status, "value": value}
        if witnesses:
            record["witnesses"][name] = witness
        record["timings"][name] = round(time.perf_counter() - t0, 6)
    return record


def _worker_invariants(payload):
    idx, g6, names, witnesses = payload
    return _graph_record(idx, parse_graph6(g6), names, witnesses=witnesses)


# --- input handling -----------------------------------------------------------


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _read_graphs(path: Optional[str], fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    return graphs


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for rec in report.get("graphs", []):
        parts = [f"graph {rec['id']}: n={rec['n']} m={rec['m']}"]
        for name, cell in rec["invariants"].items():
            if cell["status"] == "ok":
                val = cell["value"]
                shown = str(val).lower() if isinstance(val, bool) else val
                parts.append(f"{name}={shown}")
            else:
                parts.append(f"{name}={cell['status']}")
        print("  ".join(str(p) for p in parts))
    for violation in report.get("violations", []):
        print(f"VIOLATION {violation['check']}: {violation['detail']}")
    for claim in report.get("claims", []):
        print(f"{claim['status'].upper():4s} {claim['claim']}"
              + (f" ({claim['detail']})" if claim.get("detail") else ""))
    summary = report.get("summary")
    if summary:
        pairs = " ".join(f"{k}={v}" for k, v in sorted(summary.items()))
        print(f"summary: {pairs}")


# --- invariants command ---------------------------------------------------------


def cmd_invariants(args) -> int:
    try:
        graphs = _read_graphs(args.input, args.format)
    except (FormatError, IndexError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 64
    names = DEFAULT_INVARIANTS if not args.invariants else tuple(args.invariants.split(","))
    for name in names:
        if name not in ALL_INVARIANTS:
            print(f"parameter error: unknown invariant {name!r}", file=sys.stderr)
            return 65
    token = Deadline(args.budget_seconds) if args.budget_seconds else None
    if args.jobs > 1 and len(graphs) > 1:
        payloads = [
            (i, to_graph6(g).decode("ascii"), names, args.witnesses)
            for i, g in enumerate(graphs)
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_worker_invariants, payloads))
    else:
        records = [
            _graph_record(i, g, names, token, witnesses=args.witnesses)
            for i, g in enumerate(graphs)
        ]
    skipped = sum(
        1
        for rec in records
        for cell in rec["invariants"].values()
        if cell["status"].startswith("skipped")
    )
    report = {
        "schema": SCHEMA,
        "command": "invariants",
        "graphs": records,
        "violations": [],
        "summary": {"graphs": len(records), "violations": 0, "skipped": skipped},
    }
    _emit(report, args.json)
    return 0


# --- gen command ----------------------------------------------------------------

_FAMILY_ARITY = {
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "cycle": 1,
    "path": 1,
    "A": 2,
    "H": 2,
    "Z": 2,
    "B": 2,
    "cut_vertex": 1,
    "bridge": 2,
    "tilde": 1,
    "bipartite_star_of_cycles": 1,
    "fixture": 1,
}


def _build_family(name: str, params: list[str]) -> families.FamilyInstance:
    if name not in _FAMILY_ARITY:
        raise ParameterError(f"unknown family {name!r}")
    if len(params) != _FAMILY_ARITY[name]:
        raise ParameterError(f"{name} expects {_FAMILY_ARITY[name]} parameter(s)")
    if name == "fixture":
        return families.fixture(params[0])
    try:
        nums = [int(p) for p in params]
    except ValueError as exc:
        raise ParameterError(f"{name} parameters must be integers") from exc
    if name in ("complete", "complete_bipartite", "star", "cycle", "path"):
        return families.gen_basic(name, *nums)
    if name == "A":
        return families.gen_family_a(*nums)
    if name == "H":
        return families.gen_block_h(*nums)
    if name == "Z":
        return families.gen_family_z(*nums)
    if name == "B":
        return families.gen_family_b(*nums)
    return families.gen_irc_family(name, *nums)


def _sidecar(inst: families.FamilyInstance) -> dict:
    return {
        "schema": SCHEMA,
        "source": inst.source,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "claims": {
            key: {"value": claim.value, "exact": claim.exact}
            for key, claim in sorted(inst.claims.items())
        },
        "coloring": list(inst.coloring.color_of) if inst.coloring else None,
        "labels": list(inst.labels) if inst.labels else None,
    }


def cmd_gen(args) -> int:
    try:
        inst = _build_family(args.family, args.params)
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 65
    if args.format == "graph6":
        try:
            payload = to_graph6(inst.graph).decode("ascii") + "\n"
        except Exception as exc:
            print(f"parameter error: {exc}", file=sys.stderr)
            return 65
    else:
        payload = format_edge_list(inst.graph)
    sidecar = json.dumps(_sidecar(inst), indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload)
        with open(args.out + ".json", "w", encoding="ascii") as fh:
            fh.write(sidecar)
    else:
        sys.stdout.write(payload)
        sys.stdout.write(sidecar)
    return 0


# --- scan command ---------------------------------------------------------------


def _chain_scan(idx: int, g: Graph, token, oracle_cap: int):
    record = _graph_record(idx, g, ("chi", "ir", "gamma", "chi_i", "chi_gamma", "chi_d", "chi_gd"), token)
    inv = record["invariants"]
    violations = []

    def val(name):
        cell = inv[name]
        return cell["value"] if cell["status"] == "ok" else None

    chain = ["chi", "chi_i", "chi_gamma", "chi_d", "chi_gd"]
    for lo, hi in zip(chain, chain[1:]):
        a, b = val(lo), val(hi)
        if a is not None and b is not None and a > b:
            violations.append(
                {
                    "check": f"chain:{lo}<={hi}",
                    "graph": idx,
                    "graph6": record["graph6"],
                    "detail": f"{lo}={a} > {hi}={b}",
                }
            )
    if val("ir") is not None and val("gamma") is not None and val("ir") > val("gamma"):
        violations.append(
            {
                "check": "ir<=gamma",
                "graph": idx,
                "graph6": record["graph6"],
                "detail": f"ir={val('ir')} > gamma={val('gamma')}",
            }
        )
    if g.n <= 16:
        for d in minimal_dominating_sets(g):
            if not is_maximal_irredundant(g, d):
                violations.append(
                    {
                        "check": "minimal-dominating-is-maximal-irredundant",
                        "graph": idx,
                        "graph6": record["graph6"],
                        "detail": f"set mask {d} dominates minimally but is not maximal irredundant",
                    }
                )
    return record, violations


def _bounds_scan(idx: int, g: Graph, token, oracle_cap: int):
    record = _graph_record(idx, g, ("chi", "ir", "chi_i"), token)
    inv = record["invariants"]
    violations = []
    if all(inv[k]["status"] == "ok" for k in ("chi", "ir", "chi_i")):
        chi, ir, chi_i = (inv[k]["value"] for k in ("chi", "ir", "chi_i"))
        if not (max(chi, ir) <= chi_i <= chi + ir - 1):
            violations.append(
                {
                    "check": "bounds:max(chi,ir)<=chi_i<=chi+ir-1",
                    "graph": idx,
                    "graph6": record["graph6"],
                    "detail": f"chi={chi} ir={ir} chi_i={chi_i}",
                }
            )
    return record, violations


def _conjecture_scan(idx: int, g: Graph, token, oracle_cap: int):
    record = {
        "id": idx,
        "n": g.n,
        "m": g.m,
        "graph6": to_graph6(g).decode("ascii"),
        "invariants": {},
        "timings": {},
    }
    violations = []
    t0 = time.perf_counter()
    if g.n > CONJECTURE_CAP:
        record["invariants"]["conjecture"] = {"status": "skipped(cap)", "value": None}
        record["timings"]["conjecture"] = round(time.perf_counter() - t0, 6)
        return record, violations
    chi, _ = chromatic_number(g, token)
    record["invariants"]["chi"] = {"status": "ok", "value": chi}
    verdict = None
    if irc_with_k_colors(g, chi, token) is not None:
        verdict = "holds"
    elif irc_colorability(g, token) is None:
        verdict = "not_colorable"
    else:
        verdict = "finding"
        entry = {
            "check": "conjecture:chi-color-committee-coloring-exists",
            "graph": idx,
            "graph6": record["graph6"],
            "detail": f"committee-colorable but no committee coloring with chi={chi} colors found",
        }
        if g.n <= oracle_cap:
            oracle_colorable = oracle_invariant(g, "irc_colorable", oracle_cap).value
            oracle_at_chi = irc_partition_exists(g, chi, oracle_cap)
            entry["oracle_confirmed"] = bool(oracle_colorable and not oracle_at_chi)
        else:
            entry["oracle_confirmed"] = None
        violations.append(entry)
    record["invariants"]["conjecture"] = {"status": "ok", "value": verdict}
    record["timings"]["conjecture"] = round(time.perf_counter() - t0, 6)
    return record, violations


def _characterization_scan(idx: int, g: Graph, token, oracle_cap: int):
    record = {
        "id": idx,
        "n": g.n,
        "m": g.m,
        "graph6": to_graph6(g).decode("ascii"),
        "invariants": {},
        "timings": {},
    }
    violations = []
    t0 = time.perf_counter()
    sides = bipartition(g)
    if g.n < 2:
        status = ("skipped", "trivial")
    elif sides is None:
        status = ("skipped", "not bipartite")
    elif is_star(g) is not None:
        status = ("skipped", "star")
    elif g.n > CAPS["chi_i"]:
        status = ("skipped(cap)", None)
    else:
        chi_i, _ = irredundance_chromatic_number(g, token)
        pair = find_anchor_edge(g) or find_near_twin_pair(g)
        family = bipartite_two_family(g)
        conds = {
            "chi_i_is_2": chi_i == 2,
            "pair_witness": pair is not None,
            "family": family.kind in ("linked_stars", "dominating_edge", "near_twin"),
        }
        record["invariants"]["chi_i"] = {"status": "ok", "value": chi_i}
        record["invariants"]["family"] = {"status": "ok", "value": family.kind}
        if len(set(conds.values())) > 1:
            violations.append(
                {
                    "check": "two-color-equivalence",
                    "graph": idx,
                    "graph6": record["graph6"],
                    "detail": json.dumps(conds, sort_keys=True),
                }
            )
            status = ("ok", "disagree")
        else:
            status = ("ok", "agree")
    record["invariants"]["characterization"] = {"status": status[0], "value": status[1]}
    record["timings"]["characterization"] = round(time.perf_counter() - t0, 6)
    return record, violations


_SCAN_MODES = {
    "chain": _chain_scan,
    "bounds": _bounds_scan,
    "conjecture": _conjecture_scan,
    "characterization": _characterization_scan,
}


def _worker_scan(payload):
    idx, g6, mode, oracle_cap = payload
    return _SCAN_MODES[mode](idx, parse_graph6(g6), None, oracle_cap)


def cmd_scan(args) -> int:
    try:
        graphs = _read_graphs(args.input, "graph6")
    except (FormatError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 64
    token = Deadline(args.budget_seconds) if args.budget_seconds else None
    scan_fn = _SCAN_MODES[args.mode]
    records = []
    violations = []
    if args.jobs > 1 and len(graphs) > 1 and token is None:
        payloads = [
            (i, to_graph6(g).decode("ascii"), args.mode, args.oracle_cap)
            for i, g in enumerate(graphs)
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for rec, viol in pool.map(_worker_scan, payloads):
                records.append(rec)
                violations.extend(viol)
    else:
        for idx, g in enumerate(graphs):
            try:
                rec, viol = scan_fn(idx, g, token, args.oracle_cap)
            except SearchCancelled:
                rec = {
                    "id": idx,
                    "n": g.n,
                    "m": g.m,
                    "graph6": to_graph6(g).decode("ascii"),
                    "invariants": {args.mode: {"status": "skipped(budget)", "value": None}},
                    "timings": {},
                }
                viol = []
            records.append(rec)
            violations.extend(viol)
    report = {
        "schema": SCHEMA,
        "command": "scan",
        "mode": args.mode,
        "graphs": records,
        "violations": violations,
        "summary": {
            "graphs": len(records),
            "violations": len(violations),
            "skipped": sum(
                1
                for rec in records
                for cell in rec["invariants"].values()
                if str(cell["status"]).startswith("skipped")
            ),
        },
    }
    _emit(report, args.json)
    return 2 if violations else 0


# --- verify command -------------------------------------------------------------


def _asset_graphs(name: str) -> list[Graph]:
    text = resource_files("irrcolor").joinpath(f"data/{name}").read_text(encoding="ascii")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def _claim(claims, name, ok, detail=""):
    claims.append({"claim": name, "status": "pass" if ok else "fail", "detail": detail})


def _skip(claims, name, detail):
    claims.append({"claim": name, "status": "skip", "detail": detail})


def _verify_full_degree(claims, token, oracle_cap):
    cases = [families.gen_complete(n) for n in range(2, 7)]
    cases += [families.gen_star(n) for n in range(3, 8)]
    cases += [families.gen_family_b(6, 4), families.gen_family_b(5, 2), families.gen_family_b(7, 3)]
    for inst in cases:
        g = inst.graph
        chi, _ = chromatic_number(g, token)
        chi_i, _ = irredundance_chromatic_number(g, token)
        _claim(
            claims,
            f"full-degree: chi_i == chi on {inst.source}",
            chi_i == chi,
            f"chi={chi} chi_i={chi_i}",
        )


def _verify_bounds(claims, token, oracle_cap):
    bad = []
    graphs = _asset_graphs("connected_le6.g6")
    for g in graphs:
        chi, _ = chromatic_number(g, token)
        irn, _ = ir_number(g, token)
        chi_i, _ = irredundance_chromatic_number(g, token)
        if not (max(chi, irn) <= chi_i <= chi + irn - 1):
            bad.append(to_graph6(g).decode("ascii"))
    _claim(
        claims,
        f"bounds: max(chi,ir) <= chi_i <= chi+ir-1 on {len(graphs)} connected graphs (n <= 6)",
        not bad,
        f"violations: {bad}" if bad else "",
    )


def _verify_chain(claims, token, oracle_cap):
    bad = []
    graphs = _asset_graphs("connected_le6.g6")
    for g in graphs:
        chi, _ = chromatic_number(g, token)
        chi_i, _ = irredundance_chromatic_number(g, token)
        chi_g, _ = gamma_chromatic_number(g, token)
        chi_d, _ = dominator_chromatic_number(g, token)
        seq = [chi, chi_i, chi_g, chi_d]
        if g.n >= 2:
            gd = global_dominator_chromatic_number(g, token)
            if gd is not None:
                seq.append(gd[0])
        if any(a > b for a, b in zip(seq, seq[1:])):
            bad.append((to_graph6(g).decode("ascii"), seq))
    _claim(
        claims,
        f"chain: chi <= chi_i <= chi_gamma <= chi_d <= chi_gd on {len(graphs)} connected graphs (n <= 6)",
        not bad,
        f"violations: {bad}" if bad else "",
    )


def _verify_dominating_irredundant(claims, token, oracle_cap):
    graphs = _asset_graphs("connected_le6.g6")
    bad = []
    for g in graphs:
        irn, _ = ir_number(g, token)
        gam, _ = gamma_number(g, token)
        if irn > gam:
            bad.append((to_graph6(g).decode("ascii"), "ir>gamma"))
        for d in minimal_dominating_sets(g):
            if not is_maximal_irredundant(g, d):
                bad.append((to_graph6(g).decode("ascii"), f"mds mask {d}"))
    _claim(
        claims,
        f"every minimal dominating set is maximal irredundant, and ir <= gamma, on {len(graphs)} graphs",
        not bad,
        f"violations: {bad}" if bad else "",
    )


def _verify_family_a(claims, token, oracle_cap):
    for n, k in ((6, 3), (8, 3), (8, 4)):
        inst = families.gen_family_a(n, k)
        g = inst.graph
        chi, _ = chromatic_number(g, token)
        irn, _ = ir_number(g, token)
        chi_i, _ = irredundance_chromatic_number(g, token)
        ok = chi == irn == chi_i == k
        detail = f"chi={chi} ir={irn} chi_i={chi_i} claim={k}"
        if ok and g.n <= oracle_cap:
            ok = (
                oracle_invariant(g, "chi", oracle_cap).value == k
                and oracle_invariant(g, "ir", oracle_cap).value == k
                and oracle_invariant(g, "chi_i", oracle_cap).value == k
            )
            detail += " oracle=confirmed" if ok else " oracle=DISAGREES"
        _claim(claims, f"family A({n},{k}): chi = ir = chi_i = {k}", ok, detail)


def _verify_family_z(claims, token, oracle_cap):
    inst = families.gen_family_z(3, 1)
    g = inst.graph
    chi, _ = chromatic_number(g, token)
    irn, _ = ir_number(g, token)
    chi_i, _ = irredundance_chromatic_number(g, token)
    ok = (chi, irn, chi_i) == (3, 1, 3)
    if ok and g.n <= oracle_cap:
        ok = oracle_invariant(g, "chi_i", oracle_cap).value == 3
    _claim(claims, "family Z(3,1): chi=3 ir=1 chi_i=3", ok, f"chi={chi} ir={irn} chi_i={chi_i}")

    inst = families.gen_family_z(3, 2)
    g = inst.graph
    _claim(claims, "family Z(3,2): 14 vertices", g.n == 14, f"n={g.n}")
    chi, _ = chromatic_number(g, token)
    _claim(claims, "family Z(3,2): chi = 3", chi == 3, f"chi={chi}")
    witness = 0
    for i in (1, 2):
        witness |= 1 << inst.label_index(f"v{i}")
    _claim(
        claims,
        "family Z(3,2): ir = 2 (size-capped verify mode)",
        ir_verify(g, 2, witness, token),
        "witness = {v1, v2}",
    )
    chi_i, _ = irredundance_chromatic_number(g, token)
    _claim(claims, "family Z(3,2): chi_i = 4", chi_i == 4, f"chi_i={chi_i}")
    pend = {i: 0 for i in (1, 2)}
    vs = {i: inst.label_index(f"v{i}") for i in (1, 2)}
    for i in (1, 2):
        for j in range(1, 4):
            pend[i] |= 1 << inst.label_index(f"p{i}.{j}")
    bad = 0
    for s in maximal_irredundant_sets(g):
        for i in (1, 2):
            if not (s >> vs[i] & 1) and (s & pend[i]) != pend[i]:
                bad += 1
                break
    _claim(
        claims,
        "family Z(3,2): every maximal irredundant set holds v_i or all its pendants, per copy",
        bad == 0,
        f"violations={bad}",
    )


def _verify_realizable(claims, token, oracle_cap):
    for n, k in ((6, 4), (5, 2), (6, 6), (8, 3)):
        inst = families.gen_family_b(n, k)
        g = inst.graph
        chi_i, _ = irredundance_chromatic_number(g, token)
        ok = chi_i == k
        detail = f"chi_i={chi_i} claim={k}"
        if ok and g.n <= oracle_cap:
            ok = oracle_invariant(g, "chi_i", oracle_cap).value == k
            detail += " oracle=confirmed" if ok else " oracle=DISAGREES"
        _claim(claims, f"family B({n},{k}): chi_i = {k}", ok, detail)


def _verify_two_color(claims, token, oracle_cap):
    graphs = _asset_graphs("bipartite_connected_le7.g6")
    tested = 0
    bad = []
    for g in graphs:
        if g.n < 2 or is_star(g) is not None:
            continue
        tested += 1
        chi_i, _ = irredundance_chromatic_number(g, token)
        pair = find_anchor_edge(g) or find_near_twin_pair(g)
        fam = bipartite_two_family(g)
        flags = {
            chi_i == 2,
            pair is not None,
            fam.kind in ("linked_stars", "dominating_edge", "near_twin"),
        }
        if len(flags) > 1:
            bad.append(to_graph6(g).decode("ascii"))
    _claim(
        claims,
        f"two-color equivalence (chi_i=2 <=> pair witness <=> family member) on {tested} bipartite non-star graphs (n <= 7)",
        not bad,
        f"violations: {bad}" if bad else "",
    )


def _prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return from_edge_list(n, edges)


def _verify_min_degree(claims, token, oracle_cap):
    checked = 0
    bad = 0
    for n in range(2, 8):
        if n == 2:
            trees = [from_edge_list(2, [(0, 1)])]
        else:
            trees = (_prufer_tree(seq, n) for seq in product(range(n), repeat=n - 2))
        for g in trees:
            checked += 1
            if irc_colorability(g, token) is not None:
                bad += 1
    rng = random.Random(88)
    for _ in range(4096):
        seq = tuple(rng.randrange(8) for _ in range(6))
        checked += 1
        if irc_colorability(_prufer_tree(seq, 8), token) is not None:
            bad += 1
    _claim(
        claims,
        f"trees are never committee-colorable ({checked} labeled trees, n <= 8)",
        bad == 0,
        f"violations={bad}",
    )


def _verify_cut_vertex(claims, token, oracle_cap):
    inst = families.gen_cut_vertex(3)
    g = inst.graph
    _claim(claims, "cut-vertex family G(3): 31 vertices", g.n == 31, f"n={g.n}")
    prof = connectivity_profile(g)
    hub = 30
    ok = prof.connected and prof.cut_vertices == 1 << hub and not prof.bridges
    _claim(claims, "cut-vertex family G(3): hub is the unique cut vertex, no bridges", ok,
           f"cut_vertices={prof.cut_vertices} bridges={prof.bridges}")
    verdict = is_irc_coloring(g, inst.coloring, token)
    _claim(claims, "cut-vertex family G(3): 3-class coloring passes the committee check",
           verdict.is_irc, "")


def _verify_bridge(claims, token, oracle_cap):
    inst = families.gen_bridge(3, 3)
    g = inst.graph
    prof = connectivity_profile(g)
    hub1, hub2 = 30, 61
    ok = prof.connected and (hub1, hub2) in prof.bridges
    _claim(claims, "bridge family G(3,3): the hub-hub edge is a bridge", ok, f"bridges={prof.bridges}")
    verdict = is_irc_coloring(g, inst.coloring, token)
    _claim(claims, "bridge family G(3,3): 4-class coloring passes the committee check",
           verdict.is_irc, "")


def _verify_max_colors(claims, token, oracle_cap):
    inst = families.gen_tilde(3)
    g = inst.graph
    _claim(claims, "clique-core family tilde(3): 27 vertices", g.n == 27, f"n={g.n}")
    verdict = is_irc_coloring(g, inst.coloring, token)
    _claim(
        claims,
        "clique-core family tilde(3): attached 3-coloring passes, certifying max committee colors >= 3",
        verdict.is_irc and inst.coloring.k == 3,
        "",
    )


def _verify_even_bipartite(claims, token, oracle_cap):
    inst = families.gen_star_of_cycles(4)
    g = inst.graph
    _claim(claims, "cycle-core family gstar(4): bipartite", bipartition(g) is not None, "")
    verdict = is_irc_coloring(g, inst.coloring, token)
    _claim(
        claims,
        "cycle-core family gstar(4): attached 4-coloring passes, certifying max committee colors >= 4",
        verdict.is_irc and inst.coloring.k == 4,
        "",
    )


def _verify_epn_family(claims, token, oracle_cap):
    inst = families.fixture("epn_sample")
    g = inst.graph
    star = families.epn_rich_vertex(g)
    _claim(claims, "epn fixture: hub vertex with mutual double external privates found",
           star == 0, f"found={star}")
    verdict = is_irc_coloring(g, inst.coloring, token)
    _claim(claims, "epn fixture: 3-class coloring passes the committee check", verdict.is_irc, "")


def _verify_dominator_gamma(claims, token, oracle_cap):
    # the implication is stated for graphs of minimum degree at least 2
    graphs = [g for g in _asset_graphs("connected_le6.g6") if g.min_degree() >= 2]
    hits = 0
    bad = []
    for g in graphs:
        chi_d, _ = dominator_chromatic_number(g, token)
        gam, _ = gamma_number(g, token)
        if chi_d != gam:
            continue
        hits += 1
        col = irc_colorability(g, token)
        irc_k = irc_chromatic_number(g, token)
        if col is None or irc_k is None or irc_k[0] < gam:
            bad.append(to_graph6(g).decode("ascii"))
    _claim(
        claims,
        f"chi_d = gamma implies committee-colorable with max colors >= gamma ({hits} matching graphs, min degree >= 2, n <= 6)",
        not bad,
        f"violations: {bad}" if bad else "",
    )


VERIFY_SCOPES = {
    "full-degree": _verify_full_degree,
    "bounds": _verify_bounds,
    "chain": _verify_chain,
    "dominating-irredundant": _verify_dominating_irredundant,
    "family-a": _verify_family_a,
    "family-z": _verify_family_z,
    "realizable": _verify_realizable,
    "two-color": _verify_two_color,
    "min-degree": _verify_min_degree,
    "cut-vertex": _verify_cut_vertex,
    "bridge": _verify_bridge,
    "max-colors": _verify_max_colors,
    "even-bipartite": _verify_even_bipartite,
    "epn-family": _verify_epn_family,
    "dominator-gamma": _verify_dominator_gamma,
}


def cmd_verify(args) -> int:
    if args.scope != "all" and args.scope not in VERIFY_SCOPES:
        print(f"parameter error: unknown scope {args.scope!r}", file=sys.stderr)
        return 65
    token = Deadline(args.budget_seconds) if args.budget_seconds else None
    scopes = list(VERIFY_SCOPES) if args.scope == "all" else [args.scope]
    claims: list[dict] = []
    for scope in scopes:
        try:
            VERIFY_SCOPES[scope](claims, token, args.oracle_cap)
        except SearchCancelled:
            _skip(claims, f"{scope} (remaining checks)", "budget exhausted")
            break
        except SizeCapError as exc:
            _skip(claims, scope, str(exc))
    failures = sum(1 for c in claims if c["status"] == "fail")
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "scope": args.scope,
        "claims": claims,
        "violations": [
            {"check": c["claim"], "detail": c["detail"]}
            for c in claims
            if c["status"] == "fail"
        ],
        "summary": {
            "claims": len(claims),
            "failed": failures,
            "skipped": sum(1 for c in claims if c["status"] == "skip"),
        },
    }
    _emit(report, args.json)
    return 0 if failures == 0 else 2


# --- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irrcolor",
        description="Exact irredundance-flavored coloring invariants for small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="compute invariants for input graphs")
    p_inv.add_argument("input", nargs="?", default=None, help="file path or - for stdin")
    p_inv.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_inv.add_argument("--invariants", default="", help="comma list, default chi,ir,gamma,chi_i,chi_gamma,irc_colorable")
    p_inv.add_argument("--json", action="store_true")
    p_inv.add_argument("--witnesses", action="store_true", help="include witness colorings/sets in the report")
    p_inv.add_argument("--jobs", type=int, default=1)
    p_inv.add_argument("--budget-seconds", type=float, default=0.0)
    p_inv.set_defaults(fn=cmd_invariants)

    p_gen = sub.add_parser("gen", help="generate a family instance plus claims sidecar")
    p_gen.add_argument("family", help="family name, e.g. A, Z, B, tilde, cycle, fixture")
    p_gen.add_argument("params", nargs="*", help="family parameters")
    p_gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_gen.add_argument("--out", default=None, help="output path; sidecar goes to PATH.json")
    p_gen.set_defaults(fn=cmd_gen)

    p_ver = sub.add_parser("verify", help="run the data-driven verification suites")
    p_ver.add_argument("scope", help="one of: all, " + ", ".join(VERIFY_SCOPES))
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--oracle-cap", type=int, default=DEFAULT_SIZE_CAP)
    p_ver.add_argument("--budget-seconds", type=float, default=0.0)
    p_ver.set_defaults(fn=cmd_verify)

    p_scan = sub.add_parser("scan", help="scan a graph6 stream for violations")
    p_scan.add_argument("mode", choices=tuple(_SCAN_MODES))
    p_scan.add_argument("input", nargs="?", default=None, help="file path or - for stdin")
    p_scan.add_argument("--json", action="store_true")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--oracle-cap", type=int, default=DEFAULT_SIZE_CAP)
    p_scan.add_argument("--budget-seconds", type=float, default=0.0)
    p_scan.set_defaults(fn=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
