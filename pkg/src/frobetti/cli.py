"""Batch entry point: problem files, command dispatch, reports, disk cache.

Problem files are line-oriented (``key: value``, ``#`` comments).  Reports
are JSON envelopes with canonical key order, so identical inputs produce
byte-identical result payloads; timing is reported but excluded from the
determinism contract.  The cache is content-addressed by a digest of the
canonical problem text, written atomically, and guarded by a versioned
header; corrupt entries trigger a warning and a recomputation.
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from fractions import Fraction

from . import __version__
from .asymptotics import beta_sequence, hk_sequence, mu_sequence, verify_laws
from .errors import (
    CacheCorrupt,
    FrobettiError,
    InconsistentBlocks,
    InfiniteLength,
    MissingMultiplicities,
    NoParameterFound,
    NotHomogeneous,
    NotMonomial,
    NotPrimary,
    NotPrime,
    Overflow,
    ParseError,
    ResourceBound,
    UnitIdeal,
    UnknownVariable,
    WrongDimension,
    ZeroDivisorQuery,
    ZeroModule,
)
from .groebner import INFINITE, cokernel_presentation, quotient_module
from .onedim import diagnose_onedim, minimal_primes_monomial, syzygy_length_survey
from .resolution import resolve
from .ring import QuotientRing, make_ring

CACHE_HEADER = "FBCACHE 1"
SCHEMA_FILE = os.path.join(os.path.dirname(__file__), "data", "report_schema.json")

PARSE_EXIT = 2
INAPPLICABLE_EXIT = 3
RESOURCE_EXIT = 4

_PARSE_ERRORS = (ParseError, NotHomogeneous, NotPrime, UnitIdeal, UnknownVariable, InconsistentBlocks)
_INAPPLICABLE_ERRORS = (
    WrongDimension,
    InfiniteLength,
    NotPrimary,
    MissingMultiplicities,
    NoParameterFound,
    ZeroModule,
    ZeroDivisorQuery,
    NotMonomial,
)
_RESOURCE_ERRORS = (ResourceBound, Overflow)


class ProblemFile:
    """Parsed problem description: ring block, module block, prime data."""

    __slots__ = ("p", "variables", "ideal_gens", "module_kind", "module_data", "rowdegs", "minprimes", "localmult")

    def __init__(self, p, variables, ideal_gens, module_kind, module_data, rowdegs, minprimes, localmult):
        self.p = p
        self.variables = variables
        self.ideal_gens = ideal_gens
        self.module_kind = module_kind
        self.module_data = module_data
        self.rowdegs = rowdegs
        self.minprimes = minprimes
        self.localmult = localmult


def _split_top_level(text, sep):
    """Split on sep outside parentheses/brackets."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail or parts:
        parts.append(tail)
    return [p for p in parts if p]


def parse_problem(text):
    """Parse problem text; errors carry the offending line number."""
    data = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", line=lineno)
        key, value = line.split(":", 1)
        key = key.strip().lower()
        value = value.strip()
        if key in data:
            raise ParseError("duplicate block %r" % key, line=lineno)
        if key not in ("char", "vars", "ideal", "module", "rowdegs", "minprimes", "localmult"):
            raise ParseError("unknown block %r" % key, line=lineno)
        data[key] = (value, lineno)

    if "char" not in data:
        raise ParseError("missing 'char' block")
    if "vars" not in data:
        raise ParseError("missing 'vars' block")
    try:
        p = int(data["char"][0])
    except ValueError:
        raise ParseError("characteristic must be an integer", line=data["char"][1])
    variables = [v.strip() for v in data["vars"][0].split(",") if v.strip()]
    ideal_gens = []
    if "ideal" in data:
        ideal_gens = _split_top_level(data["ideal"][0], ",")

    module_kind = None
    module_data = None
    if "module" in data:
        value, lineno = data["module"]
        if value.startswith("quotient"):
            module_kind = "quotient"
            module_data = _split_top_level(value[len("quotient"):].strip(), ",")
        elif value.startswith("coker"):
            module_kind = "coker"
            body = value[len("coker"):].strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ParseError("coker matrix must be bracketed", line=lineno)
            rows = _split_top_level(body[1:-1], ";")
            module_data = [_split_top_level(r, ",") for r in rows]
            widths = {len(r) for r in module_data}
            if len(widths) > 1:
                raise ParseError("ragged coker matrix", line=lineno)
        else:
            raise ParseError("module must be 'quotient ...' or 'coker [...]'", line=lineno)

    rowdegs = None
    if "rowdegs" in data:
        value, lineno = data["rowdegs"]
        try:
            rowdegs = [int(v) for v in value.split(",")]
        except ValueError:
            raise ParseError("rowdegs must be integers", line=lineno)

    minprimes = None
    if "minprimes" in data:
        value, lineno = data["minprimes"]
        minprimes = []
        for chunk in _split_top_level(value, ";"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ParseError("each minimal prime must be parenthesized", line=lineno)
            minprimes.append(_split_top_level(chunk[1:-1], ","))

    localmult = None
    if "localmult" in data:
        value, lineno = data["localmult"]
        try:
            localmult = [int(v) for v in value.split(",")]
        except ValueError:
            raise ParseError("localmult must be integers", line=lineno)

    if localmult is not None and minprimes is not None and len(localmult) != len(minprimes):
        raise InconsistentBlocks(
            "localmult has %d entries but minprimes has %d" % (len(localmult), len(minprimes))
        )
    if localmult is not None and minprimes is None:
        raise InconsistentBlocks("localmult given without minprimes")

    return ProblemFile(p, variables, ideal_gens, module_kind, module_data, rowdegs, minprimes, localmult)


def canonical_problem_text(problem, ring):
    """Deterministic re-serialization used for the content digest."""
    lines = ["char: %d" % problem.p, "vars: %s" % ", ".join(problem.variables)]
    lines.append("ideal: %s" % ", ".join(str(ring.poly(g)) for g in problem.ideal_gens))
    if problem.module_kind == "quotient":
        lines.append("module: quotient %s" % ", ".join(str(ring.poly(g)) for g in problem.module_data))
    elif problem.module_kind == "coker":
        rows = ["%s" % ", ".join(str(ring.poly(e)) for e in row) for row in problem.module_data]
        lines.append("module: coker [%s]" % "; ".join(rows))
    if problem.rowdegs is not None:
        lines.append("rowdegs: %s" % ", ".join(str(d) for d in problem.rowdegs))
    if problem.minprimes is not None:
        chunks = ["(%s)" % ", ".join(str(ring.poly(g)) for g in gens) for gens in problem.minprimes]
        lines.append("minprimes: %s" % "; ".join(chunks))
    if problem.localmult is not None:
        lines.append("localmult: %s" % ", ".join(str(m) for m in problem.localmult))
    return "\n".join(lines) + "\n"


def problem_digest(problem, ring):
    return hashlib.sha256(canonical_problem_text(problem, ring).encode()).hexdigest()


def build_ring(problem, cache_dir=None, warnings=None):
    """Construct the ring, honoring a cached Groebner basis when available."""
    if cache_dir:
        plain = make_ring(problem.p, problem.variables, [])
        key = hashlib.sha256(
            ("%d|%s|%s" % (problem.p, ",".join(problem.variables), ",".join(problem.ideal_gens))).encode()
        ).hexdigest()
        try:
            entry = cache_get(cache_dir, key, "gb")
        except CacheCorrupt as exc:
            if warnings is not None:
                warnings.append("cache: %s; recomputing" % exc)
            entry = None
        if entry is not None:
            gens = [plain.poly(g) for g in problem.ideal_gens]
            gb = [plain.poly(g) for g in entry["basis"]]
            ring = QuotientRing(problem.p, tuple(problem.variables), gens, (), entry["dim"])
            ring.ideal_groebner = tuple(ring.convert(g) for g in gb)
            ring._gb_leads = tuple((g.leading()[0], g.terms) for g in ring.ideal_groebner)
            return ring
        ring = make_ring(problem.p, problem.variables, problem.ideal_gens)
        cache_put(
            cache_dir,
            key,
            "gb",
            {"basis": [str(g) for g in ring.ideal_groebner], "dim": ring.dim},
        )
        return ring
    return make_ring(problem.p, problem.variables, problem.ideal_gens)


def build_module(problem, ring):
    """The module block, defaulting to the residue field when absent."""
    if problem.module_kind is None:
        return quotient_module(ring, list(ring.variables))
    if problem.module_kind == "quotient":
        return quotient_module(ring, problem.module_data)
    rows = problem.module_data
    rank = len(rows)
    width = len(rows[0]) if rows else 0
    columns = []
    for c in range(width):
        columns.append([ring.poly(rows[r][c]) for r in range(rank)])
    return cokernel_presentation(ring, columns, rank, problem.rowdegs)


# -- cache ------------------------------------------------------------------


def _cache_path(cache_dir, digest, kind):
    return os.path.join(cache_dir, digest, "%s.dat" % kind)


def cache_put(cache_dir, digest, kind, payload):
    """Atomic content-addressed write: temp file then rename."""
    path = _cache_path(cache_dir, digest, kind)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    body = CACHE_HEADER + "\n" + json.dumps(payload, sort_keys=True) + "\n"
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_get(cache_dir, digest, kind):
    """Payload dict, or None when absent; raises CacheCorrupt on bad entries."""
    path = _cache_path(cache_dir, digest, kind)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r") as handle:
            content = handle.read()
    except OSError as exc:
        raise CacheCorrupt(str(exc))
    header, _, body = content.partition("\n")
    if header != CACHE_HEADER:
        raise CacheCorrupt("bad cache header in %s" % path)
    try:
        return json.loads(body)
    except ValueError as exc:
        raise CacheCorrupt("undecodable cache payload in %s: %s" % (path, exc))


# -- payload helpers -----------------------------------------------------------


def _num(value):
    if value is INFINITE:
        return "Infinity"
    if isinstance(value, Fraction):
        return float(value)
    return value


def _frac_str(value):
    if value is None:
        return None
    return str(value)


def _sequence_payload(seq):
    return {
        "kind": seq.kind,
        "index": seq.index,
        "d": seq.d,
        "levels": [[lv.e, lv.q, lv.raw, float(lv.normalized)] for lv in seq.levels],
        "normalized_exact": [_frac_str(lv.normalized) for lv in seq.levels],
        "estimate": None if seq.estimate is None else float(seq.estimate),
        "estimate_exact": _frac_str(seq.estimate),
        "stabilized": seq.stabilized,
    }


def _resolution_payload(data, steps):
    return {
        "betti": data["ranks"][: steps + 1],
        "row_degrees": data["row_degrees"][: steps + 1],
        "matrices": data["matrices"][:steps],
        "minimal": True,
        "steps": steps,
    }


def _serialize_resolution(res):
    return {
        "steps": res.length,
        "ranks": list(res.ranks),
        "row_degrees": [list(d) for d in res.row_degrees],
        "matrices": [
            [[str(entry) for entry in col] for col in res.matrix(j)]
            for j in range(1, res.length + 1)
        ],
    }


def _e_range(flags):
    emax = flags.get("emax") or 3
    return range(1, emax + 1)


def run(command, problem, flags=None):
    """Dispatch a command; returns the ReportEnvelope as a dict."""
    flags = dict(flags or {})
    warnings = []
    started = time.perf_counter()
    cache_dir = flags.get("cache_dir") or os.environ.get("FB_CACHE_DIR")
    cache_state = "off" if not cache_dir else "miss"

    ring = build_ring(problem, cache_dir, warnings)
    module = build_module(problem, ring)
    digest = problem_digest(problem, ring)
    threads = flags.get("threads") or 1

    if command == "resolve":
        steps = flags.get("steps") or 3
        data = None
        if cache_dir:
            try:
                entry = cache_get(cache_dir, digest, "resolution")
            except CacheCorrupt as exc:
                warnings.append("cache: %s; recomputing" % exc)
                entry = None
            if entry is not None and entry.get("steps", -1) >= steps:
                data = entry
                cache_state = "hit"
        if data is None:
            res = resolve(module, steps)
            data = _serialize_resolution(res)
            if cache_dir:
                cache_put(cache_dir, digest, "resolution", data)
        payload = _resolution_payload(data, steps)
    elif command == "hk":
        if problem.module_kind not in (None, "quotient"):
            raise NotPrimary("hk needs a quotient module block (the ideal J)")
        gens = list(ring.variables) if problem.module_kind is None else problem.module_data
        seq = hk_sequence(ring, gens, _e_range(flags), threads=threads)
        payload = _sequence_payload(seq)
    elif command == "beta":
        idx = flags.get("idx") or 0
        if flags.get("exact"):
            from .onedim import decide_beta_vanishing

            vanishes = decide_beta_vanishing(module, idx)
            payload = {"index": idx, "vanishes": vanishes, "rule": "image-in-h0"}
        else:
            seq = beta_sequence(module, idx, _e_range(flags), threads=threads)
            payload = _sequence_payload(seq)
    elif command == "mu":
        idx = flags.get("idx") or 0
        seq = mu_sequence(module, idx, _e_range(flags), threads=threads)
        payload = _sequence_payload(seq)
    elif command == "diagnose1":
        idx = flags.get("idx") or 0
        primes = problem.minprimes
        if primes is None:
            primes = minimal_primes_monomial(problem.ideal_gens, ring)
        emax = flags.get("emax") or 3
        diag = diagnose_onedim(module, idx, primes, range(0, emax), range(1, emax + 1))
        payload = {
            "index": idx,
            "entries_in_h0": diag.condition_entries_in_h0,
            "tor_primes": [
                {
                    "prime": [str(ring.poly(g)) for g in rep.prime],
                    "values": {str(e): v for e, v in sorted(rep.values.items())},
                    "all_zero": rep.all_zero,
                }
                for rep in diag.condition_tor_primes
            ],
            "beta": _sequence_payload(diag.beta_estimate),
            "consistent": diag.consistent,
            "finite_pd": {
                "finite": diag.finite_pd.finite,
                "rule": diag.finite_pd.rule,
                "certificate": diag.finite_pd.certificate,
            },
        }
    elif command == "syz":
        i_max = flags.get("idx") or flags.get("steps") or 3
        survey = syzygy_length_survey(module, i_max)
        payload = {
            "ring_dim": survey.ring_dim,
            "module_length": _num(survey.module_length),
            "rows": [
                {"i": r.index, "betti": r.betti, "dim": r.dim, "length": _num(r.length)}
                for r in survey.rows
            ],
            "checks": [
                {
                    "law": c.detail.get("law"),
                    "applicable": c.applicable,
                    "passed": c.passed,
                    "reason": c.reason,
                }
                for c in survey.checks
            ],
            "passed": survey.passed,
        }
    elif command == "verify":
        primes = None
        if problem.minprimes is not None:
            if problem.localmult is None:
                raise MissingMultiplicities("verify needs localmult alongside minprimes")
            primes = list(zip(problem.minprimes, problem.localmult))
        report = verify_laws(module, primes, _e_range(flags), threads=threads)
        payload = {
            "passed": report.passed,
            "laws": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "applicable": c.applicable,
                    "detail": {k: _jsonable(v) for k, v in sorted(c.detail.items())},
                }
                for c in report.checks
            ],
        }
    else:
        raise ParseError("unknown command %r" % command)

    elapsed = time.perf_counter() - started
    return {
        "version": __version__,
        "command": command,
        "input_digest": digest,
        "ring": {
            "char": ring.p,
            "vars": list(ring.variables),
            "ideal": [str(g) for g in ring.ideal_gens],
        },
        "result": payload,
        "timing": {"elapsed_s": round(elapsed, 6), "cache": cache_state},
        "warnings": warnings,
    }


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if value is INFINITE:
        return "Infinity"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in sorted(value.items())}
    return value


def result_bytes(envelope):
    """Canonical bytes of the determinism-relevant part of an envelope."""
    return json.dumps(envelope["result"], sort_keys=True, separators=(",", ":")).encode()


def write_csv(envelope, path):
    payload = envelope["result"]
    if "levels" not in payload:
        raise FrobettiError("csv output is only defined for sequence payloads")
    with open(path, "w") as handle:
        handle.write("e,q,raw,normalized\n")
        for e, q, raw, normalized in payload["levels"]:
            handle.write("%d,%d,%d,%r\n" % (e, q, raw, normalized))


def load_schema():
    with open(SCHEMA_FILE, "r") as handle:
        return json.load(handle)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="fb",
        description="Exact Frobenius Betti, Hilbert-Kunz, and syzygy computations over F_p quotient rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("resolve", "hk", "beta", "mu", "diagnose1", "syz", "verify"):
        cmd = sub.add_parser(name)
        cmd.add_argument("-i", "--input", required=True, help="problem file (.fbr)")
        cmd.add_argument("--idx", type=int, default=None)
        cmd.add_argument("--emax", type=int, default=None)
        cmd.add_argument("--steps", type=int, default=None)
        cmd.add_argument("--exact", action="store_true")
        cmd.add_argument("--degree-bound", type=int, default=None, dest="degree_bound")
        cmd.add_argument("--threads", type=int, default=1)
        cmd.add_argument("--cache-dir", default=None, dest="cache_dir")
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--json", default=None, dest="json_path")
        cmd.add_argument("--csv", default=None, dest="csv_path")
    args = parser.parse_args(argv)

    try:
        with open(args.input, "r") as handle:
            text = handle.read()
        problem = parse_problem(text)
        flags = {
            "idx": args.idx,
            "emax": args.emax,
            "steps": args.steps,
            "exact": args.exact,
            "degree_bound": args.degree_bound,
            "threads": args.threads,
            "cache_dir": args.cache_dir,
            "seed": args.seed,
        }
        envelope = run(args.command, problem, flags)
    except _PARSE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_EXIT
    except _INAPPLICABLE_ERRORS as exc:
        print("inapplicable: %s" % exc, file=sys.stderr)
        return INAPPLICABLE_EXIT
    except _RESOURCE_ERRORS as exc:
        print("resource bound: %s" % exc, file=sys.stderr)
        return RESOURCE_EXIT
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_EXIT

    text = json.dumps(envelope, sort_keys=True, indent=2)
    if args.json_path:
        with open(args.json_path, "w") as handle:
            handle.write(text + "\n")
    if args.csv_path:
        write_csv(envelope, args.csv_path)
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
