"""Run several distance computations on one code and cross-check them."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field as dc_field

from .boolean import gr_dims, gr_jump_indices
from .code import DEFAULT_ENUM_BUDGET, LinearCode, min_distance_brute, new_code
from .errors import MindistError, UnsupportedField
from .exact import Field, is_prime
from .graded import ProductIdeals, alpha_m_fitt, distance_via_afold, dual_forms, tutte_via_berget
from .inverse import RATIONALS, apolar_profile, chow_form, working_code
from .matroid import distance_from_tutte, same_matroid, tutte
from .orlik_terao import alpha_iot, ot_generators, strand_length

EXACT_METHODS = ("brute", "tutte", "afold", "fitt", "berget", "binary")
BOUND_METHODS = ("inverse", "ot")
ALL_METHODS = EXACT_METHODS + BOUND_METHODS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_BOUND_VIOLATED = 3

_REDUCTION_PRIME_LIMIT = 200


@dataclass
class MethodResult:
    name: str
    status: str
    d: int | None = None
    extra: dict = dc_field(default_factory=dict)


@dataclass
class BoundResult:
    name: str
    value: int | None
    satisfied: bool | None
    status: str = "ok"
    extra: dict = dc_field(default_factory=dict)


@dataclass
class Report:
    code: dict
    methods: list
    bounds: list
    verdict: str
    timings_ms: dict

    def to_dict(self) -> dict:
        return {
            "code": dict(self.code),
            "methods": [asdict(m) for m in self.methods],
            "bounds": [asdict(b) for b in self.bounds],
            "verdict": self.verdict,
            "timings_ms": dict(self.timings_ms),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            code=dict(data["code"]),
            methods=[MethodResult(**m) for m in data["methods"]],
            bounds=[BoundResult(**b) for b in data["bounds"]],
            verdict=data["verdict"],
            timings_ms=dict(data["timings_ms"]),
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def agreed_distance(self) -> int | None:
        ds = {m.d for m in self.methods if m.status == "ok" and m.d is not None}
        return ds.pop() if len(ds) == 1 else None

    @property
    def exit_code(self) -> int:
        return {
            "ok": EXIT_OK,
            "disagreement": EXIT_DISAGREEMENT,
            "bound-violated": EXIT_BOUND_VIOLATED,
        }[self.verdict]

    def format_text(self) -> str:
        c = self.code
        lines = [f"code: n={c['n']} k={c['k']} field={c['field']}"]
        for m in self.methods:
            d = "-" if m.d is None else m.d
            note = "" if m.status == "ok" else f"  [{m.status}]"
            extras = ", ".join(f"{k}={_short(v)}" for k, v in m.extra.items())
            lines.append(f"  {m.name:<8} d={d}{note}" + (f"  ({extras})" if extras else ""))
        for b in self.bounds:
            v = "-" if b.value is None else b.value
            s = {True: "holds", False: "VIOLATED", None: "n/a"}[b.satisfied]
            note = "" if b.status == "ok" else f"  [{b.status}]"
            extras = ", ".join(f"{k}={_short(v)}" for k, v in b.extra.items())
            lines.append(f"  bound {b.name:<8} {v} {s}{note}" + (f"  ({extras})" if extras else ""))
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _short(v) -> str:
    if isinstance(v, list):
        return "[" + " ".join(_short(x) for x in v) + "]"
    return str(v)


def finite_shadow(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> LinearCode | None:
    """A reduction mod p with the same column matroid, small enough to enumerate.

    Minimum distance and the projective count of minimum-weight words depend
    only on the matroid, so enumeration over the shadow answers for the code.
    """
    if code.field.is_finite:
        return code if code.field.p**code.k <= budget else None
    for p in range(2, _REDUCTION_PRIME_LIMIT):
        if not is_prime(p) or p**code.k > budget:
            continue
        try:
            rows = [[Field(p)(x) for x in row] for row in code.G.rows]
            shadow = new_code(Field(p), rows, allow_zero_columns=True)
        except (ZeroDivisionError, ValueError):
            continue
        if same_matroid(code, shadow):
            return shadow
    return None


def _brute(code, budget):
    shadow = finite_shadow(code, budget)
    if shadow is None:
        raise UnsupportedField("no enumerable reduction within budget")
    r = min_distance_brute(shadow, budget)
    extra = {"projective_count": r.projective_count}
    if shadow is code:
        extra["weight_distribution"] = [[w, c] for w, c in sorted(r.weight_distribution.items())]
    else:
        extra["enumerated_over"] = shadow.field.name
    return r.d, extra


def _tutte(code, budget):
    T = tutte(code)
    r = distance_from_tutte(T, code.n, code.k)
    return r.d, {"projective_count": r.projective_count, "polynomial": str(T)}


def _afold(code, budget, ideals):
    return distance_via_afold(code, ideals), {}


def _fitt(code, budget, ideals):
    a = alpha_m_fitt(code, ideals)
    return a - 1, {"alpha_m_fitt": a}


def _berget(code, budget):
    T = tutte_via_berget(code)
    return distance_from_tutte(T, code.n, code.k).d, {}


def _binary(code, budget):
    if code.field.p != 2:
        raise UnsupportedField("the Boolean filtration needs GF(2)")
    dims = gr_dims(code)
    top, literal = gr_jump_indices(code, dims)
    return code.n - top, {"gr_dims": list(dims.dims), "top_jump": top, "literal_jump": literal}


def _inverse_bound(code, d):
    work = working_code(code, RATIONALS)
    prof = apolar_profile(chow_form(dual_forms(work)))
    value = prof.alpha - 1
    extra = {"field": work.field.name, "alpha_ann": prof.alpha, "hilbert": list(prof.hf)}
    if work is not code and not same_matroid(code, work):
        # the signed lift changed the matroid; the bound speaks about the lift
        d = distance_via_afold(work)
        extra["lifted_d"] = d
    return value, d, extra


def _ot_bound(code, d, prime):
    I = ot_generators(code)
    alpha = alpha_iot(code, I)
    extra = {"alpha_iot": alpha}
    if alpha >= 3:
        extra["claim"] = "mds"
        return code.n - 2, extra, (None if d is None else d == code.n - 2)
    delta, _ = strand_length(code, prime, I)
    extra["delta"] = delta
    value = code.n - delta - 3
    return value, extra, (None if d is None else value <= d)


def run_report(
    code: LinearCode,
    methods=ALL_METHODS,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    prime: int | None = None,
) -> Report:
    """Run each selected method; failures are recorded, never raised."""
    unknown = set(methods) - set(ALL_METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    methods = [m for m in ALL_METHODS if m in set(methods)]
    timings = {}
    results = []
    ideals = None
    for name in methods:
        if name not in EXACT_METHODS:
            continue
        if name == "binary" and code.field.p != 2:
            continue
        start = time.perf_counter()
        try:
            if name in ("afold", "fitt"):
                if ideals is None:
                    ideals = ProductIdeals(dual_forms(code))
                d, extra = (_afold if name == "afold" else _fitt)(code, budget, ideals)
            else:
                d, extra = {"brute": _brute, "tutte": _tutte, "berget": _berget, "binary": _binary}[name](code, budget)
            results.append(MethodResult(name, "ok", d, extra))
        except MindistError as exc:
            results.append(MethodResult(name, f"error: {type(exc).__name__}: {exc}"))
        timings[name] = round((time.perf_counter() - start) * 1000, 3)

    ds = {m.d for m in results if m.status == "ok"}
    d = ds.pop() if len(ds) == 1 else None
    if not results and any(m in BOUND_METHODS for m in methods):
        # bounds alone still need a reference distance
        try:
            d = distance_from_tutte(tutte(code), code.n, code.k).d
        except MindistError:
            d = None

    bounds = []
    for name in methods:
        if name not in BOUND_METHODS:
            continue
        if name == "ot" and code.k != 3:
            continue
        start = time.perf_counter()
        try:
            if name == "inverse":
                value, ref, extra = _inverse_bound(code, d)
                sat = None if ref is None else value <= ref
            else:
                value, extra, sat = _ot_bound(code, d, prime)
            bounds.append(BoundResult(name, value, sat, "ok", extra))
        except MindistError as exc:
            bounds.append(BoundResult(name, None, None, f"error: {type(exc).__name__}: {exc}"))
        timings[name] = round((time.perf_counter() - start) * 1000, 3)

    if len({m.d for m in results if m.status == "ok"}) > 1:
        verdict = "disagreement"
    elif any(b.satisfied is False for b in bounds):
        verdict = "bound-violated"
    else:
        verdict = "ok"
    info = {"n": code.n, "k": code.k, "field": code.field.name}
    return Report(info, results, bounds, verdict, timings)


def stable_view(report: Report) -> dict:
    """The report without timings, for reproducibility comparisons."""
    data = report.to_dict()
    data.pop("timings_ms")
    return data
