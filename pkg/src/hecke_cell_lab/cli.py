"""Command-line verifier: ``hecke-cell-lab verify <suite> --type <label> ...``.

Each suite produces a list of records ``{anchor, check, inputs, values,
verdict}`` with verdict PASS, FAIL or REPORT-ONLY.  The report body depends
only on the configuration; timing and cache statistics go to ``meta``.

Exit codes: 0 when no record FAILs, 1 otherwise, 2 for usage errors.
"""

from __future__ import annotations

import argparse
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import json
import sys
import time

from .cache import CacheIOError, KLCache
from .hecke_bernstein import bernstein_algebra
from .hecke_im import im_algebra, presentation_crosscheck
from .laurent import Specialization, TorusPoint, fmt_scalar
from .quotient_ht import (
    Lt_construct,
    lie_criterion_typeA,
    pairing_sign_relation,
    principal_point,
    rho_sign_relation,
    sample_points,
    theta_t_report,
    thm34_criteria,
    thm35_report,
)
from .root_data import (
    SUPPORTED_TYPES,
    build_root_datum,
    poincare_polynomial,
    poincare_product_identity,
)
from .weyl_affine import affine_group

SCHEMA = 1
PASS, FAIL, REPORT = "PASS", "FAIL", "REPORT-ONLY"

SUITES = ("prop12", "lemma22", "formulas", "thm34", "thm35", "thm41", "lie-check", "cells",
          "crosscheck")

DEFAULT_MAX_LEN = {
    "prop12": {"A1": 10, "A2": 6, "B2": 5, "G2": 5, "A3": 4},
    "cells": {"A1": 8, "A2": 6, "B2": 6, "G2": 6, "A3": 4},
    "lemma22": {"A1": 8, "A2": 6, "B2": 4, "G2": 4, "A3": 3},
    "crosscheck": {"A1": 6, "A2": 6, "B2": 6, "G2": 6, "A3": 6},
}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    suite: str
    type_label: str
    q0: Fraction | None = None
    sqrt_q: Fraction | None = None
    max_len: int | None = None
    points: list | None = None
    seed: int = 0
    cache_dir: str | None = None
    fmt: str = "json"
    jobs: int = 1
    count: int = 100

    def body_config(self):
        """The part of the configuration that determines the report body."""
        out = {"seed": self.seed}
        if self.q0 is not None:
            out["q0"] = str(self.q0)
        if self.sqrt_q is not None:
            out["sqrt_q"] = str(self.sqrt_q)
        if self.max_len is not None:
            out["max_len"] = self.max_len
        if self.points is not None:
            out["points"] = [[lab, fmt_scalar(t.spec.q0), t.to_json()] for lab, t in self.points]
        if self.suite == "crosscheck":
            out["count"] = self.count
        return out


@dataclass
class Report:
    suite: str
    type_label: str
    config: dict
    records: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, anchor, check, inputs, values, verdict):
        self.records.append({"anchor": anchor, "check": check, "inputs": inputs,
                             "values": values, "verdict": verdict})

    def extend(self, records):
        self.records.extend(records)

    @property
    def failed(self):
        return any(r["verdict"] == FAIL for r in self.records)

    def summary(self):
        counts = {PASS: 0, FAIL: 0, REPORT: 0}
        for r in self.records:
            counts[r["verdict"]] += 1
        return counts

    def body(self):
        return {"suite": self.suite, "type": self.type_label, "config": self.config,
                "records": self.records, "summary": self.summary()}

    def body_json(self):
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def to_json(self):
        return json.dumps({"schema": SCHEMA, "body": self.body(), "meta": self.meta},
                          sort_keys=True, indent=1)

    def to_tsv(self):
        lines = ["anchor\tcheck\tverdict\tinputs\tvalues"]
        for r in self.records:
            lines.append("\t".join([r["anchor"], r["check"], r["verdict"],
                                    json.dumps(r["inputs"], sort_keys=True),
                                    json.dumps(r["values"], sort_keys=True)]))
        return "\n".join(lines)


def _record(anchor, check, inputs, values, verdict):
    return {"anchor": anchor, "check": check, "inputs": inputs, "values": values,
            "verdict": verdict}


def _verdict(ok):
    return PASS if ok else FAIL


def _max_len(cfg):
    if cfg.max_len is not None:
        return cfg.max_len
    return DEFAULT_MAX_LEN[cfg.suite][cfg.type_label]


def _spec_from(cfg):
    if cfg.sqrt_q is not None:
        return Specialization(sqrt_q=cfg.sqrt_q)
    if cfg.q0 is not None:
        return Specialization(q0=cfg.q0)
    return None


# ---------------------------------------------------------------------------
# combinatorial suites


def _nx_image(G, max_len):
    """{n_x : l(n_x) <= max_len}; n_x is the shortest element of t_x W_0."""
    R = G.datum
    bound = max_len + R.nu
    out = set()
    for x in product(range(-bound, bound + 1), repeat=R.rank):
        tx = G.translation(x)
        if G.length(tx) > bound:
            continue
        coset = [tx * G.finite(w) for w in R.W0]
        m = min(G.length(u) for u in coset)
        short = [u for u in coset if G.length(u) == m]
        if len(short) != 1:
            raise AssertionError("shortest coset element not unique for %r" % (x,))
        if m <= max_len:
            out.add(short[0])
    return out


def suite_prop12(cfg, report):
    R = build_root_datum(cfg.type_label)
    G = affine_group(R)
    L = _max_len(cfg)
    inputs = {"max_len": L}
    Y = G.enumerate_Y0(L)
    F = G.factored_Y0_set(L)
    report.add("Y_0 as w t_x with R(w) in L(t_x)", "descent definition == factored construction",
               inputs, {"descent_count": len(Y), "factored_count": len(F),
                        "only_descent": len(Y - F), "only_factored": len(F - Y)},
               _verdict(Y == F))
    failures = []
    trivial_right = True
    ball = G.ball(L)
    for u in ball:
        try:
            w, x, v = G.factor_canonical(u)
        except AssertionError as exc:
            failures.append(str(exc))
            continue
        if G.in_Y0(u) != (v.length == 0):
            trivial_right = False
    report.add("unique factorization u = w t_x v", "total, unique and length-additive",
               inputs, {"elements": len(ball), "failures": failures[:5],
                        "failure_count": len(failures)}, _verdict(not failures))
    report.add("unique factorization u = w t_x v", "u in Y_0 iff v = e", inputs,
               {"elements": len(ball)}, _verdict(trivial_right))
    N = _nx_image(G, L)
    report.add("x -> n_x bijection onto Y_0", "{n_x} cut at max_len == Y_0", inputs,
               {"image_count": len(N)}, _verdict(N == Y))


def suite_cells(cfg, report):
    R = build_root_datum(cfg.type_label)
    G = affine_group(R)
    L = _max_len(cfg)
    Y = G.enumerate_Y0(L)
    F = G.factored_Y0_set(L)
    CC = G.canonical_cell_c0(L)
    for k in range(L + 1):
        shell = G.shell(k)
        yk = [u for u in shell if u in Y]
        report.add("Y_0 census", "counts in length shell", {"length": k},
                   {"shell": len(shell), "Y_0": len(yk),
                    "Gamma_0": sum(1 for u in shell if G.in_Gamma0(u)),
                    "c_0": sum(1 for u in shell if G.c0_membership(u)),
                    "canonical_c_0": sum(1 for u in yk if u in CC)},
                   _verdict(len(yk) == sum(1 for u in shell if u in F)))
    inputs = {"max_len": L}
    report.add("Y_0 as w t_x with R(w) in L(t_x)", "census matches the factored construction",
               inputs, {"count": len(Y)}, _verdict(Y == F))
    in_c0 = {u for u in Y if G.c0_membership(u)}
    report.add("canonical left cell in c_0", "{w t_x t_-rho} == Y_0 meet c_0", inputs,
               {"count": len(CC)}, _verdict(CC == in_c0))
    # n_x w_0 lands in Gamma_0
    bad = [repr(u) for u in Y if not G.in_Gamma0(u * G.w0)]
    report.add("n_x -> n_x w_0 into Gamma_0", "R(u w_0) = S_0 for u in Y_0", inputs,
               {"checked": len(Y), "bad": bad[:5]}, _verdict(not bad))
    # exploratory data on powers of antidominant translations
    for i, om in enumerate(R.fundamental_weights):
        rows = []
        for k in (1, 2, 3):
            u = G.translation(tuple(-k * c for c in om))
            rows.append({"k": k, "length": G.length(u),
                         "left_descents": sorted(G.left_descents(u)),
                         "right_descents": sorted(G.right_descents(u))})
        report.add("powers of t_x sharing a left cell", "lengths and descents of t_{-k x_%d}" % (i + 1),
                   {"weight": list(om)}, {"powers": rows}, REPORT)


# ---------------------------------------------------------------------------
# Hecke algebra suites


def _kl_cache(cfg, datum, meta):
    """Seed the KL memo from the cache; returns a store callback."""
    cache = KLCache(cfg.cache_dir)
    alg = im_algebra(datum)
    meta["cache"] = {"directory": str(cache.directory)}
    try:
        alg.load_kl(cache.load(datum))
    except CacheIOError as exc:
        meta["cache"]["error"] = str(exc)
        print("cache: %s" % exc, file=sys.stderr)
    before = alg.kl_computed

    def store():
        if alg.kl_computed > before:
            try:
                cache.store(datum, alg.kl_entries())
            except CacheIOError as exc:
                meta["cache"]["error"] = str(exc)
                print("cache: %s" % exc, file=sys.stderr)
        meta["cache"].update(cache.stats)
        meta["cache"]["kl_computed"] = alg.kl_computed - before

    return alg, store


def suite_lemma22(cfg, report):
    R = build_root_datum(cfg.type_label)
    alg, store = _kl_cache(cfg, R, report.meta)
    L = _max_len(cfg)
    rep = alg.lemma22_kernel_check(L)
    store()
    inputs = {"max_len": L}
    for label in ("C_u C'", "C'_u C"):
        bad = [v for v in rep["violations"] if v.get("check") == label + " = 0"]
        report.add("kernel of h -> h C' and h -> h C", label + " = 0 for u outside Y_0", inputs,
                   {"violations": bad[:5], "violation_count": len(bad)}, _verdict(not bad))
        report.add("kernel of h -> h C' and h -> h C", "images of Y_0 elements independent (%s)" % label,
                   inputs, {"y0_count": rep["y0_count"]}, _verdict(rep["independent " + label]))
    # the canonical basis elements used above are bar invariant
    G = alg.group
    bad_bar = []
    for u in G.ball(min(L, 4)):
        for flavor in ("C", "C'"):
            c = alg.c_basis(u, flavor)
            if alg.bar(c) != c:
                bad_bar.append("%s %r" % (flavor, u))
    report.add("canonical bases", "C_u and C'_u are bar invariant", {"max_len": min(L, 4)},
               {"failures": bad_bar[:5]}, _verdict(not bad_bar))


def suite_formulas(cfg, report):
    R = build_root_datum(cfg.type_label)
    B = bernstein_algebra(R)
    box = list(product(range(-2, 3), repeat=R.rank))
    fails = []
    for x in box:
        rec = B.verify_formula(1, x)
        if not rec["holds"]:
            fails.append(rec)
    report.add("C theta_x C as a Weyl-ratio sum", "C theta_x C = q^{-nu/2} J(theta_{x+rho})/J(theta_rho) C",
               {"x_range": [-2, 2]}, {"checked": len(box), "failures": fails[:3]},
               _verdict(not fails))
    names = {
        2: "C' theta_-rho C as a subset sum",
        3: "C' theta_rho C as a subset sum",
        4: "C theta_-rho C' as a subset sum",
        5: "C theta_rho C' as a subset sum",
    }
    for k in (2, 3, 4, 5):
        rec = B.verify_formula(k)
        values = {k2: v for k2, v in rec.items() if k2 not in ("holds", "formula")}
        report.add(names[k], "both sides equal in H", {}, values, _verdict(rec["holds"]))
    ok, lhs, rhs = poincare_product_identity(R)
    report.add("Poincare product", "sum q^{l(w)} == prod (1 - q^{1+h}) / (1 - q^h)", {},
               {"poincare": poincare_polynomial(R)}, _verdict(ok))
    C, Cp = B.C(), B.Cprime()
    A = B.A_element()
    report.add("C theta_rho C' = A C'", "both sides equal in H", {},
               {}, _verdict(C * B.theta(R.rho) * Cp == A * Cp))
    report.add("C' theta_-rho C versus C' theta_rho C", "scalar relating the two (computed)", {},
               {"scalar": rho_sign_relation(R), "sign_(-1)^nu": -1 if R.nu % 2 else 1}, REPORT)
    report.add("pairing (A, theta_{e_u})", "sign c in (A, theta_e) = c q^{-nu/2} J(theta_{rho+e})/J(theta_rho)",
               {}, {"sign": pairing_sign_relation(R)}, REPORT)
    central = B.is_central(B.from_theta(_orbit_sum(R)))
    report.add("center", "orbit sums of theta are central", {}, {}, _verdict(central))
    report.add("tilde anti-automorphism", "tilde(C) = C and tilde(C') = C'", {}, {},
               _verdict(B.tilde(C) == C and B.tilde(Cp) == Cp))
    report.add("tilde anti-automorphism", "tilde(C) = C' and tilde(C') = C (alternative reading)", {},
               {"holds": B.tilde(C) == Cp and B.tilde(Cp) == C}, REPORT)
    sign = B.scalar(-1 if R.nu % 2 else 1)
    report.add("star automorphism", "star(C) = (-1)^nu C' and star(C') = (-1)^nu C", {}, {},
               _verdict(B.star(C) == Cp * sign and B.star(Cp) == C * sign))
    l2, r2 = B.formula_sides(2)
    l4, r4 = B.formula_sides(4)
    report.add("tilde anti-automorphism", "tilde carries both sides of the C' theta_-rho C identity to the mirror one",
               {}, {}, _verdict(B.tilde(l2) == l4 and B.tilde(r2) == r4))


def _orbit_sum(R):
    from .laurent import LaurentPoly, symmetrize
    return symmetrize(R, LaurentPoly.monomial(R.fundamental_weights[0]))


def suite_crosscheck(cfg, report):
    R = build_root_datum(cfg.type_label)
    L = _max_len(cfg)
    rep = presentation_crosscheck(im_algebra(R), count=cfg.count, max_len=L, seed=cfg.seed)
    inputs = {"count": cfg.count, "max_len": L, "seed": cfg.seed}
    report.add("presentation cross-check", "IM -> Bernstein -> IM is the identity", inputs,
               {"failures": rep["round_trip_failures"]}, _verdict(not rep["round_trip_failures"]))
    report.add("presentation cross-check", "products agree after conversion", inputs,
               {"pairs": rep["pairs"], "failures": rep["product_failures"]},
               _verdict(not rep["product_failures"]))


# ---------------------------------------------------------------------------
# H_t suites (point tasks may run in worker processes)


def _point_inputs(label, t):
    return {"point": label, "t": t.to_json(), "q0": fmt_scalar(t.spec.q0)}


def _task_thm34(type_label, label, t):
    R = build_root_datum(type_label)
    inputs = _point_inputs(label, t)
    crit = thm34_criteria(R, t)
    red = theta_t_report(R, t)
    vals = {k: crit[k] for k in ("dims", "routes_agree", "criterion_i_zero", "criterion_ii_values",
                                 "criterion_iii_values", "simultaneous", "regular")}
    recs = [_record("four ideals vanish together", "criteria (i)-(iii) agree with the dimensions",
                    inputs, vals, _verdict(crit["holds"]))]
    rvals = {k: red[k] for k in red if k not in ("t", "q0", "holds")}
    recs.append(_record("Steinberg basis of Theta over the center", "dim Theta_t = |W_0|; reductions agree",
                        inputs, rvals, _verdict(red["holds"])))
    return recs


def _task_thm41(type_label, label, t):
    R = build_root_datum(type_label)
    inputs = _point_inputs(label, t)
    recs = []
    for dual, name in ((False, "C theta_rho C'"), (True, "C' theta_rho C")):
        _, rep = Lt_construct(R, t, dual=dual)
        vals = {k: rep[k] for k in rep if k not in ("t", "q0", "holds", "dual")}
        if not rep["generator_nonzero"]:
            recs.append(_record("irreducible module from %s" % name, "generator vanishes in H_t",
                                inputs, vals, REPORT))
        else:
            recs.append(_record("irreducible module from %s" % name,
                                "Burnside irreducible, X L != 0, L = H_t X / M_t0",
                                inputs, vals, _verdict(rep["holds"])))
    return recs


def _points(cfg, R, extra=()):
    if cfg.points is not None:
        return list(cfg.points)
    spec = _spec_from(cfg)
    if spec is not None:
        return [("principal q0=%s" % fmt_scalar(spec.q0), principal_point(R, spec))]
    return list(extra) + sample_points(R, seed=cfg.seed)


def _run_points(cfg, task, pts):
    args = [(cfg.type_label, label, t) for label, t in pts]
    if cfg.jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_star_call, [(task, a) for a in args]))
    else:
        results = [task(*a) for a in args]
    return [r for recs in results for r in recs]


def _star_call(item):
    task, args = item
    return task(*args)


def suite_thm34(cfg, report):
    R = build_root_datum(cfg.type_label)
    pts = _points(cfg, R)
    report.extend(_run_points(cfg, _task_thm34, pts))
    nonreg = sum(1 for _, t in pts if not t.is_regular(R))
    if cfg.points is None and _spec_from(cfg) is None:
        report.add("Steinberg basis of Theta over the center", "sample contains >= 2 non-regular points",
                   {"seed": cfg.seed}, {"points": len(pts), "non_regular": nonreg},
                   _verdict(nonreg >= 2))


def suite_thm35(cfg, report):
    R = build_root_datum(cfg.type_label)
    if cfg.sqrt_q is not None:
        runs = [{"sqrt_q": cfg.sqrt_q}]
    elif cfg.q0 is not None:
        runs = [{"q0": cfg.q0}]
    else:
        runs = [{"q0": Fraction(q)} for q in (4, 9, -1)]
    for kw in runs:
        rep = thm35_report(R, **kw)
        inputs = {"q0": rep["q0"], "t": rep["t"]}
        exp = rep["expected_dim"]
        for key in ("CHC'", "C'HC"):
            e = rep[key]
            report.add("principal point ideal", "dim %s = %d" % (key.replace("H", "H_t"), exp),
                       inputs, dict(e, poincare_value=rep["poincare_value"]), _verdict(e["holds"]))
        pp = rep["principal_pairing"]
        report.add("pairing at the principal point",
                   "(A theta_x, theta_e)(t) = q^{-nu/2} rho(t) x(t) e(t) sum q^{l(w)}",
                   inputs, {}, _verdict(pp["holds"]))
        report.add("pairing at the principal point", "same identity with an extra factor (-1)^nu",
                   inputs, {"holds": pp["with_extra_sign_holds"], "nu": R.nu}, REPORT)


def suite_thm41(cfg, report):
    R = build_root_datum(cfg.type_label)
    extra = []
    if R.type_label == "A1":
        extra.append(("t=(3) q0=4", TorusPoint(Specialization(q0=4), [3])))
    pts = _points(cfg, R, extra)
    recs = _run_points(cfg, _task_thm41, pts)
    report.extend(recs)
    dims = sorted({r["values"]["dim"] for r in recs})
    report.add("irreducible module from C theta_rho C'", "observed dimensions of L_t", {},
               {"dims": dims, "W_0": len(R.W0)}, REPORT)
    report.add("C' theta_-rho C versus C' theta_rho C", "scalar relating the two (computed)", {},
               {"scalar": rho_sign_relation(R), "sign_(-1)^nu": -1 if R.nu % 2 else 1}, REPORT)


def lie_examples(R):
    """The fixed type-A examples for the Lie criterion report."""
    pts = []
    if R.type_label == "A1":
        pts.append(("t=(3) q0=4", TorusPoint(Specialization(q0=4), [3])))
    if R.type_label == "A2":
        pts.append(("t=(2,1) q0=4", TorusPoint(Specialization(q0=4), [2, 1])))
    for q0 in (4, -1, 1):
        pts.append(("principal q0=%s" % q0, principal_point(R, Specialization(q0=q0))))
    return pts


def suite_lie(cfg, report):
    R = build_root_datum(cfg.type_label)
    if not R.type_label.startswith("A"):
        raise UsageError("lie-check supports type A only")
    pts = cfg.points if cfg.points is not None else lie_examples(R)
    for label, t in pts:
        rep = lie_criterion_typeA(R, t)
        vals = {k: rep[k] for k in rep if k not in ("type", "t", "q0")}
        if rep["q0_is_one"]:
            vals["note"] = "q0 = 1: g_{t,q} contains the Cartan subalgebra"
        report.add("semisimple elements of g_{t,q}", "verdict agrees with dim H_t C theta_rho C' = 0",
                   _point_inputs(label, t), vals, REPORT)


RUNNERS = {
    "prop12": suite_prop12,
    "cells": suite_cells,
    "lemma22": suite_lemma22,
    "formulas": suite_formulas,
    "crosscheck": suite_crosscheck,
    "thm34": suite_thm34,
    "thm35": suite_thm35,
    "thm41": suite_thm41,
    "lie-check": suite_lie,
}


def run_suite(cfg):
    """Run one suite; returns a Report (exit status: 1 if report.failed)."""
    if cfg.suite not in RUNNERS:
        raise UsageError("unknown suite %r" % cfg.suite)
    if cfg.type_label not in SUPPORTED_TYPES:
        raise UsageError("unsupported type %r" % cfg.type_label)
    report = Report(cfg.suite, cfg.type_label, cfg.body_config())
    start = time.perf_counter()
    RUNNERS[cfg.suite](cfg, report)
    report.meta["seconds"] = round(time.perf_counter() - start, 3)
    report.meta["jobs"] = cfg.jobs
    from .kernels import BACKEND
    report.meta["backend"] = BACKEND
    return report


# ---------------------------------------------------------------------------
# argument handling


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: %r" % text)


def load_points(path, rank):
    """Points file: {"points": [{"label": ..., "q0" or "sqrt_q": ..., "coords": [...]}]}."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError("cannot read points file: %s" % exc)
    items = data.get("points") if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise UsageError("points file must hold a list of points")
    out = []
    for i, p in enumerate(items):
        try:
            if "sqrt_q" in p:
                spec = Specialization(sqrt_q=Fraction(p["sqrt_q"]))
            else:
                spec = Specialization(q0=Fraction(p["q0"]))
            coords = [Fraction(c) for c in p["coords"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad point #%d: %s" % (i, exc))
        if len(coords) != rank:
            raise UsageError("point #%d has %d coordinates, expected %d" % (i, len(coords), rank))
        out.append((str(p.get("label", "point #%d" % (i + 1))), TorusPoint(spec, coords)))
    return out


def build_parser():
    ap = argparse.ArgumentParser(prog="hecke-cell-lab",
                                 description="Exact verification suites for affine Hecke algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--type", dest="type_label", required=True, choices=SUPPORTED_TYPES)
    v.add_argument("--q", dest="q0", type=_rational)
    v.add_argument("--sqrt-q", dest="sqrt_q", type=_rational)
    v.add_argument("--max-len", type=int)
    v.add_argument("--points")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cache-dir")
    v.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for point suites")
    v.add_argument("--count", type=int, default=100, help="random elements for crosscheck")
    return ap


def config_from_args(ns):
    if ns.q0 is not None and ns.sqrt_q is not None:
        raise UsageError("give at most one of --q and --sqrt-q")
    if ns.q0 == 0 or ns.sqrt_q == 0:
        raise UsageError("q must be invertible")
    if ns.max_len is not None and not 0 <= ns.max_len <= 12:
        raise UsageError("--max-len must lie in 0..12")
    if ns.jobs < 1 or ns.count < 2:
        raise UsageError("--jobs must be >= 1 and --count >= 2")
    points = None
    if ns.points:
        points = load_points(ns.points, build_root_datum(ns.type_label).rank)
    return RunConfig(suite=ns.suite, type_label=ns.type_label, q0=ns.q0, sqrt_q=ns.sqrt_q,
                     max_len=ns.max_len, points=points, seed=ns.seed, cache_dir=ns.cache_dir,
                     fmt=ns.fmt, jobs=ns.jobs, count=ns.count)


def main(argv=None):
    ap = build_parser()
    ns = ap.parse_args(argv)  # exits with status 2 on bad usage
    try:
        cfg = config_from_args(ns)
        report = run_suite(cfg)
    except UsageError as exc:
        print("hecke-cell-lab: error: %s" % exc, file=sys.stderr)
        return 2
    print(report.to_json() if cfg.fmt == "json" else report.to_tsv())
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
