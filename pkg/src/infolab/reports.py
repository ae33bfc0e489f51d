"""Report documents shared by the CLI and the test-suite.

A :class:`Report` carries a JSON-ready ``doc`` plus a list of tables for
the human-readable and CSV renderings.  Probabilities go into the JSON as
exact fraction strings; entropies as floats in bits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures
from .analysis import (
    SearchResult,
    Verdict,
    check_all,
    entropy_change_verdict,
    is_independent,
)
from .dist import Axis, Dist, JointDist, conditional_slice, marginal, mix_update
from .entropy import (
    BASE,
    conditional_entropy_avg,
    joint_entropy,
    pointwise_conditional_entropy,
    shannon_entropy,
    updated_entropy,
)
from .otp import (
    CipherModel,
    blend_beliefs,
    build_model,
    cipher_joint,
    ciphertext_dist,
    perfect_secrecy_check,
    posterior_plaintext,
    uniform,
)

SCHEMA_VERSION = "1"
SECTIONS = ("table1", "example1", "example2")


@dataclass
class Table:
    title: str
    headers: list[str]
    rows: list[list[str]]


@dataclass
class Report:
    command: str
    doc: dict
    tables: list[Table] = field(default_factory=list)
    seed: int = 0

    def full_doc(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "base": BASE,
            "seed": self.seed,
            **self.doc,
        }

    def to_json(self) -> str:
        return json.dumps(self.full_doc(), indent=2) + "\n"

    def to_table(self) -> str:
        out = [f"# {self.command}  (entropies in {BASE}, seed {self.seed})"]
        for t in self.tables:
            out.append("")
            out.append(t.title)
            widths = [
                max(len(str(x)) for x in col)
                for col in zip(t.headers, *t.rows)
            ]
            line = "  ".join(h.ljust(w) for h, w in zip(t.headers, widths))
            out.append(line.rstrip())
            out.append("  ".join("-" * w for w in widths))
            for r in t.rows:
                out.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["# seed", self.seed, "base", BASE])
        for t in self.tables:
            w.writerow([f"# {t.title}"])
            w.writerow(t.headers)
            w.writerows(t.rows)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "table": self.to_table, "csv": self.to_csv}[fmt]()


# -- formatting helpers ---------------------------------------------------------


def frac(p: Fraction) -> str:
    return str(p)


def fracs(d) -> list[str]:
    return [frac(p) for p in d]


def show_prob(p: Fraction) -> str:
    return f"{p} ({float(p):.6f})"


def show_bits(h: float) -> str:
    return f"{h:.6f}"


def joint_doc(joint: JointDist) -> list[list[str]]:
    return [fracs(row) for row in joint.cells]


def verdict_doc(v: Verdict) -> dict:
    return {
        "claim": v.claim,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "slack": v.slack,
        "holds": v.holds,
        "equality": v.equality,
    }


def verdict_table(verdicts) -> Table:
    return Table(
        "verdicts (lhs <= rhs)",
        ["claim", "lhs", "rhs", "slack", "holds", "equality"],
        [
            [v.claim, show_bits(v.lhs), show_bits(v.rhs), show_bits(v.slack),
             str(v.holds), str(v.equality)]
            for v in verdicts
        ],
    )


def joint_table(joint: JointDist, title: str = "joint p(i,j)") -> Table:
    n = joint.shape[1]
    return Table(
        title,
        ["x \\ y"] + [f"y={j}" for j in range(n)],
        [[f"x={i}"] + [show_prob(c) for c in row] for i, row in enumerate(joint.cells)],
    )


def dist_table(title: str, named: list[tuple[str, Dist]]) -> Table:
    width = max(len(d) for _, d in named)
    return Table(
        title,
        ["name"] + [str(k) for k in range(width)],
        [[name] + [show_prob(p) for p in d] for name, d in named],
    )


# -- per-command reports --------------------------------------------------------


def entropy_summary(joint: JointDist) -> dict:
    m, _ = joint.shape
    pointwise = []
    for i in range(m):
        if joint.row_mass(i) == 0:
            pointwise.append(None)
        else:
            pointwise.append(pointwise_conditional_entropy(joint, i))
    return {
        "H_x": shannon_entropy(marginal(joint, Axis.X)),
        "H_y": shannon_entropy(marginal(joint, Axis.Y)),
        "H_xy": joint_entropy(joint),
        "H_y_given_x_avg": conditional_entropy_avg(joint),
        "H_y_given_x_pointwise": pointwise,
    }


def entropy_report(joint: JointDist, seed: int = 0) -> Report:
    summary = entropy_summary(joint)
    doc = {
        "joint": joint_doc(joint),
        "marginal_x": fracs(marginal(joint, Axis.X)),
        "marginal_y": fracs(marginal(joint, Axis.Y)),
        "entropy": summary,
    }
    rows = [[k, show_bits(v)] for k, v in summary.items() if k != "H_y_given_x_pointwise"]
    for i, h in enumerate(summary["H_y_given_x_pointwise"]):
        rows.append([f"H(y | x={i})", "undefined" if h is None else show_bits(h)])
    tables = [
        joint_table(joint),
        dist_table("marginals", [("x", marginal(joint, Axis.X)), ("y", marginal(joint, Axis.Y))]),
        Table("entropies", ["quantity", BASE], rows),
    ]
    return Report("entropy", doc, tables, seed)


def check_report(joint: JointDist, seed: int = 0) -> Report:
    verdicts = check_all(joint)
    indep = is_independent(joint)
    doc = {
        "joint": joint_doc(joint),
        "independent": indep,
        "verdicts": [verdict_doc(v) for v in verdicts],
        "all_hold": all(v.holds for v in verdicts) and verdicts[0].equality,
    }
    tables = [
        joint_table(joint),
        verdict_table(verdicts),
        Table("independence", ["independent"], [[str(indep)]]),
    ]
    return Report("check", doc, tables, seed)


def search_report(result: SearchResult, seed: int = 0) -> Report:
    cert = result.certificate
    doc = {
        "rows": result.rows,
        "cols": result.cols,
        "step": frac(result.step),
        "certificate": {
            "joints_checked": cert.joints_checked,
            "random_joints_checked": cert.random_joints_checked,
            "avg_violations": cert.avg_violations,
            "chain_rule_violations": cert.chain_rule_violations,
            "subadditivity_violations": cert.subadditivity_violations,
            "seed": cert.seed,
        },
        "hit_count": len(result.hits),
        "hits": [
            {
                "cells": joint_doc(h.joint),
                "row": h.row,
                "pointwise": h.pointwise,
                "marginal_entropy": h.marginal_entropy,
                "excess": h.excess,
            }
            for h in result.hits
        ],
    }
    tables = [
        Table(
            "certificate",
            ["joints_checked", "random_joints_checked", "avg_violations",
             "chain_rule_violations", "subadditivity_violations"],
            [[str(cert.joints_checked), str(cert.random_joints_checked),
              str(cert.avg_violations), str(cert.chain_rule_violations),
              str(cert.subadditivity_violations)]],
        ),
        Table(
            f"pointwise-increase hits ({len(result.hits)})",
            ["cells", "row", "H(y|x=row)", "H(y)", "excess"],
            [
                [" ".join(frac(c) for c in h.joint.flat()), str(h.row),
                 show_bits(h.pointwise), show_bits(h.marginal_entropy),
                 show_bits(h.excess)]
                for h in result.hits
            ],
        ),
    ]
    return Report("search", doc, tables, seed)


def _posterior_doc(r) -> dict:
    return {
        "ciphertext": r.ciphertext,
        "posterior": fracs(r.posterior),
        "prior_entropy": r.prior_entropy,
        "posterior_entropy": r.posterior_entropy,
        "delta": r.delta,
    }


def _blend_rows(model: CipherModel, lambdas) -> list[dict]:
    p = model.plaintext_prior
    q = uniform(model.s)
    hp = shannon_entropy(p)
    out = []
    for lam in lambdas:
        b = blend_beliefs(p, q, lam)
        h = shannon_entropy(b)
        out.append({
            "lambda": frac(lam),
            "blend": fracs(b),
            "entropy": h,
            "exceeds_prior": h > hp,
        })
    return out


def otp_report(model: CipherModel, c: int, blend=None, seed: int = 0) -> Report:
    post = posterior_plaintext(model, c)
    secrecy = perfect_secrecy_check(model)
    cm = cipher_joint(model)
    doc = {
        "prior": fracs(model.plaintext_prior),
        "key": fracs(model.key_dist),
        "ciphertext_dist": fracs(ciphertext_dist(model)),
        "posterior": _posterior_doc(post),
        "perfect_secrecy": secrecy.secure,
        "H_plaintext_given_ciphertext_avg": conditional_entropy_avg(cm),
    }
    tables = [
        dist_table("model", [
            ("prior", model.plaintext_prior),
            ("key", model.key_dist),
            ("ciphertext", ciphertext_dist(model)),
            (f"posterior | c={c}", post.posterior),
        ]),
        Table("entropies", ["quantity", BASE], [
            ["H(prior)", show_bits(post.prior_entropy)],
            [f"H(posterior | c={c})", show_bits(post.posterior_entropy)],
            ["delta", show_bits(post.delta)],
            ["H(m | c) averaged", show_bits(doc["H_plaintext_given_ciphertext_avg"])],
        ]),
        Table("perfect secrecy", ["secure"], [[str(secrecy.secure)]]),
    ]
    if blend is not None:
        (row,) = _blend_rows(model, [blend])
        doc["blend"] = row
        tables.append(Table(
            "blend of prior with uniform",
            ["lambda", "blend", "entropy", "exceeds_prior"],
            [[row["lambda"], " ".join(row["blend"]), show_bits(row["entropy"]),
              str(row["exceeds_prior"])]],
        ))
    return Report("otp", doc, tables, seed)


# -- embedded reproductions -------------------------------------------------------


def table1_section() -> tuple[dict, list[Table]]:
    joint = fixtures.TABLE_1
    py = marginal(joint, Axis.Y)
    cond = [conditional_slice(joint, i) for i in range(joint.shape[0])]
    evidence = fixtures.TABLE_1_EVIDENCE
    summary = entropy_summary(joint)
    verdicts = check_all(joint)
    hy = summary["H_y"]
    pw0 = summary["H_y_given_x_pointwise"][0]
    doc = {
        "joint": joint_doc(joint),
        "marginal_x": fracs(marginal(joint, Axis.X)),
        "marginal_y": fracs(py),
        "conditionals": [fracs(d) for d in cond],
        "evidence": fracs(evidence),
        "updated": fracs(mix_update(joint, evidence)),
        "updated_entropy": updated_entropy(joint, evidence),
        "entropy": summary,
        "pointwise_excess_row0": pw0 - hy,
        "pointwise_exceeds_marginal": pw0 - hy > 1e-9,
        "verdicts": [verdict_doc(v) for v in verdicts],
        "independent": is_independent(joint),
    }
    tables = [
        joint_table(joint, "table1: joint p(i,j)"),
        dist_table("table1: distributions", [
            ("marginal x", marginal(joint, Axis.X)),
            ("marginal y", py),
            *[(f"y | x={i}", d) for i, d in enumerate(cond)],
            ("updated y, evidence x=0", mix_update(joint, evidence)),
        ]),
        Table("table1: entropies", ["quantity", BASE], [
            ["H(y)", show_bits(hy)],
            ["H(x)", show_bits(summary["H_x"])],
            ["H(x,y)", show_bits(summary["H_xy"])],
            ["H_x(y) averaged", show_bits(summary["H_y_given_x_avg"])],
            *[[f"H(y | x={i})", show_bits(h)]
              for i, h in enumerate(summary["H_y_given_x_pointwise"])],
            ["H(y | x=0) - H(y)", show_bits(pw0 - hy)],
        ]),
        verdict_table(verdicts),
    ]
    return doc, tables


def example1_section() -> tuple[dict, list[Table]]:
    prior = fixtures.EXAMPLE_1_PRIOR
    rows = []
    for q in fixtures.EXAMPLE_1_POSTERIORS:
        v = entropy_change_verdict(prior, q)
        rows.append({
            "prior": frac(prior),
            "posterior": frac(q),
            "prior_entropy": v.prior_entropy,
            "posterior_entropy": v.posterior_entropy,
            "change": v.change.value,
        })
    table = Table(
        "example1: binary entropy change from prior 1/100",
        ["posterior", "H(prior)", "H(posterior)", "change"],
        [[show_prob(Fraction(r["posterior"])), show_bits(r["prior_entropy"]),
          show_bits(r["posterior_entropy"]), r["change"]] for r in rows],
    )
    return {"prior": frac(prior), "verdicts": rows}, [table]


def example2_section() -> tuple[dict, list[Table]]:
    model = build_model(fixtures.EXAMPLE_2_PRIOR, fixtures.EXAMPLE_2_KEY)
    biased = build_model(fixtures.EXAMPLE_2_PRIOR, fixtures.BIASED_KEY)
    secrecy = perfect_secrecy_check(model)
    biased_secrecy = perfect_secrecy_check(biased)
    hp = shannon_entropy(model.plaintext_prior)
    blends = _blend_rows(model, fixtures.BLEND_GRID)
    equally_likely = uniform(model.s)
    doc = {
        "prior": fracs(model.plaintext_prior),
        "key": fracs(model.key_dist),
        "ciphertext_dist": fracs(ciphertext_dist(model)),
        "posteriors": [_posterior_doc(r) for r in secrecy.reports],
        "perfect_secrecy": secrecy.secure,
        "prior_entropy": hp,
        "H_plaintext_given_ciphertext_avg": conditional_entropy_avg(cipher_joint(model)),
        "equally_likely_posterior": fracs(equally_likely),
        "equally_likely_matches_bayes": secrecy.reports[0].posterior == equally_likely,
        "biased_key": {
            "key": fracs(biased.key_dist),
            "ciphertext_dist": fracs(ciphertext_dist(biased)),
            "posteriors": [_posterior_doc(r) for r in biased_secrecy.reports],
            "perfect_secrecy": biased_secrecy.secure,
            "H_plaintext_given_ciphertext_avg": conditional_entropy_avg(cipher_joint(biased)),
        },
        "blend_with_uniform": blends,
        "blend_all_exceed_prior": all(b["exceeds_prior"] for b in blends),
    }
    tables = [
        dist_table("example2: uniform-key model", [
            ("prior", model.plaintext_prior),
            ("key", model.key_dist),
            ("ciphertext", ciphertext_dist(model)),
            *[(f"bayes posterior | c={r.ciphertext}", r.posterior) for r in secrecy.reports],
            ("equally likely (non-Bayes)", equally_likely),
        ]),
        Table("example2: secrecy", ["model", "perfect_secrecy", "H(m|c) avg", "H(m)"], [
            ["uniform key", str(secrecy.secure),
             show_bits(doc["H_plaintext_given_ciphertext_avg"]), show_bits(hp)],
            [f"key {' '.join(fracs(biased.key_dist))}", str(biased_secrecy.secure),
             show_bits(doc["biased_key"]["H_plaintext_given_ciphertext_avg"]), show_bits(hp)],
        ]),
        Table(
            "example2: blend of prior with uniform",
            ["lambda", "blend", "entropy", "exceeds_prior"],
            [[b["lambda"], " ".join(b["blend"]), show_bits(b["entropy"]),
              str(b["exceeds_prior"])] for b in blends],
        ),
    ]
    return doc, tables


_SECTION_BUILDERS = {
    "table1": table1_section,
    "example1": example1_section,
    "example2": example2_section,
}


def reproduce_examples(section: str = "all", seed: int = 0) -> Report:
    """Consolidated report over the embedded fixtures."""
    names = SECTIONS if section == "all" else (section,)
    doc: dict = {"sections": list(names)}
    tables: list[Table] = []
    for name in names:
        sdoc, stables = _SECTION_BUILDERS[name]()
        doc[name] = sdoc
        tables.extend(stables)
    return Report("reproduce", doc, tables, seed)
