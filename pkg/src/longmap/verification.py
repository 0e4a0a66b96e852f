"""Invariant suites behind ``longmap verify``.

Each suite returns a list of check lines; a check passes when its measured
deviation is at most its tolerance.  All randomness is seeded, so repeated
runs print identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .colorings import (
    fig8_betas,
    fig8_coloring,
    reflect_coloring,
    residual,
    rotate_coloring,
    star_polygon,
    torus_theta_interval,
)
from .longitudes import (
    eval_word,
    fig8_closed_form,
    galex_lift,
    qn_check,
    t2n_closed_form,
)
from .quandles import (
    ConjClassQuandle,
    DihedralQuandle,
    EisQuandle,
    GAlexQuandle,
    SphereQuandle,
    axiom_check,
    eis_to_galex,
    iso_sphere_to_conj,
    random_sphere_point,
)
from .quaternions import Quaternion, distance, rotate
from .tangles import fig8, torus2n

SEED = 20240915


@dataclass(frozen=True)
class CheckLine:
    name: str
    deviation: float
    tol: float

    @property
    def passed(self):
        return self.deviation <= self.tol

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.name}: max deviation {self.deviation:.3e}"
            f" (tol {self.tol:.1e})"
        )


def suite_axioms():
    """Quandle axioms on all five instances, plus the structural identities:
    sphere/conjugation isomorphism and the pair-quandle projection."""
    rng = np.random.default_rng(SEED)
    x = Quaternion.exp(0.7, [1.0, 0.0, 0.0])
    instances = [
        ("sphere(1.234)", SphereQuandle(1.234)),
        ("conjclass(0.9)", ConjClassQuandle(0.9)),
        ("dihedral(7)", DihedralQuandle(7)),
        ("galex(e^0.7i)", GAlexQuandle(x)),
        ("eis(e^0.7i)", EisQuandle(x)),
    ]
    lines = []
    for name, q in instances:
        rep = axiom_check(q, samples=500, rng=rng)
        lines.append(CheckLine(f"axioms {name}", rep.max_violation, 1e-10))

    # conjugation lemma: e^-bv e^tu e^bv = e^(t w), w = rotate(u, -2b, v)
    worst = 0.0
    for _ in range(1000):
        beta, theta = rng.uniform(0, math.pi, size=2)
        u, v = random_sphere_point(rng), random_sphere_point(rng)
        lhs = (
            Quaternion.exp(-beta, v)
            * Quaternion.exp(theta, u)
            * Quaternion.exp(beta, v)
        )
        rhs = Quaternion.exp(theta, rotate(u, -2.0 * beta, v))
        worst = max(worst, distance(lhs, rhs))
    lines.append(CheckLine("conjugation identity", worst, 1e-10))

    # sphere -> conjugacy class isomorphism at psi = 2pi - 2theta
    worst = 0.0
    for _ in range(500):
        theta = rng.uniform(0.1, math.pi - 0.1)
        sq = SphereQuandle(2.0 * math.pi - 2.0 * theta)
        cq = ConjClassQuandle(theta)
        u, v = random_sphere_point(rng), random_sphere_point(rng)
        lhs = iso_sphere_to_conj(sq.op(u, v), theta)
        rhs = cq.op(iso_sphere_to_conj(u, theta), iso_sphere_to_conj(v, theta))
        worst = max(worst, distance(lhs, rhs))
    lines.append(CheckLine("sphere/conjugation isomorphism", worst, 1e-10))

    # Eis -> GAlex projection is a homomorphism
    eq, gq = EisQuandle(x), GAlexQuandle(x)
    worst = 0.0
    for _ in range(500):
        a, b = eq.sample(rng), eq.sample(rng)
        lhs = eis_to_galex(eq.op(a, b))
        rhs = gq.op(eis_to_galex(a), eis_to_galex(b))
        worst = max(worst, distance(lhs, rhs))
    lines.append(CheckLine("Eis/GAlex isomorphism", worst, 1e-10))
    return lines


def _torus_cases(ns=(3, 5, 7, 9), samples=8, margin=0.02):
    for n in ns:
        diagram = torus2n(n, 1)
        for h in range(1, (n - 1) // 2 + 1):
            lo, hi = torus_theta_interval(n, h)
            for theta in np.linspace(lo + margin, hi - margin, samples):
                yield n, h, float(theta), diagram


def suite_torus():
    """Longitude word vs the torus closed form, and q^n = -1."""
    worst_cf = worst_qn = worst_res = 0.0
    minus_one = Quaternion(-1.0, 0.0, 0.0, 0.0)
    for n, h, theta, diagram in _torus_cases():
        psi = 2.0 * math.pi - 2.0 * theta
        coloring = star_polygon(n, h, psi)
        worst_res = max(worst_res, residual(coloring, diagram))
        value = eval_word(diagram, coloring)
        closed = t2n_closed_form(n, theta)
        worst_cf = max(worst_cf, distance(value.q, closed.q))
        worst_qn = max(worst_qn, distance(qn_check(diagram, coloring),
                                          minus_one))
    return [
        CheckLine("torus coloring residual", worst_res, 1e-9),
        CheckLine("torus closed form", worst_cf, 1e-8),
        CheckLine("torus q^n = -1", worst_qn, 1e-9),
    ]


def suite_fig8():
    """Figure-eight closed forms against direct word evaluation."""
    diagram = fig8()
    worst_cf = worst_res = 0.0
    for theta in np.linspace(math.pi / 3 + 0.02, 2 * math.pi / 3 - 0.02, 40):
        psi = 2.0 * math.pi - 2.0 * theta
        for branch in (1, 2):
            coloring = fig8_coloring(psi, branch)
            worst_res = max(worst_res, residual(coloring, diagram))
            value = eval_word(diagram, coloring)
            closed = fig8_closed_form(theta, branch)
            worst_cf = max(worst_cf, distance(value.q, closed.q))
    beta = fig8_betas(2.0 * math.pi / 3.0)
    dev = max(
        abs(beta[0] - math.acos(-1.0 / 3.0)),
        abs(beta[1] - math.acos(-1.0 / 3.0)),
    )
    return [
        CheckLine("fig8 coloring residual", worst_res, 1e-9),
        CheckLine("fig8 closed form", worst_cf, 1e-8),
        CheckLine("fig8 tetrahedral beta", dev, 1e-10),
    ]


def suite_lift():
    """Generalized-Alexander lift vs direct word evaluation, including
    rotated colorings about the basepoint axis."""
    worst = 0.0
    cases = []
    for n, h, theta, diagram in _torus_cases(ns=(3, 5, 7), samples=5):
        cases.append((diagram, star_polygon(n, h, 2 * math.pi - 2 * theta)))
    diagram8 = fig8()
    for theta in np.linspace(math.pi / 3 + 0.05, 2 * math.pi / 3 - 0.05, 10):
        for branch in (1, 2):
            cases.append(
                (diagram8, fig8_coloring(2 * math.pi - 2 * theta, branch))
            )
    rng = np.random.default_rng(SEED)
    worst_rot = 0.0
    for diagram, coloring in cases:
        direct = eval_word(diagram, coloring).q
        worst = max(worst, distance(galex_lift(diagram, coloring), direct))
        rotated = rotate_coloring(coloring, rng.uniform(0, 2 * math.pi))
        worst_rot = max(
            worst_rot, distance(eval_word(diagram, rotated).q, direct)
        )
    return [
        CheckLine("galex lift = longitude word", worst, 1e-9),
        CheckLine("rotation invariance", worst_rot, 1e-8),
    ]


def suite_mirror():
    """Mirror torus diagram evaluates to the inverse longitude."""
    worst = 0.0
    for n in (3, 5, 7):
        pos, neg = torus2n(n, 1), torus2n(n, -1)
        for _, h, theta, _d in _torus_cases(ns=(n,), samples=5):
            coloring = star_polygon(n, h, 2 * math.pi - 2 * theta)
            mirrored = reflect_coloring(coloring)
            lhs = eval_word(neg, mirrored).q
            rhs = eval_word(pos, coloring).q.inverse()
            worst = max(worst, distance(lhs, rhs))
    return [CheckLine("mirror inverse relation", worst, 1e-8)]


SUITES = {
    "axioms": suite_axioms,
    "torus": suite_torus,
    "fig8": suite_fig8,
    "lift": suite_lift,
    "mirror": suite_mirror,
}
