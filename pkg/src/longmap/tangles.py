"""1-tangle diagrams as Wirtinger codes.

A Wirtinger code (kappa, eps) records, for each crossing i = 1..n, which arc
is crossed under (kappa(i)) and the crossing sign (eps(i)).  Arcs are
numbered 0..n along the tangle; arc 0 is the initial arc, arc n the terminal
arc.  The crossing relation in a conjugation quandle reads

    color(i) = color(kappa(i))^(-eps(i)) * color(i-1) * color(kappa(i))^(eps(i))

i.e. color(i) = op_signed(color(i-1), color(kappa(i)), eps(i)) in any quandle.

A ``TangleDiagram`` augments the code with a 2-bridge propagation schedule:
two bridge arcs seed the colors and each schedule entry (target, crossing)
defines one further arc from the crossing relation; the remaining crossings
are residual consistency constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadParameter, ParseError, ValidationError

__all__ = [
    "WirtingerCode",
    "TangleDiagram",
    "LongitudeWord",
    "torus2n",
    "fig8",
    "longitude_word",
    "parse",
    "serialize",
]


@dataclass(frozen=True)
class WirtingerCode:
    """Per-crossing under-arc list kappa and sign list eps."""

    kappa: tuple
    eps: tuple

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        n = len(self.kappa)
        if len(self.eps) != n:
            raise ValidationError("kappa and eps must have equal length")
        if any(not 0 <= k <= n for k in self.kappa):
            raise ValidationError("kappa values must lie in 0..n")
        if any(e not in (1, -1) for e in self.eps):
            raise ValidationError("eps values must be +1 or -1")

    @property
    def n(self):
        return len(self.kappa)

    @property
    def writhe(self):
        return sum(self.eps)


@dataclass(frozen=True)
class LongitudeWord:
    """Symbolic longitude x_0^lead * prod x_(kappa_i)^(eps_i)."""

    lead_exponent: int
    factors: tuple  # ordered (arc, exponent) pairs

    def __len__(self):
        return 1 + len(self.factors)


def longitude_word(code):
    """The preferred longitude of the tangle: leading exponent -writhe on
    arc 0 followed by the over-arc generators in crossing order."""
    return LongitudeWord(
        lead_exponent=-code.writhe,
        factors=tuple(zip(code.kappa, code.eps)),
    )


@dataclass(frozen=True)
class TangleDiagram:
    """Wirtinger code plus 2-bridge propagation data.

    ``schedule`` entries are (target_arc, crossing) pairs: the relation of
    that crossing, solved for the target arc (the target must be the
    incoming or outgoing under-arc of the crossing).  When
    ``terminal_is_initial`` is set the terminal arc is pre-seeded with the
    initial arc's color before the schedule runs.
    """

    code: WirtingerCode
    bridge_arcs: tuple = ()
    schedule: tuple = ()
    residual_crossings: tuple = ()
    terminal_is_initial: bool = False
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "bridge_arcs", tuple(self.bridge_arcs))
        object.__setattr__(
            self, "schedule", tuple((int(a), int(c)) for a, c in self.schedule)
        )
        object.__setattr__(
            self, "residual_crossings", tuple(self.residual_crossings)
        )
        if self.bridge_arcs or self.schedule:
            self._validate_schedule()

    @property
    def n_arcs(self):
        return self.code.n + 1

    @property
    def has_schedule(self):
        return bool(self.schedule)

    def _validate_schedule(self):
        n = self.code.n
        known = set(self.bridge_arcs)
        if self.terminal_is_initial:
            known.add(n)
        targets = [t for t, _ in self.schedule]
        if len(set(targets)) != len(targets):
            raise ValidationError("schedule targets must be distinct")
        non_bridge = set(range(n + 1)) - known
        if set(targets) != non_bridge:
            raise ValidationError(
                "schedule targets must cover exactly the non-seeded arcs"
            )
        for target, ci in self.schedule:
            if not 1 <= ci <= n:
                raise ValidationError(f"crossing {ci} out of range")
            if target not in (ci, ci - 1):
                raise ValidationError(
                    f"crossing {ci} cannot define arc {target}"
                )
            needed = {ci - 1, ci, self.code.kappa[ci - 1]} - {target}
            if not needed <= known:
                raise ValidationError(
                    f"schedule entry ({target}, {ci}) references undefined arcs"
                )
            known.add(target)
        used = {ci for _, ci in self.schedule}
        if used | set(self.residual_crossings) != set(range(1, n + 1)) or (
            used & set(self.residual_crossings)
        ):
            raise ValidationError(
                "schedule and residual crossings must partition the crossings"
            )


def torus2n(n, sign=1):
    """The standard closed-2-braid tangle of the (2, n) torus knot.

    n odd crossings, all of the given sign; arcs 0..n.  Arc j carries the
    braid color q_(2j mod n), so the two bridges (colors q_0 and q_1) sit on
    arcs 0 and (n+1)/2, and the crossing relations reduce to the braid
    recurrence q_(i+1) = q_i^-1 q_(i-1) q_i (indices mod n) for sign +1.
    """
    if n < 3 or n % 2 == 0:
        raise BadParameter("n must be an odd integer >= 3")
    if sign not in (1, -1):
        raise BadParameter("sign must be +1 or -1")
    k = (n - 1) // 2
    kappa = tuple((i + k) % n for i in range(1, n + 1))
    eps = (sign,) * n
    code = WirtingerCode(kappa, eps)
    # define braid colors q_2..q_(n-1) in order, then the terminal arc;
    # arc of q_j is j*(k+1) mod n because 2*(k+1) = 1 (mod n)
    schedule = [(j * (k + 1) % n, j * (k + 1) % n) for j in range(2, n)]
    schedule.append((n, n))
    residual = (k + 1,)
    return TangleDiagram(
        code=code,
        bridge_arcs=(0, k + 1),
        schedule=tuple(schedule),
        residual_crossings=residual,
        name=f"torus2n({n},{sign:+d})",
    )


def fig8():
    """The 4-crossing figure-eight tangle, writhe 0.

    Bridges are arcs 0 and 2; arc 1 is defined at crossing 1 and arc 3 at
    crossing 4 (with the terminal arc 4 identified with arc 0); crossings 2
    and 3 are residual constraints.
    """
    code = WirtingerCode(kappa=(2, 3, 0, 1), eps=(1, -1, 1, -1))
    return TangleDiagram(
        code=code,
        bridge_arcs=(0, 2),
        schedule=((1, 1), (3, 4)),
        residual_crossings=(2, 3),
        terminal_is_initial=True,
        name="fig8",
    )


def serialize(d):
    """Text form of a diagram (see ``parse`` for the grammar)."""
    lines = [f"tangle n={d.code.n}"]
    lines.append("kappa=" + ",".join(str(k) for k in d.code.kappa))
    lines.append("eps=" + ",".join("+" if e > 0 else "-" for e in d.code.eps))
    if d.bridge_arcs:
        lines.append("bridges=" + ",".join(str(a) for a in d.bridge_arcs))
    if d.schedule:
        lines.append(
            "schedule=" + ";".join(f"{a}:{c}" for a, c in d.schedule)
        )
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse the line-based tangle format:

        tangle n=<N>
        kappa=<c0>,...,<c_{N-1}>
        eps=<s0>,...,<s_{N-1}>        (each + or -)
        bridges=<a>,<b>               (optional)
        schedule=<arc>:<crossing>;... (optional)

    Comments start with '#'; unknown keys are rejected.  Residual crossings
    are the crossings absent from the schedule, and the terminal arc is
    identified with the initial arc when the schedule leaves exactly the
    terminal arc undefined.
    """
    n = kappa = eps = bridges = schedule = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("tangle"):
                raise ParseError("expected 'tangle n=<N>' header", lineno)
            try:
                key, val = line[len("tangle"):].strip().split("=", 1)
            except ValueError:
                raise ParseError("malformed tangle header", lineno) from None
            if key.strip() != "n":
                raise ParseError(f"unknown header key {key!r}", lineno)
            try:
                n = int(val)
            except ValueError:
                raise ParseError(f"bad crossing count {val!r}", lineno) from None
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", lineno)
        key, val = (s.strip() for s in line.split("=", 1))
        if key == "kappa":
            try:
                kappa = tuple(int(s) for s in val.split(","))
            except ValueError:
                raise ParseError("kappa entries must be integers", lineno) from None
        elif key == "eps":
            signs = [s.strip() for s in val.split(",")]
            if any(s not in ("+", "-") for s in signs):
                raise ParseError("eps entries must be '+' or '-'", lineno)
            eps = tuple(1 if s == "+" else -1 for s in signs)
        elif key == "bridges":
            try:
                bridges = tuple(int(s) for s in val.split(","))
            except ValueError:
                raise ParseError("bridge entries must be integers", lineno) from None
        elif key == "schedule":
            schedule = []
            for item in val.split(";"):
                try:
                    arc, crossing = item.split(":")
                    schedule.append((int(arc), int(crossing)))
                except ValueError:
                    raise ParseError(
                        f"bad schedule entry {item!r}", lineno
                    ) from None
            schedule = tuple(schedule)
        else:
            raise ParseError(f"unknown key {key!r}", lineno)

    if n is None:
        raise ParseError("missing 'tangle n=<N>' header")
    if kappa is None or eps is None:
        raise ParseError("missing kappa or eps line")
    if len(kappa) != n:
        raise ValidationError(f"kappa has {len(kappa)} entries, expected {n}")
    if len(eps) != n:
        raise ValidationError(f"eps has {len(eps)} entries, expected {n}")
    code = WirtingerCode(kappa, eps)

    if bridges is None and schedule is None:
        return TangleDiagram(code=code)
    if bridges is None or schedule is None:
        raise ValidationError("bridges and schedule must be given together")
    residual = tuple(
        c for c in range(1, n + 1) if c not in {ci for _, ci in schedule}
    )
    defined = set(bridges) | {t for t, _ in schedule}
    terminal_is_initial = set(range(n + 1)) - defined == {n}
    return TangleDiagram(
        code=code,
        bridge_arcs=bridges,
        schedule=schedule,
        residual_crossings=residual,
        terminal_is_initial=terminal_is_initial,
    )
