"""
This module provides the three-valued verdicts and the sampling budgets of all checks
"""

import enum
from dataclasses import dataclass, field, asdict, replace
from fractions import Fraction


class Status(enum.Enum):
    """
    Represents the outcome of a check
    """

    HOLDS = "holds"
    FAILS = "fails"
    CONSISTENT = "consistent"

    def __str__(self):
        return {
            Status.HOLDS: "Holds",
            Status.FAILS: "Fails",
            Status.CONSISTENT: "ConsistentUpToSampling",
        }[self]


@dataclass(frozen=True)
class SamplingBudget:
    """
    Represents how much sampling the quantified checks may do.

    :param int directions: number of sampled directions per generated sequence family
    :param int depth: tail depth N_max; also the length of the radius schedule
    :param int radius: radius of the witness grid around h(x0)
    :param int density: number of witness grid steps per radius
    :param int kgrid: number of k-grid steps per unit around the anchor
    :param int kradius: radius of the k-grid box around the anchor
    :param Fraction r0: first radius of the schedule r_j = r0 / 2^j
    :param int seed: seed of the additional random directions, None for none
    """

    directions: int = 4
    depth: int = 32
    radius: int = 2
    density: int = 8
    kgrid: int = 2
    kradius: int = 2
    r0: Fraction = Fraction(1, 2)
    seed: int = None

    def __post_init__(self):
        object.__setattr__(self, "r0", Fraction(self.r0))
        for name in ("depth", "radius", "density", "kgrid", "kradius"):
            if getattr(self, name) < 1:
                raise ValueError("sampling budget '{0}' must be positive".format(name))
        if self.directions < 0:
            raise ValueError("sampling budget 'directions' must not be negative")
        if self.r0 <= 0:
            raise ValueError("sampling budget 'r0' must be positive")

    def radii(self):
        """
        Returns the geometric radius schedule
        """
        return [self.r0 / 2 ** j for j in range(self.depth + 1)]

    def override(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def to_json(self):
        data = asdict(self)
        data["r0"] = str(self.r0)
        return data

    @classmethod
    def from_json(cls, data):
        data = dict(data)
        data["r0"] = Fraction(data.get("r0", "1/2"))
        return cls(**data)


DEFAULT_BUDGET = SamplingBudget()


@dataclass(frozen=True)
class Verdict:
    """
    Represents the result of a quantified check.

    Holds and Fails always carry a machine checkable certificate. The
    ``kind`` names the replay procedure for the certificate.
    """

    status: Status
    kind: str
    certificate: dict = field(default_factory=dict)
    budget: SamplingBudget = None
    notes: tuple = ()

    def __post_init__(self):
        if self.status is not Status.CONSISTENT and not self.certificate:
            raise ValueError("a {0} verdict needs a certificate".format(self.status))

    @classmethod
    def holds(cls, kind, certificate, budget=None, notes=()):
        return cls(Status.HOLDS, kind, certificate, budget, tuple(notes))

    @classmethod
    def fails(cls, kind, certificate, budget=None, notes=()):
        return cls(Status.FAILS, kind, certificate, budget, tuple(notes))

    @classmethod
    def consistent(cls, kind, budget=None, notes=(), certificate=None):
        return cls(Status.CONSISTENT, kind, certificate or {}, budget, tuple(notes))

    @property
    def is_holds(self):
        return self.status is Status.HOLDS

    @property
    def is_fails(self):
        return self.status is Status.FAILS

    @property
    def is_consistent(self):
        return self.status is Status.CONSISTENT

    def summary(self):
        if self.notes:
            return "{0} ({1})".format(self.status, "; ".join(self.notes))
        return str(self.status)

    def to_json(self):
        return {
            "type": "verdict",
            "status": self.status.value,
            "kind": self.kind,
            "certificate": self.certificate,
            "budget": self.budget.to_json() if self.budget else None,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data):
        budget = SamplingBudget.from_json(data["budget"]) if data.get("budget") else None
        certificate = data.get("certificate") or {}
        return cls(Status(data["status"]), data["kind"], certificate, budget, tuple(data.get("notes", ())))


def aggregate(kind, verdicts, budget=None, all_hold_certificate=None):
    """
    Aggregates per-case verdicts in an order independent way.

    Fails dominates, then ConsistentUpToSampling, then Holds. The first
    Fails by index provides the certificate.
    """
    verdicts = list(verdicts)
    for index, verdict in enumerate(verdicts):
        if verdict.is_fails:
            return Verdict.fails(kind, {"index": index, "case": verdict.to_json()}, budget)
    if any(v.is_consistent for v in verdicts) or not verdicts:
        return Verdict.consistent(kind, budget, certificate={"cases": [v.to_json() for v in verdicts]})
    return Verdict.holds(kind, all_hold_certificate or {"cases": [v.to_json() for v in verdicts]}, budget)
