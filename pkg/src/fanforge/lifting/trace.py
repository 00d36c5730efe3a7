"""Audit record of one lifting step."""
from __future__ import annotations

from dataclasses import dataclass, field

from fanforge.errors import TheoremViolation

CLASSES = ("I1", "I2", "I3", "J1", "J2", "J3", "K", "L")


@dataclass
class LiftingTrace:
    edge: int
    mode: str
    classes: dict = field(default_factory=lambda: {c: [] for c in CLASSES})
    chi: dict = field(default_factory=dict)
    psi: dict = field(default_factory=dict)
    phi: dict = field(default_factory=dict)
    produced: dict = field(default_factory=dict)
    x_included: bool = False
    claims: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def check(self, name: str, ok: bool, detail=""):
        """Record a claim outcome; a false claim aborts the construction."""
        self.claims[name] = self.claims.get(name, True) and bool(ok)
        if not ok:
            msg = f"claim '{name}' failed at {self.mode} of edge {self.edge}"
            if detail:
                msg += f": {detail}"
            raise TheoremViolation(msg, self)

    def note(self, text: str):
        self.notes.append(text)

    def to_json(self) -> dict:
        return {
            "edge": self.edge,
            "mode": self.mode,
            "classes": {k: list(v) for k, v in self.classes.items()},
            "chi": {str(k): v for k, v in sorted(self.chi.items())},
            "psi": {str(k): v for k, v in sorted(self.psi.items())},
            "phi": {str(k): v for k, v in sorted(self.phi.items())},
            "produced": {str(k): [sorted(m) for m in v] for k, v in sorted(self.produced.items())},
            "x_included": self.x_included,
            "claims": dict(sorted(self.claims.items())),
            "notes": list(self.notes),
        }
