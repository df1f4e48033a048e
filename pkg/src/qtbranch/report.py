"""Outcome records produced by the identity-checking drivers."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional

PASS = "PASS"
FAIL = "FAIL"
VERIFIED_AT_SCALE = "VERIFIED_AT_SCALE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

_STATUSES = (PASS, FAIL, VERIFIED_AT_SCALE, COUNTEREXAMPLE)


@dataclass(frozen=True)
class VerificationReport:
    """One checked instance of an identity.

    Failing statuses must carry a witness describing the first offending
    value; reports are immutable once constructed.
    """

    identity: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    witness: Optional[Any] = None
    wall_ms: float = 0.0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError("unknown status %r" % (self.status,))
        if self.status in (FAIL, COUNTEREXAMPLE) and self.witness is None:
            raise ValueError("failing reports must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, VERIFIED_AT_SCALE)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "identity": self.identity,
            "params": dict(self.params),
            "status": self.status,
            "wall_ms": self.wall_ms,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> "VerificationReport":
        return VerificationReport(
            identity=data["identity"],
            params=dict(data.get("params", {})),
            status=data["status"],
            witness=data.get("witness"),
            wall_ms=data.get("wall_ms", 0.0),
            seed=data.get("seed"),
        )

    def render(self) -> str:
        bits = ["%s=%s" % (k, v) for k, v in self.params.items()]
        head = "%-40s %s" % (self.identity + (" [" + ", ".join(bits) + "]" if bits else ""), self.status)
        if self.witness is not None:
            head += "  witness: %s" % json.dumps(self.witness)
        return head
