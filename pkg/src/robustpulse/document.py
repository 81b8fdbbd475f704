"""JSON sequence documents.

Example::

    {
      "format": "robustpulse-sequence",
      "format_version": 1,
      "pulse_order": "time: first element is applied first",
      "target": "hadamard",
      "robustness": "ae",
      "target_matrix": [[re, im], [re, im], [re, im], [re, im]],
      "pulses": [{"theta": 3.14159..., "phi": 0.0}, ...],
      "provenance": [{"phi3": ..., "phi4": ..., "branch": "principal", "r": ...}]
    }

Floats are written with Python's shortest round-trip repr, so parsing a serialized
document gives back identical values.
"""

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .su2 import Pulse, PulseSequence

FORMAT = "robustpulse-sequence"
FORMAT_VERSION = 1
PULSE_ORDER = "time: first element is applied first"


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceDocument:
    target: str
    robustness: str
    pulses: PulseSequence
    target_matrix: Optional[tuple[complex, ...]] = None
    provenance: tuple[dict, ...] = ()
    format_version: int = FORMAT_VERSION

    @property
    def target_unitary(self) -> Optional[np.ndarray]:
        if self.target_matrix is None:
            return None
        return np.array(self.target_matrix, dtype=complex).reshape(2, 2)

    def to_dict(self) -> dict:
        d = {
            "format": FORMAT,
            "format_version": self.format_version,
            "pulse_order": PULSE_ORDER,
            "target": self.target,
            "robustness": self.robustness,
        }
        if self.target_matrix is not None:
            d["target_matrix"] = [[z.real, z.imag] for z in self.target_matrix]
        d["pulses"] = [{"theta": p.theta, "phi": p.phi} for p in self.pulses]
        d["provenance"] = [dict(q) for q in self.provenance]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SequenceDocument":
        try:
            if d.get("format") != FORMAT:
                raise DocumentError(f"not a {FORMAT} document")
            if d["format_version"] != FORMAT_VERSION:
                raise DocumentError(f"unsupported format_version {d['format_version']!r}")
            matrix = d.get("target_matrix")
            if matrix is not None:
                if len(matrix) != 4:
                    raise DocumentError("target_matrix needs 4 entries")
                matrix = tuple(complex(float(re), float(im)) for re, im in matrix)
            pulses = tuple(Pulse(float(p["theta"]), float(p["phi"])) for p in d["pulses"])
            provenance = tuple(dict(q) for q in d.get("provenance", []))
            return cls(str(d["target"]), str(d["robustness"]), pulses, matrix, provenance, d["format_version"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(f"malformed sequence document: {exc}") from exc


def dumps(doc: SequenceDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def loads(text: str) -> SequenceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    return SequenceDocument.from_dict(data)


def save(doc: SequenceDocument, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(doc))


def load(path) -> SequenceDocument:
    with open(path) as fh:
        return loads(fh.read())
