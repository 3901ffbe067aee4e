"""JSON interchange for states and ensembles.

Complex numbers are [re, im] pairs and matrices are row-major nested lists.
A state document is {"dim": n, "matrix": [[[re, im], ...], ...]} or, for a
qubit, {"bloch": [rx, ry, rz]}. An ensemble document is {"priors": [...],
"states": [<state document>, ...]} with an optional "letters" list.
"""

from __future__ import annotations

import json

import numpy as np

from .channel import CqEnsemble, cq_ensemble
from .errors import ValidationError
from .quantum import bloch_state


def state_to_json(matrix) -> dict:
    """Encode a square complex matrix as a state document (matrix form)."""
    arr = np.asarray(matrix, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
        raise ValidationError("expected a nonempty square matrix")
    return {
        "dim": int(arr.shape[0]),
        "matrix": [[[float(x.real), float(x.imag)] for x in row] for row in arr],
    }


def state_from_json(doc) -> np.ndarray:
    """Decode a state document into a complex matrix (not yet validated as a state)."""
    if not isinstance(doc, dict):
        raise ValidationError("state document must be a JSON object")
    if "bloch" in doc:
        return bloch_state(_float_list(doc["bloch"], "bloch", 3))
    if "matrix" not in doc:
        raise ValidationError('state document needs a "matrix" or "bloch" field')
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows:
        raise ValidationError('"matrix" must be a nonempty list of rows')
    try:
        arr = np.array(
            [[complex(entry[0], entry[1]) for entry in row] for row in rows])
    except (TypeError, ValueError, IndexError):
        raise ValidationError("matrix entries must be [re, im] pairs") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError("matrix must be square")
    if "dim" in doc and int(doc["dim"]) != arr.shape[0]:
        raise ValidationError(
            f'"dim" is {doc["dim"]} but the matrix is {arr.shape[0]}x{arr.shape[1]}')
    return arr


def ensemble_to_json(ensemble: CqEnsemble) -> dict:
    return {
        "letters": list(ensemble.letters),
        "priors": [float(p) for p in ensemble.priors],
        "states": [state_to_json(rho) for rho in ensemble.states],
    }


def ensemble_from_json(doc) -> CqEnsemble:
    if not isinstance(doc, dict):
        raise ValidationError("ensemble document must be a JSON object")
    for field in ("priors", "states"):
        if field not in doc:
            raise ValidationError(f'ensemble document needs a "{field}" field')
    if not isinstance(doc["states"], list) or not doc["states"]:
        raise ValidationError('"states" must be a nonempty list of state documents')
    states = [state_from_json(s) for s in doc["states"]]
    letters = doc.get("letters")
    return cq_ensemble(doc["priors"], states, letters)


def load_state(path: str) -> np.ndarray:
    return state_from_json(_load_json(path))


def load_ensemble(path: str) -> CqEnsemble:
    return ensemble_from_json(_load_json(path))


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None


def _float_list(value, name: str, length: int) -> list[float]:
    if not isinstance(value, list) or len(value) != length:
        raise ValidationError(f'"{name}" must be a list of {length} numbers')
    try:
        return [float(x) for x in value]
    except (TypeError, ValueError):
        raise ValidationError(f'"{name}" entries must be numbers') from None
