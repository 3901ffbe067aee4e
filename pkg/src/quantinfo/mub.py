"""Mutually unbiased bases: construction, verification, state reconstruction.

A set of bases is mutually unbiased when every cross-basis projector pair
satisfies Tr(PQ) = 1/n; a dimension admits at most n+1 such bases, and that
complete number is constructible here for n = 2 and odd prime n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .probability import as_distribution, quadratic_information
from .quantum import as_basis, as_density, born_probabilities, _fix_column_phases

UNBIASED_TOL = 1e-9


@dataclass(frozen=True)
class DeviationReport:
    """Worst-case deviation over all cross-basis projector pairs.

    worst_pair is (basis_j, vector_i, basis_k, vector_m) for the offending
    pair of projectors.
    """

    max_deviation: float
    worst_pair: tuple[int, int, int, int]
    tol: float
    passed: bool


def build_mubs(n: int) -> list[np.ndarray]:
    """Complete set of n+1 mutually unbiased bases for n = 2 or an odd prime.

    For n = 2 these are the three Pauli eigenbases. For odd prime n the k-th
    non-computational basis has vector m with components
    exp(2*pi*i*(k*l^2 + m*l)/n)/sqrt(n); quadratic Gauss sums make distinct k
    unbiased. Composite and even dimensions beyond 2 are rejected. Every
    vector's first nonzero component is real positive.
    """
    if n == 2:
        inv_sqrt2 = 1.0 / np.sqrt(2.0)
        z = np.eye(2, dtype=complex)
        x = np.array([[1, 1], [1, -1]], dtype=complex) * inv_sqrt2
        y = np.array([[1, 1], [1j, -1j]], dtype=complex) * inv_sqrt2
        return [z, x, y]
    if n < 2 or not _is_odd_prime(n):
        raise ValidationError(
            f"complete MUB sets are constructed only for n = 2 and odd primes, got {n}")
    bases = [np.eye(n, dtype=complex)]
    l = np.arange(n)
    for k in range(n):
        phase = (k * l[:, None] ** 2 + l[:, None] * l[None, :]) % n
        basis = np.exp(2j * np.pi * phase / n) / np.sqrt(n)
        bases.append(_fix_column_phases(basis))
    return bases


def verify_unbiased(bases, tol: float = UNBIASED_TOL) -> DeviationReport:
    """Exhaustive check of |Tr(P Q) - 1/n| over all cross-basis projector pairs."""
    checked = _common_dimension(bases)
    n = checked[0].shape[0]
    worst = 0.0
    worst_pair = (0, 0, 0, 0)
    for j in range(len(checked)):
        for k in range(j + 1, len(checked)):
            overlap = np.abs(checked[j].conj().T @ checked[k]) ** 2
            deviation = np.abs(overlap - 1.0 / n)
            i, m = np.unravel_index(np.argmax(deviation), deviation.shape)
            if deviation[i, m] > worst:
                worst = float(deviation[i, m])
                worst_pair = (j, int(i), k, int(m))
    return DeviationReport(worst, worst_pair, tol, worst < tol)


def hyperplane_orthogonality(bases, tol: float = UNBIASED_TOL) -> DeviationReport:
    """Exhaustive check of |Tr(Pbar Qbar)| over all cross-basis pairs.

    Pbar = P - I/n is the traceless part of a projector; for unbiased bases
    the deviation operators of different bases are Hilbert-Schmidt
    orthogonal. Computed from the deviation operators themselves, not from
    the overlap shortcut used by verify_unbiased, so the two checks stay
    independent.
    """
    checked = _common_dimension(bases)
    n = checked[0].shape[0]
    identity = np.eye(n) / n
    deviation_ops = [
        [np.outer(u[:, i], u[:, i].conj()) - identity for i in range(n)]
        for u in checked
    ]
    worst = 0.0
    worst_pair = (0, 0, 0, 0)
    for j in range(len(checked)):
        for k in range(j + 1, len(checked)):
            for i in range(n):
                for m in range(n):
                    value = abs(np.einsum(
                        "ab,ba->", deviation_ops[j][i], deviation_ops[k][m]).real)
                    if value > worst:
                        worst = float(value)
                        worst_pair = (j, i, k, m)
    return DeviationReport(worst, worst_pair, tol, worst < tol)


def information_sum(rho, bases) -> float:
    """Sum of quadratic information over the outcome statistics of a MUB set.

    For a complete set of n+1 mutually unbiased bases this equals
    Tr(rho - I/n)^2 identically, which is what makes the quadratic measure
    basis-set invariant while the Shannon sum is not.
    """
    state = as_density(rho)
    checked = _common_dimension(bases)
    n = state.shape[0]
    if checked[0].shape[0] != n:
        raise ValidationError(
            f"bases are {checked[0].shape[0]}-dimensional but the state is {n}-dimensional")
    if len(checked) != n + 1:
        raise ValidationError(f"a complete MUB set for dimension {n} has {n + 1} bases")
    report = verify_unbiased(checked)
    if not report.passed:
        raise ValidationError(
            f"bases are not mutually unbiased: deviation {report.max_deviation:.3e}")
    return float(sum(quadratic_information(born_probabilities(state, u)) for u in checked))


def reconstruct(prob_lists, bases) -> np.ndarray:
    """Rebuild a state from the outcome statistics of a complete MUB set.

    rho = I/n + sum_j sum_i (p_i^j - 1/n) (P_i^j - I/n). With exact Born
    statistics this returns the original state; with noisy statistics it
    stays Hermitian with unit trace but may be indefinite. Positivity is
    deliberately not enforced; use smallest_eigenvalue to diagnose.
    """
    checked = _common_dimension(bases)
    n = checked[0].shape[0]
    if len(checked) != n + 1:
        raise ValidationError(f"a complete MUB set for dimension {n} has {n + 1} bases")
    report = verify_unbiased(checked)
    if not report.passed:
        raise ValidationError(
            f"bases are not mutually unbiased: deviation {report.max_deviation:.3e}")
    dists = [as_distribution(p) for p in prob_lists]
    if len(dists) != n + 1:
        raise ValidationError(f"need {n + 1} outcome distributions, got {len(dists)}")
    if any(d.size != n for d in dists):
        raise ValidationError(f"each outcome distribution must have {n} entries")
    identity = np.eye(n, dtype=complex)
    rho = identity / n
    for probs, basis in zip(dists, checked):
        deviations = probs - 1.0 / n
        for i in range(n):
            v = basis[:, i]
            projector = np.outer(v, v.conj())
            rho = rho + deviations[i] * (projector - identity / n)
    return (rho + rho.conj().T) / 2.0


def _common_dimension(bases) -> list[np.ndarray]:
    checked = [as_basis(u) for u in bases]
    if len(checked) < 2:
        raise ValidationError("need at least two bases")
    n = checked[0].shape[0]
    if any(u.shape[0] != n for u in checked):
        raise ValidationError("bases have mismatched dimensions")
    return checked


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
