"""The θ-bijection F_{λ,μ} → E_{λ,μ} and the statistics D̄, D̃ compared on it."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from algebra.qpoly import QPoly
from crystal.highest_weight import a_highest_weight_vertices, e_set, highest_weight_vertices, tensor_crystal
from crystal.tensor import TensorVertex, word_str
from crystal.theta import theta, theta_by_rewriting, theta_row
from energy.coenergy import coenergy_D, coenergy_D_tilde, h_small
from energy.splitting import split

logger = logging.getLogger(__name__)


@dataclass
class CheckLog:
    """Collects failures; the first few are kept verbatim for the report."""
    failures: List[str] = field(default_factory=list)
    keep: int = 5
    total: int = 0

    def fail(self, message: str) -> None:
        self.total += 1
        if len(self.failures) < self.keep:
            self.failures.append(message)

    @property
    def ok(self) -> bool:
        return self.total == 0

    def summary(self) -> str:
        if self.ok:
            return ""
        extra = f" (+{self.total - len(self.failures)} more)" if self.total > len(self.failures) else ""
        return "; ".join(self.failures) + extra


def theta_bijection(lam: Sequence[int], mu: Sequence[int], n: int, log: CheckLog) -> Dict[TensorVertex, TensorVertex]:
    """θ on F_{λ,μ}; logs failures if it is not a bijection onto E_{λ,μ}."""
    f_set = highest_weight_vertices(mu, lam, "C", n)
    e_members, _ = e_set(mu, lam, n)
    images = {v: theta(v, n) for v in f_set}
    if len(set(images.values())) != len(images):
        log.fail("θ is not injective on F")
    if set(images.values()) != set(e_members):
        missing = set(e_members) - set(images.values())
        extra = set(images.values()) - set(e_members)
        sample = next(iter(missing or extra))
        log.fail(f"θ(F) != E: |F|={len(f_set)} |E|={len(e_members)} e.g. {word_str(sample)}")
    return images


def check_d_tilde_constant(lam: Sequence[int], mu: Sequence[int], n: int, log: CheckLog) -> None:
    """D̃ is constant on the whole D†-component of every vertex of E_{λ,μ}."""
    crystal = tensor_crystal("D", n)
    e_members, _ = e_set(mu, lam, n)
    for c in e_members:
        value = coenergy_D_tilde(c, n)
        for other in crystal.component(c):
            if coenergy_D_tilde(other, n) != value:
                log.fail(f"D̃ changes between {word_str(c)} and {word_str(other)}")
                break


def check_coenergy_shift(lam: Sequence[int], mu: Sequence[int], n: int, log: CheckLog) -> None:
    """D̄(v) = (|μ| − |λ|)/2 + D̃(θ(v)) on F_{λ,μ}."""
    shift = sum(mu) - sum(lam)
    for v in highest_weight_vertices(mu, lam, "C", n):
        d_bar, d_tilde = coenergy_D(v, "C", n), coenergy_D_tilde(theta(v, n), n)
        if 2 * d_bar != shift + 2 * d_tilde:
            log.fail(f"{word_str(v)}: D̄={d_bar} D̃(θ)={d_tilde}")


def check_d_tilde_restricts(mu: Sequence[int], n: int, log: CheckLog) -> None:
    """D̃(b) = D̄^A(b) for all-unbarred b ∈ F_μ^{A_{n−1}}."""
    for b in a_highest_weight_vertices(mu, n):
        d_tilde, d_a = coenergy_D_tilde(b, n), coenergy_D(b, "A", n)
        if d_tilde != d_a:
            log.fail(f"{word_str(b)}: D̃={d_tilde} D̄^A={d_a}")


def grading_identity(lam: Sequence[int], mu: Sequence[int], n: int):
    """Both sides of Σ_{v∈F} q^{D̄(v)} = q^{(|μ|−|λ|)/2} Σ_b q^{D̄^A(b)} |E_{λ,μ,b}|."""
    left = QPoly.sum(QPoly.monomial(2 * coenergy_D(v, "C", n)) for v in highest_weight_vertices(mu, lam, "C", n))
    _, parts = e_set(mu, lam, n)
    right = QPoly.sum(
        QPoly.monomial(2 * coenergy_D(b, "A", n), len(members)) for b, members in parts.items() if members
    ).shift(sum(mu) - sum(lam))
    return left, right


def check_f_equals_e(lam: Sequence[int], m: int, n: int, log: CheckLog) -> None:
    """F_{λ,1^m} = E_{λ,1^m} as sets of letter sequences."""
    shape = (1,) * m
    f_set = set(highest_weight_vertices(shape, lam, "C", n))
    e_members, _ = e_set(shape, lam, n)
    if f_set != set(e_members):
        log.fail(f"F != E for λ={tuple(lam)}: |F|={len(f_set)} |E|={len(e_members)}")


def check_split_square(lam: Sequence[int], mu: Sequence[int], n: int, log: CheckLog) -> None:
    """S^D ∘ θ = θ ∘ S^C on F_{λ,μ}."""
    for v in highest_weight_vertices(mu, lam, "C", n):
        left = split(theta(v, n), "D", n)
        right = theta(split(v, "C", n), n)
        if left != right:
            log.fail(f"{word_str(v)}: S^D θ = {word_str(left)}, θ S^C = {word_str(right)}")


def zigzag_sum(letters: Sequence[int], n: int) -> int:
    """2 · Σ_{i∈Z_b} (m − i)(−1 + 2h̄(x_i ⊗ x_{i+1})), Z_b the barred/unbarred switches."""
    m = len(letters)
    total = 0
    for i in range(m - 1):
        x, y = letters[i], letters[i + 1]
        if (x < 0) != (y < 0):
            total += (m - 1 - i) * (-1 + 2 * h_small(x, y, n))
    return 2 * total


def check_zigzag(lam: Sequence[int], m: int, n: int, log: CheckLog) -> None:
    for b in highest_weight_vertices((1,) * m, lam, "C", n):
        letters = [w[0] for w in b]
        if zigzag_sum(letters, n) != m - sum(lam):
            log.fail(f"{word_str(b)}: zigzag sum {zigzag_sum(letters, n) / 2} != {(m - sum(lam)) / 2}")


def check_columns_shift(lam: Sequence[int], m: int, n: int, log: CheckLog) -> None:
    """D̄(b) = D̃(b) + (m − |λ|)/2 on F_{λ,1^m}."""
    for b in highest_weight_vertices((1,) * m, lam, "C", n):
        d_bar, d_tilde = coenergy_D(b, "C", n), coenergy_D_tilde(b, n)
        if 2 * d_bar != 2 * d_tilde + m - sum(lam):
            log.fail(f"{word_str(b)}: D̄={d_bar} D̃={d_tilde}")


def check_theta_rows(lam: Sequence[int], mu: Sequence[int], n: int, log: CheckLog, max_row: int = 4) -> None:
    """θ on each factor of F_{λ,μ} agrees with the rewriting rules, rows up to max_row letters."""
    seen = set()
    for v in highest_weight_vertices(mu, lam, "C", n):
        for row in v:
            if len(row) > max_row or row in seen:
                continue
            seen.add(row)
            built, rewritten = theta_row(row, n), theta_by_rewriting(row, n)
            if built != rewritten:
                log.fail(f"θ({word_str((row,))}) = {word_str((built,))}, rewriting gives {word_str((rewritten,))}")
