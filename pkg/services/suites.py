"""Registry of verification suites: each suite turns a RunConfig into grid jobs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Tuple

from energy.verify import verify_hw_classes, verify_involution, verify_splitting, verify_yang_baxter
from kostka.verify import verify_hat_duality, verify_routes
from lusztig.genfun import duality_pairs, genfun_check, verify_duality, verify_littlewood
from lusztig.verify import (
    negative_control,
    verify_corollary7,
    verify_multiplicity,
    verify_prop5,
    verify_theorem6,
    verify_translation,
)
from models.classical_type import ClassicalType, Diamond
from models.exceptions import InvalidInputError
from models.partition import Partition
from models.run_config import RunConfig
from onedim.verify import (
    columns_grid,
    grid_pairs,
    verify_column_coenergy,
    verify_f_equals_e,
    verify_ny,
    verify_stability,
    verify_statistics,
    verify_theorem4,
)
from onedim.sums import default_rank
from weights.lattice import dominance_geq, pad
from weights.partitions import dominates, partitions_of, partitions_up_to

from .grid import Job

logger = logging.getLogger(__name__)

ALL_DIAMONDS = (Diamond.EMPTY, Diamond.ONE, Diamond.TWO, Diamond.ONE_ONE)
SMALL_TYPES = (("A", 3), ("B", 2), ("C", 2), ("D", 4))


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    build: Callable[[RunConfig], List[Job]]


def _m(config: RunConfig, default: int) -> int:
    return config.m if config.m is not None else default


def _equal_size_pairs(max_size: int) -> List[Tuple[Partition, Partition]]:
    out = []
    for size in range(1, max_size + 1):
        for lam, mu in product(partitions_of(size, size), repeat=2):
            if dominates(lam, mu):
                out.append((Partition(parts=lam), Partition(parts=mu)))
    return out


def _types(config: RunConfig) -> List[ClassicalType]:
    if config.family is not None:
        return [ClassicalType(family=config.family, n=config.rank or dict(SMALL_TYPES)[config.family])]
    return [ClassicalType(family=f, n=n) for f, n in SMALL_TYPES]


def _build_theorem4(config: RunConfig) -> List[Job]:
    return [Job(verify_theorem4, (lam, mu, config.rank)) for lam, mu in grid_pairs(config.max_mu, _m(config, 2))]


def _build_ny(config: RunConfig) -> List[Job]:
    return [Job(verify_ny, (lam, mu, config.rank)) for lam, mu in _equal_size_pairs(config.max_mu)]


def _build_stability(config: RunConfig) -> List[Job]:
    kind = config.diamond or Diamond.ONE_ONE
    if kind not in (Diamond.EMPTY, Diamond.ONE_ONE):
        raise InvalidInputError(f"Stability is checked for kinds empty and 11, not {kind.value}")
    m = _m(config, 2)
    ranks = config.ranks or [default_rank(kind, m), default_rank(kind, m) + 1]
    pairs = grid_pairs(config.max_mu, m, same_parity=kind is Diamond.ONE_ONE)
    if kind is Diamond.EMPTY:
        pairs = [(lam, mu) for lam, mu in pairs if lam.size == mu.size]
    return [Job(verify_stability, (lam, mu, kind, tuple(ranks))) for lam, mu in pairs]


def _build_kostka(config: RunConfig) -> List[Job]:
    jobs = []
    for lam, mu in _equal_size_pairs(config.max_mu):
        jobs.append(Job(verify_routes, (lam, mu)))
        jobs.append(Job(verify_hat_duality, (lam, mu)))
    return jobs


def _diamonds(config: RunConfig, default) -> Tuple[Diamond, ...]:
    return (config.diamond,) if config.diamond is not None else default


def _build_theorem6(config: RunConfig) -> List[Job]:
    m = _m(config, 2)
    jobs = []
    diamonds = _diamonds(config, ALL_DIAMONDS)
    for diamond in diamonds:
        for lam, mu in grid_pairs(config.max_mu, m, same_parity=False):
            jobs.append(Job(verify_theorem6, (lam, mu, diamond, config.rank)))
    if Diamond.ONE in diamonds:
        jobs.append(Job(negative_control, (Partition(), Partition(parts=(1,)), 2)))
    return jobs


def _build_corollary7(config: RunConfig) -> List[Job]:
    m = _m(config, 2)
    return [
        Job(verify_corollary7, (lam, mu, diamond, config.rank))
        for diamond in _diamonds(config, (Diamond.EMPTY, Diamond.ONE_ONE))
        for lam, mu in grid_pairs(config.max_mu, m, same_parity=False)
    ]


def _build_prop5(config: RunConfig) -> List[Job]:
    jobs = []
    size = min(config.max_mu, 3)
    for t in _types(config):
        shapes = [pad(p, t.n) for p in partitions_up_to(size, min(2, t.n))]
        for lam, mu in product(shapes, repeat=2):
            if dominance_geq(lam, mu, t):
                jobs.append(Job(verify_prop5, (lam, mu, t, None, config.kmax)))
    return jobs


def _build_prop33(config: RunConfig) -> List[Job]:
    return [Job(verify_f_equals_e, (lam, m, None)) for lam, m in columns_grid(_m(config, 4))]


def _build_prop39(config: RunConfig) -> List[Job]:
    return [Job(verify_column_coenergy, (lam, m, None)) for lam, m in columns_grid(_m(config, 4))]


def _build_prop40(config: RunConfig) -> List[Job]:
    return [Job(verify_statistics, (lam, mu, config.rank)) for lam, mu in grid_pairs(config.max_mu, _m(config, 2))]


def _build_littlewood(config: RunConfig) -> List[Job]:
    return [Job(verify_littlewood, (d, config.nvars, config.degree_cap)) for d in _diamonds(config, ALL_DIAMONDS)]


_GENFUN_DEFAULTS = (("A", 2, (0, 0)), ("B", 2, (0, 0)), ("C", 2, (0, 0)), ("D", 4, (1, 1, 0, 0)))


def _build_genfun(config: RunConfig) -> List[Job]:
    window = min(config.degree_cap, 3)
    if config.family is not None:
        t = _types(config)[0]
        return [Job(genfun_check, (pad(config.mu.parts, t.n), t, None, window))]
    return [Job(genfun_check, (mu, ClassicalType(family=f, n=n), None, window)) for f, n, mu in _GENFUN_DEFAULTS]


def _build_duality(config: RunConfig) -> List[Job]:
    return [Job(verify_duality, (lam, mu)) for n in (2, 3) for lam, mu in duality_pairs(n, 3)]


def _build_translation(config: RunConfig) -> List[Job]:
    jobs = []
    for t in _types(config):
        shapes = [pad(p, t.n) for p in partitions_up_to(min(config.max_mu, 3), min(2, t.n))]
        for lam, mu in product(shapes, repeat=2):
            if dominance_geq(lam, mu, t):
                jobs.append(Job(verify_translation, (lam, mu, t)))
    return jobs


def _build_multiplicity(config: RunConfig) -> List[Job]:
    t = ClassicalType(family="C", n=2)
    shapes = [pad(p, 2) for p in partitions_up_to(4, 2)]
    return [Job(verify_multiplicity, (lam, mu, 2)) for lam, mu in product(shapes, repeat=2)
            if dominance_geq(lam, mu, t)]


def _build_yangbaxter(config: RunConfig) -> List[Job]:
    ranks = [config.rank] if config.rank else [2, 3]
    jobs = []
    for family, n in product(("A", "C"), ranks):
        for shape in product((1, 2), repeat=3):
            jobs.append(Job(verify_yang_baxter, (shape, family, n)))
        for l, k in product((1, 2, 3), repeat=2):
            jobs.append(Job(verify_involution, (l, k, family, n)))
    return jobs


def _build_splitting(config: RunConfig) -> List[Job]:
    n = config.rank or 2
    jobs = []
    for size in range(2, min(config.max_mu, 4) + 1):
        for parts in partitions_of(size, size):
            for family in ("A", "C"):
                jobs.append(Job(verify_splitting, (tuple(reversed(parts)), family, n)))
                if parts != tuple(reversed(parts)):
                    jobs.append(Job(verify_splitting, (parts, family, n)))
    return jobs


def _build_hwclasses(config: RunConfig) -> List[Job]:
    return [Job(verify_hw_classes, (l, k, config.rank or 3)) for l, k in product(range(1, 5), repeat=2)]


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("theorem4", "X̄^(1,1) = K̄^(1,1) through the θ-bijection", _build_theorem4),
        Suite("theorem6", "K̄^⋄ against ∞KL of the hat pair, all four kinds, plus the L ≡ 1 witness", _build_theorem6),
        Suite("corollary7", "X̄^⋄ against KL of the hat pair for kinds empty and 11", _build_corollary7),
        Suite("prop5", "KL of translated weights stabilizes to ∞KL", _build_prop5),
        Suite("prop33", "F = E on column shapes 1^m", _build_prop33),
        Suite("prop39", "zigzag identity and D̄ = D̃ + (m − |λ|)/2 on 1^m", _build_prop39),
        Suite("prop40", "split square, D̃ constancy, the D̄/D̃ shift, D̃ = D̄^A, |F| = |E|", _build_prop40),
        Suite("littlewood", "Littlewood product formulas up to an x-degree cap", _build_littlewood),
        Suite("ny", "type-A 1-d sums equal cocharge Kostka–Foulkes polynomials", _build_ny),
        Suite("yangbaxter", "Yang–Baxter and σ ∘ σ = id for R-matrices", _build_yangbaxter),
        Suite("stability", "1-d sums agree across ranks", _build_stability),
        Suite("kostka", "three Kostka–Foulkes routes agree; box-complement duality", _build_kostka),
        Suite("genfun", "generating function of ∞KL and its convolution form", _build_genfun),
        Suite("duality", "∞KL^A is invariant under λ, μ ↦ λ*, μ*", _build_duality),
        Suite("translation", "∞KL is invariant under translation by (kⁿ)", _build_translation),
        Suite("multiplicity", "KL^C(1) equals the crystal weight multiplicity", _build_multiplicity),
        Suite("splitting", "splitting preserves D̄ and does not depend on the order of moves", _build_splitting),
        Suite("hwclasses", "split form, H̄ and D̄ on the type-C highest weight classes", _build_hwclasses),
    )
}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError as exc:
        raise InvalidInputError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}") from exc
