""" 수직 경로 적분으로 검증 가능한 인자 영역 """
import math
from typing import Iterable, List, Tuple

from ..exceptions import EmptyAdmissibleRegion
from ..evaluator import SECTOR_MARGIN
from ..hspec import Argument, convergence_profile
from .base import IdentityCase

__all__ = ("admissible_sector", "within_sector", "restrict_samples")


def admissible_sector(case: IdentityCase) -> Tuple[float, float, float]:
    """ (기본 인자 위상 한계 Φ, 최소 모듈러스, 최대 모듈러스)

    모든 항에 대해 |φ + shift| < 반폭 - margin 이 되는 |φ| < Φ.
    수직 경로 적분은 모듈러스에 제한이 없으므로 (0, ∞) 를 돌려준다.
    EmptyAdmissibleRegion: 어떤 항의 a* 가 0 이하이거나 Φ <= 0
    """
    bound = math.inf
    for side, index, term in case.terms:
        profile = convergence_profile(term.spec)
        if profile.a_star <= 0:
            raise EmptyAdmissibleRegion(
                f"{side}[{index}] 항의 a* 가 양수가 아닙니다. -> a*={profile.a_star}"
            )
        bound = min(bound, profile.sector_halfwidth - SECTOR_MARGIN - abs(term.phase_shift))
    if not bound > 0:
        raise EmptyAdmissibleRegion(
            f"{case.id.value} 의 허용 위상 구간이 비어 있습니다. -> Φ={bound}"
        )
    return bound, 0.0, math.inf


def within_sector(case: IdentityCase, z: Argument) -> bool:
    bound, lo, hi = admissible_sector(case)
    return abs(z.phase) < bound and lo < z.modulus < hi


def restrict_samples(case: IdentityCase, samples: Iterable[Argument]) -> List[Argument]:
    """ 허용 영역 안의 표본만 남김 (EmptyAdmissibleRegion 전파) """
    bound, lo, hi = admissible_sector(case)
    return [z for z in samples if abs(z.phase) < bound and lo < z.modulus < hi]
