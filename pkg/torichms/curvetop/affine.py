"""
Affine mirror curve of one cone

The curve H(X, Y) = X^r Y^-s + Y^m + 1 = 0 covers the pair of pants
X' + Y' + 1 = 0 by (X, Y) -> (X^r Y^-s, Y^m), an unramified cover of degree
rm. Over the puncture of type i it has m_i punctures, each wrapping r_i times.
"""
from dataclasses import dataclass
from typing import Tuple

from torichms.exceptions import ConventionViolationException
from torichms.logging import getLogger
from torichms.toricdata.cone import ConeNormalForm
from torichms.toricdata.group import sequence_data
from torichms.toricdata.lattice import LatticePoint

logger = getLogger(__name__)


@dataclass(frozen=True)
class AffineCurveModel:
    normal_form: ConeNormalForm
    order: int
    punctures: Tuple[int, int, int]
    stabilizers: Tuple[int, int, int]
    chi_bar: int
    genus: int

    @property
    def degree(self) -> int:
        """Covering degree onto the pair of pants"""
        return self.order

    @property
    def puncture_count(self) -> int:
        return sum(self.punctures)

    @property
    def open_chi(self) -> int:
        """Euler characteristic of the punctured curve"""
        return self.chi_bar - self.puncture_count

    def to_dict(self) -> dict:
        return {
            'rms': list(self.normal_form.key),
            'order': self.order,
            'punctures': list(self.punctures),
            'stabilizers': list(self.stabilizers),
            'chi_bar': self.chi_bar,
            'genus': self.genus,
        }


def affine_curve(nf: ConeNormalForm) -> AffineCurveModel:
    """
    Genus and punctures by the Hurwitz formula

    chi_bar = -rm + m1 + m2 + m3 and g = (2 - chi_bar) / 2.

    Example:
        affine_curve(normal_form_of(3, 1, 1)).genus  # 1
    """
    pairs = sequence_data(nf)
    order = nf.order
    punctures = tuple(p.m for p in pairs)
    chi_bar = -order + sum(punctures)
    if chi_bar > 2 or (2 - chi_bar) % 2:
        raise ConventionViolationException(
            f"Hurwitz count gives chi_bar = {chi_bar} for {nf}",
            counterexample={'rms': list(nf.key), 'chi_bar': chi_bar},
        )
    model = AffineCurveModel(
        normal_form=nf,
        order=order,
        punctures=punctures,
        stabilizers=tuple(p.r for p in pairs),
        chi_bar=chi_bar,
        genus=(2 - chi_bar) // 2,
    )
    logger.debug("affine curve", extra=model.to_dict())
    return model


def newton_polygon(nf: ConeNormalForm) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
    """Exponents of the three monomials of H, which is the moment triangle"""
    return (LatticePoint(nf.r, -nf.s), LatticePoint(0, nf.m), LatticePoint(0, 0))


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


def curve_equation(nf: ConeNormalForm) -> str:
    """
    Example:
        curve_equation(normal_form_of(3, 1, 1))  # 'X^3*Y^-1 + Y + 1 = 0'
    """
    first = '*'.join(t for t in (_power('X', nf.r), _power('Y', -nf.s)) if t)
    second = _power('Y', nf.m)
    return f"{first} + {second} + 1 = 0"
