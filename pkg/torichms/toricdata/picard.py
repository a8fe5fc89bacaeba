"""
Cokernel models of the stacky Picard group

For a set S of rays the presentation P (rows b_i, i in S) sends
u in Z^3 to (<u, b_i>)_{i in S}. The cokernel Z^S / P.Z^3 is read off the
Smith form U.P.V = D: x in Z^S has class ((U.x)_i mod d_i) over the torsion
factors and (U.x)_i over the free coordinates. Restricting to a smaller ray
set drops coordinates, which sends im P_S into im P_S'.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import ImmutableMatrix, Matrix

from torichms.exceptions import InputException
from torichms.logging import getLogger
from torichms.toricdata.cone import ConeNormalForm, normalize_cone
from torichms.toricdata.fan import FanEdge, StackyFan
from torichms.toricdata.group import Character, StructureGroup, structure_group
from torichms.toricdata.smith import SmithForm, smith_normal_form

logger = getLogger(__name__)

Subset = Union[None, str, int, FanEdge, Sequence[int]]


@dataclass(frozen=True, order=True)
class PicardClass:
    """Class in the cokernel: torsion residues then free coordinates"""
    torsion: Tuple[int, ...]
    free: Tuple[int, ...] = ()


@dataclass(frozen=True)
class CokernelModel:
    """
    Z^S modulo the image of the presentation

    rays lists the point indices of S in coordinate order. For a 3-cone the
    normal form and structure group are attached, enabling the
    identification with the character group (e_i -> rho_i).
    """
    rays: Tuple[int, ...]
    presentation: ImmutableMatrix
    smith: SmithForm
    normal_form: Optional[ConeNormalForm] = None
    structure: Optional[StructureGroup] = None
    _from_character: Dict[Character, PicardClass] = field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.rays)

    @property
    def torsion_factors(self) -> Tuple[int, ...]:
        return self.smith.torsion

    @property
    def free_rank(self) -> int:
        return self.size - self.smith.rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        """Number of classes; raises for an infinite cokernel"""
        if not self.is_finite:
            raise InputException(f"cokernel over rays {self.rays} has free rank {self.free_rank}")
        total = 1
        for d in self.torsion_factors:
            total *= d
        return total

    def _torsion_positions(self) -> List[int]:
        diagonal = self.smith.diagonal
        return [i for i, d in enumerate(diagonal) if d > 1]

    def _free_positions(self) -> List[int]:
        return list(range(self.smith.rank, self.size))

    def class_of(self, vector: Sequence[int]) -> PicardClass:
        """Class of x in Z^S (coordinates ordered as rays)"""
        if len(vector) != self.size:
            raise InputException(f"vector of length {len(vector)} for {self.size} rays")
        y = self.smith.U * Matrix([int(v) for v in vector])
        diagonal = self.smith.diagonal
        torsion = tuple(int(y[i]) % diagonal[i] for i in self._torsion_positions())
        free = tuple(int(y[i]) for i in self._free_positions())
        return PicardClass(torsion, free)

    def lift(self, element: PicardClass) -> Tuple[int, ...]:
        """A representative in Z^S"""
        y = [0] * self.size
        for position, value in zip(self._torsion_positions(), element.torsion):
            y[position] = value
        for position, value in zip(self._free_positions(), element.free):
            y[position] = value
        x = self.smith.U.inv() * Matrix(y)
        return tuple(int(v) for v in x)

    def project(self, element: PicardClass, target: 'CokernelModel') -> PicardClass:
        """Restriction to a model over a subset of these rays"""
        positions = {ray: k for k, ray in enumerate(self.rays)}
        missing = [ray for ray in target.rays if ray not in positions]
        if missing:
            raise InputException(f"rays {missing} are not in the source model {self.rays}")
        x = self.lift(element)
        return target.class_of([x[positions[ray]] for ray in target.rays])

    def elements(self) -> Iterator[PicardClass]:
        if not self.is_finite:
            raise InputException("cannot enumerate a cokernel with a free part; use sample_elements")
        for residues in product(*(range(d) for d in self.torsion_factors)):
            yield PicardClass(tuple(residues))

    def sample_elements(self, bound: int = 1) -> Iterator[PicardClass]:
        """Every torsion class times free coordinates in [-bound, bound]"""
        free_ranges = [range(-bound, bound + 1)] * self.free_rank
        for residues in product(*(range(d) for d in self.torsion_factors)):
            for free in product(*free_ranges):
                yield PicardClass(tuple(residues), tuple(free))

    def to_character(self, element: PicardClass) -> Character:
        """Cone models only: e_i -> rho at the normal-form position of ray i"""
        nf, structure = self._cone_data()
        x = self.lift(element)
        result = structure.group.trivial_character
        for position, input_index in enumerate(nf.ray_order):
            result = result * (structure.rho(position + 1) ** x[input_index])
        return result

    def from_character(self, character: Character) -> PicardClass:
        """Cone models only: inverse of to_character"""
        nf, structure = self._cone_data()
        if not self._from_character:
            index_of = {position: nf.ray_order[position] for position in range(3)}
            for a in range(structure.rho1.order):
                for b in range(structure.rho2.order):
                    x = [0, 0, 0]
                    x[index_of[0]] += a
                    x[index_of[1]] += b
                    chi = (structure.rho1 ** a) * (structure.rho2 ** b)
                    self._from_character.setdefault(chi, self.class_of(x))
        try:
            return self._from_character[character]
        except KeyError:
            raise InputException(f"{character!r} is not a character of this cone")

    def _cone_data(self) -> Tuple[ConeNormalForm, StructureGroup]:
        if self.normal_form is None or self.structure is None:
            raise InputException(f"rays {self.rays} do not form a 3-cone model")
        return self.normal_form, self.structure


def _resolve_subset(fan: StackyFan, subset: Subset) -> Tuple[Tuple[int, ...], Optional[int]]:
    if subset is None or subset == 'whole':
        return fan.used_indices, None
    if isinstance(subset, bool):
        raise InputException("subset must be a cone index, an edge or a ray list")
    if isinstance(subset, int):
        if not 0 <= subset < len(fan.triangles):
            raise InputException(f"cone {subset} out of range 0..{len(fan.triangles) - 1}")
        return tuple(fan.triangles[subset]), subset
    if isinstance(subset, FanEdge):
        return subset.rays, None
    if isinstance(subset, str):
        raise InputException(f"unknown subset {subset!r}")
    rays = tuple(subset)
    for ray in rays:
        if ray not in fan.used_indices:
            raise InputException(f"point {ray} is not a ray of the fan")
    if len(rays) == 3:
        for cone, tri in enumerate(fan.triangles):
            if set(tri) == set(rays):
                return rays, cone
    return rays, None


def cokernel_over(rays: Iterable[Tuple[int, int, int]], indices: Sequence[int]) -> CokernelModel:
    rows = [list(r) for r in rays]
    if not rows:
        raise InputException("the ray subset is empty")
    presentation = ImmutableMatrix(rows)
    return CokernelModel(
        rays=tuple(indices),
        presentation=presentation,
        smith=smith_normal_form(presentation),
    )


def stacky_picard(fan: StackyFan, subset: Subset = None) -> CokernelModel:
    """
    Cokernel model over the whole fan, one cone or one edge

    Args:
        subset: None or 'whole', a cone index, a FanEdge, or point indices

    Raises:
        InputException: empty or unknown subset
    """
    indices, cone = _resolve_subset(fan, subset)
    if not indices:
        raise InputException("the ray subset is empty")
    rays = [fan.points[i].lift() for i in indices]
    model = cokernel_over(rays, indices)

    if cone is not None:
        nf = normalize_cone(*rays)
        model = CokernelModel(
            rays=model.rays,
            presentation=model.presentation,
            smith=model.smith,
            normal_form=nf,
            structure=structure_group(nf),
        )

    logger.debug(
        "cokernel model built",
        extra={'rays': list(indices), 'torsion': list(model.torsion_factors), 'free_rank': model.free_rank},
    )
    return model
