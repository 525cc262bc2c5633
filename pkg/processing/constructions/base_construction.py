"""
Base construction class
"""
from abc import ABC, abstractmethod
from typing import Dict, Optional

from processing.graded.expansion import GradedAlgebra, expand
from processing.graded.local_algebra import LocalLieAlgebra
from processing.pentad import CartanPentad, local_algebra


class BaseConstruction(ABC):
    """Base class for everything that produces a local Lie algebra to expand"""

    def __init__(self, name: str):
        self.name = name
        self._local: Optional[LocalLieAlgebra] = None

    @abstractmethod
    def build_local(self) -> LocalLieAlgebra:
        """
        Build the local part

        Returns:
            LocalLieAlgebra G-1 + G0 + G1
        """
        pass

    def local_algebra(self) -> LocalLieAlgebra:
        if self._local is None:
            self._local = self.build_local()
        return self._local

    def expand(self, max_degree: int, max_total_dim: Optional[int] = None) -> GradedAlgebra:
        return expand(self.local_algebra(), max_degree, max_total_dim)

    def dimension_table(self, max_degree: int) -> Dict:
        """Per-degree dimensions plus termination flags, in the dimension-table layout"""
        ga = self.expand(max_degree)
        return {
            "name": self.name,
            "degrees": ga.dimensions(),
            "terminated_pos": ga.terminated_pos,
            "terminated_neg": ga.terminated_neg,
        }


class PentadConstruction(BaseConstruction):
    """The PC Lie algebra of a pentad of Cartan type"""

    def __init__(self, pentad: CartanPentad, name: str = "pentad"):
        super().__init__(name)
        self.pentad = pentad

    def build_local(self) -> LocalLieAlgebra:
        return local_algebra(self.pentad, name=self.name)
