from laplat.models.graph import Cut, LaplacianMatrix, Multigraph
from laplat.models.point import (
    LatticePoint,
    RationalPoint,
    SimplexOrientation,
    as_lattice_point,
    as_rational_point,
)
from laplat.models.lattice import LaplacianLattice
from laplat.models.delaunay import DelaunayPolytope, DelaunaySimplex
from laplat.models.chipfire import Configuration, FiringDirection
from laplat.models.oracle import (
    AcyclicOrientationPoint,
    LimitReport,
    LimitStep,
    PerturbationMode,
    PerturbedLattice,
)
from laplat.models.invariants import InvariantReport, RamanujanBounds, RamanujanEvidence, RamanujanVerdict
from laplat.models.census import CensusClass

__all__ = [
    "AcyclicOrientationPoint",
    "CensusClass",
    "Configuration",
    "Cut",
    "DelaunayPolytope",
    "DelaunaySimplex",
    "FiringDirection",
    "InvariantReport",
    "LaplacianLattice",
    "LaplacianMatrix",
    "LatticePoint",
    "LimitReport",
    "LimitStep",
    "Multigraph",
    "PerturbationMode",
    "PerturbedLattice",
    "RamanujanBounds",
    "RamanujanEvidence",
    "RamanujanVerdict",
    "RationalPoint",
    "SimplexOrientation",
    "as_lattice_point",
    "as_rational_point",
]
