import logging
import math
import os
from fractions import Fraction
from typing import List, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader

from laplat.core.errors import InvalidInputError
from laplat.models.lattice import LaplacianLattice
from laplat.models.point import SimplexOrientation
from laplat.services import delaunay_service, lattice_service, oracle_service

logger = logging.getLogger(__name__)

SCALE = 40.0
PRECISION = 3


def embed(point: Sequence[Fraction]) -> Tuple[float, float]:
    """Isometric image of a point of H_0 (three coordinates) in the plane, SVG y axis pointing down"""
    x = float(point[0] - point[1]) / math.sqrt(2)
    y = float(point[0] + point[1] - 2 * point[2]) / math.sqrt(6)
    return round(SCALE * x, PRECISION), round(-SCALE * y, PRECISION)


class SvgRenderer:
    """Renders lattice points, Delaunay triangles and grid Voronoi boundaries of a two-dimensional lattice"""

    def __init__(self):
        template_dir = os.path.join(os.path.dirname(os.path.dirname(__file__)), "templates", "svg")
        self.jinja_env = Environment(loader=FileSystemLoader(template_dir), autoescape=True)

    def _window(self, L: LaplacianLattice, radius: Fraction) -> List[Tuple[int, ...]]:
        origin = (0, 0, 0)
        forward = set(lattice_service.lattice_points_within(L, origin, SimplexOrientation.TRI, radius))
        backward = set(lattice_service.lattice_points_within(L, origin, SimplexOrientation.TRI_BAR, radius))
        return sorted(forward & backward)

    def render(self, L: LaplacianLattice, resolution: int = 12, radius=None) -> str:
        if L.n != 2:
            raise InvalidInputError("drawings are limited to three-vertex graphs", detail={"n": L.n})
        radius = Fraction(radius) if radius is not None else Fraction(max(L.graph.degrees()))
        window = self._window(L, radius)
        inside = set(window)

        triangles = []
        cells = delaunay_service.simplices(L)
        for q in window:
            for simplex in cells:
                corners = [tuple(a + b for a, b in zip(v, q)) for v in simplex.vertices]
                if all(c in inside for c in corners):
                    triangles.append(" ".join(f"{x},{y}" for x, y in map(embed, corners)))

        ties = set()
        cell = list(oracle_service.iter_grid(L, resolution))
        for q in window:
            for p in cell:
                shifted = tuple(a + b for a, b in zip(p, q))
                _, argmins = lattice_service.h_distance(L, shifted, SimplexOrientation.TRI)
                if len(argmins) > 1 and all(m in inside for m in argmins):
                    ties.add(embed(shifted))

        classes = []
        for triangle in delaunay_service.triangle_classes(L):
            label = " ".join("(" + ",".join(str(c) for c in v) + ")" for v in triangle)
            classes.append((" ".join(f"{x},{y}" for x, y in map(embed, triangle)), label))

        points = [(*embed(q), ",".join(str(c) for c in q)) for q in window]
        reach = max((max(abs(x), abs(y)) for x, y, _ in points), default=SCALE) + SCALE / 2
        span = round(2 * reach, PRECISION)
        template = self.jinja_env.get_template("delaunay.svg.j2")
        svg = template.render(
            title=f"Laplacian lattice of {L.graph.to_json()['edges']}",
            size=int(span),
            view_box=f"{-reach:.{PRECISION}f} {-reach:.{PRECISION}f} {span:.{PRECISION}f} {span:.{PRECISION}f}",
            origin_x=f"{-reach:.{PRECISION}f}",
            span=f"{span:.{PRECISION}f}",
            ties=sorted(ties),
            tie_radius=1.2,
            triangles=sorted(set(triangles)),
            classes=classes,
            stroke=1,
            points=points,
            point_radius=3,
        )
        logger.debug(f"SVG scene: {len(points)} points, {len(triangles)} triangles, {len(classes)} triangle classes, {len(ties)} tie points")
        return svg


svg_renderer = SvgRenderer()
