from laplat.schemas.graph import GraphInput, GraphResponse
from laplat.schemas.point import ConfigurationInput, PointInput, VertexSetInput
