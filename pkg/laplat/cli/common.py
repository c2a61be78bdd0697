"""Input loading and output rendering shared by the subcommands"""

import json
import sys
from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError

from laplat.core.errors import InvalidInputError, UsageError
from laplat.models.graph import Multigraph
from laplat.schemas.graph import GraphInput

ModelT = TypeVar("ModelT", bound=BaseModel)


def load_json(source: str) -> Any:
    """JSON from a file path, from stdin ("-"), or given inline"""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("[", "{")):
        text = source
    else:
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise UsageError(f"cannot read {source}", detail={"path": source, "reason": str(e)}) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError("malformed JSON", detail={"source": source, "reason": str(e)}) from e


def parse(schema: Type[ModelT], data: Any, source: str) -> ModelT:
    try:
        return schema.model_validate(data)
    except ValidationError as e:
        errors = [{"loc": [str(x) for x in err["loc"]], "msg": err["msg"]} for err in e.errors()]
        raise InvalidInputError(f"invalid {schema.__name__}", detail={"source": source, "errors": errors}) from e


def load_graph(source: str) -> Multigraph:
    return parse(GraphInput, load_json(source), source).to_multigraph()


def render(result: Any, output_format: str) -> str:
    if isinstance(result, str):
        return result
    payload = result.model_dump(mode="json") if isinstance(result, BaseModel) else result
    if output_format == "pretty":
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))
