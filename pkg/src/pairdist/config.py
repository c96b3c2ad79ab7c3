import os
import tomllib
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .constants import DEFAULT_MAX_ENUM, SERVICE_NAME
from .models import EnumBudget, OutputFormat


class PairdistSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    max_enum: int = Field(default=DEFAULT_MAX_ENUM, ge=1)
    jobs: int = Field(default=1, ge=1)
    format: OutputFormat = OutputFormat.PRETTY
    reduce_by_scalars: bool = True
    debug: bool = False

    @field_validator("format", mode="before")
    @classmethod
    def _normalize_format(cls, v: object) -> object:
        if isinstance(v, str):
            return v.lower()
        return v

    def budget(self, max_enum: int | None = None) -> EnumBudget:
        return EnumBudget(
            max_codewords=max_enum if max_enum is not None else self.max_enum,
            reduce_by_scalars=self.reduce_by_scalars,
        )


def find_pyproject_directory(start: Path | None = None) -> Path | None:
    """Nearest directory at or above `start` holding a pyproject.toml."""
    here = (start or Path.cwd()).resolve()
    return next(
        (d for d in (here, *here.parents) if (d / "pyproject.toml").is_file()), None
    )


def read_tool_config(project_dir: Path) -> dict[str, Any]:
    with (project_dir / "pyproject.toml").open("rb") as f:
        tool = tomllib.load(f).get("tool")
    section = tool.get(SERVICE_NAME) if isinstance(tool, dict) else None
    return section if isinstance(section, dict) else {}


def _env_bool(name: str) -> bool | None:
    if name not in os.environ:
        return None
    return os.environ[name].lower() == "true"


def _env_str(name: str) -> str | None:
    if name not in os.environ:
        return None
    stripped = os.environ[name].strip()
    return stripped if stripped else None


def _env_int(name: str) -> int | None:
    value = _env_str(name)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {value!r}") from exc


def _env_overrides() -> dict[str, Any]:
    overrides = {
        "max_enum": _env_int("PAIRDIST_MAX_ENUM"),
        "jobs": _env_int("PAIRDIST_JOBS"),
        "format": _env_str("PAIRDIST_FORMAT"),
        "reduce_by_scalars": _env_bool("PAIRDIST_REDUCE_BY_SCALARS"),
        "debug": _env_bool("PAIRDIST_DEBUG"),
    }
    return {key: value for key, value in overrides.items() if value is not None}


def load_pairdist_settings(cwd: Path | None = None) -> PairdistSettings:
    project_dir = find_pyproject_directory(cwd)
    raw = read_tool_config(project_dir) if project_dir is not None else {}
    # Environment wins over [tool.pairdist]; both pass through one validation.
    merged = {**raw, **_env_overrides()}
    try:
        return PairdistSettings.model_validate(merged)
    except ValidationError as exc:
        raise ValueError(f"Invalid [tool.pairdist] configuration: {exc}") from exc
