import sys
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from .errors import ConfigurationError

CONFIG_TABLE = "bundle-auts"


# Run configuration shared by every subcommand
class RunConfig(BaseModel):
    g: int = Field(2, ge=1)
    k: int = 1
    seed: int = Field(0, ge=0, lt=2**64)
    max_word_len: int = Field(6, ge=0)
    trials: int = Field(100, ge=1)
    oracle_depth: int = Field(6, ge=0)
    oracle_frontier: int = Field(1_000_000, ge=1)
    oracle_slack: int = Field(0, ge=0)
    output: Literal["text", "json"] = "text"
    report_path: Optional[str] = None  # JSON report destination
    fixtures_dir: str = "fixtures"

    @model_validator(mode="after")
    def _excluded_context(self) -> "RunConfig":
        if (self.g, self.k) == (1, 0):
            raise ValueError("Assume (g,k) != (1,0): the center of pi_1(X_1^0) is not <z>")
        return self

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Return a validated copy with every non-None override applied."""
        data = self.model_dump()
        data.update({key: value for key, value in overrides.items() if value is not None})
        return RunConfig(**data)


def _read_toml(path: Path) -> Optional[Dict[str, Any]]:
    # For Python >= 3.11, tomllib is in stdlib
    try:
        import tomllib
    except ImportError:
        try:
            import tomli as tomllib
        except ImportError:
            print("Warning: neither tomllib nor tomli is installed. Cannot parse pyproject.toml.", file=sys.stderr)
            return None
    with open(path, "rb") as f:
        return tomllib.load(f)


def load_config(config_path: Optional[str] = None) -> RunConfig:
    path = Path(config_path) if config_path else Path.cwd() / "pyproject.toml"

    if not path.exists():
        print(f"Warning: Config not found at {path}, using defaults.", file=sys.stderr)
        return RunConfig()

    try:
        data = _read_toml(path)
    except Exception as e:
        print(f"Warning: could not read {path}: {e}. Using defaults.", file=sys.stderr)
        return RunConfig()
    if data is None:
        return RunConfig()

    section = data.get("tool", {}).get(CONFIG_TABLE, {})
    try:
        return RunConfig(**section)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid [tool.{CONFIG_TABLE}] in {path}: {e}") from e
