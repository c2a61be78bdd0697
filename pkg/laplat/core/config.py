from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Enumeration guards (vertex counts). Exceeding one is an error unless overridden.
    ENUMERATION_GUARD: int = 24
    MINCUT_CROSSCHECK_LIMIT: int = 16
    POLYTOPE_GUARD: int = 12
    LOCATE_GUARD: int = 8
    CRITICAL_GUARD: int = 8
    ISOMORPHISM_GUARD: int = 10
    CENSUS_GUARD: int = 4
    CENSUS_MAX_MULT: int = 3
    HULL_MAX_DIM: int = 3
    GRID_MAX_RESOLUTION: int = 64

    # Floating point (spectra only)
    JACOBI_TOLERANCE: float = 1e-12
    JACOBI_MAX_SWEEPS: int = 100
    ZERO_TOLERANCE: float = 1e-9
    KIRCHHOFF_RTOL: float = 1e-6

    # Chip-firing brute force coefficient box
    CHIP_ORACLE_BOUND: int = 3

    # Output
    SIGNIFICANT_DIGITS: int = 12
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="LAPLAT_",
        case_sensitive=True,
        extra="ignore",
    )


settings = Settings()


def check_guard(name: str, value: int, limit: int, guard_override: bool = False) -> None:
    """Raise EnumerationLimitError when value exceeds limit and no override was given"""
    if guard_override or value <= limit:
        return
    from laplat.core.errors import EnumerationLimitError

    raise EnumerationLimitError(
        f"enumeration limit exceeded for {name}: {value} > {limit}",
        detail={"guard": name, "value": value, "limit": limit},
    )
