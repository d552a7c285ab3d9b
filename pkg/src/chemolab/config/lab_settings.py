from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class LabSettings(BaseSettings):
    """Settings controlling the behaviour of the laboratory runtime."""

    LOG_LEVEL: str = Field("INFO", description="loguru level for the stderr sink")
    WORKERS: int = Field(2, description="process pool size for sweeps when --workers is not given")
    STORE_RESULTS: bool = Field(False, description="persist verdicts and runs to the results store")
    CERTIFICATE_EXPONENT_CAP: float = Field(
        64.0, description="largest certificate exponent reused as a monitor exponent"
    )

    BASE_DIR: Path = Path.cwd() / "chemolab"

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"

    @property
    def output_dir(self) -> Path:
        path = self.BASE_DIR / "runs"
        path.mkdir(parents=True, exist_ok=True)
        return path


lab_settings = LabSettings()
