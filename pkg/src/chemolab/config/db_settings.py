from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class DBSettings(BaseSettings):
    """Results-store connection settings."""
    DB_URL: str = Field(f"sqlite:///{Path.cwd() / 'chemolab.db'}", description="SQLAlchemy URL")

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"

    @property
    def database_url(self) -> str:
        """Return the SQLAlchemy-compatible connection URL."""
        return self.DB_URL


db_settings = DBSettings()
