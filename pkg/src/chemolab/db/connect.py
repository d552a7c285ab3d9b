from contextlib import contextmanager
from functools import lru_cache
from typing import Generator

from sqlalchemy.engine import Engine
from sqlmodel import Session, SQLModel, create_engine

from chemolab.config.db_settings import db_settings
from chemolab.tables import MonitorSample, SimulationRun, VerdictRecord  # noqa: F401  (registers the tables)


@lru_cache(maxsize=None)
def get_engine(url: str) -> Engine:
    engine = create_engine(url, echo=False)
    SQLModel.metadata.create_all(engine)
    return engine


@contextmanager
def get_session(url: str | None = None) -> Generator[Session, None, None]:
    with Session(get_engine(url or db_settings.database_url)) as session:
        yield session
