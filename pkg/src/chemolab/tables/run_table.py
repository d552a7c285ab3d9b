from datetime import datetime

from sqlmodel import Field, SQLModel


class SimulationRun(SQLModel, table=True):
    """Database model for the summary of one simulation run."""

    id: int | None = Field(default=None, primary_key=True)
    created_at: datetime = Field(default_factory=datetime.now, index=True)
    config_json: str = Field(description="Resolved run configuration as JSON")
    classification: str = Field(index=True)
    termination: str = Field(description="Why the time loop stopped")
    t_final: float
    steps: int
    violations: int = Field(default=0)


class MonitorSample(SQLModel, table=True):
    """Database model for one recorded monitor row of a run."""

    id: int | None = Field(default=None, primary_key=True)
    run_id: int = Field(foreign_key="simulationrun.id", index=True)
    t: float = Field(index=True)
    mass: float
    sup_u: float
    sup_v: float
    sup_w: float
    lp_u: float
    y: float
    dt: float
