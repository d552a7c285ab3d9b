from datetime import datetime

from sqlmodel import Field, SQLModel


class VerdictRecord(SQLModel, table=True):
    """Database model for one regime verdict."""

    id: int | None = Field(default=None, primary_key=True)
    created_at: datetime = Field(default_factory=datetime.now, index=True)
    params_json: str = Field(description="ModelParams the verdict was computed for, as JSON")
    case_id: str = Field(index=True)
    threshold_name: str | None = Field(default=None)
    threshold_value: float | None = Field(default=None)
    decision: str = Field(index=True)
