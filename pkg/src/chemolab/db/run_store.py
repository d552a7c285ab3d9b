from __future__ import annotations

from sqlmodel import SQLModel, select

from chemolab.core.app import RunResult
from chemolab.db.connect import get_session
from chemolab.model.params import ModelParams
from chemolab.regime.classifier import RegimeVerdict
from chemolab.tables import MonitorSample, SimulationRun, VerdictRecord


class RunStore:
    """Persistence interface for verdicts and simulation runs.

    Every method takes an optional SQLAlchemy ``url``; without one the configured
    ``DB_URL`` is used. The store only ever receives copies of results, so writing to it
    never changes what the command line prints.
    """

    @staticmethod
    def _insert(row: SQLModel, url: str | None = None) -> int | None:
        with get_session(url) as session:
            session.add(row)
            session.commit()
            session.refresh(row)
            return getattr(row, "id", None)

    @staticmethod
    def log_verdict(params: ModelParams, verdict: RegimeVerdict, url: str | None = None) -> int | None:
        """Write a VerdictRecord row."""
        return RunStore._insert(
            VerdictRecord(
                params_json=params.model_dump_json(),
                case_id=verdict.case_id.value,
                threshold_name=verdict.threshold_name,
                threshold_value=verdict.threshold_value,
                decision=verdict.decision,
            ),
            url,
        )

    @staticmethod
    def log_run(config_json: str, result: RunResult, url: str | None = None) -> int | None:
        """Write a SimulationRun row and one MonitorSample per recorded monitor row."""
        report = result.report
        classification = report.classification.value if report and report.classification else "unmonitored"
        with get_session(url) as session:
            run = SimulationRun(
                config_json=config_json,
                classification=classification,
                termination=result.termination.value,
                t_final=result.state.t,
                steps=result.state.steps,
                violations=len(report.violations) if report else 0,
            )
            session.add(run)
            session.commit()
            session.refresh(run)
            assert run.id is not None
            for row in report.rows if report else []:
                session.add(MonitorSample(run_id=run.id, **row.model_dump()))
            session.commit()
            return run.id

    @staticmethod
    def runs(url: str | None = None) -> list[SimulationRun]:
        with get_session(url) as session:
            return list(session.exec(select(SimulationRun).order_by(SimulationRun.id)).all())

    @staticmethod
    def samples(run_id: int, url: str | None = None) -> list[MonitorSample]:
        with get_session(url) as session:
            statement = select(MonitorSample).where(MonitorSample.run_id == run_id).order_by(MonitorSample.t)
            return list(session.exec(statement).all())

    @staticmethod
    def verdicts(url: str | None = None) -> list[VerdictRecord]:
        with get_session(url) as session:
            return list(session.exec(select(VerdictRecord).order_by(VerdictRecord.id)).all())
