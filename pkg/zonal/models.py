from datetime import datetime, timezone
import uuid

from sqlalchemy import (
    Column,
    String,
    Text,
    DateTime,
    Integer,
    Float,
    JSON,
    ForeignKey,
)
from sqlalchemy.orm import declarative_base, relationship


Base = declarative_base()


def gen_uuid():
    return str(uuid.uuid4())


def utc_now():
    """Return current UTC time as timezone-aware datetime."""
    return datetime.now(timezone.utc)


class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(String, primary_key=True, default=gen_uuid)
    suite = Column(String, nullable=False, index=True)
    n_samples = Column(Integer, nullable=False)
    seed = Column(Integer, nullable=False)
    jobs = Column(Integer, default=1)
    started_at = Column(DateTime, default=utc_now)
    finished_at = Column(DateTime)
    status = Column(String, default="running")  # running, passed, failed
    meta = Column(JSON, default={})

    records = relationship("ComparisonRecord", back_populates="run", cascade="all, delete-orphan")


class ComparisonRecord(Base):
    __tablename__ = "comparison_records"

    id = Column(String, primary_key=True, default=gen_uuid)
    run_id = Column(String, ForeignKey("verification_runs.id"), nullable=False)
    quantity = Column(String, nullable=False, index=True)
    closed = Column(Float)
    mean = Column(Float)
    mean_imag = Column(Float)
    stderr = Column(Float)
    n_samples = Column(Integer)
    z = Column(Float)
    verdict = Column(String, nullable=False)  # pass, warn, fail, info, error
    note = Column(Text)

    run = relationship("VerificationRun", back_populates="records")
