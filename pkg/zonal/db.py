from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from .config import settings


# Synchronous engine; the default is a local sqlite file.
engine = create_engine(settings.DATABASE_URL, future=True)
SessionLocal = sessionmaker(bind=engine, autoflush=False, autocommit=False, future=True)


def make_engine(url: str):
    """Engine and session factory for a non-default store (tests, --database)."""
    eng = create_engine(url, future=True)
    return eng, sessionmaker(bind=eng, autoflush=False, autocommit=False, future=True)
