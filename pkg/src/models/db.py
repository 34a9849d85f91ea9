import os
from fractions import Fraction
from typing import Dict, Optional, Tuple

from sqlalchemy import Column, Integer, String, create_engine, delete, select
from sqlalchemy.orm import declarative_base, sessionmaker

from src.combinatorics.partitions import Partition

# Bump whenever the stored encoding or the character convention changes.
CACHE_VERSION = "1"

Base = declarative_base()


class CharacterValueModel(Base):
    __tablename__ = "character_values"

    id = Column(Integer, primary_key=True, index=True)
    cache_version = Column(String, index=True)
    degree = Column(Integer, index=True)
    lam = Column(String)
    mu = Column(String)
    value = Column(String)


class CharacterStore:
    """On-disk cache of full character tables, one SQLite file per cache directory."""

    def __init__(self, cache_dir: str):
        os.makedirs(cache_dir, exist_ok=True)
        self.path = os.path.join(cache_dir, "characters.db")
        self.engine = create_engine(f"sqlite:///{self.path}", connect_args={"check_same_thread": False})
        self.Session = sessionmaker(autocommit=False, autoflush=False, bind=self.engine)
        Base.metadata.create_all(bind=self.engine)

    @classmethod
    def from_settings(cls, settings) -> Optional["CharacterStore"]:
        return cls(settings.cache_dir) if settings.cache_dir else None

    def load(self, degree: int) -> Optional[Dict[Tuple[Partition, Partition], Fraction]]:
        with self.Session() as session:
            rows = session.execute(
                select(CharacterValueModel).where(
                    CharacterValueModel.degree == degree,
                    CharacterValueModel.cache_version == CACHE_VERSION,
                )
            ).scalars().all()
        if not rows:
            return None
        return {(Partition.parse(r.lam), Partition.parse(r.mu)): Fraction(r.value) for r in rows}

    def save(self, table) -> None:
        with self.Session() as session:
            session.execute(delete(CharacterValueModel).where(CharacterValueModel.degree == table.degree))
            session.add_all(
                CharacterValueModel(
                    cache_version=CACHE_VERSION,
                    degree=table.degree,
                    lam=lam.encode(),
                    mu=mu.encode(),
                    value=str(value),
                )
                for (lam, mu), value in table.values.items()
            )
            session.commit()
