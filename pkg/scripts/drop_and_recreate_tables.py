"""Drop the report store tables and recreate them from the current models.

Use this after changing ``zonal/models.py``; run history is not migrated.

WARNING: This will delete ALL recorded verification runs!

    python scripts/drop_and_recreate_tables.py [--database sqlite:///./other.db]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from sqlalchemy import inspect

from zonal.db import engine as default_engine, make_engine
from zonal.models import Base


def drop_and_recreate_tables(engine=default_engine) -> list[str]:
    """Drop all report tables and recreate them; returns the table names now present."""
    print("=" * 70)
    print("DROP AND RECREATE REPORT STORE")
    print("=" * 70)
    print(f"\nDatabase: {engine.url.render_as_string(hide_password=True)}")
    print("WARNING: This will delete ALL recorded verification runs!")

    print("\nDropping tables...")
    Base.metadata.drop_all(bind=engine)
    print("✓ Tables dropped")

    print("\nRecreating tables from current models...")
    Base.metadata.create_all(bind=engine)
    tables = sorted(inspect(engine).get_table_names())
    print(f"✓ Tables recreated: {', '.join(tables)}")

    print("\n" + "=" * 70)
    print("✓ Report store reset successfully!")
    print("=" * 70)
    return tables


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--database", default=None, help="SQLAlchemy URL (default: ZONAL_DATABASE_URL).")
    args = parser.parse_args()
    target = make_engine(args.database)[0] if args.database else default_engine
    drop_and_recreate_tables(target)
