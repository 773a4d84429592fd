"""Reproduce the Q-curve table and write it as CSV."""
import sys
from pathlib import Path

from dotenv import load_dotenv

from torusrank.config import get_settings
from torusrank.models.complexity import SearchConfig
from torusrank.rank.table1 import load_table1_windows, table1_reproduce
from torusrank.store.cache import ExpansionCache
from torusrank.store.serialize import table1_csv, table1_text

# Load environment variables
load_dotenv()


def main():
    """Run the sweep with the configured window and cache."""
    settings = get_settings()
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("table1.csv")

    print(f"\nScanning windows up to {settings.window_max} with {settings.workers} workers...")
    cache = ExpansionCache(settings.cache_path)
    report = table1_reproduce(
        SearchConfig(window_max=settings.window_max, workers=settings.workers),
        load_table1_windows(settings.table1_windows_path),
        cache=cache
    )
    print(table1_text(report))
    print(f"Cache: {cache.hits} hits, {cache.misses} new expansions")

    out.write_text(table1_csv(report), encoding="utf-8")
    print(f"Wrote {out}")
    return 0 if report.all_match else 2


if __name__ == "__main__":
    sys.exit(main())
