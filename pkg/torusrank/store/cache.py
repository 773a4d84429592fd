"""Append-only JSONL cache of continued fraction expansions.

Records are loaded once when the cache is opened; misses are expanded and
appended through a single writer lock, so window scans can resume across
runs. Cached expansions carry no automaton trace: both hit and miss paths
return the bare (preperiod, period) expansion.
"""
import json
import logging
import threading
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from torusrank.cfrac.expansion import expand
from torusrank.errors import CacheCorruption
from torusrank.models.cache import SCHEMA_VERSION, CacheRecord
from torusrank.models.surd import CFExpansion, QuadraticIrrational

logger = logging.getLogger(__name__)

Key = Tuple[int, int, int, int, int]


class ExpansionCache:
    """Read-through, write-back expansion cache backed by a JSONL file.

    Usage Examples:
        ```python
        cache = ExpansionCache(Path("cfrac-cache.jsonl"))
        exp = cache.expand(canonicalize(0, 1, 1, 7))
        cache.hits, cache.misses
        ```
    """

    def __init__(self, path: Optional[Path] = None, verify_hits: bool = False):
        """Open the cache; a None path keeps it in memory only.

        With verify_hits every hit is re-expanded and checked against its record.
        """
        self.path = Path(path) if path is not None else None
        self.verify_hits = verify_hits
        self._records: Dict[Key, CFExpansion] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.skipped = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open("r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    raw = json.loads(line)
                    if raw.get("schema_version") != SCHEMA_VERSION:
                        raise ValueError(f"unknown schema version {raw.get('schema_version')}")
                    record = CacheRecord.model_validate(raw)
                except (ValueError, ValidationError, AttributeError) as e:
                    self.skipped += 1
                    logger.warning("skipping cache line %d of %s: %s", lineno, self.path, e)
                    continue
                self._records[record.key] = CFExpansion(preperiod=record.preperiod, period=record.period)
        logger.debug("loaded %d cached expansions from %s", len(self._records), self.path)

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, theta: QuadraticIrrational) -> bool:
        return theta.key in self._records

    def get(self, theta: QuadraticIrrational) -> Optional[CFExpansion]:
        return self._records.get(theta.key)

    def expand(self, theta: QuadraticIrrational) -> CFExpansion:
        """Cached expansion of theta, computing and appending it on a miss.

        Raises:
            CacheCorruption: on a hit that disagrees with a fresh expansion, if verify_hits is set
        """
        cached = self._records.get(theta.key)
        if cached is not None:
            self.hits += 1
            if self.verify_hits:
                self.verify(theta)
            return cached
        full = expand(theta)
        bare = CFExpansion(preperiod=full.preperiod, period=full.period)
        with self._lock:
            if theta.key not in self._records:
                self.misses += 1
                self._records[theta.key] = bare
                self._append(CacheRecord(key=theta.key, preperiod=bare.preperiod, period=bare.period))
        return self._records[theta.key]

    def _append(self, record: CacheRecord) -> None:
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(record.model_dump_json() + "\n")

    def verify(self, theta: QuadraticIrrational) -> CFExpansion:
        """Re-expand theta and compare with its cached record.

        Raises:
            CacheCorruption: if the cached record disagrees
        """
        fresh = expand(theta)
        cached = self._records.get(theta.key)
        if cached is not None and (cached.preperiod, cached.period) != (fresh.preperiod, fresh.period):
            raise CacheCorruption(str(list(theta.key)))
        return fresh

    def keys(self) -> List[Key]:
        return sorted(self._records)
