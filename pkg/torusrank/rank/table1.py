"""Reproduction of the table of Q-curves E_CM^(-p,1) with 1 < p < 100."""
import logging
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional

from pydantic import ValidationError

from torusrank.cfrac.surd import canonicalize
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.config import DEFAULT_TABLE1_WINDOWS
from torusrank.models.complexity import SearchConfig
from torusrank.models.rank import Table1Report, Table1Row, Table1Windows
from torusrank.models.surd import CFExpansion
from torusrank.store.cache import ExpansionCache

logger = logging.getLogger(__name__)


class TableEntry(NamedTuple):
    p: int
    rank: int
    preperiod: List[int]
    period: List[int]
    c: int


TABLE1: List[TableEntry] = [
    TableEntry(3, 1, [1], [1, 2], 2),
    TableEntry(7, 0, [2], [1, 1, 1, 4], 1),
    TableEntry(11, 1, [3], [3, 6], 2),
    TableEntry(19, 1, [4], [2, 1, 3, 1, 2, 8], 2),
    TableEntry(23, 0, [4], [1, 3, 1, 8], 1),
    TableEntry(31, 0, [5], [1, 1, 3, 5, 3, 1, 1, 10], 1),
    TableEntry(43, 1, [6], [1, 1, 3, 1, 5, 1, 3, 1, 1, 12], 2),
    TableEntry(47, 0, [6], [1, 5, 1, 12], 1),
    TableEntry(59, 1, [7], [1, 2, 7, 2, 1, 14], 2),
    TableEntry(67, 1, [8], [5, 2, 1, 1, 7, 1, 1, 2, 5, 16], 2),
    TableEntry(71, 0, [8], [2, 2, 1, 7, 1, 2, 2, 16], 1),
    TableEntry(79, 0, [8], [1, 7, 1, 16], 1),
    TableEntry(83, 1, [9], [9, 18], 2),
]

TABLE1_PRIMES = [entry.p for entry in TABLE1]


def load_table1_windows(path: Optional[Path] = None) -> Table1Windows:
    """Per-prime window overrides; a missing file means no overrides."""
    path = Path(path or DEFAULT_TABLE1_WINDOWS)
    if not path.exists():
        logger.warning("window override file %s not found, using the default window", path)
        return Table1Windows()
    try:
        return Table1Windows.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError:
        logger.error("invalid window override file %s", path)
        raise


def table1_reproduce(
    cfg: Optional[SearchConfig] = None,
    windows: Optional[Table1Windows] = None,
    cache: Optional[ExpansionCache] = None
) -> Table1Report:
    """Expansion, complexity and rank for every prime of the table.

    Rows come back in table order; mismatches are reported, never raised.
    """
    cfg = cfg or SearchConfig()
    overrides: Dict[int, int] = (windows or Table1Windows()).overrides
    rows: List[Table1Row] = []
    for entry in TABLE1:
        window = overrides.get(entry.p, cfg.window_max)
        theta = canonicalize(0, 1, 1, entry.p)
        report = arithmetic_complexity(theta, cfg.model_copy(update={"window_max": window}), cache=cache)
        computed = report.expansion
        expected = CFExpansion(preperiod=entry.preperiod, period=entry.period)
        row = Table1Row(
            p=entry.p,
            expected_expansion=expected,
            computed_expansion=computed,
            expected_c=entry.c,
            computed_c=report.c,
            expected_rank=entry.rank,
            computed_rank=report.c - 1,
            window=window,
            expansion_match=(computed.preperiod, computed.period) == (expected.preperiod, expected.period),
            c_match=report.c == entry.c,
            rank_match=report.c - 1 == entry.rank,
            diagnostics=report.diagnostics
        )
        if not row.match:
            logger.warning("table row p=%d differs: c=%d expected %d", entry.p, report.c, entry.c)
        rows.append(row)
    return Table1Report(rows=rows, all_match=all(row.match for row in rows))
