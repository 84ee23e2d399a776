"""Exact computations with Lie superalgebras, foldings and global Weyl modules."""

from ._core import (
    check_algebra,
    folding_table,
    fold_summary,
    garland,
    run,
    weyl,
)

__all__ = ["check_algebra", "folding_table", "fold_summary", "garland", "run", "weyl"]
