"""Coalition partitions of graphs."""

from ._core import (
    Graph,
    ParseError,
    PreconditionError,
    brute_force_coalition_number,
    build_family,
    coalition_number,
    exists_partition_of_order,
    extend_partition,
    format_partition,
    insert_diamond,
    is_dominating,
    parse_partition,
    scan,
    subdivide_and_bridge,
    upper_bound,
    verify_partition,
)

__all__ = [
    "Graph",
    "ParseError",
    "PreconditionError",
    "brute_force_coalition_number",
    "build_family",
    "coalition_number",
    "exists_partition_of_order",
    "extend_partition",
    "format_partition",
    "insert_diamond",
    "is_dominating",
    "parse_partition",
    "scan",
    "subdivide_and_bridge",
    "upper_bound",
    "verify_partition",
]
