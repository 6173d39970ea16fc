"""Bijection between multi-edge trees and 3-coloured Motzkin paths."""

from .bijection import (
    DomainError,
    dyck_to_motzkin2,
    dyck_to_tree,
    forward,
    inverse,
    motzkin2_to_dyck,
    strip_multiplicities,
    trace,
    tree_to_dyck,
    unweave_blue,
    weave_blue,
)
from .core import (
    DyckPath,
    InvalidObject,
    Motzkin2Path,
    Motzkin3Path,
    MultiEdgeTree,
    ParseError,
    PathKind,
    parse_path,
    parse_tree,
    serialize_path,
    serialize_tree,
    validate,
)

__version__ = "0.1.0"
