"""Correlator table sources.

Modules:
	- table_source: Defines the TableSource protocol
	- filesystem: JSON documents on disk
"""
from .filesystem import FilesystemTableSource
from .table_source import TableSource

__all__ = ["FilesystemTableSource", "TableSource"]
