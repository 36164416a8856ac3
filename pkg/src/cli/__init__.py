"""CLI Module"""
from .main import RunConfig, cli, dispatch
from .reports import read_reports, write_reports
__all__ = ['cli', 'dispatch', 'RunConfig', 'read_reports', 'write_reports']
