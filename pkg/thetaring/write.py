from __future__ import annotations

import json
import pandas as pd
from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from .report import SuiteReport

from . import msg
from . import file_module

class ReportWriter(ABC):
    """Renders a SuiteReport, and writes it to a file if a filename is given.

    This object is provided to the command line runner.
    """
    @abstractmethod
    def _extension(self) -> str:
        pass

    @abstractmethod
    def render(self, report: SuiteReport) -> str:
        pass

    def __call__(self, report: SuiteReport, filename: str=None) -> str:
        """Returns the rendered report. Writes it to filename if given."""
        text = self.render(report)
        if filename is not None:
            path = Path(filename)
            file_module.create_folder(path.parent)
            msg.to_file(str(path))
            with open(path, 'w') as file:
                file.write(text + '\n')
        return text

    @abstractmethod
    def __str__(self) -> str:
        pass

class TextReport(ReportWriter):
    """One line per check in a table, followed by a summary."""
    def __init__(self, detail_width: int=60) -> None:
        self.detail_width = detail_width

    def _extension(self) -> str:
        return 'txt'

    def _short(self, detail) -> str:
        text = json.dumps(detail, sort_keys=True)
        if len(text) > self.detail_width:
            text = text[:self.detail_width - 3] + '...'
        return text

    def render(self, report: SuiteReport) -> str:
        rows = [{'check': r.name,
                 'parameters': ', '.join(f"{k}={v}" for k, v in r.parameters.items()),
                 'status': r.status,
                 'seconds': f"{r.wall_time:.3f}",
                 'detail': self._short(r.detail)} for r in report.records]
        df = pd.DataFrame(rows, columns=['check', 'parameters', 'status', 'seconds', 'detail'])
        summary = report.to_dict()['summary']
        lines = [f"thetaring {report.command}: primes {report.config.get('primes')}"]
        lines.append(df.to_string(index=False) if not df.empty else '(no checks)')
        lines.append(f"{summary['pass']} passed, {summary['fail']} failed, {summary['skipped']} skipped")
        return '\n'.join(lines)

    def __str__(self) -> str:
        return 'Writing the report as a text table.'

class JsonReport(ReportWriter):
    def _extension(self) -> str:
        return 'json'

    def render(self, report: SuiteReport) -> str:
        return json.dumps(report.to_dict(), sort_keys=True, indent=2)

    def __str__(self) -> str:
        return 'Writing the report as JSON.'

WRITERS = {'text': TextReport, 'json': JsonReport}
