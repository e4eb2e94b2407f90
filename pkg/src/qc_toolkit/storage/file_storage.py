"""
File-based storage for verification reports.
"""

import json
from pathlib import Path
from typing import Any, List, Optional

import aiofiles
import yaml

from ..models.schemas import CheckReport, VerificationRun
from ..utils.config import config
from ..utils.logger import get_logger


class ReportStorage:
    """Persists report batches and whole runs as JSON or YAML."""

    def __init__(self, base_path: Optional[str] = None, format_type: Optional[str] = None):
        """
        Initialize report storage.

        Args:
            base_path: Directory for run archives
            format_type: Storage format (json, yaml)
        """
        self.logger = get_logger(__name__)
        storage_config = config.get('storage.file', {}) or {}

        self.base_path = Path(base_path or storage_config.get('base_path', './reports'))
        self.format_type = format_type or storage_config.get('format', 'json')
        if self.format_type not in ('json', 'yaml'):
            raise ValueError(f"Unsupported storage format: {self.format_type}")

    @property
    def extension(self) -> str:
        return '.yaml' if self.format_type == 'yaml' else '.json'

    def _dump(self, data: Any, format_type: str) -> str:
        if format_type == 'yaml':
            return yaml.safe_dump(data, default_flow_style=False, allow_unicode=True, sort_keys=False)
        return json.dumps(data, indent=2, ensure_ascii=False, default=str)

    @staticmethod
    def _load(text: str, format_type: str) -> Any:
        return yaml.safe_load(text) if format_type == 'yaml' else json.loads(text)

    @staticmethod
    def _format_of(path: Path) -> str:
        return 'yaml' if path.suffix in ('.yaml', '.yml') else 'json'

    async def write_reports(self, reports: List[CheckReport], path: str) -> Path:
        """
        Write a JSON (or YAML, by extension) array of reports.

        Args:
            reports: Reports to write
            path: Destination file

        Returns:
            The path written
        """
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        payload = self._dump([r.to_dict() for r in reports], self._format_of(target))
        async with aiofiles.open(target, 'w', encoding='utf-8') as f:
            await f.write(payload)
        self.logger.info(f"Wrote {len(reports)} reports to {target}")
        return target

    async def read_reports(self, path: str) -> List[CheckReport]:
        """Read an array written by `write_reports`."""
        source = Path(path)
        async with aiofiles.open(source, 'r', encoding='utf-8') as f:
            data = self._load(await f.read(), self._format_of(source))
        if not isinstance(data, list):
            raise ValueError(f"{source} does not hold a list of reports")
        return [CheckReport.from_dict(item) for item in data]

    async def save_run(self, run: VerificationRun) -> Path:
        """Archive a whole run under base_path/runs."""
        run_dir = self.base_path / 'runs'
        run_dir.mkdir(parents=True, exist_ok=True)
        target = run_dir / f"{run.created_at:%Y%m%d-%H%M%S}-{run.suite}-{run.id[:8]}{self.extension}"
        async with aiofiles.open(target, 'w', encoding='utf-8') as f:
            await f.write(self._dump(run.to_dict(), self.format_type))
        self.logger.debug(f"Run archived: {target}")
        return target

    async def load_run(self, path: str) -> Optional[VerificationRun]:
        """
        Load an archived run.

        Returns:
            The run, or None if the file is missing or unreadable
        """
        source = Path(path)
        if not source.exists():
            return None
        try:
            async with aiofiles.open(source, 'r', encoding='utf-8') as f:
                data = self._load(await f.read(), self._format_of(source))
            return VerificationRun.from_dict(data)
        except Exception as e:
            self.logger.error(f"Failed to load run {source}: {e}")
            return None

    async def list_runs(self) -> List[Path]:
        """Archived runs, oldest first."""
        run_dir = self.base_path / 'runs'
        if not run_dir.exists():
            return []
        return sorted(p for p in run_dir.iterdir() if p.suffix in ('.json', '.yaml'))

    async def write_text(self, text: str, path: str) -> Path:
        """Write a rendered report."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(target, 'w', encoding='utf-8') as f:
            await f.write(text)
        return target

