"""
Run Manifest - what is needed to reproduce a simulation output.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional


@dataclass
class RunManifest:
    """
    Record of one simulate run.

    Essential Fields:
        config: Configuration echo of every sweep in the run
        version: Package version that produced the outputs
        seed: Root seed of the random streams
        started: Start time
        finished: End time

    Additional Fields:
        outputs: Result files written
        argv: Command line of the run
    """

    config: List[Dict[str, Any]]
    version: str
    seed: int
    started: datetime
    finished: Optional[datetime] = None
    outputs: List[str] = field(default_factory=list)
    argv: List[str] = field(default_factory=list)

    @classmethod
    def manifest_path(cls, output: Path) -> Path:
        """Manifest file stored beside a result file."""
        output = Path(output)
        return output.with_name(output.stem + ".manifest.json")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'config': self.config,
            'version': self.version,
            'seed': self.seed,
            'started': self.started.isoformat(),
            'finished': self.finished.isoformat() if self.finished else None,
            'outputs': self.outputs,
            'argv': self.argv,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunManifest':
        data_copy = data.copy()
        data_copy['started'] = datetime.fromisoformat(data_copy['started'])
        if data_copy.get('finished'):
            data_copy['finished'] = datetime.fromisoformat(data_copy['finished'])
        return cls(**data_copy)

    def save(self, filepath):
        """
        Save manifest to JSON file.

        Args:
            filepath: Path to save file
        """
        Path(filepath).parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)

    @classmethod
    def load(cls, filepath) -> 'RunManifest':
        with open(filepath, 'r') as f:
            return cls.from_dict(json.load(f))
