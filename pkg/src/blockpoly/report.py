"""Run result types for blockpoly."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional


@dataclass
class RunError:
    """Represents a run error or warning."""

    line: int = 0
    column: int = 0
    message: str = ""
    severity: Literal["error", "warning"] = "error"

    def __str__(self) -> str:
        """Format error message for display."""
        icon = "❌" if self.severity == "error" else "⚠️ "
        if self.line:
            return f"{icon} Line {self.line}, Column {self.column}: {self.message}"
        return f"{icon} {self.message}"

    def to_json(self) -> Dict[str, Any]:
        return {
            "line": self.line,
            "column": self.column,
            "message": self.message,
            "severity": self.severity,
        }


@dataclass
class RunReport:
    """Result of one blockpoly command."""

    command: str
    subject: str = "input"

    success: bool = False
    errors: List[RunError] = field(default_factory=list)
    warnings: List[RunError] = field(default_factory=list)

    # Input
    source_file_path: Optional[str] = None
    mode: Optional[str] = None
    engine: Optional[str] = None
    order: int = 0

    # Structure
    decomposition: Optional[Dict[str, Any]] = None
    bpartition_count: Optional[int] = None

    # Command output and wall-times per stage, in seconds
    result: Dict[str, Any] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    mismatches: int = 0

    @property
    def exit_status(self) -> int:
        return 0 if self.success and self.mismatches == 0 else 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "subject": self.subject,
            "success": self.success,
            "errors": [e.to_json() for e in self.errors],
            "warnings": [w.to_json() for w in self.warnings],
            "source_file_path": self.source_file_path,
            "mode": self.mode,
            "engine": self.engine,
            "order": self.order,
            "decomposition": self.decomposition,
            "bpartition_count": self.bpartition_count,
            "result": self.result,
            "timing": self.timing,
            "mismatches": self.mismatches,
        }
