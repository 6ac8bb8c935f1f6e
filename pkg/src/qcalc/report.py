"""Validation/check reports shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    subject: str
    entries: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.entries

    def fail(self, message: str) -> None:
        self.entries.append(message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def __str__(self):
        head = f"{self.subject}: {'ok' if self.ok else f'{len(self.entries)} violation(s)'}"
        body = "".join(f"\n  - {e}" for e in self.entries)
        notes = "".join(f"\n  note: {n}" for n in self.notes)
        return head + body + notes
