from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from lambdadl.syntax.types import Type


@dataclass(frozen=True)
class TypingContext:
    """Γ: ordered bindings; lookup finds the rightmost."""
    bindings: Tuple[Tuple[str, Type], ...] = ()

    def extend(self, name: str, t: Type) -> "TypingContext":
        return TypingContext(self.bindings + ((name, t),))

    def lookup(self, name: str) -> Optional[Type]:
        for n, t in reversed(self.bindings):
            if n == name:
                return t
        return None

    def names(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(n for n, _ in self.bindings))

    def __contains__(self, name: str) -> bool:
        return self.lookup(name) is not None

    def __iter__(self) -> Iterator[Tuple[str, Type]]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)


EMPTY_CONTEXT = TypingContext()
