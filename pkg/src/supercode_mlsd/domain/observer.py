"""Hooks into the priority-first search."""

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from .phase2 import SearchPath


class SearchObserver(Protocol):
    """Receives search events; used by the invariant suite and for debugging."""

    def on_extend(self, parent: "SearchPath", child: "SearchPath") -> None:
        """Handle one evaluated successor, before any pruning against the incumbent."""
        ...

    def on_discard(self, path: "SearchPath", visitor_f: float) -> None:
        """Handle a path dropped because its (level, state) was already expanded with ``visitor_f``."""
        ...
