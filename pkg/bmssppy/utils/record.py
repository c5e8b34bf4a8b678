from typing import Any, Dict, Tuple


class BaseRecord:
    """
    Base class for flat result records (trace nodes, bench rows).

    Subclasses list the attribute paths they export in `__SLOTS__`; dotted
    paths reach into nested objects and are flattened with underscores.
    """

    __SLOTS__: Tuple[str, ...] = ()

    def __repr__(self):
        cls_name = self.__class__.__name__
        attrs = "\n\t".join(
            [f"{key}={v}" for key, v in self.to_dict().items()]
        )
        return f"{cls_name}(\n\t{attrs}\n)"

    def _search_slot(self, slot: str) -> Any:
        value: Any = self
        for path in slot.split("."):
            if not hasattr(value, path):
                return None
            value = getattr(value, path)
        return value

    def to_dict(self) -> Dict[str, Any]:
        """
        Converts the record to a dictionary (only keys defined in __SLOTS__).

        Returns:
            dict: Slot name (dots replaced by underscores) to value.
        """
        return {
            slot.replace(".", "_"): self._search_slot(slot)
            for slot in self.__SLOTS__
        }
