import logging
from typing import Dict, List, Optional, Type, TypeVar

from chaincalc.exceptions import UnknownDemoError
from chaincalc.interfaces.demo_abc import DemoABC

_log = logging.getLogger(__name__)

DEMO_REGISTRY: Dict[str, Type[DemoABC]] = {}

T_Demo = TypeVar("T_Demo", bound=DemoABC)


def register_demo(cls: Type[T_Demo]) -> Type[T_Demo]:
    """
    Decorator to register a demo under its NAME attribute.

    Usage example:
    ```python
    @register_demo
    class CantorDemo(DemoABC):
        NAME = "cantor"
    ```
    """
    name = getattr(cls, "NAME", "")
    if not name:
        raise ValueError(f"Class {cls.__name__} must define a NAME class attribute.")
    DEMO_REGISTRY[name] = cls
    return cls


class DemoFactory:
    @classmethod
    def available(cls) -> List[str]:
        import chaincalc.demos  # noqa: F401

        return sorted(DEMO_REGISTRY)

    @classmethod
    def create_demo(cls, name: str, tolerance: Optional[float] = None) -> DemoABC:
        """
        Raises:
            UnknownDemoError: if no demo has that name.
        """
        import chaincalc.demos  # noqa: F401

        demo_cls = DEMO_REGISTRY.get(name)
        if demo_cls is None:
            raise UnknownDemoError(f"unknown demo {name!r}, expected one of {sorted(DEMO_REGISTRY)}")
        _log.debug("Creating demo %s", name)
        return demo_cls(tolerance)
