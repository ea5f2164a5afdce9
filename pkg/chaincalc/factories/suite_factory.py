import logging
from typing import Dict, List, Type, TypeVar

from chaincalc.data_types.config.verify import VerifyConfig
from chaincalc.exceptions import UnknownSuiteError
from chaincalc.interfaces.suite_abc import SuiteABC

_log = logging.getLogger(__name__)

SUITE_REGISTRY: Dict[str, Type[SuiteABC]] = {}

T_Suite = TypeVar("T_Suite", bound=SuiteABC)


def register_suite(cls: Type[T_Suite]) -> Type[T_Suite]:
    """
    Decorator to register a verification suite under its NAME attribute.

    Usage example:
    ```python
    @register_suite
    class AlgebraSuite(SuiteABC):
        NAME = "algebra"

        def tasks(self):
            ...
    ```
    """
    name = getattr(cls, "NAME", "")
    if not name:
        raise ValueError(f"Class {cls.__name__} must define a NAME class attribute.")
    SUITE_REGISTRY[name] = cls
    return cls


class SuiteFactory:
    @classmethod
    def available(cls) -> List[str]:
        import chaincalc.suites  # noqa: F401

        return sorted(SUITE_REGISTRY)

    @classmethod
    def create_suite(cls, name: str, config: VerifyConfig) -> SuiteABC:
        """
        Create the suite registered under ``name``.

        Raises:
            UnknownSuiteError: if no suite has that name.
        """
        import chaincalc.suites  # noqa: F401

        suite_cls = SUITE_REGISTRY.get(name)
        if suite_cls is None:
            raise UnknownSuiteError(
                f"unknown suite {name!r}, expected one of {sorted(SUITE_REGISTRY)}"
            )
        _log.debug("Creating suite %s with seed %d", name, config.seed)
        return suite_cls(config)
