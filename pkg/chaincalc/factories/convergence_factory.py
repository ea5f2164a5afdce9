import logging
from typing import Dict, List, Optional, Type, TypeVar

from chaincalc.data_types.config.convergence import ConvergenceConfig
from chaincalc.exceptions import UnknownTheoremError
from chaincalc.interfaces.theorem_abc import TheoremABC

_log = logging.getLogger(__name__)

THEOREM_REGISTRY: Dict[str, Type[TheoremABC]] = {}

T_Theorem = TypeVar("T_Theorem", bound=TheoremABC)


def register_theorem(cls: Type[T_Theorem]) -> Type[T_Theorem]:
    """
    Decorator to register a convergence harness under its NAME attribute.
    """
    name = getattr(cls, "NAME", "")
    if not name:
        raise ValueError(f"Class {cls.__name__} must define a NAME class attribute.")
    THEOREM_REGISTRY[name] = cls
    return cls


class ConvergenceFactory:
    @classmethod
    def available(cls) -> List[str]:
        import chaincalc.convergence  # noqa: F401

        return sorted(THEOREM_REGISTRY)

    @classmethod
    def create_theorem(cls, name: str, config: Optional[ConvergenceConfig] = None) -> TheoremABC:
        """
        Raises:
            UnknownTheoremError: if no harness has that name.
        """
        import chaincalc.convergence  # noqa: F401

        theorem_cls = THEOREM_REGISTRY.get(name)
        if theorem_cls is None:
            raise UnknownTheoremError(
                f"unknown theorem {name!r}, expected one of {sorted(THEOREM_REGISTRY)}"
            )
        _log.debug("Creating theorem harness %s", name)
        return theorem_cls(config)
