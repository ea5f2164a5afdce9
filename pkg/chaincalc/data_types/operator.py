from dataclasses import dataclass


@dataclass(frozen=True)
class OperatorReport:
    """Shape summary of one operator application."""

    name: str
    grade_in: int
    grade_out: int
    order_in: int
    order_out: int
    terms_in: int
    terms_out: int

    def __str__(self) -> str:
        return (
            f"{self.name}: grade {self.grade_in}->{self.grade_out}, "
            f"order {self.order_in}->{self.order_out}, "
            f"terms {self.terms_in}->{self.terms_out}"
        )
