"""
Cartesian wedge product of chains and the matching product forms.
"""

import logging

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.forms import Form, wedge_forms
from chaincalc.fields.algebra import lift_field

_log = logging.getLogger(__name__)


def cartesian_wedge(J: DiracChain, K: DiracChain) -> DiracChain:
    """
    J ×̂ K in R^{n1 + n2}: points and degree vectors are concatenated and
    K's axes are shifted past J's, so indices stay in block order with no
    reordering sign.

    Example:
    ```python
    a = DiracChain.element((0.5,), KVector.basis(1, (0,)))
    cartesian_wedge(a, a)  # ((0.5, 0.5); e12)
    ```
    """
    shift = J.dim
    builder = ChainBuilder(J.dim + K.dim, J.grade + K.grade)
    for (p, dp, i), a in J.items():
        for (q, dq, j), b in K.items():
            builder.add(p + q, dp + dq, i + tuple(x + shift for x in j), a * b)
    _log.debug("cartesian wedge: %d x %d terms", len(J), len(K))
    return builder.build()


def lift_form(w: Form, offset: int, dim: int) -> Form:
    """Pullback of ω along the projection onto coordinates offset .. offset + n."""
    return Form(
        dim,
        w.grade,
        {
            tuple(a + offset for a in index): lift_field(f, offset, dim)
            for index, f in w.items()
        },
    )


def product_form(w: Form, eta: Form) -> Form:
    """π1*ω ∧ π2*η on R^{n1 + n2}, the form pairing J ×̂ K to ω(J)·η(K)."""
    dim = w.dim + eta.dim
    return wedge_forms(lift_form(w, 0, dim), lift_form(eta, w.dim, dim))
