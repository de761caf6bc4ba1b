"""Enumerator algebra and closed-form QMDS/AME distributions."""
from qweight.enumerators.closed_form import negative_entries, qmds_sl, qmds_unitary
from qweight.enumerators.conditions import CodeCheckResult, code_check
from qweight.enumerators.distribution import (
    CodeParams,
    WeightDistribution,
    WeightKind,
    log_exact,
)
from qweight.enumerators.transforms import (
    dual_unitary,
    macwilliams_dual,
    shadow,
    shadow_poly,
    sl_from_unitary,
    sl_from_unitary_poly,
    unitary_from_sl,
)

__all__ = [
    "CodeParams",
    "WeightDistribution",
    "WeightKind",
    "log_exact",
    "qmds_unitary",
    "qmds_sl",
    "negative_entries",
    "unitary_from_sl",
    "sl_from_unitary",
    "sl_from_unitary_poly",
    "dual_unitary",
    "macwilliams_dual",
    "shadow",
    "shadow_poly",
    "code_check",
    "CodeCheckResult",
]
