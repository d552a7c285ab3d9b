from .exponents import (
    ExponentCertificate,
    ExponentChoice,
    Restriction,
    SRange,
    Violation,
    admissible_s_range,
    certificate_restrictions,
    check_certificate,
    check_choice,
    compute_exponent_set,
)
from .search import InfeasibleReport, search_certificate
from .young import PowerSumBound, power_sum_lower_bound, young_product_bound

__all__ = [
    "ExponentCertificate",
    "ExponentChoice",
    "Restriction",
    "SRange",
    "Violation",
    "admissible_s_range",
    "certificate_restrictions",
    "check_certificate",
    "check_choice",
    "compute_exponent_set",
    "InfeasibleReport",
    "search_certificate",
    "PowerSumBound",
    "power_sum_lower_bound",
    "young_product_bound",
]
