"""Exact Tibetan calendar computations."""

from ._tibcal import (
    day_of_week,
    day_record,
    epochs,
    from_tibetan,
    gregorian_from_jd,
    jd_from_gregorian,
    jd_from_julian,
    leap_month,
    losar,
    mean_sun,
    month_count,
    planets,
    run_cli,
    special_days,
    to_tibetan,
    traditions,
    true_date,
    year_name,
)

__all__ = [
    "day_of_week",
    "day_record",
    "epochs",
    "from_tibetan",
    "gregorian_from_jd",
    "jd_from_gregorian",
    "jd_from_julian",
    "leap_month",
    "losar",
    "mean_sun",
    "month_count",
    "planets",
    "run_cli",
    "special_days",
    "to_tibetan",
    "traditions",
    "true_date",
    "year_name",
]
