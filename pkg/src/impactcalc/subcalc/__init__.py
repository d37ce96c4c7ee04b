"""Standalone sub-calculators: infection cost models, CPI reweighting,
and the school-district cost model."""
