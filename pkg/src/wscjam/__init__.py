"""Secrecy-area metrics for a ground wiretap channel guarded by two UAV jammers."""

from .area_metrics import DeltaField, RegionSpec, area_metrics, coverage, delta_field, efficiency, wsc
from .channel import EnvConstants, Mode, SnrCoefficients, TransmitPowers, a2g_pathloss, los_probability, snr_coefficients
from .geometry import JammerAngles, NodeLayout, horizontal_distance, place_nodes
from .montecarlo import McConfig, McEstimate, empirical_delta, empirical_sop
from .scenario import PowerBudget, Scenario, load_scenario
from .secrecy import SecrecyParams, delta, delta_bar, secrecy_capacity, sop_closed_form

__version__ = "0.1.0"
