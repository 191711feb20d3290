# Grab classes.
from radio_metrics.tasks.synthetic_city.SynthConfigClass import SynthConfig, LTE_CARRIERS_MHZ
from radio_metrics.tasks.synthetic_city.SyntheticCityClass import SyntheticCity, generate_scene, generate_measurements, is_peak_hour, load_profile
