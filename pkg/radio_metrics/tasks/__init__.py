# Grab classes.
from radio_metrics.tasks.synthetic_city.SynthConfigClass import SynthConfig
from radio_metrics.tasks.synthetic_city.SyntheticCityClass import SyntheticCity
