from .config import ExperimentConfig, load_config
from .schottky import SchottkySpec, free_up_to, orbit_qi_experiment, schottky_build

__all__ = ["ExperimentConfig", "SchottkySpec", "free_up_to", "load_config", "orbit_qi_experiment", "schottky_build"]
