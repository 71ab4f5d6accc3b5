"""
Configuration Parser for Evaluation Framework

Handles loading and parsing of evaluation configurations from YAML files.
"""

import yaml
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

SUITES = ["cone_realizability", "local_condition", "local_gradients", "decomposition", "companion"]


@dataclass
class SuiteConfig:
    """Configuration for a single property suite"""
    samples: int
    params: Dict[str, Any] = field(default_factory=dict)

    def get(self, key: str, default: Any) -> Any:
        return self.params.get(key, default)


def _default_suites() -> Dict[str, SuiteConfig]:
    return {
        "cone_realizability": SuiteConfig(samples=100, params={"max_arcs": 6, "max_fan": 5, "refusals": 25}),
        "local_condition": SuiteConfig(samples=200, params={"max_terms": 6}),
        "local_gradients": SuiteConfig(samples=100, params={"offsets": 10}),
        "decomposition": SuiteConfig(samples=100),
        "companion": SuiteConfig(samples=50),
    }


@dataclass
class EvalConfig:
    """Complete evaluation configuration"""
    suites: Dict[str, SuiteConfig] = field(default_factory=_default_suites)

    # Global settings
    random_seed: int = 42
    parallel_workers: int = 1
    deep_logging: bool = True

    # Output settings
    output_dir: str = "evals/results"

    @classmethod
    def from_yaml(cls, yaml_path: str) -> "EvalConfig":
        """
        Load configuration from YAML file

        Args:
            yaml_path: Path to YAML configuration file

        Returns:
            EvalConfig object
        """
        with open(yaml_path, 'r') as f:
            data = yaml.safe_load(f) or {}

        global_config = data.get('global', {})

        suites = {}
        for name, suite_data in (data.get('suites') or {}).items():
            if name not in SUITES:
                raise ValueError(f"Unknown suite: {name}")
            suite_data = dict(suite_data or {})
            samples = suite_data.pop('samples', 10)
            suites[name] = SuiteConfig(samples=samples, params=suite_data)

        return cls(
            suites=suites,
            random_seed=global_config.get('random_seed', 42),
            parallel_workers=global_config.get('parallel_workers', 1),
            deep_logging=global_config.get('deep_logging', True),
            output_dir=global_config.get('output_dir', 'evals/results'),
        )

    def select(self, names: List[str]) -> "EvalConfig":
        """Copy restricted to the named suites."""
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
        defaults = _default_suites()
        suites = {n: self.suites.get(n, defaults[n]) for n in names}
        return EvalConfig(suites, self.random_seed, self.parallel_workers, self.deep_logging, self.output_dir)

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        return {
            'global': {
                'random_seed': self.random_seed,
                'parallel_workers': self.parallel_workers,
                'deep_logging': self.deep_logging,
                'output_dir': self.output_dir,
            },
            'suites': {
                name: {'samples': suite.samples, **suite.params}
                for name, suite in self.suites.items()
            },
        }

    def save(self, output_path: str):
        """
        Save configuration to YAML file

        Args:
            output_path: Path to save YAML file
        """
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w') as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)
