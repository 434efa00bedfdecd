"""
Configuration management for entgeo runs.

All settings come from command-line flags; no environment variables or
dotfiles are read, so a command line fully determines a run.

Key responsibilities:
- Collect flag values into a single configuration object
- Validate ranges and choices before any computation starts
- Provide default values for optional settings
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields
from typing import Optional

from evaluators import ProbeKind
from measures import Average
from measures.classification import DEFAULT_TOLERANCE
from roof import DEFAULT_BUDGET, DEFAULT_RESTARTS
from utils.errors import ConfigError

OUTPUT_FORMATS = ("json", "csv")


@dataclass
class AnalysisConfig:
    """
    Settings shared by every entgeo command.

    Attributes:
        tolerance: Classification tolerance for pair values and homogeneity
        output_format: Report format, "json" or "csv"
        seed: Seed for the roof restarts (random states take theirs from random:<n>:<seed>)
        budget: Objective evaluations allowed per roof restart
        restarts: Number of roof restarts
        k_max: Largest decomposition size tried by the roof (None: min(2r, r^2))
        scott_m: Subset size for the Scott measure
        probe: Pair probe, "fr" or "qc"
        average: Roof average, "arithmetic" or "geometric"
        debug: Verbose logging to stderr and logs/run.log
    """

    tolerance: float = DEFAULT_TOLERANCE
    output_format: str = "json"
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    restarts: int = DEFAULT_RESTARTS
    k_max: Optional[int] = None
    scott_m: int = 1
    probe: str = ProbeKind.MUTUAL_INFO_FR.value
    average: str = Average.ARITHMETIC.value
    debug: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> AnalysisConfig:
        """
        Build a configuration from parsed flags.

        Flags a command does not define keep their defaults.
        """
        flag_names = {
            "tol": "tolerance",
            "format": "output_format",
            "m": "scott_m",
        }
        values = {}
        known = {f.name for f in fields(cls)}
        for key, value in vars(args).items():
            name = flag_names.get(key, key)
            if name in known and value is not None:
                values[name] = value
        return cls(**values)

    def validate(self) -> tuple[bool, list[str]]:
        """
        Check every setting.

        Returns:
            tuple[bool, list[str]]: (is_valid, messages), each message prefixed
            with the flag it concerns.
        """
        errors = []
        if not self.tolerance > 0:
            errors.append(f"--tol: must be positive, got {self.tolerance}")
        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"--format: must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.budget < 1:
            errors.append(f"--budget: must be at least 1, got {self.budget}")
        if self.restarts < 1:
            errors.append(f"--restarts: must be at least 1, got {self.restarts}")
        if self.k_max is not None and self.k_max < 1:
            errors.append(f"--k-max: must be at least 1, got {self.k_max}")
        if self.scott_m < 1:
            errors.append(f"--m: must be at least 1, got {self.scott_m}")
        if self.probe not in {kind.value for kind in ProbeKind}:
            errors.append(f"--probe: unknown probe {self.probe!r}")
        if self.average not in {kind.value for kind in Average}:
            errors.append(f"--average: unknown average {self.average!r}")
        return len(errors) == 0, errors


def load_config(args: argparse.Namespace) -> AnalysisConfig:
    """
    Load and validate configuration from parsed flags.

    Raises:
        ConfigError: On the first invalid setting; ``flag`` names the offending flag.
    """
    config = AnalysisConfig.from_args(args)
    is_valid, errors = config.validate()
    if not is_valid:
        flag, _, message = errors[0].partition(": ")
        raise ConfigError(message, flag=flag)
    return config
