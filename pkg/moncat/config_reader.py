from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from numbers import Number
from typing import Any, Dict, List, Optional, Tuple, Type

import yaml

from moncat.contextfree.lifting import DEFAULT_MAX_WIDTH
from moncat.exceptions import (
    ConfigurationFileException, WrongParametersStructureException, WrongParameterValueException)
from moncat.regular.pumping import DEFAULT_EXPONENTS
from moncat.utils.budget import default_max_work
from moncat.utils.logger import MoncatLogger


@dataclass(frozen=True)
class SessionConfig:
    @dataclass(frozen=True)
    class Bounds:
        enumerate: int = 6
        derive: int = 5
        verify: int = 5

    name: Optional[str] = None
    corpus: List[str] = field(default_factory=list)
    max_work: int = field(default_factory=default_max_work)
    lift_width: int = DEFAULT_MAX_WIDTH
    pump_exponents: Tuple[int, ...] = DEFAULT_EXPONENTS
    bounds: Bounds = field(default_factory=Bounds)
    parallel: bool = False
    logger: Optional[MoncatLogger.Config] = None


class ConfigReader:
    _sections = (
        'name', 'corpus', 'max_work', 'lift_width', 'pump_exponents', 'bounds', 'parallel',
        'logger',
    )

    @classmethod
    def read(
        cls: Type[ConfigReader],
        config: str,
        config_parameters: Optional[Dict] = None,
    ) -> SessionConfig:
        if config_parameters:
            cls._validate_config_parameters_structure(config_parameters)

        config = cls._check_and_substitute_declared_variables(config, config_parameters)

        parsed_yaml = yaml.safe_load(config) or {}
        if not isinstance(parsed_yaml, dict):
            raise ConfigurationFileException('A session config has to be a YAML mapping.')

        for key in parsed_yaml:
            if key not in cls._sections:
                warnings.warn(f"Unknown section '{key}' in the session config will be ignored.")

        bounds = cls._read_bounds(parsed_yaml.get('bounds') or {})
        corpus = parsed_yaml.get('corpus') or []
        if not isinstance(corpus, list) or not all(isinstance(p, str) for p in corpus):
            raise WrongParameterValueException(
                "Parameter 'corpus' in config should be a list of file paths. "
                f"Found value: '{corpus}'.")

        name = parsed_yaml.get('name')
        if name is not None and not isinstance(name, (str, Number)):
            raise WrongParameterValueException(
                "Parameter 'name' in config should accept strings or numbers only. "
                f"Found value: '{name}'.")

        exponents = parsed_yaml.get('pump_exponents', list(DEFAULT_EXPONENTS))
        if not isinstance(exponents, list) or not all(
                isinstance(a, int) and a >= 0 for a in exponents):
            raise WrongParameterValueException(
                "Parameter 'pump_exponents' in config should be a list of non-negative "
                f"integers. Found value: '{exponents}'.")

        return SessionConfig(
            name=str(name) if name is not None else None,
            corpus=list(corpus),
            max_work=cls._positive(parsed_yaml, 'max_work', default_max_work()),
            lift_width=cls._positive(parsed_yaml, 'lift_width', DEFAULT_MAX_WIDTH),
            pump_exponents=tuple(exponents),
            bounds=bounds,
            parallel=bool(parsed_yaml.get('parallel', False)),
            logger=cls._read_logger(parsed_yaml.get('logger')),
        )

    @staticmethod
    def _check_and_substitute_declared_variables(config_str, config_parameters):
        declared_variables = list(set(re.findall(r'\${(\w+)}', config_str)))

        if declared_variables:
            if not config_parameters:
                raise ConfigurationFileException(
                    'Config file contains declared variables and '
                    f'no config parameters were passed. Found variables: {declared_variables}'
                )
            parameters_variables = config_parameters.keys()

            unlinked_variables = [
                declared_var
                for declared_var in declared_variables
                if declared_var not in parameters_variables
            ]

            if unlinked_variables:
                raise ConfigurationFileException(
                    'Config file contains declared variables '
                    'that were not specified in parameters. '
                    f'Found unlinked variables {unlinked_variables}'
                )

        for parameters_var in (config_parameters or {}).keys():
            if parameters_var not in declared_variables:
                warnings.warn(
                    'Parameters contain an additional '
                    f'variable that is not used in config file: {parameters_var}'
                )
            else:
                config_str = config_str.replace(
                    f'${{{parameters_var}}}',
                    str(config_parameters[parameters_var])
                )

        return config_str

    @staticmethod
    def _validate_config_parameters_structure(config_parameters):
        if not isinstance(config_parameters, Dict):
            raise WrongParametersStructureException(
                'Configuration parameters should be passed in a dictionary.'
            )
        for key, value in config_parameters.items():
            if not re.match(r'^\w+$', str(key)):
                raise WrongParameterValueException(
                    'Configuration parameters keys should contain '
                    f'only alphanumeric chars and underscores. Found: {key}.'
                )
            if not isinstance(value, (str, Number)):
                raise WrongParameterValueException(
                    'Configuration parameters values should be of '
                    f'string or numeric type. Found value: {value}.'
                )

    @staticmethod
    def _positive(parsed_yaml: Dict[str, Any], key: str, default: int) -> int:
        value = parsed_yaml.get(key, default)
        if isinstance(value, str) and value.isdigit():
            value = int(value)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise WrongParameterValueException(
                f"Parameter '{key}' in config should be a positive integer. "
                f"Found value: '{value}'.")
        return value

    @classmethod
    def _read_bounds(cls, bounds: Dict[str, Any]) -> SessionConfig.Bounds:
        if not isinstance(bounds, dict):
            raise WrongParametersStructureException("Section 'bounds' should be a mapping.")
        defaults = SessionConfig.Bounds()
        unknown = [key for key in bounds if key not in ('enumerate', 'derive', 'verify')]
        if unknown:
            raise WrongParameterValueException(f"Unknown bounds in config: {unknown}.")
        return SessionConfig.Bounds(**{
            key: cls._positive(bounds, key, getattr(defaults, key))
            for key in ('enumerate', 'derive', 'verify')
        })

    @staticmethod
    def _read_logger(section: Optional[Dict[str, Any]]) -> Optional[MoncatLogger.Config]:
        if section is None:
            return None
        if not isinstance(section, dict):
            raise WrongParametersStructureException("Section 'logger' should be a mapping.")
        options = dict(section)
        if 'output' in options:
            output = str(options['output']).upper()
            if output not in MoncatLogger.Config.Output.__members__:
                raise WrongParameterValueException(
                    f"Logger output should be 'stdout' or 'logging'. Found: {options['output']}.")
            options['output'] = MoncatLogger.Config.Output[output]
        if 'format' in options:
            parts = [str(part).upper() for part in options['format']]
            for part in parts:
                if part not in MoncatLogger.Config.Part.__members__:
                    raise WrongParameterValueException(f'Unknown logger part: {part}.')
            options['format'] = [MoncatLogger.Config.Part[part] for part in parts]
        try:
            return MoncatLogger.Config(**options)
        except TypeError:
            raise WrongParameterValueException(
                f'Unknown logger options: {sorted(options)}.') from None
