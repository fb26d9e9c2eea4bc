# -*- coding: utf-8 -*-
"""YAML-based scenarios file."""

import math

import yaml

from nelsonctl import definitions
from nelsonctl import errors
from nelsonctl import resources
from nelsonctl import states


class YAMLScenariosFile(object):
  """YAML-based scenarios file.

  A YAML-based scenarios file contains one or more scenario configurations.
  Since a JSON document is also a YAML document, JSON configuration files can
  be read as well. A scenario configuration consists of:

  scenario: squeeze
  b: 2.0
  tau: 1.0
  t_start: -6.0
  t_end: 6.0

  Where:
  * scenario, name of the scenario, such as eigs or squeeze.
  * the other keys, parameters of the scenario, where a null value
      represents an unset parameter.
  """

  _FLOAT_KEYS = frozenset([
      'D', 'L', 'a', 'b', 'dt', 'epsilon', 'hbar', 'm', 'omega', 'sigma0',
      't_end', 't_start', 'tau', 'x0'])

  _INTEGER_KEYS = frozenset([
      'N', 'level', 'n_eigenvalues', 'n_paths', 'n_points', 'n_samples',
      'seed', 'workers'])

  _MINIMUM_INTEGER_VALUES = {
      'N': 2,
      'level': 0,
      'n_eigenvalues': 1,
      'n_paths': 1,
      'n_points': resources.Grid.MINIMUM_NUMBER_OF_POINTS,
      'n_samples': 1,
      'seed': 0,
      'workers': 1}

  _POSITIVE_KEYS = frozenset([
      'D', 'L', 'b', 'dt', 'hbar', 'm', 'omega', 'sigma0', 'tau'])

  _STRING_VALUES = {
      'flow': definitions.FLOW_NAMES,
      'kernel': definitions.KERNEL_NAMES,
      'method': definitions.METHOD_NAMES,
      'output': None}

  _SUPPORTED_KEYS = frozenset([
      'scenario', 'sector']).union(
          _FLOAT_KEYS, _INTEGER_KEYS, _STRING_VALUES.keys())

  def _CheckFloatValue(self, key, value):
    """Checks a floating-point configuration value.

    Args:
      key (str): configuration key.
      value (object): configuration value.

    Returns:
      float: configuration value.

    Raises:
      ConfigurationError: if the value is not supported.
    """
    if isinstance(value, bool) or not isinstance(value, (float, int)):
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected a number, got: {value!r}')

    value = float(value)
    if not math.isfinite(value):
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected a finite number.')

    if key in self._POSITIVE_KEYS and not value > 0.0:
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected a positive number, got: '
          f'{value!s}')

    if key == 'epsilon' and not 0.0 <= value <= 2.0:
      raise errors.ConfigurationError(
          f'Invalid value of: epsilon expected a value in [0, 2], got: '
          f'{value!s}')

    return value

  def _CheckIntegerValue(self, key, value):
    """Checks an integer configuration value.

    Args:
      key (str): configuration key.
      value (object): configuration value.

    Returns:
      int: configuration value.

    Raises:
      ConfigurationError: if the value is not supported.
    """
    if isinstance(value, bool) or not isinstance(value, int):
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected an integer, got: {value!r}')

    minimum_value = self._MINIMUM_INTEGER_VALUES[key]
    if value < minimum_value:
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected at least {minimum_value:d}, '
          f'got: {value:d}')

    if key == 'level' and value > states.MAXIMUM_LEVEL:
      raise errors.ConfigurationError(
          f'Invalid value of: level expected at most '
          f'{states.MAXIMUM_LEVEL:d}, got: {value:d}')

    return value

  def _CheckSectorValue(self, value):
    """Checks a sector configuration value.

    Args:
      value (object): configuration value, a list of a lower and upper bound
          in units of sigma0, where null represents an infinite bound.

    Returns:
      list[float]: lower and upper bound.

    Raises:
      ConfigurationError: if the value is not supported.
    """
    if not isinstance(value, (list, tuple)) or len(value) != 2:
      raise errors.ConfigurationError(
          f'Invalid value of: sector expected a list of 2 bounds, got: '
          f'{value!r}')

    bounds = []
    for bound, infinity in zip(value, (-math.inf, math.inf)):
      if bound is None:
        bound = infinity
      elif isinstance(bound, bool) or not isinstance(bound, (float, int)):
        raise errors.ConfigurationError(
            f'Invalid value of: sector bound expected a number, got: '
            f'{bound!r}')

      bounds.append(float(bound))

    if not bounds[0] < bounds[1]:
      raise errors.ConfigurationError(
          f'Invalid value of: sector expected lower < upper, got: '
          f'{bounds!s}')

    return bounds

  def _CheckStringValue(self, key, value):
    """Checks a string configuration value.

    Args:
      key (str): configuration key.
      value (object): configuration value.

    Returns:
      str: configuration value.

    Raises:
      ConfigurationError: if the value is not supported.
    """
    if not isinstance(value, str) or not value:
      raise errors.ConfigurationError(
          f'Invalid value of: {key:s} expected a string, got: {value!r}')

    supported_values = self._STRING_VALUES[key]
    if supported_values and value not in supported_values:
      supported_values = ', '.join(sorted(supported_values))
      raise errors.ConfigurationError(
          f'Unsupported value of: {key:s}: {value:s} expected one of: '
          f'{supported_values:s}')

    return value

  def _ReadScenarioConfiguration(self, yaml_scenario_configuration):
    """Reads a scenario configuration from a dictionary.

    Args:
      yaml_scenario_configuration (dict[str, object]): YAML scenario
          configuration values.

    Returns:
      ScenarioConfiguration: scenario configuration.

    Raises:
      ConfigurationError: if the format of the scenario configuration is not
          set or incorrect.
    """
    if not yaml_scenario_configuration:
      raise errors.ConfigurationError('Missing scenario configuration values.')

    if not isinstance(yaml_scenario_configuration, dict):
      raise errors.ConfigurationError(
          'Invalid scenario configuration expected a mapping.')

    different_keys = set(yaml_scenario_configuration) - self._SUPPORTED_KEYS
    if different_keys:
      different_keys = ', '.join(sorted(map(str, different_keys)))
      raise errors.ConfigurationError(f'Undefined keys: {different_keys:s}')

    name = yaml_scenario_configuration.get('scenario', None)
    if not name:
      raise errors.ConfigurationError(
          'Invalid scenario configuration missing scenario.')

    if name not in definitions.SCENARIO_NAMES:
      scenario_names = ', '.join(sorted(definitions.SCENARIO_NAMES))
      raise errors.ConfigurationError(
          f'Unsupported scenario: {name!s} expected one of: '
          f'{scenario_names:s}')

    values = {}
    for key, value in yaml_scenario_configuration.items():
      if key == 'scenario' or value is None:
        continue

      if key in self._FLOAT_KEYS:
        value = self._CheckFloatValue(key, value)
      elif key in self._INTEGER_KEYS:
        value = self._CheckIntegerValue(key, value)
      elif key == 'sector':
        value = self._CheckSectorValue(value)
      else:
        value = self._CheckStringValue(key, value)

      values[key] = value

    return resources.ScenarioConfiguration(name, values=values)

  def _ReadFromFileObject(self, file_object):
    """Reads the scenario configurations from a file-like object.

    Args:
      file_object (file): scenarios file-like object.

    Yields:
      ScenarioConfiguration: scenario configuration.

    Raises:
      ConfigurationError: if the file cannot be parsed.
    """
    yaml_generator = yaml.safe_load_all(file_object)

    try:
      for yaml_scenario_configuration in yaml_generator:
        yield self._ReadScenarioConfiguration(yaml_scenario_configuration)

    except yaml.YAMLError as exception:
      raise errors.ConfigurationError(
          f'Unable to parse scenario configuration with error: '
          f'{exception!s}')

  def ReadFromDict(self, values):
    """Reads a scenario configuration from a dictionary.

    Args:
      values (dict[str, object]): scenario configuration values, such as
          those of ScenarioConfiguration.CopyToDict().

    Returns:
      ScenarioConfiguration: scenario configuration.

    Raises:
      ConfigurationError: if the scenario configuration is not valid.
    """
    return self._ReadScenarioConfiguration(values)

  def ReadFromFile(self, path):
    """Reads the scenario configurations from a YAML or JSON file.

    Args:
      path (str): path to a scenarios file.

    Yields:
      ScenarioConfiguration: scenario configuration.
    """
    with open(path, 'r', encoding='utf-8') as file_object:
      yield from self._ReadFromFileObject(file_object)
