#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Script to run a Nelson diffusion control scenario."""

import argparse
import logging
import os
import sys

from nelsonctl import errors
from nelsonctl import scenario_runner
from nelsonctl import yaml_scenarios_file


def Main():
  """The main program function.

  Returns:
    bool: True if successful or False if not.
  """
  argument_parser = argparse.ArgumentParser(description=(
      'Runs a scenario and writes its tables and manifest.'))

  argument_parser.add_argument(
      '--config', dest='config', type=str, metavar='PATH', action='store',
      default=None, help=(
          'Path to a scenario configuration file in YAML or JSON.'))

  argument_parser.add_argument(
      '--grid', dest='grid', type=int, metavar='N', action='store',
      default=None, help='number of grid points, overrides n_points.')

  argument_parser.add_argument(
      '--out', dest='out', type=str, metavar='DIR', action='store',
      default=None, help='Directory to write the output to.')

  argument_parser.add_argument(
      '--quiet', dest='quiet', action='store_true', default=False,
      help='only report warnings and errors.')

  argument_parser.add_argument(
      '--seed', dest='seed', type=int, metavar='N', action='store',
      default=None, help='random number generator seed, overrides seed.')

  options = argument_parser.parse_args()

  if not options.config:
    print('Path to scenario configuration is missing.')
    print('')
    argument_parser.print_help()
    print('')
    return False

  if not os.path.isfile(options.config):
    print(f'No such scenario configuration file: {options.config:s}')
    print('')
    return False

  if options.out and os.path.exists(options.out) and not os.path.isdir(
      options.out):
    print(f'{options.out:s} must be a directory')
    print('')
    return False

  logging_level = logging.INFO
  if options.quiet:
    logging_level = logging.WARNING

  logging.basicConfig(
      level=logging_level, format='[%(levelname)s] %(message)s')

  scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

  try:
    configurations = list(scenarios_file.ReadFromFile(options.config))
    if not configurations:
      raise errors.ConfigurationError(
          f'Missing scenario in: {options.config:s}')

    if len(configurations) > 1:
      logging.warning((
          f'Using first of {len(configurations):d} scenarios in: '
          f'{options.config:s}'))

    configuration = configurations[0]
    overrides = {'n_points': options.grid, 'seed': options.seed}
    for key, value in overrides.items():
      if value is not None:
        configuration.values[key] = value

    # Overrides are checked the same way as the configuration file.
    configuration = scenarios_file.ReadFromDict(configuration.CopyToDict())

    runner = scenario_runner.ScenarioRunner()
    manifest_path = runner.RunScenario(configuration, output_path=options.out)

  except errors.ConfigurationError as exception:
    print(f'[ERROR] invalid configuration: {exception!s}', file=sys.stderr)
    print('')
    return False

  except errors.Error as exception:
    print(f'[ERROR] {exception!s}', file=sys.stderr)
    print('')
    return False

  except KeyboardInterrupt:
    print('Aborted by user.', file=sys.stderr)
    print('')
    return False

  logging.info(f'Manifest: {manifest_path:s}')

  return True


if __name__ == '__main__':
  if not Main():
    sys.exit(1)
  else:
    sys.exit(0)
