#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the YAML-based scenarios file."""

import io
import math
import unittest

from nelsonctl import errors
from nelsonctl import yaml_scenarios_file

from tests import test_lib


class YAMLScenariosFileTest(test_lib.BaseTestCase):
  """Tests for the YAML-based scenarios file."""

  # pylint: disable=protected-access

  _TEST_YAML = {
      'scenario': 'squeeze',
      'b': 2,
      'output': 'output/squeeze',
      'tau': 1.0,
      'n_samples': 11}

  def testReadScenarioConfiguration(self):
    """Tests the _ReadScenarioConfiguration function."""
    test_scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

    configuration = test_scenarios_file._ReadScenarioConfiguration(
        self._TEST_YAML)

    self.assertIsNotNone(configuration)
    self.assertEqual(configuration.name, 'squeeze')
    self.assertEqual(configuration.GetValue('b'), 2.0)
    self.assertIsInstance(configuration.GetValue('b'), float)
    self.assertEqual(configuration.GetValue('n_samples'), 11)
    self.assertEqual(configuration.GetValue('output'), 'output/squeeze')

    configuration = test_scenarios_file._ReadScenarioConfiguration({
        'scenario': 'eigs', 'level': 1, 'sector': [0.0, None], 'tau': None})
    self.assertEqual(configuration.GetValue('sector'), [0.0, math.inf])
    self.assertIsNone(configuration.GetValue('tau'))

    with self.assertRaises(errors.ConfigurationError):
      test_scenarios_file._ReadScenarioConfiguration({})

    with self.assertRaises(errors.ConfigurationError):
      test_scenarios_file._ReadScenarioConfiguration(['scenario'])

    with self.assertRaises(errors.ConfigurationError):
      test_scenarios_file._ReadScenarioConfiguration({'b': 2.0})

    with self.assertRaises(errors.ConfigurationError):
      test_scenarios_file._ReadScenarioConfiguration({'scenario': 'bogus'})

    with self.assertRaises(errors.ConfigurationError):
      test_scenarios_file._ReadScenarioConfiguration({
          'scenario': 'squeeze', 'bogus': 'test'})

  def testReadScenarioConfigurationValues(self):
    """Tests the _ReadScenarioConfiguration function value checks."""
    test_scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

    invalid_values = [
        {'b': 'two'},
        {'b': True},
        {'b': 0.0},
        {'tau': -1.0},
        {'D': math.inf},
        {'epsilon': 2.5},
        {'N': 1},
        {'N': 2.0},
        {'level': 21},
        {'n_points': 4},
        {'seed': -1},
        {'flow': 'bogus'},
        {'method': 3},
        {'output': ''},
        {'sector': [1.0]},
        {'sector': [1.0, -1.0]},
        {'sector': ['a', 1.0]}]

    for values in invalid_values:
      values['scenario'] = 'squeeze'
      with self.assertRaises(errors.ConfigurationError):
        test_scenarios_file._ReadScenarioConfiguration(values)

  def testReadFromFileObject(self):
    """Tests the _ReadFromFileObject function."""
    test_file_path = self._GetTestFilePath(['scenarios.yaml'])
    self._SkipIfPathNotExists(test_file_path)

    test_scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

    with open(test_file_path, 'r', encoding='utf-8') as file_object:
      configurations = list(test_scenarios_file._ReadFromFileObject(
          file_object))

    self.assertEqual(len(configurations), 2)
    self.assertEqual(configurations[0].name, 'decay')
    self.assertEqual(configurations[1].GetValue('sector'), [-math.inf, 0.0])

    file_object = io.StringIO('scenario: [squeeze\n')
    with self.assertRaises(errors.ConfigurationError):
      list(test_scenarios_file._ReadFromFileObject(file_object))

  def testReadFromDict(self):
    """Tests the ReadFromDict function."""
    test_scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

    configuration = test_scenarios_file._ReadScenarioConfiguration(
        self._TEST_YAML)
    copied_configuration = test_scenarios_file.ReadFromDict(
        configuration.CopyToDict())
    self.assertEqual(copied_configuration.values, configuration.values)

  def testReadFromFile(self):
    """Tests the ReadFromFile function."""
    test_scenarios_file = yaml_scenarios_file.YAMLScenariosFile()

    test_file_path = self._GetTestFilePath(['squeeze.yaml'])
    self._SkipIfPathNotExists(test_file_path)

    configurations = list(test_scenarios_file.ReadFromFile(test_file_path))
    self.assertEqual(len(configurations), 1)
    self.assertEqual(configurations[0].name, 'squeeze')
    self.assertEqual(configurations[0].GetValue('t_start'), -2.0)

    test_file_path = self._GetTestFilePath(['eigs.json'])
    self._SkipIfPathNotExists(test_file_path)

    configurations = list(test_scenarios_file.ReadFromFile(test_file_path))
    self.assertEqual(len(configurations), 1)
    self.assertEqual(configurations[0].name, 'eigs')
    self.assertEqual(configurations[0].GetValue('sector'), [-1.0, 1.0])

    test_file_path = self._GetTestFilePath(['invalid.yaml'])
    self._SkipIfPathNotExists(test_file_path)

    with self.assertRaises(errors.ConfigurationError):
      list(test_scenarios_file.ReadFromFile(test_file_path))


if __name__ == '__main__':
  unittest.main()
