#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the Nelson diffusion resources."""

import math
import unittest

import numpy

from nelsonctl import errors
from nelsonctl import resources

from tests import test_lib


class OscillatorParametersTest(test_lib.BaseTestCase):
  """Tests for the harmonic oscillator parameters."""

  def testInitialize(self):
    """Tests the __init__ function."""
    parameters = resources.OscillatorParameters(
        mass=2.0, hbar=3.0, frequency=0.5)
    self.assertEqual(parameters.diffusion, 0.75)
    self.assertEqual(parameters.sigma0_squared, 1.5)
    self.assertAlmostEqual(parameters.sigma0, math.sqrt(1.5))

    with self.assertRaises(errors.DomainError):
      resources.OscillatorParameters(mass=0.0)

    with self.assertRaises(errors.DomainError):
      resources.OscillatorParameters(frequency=-1.0)

    with self.assertRaises(errors.DomainError):
      resources.OscillatorParameters(hbar=math.inf)

  def testFromDiffusion(self):
    """Tests the FromDiffusion function."""
    parameters = resources.OscillatorParameters.FromDiffusion(1.0, 1.0)
    self.assertEqual(parameters.hbar, 2.0)
    self.assertEqual(parameters.frequency, 1.0)
    self.assertEqual(parameters.sigma0, 1.0)

    with self.assertRaises(errors.DomainError):
      resources.OscillatorParameters.FromDiffusion(0.0, 1.0)

  def testCopyToDict(self):
    """Tests the CopyToDict function."""
    parameters = resources.OscillatorParameters.FromDiffusion(1.0, 2.0)

    expected_dict = {
        'D': 1.0,
        'hbar': 2.0,
        'm': 1.0,
        'omega': 0.25,
        'sigma0': 2.0}
    self.assertEqual(parameters.CopyToDict(), expected_dict)


class GridTest(test_lib.BaseTestCase):
  """Tests for the grid."""

  def testInitialize(self):
    """Tests the __init__ function."""
    grid = resources.Grid(-1.0, 1.0, 21)
    self.assertEqual(grid.spacing, 0.1)
    self.assertEqual(grid.points.size, 21)
    self.assertFalse(grid.truncated)

    with self.assertRaises(errors.DomainError):
      resources.Grid(1.0, -1.0, 21)

    with self.assertRaises(errors.DomainError):
      resources.Grid(-1.0, 1.0, resources.Grid.MINIMUM_NUMBER_OF_POINTS - 1)

  def testGetTrapezoidWeights(self):
    """Tests the GetTrapezoidWeights function."""
    grid = resources.Grid(0.0, 3.0, 31)
    weights = grid.GetTrapezoidWeights()
    self.assertAlmostEqual(weights[0], 0.05)
    self.assertAlmostEqual(weights[1], 0.1)
    self.assertAlmostEqual(numpy.sum(weights), 3.0)

  def testIsEqual(self):
    """Tests the IsEqual function."""
    grid = resources.Grid(-1.0, 1.0, 21)
    self.assertTrue(grid.IsEqual(resources.Grid(-1.0, 1.0, 21)))
    self.assertFalse(grid.IsEqual(resources.Grid(-1.0, 1.0, 41)))

  def testCopyToDict(self):
    """Tests the CopyToDict function."""
    grid = resources.Grid(-1.0, 1.0, 21, truncated=True)

    expected_dict = {
        'lower': -1.0,
        'number_of_points': 21,
        'truncated': True,
        'upper': 1.0}
    self.assertEqual(grid.CopyToDict(), expected_dict)


class GridDensityTest(test_lib.BaseTestCase):
  """Tests for the grid density."""

  def testGetMass(self):
    """Tests the GetMass function."""
    grid = resources.Grid(-1.0, 1.0, 21)
    density = resources.GridDensity(grid, numpy.full(21, 0.5))

    self.assertAlmostEqual(density.GetMass(), 1.0)
    self.assertAlmostEqual(density.GetMass(lower=0.0), 0.5)
    self.assertAlmostEqual(density.GetMass(lower=-0.55, upper=0.55), 0.5)
    self.assertEqual(density.GetMass(lower=0.99, upper=1.0), 0.0)

  def testCopy(self):
    """Tests the Copy function."""
    grid = resources.Grid(-1.0, 1.0, 21)
    density = resources.GridDensity(grid, numpy.full(21, 0.5), time=1.0)
    density.sector_masses = [1.0]

    copied_density = density.Copy(time=2.0)
    self.assertEqual(copied_density.time, 2.0)
    self.assertEqual(copied_density.sector_masses, [1.0])

    copied_density.values[0] = 3.0
    self.assertEqual(density.values[0], 0.5)


class SectorDecompositionTest(test_lib.BaseTestCase):
  """Tests for the sector decomposition."""

  def testGetIndexRanges(self):
    """Tests the GetIndexRanges function."""
    grid = resources.Grid(-2.0, 2.0, 41)
    sectors = resources.SectorDecomposition([1.0, -1.0], -2.0, 2.0)
    self.assertEqual(sectors.breakpoints, [-1.0, 1.0])
    self.assertEqual(len(sectors.sectors), 3)

    index_ranges = sectors.GetIndexRanges(grid)
    self.assertEqual(index_ranges, [(0, 9), (11, 29), (31, 40)])

    sectors = resources.SectorDecomposition(
        [], 0.0, 2.0, lower_is_node=True)
    grid = resources.Grid(0.0, 2.0, 21)
    self.assertEqual(sectors.GetIndexRanges(grid), [(1, 20)])

    sectors = resources.SectorDecomposition([0.95], -1.0, 1.0)
    with self.assertRaises(errors.DomainError):
      sectors.GetIndexRanges(resources.Grid(-1.0, 1.0, 16))

  def testGetSectorIndex(self):
    """Tests the GetSectorIndex function."""
    sectors = resources.SectorDecomposition([-1.0, 1.0], -2.0, 2.0)
    numpy.testing.assert_array_equal(
        sectors.GetSectorIndex(numpy.array([-1.5, 0.0, 1.5])), [0, 1, 2])


class EigenSystemTest(test_lib.BaseTestCase):
  """Tests for the eigen system."""

  def testGetScaledEigenvalues(self):
    """Tests the GetScaledEigenvalues function."""
    grid = resources.Grid(-1.0, 1.0, 21)
    eigenfunctions = numpy.ones((2, 21))
    eigen_system = resources.EigenSystem(
        grid, 0, 20, grid.GetTrapezoidWeights(), numpy.array([0.0, 4.0]),
        eigenfunctions, frequency=2.0)
    numpy.testing.assert_allclose(
        eigen_system.GetScaledEigenvalues(), [0.0, 2.0])

    eigen_system.frequency = None
    with self.assertRaises(errors.DomainError):
      eigen_system.GetScaledEigenvalues()


class ControlScheduleTest(test_lib.BaseTestCase):
  """Tests for the control schedule."""

  def testGetPotential(self):
    """Tests the GetPotential and GetPhase functions."""
    schedule = resources.ControlSchedule([0.0, 1.0], 2.0)
    schedule.frequency_squared[1] = 4.0
    schedule.linear_coefficient[1] = 1.0
    schedule.offset[1] = 0.5
    schedule.phase_curvature[1] = 1.0
    schedule.phase_tilt[1] = -1.0

    self.assertEqual(schedule.GetPotential(1.0, 0), 0.0)
    self.assertEqual(schedule.GetPotential(1.0, 1), 4.0 - 2.0 + 0.5)
    self.assertEqual(schedule.GetPhase(1.0, 1), 1.0 + 2.0)


class SqueezeSpecificationTest(test_lib.BaseTestCase):
  """Tests for the squeezing specification."""

  def testInitialize(self):
    """Tests the __init__ function."""
    specification = resources.SqueezeSpecification(1.0, 2.0, 1.0, 1.0)
    self.assertEqual(specification.sigma1, 2.0)

    with self.assertRaises(errors.DomainError):
      resources.SqueezeSpecification(1.0, 0.0, 1.0, 1.0)


class EnsembleSpecificationTest(test_lib.BaseTestCase):
  """Tests for the ensemble specification."""

  def testInitialize(self):
    """Tests the __init__ function."""
    grid = resources.Grid(-4.0, 4.0, 81)
    specification = resources.EnsembleSpecification(
        100, [2.0, 1.0], 0.01, 0.5, grid, initial_position=1.0,
        chunk_size=10)
    self.assertEqual(specification.times, [1.0, 2.0])
    self.assertEqual(specification.chunk_size, 12)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(
          0, [1.0], 0.01, 0.5, grid, initial_position=1.0)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(100, [1.0], 0.01, 0.5, grid)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(
          100, [1.0], 0.0, 0.5, grid, initial_position=1.0)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(
          100, [1.0], 0.01, 0.5, grid, initial_position=1.0, start_time=2.0)

  def testInitializeTimeStepBound(self):
    """Tests the __init__ function time step bound."""
    grid = resources.Grid(-4.0, 4.0, 81)

    specification = resources.EnsembleSpecification(
        100, [1.0], 0.005, 0.5, grid, initial_position=1.0, frequency=2.0)
    self.assertEqual(specification.frequency, 2.0)

    resources.EnsembleSpecification(
        100, [1.0], 0.5, 0.5, grid, initial_position=1.0)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(
          100, [1.0], 0.5, 0.5, grid, initial_position=1.0, frequency=1.0)

    with self.assertRaises(errors.DomainError):
      resources.EnsembleSpecification(
          100, [1.0], 0.01, 0.5, grid, initial_position=1.0, frequency=2.0)

  def testCopyToDict(self):
    """Tests the CopyToDict function."""
    grid = resources.Grid(-4.0, 4.0, 81)
    specification = resources.EnsembleSpecification(
        100, [1.0], 0.01, 0.5, grid, seed=7, initial_position=1.0)

    dictionary = specification.CopyToDict()
    self.assertEqual(dictionary['seed'], 7)
    self.assertEqual(dictionary['n_paths'], 100)
    self.assertEqual(dictionary['times'], [1.0])


class EmpiricalDensityTest(test_lib.BaseTestCase):
  """Tests for the empirical density."""

  def testInitialize(self):
    """Tests the __init__ function."""
    grid = resources.Grid(0.0, 1.5, 16)
    counts = numpy.zeros(16, dtype=numpy.int64)
    counts[3] = 6
    counts[4] = 2
    empirical_density = resources.EmpiricalDensity(grid, counts, 10)

    self.assertEqual(empirical_density.outside_count, 2)
    self.assertAlmostEqual(empirical_density.values[3], 6.0)
    self.assertFalse(empirical_density.fidelity_warning)

  def testGetDensityFunction(self):
    """Tests the GetDensityFunction function."""
    grid = resources.Grid(0.0, 1.5, 16)
    counts = numpy.zeros(16, dtype=numpy.int64)
    counts[3] = 10
    empirical_density = resources.EmpiricalDensity(grid, counts, 10)

    edges = empirical_density.GetCellEdges()
    self.assertEqual(edges.size, 17)
    self.assertAlmostEqual(edges[0], -0.05)

    density_function = empirical_density.GetDensityFunction()
    numpy.testing.assert_allclose(
        density_function(numpy.array([0.3, 0.34, 0.36, -1.0])),
        [10.0, 10.0, 0.0, 0.0])


class ScenarioConfigurationTest(test_lib.BaseTestCase):
  """Tests for the scenario configuration."""

  def testCopyToDict(self):
    """Tests the CopyToDict function."""
    configuration = resources.ScenarioConfiguration(
        'squeeze', values={'b': 2.0})
    self.assertEqual(configuration.GetValue('b'), 2.0)
    self.assertIsNone(configuration.GetValue('tau'))
    self.assertEqual(configuration.GetValue('tau', 1.0), 1.0)

    expected_dict = {'b': 2.0, 'scenario': 'squeeze'}
    self.assertEqual(configuration.CopyToDict(), expected_dict)


if __name__ == '__main__':
  unittest.main()
