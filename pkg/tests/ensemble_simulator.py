#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the Monte Carlo ensemble simulator."""

import math
import unittest

import numpy

from nelsonctl import drifts
from nelsonctl import ensemble_simulator
from nelsonctl import errors
from nelsonctl import resources
from nelsonctl import states
from nelsonctl import transition_kernels

from tests import test_lib


class EnsembleSimulatorTest(test_lib.BaseTestCase):
  """Tests for the Monte Carlo ensemble simulator."""

  def testSimulateEnsembleOrnsteinUhlenbeck(self):
    """Tests the SimulateEnsemble function with the ground state drift."""
    parameters = resources.OscillatorParameters()
    kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
    drift = drifts.LinearDrift(0.0, -parameters.frequency)
    grid = resources.Grid(-4.0, 4.0, 81)

    specification = resources.EnsembleSpecification(
        20000, [1.0], 0.01, parameters.diffusion, grid, seed=1,
        initial_position=1.0)

    simulator = ensemble_simulator.EnsembleSimulator()
    empirical_densities = simulator.SimulateEnsemble(drift, specification)
    self.assertEqual(len(empirical_densities), 1)

    empirical_density = empirical_densities[0]
    self.assertEqual(empirical_density.time, 1.0)
    self.assertEqual(empirical_density.rejected_steps, 0)
    self.assertFalse(empirical_density.fidelity_warning)
    self.assertEqual(empirical_density.sector_masses, [1.0])

    mean, variance = kernel.GetMeanAndVariance(1.0, 1.0)
    self.assertLess(abs(empirical_density.mean - float(mean)), 0.03)
    self.assertLess(abs(empirical_density.variance - variance), 0.03)

    distances = ensemble_simulator.Compare(
        empirical_density, lambda x: kernel.GetDensity(x, 1.0, 1.0))
    self.assertLess(distances['ks'], 0.03)
    self.assertLess(distances['l1'], 0.1)

  def testSimulateEnsembleExcitedState(self):
    """Tests the SimulateEnsemble function with the excited state drift."""
    parameters = resources.OscillatorParameters()
    state = states.CreateOscillatorEigenstate(1, parameters)
    drift = drifts.StationaryStateDrift(state)
    grid = resources.Grid(-4.0, 4.0, 81)

    specification = resources.EnsembleSpecification(
        4000, [0.25, 0.5], 0.005, parameters.diffusion, grid, seed=3,
        initial_position=1.0)

    simulator = ensemble_simulator.EnsembleSimulator()
    empirical_densities = simulator.SimulateEnsemble(drift, specification)
    self.assertEqual(len(empirical_densities), 2)

    for empirical_density in empirical_densities:
      self.assertEqual(empirical_density.sector_masses, [0.0, 1.0])
      self.assertEqual(
          int(numpy.sum(empirical_density.counts[grid.points < 0.0])), 0)

    specification = resources.EnsembleSpecification(
        4, [0.5], 0.005, parameters.diffusion, grid, initial_position=0.0)
    with self.assertRaises(errors.DomainError):
      simulator.SimulateEnsemble(drift, specification)

  def testSimulateEnsembleDeterminism(self):
    """Tests that the ensemble does not depend on the partitioning."""
    parameters = resources.OscillatorParameters()
    drift = drifts.LinearDrift(0.0, -parameters.frequency)
    grid = resources.Grid(-4.0, 4.0, 81)
    simulator = ensemble_simulator.EnsembleSimulator()

    counts = []
    for number_of_workers, chunk_size in ((1, 8192), (4, 8), (3, 64)):
      specification = resources.EnsembleSpecification(
          500, [0.5, 1.0], 0.05, parameters.diffusion, grid, seed=11,
          initial_position=-0.5, number_of_workers=number_of_workers,
          chunk_size=chunk_size)
      empirical_densities = simulator.SimulateEnsemble(drift, specification)
      counts.append([
          empirical_density.counts for empirical_density in empirical_densities])

    for other_counts in counts[1:]:
      for expected_counts, time_counts in zip(counts[0], other_counts):
        numpy.testing.assert_array_equal(time_counts, expected_counts)

    specification = resources.EnsembleSpecification(
        500, [0.5, 1.0], 0.05, parameters.diffusion, grid, seed=12,
        initial_position=-0.5)
    empirical_densities = simulator.SimulateEnsemble(drift, specification)
    self.assertFalse(numpy.array_equal(
        empirical_densities[1].counts, counts[0][1]))

  def testSimulateEnsembleInitialDensity(self):
    """Tests the SimulateEnsemble function with an initial density."""
    parameters = resources.OscillatorParameters()
    state = states.CreateOscillatorEigenstate(0, parameters)
    grid = resources.Grid(-4.0, 4.0, 81)
    initial_density = resources.GridDensity(
        grid, state.GetDensity(grid.points))

    # Without drift or diffusion the paths keep their sampled positions.
    drift = drifts.LinearDrift(0.0, 0.0)
    specification = resources.EnsembleSpecification(
        20000, [0.0], 0.01, 0.0, grid, seed=5, initial_density=initial_density)

    simulator = ensemble_simulator.EnsembleSimulator()
    empirical_densities = simulator.SimulateEnsemble(drift, specification)

    distances = ensemble_simulator.Compare(
        empirical_densities[0], state.GetDensity)
    self.assertLess(distances['ks'], 0.03)
    self.assertLess(distances['l1'], 0.1)

  def testSimulateEnsembleRejections(self):
    """Tests that steps across a node are rejected."""
    drift = drifts.CallableDrift(
        lambda x, time: numpy.full(numpy.shape(x), -10.0),
        singularities=[0.0])
    grid = resources.Grid(-2.0, 2.0, 41)
    specification = resources.EnsembleSpecification(
        4, [1.0], 0.5, 0.0, grid, initial_position=1.0)

    simulator = ensemble_simulator.EnsembleSimulator()
    with self.assertLogs(level='WARNING'):
      empirical_densities = simulator.SimulateEnsemble(drift, specification)

    empirical_density = empirical_densities[0]
    self.assertTrue(empirical_density.fidelity_warning)
    self.assertEqual(empirical_density.halved_steps, 8)
    self.assertEqual(
        empirical_density.rejected_steps,
        8 * (ensemble_simulator.MAXIMUM_NUMBER_OF_REDRAWS + 1))
    self.assertEqual(empirical_density.mean, 1.0)
    self.assertEqual(empirical_density.sector_masses, [0.0, 1.0])


class CompareTest(test_lib.BaseTestCase):
  """Tests for the empirical and analytic density comparison."""

  def testCompare(self):
    """Tests the Compare function."""
    grid = resources.Grid(0.0, 0.9, 10)
    counts = numpy.full(10, 10, dtype=numpy.int64)
    empirical_density = resources.EmpiricalDensity(grid, counts, 100)

    def _GetUniformDensity(x):
      return numpy.where((x > -0.05) & (x < 0.95), 1.0, 0.0)

    distances = ensemble_simulator.Compare(
        empirical_density, _GetUniformDensity)
    self.assertAlmostEqual(distances['l1'], 0.0, places=12)
    self.assertAlmostEqual(distances['ks'], 0.0, places=12)

    # All the mass in the first cell.
    counts = numpy.zeros(10, dtype=numpy.int64)
    counts[0] = 100
    empirical_density = resources.EmpiricalDensity(grid, counts, 100)

    distances = ensemble_simulator.Compare(
        empirical_density, _GetUniformDensity)
    self.assertAlmostEqual(distances['l1'], 1.8, places=12)
    self.assertAlmostEqual(distances['ks'], 0.9, places=12)
    self.assertFalse(math.isnan(distances['ks']))


if __name__ == '__main__':
  unittest.main()
