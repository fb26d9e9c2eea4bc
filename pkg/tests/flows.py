#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the density and drift pairs."""

import unittest

import numpy

from nelsonctl import drifts
from nelsonctl import errors
from nelsonctl import flows
from nelsonctl import fokker_planck
from nelsonctl import resources
from nelsonctl import states
from nelsonctl import transition_kernels

from tests import test_lib


class FlowTestCase(test_lib.BaseTestCase):
  """Shared functionality for flow tests."""

  def _AssertLogDensityDerivatives(self, flow, x, time):
    """Compares the log density derivatives with central differences.

    Args:
      flow (FlowPair): flow.
      x (numpy.ndarray): positions.
      time (float): time.
    """
    derivatives = flow.GetLogDensityDerivatives(x, time)
    expected_derivatives = flows.FlowPair.GetLogDensityDerivatives(
        flow, x, time)
    for derivative, expected_derivative in zip(
        derivatives, expected_derivatives):
      numpy.testing.assert_allclose(
          derivative, expected_derivative, rtol=1e-5, atol=1e-5)

  def _AssertGaugeDerivative(self, flow, time):
    """Compares the gauge derivative with a central difference.

    Args:
      flow (FlowPair): flow.
      time (float): time.
    """
    expected_derivative, _ = fokker_planck.GetCentralDifferences(
        flow.GetGauge, time, 1e-4)
    self.assertAlmostEqual(
        flow.GetGaugeDerivative(time), float(expected_derivative), places=6)

  def _GetFokkerPlanckResidual(self, flow, positions, times):
    """Determines the Fokker-Planck residual of a flow.

    Args:
      flow (FlowPair): flow.
      positions (numpy.ndarray): positions.
      times (list[float]): times.

    Returns:
      float: largest absolute residual.
    """
    return fokker_planck.GetFokkerPlanckResidual(
        flow.GetDensity, flow.GetDrift, flow.parameters.diffusion, positions,
        times, 1e-3, 1e-3)


class StationaryFlowTest(FlowTestCase):
  """Tests for the stationary flow."""

  def testStationaryFlow(self):
    """Tests the stationary flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.StationaryFlow(1, parameters)
    state = states.CreateOscillatorEigenstate(1, parameters)
    x = numpy.array([-1.5, -0.5, 0.5, 1.0, 1.5])

    numpy.testing.assert_array_equal(
        flow.GetDensity(x, 3.0), state.GetDensity(x))
    self.assertEqual(flow.GetGauge(2.0), 3.0)
    self.assertEqual(flow.GetGaugeDerivative(2.0), 1.5)
    self.assertIsInstance(flow.GetDriftField(), drifts.StationaryStateDrift)

    self._AssertLogDensityDerivatives(flow, x, 1.0)

    with self.assertRaises(errors.DomainError):
      flows.StationaryFlow(-1, parameters)

  def testSetGaugeShift(self):
    """Tests the SetGaugeShift function."""
    parameters = resources.OscillatorParameters()
    flow = flows.StationaryFlow(0, parameters)

    flow.SetGaugeShift(lambda time: 2.0 * time, lambda time: 2.0)
    self.assertEqual(flow.GetGauge(1.0), 2.5)
    self.assertEqual(flow.GetGaugeDerivative(1.0), 2.5)


class OrnsteinUhlenbeckFlowTest(FlowTestCase):
  """Tests for the Ornstein-Uhlenbeck flow."""

  def testOrnsteinUhlenbeckFlow(self):
    """Tests the Ornstein-Uhlenbeck flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.OrnsteinUhlenbeckFlow(1.5, parameters, start_time=0.5)
    x = numpy.linspace(-2.0, 2.0, 9)

    kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
    numpy.testing.assert_array_equal(
        flow.GetDensity(x, 1.5), kernel.GetDensity(
            x, 1.5, 1.5, start_time=0.5))

    residual = self._GetFokkerPlanckResidual(flow, x, [1.0, 2.0])
    self.assertLess(residual, 1e-6)

    self._AssertLogDensityDerivatives(flow, x, 1.5)
    self._AssertGaugeDerivative(flow, 1.5)

    drift_field = flow.GetDriftField()
    self.assertIsInstance(drift_field, drifts.LinearDrift)
    numpy.testing.assert_allclose(
        drift_field.GetVelocity(x, 1.5), flow.GetDrift(x, 1.5))

    with self.assertRaises(errors.DomainError):
      flow.GetDensity(x, 0.5)


class ExcitedStateFlowTest(FlowTestCase):
  """Tests for the first excited state flow."""

  def testExcitedStateFlow(self):
    """Tests the first excited state flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.ExcitedStateFlow(1.0, parameters)
    x = numpy.linspace(0.25, 2.0, 8)

    self.assertEqual(flow.GetDensity(numpy.array([-1.0]), 1.0)[0], 0.0)

    residual = self._GetFokkerPlanckResidual(flow, x, [0.5, 1.0])
    self.assertLess(residual, 1e-6)

    self._AssertLogDensityDerivatives(flow, x, 1.0)
    self._AssertGaugeDerivative(flow, 1.0)
    self.assertIsInstance(flow.GetDriftField(), drifts.StationaryStateDrift)

    with self.assertRaises(errors.SingularityError):
      flow.GetDrift(numpy.array([0.0]), 1.0)

    with self.assertRaises(errors.DomainError):
      flows.ExcitedStateFlow(0.0, parameters)


class DecayFlowTest(FlowTestCase):
  """Tests for the decay flow."""

  def testDecayFlow(self):
    """Tests the decay flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.DecayFlow(parameters)
    state = states.CreateOscillatorEigenstate(1, parameters)
    x = numpy.linspace(-3.0, 3.0, 13)

    numpy.testing.assert_allclose(
        flow.GetDensity(x, 0.0), state.GetDensity(x), atol=1e-14)

    residual = self._GetFokkerPlanckResidual(flow, x, [0.5, 1.0])
    self.assertLess(residual, 1e-6)

    self._AssertLogDensityDerivatives(flow, x, 0.5)
    self.assertEqual(flow.GetGauge(2.0), 1.0)


class GaussianFlowTest(FlowTestCase):
  """Tests for the Gaussian flows."""

  def testCoherentStateFlow(self):
    """Tests the coherent packet flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.CoherentStateFlow(1.0, parameters)
    x = numpy.linspace(-3.0, 3.0, 13)

    packet = states.GaussianPacket(1.0, parameters.sigma0_squared, parameters)
    numpy.testing.assert_allclose(
        flow.GetDensity(x, 0.0), packet.GetDensity(x), rtol=1e-12)
    numpy.testing.assert_allclose(
        flow.GetDrift(x, 0.0), -parameters.frequency * (x - 1.0),
        atol=1e-12)

    residual = self._GetFokkerPlanckResidual(flow, x, [0.0, 0.7, 2.0])
    self.assertLess(residual, 1e-6)

    self._AssertLogDensityDerivatives(flow, x, 0.7)
    self._AssertGaugeDerivative(flow, 0.7)
    self.assertIsInstance(flow.GetDriftField(), drifts.CoherentDrift)

  def testCoherentTransitionFlow(self):
    """Tests the coherent transition flow."""
    parameters = resources.OscillatorParameters()
    flow = flows.CoherentTransitionFlow(1.0, 2, 1.0, parameters)
    x = numpy.linspace(-3.0, 3.0, 13)

    residual = self._GetFokkerPlanckResidual(flow, x, [0.5, 2.0])
    self.assertLess(residual, 1e-6)

    drift_field = flow.GetDriftField()
    self.assertIsInstance(drift_field, drifts.SwitchedCoherentDrift)
    numpy.testing.assert_allclose(
        drift_field.GetVelocity(x, 0.5), flow.GetDrift(x, 0.5), atol=1e-8)

    with self.assertRaises(errors.DomainError):
      flows.CoherentTransitionFlow(1.0, 1, 1.0, parameters)

  def testSqueezeFlow(self):
    """Tests the squeezing flow."""
    specification = resources.SqueezeSpecification(1.0, 2.0, 1.0, 1.0)
    flow = flows.SqueezeFlow(specification)
    x = numpy.linspace(-3.0, 3.0, 13)

    variance, _, _ = flow.evolution.GetVariance(-40.0)
    self.assertAlmostEqual(variance, 1.0, places=10)
    variance, _, _ = flow.evolution.GetVariance(40.0)
    self.assertAlmostEqual(variance, 4.0, places=10)

    residual = self._GetFokkerPlanckResidual(flow, x, [-1.0, 0.0, 1.0])
    self.assertLess(residual, 1e-6)

    drift_field = flow.GetDriftField()
    self.assertIsInstance(drift_field, drifts.LinearDrift)
    numpy.testing.assert_allclose(
        drift_field.GetVelocity(x, 0.3), flow.GetDrift(x, 0.3), rtol=1e-12)

    schedule = flow.GetSchedule(numpy.array([-1.0, 0.0, 1.0]))
    numpy.testing.assert_array_equal(schedule.linear_coefficient, 0.0)


if __name__ == '__main__':
  unittest.main()
