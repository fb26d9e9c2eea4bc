#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the phases and controlling potentials."""

import math
import unittest

import numpy

from nelsonctl import controlling_potentials
from nelsonctl import errors
from nelsonctl import flows
from nelsonctl import resources

from tests import test_lib


class SwitchFunctionTest(test_lib.BaseTestCase):
  """Tests for the switch function."""

  def testInitialize(self):
    """Tests the __init__ function."""
    switch = controlling_potentials.SwitchFunction(2, 1.0)
    self.assertEqual(switch.order, 2)
    self.assertAlmostEqual(switch.switch_rate, math.log(2.0))

    with self.assertRaises(errors.DomainError):
      controlling_potentials.SwitchFunction(1, 1.0)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.SwitchFunction(2.5, 1.0)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.SwitchFunction(2, 0.0)

  def testGetValue(self):
    """Tests the GetValue function."""
    switch = controlling_potentials.SwitchFunction(2, 1.0)
    self.assertEqual(float(switch.GetValue(0.0)), 1.0)
    self.assertLess(float(switch.GetValue(50.0)), 1e-9)
    self.assertAlmostEqual(float(switch.GetValue(1.0)), 0.75)

    switch = controlling_potentials.SwitchFunction(3, 2.0)
    self.assertAlmostEqual(
        float(switch.GetValue(2.0)), 1.0 - (2.0 / 3.0) ** 3)

    values = switch.GetValue(numpy.linspace(0.0, 10.0, 11))
    self.assertTrue(numpy.all(numpy.diff(values) < 0.0))

  def testGetDerivative(self):
    """Tests the GetDerivative function."""
    switch = controlling_potentials.SwitchFunction(4, 1.5)
    self.assertEqual(float(switch.GetDerivative(0.0)), 0.0)

    times = numpy.array([0.3, 1.0, 4.0])
    step = 1e-5
    expected_derivative = (
        switch.GetValue(times + step) - switch.GetValue(times - step)) / (
            2.0 * step)
    numpy.testing.assert_allclose(
        switch.GetDerivative(times), expected_derivative, rtol=1e-7)

  def testGetCoefficients(self):
    """Tests the GetCoefficients function."""
    switch = controlling_potentials.SwitchFunction(2, 1.0)
    coefficients, rates = switch.GetCoefficients()
    numpy.testing.assert_allclose(coefficients, [2.0, -1.0])
    numpy.testing.assert_allclose(rates, [math.log(2.0), 2.0 * math.log(2.0)])

    switch = controlling_potentials.SwitchFunction(5, 0.7)
    coefficients, rates = switch.GetCoefficients()
    for time in (0.0, 0.4, 3.0):
      self.assertAlmostEqual(
          float(numpy.sum(coefficients * numpy.exp(-rates * time))),
          float(switch.GetValue(time)), places=12)


class FunctionsTest(test_lib.BaseTestCase):
  """Tests for the controlling potential functions."""

  def testGetCothProduct(self):
    """Tests the GetCothProduct function."""
    values = controlling_potentials.GetCothProduct([0.0, 1e-6, 1.0, -2.0])
    self.assertEqual(values[0], 1.0)
    self.assertAlmostEqual(values[1], 1.0)
    self.assertAlmostEqual(values[2], 1.0 / math.tanh(1.0))
    self.assertAlmostEqual(values[3], 2.0 / math.tanh(2.0))

  def testGetTransitionCoefficients(self):
    """Tests the GetTransitionCoefficients function."""
    for frequency in (1.0, 2.5):
      switch = controlling_potentials.SwitchFunction(3, 1.0)
      _, weights = controlling_potentials.GetTransitionCoefficients(
          switch, frequency, 0.0)
      tilts, _ = controlling_potentials.GetTransitionCoefficients(
          switch, frequency, math.pi / (4.0 * frequency))

      numpy.testing.assert_allclose(
          weights, math.sqrt(2.0) * tilts, rtol=1e-12)

  def testGetCoherentTransitionMean(self):
    """Tests the GetCoherentTransitionMean function."""
    switch = controlling_potentials.SwitchFunction(2, 1.0)

    mean, mean_derivative, _ = (
        controlling_potentials.GetCoherentTransitionMean(
            0.0, 1.5, switch, 1.0))
    self.assertAlmostEqual(mean, 1.5, places=12)
    self.assertAlmostEqual(mean_derivative, 0.0, places=12)

    step = 1e-5
    for time in (0.5, 1.0, 3.0):
      mean, mean_derivative, mean_second_derivative = (
          controlling_potentials.GetCoherentTransitionMean(
              time, 1.5, switch, 1.0))
      forward_mean, forward_derivative, _ = (
          controlling_potentials.GetCoherentTransitionMean(
              time + step, 1.5, switch, 1.0))
      backward_mean, backward_derivative, _ = (
          controlling_potentials.GetCoherentTransitionMean(
              time - step, 1.5, switch, 1.0))

      self.assertAlmostEqual(
          mean_derivative, (forward_mean - backward_mean) / (2.0 * step),
          places=8)
      self.assertAlmostEqual(
          mean_second_derivative,
          (forward_derivative - backward_derivative) / (2.0 * step),
          places=7)

    mean, _, _ = controlling_potentials.GetCoherentTransitionMean(
        60.0, 1.5, switch, 1.0)
    self.assertLess(abs(mean), 1e-9)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetCoherentTransitionMean(-1.0, 1.5, switch, 1.0)

  def testGetCoherentTransitionPotential(self):
    """Tests the GetCoherentTransitionPotential function."""
    parameters = resources.OscillatorParameters(mass=2.0, frequency=1.5)
    switch = controlling_potentials.SwitchFunction(2, 1.0)
    x = numpy.array([-2.0, -0.5, 0.0, 1.0, 2.5])

    potential = controlling_potentials.GetCoherentTransitionPotential(
        x, 0.0, 1.0, switch, parameters)
    numpy.testing.assert_allclose(
        potential, 0.5 * 2.0 * 1.5 * 1.5 * x * x, atol=1e-10)

    # The linear coefficient is mu'' + omega^2 mu of the switched mean.
    for time in (0.5, 1.0, 4.0):
      mean, _, mean_second_derivative = (
          controlling_potentials.GetCoherentTransitionMean(
              time, 1.0, switch, 1.5))
      potential = controlling_potentials.GetCoherentTransitionPotential(
          x, time, 1.0, switch, parameters)
      expected_potential = 0.5 * 2.0 * 1.5 * 1.5 * x * x - 2.0 * (
          mean_second_derivative + 1.5 * 1.5 * mean) * x
      numpy.testing.assert_allclose(potential, expected_potential, atol=1e-9)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetCoherentTransitionPotential(
          x, -0.5, 1.0, switch, parameters)

  def testGetSqueezeSchedule(self):
    """Tests the GetSqueezeSchedule function."""
    specification = resources.SqueezeSpecification(1.0, 2.0, 1.0, 1.0)

    schedule = controlling_potentials.GetSqueezeSchedule(
        specification, [0.0])
    self.assertAlmostEqual(schedule.phase_curvature[0], 1.0 / 6.0, places=12)
    self.assertAlmostEqual(
        schedule.frequency_squared[0], 16.0 / 81.0, places=12)
    self.assertEqual(schedule.phase_offset[0], 0.0)
    self.assertEqual(schedule.offset[0], 0.0)
    self.assertEqual(schedule.linear_coefficient[0], 0.0)
    self.assertEqual(schedule.phase_tilt[0], 0.0)

    schedule = controlling_potentials.GetSqueezeSchedule(
        specification, [-40.0, 40.0])
    numpy.testing.assert_allclose(
        schedule.frequency_squared, [1.0, 1.0 / 16.0], rtol=1e-9)
    numpy.testing.assert_allclose(schedule.phase_curvature, 0.0, atol=1e-12)
    numpy.testing.assert_allclose(schedule.offset, 0.0, atol=1e-12)

  def testGetSqueezeScheduleGeneric(self):
    """Tests the closed-form squeezing schedule against the Gaussian one."""
    specification = resources.SqueezeSpecification(1.5, 0.5, 2.0, 0.8)
    times = numpy.linspace(-6.0, 6.0, 13)

    schedule = controlling_potentials.GetSqueezeSchedule(
        specification, times)
    evolution = controlling_potentials.CreateSqueezeEvolution(specification)
    generic_schedule = controlling_potentials.GetGaussianSchedule(
        evolution, times)

    for name in (
        'drift_slope', 'frequency_squared', 'offset', 'phase_curvature',
        'phase_offset'):
      numpy.testing.assert_allclose(
          getattr(schedule, name), getattr(generic_schedule, name),
          rtol=1e-9, atol=1e-12, err_msg=name)

  def testGetDecayPotential(self):
    """Tests the GetDecayPotential function."""
    parameters = resources.OscillatorParameters()
    x = numpy.array([-2.0, -0.5, 0.5, 1.0])

    # U(X; 0) = 1 away from the node at the start of the decay.
    potential = controlling_potentials.GetDecayPotential(x, 0.0, parameters)
    numpy.testing.assert_allclose(potential, 0.5 * x * x - 2.0, atol=1e-12)

    potential = controlling_potentials.GetDecayPotential(x, 20.0, parameters)
    numpy.testing.assert_allclose(potential, 0.5 * x * x, atol=1e-12)

    with self.assertRaises(errors.SingularityError):
      controlling_potentials.GetDecayPotential(0.0, 0.0, parameters)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetDecayPotential(x, -1.0, parameters)

  def testGetExcitedRelaxationPotentialErrors(self):
    """Tests the GetExcitedRelaxationPotential function errors."""
    parameters = resources.OscillatorParameters()

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetExcitedRelaxationPotential(
          1.0, 1.0, 0.0, parameters)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetExcitedRelaxationPotential(
          1.0, 0.0, 1.0, parameters)

    with self.assertRaises(errors.SingularityError):
      controlling_potentials.GetExcitedRelaxationPotential(
          -1.0, 1.0, 1.0, parameters)


class GaussianEvolutionTest(test_lib.BaseTestCase):
  """Tests for the Gaussian evolution."""

  def testGetVariance(self):
    """Tests the GetVariance function."""
    evolution = controlling_potentials.GaussianEvolution(
        0.5, 1.0, 1.0, lambda time: 1.0 + time * time)

    variance, first_derivative, second_derivative = evolution.GetVariance(2.0)
    self.assertEqual(variance, 5.0)
    self.assertAlmostEqual(first_derivative, 4.0, places=8)
    self.assertAlmostEqual(second_derivative, 2.0, places=5)
    self.assertEqual(evolution.GetMean(2.0), (0.0, 0.0, 0.0))
    self.assertFalse(evolution.has_mean)

    evolution = controlling_potentials.GaussianEvolution(
        0.5, 1.0, 1.0, lambda time: -1.0)
    with self.assertRaises(errors.DomainError):
      evolution.GetVariance(0.0)

  def testGetGaugeDerivative(self):
    """Tests the GetGaugeDerivative function."""
    evolution = controlling_potentials.GaussianEvolution(
        0.5, 2.0, 1.0, lambda time: 1.0 + time * time,
        variance_derivatives=lambda time: (2.0 * time, 2.0))

    step = 1e-5
    expected_derivative = (
        evolution.GetGauge(1.0 + step) - evolution.GetGauge(1.0 - step)) / (
            2.0 * step)
    self.assertAlmostEqual(
        evolution.GetGaugeDerivative(1.0), expected_derivative, places=8)

  def testGetGaussianSchedule(self):
    """Tests the GetGaussianSchedule function on a coherent packet."""
    parameters = resources.OscillatorParameters(frequency=2.0)
    evolution = controlling_potentials.CreateCoherentEvolution(
        1.0, parameters)

    schedule = controlling_potentials.GetGaussianSchedule(
        evolution, numpy.linspace(0.0, 3.0, 7))
    numpy.testing.assert_allclose(schedule.frequency_squared, 4.0)
    numpy.testing.assert_allclose(schedule.drift_slope, -2.0)
    numpy.testing.assert_allclose(
        schedule.linear_coefficient, 0.0, atol=1e-12)
    numpy.testing.assert_allclose(schedule.phase_curvature, 0.0)


class SynthesisTest(test_lib.BaseTestCase):
  """Tests for the phase and potential synthesis."""

  _POSITIONS = numpy.array([-2.0, -0.3, 0.4, 1.5])

  def _AssertDifferenceIsConstant(self, values, other_values, tolerance):
    """Asserts that two functions of position differ by a constant.

    Args:
      values (numpy.ndarray): values.
      other_values (numpy.ndarray): other values.
      tolerance (float): absolute tolerance.
    """
    differences = values - other_values
    numpy.testing.assert_allclose(
        differences, numpy.full(differences.shape, differences[0]),
        atol=tolerance)

  def testStationaryFlow(self):
    """Tests the synthesis of the oscillator eigenstates."""
    parameters = resources.OscillatorParameters(mass=2.0, frequency=1.5)
    x = self._POSITIONS

    for level in (0, 1, 2, 5):
      flow = flows.StationaryFlow(level, parameters)

      potential = controlling_potentials.SynthesizePotential(flow, x, 0.7)
      numpy.testing.assert_allclose(
          potential, 0.5 * 2.0 * 1.5 * 1.5 * x * x, atol=1e-8)

      phase = controlling_potentials.SynthesizePhase(flow, x, 0.7)
      numpy.testing.assert_allclose(
          phase, -flow.state.energy * 0.7, atol=1e-10)

    flow = flows.StationaryFlow(1, parameters)
    with self.assertRaises(errors.SingularityError):
      controlling_potentials.SynthesizePotential(flow, 0.0, 0.7)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.SynthesizePhase(flow, 0.0, 0.7)

  def testCoherentTransitionFlow(self):
    """Tests the synthesis against the closed-form transition potential."""
    parameters = resources.OscillatorParameters()
    flow = flows.CoherentTransitionFlow(1.0, 2, 1.0, parameters)

    for time in (0.5, 2.0):
      potential = controlling_potentials.SynthesizePotential(
          flow, self._POSITIONS, time)
      closed_form_potential = (
          controlling_potentials.GetCoherentTransitionPotential(
              self._POSITIONS, time, 1.0, flow.switch, parameters))
      self._AssertDifferenceIsConstant(
          potential, closed_form_potential, 1e-6)

  def testDecayFlow(self):
    """Tests the synthesis against the closed-form decay potential."""
    parameters = resources.OscillatorParameters()
    flow = flows.DecayFlow(parameters)

    for time in (0.25, 1.0):
      potential = controlling_potentials.SynthesizePotential(
          flow, self._POSITIONS, time)
      closed_form_potential = controlling_potentials.GetDecayPotential(
          self._POSITIONS, time, parameters)
      self._AssertDifferenceIsConstant(
          potential, closed_form_potential, 1e-6)

  def testOrnsteinUhlenbeckFlow(self):
    """Tests the synthesis against the ground state relaxation potential."""
    parameters = resources.OscillatorParameters()
    flow = flows.OrnsteinUhlenbeckFlow(1.0, parameters)

    for time in (0.5, 1.5):
      potential = controlling_potentials.SynthesizePotential(
          flow, self._POSITIONS, time)
      closed_form_potential = (
          controlling_potentials.GetOrnsteinUhlenbeckRelaxationPotential(
              self._POSITIONS, time, 1.0, parameters))
      self._AssertDifferenceIsConstant(
          potential, closed_form_potential, 1e-6)

  def testExcitedStateFlow(self):
    """Tests the synthesis against the excited relaxation potential."""
    parameters = resources.OscillatorParameters()
    flow = flows.ExcitedStateFlow(1.0, parameters)
    x = numpy.array([0.2, 0.7, 1.3, 2.0])

    for time in (0.5, 1.5):
      potential = controlling_potentials.SynthesizePotential(flow, x, time)
      closed_form_potential = (
          controlling_potentials.GetExcitedRelaxationPotential(
              x, time, 1.0, parameters))
      self._AssertDifferenceIsConstant(
          potential, closed_form_potential, 1e-5)

  def testGetFlowMadelungResidual(self):
    """Tests the GetFlowMadelungResidual function."""
    parameters = resources.OscillatorParameters()
    flow = flows.CoherentStateFlow(1.0, parameters)

    residual = controlling_potentials.GetFlowMadelungResidual(
        flow, self._POSITIONS, [0.0, 0.5, 2.0])
    self.assertLess(residual, 1e-5)

    specification = resources.SqueezeSpecification(1.0, 2.0, 1.0, 1.0)
    flow = flows.SqueezeFlow(specification)
    residual = controlling_potentials.GetFlowMadelungResidual(
        flow, self._POSITIONS, [-2.0, 0.0, 2.0])
    self.assertLess(residual, 1e-5)

  def testGaugeShift(self):
    """Tests that a gauge shift moves the phase and potential together."""
    parameters = resources.OscillatorParameters()
    x = self._POSITIONS

    def _GetShift(time):
      return math.sin(3.0 * time)

    def _GetShiftDerivative(time):
      return 3.0 * math.cos(3.0 * time)

    for create_flow in (
        lambda: flows.StationaryFlow(1, parameters),
        lambda: flows.CoherentTransitionFlow(1.0, 2, 1.0, parameters)):
      flow = create_flow()
      shifted_flow = create_flow()
      shifted_flow.SetGaugeShift(_GetShift, _GetShiftDerivative)

      for time in (0.5, 2.0):
        numpy.testing.assert_allclose(
            shifted_flow.GetDrift(x, time), flow.GetDrift(x, time))

        phase = controlling_potentials.SynthesizePhase(flow, x, time)
        shifted_phase = controlling_potentials.SynthesizePhase(
            shifted_flow, x, time)
        numpy.testing.assert_allclose(
            shifted_phase - phase, -_GetShift(time), atol=1e-10)

        potential = controlling_potentials.SynthesizePotential(flow, x, time)
        shifted_potential = controlling_potentials.SynthesizePotential(
            shifted_flow, x, time)
        numpy.testing.assert_allclose(
            shifted_potential - potential, _GetShiftDerivative(time),
            atol=1e-10)

      residual = controlling_potentials.GetFlowMadelungResidual(
          flow, x, [0.5, 2.0])
      shifted_residual = controlling_potentials.GetFlowMadelungResidual(
          shifted_flow, x, [0.5, 2.0])
      self.assertLess(abs(shifted_residual - residual), 1e-6)

  def testGetMadelungResidual(self):
    """Tests that a wrong potential leaves a residual."""
    parameters = resources.OscillatorParameters()
    flow = flows.CoherentStateFlow(1.0, parameters)

    residual = controlling_potentials.GetMadelungResidual(
        lambda x, t: numpy.sqrt(flow.GetDensity(x, t)),
        lambda x, t: controlling_potentials.SynthesizePhase(flow, x, t),
        lambda x, t: controlling_potentials.SynthesizePotential(
            flow, x, t) + x,
        parameters, self._POSITIONS, [0.5])
    self.assertGreater(residual, 1.0)

    with self.assertRaises(errors.DomainError):
      controlling_potentials.GetMadelungResidual(
          lambda x, t: numpy.zeros(x.shape), lambda x, t: x,
          lambda x, t: x, parameters, self._POSITIONS, [0.5])


if __name__ == '__main__':
  unittest.main()
