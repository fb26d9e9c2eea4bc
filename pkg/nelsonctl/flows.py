# -*- coding: utf-8 -*-
"""Density and drift pairs of controlled Nelson diffusions."""

import math

import numpy

from nelsonctl import controlling_potentials
from nelsonctl import drifts
from nelsonctl import errors
from nelsonctl import fokker_planck
from nelsonctl import resources
from nelsonctl import states
from nelsonctl import transition_kernels


class FlowPair(object):
  """Density rho(x, t) with forward drift v = dW/dx and gauge theta(t).

  Partial derivatives that a flow does not supply analytically are
  approximated with 4th-order central differences of step 1e-4 of the
  natural length and time scale.

  Attributes:
    length_scale (float): natural length scale.
    parameters (OscillatorParameters): oscillator parameters, sigma0
        adimensionalizes the density.
    time_scale (float): natural time scale.
  """

  def __init__(self, parameters, length_scale=None, time_scale=None):
    """Initializes a flow.

    Args:
      parameters (OscillatorParameters): oscillator parameters.
      length_scale (Optional[float]): natural length scale, where None is
          sigma0.
      time_scale (Optional[float]): natural time scale, where None is
          1 / omega.
    """
    super(FlowPair, self).__init__()
    self._gauge_shift = None
    self._gauge_shift_derivative = None
    self.length_scale = length_scale or parameters.sigma0
    self.parameters = parameters
    self.time_scale = time_scale or 1.0 / parameters.frequency

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    raise NotImplementedError()

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    first_derivative, _ = fokker_planck.GetCentralDifferences(
        self._GetCanonicalGauge, time, 1e-4 * self.time_scale)
    return first_derivative

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: density.
    """
    raise NotImplementedError()

  def GetDrift(self, x, time):
    """Evaluates the forward drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.
    """
    raise NotImplementedError()

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.CallableDrift(
        self.GetDrift, potential=self.GetDriftPotential,
        is_time_dependent=True, frequency=1.0 / self.time_scale,
        length_scale=self.length_scale)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    raise NotImplementedError()

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    first_derivative, _ = fokker_planck.GetCentralDifferences(
        lambda t: self.GetDriftPotential(x, t), time, 1e-4 * self.time_scale)
    return first_derivative

  def GetGauge(self, time):
    """Evaluates the gauge theta(t).

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    gauge = self._GetCanonicalGauge(time)
    if self._gauge_shift:
      gauge += self._gauge_shift(time)
    return gauge

  def GetGaugeDerivative(self, time):
    """Evaluates the time derivative of the gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    gauge_derivative = self._GetCanonicalGaugeDerivative(time)
    if self._gauge_shift_derivative:
      gauge_derivative += self._gauge_shift_derivative(time)
    return gauge_derivative

  def GetLogDensity(self, x, time):
    """Evaluates L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: logarithm of the adimensional density.
    """
    with numpy.errstate(divide='ignore'):
      return math.log(self.parameters.sigma0) + numpy.log(
          self.GetDensity(x, time))

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    first_derivative, second_derivative = fokker_planck.GetCentralDifferences(
        lambda position: self.GetLogDensity(position, time), x,
        1e-4 * self.length_scale)
    time_derivative, _ = fokker_planck.GetCentralDifferences(
        lambda t: self.GetLogDensity(x, t), time, 1e-4 * self.time_scale)
    return first_derivative, second_derivative, time_derivative

  def SetGaugeShift(self, shift, shift_derivative):
    """Adds a function of time to the gauge.

    Args:
      shift (callable): gauge shift d theta(t).
      shift_derivative (callable): time derivative of the gauge shift.
    """
    self._gauge_shift = shift
    self._gauge_shift_derivative = shift_derivative


class StationaryFlow(FlowPair):
  """Oscillator eigenstate with gauge theta = E_n t.

  Attributes:
    state (StationaryState): oscillator eigenstate.
  """

  def __init__(self, level, parameters):
    """Initializes a stationary flow.

    Args:
      level (int): level n.
      parameters (OscillatorParameters): oscillator parameters.

    Raises:
      DomainError: if the level is not supported.
    """
    super(StationaryFlow, self).__init__(parameters)
    self.state = states.CreateOscillatorEigenstate(level, parameters)

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    return self.state.energy * time

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    return self.state.energy

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: density.
    """
    return self.state.GetDensity(x)

  def GetDrift(self, x, time):
    """Evaluates the forward drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.
    """
    return self.state.GetDrift(x)

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.StationaryStateDrift(self.state)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    return self.state.GetDriftPotential(x)

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    return numpy.zeros(numpy.shape(x))

  def GetLogDensity(self, x, time):
    """Evaluates L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: logarithm of the adimensional density.
    """
    return math.log(self.parameters.sigma0) + self.state.GetLogDensity(x)

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    diffusion = self.parameters.diffusion
    first_derivative = self.state.GetDrift(x) / diffusion
    second_derivative = self.state.GetDriftDerivative(x) / diffusion
    return (first_derivative, second_derivative,
            numpy.zeros(numpy.shape(first_derivative)))


class OrnsteinUhlenbeckFlow(FlowPair):
  """Relaxation of a delta at x0 to the ground state under drift -omega x.

  The canonical gauge is theta = (hbar / 2) ln sinh(omega (t - t0)).
  """

  def __init__(self, initial_position, parameters, start_time=0.0):
    """Initializes an Ornstein-Uhlenbeck flow.

    Args:
      initial_position (float): initial position x0.
      parameters (OscillatorParameters): oscillator parameters.
      start_time (Optional[float]): initial time t0.
    """
    super(OrnsteinUhlenbeckFlow, self).__init__(parameters)
    self._kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
    self.initial_position = initial_position
    self.start_time = start_time

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    return 0.5 * self.parameters.hbar * math.log(math.sinh(
        self.parameters.frequency * (time - self.start_time)))

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    frequency = self.parameters.frequency
    return 0.5 * self.parameters.hbar * frequency / math.tanh(
        frequency * (time - self.start_time))

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time after the start time.

    Returns:
      numpy.ndarray: density.
    """
    return self._kernel.GetDensity(
        x, time, self.initial_position, start_time=self.start_time)

  def GetDrift(self, x, time):
    """Evaluates the forward drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.
    """
    return -self.parameters.frequency * numpy.asarray(x, dtype=numpy.float64)

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.LinearDrift(
        0.0, -self.parameters.frequency,
        length_scale=self.parameters.sigma0)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W = -omega x^2 / 2.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    return -0.5 * self.parameters.frequency * x * x

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    return numpy.zeros(numpy.shape(x))

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time after the start time.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    frequency = self.parameters.frequency
    mean, variance = self._kernel.GetMeanAndVariance(
        time, self.initial_position, start_time=self.start_time)
    mean_derivative = -frequency * mean
    variance_derivative = 2.0 * frequency * (
        self.parameters.sigma0_squared - variance)

    deviation = numpy.asarray(x, dtype=numpy.float64) - mean
    first_derivative = -deviation / variance
    second_derivative = numpy.full(deviation.shape, -1.0 / variance)
    time_derivative = (
        -0.5 * variance_derivative / variance +
        deviation * mean_derivative / variance +
        0.5 * deviation * deviation * variance_derivative /
        (variance * variance))
    return first_derivative, second_derivative, time_derivative


class ExcitedStateFlow(FlowPair):
  """Relaxation of a delta at x0 to the first excited state semiaxis law."""

  def __init__(self, initial_position, parameters, start_time=0.0):
    """Initializes a first excited state flow.

    Args:
      initial_position (float): initial position x0, not 0.
      parameters (OscillatorParameters): oscillator parameters.
      start_time (Optional[float]): initial time t0.

    Raises:
      DomainError: if the initial position is the node.
    """
    if initial_position == 0.0:
      raise errors.DomainError('Unsupported initial position at the node: 0')

    super(ExcitedStateFlow, self).__init__(parameters)
    self._kernel = transition_kernels.ExcitedStateKernel(parameters)
    self._state = states.CreateOscillatorEigenstate(1, parameters)
    self.initial_position = initial_position
    self.start_time = start_time

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    frequency = self.parameters.frequency
    hbar = self.parameters.hbar
    exponent = 2.0 * frequency * (time - self.start_time)
    return (hbar * math.log(math.expm1(exponent)) +
            hbar * self.initial_position ** 2 / (
                -2.0 * self.parameters.sigma0_squared * math.expm1(
                    -exponent)) -
            0.5 * hbar * frequency * time)

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    mean, variance = self._kernel.GetMeanAndVariance(
        time, self.initial_position, start_time=self.start_time)
    sigma0_squared = self.parameters.sigma0_squared
    return 0.5 * self.parameters.hbar * self.parameters.frequency * (
        4.0 * sigma0_squared / variance -
        2.0 * sigma0_squared * mean * mean / (variance * variance) - 1.0)

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time after the start time.

    Returns:
      numpy.ndarray: density, 0 on the opposite semiaxis.
    """
    return self._kernel.GetDensity(
        x, time, self.initial_position, start_time=self.start_time)

  def GetDrift(self, x, time):
    """Evaluates the forward drift of the first excited state.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.

    Raises:
      SingularityError: if a position lies at the node.
    """
    return self._state.GetDrift(x)

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.StationaryStateDrift(self._state)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W = D ln(sigma0 rho1).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    return self._state.GetDriftPotential(x)

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    return numpy.zeros(numpy.shape(x))

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions on the semiaxis of x0.
      time (float): time after the start time.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    frequency = self.parameters.frequency
    mean, variance = self._kernel.GetMeanAndVariance(
        time, self.initial_position, start_time=self.start_time)
    variance_derivative = 2.0 * frequency * (
        self.parameters.sigma0_squared - variance)

    x = numpy.asarray(x, dtype=numpy.float64)
    u = x * mean / variance
    coth_product = controlling_potentials.GetCothProduct(u)

    ratio = mean / variance
    first_derivative = 1.0 / x - x / variance + ratio * coth_product / u
    second_derivative = (
        -1.0 / (x * x) - 1.0 / variance -
        ratio * ratio / numpy.sinh(u) ** 2)
    time_derivative = (
        frequency + frequency * mean * mean / variance +
        (x * x + mean * mean) * variance_derivative /
        (2.0 * variance * variance) -
        coth_product * (frequency + variance_derivative / variance) -
        0.5 * variance_derivative / variance)
    return first_derivative, second_derivative, time_derivative


class DecayFlow(FlowPair):
  """Decay of rho1 into rho0 under the ground state drift.

  The density is rho0(x) Q(x, t) with Q = beta^2 + gamma^2 x^2 / sigma0^2
  and the canonical gauge theta = hbar omega t / 2.
  """

  def __init__(self, parameters):
    """Initializes a decay flow.

    Args:
      parameters (OscillatorParameters): oscillator parameters.
    """
    super(DecayFlow, self).__init__(parameters)
    self._ground_state = states.CreateOscillatorEigenstate(0, parameters)

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    return 0.5 * self.parameters.hbar * self.parameters.frequency * time

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    return 0.5 * self.parameters.hbar * self.parameters.frequency

  def _GetMixtureFactor(self, x, time):
    """Evaluates Q = beta^2 + gamma^2 x^2 / sigma0^2.

    Args:
      x (numpy.ndarray): positions.
      time (float): time.

    Returns:
      tuple[numpy.ndarray, float]: Q and gamma^2.
    """
    weights = transition_kernels.GetMixtureWeights(
        time, self.parameters.frequency)
    factor = weights.beta_squared + weights.gamma_squared * x * x / (
        self.parameters.sigma0_squared)
    return factor, float(weights.gamma_squared)

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time, not negative.

    Returns:
      numpy.ndarray: density.
    """
    return transition_kernels.GetDecayMixture(x, time, self.parameters)

  def GetDrift(self, x, time):
    """Evaluates the forward drift -omega x.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.
    """
    return -self.parameters.frequency * numpy.asarray(x, dtype=numpy.float64)

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.LinearDrift(
        0.0, -self.parameters.frequency,
        length_scale=self.parameters.sigma0)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W = D ln(sigma0 rho0).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    return self._ground_state.GetDriftPotential(x)

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    return numpy.zeros(numpy.shape(x))

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time, not negative.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    sigma0_squared = self.parameters.sigma0_squared
    factor, gamma_squared = self._GetMixtureFactor(x, time)

    first_derivative = -x / sigma0_squared + 2.0 * gamma_squared * x / (
        sigma0_squared * factor)
    second_derivative = (
        -1.0 / sigma0_squared + 2.0 * gamma_squared / (sigma0_squared * factor) -
        4.0 * gamma_squared * gamma_squared * x * x / (
            sigma0_squared * sigma0_squared * factor * factor))
    time_derivative = 2.0 * self.parameters.frequency * gamma_squared * (
        1.0 - x * x / sigma0_squared) / factor
    return first_derivative, second_derivative, time_derivative


class GaussianFlow(FlowPair):
  """Gaussian N(mu(t), nu(t)) with linear drift A(t) + B(t) x.

  The drift B = (nu' - 2D) / 2 nu, A = mu' - B mu keeps the Gaussian a
  solution of the Fokker-Planck equation.

  Attributes:
    evolution (GaussianEvolution): Gaussian evolution.
  """

  def __init__(self, evolution, parameters, time_scale=None):
    """Initializes a Gaussian flow.

    Args:
      evolution (GaussianEvolution): Gaussian evolution.
      parameters (OscillatorParameters): oscillator parameters.
      time_scale (Optional[float]): natural time scale, where None uses the
          time scale of the evolution.
    """
    super(GaussianFlow, self).__init__(
        parameters, time_scale=time_scale or evolution.time_scale)
    self.evolution = evolution

  def _GetCanonicalGauge(self, time):
    """Evaluates the canonical gauge of the flow.

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    return self.evolution.GetGauge(time)

  def _GetCanonicalGaugeDerivative(self, time):
    """Evaluates the time derivative of the canonical gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    return self.evolution.GetGaugeDerivative(time)

  def GetDriftCoefficients(self, time):
    """Determines the drift coefficients and their time derivatives.

    Args:
      time (float): time.

    Returns:
      tuple[float, float, float, float]: A, B, dA/dt and dB/dt.
    """
    diffusion = self.parameters.diffusion
    mean, mean_derivative, mean_second_derivative = self.evolution.GetMean(
        time)
    variance, variance_derivative, variance_second_derivative = (
        self.evolution.GetVariance(time))

    slope = (variance_derivative - 2.0 * diffusion) / (2.0 * variance)
    slope_derivative = (
        0.5 * variance_second_derivative / variance -
        (variance_derivative - 2.0 * diffusion) * variance_derivative /
        (2.0 * variance * variance))
    intercept = mean_derivative - slope * mean
    intercept_derivative = (
        mean_second_derivative - slope_derivative * mean -
        slope * mean_derivative)
    return intercept, slope, intercept_derivative, slope_derivative

  def GetDensity(self, x, time):
    """Evaluates the density.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: density.
    """
    mean, _, _ = self.evolution.GetMean(time)
    variance, _, _ = self.evolution.GetVariance(time)
    return states.GaussianPacket(mean, variance, self.parameters).GetDensity(x)

  def GetDrift(self, x, time):
    """Evaluates the forward drift A + B x.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift.
    """
    intercept, slope, _, _ = self.GetDriftCoefficients(time)
    return intercept + slope * numpy.asarray(x, dtype=numpy.float64)

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    def _GetIntercept(time):
      intercept, _, _, _ = self.GetDriftCoefficients(time)
      return intercept

    def _GetSlope(time):
      _, slope, _, _ = self.GetDriftCoefficients(time)
      return slope

    return drifts.LinearDrift(
        _GetIntercept, _GetSlope, frequency=1.0 / self.time_scale,
        length_scale=self.length_scale)

  def GetDriftPotential(self, x, time):
    """Evaluates the drift potential W = A x + B x^2 / 2.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    intercept, slope, _, _ = self.GetDriftCoefficients(time)
    x = numpy.asarray(x, dtype=numpy.float64)
    return intercept * x + 0.5 * slope * x * x

  def GetDriftPotentialTimeDerivative(self, x, time):
    """Evaluates the time derivative of the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      numpy.ndarray: drift potential time derivative.
    """
    _, _, intercept_derivative, slope_derivative = self.GetDriftCoefficients(
        time)
    x = numpy.asarray(x, dtype=numpy.float64)
    return intercept_derivative * x + 0.5 * slope_derivative * x * x

  def GetLogDensityDerivatives(self, x, time):
    """Evaluates the partial derivatives of L = ln(sigma0 rho).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: dL/dx, d2L/dx2
          and dL/dt.
    """
    mean, mean_derivative, _ = self.evolution.GetMean(time)
    variance, variance_derivative, _ = self.evolution.GetVariance(time)

    deviation = numpy.asarray(x, dtype=numpy.float64) - mean
    first_derivative = -deviation / variance
    second_derivative = numpy.full(deviation.shape, -1.0 / variance)
    time_derivative = (
        -0.5 * variance_derivative / variance +
        deviation * mean_derivative / variance +
        0.5 * deviation * deviation * variance_derivative /
        (variance * variance))
    return first_derivative, second_derivative, time_derivative

  def GetSchedule(self, times):
    """Determines the control schedule of the flow.

    Args:
      times (numpy.ndarray): times.

    Returns:
      ControlSchedule: control schedule.
    """
    return controlling_potentials.GetGaussianSchedule(self.evolution, times)


class CoherentStateFlow(GaussianFlow):
  """Coherent packet oscillating with amplitude a in the oscillator."""

  def __init__(self, amplitude, parameters):
    """Initializes a coherent packet flow.

    Args:
      amplitude (float): initial displacement a.
      parameters (OscillatorParameters): oscillator parameters.
    """
    evolution = controlling_potentials.CreateCoherentEvolution(
        amplitude, parameters)
    super(CoherentStateFlow, self).__init__(evolution, parameters)
    self.amplitude = amplitude

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.CoherentDrift(self.amplitude, self.parameters)


class CoherentTransitionFlow(GaussianFlow):
  """Coherent packet brought to rest by a smooth switch, for t >= 0."""

  def __init__(self, amplitude, order, time_scale, parameters):
    """Initializes a coherent transition flow.

    Args:
      amplitude (float): initial displacement a.
      order (int): switch exponent N of at least 2.
      time_scale (float): switch time scale tau.
      parameters (OscillatorParameters): oscillator parameters.

    Raises:
      DomainError: if the switch is not supported.
    """
    self.switch = controlling_potentials.SwitchFunction(order, time_scale)
    evolution = controlling_potentials.CreateCoherentTransitionEvolution(
        amplitude, self.switch, parameters)
    super(CoherentTransitionFlow, self).__init__(evolution, parameters)
    self.amplitude = amplitude

  def GetDriftField(self):
    """Retrieves the drift as a drift field.

    Returns:
      DriftField: drift field.
    """
    return drifts.SwitchedCoherentDrift(
        self.amplitude, self.parameters, self.switch)


class SqueezeFlow(GaussianFlow):
  """Centred Gaussian squeezed from width sigma0 to sigma1."""

  def __init__(self, specification):
    """Initializes a squeezing flow.

    Args:
      specification (SqueezeSpecification): squeezing specification.
    """
    parameters = resources.OscillatorParameters.FromDiffusion(
        specification.diffusion, specification.sigma0,
        mass=specification.mass)
    evolution = controlling_potentials.CreateSqueezeEvolution(specification)
    super(SqueezeFlow, self).__init__(evolution, parameters)
    self.specification = specification

  def GetSchedule(self, times):
    """Determines the closed-form control schedule of the flow.

    Args:
      times (numpy.ndarray): times.

    Returns:
      ControlSchedule: control schedule.
    """
    return controlling_potentials.GetSqueezeSchedule(
        self.specification, times)
