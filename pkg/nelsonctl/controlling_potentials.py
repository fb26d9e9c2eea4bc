# -*- coding: utf-8 -*-
"""Phases and controlling potentials of Nelson diffusion flows.

A flow is a density rho with forward drift v = dW/dx. The phase and the
controlling potential that realize it are

  S = m W - (hbar / 2) ln rho~ - theta(t)
  V = m D^2 L'' + m D (dL/dt + v L') - m v^2 / 2 - m dW/dt + theta'(t)

with L = ln rho~, rho~ = sigma0 rho and D = hbar / 2m.
"""

import math

import numpy

from scipy import integrate
from scipy import special

from nelsonctl import errors
from nelsonctl import fokker_planck
from nelsonctl import resources


def GetCothProduct(u):
  """Evaluates T(u) = u / tanh(u) with T(0) = 1.

  Args:
    u (numpy.ndarray|float): arguments.

  Returns:
    numpy.ndarray: T(u).
  """
  u = numpy.asarray(u, dtype=numpy.float64)
  values = numpy.empty(u.shape)

  is_small = numpy.abs(u) < 1e-4
  values[is_small] = 1.0 + u[is_small] * u[is_small] / 3.0
  values[~is_small] = u[~is_small] / numpy.tanh(u[~is_small])
  return values


class SwitchFunction(object):
  """Smooth switch F(t) = 1 - (1 - e^{-Wt})^N with W = ln(N) / tau.

  F(0) = 1, F'(0) = 0 and F decays to 0 for large t.

  Attributes:
    order (int): exponent N.
    switch_rate (float): rate W.
    time_scale (float): transition time tau, where F(tau) = 1 - (1 - 1/N)^N.
  """

  def __init__(self, order, time_scale):
    """Initializes a switch function.

    Args:
      order (int): exponent N of at least 2.
      time_scale (float): transition time tau.

    Raises:
      DomainError: if the order or time scale is not supported.
    """
    if order < 2 or order != int(order):
      raise errors.DomainError(f'Unsupported switch order: {order!s}')

    if not time_scale > 0.0:
      raise errors.DomainError(f'Unsupported time scale: {time_scale!s}')

    super(SwitchFunction, self).__init__()
    self.order = int(order)
    self.switch_rate = math.log(order) / time_scale
    self.time_scale = time_scale

  def GetCoefficients(self):
    """Retrieves the exponential expansion F(t) = sum_k c_k e^{-w_k t}.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray]: coefficients
          c_k = (-1)^{k+1} C(N, k) and rates w_k = k W for k = 1..N.
    """
    indexes = numpy.arange(1, self.order + 1)
    coefficients = special.comb(self.order, indexes, exact=False) * numpy.where(
        indexes % 2 == 1, 1.0, -1.0)
    return coefficients, indexes * self.switch_rate

  def GetDerivative(self, time):
    """Evaluates F'(t).

    Args:
      time (numpy.ndarray|float): times, not negative.

    Returns:
      numpy.ndarray: derivative.
    """
    decay = numpy.exp(-self.switch_rate * numpy.asarray(time, dtype=float))
    return -self.order * self.switch_rate * decay * (1.0 - decay) ** (
        self.order - 1)

  def GetValue(self, time):
    """Evaluates F(t).

    Args:
      time (numpy.ndarray|float): times, not negative.

    Returns:
      numpy.ndarray: switch value.
    """
    decay = numpy.exp(-self.switch_rate * numpy.asarray(time, dtype=float))
    return -numpy.expm1(self.order * numpy.log1p(-decay))


def GetTransitionCoefficients(switch, frequency, time):
  """Determines the coefficients of the coherent transition potential.

  Args:
    switch (SwitchFunction): switch function.
    frequency (float): oscillator frequency omega.
    time (float): time.

  Returns:
    tuple[numpy.ndarray, numpy.ndarray]: U_k(t) and W_k per exponential of
        the switch expansion, where W_k = sqrt(2) U_k(pi / 4 omega).
  """
  _, rates = switch.GetCoefficients()
  denominators = (rates - frequency) ** 2 + frequency * frequency

  phase = frequency * time
  tilts = math.sin(phase) + (
      2.0 * frequency * frequency * math.sin(phase) -
      rates * rates * math.cos(phase)) / denominators
  weights = (4.0 * frequency * frequency -
             2.0 * frequency * rates) / denominators
  return tilts, weights


def GetCoherentTransitionMean(time, amplitude, switch, frequency):
  """Determines the mean of a coherent packet switched off by F(t).

  The mean solves mu' = A(t) - omega mu with
  A(t) = a omega (cos wt - sin wt) F(t) and mu(0) = a.

  Args:
    time (float): time, not negative.
    amplitude (float): initial displacement a.
    switch (SwitchFunction): switch function.
    frequency (float): oscillator frequency omega.

  Returns:
    tuple[float, float, float]: mean mu and its first and second time
        derivative.

  Raises:
    DomainError: if the time is negative.
  """
  if time < 0.0:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  coefficients, rates = switch.GetCoefficients()
  exponents = 1j * frequency - rates
  particular_weights = amplitude * frequency * coefficients * (1.0 + 1.0j) / (
      exponents + frequency)

  particular = numpy.sum(particular_weights * numpy.exp(exponents * time)).real
  homogeneous = (amplitude - numpy.sum(particular_weights).real) * math.exp(
      -frequency * time)
  mean = particular + homogeneous

  phase = frequency * time
  switch_value = float(switch.GetValue(time))
  switch_derivative = float(switch.GetDerivative(time))

  intercept = amplitude * frequency * (
      math.cos(phase) - math.sin(phase)) * switch_value
  intercept_derivative = amplitude * frequency * (
      -frequency * (math.sin(phase) + math.cos(phase)) * switch_value +
      (math.cos(phase) - math.sin(phase)) * switch_derivative)

  mean_derivative = intercept - frequency * mean
  mean_second_derivative = intercept_derivative - frequency * mean_derivative
  return mean, mean_derivative, mean_second_derivative


def GetCoherentTransitionPotential(x, time, amplitude, switch, parameters):
  """Evaluates the potential that switches a coherent packet to rest.

  Args:
    x (numpy.ndarray|float): positions.
    time (float): time, not negative.
    amplitude (float): initial displacement a.
    switch (SwitchFunction): switch function.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    numpy.ndarray: controlling potential, m omega^2 x^2 / 2 at t = 0.

  Raises:
    DomainError: if the time is negative.
  """
  if time < 0.0:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  frequency = parameters.frequency
  mass = parameters.mass
  coefficients, rates = switch.GetCoefficients()
  tilts, weights = GetTransitionCoefficients(switch, frequency, time)

  linear_coefficient = float(numpy.sum(coefficients * (
      tilts * rates * numpy.exp(-rates * time) +
      (2.0 - weights) * frequency * math.exp(-frequency * time))))

  x = numpy.asarray(x, dtype=numpy.float64)
  return (0.5 * mass * frequency * frequency * x * x -
          mass * frequency * amplitude * linear_coefficient * x)


class GaussianEvolution(object):
  """Gaussian density N(mu(t), nu(t)) with its gauge theta(t).

  Missing time derivatives are approximated with central differences of
  step tau / 1000.

  Attributes:
    diffusion (float): diffusion coefficient D.
    has_mean (bool): True if the mean is not identically 0.
    mass (float): particle mass.
    sigma0 (float): length used to adimensionalize the density.
    time_scale (float): natural time scale tau.
  """

  def __init__(
      self, diffusion, mass, sigma0, variance, variance_derivatives=None,
      mean=None, mean_derivatives=None, gauge=None, gauge_derivative=None,
      time_scale=1.0):
    """Initializes a Gaussian evolution.

    Args:
      diffusion (float): diffusion coefficient D.
      mass (float): particle mass.
      sigma0 (float): length used to adimensionalize the density.
      variance (callable): variance nu(t).
      variance_derivatives (Optional[callable]): function returning the
          first and second time derivative of the variance.
      mean (Optional[callable]): mean mu(t), where None is mu = 0.
      mean_derivatives (Optional[callable]): function returning the first
          and second time derivative of the mean.
      gauge (Optional[callable]): gauge theta(t), where None selects
          (m D / 2) ln(2 pi nu / sigma0^2) + m D^2 t / nu.
      gauge_derivative (Optional[callable]): time derivative of the gauge.
      time_scale (Optional[float]): natural time scale tau.
    """
    super(GaussianEvolution, self).__init__()
    self._gauge = gauge
    self._gauge_derivative = gauge_derivative
    self._mean = mean
    self._mean_derivatives = mean_derivatives
    self._variance = variance
    self._variance_derivatives = variance_derivatives
    self.diffusion = diffusion
    self.has_mean = mean is not None
    self.mass = mass
    self.sigma0 = sigma0
    self.time_scale = time_scale

  def _GetDerivatives(self, function, derivatives, time):
    """Evaluates a function of time with its first two derivatives.

    Args:
      function (callable): function of time.
      derivatives (callable): function returning the first and second
          derivative or None.
      time (float): time.

    Returns:
      tuple[float, float, float]: value, first and second derivative.
    """
    value = function(time)
    if derivatives:
      first_derivative, second_derivative = derivatives(time)
    else:
      first_derivative, second_derivative = (
          fokker_planck.GetCentralDifferences(
              function, time, 1e-3 * self.time_scale))

    return value, first_derivative, second_derivative

  def GetGauge(self, time):
    """Evaluates the gauge theta(t).

    Args:
      time (float): time.

    Returns:
      float: gauge.
    """
    if self._gauge:
      return self._gauge(time)

    variance = self._variance(time)
    return self.mass * self.diffusion * (
        0.5 * math.log(2.0 * math.pi * variance / self.sigma0 ** 2) +
        self.diffusion * time / variance)

  def GetGaugeDerivative(self, time):
    """Evaluates the time derivative of the gauge.

    Args:
      time (float): time.

    Returns:
      float: gauge derivative.
    """
    if self._gauge_derivative:
      return self._gauge_derivative(time)

    if self._gauge:
      first_derivative, _ = fokker_planck.GetCentralDifferences(
          self._gauge, time, 1e-3 * self.time_scale)
      return first_derivative

    variance, variance_derivative, _ = self.GetVariance(time)
    return self.mass * self.diffusion * (
        0.5 * variance_derivative / variance + self.diffusion / variance -
        self.diffusion * time * variance_derivative / (variance * variance))

  def GetMean(self, time):
    """Evaluates the mean with its first two time derivatives.

    Args:
      time (float): time.

    Returns:
      tuple[float, float, float]: mean, first and second derivative.
    """
    if not self._mean:
      return 0.0, 0.0, 0.0

    return self._GetDerivatives(self._mean, self._mean_derivatives, time)

  def GetVariance(self, time):
    """Evaluates the variance with its first two time derivatives.

    Args:
      time (float): time.

    Returns:
      tuple[float, float, float]: variance, first and second derivative.

    Raises:
      DomainError: if the variance is not positive.
    """
    variance, first_derivative, second_derivative = self._GetDerivatives(
        self._variance, self._variance_derivatives, time)
    if not variance > 0.0:
      raise errors.DomainError(
          f'Unsupported variance: {variance!s} at time: {time:.12g}')

    return variance, first_derivative, second_derivative


def GetGaussianSchedule(evolution, times):
  """Determines the phase and potential coefficients of a Gaussian flow.

  Args:
    evolution (GaussianEvolution): Gaussian evolution.
    times (numpy.ndarray): times.

  Returns:
    ControlSchedule: control schedule.

  Raises:
    DomainError: if the variance is not positive at one of the times.
  """
  diffusion = evolution.diffusion
  mass = evolution.mass

  schedule = resources.ControlSchedule(times, mass)
  for index, time in enumerate(schedule.times):
    mean, mean_derivative, mean_second_derivative = evolution.GetMean(time)
    variance, variance_derivative, variance_second_derivative = (
        evolution.GetVariance(time))
    gauge = evolution.GetGauge(time)
    gauge_derivative = evolution.GetGaugeDerivative(time)

    slope = (variance_derivative - 2.0 * diffusion) / (2.0 * variance)
    intercept = mean_derivative - slope * mean
    frequency_squared = (
        4.0 * diffusion * diffusion -
        2.0 * variance * variance_second_derivative +
        variance_derivative * variance_derivative) / (
            4.0 * variance * variance)

    schedule.drift_intercept[index] = intercept
    schedule.drift_slope[index] = slope
    schedule.frequency_squared[index] = frequency_squared
    schedule.phase_curvature[index] = variance_derivative / (2.0 * variance)
    schedule.phase_offset[index] = (
        diffusion * mean * mean / variance +
        diffusion * math.log(
            2.0 * math.pi * variance / evolution.sigma0 ** 2) -
        2.0 * gauge / mass)

    offset = (2.0 * gauge_derivative / mass -
              diffusion * variance_derivative / variance -
              2.0 * diffusion * diffusion / variance)

    if evolution.has_mean:
      schedule.phase_tilt[index] = (
          mean * variance_derivative - 2.0 * variance * mean_derivative) / (
              2.0 * variance)
      schedule.linear_coefficient[index] = (
          mean_second_derivative + frequency_squared * mean)
      offset += (2.0 * diffusion * diffusion * mean * mean /
                 (variance * variance) - intercept * intercept)

    schedule.offset[index] = offset

  return schedule


def CreateCoherentEvolution(amplitude, parameters):
  """Creates the evolution of a coherent packet.

  Args:
    amplitude (float): initial displacement a.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    GaussianEvolution: evolution with mean a cos(omega t).
  """
  frequency = parameters.frequency
  mass = parameters.mass
  hbar = parameters.hbar

  def _GetMean(time):
    return amplitude * math.cos(frequency * time)

  def _GetMeanDerivatives(time):
    phase = frequency * time
    return (-amplitude * frequency * math.sin(phase),
            -amplitude * frequency * frequency * math.cos(phase))

  def _GetGauge(time):
    phase = frequency * time
    return (0.5 * mass * frequency * amplitude * amplitude *
            math.cos(phase) ** 2 -
            0.25 * mass * frequency * amplitude * amplitude *
            math.sin(2.0 * phase) +
            0.5 * hbar * phase + 0.25 * hbar * math.log(2.0 * math.pi))

  def _GetGaugeDerivative(time):
    phase = 2.0 * frequency * time
    return 0.5 * hbar * frequency - 0.5 * mass * (
        frequency * amplitude) ** 2 * (math.sin(phase) + math.cos(phase))

  return GaussianEvolution(
      parameters.diffusion, mass, parameters.sigma0,
      lambda time: parameters.sigma0_squared,
      variance_derivatives=lambda time: (0.0, 0.0), mean=_GetMean,
      mean_derivatives=_GetMeanDerivatives, gauge=_GetGauge,
      gauge_derivative=_GetGaugeDerivative, time_scale=1.0 / frequency)


def CreateCoherentTransitionEvolution(amplitude, switch, parameters):
  """Creates the evolution of a coherent packet switched off by F(t).

  Args:
    amplitude (float): initial displacement a.
    switch (SwitchFunction): switch function.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    GaussianEvolution: evolution for t >= 0.
  """
  frequency = parameters.frequency
  mass = parameters.mass
  hbar = parameters.hbar

  def _GetMean(time):
    mean, _, _ = GetCoherentTransitionMean(time, amplitude, switch, frequency)
    return mean

  def _GetMeanDerivatives(time):
    _, first_derivative, second_derivative = GetCoherentTransitionMean(
        time, amplitude, switch, frequency)
    return first_derivative, second_derivative

  def _GetGaugeDerivative(time):
    mean, mean_derivative, _ = GetCoherentTransitionMean(
        time, amplitude, switch, frequency)
    intercept = mean_derivative + frequency * mean
    return 0.5 * hbar * frequency + 0.5 * mass * (
        intercept * intercept - 2.0 * frequency * frequency * mean * mean)

  initial_gauge = (0.5 * mass * frequency * amplitude * amplitude +
                   0.25 * hbar * math.log(2.0 * math.pi))

  def _GetGauge(time):
    if time == 0.0:
      return initial_gauge

    integral, _ = integrate.quad(
        _GetGaugeDerivative, 0.0, time, epsabs=1e-12, epsrel=1e-12,
        limit=200)
    return initial_gauge + integral

  return GaussianEvolution(
      parameters.diffusion, mass, parameters.sigma0,
      lambda time: parameters.sigma0_squared,
      variance_derivatives=lambda time: (0.0, 0.0), mean=_GetMean,
      mean_derivatives=_GetMeanDerivatives, gauge=_GetGauge,
      gauge_derivative=_GetGaugeDerivative, time_scale=1.0 / frequency)


def _GetSqueezeProfile(specification, time):
  """Evaluates the width profile g(t) = (b + e) / (1 + e), e = e^{-t/tau}.

  Args:
    specification (SqueezeSpecification): squeezing specification.
    time (float): time.

  Returns:
    tuple[float, float, float, float]: e, g and the first and second time
        derivative of g.
  """
  ratio = specification.ratio
  time_scale = specification.time_scale

  decay = math.exp(-time / time_scale)
  profile = (ratio + decay) / (1.0 + decay)
  first_derivative = (ratio - 1.0) * decay / (
      time_scale * (1.0 + decay) ** 2)
  second_derivative = -(ratio - 1.0) * decay * (1.0 - decay) / (
      time_scale * time_scale * (1.0 + decay) ** 3)
  return decay, profile, first_derivative, second_derivative


def CreateSqueezeEvolution(specification):
  """Creates the centred Gaussian evolution from width sigma0 to sigma1.

  The variance is nu(t) = sigma0^2 g(t)^2 with the default gauge.

  Args:
    specification (SqueezeSpecification): squeezing specification.

  Returns:
    GaussianEvolution: evolution.
  """
  sigma0_squared = specification.sigma0 ** 2

  def _GetVariance(time):
    _, profile, _, _ = _GetSqueezeProfile(specification, time)
    return sigma0_squared * profile * profile

  def _GetVarianceDerivatives(time):
    _, profile, first_derivative, second_derivative = _GetSqueezeProfile(
        specification, time)
    return (2.0 * sigma0_squared * profile * first_derivative,
            2.0 * sigma0_squared * (
                first_derivative * first_derivative +
                profile * second_derivative))

  return GaussianEvolution(
      specification.diffusion, specification.mass, specification.sigma0,
      _GetVariance, variance_derivatives=_GetVarianceDerivatives,
      time_scale=specification.time_scale)


def GetSqueezeSchedule(specification, times):
  """Evaluates the closed-form squeezing schedule.

  Args:
    specification (SqueezeSpecification): squeezing specification.
    times (numpy.ndarray): times.

  Returns:
    ControlSchedule: control schedule with a = U = 0.
  """
  diffusion = specification.diffusion
  ratio = specification.ratio
  sigma0_squared = specification.sigma0 ** 2
  time_scale = specification.time_scale

  schedule = resources.ControlSchedule(times, specification.mass)
  for index, time in enumerate(schedule.times):
    decay, profile, first_derivative, _ = _GetSqueezeProfile(
        specification, time)
    inverse_profile = (1.0 + decay) / (ratio + decay)

    schedule.phase_curvature[index] = (ratio - 1.0) * decay / (
        time_scale * (1.0 + decay) * (ratio + decay))
    schedule.phase_offset[index] = -(
        2.0 * diffusion * diffusion * time / sigma0_squared) * (
            inverse_profile ** 2)
    schedule.frequency_squared[index] = (
        diffusion * diffusion / (sigma0_squared * sigma0_squared) *
        inverse_profile ** 4 + (ratio - 1.0) * decay * (1.0 - decay) / (
            time_scale * time_scale * (1.0 + decay) ** 2 * (ratio + decay)))
    schedule.offset[index] = -(
        4.0 * diffusion * diffusion * (ratio - 1.0) / sigma0_squared) * (
            time / time_scale) * decay * (1.0 + decay) / (ratio + decay) ** 3

    variance = sigma0_squared * profile * profile
    variance_derivative = 2.0 * sigma0_squared * profile * first_derivative
    schedule.drift_slope[index] = (
        variance_derivative - 2.0 * diffusion) / (2.0 * variance)

  return schedule


def GetDecayPotential(x, time, parameters):
  """Evaluates the potential of the decay of rho1 into rho0.

  V = m omega^2 x^2 / 2 - 2 hbar omega U(x / sigma0; b) with
  U(X; b) = (X^4 + b^2 X^2 - b^2) / (b^2 + X^2)^2 and b^2 = e^{2wt} - 1.

  Args:
    x (numpy.ndarray|float): positions.
    time (float): time since the start of the decay.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    numpy.ndarray: controlling potential.

  Raises:
    DomainError: if the time is negative.
    SingularityError: if evaluated at x = 0 at the start of the decay.
  """
  if time < 0.0:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  x = numpy.asarray(x, dtype=numpy.float64)
  b_squared = math.expm1(2.0 * parameters.frequency * time)
  if b_squared == 0.0 and numpy.any(x == 0.0):
    raise errors.SingularityError(
        'Decay potential is singular at x = 0 at the start of the decay.',
        node=0.0)

  scaled_squared = x * x / parameters.sigma0_squared
  shape = (scaled_squared * scaled_squared + b_squared * scaled_squared -
           b_squared) / (b_squared + scaled_squared) ** 2

  frequency = parameters.frequency
  return (0.5 * parameters.mass * frequency * frequency * x * x -
          2.0 * parameters.hbar * frequency * shape)


def GetOrnsteinUhlenbeckRelaxationPotential(
    x, time, initial_position, parameters, start_time=0.0):
  """Evaluates the potential of the ground state relaxation from x0.

  Args:
    x (numpy.ndarray|float): positions.
    time (float): time.
    initial_position (float): initial position x0.
    parameters (OscillatorParameters): oscillator parameters.
    start_time (Optional[float]): initial time t0.

  Returns:
    numpy.ndarray: controlling potential.

  Raises:
    DomainError: if the time does not follow the start time.
  """
  if not time > start_time:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  frequency = parameters.frequency
  sigma0_squared = parameters.sigma0_squared
  exponent = frequency * (time - start_time)
  mean = initial_position * math.exp(-exponent)
  variance = -sigma0_squared * math.expm1(-2.0 * exponent)

  x = numpy.asarray(x, dtype=numpy.float64)
  deviation = x - mean
  return (0.5 * parameters.hbar * frequency * deviation * deviation *
          sigma0_squared / (variance * variance) -
          0.5 * parameters.mass * frequency * frequency * x * x)


def GetExcitedRelaxationPotential(
    x, time, initial_position, parameters, start_time=0.0):
  """Evaluates the potential of the first excited state relaxation from x0.

  The potential is defined on the semiaxis of x0 and uses T(u) = u / tanh u
  with u = x alpha / sigma^2.

  Args:
    x (numpy.ndarray|float): positions on the semiaxis of x0.
    time (float): time.
    initial_position (float): initial position x0, not 0.
    parameters (OscillatorParameters): oscillator parameters.
    start_time (Optional[float]): initial time t0.

  Returns:
    numpy.ndarray: controlling potential.

  Raises:
    DomainError: if the initial position is the node or the time does not
        follow the start time.
    SingularityError: if a position is not on the semiaxis of x0.
  """
  if initial_position == 0.0:
    raise errors.DomainError('Unsupported initial position at the node: 0')

  if not time > start_time:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  x = numpy.asarray(x, dtype=numpy.float64)
  if numpy.any(x * initial_position <= 0.0):
    raise errors.SingularityError(
        'Position outside the semiaxis of the initial position.', node=0.0)

  frequency = parameters.frequency
  hbar = parameters.hbar
  mass = parameters.mass
  sigma0_squared = parameters.sigma0_squared

  exponent = frequency * (time - start_time)
  mean = initial_position * math.exp(-exponent)
  variance = -sigma0_squared * math.expm1(-2.0 * exponent)
  coth_product = GetCothProduct(x * mean / variance)

  return (0.5 * mass * frequency * frequency * x * x * (
      2.0 * sigma0_squared * sigma0_squared / (variance * variance) - 1.0) +
          hbar * frequency * (1.0 - sigma0_squared * coth_product / variance) -
          hbar * hbar * (1.0 - coth_product) ** 2 / (4.0 * mass * x * x))


def _CheckDensity(pair, x, time, exception_class):
  """Checks that the density of a flow is positive.

  Args:
    pair (FlowPair): flow.
    x (numpy.ndarray): positions.
    time (float): time.
    exception_class (type): exception to raise.

  Raises:
    DomainError: if the density is not positive.
  """
  density = pair.GetDensity(x, time)
  if numpy.any(~(density > 0.0)):
    raise exception_class(
        f'Density not positive at time: {time:.12g}')


def SynthesizePhase(pair, x, time):
  """Determines the phase S = m W - (hbar / 2) ln rho~ - theta.

  Args:
    pair (FlowPair): flow.
    x (numpy.ndarray|float): positions.
    time (float): time.

  Returns:
    numpy.ndarray: phase.

  Raises:
    DomainError: if the density is not positive.
  """
  x = numpy.asarray(x, dtype=numpy.float64)
  _CheckDensity(pair, x, time, errors.DomainError)

  parameters = pair.parameters
  return (parameters.mass * pair.GetDriftPotential(x, time) -
          0.5 * parameters.hbar * pair.GetLogDensity(x, time) -
          pair.GetGauge(time))


def SynthesizePotential(pair, x, time):
  """Determines the controlling potential of a flow.

  Args:
    pair (FlowPair): flow.
    x (numpy.ndarray|float): positions.
    time (float): time.

  Returns:
    numpy.ndarray: controlling potential.

  Raises:
    SingularityError: if the density vanishes.
  """
  x = numpy.asarray(x, dtype=numpy.float64)
  _CheckDensity(pair, x, time, errors.SingularityError)

  parameters = pair.parameters
  diffusion = parameters.diffusion
  mass = parameters.mass

  first_derivative, second_derivative, time_derivative = (
      pair.GetLogDensityDerivatives(x, time))
  drift = pair.GetDrift(x, time)

  return (mass * diffusion * diffusion * second_derivative +
          mass * diffusion * (time_derivative + drift * first_derivative) -
          0.5 * mass * drift * drift -
          mass * pair.GetDriftPotentialTimeDerivative(x, time) +
          pair.GetGaugeDerivative(time))


def GetMadelungResidual(
    amplitude_function, phase_function, potential_function, parameters,
    positions, times, length_step=None, time_step=None):
  """Determines the residual of the Hamilton-Jacobi-Madelung equation.

  The residual dS/dt + (dS/dx)^2 / 2m + V - (hbar^2 / 2m) R'' / R is
  approximated with 4th-order central differences.

  Args:
    amplitude_function (callable): amplitude R(x, t) = sqrt(rho).
    phase_function (callable): phase S(x, t).
    potential_function (callable): potential V(x, t).
    parameters (OscillatorParameters): oscillator parameters.
    positions (numpy.ndarray): positions.
    times (list[float]): times.
    length_step (Optional[float]): position step, where None is
        1e-4 sigma0.
    time_step (Optional[float]): time step, where None is 1e-4 / omega.

  Returns:
    float: largest absolute residual.

  Raises:
    DomainError: if the amplitude is not positive.
  """
  if length_step is None:
    length_step = 1e-4 * parameters.sigma0
  if time_step is None:
    time_step = 1e-4 / parameters.frequency

  positions = numpy.asarray(positions, dtype=numpy.float64)
  mass = parameters.mass

  maximum_residual = 0.0
  for time in times:
    amplitude = amplitude_function(positions, time)
    if numpy.any(~(amplitude > 0.0)):
      raise errors.DomainError(
          f'Amplitude not positive at time: {time:.12g}')

    phase_time_derivative, _ = fokker_planck.GetCentralDifferences(
        lambda t: phase_function(positions, t), time, time_step)
    phase_derivative, _ = fokker_planck.GetCentralDifferences(
        lambda x: phase_function(x, time), positions, length_step)
    _, amplitude_second_derivative = fokker_planck.GetCentralDifferences(
        lambda x: amplitude_function(x, time), positions, length_step)

    residual = (
        phase_time_derivative + phase_derivative * phase_derivative /
        (2.0 * mass) + potential_function(positions, time) -
        parameters.hbar ** 2 * amplitude_second_derivative /
        (2.0 * mass * amplitude))
    maximum_residual = max(
        maximum_residual, float(numpy.max(numpy.abs(residual))))

  return maximum_residual


def GetFlowMadelungResidual(pair, positions, times):
  """Determines the Madelung residual of the synthesized phase and potential.

  Args:
    pair (FlowPair): flow.
    positions (numpy.ndarray): positions where the density is positive.
    times (list[float]): times.

  Returns:
    float: largest absolute residual.

  Raises:
    DomainError: if the density is not positive.
  """
  return GetMadelungResidual(
      lambda x, t: numpy.sqrt(pair.GetDensity(x, t)),
      lambda x, t: SynthesizePhase(pair, x, t),
      lambda x, t: SynthesizePotential(pair, x, t),
      pair.parameters, positions, times,
      length_step=1e-4 * pair.length_scale, time_step=1e-4 * pair.time_scale)
