# -*- coding: utf-8 -*-
"""Harmonic oscillator stationary states and coherent packets."""

import math

import numpy

from scipy import optimize
from scipy import special

from nelsonctl import errors
from nelsonctl import special_functions


MAXIMUM_LEVEL = 20

# Distance to a node, in units of sigma0, below which the drift is singular.
NODE_GUARD = 1e-13


class StationaryState(object):
  """Harmonic oscillator eigenstate.

  Attributes:
    energy (float): energy eigenvalue hbar omega (n + 1/2).
    level (int): level n.
    nodes (list[float]): sorted zeros of the amplitude.
    parameters (OscillatorParameters): oscillator parameters.
  """

  def __init__(self, level, parameters):
    """Initializes a stationary state.

    Args:
      level (int): level n.
      parameters (OscillatorParameters): oscillator parameters.

    Raises:
      DomainError: if the level is not supported.
    """
    if level < 0 or level > MAXIMUM_LEVEL:
      raise errors.DomainError(f'Unsupported level: {level:d}')

    super(StationaryState, self).__init__()
    self._log_normalization = -0.5 * (
        level * math.log(2.0) + special.gammaln(level + 1) +
        0.5 * math.log(math.pi) + math.log(parameters.sigma0) +
        0.5 * math.log(2.0))
    self._scale = parameters.sigma0 * math.sqrt(2.0)
    self.energy = parameters.hbar * parameters.frequency * (level + 0.5)
    self.level = level
    self.parameters = parameters
    self.nodes = self._GetNodes()

  def _GetNodes(self):
    """Determines the zeros of H_n(x / (sigma0 sqrt 2)) by bisection.

    Returns:
      list[float]: sorted nodes.
    """
    if self.level == 0:
      return []

    def _Hermite(y):
      return special_functions.Hermite(self.level, y)

    step = 0.01
    maximum = math.sqrt(2.0 * self.level + 1.0) + 1.0
    number_of_steps = int(math.ceil(maximum / step))
    scan_points = step * numpy.arange(-number_of_steps, number_of_steps + 1)
    scan_values = special_functions.Hermite(self.level, scan_points)

    tolerance = 1e-12 / self._scale
    nodes = []
    for index, value in enumerate(scan_values[:-1]):
      if value == 0.0:
        nodes.append(float(scan_points[index]) * self._scale)
      elif value * scan_values[index + 1] < 0.0:
        root = optimize.bisect(
            _Hermite, scan_points[index], scan_points[index + 1],
            xtol=tolerance)
        nodes.append(root * self._scale)

    return sorted(nodes)

  def _CheckNodes(self, x):
    """Checks that positions are not at a node.

    Args:
      x (numpy.ndarray): positions.

    Raises:
      SingularityError: if a position lies at a node.
    """
    guard = NODE_GUARD * self.parameters.sigma0
    for node in self.nodes:
      if numpy.any(numpy.abs(x - node) < guard):
        raise errors.SingularityError(
            f'Drift of level {self.level:d} is singular at node: {node:.12g}',
            node=node)

  def GetAmplitude(self, x):
    """Evaluates the amplitude phi_n.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: amplitude.
    """
    y = numpy.asarray(x, dtype=numpy.float64) / self._scale
    hermite = special_functions.Hermite(self.level, y)
    return numpy.exp(self._log_normalization - 0.5 * y * y) * hermite

  def GetAmplitudeDerivatives(self, x):
    """Evaluates the first and second derivatives of the amplitude.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray]: phi_n' and phi_n''.
    """
    y = numpy.asarray(x, dtype=numpy.float64) / self._scale
    previous, hermite = special_functions.GetHermitePair(self.level, y)
    envelope = numpy.exp(self._log_normalization - 0.5 * y * y)

    first_derivative = envelope * (
        2.0 * self.level * previous - y * hermite) / self._scale
    second_derivative = envelope * hermite * (
        y * y - 2.0 * self.level - 1.0) / (2.0 * self.parameters.sigma0_squared)
    return first_derivative, second_derivative

  def GetDensity(self, x):
    """Evaluates the density rho_n = phi_n^2.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: density.
    """
    return self.GetAmplitude(x) ** 2

  def GetLogDensity(self, x):
    """Evaluates the logarithm of the density.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: logarithm of the density, -inf at the nodes.
    """
    y = numpy.asarray(x, dtype=numpy.float64) / self._scale
    hermite = special_functions.Hermite(self.level, y)
    with numpy.errstate(divide='ignore'):
      return 2.0 * (
          self._log_normalization + numpy.log(numpy.abs(hermite))) - y * y

  def GetDrift(self, x):
    """Evaluates the forward drift 2D phi_n' / phi_n.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: drift.

    Raises:
      SingularityError: if a position lies at a node.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    self._CheckNodes(x)

    y = x / self._scale
    previous, hermite = special_functions.GetHermitePair(self.level, y)
    logarithmic_derivative = 2.0 * self.level * previous / hermite - y
    return (math.sqrt(2.0) * self.parameters.diffusion *
            logarithmic_derivative / self.parameters.sigma0)

  def GetDriftDerivative(self, x):
    """Evaluates the derivative of the forward drift.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: drift derivative.

    Raises:
      SingularityError: if a position lies at a node.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    drift = self.GetDrift(x)
    y = x / self._scale
    return (self.parameters.frequency * (y * y - 2.0 * self.level - 1.0) -
            drift * drift / (2.0 * self.parameters.diffusion))

  def GetDriftPotential(self, x):
    """Evaluates the drift potential W = D ln(sigma0 rho_n).

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: drift potential, -inf at the nodes.
    """
    return self.parameters.diffusion * (
        math.log(self.parameters.sigma0) + self.GetLogDensity(x))


class GaussianPacket(object):
  """Gaussian wave packet at a given time.

  Attributes:
    drift_intercept (float): intercept A of the linear drift.
    drift_slope (float): slope B of the linear drift.
    mean (float): mean mu.
    parameters (OscillatorParameters): oscillator parameters.
    phase_curvature (float): phase curvature Omega.
    phase_offset (float): phase offset Delta.
    phase_tilt (float): phase tilt U.
    variance (float): variance nu.
  """

  def __init__(self, mean, variance, parameters):
    """Initializes a Gaussian wave packet.

    Args:
      mean (float): mean mu.
      variance (float): variance nu.
      parameters (OscillatorParameters): oscillator parameters.

    Raises:
      DomainError: if the variance is not positive.
    """
    if not variance > 0.0:
      raise errors.DomainError(f'Unsupported variance: {variance!s}')

    super(GaussianPacket, self).__init__()
    self.drift_intercept = 0.0
    self.drift_slope = 0.0
    self.mean = mean
    self.parameters = parameters
    self.phase_curvature = 0.0
    self.phase_offset = 0.0
    self.phase_tilt = 0.0
    self.variance = variance

  def GetDensity(self, x):
    """Evaluates the normal density N(mu, nu).

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: density.
    """
    deviation = numpy.asarray(x, dtype=numpy.float64) - self.mean
    return numpy.exp(-0.5 * deviation * deviation / self.variance) / math.sqrt(
        2.0 * math.pi * self.variance)

  def GetDrift(self, x):
    """Evaluates the linear drift A + B x.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray: drift.
    """
    return self.drift_intercept + self.drift_slope * numpy.asarray(
        x, dtype=numpy.float64)


def CreateOscillatorEigenstate(level, parameters):
  """Creates a harmonic oscillator eigenstate.

  Args:
    level (int): level n.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    StationaryState: eigenstate.

  Raises:
    DomainError: if the level is not supported.
  """
  return StationaryState(level, parameters)


def CreateCoherentState(amplitude, time, parameters):
  """Creates the coherent packet with initial displacement a at a time.

  Args:
    amplitude (float): initial displacement a.
    time (float): time.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    GaussianPacket: packet with mean a cos(omega t) and variance sigma0^2.
  """
  frequency = parameters.frequency
  phase = frequency * time

  packet = GaussianPacket(
      amplitude * math.cos(phase), parameters.sigma0_squared, parameters)
  packet.drift_intercept = amplitude * frequency * (
      math.cos(phase) - math.sin(phase))
  packet.drift_slope = -frequency
  packet.phase_tilt = amplitude * frequency * math.sin(phase)
  packet.phase_offset = (
      0.5 * frequency * amplitude * amplitude * math.sin(2.0 * phase) -
      parameters.hbar * phase / parameters.mass)
  return packet
