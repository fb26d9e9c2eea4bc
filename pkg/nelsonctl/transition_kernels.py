# -*- coding: utf-8 -*-
"""Closed-form transition densities of oscillator Nelson diffusions."""

import math

import numpy

from nelsonctl import errors
from nelsonctl import resources
from nelsonctl import states


def GetHeaviside(x):
  """Evaluates the Heaviside function with Theta(0) = 1/2.

  Args:
    x (numpy.ndarray|float): arguments.

  Returns:
    numpy.ndarray: Theta(x).
  """
  return numpy.heaviside(x, 0.5)


def GetMixtureWeights(time, frequency):
  """Determines the weights of the ground and first excited state mixture.

  Args:
    time (numpy.ndarray|float): time since the start of the decay.
    frequency (float): oscillator frequency omega.

  Returns:
    MixtureWeights: weights beta^2 = 1 - e^{-2wt}, gamma^2 = e^{-2wt} and
        b^2 = e^{2wt} - 1.

  Raises:
    DomainError: if the time is negative.
  """
  if numpy.any(numpy.asarray(time) < 0.0):
    raise errors.DomainError(f'Unsupported time: {time!s}')

  exponent = 2.0 * frequency * numpy.asarray(time, dtype=numpy.float64)
  return resources.MixtureWeights(
      -numpy.expm1(-exponent), numpy.exp(-exponent), numpy.expm1(exponent))


class OrnsteinUhlenbeckKernel(object):
  """Transition density of the oscillator ground state diffusion.

  Attributes:
    parameters (OscillatorParameters): oscillator parameters.
  """

  def __init__(self, parameters):
    """Initializes an Ornstein-Uhlenbeck kernel.

    Args:
      parameters (OscillatorParameters): oscillator parameters.
    """
    super(OrnsteinUhlenbeckKernel, self).__init__()
    self.parameters = parameters

  def GetMeanAndVariance(self, time, initial_position, start_time=0.0):
    """Determines the mean alpha(t) and variance sigma^2(t).

    Args:
      time (float): time.
      initial_position (numpy.ndarray|float): initial position x0.
      start_time (Optional[float]): initial time t0.

    Returns:
      tuple[numpy.ndarray, float]: mean x0 e^{-w(t-t0)} and variance
          sigma0^2 (1 - e^{-2w(t-t0)}).

    Raises:
      DomainError: if the time does not follow the start time.
    """
    if not time > start_time:
      raise errors.DomainError((
          f'Unsupported time: {time!s} not after start time: '
          f'{start_time!s}'))

    exponent = self.parameters.frequency * (time - start_time)
    mean = numpy.asarray(initial_position, dtype=numpy.float64) * math.exp(
        -exponent)
    variance = -self.parameters.sigma0_squared * math.expm1(-2.0 * exponent)
    return mean, variance

  def GetDensity(self, x, time, initial_position, start_time=0.0):
    """Evaluates the transition density p0(x, t | x0, t0).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.
      initial_position (numpy.ndarray|float): initial position x0.
      start_time (Optional[float]): initial time t0.

    Returns:
      numpy.ndarray: transition density.

    Raises:
      DomainError: if the time does not follow the start time.
    """
    mean, variance = self.GetMeanAndVariance(
        time, initial_position, start_time=start_time)
    deviation = numpy.asarray(x, dtype=numpy.float64) - mean
    return numpy.exp(
        -0.5 * deviation * deviation / variance -
        0.5 * math.log(2.0 * math.pi * variance))


class ExcitedStateKernel(OrnsteinUhlenbeckKernel):
  """Transition density of the oscillator first excited state diffusion.

  The density is confined to the semiaxis of the initial position.
  """

  def GetDensity(self, x, time, initial_position, start_time=0.0):
    """Evaluates the transition density p1(x, t | x0, t0).

    Args:
      x (numpy.ndarray|float): positions.
      time (float): time.
      initial_position (numpy.ndarray|float): initial position x0.
      start_time (Optional[float]): initial time t0.

    Returns:
      numpy.ndarray: transition density, 0 on the opposite semiaxis.

    Raises:
      DomainError: if the initial position is the node or the time does not
          follow the start time.
    """
    initial_position = numpy.asarray(initial_position, dtype=numpy.float64)
    if numpy.any(initial_position == 0.0):
      raise errors.DomainError('Unsupported initial position at the node: 0')

    mean, variance = self.GetMeanAndVariance(
        time, initial_position, start_time=start_time)

    x = numpy.asarray(x, dtype=numpy.float64)
    x, mean = numpy.broadcast_arrays(x, mean)
    values = numpy.zeros(x.shape)

    same_semiaxis = x * mean > 0.0
    x = x[same_semiaxis]
    mean = mean[same_semiaxis]

    # x/alpha [e^{-(x-a)^2/2s} - e^{-(x+a)^2/2s}] written with sinh(u)/u.
    u = x * mean / variance
    log_sinhc = numpy.empty(u.shape)
    is_small = u < 1e-4
    log_sinhc[is_small] = u[is_small] * u[is_small] / 6.0
    large_u = u[~is_small]
    log_sinhc[~is_small] = (
        large_u + numpy.log1p(-numpy.exp(-2.0 * large_u)) -
        numpy.log(2.0 * large_u))

    values[same_semiaxis] = numpy.exp(
        numpy.log(2.0 * x * x / variance) + log_sinhc -
        0.5 * (x * x + mean * mean) / variance -
        0.5 * math.log(2.0 * math.pi * variance))
    return values


def GetExcitedAsymptote(epsilon, x, parameters):
  """Evaluates the asymptotic first excited state law Gamma(eps; x) rho1(x).

  Args:
    epsilon (float): twice the mass on the positive semiaxis, in [0, 2].
    x (numpy.ndarray|float): positions.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    numpy.ndarray: density.

  Raises:
    DomainError: if epsilon is outside [0, 2].
  """
  if not 0.0 <= epsilon <= 2.0:
    raise errors.DomainError(f'Unsupported mass fraction: {epsilon!s}')

  x = numpy.asarray(x, dtype=numpy.float64)
  state = states.CreateOscillatorEigenstate(1, parameters)
  factor = epsilon * GetHeaviside(x) + (2.0 - epsilon) * GetHeaviside(-x)
  return factor * state.GetDensity(x)


def GetDecayMixture(x, time, parameters):
  """Evaluates the decay of rho1 into rho0 under the ground state drift.

  Args:
    x (numpy.ndarray|float): positions.
    time (float): time since the start of the decay.
    parameters (OscillatorParameters): oscillator parameters.

  Returns:
    numpy.ndarray: density beta^2(t) rho0(x) + gamma^2(t) rho1(x).

  Raises:
    DomainError: if the time is negative.
  """
  weights = GetMixtureWeights(time, parameters.frequency)
  ground_state = states.CreateOscillatorEigenstate(0, parameters)
  excited_state = states.CreateOscillatorEigenstate(1, parameters)
  return (weights.beta_squared * ground_state.GetDensity(x) +
          weights.gamma_squared * excited_state.GetDensity(x))
